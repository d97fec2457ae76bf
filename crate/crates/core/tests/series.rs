mod common;

use cfrac::coeffs::{Coeff, Domain, Rational};
use cfrac::{Error, TruncatedSeries};
use common::*;
use proptest::prelude::*;

fn rats(v: &[(i64, i64)]) -> TruncatedSeries {
    TruncatedSeries::from_rationals(v.iter().map(|&p| Rational::from(p))).unwrap()
}

#[test]
fn add_sub_examples() {
    let a = series(&[1, 1, 0]);
    let b = series(&[1, 0, 0]);
    assert_eq!(a.sub(&b).unwrap(), series(&[0, 1, 0]));
    assert_eq!(series(&[1, 2, 3, 4, 5, 6]).add(&series(&[1, 1, 1, 1])).unwrap().order(), 3);
    let z = a.sub(&a).unwrap();
    assert!(z.is_zero());
    assert_eq!(z.order(), 2);
}

#[test]
fn product_examples() {
    assert_eq!(series(&[1, 1, 0, 0]).mul(&series(&[1, -1, 0, 0])).unwrap(), series(&[1, 0, -1, 0]));
    let f = series(&[1, 1, 2, 6]);
    assert_eq!(f.mul(&TruncatedSeries::one(&Domain::Rational, 3)).unwrap(), f);
    // direct convolution of 1, 1, 2, 6 with itself
    let mut sq = vec![0i64; 4];
    for i in 0..4 {
        for j in 0..4 - i {
            sq[i + j] += [1, 1, 2, 6][i] * [1, 1, 2, 6][j];
        }
    }
    assert_eq!(sq, [1, 2, 5, 16]);
    assert_eq!(f.mul(&f).unwrap(), series(&sq));
}

#[test]
fn reciprocal_examples() {
    assert_eq!(series(&[1, -1, 0, 0, 0]).reciprocal().unwrap(), series(&[1, 1, 1, 1, 1]));
    // solve (1 + t + 2t^2 + 6t^3) g = 1 one coefficient at a time
    let f = [1i64, 1, 2, 6];
    let mut g = vec![1i64];
    for n in 1..4 {
        g.push(-(1..=n).map(|i| f[i] * g[n - i]).sum::<i64>());
    }
    assert_eq!(g, [1, -1, -1, -3]);
    assert_eq!(series(&f).reciprocal().unwrap(), series(&g));
    let d = Domain::polynomial(&["x", "y"]).unwrap();
    let x = Coeff::variable(&d, "x").unwrap();
    let f = TruncatedSeries::new(d.clone(), vec![Coeff::one(&d), x.clone(), Coeff::zero(&d)]).unwrap();
    let want = TruncatedSeries::new(d.clone(), vec![Coeff::one(&d), x.neg(), x.pow(2)]).unwrap();
    assert_eq!(f.reciprocal().unwrap(), want);
    assert!(matches!(series(&[0, 1]).reciprocal(), Err(Error::NonUnitConstantTerm(_))));
    let two = TruncatedSeries::new(d.clone(), vec![Coeff::from_int(&d, 2), x]).unwrap();
    assert!(matches!(two.reciprocal(), Err(Error::NonUnitConstantTerm(_))));
}

#[test]
fn shift_examples() {
    let s = series(&[0, 1, 1]).shift_down(1).unwrap();
    assert_eq!(s, series(&[1, 1]));
    assert_eq!(series(&[0, 0, 1]).shift_down(2).unwrap(), series(&[1]));
    assert!(matches!(series(&[1, 1]).shift_down(1), Err(Error::NonzeroLowCoefficients { index: 0 })));
    assert!(matches!(series(&[0, 0]).shift_down(2), Err(Error::OrderUnderflow { .. })));
}

#[test]
fn log_exp_examples() {
    let f = series(&[1, 1, 0, 0, 0, 0]);
    assert_eq!(f.log1().unwrap().exp0().unwrap(), f);
    let e = series(&[0, 1, 0, 0]).exp0().unwrap();
    assert_eq!(e, rats(&[(1, 1), (1, 1), (1, 2), (1, 6)]));
    // sec t as the reciprocal of cos t, then log, checked against the series of log cos by hand:
    // log sec t = t^2/2 + t^4/12 + t^6/45
    let cos = TruncatedSeries::from_rationals((0..=6).map(|n| {
        if n % 2 == 1 {
            Rational::new()
        } else {
            let sign = if n % 4 == 0 { 1 } else { -1 };
            Rational::from((sign, cfrac::catalog::factorial(n)))
        }
    }))
    .unwrap();
    let got = cos.reciprocal().unwrap().log1().unwrap();
    assert_eq!(got, rats(&[(0, 1), (0, 1), (1, 2), (0, 1), (1, 12), (0, 1), (1, 45)]));
    assert!(matches!(series(&[2, 1]).log1(), Err(Error::ConstantTermViolation(_))));
    assert!(matches!(series(&[1, 1]).exp0(), Err(Error::ConstantTermViolation(_))));
}

#[test]
fn order_zero_is_legal() {
    let f = series(&[3]);
    assert_eq!(f.order(), 0);
    assert_eq!(f.reciprocal().unwrap(), rats(&[(1, 3)]));
    assert_eq!(f.mul(&f).unwrap(), series(&[9]));
}

proptest! {
    #[test]
    fn products_commute_and_associate(a in rational_series(8), b in rational_series(8), c in rational_series(8)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let n = a.order().min(b.order()).min(c.order());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap().order(), n);
        prop_assert_eq!(a.add(&b).unwrap().order(), a.order().min(b.order()));
        prop_assert_eq!(a.sub(&c).unwrap().order(), a.order().min(c.order()));
    }

    #[test]
    fn reciprocal_is_an_involution(a in rational_series(10)) {
        let r = a.reciprocal().unwrap();
        prop_assert_eq!(r.order(), a.order());
        prop_assert_eq!(a.mul(&r).unwrap(), TruncatedSeries::one(&Domain::Rational, a.order()));
        prop_assert_eq!(r.reciprocal().unwrap(), a);
    }

    #[test]
    fn log_and_exp_are_inverse(a in rational_series(8)) {
        let mut c = a.coeffs().to_vec();
        c[0] = Coeff::one(&Domain::Rational);
        let one_plus = TruncatedSeries::new(Domain::Rational, c.clone()).unwrap();
        prop_assert_eq!(one_plus.log1().unwrap().exp0().unwrap(), one_plus);
        c[0] = Coeff::zero(&Domain::Rational);
        let zero_head = TruncatedSeries::new(Domain::Rational, c).unwrap();
        prop_assert_eq!(zero_head.exp0().unwrap().log1().unwrap(), zero_head);
    }

    #[test]
    fn shifts_reduce_the_order(a in rational_series(10), p in 1usize..4) {
        prop_assume!(p <= a.order());
        let mut c = a.coeffs().to_vec();
        for x in c.iter_mut().take(p) {
            *x = Coeff::zero(&Domain::Rational);
        }
        let s = TruncatedSeries::new(Domain::Rational, c.clone()).unwrap().shift_down(p).unwrap();
        prop_assert_eq!(s.order(), a.order() - p);
        prop_assert_eq!(s.coeffs(), &c[p..]);
    }
}
