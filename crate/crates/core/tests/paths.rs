mod common;

use cfrac::catalog::{binomial, factorial, generate, rising, SeriesSpec};
use cfrac::coeffs::{Coeff, Domain, Rational};
use cfrac::expand::contract_s_to_j;
use cfrac::paths::{
    enumerate_weighted_paths, flajolet_check, g_table_correspondence_check, hankel_factorization_check,
    jacobi_rogers_table, path_weight, stieltjes_tables, FlajoletLegs, HankelForm, Leg, PathMode, PathWeights, Step,
    TriangularTable,
};
use cfrac::Error;
use common::*;
use proptest::prelude::*;

/// alpha = 1, 1, 2, 2, 3, 3, …
fn factorial_weights(n: usize) -> PathWeights {
    PathWeights::stieltjes_from_fn(&Domain::Rational, n, |i| int(i.div_ceil(2) as i64)).unwrap()
}

fn rows(t: &TriangularTable) -> Vec<Vec<Coeff>> {
    t.rows.clone()
}

fn printed(rows: &[&[i64]]) -> Vec<Vec<Coeff>> {
    rows.iter().map(|r| ints(r)).collect()
}

#[test]
fn factorial_stieltjes_tables() {
    let (s, sp) = stieltjes_tables(&factorial_weights(12), 6).unwrap();
    assert_eq!(
        rows(&s),
        printed(&[
            &[1],
            &[1, 1],
            &[2, 4, 1],
            &[6, 18, 9, 1],
            &[24, 96, 72, 16, 1],
            &[120, 600, 600, 200, 25, 1],
            &[720, 4320, 5400, 2400, 450, 36, 1],
        ])
    );
    assert_eq!(
        rows(&sp),
        printed(&[
            &[1],
            &[2, 1],
            &[6, 6, 1],
            &[24, 36, 12, 1],
            &[120, 240, 120, 20, 1],
            &[720, 1800, 1200, 300, 30, 1],
            &[5040, 15120, 12600, 4200, 630, 42, 1],
        ])
    );
    for n in 0..=6usize {
        for k in 0..=n {
            let c = binomial(n as i64, k);
            let want = Rational::from(c.clone() * c * factorial(n - k));
            assert_eq!(s.get(n, k).unwrap().as_rational().unwrap(), want);
        }
    }
}

#[test]
fn path_counts_with_unit_weights() {
    let ones = |n| vec![int(1); n];
    let mot = PathWeights::jacobi(&Domain::Rational, ones(8), ones(8)).unwrap();
    assert_eq!(jacobi_rogers_table(&mot, 6).unwrap().column(0), ints(&[1, 1, 2, 4, 9, 21, 51]));
    let cat = PathWeights::stieltjes(&Domain::Rational, ones(12)).unwrap();
    assert_eq!(stieltjes_tables(&cat, 5).unwrap().0.column(0), ints(&[1, 1, 2, 5, 14, 42]));
    assert_eq!(enumerate_weighted_paths(&mot, 3, 0, 0, PathMode::Motzkin).unwrap(), int(4));
    for (n, c) in [1, 1, 2, 4, 9, 21, 51].iter().enumerate() {
        assert_eq!(enumerate_weighted_paths(&mot, n, 0, 0, PathMode::Motzkin).unwrap(), int(*c));
    }
    for (n, c) in [1, 1, 2, 5, 14, 42].iter().enumerate() {
        assert_eq!(enumerate_weighted_paths(&cat, 2 * n, 0, 0, PathMode::Dyck).unwrap(), int(*c));
    }
}

#[test]
fn symbolic_dyck_paths_of_length_four() {
    let w = PathWeights::symbolic_stieltjes(4);
    let d = w.domain().clone();
    let got = enumerate_weighted_paths(&w, 4, 0, 0, PathMode::Dyck).unwrap();
    assert_eq!(got, Coeff::parse(&d, "alpha1^2 + alpha1*alpha2").unwrap());
}

#[test]
fn figure_path_weight() {
    use Step::*;
    let w = PathWeights::symbolic_general(3);
    let d = w.domain().clone();
    let steps = [Rise, Fall, Level, Rise, Rise, Level, Fall, Level, Fall];
    let got = path_weight(&w, 0, &steps).unwrap();
    assert_eq!(got, Coeff::parse(&d, "a0^2*a1*b1^2*b2*c0*c1*c2").unwrap());
    assert!(path_weight(&w, 0, &[Fall]).is_err());
}

#[test]
fn enumeration_size_limit() {
    let w = PathWeights::symbolic_jacobi(8);
    assert!(matches!(
        enumerate_weighted_paths(&w, 15, 0, 0, PathMode::Motzkin),
        Err(Error::SizeLimit { size: 15, limit: 14 })
    ));
    let d = PathWeights::symbolic_stieltjes(12);
    assert!(matches!(
        enumerate_weighted_paths(&d, 23, 0, 1, PathMode::Dyck),
        Err(Error::SizeLimit { size: 23, limit: 22 })
    ));
}

#[test]
fn rising_power_j_table() {
    let d = Domain::polynomial(&["a"]).unwrap();
    let a = Coeff::variable(&d, "a").unwrap();
    let c = |n: usize| Coeff::from_int(&d, n as i64);
    let w = PathWeights::jacobi_from_fn(&d, 12, |k| &c(k) * &(&a + &c(k - 1)), |k| &c(2 * k) + &a).unwrap();
    let j = jacobi_rogers_table(&w, 10).unwrap();
    for n in 0..=10usize {
        for k in 0..=n {
            let want = &Coeff::from_rational(&d, Rational::from(binomial(n as i64, k))) * &rising(&(&a + &c(k)), n - k);
            assert_eq!(j.get(n, k).unwrap(), want, "J_{n},{k}");
        }
    }
}

fn symbolic_enumeration_matches_tables(n_max: usize) {
    let jw = PathWeights::symbolic_jacobi(n_max + 1);
    let j = jacobi_rogers_table(&jw, n_max).unwrap();
    for n in 0..=n_max {
        for k in 0..=n {
            let e = enumerate_weighted_paths(&jw, n, 0, k, PathMode::Motzkin).unwrap();
            assert_eq!(e, j.get(n, k).unwrap(), "J_{n},{k}");
        }
    }
    let sw = PathWeights::symbolic_stieltjes(2 * n_max + 2);
    let (s, sp) = stieltjes_tables(&sw, n_max).unwrap();
    for n in 0..=n_max {
        for k in 0..=n {
            let e = enumerate_weighted_paths(&sw, 2 * n, 0, 2 * k, PathMode::Dyck).unwrap();
            assert_eq!(e, s.get(n, k).unwrap(), "S_{n},{k}");
            let e = enumerate_weighted_paths(&sw, 2 * n + 1, 0, 2 * k + 1, PathMode::Dyck).unwrap();
            assert_eq!(e, sp.get(n, k).unwrap(), "S'_{n},{k}");
        }
    }
}

#[test]
fn symbolic_tables_match_enumeration() {
    symbolic_enumeration_matches_tables(8);
}

#[test]
fn subdiagonal_closed_forms() {
    let jw = PathWeights::symbolic_jacobi(9);
    let j = jacobi_rogers_table(&jw, 8).unwrap();
    let sw = PathWeights::symbolic_stieltjes(18);
    let (s, sp) = stieltjes_tables(&sw, 8).unwrap();
    let d = sw.domain().clone();
    for n in 1..=8usize {
        assert!(j.get(n, n).unwrap().is_one());
        assert!(s.get(n, n).unwrap().is_one());
        assert!(sp.get(n, n).unwrap().is_one());
        let g = (0..n).fold(Coeff::zero(jw.domain()), |acc, i| &acc + &jw.gamma(i).unwrap());
        assert_eq!(j.get(n, n - 1).unwrap(), g);
        let sum = |m: usize| (1..=m).fold(Coeff::zero(&d), |acc, i| &acc + &sw.alpha(i).unwrap());
        assert_eq!(s.get(n, n - 1).unwrap(), sum(2 * n - 1));
        assert_eq!(sp.get(n, n - 1).unwrap(), sum(2 * n));
    }
}

#[test]
fn contraction_consistency() {
    let sw = PathWeights::symbolic_stieltjes(16);
    let alphas: Vec<Coeff> = (1..=16).map(|i| sw.alpha(i).unwrap()).collect();
    let (g, b) = contract_s_to_j(&alphas);
    let jw = PathWeights::jacobi(sw.domain(), b, g).unwrap();
    let j = jacobi_rogers_table(&jw, 7).unwrap();
    let (s, _) = stieltjes_tables(&sw, 7).unwrap();
    assert_eq!(j.column(0), s.column(0));
}

#[test]
fn flajolet_three_way_agreement() {
    let ones = vec![int(1); 10];
    let mot = PathWeights::jacobi(&Domain::Rational, ones.clone(), ones).unwrap();
    assert!(flajolet_check(&mot, 8).unwrap().passed());

    let fact = PathWeights::jacobi_from_fn(&Domain::Rational, 10, |k| int((k * k) as i64), |k| int(2 * k as i64 + 1))
        .unwrap();
    let legs = FlajoletLegs::compute(&fact, 8).unwrap();
    assert_eq!(legs.enumeration, ints(&[1, 1, 2, 6, 24, 120, 720, 5040, 40320]));
    assert_eq!(legs.table, legs.enumeration);
    assert_eq!(legs.fraction, legs.enumeration);
    assert!(flajolet_check(&fact, 8).unwrap().passed());

    let sym = PathWeights::symbolic_general(6);
    assert!(flajolet_check(&sym, 6).unwrap().passed());
    let dyck = PathWeights::symbolic_stieltjes(16);
    assert!(flajolet_check(&dyck, 8).unwrap().passed());
}

#[test]
fn flajolet_reports_a_corrupted_leg() {
    let ones = vec![int(1); 10];
    let mot = PathWeights::jacobi(&Domain::Rational, ones.clone(), ones).unwrap();
    let mut legs = FlajoletLegs::compute(&mot, 8).unwrap();
    legs.table[5] = int(22);
    let m = legs.compare();
    assert_eq!(m.len(), 1);
    assert_eq!((m[0].n, m[0].leg), (5, Leg::Table));
    assert_eq!((m[0].expected.clone(), m[0].found.clone()), (int(21), int(22)));
    assert!(matches!(flajolet_check(&mot, 11), Err(Error::SizeLimit { .. })));
}

#[test]
fn hankel_factorial_small_blocks() {
    let a: Vec<Coeff> = (0..=5).map(|n| Coeff::from_rational(&Domain::Rational, Rational::from(factorial(n)))).collect();
    let rep = hankel_factorization_check(&a, &factorial_weights(8), 2).unwrap();
    assert!(rep.passed());
    let forms: Vec<HankelForm> = rep.checks.iter().map(|c| c.form).collect();
    assert_eq!(forms, [HankelForm::S, HankelForm::Sprime]);
    // D' = diag(alpha_1, alpha_1 alpha_2 alpha_3, alpha_1 … alpha_5) = diag(1, 2, 12)
    let w = factorial_weights(8);
    let prod = |m: usize| (1..=m).fold(int(1), |acc, i| &acc * &w.alpha(i).unwrap());
    assert_eq!([prod(1), prod(3), prod(5)], [int(1), int(2), int(12)]);

    let mut bad = a.clone();
    bad[4] = int(25);
    let rep = hankel_factorization_check(&bad, &factorial_weights(8), 2).unwrap();
    assert!(!rep.passed());
    let m = rep.checks[0].mismatch.as_ref().unwrap();
    assert_eq!((m.0, m.1), (2, 2));
}

#[test]
fn hankel_secant_power() {
    let f = generate(&SeriesSpec::new("secant_power", 8)).unwrap();
    let d = f.domain().clone();
    let x = Coeff::variable(&d, "x").unwrap();
    // the moments a_n = E_n(x) with the odd ones zero
    let a: Vec<Coeff> = (0..=8).map(|n| if n % 2 == 0 { f.coeffs()[n / 2].clone() } else { Coeff::zero(&d) }).collect();
    let w = PathWeights::jacobi_from_fn(
        &d,
        5,
        |k| &Coeff::from_int(&d, k as i64) * &(&x + &Coeff::from_int(&d, k as i64 - 1)),
        |_| Coeff::zero(&d),
    )
    .unwrap();
    let rep = hankel_factorization_check(&a, &w, 4).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.checks[0].form, HankelForm::J);
    assert!(rep.checks[0].describe().contains("Rogers"));
    assert!(matches!(hankel_factorization_check(&a[..8], &w, 4), Err(Error::InsufficientDepth { .. })));
}

#[test]
fn g_table_correspondences() {
    assert!(g_table_correspondence_check(&factorial_weights(14), 6).unwrap().passed());
    let fact = PathWeights::jacobi_from_fn(&Domain::Rational, 8, |k| int((k * k) as i64), |k| int(2 * k as i64 + 1))
        .unwrap();
    let rep = g_table_correspondence_check(&fact, 6).unwrap();
    assert!(rep.passed() && rep.checked > 0);
    let cat = PathWeights::stieltjes(&Domain::Rational, vec![int(1); 14]).unwrap();
    assert!(g_table_correspondence_check(&cat, 6).unwrap().passed());
}

fn rats(v: &[Rational]) -> Vec<Coeff> {
    v.iter().map(|r| Coeff::from_rational(&Domain::Rational, r.clone())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn stieltjes_hankel_identities(alphas in proptest::collection::vec(nonzero_rational(), 16), size in 1usize..=3) {
        let w = PathWeights::stieltjes(&Domain::Rational, rats(&alphas)).unwrap();
        let a = stieltjes_tables(&w, 2 * size + 1).unwrap().0.column(0);
        let rep = hankel_factorization_check(&a, &w, size).unwrap();
        prop_assert_eq!(rep.checks.len(), 2);
        prop_assert!(rep.passed(), "{:?}", rep);
    }

    #[test]
    fn jacobi_hankel_identity(
        betas in proptest::collection::vec(nonzero_rational(), 8),
        gammas in proptest::collection::vec(rational(), 8),
        size in 1usize..=4,
    ) {
        let w = PathWeights::jacobi(&Domain::Rational, rats(&betas), rats(&gammas)).unwrap();
        let a = jacobi_rogers_table(&w, 2 * size).unwrap().column(0);
        prop_assert!(hankel_factorization_check(&a, &w, size).unwrap().passed());
    }
}
