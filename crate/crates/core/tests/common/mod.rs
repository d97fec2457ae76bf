#![allow(dead_code)]

use cfrac::coeffs::{Coeff, Domain, Rational};
use cfrac::TruncatedSeries;
use proptest::prelude::*;

pub fn int(n: i64) -> Coeff {
    Coeff::from_int(&Domain::Rational, n)
}

pub fn ints(v: &[i64]) -> Vec<Coeff> {
    v.iter().map(|&n| int(n)).collect()
}

pub fn rat(p: i64, q: i64) -> Coeff {
    Coeff::from_rational(&Domain::Rational, Rational::from((p, q)))
}

pub fn series(v: &[i64]) -> TruncatedSeries {
    TruncatedSeries::from_ints(v).unwrap()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(p, q)| Rational::from((p, q)))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != 0)
}

/// A rational series through `t^order` with nonzero constant term.
pub fn rational_series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (nonzero_rational(), proptest::collection::vec(rational(), 0..=max_order)).prop_map(|(c0, rest)| {
        TruncatedSeries::from_rationals(std::iter::once(c0).chain(rest)).unwrap()
    })
}

/// Same, with every coefficient nonzero (generic enough for regular shapes).
pub fn generic_series(min_order: usize, max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(nonzero_rational(), min_order + 1..=max_order + 1)
        .prop_map(|v| TruncatedSeries::from_rationals(v).unwrap())
}
