use cfrac::coeffs::Rational;
use cfrac::{CFraction, CfTerm, Coeff, Domain, ExpansionShape, Status, TruncatedSeries};
use cfrac_cli::json::{decode_fraction, encode_fraction, fraction_from_value, FractionJson};
use proptest::prelude::*;

fn domains() -> Vec<Domain> {
    vec![Domain::Rational, Domain::polynomial(&["x", "y"]).unwrap(), Domain::rational_function("q").unwrap()]
}

fn rational() -> impl Strategy<Value = Rational> + Clone {
    (-30i64..=30, 1i64..=7).prop_map(Rational::from)
}

/// A polynomial in the domain's variables with small rational coefficients.
fn poly(d: &Domain, terms: &[(Rational, u32, u32)]) -> Coeff {
    let vars = d.variables();
    terms.iter().fold(Coeff::zero(d), |acc, (c, i, j)| {
        let mut m = Coeff::from_rational(d, c.clone());
        if let Some(v) = vars.first() {
            m = &m * &Coeff::variable(d, v).unwrap().pow(*i);
        }
        if let Some(v) = vars.get(1) {
            m = &m * &Coeff::variable(d, v).unwrap().pow(*j);
        }
        &acc + &m
    })
}

fn coeff(d: Domain) -> impl Strategy<Value = Coeff> + Clone {
    let terms = || proptest::collection::vec((rational(), 0u32..4, 0u32..3), 0..4);
    (terms(), terms()).prop_map(move |(n, den)| {
        let num = poly(&d, &n);
        let den = poly(&d, &den);
        if d.is_field() && !den.is_zero() {
            num.exact_div(&den).unwrap()
        } else {
            num
        }
    })
}

fn fraction() -> impl Strategy<Value = CFraction> {
    (0usize..3).prop_flat_map(|i| {
        let d = domains()[i].clone();
        let c = coeff(d.clone());
        let term = (proptest::collection::vec(c.clone(), 0..3), c.clone(), 1usize..5)
            .prop_map(|(delta, alpha, p)| CfTerm { delta, alpha, p });
        let status = prop_oneof![
            (0usize..10, 0usize..30).prop_map(|(depth, w)| Status::Terminated { depth, witnessed_through: w }),
            (0usize..30).prop_map(|b| Status::Inconclusive { remaining_budget: b }),
        ];
        (c.clone(), proptest::collection::vec(term, 0..6), proptest::collection::vec(c, 0..3), status).prop_map(
            move |(alpha0, terms, tail_delta, status)| CFraction {
                domain: d.clone(),
                alpha0,
                terms,
                tail_delta,
                status,
            },
        )
    })
}

fn through_text(cf: &CFraction) -> CFraction {
    let text = serde_json::to_string(&encode_fraction(cf)).unwrap();
    let back: FractionJson = serde_json::from_str(&text).unwrap();
    decode_fraction(&back).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn arbitrary_fractions_round_trip(cf in fraction()) {
        prop_assert_eq!(through_text(&cf), cf);
    }

    #[test]
    fn computed_fractions_round_trip(
        c in proptest::collection::vec(rational(), 1..16),
        m in proptest::collection::vec(0usize..3, 1..3),
    ) {
        let mut c = c;
        if c[0] == 0 {
            c[0] = Rational::from(1);
        }
        let f = TruncatedSeries::from_rationals(c).unwrap();
        let (cf, _) = cfrac::expand::expand_refined(&f, &ExpansionShape::custom(m), None).unwrap();
        prop_assert_eq!(through_text(&cf), cf.clone());
        // the report form carries extra fields but decodes to the same fraction
        let mut v = serde_json::to_value(encode_fraction(&cf)).unwrap();
        v["schema"] = "cfrac/1".into();
        v["timing_ms"] = 1.5.into();
        prop_assert_eq!(fraction_from_value(&v).unwrap(), cf);
    }
}

#[test]
fn domain_text_forms() {
    use cfrac_cli::json::{domain_from_json, domain_to_json, parse_domain};
    for d in domains() {
        assert_eq!(parse_domain(&d.to_string()).unwrap(), d);
        assert_eq!(domain_from_json(&domain_to_json(&d)).unwrap(), d);
    }
    assert!(parse_domain("ZZ").is_err());
    assert!(parse_domain("QQ[x,x]").is_err());
}
