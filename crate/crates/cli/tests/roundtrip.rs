use hopfcyc_cli::builtins::{load, samples};
use hopfcyc_cli::expr::{parse_poly, parse_tensor, FieldMode};
use hopfcyc_cli::inline::{build_inline, export_inline, uses_q};
use hopfcyc_cli::spec::InlinePresentation;
use hopfcyc::{NCPoly, Scalar, TensorElem};

#[test]
fn finite_alphabet_builtins_round_trip_through_inline_json() {
    let mut exported = 0;
    for (name, params) in samples() {
        let h = load(name, params.as_ref()).unwrap();
        let inline = match export_inline(&h) {
            Ok(i) => i,
            Err(_) => {
                assert!(!h.is_finite_alphabet() || !h.derived().is_empty(), "{name} should export");
                continue;
            }
        };
        let text = serde_json::to_string(&inline).unwrap();
        let back: InlinePresentation = serde_json::from_str(&text).unwrap();
        let field = if uses_q(&h) { FieldMode::RationalFunction } else { FieldMode::Rational };
        let again = build_inline(&back, field).unwrap();
        assert!(again == h, "{name} {params:?} changed in the round trip");
        exported += 1;
    }
    assert_eq!(exported, samples().len() - 1);
}

#[test]
fn cocycle_candidates_parse() {
    let h = load("cm_h1", None).unwrap();
    let a = h.alphabet();
    let g = |s: &str| parse_poly(s, a, FieldMode::Rational).unwrap();

    let d2p = h.normalize(&g("delta_2 - 1/2 * delta_1 * delta_1")).unwrap();
    let mut expected = g("delta_2");
    expected.add_scaled(&h.mul(&g("delta_1"), &g("delta_1")).unwrap(), &Scalar::ratio(-1, 2));
    assert_eq!(d2p, expected);

    let f = h.normalize_tensor(&parse_tensor("X ox Y - Y ox X - delta_1*Y ox Y", a, FieldMode::Rational).unwrap()).unwrap();
    let mut expected = TensorElem::from_polys(&[g("X"), g("Y")]);
    expected.add_scaled(&TensorElem::from_polys(&[g("Y"), g("X")]), &Scalar::int(-1));
    expected.add_scaled(&TensorElem::from_polys(&[h.mul(&g("delta_1"), &g("Y")).unwrap(), g("Y")]), &Scalar::int(-1));
    assert_eq!(f, h.normalize_tensor(&expected).unwrap());
    assert_eq!(f.degree(), 2);
    assert_ne!(d2p, NCPoly::zero());
}

#[test]
fn builtin_request_loads_h1() {
    let job = hopfcyc_cli::Job::load(r#"{"presentation": {"builtin": "cm_h1"}, "tasks": []}"#).unwrap();
    assert_eq!(job.h.name(), "cm_h1");
}
