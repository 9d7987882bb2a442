use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::error::Error;
use crate::scalar::Scalar;

const D: FamilyId = 0;
const X: FamilyId = 1;
const Y: FamilyId = 2;

fn d(n: u32) -> GenSymbol {
    GenSymbol::indexed(D, n)
}
fn x() -> GenSymbol {
    GenSymbol::plain(X)
}
fn y() -> GenSymbol {
    GenSymbol::plain(Y)
}

fn term(c: i64, var: Option<IndexVar>, word: Vec<RhsSym>) -> RhsTerm {
    RhsTerm { coeff: Scalar::int(c), index_factor: var, word }
}

fn dv(v: IndexVar, off: i64) -> RhsSym {
    RhsSym { family: D, index: IndexExpr::Var(v, off) }
}

/// Relations of the affine-extended derivation algebra, written independently
/// of the builders module.
fn system() -> RewriteSystem {
    let alphabet = Alphabet::new(vec![Family::indexed("delta"), Family::plain("X"), Family::plain("Y").with_weight(0)]);
    let px = RhsSym { family: X, index: IndexExpr::None };
    let py = RhsSym { family: Y, index: IndexExpr::None };
    let rules = vec![
        Rule {
            lhs: vec![SymPattern::plain(Y), SymPattern::plain(X)],
            conditions: vec![],
            rhs: vec![term(1, None, vec![px, py]), term(1, None, vec![px])],
        },
        Rule {
            lhs: vec![SymPattern::plain(Y), SymPattern::var(D, 0)],
            conditions: vec![],
            rhs: vec![term(1, None, vec![dv(0, 0), py]), term(1, Some(0), vec![dv(0, 0)])],
        },
        Rule {
            lhs: vec![SymPattern::plain(X), SymPattern::var(D, 0)],
            conditions: vec![],
            rhs: vec![term(1, None, vec![dv(0, 0), px]), term(1, None, vec![dv(0, 1)])],
        },
        Rule {
            lhs: vec![SymPattern::var(D, 0), SymPattern::var(D, 1)],
            conditions: vec![(1, 0)],
            rhs: vec![term(1, None, vec![dv(1, 0), dv(0, 0)])],
        },
    ];
    RewriteSystem::new(alphabet, rules)
}

fn w(s: &[GenSymbol]) -> NCPoly {
    NCPoly::word(Word::from_slice(s))
}

#[test]
fn commutator_rules_reduce() {
    let rs = system();
    assert_eq!(rs.normalize(&w(&[y(), x()])).unwrap(), &w(&[x(), y()]) + &w(&[x()]));
    assert_eq!(rs.normalize(&w(&[x(), d(1)])).unwrap(), &w(&[d(1), x()]) + &w(&[d(2)]));
    let yd3 = rs.normalize(&w(&[y(), d(3)])).unwrap();
    assert_eq!(yd3, &w(&[d(3), y()]) + &w(&[d(3)]).scale(&Scalar::int(3)));
    assert_eq!(rs.normalize(&w(&[d(2), d(1)])).unwrap(), w(&[d(1), d(2)]));
    assert_eq!(rs.normalize(&w(&[d(1), d(2)])).unwrap(), w(&[d(1), d(2)]));
}

#[test]
fn unit_and_normal_inputs_are_fixed() {
    let rs = system();
    let p = &w(&[d(1), x(), y()]) + &NCPoly::one();
    assert_eq!(rs.normalize(&p).unwrap(), p);
    assert_eq!(rs.mul(&NCPoly::one(), &p).unwrap(), p);
    assert_eq!(rs.mul(&p, &NCPoly::one()).unwrap(), p);
}

#[test]
fn rules_decrease_and_are_confluent() {
    let rs = system();
    rs.check_termination(5).unwrap();
    let n = rs.check_confluence(4).unwrap();
    assert!(n > 0);
}

#[test]
fn broken_orientation_is_caught() {
    let alphabet = Alphabet::new(vec![Family::plain("a"), Family::plain("b")]);
    let a = GenSymbol::plain(0);
    let b = GenSymbol::plain(1);
    let rules = vec![
        Rule::fixed(&Word::from_slice(&[a, b]), &NCPoly::word(Word::from_slice(&[b, a]))),
        Rule::fixed(&Word::from_slice(&[b, a]), &NCPoly::word(Word::from_slice(&[a, b]))),
    ];
    let rs = RewriteSystem::new(alphabet, rules);
    assert!(rs.check_termination(1).is_err());
    let err = rs.normalize(&NCPoly::word(Word::from_slice(&[a, b]))).unwrap_err();
    assert!(matches!(err, Error::NonTerminating { .. }));
}

#[test]
fn non_confluent_system_is_reported() {
    // aa -> b and ab -> 1 disagree on aab
    let alphabet = Alphabet::new(vec![Family::plain("a"), Family::plain("b").with_weight(2)]);
    let a = GenSymbol::plain(0);
    let b = GenSymbol::plain(1);
    let rules = vec![
        Rule::fixed(&Word::from_slice(&[b, a]), &NCPoly::word(Word::from_slice(&[a]))),
        Rule::fixed(&Word::from_slice(&[a, a]), &NCPoly::word(Word::from_slice(&[b]))),
    ];
    let rs = RewriteSystem::new(alphabet, rules);
    assert!(rs.check_confluence(1).is_err());
}

#[test]
fn slot_operators_check_degree() {
    let t = TensorElem::pure(vec![Word::single(x()), Word::single(y())], Scalar::one());
    let id = |w: &Word| Ok(NCPoly::word(w.clone()));
    assert_eq!(t.apply_slots(&[&id, &id]).unwrap(), t);
    let err = t.apply_slots(&[&id]).unwrap_err();
    assert_eq!(err, Error::DegreeMismatch { expected: 2, got: 1 });
    let kill = |_: &Word| Ok(NCPoly::zero());
    assert!(t.apply_slots(&[&kill, &id]).unwrap().is_zero());
}

#[test]
fn display_uses_expression_syntax() {
    let rs = system();
    let p = rs.normalize(&(&w(&[y(), d(1)]) - &NCPoly::constant(Scalar::ratio(1, 2)))).unwrap();
    assert_eq!(p.display(rs.alphabet()).to_string(), "-1/2 + delta_1 + delta_1*Y");
    let t = TensorElem::pure(vec![Word::single(x()), Word::single(y())], Scalar::int(-2));
    assert_eq!(t.display(rs.alphabet()).to_string(), "-2*X ox Y");
}

fn arb_word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0u32..5, 0..=6).prop_map(|v| {
        v.into_iter()
            .map(|k| match k {
                0 => x(),
                1 => y(),
                n => d(n - 1),
            })
            .collect()
    })
}

fn arb_poly() -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((arb_word(), -3i64..4), 1..3)
        .prop_map(|ts| NCPoly::from_terms(ts.into_iter().map(|(w, c)| (w, Scalar::int(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let rs = system();
        let left = rs.mul(&rs.mul(&a, &b).unwrap(), &c).unwrap();
        let right = rs.mul(&a, &rs.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn random_strategies_agree(word in arb_word(), seed in any::<u64>()) {
        let rs = system();
        let p = NCPoly::word(word);
        let mut r1 = ChaCha8Rng::seed_from_u64(seed);
        let mut r2 = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1));
        let a = rs.normalize_random(&p, &mut r1).unwrap();
        let b = rs.normalize_random(&p, &mut r2).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&a, &rs.normalize(&p).unwrap());
    }

    #[test]
    fn normalize_is_idempotent(p in arb_poly()) {
        let rs = system();
        let n = rs.normalize(&p).unwrap();
        prop_assert!(n.terms().all(|(w, _)| rs.is_normal(w)));
        prop_assert_eq!(rs.normalize(&n).unwrap(), n);
    }
}
