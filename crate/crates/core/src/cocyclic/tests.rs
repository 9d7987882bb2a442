use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::builders::{basis_vec, build_cm_h1, FiniteCoalgebra, FiniteGroupData, FiniteHopf};
use crate::coeffs::{action_only, coaction_only, pair_module, FinCoefModule, FiniteAlgebra, GroupAlgebra, Side};
use crate::cohom::ExactMatrix;
use crate::error::Error;
use crate::hopf::{Character, HopfPresentation, ModularPair};
use crate::ncalg::{NCPoly, TensorElem};
use crate::report::Report;
use crate::scalar::Scalar;

fn h1_pair(h: &HopfPresentation) -> ModularPair {
    ModularPair::new(Character::from_named(h, &[("Y", None, Scalar::one())]).unwrap(), NCPoly::one())
}

fn poly(h: &HopfPresentation, name: &str, index: Option<u32>) -> NCPoly {
    h.gen(name, index).unwrap()
}

fn tensor(h: &HopfPresentation, factors: &[&NCPoly]) -> TensorElem {
    h.normalize_tensor(&TensorElem::from_polys(&factors.iter().map(|p| (*p).clone()).collect::<Vec<_>>())).unwrap()
}

fn assert_pass(r: &Report) {
    assert!(r.pass(), "{r}");
}

/// `k[t]/(t² − 1)` with the generator of `kℤ/2` acting by `t ↦ −t`.
fn sign_algebra(z2: &GroupAlgebra) -> (FiniteAlgebra, FinCoefModule) {
    let a = FiniteAlgebra {
        labels: vec!["1".into(), "t".into()],
        unit: basis_vec(0),
        mult: vec![vec![basis_vec(0), basis_vec(1)], vec![basis_vec(1), basis_vec(0)]],
    };
    let s = z2.realization().generator(1).unwrap();
    let m = ExactMatrix::from_rows(vec![vec![Scalar::one(), Scalar::zero()], vec![Scalar::zero(), Scalar::int(-1)]]);
    (a, action_only(2, Side::Left, [(s, m)].into_iter().collect()).unwrap())
}

fn group_coalgebra(h: &FiniteHopf) -> FiniteCoalgebra {
    FiniteCoalgebra { labels: h.labels.clone(), coproduct: h.coproduct.clone(), counit: h.counit.clone() }
}

fn trivial_pair(kg: &GroupAlgebra) -> ModularPair {
    ModularPair::trivial(kg.h())
}

fn axioms(m: &MatrixCocyclic, max_level: usize) -> Report {
    verify_cocyclic_axioms(m, max_level, &basis_probes(m)).unwrap()
}

#[test]
fn h1_faces_and_cyclic_operator() {
    let h = build_cm_h1().unwrap();
    let cm = CmModule::new(&h, &h1_pair(&h)).unwrap();
    let (x, y, d1, one) = (poly(&h, "X", None), poly(&h, "Y", None), poly(&h, "delta", Some(1)), NCPoly::one());
    let lhs = cm.face(1, 1, &TensorElem::from_poly(&x)).unwrap();
    let mut want = tensor(&h, &[&x, &one]);
    want.add_scaled(&tensor(&h, &[&one, &x]), &Scalar::one());
    want.add_scaled(&tensor(&h, &[&d1, &y]), &Scalar::one());
    assert_eq!(lhs, h.normalize_tensor(&want).unwrap());
    assert_eq!(cm.face(1, 2, &TensorElem::from_poly(&d1)).unwrap(), tensor(&h, &[&d1, &one]));
    assert_eq!(cm.face(0, 0, &TensorElem::scalar(Scalar::one())).unwrap(), TensorElem::from_poly(&one));
    let t = cm.cyclic(1, &TensorElem::from_poly(&d1)).unwrap();
    assert_eq!(t, TensorElem::from_poly(&d1).scale(&Scalar::int(-1)));
    assert!(matches!(cm.face(1, 3, &TensorElem::from_poly(&x)), Err(Error::IndexOutOfRange { .. })));
}

#[test]
fn h1_cocycles_are_closed_and_cyclic() {
    let h = build_cm_h1().unwrap();
    let cm = CmModule::new(&h, &h1_pair(&h)).unwrap();
    let (x, y, d1, d2) = (poly(&h, "X", None), poly(&h, "Y", None), poly(&h, "delta", Some(1)), poly(&h, "delta", Some(2)));
    let mut d2p = TensorElem::from_poly(&d2);
    d2p.add_scaled(&TensorElem::from_poly(&h.mul(&d1, &d1).unwrap()), &Scalar::ratio(-1, 2));
    let mut f = tensor(&h, &[&x, &y]);
    f.add_scaled(&tensor(&h, &[&y, &x]), &Scalar::int(-1));
    f.add_scaled(&tensor(&h, &[&h.mul(&d1, &y).unwrap(), &y]), &Scalar::int(-1));
    for (n, c) in [(1, TensorElem::from_poly(&d1)), (1, d2p), (2, f)] {
        assert!(cm.is_zero(&hochschild_b(&cm, n, &c).unwrap()), "b of {}", cm.show(&c));
        assert!(cm.is_zero(&one_minus_lambda(&cm, n, &c).unwrap()), "1 − λ of {}", cm.show(&c));
    }
    // a non-cocycle
    let x1 = TensorElem::from_poly(&x);
    assert!(!cm.is_zero(&hochschild_b(&cm, 1, &x1).unwrap()));
    // b(1) at level 0 with σ = 1
    assert!(cm.is_zero(&hochschild_b(&cm, 0, &TensorElem::scalar(Scalar::one())).unwrap()));
}

#[test]
fn group_cyclic_operator_is_inversion() {
    let z3 = GroupAlgebra::new(FiniteGroupData::cyclic(3, "g")).unwrap();
    let cm = CmModule::new(z3.h(), &trivial_pair(&z3)).unwrap();
    for a in z3.group().elements() {
        let t = cm.cyclic(1, &TensorElem::from_poly(&z3.element(a))).unwrap();
        assert_eq!(t, TensorElem::from_poly(&z3.element(z3.group().inv(a))));
    }
}

#[test]
fn cm_over_z3_passes_every_identity() {
    let z3 = GroupAlgebra::new(FiniteGroupData::cyclic(3, "g")).unwrap();
    let cm = CmModule::new(z3.h(), &trivial_pair(&z3)).unwrap();
    let m = MatrixCocyclic::materialize(&cm, 6).unwrap();
    let r = axioms(&m, 4);
    assert_pass(&r);
    assert_eq!(r.lines.len(), 9 + 5);
    for n in 0..5 {
        let b2 = m.b_matrix(n + 1).unwrap().mul(&m.b_matrix(n).unwrap()).unwrap();
        assert!(b2.is_zero(), "b² at level {n}");
    }
}

#[test]
fn non_stable_pair_breaks_periodicity() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let sign = |a: usize| if a == 0 { Scalar::one() } else { Scalar::int(-1) };
    let pair = z2.pair(sign, 1).unwrap();
    let cm = CmModule::new(z2.h(), &pair).unwrap();
    let m = MatrixCocyclic::materialize(&cm, 3).unwrap();
    let r = axioms(&m, 1);
    let line = r.line("τ1^2 = id").unwrap();
    assert!(!line.pass);
    assert!(line.witness.as_deref().unwrap_or_default().contains("level 1"), "{line}");
}

#[test]
fn corrupted_cyclic_operator_is_caught() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let cm = CmModule::new(z2.h(), &trivial_pair(&z2)).unwrap();
    let mut m = MatrixCocyclic::materialize(&cm, 4).unwrap();
    assert_pass(&axioms(&m, 2));
    m.set_cyclic(2, ExactMatrix::identity(m.dim(2))).unwrap();
    assert!(!axioms(&m, 2).pass());
}

fn type_a_z2(z2: &GroupAlgebra, sigma: usize) -> TypeA<'_> {
    let (a, act) = sign_algebra(z2);
    TypeA::twisted(z2.h(), a, act, &z2.element(sigma)).unwrap()
}

#[test]
fn type_a_over_z2_passes_every_identity() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    for sigma in [0, 1] {
        let inst = type_a_z2(&z2, sigma);
        let m = MatrixCocyclic::materialize(&inst, 6).unwrap();
        assert_pass(&axioms(&m, 4));
        // invariance cuts every level down, as the action is nontrivial
        for n in 0..5 {
            assert!(m.dim(n) < inst.ambient_dim(n).unwrap(), "level {n}");
        }
    }
}

#[test]
fn type_a_rejects_wrong_sides() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let (a, act) = sign_algebra(&z2);
    let m = pair_module(z2.h(), &trivial_pair(&z2)).unwrap();
    assert!(matches!(TypeA::new(z2.h(), a, act, m), Err(Error::WrongSides(_))));
}

#[test]
fn plain_algebra_is_the_standard_module() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let (a, _) = sign_algebra(&z2);
    let inst = TypeA::plain(a.clone()).unwrap();
    let m = MatrixCocyclic::materialize(&inst, 4).unwrap();
    assert_pass(&axioms(&m, 2));
    for n in 0..4 {
        let radix = MultiIndex::new(vec![2; n + 1]);
        assert_eq!(m.dim(n), radix.total());
        // (τf)(a0, …, an) = f(an, a0, …)
        let t = m.cyclic_matrix(n).unwrap();
        for (row, digits) in radix.tuples().enumerate() {
            let mut rotated = vec![digits[n]];
            rotated.extend_from_slice(&digits[..n]);
            for col in 0..radix.total() {
                let want = if col == radix.encode(&rotated) { Scalar::one() } else { Scalar::zero() };
                assert_eq!(t.get(row, col), want);
            }
        }
    }
}

#[test]
fn twisted_instance_matches_the_twisted_coboundary() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let inst = type_a_z2(&z2, 1);
    let m = MatrixCocyclic::materialize(&inst, 3).unwrap();
    let (a, _) = sign_algebra(&z2);
    let sigma = |x: usize| if x == 0 { Scalar::one() } else { Scalar::int(-1) };
    for n in 0..3 {
        let (src, dst) = (inst.level_space(n).unwrap(), inst.level_space(n + 1).unwrap());
        let b = m.b_matrix(n).unwrap();
        let radix = MultiIndex::new(vec![2; n + 2]);
        let low = MultiIndex::new(vec![2; n + 1]);
        for j in 0..src.dim() {
            let f = src.lift(&m.unit(n, j));
            let got = dst.lift(&b.col(j));
            // b_σ f(a0, …, a(n+1)) = Σ (−1)^i f(…, a_i a_(i+1), …) + (−1)^(n+1) f(σ(a(n+1)) a0, …)
            for (row, d) in radix.tuples().enumerate() {
                let mut want = Scalar::zero();
                for i in 0..=n {
                    let mut e = d[..i].to_vec();
                    let prod = a.mult[d[i]][d[i + 1]].iter().next().map(|(k, _)| *k).unwrap();
                    e.push(prod);
                    e.extend_from_slice(&d[i + 2..]);
                    let sign = if i % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
                    want = &want + &(&sign * &f[low.encode(&e)]);
                }
                let mut e = vec![(d[n + 1] + d[0]) % 2];
                e.extend_from_slice(&d[1..=n]);
                let sign = if (n + 1) % 2 == 0 { Scalar::one() } else { Scalar::int(-1) };
                want = &want + &(&(&sign * &sigma(d[n + 1])) * &f[low.encode(&e)]);
                assert_eq!(got[row], want, "level {n}, column {j}, row {row}");
            }
        }
        let b2 = m.b_matrix(n + 1).ok().map(|b1| b1.mul(&b).unwrap());
        if let Some(b2) = b2 {
            assert!(b2.is_zero());
        }
    }
}

fn type_b_z2(z2: &GroupAlgebra, sigma: usize) -> TypeB<'_> {
    let kg = FiniteAlgebra::from_hopf(z2.structure());
    let diag: Vec<Vec<NCPoly>> =
        (0..2).map(|i| (0..2).map(|j| if i == j { z2.element(i) } else { NCPoly::zero() }).collect()).collect();
    let co = coaction_only(2, Side::Right, diag).unwrap();
    let m = FinCoefModule::one_dim(&z2.h().tables().counit.clone(), &z2.element(sigma), Side::Right, Side::Right);
    TypeB::new(z2.h(), kg, co, m).unwrap()
}

#[test]
fn type_b_over_z2_passes_every_identity() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    for sigma in [0, 1] {
        let inst = type_b_z2(&z2, sigma);
        let m = MatrixCocyclic::materialize(&inst, 6).unwrap();
        assert_pass(&axioms(&m, 4));
        for n in 0..5 {
            assert!(m.dim(n) < inst.ambient_dim(n).unwrap(), "level {n}");
        }
    }
}

fn type_c_kg<'a>(kg: &'a GroupAlgebra, pair: &ModularPair) -> TypeC<'a> {
    let c = group_coalgebra(kg.structure());
    let act = action_only(kg.group().order(), Side::Left, kg.left_regular()).unwrap();
    TypeC::new(kg.h(), c, act, pair_module(kg.h(), pair).unwrap()).unwrap()
}

#[test]
fn type_c_over_z2_passes_every_identity() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let sign = |a: usize| if a == 0 { Scalar::one() } else { Scalar::int(-1) };
    for pair in [trivial_pair(&z2), z2.pair(sign, 0).unwrap()] {
        let inst = type_c_kg(&z2, &pair);
        let m = MatrixCocyclic::materialize(&inst, 6).unwrap();
        assert_pass(&axioms(&m, 4));
        // k ⊗_H H^{⊗(n+1)} has the dimension of H^{⊗n}
        for n in 0..5 {
            assert_eq!(m.dim(n), 1 << n);
        }
    }
}

#[test]
fn type_c_is_isomorphic_to_cm() {
    for order in [2, 3] {
        let kg = GroupAlgebra::new(FiniteGroupData::cyclic(order, "g")).unwrap();
        let pair = trivial_pair(&kg);
        let c = type_c_kg(&kg, &pair);
        let cm = CmModule::new(kg.h(), &pair).unwrap();
        let (src, dst) = (MatrixCocyclic::materialize(&c, 4).unwrap(), MatrixCocyclic::materialize(&cm, 4).unwrap());
        let phi = TypeCToCm::new(&cm, kg.realization().embed.clone());
        let (maps, kills) = phi.matrices(&c, 4).unwrap();
        assert!(kills.pass, "{kills}");
        assert_pass(&check_intertwiner(&src, &dst, &maps).unwrap());
    }
}

#[test]
fn intertwiner_check_sees_a_wrong_map() {
    let kg = GroupAlgebra::new(FiniteGroupData::cyclic(3, "g")).unwrap();
    let pair = trivial_pair(&kg);
    let c = type_c_kg(&kg, &pair);
    let cm = CmModule::new(kg.h(), &pair).unwrap();
    let (src, dst) = (MatrixCocyclic::materialize(&c, 3).unwrap(), MatrixCocyclic::materialize(&cm, 3).unwrap());
    let (mut maps, _) = TypeCToCm::new(&cm, kg.realization().embed.clone()).matrices(&c, 3).unwrap();
    maps[1] = maps[1].scale(&Scalar::int(2));
    let r = check_intertwiner(&src, &dst, &maps).unwrap();
    assert!(r.line("Φ invertible").unwrap().pass);
    assert!(!r.line("Φδ = δΦ").unwrap().pass);
    assert!(r.line("Φτ = τΦ").unwrap().pass);
}

fn trivial_z2_on_z2(z2: &GroupAlgebra) -> (FiniteAlgebra, FinCoefModule) {
    let a = FiniteAlgebra::from_hopf(z2.structure());
    let s = z2.realization().generator(1).unwrap();
    (a, action_only(2, Side::Left, [(s, ExactMatrix::identity(2))].into_iter().collect()).unwrap())
}

#[test]
fn char_map_table_and_cochain_property() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let (a, act) = trivial_z2_on_z2(&z2);
    let pair = trivial_pair(&z2);
    let trace = vec![Scalar::one(), Scalar::zero()];
    let chi = CharMap::new(z2.h(), a.clone(), act, trace, &pair).unwrap();
    let cm = CmModule::new(z2.h(), &pair).unwrap();
    // χ(r) = rτ at level 0
    assert_eq!(char_map(&chi, &cm, 0, &[Scalar::int(3)]).unwrap(), vec![Scalar::int(3), Scalar::zero()]);
    // χ(g)(a0, a1) = τ(a0 a1) for the trivial action
    let words = cm.basis_words().unwrap().to_vec();
    for (gi, w) in words.iter().enumerate() {
        let mut e = vec![Scalar::zero(); words.len()];
        e[gi] = Scalar::one();
        let f = char_map(&chi, &cm, 1, &e).unwrap();
        for a0 in 0..2 {
            for a1 in 0..2 {
                let want = if a0 == a1 { Scalar::one() } else { Scalar::zero() };
                assert_eq!(f[a0 * 2 + a1], want, "g = {:?}", w);
            }
        }
    }
    let maps = chi.matrices(&cm, 4).unwrap();
    let src = MatrixCocyclic::materialize(&cm, 4).unwrap();
    let dst = MatrixCocyclic::materialize(&TypeA::plain(a).unwrap(), 4).unwrap();
    assert_pass(&check_commutes(&src, &dst, &maps).unwrap());
}

#[test]
fn char_map_commutes_for_a_nontrivial_action() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let (a, act) = sign_algebra(&z2);
    let pair = trivial_pair(&z2);
    let chi = CharMap::new(z2.h(), a.clone(), act, vec![Scalar::one(), Scalar::zero()], &pair).unwrap();
    let cm = CmModule::new(z2.h(), &pair).unwrap();
    let maps = chi.matrices(&cm, 4).unwrap();
    let src = MatrixCocyclic::materialize(&cm, 4).unwrap();
    let dst = MatrixCocyclic::materialize(&TypeA::plain(a).unwrap(), 4).unwrap();
    assert_pass(&check_commutes(&src, &dst, &maps).unwrap());
}

#[test]
fn non_invariant_trace_is_rejected() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let (a, act) = sign_algebra(&z2);
    let err = CharMap::new(z2.h(), a, act, vec![Scalar::one(), Scalar::one()], &trivial_pair(&z2)).unwrap_err();
    assert!(matches!(err, Error::TraceNotInvariant(_)), "{err}");
}

#[test]
fn integration_by_parts_tracks_invariance() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let (a, act) = sign_algebra(&z2);
    let pair = trivial_pair(&z2);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut seen = [false; 2];
    for k in 0..10 {
        let t1 = if k % 2 == 0 { 0 } else { rng.gen_range(-5..=5) };
        let trace = vec![Scalar::int(rng.gen_range(-5..=5)), Scalar::int(t1)];
        let v = check_trace(z2.h(), &a, &act, &trace, &pair).unwrap();
        assert!(v.sigma_trace.pass);
        assert!(v.lemma_consistent, "{:?}", v);
        assert_eq!(v.invariance.pass, t1 == 0);
        seen[v.ibp.pass as usize] = true;
    }
    assert_eq!(seen, [true, true]);
}

#[test]
fn identity_coefficient_is_a_conjugation_invariant_trace() {
    let s3 = GroupAlgebra::new(FiniteGroupData::symmetric(3)).unwrap();
    let g = s3.group();
    let a = FiniteAlgebra::from_hopf(s3.structure());
    let mut action = std::collections::BTreeMap::new();
    for x in g.elements() {
        let Some(sym) = s3.realization().generator(x) else { continue };
        let mut m = ExactMatrix::zeros(6, 6);
        for y in g.elements() {
            m.set(g.mul(g.mul(x, y), g.inv(x)), y, Scalar::one());
        }
        action.insert(sym, m);
    }
    let act = action_only(6, Side::Left, action).unwrap();
    let trace: Vec<Scalar> = (0..6).map(|i| if i == g.identity() { Scalar::one() } else { Scalar::zero() }).collect();
    let v = check_trace(s3.h(), &a, &act, &trace, &trivial_pair(&s3)).unwrap();
    assert!(v.invariance.pass && v.sigma_trace.pass && v.ibp.pass);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_cm_elements_are_periodic(coeffs in proptest::collection::vec(-4i64..=4, 9)) {
        let z3 = GroupAlgebra::new(FiniteGroupData::cyclic(3, "g")).unwrap();
        let cm = CmModule::new(z3.h(), &trivial_pair(&z3)).unwrap();
        let v: Vec<Scalar> = coeffs.iter().map(|&c| Scalar::int(c)).collect();
        let t = cm.from_vector(2, &v).unwrap();
        let mut x = t.clone();
        for _ in 0..3 {
            x = cm.cyclic(2, &x).unwrap();
        }
        prop_assert_eq!(&x, &t);
        let bb = hochschild_b(&cm, 3, &hochschild_b(&cm, 2, &t).unwrap()).unwrap();
        prop_assert!(cm.is_zero(&bb));
    }
}
