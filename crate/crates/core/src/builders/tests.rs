use super::*;
use crate::hopf::{check_mpi, generator_probes, Character, ModularPair};
use crate::ncalg::NCPoly;
use crate::scalar::Scalar;

fn parse(h: &crate::hopf::HopfPresentation, terms: &[(i64, &[(&str, Option<u32>)])]) -> NCPoly {
    let mut p = NCPoly::zero();
    for (c, w) in terms {
        let mut m = NCPoly::one();
        for (name, idx) in w.iter() {
            m = m.concat(&NCPoly::gen(h.alphabet().symbol(name, *idx).unwrap()));
        }
        p = &p + &m.scale(&Scalar::int(*c));
    }
    h.normalize(&p).unwrap()
}

#[test]
fn h1_antipode_square_shifts_x() {
    let h = build_cm_h1().unwrap();
    let x = parse(&h, &[(1, &[("X", None)])]);
    let want = parse(&h, &[(1, &[("X", None)]), (1, &[("delta", Some(1))])]);
    assert_eq!(h.antipode_power(&x, 2).unwrap(), want);
    let d2 = parse(&h, &[(1, &[("delta", Some(2))])]);
    let cop = h.coproduct(&d2).unwrap();
    assert_eq!(h.show_tensor(&cop).matches(" ox ").count(), 3);
}

#[test]
fn h1_modular_pair_uses_y() {
    let h = build_cm_h1().unwrap();
    let probes = generator_probes(&h, 3);
    let good = Character::from_named(&h, &[("Y", None, Scalar::one())]).unwrap();
    good.validate(&h, 3).unwrap();
    assert!(check_mpi(&h, &ModularPair::new(good, NCPoly::one()), &probes).unwrap().pass());
    let bad = Character::from_named(&h, &[("X", None, Scalar::one())]).unwrap();
    assert!(bad.validate(&h, 3).is_err());
    let trivial = ModularPair::trivial(&h);
    assert!(!check_mpi(&h, &trivial, &probes).unwrap().pass());
}

#[test]
fn slq2_relations_and_antipode() {
    let h = build_slq2().unwrap();
    // the quantum determinant xy - q^-1 uv normalizes to 1
    let det = parse(&h, &[(1, &[("x", None), ("y", None)])]);
    let quv = h.normalize(&parse(&h, &[(1, &[("u", None), ("v", None)])]).scale(&Scalar::q().inv())).unwrap();
    assert_eq!(&det - &quv, NCPoly::one());
    let u = parse(&h, &[(1, &[("u", None)])]);
    let q2 = Scalar::q().pow(2);
    assert_eq!(h.antipode_power(&u, 2).unwrap(), u.scale(&q2));
}

#[test]
fn slq2_modular_pair_with_inverse_weights() {
    let h = build_slq2().unwrap();
    let probes = generator_probes(&h, 0);
    let q = Scalar::q();
    let chi = |a: Scalar, b: Scalar| Character::from_named(&h, &[("x", None, a), ("y", None, b)]).unwrap();
    let works = chi(q.inv(), q.clone());
    works.validate(&h, 0).unwrap();
    assert!(check_mpi(&h, &ModularPair::new(works, NCPoly::one()), &probes).unwrap().pass());
    let swapped = chi(q.clone(), q.inv());
    assert!(!check_mpi(&h, &ModularPair::new(swapped, NCPoly::one()), &probes).unwrap().pass());
}

#[test]
fn group_and_function_algebras_certify() {
    let s3 = FiniteGroupData::symmetric(3);
    let kg = build_group_algebra(&s3).unwrap();
    assert_eq!(kg.finite_basis(FINITE_MAX_LEN).unwrap().len(), 6);
    let fg = build_function_algebra(&s3).unwrap();
    assert_eq!(fg.finite_basis(FINITE_MAX_LEN).unwrap().len(), 6);
}

#[test]
fn enveloping_algebras() {
    let aff = build_enveloping(&LieData::affine()).unwrap();
    let yx = parse(&aff, &[(1, &[("X", None), ("Y", None)])]);
    assert_eq!(yx.len(), 2);
    build_enveloping(&LieData::sl2()).unwrap();
    let bad = LieData::new(
        vec!["a".into(), "b".into(), "c".into()],
        std::collections::BTreeMap::from([((0, 1), vec![(2, Scalar::one())]), ((1, 2), vec![(1, Scalar::one())])]),
    );
    assert!(matches!(bad, Err(crate::error::Error::JacobiFailure(_))));
}

#[test]
fn bicrossed_s3_is_noncocommutative_and_matches_closed_antipode() {
    let fact = FactorizationData::s3_c3_c2();
    let b = bicrossed_from_factorization(&fact).unwrap();
    let h = &b.structure;
    assert_eq!(h.dim(), 6);
    // C3 is normal, so F(C2) ⊗ kC3 stays commutative and the coaction deforms Δ
    let commutative = (0..6).all(|i| (0..6).all(|j| h.mult[i][j] == h.mult[j][i]));
    assert!(commutative);
    let flip = |t: &Pair| t.iter().map(|((a, b), c)| ((*b, *a), c.clone())).collect::<Pair>();
    assert!((0..6).any(|i| flip(&h.coproduct[i]) != h.coproduct[i]));
    // S(e_a ⊗ g) = e_{k·a⁻¹} ⊗ k with k = (a ▷ g)⁻¹
    let g = fact.group();
    let (nl, nr) = (fact.left().len(), fact.right().len());
    let pos_l = |x: usize| fact.left().iter().position(|&y| y == x).unwrap();
    let pos_r = |x: usize| fact.right().iter().position(|&y| y == x).unwrap();
    for a in 0..nr {
        for x in 0..nl {
            let k = pos_l(g.inv(fact.left()[fact.swap(a, x).0]));
            let a_inv = pos_r(g.inv(fact.right()[a]));
            let k_inv = pos_l(g.inv(fact.left()[k]));
            let target = fact.swap(a_inv, k_inv).1;
            assert_eq!(h.antipode[a * nl + x], basis_vec(target * nl + k));
        }
    }
}

#[test]
fn bicrossed_with_trivial_actions_is_a_tensor_product() {
    let fact = FactorizationData::z6_z2_z3();
    let b = bicrossed_from_factorization(&fact).unwrap();
    let t = FiniteHopf::tensor(&b.pair.f, &b.pair.u);
    assert_eq!((&b.structure.mult, &b.structure.coproduct, &b.structure.antipode), (&t.mult, &t.coproduct, &t.antipode));
    let triv = bicrossed_from_factorization(&FactorizationData::trivial(FiniteGroupData::cyclic(3, "g"))).unwrap();
    let f = FiniteHopf::function_algebra(&FiniteGroupData::cyclic(3, "g"));
    assert_eq!(triv.structure.mult, f.mult);
    assert_eq!(triv.structure.coproduct, f.coproduct);
}

#[test]
fn bad_factorizations_and_corrupted_pairs() {
    let s3 = FiniteGroupData::symmetric(3);
    let e = s3.identity();
    assert!(matches!(FactorizationData::new(s3.clone(), vec![e], vec![e]), Err(crate::error::Error::NotAFactorization(_))));
    let mut pair = FactorizationData::s3_c3_c2().matched_pair().unwrap();
    pair.coaction.swap(1, 2);
    let err = MatchedPairData::new(pair.u, pair.f, pair.action, pair.coaction).unwrap_err();
    assert!(matches!(err, crate::error::Error::NotComoduleCoalgebra(_) | crate::error::Error::MatchedPairViolation { .. }), "{err}");
}

#[test]
fn bicrossed_s3_other_order_is_noncommutative() {
    let s3 = FiniteGroupData::symmetric(3);
    let c3 = FactorizationData::s3_c3_c2().left().to_vec();
    let c2 = FactorizationData::s3_c3_c2().right().to_vec();
    let b = bicrossed_from_factorization(&FactorizationData::new(s3, c2, c3).unwrap()).unwrap();
    let h = &b.structure;
    assert!((0..6).any(|i| (0..6).any(|j| h.mult[i][j] != h.mult[j][i])));
}

fn weyl() -> (ModuleAlgebraData, crate::hopf::HopfPresentation) {
    use crate::ncalg::{Alphabet, Family, GenSymbol, RewriteSystem};
    let h = build_enveloping(&LieData::new(vec!["d".into()], Default::default()).unwrap()).unwrap();
    let algebra = RewriteSystem::new(Alphabet::new(vec![Family::plain("x")]), vec![]);
    let action = std::collections::BTreeMap::from([((GenSymbol::plain(0), GenSymbol::plain(0)), NCPoly::one())]);
    (ModuleAlgebraData { algebra, action }, h)
}

#[test]
fn weyl_algebra_from_crossed_product() {
    let (a, h) = weyl();
    let cp = crossed_product_algebra(&a, &h).unwrap();
    let x = NCPoly::gen(cp.alphabet().symbol("x", None).unwrap());
    let d = h.gen("d", None).unwrap();
    let lhs = cp.mul(&cp.pure(&NCPoly::one(), &d).unwrap(), &x).unwrap();
    let xd = cp.pure(&x, &d).unwrap();
    assert_eq!(lhs, &xd + &NCPoly::one());
    let xs = [NCPoly::one(), x.clone(), x.concat(&x)];
    let ds = [NCPoly::one(), d.clone(), h.mul(&d, &d).unwrap()];
    assert!(check_crossed_product_formula(&cp, &a, &h, &xs, &ds).unwrap().pass);
}

#[test]
fn crossed_product_with_ground_field_is_a() {
    let (a, _) = weyl();
    let k = build_ground().unwrap();
    let a = ModuleAlgebraData { algebra: a.algebra, action: Default::default() };
    let cp = crossed_product_algebra(&a, &k).unwrap();
    assert_eq!(cp.alphabet().families().len(), 1);
    assert_eq!(cp.rewrite.rules().len(), 0);
}

fn flip() -> (ModuleAlgebraData, crate::hopf::HopfPresentation) {
    use crate::ncalg::GenSymbol;
    let a = FiniteHopf::group_algebra(&FiniteGroupData::cyclic(2, "a")).realize("A").unwrap().presentation;
    let h = FiniteHopf::group_algebra(&FiniteGroupData::cyclic(2, "s")).realize("H").unwrap().presentation;
    let act = |v: NCPoly| std::collections::BTreeMap::from([((GenSymbol::plain(0), GenSymbol::plain(0)), v)]);
    let a1 = NCPoly::gen(GenSymbol::plain(0));
    (ModuleAlgebraData { algebra: a.rewrite().clone(), action: act(-&a1) }, h)
}

#[test]
fn flip_crossed_product_is_four_dimensional() {
    let (a, h) = flip();
    let cp = crossed_product_algebra(&a, &h).unwrap();
    let gens = cp.alphabet().generators(0);
    let mut normal = vec![crate::ncalg::Word::unit()];
    let mut frontier = normal.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let v = w.concat(&crate::ncalg::Word::single(*g));
                if cp.rewrite.is_normal(&v) {
                    next.push(v);
                }
            }
        }
        normal.extend(next.iter().cloned());
        frontier = next;
    }
    assert_eq!(normal.len(), 4);
    let basis_a = [NCPoly::one(), NCPoly::gen(crate::ncalg::GenSymbol::plain(0))];
    let basis_h = [NCPoly::one(), h.gen("s1", None).unwrap()];
    assert!(check_crossed_product_formula(&cp, &a, &h, &basis_a, &basis_h).unwrap().pass);
}

#[test]
fn non_multiplicative_action_is_rejected() {
    let (mut a, h) = flip();
    // s ▷ a = 2a breaks (s ▷ a)^2 = s ▷ 1
    let a1 = NCPoly::gen(crate::ncalg::GenSymbol::plain(0));
    a.action.insert((crate::ncalg::GenSymbol::plain(0), crate::ncalg::GenSymbol::plain(0)), a1.scale(&Scalar::int(2)));
    assert!(matches!(crossed_product_algebra(&a, &h), Err(crate::error::Error::NotModuleAlgebra(_))));
}

#[test]
fn crossed_product_coalgebras() {
    let h = FiniteHopf::group_algebra(&FiniteGroupData::cyclic(2, "g"));
    let triv = crossed_product_coalgebra(&ComoduleCoalgebraData::trivial(&h)).unwrap();
    assert_eq!(triv.coproduct, h.coproduct);
    let conj = ComoduleCoalgebraData::co_conjugation(&h).unwrap();
    let c = crossed_product_coalgebra(&conj).unwrap();
    assert_eq!(c.dim(), 4);
    assert!(c.check().pass());
    assert!((0..4).all(|i| c.counit[i] == &h.counit[i / 2] * &h.counit[i % 2]));
    let s3 = FiniteHopf::group_algebra(&FiniteGroupData::symmetric(3));
    let c = crossed_product_coalgebra(&ComoduleCoalgebraData::co_conjugation(&s3).unwrap()).unwrap();
    assert!(c.check().pass());
    let mut bad = ComoduleCoalgebraData::co_conjugation(&s3).unwrap();
    bad.coaction.swap(1, 2);
    assert!(crossed_product_coalgebra(&bad).is_err());
}
