use super::*;
use crate::builders::{basis_vec, build_cm_h1, build_ground, FiniteGroupData};
use crate::cocyclic::{hochschild_b, CmModule, CocyclicModule, MatrixCocyclic, TypeA};
use crate::coeffs::{action_only, FiniteAlgebra, GroupAlgebra, Side};
use crate::hopf::{Character, ModularPair};
use crate::ncalg::{NCPoly, TensorElem};
use crate::scalar::Scalar;

fn agree(m: &MatrixCocyclic, n: usize) -> (CohomologyReport, CohomologyReport) {
    let (a, b, line) = cohomology(m, n).unwrap();
    assert!(line.pass, "{line}");
    assert!(a.checks.pass(), "{}", a.checks);
    assert!(b.checks.pass(), "{}", b.checks);
    (a, b)
}

fn group_cm(order: usize) -> MatrixCocyclic {
    let kg = GroupAlgebra::new(FiniteGroupData::cyclic(order, "g")).unwrap();
    let cm = CmModule::new(kg.h(), &ModularPair::trivial(kg.h())).unwrap();
    MatrixCocyclic::materialize(&cm, 5).unwrap()
}

#[test]
fn ground_field_pattern() {
    let h = build_ground().unwrap();
    let cm = CmModule::new(&h, &ModularPair::trivial(&h)).unwrap();
    let m = MatrixCocyclic::materialize(&cm, 5).unwrap();
    let (a, b) = agree(&m, 3);
    assert_eq!(a.cyclic_dims(), vec![1, 0, 1, 0]);
    assert_eq!(b.cyclic_dims(), vec![1, 0, 1, 0]);
    assert_eq!(a.degrees.iter().map(|d| d.hochschild.unwrap()).collect::<Vec<_>>(), vec![1, 0, 0, 0]);
    assert!(a.excluded.is_empty());
}

#[test]
fn group_algebras_agree() {
    for order in [2, 3] {
        let m = group_cm(order);
        let (a, _) = agree(&m, 3);
        // HC⁰ is spanned by the unit
        assert_eq!(a.degrees[0].cyclic, 1);
    }
}

#[test]
fn twisted_sign_algebra_agrees() {
    let z2 = GroupAlgebra::new(FiniteGroupData::cyclic(2, "s")).unwrap();
    let a = FiniteAlgebra {
        labels: vec!["1".into(), "t".into()],
        unit: basis_vec(0),
        mult: vec![vec![basis_vec(0), basis_vec(1)], vec![basis_vec(1), basis_vec(0)]],
    };
    let s = z2.realization().generator(1).unwrap();
    let flip = crate::cohom::ExactMatrix::from_rows(vec![vec![Scalar::one(), Scalar::zero()], vec![Scalar::zero(), Scalar::int(-1)]]);
    let act = action_only(2, Side::Left, [(s, flip)].into_iter().collect()).unwrap();
    let inst = TypeA::twisted(z2.h(), a, act, &z2.element(1)).unwrap();
    let m = MatrixCocyclic::materialize(&inst, 5).unwrap();
    agree(&m, 3);
}

#[test]
fn generic_ranks_over_the_function_field_list_exclusions() {
    // k[t]/(t² − q)
    let q = Scalar::q();
    let mut tt = crate::builders::Coords::new();
    tt.insert(0, q);
    let a = FiniteAlgebra {
        labels: vec!["1".into(), "t".into()],
        unit: basis_vec(0),
        mult: vec![vec![basis_vec(0), basis_vec(1)], vec![basis_vec(1), tt]],
    };
    let inst = TypeA::plain(a).unwrap();
    let m = MatrixCocyclic::materialize(&inst, 4).unwrap();
    let (a, _) = agree(&m, 2);
    assert!(a.excluded.iter().any(|p| p == "q"), "{:?}", a.excluded);
}

#[test]
fn corrupted_operator_is_reported() {
    let mut m = group_cm(2);
    let d = m.dim(2);
    m.set_cyclic(2, crate::cohom::ExactMatrix::identity(d).scale(&Scalar::int(-1))).unwrap();
    let (a, b, line) = cohomology(&m, 3).unwrap();
    assert!(!line.pass || !a.checks.pass() || !b.checks.pass());
    assert!(!line.pass, "λ: {:?}, bicomplex: {:?}", a.cyclic_dims(), b.cyclic_dims());
}

#[test]
fn reports_are_deterministic() {
    let m = group_cm(3);
    assert_eq!(lambda_complex_hc(&m, 3).unwrap(), lambda_complex_hc(&m, 3).unwrap());
    assert_eq!(bicomplex_oracle_hc(&m, 3).unwrap(), bicomplex_oracle_hc(&m, 3).unwrap());
}

#[test]
fn too_few_levels_is_an_error() {
    let m = group_cm(2);
    assert!(lambda_complex_hc(&m, 5).is_err());
}

#[test]
fn h1_cocycles_certify() {
    let h = build_cm_h1().unwrap();
    let pair = ModularPair::new(Character::from_named(&h, &[("Y", None, Scalar::one())]).unwrap(), NCPoly::one());
    let cm = CmModule::new(&h, &pair).unwrap();
    let g = |n: &str, i: Option<u32>| h.gen(n, i).unwrap();
    let t = |ps: &[NCPoly]| h.normalize_tensor(&TensorElem::from_polys(ps)).unwrap();
    let (x, y, d1, d2) = (g("X", None), g("Y", None), g("delta", Some(1)), g("delta", Some(2)));
    let mut d2p = TensorElem::from_poly(&d2);
    d2p.add_scaled(&TensorElem::from_poly(&h.mul(&d1, &d1).unwrap()), &Scalar::ratio(-1, 2));
    let mut f = t(&[x.clone(), y.clone()]);
    f.add_scaled(&t(&[y.clone(), x.clone()]), &Scalar::int(-1));
    f.add_scaled(&t(&[h.mul(&d1, &y).unwrap(), y.clone()]), &Scalar::int(-1));
    for (n, c) in [(1, TensorElem::from_poly(&d1)), (1, d2p), (2, f.clone())] {
        let v = certify_cocycle(&cm, n, &c).unwrap();
        assert!(v.pass, "{}: {} / {}", cm.show(&c), cm.show(&v.b_residual), cm.show(&v.lambda_residual));
        assert!(certify_cocycle(&cm, n, &c.scale(&Scalar::int(-3))).unwrap().pass);
    }
    // F + b(Y − ½) stays a cyclic cocycle; Y − ½ is λ-invariant
    let mut yh = TensorElem::from_poly(&y);
    yh.add_scaled(&TensorElem::from_poly(&NCPoly::one()), &Scalar::ratio(-1, 2));
    assert!(certify_cocycle(&cm, 1, &yh).unwrap().lambda_residual.is_zero());
    let by = hochschild_b(&cm, 1, &yh).unwrap();
    assert!(!cm.is_zero(&by));
    let mut g2 = f.clone();
    g2.add_scaled(&by, &Scalar::one());
    assert!(certify_cocycle(&cm, 2, &g2).unwrap().pass);
    // X alone is not a cocycle, and the residual says so
    let v = certify_cocycle(&cm, 1, &TensorElem::from_poly(&x)).unwrap();
    assert!(!v.pass && !v.b_residual.is_zero());
}
