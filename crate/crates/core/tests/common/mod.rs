#![allow(dead_code)]

use hopfcyc::builders::{basis_vec, FiniteCoalgebra, FiniteGroupData, FiniteHopf};
use hopfcyc::coeffs::{action_only, pair_module, FinCoefModule, FiniteAlgebra, GroupAlgebra, Side};
use hopfcyc::cocyclic::TypeC;
use hopfcyc::cohom::ExactMatrix;
use hopfcyc::{Character, HopfPresentation, ModularPair, NCPoly, Scalar, TensorElem};

pub fn z(order: usize) -> GroupAlgebra {
    GroupAlgebra::new(FiniteGroupData::cyclic(order, if order == 2 { "s" } else { "g" })).unwrap()
}

pub fn s3() -> GroupAlgebra {
    GroupAlgebra::new(FiniteGroupData::symmetric(3)).unwrap()
}

pub fn sign(kg: &GroupAlgebra) -> impl Fn(usize) -> Scalar + '_ {
    move |a| if kg.order_of(a).is_multiple_of(2) { Scalar::int(-1) } else { Scalar::one() }
}

pub fn h1_pair(h: &HopfPresentation) -> ModularPair {
    ModularPair::new(Character::from_named(h, &[("Y", None, Scalar::one())]).unwrap(), NCPoly::one())
}

/// `δ₁`, `δ₂ − ½δ₁²` and `X⊗Y − Y⊗X − δ₁Y⊗Y` with their levels.
pub fn h1_cocycles(h: &HopfPresentation) -> Vec<(&'static str, usize, TensorElem)> {
    let g = |n: &str, i: Option<u32>| h.gen(n, i).unwrap();
    let t = |ps: &[NCPoly]| h.normalize_tensor(&TensorElem::from_polys(ps)).unwrap();
    let (x, y, d1, d2) = (g("X", None), g("Y", None), g("delta", Some(1)), g("delta", Some(2)));
    let mut d2p = TensorElem::from_poly(&d2);
    d2p.add_scaled(&TensorElem::from_poly(&h.mul(&d1, &d1).unwrap()), &Scalar::ratio(-1, 2));
    let mut f = t(&[x.clone(), y.clone()]);
    f.add_scaled(&t(&[y.clone(), x]), &Scalar::int(-1));
    f.add_scaled(&t(&[h.mul(&d1, &y).unwrap(), y]), &Scalar::int(-1));
    vec![("δ₁", 1, TensorElem::from_poly(&d1)), ("δ₂ − ½δ₁²", 1, d2p), ("X⊗Y − Y⊗X − δ₁Y⊗Y", 2, f)]
}

/// `k[t]/(t² − 1)` with the generator of `kℤ/2` acting by `t ↦ −t`.
pub fn sign_algebra(z2: &GroupAlgebra) -> (FiniteAlgebra, FinCoefModule) {
    let a = FiniteAlgebra {
        labels: vec!["1".into(), "t".into()],
        unit: basis_vec(0),
        mult: vec![vec![basis_vec(0), basis_vec(1)], vec![basis_vec(1), basis_vec(0)]],
    };
    let s = z2.realization().generator(1).unwrap();
    let m = ExactMatrix::from_rows(vec![vec![Scalar::one(), Scalar::zero()], vec![Scalar::zero(), Scalar::int(-1)]]);
    (a, action_only(2, Side::Left, [(s, m)].into_iter().collect()).unwrap())
}

/// `kG` acting on itself by conjugation.
pub fn conjugation_algebra(kg: &GroupAlgebra) -> (FiniteAlgebra, FinCoefModule) {
    let g = kg.group();
    let n = g.order();
    let mut action = std::collections::BTreeMap::new();
    for x in g.elements() {
        let Some(sym) = kg.realization().generator(x) else { continue };
        let mut m = ExactMatrix::zeros(n, n);
        for y in g.elements() {
            m.set(g.mul(g.mul(x, y), g.inv(x)), y, Scalar::one());
        }
        action.insert(sym, m);
    }
    (FiniteAlgebra::from_hopf(kg.structure()), action_only(n, Side::Left, action).unwrap())
}

pub fn group_coalgebra(h: &FiniteHopf) -> FiniteCoalgebra {
    FiniteCoalgebra { labels: h.labels.clone(), coproduct: h.coproduct.clone(), counit: h.counit.clone() }
}

/// Type C with `C = kG` under left multiplication and `M = ^σk_δ`.
pub fn type_c_regular<'a>(kg: &'a GroupAlgebra, pair: &ModularPair) -> TypeC<'a> {
    let c = group_coalgebra(kg.structure());
    let act = action_only(kg.group().order(), Side::Left, kg.left_regular()).unwrap();
    TypeC::new(kg.h(), c, act, pair_module(kg.h(), pair).unwrap()).unwrap()
}
