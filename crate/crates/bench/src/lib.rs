//! Fixtures shared by the criterion benches.

use hopfcyc::builders::{build_cm_h1, FiniteGroupData};
use hopfcyc::coeffs::GroupAlgebra;
use hopfcyc::{Character, HopfPresentation, ModularPair, NCPoly, Scalar, TensorElem};

pub fn h1() -> HopfPresentation {
    build_cm_h1().expect("H1 builds")
}

/// `(δ, 1)` with `δ(Y) = 1`.
pub fn h1_pair(h: &HopfPresentation) -> ModularPair {
    ModularPair::new(Character::from_named(h, &[("Y", None, Scalar::one())]).expect("Y exists"), NCPoly::one())
}

/// `X⊗Y − Y⊗X − δ₁Y⊗Y`, normalized.
pub fn h1_f(h: &HopfPresentation) -> TensorElem {
    let g = |n: &str, i| h.gen(n, i).expect("generator");
    let (x, y, d1) = (g("X", None), g("Y", None), g("delta", Some(1)));
    let mut f = TensorElem::from_polys(&[x.clone(), y.clone()]);
    f.add_scaled(&TensorElem::from_polys(&[y.clone(), x]), &Scalar::int(-1));
    f.add_scaled(&TensorElem::from_polys(&[h.mul(&d1, &y).expect("product"), y]), &Scalar::int(-1));
    h.normalize_tensor(&f).expect("normal form")
}

pub fn cyclic(order: usize) -> GroupAlgebra {
    GroupAlgebra::new(FiniteGroupData::cyclic(order, "g")).expect("cyclic group")
}
