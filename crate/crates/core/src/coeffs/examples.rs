//! Coefficients over a realized group algebra `kG`.

use std::collections::BTreeMap;

use crate::builders::{certify, CertifyConfig, FiniteGroupData, FiniteHopf, FiniteRealization};
use crate::coeffs::module::{FinCoefModule, Side};
use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::hopf::{Character, HopfPresentation, ModularPair};
use crate::ncalg::NCPoly;
use crate::scalar::Scalar;

/// `kG` as a presentation, with the group kept alongside.
#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    group: FiniteGroupData,
    real: FiniteRealization,
    hopf: FiniteHopf,
}

impl GroupAlgebra {
    pub fn new(group: FiniteGroupData) -> Result<Self> {
        let hopf = FiniteHopf::group_algebra(&group);
        let real = hopf.realize(&format!("kG{}", group.order()))?;
        certify(&real.presentation, &CertifyConfig::finite())?;
        Ok(GroupAlgebra { group, real, hopf })
    }

    pub fn h(&self) -> &HopfPresentation {
        &self.real.presentation
    }

    pub fn group(&self) -> &FiniteGroupData {
        &self.group
    }

    pub fn realization(&self) -> &FiniteRealization {
        &self.real
    }

    pub fn structure(&self) -> &FiniteHopf {
        &self.hopf
    }

    pub fn element(&self, a: usize) -> NCPoly {
        self.real.embed[a].clone()
    }

    /// Smallest `n ≥ 1` with `a^n = e`.
    pub fn order_of(&self, a: usize) -> usize {
        let (mut x, mut n) = (a, 1);
        while x != self.group.identity() {
            x = self.group.mul(x, a);
            n += 1;
        }
        n
    }

    /// A character from its values on group elements; multiplicativity is checked.
    pub fn character(&self, f: impl Fn(usize) -> Scalar) -> Result<Character> {
        let g = &self.group;
        for a in g.elements() {
            for b in g.elements() {
                if f(g.mul(a, b)) != &f(a) * &f(b) {
                    return Err(Error::InvalidCharacter(format!("not multiplicative on {}, {}", g.label(a), g.label(b))));
                }
            }
        }
        let values = g.elements().filter_map(|a| self.real.generator(a).map(|s| (s, f(a)))).collect();
        Ok(Character::new(values))
    }

    pub fn pair(&self, delta: impl Fn(usize) -> Scalar, sigma: usize) -> Result<ModularPair> {
        Ok(ModularPair::new(self.character(delta)?, self.element(sigma)))
    }

    /// The left-left module on `points` with `g·v_x = χ(g) v_{g·x}` and
    /// `ρ(v_x) = deg(x) ⊗ v_x`. No condition is checked here.
    pub fn graded_module(
        &self,
        points: usize,
        act: impl Fn(usize, usize) -> usize,
        deg: impl Fn(usize) -> usize,
        chi: impl Fn(usize) -> Scalar,
    ) -> Result<FinCoefModule> {
        let mut action = BTreeMap::new();
        for a in self.group.elements() {
            let Some(s) = self.real.generator(a) else { continue };
            let mut m = ExactMatrix::zeros(points, points);
            for x in 0..points {
                let y = act(a, x);
                if y >= points {
                    return Err(Error::InvalidModule(format!("point {y} out of range")));
                }
                m.set(y, x, chi(a));
            }
            action.insert(s, m);
        }
        let coaction = (0..points)
            .map(|x| (0..points).map(|y| if x == y { self.element(deg(x)) } else { NCPoly::zero() }).collect())
            .collect();
        FinCoefModule::new(points, Side::Left, Side::Left, action, coaction)
    }

    /// `kG` with left multiplication and `deg(x) = x c x⁻¹`.
    pub fn regular_graded(&self, c: usize, chi: impl Fn(usize) -> Scalar) -> Result<FinCoefModule> {
        let g = &self.group;
        self.graded_module(g.order(), |a, x| g.mul(a, x), |x| g.mul(g.mul(x, c), g.inv(x)), chi)
    }

    /// A conjugacy class under conjugation, graded by inclusion.
    pub fn conjugation_module(&self, class: &[usize], chi: impl Fn(usize) -> Scalar) -> Result<FinCoefModule> {
        let g = &self.group;
        let pos = |y: usize| class.iter().position(|&z| z == y).unwrap_or(usize::MAX);
        self.graded_module(class.len(), |a, x| pos(g.mul(g.mul(a, class[x]), g.inv(a))), |x| class[x], chi)
    }

    /// Matrices of left multiplication on `kG` in the structure basis.
    pub fn left_regular(&self) -> BTreeMap<crate::ncalg::GenSymbol, ExactMatrix> {
        let g = &self.group;
        let n = g.order();
        let mut action = BTreeMap::new();
        for a in g.elements() {
            let Some(s) = self.real.generator(a) else { continue };
            let mut m = ExactMatrix::zeros(n, n);
            for x in 0..n {
                m.set(g.mul(a, x), x, Scalar::one());
            }
            action.insert(s, m);
        }
        action
    }
}
