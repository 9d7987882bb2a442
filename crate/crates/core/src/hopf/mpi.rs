use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::character::Character;
use crate::hopf::ops::TwistedAntipode;
use crate::hopf::presentation::HopfPresentation;
use crate::ncalg::NCPoly;
use crate::scalar::Scalar;

/// A character and a grouplike element with `δ(σ) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPair {
    pub delta: Character,
    pub sigma: NCPoly,
}

impl ModularPair {
    pub fn new(delta: Character, sigma: NCPoly) -> Self {
        ModularPair { delta, sigma }
    }

    pub fn trivial(h: &HopfPresentation) -> Self {
        ModularPair { delta: Character::counit(h), sigma: NCPoly::one() }
    }

    /// Certifies `σ` grouplike. The inverse of a grouplike is its antipode.
    pub fn sigma_inverse(&self, h: &HopfPresentation) -> Result<NCPoly> {
        if !h.is_grouplike(&self.sigma)? {
            return Err(Error::NotGrouplike(h.show(&self.sigma)));
        }
        h.antipode(&self.sigma)
    }

    pub fn delta_of_sigma(&self, h: &HopfPresentation) -> Result<Scalar> {
        self.delta.eval(h, &self.sigma)
    }

    /// `Ad_σ(x) = σ x σ⁻¹`.
    pub fn ad_sigma(&self, h: &HopfPresentation, x: &NCPoly) -> Result<NCPoly> {
        let inv = self.sigma_inverse(h)?;
        h.product(&[self.sigma.clone(), x.clone(), inv])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MpiWitness {
    pub probe: String,
    pub twisted_square: String,
    pub conjugate: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MpiVerdict {
    /// `δ(σ) = 1`.
    pub modular: bool,
    /// `S̃_δ² = Ad_σ` on every probe.
    pub involutive: bool,
    pub probes_checked: usize,
    pub witness: Option<MpiWitness>,
}

impl MpiVerdict {
    pub fn pass(&self) -> bool {
        self.modular && self.involutive
    }
}

/// Checks `S̃_δ²(h) = σhσ⁻¹` on each probe. Both sides are algebra maps, so
/// agreement on a generating set settles it on the whole algebra.
pub fn check_mpi(h: &HopfPresentation, pair: &ModularPair, probes: &[NCPoly]) -> Result<MpiVerdict> {
    let modular = pair.delta_of_sigma(h)?.is_one();
    let tw = TwistedAntipode::new(h, &pair.delta);
    let mut witness = None;
    let mut checked = 0;
    for p in probes {
        checked += 1;
        let lhs = tw.apply(&tw.apply(p)?)?;
        let rhs = pair.ad_sigma(h, p)?;
        if lhs != rhs {
            witness = Some(MpiWitness { probe: h.show(p), twisted_square: h.show(&lhs), conjugate: h.show(&rhs) });
            break;
        }
    }
    Ok(MpiVerdict { modular, involutive: witness.is_none(), probes_checked: checked, witness })
}

/// Generators (indexed families up to `max_index`) as probes.
pub fn generator_probes(h: &HopfPresentation, max_index: u32) -> Vec<NCPoly> {
    h.generators(max_index).into_iter().map(NCPoly::gen).collect()
}
