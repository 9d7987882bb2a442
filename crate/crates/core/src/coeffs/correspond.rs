use std::collections::BTreeMap;

use crate::coeffs::module::{FinCoefModule, Side};
use crate::coeffs::symmetry::{check_ayd, check_stability, check_yd, AntipodePower};
use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::hopf::{check_mpi, generator_probes, Character, HopfPresentation, ModularPair};
use crate::ncalg::NCPoly;

/// Index bound used when a presentation has indexed families.
pub const PROBE_BOUND: u32 = 3;

/// `^σk_δ`: the ground field with `r·h = δ(h)r` and `r ↦ σ ⊗ r`, right-left.
/// Fails unless the pair is a modular pair in involution.
pub fn mpi_to_sayd(h: &HopfPresentation, pair: &ModularPair) -> Result<FinCoefModule> {
    let verdict = check_mpi(h, pair, &generator_probes(h, PROBE_BOUND))?;
    if !verdict.modular {
        return Err(Error::NotModular(format!("δ(σ) = {}", pair.delta_of_sigma(h)?)));
    }
    if let Some(w) = verdict.witness {
        return Err(Error::NotInvolutive(format!("{}: {} vs {}", w.probe, w.twisted_square, w.conjugate)));
    }
    let m = pair_module(h, pair)?;
    for cert in [check_ayd(h, &m, AntipodePower::ayd(Side::Right, Side::Left), PROBE_BOUND)?, check_stability(h, &m)?] {
        if !cert.pass {
            return Err(Error::NotSayd(cert.witness.unwrap_or_default()));
        }
    }
    Ok(m)
}

/// The one-dimensional right-left module of a pair, without checks.
pub fn pair_module(h: &HopfPresentation, pair: &ModularPair) -> Result<FinCoefModule> {
    let sigma = h.normalize(&pair.sigma)?;
    Ok(FinCoefModule::one_dim(pair.delta.values(), &sigma, Side::Right, Side::Left))
}

/// Reads `(δ, σ)` back from a one-dimensional module.
pub fn extract_pair(m: &FinCoefModule) -> Result<ModularPair> {
    if m.dim() != 1 {
        return Err(Error::InvalidModule(format!("expected a one-dimensional module, got dimension {}", m.dim())));
    }
    let values: BTreeMap<_, _> = m.action_table().iter().map(|(g, mat)| (*g, mat.get(0, 0))).collect();
    Ok(ModularPair::new(Character::new(values), m.coaction_table()[0][0].clone()))
}

/// `M ⊗ N` for a Yetter–Drinfeld `M` and an anti-Yetter–Drinfeld `N`, both
/// left-left; the result is certified anti-Yetter–Drinfeld.
pub fn tensor_yd_ayd(h: &HopfPresentation, m: &FinCoefModule, n: &FinCoefModule) -> Result<FinCoefModule> {
    let yd = check_yd(h, m, PROBE_BOUND)?;
    if !yd.pass {
        return Err(Error::CertMismatch(format!("first factor is not Yetter–Drinfeld: {}", yd.witness.unwrap_or_default())));
    }
    let power = AntipodePower::ayd(Side::Left, Side::Left);
    let ayd = check_ayd(h, n, power, PROBE_BOUND)?;
    if !ayd.pass {
        return Err(Error::CertMismatch(format!("second factor is not anti-Yetter–Drinfeld: {}", ayd.witness.unwrap_or_default())));
    }
    let t = m.tensor(n, h)?;
    let cert = check_ayd(h, &t, power, PROBE_BOUND)?;
    if !cert.pass {
        return Err(Error::CertMismatch(format!("tensor product is not anti-Yetter–Drinfeld: {}", cert.witness.unwrap_or_default())));
    }
    Ok(t)
}

/// Twists a right-left module: `m ◁ h = (m·h1) χ(h2)` and `ρ(m) = g m(−1) ⊗ m(0)`.
pub fn twist(h: &HopfPresentation, m: &FinCoefModule, chi: &Character, g: &NCPoly) -> Result<FinCoefModule> {
    if (m.action_side(), m.coaction_side()) != (Side::Right, Side::Left) {
        return Err(Error::SidesMismatch("twisting expects a right-left module".into()));
    }
    let mut action = BTreeMap::new();
    for gen in m.action_table().keys() {
        let mut acc = ExactMatrix::zeros(m.dim(), m.dim());
        for (legs, c) in h.gen_coproduct(*gen)?.terms() {
            let v = chi.eval_word(h, &legs[1])?;
            if v.is_zero() {
                continue;
            }
            acc = acc.add(&m.word_matrix(h, &legs[0])?.scale(&(c * &v)));
        }
        action.insert(*gen, acc);
    }
    let coaction = m
        .coaction_table()
        .iter()
        .map(|row| row.iter().map(|p| h.mul(g, p)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    FinCoefModule::new(m.dim(), Side::Right, Side::Left, action, coaction)
}

/// Anti-Yetter–Drinfeld to Yetter–Drinfeld through a modular pair in
/// involution: `m·h = m h1 δ(S(h2))` and `ρ(m) = σ⁻¹ m(−1) ⊗ m(0)`.
pub fn staic_transform(h: &HopfPresentation, pair: &ModularPair, m: &FinCoefModule) -> Result<FinCoefModule> {
    let verdict = check_mpi(h, pair, &generator_probes(h, PROBE_BOUND))?;
    if !verdict.pass() {
        return Err(Error::NotInvolutive(format!("{} is not a modular pair in involution", h.show(&pair.sigma))));
    }
    let chi = pair.delta.compose_antipode(h, PROBE_BOUND)?;
    let out = twist(h, m, &chi, &pair.sigma_inverse(h)?)?;
    let cert = check_yd(h, &out, PROBE_BOUND)?;
    if !cert.pass {
        return Err(Error::CertMismatch(format!("transform is not Yetter–Drinfeld: {}", cert.witness.unwrap_or_default())));
    }
    Ok(out)
}

/// Undoes [`staic_transform`]: twist by `δ` and multiply the coaction by `σ`.
pub fn staic_inverse(h: &HopfPresentation, pair: &ModularPair, m: &FinCoefModule) -> Result<FinCoefModule> {
    twist(h, m, &pair.delta, &pair.sigma)
}
