use serde::Serialize;

use crate::coeffs::module::{FinCoefModule, Side};
use crate::error::{Error, Result};
use crate::hopf::HopfPresentation;
use crate::ncalg::NCPoly;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SymmetryKind {
    ModuleAlgebra,
    ComoduleAlgebra,
    ModuleCoalgebra,
    ComoduleCoalgebra,
    Yd,
    Ayd,
    Stable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryCertificate {
    pub kind: SymmetryKind,
    pub pass: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

impl SymmetryCertificate {
    pub(crate) fn new(kind: SymmetryKind) -> Self {
        SymmetryCertificate { kind, pass: true, checked: 0, witness: None }
    }

    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.pass {
            self.pass = false;
            self.witness = Some(witness());
        }
    }
}

/// Which antipode power enters the compatibility condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AntipodePower {
    S,
    SInverse,
}

impl AntipodePower {
    fn apply(self, h: &HopfPresentation, p: &NCPoly) -> Result<NCPoly> {
        match self {
            AntipodePower::S => h.antipode(p),
            AntipodePower::SInverse => h.antipode_inverse(p),
        }
    }

    pub fn other(self) -> Self {
        match self {
            AntipodePower::S => AntipodePower::SInverse,
            AntipodePower::SInverse => AntipodePower::S,
        }
    }

    /// The power that makes the condition the Yetter–Drinfeld one for the given sides.
    pub fn yd(action: Side, coaction: Side) -> Self {
        match (action, coaction) {
            (Side::Left, Side::Left) | (Side::Right, Side::Right) => AntipodePower::S,
            _ => AntipodePower::SInverse,
        }
    }

    /// The anti-Yetter–Drinfeld power: the Yetter–Drinfeld one with `S` and `S⁻¹` exchanged.
    pub fn ayd(action: Side, coaction: Side) -> Self {
        AntipodePower::yd(action, coaction).other()
    }
}

fn show_vec(h: &HopfPresentation, v: &[NCPoly]) -> String {
    v.iter().enumerate().filter(|(_, p)| !p.is_zero()).map(|(j, p)| format!("({}) ox v{j}", h.show(p))).collect::<Vec<_>>().join(" + ")
}

/// The compatibility between action and coaction, with `power` in the
/// antipode slot. Writing `A` for that power, the sides give
///
/// - left-left `ρ(hm) = h1 m(−1) A(h3) ⊗ h2 m(0)`
/// - left-right `ρ(hm) = h2 m(0) ⊗ h3 m(1) A(h1)`
/// - right-left `ρ(mh) = A(h3) m(−1) h1 ⊗ m(0) h2`
/// - right-right `ρ(mh) = m(0) h2 ⊗ A(h1) m(1) h3`
///
/// Both sides are multiplicative in `h`, so generators (indexed families up
/// to `bound`) are enough.
pub fn check_compatibility(
    h: &HopfPresentation,
    m: &FinCoefModule,
    power: AntipodePower,
    kind: SymmetryKind,
    bound: u32,
) -> Result<SymmetryCertificate> {
    let mut cert = SymmetryCertificate::new(kind);
    let n = m.dim();
    for g in h.generators(bound) {
        let gp = NCPoly::gen(g);
        let lg = m.matrix(h, &gp)?;
        let d2 = h.legs(&crate::ncalg::Word::single(g), 3)?;
        let mut legs = Vec::new();
        for (ws, c) in d2.terms() {
            let a = NCPoly::word(ws[0].clone());
            let b = NCPoly::word(ws[1].clone());
            let d = NCPoly::word(ws[2].clone());
            let mb = m.matrix(h, &b)?;
            legs.push((c.clone(), a, mb, d));
        }
        for i in 0..n {
            let lhs: Vec<NCPoly> = {
                let mut out = vec![NCPoly::zero(); n];
                for k in 0..n {
                    let x = lg.entry(k, i);
                    if x.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        out[j].add_scaled(&m.coaction_table()[k][j], x);
                    }
                }
                out.into_iter().map(|p| h.normalize(&p)).collect::<Result<_>>()?
            };
            let mut rhs = vec![NCPoly::zero(); n];
            for (c, a, mb, d) in &legs {
                for j in 0..n {
                    let cij = &m.coaction_table()[i][j];
                    if cij.is_zero() {
                        continue;
                    }
                    let coeff = match (m.action_side(), m.coaction_side()) {
                        (Side::Left, Side::Left) => h.product(&[a.clone(), cij.clone(), power.apply(h, d)?])?,
                        (Side::Left, Side::Right) => h.product(&[d.clone(), cij.clone(), power.apply(h, a)?])?,
                        (Side::Right, Side::Left) => h.product(&[power.apply(h, d)?, cij.clone(), a.clone()])?,
                        (Side::Right, Side::Right) => h.product(&[power.apply(h, a)?, cij.clone(), d.clone()])?,
                    };
                    for k in 0..n {
                        let y = mb.entry(k, j);
                        if !y.is_zero() {
                            rhs[k].add_scaled(&coeff, &(y * c));
                        }
                    }
                }
            }
            let ok = lhs == rhs;
            cert.record(ok, || {
                format!(
                    "h = {}, m = v{i}: {} vs {}",
                    h.alphabet().symbol_name(g),
                    show_vec(h, &lhs),
                    show_vec(h, &rhs)
                )
            });
        }
    }
    Ok(cert)
}

/// Anti-Yetter–Drinfeld check with an explicit antipode power. Pass
/// [`AntipodePower::ayd`] for the convention obtained from Yetter–Drinfeld
/// by exchanging `S` and `S⁻¹`.
pub fn check_ayd(h: &HopfPresentation, m: &FinCoefModule, power: AntipodePower, bound: u32) -> Result<SymmetryCertificate> {
    check_compatibility(h, m, power, SymmetryKind::Ayd, bound)
}

pub fn check_yd(h: &HopfPresentation, m: &FinCoefModule, bound: u32) -> Result<SymmetryCertificate> {
    check_compatibility(h, m, AntipodePower::yd(m.action_side(), m.coaction_side()), SymmetryKind::Yd, bound)
}

/// `m(−1)m(0) = m` for a left coaction, `m(0)m(1) = m` for a right one,
/// with the coefficient acting from the action's side.
pub fn check_stability(h: &HopfPresentation, m: &FinCoefModule) -> Result<SymmetryCertificate> {
    let mut cert = SymmetryCertificate::new(SymmetryKind::Stable);
    let n = m.dim();
    for i in 0..n {
        let mut acc = vec![Scalar::zero(); n];
        for j in 0..n {
            let c = &m.coaction_table()[i][j];
            if c.is_zero() {
                continue;
            }
            let mut e = vec![Scalar::zero(); n];
            e[j] = Scalar::one();
            for (k, x) in m.act(h, c, &e)?.into_iter().enumerate() {
                acc[k] = &acc[k] + &x;
            }
        }
        let mut want = vec![Scalar::zero(); n];
        want[i] = Scalar::one();
        let ok = acc == want;
        cert.record(ok, || format!("v{i} goes to {}", acc.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(", ")));
    }
    Ok(cert)
}

/// Stable and anti-Yetter–Drinfeld under the default convention for its sides.
pub fn check_sayd(h: &HopfPresentation, m: &FinCoefModule, bound: u32) -> Result<()> {
    let ayd = check_ayd(h, m, AntipodePower::ayd(m.action_side(), m.coaction_side()), bound)?;
    let st = check_stability(h, m)?;
    for c in [ayd, st] {
        if !c.pass {
            return Err(Error::NotSayd(c.witness.unwrap_or_default()));
        }
    }
    Ok(())
}
