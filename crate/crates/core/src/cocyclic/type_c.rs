use crate::builders::FiniteCoalgebra;
use crate::cocyclic::finite::{kron_vectors, unit, FiniteLevels, LevelSpace, MultiIndex};
use crate::cocyclic::Family;
use crate::coeffs::{check_module_coalgebra, check_sayd, FinCoefModule, Side, PROBE_BOUND};
use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::hopf::HopfPresentation;
use crate::ncalg::Word;
use crate::scalar::Scalar;

/// `M ⊗_H C^{⊗(n+1)}` for a left module coalgebra `C` and a right-left SAYD
/// module `M`. Ambient coordinates are those of `M ⊗ C^{⊗(n+1)}`; each level
/// is its quotient by the span of `m·h ⊗ c̃ − m ⊗ h·c̃`.
#[derive(Debug)]
pub struct TypeC<'a> {
    h: &'a HopfPresentation,
    coalgebra: FiniteCoalgebra,
    action: FinCoefModule,
    m: FinCoefModule,
}

impl<'a> TypeC<'a> {
    pub fn new(h: &'a HopfPresentation, coalgebra: FiniteCoalgebra, action: FinCoefModule, m: FinCoefModule) -> Result<Self> {
        if action.action_side() != Side::Left {
            return Err(Error::WrongSides("type C needs a left action on the coalgebra".into()));
        }
        if (m.action_side(), m.coaction_side()) != (Side::Right, Side::Left) {
            return Err(Error::WrongSides("type C needs right-left coefficients".into()));
        }
        let report = coalgebra.check();
        if !report.pass() {
            return Err(Error::Invalid(format!("coalgebra axioms fail: {report}")));
        }
        let cert = check_module_coalgebra(h, &coalgebra, &action, PROBE_BOUND)?;
        if !cert.pass {
            return Err(Error::CertMismatch(format!("not a module coalgebra: {}", cert.witness.unwrap_or_default())));
        }
        check_sayd(h, &m, PROBE_BOUND)?;
        Ok(TypeC { h, coalgebra, action, m })
    }

    pub fn radix(&self, n: usize) -> MultiIndex {
        let mut dims = vec![self.m.dim()];
        dims.extend(std::iter::repeat_n(self.coalgebra.dim(), n + 1));
        MultiIndex::new(dims)
    }

    pub fn coalgebra(&self) -> &FiniteCoalgebra {
        &self.coalgebra
    }

    /// Spanning vectors of the `⊗_H` relations at level `n`.
    pub fn relations(&self, n: usize) -> Result<Vec<Vec<Scalar>>> {
        let radix = self.radix(n);
        let mut out = Vec::new();
        for g in self.h.generators(PROBE_BOUND) {
            let right = self.m.gen_matrix(self.h, g)?;
            let legs = self.h.legs(&Word::single(g), n + 1)?;
            let mats: Vec<(Scalar, Vec<ExactMatrix>)> = legs
                .terms()
                .map(|(k, c)| Ok((c.clone(), k.iter().map(|w| self.action.word_matrix(self.h, w)).collect::<Result<_>>()?)))
                .collect::<Result<_>>()?;
            for t in radix.tuples() {
                let cs: Vec<Vec<Scalar>> = t[1..].iter().map(|&c| unit(self.coalgebra.dim(), c)).collect();
                let mut slots = vec![right.col(t[0])];
                slots.extend(cs.iter().cloned());
                let mut v = kron_vectors(&radix, &slots);
                for (c, ms) in &mats {
                    let mut slots = vec![unit(self.m.dim(), t[0])];
                    slots.extend(ms.iter().zip(&cs).map(|(m, x)| m.apply(x)));
                    for (a, b) in v.iter_mut().zip(kron_vectors(&radix, &slots)) {
                        *a = &*a - &(&b * c);
                    }
                }
                if v.iter().any(|x| !x.is_zero()) {
                    out.push(v);
                }
            }
        }
        Ok(out)
    }

    fn coproduct_vec(&self, c: usize) -> Vec<(usize, usize, Scalar)> {
        self.coalgebra.coproduct[c].iter().map(|((a, b), x)| (*a, *b, x.clone())).collect()
    }

    /// `Σ_j (m_j, L(c_ij))` for the left coaction `m_i ↦ Σ_j c_ij ⊗ m_j`.
    fn coaction_terms(&self, i: usize) -> Result<Vec<(usize, ExactMatrix)>> {
        let mut out = Vec::new();
        for (j, c) in self.m.coaction_table()[i].iter().enumerate() {
            if !c.is_zero() {
                out.push((j, self.action.matrix(self.h, c)?));
            }
        }
        Ok(out)
    }

    /// Linear extension of an operator given on basis tuples.
    fn extend(&self, n: usize, target: usize, v: &[Scalar], mut op: impl FnMut(&[usize]) -> Result<Vec<Scalar>>) -> Result<Vec<Scalar>> {
        let radix = self.radix(n);
        let mut out = vec![Scalar::zero(); self.radix(target).total()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, b) in out.iter_mut().zip(op(&radix.decode(i))?) {
                if !b.is_zero() {
                    *a = &*a + &(&b * c);
                }
            }
        }
        Ok(out)
    }
}

impl FiniteLevels for TypeC<'_> {
    fn level_family(&self) -> Family {
        Family::TypeC
    }

    fn ambient_dim(&self, n: usize) -> Result<usize> {
        Ok(self.radix(n).total())
    }

    fn level_space(&self, n: usize) -> Result<LevelSpace> {
        LevelSpace::quotient(self.radix(n).total(), &self.relations(n)?)
    }

    fn ambient_face(&self, n: usize, i: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if i > n + 1 {
            return Err(Error::IndexOutOfRange { index: i, level: n });
        }
        let dc = self.coalgebra.dim();
        let dm = self.m.dim();
        let up = self.radix(n + 1);
        let terms: Vec<Vec<(usize, ExactMatrix)>> =
            if i == n + 1 { (0..dm).map(|m| self.coaction_terms(m)).collect::<Result<_>>()? } else { Vec::new() };
        self.extend(n, n + 1, v, |t| {
            let mut out = vec![Scalar::zero(); up.total()];
            let c = |s: usize| unit(dc, t[1 + s]);
            if i <= n {
                for (a, b, x) in self.coproduct_vec(t[1 + i]) {
                    let mut slots = vec![unit(dm, t[0])];
                    for s in 0..=n {
                        if s == i {
                            slots.push(unit(dc, a));
                            slots.push(unit(dc, b));
                        } else {
                            slots.push(c(s));
                        }
                    }
                    for (o, y) in out.iter_mut().zip(kron_vectors(&up, &slots)) {
                        *o = &*o + &(&y * &x);
                    }
                }
                return Ok(out);
            }
            // m(0) ⊗ c0(2) ⊗ c1 ⊗ … ⊗ cn ⊗ m(−1)c0(1)
            for (j, l) in &terms[t[0]] {
                for (a, b, x) in self.coproduct_vec(t[1]) {
                    let mut slots = vec![unit(dm, *j), unit(dc, b)];
                    slots.extend((1..=n).map(c));
                    slots.push(l.apply(&unit(dc, a)));
                    for (o, y) in out.iter_mut().zip(kron_vectors(&up, &slots)) {
                        *o = &*o + &(&y * &x);
                    }
                }
            }
            Ok(out)
        })
    }

    /// `σ_i`: the counit on `c_{i+1}`.
    fn ambient_degeneracy(&self, n: usize, i: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, level: n });
        }
        let dc = self.coalgebra.dim();
        let down = self.radix(n - 1);
        self.extend(n, n - 1, v, |t| {
            let e = self.coalgebra.counit[t[2 + i]].clone();
            let mut slots = vec![unit(self.m.dim(), t[0])];
            slots.extend(t[1..].iter().enumerate().filter(|(s, _)| *s != i + 1).map(|(_, &d)| unit(dc, d)));
            Ok(kron_vectors(&down, &slots).into_iter().map(|x| &x * &e).collect())
        })
    }

    /// `m(0) ⊗ c1 ⊗ … ⊗ cn ⊗ m(−1)c0`.
    fn ambient_cyclic(&self, n: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let dc = self.coalgebra.dim();
        let dm = self.m.dim();
        let radix = self.radix(n);
        let terms: Vec<Vec<(usize, ExactMatrix)>> = (0..dm).map(|m| self.coaction_terms(m)).collect::<Result<_>>()?;
        self.extend(n, n, v, |t| {
            let mut out = vec![Scalar::zero(); radix.total()];
            for (j, l) in &terms[t[0]] {
                let mut slots = vec![unit(dm, *j)];
                slots.extend((1..=n).map(|s| unit(dc, t[1 + s])));
                slots.push(l.apply(&unit(dc, t[1])));
                for (o, y) in out.iter_mut().zip(kron_vectors(&radix, &slots)) {
                    *o = &*o + &y;
                }
            }
            Ok(out)
        })
    }
}
