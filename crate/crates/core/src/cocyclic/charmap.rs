use crate::cocyclic::cm::CmModule;
use crate::cocyclic::finite::{unit, MultiIndex};
use crate::coeffs::{FinCoefModule, FiniteAlgebra, PROBE_BOUND};
use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::hopf::{HopfPresentation, ModularPair, TwistedAntipode};
use crate::ncalg::NCPoly;
use crate::report::CheckLine;
use crate::scalar::Scalar;

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { &acc + &(x * y) })
}

/// The conditions on a trace `τ` of an `H`-module algebra, checked on
/// generators of `H` and basis elements of the algebra.
#[derive(Clone, Debug)]
pub struct TraceVerdict {
    /// `τ(h(a)) = δ(h)τ(a)`.
    pub invariance: CheckLine,
    /// `τ(ab) = τ(bσ(a))`.
    pub sigma_trace: CheckLine,
    /// `τ(h(a)b) = τ(a S̃_δ(h)(b))`.
    pub ibp: CheckLine,
    /// Invariance and integration by parts agree, as they must.
    pub lemma_consistent: bool,
}

impl TraceVerdict {
    pub fn admissible(&self) -> bool {
        self.invariance.pass && self.sigma_trace.pass
    }
}

pub fn check_trace(
    h: &HopfPresentation,
    algebra: &FiniteAlgebra,
    action: &FinCoefModule,
    trace: &[Scalar],
    pair: &ModularPair,
) -> Result<TraceVerdict> {
    let d = algebra.dim();
    if trace.len() != d {
        return Err(Error::DegreeMismatch { expected: d, got: trace.len() });
    }
    let st = TwistedAntipode::new(h, &pair.delta);
    let sigma = action.matrix(h, &pair.sigma)?;
    let mut invariance = CheckLine::new("τ(h(a)) = δ(h)τ(a)");
    let mut sigma_trace = CheckLine::new("τ(ab) = τ(bσ(a))");
    let mut ibp = CheckLine::new("τ(h(a)b) = τ(a S̃(h)(b))");
    for a in 0..d {
        for b in 0..d {
            let l = dot(trace, &algebra.mul_vec(&unit(d, a), &unit(d, b)));
            let r = dot(trace, &algebra.mul_vec(&unit(d, b), &sigma.col(a)));
            sigma_trace.record(l == r, || format!("{}, {}", algebra.labels[a], algebra.labels[b]));
        }
    }
    for g in h.generators(PROBE_BOUND) {
        let hg = action.gen_matrix(h, g)?;
        let sg = action.matrix(h, &st.apply(&NCPoly::gen(g))?)?;
        let dg = pair.delta.gen_value(h, g)?;
        let name = h.show(&NCPoly::gen(g));
        for a in 0..d {
            let l = dot(trace, &hg.col(a));
            invariance.record(l == &dg * &trace[a], || format!("h = {name}, a = {}", algebra.labels[a]));
            for b in 0..d {
                let l = dot(trace, &algebra.mul_vec(&hg.col(a), &unit(d, b)));
                let r = dot(trace, &algebra.mul_vec(&unit(d, a), &sg.col(b)));
                ibp.record(l == r, || format!("h = {name}, a = {}, b = {}", algebra.labels[a], algebra.labels[b]));
            }
        }
    }
    let lemma_consistent = invariance.pass == ibp.pass;
    Ok(TraceVerdict { invariance, sigma_trace, ibp, lemma_consistent })
}

/// `χ_τ(h1 ⊗ … ⊗ hn)(a0, …, an) = τ(a0 h1(a1) ⋯ hn(an))`, from the CM module
/// of `(H, δ, σ)` to the standard cocyclic module of the algebra.
#[derive(Debug)]
pub struct CharMap<'a> {
    h: &'a HopfPresentation,
    algebra: FiniteAlgebra,
    action: FinCoefModule,
    trace: Vec<Scalar>,
}

impl<'a> CharMap<'a> {
    /// Fails unless `τ` is a `δ`-invariant `σ`-trace.
    pub fn new(h: &'a HopfPresentation, algebra: FiniteAlgebra, action: FinCoefModule, trace: Vec<Scalar>, pair: &ModularPair) -> Result<Self> {
        let verdict = check_trace(h, &algebra, &action, &trace, pair)?;
        for line in [&verdict.invariance, &verdict.sigma_trace] {
            if !line.pass {
                return Err(Error::TraceNotInvariant(format!("{line}")));
            }
        }
        Ok(CharMap { h, algebra, action, trace })
    }

    /// `χ_τ` at levels `0..levels` as matrices from CM coordinates to
    /// functionals on `A^{⊗(n+1)}`.
    pub fn matrices(&self, cm: &CmModule<'_>, levels: usize) -> Result<Vec<ExactMatrix>> {
        let words = cm.basis_words()?;
        let mats: Vec<ExactMatrix> = words.iter().map(|w| self.action.word_matrix(self.h, w)).collect::<Result<_>>()?;
        let d = self.algebra.dim();
        let mut out = Vec::new();
        for n in 0..levels {
            let src = MultiIndex::new(vec![words.len(); n]);
            let dst = MultiIndex::new(vec![d; n + 1]);
            let mut m = ExactMatrix::zeros(dst.total(), src.total());
            for (col, ht) in src.tuples().enumerate() {
                for (row, at) in dst.tuples().enumerate() {
                    let mut acc = unit(d, at[0]);
                    for (s, &w) in ht.iter().enumerate() {
                        acc = self.algebra.mul_vec(&acc, &mats[w].col(at[s + 1]));
                    }
                    let v = dot(&self.trace, &acc);
                    if !v.is_zero() {
                        m.set(row, col, v);
                    }
                }
            }
            out.push(m);
        }
        Ok(out)
    }
}

/// `χ_τ(h̃)` at level `n` as a functional on `A^{⊗(n+1)}`.
pub fn char_map(chi: &CharMap<'_>, cm: &CmModule<'_>, n: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
    let m = chi.matrices(cm, n + 1)?.pop().ok_or(Error::IndexOutOfRange { index: 0, level: n })?;
    if v.len() != m.cols() {
        return Err(Error::DegreeMismatch { expected: m.cols(), got: v.len() });
    }
    Ok(m.apply(v))
}
