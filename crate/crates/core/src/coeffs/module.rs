use std::collections::BTreeMap;

use serde::Serialize;

use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::hopf::HopfPresentation;
use crate::ncalg::{GenSymbol, NCPoly, TensorElem, Word};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A finite-dimensional module and comodule over a presentation.
///
/// Vectors are columns. For a left action `h·v = L(h)v` with
/// `L(gh) = L(g)L(h)`; for a right action `v·h = R(h)v` with
/// `R(gh) = R(h)R(g)`. The coaction sends `v_i` to `Σ_j c_ij ⊗ v_j` (left)
/// or `Σ_j v_j ⊗ c_ij` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCoefModule {
    dim: usize,
    action_side: Side,
    coaction_side: Side,
    action: BTreeMap<GenSymbol, ExactMatrix>,
    coaction: Vec<Vec<NCPoly>>,
}

impl FinCoefModule {
    /// Unchecked; see [`FinCoefModule::validate`].
    pub fn new(
        dim: usize,
        action_side: Side,
        coaction_side: Side,
        action: BTreeMap<GenSymbol, ExactMatrix>,
        coaction: Vec<Vec<NCPoly>>,
    ) -> Result<Self> {
        if action.values().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::InvalidModule(format!("action matrices must be {dim}x{dim}")));
        }
        if coaction.len() != dim || coaction.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidModule(format!("coaction table must be {dim}x{dim}")));
        }
        Ok(FinCoefModule { dim, action_side, coaction_side, action, coaction })
    }

    /// `k` with the action of a character and the coaction of a grouplike.
    pub fn one_dim(values: &BTreeMap<GenSymbol, Scalar>, sigma: &NCPoly, action_side: Side, coaction_side: Side) -> Self {
        let action = values.iter().map(|(g, v)| (*g, ExactMatrix::from_rows(vec![vec![v.clone()]]))).collect();
        FinCoefModule { dim: 1, action_side, coaction_side, action, coaction: vec![vec![sigma.clone()]] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action_side(&self) -> Side {
        self.action_side
    }

    pub fn coaction_side(&self) -> Side {
        self.coaction_side
    }

    pub fn action_table(&self) -> &BTreeMap<GenSymbol, ExactMatrix> {
        &self.action
    }

    pub fn coaction_table(&self) -> &[Vec<NCPoly>] {
        &self.coaction
    }

    /// Matrix of a generator, derived families included.
    pub fn gen_matrix(&self, h: &HopfPresentation, g: GenSymbol) -> Result<ExactMatrix> {
        if let Some(m) = self.action.get(&g) {
            return Ok(m.clone());
        }
        if let Some(d) = h.derived().iter().find(|d| d.family == g.family && g.index > d.base) {
            let prev = self.gen_matrix(h, GenSymbol { family: g.family, index: g.index - 1 })?;
            let r = self.gen_matrix(h, d.raiser)?;
            // g = r·prev − prev·r in H
            let (a, b) = match self.action_side {
                Side::Left => (r.mul(&prev)?, prev.mul(&r)?),
                Side::Right => (prev.mul(&r)?, r.mul(&prev)?),
            };
            return Ok(a.sub(&b));
        }
        Err(Error::MissingTable { table: "module action", generator: h.alphabet().symbol_name(g) })
    }

    pub fn word_matrix(&self, h: &HopfPresentation, w: &Word) -> Result<ExactMatrix> {
        let mut acc = ExactMatrix::identity(self.dim);
        for &g in w.symbols() {
            let m = self.gen_matrix(h, g)?;
            acc = match self.action_side {
                Side::Left => acc.mul(&m)?,
                Side::Right => m.mul(&acc)?,
            };
        }
        Ok(acc)
    }

    pub fn matrix(&self, h: &HopfPresentation, p: &NCPoly) -> Result<ExactMatrix> {
        let mut acc = ExactMatrix::zeros(self.dim, self.dim);
        for (w, c) in p.terms() {
            acc = acc.add(&self.word_matrix(h, w)?.scale(c));
        }
        Ok(acc)
    }

    pub fn act(&self, h: &HopfPresentation, p: &NCPoly, v: &[Scalar]) -> Result<Vec<Scalar>> {
        Ok(self.matrix(h, p)?.apply(v))
    }

    /// `ρ(v)` as the `H`-coefficient of each basis vector.
    pub fn coact(&self, v: &[Scalar]) -> Vec<NCPoly> {
        let mut out = vec![NCPoly::zero(); self.dim];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, p) in self.coaction[i].iter().enumerate() {
                out[j].add_scaled(p, c);
            }
        }
        out
    }

    /// Action relations as matrix identities, coassociativity and counitality.
    pub fn validate(&self, h: &HopfPresentation, bound: u32) -> Result<()> {
        for rule in h.rewrite().rules() {
            for b in rule.instances(bound.max(1)) {
                let Some(lhs) = rule.lhs_word(&b) else { continue };
                let rhs = NCPoly::from_terms(rule.instantiate_rhs(&b)?.into_iter().map(|(c, w)| (w, c)));
                if self.word_matrix(h, &lhs)? != self.matrix(h, &rhs)? {
                    return Err(Error::InvalidModule(format!("action violates the relation on {}", h.show_word(&lhs))));
                }
            }
        }
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let mut want = TensorElem::zero(2);
                for k in 0..n {
                    let (a, b) = match self.coaction_side {
                        Side::Left => (&self.coaction[i][k], &self.coaction[k][j]),
                        Side::Right => (&self.coaction[k][j], &self.coaction[i][k]),
                    };
                    want.add_scaled(&TensorElem::from_polys(&[a.clone(), b.clone()]), &Scalar::one());
                }
                let got = h.coproduct(&self.coaction[i][j])?;
                if h.normalize_tensor(&want)? != got {
                    return Err(Error::InvalidModule(format!("coaction is not coassociative at ({i}, {j})")));
                }
                let e = h.counit(&self.coaction[i][j])?;
                let expect = if i == j { Scalar::one() } else { Scalar::zero() };
                if e != expect {
                    return Err(Error::InvalidModule(format!("coaction is not counital at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// The same data with the action moved to the other side through
    /// `S` (`inverse = false`) or `S⁻¹`.
    pub fn convert_action(&self, h: &HopfPresentation, inverse: bool) -> Result<Self> {
        let mut action = BTreeMap::new();
        for g in self.action.keys() {
            let s = if inverse { h.gen_antipode_inverse(*g)? } else { h.gen_antipode(*g)? };
            action.insert(*g, self.matrix(h, &s)?);
        }
        Ok(FinCoefModule { action_side: self.action_side.flip(), action, ..self.clone() })
    }

    /// The same data with the coaction moved to the other side through
    /// `S` or `S⁻¹` on its coefficients.
    pub fn convert_coaction(&self, h: &HopfPresentation, inverse: bool) -> Result<Self> {
        let mut coaction = self.coaction.clone();
        for row in coaction.iter_mut() {
            for p in row.iter_mut() {
                *p = if inverse { h.antipode_inverse(p)? } else { h.antipode(p)? };
            }
        }
        Ok(FinCoefModule { coaction_side: self.coaction_side.flip(), coaction, ..self.clone() })
    }

    /// `M ⊗ N` with `h(m⊗n) = h1 m ⊗ h2 n` and `ρ(m⊗n) = m(−1)n(−1) ⊗ m(0)⊗n(0)`,
    /// basis `m_i ⊗ n_j` indexed `i·dim N + j`. Both factors left-left.
    pub fn tensor(&self, other: &FinCoefModule, h: &HopfPresentation) -> Result<Self> {
        let sides = (Side::Left, Side::Left);
        if (self.action_side, self.coaction_side) != sides || (other.action_side, other.coaction_side) != sides {
            return Err(Error::SidesMismatch("tensor products are formed for left-left modules".into()));
        }
        let (m, n) = (self.dim, other.dim);
        let mut action = BTreeMap::new();
        for g in self.action.keys() {
            let mut acc = ExactMatrix::zeros(m * n, m * n);
            for (legs, c) in h.gen_coproduct(*g)?.terms() {
                let a = self.word_matrix(h, &legs[0])?;
                let b = other.word_matrix(h, &legs[1])?;
                acc = acc.add(&kron(&a, &b).scale(c));
            }
            action.insert(*g, acc);
        }
        let mut coaction = vec![vec![NCPoly::zero(); m * n]; m * n];
        for i in 0..m {
            for k in 0..n {
                for j in 0..m {
                    for l in 0..n {
                        coaction[i * n + k][j * n + l] = h.mul(&self.coaction[i][j], &other.coaction[k][l])?;
                    }
                }
            }
        }
        Ok(FinCoefModule { dim: m * n, action_side: Side::Left, coaction_side: Side::Left, action, coaction })
    }
}

pub fn kron(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let (ra, ca, rb, cb) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = ExactMatrix::zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            let x = a.entry(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    let y = b.entry(k, l);
                    if !y.is_zero() {
                        out.set(i * rb + k, j * cb + l, x * y);
                    }
                }
            }
        }
    }
    out
}
