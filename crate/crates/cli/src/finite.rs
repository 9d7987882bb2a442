//! A finite-dimensional presentation seen through its normal-word basis:
//! structure constants and the standard modules built from them.

use std::collections::BTreeMap;

use hopfcyc::builders::{FiniteCoalgebra, FiniteHopf, FINITE_MAX_LEN};
use hopfcyc::coeffs::{action_only, coaction_only, FinCoefModule, FiniteAlgebra, Side};
use hopfcyc::cohom::ExactMatrix;
use hopfcyc::{Error, GenSymbol, HopfPresentation, NCPoly, Result, Scalar, Word};

pub struct FiniteView<'a> {
    h: &'a HopfPresentation,
    basis: Vec<Word>,
    index: BTreeMap<Word, usize>,
}

type Coords = BTreeMap<usize, Scalar>;

impl<'a> FiniteView<'a> {
    pub fn new(h: &'a HopfPresentation) -> Result<Self> {
        let basis = h.finite_basis(FINITE_MAX_LEN)?;
        let index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(FiniteView { h, basis, index })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn element(&self, i: usize) -> NCPoly {
        NCPoly::word(self.basis[i].clone())
    }

    pub fn coords(&self, p: &NCPoly) -> Result<Coords> {
        let mut out = Coords::new();
        for (w, c) in self.h.normalize(p)?.terms() {
            let i = self.index.get(w).ok_or_else(|| Error::Invalid(format!("{} is not a basis word", self.h.show_word(w))))?;
            out.insert(*i, c.clone());
        }
        Ok(out)
    }

    fn labels(&self) -> Vec<String> {
        self.basis.iter().map(|w| self.h.show_word(w)).collect()
    }

    fn pairs(&self, p: &NCPoly) -> Result<BTreeMap<(usize, usize), Scalar>> {
        let mut out = BTreeMap::new();
        for (legs, c) in self.h.coproduct(p)?.terms() {
            let i = self.index[&legs[0]];
            let j = self.index[&legs[1]];
            out.insert((i, j), c.clone());
        }
        Ok(out)
    }

    pub fn structure(&self) -> Result<FiniteHopf> {
        let n = self.dim();
        let mut mult = Vec::with_capacity(n);
        for i in 0..n {
            let row = (0..n).map(|j| self.coords(&self.h.mul(&self.element(i), &self.element(j))?)).collect::<Result<Vec<_>>>()?;
            mult.push(row);
        }
        Ok(FiniteHopf {
            labels: self.labels(),
            unit: self.coords(&NCPoly::one())?,
            mult,
            coproduct: (0..n).map(|i| self.pairs(&self.element(i))).collect::<Result<_>>()?,
            counit: (0..n).map(|i| self.h.counit(&self.element(i))).collect::<Result<_>>()?,
            antipode: (0..n).map(|i| self.coords(&self.h.antipode(&self.element(i))?)).collect::<Result<_>>()?,
        })
    }

    pub fn algebra(&self) -> Result<FiniteAlgebra> {
        Ok(FiniteAlgebra::from_hopf(&self.structure()?))
    }

    pub fn coalgebra(&self) -> Result<FiniteCoalgebra> {
        let s = self.structure()?;
        Ok(FiniteCoalgebra { labels: s.labels, coproduct: s.coproduct, counit: s.counit })
    }

    fn matrix_of(&self, f: impl Fn(&NCPoly) -> Result<NCPoly>) -> Result<ExactMatrix> {
        let n = self.dim();
        let mut m = ExactMatrix::zeros(n, n);
        for x in 0..n {
            for (y, c) in self.coords(&f(&self.element(x))?)? {
                m.set(y, x, c);
            }
        }
        Ok(m)
    }

    fn gens(&self) -> Vec<GenSymbol> {
        self.h.generators(0)
    }

    /// `g·b = gb`.
    pub fn left_regular(&self) -> Result<FinCoefModule> {
        let mut action = BTreeMap::new();
        for g in self.gens() {
            let gp = NCPoly::gen(g);
            action.insert(g, self.matrix_of(|b| self.h.mul(&gp, b))?);
        }
        action_only(self.dim(), Side::Left, action)
    }

    /// `g ▷ b = g(1) b S(g(2))`.
    pub fn adjoint(&self) -> Result<FinCoefModule> {
        let mut action = BTreeMap::new();
        for g in self.gens() {
            let delta = self.h.gen_coproduct(g)?;
            let m = self.matrix_of(|b| {
                let mut acc = NCPoly::zero();
                for (legs, c) in delta.terms() {
                    let s = self.h.antipode(&NCPoly::word(legs[1].clone()))?;
                    acc.add_scaled(&self.h.product(&[NCPoly::word(legs[0].clone()), b.clone(), s])?, c);
                }
                Ok(acc)
            })?;
            action.insert(g, m);
        }
        action_only(self.dim(), Side::Left, action)
    }

    /// `b_i ↦ Σ_j b_j ⊗ c_ij` with `Δ(b_i) = Σ b_j ⊗ c_ij`.
    pub fn coproduct_coaction(&self) -> Result<FinCoefModule> {
        let n = self.dim();
        let mut table = vec![vec![NCPoly::zero(); n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (legs, c) in self.h.coproduct(&self.element(i))?.terms() {
                let j = self.index[&legs[0]];
                row[j].add_scaled(&NCPoly::word(legs[1].clone()), c);
            }
        }
        coaction_only(n, Side::Right, table)
    }
}
