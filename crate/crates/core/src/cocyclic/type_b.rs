use std::collections::HashMap;

use crate::builders::FINITE_MAX_LEN;
use crate::cocyclic::finite::{eval_functional, unit, FiniteLevels, LevelSpace, MultiIndex};
use crate::cocyclic::Family;
use crate::coeffs::{check_comodule_algebra, check_sayd, FinCoefModule, FiniteAlgebra, Side, PROBE_BOUND};
use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::hopf::HopfPresentation;
use crate::ncalg::{NCPoly, Word};
use crate::scalar::Scalar;

/// Right `H`-colinear maps `B^{⊗(n+1)} → M` for a right comodule algebra `B`
/// and a right-right SAYD module `M`. `H` must be finite-dimensional so that
/// colinearity is a finite linear system.
#[derive(Debug)]
pub struct TypeB<'a> {
    h: &'a HopfPresentation,
    algebra: FiniteAlgebra,
    coaction: FinCoefModule,
    m: FinCoefModule,
    words: HashMap<Word, usize>,
}

impl<'a> TypeB<'a> {
    pub fn new(h: &'a HopfPresentation, algebra: FiniteAlgebra, coaction: FinCoefModule, m: FinCoefModule) -> Result<Self> {
        if coaction.coaction_side() != Side::Right {
            return Err(Error::WrongSides("type B needs a right coaction on the algebra".into()));
        }
        if (m.action_side(), m.coaction_side()) != (Side::Right, Side::Right) {
            return Err(Error::WrongSides("type B needs right-right coefficients".into()));
        }
        algebra.validate()?;
        let cert = check_comodule_algebra(h, &algebra, &coaction)?;
        if !cert.pass {
            return Err(Error::CertMismatch(format!("not a comodule algebra: {}", cert.witness.unwrap_or_default())));
        }
        check_sayd(h, &m, PROBE_BOUND)?;
        let words = h.finite_basis(FINITE_MAX_LEN)?.into_iter().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(TypeB { h, algebra, coaction, m, words })
    }

    /// Maps `b0 … bn` to a vector in `M`: algebra digits first, then `M`.
    pub fn radix(&self, n: usize) -> MultiIndex {
        let mut dims = vec![self.algebra.dim(); n + 1];
        dims.push(self.m.dim());
        MultiIndex::new(dims)
    }

    fn h_coords(&self, p: &NCPoly) -> Result<Vec<(usize, Scalar)>> {
        self.h
            .normalize(p)?
            .terms()
            .map(|(w, c)| {
                self.words
                    .get(w)
                    .map(|&i| (i, c.clone()))
                    .ok_or_else(|| Error::Invalid(format!("{} is not a basis word", self.h.show_word(w))))
            })
            .collect()
    }

    /// `f(b0, …, bn)` as a vector in `M`, the arguments being algebra vectors.
    fn value(&self, f: &[Scalar], n: usize, args: &[Vec<Scalar>]) -> Vec<Scalar> {
        let radix = self.radix(n);
        (0..self.m.dim())
            .map(|k| {
                let mut slots = args.to_vec();
                slots.push(unit(self.m.dim(), k));
                eval_functional(f, &radix, &slots)
            })
            .collect()
    }

    fn tabulate(&self, n: usize, mut value: impl FnMut(&[usize]) -> Result<Vec<Scalar>>) -> Result<Vec<Scalar>> {
        let dm = self.m.dim();
        let outer = MultiIndex::new(vec![self.algebra.dim(); n + 1]);
        let mut out = Vec::with_capacity(outer.total() * dm);
        for t in outer.tuples() {
            let v = value(&t)?;
            out.extend(v);
        }
        Ok(out)
    }

    /// `Σ_j (b_j, R(c_ij))` for the coaction `b_i ↦ Σ_j b_j ⊗ c_ij`, with `R`
    /// the right action on `M`.
    fn coaction_terms(&self, i: usize) -> Result<Vec<(usize, ExactMatrix)>> {
        let mut out = Vec::new();
        for (j, c) in self.coaction.coaction_table()[i].iter().enumerate() {
            if !c.is_zero() {
                out.push((j, self.m.matrix(self.h, c)?));
            }
        }
        Ok(out)
    }
}

impl FiniteLevels for TypeB<'_> {
    fn level_family(&self) -> Family {
        Family::TypeB
    }

    fn ambient_dim(&self, n: usize) -> Result<usize> {
        Ok(self.radix(n).total())
    }

    /// Solutions of `ρ(f(b̃)) = f(b̃(0)) ⊗ b0(1)⋯bn(1)`.
    fn level_space(&self, n: usize) -> Result<LevelSpace> {
        let radix = self.radix(n);
        let total = radix.total();
        let (db, dm, dh) = (self.algebra.dim(), self.m.dim(), self.words.len());
        let outer = MultiIndex::new(vec![db; n + 1]);
        let table = self.coaction.coaction_table();
        let mtable = self.m.coaction_table();
        let mut mcoords = vec![vec![Vec::new(); dm]; dm];
        for l in 0..dm {
            for k in 0..dm {
                mcoords[l][k] = self.h_coords(&mtable[l][k])?;
            }
        }
        let mut rows = Vec::new();
        for it in outer.tuples() {
            // (j̃, Π c_{i_s j_s}) over the supports of the coaction rows
            let mut prods: Vec<(Vec<usize>, NCPoly)> = vec![(Vec::new(), NCPoly::one())];
            for &i in &it {
                let mut next = Vec::new();
                for (d, p) in &prods {
                    for (j, c) in table[i].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let q = self.h.mul(p, c)?;
                        if q.is_zero() {
                            continue;
                        }
                        let mut d2 = d.clone();
                        d2.push(j);
                        next.push((d2, q));
                    }
                }
                prods = next;
            }
            let prods: Vec<(usize, Vec<(usize, Scalar)>)> =
                prods.into_iter().map(|(d, p)| Ok((outer.encode(&d), self.h_coords(&p)?))).collect::<Result<_>>()?;
            let base = outer.encode(&it);
            for k in 0..dm {
                let mut block = vec![vec![Scalar::zero(); total]; dh];
                for (l, row) in mcoords.iter().enumerate() {
                    for (w, c) in &row[k] {
                        let idx = base * dm + l;
                        block[*w][idx] = &block[*w][idx] + c;
                    }
                }
                for (j, coords) in &prods {
                    for (w, c) in coords {
                        let idx = j * dm + k;
                        block[*w][idx] = &block[*w][idx] - c;
                    }
                }
                rows.extend(block.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
            }
        }
        if rows.is_empty() {
            return Ok(LevelSpace::full(total));
        }
        LevelSpace::subspace(total, ExactMatrix::from_rows(rows).kernel())
    }

    fn ambient_face(&self, n: usize, i: usize, f: &[Scalar]) -> Result<Vec<Scalar>> {
        if i > n + 1 {
            return Err(Error::IndexOutOfRange { index: i, level: n });
        }
        let db = self.algebra.dim();
        let terms: Vec<Vec<(usize, ExactMatrix)>> =
            if i == n + 1 { (0..db).map(|b| self.coaction_terms(b)).collect::<Result<_>>()? } else { Vec::new() };
        self.tabulate(n + 1, |t| {
            let b = |s: usize| unit(db, t[s]);
            if i <= n {
                let mut args = Vec::new();
                for s in 0..=n + 1 {
                    if s == i {
                        args.push(self.algebra.mul_vec(&b(s), &b(s + 1)));
                    } else if s != i + 1 {
                        args.push(b(s));
                    }
                }
                return Ok(self.value(f, n, &args));
            }
            let mut acc = vec![Scalar::zero(); self.m.dim()];
            for (j, r) in &terms[t[n + 1]] {
                let mut args = vec![self.algebra.mul_vec(&unit(db, *j), &b(0))];
                args.extend((1..=n).map(b));
                for (a, x) in acc.iter_mut().zip(r.apply(&self.value(f, n, &args))) {
                    *a = &*a + &x;
                }
            }
            Ok(acc)
        })
    }

    fn ambient_degeneracy(&self, n: usize, i: usize, f: &[Scalar]) -> Result<Vec<Scalar>> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, level: n });
        }
        let db = self.algebra.dim();
        self.tabulate(n - 1, |t| {
            let mut args = Vec::new();
            for s in 0..n {
                args.push(unit(db, t[s]));
                if s == i {
                    args.push(self.algebra.unit_vec());
                }
            }
            Ok(self.value(f, n, &args))
        })
    }

    fn ambient_cyclic(&self, n: usize, f: &[Scalar]) -> Result<Vec<Scalar>> {
        let db = self.algebra.dim();
        let terms: Vec<Vec<(usize, ExactMatrix)>> = (0..db).map(|b| self.coaction_terms(b)).collect::<Result<_>>()?;
        self.tabulate(n, |t| {
            let mut acc = vec![Scalar::zero(); self.m.dim()];
            for (j, r) in &terms[t[n]] {
                let mut args = vec![unit(db, *j)];
                args.extend((0..n).map(|s| unit(db, t[s])));
                for (a, x) in acc.iter_mut().zip(r.apply(&self.value(f, n, &args))) {
                    *a = &*a + &x;
                }
            }
            Ok(acc)
        })
    }
}
