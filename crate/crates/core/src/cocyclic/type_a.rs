use std::borrow::Cow;

use crate::builders::build_ground;
use crate::cocyclic::finite::{eval_functional, unit, FiniteLevels, LevelSpace, MultiIndex};
use crate::cocyclic::Family;
use crate::coeffs::{action_only, check_module_algebra, check_sayd, FinCoefModule, FiniteAlgebra, Side, PROBE_BOUND};
use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::hopf::HopfPresentation;
use crate::ncalg::NCPoly;
use crate::scalar::Scalar;

/// Equivariant cochains on a left module algebra `A` with coefficients in a
/// left-right SAYD module `M`: functionals on `M ⊗ A^{⊗(n+1)}` invariant
/// under the diagonal left action.
#[derive(Debug)]
pub struct TypeA<'a> {
    h: Cow<'a, HopfPresentation>,
    algebra: FiniteAlgebra,
    action: FinCoefModule,
    m: FinCoefModule,
    family: Family,
}

impl<'a> TypeA<'a> {
    pub fn new(h: &'a HopfPresentation, algebra: FiniteAlgebra, action: FinCoefModule, m: FinCoefModule) -> Result<Self> {
        if action.action_side() != Side::Left {
            return Err(Error::WrongSides("type A needs a left action on the algebra".into()));
        }
        if (m.action_side(), m.coaction_side()) != (Side::Left, Side::Right) {
            return Err(Error::WrongSides("type A needs left-right coefficients".into()));
        }
        algebra.validate()?;
        let cert = check_module_algebra(h, &algebra, &action, PROBE_BOUND)?;
        if !cert.pass {
            return Err(Error::NotModuleAlgebra(cert.witness.unwrap_or_default()));
        }
        check_sayd(h, &m, PROBE_BOUND)?;
        Ok(TypeA { h: Cow::Borrowed(h), algebra, action, m, family: Family::TypeA })
    }

    /// `M = k` with trivial action and right coaction `1 ↦ 1 ⊗ σ`. With `σ`
    /// acting by an automorphism this is twisted cyclic cohomology.
    pub fn twisted(h: &'a HopfPresentation, algebra: FiniteAlgebra, action: FinCoefModule, sigma: &NCPoly) -> Result<Self> {
        let values = h.tables().counit.clone();
        let m = FinCoefModule::one_dim(&values, &h.normalize(sigma)?, Side::Left, Side::Right);
        let mut out = TypeA::new(h, algebra, action, m)?;
        out.family = Family::Twisted;
        Ok(out)
    }

    /// The standard cocyclic module of an algebra: `H = M = k`.
    pub fn plain(algebra: FiniteAlgebra) -> Result<TypeA<'static>> {
        let h = build_ground()?;
        let action = action_only(algebra.dim(), Side::Left, Default::default())?;
        let m = FinCoefModule::one_dim(&Default::default(), &NCPoly::one(), Side::Left, Side::Right);
        algebra.validate()?;
        Ok(TypeA { h: Cow::Owned(h), algebra, action, m, family: Family::PlainAlgebra })
    }

    pub fn presentation(&self) -> &HopfPresentation {
        &self.h
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn radix(&self, n: usize) -> MultiIndex {
        let mut dims = vec![self.m.dim()];
        dims.extend(std::iter::repeat_n(self.algebra.dim(), n + 1));
        MultiIndex::new(dims)
    }

    fn act(&self, p: &NCPoly) -> Result<ExactMatrix> {
        self.action.matrix(&self.h, p)
    }

    /// `Σ_j (m_j, S⁻¹(c_ij))` for the right coaction `m_i ↦ Σ_j m_j ⊗ c_ij`.
    fn coaction_terms(&self, i: usize) -> Result<Vec<(usize, ExactMatrix)>> {
        let mut out = Vec::new();
        for (j, c) in self.m.coaction_table()[i].iter().enumerate() {
            if !c.is_zero() {
                out.push((j, self.act(&self.h.antipode_inverse(c)?)?));
            }
        }
        Ok(out)
    }

    /// Builds a functional at level `n` from its values on basis tuples.
    fn tabulate(&self, n: usize, mut value: impl FnMut(&[usize]) -> Result<Scalar>) -> Result<Vec<Scalar>> {
        let radix = self.radix(n);
        radix.tuples().map(|t| value(&t)).collect()
    }
}

impl FiniteLevels for TypeA<'_> {
    fn level_family(&self) -> Family {
        self.family
    }

    fn ambient_dim(&self, n: usize) -> Result<usize> {
        Ok(self.radix(n).total())
    }

    /// Solutions of `f(g·(m ⊗ ã)) = ε(g) f(m ⊗ ã)` for every generator `g`.
    fn level_space(&self, n: usize) -> Result<LevelSpace> {
        let radix = self.radix(n);
        let total = radix.total();
        let mut rows = Vec::new();
        for g in self.h.generators(PROBE_BOUND) {
            let eps = self.h.gen_counit(g)?;
            let legs = self.h.legs(&crate::ncalg::Word::single(g), n + 2)?;
            let parts: Vec<(Scalar, Vec<ExactMatrix>)> = legs
                .terms()
                .map(|(k, c)| {
                    let mut mats = vec![self.m.word_matrix(&self.h, &k[0])?];
                    for w in &k[1..] {
                        mats.push(self.action.word_matrix(&self.h, w)?);
                    }
                    Ok((c.clone(), mats))
                })
                .collect::<Result<_>>()?;
            for t in radix.tuples() {
                let mut row = vec![Scalar::zero(); total];
                for (c, mats) in &parts {
                    let slots: Vec<Vec<Scalar>> = mats.iter().zip(&t).map(|(mat, &d)| mat.col(d)).collect();
                    let img = crate::cocyclic::finite::kron_vectors(&radix, &slots);
                    for (k, x) in img.into_iter().enumerate() {
                        if !x.is_zero() {
                            row[k] = &row[k] + &(&x * c);
                        }
                    }
                }
                let i = radix.encode(&t);
                row[i] = &row[i] - &eps;
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
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
        let src = self.radix(n);
        let (dm, da) = (self.m.dim(), self.algebra.dim());
        let terms: Vec<Vec<(usize, ExactMatrix)>> =
            if i == n + 1 { (0..dm).map(|m| self.coaction_terms(m)).collect::<Result<_>>()? } else { Vec::new() };
        self.tabulate(n + 1, |t| {
            let a = |s: usize| unit(da, t[1 + s]);
            if i <= n {
                let mut slots = vec![unit(dm, t[0])];
                for s in 0..=n + 1 {
                    if s == i {
                        slots.push(self.algebra.mul_vec(&a(s), &a(s + 1)));
                    } else if s != i + 1 {
                        slots.push(a(s));
                    }
                }
                return Ok(eval_functional(f, &src, &slots));
            }
            let mut acc = Scalar::zero();
            for (j, x) in &terms[t[0]] {
                let mut slots = vec![unit(dm, *j), self.algebra.mul_vec(&x.apply(&a(n + 1)), &a(0))];
                slots.extend((1..=n).map(a));
                acc = &acc + &eval_functional(f, &src, &slots);
            }
            Ok(acc)
        })
    }

    fn ambient_degeneracy(&self, n: usize, i: usize, f: &[Scalar]) -> Result<Vec<Scalar>> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, level: n });
        }
        let src = self.radix(n);
        let (dm, da) = (self.m.dim(), self.algebra.dim());
        self.tabulate(n - 1, |t| {
            let mut slots = vec![unit(dm, t[0])];
            for s in 0..n {
                slots.push(unit(da, t[1 + s]));
                if s == i {
                    slots.push(self.algebra.unit_vec());
                }
            }
            Ok(eval_functional(f, &src, &slots))
        })
    }

    fn ambient_cyclic(&self, n: usize, f: &[Scalar]) -> Result<Vec<Scalar>> {
        let src = self.radix(n);
        let (dm, da) = (self.m.dim(), self.algebra.dim());
        let terms: Vec<Vec<(usize, ExactMatrix)>> = (0..dm).map(|m| self.coaction_terms(m)).collect::<Result<_>>()?;
        self.tabulate(n, |t| {
            let mut acc = Scalar::zero();
            for (j, x) in &terms[t[0]] {
                let mut slots = vec![unit(dm, *j), x.apply(&unit(da, t[1 + n]))];
                slots.extend((0..n).map(|s| unit(da, t[1 + s])));
                acc = &acc + &eval_functional(f, &src, &slots);
            }
            Ok(acc)
        })
    }
}
