//! Finite-dimensional algebras and coalgebras carrying a Hopf (co)action,
//! and the four symmetry checks.

use std::collections::BTreeMap;

use crate::builders::{basis_vec, Coords, FiniteCoalgebra, FiniteHopf};
use crate::coeffs::module::{FinCoefModule, Side};
use crate::coeffs::symmetry::{SymmetryCertificate, SymmetryKind};
use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::hopf::HopfPresentation;
use crate::ncalg::{GenSymbol, NCPoly, TensorElem, Word};
use crate::scalar::Scalar;

/// A finite-dimensional unital algebra by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    pub labels: Vec<String>,
    pub unit: Coords,
    pub mult: Vec<Vec<Coords>>,
}

impl FiniteAlgebra {
    pub fn from_hopf(h: &FiniteHopf) -> Self {
        FiniteAlgebra { labels: h.labels.clone(), unit: h.unit.clone(), mult: h.mult.clone() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn unit_vec(&self) -> Vec<Scalar> {
        to_dense(&self.unit, self.dim())
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let c = x * y;
                for (k, v) in &self.mult[i][j] {
                    out[*k] = &out[*k] + &(v * &c);
                }
            }
        }
        out
    }

    /// Checks associativity and the unit on all basis triples.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let e = |i| to_dense(&basis_vec(i), n);
        for i in 0..n {
            let u = self.unit_vec();
            if self.mul_vec(&u, &e(i)) != e(i) || self.mul_vec(&e(i), &u) != e(i) {
                return Err(Error::Invalid(format!("unit fails on {}", self.labels[i])));
            }
            for j in 0..n {
                for k in 0..n {
                    let l = self.mul_vec(&self.mul_vec(&e(i), &e(j)), &e(k));
                    let r = self.mul_vec(&e(i), &self.mul_vec(&e(j), &e(k)));
                    if l != r {
                        return Err(Error::Invalid(format!(
                            "product is not associative on {}, {}, {}",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn to_dense(c: &Coords, n: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    for (i, x) in c {
        v[*i] = x.clone();
    }
    v
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// A module with no coaction data (the coaction table is the identity).
pub fn action_only(dim: usize, side: Side, action: BTreeMap<GenSymbol, ExactMatrix>) -> Result<FinCoefModule> {
    let coaction = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { NCPoly::one() } else { NCPoly::zero() }).collect())
        .collect();
    FinCoefModule::new(dim, side, Side::Left, action, coaction)
}

/// A comodule with no action.
pub fn coaction_only(dim: usize, side: Side, coaction: Vec<Vec<NCPoly>>) -> Result<FinCoefModule> {
    FinCoefModule::new(dim, Side::Left, side, BTreeMap::new(), coaction)
}

/// `g(ab) = g1(a)g2(b)` and `g(1) = ε(g)1` for generators `g`, all basis pairs.
pub fn check_module_algebra(
    h: &HopfPresentation,
    a: &FiniteAlgebra,
    act: &FinCoefModule,
    bound: u32,
) -> Result<SymmetryCertificate> {
    let mut cert = SymmetryCertificate::new(SymmetryKind::ModuleAlgebra);
    let n = a.dim();
    for g in h.generators(bound) {
        let gp = NCPoly::gen(g);
        let mg = act.matrix(h, &gp)?;
        let mut unit = a.unit_vec();
        let eps = h.gen_counit(g)?;
        unit.iter_mut().for_each(|x| *x = &*x * &eps);
        let got = mg.apply(&a.unit_vec());
        cert.record(got == unit, || format!("{} acting on 1", h.alphabet().symbol_name(g)));
        let cop: Vec<(Scalar, ExactMatrix, ExactMatrix)> = h
            .gen_coproduct(g)?
            .terms()
            .map(|(legs, c)| Ok((c.clone(), act.word_matrix(h, &legs[0])?, act.word_matrix(h, &legs[1])?)))
            .collect::<Result<_>>()?;
        for i in 0..n {
            for j in 0..n {
                let lhs = mg.apply(&a.mul_vec(&unit_vector(n, i), &unit_vector(n, j)));
                let mut rhs = vec![Scalar::zero(); n];
                for (c, l, r) in &cop {
                    let p = a.mul_vec(&l.col(i), &r.col(j));
                    for (k, v) in p.into_iter().enumerate() {
                        rhs[k] = &rhs[k] + &(&v * c);
                    }
                }
                cert.record(lhs == rhs, || {
                    format!("{} on {} * {}", h.alphabet().symbol_name(g), a.labels[i], a.labels[j])
                });
            }
        }
    }
    Ok(cert)
}

/// `ρ(ab) = ρ(a)ρ(b)` and `ρ(1) = 1 ⊗ 1` for a coaction on the algebra.
pub fn check_comodule_algebra(h: &HopfPresentation, a: &FiniteAlgebra, co: &FinCoefModule) -> Result<SymmetryCertificate> {
    let mut cert = SymmetryCertificate::new(SymmetryKind::ComoduleAlgebra);
    let n = a.dim();
    let rho1: Vec<NCPoly> = co.coact(&a.unit_vec()).into_iter().map(|p| h.normalize(&p)).collect::<Result<_>>()?;
    let want: Vec<NCPoly> = a.unit_vec().iter().map(|c| NCPoly::constant(c.clone())).collect();
    cert.record(rho1 == want, || "ρ(1) != 1 ⊗ 1".into());
    let table = co.coaction_table();
    for i in 0..n {
        for j in 0..n {
            let prod = a.mul_vec(&unit_vector(n, i), &unit_vector(n, j));
            let lhs: Vec<NCPoly> = co.coact(&prod).into_iter().map(|p| h.normalize(&p)).collect::<Result<_>>()?;
            let mut rhs = vec![NCPoly::zero(); n];
            for p in 0..n {
                for q in 0..n {
                    if table[i][p].is_zero() || table[j][q].is_zero() {
                        continue;
                    }
                    let c = match co.coaction_side() {
                        Side::Right => h.mul(&table[i][p], &table[j][q])?,
                        Side::Left => h.mul(&table[i][p], &table[j][q])?,
                    };
                    let ab = a.mul_vec(&unit_vector(n, p), &unit_vector(n, q));
                    for (l, v) in ab.into_iter().enumerate() {
                        rhs[l].add_scaled(&c, &v);
                    }
                }
            }
            cert.record(lhs == rhs, || format!("ρ({} * {})", a.labels[i], a.labels[j]));
        }
    }
    Ok(cert)
}

fn coproduct_vec(c: &FiniteCoalgebra, v: &[Scalar]) -> Vec<Scalar> {
    let n = c.dim();
    let mut out = vec![Scalar::zero(); n * n];
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for ((a, b), y) in &c.coproduct[i] {
            out[a * n + b] = &out[a * n + b] + &(x * y);
        }
    }
    out
}

/// `Δ(gc) = g1c1 ⊗ g2c2` and `ε(gc) = ε(g)ε(c)` on a coalgebra with a left action.
pub fn check_module_coalgebra(
    h: &HopfPresentation,
    c: &FiniteCoalgebra,
    act: &FinCoefModule,
    bound: u32,
) -> Result<SymmetryCertificate> {
    let mut cert = SymmetryCertificate::new(SymmetryKind::ModuleCoalgebra);
    let n = c.dim();
    for g in h.generators(bound) {
        let mg = act.matrix(h, &NCPoly::gen(g))?;
        let eps = h.gen_counit(g)?;
        let cop: Vec<(Scalar, ExactMatrix, ExactMatrix)> = h
            .gen_coproduct(g)?
            .terms()
            .map(|(legs, s)| Ok((s.clone(), act.word_matrix(h, &legs[0])?, act.word_matrix(h, &legs[1])?)))
            .collect::<Result<_>>()?;
        for i in 0..n {
            let gc = mg.col(i);
            let lhs = coproduct_vec(c, &gc);
            let mut rhs = vec![Scalar::zero(); n * n];
            for (s, l, r) in &cop {
                for ((a, b), y) in &c.coproduct[i] {
                    let la = l.col(*a);
                    let rb = r.col(*b);
                    for (p, x) in la.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        for (q, z) in rb.iter().enumerate() {
                            if !z.is_zero() {
                                rhs[p * n + q] = &rhs[p * n + q] + &(&(x * z) * &(s * y));
                            }
                        }
                    }
                }
            }
            cert.record(lhs == rhs, || format!("Δ({} {})", h.alphabet().symbol_name(g), c.labels[i]));
            let e = gc.iter().zip(&c.counit).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y));
            cert.record(e == &eps * &c.counit[i], || format!("ε({} {})", h.alphabet().symbol_name(g), c.labels[i]));
        }
    }
    Ok(cert)
}

/// `d(0)1 ⊗ d(0)2 ⊗ d(1) = d1(0) ⊗ d2(0) ⊗ d1(1)d2(1)` and
/// `ε(d(0))d(1) = ε(d)1` for a right coaction on a coalgebra.
pub fn check_comodule_coalgebra(h: &HopfPresentation, c: &FiniteCoalgebra, co: &FinCoefModule) -> Result<SymmetryCertificate> {
    let mut cert = SymmetryCertificate::new(SymmetryKind::ComoduleCoalgebra);
    if co.coaction_side() != Side::Right {
        return Err(Error::SidesMismatch("comodule coalgebras are taken with a right coaction".into()));
    }
    let n = c.dim();
    let table = co.coaction_table();
    for i in 0..n {
        let mut lhs = TensorElem::zero(3);
        for (k, p) in table[i].iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for ((a, b), y) in &c.coproduct[k] {
                lhs.add_scaled(&tagged(*a, *b, p), y);
            }
        }
        let mut rhs = TensorElem::zero(3);
        for ((d1, d2), y) in &c.coproduct[i] {
            for (a, p) in table[*d1].iter().enumerate() {
                for (b, r) in table[*d2].iter().enumerate() {
                    if p.is_zero() || r.is_zero() {
                        continue;
                    }
                    rhs.add_scaled(&tagged(a, b, &h.mul(p, r)?), y);
                }
            }
        }
        let lhs = normalize3(h, &lhs)?;
        let rhs = normalize3(h, &rhs)?;
        cert.record(lhs == rhs, || format!("coaction against Δ on {}", c.labels[i]));
        let mut eps = NCPoly::zero();
        for (k, p) in table[i].iter().enumerate() {
            eps.add_scaled(p, &c.counit[k]);
        }
        let eps = h.normalize(&eps)?;
        cert.record(eps == NCPoly::constant(c.counit[i].clone()), || format!("ε(d(0))d(1) on {}", c.labels[i]));
    }
    Ok(cert)
}

/// `e_a ⊗ e_b ⊗ p` encoded with the basis indices as length-one marker words
/// in the first two slots.
fn tagged(a: usize, b: usize, p: &NCPoly) -> TensorElem {
    let mark = |i: usize| Word::single(GenSymbol { family: u16::MAX, index: i as u32 });
    let mut t = TensorElem::zero(3);
    for (w, c) in p.terms() {
        t.add_term(vec![mark(a), mark(b), w.clone()], c.clone());
    }
    t
}

fn normalize3(h: &HopfPresentation, t: &TensorElem) -> Result<TensorElem> {
    let mut out = TensorElem::zero(3);
    for (k, c) in t.terms() {
        let p = h.normalize(&NCPoly::word(k[2].clone()))?;
        for (w, d) in p.terms() {
            out.add_term(vec![k[0].clone(), k[1].clone(), w.clone()], c * d);
        }
    }
    Ok(out)
}
