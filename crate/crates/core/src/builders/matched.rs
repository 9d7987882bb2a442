//! Matched pairs of finite-dimensional Hopf algebras and their bicrossed products.

use std::collections::BTreeMap;

use crate::builders::finite::{add_into, basis_vec, Coords, FiniteHopf};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse element of a two-fold tensor product in basis coordinates.
pub type Pair = BTreeMap<(usize, usize), Scalar>;

pub(crate) fn add_pair(acc: &mut Pair, k: (usize, usize), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(k).or_insert_with(Scalar::zero);
    *e = &*e + &c;
    if e.is_zero() {
        acc.remove(&k);
    }
}

/// `Σ a_i ⊗ b_j` from two coordinate vectors.
fn outer(a: &Coords, b: &Coords) -> Pair {
    let mut out = Pair::new();
    for (i, x) in a {
        for (j, y) in b {
            add_pair(&mut out, (*i, *j), x * y);
        }
    }
    out
}

fn show_pair(p: &Pair, left: &[String], right: &[String]) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter().map(|((i, j), c)| format!("{c}*{} ox {}", left[*i], right[*j])).collect::<Vec<_>>().join(" + ")
}

/// `U` acting on `F` from the left and coacting on itself from the right with
/// values in `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub u: FiniteHopf,
    pub f: FiniteHopf,
    /// `action[i][j] = u_i ▷ f_j`.
    pub action: Vec<Vec<Coords>>,
    /// `coaction[i] = ρ(u_i)` as `(U index, F index) -> coefficient`.
    pub coaction: Vec<Pair>,
}

impl MatchedPairData {
    /// Validates the module-algebra and comodule-coalgebra structures, then
    /// the five matched-pair conditions, each exhaustively on basis elements.
    pub fn new(u: FiniteHopf, f: FiniteHopf, action: Vec<Vec<Coords>>, coaction: Vec<Pair>) -> Result<Self> {
        if action.len() != u.dim() || action.iter().any(|r| r.len() != f.dim()) || coaction.len() != u.dim() {
            return Err(Error::Invalid("matched-pair tables have the wrong shape".into()));
        }
        let m = MatchedPairData { u, f, action, coaction };
        m.check_module_algebra().map_err(Error::NotModuleAlgebra)?;
        m.check_comodule_coalgebra().map_err(Error::NotComoduleCoalgebra)?;
        m.check_conditions()?;
        Ok(m)
    }

    pub fn act(&self, u: &Coords, f: &Coords) -> Coords {
        let mut out = Coords::new();
        for (i, x) in u {
            for (j, y) in f {
                add_into(&mut out, &self.action[*i][*j], &(x * y));
            }
        }
        out
    }

    pub fn coact(&self, u: &Coords) -> Pair {
        let mut out = Pair::new();
        for (i, x) in u {
            for (k, c) in &self.coaction[*i] {
                add_pair(&mut out, *k, c * x);
            }
        }
        out
    }

    fn check_module_algebra(&self) -> std::result::Result<(), String> {
        let (u, f) = (&self.u, &self.f);
        for i in 0..u.dim() {
            let ui = basis_vec(i);
            let unit = self.act(&ui, &f.unit);
            let mut want = f.unit.clone();
            want.iter_mut().for_each(|(_, c)| *c = &*c * &u.counit[i]);
            want.retain(|_, c| !c.is_zero());
            if unit != want {
                return Err(format!("{} ▷ 1 != ε({})1", u.labels[i], u.labels[i]));
            }
            for a in 0..f.dim() {
                for b in 0..f.dim() {
                    let lhs = self.act(&ui, &f.mult[a][b]);
                    let mut rhs = Coords::new();
                    for ((x1, x2), c) in &u.coproduct[i] {
                        let p = f.mul(&self.act(&basis_vec(*x1), &basis_vec(a)), &self.act(&basis_vec(*x2), &basis_vec(b)));
                        add_into(&mut rhs, &p, c);
                    }
                    if lhs != rhs {
                        return Err(format!("{} ▷ ({} {}) is not multiplicative", u.labels[i], f.labels[a], f.labels[b]));
                    }
                }
            }
        }
        for i in 0..u.dim() {
            for j in 0..u.dim() {
                for a in 0..f.dim() {
                    let lhs = self.act(&u.mult[i][j], &basis_vec(a));
                    let rhs = self.act(&basis_vec(i), &self.action[j][a]);
                    if lhs != rhs {
                        return Err(format!("({} {}) ▷ {} is not an action", u.labels[i], u.labels[j], f.labels[a]));
                    }
                }
            }
        }
        for a in 0..f.dim() {
            if self.act(&u.unit, &basis_vec(a)) != basis_vec(a) {
                return Err(format!("1 ▷ {} != {}", f.labels[a], f.labels[a]));
            }
        }
        Ok(())
    }

    fn check_comodule_coalgebra(&self) -> std::result::Result<(), String> {
        let (u, f) = (&self.u, &self.f);
        for i in 0..u.dim() {
            let rho = &self.coaction[i];
            // (ρ ⊗ id)ρ = (id ⊗ Δ)ρ
            let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for ((k, l), c) in rho {
                for ((k2, l2), c2) in &self.coaction[*k] {
                    let e = lhs.entry((*k2, *l2, *l)).or_insert_with(Scalar::zero);
                    *e = &*e + &(c * c2);
                }
                for ((l1, l2), c2) in &f.coproduct[*l] {
                    let e = rhs.entry((*k, *l1, *l2)).or_insert_with(Scalar::zero);
                    *e = &*e + &(c * c2);
                }
            }
            lhs.retain(|_, c| !c.is_zero());
            rhs.retain(|_, c| !c.is_zero());
            if lhs != rhs {
                return Err(format!("coaction is not coassociative on {}", u.labels[i]));
            }
            // (id ⊗ ε)ρ = id and ε(u(0)) u(1) = ε(u) 1
            let mut back = Coords::new();
            let mut eps = Coords::new();
            for ((k, l), c) in rho {
                add_into(&mut back, &basis_vec(*k), &(c * &f.counit[*l]));
                add_into(&mut eps, &basis_vec(*l), &(c * &u.counit[*k]));
            }
            if back != basis_vec(i) {
                return Err(format!("coaction is not counital on {}", u.labels[i]));
            }
            let mut want = f.unit.clone();
            want.iter_mut().for_each(|(_, c)| *c = &*c * &u.counit[i]);
            want.retain(|_, c| !c.is_zero());
            if eps != want {
                return Err(format!("ε(u(0))u(1) != ε(u)1 on {}", u.labels[i]));
            }
            // u(0)1 ⊗ u(0)2 ⊗ u(1) = u1(0) ⊗ u2(0) ⊗ u1(1) u2(1)
            let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for ((k, l), c) in rho {
                for ((k1, k2), c2) in &u.coproduct[*k] {
                    let e = lhs.entry((*k1, *k2, *l)).or_insert_with(Scalar::zero);
                    *e = &*e + &(c * c2);
                }
            }
            let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for ((x1, x2), c) in &u.coproduct[i] {
                for ((a, la), ca) in &self.coaction[*x1] {
                    for ((b, lb), cb) in &self.coaction[*x2] {
                        for (l, cl) in &f.mult[*la][*lb] {
                            let e = rhs.entry((*a, *b, *l)).or_insert_with(Scalar::zero);
                            *e = &*e + &(&(c * ca) * &(cb * cl));
                        }
                    }
                }
            }
            lhs.retain(|_, c| !c.is_zero());
            rhs.retain(|_, c| !c.is_zero());
            if lhs != rhs {
                return Err(format!("coaction does not respect the coproduct on {}", u.labels[i]));
            }
        }
        Ok(())
    }

    /// The five compatibility conditions, numbered as
    /// 1. `ε(u▷f) = ε(u)ε(f)`
    /// 2. `Δ(u▷f) = u1(0)▷f1 ⊗ u1(1)(u2▷f2)`
    /// 3. `ρ(1) = 1⊗1`
    /// 4. `ρ(uv) = u1(0)v(0) ⊗ u1(1)(u2▷v(1))`
    /// 5. `u2(0) ⊗ (u1▷f)u2(1) = u1(0) ⊗ u1(1)(u2▷f)`
    pub fn check_conditions(&self) -> Result<()> {
        let (u, f) = (&self.u, &self.f);
        let violation = |index: usize, detail: String| Err(Error::MatchedPairViolation { index, detail });
        for i in 0..u.dim() {
            for a in 0..f.dim() {
                let act = &self.action[i][a];
                let lhs = f.counit_of(act);
                let rhs = &u.counit[i] * &f.counit[a];
                if lhs != rhs {
                    return violation(1, format!("ε({} ▷ {}) = {lhs}, expected {rhs}", u.labels[i], f.labels[a]));
                }
                let lhs = f.coproduct_of(act);
                let mut rhs = Pair::new();
                for ((x1, x2), c) in &u.coproduct[i] {
                    for ((k, l), c1) in &self.coaction[*x1] {
                        for ((f1, f2), c2) in &f.coproduct[a] {
                            let left = &self.action[*k][*f1];
                            let right = f.mul(&basis_vec(*l), &self.action[*x2][*f2]);
                            for (key, v) in outer(left, &right) {
                                add_pair(&mut rhs, key, &v * &(&(c * c1) * c2));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return violation(
                        2,
                        format!(
                            "Δ({} ▷ {}): {} vs {}",
                            u.labels[i],
                            f.labels[a],
                            show_pair(&lhs, &f.labels, &f.labels),
                            show_pair(&rhs, &f.labels, &f.labels)
                        ),
                    );
                }
                // condition 5
                let mut lhs = Pair::new();
                let mut rhs = Pair::new();
                for ((x1, x2), c) in &u.coproduct[i] {
                    let acted = &self.action[*x1][a];
                    for ((k, l), c1) in &self.coaction[*x2] {
                        let p = f.mul(acted, &basis_vec(*l));
                        for (m, v) in p {
                            add_pair(&mut lhs, (*k, m), &v * &(c * c1));
                        }
                    }
                    for ((k, l), c1) in &self.coaction[*x1] {
                        let p = f.mul(&basis_vec(*l), &self.action[*x2][a]);
                        for (m, v) in p {
                            add_pair(&mut rhs, (*k, m), &v * &(c * c1));
                        }
                    }
                }
                if lhs != rhs {
                    return violation(
                        5,
                        format!(
                            "on {} and {}: {} vs {}",
                            u.labels[i],
                            f.labels[a],
                            show_pair(&lhs, &u.labels, &f.labels),
                            show_pair(&rhs, &u.labels, &f.labels)
                        ),
                    );
                }
            }
        }
        let rho1 = self.coact(&u.unit);
        if rho1 != outer(&u.unit, &f.unit) {
            return violation(3, format!("ρ(1) = {}", show_pair(&rho1, &u.labels, &f.labels)));
        }
        for i in 0..u.dim() {
            for j in 0..u.dim() {
                let lhs = self.coact(&u.mult[i][j]);
                let mut rhs = Pair::new();
                for ((x1, x2), c) in &u.coproduct[i] {
                    for ((k, l), c1) in &self.coaction[*x1] {
                        for ((kv, lv), c2) in &self.coaction[j] {
                            let left = u.mul(&basis_vec(*k), &basis_vec(*kv));
                            let right = f.mul(&basis_vec(*l), &self.action[*x2][*lv]);
                            for (key, v) in outer(&left, &right) {
                                add_pair(&mut rhs, key, &v * &(&(c * c1) * c2));
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return violation(
                        4,
                        format!(
                            "ρ({} {}): {} vs {}",
                            u.labels[i],
                            u.labels[j],
                            show_pair(&lhs, &u.labels, &f.labels),
                            show_pair(&rhs, &u.labels, &f.labels)
                        ),
                    );
                }
            }
        }
        Ok(())
    }

    /// Structure constants of `F ⋈ U` on the basis `f_a ⊗ u_x`, indexed `a·dim U + x`.
    ///
    /// Product `(f⊗u)(f'⊗u') = f(u1▷f') ⊗ u2u'`, coproduct
    /// `f1 ⊗ u1(0) ⊗ f2u1(1) ⊗ u2`, and antipode
    /// `S(f⊗u) = (1⊗S(u(0)))(S(fu(1))⊗1)`.
    pub fn bicrossed(&self) -> FiniteHopf {
        let (u, f) = (&self.u, &self.f);
        let (nu, nf) = (u.dim(), f.dim());
        let idx = |a: usize, x: usize| a * nu + x;
        let from_pair = |p: &Pair| -> Coords { p.iter().map(|((a, x), c)| (idx(*a, *x), c.clone())).collect() };
        let labels = (0..nf).flat_map(|a| (0..nu).map(move |x| (a, x))).map(|(a, x)| format!("{}{}", f.labels[a], u.labels[x])).collect();
        let mul_pairs = |a: usize, x: usize, b: usize, y: usize| -> Pair {
            let mut out = Pair::new();
            for ((x1, x2), c) in &u.coproduct[x] {
                let left = f.mul(&basis_vec(a), &self.action[*x1][b]);
                let right = &u.mult[*x2][y];
                for (key, v) in outer(&left, right) {
                    add_pair(&mut out, key, &v * c);
                }
            }
            out
        };
        let mul_elems = |p: &Pair, r: &Pair| -> Pair {
            let mut out = Pair::new();
            for ((a, x), c) in p {
                for ((b, y), d) in r {
                    for (key, v) in mul_pairs(*a, *x, *b, *y) {
                        add_pair(&mut out, key, &v * &(c * d));
                    }
                }
            }
            out
        };
        let mut mult = vec![vec![Coords::new(); nf * nu]; nf * nu];
        for a in 0..nf {
            for x in 0..nu {
                for b in 0..nf {
                    for y in 0..nu {
                        mult[idx(a, x)][idx(b, y)] = from_pair(&mul_pairs(a, x, b, y));
                    }
                }
            }
        }
        let mut coproduct = vec![BTreeMap::new(); nf * nu];
        let mut counit = vec![Scalar::zero(); nf * nu];
        let mut antipode = vec![Coords::new(); nf * nu];
        for a in 0..nf {
            for x in 0..nu {
                let mut cop = Pair::new();
                for ((a1, a2), ca) in &f.coproduct[a] {
                    for ((x1, x2), cx) in &u.coproduct[x] {
                        for ((k, l), cr) in &self.coaction[*x1] {
                            for (m, cm) in &f.mult[*a2][*l] {
                                add_pair(&mut cop, (idx(*a1, *k), idx(*m, *x2)), &(ca * cx) * &(cr * cm));
                            }
                        }
                    }
                }
                coproduct[idx(a, x)] = cop;
                counit[idx(a, x)] = &f.counit[a] * &u.counit[x];
                let mut s = Pair::new();
                for ((k, l), c) in &self.coaction[x] {
                    let left = outer(&f.unit, &u.antipode[*k]);
                    let right = outer(&f.apply_antipode(&f.mult[a][*l]), &u.unit);
                    for (key, v) in mul_elems(&left, &right) {
                        add_pair(&mut s, key, &v * c);
                    }
                }
                antipode[idx(a, x)] = from_pair(&s);
            }
        }
        FiniteHopf { labels, unit: from_pair(&outer(&f.unit, &u.unit)), mult, coproduct, counit, antipode }
    }
}
