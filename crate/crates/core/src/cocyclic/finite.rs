use crate::cocyclic::{CocyclicModule, Family};
use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Mixed-radix indexing of tuples, first digit most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndex {
    dims: Vec<usize>,
}

impl MultiIndex {
    pub fn new(dims: Vec<usize>) -> Self {
        MultiIndex { dims }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.dims).fold(0, |acc, (d, b)| acc * b + d)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (slot, b) in out.iter_mut().zip(&self.dims).rev() {
            *slot = idx % b;
            idx /= b;
        }
        out
    }

    /// All tuples in index order.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.total()).map(|i| self.decode(i))
    }
}

/// Solves `Q x = v` for a matrix with independent columns, rejecting `v`
/// outside the column span.
#[derive(Clone, Debug)]
pub struct ColumnSolver {
    q: ExactMatrix,
    rows: Vec<usize>,
    inverse: ExactMatrix,
}

impl ColumnSolver {
    pub fn new(q: ExactMatrix) -> Result<Self> {
        if q.cols() == 0 {
            return Ok(ColumnSolver { q, rows: Vec::new(), inverse: ExactMatrix::zeros(0, 0) });
        }
        let r = q.transpose().rref();
        if r.rank() != q.cols() {
            return Err(Error::Invalid("columns are not independent".into()));
        }
        let rows = r.pivot_cols();
        let mut square = ExactMatrix::zeros(rows.len(), q.cols());
        for (i, &row) in rows.iter().enumerate() {
            for j in 0..q.cols() {
                square.set(i, j, q.get(row, j));
            }
        }
        let inverse = square.inverse()?;
        Ok(ColumnSolver { q, rows, inverse })
    }

    pub fn solve(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let picked: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let x = self.inverse.apply(&picked);
        (self.q.apply(&x) == v).then_some(x)
    }
}

/// How a level sits in its ambient coordinate space: a subspace (with a
/// basis) or a quotient (by a relation span, with a complement basis).
#[derive(Clone, Debug)]
pub enum LevelSpace {
    Full(usize),
    Subspace { basis: ExactMatrix, solver: ColumnSolver },
    Quotient { ambient: usize, complement: Vec<usize>, kept: usize, solver: ColumnSolver },
}

impl LevelSpace {
    pub fn full(n: usize) -> Self {
        LevelSpace::Full(n)
    }

    /// The span of the given independent vectors.
    pub fn subspace(ambient: usize, basis: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols: Vec<Vec<(usize, Scalar)>> = basis
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect())
            .collect();
        let m = ExactMatrix::from_sparse_cols(ambient, &cols);
        Ok(LevelSpace::Subspace { solver: ColumnSolver::new(m.clone())?, basis: m })
    }

    /// The ambient space modulo the span of `relations`; the complement is
    /// spanned by the unit vectors that the elimination leaves free.
    pub fn quotient(ambient: usize, relations: &[Vec<Scalar>]) -> Result<Self> {
        let mut cols: Vec<Vec<(usize, Scalar)>> = relations
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect())
            .collect();
        let r = relations.len();
        cols.extend((0..ambient).map(|i| vec![(i, Scalar::one())]));
        let m = ExactMatrix::from_sparse_cols(ambient, &cols);
        let pivots = m.rref().pivot_cols();
        let rel: Vec<usize> = pivots.iter().copied().filter(|&c| c < r).collect();
        let complement: Vec<usize> = pivots.iter().copied().filter(|&c| c >= r).map(|c| c - r).collect();
        let q = m.select_cols(&pivots);
        Ok(LevelSpace::Quotient { ambient, complement, kept: rel.len(), solver: ColumnSolver::new(q)? })
    }

    pub fn dim(&self) -> usize {
        match self {
            LevelSpace::Full(n) => *n,
            LevelSpace::Subspace { basis, .. } => basis.cols(),
            LevelSpace::Quotient { complement, .. } => complement.len(),
        }
    }

    /// An ambient representative of a level vector.
    pub fn lift(&self, c: &[Scalar]) -> Vec<Scalar> {
        match self {
            LevelSpace::Full(_) => c.to_vec(),
            LevelSpace::Subspace { basis, .. } => basis.apply(c),
            LevelSpace::Quotient { ambient, complement, .. } => {
                let mut v = vec![Scalar::zero(); *ambient];
                for (x, &i) in c.iter().zip(complement) {
                    v[i] = x.clone();
                }
                v
            }
        }
    }

    /// Level coordinates of an ambient vector; an error for a subspace
    /// level when the vector lies outside it.
    pub fn coords(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        match self {
            LevelSpace::Full(_) => Ok(v.to_vec()),
            LevelSpace::Subspace { solver, .. } => {
                solver.solve(v).ok_or_else(|| Error::Invalid("vector leaves the invariant subspace".into()))
            }
            LevelSpace::Quotient { kept, solver, .. } => {
                let x = solver.solve(v).ok_or_else(|| Error::Invalid("quotient solve failed".into()))?;
                Ok(x[*kept..].to_vec())
            }
        }
    }
}

/// A cocyclic module whose levels are finite-dimensional, given by
/// operators on ambient coordinates.
pub trait FiniteLevels: Sync {
    fn level_family(&self) -> Family;
    fn ambient_dim(&self, n: usize) -> Result<usize>;
    fn level_space(&self, n: usize) -> Result<LevelSpace>;
    fn ambient_face(&self, n: usize, i: usize, v: &[Scalar]) -> Result<Vec<Scalar>>;
    fn ambient_degeneracy(&self, n: usize, i: usize, v: &[Scalar]) -> Result<Vec<Scalar>>;
    fn ambient_cyclic(&self, n: usize, v: &[Scalar]) -> Result<Vec<Scalar>>;
}

/// Every operator as a matrix in level coordinates, for levels `0..levels`
/// (targets up to `levels`).
#[derive(Clone, Debug)]
pub struct MatrixCocyclic {
    family: Family,
    dims: Vec<usize>,
    faces: Vec<Vec<ExactMatrix>>,
    degens: Vec<Vec<ExactMatrix>>,
    cyclic: Vec<ExactMatrix>,
}

fn operator_matrix(
    from: &LevelSpace,
    to: &LevelSpace,
    op: impl Fn(&[Scalar]) -> Result<Vec<Scalar>>,
    what: impl Fn() -> String,
) -> Result<ExactMatrix> {
    let mut cols = Vec::with_capacity(from.dim());
    for j in 0..from.dim() {
        let mut e = vec![Scalar::zero(); from.dim()];
        e[j] = Scalar::one();
        let img = op(&from.lift(&e))?;
        let c = to.coords(&img).map_err(|e| Error::Invalid(format!("{}: {e}", what())))?;
        cols.push(c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect::<Vec<_>>());
    }
    Ok(ExactMatrix::from_sparse_cols(to.dim(), &cols))
}

impl MatrixCocyclic {
    pub fn materialize<F: FiniteLevels + ?Sized>(inst: &F, levels: usize) -> Result<Self> {
        let spaces: Vec<LevelSpace> = (0..=levels).map(|n| inst.level_space(n)).collect::<Result<_>>()?;
        let mut faces = Vec::new();
        let mut degens = Vec::new();
        let mut cyclic = Vec::new();
        for n in 0..levels {
            let (src, up) = (&spaces[n], &spaces[n + 1]);
            faces.push(
                (0..=n + 1)
                    .map(|i| operator_matrix(src, up, |v| inst.ambient_face(n, i, v), || format!("δ{i} at level {n}")))
                    .collect::<Result<Vec<_>>>()?,
            );
            degens.push(if n == 0 {
                Vec::new()
            } else {
                (0..n)
                    .map(|i| {
                        operator_matrix(src, &spaces[n - 1], |v| inst.ambient_degeneracy(n, i, v), || {
                            format!("σ{i} at level {n}")
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            });
            cyclic.push(operator_matrix(src, src, |v| inst.ambient_cyclic(n, v), || format!("τ at level {n}"))?);
        }
        Ok(MatrixCocyclic { family: inst.level_family(), dims: spaces.iter().map(LevelSpace::dim).collect(), faces, degens, cyclic })
    }

    /// Number of levels carrying operators.
    pub fn levels(&self) -> usize {
        self.cyclic.len()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn unit(&self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim(n)];
        v[i] = Scalar::one();
        v
    }

    pub fn face_matrix(&self, n: usize, i: usize) -> Result<&ExactMatrix> {
        self.faces.get(n).and_then(|f| f.get(i)).ok_or(Error::IndexOutOfRange { index: i, level: n })
    }

    pub fn degeneracy_matrix(&self, n: usize, i: usize) -> Result<&ExactMatrix> {
        self.degens.get(n).and_then(|f| f.get(i)).ok_or(Error::IndexOutOfRange { index: i, level: n })
    }

    pub fn cyclic_matrix(&self, n: usize) -> Result<&ExactMatrix> {
        self.cyclic.get(n).ok_or(Error::IndexOutOfRange { index: 0, level: n })
    }

    /// Replaces `τ_n`; used to build corrupted controls.
    pub fn set_cyclic(&mut self, n: usize, m: ExactMatrix) -> Result<()> {
        let slot = self.cyclic.get_mut(n).ok_or(Error::IndexOutOfRange { index: 0, level: n })?;
        if (m.rows(), m.cols()) != (slot.rows(), slot.cols()) {
            return Err(Error::DegreeMismatch { expected: slot.rows(), got: m.rows() });
        }
        *slot = m;
        Ok(())
    }

    /// Replaces `δ_i` at level `n`.
    pub fn set_face(&mut self, n: usize, i: usize, m: ExactMatrix) -> Result<()> {
        let slot = self.faces.get_mut(n).and_then(|f| f.get_mut(i)).ok_or(Error::IndexOutOfRange { index: i, level: n })?;
        if (m.rows(), m.cols()) != (slot.rows(), slot.cols()) {
            return Err(Error::DegreeMismatch { expected: slot.rows(), got: m.rows() });
        }
        *slot = m;
        Ok(())
    }

    /// `b` at level `n` as a matrix.
    pub fn b_matrix(&self, n: usize) -> Result<ExactMatrix> {
        let mut acc = ExactMatrix::zeros(self.dim(n + 1), self.dim(n));
        for i in 0..=n + 1 {
            let f = self.face_matrix(n, i)?;
            acc = if i % 2 == 0 { acc.add(f) } else { acc.sub(f) };
        }
        Ok(acc)
    }

    /// `λ` at level `n` as a matrix.
    pub fn lambda_matrix(&self, n: usize) -> Result<ExactMatrix> {
        if n == 0 {
            return Ok(ExactMatrix::identity(self.dim(0)));
        }
        let t = self.cyclic_matrix(n)?;
        Ok(if n.is_multiple_of(2) { t.clone() } else { t.scale(&Scalar::int(-1)) })
    }
}

impl CocyclicModule for MatrixCocyclic {
    type Elem = Vec<Scalar>;

    fn family(&self) -> Family {
        self.family
    }

    fn zero(&self, n: usize) -> Vec<Scalar> {
        vec![Scalar::zero(); self.dim(n)]
    }

    fn add_scaled(&self, acc: &mut Vec<Scalar>, x: &Vec<Scalar>, c: &Scalar) {
        for (a, b) in acc.iter_mut().zip(x) {
            *a = &*a + &(b * c);
        }
    }

    fn is_zero(&self, x: &Vec<Scalar>) -> bool {
        x.iter().all(Scalar::is_zero)
    }

    fn face(&self, n: usize, i: usize, x: &Vec<Scalar>) -> Result<Vec<Scalar>> {
        Ok(self.face_matrix(n, i)?.apply(x))
    }

    fn degeneracy(&self, n: usize, i: usize, x: &Vec<Scalar>) -> Result<Vec<Scalar>> {
        Ok(self.degeneracy_matrix(n, i)?.apply(x))
    }

    fn cyclic(&self, n: usize, x: &Vec<Scalar>) -> Result<Vec<Scalar>> {
        Ok(self.cyclic_matrix(n)?.apply(x))
    }

    fn show(&self, x: &Vec<Scalar>) -> String {
        let parts: Vec<String> =
            x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("{c}·e{i}")).collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn support(v: &[Scalar]) -> Vec<(usize, &Scalar)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// `f` evaluated on the pure tensor of the slot vectors, `f` being a
/// functional in the radix's coordinates.
pub(crate) fn eval_functional(f: &[Scalar], radix: &MultiIndex, slots: &[Vec<Scalar>]) -> Scalar {
    let supports: Vec<Vec<(usize, &Scalar)>> = slots.iter().map(|s| support(s)).collect();
    let mut acc = Scalar::zero();
    let mut digits = vec![0; slots.len()];
    fn walk(
        k: usize,
        supports: &[Vec<(usize, &Scalar)>],
        digits: &mut Vec<usize>,
        coeff: Scalar,
        f: &[Scalar],
        radix: &MultiIndex,
        acc: &mut Scalar,
    ) {
        if k == supports.len() {
            let v = &f[radix.encode(digits)];
            if !v.is_zero() {
                *acc = &*acc + &(v * &coeff);
            }
            return;
        }
        for (i, c) in &supports[k] {
            digits[k] = *i;
            walk(k + 1, supports, digits, &coeff * c, f, radix, acc);
        }
    }
    walk(0, &supports, &mut digits, Scalar::one(), f, radix, &mut acc);
    acc
}

/// The pure tensor of the slot vectors in ambient coordinates.
pub(crate) fn kron_vectors(radix: &MultiIndex, slots: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); radix.total()];
    let supports: Vec<Vec<(usize, &Scalar)>> = slots.iter().map(|s| support(s)).collect();
    let mut stack: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), Scalar::one())];
    for s in &supports {
        let mut next = Vec::new();
        for (d, c) in &stack {
            for (i, x) in s {
                let mut d2 = d.clone();
                d2.push(*i);
                next.push((d2, c * x));
            }
        }
        stack = next;
    }
    for (d, c) in stack {
        let i = radix.encode(&d);
        out[i] = &out[i] + &c;
    }
    out
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}
