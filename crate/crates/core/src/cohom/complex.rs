use serde::Serialize;

use crate::cocyclic::{hochschild_b, one_minus_lambda, CocyclicModule, MatrixCocyclic};
use crate::cohom::matrix::ExactMatrix;
use crate::error::{Error, Result};
use crate::report::{CheckLine, Report};
use crate::scalar::{Scalar, UPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    LambdaComplex,
    Bicomplex,
}

/// Ranks and dimensions in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeData {
    pub n: usize,
    /// Dimension of the cochains used in this degree by the method.
    pub cochains: usize,
    /// Rank of the outgoing differential.
    pub rank_out: usize,
    pub hochschild: Option<usize>,
    pub cyclic: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub method: Method,
    pub degrees: Vec<DegreeData>,
    /// Matrix shapes `(rows, cols)` whose ranks were computed, in order.
    pub matrices: Vec<(usize, usize)>,
    /// Parameter values at which a generic rank over `ℚ(q)` may drop, as
    /// polynomials in `q`.
    pub excluded: Vec<String>,
    pub checks: Report,
}

impl CohomologyReport {
    pub fn cyclic_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.cyclic).collect()
    }
}

#[derive(Default)]
struct Ranks {
    shapes: Vec<(usize, usize)>,
    excluded: Vec<UPoly>,
}

impl Ranks {
    fn rank(&mut self, m: &ExactMatrix) -> usize {
        self.shapes.push((m.rows(), m.cols()));
        let r = m.rref();
        for p in r.excluded_polys() {
            if !self.excluded.contains(&p) {
                self.excluded.push(p);
            }
        }
        r.rank()
    }

    fn rendered(&self) -> Vec<String> {
        self.excluded.iter().map(|p| p.render("q")).collect()
    }
}

fn need_levels(m: &MatrixCocyclic, top: usize) -> Result<()> {
    if m.levels() < top + 1 {
        return Err(Error::Invalid(format!("operators up to level {top} are needed, {} levels materialized", m.levels())));
    }
    Ok(())
}

fn columns(vs: &[Vec<Scalar>], rows: usize) -> ExactMatrix {
    let cols: Vec<Vec<(usize, Scalar)>> =
        vs.iter().map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()).collect();
    ExactMatrix::from_sparse_cols(rows, &cols)
}

/// `HCⁿ = H^n(ker(1 − λ), b)` and `HHⁿ = H^n(C, b)` for `n ≤ max_n`.
/// Needs operators on levels `0..=max_n`.
pub fn lambda_complex_hc(m: &MatrixCocyclic, max_n: usize) -> Result<CohomologyReport> {
    need_levels(m, max_n)?;
    let mut ranks = Ranks::default();
    let mut b_sq = CheckLine::new("b² = 0");
    let mut invariant = CheckLine::new("b preserves ker(1 − λ)");
    let mut lambda_ranks = Vec::new();
    let mut b_ranks = Vec::new();
    let mut inv_dims = Vec::new();
    for n in 0..=max_n {
        let b = m.b_matrix(n)?;
        if n < max_n {
            b_sq.record(m.b_matrix(n + 1)?.mul(&b)?.is_zero(), || format!("level {n}"));
        }
        let kern = ExactMatrix::identity(m.dim(n)).sub(&m.lambda_matrix(n)?).kernel();
        let k = columns(&kern, m.dim(n));
        let bk = b.mul(&k)?;
        if n + 1 < m.levels() {
            let up = ExactMatrix::identity(m.dim(n + 1)).sub(&m.lambda_matrix(n + 1)?);
            invariant.record(up.mul(&bk)?.is_zero(), || format!("level {n}"));
        }
        b_ranks.push(ranks.rank(&b));
        lambda_ranks.push(ranks.rank(&bk));
        inv_dims.push(kern.len());
    }
    let degrees = (0..=max_n)
        .map(|n| {
            let before = |v: &[usize]| if n == 0 { 0 } else { v[n - 1] };
            DegreeData {
                n,
                cochains: inv_dims[n],
                rank_out: lambda_ranks[n],
                hochschild: Some(m.dim(n).saturating_sub(b_ranks[n] + before(&b_ranks))),
                cyclic: inv_dims[n].saturating_sub(lambda_ranks[n] + before(&lambda_ranks)),
            }
        })
        .collect();
    Ok(CohomologyReport {
        method: Method::LambdaComplex,
        degrees,
        matrices: ranks.shapes.clone(),
        excluded: ranks.rendered(),
        checks: Report { lines: vec![b_sq, invariant] },
    })
}

/// `b' = Σ_{i=0}^{n} (−1)^i δ_i`, without the last face.
fn b_prime(m: &MatrixCocyclic, n: usize) -> Result<ExactMatrix> {
    let mut acc = ExactMatrix::zeros(m.dim(n + 1), m.dim(n));
    for i in 0..=n {
        let f = m.face_matrix(n, i)?;
        acc = if i % 2 == 0 { acc.add(f) } else { acc.sub(f) };
    }
    Ok(acc)
}

/// `N = Σ_{k=0}^{n} λ^k`.
fn norm(m: &MatrixCocyclic, n: usize) -> Result<ExactMatrix> {
    let l = m.lambda_matrix(n)?;
    let mut acc = ExactMatrix::identity(m.dim(n));
    let mut pow = ExactMatrix::identity(m.dim(n));
    for _ in 0..n {
        pow = l.mul(&pow)?;
        acc = acc.add(&pow);
    }
    Ok(acc)
}

/// The total differential of the cyclic double complex: columns `p ≥ 0`
/// carry `b` (even `p`) and `−b'` (odd `p`); rows carry `1 − λ` from even
/// to odd columns and `N` from odd to even.
fn total_differential(m: &MatrixCocyclic, k: usize, offsets: &[Vec<usize>], sizes: &[usize]) -> Result<ExactMatrix> {
    let mut d = ExactMatrix::zeros(sizes[k + 1], sizes[k]);
    let mut put = |block: &ExactMatrix, r0: usize, c0: usize| {
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                let v = block.entry(i, j);
                if !v.is_zero() {
                    d.set(r0 + i, c0 + j, v.clone());
                }
            }
        }
    };
    for p in 0..=k {
        let q = k - p;
        let src = offsets[k][p];
        let vertical = if p % 2 == 0 { m.b_matrix(q)? } else { b_prime(m, q)?.scale(&Scalar::int(-1)) };
        put(&vertical, offsets[k + 1][p], src);
        let horizontal = if p % 2 == 0 { ExactMatrix::identity(m.dim(q)).sub(&m.lambda_matrix(q)?) } else { norm(m, q)? };
        put(&horizontal, offsets[k + 1][p + 1], src);
    }
    Ok(d)
}

/// Cyclic cohomology as the cohomology of the total complex of the cyclic
/// double complex, for `n ≤ max_n`. Independent of [`lambda_complex_hc`]
/// apart from the operator matrices.
pub fn bicomplex_oracle_hc(m: &MatrixCocyclic, max_n: usize) -> Result<CohomologyReport> {
    need_levels(m, max_n)?;
    let mut ranks = Ranks::default();
    let mut d_sq = CheckLine::new("D² = 0");
    // offsets[k][p]: start of the block C^{p, k−p} inside Tot^k
    let mut offsets = Vec::new();
    let mut sizes = Vec::new();
    for k in 0..=max_n + 1 {
        let mut off = Vec::new();
        let mut acc = 0;
        for p in 0..=k {
            off.push(acc);
            acc += m.dim(k - p);
        }
        offsets.push(off);
        sizes.push(acc);
    }
    let ds: Vec<ExactMatrix> = (0..=max_n).map(|k| total_differential(m, k, &offsets, &sizes)).collect::<Result<_>>()?;
    for k in 1..ds.len() {
        d_sq.record(ds[k].mul(&ds[k - 1])?.is_zero(), || format!("total degree {}", k - 1));
    }
    let rs: Vec<usize> = ds.iter().map(|d| ranks.rank(d)).collect();
    let degrees = (0..=max_n)
        .map(|n| DegreeData {
            n,
            cochains: sizes[n],
            rank_out: rs[n],
            hochschild: None,
            cyclic: sizes[n].saturating_sub(rs[n] + if n == 0 { 0 } else { rs[n - 1] }),
        })
        .collect();
    Ok(CohomologyReport {
        method: Method::Bicomplex,
        degrees,
        matrices: ranks.shapes.clone(),
        excluded: ranks.rendered(),
        checks: Report { lines: vec![d_sq] },
    })
}

/// Both methods and their agreement.
pub fn cohomology(m: &MatrixCocyclic, max_n: usize) -> Result<(CohomologyReport, CohomologyReport, CheckLine)> {
    let a = lambda_complex_hc(m, max_n)?;
    let b = bicomplex_oracle_hc(m, max_n)?;
    let mut agree = CheckLine::new("λ-complex and bicomplex agree");
    for (x, y) in a.degrees.iter().zip(&b.degrees) {
        agree.record(x.cyclic == y.cyclic, || format!("HC{}: {} vs {}", x.n, x.cyclic, y.cyclic));
    }
    Ok((a, b, agree))
}

/// Residuals of `bx = 0` and `(1 − λ)x = 0`.
#[derive(Clone, Debug)]
pub struct CocycleVerdict<E> {
    pub b_residual: E,
    pub lambda_residual: E,
    pub pass: bool,
}

pub fn certify_cocycle<M: CocyclicModule>(inst: &M, n: usize, x: &M::Elem) -> Result<CocycleVerdict<M::Elem>> {
    let b_residual = hochschild_b(inst, n, x)?;
    let lambda_residual = one_minus_lambda(inst, n, x)?;
    let pass = inst.is_zero(&b_residual) && inst.is_zero(&lambda_residual);
    Ok(CocycleVerdict { b_residual, lambda_residual, pass })
}
