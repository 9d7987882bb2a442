use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, UPoly};

/// A dense matrix over [`Scalar`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form with the pivots used to reach it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: ExactMatrix,
    /// `(row, col)` in the reduced matrix, one per pivot, in column order.
    pub pivots: Vec<(usize, usize)>,
    /// Pivot values before normalization, in elimination order.
    pub pivot_values: Vec<Scalar>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        self.pivots.iter().map(|&(_, c)| c).collect()
    }

    pub fn free_cols(&self) -> Vec<usize> {
        let piv = self.pivot_cols();
        (0..self.matrix.cols).filter(|c| !piv.contains(c)).collect()
    }

    /// Kernel basis, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let n = self.matrix.cols;
        let mut out = Vec::new();
        for f in self.free_cols() {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for &(r, c) in &self.pivots {
                let e = self.matrix.get(r, f);
                if !e.is_zero() {
                    v[c] = -e;
                }
            }
            out.push(v);
        }
        out
    }

    /// Non-constant factors of pivot numerators and denominators: the
    /// parameter values at which the generic rank may drop.
    pub fn excluded_polys(&self) -> Vec<UPoly> {
        let mut out: Vec<UPoly> = Vec::new();
        for p in &self.pivot_values {
            let (n, d) = p.numer_denom();
            for f in [n.monic(), d] {
                if !f.is_constant() && !out.contains(&f) {
                    out.push(f);
                }
            }
        }
        out
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = ExactMatrix::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Columns given sparsely as `(row, value)` lists.
    pub fn from_sparse_cols(rows: usize, cols: &[Vec<(usize, Scalar)>]) -> Self {
        let mut m = ExactMatrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col {
                let cur = m.get(*i, j);
                m.set(*i, j, &cur + v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[r * self.cols + c].clone()
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c));
            }
        }
        m
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DegreeMismatch { expected: self.cols, got: other.rows });
        }
        let mut m = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = m.entry(i, j) + &(a * b);
                    m.set(i, j, cur);
                }
            }
        }
        Ok(m)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.entry(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        ExactMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Matrix with the given columns of `self`.
    pub fn select_cols(&self, cols: &[usize]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.set(r, j, self.get(r, c));
            }
        }
        m
    }

    /// Gauss-Jordan elimination. Columns are scanned left to right; within a
    /// column the pivot is the entry of lowest complexity, ties broken by
    /// row order.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_values = Vec::new();
        let mut next_row = 0;
        for c in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            let best = (next_row..m.rows)
                .filter(|&r| !m.entry(r, c).is_zero())
                .min_by(|&a, &b| m.entry(a, c).complexity().cmp(&m.entry(b, c).complexity()).then(a.cmp(&b)));
            let Some(p) = best else { continue };
            if p != next_row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, next_row * m.cols + j);
                }
            }
            let r = next_row;
            let pv = m.get(r, c);
            pivot_values.push(pv.clone());
            let inv = pv.inv();
            for j in c..m.cols {
                let v = m.entry(r, j);
                if !v.is_zero() {
                    let nv = v * &inv;
                    m.set(r, j, nv);
                }
            }
            let pivot_row: Vec<(usize, Scalar)> =
                (c..m.cols).filter(|&j| !m.entry(r, j).is_zero() ).map(|j| (j, m.get(r, j))).collect();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f.is_zero() {
                    continue;
                }
                for (j, v) in &pivot_row {
                    let nv = m.entry(i, *j) - &(&f * v);
                    m.set(i, *j, nv);
                }
            }
            pivots.push((r, c));
            next_row += 1;
        }
        Rref { matrix: m, pivots, pivot_values }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        self.rref().kernel()
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        if self.rows != self.cols {
            return Err(Error::DegreeMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Scalar::one());
        }
        let r = aug.rref();
        if r.pivots.iter().take_while(|&&(_, c)| c < n).count() < n {
            return Err(Error::Invalid("matrix is singular".into()));
        }
        let mut inv = ExactMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.matrix.get(i, n + j));
            }
        }
        Ok(inv)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.apply(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ExactMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn generic_rank_over_function_field() {
        // [[q, 1], [1, q]] has generic rank 2, dropping at q = ±1
        let q = Scalar::q();
        let a = ExactMatrix::from_rows(vec![vec![q.clone(), Scalar::one()], vec![Scalar::one(), q.clone()]]);
        let r = a.rref();
        assert_eq!(r.rank(), 2);
        let ex = r.excluded_polys();
        assert_eq!(ex.len(), 1);
        assert_eq!(ex[0].degree(), Some(2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn rank_ignores_row_order(entries in prop::collection::vec(-2i64..3, 20), perm_seed in any::<u64>()) {
            let rows: Vec<Vec<Scalar>> = entries.chunks(5).map(|c| c.iter().map(|&x| Scalar::int(x)).collect()).collect();
            let a = ExactMatrix::from_rows(rows.clone());
            let mut perm: Vec<usize> = (0..rows.len()).collect();
            let k = (perm_seed % 4) as usize;
            perm.rotate_left(k);
            if perm_seed & 4 != 0 { perm.swap(0, 1); }
            let b = ExactMatrix::from_rows(perm.iter().map(|&i| rows[i].clone()).collect());
            prop_assert_eq!(a.rank(), b.rank());
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }
    }
}
