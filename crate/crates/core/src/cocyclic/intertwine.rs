use crate::cocyclic::cm::CmModule;
use crate::cocyclic::finite::{FiniteLevels, MatrixCocyclic};
use crate::cocyclic::type_c::TypeC;
use crate::cohom::ExactMatrix;
use crate::error::{Error, Result};
use crate::hopf::diagonal_action;
use crate::ncalg::{NCPoly, TensorElem};
use crate::report::{CheckLine, Report};
use crate::scalar::Scalar;

/// `1 ⊗ h0 ⊗ h1 ⊗ … ⊗ hn ↦ S̃_δ(h0)·(h1 ⊗ … ⊗ hn)` from the type C module of
/// `H` acting on itself with coefficients `^σk_δ` to the CM module.
/// `embed` sends the coalgebra basis of type C to elements of `H`.
#[derive(Debug)]
pub struct TypeCToCm<'a, 'b> {
    cm: &'b CmModule<'a>,
    embed: Vec<NCPoly>,
}

impl<'a, 'b> TypeCToCm<'a, 'b> {
    pub fn new(cm: &'b CmModule<'a>, embed: Vec<NCPoly>) -> Self {
        TypeCToCm { cm, embed }
    }

    /// The map on ambient coordinates of type C level `n`.
    pub fn ambient(&self, c: &TypeC<'_>, n: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let radix = c.radix(n);
        if radix.dims()[0] != 1 {
            return Err(Error::InvalidModule("coefficients must be one-dimensional".into()));
        }
        let h = self.cm.presentation();
        let st = self.cm.twisted_antipode();
        let mut out = TensorElem::zero(n);
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let t = radix.decode(i);
            let head = st.apply(&self.embed[t[1]])?;
            let rest = TensorElem::from_polys(&t[2..].iter().map(|&d| self.embed[d].clone()).collect::<Vec<_>>());
            out.add_scaled(&diagonal_action(h, &head, &rest)?, x);
        }
        self.cm.to_vector(n, &out)
    }

    /// The map in level coordinates for levels `0..levels`, together with a
    /// check that it kills the `⊗_H` relations.
    pub fn matrices(&self, c: &TypeC<'_>, levels: usize) -> Result<(Vec<ExactMatrix>, CheckLine)> {
        let mut kills = CheckLine::new("Φ vanishes on the balancing relations");
        let mut out = Vec::new();
        for n in 0..levels {
            for r in c.relations(n)? {
                let img = self.ambient(c, n, &r)?;
                kills.record(img.iter().all(Scalar::is_zero), || format!("level {n}"));
            }
            let space = c.level_space(n)?;
            let cols: Vec<Vec<(usize, Scalar)>> = (0..space.dim())
                .map(|j| {
                    let mut e = vec![Scalar::zero(); space.dim()];
                    e[j] = Scalar::one();
                    let img = self.ambient(c, n, &space.lift(&e))?;
                    Ok(img.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
                })
                .collect::<Result<_>>()?;
            out.push(ExactMatrix::from_sparse_cols(self.cm.ambient_dim(n)?, &cols));
        }
        Ok((out, kills))
    }
}

/// Whether `maps[n]: src_n → dst_n` commute with every face, degeneracy and
/// cyclic operator.
pub fn check_commutes(src: &MatrixCocyclic, dst: &MatrixCocyclic, maps: &[ExactMatrix]) -> Result<Report> {
    let mut faces = CheckLine::new("Φδ = δΦ");
    let mut degens = CheckLine::new("Φσ = σΦ");
    let mut cyclic = CheckLine::new("Φτ = τΦ");
    let top = maps.len().min(src.levels()).min(dst.levels());
    for n in 0..top {
        let f = &maps[n];
        if n + 1 < maps.len() {
            for i in 0..=n + 1 {
                let l = maps[n + 1].mul(src.face_matrix(n, i)?)?;
                let r = dst.face_matrix(n, i)?.mul(f)?;
                faces.record(l == r, || format!("δ{i} at level {n}"));
            }
        }
        for i in 0..n {
            let l = maps[n - 1].mul(src.degeneracy_matrix(n, i)?)?;
            let r = dst.degeneracy_matrix(n, i)?.mul(f)?;
            degens.record(l == r, || format!("σ{i} at level {n}"));
        }
        let l = f.mul(src.cyclic_matrix(n)?)?;
        let r = dst.cyclic_matrix(n)?.mul(f)?;
        cyclic.record(l == r, || format!("τ at level {n}"));
    }
    Ok(Report { lines: vec![faces, degens, cyclic] })
}

/// [`check_commutes`] plus invertibility of every `maps[n]`.
pub fn check_intertwiner(src: &MatrixCocyclic, dst: &MatrixCocyclic, maps: &[ExactMatrix]) -> Result<Report> {
    let mut inv = CheckLine::new("Φ invertible");
    for (n, f) in maps.iter().enumerate() {
        let ok = f.rows() == f.cols() && f.rows() == src.dim(n) && f.rank() == f.rows();
        inv.record(ok, || format!("level {n}: {}×{} of rank {}", f.rows(), f.cols(), f.rank()));
    }
    let mut out = Report { lines: vec![inv] };
    out.extend(check_commutes(src, dst, maps)?);
    Ok(out)
}
