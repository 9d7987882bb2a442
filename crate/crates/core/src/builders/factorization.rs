use crate::builders::certify::{certify, CertifyConfig};
use crate::builders::finite::{basis_vec, FiniteHopf, FiniteRealization};
use crate::builders::group::FiniteGroupData;
use crate::builders::matched::{MatchedPairData, Pair};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite group with subgroups `G₁`, `G₂` such that every element is
/// uniquely `g₁g₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationData {
    group: FiniteGroupData,
    left: Vec<usize>,
    right: Vec<usize>,
    /// `split[g] = (position in left, position in right)`.
    split: Vec<(usize, usize)>,
}

impl FactorizationData {
    pub fn new(group: FiniteGroupData, mut left: Vec<usize>, mut right: Vec<usize>) -> Result<Self> {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        for (name, s) in [("G1", &left), ("G2", &right)] {
            if s.iter().any(|&x| x >= group.order()) {
                return Err(Error::NotAFactorization(format!("{name} has an element out of range")));
            }
            if group.generated(s) != *s {
                return Err(Error::NotAFactorization(format!("{name} is not a subgroup")));
            }
        }
        if left.iter().any(|x| *x != group.identity() && right.contains(x)) {
            return Err(Error::NotAFactorization("G1 and G2 intersect nontrivially".into()));
        }
        let mut split = vec![None; group.order()];
        for (i, &a) in left.iter().enumerate() {
            for (j, &b) in right.iter().enumerate() {
                let g = group.mul(a, b);
                if split[g].is_some() {
                    return Err(Error::NotAFactorization(format!("{} factors twice", group.label(g))));
                }
                split[g] = Some((i, j));
            }
        }
        let split = split
            .into_iter()
            .enumerate()
            .map(|(g, s)| s.ok_or_else(|| Error::NotAFactorization(format!("{} is not a product g1 g2", group.label(g)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FactorizationData { group, left, right, split })
    }

    /// `S₃ = C₃·C₂` with `C₃` the rotations and `C₂` generated by a transposition.
    pub fn s3_c3_c2() -> Self {
        let g = FiniteGroupData::symmetric(3);
        let (rot, tr) = three_cycle_and_transposition(&g);
        let left = g.generated(&[rot]);
        let right = g.generated(&[tr]);
        FactorizationData::new(g, left, right).expect("S3 = C3 C2")
    }

    /// `ℤ/6 = ℤ/2·ℤ/3`.
    pub fn z6_z2_z3() -> Self {
        let g = FiniteGroupData::cyclic(6, "g");
        FactorizationData::new(g, vec![0, 3], vec![0, 2, 4]).expect("Z6 = Z2 Z3")
    }

    /// `G = {e}·G`.
    pub fn trivial(g: FiniteGroupData) -> Self {
        let all = g.elements().collect();
        let e = g.identity();
        FactorizationData::new(g, vec![e], all).expect("trivial factorization")
    }

    pub fn group(&self) -> &FiniteGroupData {
        &self.group
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    fn subgroup(&self, elems: &[usize]) -> FiniteGroupData {
        let pos = |x: usize| elems.iter().position(|&y| y == x).expect("closed");
        let labels = elems.iter().map(|&x| self.group.label(x).to_string()).collect();
        let table = elems.iter().map(|&a| elems.iter().map(|&b| pos(self.group.mul(a, b))).collect()).collect();
        FiniteGroupData::new(labels, table, pos(self.group.identity())).expect("subgroup")
    }

    /// For `a ∈ G₂`, `g ∈ G₁` (positions), `a·g = (a▷g)(a◁g)`.
    pub fn swap(&self, a: usize, g: usize) -> (usize, usize) {
        self.split[self.group.mul(self.right[a], self.left[g])]
    }

    /// `U = kG₁` acting on `F = F(G₂)` by `g ▷ e_b = e_{b ◁ g⁻¹}` and
    /// coacting by `ρ(g) = Σ_c (c ▷ g) ⊗ e_c`.
    pub fn matched_pair(&self) -> Result<MatchedPairData> {
        let g1 = self.subgroup(&self.left);
        let g2 = self.subgroup(&self.right);
        let u = FiniteHopf::group_algebra(&g1);
        let f = FiniteHopf::function_algebra(&g2);
        let action = (0..g1.order())
            .map(|g| (0..g2.order()).map(|b| basis_vec(self.swap(b, g1.inv(g)).1)).collect())
            .collect();
        let coaction = (0..g1.order())
            .map(|g| (0..g2.order()).map(|c| ((self.swap(c, g).0, c), Scalar::one())).collect::<Pair>())
            .collect();
        MatchedPairData::new(u, f, action, coaction)
    }
}

fn three_cycle_and_transposition(g: &FiniteGroupData) -> (usize, usize) {
    let order = |x: usize| {
        let mut k = 1;
        let mut y = x;
        while y != g.identity() {
            y = g.mul(y, x);
            k += 1;
        }
        k
    };
    let rot = g.elements().find(|&x| order(x) == 3).expect("3-cycle");
    let tr = g.elements().find(|&x| order(x) == 2).expect("transposition");
    (rot, tr)
}

/// A certified bicrossed product together with its structure constants.
#[derive(Clone, Debug)]
pub struct Bicrossed {
    pub pair: MatchedPairData,
    pub structure: FiniteHopf,
    pub realization: FiniteRealization,
}

/// `F(G₂) ⋈ kG₁` from a factorization, certified exhaustively.
pub fn bicrossed_from_factorization(fact: &FactorizationData) -> Result<Bicrossed> {
    let pair = fact.matched_pair()?;
    let structure = pair.bicrossed();
    let realization = structure.realize(&format!("bicrossed{}", fact.group.order()))?;
    certify(&realization.presentation, &CertifyConfig::finite())?;
    Ok(Bicrossed { pair, structure, realization })
}
