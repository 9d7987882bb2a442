use crate::error::{Error, Result};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupData {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroupData {
    /// Validates associativity, the identity and inverses.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup(format!("table must be {n}x{n}")));
        }
        if identity >= n {
            return Err(Error::NotAGroup("identity index out of range".into()));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::NotAGroup("table entry out of range".into()));
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return Err(Error::NotAGroup(format!("{} is not an identity for {}", labels[identity], labels[a])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "({}{}){} != {}({}{})",
                            labels[a], labels[b], labels[c], labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", labels[a])))?;
            inverses.push(inv);
        }
        Ok(FiniteGroupData { labels, table, identity, inverses })
    }

    /// The cyclic group of order `n`, elements `g^0 … g^{n-1}` labelled by `prefix` and the exponent.
    pub fn cyclic(n: usize, prefix: &str) -> Self {
        let labels = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("{prefix}{i}") }).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroupData::new(labels, table, 0).expect("cyclic group")
    }

    /// Symmetric group on `k` letters as permutations in lexicographic order.
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let compose = |p: &Vec<usize>, q: &Vec<usize>| -> Vec<usize> { (0..k).map(|i| p[q[i]]).collect() };
        let labels = perms
            .iter()
            .enumerate()
            .map(|(i, _)| if i == 0 { "e".to_string() } else { format!("p{i}") })
            .collect();
        let table = perms.iter().map(|p| perms.iter().map(|q| index(&compose(p, q))).collect()).collect();
        FiniteGroupData::new(labels, table, 0).expect("symmetric group")
    }

    /// The subgroup generated by the given elements, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = vec![self.identity];
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(&y) {
                    set.push(y);
                    frontier.push(y);
                }
            }
        }
        set.sort_unstable();
        set
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.labels.len()
    }

    pub fn find(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes in order of their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for a in self.elements() {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = self.elements().map(|g| self.mul(self.mul(g, a), self.inv(g))).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_basics() {
        let s3 = FiniteGroupData::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.conjugacy_classes().len(), 3);
        assert_eq!(FiniteGroupData::symmetric(4).order(), 24);
    }

    #[test]
    fn bad_tables_are_rejected() {
        let labels = vec!["e".to_string(), "a".to_string()];
        let err = FiniteGroupData::new(labels.clone(), vec![vec![0, 1], vec![1, 1]], 0).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
        assert!(FiniteGroupData::new(labels, vec![vec![0, 1], vec![1, 0]], 0).is_ok());
    }

    #[test]
    fn generated_subgroups() {
        let z6 = FiniteGroupData::cyclic(6, "g");
        assert_eq!(z6.generated(&[2]), vec![0, 2, 4]);
        assert_eq!(z6.generated(&[3]), vec![0, 3]);
    }
}
