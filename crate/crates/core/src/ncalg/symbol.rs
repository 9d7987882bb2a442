use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type FamilyId = u16;

/// A generator: a family plus an optional index (`0` means unindexed).
///
/// The derived order (family declaration order, then index) is the total
/// order on generators used by every presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSymbol {
    pub family: FamilyId,
    pub index: u32,
}

impl GenSymbol {
    pub fn plain(family: FamilyId) -> Self {
        GenSymbol { family, index: 0 }
    }

    pub fn indexed(family: FamilyId, index: u32) -> Self {
        GenSymbol { family, index }
    }
}

/// A monomial. The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub SmallVec<[GenSymbol; 4]>);

impl Word {
    pub fn unit() -> Self {
        Word(SmallVec::new())
    }

    pub fn single(g: GenSymbol) -> Self {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn from_slice(s: &[GenSymbol]) -> Self {
        Word(SmallVec::from_slice(s))
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[GenSymbol] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl FromIterator<GenSymbol> for Word {
    fn from_iter<I: IntoIterator<Item = GenSymbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub name: String,
    pub indexed: bool,
    /// Termination-order weight; an indexed symbol weighs `weight + index_weight * n`.
    pub weight: i64,
    pub index_weight: i64,
}

impl Family {
    pub fn plain(name: &str) -> Self {
        Family { name: name.to_string(), indexed: false, weight: 1, index_weight: 0 }
    }

    pub fn indexed(name: &str) -> Self {
        Family { name: name.to_string(), indexed: true, weight: 0, index_weight: 1 }
    }

    pub fn with_weight(mut self, weight: i64) -> Self {
        self.weight = weight;
        self
    }
}

/// The ordered list of generator families of a presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Alphabet {
    families: Vec<Family>,
}

impl Alphabet {
    pub fn new(families: Vec<Family>) -> Self {
        Alphabet { families }
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn family(&self, id: FamilyId) -> &Family {
        &self.families[id as usize]
    }

    pub fn family_id(&self, name: &str) -> Option<FamilyId> {
        self.families.iter().position(|f| f.name == name).map(|i| i as FamilyId)
    }

    /// Look up a generator by name and optional index, validating the index.
    pub fn symbol(&self, name: &str, index: Option<u32>) -> Result<GenSymbol> {
        let id = self.family_id(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let fam = self.family(id);
        match (fam.indexed, index) {
            (true, Some(n)) if n >= 1 => Ok(GenSymbol::indexed(id, n)),
            (true, Some(n)) => Err(Error::BadIndex { family: name.into(), detail: format!("index {n} < 1") }),
            (true, None) => Err(Error::BadIndex { family: name.into(), detail: "index required".into() }),
            (false, None) => Ok(GenSymbol::plain(id)),
            (false, Some(_)) => Err(Error::BadIndex { family: name.into(), detail: "family is not indexed".into() }),
        }
    }

    pub fn weight(&self, g: GenSymbol) -> i64 {
        let f = self.family(g.family);
        f.weight + f.index_weight * g.index as i64
    }

    pub fn word_weight(&self, w: &Word) -> i64 {
        w.symbols().iter().map(|&g| self.weight(g)).sum()
    }

    pub fn symbol_name(&self, g: GenSymbol) -> String {
        let f = self.family(g.family);
        if f.indexed {
            format!("{}_{}", f.name, g.index)
        } else {
            f.name.clone()
        }
    }

    pub fn word_name(&self, w: &Word) -> String {
        if w.is_unit() {
            return "1".into();
        }
        w.symbols().iter().map(|&g| self.symbol_name(g)).collect::<Vec<_>>().join("*")
    }

    /// All generators, with indexed families enumerated up to `max_index`.
    pub fn generators(&self, max_index: u32) -> Vec<GenSymbol> {
        let mut out = Vec::new();
        for (i, f) in self.families.iter().enumerate() {
            if f.indexed {
                out.extend((1..=max_index).map(|n| GenSymbol::indexed(i as FamilyId, n)));
            } else {
                out.push(GenSymbol::plain(i as FamilyId));
            }
        }
        out
    }

    pub fn has_indexed(&self) -> bool {
        self.families.iter().any(|f| f.indexed)
    }
}

/// Pairs an item with an alphabet for display.
pub struct Named<'a, T>(pub &'a Alphabet, pub &'a T);

impl fmt::Display for Named<'_, Word> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.word_name(self.1))
    }
}
