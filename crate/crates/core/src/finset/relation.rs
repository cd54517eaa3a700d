use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A binary relation between `ord(dom)` and `ord(cod)` as a sorted,
/// duplicate-free list of pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RelationTable {
    dom: usize,
    cod: usize,
    pairs: Vec<(usize, usize)>,
}

impl RelationTable {
    pub fn new(dom: usize, cod: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i >= dom || j >= cod) {
            return Err(Error::InvalidMorphism(format!(
                "pair ({i}, {j}) outside {dom} x {cod}"
            )));
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(RelationTable { dom, cod, pairs })
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.binary_search(&(i, j)).is_ok()
    }

    /// `{(i, k) | ∃ j. (i, j) ∈ self, (j, k) ∈ other}`
    pub fn compose_direct(&self, other: &RelationTable) -> Result<RelationTable> {
        Error::check_boundary(self.cod, other.dom)?;
        let mut out = Vec::new();
        for &(i, j) in &self.pairs {
            for &(j2, k) in &other.pairs {
                if j == j2 {
                    out.push((i, k));
                }
            }
        }
        RelationTable::new(self.dom, other.cod, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn existential_composition() {
        let r = RelationTable::new(2, 2, vec![(0, 1), (1, 0)]).unwrap();
        let s = RelationTable::new(2, 1, vec![(1, 0)]).unwrap();
        assert_eq!(r.compose_direct(&s).unwrap().pairs(), &[(0, 0)]);
    }

    #[test]
    fn pairs_are_normalized() {
        let r = RelationTable::new(2, 2, vec![(1, 1), (0, 0), (1, 1)]).unwrap();
        assert_eq!(r.pairs(), &[(0, 0), (1, 1)]);
        assert!(RelationTable::new(1, 1, vec![(0, 1)]).is_err());
    }
}
