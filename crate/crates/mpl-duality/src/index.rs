//! Augmented indices.
//!
//! An augmented index is a tuple of pairs `(k, mu)` with `k >= 1` and
//! `mu` in `{0, 1}`. The empty tuple is written `empty`. An index is
//! admissible when it is empty or its last component is not `(1, 1)`.
//!
//! The textual grammar is `empty` or comma-separated `k:mu` pairs, e.g.
//! `2:0,1:1,3:1`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// One component `(k, mu)` of an augmented index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    pub k: u32,
    pub mu: u8,
}

impl Component {
    pub fn new(k: u32, mu: u8) -> Self {
        assert!(k >= 1, "component exponent must be >= 1");
        assert!(mu <= 1, "component marker must be 0 or 1");
        Component { k, mu }
    }
}

/// An augmented index: an ordered list of components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AugmentedIndex(pub Vec<Component>);

impl AugmentedIndex {
    pub fn empty() -> Self {
        AugmentedIndex(Vec::new())
    }

    pub fn from_pairs(pairs: &[(u32, u8)]) -> Self {
        AugmentedIndex(pairs.iter().map(|&(k, mu)| Component::new(k, mu)).collect())
    }

    /// Classical index `(k_1, ..., k_r)` with every marker set to 1.
    pub fn from_classical(ks: &[u32]) -> Self {
        AugmentedIndex(ks.iter().map(|&k| Component::new(k, 1)).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|c| c.k).sum()
    }

    /// Admissible iff empty or the last component is not `(1, 1)`.
    pub fn is_admissible(&self) -> bool {
        match self.0.last() {
            None => true,
            Some(c) => !(c.k == 1 && c.mu == 1),
        }
    }

    pub fn ensure_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NotAdmissible(self.to_string()))
        }
    }

    /// Number of components with marker 0.
    pub fn count_mu0(&self) -> usize {
        self.0.iter().filter(|c| c.mu == 0).count()
    }

    /// Number of components with marker 1.
    pub fn count_mu1(&self) -> usize {
        self.0.iter().filter(|c| c.mu == 1).count()
    }

    /// True when every marker is 1 (the classical case).
    pub fn all_mu1(&self) -> bool {
        self.0.iter().all(|c| c.mu == 1)
    }

    pub fn classical_exponents(&self) -> Vec<u32> {
        self.0.iter().map(|c| c.k).collect()
    }

    /// Parse the `empty` / `k:mu,...` grammar.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "empty" {
            return Ok(AugmentedIndex::empty());
        }
        let mut comps = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let (ks, ms) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected k:mu, got `{part}`")))?;
            let k: u32 = ks
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent `{ks}`")))?;
            if k == 0 {
                return Err(Error::Parse(format!("exponent must be >= 1 in `{part}`")));
            }
            let mu: u8 = match ms.trim() {
                "0" => 0,
                "1" => 1,
                other => return Err(Error::Parse(format!("marker must be 0 or 1, got `{other}`"))),
            };
            comps.push(Component::new(k, mu));
        }
        Ok(AugmentedIndex(comps))
    }
}

impl fmt::Display for AugmentedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self.0.iter().map(|c| format!("{}:{}", c.k, c.mu)).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["empty", "2:0,1:1,3:1", "1:0", "2:1"] {
            let idx = AugmentedIndex::parse(s).unwrap();
            assert_eq!(idx.to_string(), s);
        }
    }

    #[test]
    fn admissibility() {
        assert!(AugmentedIndex::empty().is_admissible());
        assert!(AugmentedIndex::from_pairs(&[(2, 1)]).is_admissible());
        assert!(AugmentedIndex::from_pairs(&[(1, 0)]).is_admissible());
        assert!(!AugmentedIndex::from_pairs(&[(1, 1)]).is_admissible());
        assert!(!AugmentedIndex::from_pairs(&[(2, 0), (1, 1)]).is_admissible());
        assert!(AugmentedIndex::from_pairs(&[(1, 1), (2, 1)]).is_admissible());
    }

    #[test]
    fn weight_and_depth() {
        let idx = AugmentedIndex::from_pairs(&[(2, 0), (1, 1), (3, 1)]);
        assert_eq!(idx.weight(), 6);
        assert_eq!(idx.depth(), 3);
        assert_eq!(idx.count_mu0(), 1);
        assert_eq!(idx.count_mu1(), 2);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(AugmentedIndex::parse("2:2").is_err());
        assert!(AugmentedIndex::parse("0:1").is_err());
        assert!(AugmentedIndex::parse("a:b").is_err());
        assert!(AugmentedIndex::parse("2").is_err());
    }
}
