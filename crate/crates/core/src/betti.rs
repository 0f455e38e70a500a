//! Graded Betti tables, shared by the mapping-cone and the homology computations.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether a table describes the ideal `I` or the quotient `S/I`.
/// The two are related by `beta_{i,j}(I) = beta_{i+1,j}(S/I)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BettiModule {
    Ideal,
    Quotient,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub module: BettiModule,
    /// Variable weights used for internal degrees; `None` for the standard grading.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    #[serde(with = "entry_list")]
    entries: BTreeMap<(usize, u64), u64>,
}

mod entry_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<(usize, u64), u64>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(usize, u64, u64)> = m.iter().map(|(&(i, j), &b)| (i, j, b)).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, u64), u64>, D::Error> {
        let v: Vec<(usize, u64, u64)> = Vec::deserialize(d)?;
        let mut m = BTreeMap::new();
        for (i, j, b) in v {
            if b > 0 {
                *m.entry((i, j)).or_insert(0) += b;
            }
        }
        Ok(m)
    }
}

impl BettiTable {
    pub fn new(module: BettiModule) -> Self {
        Self {
            module,
            weights: None,
            entries: BTreeMap::new(),
        }
    }

    pub fn weighted(module: BettiModule, weights: Vec<u32>) -> Self {
        Self {
            module,
            weights: Some(weights),
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, u64, u64)>>(module: BettiModule, entries: I) -> Self {
        let mut t = Self::new(module);
        for (i, j, b) in entries {
            t.add(i, j, b);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: u64, mult: u64) {
        if mult == 0 {
            return;
        }
        let e = self.entries.entry((i, j)).or_insert(0);
        *e = e.checked_add(mult).expect("Betti number overflow");
    }

    pub fn merge(&mut self, other: &BettiTable) {
        debug_assert_eq!(self.module, other.module);
        for (&(i, j), &b) in &other.entries {
            self.add(i, j, b);
        }
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Non-zero entries `(i, j, beta_{i,j})` sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti number `beta_i = sum_j beta_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, u64::MAX)).map(|(_, &b)| b).sum()
    }

    /// `max { j - i : beta_{i,j} != 0 }`.
    pub fn regularity(&self) -> Result<i64> {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
            .ok_or(Error::EmptyTable)
    }

    /// `max { i : beta_{i,j} != 0 }`.
    pub fn pdim(&self) -> Result<usize> {
        self.entries.keys().map(|&(i, _)| i).max().ok_or(Error::EmptyTable)
    }

    /// Reindex an ideal table as the table of `S/I` (adds `beta_{0,0} = 1`).
    pub fn to_quotient(&self) -> BettiTable {
        match self.module {
            BettiModule::Quotient => self.clone(),
            BettiModule::Ideal => {
                let mut out = BettiTable {
                    module: BettiModule::Quotient,
                    weights: self.weights.clone(),
                    entries: BTreeMap::new(),
                };
                // the unit ideal has quotient 0
                if self.get(0, 0) > 0 {
                    return out;
                }
                out.add(0, 0, 1);
                for (i, j, b) in self.entries() {
                    out.add(i + 1, j, b);
                }
                out
            }
        }
    }

    /// Reindex a quotient table as the table of the ideal (drops `beta_{0,0}`).
    pub fn to_ideal(&self) -> BettiTable {
        match self.module {
            BettiModule::Ideal => self.clone(),
            BettiModule::Quotient => {
                let mut out = BettiTable {
                    module: BettiModule::Ideal,
                    weights: self.weights.clone(),
                    entries: BTreeMap::new(),
                };
                if self.is_empty() {
                    // S/I = 0, so I = S
                    out.add(0, 0, 1);
                    return out;
                }
                for (i, j, b) in self.entries() {
                    if i > 0 {
                        out.add(i - 1, j, b);
                    }
                }
                out
            }
        }
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,beta\n");
        for (i, j, b) in self.entries() {
            s.push_str(&format!("{i},{j},{b}\n"));
        }
        s
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self.module {
            BettiModule::Ideal => "I",
            BettiModule::Quotient => "S/I",
        };
        write!(f, "betti({label})")?;
        for (i, j, b) in self.entries() {
            write!(f, " b[{i},{j}]={b}")?;
        }
        Ok(())
    }
}

pub fn regularity(table: &BettiTable) -> Result<i64> {
    table.regularity()
}

pub fn pdim(table: &BettiTable) -> Result<usize> {
    table.pdim()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_round_trip() {
        let t = BettiTable::from_entries(BettiModule::Ideal, [(0, 2, 3), (1, 3, 2)]);
        let q = t.to_quotient();
        assert_eq!(q.get(0, 0), 1);
        assert_eq!(q.get(1, 2), 3);
        assert_eq!(q.get(2, 3), 2);
        assert_eq!(q.to_ideal(), t);
        assert_eq!(t.regularity().unwrap(), 2);
        assert_eq!(t.pdim().unwrap(), 1);
        assert_eq!(q.regularity().unwrap(), 1);
        assert_eq!(q.pdim().unwrap(), 2);
    }

    #[test]
    fn principal_and_empty() {
        let t = BettiTable::from_entries(BettiModule::Ideal, [(0, 5, 1)]);
        assert_eq!(t.regularity().unwrap(), 5);
        assert_eq!(t.pdim().unwrap(), 0);
        let empty = BettiTable::new(BettiModule::Ideal);
        assert_eq!(empty.regularity(), Err(Error::EmptyTable));
        assert_eq!(empty.pdim(), Err(Error::EmptyTable));
        let unit = BettiTable::from_entries(BettiModule::Ideal, [(0, 0, 1)]);
        assert!(unit.to_quotient().is_empty());
    }

    #[test]
    fn json_and_csv() {
        let t = BettiTable::from_entries(BettiModule::Ideal, [(1, 3, 2), (0, 2, 3)]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"module":"ideal","entries":[[0,2,3],[1,3,2]]}"#);
        let back: BettiTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.to_csv(), "i,j,beta\n0,2,3\n1,3,2\n");
    }
}
