use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Largest homological index accepted by [`BettiTable::parse_kv`].
pub const MAX_KV_INDEX: usize = 64;
/// Largest `|j|` accepted by [`BettiTable::parse_kv`].
pub const MAX_KV_DEGREE: i32 = 1024;

/// Graded Betti numbers `β_{i,j}`, keyed by homological index `i` and
/// internal degree `j`. Only positive entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), u64>,
}

impl BettiTable {
    pub fn from_entries(entries: BTreeMap<(usize, i32), u64>) -> Self {
        BettiTable {
            entries: entries.into_iter().filter(|&(_, b)| b > 0).collect(),
        }
    }

    pub fn entries(&self) -> &BTreeMap<(usize, i32), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: i32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Rank of the `i`-th module.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, b)| b).sum()
    }

    pub fn totals(&self) -> Vec<u64> {
        (0..=self.length()).map(|i| self.total(i)).collect()
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// `i,j,beta` lines in key order.
    pub fn to_kv(&self) -> String {
        self.entries
            .iter()
            .map(|((i, j), b)| format!("{i},{j},{b}\n"))
            .collect()
    }

    /// Reads the form written by [`BettiTable::to_kv`].
    pub fn parse_kv(src: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (idx, line) in src.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |column: usize, message: &str| Error::Parse {
                line: idx + 1,
                column,
                message: message.into(),
            };
            let parts: Vec<&str> = line.split(',').collect();
            if parts.len() != 3 {
                return Err(bad(1, "expected 'i,j,beta'"));
            }
            let i: usize = parts[0].trim().parse().map_err(|_| bad(1, "bad homological index"))?;
            if i > MAX_KV_INDEX {
                return Err(bad(1, "homological index out of range"));
            }
            let col_j = parts[0].len() + 2;
            let j: i32 = parts[1].trim().parse().map_err(|_| bad(col_j, "bad internal degree"))?;
            if !(-MAX_KV_DEGREE..=MAX_KV_DEGREE).contains(&j) {
                return Err(bad(col_j, "internal degree out of range"));
            }
            let col_b = col_j + parts[1].len() + 1;
            let b: u64 = parts[2].trim().parse().map_err(|_| bad(col_b, "bad Betti number"))?;
            if b == 0 {
                return Err(bad(col_b, "Betti numbers in this form are positive"));
            }
            if entries.insert((i, j), b).is_some() {
                return Err(bad(1, "duplicate entry"));
            }
        }
        Ok(BettiTable { entries })
    }

    /// Entries on which two tables differ, as `(i, j, self, other)`.
    pub fn diff(&self, other: &BettiTable) -> Vec<(usize, i32, u64, u64)> {
        let keys: std::collections::BTreeSet<_> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter()
            .filter_map(|&(i, j)| {
                let (a, b) = (self.get(i, j), other.get(i, j));
                (a != b).then_some((i, j, a, b))
            })
            .collect()
    }
}

/// Rows are indexed by `j - i`, columns by `i`, and zeros print as dots.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "total:");
        }
        let ncols = self.length() + 1;
        let rows = self.entries.keys().map(|&(i, j)| j - i as i32);
        let (lo, hi) = (rows.clone().min().unwrap(), rows.max().unwrap());
        let cell = |i: usize, r: i32| match self.get(i, r + i as i32) {
            0 => ".".to_string(),
            b => b.to_string(),
        };
        let widths: Vec<usize> = (0..ncols)
            .map(|i| {
                let w = i.to_string().len().max(self.total(i).to_string().len());
                (lo..=hi).map(|r| cell(i, r).len()).fold(w, usize::max)
            })
            .collect();
        let label = (lo..=hi)
            .map(|r| format!("{r}:").len())
            .fold("total:".len(), usize::max);
        write!(f, "{:label$}", "")?;
        for (i, w) in widths.iter().enumerate() {
            write!(f, " {i:>w$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for (i, w) in widths.iter().enumerate() {
            write!(f, " {:>w$}", self.total(i))?;
        }
        writeln!(f)?;
        for r in lo..=hi {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for (i, w) in widths.iter().enumerate() {
                write!(f, " {:>w$}", cell(i, r))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Entry {
    i: usize,
    j: i32,
    beta: u64,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.entries.iter().map(|(&(i, j), &beta)| Entry { i, j, beta }))
    }
}
