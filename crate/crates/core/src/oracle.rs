//! Brute-force reference for maximal and supermaximal repeats.
//!
//! Every substring is counted directly (overlapping occurrences included) and
//! the definitions are applied literally. Quadratic memory and roughly cubic
//! time; only meant for small inputs in tests.

use std::collections::{BTreeSet, HashMap};

use crate::{Error, Result};

/// Inputs longer than this are refused.
pub const ORACLE_MAX_LEN: usize = 4096;

/// A repeated string with its sorted 1-based start positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OracleRepeat {
    pub bytes: Vec<u8>,
    pub positions: Vec<usize>,
}

/// Every distinct substring mapped to its 0-based start positions.
struct Occurrences<'a> {
    text: &'a [u8],
    table: HashMap<&'a [u8], Vec<usize>>,
}

impl<'a> Occurrences<'a> {
    fn new(text: &'a [u8]) -> Result<Self> {
        if text.len() > ORACLE_MAX_LEN {
            return Err(Error::OracleInputTooLarge {
                len: text.len(),
                max: ORACLE_MAX_LEN,
            });
        }
        let mut table: HashMap<&[u8], Vec<usize>> = HashMap::new();
        for start in 0..text.len() {
            for end in start + 1..=text.len() {
                table.entry(&text[start..end]).or_default().push(start);
            }
        }
        Ok(Occurrences { text, table })
    }

    fn count(&self, s: &[u8]) -> usize {
        self.table.get(s).map_or(0, Vec::len)
    }

    /// Occurrence counts of every one-symbol extension of `u` (left and
    /// right) that occurs in the text.
    fn extension_counts(&self, u: &[u8], starts: &[usize]) -> Vec<usize> {
        let n = self.text.len();
        let mut out = Vec::new();
        for &p in starts {
            if p > 0 {
                out.push(self.count(&self.text[p - 1..p + u.len()]));
            }
            if p + u.len() < n {
                out.push(self.count(&self.text[p..p + u.len() + 1]));
            }
        }
        out
    }

    fn select(&self, keep: impl Fn(&[u8], &[usize]) -> bool) -> BTreeSet<OracleRepeat> {
        self.table
            .iter()
            .filter(|(u, starts)| starts.len() >= 2 && keep(u, starts))
            .map(|(u, starts)| OracleRepeat {
                bytes: u.to_vec(),
                positions: starts.iter().map(|p| p + 1).collect(),
            })
            .collect()
    }
}

/// Substrings occurring at least twice whose every extension occurs fewer
/// times. Checking one-symbol extensions suffices: a longer extension contains
/// a one-symbol extension and cannot occur more often than it.
pub fn oracle_maximal_repeats(text: &[u8]) -> Result<BTreeSet<OracleRepeat>> {
    let occ = Occurrences::new(text)?;
    Ok(occ.select(|u, starts| {
        occ.extension_counts(u, starts)
            .into_iter()
            .all(|c| c < starts.len())
    }))
}

/// Substrings occurring at least twice whose every extension occurs at most
/// once.
pub fn oracle_supermaximal_repeats(text: &[u8]) -> Result<BTreeSet<OracleRepeat>> {
    let occ = Occurrences::new(text)?;
    Ok(occ.select(|u, starts| occ.extension_counts(u, starts).into_iter().all(|c| c <= 1)))
}

/// Which extension test [`oracle_by_all_extensions`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Maximality {
    Maximal,
    Supermaximal,
}

/// Same sets as the functions above, but testing every extension `x u y`
/// (`|x| + |y| >= 1`) instead of one-symbol ones. Far slower; it exists to
/// check that one-symbol extensions are enough.
pub fn oracle_by_all_extensions(text: &[u8], kind: Maximality) -> Result<BTreeSet<OracleRepeat>> {
    let occ = Occurrences::new(text)?;
    let n = text.len();
    Ok(occ.select(|u, starts| {
        let limit = match kind {
            Maximality::Maximal => starts.len() - 1,
            Maximality::Supermaximal => 1,
        };
        starts.iter().all(|&p| {
            (0..=p).all(|left| {
                (0..=n - p - u.len()).all(|right| {
                    left + right == 0 || occ.count(&text[p - left..p + u.len() + right]) <= limit
                })
            })
        })
    }))
}
