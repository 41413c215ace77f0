use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::{self, Chain};
use crate::error::Result;
use crate::exec::Exec;
use crate::linmap::{LinMap, Witness};

/// Outcome of one named identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomEntry {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    /// Free-form detail for failures that are not coordinate mismatches.
    pub detail: Option<String>,
}

impl AxiomEntry {
    pub fn pass(name: impl Into<String>) -> Self {
        AxiomEntry { name: name.into(), passed: true, witness: None, detail: None }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        AxiomEntry { name: name.into(), passed: false, witness: None, detail: Some(detail.into()) }
    }

    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Self {
        AxiomEntry { name: name.into(), passed: witness.is_none(), witness, detail: None }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

impl fmt::Display for AxiomEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, if self.passed { "PASS" } else { "FAIL" })?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

/// Ordered list of checked identities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub entries: Vec<AxiomEntry>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn push(&mut self, entry: AxiomEntry) {
        self.entries.push(entry);
    }

    pub fn get(&self, name: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn first_failure(&self) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| !e.passed)
    }

    /// Appends `other`'s entries with a `prefix.` on each name.
    pub fn extend_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for mut e in other.entries {
            e.name = format!("{prefix}.{}", e.name);
            self.entries.push(e);
        }
    }

    /// Collapses a sub-report into one entry carrying its first failure.
    pub fn summarize(&self, name: impl Into<String>) -> AxiomEntry {
        match self.first_failure() {
            None => AxiomEntry::pass(name),
            Some(f) => AxiomEntry {
                name: name.into(),
                passed: false,
                witness: f.witness.clone(),
                detail: Some(match &f.detail {
                    Some(d) => format!("{}: {d}", f.name),
                    None => f.name.clone(),
                }),
            },
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromIterator<AxiomEntry> for AxiomReport {
    fn from_iter<T: IntoIterator<Item = AxiomEntry>>(iter: T) -> Self {
        AxiomReport { entries: iter.into_iter().collect() }
    }
}

/// Seed used for every sampled check unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 20_160_523;

/// Which domain columns an identity is checked on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Coverage {
    #[default]
    Full,
    /// `count` uniformly random columns drawn from a ChaCha8 stream.
    Sampled { seed: u64, count: usize },
    /// Full up to `limit` columns, sampled above.
    Bounded { limit: usize, seed: u64, count: usize },
}

impl Coverage {
    pub fn sampled(count: usize) -> Self {
        Coverage::Sampled { seed: DEFAULT_SEED, count }
    }

    pub fn bounded(limit: usize, count: usize) -> Self {
        Coverage::Bounded { limit, seed: DEFAULT_SEED, count }
    }

    /// Columns to check in a domain of size `domain`; `None` means all.
    pub fn columns(self, domain: usize) -> Option<Vec<usize>> {
        let (seed, count) = match self {
            Coverage::Full => return None,
            Coverage::Sampled { seed, count } => (seed, count),
            Coverage::Bounded { limit, seed, count } => {
                if domain <= limit {
                    return None;
                }
                (seed, count)
            }
        };
        if count >= domain {
            return None;
        }
        Some(sample_indices(seed, domain, count))
    }

    pub fn is_exhaustive(self, domain: usize) -> bool {
        self.columns(domain).is_none()
    }
}

/// `count` draws from `0..domain`, deduplicated and sorted.
pub fn sample_indices(seed: u64, domain: usize, count: usize) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let set: BTreeSet<usize> = (0..count).map(|_| rng.random_range(0..domain)).collect();
    set.into_iter().collect()
}

/// Checks `lhs = rhs` on the columns selected by `cov`.
pub fn check_chains_with(name: &str, lhs: &Chain<'_>, rhs: &Chain<'_>, cov: Coverage) -> Result<AxiomEntry> {
    let entry = match cov.columns(lhs.domain()) {
        None => check_chains(name, lhs, rhs)?,
        Some(cols) => {
            let n = cols.len();
            check_chains_sampled(name, lhs, rhs, &cols)?.with_detail(format!("{n} sampled columns"))
        }
    };
    Ok(entry)
}

/// Checks `lhs = rhs` as linear maps.
pub fn check_chains(name: &str, lhs: &Chain<'_>, rhs: &Chain<'_>) -> Result<AxiomEntry> {
    Ok(AxiomEntry::from_witness(name, chain::first_difference(lhs, rhs, Exec::default())?))
}

/// Checks `lhs = rhs` on selected domain columns only.
pub fn check_chains_sampled(name: &str, lhs: &Chain<'_>, rhs: &Chain<'_>, cols: &[usize]) -> Result<AxiomEntry> {
    Ok(AxiomEntry::from_witness(name, chain::first_difference_sampled(lhs, rhs, cols, Exec::default())?))
}

pub fn check_maps(name: &str, lhs: &LinMap, rhs: &LinMap) -> Result<AxiomEntry> {
    Ok(AxiomEntry::from_witness(name, lhs.first_difference(rhs)?))
}
