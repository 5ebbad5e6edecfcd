//! Bounded archive of mutually non-dominated solutions.

use std::cmp::Ordering;

use super::dominance::{dominates_or_equal_unchecked, dominates_unchecked};
use crate::error::{Error, Result};
use crate::scalar::{all_finite, Scalar};

/// Default number of entries kept before crowding-distance truncation kicks in.
pub const DEFAULT_ARCHIVE_CAPACITY: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct ArchiveEntry<T> {
    pub design: Vec<T>,
    pub objectives: Vec<T>,
}

/// What happened to a candidate offered to the archive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertOutcome {
    /// The candidate was added; `evicted` entries it dominated were dropped and
    /// `truncated` reports whether crowding truncation removed an entry.
    Inserted { evicted: usize, truncated: bool },
    /// An existing entry dominates or equals the candidate.
    Rejected,
}

/// Mutually non-dominated `(design, objectives)` pairs, at most `capacity` of them.
///
/// Entries keep insertion order. Objective vectors are unique by exact equality.
#[derive(Debug, Clone, PartialEq)]
pub struct ParetoArchive<T> {
    entries: Vec<ArchiveEntry<T>>,
    capacity: usize,
}

impl<T: Scalar> ParetoArchive<T> {
    pub fn new(capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::invalid("archive capacity must be positive"));
        }
        Ok(Self {
            entries: Vec::with_capacity(capacity + 1),
            capacity,
        })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[ArchiveEntry<T>] {
        &self.entries
    }

    pub fn objectives(&self) -> impl Iterator<Item = &[T]> + '_ {
        self.entries.iter().map(|e| e.objectives.as_slice())
    }

    pub fn into_entries(self) -> Vec<ArchiveEntry<T>> {
        self.entries
    }

    /// Offers a candidate. Anything weakly dominating it blocks the insert;
    /// otherwise it joins and evicts every entry it dominates.
    pub fn insert(&mut self, design: &[T], objectives: &[T]) -> Result<InsertOutcome> {
        if objectives.is_empty() || !all_finite(objectives) {
            return Err(Error::invalid("archive candidates need finite objectives"));
        }
        if let Some(first) = self.entries.first() {
            if first.objectives.len() != objectives.len() {
                return Err(Error::invalid(format!(
                    "archive holds {}-objective entries, got {}",
                    first.objectives.len(),
                    objectives.len()
                )));
            }
        }
        if self
            .entries
            .iter()
            .any(|e| dominates_or_equal_unchecked(&e.objectives, objectives))
        {
            return Ok(InsertOutcome::Rejected);
        }
        let before = self.entries.len();
        self.entries
            .retain(|e| !dominates_unchecked(objectives, &e.objectives));
        let evicted = before - self.entries.len();
        self.entries.push(ArchiveEntry {
            design: design.to_vec(),
            objectives: objectives.to_vec(),
        });
        let truncated = if self.entries.len() > self.capacity {
            let victim = least_crowded(&self.entries);
            self.entries.remove(victim);
            true
        } else {
            false
        };
        Ok(InsertOutcome::Inserted { evicted, truncated })
    }

    /// Crowding distance of every entry, in entry order.
    pub fn crowding_distances(&self) -> Vec<T> {
        crowding_distances(&self.entries)
    }
}

fn crowding_distances<T: Scalar>(entries: &[ArchiveEntry<T>]) -> Vec<T> {
    let n = entries.len();
    let mut dist = vec![T::zero(); n];
    if n == 0 {
        return dist;
    }
    let k = entries[0].objectives.len();
    let mut order: Vec<usize> = (0..n).collect();
    for m in 0..k {
        let value = |i: usize| entries[i].objectives[m];
        order.sort_by(|&a, &b| {
            value(a)
                .partial_cmp(&value(b))
                .unwrap_or(Ordering::Equal)
                .then(a.cmp(&b))
        });
        dist[order[0]] = T::infinity();
        dist[order[n - 1]] = T::infinity();
        let span = value(order[n - 1]) - value(order[0]);
        if span <= T::zero() {
            continue;
        }
        for w in order.windows(3) {
            let gap = (value(w[2]) - value(w[0])) / span;
            dist[w[1]] = dist[w[1]] + gap;
        }
    }
    dist
}

/// Index of the entry to drop: smallest crowding distance, largest index on ties.
fn least_crowded<T: Scalar>(entries: &[ArchiveEntry<T>]) -> usize {
    let dist = crowding_distances(entries);
    let mut victim = 0;
    for (i, &d) in dist.iter().enumerate() {
        if d <= dist[victim] {
            victim = i;
        }
    }
    victim
}
