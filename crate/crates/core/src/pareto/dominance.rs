//! Pareto dominance under the minimization convention.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{all_finite, Scalar};

fn check_pair<T: Scalar>(u: &[T], v: &[T]) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::invalid(format!(
            "objective vectors differ in length ({} vs {})",
            u.len(),
            v.len()
        )));
    }
    if !all_finite(u) || !all_finite(v) {
        return Err(Error::invalid("objective vector has a non-finite component"));
    }
    Ok(())
}

/// Unchecked dominance test. Callers guarantee equal lengths and finite values.
#[inline]
pub(crate) fn dominates_unchecked<T: Scalar>(u: &[T], v: &[T]) -> bool {
    let mut strictly_better = false;
    for (a, b) in u.iter().zip(v) {
        if a > b {
            return false;
        }
        if a < b {
            strictly_better = true;
        }
    }
    strictly_better
}

/// Unchecked `u ⪯ v`: `u` dominates `v` or the two are equal.
#[inline]
pub(crate) fn dominates_or_equal_unchecked<T: Scalar>(u: &[T], v: &[T]) -> bool {
    u.iter().zip(v).all(|(a, b)| a <= b)
}

/// Returns `true` iff `u` is no worse than `v` in every objective and strictly
/// better in at least one. Equal vectors do not dominate each other.
pub fn dominates<T: Scalar>(u: &[T], v: &[T]) -> Result<bool> {
    check_pair(u, v)?;
    Ok(dominates_unchecked(u, v))
}

/// Weak dominance: `dominates(u, v)` or `u == v` componentwise.
pub fn dominates_or_equal<T: Scalar>(u: &[T], v: &[T]) -> Result<bool> {
    check_pair(u, v)?;
    Ok(dominates_or_equal_unchecked(u, v))
}

/// Indices (ascending) of the points that no other point dominates.
///
/// Duplicate objective vectors are all kept. Two objectives use an
/// `O(n log n)` sort-and-sweep; higher dimensions fall back to pairwise checks.
pub fn non_dominated_filter<T: Scalar, P: AsRef<[T]>>(points: &[P]) -> Result<Vec<usize>> {
    let first = points
        .first()
        .ok_or_else(|| Error::invalid("non-dominated filter needs at least one point"))?
        .as_ref();
    let k = first.len();
    if k == 0 {
        return Err(Error::invalid("objective vectors must not be empty"));
    }
    for p in points {
        let p = p.as_ref();
        if p.len() != k {
            return Err(Error::invalid("objective vectors differ in length"));
        }
        if !all_finite(p) {
            return Err(Error::invalid("objective vector has a non-finite component"));
        }
    }
    if k == 2 {
        Ok(filter_biobjective(points))
    } else {
        Ok(filter_pairwise(points))
    }
}

fn filter_biobjective<T: Scalar, P: AsRef<[T]>>(points: &[P]) -> Vec<usize> {
    let at = |i: usize| points[i].as_ref();
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (at(a), at(b));
        pa[0]
            .partial_cmp(&pb[0])
            .unwrap_or(Ordering::Equal)
            .then(pa[1].partial_cmp(&pb[1]).unwrap_or(Ordering::Equal))
    });

    // Sweep in (f1, f2) order. A point survives iff its f2 is below every f2 seen
    // at a smaller f1, or it ties exactly with the current group minimum.
    let mut keep = Vec::new();
    let mut best_f2 = T::infinity();
    let mut g = 0;
    while g < order.len() {
        let f1 = at(order[g])[0];
        let mut end = g;
        while end < order.len() && at(order[end])[0] == f1 {
            end += 1;
        }
        // Within a group of equal f1 the list is sorted by f2; only the minimum
        // (and exact duplicates of it) can survive.
        let group_min = at(order[g])[1];
        if group_min < best_f2 {
            for &idx in &order[g..end] {
                if at(idx)[1] == group_min {
                    keep.push(idx);
                }
            }
            best_f2 = group_min;
        }
        g = end;
    }
    keep.sort_unstable();
    keep
}

fn filter_pairwise<T: Scalar, P: AsRef<[T]>>(points: &[P]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| {
            let pi = points[i].as_ref();
            !points
                .iter()
                .any(|q| dominates_unchecked(q.as_ref(), pi))
        })
        .collect()
}
