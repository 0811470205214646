//! Purity of a cluster assignment against ground-truth labels.

use super::assignment::ClusterAssignment;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// Fraction of rows covered by their cluster's majority label. Fuzzy
/// assignments are hardened by argmax first; noise rows (label -1)
/// count as their own cluster.
pub fn purity(assignment: &ClusterAssignment, labels: &[u32]) -> Result<f64> {
    if assignment.labels.len() != labels.len() {
        return Err(Error::dimension(format!(
            "assignment covers {} rows, labels {}",
            assignment.labels.len(),
            labels.len()
        )));
    }
    if labels.is_empty() {
        return Err(Error::invalid("purity of an empty assignment is undefined"));
    }
    let mut per_cluster: BTreeMap<i32, BTreeMap<u32, usize>> = BTreeMap::new();
    for (&cluster, &label) in assignment.labels.iter().zip(labels) {
        *per_cluster.entry(cluster).or_default().entry(label).or_insert(0) += 1;
    }
    let majority_total: usize = per_cluster
        .values()
        .map(|counts| counts.values().copied().max().unwrap_or(0))
        .sum();
    Ok(majority_total as f64 / labels.len() as f64)
}
