//! Hard and fuzzy cluster assignments.

use serde::{Deserialize, Serialize};

/// Mapping of rows to clusters. `labels[i] == -1` marks noise (DBSCAN).
/// Fuzzy results carry the full membership matrix; `labels` then holds
/// the hardened (argmax) assignment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterAssignment {
    pub labels: Vec<i32>,
    /// Number of clusters (excluding noise).
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub memberships: Option<Vec<Vec<f64>>>,
    pub converged: bool,
}

impl ClusterAssignment {
    pub fn hard(labels: Vec<i32>, k: usize) -> Self {
        ClusterAssignment { labels, k, memberships: None, converged: true }
    }

    pub fn fuzzy(memberships: Vec<Vec<f64>>, k: usize, converged: bool) -> Self {
        let labels = memberships.iter().map(|row| argmax(row) as i32).collect();
        ClusterAssignment { labels, k, memberships: Some(memberships), converged }
    }

    pub fn n_rows(&self) -> usize {
        self.labels.len()
    }

    /// Row indices belonging to `cluster`.
    pub fn members(&self, cluster: i32) -> Vec<usize> {
        (0..self.labels.len()).filter(|&i| self.labels[i] == cluster).collect()
    }
}

pub(crate) fn argmax(row: &[f64]) -> usize {
    let mut best = 0;
    for (i, &v) in row.iter().enumerate() {
        if v > row[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fuzzy_hardens_by_argmax() {
        let a = ClusterAssignment::fuzzy(
            vec![vec![0.7, 0.3], vec![0.2, 0.8], vec![0.5, 0.5]],
            2,
            true,
        );
        assert_eq!(a.labels, vec![0, 1, 0]); // ties resolve to the lowest index
        assert_eq!(a.members(0), vec![0, 2]);
    }
}
