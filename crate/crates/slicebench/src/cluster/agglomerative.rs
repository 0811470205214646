//! Bottom-up hierarchical clustering over a precomputed distance matrix.

use super::assignment::ClusterAssignment;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkageCriterion {
    Average,
    Single,
    Complete,
}

impl LinkageCriterion {
    pub fn name(self) -> &'static str {
        match self {
            LinkageCriterion::Average => "average",
            LinkageCriterion::Single => "single",
            LinkageCriterion::Complete => "complete",
        }
    }
}

impl Default for LinkageCriterion {
    fn default() -> Self {
        LinkageCriterion::Average
    }
}

/// Merges clusters until `k` remain. Deterministic: among equal-distance
/// candidate merges the pair with the lowest representative indices wins;
/// a cluster is represented by its smallest member row.
pub fn agglomerative(
    dist: &[Vec<f64>],
    k: usize,
    linkage: LinkageCriterion,
) -> Result<ClusterAssignment> {
    let n = dist.len();
    if k == 0 {
        return Err(Error::invalid("k must be >= 1"));
    }
    if k > n {
        return Err(Error::invalid(format!("k = {k} exceeds row count {n}")));
    }

    // active cluster state; cluster id = index into these vectors
    let mut active: Vec<bool> = vec![true; n];
    let mut size: Vec<f64> = vec![1.0; n];
    let mut rep: Vec<usize> = (0..n).collect();
    let mut d: Vec<Vec<f64>> = dist.to_vec();
    let mut member_of: Vec<usize> = (0..n).collect();

    let mut remaining = n;
    while remaining > k {
        // find the closest active pair, tie-broken by representatives
        let mut best: Option<(usize, usize, f64)> = None;
        for i in 0..n {
            if !active[i] {
                continue;
            }
            for j in (i + 1)..n {
                if !active[j] {
                    continue;
                }
                let dij = d[i][j];
                let better = match best {
                    None => true,
                    Some((bi, bj, bd)) => {
                        dij < bd
                            || (dij == bd
                                && (rep[i].min(rep[j]), rep[i].max(rep[j]))
                                    < (rep[bi].min(rep[bj]), rep[bi].max(rep[bj])))
                    }
                };
                if better {
                    best = Some((i, j, dij));
                }
            }
        }
        let (a, b, _) = best.expect("at least two active clusters");

        // Lance-Williams update of distances to the merged cluster
        for c in 0..n {
            if !active[c] || c == a || c == b {
                continue;
            }
            let dac = d[a][c];
            let dbc = d[b][c];
            let merged = match linkage {
                LinkageCriterion::Average => {
                    (size[a] * dac + size[b] * dbc) / (size[a] + size[b])
                }
                LinkageCriterion::Single => dac.min(dbc),
                LinkageCriterion::Complete => dac.max(dbc),
            };
            d[a][c] = merged;
            d[c][a] = merged;
        }
        size[a] += size[b];
        rep[a] = rep[a].min(rep[b]);
        active[b] = false;
        for m in member_of.iter_mut() {
            if *m == b {
                *m = a;
            }
        }
        remaining -= 1;
    }

    // stable labels: clusters ordered by smallest member row
    let mut cluster_ids: Vec<usize> = (0..n).filter(|&c| active[c]).collect();
    cluster_ids.sort_by_key(|&c| rep[c]);
    let label_of = |cluster: usize| cluster_ids.iter().position(|&c| c == cluster).unwrap() as i32;
    let labels: Vec<i32> = member_of.iter().map(|&m| label_of(m)).collect();
    Ok(ClusterAssignment::hard(labels, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::distance::{pairwise_distances, DistanceMetric};
    use crate::cluster::purity::purity;

    fn blob_points() -> Vec<Vec<f64>> {
        let mut pts = Vec::new();
        for i in 0..5 {
            pts.push(vec![0.1 + 0.01 * i as f64, 0.2]);
        }
        for i in 0..5 {
            pts.push(vec![5.0 + 0.01 * i as f64, 4.8]);
        }
        pts
    }

    #[test]
    fn k_equals_rows_gives_singletons() {
        let d = pairwise_distances(DistanceMetric::Euclidean, &blob_points()).unwrap();
        let a = agglomerative(&d, 10, LinkageCriterion::Average).unwrap();
        let mut labels = a.labels.clone();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 10);
    }

    #[test]
    fn k_one_gives_single_cluster() {
        let d = pairwise_distances(DistanceMetric::Euclidean, &blob_points()).unwrap();
        let a = agglomerative(&d, 1, LinkageCriterion::Average).unwrap();
        assert!(a.labels.iter().all(|&l| l == 0));
    }

    #[test]
    fn separated_groups_recovered_with_purity_one() {
        let d = pairwise_distances(DistanceMetric::Euclidean, &blob_points()).unwrap();
        for linkage in
            [LinkageCriterion::Average, LinkageCriterion::Single, LinkageCriterion::Complete]
        {
            let a = agglomerative(&d, 2, linkage).unwrap();
            let labels: Vec<u32> = (0..10).map(|i| if i < 5 { 0 } else { 1 }).collect();
            assert_eq!(purity(&a, &labels).unwrap(), 1.0);
        }
    }

    #[test]
    fn k_larger_than_rows_rejected() {
        let d = pairwise_distances(DistanceMetric::Euclidean, &blob_points()).unwrap();
        assert!(agglomerative(&d, 11, LinkageCriterion::Average).is_err());
        assert!(agglomerative(&d, 0, LinkageCriterion::Average).is_err());
    }

    #[test]
    fn smaller_k_is_a_coarsening() {
        // every pair sharing a cluster at k=4 still shares one at k=2
        let pts: Vec<Vec<f64>> = (0..12)
            .map(|i| vec![(i as f64 * 0.711).sin().abs() * 3.0, (i as f64 * 1.37).cos().abs()])
            .collect();
        let d = pairwise_distances(DistanceMetric::Euclidean, &pts).unwrap();
        let fine = agglomerative(&d, 4, LinkageCriterion::Average).unwrap();
        let coarse = agglomerative(&d, 2, LinkageCriterion::Average).unwrap();
        for i in 0..12 {
            for j in 0..12 {
                if fine.labels[i] == fine.labels[j] {
                    assert_eq!(coarse.labels[i], coarse.labels[j]);
                }
            }
        }
    }

    #[test]
    fn deterministic_on_tied_distances() {
        // four identical points: all distances zero, ties everywhere
        let pts = vec![vec![1.0, 1.0]; 4];
        let d = pairwise_distances(DistanceMetric::Euclidean, &pts).unwrap();
        let a = agglomerative(&d, 2, LinkageCriterion::Average).unwrap();
        let b = agglomerative(&d, 2, LinkageCriterion::Average).unwrap();
        assert_eq!(a.labels, b.labels);
        // lowest-pair-index merges first: rows 0,1 merge, then {0,1},2
        assert_eq!(a.labels, vec![0, 0, 0, 1]);
    }
}
