//! Density-based clustering over a precomputed distance matrix.

use super::assignment::ClusterAssignment;
use crate::error::{Error, Result};

const UNVISITED: i32 = -2;
const NOISE: i32 = -1;

/// Standard DBSCAN; noise rows get label -1. Deterministic: rows are
/// visited in index order.
pub fn dbscan(dist: &[Vec<f64>], eps: f64, min_pts: usize) -> Result<ClusterAssignment> {
    if !(eps > 0.0) {
        return Err(Error::invalid("eps must be > 0"));
    }
    let n = dist.len();
    let neighbors = |i: usize| -> Vec<usize> {
        (0..n).filter(|&j| dist[i][j] <= eps).collect()
    };
    let mut labels = vec![UNVISITED; n];
    let mut cluster = 0i32;
    for i in 0..n {
        if labels[i] != UNVISITED {
            continue;
        }
        let seed_neighbors = neighbors(i);
        if seed_neighbors.len() < min_pts {
            labels[i] = NOISE;
            continue;
        }
        labels[i] = cluster;
        let mut queue = seed_neighbors;
        let mut qi = 0;
        while qi < queue.len() {
            let j = queue[qi];
            qi += 1;
            if labels[j] == NOISE {
                labels[j] = cluster;
            }
            if labels[j] != UNVISITED {
                continue;
            }
            labels[j] = cluster;
            let next = neighbors(j);
            if next.len() >= min_pts {
                queue.extend(next);
            }
        }
        cluster += 1;
    }
    Ok(ClusterAssignment { labels, k: cluster as usize, memberships: None, converged: true })
}
