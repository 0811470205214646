//! Fuzzy c-means with the standard alternating membership/centroid
//! updates.

use super::assignment::ClusterAssignment;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Centroid initialization.
pub enum CmeansInit {
    /// Sample distinct points with a seeded generator.
    Seed(u64),
    /// Start from the given centroids (e.g. a hard clustering result).
    Centroids(Vec<Vec<f64>>),
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// Membership grades of one point against the centroids.
///
/// A point coinciding with a centroid gets membership 1 there (split
/// evenly if it coincides with several).
pub fn memberships_for(point: &[f64], centroids: &[Vec<f64>], fuzzifier: f64) -> Vec<f64> {
    let k = centroids.len();
    let d: Vec<f64> = centroids.iter().map(|c| euclidean(point, c)).collect();
    let zero: Vec<usize> = (0..k).filter(|&j| d[j] == 0.0).collect();
    if !zero.is_empty() {
        let mut u = vec![0.0; k];
        for &j in &zero {
            u[j] = 1.0 / zero.len() as f64;
        }
        return u;
    }
    let exp = 2.0 / (fuzzifier - 1.0);
    (0..k)
        .map(|j| {
            let total: f64 = (0..k).map(|l| (d[j] / d[l]).powf(exp)).sum();
            1.0 / total
        })
        .collect()
}

/// Fuzzy c-means. Returns the membership matrix; `converged` is false
/// when `max_iter` was exhausted before the membership change fell
/// below `tol` (the partial result is still returned).
pub fn cmeans(
    points: &[Vec<f64>],
    k: usize,
    fuzzifier: f64,
    tol: f64,
    max_iter: usize,
    init: CmeansInit,
) -> Result<ClusterAssignment> {
    if k == 0 {
        return Err(Error::invalid("k must be >= 1"));
    }
    if !(fuzzifier > 1.0) {
        return Err(Error::invalid("fuzzifier must be > 1"));
    }
    if points.is_empty() || k > points.len() {
        return Err(Error::invalid("need at least k points"));
    }
    let dim = points[0].len();
    let mut centroids = match init {
        CmeansInit::Centroids(c) => {
            if c.len() != k || c.iter().any(|v| v.len() != dim) {
                return Err(Error::dimension("initial centroids must be k x dim"));
            }
            c
        }
        CmeansInit::Seed(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut chosen: Vec<usize> = Vec::new();
            while chosen.len() < k {
                let i = rng.gen_range(0..points.len());
                if !chosen.contains(&i) {
                    chosen.push(i);
                }
            }
            chosen.into_iter().map(|i| points[i].clone()).collect()
        }
    };

    let mut u: Vec<Vec<f64>> =
        points.iter().map(|p| memberships_for(p, &centroids, fuzzifier)).collect();
    let mut converged = false;
    for _ in 0..max_iter {
        // centroid update
        for j in 0..k {
            let mut num = vec![0.0; dim];
            let mut den = 0.0;
            for (p, urow) in points.iter().zip(&u) {
                let w = urow[j].powf(fuzzifier);
                den += w;
                for (s, v) in num.iter_mut().zip(p) {
                    *s += w * v;
                }
            }
            if den > 0.0 {
                for s in num.iter_mut() {
                    *s /= den;
                }
                centroids[j] = num;
            }
        }
        // membership update
        let next: Vec<Vec<f64>> =
            points.iter().map(|p| memberships_for(p, &centroids, fuzzifier)).collect();
        let max_delta = u
            .iter()
            .zip(&next)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
            .fold(0.0f64, f64::max);
        u = next;
        if max_delta < tol {
            converged = true;
            break;
        }
    }
    Ok(ClusterAssignment::fuzzy(u, k, converged))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coincident_point_gets_full_membership() {
        let centroids = vec![vec![1.0, 1.0], vec![5.0, 5.0]];
        let u = memberships_for(&[1.0, 1.0], &centroids, 2.0);
        assert_eq!(u, vec![1.0, 0.0]);
    }

    #[test]
    fn equidistant_point_splits_evenly() {
        let centroids = vec![vec![0.0, 0.0], vec![2.0, 0.0]];
        let u = memberships_for(&[1.0, 0.0], &centroids, 2.0);
        assert!((u[0] - 0.5).abs() < 1e-12);
        assert!((u[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn rows_sum_to_one() {
        let centroids = vec![vec![0.0, 0.0], vec![2.0, 0.0], vec![1.0, 3.0]];
        for p in [[0.3, 0.4], [1.9, 0.1], [1.0, 2.0]] {
            let u = memberships_for(&p, &centroids, 2.0);
            assert!((u.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn two_blobs_with_midpoint_outlier() {
        let mut pts = Vec::new();
        for i in 0..5 {
            pts.push(vec![0.0 + 0.01 * i as f64, 0.0]);
        }
        for i in 0..5 {
            pts.push(vec![10.0 + 0.01 * i as f64, 0.0]);
        }
        pts.push(vec![5.0, 0.0]); // midpoint
        let a = cmeans(&pts, 2, 2.0, 1e-6, 300, CmeansInit::Seed(1)).unwrap();
        assert!(a.converged);
        let u = a.memberships.as_ref().unwrap();
        for &m in &u[10] {
            assert!(m > 0.3 && m < 0.7, "outlier membership {m}");
        }
        for row in u {
            assert!((row.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn hardened_blobs_match_kmeans_structure() {
        let mut pts = Vec::new();
        for i in 0..4 {
            pts.push(vec![0.0 + 0.1 * i as f64, 0.0]);
        }
        for i in 0..4 {
            pts.push(vec![8.0 + 0.1 * i as f64, 0.0]);
        }
        let a = cmeans(&pts, 2, 2.0, 1e-6, 300, CmeansInit::Seed(3)).unwrap();
        let k = crate::cluster::kmeans(&pts, 2, 3).unwrap();
        // same grouping up to label permutation
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(
                    a.labels[i] == a.labels[j],
                    k.labels[i] == k.labels[j],
                    "rows {i},{j}"
                );
            }
        }
    }

    #[test]
    fn invalid_fuzzifier_rejected() {
        let pts = vec![vec![0.0], vec![1.0]];
        assert!(cmeans(&pts, 2, 1.0, 1e-6, 10, CmeansInit::Seed(0)).is_err());
    }

    #[test]
    fn non_convergence_reported_with_partial_result() {
        let mut pts = Vec::new();
        for i in 0..6 {
            pts.push(vec![i as f64, (i * i % 5) as f64]);
        }
        let a = cmeans(&pts, 3, 2.0, 0.0, 1, CmeansInit::Seed(0)).unwrap();
        assert!(!a.converged);
        assert_eq!(a.memberships.as_ref().unwrap().len(), 6);
    }
}
