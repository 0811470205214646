//! Lloyd's k-means with k-means++ seeding.

use super::assignment::ClusterAssignment;
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_ITER: usize = 100;

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn plus_plus_seed(points: &[Vec<f64>], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let mut centroids: Vec<Vec<f64>> = Vec::with_capacity(k);
    centroids.push(points[rng.gen_range(0..points.len())].clone());
    while centroids.len() < k {
        let d2: Vec<f64> = points
            .iter()
            .map(|p| centroids.iter().map(|c| sq_dist(p, c)).fold(f64::INFINITY, f64::min))
            .collect();
        let total: f64 = d2.iter().sum();
        let next = if total > 0.0 {
            let mut target = rng.gen::<f64>() * total;
            let mut chosen = points.len() - 1;
            for (i, &w) in d2.iter().enumerate() {
                target -= w;
                if target <= 0.0 {
                    chosen = i;
                    break;
                }
            }
            chosen
        } else {
            rng.gen_range(0..points.len())
        };
        centroids.push(points[next].clone());
    }
    centroids
}

/// Standard k-means. Deterministic for a fixed seed.
pub fn kmeans(points: &[Vec<f64>], k: usize, seed: u64) -> Result<ClusterAssignment> {
    if k == 0 {
        return Err(Error::invalid("k must be >= 1"));
    }
    if k > points.len() {
        return Err(Error::invalid(format!("k = {k} exceeds row count {}", points.len())));
    }
    let dim = points[0].len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut centroids = plus_plus_seed(points, k, &mut rng);
    let mut labels = vec![0i32; points.len()];
    let mut converged = false;

    for _ in 0..MAX_ITER {
        let mut changed = false;
        for (i, p) in points.iter().enumerate() {
            let mut best = 0usize;
            let mut best_d = f64::INFINITY;
            for (c, centroid) in centroids.iter().enumerate() {
                let d = sq_dist(p, centroid);
                if d < best_d {
                    best_d = d;
                    best = c;
                }
            }
            if labels[i] != best as i32 {
                labels[i] = best as i32;
                changed = true;
            }
        }
        if !changed {
            converged = true;
            break;
        }
        let mut sums = vec![vec![0.0; dim]; k];
        let mut counts = vec![0usize; k];
        for (i, p) in points.iter().enumerate() {
            let c = labels[i] as usize;
            counts[c] += 1;
            for (s, v) in sums[c].iter_mut().zip(p) {
                *s += v;
            }
        }
        for c in 0..k {
            if counts[c] > 0 {
                for s in sums[c].iter_mut() {
                    *s /= counts[c] as f64;
                }
                centroids[c] = sums[c].clone();
            } else {
                // re-seed an empty cluster at the point farthest from its centroid
                let far = (0..points.len())
                    .max_by(|&a, &b| {
                        let da = sq_dist(&points[a], &centroids[labels[a] as usize]);
                        let db = sq_dist(&points[b], &centroids[labels[b] as usize]);
                        da.partial_cmp(&db).unwrap()
                    })
                    .unwrap();
                centroids[c] = points[far].clone();
            }
        }
    }
    Ok(ClusterAssignment { labels, k, memberships: None, converged })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::purity::purity;

    fn blobs() -> (Vec<Vec<f64>>, Vec<u32>) {
        let mut pts = Vec::new();
        let mut labels = Vec::new();
        for i in 0..6 {
            pts.push(vec![0.0 + 0.05 * i as f64, 0.1]);
            labels.push(0);
        }
        for i in 0..6 {
            pts.push(vec![10.0 + 0.05 * i as f64, 9.9]);
            labels.push(1);
        }
        (pts, labels)
    }

    #[test]
    fn two_blobs_recovered() {
        let (pts, labels) = blobs();
        let a = kmeans(&pts, 2, 7).unwrap();
        assert_eq!(purity(&a, &labels).unwrap(), 1.0);
        assert!(a.converged);
    }

    #[test]
    fn k_one_centroid_is_column_mean() {
        let (pts, _) = blobs();
        let a = kmeans(&pts, 1, 3).unwrap();
        assert!(a.labels.iter().all(|&l| l == 0));
    }

    #[test]
    fn deterministic_given_seed() {
        let (pts, _) = blobs();
        let a = kmeans(&pts, 2, 11).unwrap();
        let b = kmeans(&pts, 2, 11).unwrap();
        assert_eq!(a.labels, b.labels);
    }

    #[test]
    fn k_larger_than_rows_rejected() {
        let (pts, _) = blobs();
        assert!(kmeans(&pts, 13, 0).is_err());
    }
}
