//! Distance metrics and pairwise distance matrices.

use crate::error::{Error, Result};
use crate::features::FeatureMatrix;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMetric {
    /// Sum of coordinate-wise absolute differences over sum of
    /// coordinate-wise maxima. Defined for non-negative vectors;
    /// equals the Tanimoto distance form on that domain.
    Soergel,
    Euclidean,
    Manhattan,
}

impl DistanceMetric {
    pub fn name(self) -> &'static str {
        match self {
            DistanceMetric::Soergel => "soergel",
            DistanceMetric::Euclidean => "euclidean",
            DistanceMetric::Manhattan => "manhattan",
        }
    }
}

/// Distance between two equal-dimension vectors.
pub fn distance(metric: DistanceMetric, x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::dimension(format!("{} vs {}", x.len(), y.len())));
    }
    match metric {
        DistanceMetric::Soergel => soergel(x, y),
        DistanceMetric::Euclidean => {
            Ok(x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt())
        }
        DistanceMetric::Manhattan => Ok(x.iter().zip(y).map(|(a, b)| (a - b).abs()).sum()),
    }
}

fn soergel(x: &[f64], y: &[f64]) -> Result<f64> {
    let mut num = 0.0;
    let mut den = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        if a < 0.0 || b < 0.0 {
            return Err(Error::invalid("Soergel distance requires non-negative coordinates"));
        }
        num += (a - b).abs();
        den += a.max(b);
    }
    // both vectors all-zero: identical, distance 0
    if den == 0.0 {
        Ok(0.0)
    } else {
        Ok(num / den)
    }
}

/// Extracts the rows of `matrix` restricted to `cols` as dense points.
pub fn points_from_matrix(matrix: &FeatureMatrix, rows: &[usize], cols: &[usize]) -> Vec<Vec<f64>> {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| matrix.values[r][c]).collect())
        .collect()
}

/// Full symmetric pairwise distance matrix over the given points.
pub fn pairwise_distances(metric: DistanceMetric, points: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    let n = points.len();
    let rows: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0.0; n];
            for j in 0..n {
                if j != i {
                    row[j] = distance(metric, &points[i], &points[j])?;
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    Ok(rows)
}
