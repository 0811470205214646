//! Classical metric multidimensional scaling of a distance matrix into
//! two dimensions.

use crate::error::{Error, Result};
use nalgebra::DMatrix;

/// Embeds a symmetric zero-diagonal distance matrix into 2-D via double
/// centering and eigendecomposition. Axes are ordered by eigenvalue;
/// each axis is flipped so its first nonzero coordinate is positive.
pub fn embed2d(dist: &[Vec<f64>]) -> Result<Vec<(f64, f64)>> {
    let n = dist.len();
    if n == 0 {
        return Err(Error::invalid("empty distance matrix"));
    }
    for (i, row) in dist.iter().enumerate() {
        if row.len() != n {
            return Err(Error::dimension("distance matrix must be square"));
        }
        if dist[i][i].abs() > 1e-9 {
            return Err(Error::invalid("distance matrix must have a zero diagonal"));
        }
        for j in 0..n {
            if (dist[i][j] - dist[j][i]).abs() > 1e-9 {
                return Err(Error::invalid("distance matrix must be symmetric"));
            }
        }
    }

    // B = -1/2 J D^2 J with J = I - 11'/n
    let mut b = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] = -0.5 * dist[i][j] * dist[i][j];
        }
    }
    let row_means: Vec<f64> = (0..n).map(|i| b.row(i).sum() / n as f64).collect();
    let col_means: Vec<f64> = (0..n).map(|j| b.column(j).sum() / n as f64).collect();
    let grand = row_means.iter().sum::<f64>() / n as f64;
    for i in 0..n {
        for j in 0..n {
            b[(i, j)] -= row_means[i] + col_means[j] - grand;
        }
    }

    let eig = b.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &c| {
        eig.eigenvalues[c].partial_cmp(&eig.eigenvalues[a]).unwrap().then(a.cmp(&c))
    });

    let mut coords = vec![(0.0, 0.0); n];
    for (axis, &e) in order.iter().take(2).enumerate() {
        let lambda = eig.eigenvalues[e].max(0.0);
        let scale = lambda.sqrt();
        let mut axis_vals: Vec<f64> =
            (0..n).map(|i| eig.eigenvectors[(i, e)] * scale).collect();
        // deterministic sign: first nonzero coordinate positive
        if let Some(&first) = axis_vals.iter().find(|v| v.abs() > 1e-12) {
            if first < 0.0 {
                for v in axis_vals.iter_mut() {
                    *v = -*v;
                }
            }
        }
        for (i, v) in axis_vals.into_iter().enumerate() {
            if axis == 0 {
                coords[i].0 = v;
            } else {
                coords[i].1 = v;
            }
        }
    }
    Ok(coords)
}
