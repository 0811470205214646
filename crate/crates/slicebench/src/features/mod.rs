//! Distribution features per measurement, baseline screening and
//! min-max normalization.

mod matrix;
mod moments;

pub use matrix::{read_matrix, write_matrix, ColumnMeta, FeatureMatrix, MatrixSidecar, RowInfo};
pub use moments::{moments, Moments, Statistic};
