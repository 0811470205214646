//! Distance metrics, clustering algorithms, the purity metric and the
//! 2-D distance-matrix embedding.

mod agglomerative;
mod assignment;
mod cmeans;
mod dbscan;
mod distance;
mod embed;
mod kmeans;
mod purity;

pub use agglomerative::{agglomerative, LinkageCriterion};
pub use assignment::ClusterAssignment;
pub use cmeans::{cmeans, memberships_for, CmeansInit};
pub use dbscan::dbscan;
pub use distance::{distance, pairwise_distances, points_from_matrix, DistanceMetric};
pub use embed::embed2d;
pub use kmeans::kmeans;
pub use purity::purity;
