//! Desk-scale simulator of a cloudified mobile-network slice plus the
//! analytics pipeline that identifies and attributes injected bottlenecks.
//!
//! The crate is organized along the pipeline:
//!
//! * [`telemetry`] — measurement catalog, locations, layers, bottleneck
//!   profiles and the run/dataset containers.
//! * [`sim`] — synthetic baseline telemetry and per-profile perturbations.
//! * [`features`] — distribution features per measurement, baseline
//!   screening and normalization.
//! * [`cluster`] — distance metrics, clustering algorithms, the purity
//!   metric and a 2-D embedding of distance matrices.
//! * [`select`] — hinge-basis regression (MARS) feature ranking.
//! * [`identify`] — centralized, distributed and fuzzy identification
//!   pipelines plus composite attribution scoring.
//! * [`overhead`] — transfer/processing unit accounting.
//! * [`pipeline`] — end-to-end experiment orchestration and the summary
//!   report.
pub mod cluster;
pub mod error;
pub mod features;
pub mod sim;
pub mod telemetry;

pub use error::{Error, Result};
