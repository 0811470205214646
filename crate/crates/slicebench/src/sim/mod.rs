//! Synthetic slice telemetry: baseline generators per measurement and
//! per-profile perturbation rules constrained by the effect matrix.

mod baseline;
mod config;
mod generate;
mod rules;

pub use baseline::{BaselineModel, GeneratorSpec};
pub use config::{default_config, SimConfig};
pub use generate::{generate_dataset, generate_run};
pub use rules::{PerturbationMode, PerturbationRule};
