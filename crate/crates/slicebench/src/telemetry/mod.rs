//! Measurement catalog, network locations, bottleneck profiles and the
//! run/dataset containers shared by the rest of the pipeline.

mod effect;
mod io;
mod kpi;
mod profile;
mod run;

pub use effect::{effect_of, Effect, EffectMatrix};
pub use io::{format_sig, read_dataset, write_dataset, DatasetManifest, ManifestEntry};
pub use kpi::{catalog, Domain, KpiKind, Layer, Location, Measurement, Unit};
pub use profile::{
    ParameterUnit,
    builtin_profiles, profile_domain, profile_spec, profile_type, valid_locations,
    BottleneckType, ProfileComponent, ProfileSpec, SeverityLevel, BASELINE_PROFILE_ID,
    COMPOSITE_PROFILE_IDS, SINGULAR_PROFILE_IDS,
};
pub use run::{Dataset, MeasurementSeries, RunRecord};
