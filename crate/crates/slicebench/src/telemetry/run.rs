//! Run and dataset containers.

use super::kpi::{catalog, Measurement};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One KPI time-series at one location for one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasurementSeries {
    pub measurement: Measurement,
    pub samples: Vec<f64>,
}

impl MeasurementSeries {
    pub fn new(measurement: Measurement, samples: Vec<f64>) -> Self {
        MeasurementSeries { measurement, samples }
    }

    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.samples.len() as f64
    }
}

/// All 52 measurement series for one run, labeled with the injected
/// profile (0 = baseline).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub run_id: u32,
    pub profile_id: u8,
    pub duration_s: f64,
    pub sample_period_s: f64,
    pub series: Vec<MeasurementSeries>,
}

impl RunRecord {
    /// Sample count shared by all series.
    pub fn len(&self) -> usize {
        self.series.first().map_or(0, |s| s.samples.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn series_for(&self, measurement: Measurement) -> Option<&MeasurementSeries> {
        self.series.iter().find(|s| s.measurement == measurement)
    }

    /// Checks the run covers the full catalog, in canonical order, with
    /// equal-length series respecting each kind's range.
    pub fn validate(&self) -> Result<()> {
        let cat = catalog();
        if self.series.len() != cat.len() {
            return Err(Error::invalid(format!(
                "run {} has {} series, expected {}",
                self.run_id,
                self.series.len(),
                cat.len()
            )));
        }
        let expected_len = (self.duration_s / self.sample_period_s).round() as usize;
        for (series, measurement) in self.series.iter().zip(cat.iter()) {
            if series.measurement != *measurement {
                return Err(Error::invalid(format!(
                    "run {}: series out of canonical order: found {}, expected {}",
                    self.run_id, series.measurement, measurement
                )));
            }
            if series.samples.is_empty() || series.samples.len() != expected_len {
                return Err(Error::invalid(format!(
                    "run {}: series {} has {} samples, expected {}",
                    self.run_id,
                    series.measurement,
                    series.samples.len(),
                    expected_len
                )));
            }
            let (lo, hi) = series.measurement.kind.range();
            if series.samples.iter().any(|&v| v < lo || v > hi || !v.is_finite()) {
                return Err(Error::invalid(format!(
                    "run {}: series {} has samples outside [{lo}, {hi}]",
                    self.run_id, series.measurement
                )));
            }
        }
        Ok(())
    }
}

/// A collection of runs plus bookkeeping for reproducibility.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub runs: Vec<RunRecord>,
    pub rng_seed: u64,
    pub sample_period_s: f64,
}

impl Dataset {
    /// Per-profile run counts.
    pub fn manifest_counts(&self) -> BTreeMap<u8, usize> {
        let mut counts = BTreeMap::new();
        for run in &self.runs {
            *counts.entry(run.profile_id).or_insert(0) += 1;
        }
        counts
    }

    pub fn runs_with_profile(&self, profile_id: u8) -> impl Iterator<Item = &RunRecord> {
        self.runs.iter().filter(move |r| r.profile_id == profile_id)
    }
}
