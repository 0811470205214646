//! Perturbation rules applied to baseline series.

use crate::telemetry::{Measurement, SeverityLevel};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum PerturbationMode {
    /// Add a constant to every sample.
    Shift { amount: f64 },
    /// Multiply every sample.
    Scale { factor: f64 },
    /// Spread samples around their own mean: x -> mean + k (x - mean).
    VarianceInflate { factor: f64 },
    /// Sporadic bursts: each sample gains `magnitude * (0.5 + Exp(1)/2)`
    /// with probability `rate`. Negative magnitudes produce dips.
    SpikeTrain { rate: f64, magnitude: f64 },
    /// Clip samples into [lo, hi].
    Clamp { lo: f64, hi: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerturbationRule {
    pub target: Measurement,
    #[serde(flatten)]
    pub mode: PerturbationMode,
    /// Realization probability per run. `None` means 1.0 when the
    /// targeted kind is an always-effect of the profile's component
    /// types, otherwise the config-wide possible-effect probability.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probability: Option<f64>,
    /// Restricts the rule to components at or above this severity.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub applies_when: Option<SeverityLevel>,
}

impl PerturbationRule {
    pub fn new(target: Measurement, mode: PerturbationMode) -> Self {
        PerturbationRule { target, mode, probability: None, applies_when: None }
    }

    pub fn with_probability(mut self, p: f64) -> Self {
        self.probability = Some(p);
        self
    }

    /// Applies the rule in place. `rng` is the series stream; spike
    /// draws consume from it.
    pub fn apply(&self, samples: &mut [f64], rng: &mut ChaCha8Rng) {
        match self.mode {
            PerturbationMode::Shift { amount } => {
                for x in samples.iter_mut() {
                    *x += amount;
                }
            }
            PerturbationMode::Scale { factor } => {
                for x in samples.iter_mut() {
                    *x *= factor;
                }
            }
            PerturbationMode::VarianceInflate { factor } => {
                let mean = samples.iter().sum::<f64>() / samples.len() as f64;
                for x in samples.iter_mut() {
                    *x = mean + factor * (*x - mean);
                }
            }
            PerturbationMode::SpikeTrain { rate, magnitude } => {
                let exp = Exp::new(1.0).expect("valid exp");
                for x in samples.iter_mut() {
                    if rng.gen::<f64>() < rate {
                        *x += magnitude * (0.5 + 0.5 * exp.sample(rng));
                    }
                }
            }
            PerturbationMode::Clamp { lo, hi } => {
                for x in samples.iter_mut() {
                    *x = x.clamp(lo, hi);
                }
            }
        }
    }

    /// Expected change of the series mean, used by contract checks.
    pub fn expected_mean_shift(&self, baseline_mean: f64) -> f64 {
        match self.mode {
            PerturbationMode::Shift { amount } => amount,
            PerturbationMode::Scale { factor } => baseline_mean * (factor - 1.0),
            PerturbationMode::VarianceInflate { .. } => 0.0,
            PerturbationMode::SpikeTrain { rate, magnitude } => rate * magnitude,
            PerturbationMode::Clamp { .. } => 0.0,
        }
    }
}
