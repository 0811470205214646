//! Baseline sample generators.

use crate::error::{Error, Result};
use crate::telemetry::{catalog, KpiKind, Location, Measurement};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal, Poisson, Uniform};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Distribution family of one measurement's quiescent behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum GeneratorSpec {
    /// Normal samples clamped to the KPI's valid range.
    TruncNormal { mean: f64, sd: f64 },
    /// Constant value plus uniform noise in [-noise, +noise].
    ConstantPlusNoise { value: f64, noise: f64 },
    /// Poisson counts per sampling interval.
    PoissonCount { rate: f64 },
}

impl GeneratorSpec {
    pub fn mean(&self) -> f64 {
        match *self {
            GeneratorSpec::TruncNormal { mean, .. } => mean,
            GeneratorSpec::ConstantPlusNoise { value, .. } => value,
            GeneratorSpec::PoissonCount { rate } => rate,
        }
    }

    /// Analytic standard deviation of one sample.
    pub fn sd(&self) -> f64 {
        match *self {
            GeneratorSpec::TruncNormal { sd, .. } => sd,
            GeneratorSpec::ConstantPlusNoise { noise, .. } => noise / 3f64.sqrt(),
            GeneratorSpec::PoissonCount { rate } => rate.sqrt(),
        }
    }

    pub fn sample(&self, n: usize, range: (f64, f64), rng: &mut ChaCha8Rng) -> Vec<f64> {
        let (lo, hi) = range;
        match *self {
            GeneratorSpec::TruncNormal { mean, sd } => {
                let dist = Normal::new(mean, sd).expect("valid normal");
                (0..n).map(|_| dist.sample(rng).clamp(lo, hi)).collect()
            }
            GeneratorSpec::ConstantPlusNoise { value, noise } => {
                let dist = Uniform::new_inclusive(-noise, noise);
                (0..n).map(|_| (value + rng.sample(dist)).clamp(lo, hi)).collect()
            }
            GeneratorSpec::PoissonCount { rate } => {
                let dist = Poisson::new(rate).expect("valid poisson");
                (0..n).map(|_| (dist.sample(rng) as f64).clamp(lo, hi)).collect()
            }
        }
    }
}

/// One generator per measurement of the catalog.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineModel {
    #[serde(with = "generator_entries")]
    pub generators: BTreeMap<Measurement, GeneratorSpec>,
}

/// Serializes the generator map as a list of entries so the JSON stays
/// editable (struct keys are not valid JSON object keys).
mod generator_entries {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        kind: crate::telemetry::KpiKind,
        location: Location,
        #[serde(flatten)]
        spec: GeneratorSpec,
    }

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<Measurement, GeneratorSpec>,
        ser: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = map
            .iter()
            .map(|(m, spec)| Entry { kind: m.kind, location: m.location, spec: *spec })
            .collect();
        serde::Serialize::serialize(&entries, ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<BTreeMap<Measurement, GeneratorSpec>, D::Error> {
        let entries: Vec<Entry> = serde::Deserialize::deserialize(de)?;
        Ok(entries
            .into_iter()
            .map(|e| (Measurement::new(e.kind, e.location), e.spec))
            .collect())
    }
}

impl BaselineModel {
    pub fn spec(&self, m: Measurement) -> &GeneratorSpec {
        &self.generators[&m]
    }

    pub fn validate(&self) -> Result<()> {
        for m in catalog() {
            let spec = self
                .generators
                .get(&m)
                .ok_or_else(|| Error::config(format!("baseline model missing {m}")))?;
            let (lo, hi) = m.kind.range();
            let mean = spec.mean();
            if !(mean >= lo && mean <= hi) {
                return Err(Error::config(format!("{m}: baseline mean {mean} outside range")));
            }
            if spec.sd() < 0.0 || !spec.sd().is_finite() {
                return Err(Error::config(format!("{m}: invalid baseline spread")));
            }
        }
        Ok(())
    }
}

/// Default quiescent slice model. All values are simulator presets, not
/// testbed measurements.
pub fn default_baseline() -> BaselineModel {
    use GeneratorSpec::*;
    use KpiKind::*;
    use Location::*;

    let tn = |mean: f64, sd: f64| TruncNormal { mean, sd };
    let mut g: BTreeMap<Measurement, GeneratorSpec> = BTreeMap::new();
    let mut put = |kind: KpiKind, loc: Location, spec: GeneratorSpec| {
        g.insert(Measurement::new(kind, loc), spec);
    };

    put(Throughput, Ue, tn(34.0, 1.2));
    put(Rtt, Ue, tn(38.0, 2.2));
    put(RadioTx, Controller, tn(3200.0, 95.0));
    put(RadioRtx, Controller, PoissonCount { rate: 22.0 });
    put(Cqi, Controller, tn(13.4, 0.45));
    put(Mcs, Controller, tn(26.0, 0.6));
    put(Msd, Enb, PoissonCount { rate: 0.6 });

    for loc in Location::NODES {
        put(TcpRtx, loc, PoissonCount { rate: 1.2 });
    }

    let cpu = [(Hss, 4.0, 0.8), (Mme, 5.0, 0.9), (Spgw, 22.0, 2.0), (SpgwHost, 31.0, 2.2),
        (Enb, 35.0, 2.4), (Controller, 28.0, 2.1), (Ue, 12.0, 1.5)];
    for (loc, mean, sd) in cpu {
        put(Cpu, loc, tn(mean, sd));
    }
    let memory = [(Hss, 18.0, 0.9), (Mme, 20.0, 0.9), (Spgw, 38.0, 1.1), (SpgwHost, 52.0, 1.3),
        (Enb, 47.0, 1.2), (Controller, 41.0, 1.1), (Ue, 33.0, 1.0)];
    for (loc, mean, sd) in memory {
        put(Memory, loc, tn(mean, sd));
    }
    let storage = [(Hss, 12.0, 0.5), (Mme, 14.0, 0.5), (Spgw, 24.0, 0.7), (SpgwHost, 40.0, 0.8),
        (Enb, 30.0, 0.7), (Controller, 26.0, 0.7), (Ue, 21.0, 0.6)];
    for (loc, value, noise) in storage {
        put(Storage, loc, ConstantPlusNoise { value, noise });
    }
    let net_tx = [(Hss, 15.0, 2.5), (Mme, 25.0, 3.5), (Spgw, 4300.0, 160.0),
        (SpgwHost, 4700.0, 170.0), (Enb, 4100.0, 150.0), (Controller, 260.0, 18.0),
        (Ue, 3900.0, 140.0)];
    for (loc, mean, sd) in net_tx {
        put(NetTx, loc, tn(mean, sd));
    }
    let net_rx = [(Hss, 14.0, 2.5), (Mme, 24.0, 3.5), (Spgw, 4350.0, 160.0),
        (SpgwHost, 4750.0, 170.0), (Enb, 4150.0, 150.0), (Controller, 255.0, 18.0),
        (Ue, 3950.0, 145.0)];
    for (loc, mean, sd) in net_rx {
        put(NetRx, loc, tn(mean, sd));
    }
    put(LinkDelay, ControllerEnb, tn(0.18, 0.025));
    put(LinkDelay, S1u, tn(0.85, 0.07));
    put(LinkDelay, Sgi, tn(0.42, 0.05));

    BaselineModel { generators: g }
}
