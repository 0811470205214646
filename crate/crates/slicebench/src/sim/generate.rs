//! Run and dataset generation.

use super::config::SimConfig;
use crate::error::{Error, Result};
use crate::telemetry::{catalog, Dataset, MeasurementSeries, RunRecord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Independent stream per (seed, profile, run, series).
fn series_rng(seed: u64, profile_id: u8, run_index: u32, series_index: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(profile_id as u64).to_le_bytes());
    key[16..24].copy_from_slice(&(run_index as u64).to_le_bytes());
    key[24..32].copy_from_slice(&(series_index as u64).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Generates one labeled run. Pure in (config, profile_id, run_index);
/// `run_id` is carried as a label only.
pub fn generate_run(
    config: &SimConfig,
    profile_id: u8,
    run_index: u32,
    run_id: u32,
) -> Result<RunRecord> {
    let rules: &[_] = if profile_id == 0 {
        &[]
    } else {
        let spec = config.profile_spec(profile_id)?;
        spec.validate()?;
        config
            .profile_rules
            .get(&profile_id)
            .ok_or_else(|| Error::config(format!("no rules for profile {profile_id}")))?
            .as_slice()
    };
    let spec = if profile_id == 0 { None } else { Some(config.profile_spec(profile_id)?) };
    let n = config.samples_per_run();
    let mut series = Vec::with_capacity(52);
    for (series_index, measurement) in catalog().into_iter().enumerate() {
        let mut rng = series_rng(config.seed, profile_id, run_index, series_index);
        let mut samples =
            config.baseline.spec(measurement).sample(n, measurement.kind.range(), &mut rng);
        // one realization draw per series; rules sharing a probability
        // fire together, which keeps e.g. a shift and its variance
        // inflation coupled
        let u: f64 = rng.gen();
        for rule in rules.iter().filter(|r| r.target == measurement) {
            let p = config.rule_probability(spec.as_ref().expect("profiled run"), rule);
            if u < p {
                rule.apply(&mut samples, &mut rng);
            }
        }
        let (lo, hi) = measurement.kind.range();
        for x in samples.iter_mut() {
            *x = x.clamp(lo, hi);
        }
        series.push(MeasurementSeries::new(measurement, samples));
    }
    Ok(RunRecord {
        run_id,
        profile_id,
        duration_s: config.duration_s,
        sample_period_s: config.sample_period_s,
        series,
    })
}

/// Generates the configured baseline runs followed by every configured
/// profile's runs. Output order is canonical regardless of scheduling.
pub fn generate_dataset(config: &SimConfig) -> Result<Dataset> {
    config.validate()?;
    let mut jobs: Vec<(u8, u32)> = Vec::new();
    for run_index in 0..config.baseline_runs {
        jobs.push((0, run_index));
    }
    let mut profiles = config.profiles.clone();
    profiles.sort_unstable();
    profiles.dedup();
    for &profile_id in &profiles {
        for run_index in 0..config.runs_per_profile {
            jobs.push((profile_id, run_index));
        }
    }
    let runs: Vec<RunRecord> = jobs
        .par_iter()
        .enumerate()
        .map(|(run_id, &(profile_id, run_index))| {
            generate_run(config, profile_id, run_index, run_id as u32)
        })
        .collect::<Result<_>>()?;
    Ok(Dataset { runs, rng_seed: config.seed, sample_period_s: config.sample_period_s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::default_config;
    use crate::telemetry::{KpiKind, Location, Measurement};

    fn series_mean(run: &RunRecord, kind: KpiKind, loc: Location) -> f64 {
        run.series_for(Measurement::new(kind, loc)).unwrap().mean()
    }

    #[test]
    fn baseline_run_matches_generator_contract() {
        let cfg = default_config(42);
        let run = generate_run(&cfg, 0, 0, 0).unwrap();
        run.validate().unwrap();
        // pooled over the default baseline runs at the per-run tolerance
        let mut total = 0.0;
        let mut count = 0;
        for run_index in 0..cfg.baseline_runs {
            let r = generate_run(&cfg, 0, run_index, run_index).unwrap();
            let s = r.series_for(Measurement::new(KpiKind::Throughput, Location::Ue)).unwrap();
            total += s.samples.iter().sum::<f64>();
            count += s.samples.len();
        }
        let mean = total / count as f64;
        let bound = 2.0 * 1.2 / (120f64).sqrt();
        assert!((mean - 34.0).abs() <= bound, "mean {mean} outside 34 +- {bound}");
    }

    #[test]
    fn interference_depresses_cqi() {
        let cfg = default_config(42);
        let base = generate_run(&cfg, 0, 0, 0).unwrap();
        let run = generate_run(&cfg, 2, 0, 1).unwrap();
        assert!(
            series_mean(&run, KpiKind::Cqi, Location::Controller)
                < series_mean(&base, KpiKind::Cqi, Location::Controller)
        );
    }

    #[test]
    fn spgw_delay_adds_thirty_ms_on_s1u() {
        let cfg = default_config(42);
        let base = generate_run(&cfg, 0, 0, 0).unwrap();
        let run = generate_run(&cfg, 14, 0, 1).unwrap();
        let added = series_mean(&run, KpiKind::LinkDelay, Location::S1u)
            - series_mean(&base, KpiKind::LinkDelay, Location::S1u);
        assert!((added - 30.0).abs() <= 3.0, "added delay {added}");
    }

    #[test]
    fn composite_profile_20_elevates_both_components() {
        let cfg = default_config(42);
        // pooled over all runs: the loss component's end-to-end trace is
        // deliberately weak
        let pooled = |profile: u8, kind, loc| {
            let mut total = 0.0;
            let mut count = 0;
            for run_index in 0..5 {
                let run = generate_run(&cfg, profile, run_index, 0).unwrap();
                let s = run.series_for(Measurement::new(kind, loc)).unwrap();
                total += s.samples.iter().sum::<f64>();
                count += s.samples.len();
            }
            total / count as f64
        };
        let base_tcp = pooled(0, KpiKind::TcpRtx, Location::Ue);
        let run_tcp = pooled(20, KpiKind::TcpRtx, Location::Ue);
        assert!(run_tcp > base_tcp, "TcpRtx.Ue {run_tcp} vs baseline {base_tcp}");
        let base_delay = pooled(0, KpiKind::LinkDelay, Location::ControllerEnb);
        let run_delay = pooled(20, KpiKind::LinkDelay, Location::ControllerEnb);
        assert!(run_delay > base_delay + 0.5, "fronthaul delay {run_delay} vs {base_delay}");
    }

    #[test]
    fn loss_severity_orders_ue_retransmissions() {
        let cfg = default_config(42);
        let pooled_mean = |profile: u8| {
            let mut total = 0.0;
            let mut count = 0;
            for run_index in 0..cfg.runs_per_profile {
                let run = generate_run(&cfg, profile, run_index, 0).unwrap();
                let s = run.series_for(Measurement::new(KpiKind::TcpRtx, Location::Ue)).unwrap();
                total += s.samples.iter().sum::<f64>();
                count += s.samples.len();
            }
            total / count as f64
        };
        let m3 = pooled_mean(3);
        let m4 = pooled_mean(4);
        let m5 = pooled_mean(5);
        assert!(m3 < m4 && m4 < m5, "severity ordering violated: {m3} {m4} {m5}");
    }

    #[test]
    fn always_effects_deviate_three_sigma() {
        use crate::telemetry::{effect_of, Effect};
        let cfg = default_config(42);
        for &profile_id in &cfg.profiles {
            let spec = cfg.profile_spec(profile_id).unwrap();
            let run = generate_run(&cfg, profile_id, 0, 0).unwrap();
            for component in &spec.components {
                for kind in KpiKind::ALL {
                    if effect_of(component.btype, kind) != Effect::Always {
                        continue;
                    }
                    let hit = cfg.profile_rules[&profile_id]
                        .iter()
                        .filter(|r| r.target.kind == kind)
                        .any(|r| {
                            let gen = cfg.baseline.spec(r.target);
                            let s = run.series_for(r.target).unwrap();
                            let m = crate::features::moments(&s.samples).unwrap();
                            let mean_dev = (m.mean - gen.mean()).abs() / gen.sd();
                            let var_dev = m.variance / (gen.sd() * gen.sd());
                            mean_dev >= 3.0 || var_dev >= 9.0
                        });
                    assert!(hit, "profile {profile_id}: kind {kind} under 3 sigma");
                }
            }
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let cfg = default_config(7);
        let a = generate_run(&cfg, 5, 2, 9).unwrap();
        let b = generate_run(&cfg, 5, 2, 9).unwrap();
        assert_eq!(a, b);
        let da = generate_dataset(&cfg).unwrap();
        let db = generate_dataset(&cfg).unwrap();
        assert_eq!(da, db);
    }

    #[test]
    fn dataset_counts_match_manifest() {
        let mut cfg = default_config(1);
        cfg.profiles = (1..=17).collect();
        let ds = generate_dataset(&cfg).unwrap();
        assert_eq!(ds.runs.len(), 90);
        let counts = ds.manifest_counts();
        assert_eq!(counts[&0], 5);
        for id in 1..=17u8 {
            assert_eq!(counts[&id], 5);
        }
        // run ids sequential and runs ordered baseline-first
        for (i, run) in ds.runs.iter().enumerate() {
            assert_eq!(run.run_id, i as u32);
        }
        assert!(ds.runs[..5].iter().all(|r| r.profile_id == 0));
    }

    #[test]
    fn zero_runs_per_profile_gives_baseline_only() {
        let mut cfg = default_config(1);
        cfg.runs_per_profile = 0;
        let ds = generate_dataset(&cfg).unwrap();
        assert_eq!(ds.runs.len(), cfg.baseline_runs as usize);
        assert!(ds.runs.iter().all(|r| r.profile_id == 0));
    }

    #[test]
    fn unknown_profile_rejected() {
        let cfg = default_config(1);
        assert!(generate_run(&cfg, 99, 0, 0).is_err());
    }

    #[test]
    fn none_effect_kpis_track_baseline_statistics() {
        // light indistinguishability check: interference must not move
        // CN-side CPU
        let cfg = default_config(11);
        let base = generate_run(&cfg, 0, 0, 0).unwrap();
        let run = generate_run(&cfg, 2, 0, 1).unwrap();
        let m = Measurement::new(KpiKind::Cpu, Location::Hss);
        let a = crate::features::moments(&base.series_for(m).unwrap().samples).unwrap();
        let b = crate::features::moments(&run.series_for(m).unwrap().samples).unwrap();
        let se = (a.variance / 120.0 + b.variance / 120.0).sqrt();
        assert!((a.mean - b.mean).abs() < 4.0 * se);
    }
}
