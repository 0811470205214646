//! Dataset serialization: one CSV per run plus a JSON manifest.
//!
//! Formats are fixed: UTF-8, LF line endings, decimal point, six
//! significant digits.

use super::kpi::catalog;
use super::run::{Dataset, MeasurementSeries, RunRecord};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

/// Formats a value with `sig` significant digits, `%g`-style: fixed
/// notation for moderate exponents, scientific otherwise, trailing zeros
/// trimmed.
pub fn format_sig(x: f64, sig: usize) -> String {
    assert!(sig > 0);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (_, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if exp >= -4 && exp < sig as i32 {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let rounded: f64 = sci.parse().expect("mantissa");
        trim_zeros(format!("{rounded:.decimals$}"))
    } else {
        let (mant, _) = sci.split_once('e').unwrap();
        format!("{}e{}", trim_zeros(mant.to_string()), exp)
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Per-run entry of the dataset manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub run_id: u32,
    pub profile_id: u8,
    pub seed: u64,
    pub sample_period_s: f64,
    pub file: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetManifest {
    pub rng_seed: u64,
    pub sample_period_s: f64,
    pub profile_counts: BTreeMap<u8, usize>,
    pub runs: Vec<ManifestEntry>,
}

fn run_file_name(run_id: u32) -> String {
    format!("run_{run_id:04}.csv")
}

/// Writes one CSV per run plus `manifest.json` into `dir`.
pub fn write_dataset(dataset: &Dataset, dir: &Path) -> Result<DatasetManifest> {
    fs::create_dir_all(dir)?;
    let cat = catalog();
    let mut entries = Vec::with_capacity(dataset.runs.len());
    for run in &dataset.runs {
        run.validate()?;
        let file = run_file_name(run.run_id);
        let mut out = String::new();
        out.push_str("timestamp_s");
        for m in &cat {
            out.push(',');
            out.push_str(&m.name());
        }
        out.push('\n');
        for i in 0..run.len() {
            out.push_str(&format_sig(i as f64 * run.sample_period_s, 6));
            for series in &run.series {
                out.push(',');
                out.push_str(&format_sig(series.samples[i], 6));
            }
            out.push('\n');
        }
        let mut f = fs::File::create(dir.join(&file))?;
        f.write_all(out.as_bytes())?;
        entries.push(ManifestEntry {
            run_id: run.run_id,
            profile_id: run.profile_id,
            seed: dataset.rng_seed,
            sample_period_s: run.sample_period_s,
            file,
        });
    }
    let manifest = DatasetManifest {
        rng_seed: dataset.rng_seed,
        sample_period_s: dataset.sample_period_s,
        profile_counts: dataset.manifest_counts(),
        runs: entries,
    };
    let mut f = fs::File::create(dir.join("manifest.json"))?;
    serde_json::to_writer_pretty(&mut f, &manifest)?;
    f.write_all(b"\n")?;
    Ok(manifest)
}

/// Reads a dataset directory written by [`write_dataset`].
pub fn read_dataset(dir: &Path) -> Result<Dataset> {
    let manifest_path = dir.join("manifest.json");
    if !manifest_path.exists() {
        return Err(Error::MissingArtifacts(vec![manifest_path.display().to_string()]));
    }
    let manifest: DatasetManifest = serde_json::from_str(&fs::read_to_string(manifest_path)?)?;
    let cat = catalog();
    let mut runs = Vec::with_capacity(manifest.runs.len());
    for entry in &manifest.runs {
        let path = dir.join(&entry.file);
        let mut reader = csv::Reader::from_path(&path)?;
        let headers = reader.headers()?.clone();
        let expected: Vec<String> = cat.iter().map(|m| m.name()).collect();
        let found: Vec<String> = headers.iter().skip(1).map(str::to_string).collect();
        if found != expected {
            return Err(Error::invalid(format!("{}: unexpected column layout", path.display())));
        }
        let mut columns: Vec<Vec<f64>> = vec![Vec::new(); cat.len()];
        for record in reader.records() {
            let record = record?;
            for (j, col) in columns.iter_mut().enumerate() {
                let raw = record.get(j + 1).ok_or_else(|| {
                    Error::invalid(format!("{}: short record", path.display()))
                })?;
                col.push(raw.parse::<f64>().map_err(|e| {
                    Error::invalid(format!("{}: bad value {raw:?}: {e}", path.display()))
                })?);
            }
        }
        let n = columns[0].len();
        let series: Vec<MeasurementSeries> = cat
            .iter()
            .zip(columns)
            .map(|(m, samples)| MeasurementSeries::new(*m, samples))
            .collect();
        runs.push(RunRecord {
            run_id: entry.run_id,
            profile_id: entry.profile_id,
            duration_s: n as f64 * entry.sample_period_s,
            sample_period_s: entry.sample_period_s,
            series,
        });
    }
    Ok(Dataset { runs, rng_seed: manifest.rng_seed, sample_period_s: manifest.sample_period_s })
}
