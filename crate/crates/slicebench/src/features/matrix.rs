//! Feature matrix: rows are runs, columns are (measurement, statistic)
//! pairs in canonical order.

use super::moments::{moments, Statistic};
use crate::error::{Error, Result};
use crate::telemetry::{catalog, Dataset, Measurement, RunRecord};
use serde::{Deserialize, Serialize};
use std::fs;
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColumnMeta {
    pub measurement: Measurement,
    pub statistic: Statistic,
}

impl ColumnMeta {
    pub fn name(&self) -> String {
        format!("{}.{}", self.measurement.name(), self.statistic.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowInfo {
    pub run_id: u32,
    pub profile_id: u8,
}

/// Full canonical column layout: 52 measurements x 6 statistics.
pub fn canonical_columns() -> Vec<ColumnMeta> {
    let mut cols = Vec::with_capacity(52 * 6);
    for measurement in catalog() {
        for statistic in Statistic::ALL {
            cols.push(ColumnMeta { measurement, statistic });
        }
    }
    cols
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureMatrix {
    pub columns: Vec<ColumnMeta>,
    pub rows: Vec<RowInfo>,
    /// Row-major values, always full column width.
    pub values: Vec<Vec<f64>>,
    /// Column subset mask produced by screening.
    pub active: Vec<bool>,
    /// Per-column (min, max) captured by [`FeatureMatrix::normalize`].
    pub normalization: Option<Vec<(f64, f64)>>,
    /// Samples behind each feature row; calibrates screening references.
    pub samples_per_run: usize,
}

impl FeatureMatrix {
    /// Extracts the six statistics of every series of every run.
    pub fn from_dataset(dataset: &Dataset) -> Result<Self> {
        Self::from_runs(dataset.runs.iter())
    }

    pub fn from_runs<'a>(runs: impl Iterator<Item = &'a RunRecord>) -> Result<Self> {
        let columns = canonical_columns();
        let mut rows = Vec::new();
        let mut values = Vec::new();
        let mut samples_per_run = 0;
        for run in runs {
            values.push(extract(run)?);
            rows.push(RowInfo { run_id: run.run_id, profile_id: run.profile_id });
            samples_per_run = run.len();
        }
        let active = vec![true; columns.len()];
        Ok(FeatureMatrix { columns, rows, values, active, normalization: None, samples_per_run })
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn active_columns(&self) -> Vec<usize> {
        (0..self.columns.len()).filter(|&c| self.active[c]).collect()
    }

    /// Active measurements (a measurement is active when its columns are).
    pub fn active_measurements(&self) -> Vec<Measurement> {
        let mut out = Vec::new();
        for (c, meta) in self.columns.iter().enumerate() {
            if self.active[c] && !out.contains(&meta.measurement) {
                out.push(meta.measurement);
            }
        }
        out
    }

    pub fn rows_with_profile(&self, pred: impl Fn(u8) -> bool) -> Vec<usize> {
        (0..self.rows.len()).filter(|&r| pred(self.rows[r].profile_id)).collect()
    }

    /// Drops every measurement whose columns never deviate from the
    /// baseline beyond `threshold` baseline standard deviations in any
    /// non-baseline row.
    ///
    /// The per-feature standard deviation anchors on the pooled baseline
    /// sample variance (taken from the variance features) through
    /// analytic sampling references; the empirical spread across the
    /// baseline rows can only widen it. A handful of baseline runs is
    /// too few for a bare empirical estimate: its low-dof tails would
    /// retain every measurement.
    pub fn reduce(&self, baseline_rows: &[usize], threshold: f64) -> Result<FeatureMatrix> {
        if !(threshold > 0.0) {
            return Err(Error::invalid("deviation threshold must be > 0"));
        }
        if baseline_rows.is_empty() {
            return Err(Error::invalid("baseline rows required for screening"));
        }
        let n_stats = Statistic::ALL.len();
        let n_cols = self.columns.len();
        let n_meas = n_cols / n_stats;
        let n = self.samples_per_run.max(2) as f64;

        let mut keep_measurement = vec![false; n_meas];
        for m_idx in 0..n_meas {
            let col_of = |stat: Statistic| {
                m_idx * n_stats + Statistic::ALL.iter().position(|&s| s == stat).unwrap()
            };
            // pooled sample variance of this measurement over baseline runs
            let var_col = col_of(Statistic::Variance);
            let pooled_var = baseline_rows
                .iter()
                .map(|&r| self.values[r][var_col])
                .sum::<f64>()
                / baseline_rows.len() as f64;
            let sigma = pooled_var.max(0.0).sqrt();

            'cols: for s in 0..n_stats {
                let c = m_idx * n_stats + s;
                if !self.active[c] {
                    continue;
                }
                let stat = self.columns[c].statistic;
                let reference = match stat {
                    Statistic::Mean => sigma / n.sqrt(),
                    Statistic::Variance => 3.0 * sigma * sigma * (2.0 / n).sqrt(),
                    Statistic::Min | Statistic::Max => sigma,
                    Statistic::Skewness => 4.0 * (6.0 / n).sqrt(),
                    Statistic::Kurtosis => 6.0 * (24.0 / n).sqrt(),
                };
                let vals: Vec<f64> = baseline_rows.iter().map(|&r| self.values[r][c]).collect();
                let k = vals.len() as f64;
                let mean = vals.iter().sum::<f64>() / k;
                let emp = (vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / k).sqrt();
                let spread = reference.max(emp);
                for (r, row) in self.values.iter().enumerate() {
                    if baseline_rows.contains(&r) {
                        continue;
                    }
                    // threshold * 0 is 0 (exact-match screening for
                    // constant features); threshold = inf trips nothing.
                    if (row[c] - mean).abs() > threshold * spread {
                        keep_measurement[m_idx] = true;
                        break 'cols;
                    }
                }
            }
        }
        let mut active = vec![false; n_cols];
        for (c, a) in active.iter_mut().enumerate() {
            *a = self.active[c] && keep_measurement[c / n_stats];
        }
        Ok(FeatureMatrix {
            columns: self.columns.clone(),
            rows: self.rows.clone(),
            values: self.values.clone(),
            active,
            normalization: None,
            samples_per_run: self.samples_per_run,
        })
    }

    /// Per-column min-max scaling to [0, 1]; constant columns map to 0.
    pub fn normalize(&self) -> Result<FeatureMatrix> {
        if self.n_rows() < 2 {
            return Err(Error::invalid("normalization needs at least 2 rows"));
        }
        let n_cols = self.columns.len();
        let mut params = Vec::with_capacity(n_cols);
        for c in 0..n_cols {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for row in &self.values {
                lo = lo.min(row[c]);
                hi = hi.max(row[c]);
            }
            params.push((lo, hi));
        }
        let values = self
            .values
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(c, &v)| {
                        let (lo, hi) = params[c];
                        if hi > lo {
                            (v - lo) / (hi - lo)
                        } else {
                            0.0
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(FeatureMatrix {
            columns: self.columns.clone(),
            rows: self.rows.clone(),
            values,
            active: self.active.clone(),
            normalization: Some(params),
            samples_per_run: self.samples_per_run,
        })
    }

    /// Restricts the active mask to the given column indices.
    pub fn with_active_columns(&self, cols: &[usize]) -> FeatureMatrix {
        let mut active = vec![false; self.columns.len()];
        for &c in cols {
            active[c] = true;
        }
        FeatureMatrix { active, ..self.clone() }
    }
}

/// Extracts the canonical 312-value feature row of one run.
pub fn extract(run: &RunRecord) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(run.series.len() * Statistic::ALL.len());
    for series in &run.series {
        let m = moments(&series.samples)?;
        for stat in Statistic::ALL {
            out.push(m.get(stat));
        }
    }
    Ok(out)
}

/// JSON sidecar stored next to the feature CSV.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixSidecar {
    pub active: Vec<bool>,
    pub normalization: Option<Vec<(f64, f64)>>,
    pub samples_per_run: usize,
}

/// Writes `features.csv` (all columns) and `features.json` (mask and
/// normalization parameters) into `dir`.
pub fn write_matrix(matrix: &FeatureMatrix, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut out = String::from("run_id,profile_id");
    for meta in &matrix.columns {
        out.push(',');
        out.push_str(&meta.name());
    }
    out.push('\n');
    for (info, row) in matrix.rows.iter().zip(&matrix.values) {
        out.push_str(&format!("{},{}", info.run_id, info.profile_id));
        for v in row {
            out.push(',');
            out.push_str(&format!("{v}"));
        }
        out.push('\n');
    }
    fs::File::create(dir.join("features.csv"))?.write_all(out.as_bytes())?;
    let sidecar = MatrixSidecar {
        active: matrix.active.clone(),
        normalization: matrix.normalization.clone(),
        samples_per_run: matrix.samples_per_run,
    };
    let mut f = fs::File::create(dir.join("features.json"))?;
    serde_json::to_writer_pretty(&mut f, &sidecar)?;
    f.write_all(b"\n")?;
    Ok(())
}

/// Reads a matrix written by [`write_matrix`].
pub fn read_matrix(dir: &Path) -> Result<FeatureMatrix> {
    let csv_path = dir.join("features.csv");
    let sidecar_path = dir.join("features.json");
    let mut missing = Vec::new();
    for p in [&csv_path, &sidecar_path] {
        if !p.exists() {
            missing.push(p.display().to_string());
        }
    }
    if !missing.is_empty() {
        return Err(Error::MissingArtifacts(missing));
    }
    let sidecar: MatrixSidecar = serde_json::from_str(&fs::read_to_string(sidecar_path)?)?;
    let columns = canonical_columns();
    let mut reader = csv::Reader::from_path(&csv_path)?;
    let mut rows = Vec::new();
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record?;
        let run_id: u32 = record[0].parse().map_err(|e| Error::invalid(format!("{e}")))?;
        let profile_id: u8 = record[1].parse().map_err(|e| Error::invalid(format!("{e}")))?;
        let row: Vec<f64> = (0..columns.len())
            .map(|c| record[c + 2].parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::invalid(format!("{e}")))?;
        rows.push(RowInfo { run_id, profile_id });
        values.push(row);
    }
    if sidecar.active.len() != columns.len() {
        return Err(Error::invalid("sidecar mask length mismatch"));
    }
    Ok(FeatureMatrix {
        columns,
        rows,
        values,
        active: sidecar.active,
        normalization: sidecar.normalization,
        samples_per_run: sidecar.samples_per_run,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::telemetry::{KpiKind, Location, MeasurementSeries};

    fn synthetic_matrix(rows: Vec<(u32, u8, Vec<f64>)>) -> FeatureMatrix {
        // small matrices for screening tests: 2 measurements x 6 stats
        let columns: Vec<ColumnMeta> = canonical_columns().into_iter().take(12).collect();
        let n = columns.len();
        FeatureMatrix {
            columns,
            rows: rows.iter().map(|(r, p, _)| RowInfo { run_id: *r, profile_id: *p }).collect(),
            values: rows.into_iter().map(|(_, _, v)| { assert_eq!(v.len(), n); v }).collect(),
            active: vec![true; n],
            normalization: None,
            samples_per_run: 100,
        }
    }

    fn full_run(run_id: u32, profile_id: u8, fill: f64) -> RunRecord {
        let series = catalog()
            .into_iter()
            .map(|m| MeasurementSeries::new(m, vec![fill, fill + 1.0, fill + 2.0]))
            .collect();
        RunRecord { run_id, profile_id, duration_s: 3.0, sample_period_s: 1.0, series }
    }

    #[test]
    fn full_extraction_yields_312_columns() {
        let run = full_run(0, 0, 1.0);
        let row = extract(&run).unwrap();
        assert_eq!(row.len(), 312);
        let cols = canonical_columns();
        assert_eq!(cols.len(), 312);
        assert_eq!(cols[0].name(), "throughput.ue.mean");
        assert_eq!(cols[5].name(), "throughput.ue.max");
        assert_eq!(cols[311].name(), "link_delay.sgi.max");
    }

    #[test]
    fn reduce_drops_measurements_that_never_deviate() {
        // rows: 2 baseline + 2 profile; first measurement deviates in its
        // mean for profile rows, second never does.
        let quiet = vec![5.0, 0.5, 0.0, 0.0, 4.0, 6.0];
        let mut base = vec![1.0, 0.1, 0.0, 0.0, 0.9, 1.1];
        base.extend(quiet.clone());
        let mut dev = vec![9.0, 0.1, 0.0, 0.0, 8.9, 9.1];
        dev.extend(quiet.clone());
        let m = synthetic_matrix(vec![
            (0, 0, base.clone()),
            (1, 0, base.iter().map(|v| v + 0.01).collect()),
            (2, 1, dev.clone()),
            (3, 1, dev),
        ]);
        let reduced = m.reduce(&[0, 1], 4.0).unwrap();
        let active = reduced.active_columns();
        assert_eq!(active.len(), 6, "exactly one measurement (6 columns) retained");
        assert!(active.iter().all(|&c| c < 6));
        assert_eq!(reduced.active_measurements().len(), 1);
    }

    #[test]
    fn reduce_with_infinite_threshold_retains_nothing() {
        let m = synthetic_matrix(vec![
            (0, 0, vec![1.0; 12]),
            (1, 0, vec![1.1; 12]),
            (2, 1, vec![100.0; 12]),
        ]);
        let reduced = m.reduce(&[0, 1], f64::INFINITY).unwrap();
        assert!(reduced.active_columns().is_empty());
    }

    #[test]
    fn reduce_rejects_nonpositive_threshold() {
        let m = synthetic_matrix(vec![(0, 0, vec![1.0; 12]), (1, 1, vec![2.0; 12])]);
        assert!(m.reduce(&[0], 0.0).is_err());
        assert!(m.reduce(&[0], -1.0).is_err());
    }

    #[test]
    fn normalize_scales_to_unit_interval() {
        let mut rows = Vec::new();
        for (i, v) in [2.0, 4.0, 6.0].iter().enumerate() {
            let mut row = vec![*v; 12];
            row[1] = 5.0; // constant column
            rows.push((i as u32, 0, row));
        }
        let m = synthetic_matrix(rows);
        let n = m.normalize().unwrap();
        let col0: Vec<f64> = n.values.iter().map(|r| r[0]).collect();
        assert_eq!(col0, vec![0.0, 0.5, 1.0]);
        let col1: Vec<f64> = n.values.iter().map(|r| r[1]).collect();
        assert_eq!(col1, vec![0.0, 0.0, 0.0], "constant columns map to 0");
    }

    #[test]
    fn normalize_is_idempotent() {
        let m = synthetic_matrix(vec![
            (0, 0, (0..12).map(|i| i as f64).collect()),
            (1, 0, (0..12).map(|i| (i * i) as f64).collect()),
            (2, 1, (0..12).map(|i| (i as f64).sqrt()).collect()),
        ]);
        let once = m.normalize().unwrap();
        let twice = once.normalize().unwrap();
        assert_eq!(once.values, twice.values);
    }

    #[test]
    fn normalize_requires_two_rows() {
        let m = synthetic_matrix(vec![(0, 0, vec![1.0; 12])]);
        assert!(m.normalize().is_err());
    }

    #[test]
    fn matrix_round_trips_through_files() {
        let mut runs = Vec::new();
        for i in 0..3 {
            runs.push(full_run(i, (i % 2) as u8, i as f64));
        }
        let ds = Dataset { runs, rng_seed: 5, sample_period_s: 1.0 };
        let m = FeatureMatrix::from_dataset(&ds).unwrap();
        let reduced = m.reduce(&m.rows_with_profile(|p| p == 0), 4.0).unwrap();
        let normalized = reduced.normalize().unwrap();
        let dir = tempfile::tempdir().unwrap();
        write_matrix(&normalized, dir.path()).unwrap();
        let back = read_matrix(dir.path()).unwrap();
        assert_eq!(back.rows, normalized.rows);
        assert_eq!(back.active, normalized.active);
        for (a, b) in back.values.iter().zip(&normalized.values) {
            for (x, y) in a.iter().zip(b) {
                assert!((x - y).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn hss_mme_style_quiet_measurements_are_dropped_from_full_runs() {
        // profile rows deviate only in throughput.ue; every other
        // measurement (including the HSS/MME blocks) stays at baseline.
        let mut runs = vec![full_run(0, 0, 1.0), full_run(1, 0, 1.0)];
        let mut perturbed = full_run(2, 3, 1.0);
        let m = Measurement::new(KpiKind::Throughput, Location::Ue);
        let idx = catalog().iter().position(|x| *x == m).unwrap();
        perturbed.series[idx].samples = vec![50.0, 51.0, 52.0];
        runs.push(perturbed);
        let ds = Dataset { runs, rng_seed: 0, sample_period_s: 1.0 };
        let matrix = FeatureMatrix::from_dataset(&ds).unwrap();
        let reduced = matrix.reduce(&[0, 1], 4.0).unwrap();
        let retained = reduced.active_measurements();
        assert_eq!(retained, vec![m]);
        assert!(!retained.iter().any(|m| m.location == Location::Hss));
    }
}
