//! Random-ensemble comparison of the bound ratios.
//!
//! Trial `k` of size `m` draws its matrix from `ChaCha8Rng` seeded with
//! [`trial_seed`]`(seed, m, k)`, so every trial is reproducible on its own and
//! the per-size means do not depend on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::bound_report;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, ComplexScalar};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    pub sizes: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Entries have real and imaginary parts uniform on `[-entry_range, entry_range]`.
    pub entry_range: f64,
}

impl Default for EnsembleConfig {
    fn default() -> Self {
        Self {
            sizes: vec![10, 100],
            trials: 1000,
            seed: 1,
            entry_range: 4.0,
        }
    }
}

impl EnsembleConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |field: &str, message: &str| Error::Parse {
            field: field.into(),
            message: message.into(),
        };
        if self.trials == 0 {
            return Err(bad("trials", "must be at least 1"));
        }
        if !(self.entry_range > 0.0 && self.entry_range.is_finite()) {
            return Err(bad("entry_range", "must be positive"));
        }
        if self.sizes.is_empty() || self.sizes.contains(&0) {
            return Err(bad("sizes", "must be a non-empty list of positive integers"));
        }
        Ok(())
    }
}

/// Mean ratios of the bounds to `‖T‖_σ` for one matrix size.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleRow {
    pub m: usize,
    pub trials: usize,
    pub kittaneh_power: f64,
    pub kittaneh_mean: f64,
    pub corollary: f64,
}

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Sub-seed for trial `k` of size `m`.
pub fn trial_seed(seed: u64, m: usize, k: usize) -> u64 {
    mix(mix(mix(seed) ^ m as u64) ^ k as u64)
}

pub fn random_matrix(m: usize, entry_range: f64, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..m * m)
        .map(|_| {
            let re = rng.random_range(-entry_range..=entry_range);
            let im = rng.random_range(-entry_range..=entry_range);
            ComplexScalar::new(re, im)
        })
        .collect();
    ComplexMatrix::from_row_major(m, data).expect("finite square data")
}

/// Ratios `(power, mean, corollary)` for one trial.
pub fn trial_ratios(m: usize, entry_range: f64, seed: u64) -> Result<[f64; 3]> {
    let report = bound_report(&random_matrix(m, entry_range, seed))?;
    Ok([
        report.ratios.kittaneh_power,
        report.ratios.kittaneh_mean,
        report.ratios.corollary,
    ])
}

pub fn run_size(config: &EnsembleConfig, m: usize) -> Result<EnsembleRow> {
    let ratios = (0..config.trials)
        .into_par_iter()
        .map(|k| trial_ratios(m, config.entry_range, trial_seed(config.seed, m, k)))
        .collect::<Result<Vec<_>>>()?;
    // Summed in trial order so the result is bit-identical across thread counts.
    let mut sums = [0.0; 3];
    for r in &ratios {
        for (s, v) in sums.iter_mut().zip(r) {
            *s += v;
        }
    }
    let n = config.trials as f64;
    Ok(EnsembleRow {
        m,
        trials: config.trials,
        kittaneh_power: sums[0] / n,
        kittaneh_mean: sums[1] / n,
        corollary: sums[2] / n,
    })
}

pub fn run_ensemble(config: &EnsembleConfig) -> Result<Vec<EnsembleRow>> {
    config.validate()?;
    config.sizes.iter().map(|&m| run_size(config, m)).collect()
}

pub fn to_csv(rows: &[EnsembleRow]) -> String {
    let mut out = String::from("m,trials,kittaneh_power,kittaneh_mean,corollary\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{:.6},{:.6},{:.6}\n",
            r.m, r.trials, r.kittaneh_power, r.kittaneh_mean, r.corollary
        ));
    }
    out
}
