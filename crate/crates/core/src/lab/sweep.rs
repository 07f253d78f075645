//! Seeded Monte Carlo sweeps over `alpha`.
//!
//! Each `(alpha index, trial)` pair gets its own seed mixed from the master
//! seed. With coupling on, the alpha index is left out of the mix, so one
//! trial sees the same uniform deviates at every grid point and its complexes
//! are nested in `p`.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::expansion::{d_clique_complex_budgeted, d_clique_dimension, ExpansionParams};
use crate::homology::{betti_profile_with, HomologyMode};
use crate::invariants::{contains_subcomplex_copy, strong_domination_at_most};
use crate::random::{alpha_to_p, sample_gdnp, ModelParams};

pub const DEFAULT_FACE_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub d: usize,
    pub n: usize,
    pub kmax: usize,
    pub trials: usize,
    pub alphas: Vec<f64>,
    pub master_seed: u64,
    pub mode: HomologyMode,
    /// Test for a copy of `K^{(d)}` built from `k + 1` joined copies of `∂Δ^d`.
    pub contain_k: Option<usize>,
    /// Record whether `γ̃ <= m`.
    pub gamma_at_most: Option<usize>,
    pub couple: bool,
    /// Worker threads; 0 lets rayon decide.
    pub workers: usize,
    pub face_budget: usize,
    /// Fill the `ms` column. Off by default so output is byte-reproducible.
    pub record_timing: bool,
}

impl SweepConfig {
    pub fn new(
        d: usize,
        n: usize,
        kmax: usize,
        trials: usize,
        alphas: Vec<f64>,
        seed: u64,
    ) -> Self {
        SweepConfig {
            d,
            n,
            kmax,
            trials,
            alphas,
            master_seed: seed,
            mode: HomologyMode::Exact,
            contain_k: None,
            gamma_at_most: None,
            couple: false,
            workers: 0,
            face_budget: DEFAULT_FACE_BUDGET,
            record_timing: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::Domain("d must be at least 1".into()));
        }
        if self.n < self.d + 2 {
            return Err(Error::Domain(format!(
                "need n >= d + 2, got n = {}, d = {}",
                self.n, self.d
            )));
        }
        if self.trials == 0 {
            return Err(Error::Domain("trials must be at least 1".into()));
        }
        if self.alphas.is_empty() {
            return Err(Error::Domain("alpha grid is empty".into()));
        }
        if let Some(a) = self.alphas.iter().find(|a| !a.is_finite()) {
            return Err(Error::Domain(format!("alpha {a} is not finite")));
        }
        if self.contain_k == Some(0) {
            return Err(Error::Domain("contain_k must be at least 1".into()));
        }
        if self.gamma_at_most == Some(0) {
            return Err(Error::Domain("gamma bound must be at least 1".into()));
        }
        if let HomologyMode::ModP(p) = self.mode {
            if !crate::homology::is_prime(p) || p > u32::MAX as u64 {
                return Err(Error::Domain(format!(
                    "modulus {p} is not a prime below 2^32"
                )));
            }
        }
        Ok(())
    }

    /// Truncation dimension for the expansion: enough for `H̃_kmax` and for
    /// the `f2` column.
    pub fn max_dim(&self) -> usize {
        self.d.max(self.kmax + 1).max(2)
    }
}

/// `K^{(d)}`: the d-skeleton of the join of `k + 1` copies of `∂Δ^d`.
pub fn pattern_k(d: usize, k: usize) -> Result<Complex> {
    if d == 0 || k == 0 {
        return Err(Error::Domain(format!(
            "need d, k >= 1, got d = {d}, k = {k}"
        )));
    }
    Ok(Complex::boundary_of_simplex(d + 1)?
        .n_fold_join(k)
        .skeleton(d))
}

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for one trial. `alpha_index = None` gives the coupled seed.
pub fn trial_seed(master: u64, alpha_index: Option<usize>, trial: usize) -> u64 {
    let a = alpha_index.map_or(u64::MAX, |i| i as u64);
    mix(mix(mix(master) ^ a) ^ trial as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrialStatus {
    Ok,
    Skipped,
}

impl TrialStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            TrialStatus::Ok => "ok",
            TrialStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub p: f64,
    pub trial: usize,
    pub seed: u64,
    pub status: TrialStatus,
    /// Dimension of the untruncated `Δ_d`.
    pub dim: Option<isize>,
    /// `f_0, f_1, f_2` of `Δ_d`.
    pub f: Option<[usize; 3]>,
    pub betti: Vec<usize>,
    /// `None` when torsion was not computed (prime-field mode or skipped).
    pub torsion: Option<bool>,
    pub contains_k: Option<bool>,
    pub gamma_le_m: Option<bool>,
    pub ms: Option<f64>,
}

/// Per-trial settings shared across a sweep.
#[derive(Clone, Debug)]
pub struct TrialOptions {
    pub mode: HomologyMode,
    pub pattern: Option<Complex>,
    pub gamma_at_most: Option<usize>,
    pub face_budget: usize,
    pub record_timing: bool,
}

impl TrialOptions {
    pub fn from_config(config: &SweepConfig) -> Result<Self> {
        Ok(TrialOptions {
            mode: config.mode,
            pattern: config
                .contain_k
                .map(|k| pattern_k(config.d, k))
                .transpose()?,
            gamma_at_most: config.gamma_at_most,
            face_budget: config.face_budget,
            record_timing: config.record_timing,
        })
    }
}

/// Sample, expand, and measure one complex. Capacity overruns mark the row
/// `skipped`; the returned row has `trial = 0`.
pub fn run_trial(
    d: usize,
    n: usize,
    alpha: f64,
    seed: u64,
    kmax: usize,
    options: &TrialOptions,
) -> Result<SweepRow> {
    let start = Instant::now();
    let p = alpha_to_p(n, alpha).value;
    let x = sample_gdnp(&ModelParams::new(n, d, p, seed)?);
    let mut row = SweepRow {
        alpha,
        p,
        trial: 0,
        seed,
        status: TrialStatus::Skipped,
        dim: None,
        f: None,
        betti: Vec::new(),
        torsion: None,
        contains_k: None,
        gamma_le_m: None,
        ms: None,
    };
    match measure(&x, d, kmax, options, &mut row) {
        Ok(()) => row.status = TrialStatus::Ok,
        Err(Error::Capacity(_)) => {
            row = SweepRow {
                status: TrialStatus::Skipped,
                dim: None,
                f: None,
                betti: Vec::new(),
                torsion: None,
                contains_k: None,
                gamma_le_m: None,
                ..row
            }
        }
        Err(e) => return Err(e),
    }
    if options.record_timing {
        row.ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(row)
}

fn measure(
    x: &Complex,
    d: usize,
    kmax: usize,
    options: &TrialOptions,
    row: &mut SweepRow,
) -> Result<()> {
    let max_dim = d.max(kmax + 1).max(2);
    let delta = d_clique_complex_budgeted(
        x,
        ExpansionParams::new(d, Some(max_dim))?,
        Some(options.face_budget),
    )?;
    row.dim = Some(if delta.dim() < max_dim as isize {
        delta.dim()
    } else {
        d_clique_dimension(x, d, Some(options.face_budget))?
    });
    row.f = Some([delta.num_faces(0), delta.num_faces(1), delta.num_faces(2)]);
    let profile = betti_profile_with(&delta, kmax, options.mode)?;
    row.betti = profile.iter().map(|h| h.betti).collect();
    row.torsion = match options.mode {
        HomologyMode::Exact => Some(profile.iter().any(|h| !h.torsion.is_empty())),
        HomologyMode::ModP(_) => None,
    };
    if let Some(pattern) = &options.pattern {
        row.contains_k = Some(contains_subcomplex_copy(&delta, pattern).is_some());
    }
    if let Some(m) = options.gamma_at_most {
        row.gamma_le_m = Some(strong_domination_at_most(&delta, m)?);
    }
    Ok(())
}

/// Per-alpha summary. Probabilities are `count / trials`; skipped trials count
/// as misses and are reported separately.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub alpha: f64,
    pub p: f64,
    pub trials: usize,
    pub skipped: usize,
    pub betti_positive: Vec<usize>,
    pub p_betti_positive: Vec<f64>,
    pub contains_k: Option<usize>,
    pub p_contains_k: Option<f64>,
    pub gamma_le_m: Option<usize>,
    pub p_gamma_le_m: Option<f64>,
    /// Mean over completed trials; `None` if every trial was skipped.
    pub mean_dim: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepOutput {
    pub config: SweepConfig,
    pub rows: Vec<SweepRow>,
    pub aggregates: Vec<Aggregate>,
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutput> {
    config.validate()?;
    let options = TrialOptions::from_config(config)?;
    let jobs: Vec<(usize, usize)> = (0..config.alphas.len())
        .flat_map(|a| (0..config.trials).map(move |t| (a, t)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
    let rows = pool.install(|| {
        jobs.par_iter()
            .map(|&(a, t)| {
                let seed = trial_seed(config.master_seed, (!config.couple).then_some(a), t);
                let mut row = run_trial(
                    config.d,
                    config.n,
                    config.alphas[a],
                    seed,
                    config.kmax,
                    &options,
                )?;
                row.trial = t;
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let aggregates = rows
        .chunks(config.trials)
        .map(|chunk| aggregate(config, chunk))
        .collect();
    Ok(SweepOutput {
        config: config.clone(),
        rows,
        aggregates,
    })
}

fn aggregate(config: &SweepConfig, rows: &[SweepRow]) -> Aggregate {
    let trials = rows.len();
    let frac = |c: usize| c as f64 / trials as f64;
    let done: Vec<&SweepRow> = rows
        .iter()
        .filter(|r| r.status == TrialStatus::Ok)
        .collect();
    let betti_positive: Vec<usize> = (0..=config.kmax)
        .map(|k| done.iter().filter(|r| r.betti[k] > 0).count())
        .collect();
    let count =
        |f: fn(&SweepRow) -> Option<bool>| done.iter().filter(|r| f(r) == Some(true)).count();
    let contains_k = config.contain_k.map(|_| count(|r| r.contains_k));
    let gamma_le_m = config.gamma_at_most.map(|_| count(|r| r.gamma_le_m));
    let mean_dim = (!done.is_empty())
        .then(|| done.iter().map(|r| r.dim.unwrap_or(-1) as f64).sum::<f64>() / done.len() as f64);
    Aggregate {
        alpha: rows[0].alpha,
        p: rows[0].p,
        trials,
        skipped: trials - done.len(),
        p_betti_positive: betti_positive.iter().map(|&c| frac(c)).collect(),
        betti_positive,
        p_contains_k: contains_k.map(frac),
        contains_k,
        p_gamma_le_m: gamma_le_m.map(frac),
        gamma_le_m,
        mean_dim,
    }
}
