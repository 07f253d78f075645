//! Seeded sampling of `G_d(n, p)` and the probability parametrizations used by
//! the experiments.
//!
//! One ChaCha8 stream is keyed by the seed and consumed one `u64` per
//! (d+1)-subset of `0..n` in lexicographic order. A subset is a d-face iff its
//! uniform deviate is below `p`, so two draws with the same seed at `p < p'`
//! are nested. ChaCha8 output is value-stable across platforms and releases.

use itertools::Itertools;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub n: usize,
    pub d: usize,
    pub p: f64,
    pub seed: u64,
}

impl ModelParams {
    pub fn new(n: usize, d: usize, p: f64, seed: u64) -> Result<Self> {
        if d == 0 || d + 1 > n {
            return Err(Error::Domain(format!(
                "need 1 <= d <= n - 1, got n = {n}, d = {d}"
            )));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!("probability {p} outside [0, 1]")));
        }
        Ok(ModelParams { n, d, p, seed })
    }
}

/// A probability together with whether it had to be clamped into `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Probability {
    pub value: f64,
    pub clamped: bool,
}

impl Probability {
    fn clamp(raw: f64) -> Self {
        let value = if raw.is_nan() {
            0.0
        } else {
            raw.clamp(0.0, 1.0)
        };
        Probability {
            value,
            clamped: value != raw,
        }
    }
}

/// Maps a 64-bit word to `[0, 1)` using its top 53 bits.
pub fn unit_interval(word: u64) -> f64 {
    (word >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Complex on `0..n` with the full (d-1)-skeleton and each (d+1)-subset kept
/// independently with probability `p`.
pub fn sample_gdnp(params: &ModelParams) -> Complex {
    let ModelParams { n, d, p, seed } = *params;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut levels: Vec<Vec<VertexSet>> = (0..d)
        .map(|i| {
            (0..n)
                .combinations(i + 1)
                .map(VertexSet::from_sorted)
                .collect()
        })
        .collect();
    let top: Vec<VertexSet> = (0..n)
        .combinations(d + 1)
        .filter(|_| unit_interval(rng.next_u64()) < p)
        .map(VertexSet::from_sorted)
        .collect();
    levels.push(top);
    Complex::from_levels(VertexSet::range(n), levels)
}

/// `n^alpha`, clamped into `[0, 1]` (flagged for `alpha > 0`).
pub fn alpha_to_p(n: usize, alpha: f64) -> Probability {
    Probability::clamp((n as f64).powf(alpha))
}

/// `((m ln n + omega) / n)^(1 / C(m, d))`, the edge density at which strong
/// dominating sets of size `m` disappear. Natural logarithm.
pub fn lemma31_p(n: usize, m: usize, d: usize, omega: f64) -> Result<Probability> {
    if d == 0 || m <= d {
        return Err(Error::Domain(format!(
            "need m > d >= 1, got m = {m}, d = {d}"
        )));
    }
    if omega < 0.0 {
        return Err(Error::Domain(format!(
            "omega must be non-negative, got {omega}"
        )));
    }
    if n < 2 {
        return Err(Error::Domain("n must be at least 2".into()));
    }
    let nf = n as f64;
    let ratio = (m as f64 * nf.ln() + omega) / nf;
    let binom = crate::combinatorics::binomial_u128(m as u64, d as u64) as f64;
    if ratio > 1.0 {
        return Ok(Probability {
            value: 1.0,
            clamped: true,
        });
    }
    Ok(Probability::clamp(ratio.powf(1.0 / binom)))
}
