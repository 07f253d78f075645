//! Combinatorial invariants: strong domination, the connectivity bound it
//! implies, d-lumplessness, subcomplex containment and the face-count bound
//! for nontrivial cycles in d-clique complexes.

mod containment;
mod domination;
mod lumpless;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

pub use containment::{contains_induced_copy, contains_subcomplex_copy, Embedding};
pub use domination::{
    sp_tilde, strong_domination_at_most, strong_domination_number, DominationResult, Gamma,
};
pub use lumpless::{is_d_lumpless, LumplessReport};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// Vertex-count ceilings for exhaustive subset searches. Exceeding one is an
/// error, never an approximation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub max_vertices: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_vertices: 24 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectivityBound {
    Finite(BigRational),
    Infinite,
}

/// `conn(Δ) >= γ̃/2 - 2`.
pub fn connectivity_lower_bound(gamma: Gamma) -> ConnectivityBound {
    match gamma {
        Gamma::Finite(g) => ConnectivityBound::Finite(
            BigRational::new(BigInt::from(g), BigInt::from(2))
                - BigRational::from_integer(2.into()),
        ),
        Gamma::Infinite => ConnectivityBound::Infinite,
    }
}

/// Largest degree through which `H̃_i` must vanish, `floor(γ̃/2 - 2)`; `None`
/// when `γ̃` is infinite (every degree vanishes).
pub fn homology_vanishing_degree(gamma: Gamma) -> Option<i64> {
    match gamma {
        Gamma::Finite(g) => Some(Integer::div_floor(&(g as i64), &2) - 2),
        Gamma::Infinite => None,
    }
}

/// Minimum number of (d-1)-faces carried by the support of a nontrivial
/// k-cycle of a d-clique complex: `(d+1)(k-d+1) + d + 1`.
pub fn lemma34_bound(d: usize, k: usize) -> Result<usize> {
    if d == 0 || k + 1 < d {
        return Err(Error::Domain(format!(
            "need k >= d - 1 >= 0, got d = {d}, k = {k}"
        )));
    }
    Ok((d + 1) * (k + 1 - d) + d + 1)
}

/// Smallest integer `N` with `0 < k / (C(k,d) N) < -1/C(k,d) - alpha`, the
/// vertex-budget constant for strongly connected k-subcomplexes. Requires
/// `alpha < -1/C(k,d)`.
pub fn lemma35_min_n(alpha: &BigRational, k: usize, d: usize) -> Result<u64> {
    let c = binomial(k as u64, d as u64);
    if d == 0 || c.is_zero() {
        return Err(Error::Domain(format!(
            "need 1 <= d <= k, got d = {d}, k = {k}"
        )));
    }
    let c = BigRational::from_integer(c);
    let gap = -c.recip() - alpha;
    if !gap.is_positive() {
        return Err(Error::Domain(format!(
            "alpha = {alpha} is not below -1/C({k},{d})"
        )));
    }
    // N > k / (C gap)
    let bound = BigRational::from_integer(BigInt::from(k)) / (c * gap);
    let n: BigInt = bound.floor().to_integer() + 1;
    n.try_into()
        .map_err(|_| Error::Capacity("N does not fit in 64 bits".into()))
}
