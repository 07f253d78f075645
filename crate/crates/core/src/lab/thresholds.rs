//! Closed-form threshold exponents for `p = n^alpha`, in exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    pub d: usize,
    pub k: usize,
    /// `max{-1/(k-d+1), -(d+1)/C(k,d)}`: `H̃_k` vanishes below it. `None`
    /// when `d > k`.
    pub vanish_low: Option<BigRational>,
    /// `-1/C(2k+2, d)`: `H̃_k` vanishes above it. `None` when `d > 2k+2`.
    pub vanish_high: Option<BigRational>,
    /// `(C((d+1)(k+1), d+1) - (k+1)) / ((d+1)(k+1))`.
    pub t: BigRational,
    /// `(-1/t, -1/(t+1))`: `H̃_{(k+1)d-1}` is nonzero inside it.
    pub nonvanish_window: (BigRational, BigRational),
    pub nonvanish_degree: usize,
    /// `-(d+1)/C(k,d)`: dimension reaches k above it. `None` when `d > k`.
    pub dim_threshold: Option<BigRational>,
    /// `t + 1 <= C(d(k+1), d)`.
    pub remark_inequality_holds: bool,
}

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn theorem_thresholds(d: usize, k: usize) -> Result<ThresholdReport> {
    if d == 0 || k == 0 {
        return Err(Error::Domain(format!(
            "need d, k >= 1, got d = {d}, k = {k}"
        )));
    }
    let (du, ku) = (d as u64, k as u64);
    let c_kd = binomial(ku, du);
    let dim_threshold = (!c_kd.is_zero()).then(|| ratio(-(BigInt::from(d) + 1u32), c_kd.clone()));
    let vanish_low = dim_threshold.clone().map(|dim_t| {
        // d <= k here, so k - d + 1 >= 1
        let link = ratio(-1, BigInt::from(k - d + 1));
        if link > dim_t {
            link
        } else {
            dim_t
        }
    });
    let c_high = binomial(2 * ku + 2, du);
    let vanish_high = (!c_high.is_zero()).then(|| ratio(-1, c_high));

    let vertices = (du + 1) * (ku + 1);
    let top_faces = binomial(vertices, du + 1) - BigInt::from(ku + 1);
    let t = ratio(top_faces, BigInt::from(vertices));
    let one = BigRational::one();
    let nonvanish_window = (-t.recip(), -(&t + &one).recip());
    let remark_inequality_holds =
        &t + &one <= BigRational::from_integer(binomial(du * (ku + 1), du));

    Ok(ThresholdReport {
        d,
        k,
        vanish_low,
        vanish_high,
        t,
        nonvanish_window,
        nonvanish_degree: (k + 1) * d - 1,
        dim_threshold,
        remark_inequality_holds,
    })
}

impl ThresholdReport {
    /// The nonvanishing window for degree `(k+1)d - 1` avoids the vanishing
    /// region for that same degree.
    pub fn window_avoids_vanishing_region(&self) -> Result<bool> {
        let other = theorem_thresholds(self.d, self.nonvanish_degree)?;
        let (lo, hi) = &self.nonvanish_window;
        let below_ok = other.vanish_low.as_ref().is_none_or(|v| lo >= v);
        let above_ok = other.vanish_high.as_ref().is_none_or(|v| hi <= v);
        Ok(lo < hi && below_ok && above_ok)
    }
}

fn opt(r: &Option<BigRational>) -> String {
    r.as_ref()
        .map_or_else(|| "undefined".to_string(), |x| x.to_string())
}

impl fmt::Display for ThresholdReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d = {}, k = {}", self.d, self.k)?;
        writeln!(f, "vanish_low = {}", opt(&self.vanish_low))?;
        writeln!(f, "vanish_high = {}", opt(&self.vanish_high))?;
        writeln!(f, "dim_threshold = {}", opt(&self.dim_threshold))?;
        writeln!(f, "t = {}", self.t)?;
        writeln!(
            f,
            "nonvanish_window = ({}, {})",
            self.nonvanish_window.0, self.nonvanish_window.1
        )?;
        writeln!(f, "nonvanish_degree = {}", self.nonvanish_degree)?;
        write!(
            f,
            "remark_inequality_holds = {}",
            self.remark_inequality_holds
        )
    }
}
