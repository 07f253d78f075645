//! d-lumplessness: `|S| / f_d(Δ[S]) > |V| / f_d(Δ)` for every proper nonempty
//! `S ⊂ V`, with `f_d(Δ[S]) = 0` counting as `+∞`.
//!
//! The ratio comparison is done by cross-multiplication in integers, which is
//! exact. `f_d(Δ[S])` for every `S` comes from one subset-sum pass over
//! bitmasks.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, VertexSet};
use crate::error::{Error, Result};

use super::SearchLimits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LumplessReport {
    pub lumpless: bool,
    /// Smallest (then lexicographically least) violating subset.
    pub witness: Option<VertexSet>,
}

pub fn is_d_lumpless(complex: &Complex, d: usize, limits: &SearchLimits) -> Result<LumplessReport> {
    let f_d = complex.num_faces(d) as u128;
    if f_d == 0 {
        return Err(Error::Domain(format!("complex has no {d}-faces")));
    }
    let n = complex.num_vertices();
    if n > limits.max_vertices || n > 32 {
        return Err(Error::Capacity(format!(
            "lumplessness check over {n} vertices exceeds the limit of {}",
            limits.max_vertices.min(32)
        )));
    }
    let verts = complex.vertices().as_slice();
    let pos = |v: usize| verts.binary_search(&v).expect("face vertex in vertex set");

    let mut counts = vec![0u32; 1usize << n];
    for face in complex.faces(d) {
        let mask = face.iter().fold(0usize, |m, v| m | (1 << pos(v)));
        counts[mask] += 1;
    }
    for bit in 0..n {
        for mask in 0..counts.len() {
            if mask & (1 << bit) != 0 {
                counts[mask] += counts[mask ^ (1 << bit)];
            }
        }
    }
    let n_total = n as u128;
    let violates = |mask: usize| {
        let size = mask.count_ones() as u128;
        // |S| * f_d(Δ) <= |V| * f_d(Δ[S])
        size * f_d <= n_total * counts[mask] as u128
    };
    let full = (1usize << n) - 1;
    if !(1..full).any(violates) {
        return Ok(LumplessReport {
            lumpless: true,
            witness: None,
        });
    }
    for size in 1..n {
        for combo in (0..n).combinations(size) {
            let mask = combo.iter().fold(0usize, |m, &i| m | (1 << i));
            if violates(mask) {
                return Ok(LumplessReport {
                    lumpless: false,
                    witness: Some(VertexSet::from_sorted(
                        combo.iter().map(|&i| verts[i]).collect(),
                    )),
                });
            }
        }
    }
    unreachable!("a violating mask was found above")
}
