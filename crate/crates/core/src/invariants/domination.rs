//! `s̃p` and the strong domination number `γ̃`.
//!
//! `s̃p(A)` collects the vertices `v` for which some face `σ ⊆ A` has
//! `σ ∪ {v}` outside the complex. Equivalently, `v ∈ s̃p(A)` iff some minimal
//! nonface `N` contains `v` with `N \ {v} ⊆ A`. The searches below index the
//! minimal nonfaces by `N \ {v}` so that `s̃p(A)` is a union over subsets of `A`.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Vertex, VertexSet};
use crate::error::{Error, Result};

use super::SearchLimits;

/// `γ̃`, with `Infinite` ordered above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gamma {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Gamma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Gamma::Finite(g) => write!(f, "{g}"),
            Gamma::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationResult {
    pub gamma: Gamma,
    /// Lexicographically least minimum strong dominating set.
    pub witness: Option<VertexSet>,
}

/// Definitional `s̃p_Δ(A)`.
pub fn sp_tilde(complex: &Complex, a: &VertexSet) -> Result<VertexSet> {
    let sub = complex.induced_subcomplex(a)?;
    let mut out = Vec::new();
    for v in complex.vertices().iter() {
        let hit = sub
            .all_faces()
            .any(|sigma| !sigma.contains(v) && !complex.contains(sigma.with(v).as_slice()));
        if hit {
            out.push(v);
        }
    }
    Ok(VertexSet::new(out).expect("vertices are distinct"))
}

/// Pairs `(S, v)` with `S` a face, `|S| <= max_size` and `S ∪ {v}` a minimal
/// nonface, grouped by `S`. Vertices are given by their position in
/// `complex.vertices()`.
fn minimal_nonface_spread(complex: &Complex, max_size: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let verts = complex.vertices().as_slice();
    let pos: HashMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut out = Vec::new();
    let levels = (complex.dim() + 1).max(0) as usize;
    for level in 0..max_size.min(levels) {
        for sigma in complex.faces(level) {
            let mut spread = Vec::new();
            for &v in verts {
                if sigma.contains(v) {
                    continue;
                }
                let n = sigma.with(v);
                if complex.contains(n.as_slice()) {
                    continue;
                }
                // minimal iff every facet of N other than sigma is a face
                let minimal = n
                    .facets()
                    .all(|g| g == *sigma || complex.contains(g.as_slice()));
                if minimal {
                    spread.push(pos[&v]);
                }
            }
            if !spread.is_empty() {
                out.push((sigma.iter().map(|v| pos[&v]).collect(), spread));
            }
        }
    }
    out
}

/// Exact `γ̃` by increasing-size search in lexicographic order.
pub fn strong_domination_number(
    complex: &Complex,
    limits: &SearchLimits,
) -> Result<DominationResult> {
    let n = complex.num_vertices();
    if n > limits.max_vertices || n > 64 {
        return Err(Error::Capacity(format!(
            "exhaustive strong domination search over {n} vertices exceeds the limit of {}; \
             use strong_domination_at_most for a fixed bound",
            limits.max_vertices.min(64)
        )));
    }
    let verts = complex.vertices().as_slice();
    let spread: Vec<(u64, u64)> = minimal_nonface_spread(complex, n)
        .into_iter()
        .map(|(s, vs)| (to_mask(&s), to_mask(&vs)))
        .collect();
    let sp = |a: u64| {
        spread
            .iter()
            .filter(|(s, _)| s & !a == 0)
            .fold(0u64, |acc, (_, v)| acc | v)
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if sp(full) != full {
        return Ok(DominationResult {
            gamma: Gamma::Infinite,
            witness: None,
        });
    }
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            if sp(to_mask(&combo)) == full {
                let witness = VertexSet::from_sorted(combo.iter().map(|&i| verts[i]).collect());
                return Ok(DominationResult {
                    gamma: Gamma::Finite(size),
                    witness: Some(witness),
                });
            }
        }
    }
    unreachable!("the full vertex set dominates")
}

fn to_mask(positions: &[usize]) -> u64 {
    positions.iter().fold(0, |m, &i| m | (1u64 << i))
}

/// Whether some `A` with `|A| <= m` has `s̃p(A) = V`, i.e. `γ̃ <= m`.
/// Polynomial in the vertex count for fixed `m`.
pub fn strong_domination_at_most(complex: &Complex, m: usize) -> Result<bool> {
    if m == 0 {
        return Err(Error::Domain("bound m must be at least 1".into()));
    }
    let n = complex.num_vertices();
    // s̃p is monotone, so sets of size exactly min(m, n) suffice
    let size = m.min(n);
    let spread: HashMap<Vec<usize>, FixedBitSet> = minimal_nonface_spread(complex, size)
        .into_iter()
        .map(|(s, vs)| {
            let mut bits = FixedBitSet::with_capacity(n);
            vs.into_iter().for_each(|v| bits.insert(v));
            (s, bits)
        })
        .collect();
    let mut covered = FixedBitSet::with_capacity(n);
    for a in (0..n).combinations(size) {
        covered.clear();
        for sub in a.iter().copied().powerset().skip(1) {
            if let Some(bits) = spread.get(&sub) {
                covered.union_with(bits);
            }
        }
        if covered.count_ones(..) == n {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_points() -> Complex {
        Complex::boundary_of_simplex(2).unwrap()
    }

    #[test]
    fn sp_tilde_cases() {
        let pts = Complex::from_facets::<[usize; 0]>(&[], &[4, 7]).unwrap();
        assert_eq!(
            sp_tilde(&pts, &VertexSet::from([4])).unwrap(),
            VertexSet::from([7])
        );
        let s4 = Complex::simplex(4).unwrap();
        assert!(sp_tilde(&s4, &VertexSet::from([0, 2])).unwrap().is_empty());
        for m in 2..6 {
            let b = Complex::boundary_of_simplex(m).unwrap();
            assert_eq!(sp_tilde(&b, b.vertices()).unwrap(), *b.vertices());
        }
        assert!(sp_tilde(&pts, &VertexSet::from([1])).is_err());
    }

    #[test]
    fn gamma_values() {
        let limits = SearchLimits::default();
        let r = strong_domination_number(&two_points(), &limits).unwrap();
        assert_eq!(r.gamma, Gamma::Finite(2));
        assert_eq!(r.witness, Some(VertexSet::from([0, 1])));
        for m in 2..7 {
            let b = Complex::boundary_of_simplex(m).unwrap();
            assert_eq!(
                strong_domination_number(&b, &limits).unwrap().gamma,
                Gamma::Finite(m)
            );
        }
        let s = Complex::simplex(5).unwrap();
        let r = strong_domination_number(&s, &limits).unwrap();
        assert_eq!(r.gamma, Gamma::Infinite);
        assert!(r.witness.is_none());
    }

    #[test]
    fn gamma_capacity_error() {
        let big = Complex::complete_skeleton(30, 0);
        let err = strong_domination_number(&big, &SearchLimits::default());
        assert!(matches!(err, Err(Error::Capacity(_))));
        assert!(strong_domination_number(&big, &SearchLimits { max_vertices: 40 }).is_ok());
    }

    #[test]
    fn at_most_cases() {
        let pts = two_points();
        assert!(!strong_domination_at_most(&pts, 1).unwrap());
        assert!(strong_domination_at_most(&pts, 2).unwrap());
        let s = Complex::simplex(4).unwrap();
        assert!(!strong_domination_at_most(&s, 3).unwrap());
        assert!(strong_domination_at_most(&s, 0).is_err());
    }

    #[test]
    fn infinite_orders_above_finite() {
        assert!(Gamma::Infinite > Gamma::Finite(usize::MAX));
        assert!(Gamma::Finite(2) < Gamma::Finite(3));
    }
}
