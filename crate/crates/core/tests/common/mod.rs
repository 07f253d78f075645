#![allow(dead_code)]

use dclique_core::homology::{boundary_matrix, HomologyResult};
use dclique_core::random::{alpha_to_p, sample_gdnp, ModelParams};
use dclique_core::{Complex, VertexSet};

/// Six-vertex real projective plane.
pub fn rp2() -> Complex {
    Complex::from_facets(
        &[
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 2, 6],
            [2, 3, 5],
            [3, 4, 6],
            [2, 4, 5],
            [3, 5, 6],
            [2, 4, 6],
        ],
        &[],
    )
    .unwrap()
}

/// `Δ_d(x)` by testing every subset of the vertex set.
pub fn brute_force_expansion(x: &Complex, d: usize) -> Complex {
    let verts: Vec<usize> = x.vertices().iter().collect();
    assert!(verts.len() <= 16);
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << verts.len()) {
        let f: Vec<usize> = (0..verts.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| verts[i])
            .collect();
        let ok = subsets(&f, d + 1).iter().all(|s| x.contains(s));
        if ok {
            faces.push(f);
        }
    }
    let isolated: Vec<usize> = verts.clone();
    Complex::from_facets(&faces, &isolated).unwrap()
}

/// All `size`-subsets of a sorted slice.
pub fn subsets(v: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size > v.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << v.len()) {
        if mask.count_ones() as usize == size {
            out.push(
                (0..v.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| v[i])
                    .collect(),
            );
        }
    }
    out
}

/// `∂_{k} ∂_{k+1} = 0` for every degree of `c`.
pub fn boundary_squares_to_zero(c: &Complex) -> bool {
    let top = c.dim();
    (0..top.max(0) as usize).all(|k| {
        let a = boundary_matrix(c, k).unwrap();
        let b = boundary_matrix(c, k + 1).unwrap();
        a.checked_mul(&b).unwrap().is_zero()
    })
}

/// Euler-Poincare against a profile that reaches the top dimension.
pub fn euler_poincare(c: &Complex, profile: &[HomologyResult]) -> bool {
    let chi: i64 = c
        .f_vector()
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
        .sum();
    let alt: i64 = profile
        .iter()
        .map(|h| {
            if h.degree % 2 == 0 {
                h.betti as i64
            } else {
                -(h.betti as i64)
            }
        })
        .sum();
    chi == 1 + alt
}

pub fn sample(n: usize, d: usize, p: f64, seed: u64) -> Complex {
    sample_gdnp(&ModelParams::new(n, d, p, seed).unwrap())
}

pub fn sample_alpha(n: usize, d: usize, alpha: f64, seed: u64) -> Complex {
    sample(n, d, alpha_to_p(n, alpha).value, seed)
}

pub fn vs(v: &[usize]) -> VertexSet {
    VertexSet::new(v.to_vec()).unwrap()
}
