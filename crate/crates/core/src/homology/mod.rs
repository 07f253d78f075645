//! Reduced simplicial homology over the integers.
//!
//! Faces are oriented by increasing vertex order and the boundary of a face
//! drops its i-th smallest vertex with sign `(-1)^i`. Homology is reduced:
//! `∂_0` maps every vertex to the empty face, so `H̃_0` counts components
//! minus one. Integer homology also fixes the rational Betti numbers.

mod matrix;
mod snf;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

pub use matrix::IntegerMatrix;
pub use snf::{integer_rank, is_prime, rank_mod_p, smith_normal_form};

use crate::complex::{Complex, VertexSet};
use crate::error::{Error, Result};

/// The prime used by the field fast path unless the caller picks one.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// How boundary ranks are computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum HomologyMode {
    /// Smith normal form over the integers: Betti numbers and torsion.
    #[default]
    Exact,
    /// Ranks over `F_p`; torsion is not checked.
    ModP(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub degree: usize,
    pub betti: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
    /// False when computed over a prime field.
    pub torsion_checked: bool,
}

impl HomologyResult {
    /// True when the group is zero (requires checked torsion to be certain).
    pub fn vanishes(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Matrix of `∂_k` from k-faces (columns) to (k-1)-faces (rows), both in
/// lexicographic order. `∂_0` is the `1 x f_0` all-ones augmentation.
pub fn boundary_matrix(complex: &Complex, k: usize) -> Result<IntegerMatrix> {
    if complex.dim() < k as isize {
        return Err(Error::Domain(format!(
            "no {k}-faces: complex has dimension {}",
            complex.dim()
        )));
    }
    if k == 0 {
        return Ok(IntegerMatrix::from_columns(
            1,
            vec![vec![(0, 1)]; complex.num_faces(0)],
        ));
    }
    let columns = complex
        .faces(k)
        .iter()
        .map(|face| {
            let mut col: Vec<(usize, i64)> = face
                .facets()
                .enumerate()
                .map(|(i, sub)| {
                    let row = complex
                        .face_index(sub.as_slice())
                        .expect("complex is downward closed");
                    (row, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect();
    Ok(IntegerMatrix::from_columns(
        complex.num_faces(k - 1),
        columns,
    ))
}

/// Rank and (exact mode only) nontrivial invariant factors of `∂_k`.
fn boundary_data(complex: &Complex, k: usize, mode: HomologyMode) -> Result<(usize, Vec<BigInt>)> {
    if complex.dim() < k as isize {
        return Ok((0, Vec::new()));
    }
    if k == 0 {
        return Ok((usize::from(!complex.is_empty()), Vec::new()));
    }
    let m = boundary_matrix(complex, k)?;
    match mode {
        HomologyMode::Exact => {
            let inv = smith_normal_form(&m);
            let rank = inv.len();
            Ok((rank, inv.into_iter().filter(|d| !d.is_one()).collect()))
        }
        HomologyMode::ModP(p) => Ok((rank_mod_p(&m, p)?, Vec::new())),
    }
}

/// `H̃_k(Δ; Z)`.
pub fn reduced_homology(complex: &Complex, k: usize) -> HomologyResult {
    reduced_homology_with(complex, k, HomologyMode::Exact).expect("exact mode cannot fail")
}

pub fn reduced_homology_with(
    complex: &Complex,
    k: usize,
    mode: HomologyMode,
) -> Result<HomologyResult> {
    let (rank_k, _) = boundary_data(complex, k, mode)?;
    let (rank_up, torsion) = boundary_data(complex, k + 1, mode)?;
    Ok(assemble(complex, k, mode, rank_k, rank_up, torsion))
}

fn assemble(
    complex: &Complex,
    k: usize,
    mode: HomologyMode,
    rank_k: usize,
    rank_up: usize,
    torsion: Vec<BigInt>,
) -> HomologyResult {
    HomologyResult {
        degree: k,
        betti: complex.num_faces(k) - rank_k - rank_up,
        torsion,
        torsion_checked: mode == HomologyMode::Exact,
    }
}

/// `H̃_0 .. H̃_kmax`, computing each boundary matrix once.
pub fn betti_profile(complex: &Complex, kmax: usize) -> Vec<HomologyResult> {
    betti_profile_with(complex, kmax, HomologyMode::Exact).expect("exact mode cannot fail")
}

pub fn betti_profile_with(
    complex: &Complex,
    kmax: usize,
    mode: HomologyMode,
) -> Result<Vec<HomologyResult>> {
    let data = (0..=kmax + 1)
        .map(|k| boundary_data(complex, k, mode))
        .collect::<Result<Vec<_>>>()?;
    let profile: Vec<HomologyResult> = (0..=kmax)
        .map(|k| {
            assemble(
                complex,
                k,
                mode,
                data[k].0,
                data[k + 1].0,
                data[k + 1].1.clone(),
            )
        })
        .collect();
    debug_assert!(
        complex.dim() > kmax as isize || euler_poincare_holds(complex, &profile),
        "Euler-Poincare identity violated"
    );
    Ok(profile)
}

/// `sum (-1)^i f_i = 1 + sum (-1)^i b̃_i`, provided the profile reaches the
/// top dimension.
pub fn euler_poincare_holds(complex: &Complex, profile: &[HomologyResult]) -> bool {
    if complex.is_empty() {
        return profile.iter().all(|h| h.betti == 0);
    }
    if (profile.len() as isize) < complex.dim() + 1 {
        return false;
    }
    let alternating: i64 = profile
        .iter()
        .map(|h| {
            if h.degree % 2 == 0 {
                h.betti as i64
            } else {
                -(h.betti as i64)
            }
        })
        .sum();
    complex.f_vector().euler_characteristic() == 1 + alternating
}

/// An integer k-chain over an ambient complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<VertexSet, i64>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Sums repeated faces and drops zero coefficients; every face must be a
    /// `degree`-face of `ambient`.
    pub fn new(
        ambient: &Complex,
        degree: usize,
        terms: impl IntoIterator<Item = (VertexSet, i64)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<VertexSet, i64> = BTreeMap::new();
        for (face, c) in terms {
            if face.len() != degree + 1 || !ambient.contains(face.as_slice()) {
                return Err(Error::Domain(format!("{face} is not a {degree}-face")));
            }
            *map.entry(face).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        Ok(Chain { degree, terms: map })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, face: &VertexSet) -> i64 {
        self.terms.get(face).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VertexSet, i64)> {
        self.terms.iter().map(|(f, &c)| (f, c))
    }

    /// Faces with nonzero coefficient.
    pub fn support(&self) -> Vec<VertexSet> {
        self.terms.keys().cloned().collect()
    }

    /// `∂c`, or `None` in degree 0 (where the reduced boundary is the
    /// coefficient sum, see [`Chain::is_cycle`]).
    pub fn boundary(&self) -> Option<Chain> {
        if self.degree == 0 {
            return None;
        }
        let mut map: BTreeMap<VertexSet, i64> = BTreeMap::new();
        for (face, &c) in &self.terms {
            for (i, sub) in face.facets().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                *map.entry(sub).or_insert(0) += sign * c;
            }
        }
        map.retain(|_, c| *c != 0);
        Some(Chain {
            degree: self.degree - 1,
            terms: map,
        })
    }

    /// Reduced cycle condition.
    pub fn is_cycle(&self) -> bool {
        match self.boundary() {
            Some(b) => b.is_zero(),
            None => self.terms.values().sum::<i64>() == 0,
        }
    }
}

/// Downward closure of the support; empty for the zero chain.
pub fn support_complex(chain: &Chain) -> Complex {
    if chain.is_zero() {
        return Complex::empty();
    }
    Complex::from_facets(
        &chain
            .support()
            .iter()
            .map(VertexSet::as_slice)
            .collect::<Vec<_>>(),
        &[],
    )
    .expect("support faces are valid")
}

pub fn vertex_support(chain: &Chain) -> VertexSet {
    support_complex(chain).vertices().clone()
}
