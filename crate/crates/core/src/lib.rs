//! d-clique complexes of random simplicial complexes.
//!
//! Build `Δ_d(X)` from a complex `X`, sample `X` from `G_d(n, p)`, compute
//! reduced integer homology, test strong domination, lumplessness and
//! subcomplex containment, and run seeded sweeps over `p = n^alpha`.

pub mod combinatorics;
pub mod complex;
pub mod error;
pub mod expansion;
pub mod homology;
pub mod invariants;
pub mod lab;
pub mod random;
pub mod scx;

pub use complex::{Complex, FVector, Vertex, VertexSet};
pub use error::{Error, Result};
pub use expansion::{
    d_clique_complex, d_clique_complex_budgeted, d_clique_dimension, ExpansionParams,
};
pub use homology::{betti_profile, reduced_homology, HomologyMode, HomologyResult};
pub use invariants::{Gamma, SearchLimits};
pub use lab::{SweepConfig, SweepOutput, SweepRow, ThresholdReport};
pub use random::{sample_gdnp, ModelParams, Probability};
