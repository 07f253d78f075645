//! The d-clique complex `Δ_d(X)`: every vertex set `F ⊆ V(X)` whose
//! `(d+1)`-subsets are all faces of `X`.
//!
//! Faces are built level by level. Levels below `d` are complete, level `d`
//! is the d-faces of `X`, and an m-face `F` (m > d) is extended by a vertex
//! `v > max F` exactly when `D ∪ {v}` is a d-face of `X` for every d-subset
//! `D ⊆ F`.

use std::collections::HashMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Vertex, VertexSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionParams {
    pub d: usize,
    /// Truncation dimension; `None` expands fully.
    pub max_dim: Option<usize>,
}

impl ExpansionParams {
    pub fn new(d: usize, max_dim: Option<usize>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("expansion order d must be at least 1".into()));
        }
        if let Some(m) = max_dim {
            if m < d {
                return Err(Error::Domain(format!("max_dim {m} is below d = {d}")));
            }
        }
        Ok(ExpansionParams { d, max_dim })
    }

    pub fn full(d: usize) -> Result<Self> {
        Self::new(d, None)
    }
}

/// True iff every (d+1)-subset of `face` is a face of `x`.
pub fn is_expansion_face(x: &Complex, d: usize, face: &VertexSet) -> bool {
    face.as_slice()
        .iter()
        .copied()
        .combinations(d + 1)
        .all(|sub| x.contains(&sub))
}

pub fn d_clique_complex(x: &Complex, params: ExpansionParams) -> Complex {
    d_clique_complex_budgeted(x, params, None).expect("no face budget")
}

/// As [`d_clique_complex`], failing with [`Error::Capacity`] as soon as the
/// face count would exceed `face_budget`.
pub fn d_clique_complex_budgeted(
    x: &Complex,
    params: ExpansionParams,
    face_budget: Option<usize>,
) -> Result<Complex> {
    let d = params.d;
    let vertices = x.vertices().clone();
    let n = vertices.len();
    let top = params.max_dim.unwrap_or(usize::MAX);
    let mut total = 0usize;
    let mut charge = |count: usize| -> Result<()> {
        total += count;
        match face_budget {
            Some(b) if total > b => Err(Error::Capacity(format!(
                "d-clique complex exceeds the face budget of {b}"
            ))),
            _ => Ok(()),
        }
    };

    let mut levels: Vec<Vec<VertexSet>> = Vec::new();
    // full (d-1)-skeleton on V(X)
    for i in 0..d.min(n) {
        if i > top {
            break;
        }
        let level: Vec<VertexSet> = vertices
            .as_slice()
            .iter()
            .copied()
            .combinations(i + 1)
            .map(VertexSet::from_sorted)
            .collect();
        charge(level.len())?;
        levels.push(level);
    }
    if d > top || levels.len() < d {
        return Ok(Complex::from_levels(vertices, levels));
    }

    // d-faces: exactly those of X
    let d_faces: Vec<VertexSet> = x.faces(d).to_vec();
    charge(d_faces.len())?;
    // extensions[D] = sorted v with D ∪ {v} a d-face of X (v ∉ D)
    let mut extensions: HashMap<&[Vertex], Vec<Vertex>> = HashMap::new();
    for f in &d_faces {
        for (i, &v) in f.as_slice().iter().enumerate() {
            let mut ridge = f.as_slice().to_vec();
            ridge.remove(i);
            let key: &[Vertex] = x_ridge(x, &ridge);
            extensions.entry(key).or_default().push(v);
        }
    }
    for list in extensions.values_mut() {
        list.sort_unstable();
    }
    levels.push(d_faces);

    let mut dim = d;
    while dim < top {
        let prev = levels.last().expect("level d present");
        let mut next: Vec<VertexSet> = Vec::new();
        for face in prev {
            let fs = face.as_slice();
            let max = *fs.last().expect("nonempty face");
            let ridges: Vec<Vec<Vertex>> = fs.iter().copied().combinations(d).collect();
            let Some(seed) = extensions.get(ridges[0].as_slice()) else {
                continue;
            };
            let start = seed.partition_point(|&v| v <= max);
            'candidates: for &v in &seed[start..] {
                for ridge in &ridges[1..] {
                    let ok = extensions
                        .get(ridge.as_slice())
                        .is_some_and(|ext| ext.binary_search(&v).is_ok());
                    if !ok {
                        continue 'candidates;
                    }
                }
                let mut f = fs.to_vec();
                f.push(v);
                next.push(VertexSet::from_sorted(f));
            }
        }
        if next.is_empty() {
            break;
        }
        charge(next.len())?;
        levels.push(next);
        dim += 1;
    }
    Ok(Complex::from_levels(vertices, levels))
}

/// Dimension of `Δ_d(x)` without building it: branch and bound over vertex
/// sets in increasing order, pruning when the remaining candidates cannot beat
/// the best size found. `node_budget` caps the number of search nodes.
pub fn d_clique_dimension(x: &Complex, d: usize, node_budget: Option<usize>) -> Result<isize> {
    if d == 0 {
        return Err(Error::Domain("expansion order d must be at least 1".into()));
    }
    let mut search = DimSearch {
        x,
        d,
        best: 0,
        nodes: 0,
        budget: node_budget.unwrap_or(usize::MAX),
        face: Vec::new(),
    };
    let all: Vec<Vertex> = x.vertices().iter().collect();
    search.grow(&all)?;
    Ok(search.best as isize - 1)
}

struct DimSearch<'a> {
    x: &'a Complex,
    d: usize,
    best: usize,
    nodes: usize,
    budget: usize,
    face: Vec<Vertex>,
}

impl DimSearch<'_> {
    /// `candidates` are the vertices above `max face` that extend `face`.
    fn grow(&mut self, candidates: &[Vertex]) -> Result<()> {
        self.best = self.best.max(self.face.len());
        for (i, &v) in candidates.iter().enumerate() {
            if self.face.len() + candidates.len() - i <= self.best {
                return Ok(());
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Capacity(format!(
                    "clique dimension search exceeds {} nodes",
                    self.budget
                )));
            }
            // w stays a candidate iff every new (d+1)-subset through v and w is in x
            let ridges: Vec<Vec<Vertex>> = if self.face.len() + 1 >= self.d {
                self.face.iter().copied().combinations(self.d - 1).collect()
            } else {
                Vec::new()
            };
            let next: Vec<Vertex> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| {
                    ridges.iter().all(|r| {
                        let mut s = r.clone();
                        s.push(v);
                        s.push(w);
                        s.sort_unstable();
                        self.x.contains(&s)
                    })
                })
                .collect();
            self.face.push(v);
            self.grow(&next)?;
            self.face.pop();
        }
        Ok(())
    }
}

/// Borrows the (d-1)-face of `x` equal to `ridge` so the extension map can key
/// on slices that outlive the loop. For `d = 1` the ridge is a vertex.
fn x_ridge<'a>(x: &'a Complex, ridge: &[Vertex]) -> &'a [Vertex] {
    let dim = ridge.len() - 1;
    let idx = x.face_index(ridge).expect("faces of X are downward closed");
    x.faces(dim)[idx].as_slice()
}
