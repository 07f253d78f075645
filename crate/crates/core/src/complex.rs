//! Finite abstract simplicial complexes.
//!
//! A [`Complex`] stores every nonempty face explicitly, grouped by dimension.
//! Each dimension keeps its faces in lexicographic order together with a hash
//! index, so "is this vertex set a face" is a single lookup and the face order
//! (which fixes boundary-matrix layout) is reproducible.
//!
//! Notation: a *d-simplex* has `d + 1` vertices. [`Complex::simplex`] and
//! [`Complex::boundary_of_simplex`] take the vertex count `m`, so
//! `boundary_of_simplex(d + 1)` is the boundary of a d-simplex.

use std::borrow::Borrow;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A strictly increasing list of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    /// Sorts `vertices`; a repeated vertex is a malformed-input error.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedInput(format!(
                "vertex {} repeated in {:?}",
                w[0], vertices
            )));
        }
        Ok(VertexSet(vertices))
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Caller guarantees `vertices` is strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        VertexSet(vertices)
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension of the simplex on these vertices (`-1` for the empty set).
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .merge(other.0.iter().copied())
                .dedup()
                .collect(),
        )
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        )
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut out = Vec::with_capacity(self.0.len() + 1);
                out.extend_from_slice(&self.0[..pos]);
                out.push(v);
                out.extend_from_slice(&self.0[pos..]);
                VertexSet(out)
            }
        }
    }

    /// The set with its `i`-th smallest vertex removed.
    pub fn without_index(&self, i: usize) -> VertexSet {
        let mut out = self.0.clone();
        out.remove(i);
        VertexSet(out)
    }

    /// The codimension-one faces, in the order "drop vertex 0, drop vertex 1, ...".
    pub fn facets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        (0..self.0.len()).map(move |i| self.without_index(i))
    }
}

pub(crate) fn is_sorted_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

impl Borrow<[Vertex]> for VertexSet {
    fn borrow(&self) -> &[Vertex] {
        &self.0
    }
}

impl TryFrom<Vec<Vertex>> for VertexSet {
    type Error = Error;
    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        VertexSet::new(v)
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(v: VertexSet) -> Self {
        v.0
    }
}

/// Literal construction; panics on a repeated vertex.
impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        VertexSet::new(v.to_vec()).expect("vertex literal with repeated vertex")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

/// Face counts `(f_0, f_1, ..., f_dim)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `f_i`, zero above the dimension.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `sum (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// An immutable finite abstract simplicial complex.
///
/// Every vertex of [`Complex::vertices`] is a face, the face family is
/// downward closed, and the empty face is implicit (never stored).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    vertices: VertexSet,
    /// `levels[i]` holds the i-faces in lexicographic order; level 0 mirrors
    /// `vertices`.
    levels: Vec<Vec<VertexSet>>,
}

/// Binary search in a lexicographically sorted level.
fn find(level: &[VertexSet], face: &[Vertex]) -> Option<usize> {
    level.binary_search_by(|f| f.as_slice().cmp(face)).ok()
}

impl Complex {
    /// The complex with no vertices and no nonempty faces.
    pub fn empty() -> Self {
        Complex {
            vertices: VertexSet::empty(),
            levels: Vec::new(),
        }
    }

    /// Smallest complex containing `facets` and the `isolated` vertices.
    pub fn from_facets<F: AsRef<[Vertex]>>(facets: &[F], isolated: &[Vertex]) -> Result<Self> {
        if facets.iter().all(|f| f.as_ref().is_empty()) && isolated.is_empty() {
            return Err(Error::MalformedInput(
                "a complex needs at least one facet or vertex".into(),
            ));
        }
        let mut top: Vec<BTreeSet<VertexSet>> = Vec::new();
        let mut vertices: BTreeSet<Vertex> = isolated.iter().copied().collect();
        for f in facets {
            let face = VertexSet::new(f.as_ref().to_vec())?;
            if face.is_empty() {
                continue;
            }
            vertices.extend(face.iter());
            let dim = face.len() - 1;
            if top.len() <= dim {
                top.resize_with(dim + 1, BTreeSet::new);
            }
            top[dim].insert(face);
        }
        if top.is_empty() {
            top.push(BTreeSet::new());
        }
        // close downward one level at a time
        for dim in (1..top.len()).rev() {
            let lower: Vec<VertexSet> = top[dim].iter().flat_map(|f| f.facets()).collect();
            top[dim - 1].extend(lower);
        }
        top[0].extend(vertices.iter().map(|&v| VertexSet::from_sorted(vec![v])));
        let levels = top.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Self::from_sorted_levels(
            VertexSet::from_sorted(vertices.into_iter().collect()),
            levels,
        ))
    }

    /// Builds a complex from per-dimension face lists. The lists need not be
    /// sorted; the family must already be downward closed.
    pub(crate) fn from_levels(vertices: VertexSet, mut levels: Vec<Vec<VertexSet>>) -> Self {
        for level in &mut levels {
            level.sort_unstable();
            level.dedup();
        }
        Self::from_sorted_levels(vertices, levels)
    }

    fn from_sorted_levels(vertices: VertexSet, levels: Vec<Vec<VertexSet>>) -> Self {
        let mut levels = levels;
        while levels.len() > 1 && levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        if vertices.is_empty() {
            levels.clear();
        }
        let complex = Complex { vertices, levels };
        debug_assert!(complex.audit().is_ok(), "{:?}", complex.audit());
        complex
    }

    /// Full (m-1)-simplex on vertices `0..m`.
    pub fn simplex(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("a simplex needs at least one vertex".into()));
        }
        Ok(Self::complete_skeleton(m, m - 1))
    }

    /// Boundary of the (m-1)-simplex on vertices `0..m`; `m = 2` gives S^0.
    pub fn boundary_of_simplex(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Domain(
                "the boundary of a simplex needs at least two vertices".into(),
            ));
        }
        Ok(Self::complete_skeleton(m, m - 2))
    }

    /// All subsets of `0..n` with at most `k + 1` elements.
    pub fn complete_skeleton(n: usize, k: usize) -> Self {
        let levels = (0..=k.min(n.saturating_sub(1)))
            .map(|i| {
                (0..n)
                    .combinations(i + 1)
                    .map(VertexSet::from_sorted)
                    .collect()
            })
            .collect();
        Self::from_sorted_levels(VertexSet::range(n), levels)
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Largest face dimension; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.levels.len() as isize - 1
    }

    pub fn num_faces(&self, i: usize) -> usize {
        self.levels.get(i).map_or(0, |l| l.len())
    }

    pub fn total_faces(&self) -> usize {
        self.levels.iter().map(|l| l.len()).sum()
    }

    /// The i-faces in lexicographic order (empty above the dimension).
    pub fn faces(&self, i: usize) -> &[VertexSet] {
        self.levels.get(i).map_or(&[], |l| l.as_slice())
    }

    /// All faces, by increasing dimension.
    pub fn all_faces(&self) -> impl Iterator<Item = &VertexSet> {
        self.levels.iter().flatten()
    }

    /// Position of `face` within its dimension's lexicographic order.
    pub fn face_index(&self, face: &[Vertex]) -> Option<usize> {
        if face.is_empty() {
            return None;
        }
        find(self.levels.get(face.len() - 1)?, face)
    }

    /// Membership test for a sorted vertex list. The empty set counts as a face
    /// of every nonempty complex.
    pub fn contains(&self, face: &[Vertex]) -> bool {
        if face.is_empty() {
            return !self.is_empty();
        }
        self.levels
            .get(face.len() - 1)
            .is_some_and(|l| find(l, face).is_some())
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.levels.iter().map(|l| l.len()).collect())
    }

    /// Faces not contained in a larger face, sorted by (dimension, lex).
    pub fn facets(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for (dim, level) in self.levels.iter().enumerate() {
            let mut is_max = vec![true; level.len()];
            if let Some(up) = self.levels.get(dim + 1) {
                for f in up {
                    for sub in f.facets() {
                        if let Some(idx) = find(level, sub.as_slice()) {
                            is_max[idx] = false;
                        }
                    }
                }
            }
            out.extend(
                level
                    .iter()
                    .zip(is_max)
                    .filter(|(_, m)| *m)
                    .map(|(f, _)| f.clone()),
            );
        }
        out
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets().iter().all(|f| f.dim() == d)
    }

    /// Faces of dimension at most `k`, same vertex set.
    pub fn skeleton(&self, k: usize) -> Complex {
        Complex {
            vertices: self.vertices.clone(),
            levels: self.levels.iter().take(k + 1).cloned().collect(),
        }
    }

    fn require_face(&self, sigma: &VertexSet) -> Result<()> {
        if sigma.is_empty() || self.contains(sigma.as_slice()) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{sigma} is not a face")))
        }
    }

    /// `{ tau : tau ∩ sigma = ∅, tau ∪ sigma ∈ Δ }` on the vertices it uses.
    pub fn link(&self, sigma: &VertexSet) -> Result<Complex> {
        self.require_face(sigma)?;
        Ok(self.filter_faces(|tau| {
            tau.is_disjoint(sigma) && self.contains(tau.union(sigma).as_slice())
        }))
    }

    /// `{ tau : tau ∪ sigma ∈ Δ }` on the vertices it uses.
    pub fn star(&self, sigma: &VertexSet) -> Result<Complex> {
        self.require_face(sigma)?;
        Ok(self.filter_faces(|tau| self.contains(tau.union(sigma).as_slice())))
    }

    /// Keeps the faces satisfying a downward-closed predicate; the vertex set
    /// shrinks to the vertices that survive.
    fn filter_faces(&self, keep: impl Fn(&VertexSet) -> bool) -> Complex {
        let levels: Vec<Vec<VertexSet>> = self
            .levels
            .iter()
            .map(|l| l.iter().filter(|f| keep(f)).cloned().collect())
            .collect();
        let vertices =
            VertexSet::from_sorted(levels.first().map_or(Vec::new(), |l: &Vec<VertexSet>| {
                l.iter().map(|f| f.as_slice()[0]).collect()
            }));
        Self::from_sorted_levels(vertices, levels)
    }

    /// `Δ[U]`: every face contained in `u`.
    pub fn induced_subcomplex(&self, u: &VertexSet) -> Result<Complex> {
        if !u.is_subset(&self.vertices) {
            return Err(Error::Domain(format!(
                "{u} is not a subset of the vertex set"
            )));
        }
        let levels = self
            .levels
            .iter()
            .map(|l| l.iter().filter(|f| f.is_subset(u)).cloned().collect())
            .collect();
        Ok(Self::from_sorted_levels(u.clone(), levels))
    }

    /// Shifts every vertex id by `offset`.
    pub fn shifted(&self, offset: Vertex) -> Complex {
        let shift = |f: &VertexSet| VertexSet::from_sorted(f.iter().map(|v| v + offset).collect());
        Complex {
            vertices: shift(&self.vertices),
            levels: self
                .levels
                .iter()
                .map(|l| l.iter().map(shift).collect())
                .collect(),
        }
    }

    /// Relabels vertices to `0..n` preserving order.
    pub fn relabeled_dense(&self) -> Complex {
        let pos: HashMap<Vertex, Vertex> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let map = |f: &VertexSet| VertexSet::from_sorted(f.iter().map(|v| pos[&v]).collect());
        Complex {
            vertices: VertexSet::range(self.vertices.len()),
            levels: self
                .levels
                .iter()
                .map(|l| l.iter().map(map).collect())
                .collect(),
        }
    }

    /// Applies an injective vertex map. Faces are re-sorted.
    pub fn relabeled(&self, map: impl Fn(Vertex) -> Vertex) -> Result<Complex> {
        let image = |f: &VertexSet| VertexSet::new(f.iter().map(&map).collect());
        let vertices = image(&self.vertices)?;
        let levels = self
            .levels
            .iter()
            .map(|l| l.iter().map(image).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_levels(vertices, levels))
    }

    fn offset_for(&self) -> Vertex {
        self.vertices.max_vertex().map_or(0, |m| m + 1)
    }

    /// `Δ₀ * Δ₁`, with the second operand shifted past the first's largest
    /// vertex id.
    pub fn join(&self, other: &Complex) -> Complex {
        let other = other.shifted(self.offset_for());
        let empty = VertexSet::empty();
        let left: Vec<&VertexSet> = std::iter::once(&empty).chain(self.all_faces()).collect();
        let right: Vec<&VertexSet> = std::iter::once(&empty).chain(other.all_faces()).collect();
        let top = (self.dim() + other.dim() + 1).max(0) as usize;
        let mut levels: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
        for a in &left {
            for b in &right {
                let n = a.len() + b.len();
                if n == 0 {
                    continue;
                }
                // every vertex of `b` exceeds every vertex of `a`
                let mut f = Vec::with_capacity(n);
                f.extend_from_slice(a.as_slice());
                f.extend_from_slice(b.as_slice());
                levels[n - 1].push(VertexSet::from_sorted(f));
            }
        }
        Self::from_levels(self.vertices.union(&other.vertices), levels)
    }

    /// The (n+1)-fold join `Δ * Δ * ... * Δ`; `n = 0` returns a copy.
    pub fn n_fold_join(&self, n: usize) -> Complex {
        (0..n).fold(self.clone(), |acc, _| acc.join(self))
    }

    /// Cone with apex placed after the largest vertex.
    pub fn cone(&self) -> Complex {
        self.join(&Complex::simplex(1).expect("one vertex"))
    }

    /// Disjoint union, second operand shifted like in [`Complex::join`].
    pub fn disjoint_union(&self, other: &Complex) -> Complex {
        let other = other.shifted(self.offset_for());
        let top = self.levels.len().max(other.levels.len());
        let levels = (0..top)
            .map(|i| {
                self.faces(i)
                    .iter()
                    .chain(other.faces(i))
                    .cloned()
                    .collect()
            })
            .collect();
        Self::from_sorted_levels(self.vertices.union(&other.vertices), levels)
    }

    /// Facewise containment (vertex sets included).
    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.vertices.is_subset(&other.vertices)
            && self.all_faces().all(|f| other.contains(f.as_slice()))
    }

    /// Pure, and the facets are connected through codimension-one
    /// intersections. In dimension 0 the shared face is the empty face, so
    /// any set of points qualifies.
    pub fn is_strongly_connected(&self) -> bool {
        if self.is_empty() || !self.is_pure() {
            return false;
        }
        let top = self.dim() as usize;
        if top == 0 {
            return true;
        }
        let facets = self.faces(top);
        let mut ridge_owner: HashMap<VertexSet, usize> = HashMap::new();
        let mut parent: Vec<usize> = (0..facets.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, f) in facets.iter().enumerate() {
            for ridge in f.facets() {
                match ridge_owner.get(&ridge) {
                    Some(&j) => {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        parent[a] = b;
                    }
                    None => {
                        ridge_owner.insert(ridge, i);
                    }
                }
            }
        }
        let root = find(&mut parent, 0);
        (0..facets.len()).all(|i| find(&mut parent, i) == root)
    }

    /// Checks the structural invariants; used by debug builds and tests.
    pub fn audit(&self) -> Result<(), String> {
        if self.vertices.is_empty() {
            return if self.levels.is_empty() {
                Ok(())
            } else {
                Err("faces on an empty vertex set".into())
            };
        }
        let singletons: Vec<Vertex> = self.faces(0).iter().map(|f| f.as_slice()[0]).collect();
        if singletons != self.vertices.as_slice() {
            return Err("0-faces differ from the vertex set".into());
        }
        for (dim, level) in self.levels.iter().enumerate() {
            if level.iter().tuple_windows().any(|(a, b)| a >= b) {
                return Err(format!("level {dim} not strictly sorted"));
            }
            for f in level {
                if f.len() != dim + 1 {
                    return Err(format!("face {f} stored at dimension {dim}"));
                }
                if dim > 0 {
                    if let Some(missing) = f
                        .facets()
                        .find(|g| find(&self.levels[dim - 1], g.as_slice()).is_none())
                    {
                        return Err(format!("{missing} missing below {f}"));
                    }
                }
            }
        }
        if self.levels.last().is_some_and(|l| l.is_empty()) {
            return Err("empty top level".into());
        }
        Ok(())
    }
}
