//! Copies of a pattern complex inside a host complex.
//!
//! A copy is an injective vertex map sending every pattern face to a host
//! face. Backtracking places pattern vertices by decreasing facet degree
//! (ties by id); each pattern face is checked once its last vertex is placed,
//! and candidates for a vertex with an already-placed pattern neighbour are
//! drawn from that neighbour's host adjacency list. The search order is fixed,
//! so the returned embedding is deterministic.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::{Complex, Vertex, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    /// `(pattern vertex, host vertex)` sorted by pattern vertex.
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl Embedding {
    pub fn image(&self, v: Vertex) -> Option<Vertex> {
        self.pairs
            .binary_search_by_key(&v, |p| p.0)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn image_of(&self, face: &VertexSet) -> Option<VertexSet> {
        let imgs = face
            .iter()
            .map(|v| self.image(v))
            .collect::<Option<Vec<_>>>()?;
        VertexSet::new(imgs).ok()
    }

    /// Injective, total on the pattern, and faces map to faces.
    pub fn is_valid(&self, pattern: &Complex, host: &Complex) -> bool {
        let targets: HashSet<Vertex> = self.pairs.iter().map(|p| p.1).collect();
        targets.len() == self.pairs.len()
            && self.pairs.len() == pattern.num_vertices()
            && pattern.all_faces().all(|f| {
                self.image_of(f)
                    .is_some_and(|g| host.contains(g.as_slice()))
            })
    }
}

/// Some copy of `pattern` in `host`, or `None`.
pub fn contains_subcomplex_copy(host: &Complex, pattern: &Complex) -> Option<Embedding> {
    Search::new(host, pattern, false).run()
}

/// Some copy whose image spans an induced subcomplex isomorphic to `pattern`.
pub fn contains_induced_copy(host: &Complex, pattern: &Complex) -> Option<Embedding> {
    Search::new(host, pattern, true).run()
}

struct Search<'a> {
    host: &'a Complex,
    pattern: &'a Complex,
    induced: bool,
    order: Vec<Vertex>,
    /// pattern faces (dim >= 1) grouped by the order position of their last vertex
    checks: Vec<Vec<&'a VertexSet>>,
    /// for each position, an earlier position adjacent in the pattern
    anchor: Vec<Option<usize>>,
    host_adj: HashMap<Vertex, Vec<Vertex>>,
    assigned: Vec<Vertex>,
    used: HashSet<Vertex>,
}

impl<'a> Search<'a> {
    fn new(host: &'a Complex, pattern: &'a Complex, induced: bool) -> Self {
        let facets = pattern.facets();
        let mut degree: HashMap<Vertex, usize> = HashMap::new();
        for f in &facets {
            for v in f.iter() {
                *degree.entry(v).or_default() += 1;
            }
        }
        let mut order: Vec<Vertex> = pattern.vertices().iter().collect();
        order.sort_by_key(|v| (std::cmp::Reverse(degree[v]), *v));
        let position: HashMap<Vertex, usize> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        let mut checks: Vec<Vec<&VertexSet>> = vec![Vec::new(); order.len()];
        for f in pattern.all_faces().filter(|f| f.len() > 1) {
            let last = f.iter().map(|v| position[&v]).max().expect("nonempty");
            checks[last].push(f);
        }
        let anchor = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                pattern
                    .faces(1)
                    .iter()
                    .filter(|e| e.contains(v))
                    .flat_map(|e| e.iter())
                    .filter(|&w| w != v)
                    .map(|w| position[&w])
                    .filter(|&j| j < i)
                    .min()
            })
            .collect();

        let mut host_adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
        for e in host.faces(1) {
            let (a, b) = (e.as_slice()[0], e.as_slice()[1]);
            host_adj.entry(a).or_default().push(b);
            host_adj.entry(b).or_default().push(a);
        }
        for list in host_adj.values_mut() {
            list.sort_unstable();
        }
        Search {
            host,
            pattern,
            induced,
            order,
            checks,
            anchor,
            host_adj,
            assigned: Vec::new(),
            used: HashSet::new(),
        }
    }

    fn run(mut self) -> Option<Embedding> {
        if self.pattern.num_vertices() > self.host.num_vertices() {
            return None;
        }
        if !self.extend() {
            return None;
        }
        let mut pairs: Vec<(Vertex, Vertex)> = self
            .order
            .iter()
            .copied()
            .zip(self.assigned.iter().copied())
            .collect();
        pairs.sort_unstable();
        Some(Embedding { pairs })
    }

    fn image(&self, face: &VertexSet, pos: &HashMap<Vertex, usize>) -> Vec<Vertex> {
        let mut img: Vec<Vertex> = face.iter().map(|v| self.assigned[pos[&v]]).collect();
        img.sort_unstable();
        img
    }

    fn extend(&mut self) -> bool {
        let i = self.assigned.len();
        if i == self.order.len() {
            return !self.induced || self.induced_ok();
        }
        let candidates: Vec<Vertex> = match self.anchor[i] {
            Some(j) => self
                .host_adj
                .get(&self.assigned[j])
                .cloned()
                .unwrap_or_default(),
            None => self.host.vertices().iter().collect(),
        };
        let pos: HashMap<Vertex, usize> = self
            .order
            .iter()
            .enumerate()
            .map(|(k, &v)| (v, k))
            .collect();
        for h in candidates {
            if self.used.contains(&h) {
                continue;
            }
            self.assigned.push(h);
            let ok = self.checks[i]
                .iter()
                .all(|f| self.host.contains(&self.image(f, &pos)));
            if ok {
                self.used.insert(h);
                if self.extend() {
                    return true;
                }
                self.used.remove(&h);
            }
            self.assigned.pop();
        }
        false
    }

    fn induced_ok(&self) -> bool {
        let image = VertexSet::new(self.assigned.clone()).expect("injective");
        let sub = self
            .host
            .induced_subcomplex(&image)
            .expect("image inside host");
        sub.f_vector() == self.pattern.f_vector()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hollow_square() -> Complex {
        Complex::from_facets(&[[0, 1], [1, 2], [2, 3], [0, 3]], &[]).unwrap()
    }

    #[test]
    fn square_in_tetrahedron() {
        let host = Complex::simplex(4).unwrap();
        let e = contains_subcomplex_copy(&host, &hollow_square()).expect("found");
        assert!(e.is_valid(&hollow_square(), &host));
    }

    #[test]
    fn pigeonhole_and_missing_cycle() {
        let octa = Complex::boundary_of_simplex(2)
            .unwrap()
            .n_fold_join(2)
            .skeleton(1);
        let host = Complex::simplex(5).unwrap();
        assert!(contains_subcomplex_copy(&host, &octa).is_none());

        let path = Complex::from_facets(&[[0, 1], [1, 2], [2, 3]], &[]).unwrap();
        let tri = Complex::boundary_of_simplex(3).unwrap();
        assert!(contains_subcomplex_copy(&path, &tri).is_none());
    }

    #[test]
    fn isolated_pattern_vertices() {
        let host = Complex::from_facets(&[[5, 6]], &[9]).unwrap();
        let pattern = Complex::from_facets::<[usize; 0]>(&[], &[0, 1, 2]).unwrap();
        let e = contains_subcomplex_copy(&host, &pattern).unwrap();
        assert!(e.is_valid(&pattern, &host));
    }

    #[test]
    fn induced_copy_is_stricter() {
        let host = Complex::complete_skeleton(4, 1);
        assert!(contains_subcomplex_copy(&host, &hollow_square()).is_some());
        assert!(contains_induced_copy(&host, &hollow_square()).is_none());
        let sq = hollow_square();
        assert!(contains_induced_copy(&sq, &sq).is_some());
    }
}
