//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod canon;
mod io;
mod matching;

pub use canon::{canonical_code, CanonicalCode, GENERAL_CANON_MAX_N};
pub use io::{emit_graph6, parse_edge_list, parse_graph6};
pub use matching::{has_perfect_matching, perfect_matchings, MATCHING_MAX_N};

/// Normalized undirected edge, `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Panics if `a == b`; loops are never edges of a simple graph.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop {a}-{a} is not an edge");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn has_endpoint(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    /// The common endpoint if the two edges share exactly one vertex.
    pub fn shared_vertex(&self, other: &Edge) -> Option<usize> {
        if self == other {
            return None;
        }
        [self.u, self.v].into_iter().find(|&x| other.has_endpoint(x))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    /// Bitmask of the members; `None` if some member is 64 or larger.
    pub fn to_mask(&self) -> Option<u64> {
        self.0
            .iter()
            .try_fold(0u64, |acc, &v| (v < 64).then(|| acc | 1 << v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Sorted, duplicate-free set of normalized edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.binary_search(e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    /// Copy of `self` with `removed` replaced by `inserted`.
    pub fn replace(&self, removed: &Edge, inserted: Edge) -> EdgeSet {
        self.0
            .iter()
            .copied()
            .filter(|e| e != removed)
            .chain(std::iter::once(inserted))
            .collect()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        let mut members: Vec<Edge> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        EdgeSet(members)
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Simple undirected graph. Adjacency lists are sorted and symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from endpoint pairs. Duplicates (in either orientation)
    /// collapse; loops and out-of-range ids are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Argument(format!(
                    "edge {a}-{b} out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::Argument(format!("self-loop at vertex {a}")));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adjacency })
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    /// Star with center 0 and `leaves` pendant vertices.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star edges are valid")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// All edges in sorted order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list.iter().filter(|&&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adjacency.iter().any(Vec::is_empty)
    }

    /// Neighborhood bitmasks; `None` when `n > 64`.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|list| list.iter().fold(0u64, |acc, &v| acc | 1 << v))
                .collect(),
        )
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() == 0 || (self.m() + 1 == self.n() && self.is_connected())
    }

    /// Subgraph induced by `subset`, re-indexed in increasing id order.
    /// The returned vector maps new ids back to ids of `self`.
    pub fn induced_subgraph(&self, subset: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if let Some(max) = subset.max() {
            if max >= self.n() {
                return Err(Error::Argument(format!(
                    "vertex {max} out of range for {} vertices",
                    self.n()
                )));
            }
        }
        let mapping: Vec<usize> = subset.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (new, &old) in mapping.iter().enumerate() {
            index[old] = new;
        }
        let adjacency = mapping
            .iter()
            .map(|&old| {
                self.neighbors(old)
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Ok((Graph { adjacency }, mapping))
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adjacency = vec![Vec::new(); self.n()];
        for (v, list) in self.adjacency.iter().enumerate() {
            adjacency[perm[v]] = list.iter().map(|&w| perm[w]).collect();
            adjacency[perm[v]].sort_unstable();
        }
        Graph { adjacency }
    }

    /// Copy with a new vertex `n` attached to `neighbors`.
    pub fn with_vertex(&self, neighbors: &[usize]) -> Graph {
        let new = self.n();
        let mut adjacency = self.adjacency.clone();
        let mut list: Vec<usize> = neighbors.to_vec();
        list.sort_unstable();
        list.dedup();
        for &w in &list {
            adjacency[w].push(new);
        }
        adjacency.push(list);
        Graph { adjacency }
    }

    pub(crate) fn from_adjacency_unchecked(adjacency: Vec<Vec<usize>>) -> Graph {
        Graph { adjacency }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Square c1..c4 (ids 0..3) with pendant x_i (ids 4..7) on each c_i.
    pub fn pendant_square() -> Graph {
        Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap()
    }

    /// Spider with center 0, legs 0-a_i-b_i where a_i = i and b_i = i + 3.
    pub fn spider222() -> Graph {
        Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn edge_normalizes_orientation() {
        assert_eq!(Edge::new(3, 1), Edge { u: 1, v: 3 });
        assert_eq!(Edge::new(0, 1).shared_vertex(&Edge::new(1, 2)), Some(1));
        assert_eq!(Edge::new(0, 1).shared_vertex(&Edge::new(2, 3)), None);
        assert_eq!(Edge::new(0, 1).shared_vertex(&Edge::new(0, 1)), None);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn induced_square_of_pendant_square() {
        let g = pendant_square();
        let (sq, map) = g.induced_subgraph(&[0, 1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(map, vec![0, 1, 2, 3]);
        assert_eq!(sq, Graph::cycle(4));
    }

    #[test]
    fn induced_empty_and_endpoints() {
        let (g, map) = Graph::path(4).induced_subgraph(&VertexSet::new()).unwrap();
        assert_eq!(g.n(), 0);
        assert!(map.is_empty());
        let (g, map) = Graph::path(4)
            .induced_subgraph(&[0, 3].into_iter().collect())
            .unwrap();
        assert_eq!((g.n(), g.m()), (2, 0));
        assert_eq!(map, vec![0, 3]);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let err = Graph::path(3).induced_subgraph(&[0, 5].into_iter().collect());
        assert!(matches!(err, Err(Error::Argument(_))));
    }

    #[test]
    fn connectivity_and_trees() {
        assert!(Graph::path(4).is_connected());
        assert!(Graph::path(4).is_tree());
        assert!(pendant_square().is_connected());
        assert!(!pendant_square().is_tree());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(!two_edges.is_tree());
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(0).is_tree());
        assert!(Graph::empty(1).is_tree());
    }

    #[test]
    fn vertex_set_masks() {
        let s: VertexSet = [5, 1, 3, 1].into_iter().collect();
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert_eq!(s.to_mask(), Some(0b101010));
        assert_eq!(VertexSet::from_mask(0b101010), s);
        assert_eq!(s.to_string(), "{1,3,5}");
    }
}
