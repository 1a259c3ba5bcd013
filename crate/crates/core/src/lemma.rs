//! Twinning: rewriting a minimum ev-dominating set with two edges sharing a
//! vertex into two minimum ev-dominating sets with fewer such pairs.
//!
//! For `e1 = x1x2` and `e2 = x2x3` in a minimum set `M`, some neighbor `x0`
//! of `x1` is ev-dominated by `e1` alone (and `x4` next to `x3` by `e2`
//! alone). Swapping `e1` for `x0x1` (or `e2` for `x3x4`) keeps the set
//! dominating. Repeating on the left branch ends in two matchings.

use serde::{Deserialize, Serialize};

use crate::domination::{ev_dominates, is_ev_dominating_set, spanned_vertices};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwinningStep {
    pub replaced_edge: Edge,
    pub inserted_edge: Edge,
    pub private_vertex: usize,
    pub shared_vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetangleResult {
    pub left: EdgeSet,
    pub right: EdgeSet,
    /// Steps applied to the left branch, in order.
    pub trace: Vec<TwinningStep>,
    pub iterations: usize,
    /// Sharing-pair counts of (left, right) after each step.
    pub branch_sharing: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twinned {
    pub left: EdgeSet,
    pub right: EdgeSet,
    pub left_step: TwinningStep,
    pub right_step: TwinningStep,
}

/// Unordered pairs of edges of `m` with a common endpoint.
pub fn sharing_pairs(m: &EdgeSet) -> usize {
    let edges = m.as_slice();
    (0..edges.len())
        .map(|i| {
            edges[i + 1..]
                .iter()
                .filter(|f| edges[i].shared_vertex(f).is_some())
                .count()
        })
        .sum()
}

fn first_sharing_pair(m: &EdgeSet) -> Option<(Edge, Edge)> {
    let edges = m.as_slice();
    (0..edges.len()).find_map(|i| {
        edges[i + 1..]
            .iter()
            .find(|f| edges[i].shared_vertex(f).is_some())
            .map(|&f| (edges[i], f))
    })
}

/// True when no three distinct edges of `m` form a 4-vertex path or a
/// triangle.
pub fn check_claim(m: &EdgeSet) -> bool {
    let edges = m.as_slice();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            for k in j + 1..edges.len() {
                if forms_path_or_triangle([edges[i], edges[j], edges[k]]) {
                    return false;
                }
            }
        }
    }
    true
}

fn forms_path_or_triangle(edges: [Edge; 3]) -> bool {
    let mut vertices: Vec<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
    vertices.sort_unstable();
    let mut degrees: Vec<usize> = Vec::new();
    let mut distinct = vertices.clone();
    distinct.dedup();
    for v in &distinct {
        degrees.push(vertices.iter().filter(|w| *w == v).count());
    }
    degrees.sort_unstable();
    match distinct.len() {
        3 => true,
        // 1,1,2,2 is a path; 1,1,1,3 a star; two components never give 4
        4 => degrees == [1, 1, 2, 2],
        _ => false,
    }
}

/// Smallest vertex of `N(anchor)` that no edge of `m` other than `e`
/// ev-dominates.
pub fn find_private_vertex(g: &Graph, m: &EdgeSet, e: &Edge, anchor: usize) -> Result<usize> {
    if !m.contains(e) {
        return Err(Error::Argument(format!("edge {e} is not in the set")));
    }
    if !e.has_endpoint(anchor) {
        return Err(Error::Argument(format!(
            "vertex {anchor} is not an endpoint of {e}"
        )));
    }
    g.neighbors(anchor)
        .iter()
        .copied()
        .find(|&x| {
            ev_dominates(g, e, x) && m.iter().all(|f| f == e || !ev_dominates(g, f, x))
        })
        .ok_or(Error::NotMinimumWitness {
            edge: *e,
            anchor,
        })
}

/// One twinning step on the sharing pair `e1, e2` of `m`.
pub fn twinning(g: &Graph, m: &EdgeSet, e1: &Edge, e2: &Edge) -> Result<Twinned> {
    if !m.contains(e1) || !m.contains(e2) {
        return Err(Error::Argument("both edges must belong to the set".into()));
    }
    let x2 = e1.shared_vertex(e2).ok_or_else(|| {
        Error::Argument(format!("{e1} and {e2} do not share exactly one vertex"))
    })?;
    let x1 = e1.other(x2).expect("x2 is an endpoint of e1");
    let x3 = e2.other(x2).expect("x2 is an endpoint of e2");
    let x0 = find_private_vertex(g, m, e1, x1)?;
    let x4 = find_private_vertex(g, m, e2, x3)?;

    let left_step = TwinningStep {
        replaced_edge: *e1,
        inserted_edge: Edge::new(x0, x1),
        private_vertex: x0,
        shared_vertex: x2,
    };
    let right_step = TwinningStep {
        replaced_edge: *e2,
        inserted_edge: Edge::new(x3, x4),
        private_vertex: x4,
        shared_vertex: x2,
    };
    let left = m.replace(e1, left_step.inserted_edge);
    let right = m.replace(e2, right_step.inserted_edge);

    let before = sharing_pairs(m);
    for (name, set) in [("left", &left), ("right", &right)] {
        if set.len() != m.len() || !is_ev_dominating_set(g, set) {
            return Err(Error::Invariant(format!(
                "{name} twin {set} is not an ev-dominating set of size {}",
                m.len()
            )));
        }
        if sharing_pairs(set) >= before {
            return Err(Error::Invariant(format!(
                "{name} twin {set} did not reduce sharing pairs below {before}"
            )));
        }
    }
    Ok(Twinned {
        left,
        right,
        left_step,
        right_step,
    })
}

/// Twins the left branch on its lexicographically smallest sharing pair
/// until no pair remains.
pub fn detangle(g: &Graph, m: &EdgeSet) -> Result<DetangleResult> {
    if sharing_pairs(m) == 0 {
        return Err(Error::Argument(format!(
            "{m} has no pair of edges sharing a vertex"
        )));
    }
    let cap = m.len() * m.len();
    let mut current = m.clone();
    let mut trace = Vec::new();
    let mut branch_sharing = Vec::new();
    loop {
        let (e1, e2) = first_sharing_pair(&current).expect("current set has a sharing pair");
        let twins = twinning(g, &current, &e1, &e2)?;
        trace.push(twins.left_step);
        let counts = (sharing_pairs(&twins.left), sharing_pairs(&twins.right));
        branch_sharing.push(counts);
        if trace.len() > cap {
            return Err(Error::Invariant(format!(
                "detangle exceeded {cap} iterations"
            )));
        }
        if counts.0 == 0 {
            return Ok(DetangleResult {
                left: twins.left,
                right: twins.right,
                iterations: trace.len(),
                trace,
                branch_sharing,
            });
        }
        current = twins.left;
    }
}

/// Ways a detangle result can fall short of what the procedure promises.
pub fn detangle_violations(g: &Graph, input: &EdgeSet, result: &DetangleResult) -> Vec<String> {
    let mut problems = Vec::new();
    if result.left.len() != input.len() || result.right.len() != input.len() {
        problems.push("output size differs from input size".to_string());
    }
    if result.left == result.right {
        problems.push("left and right outputs coincide".to_string());
    }
    if sharing_pairs(&result.left) != 0 {
        problems.push("left output has sharing pairs".to_string());
    }
    if sharing_pairs(&result.right) != 0 {
        problems.push("right output has sharing pairs".to_string());
    }
    if !is_ev_dominating_set(g, &result.left) || !is_ev_dominating_set(g, &result.right) {
        problems.push("an output is not ev-dominating".to_string());
    }
    if spanned_vertices(&result.left) == spanned_vertices(&result.right) {
        problems.push("outputs span the same vertices".to_string());
    }
    if result.iterations > input.len() * input.len() {
        problems.push("iteration cap exceeded".to_string());
    }
    problems
}
