//! Domination predicates and exact minimum-set enumeration.
//!
//! A vertex set `D` dominates `G` when every vertex outside `D` has a
//! neighbor in `D`. An edge `uv` ev-dominates every vertex of `N[u] ∪ N[v]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{has_perfect_matching, Edge, EdgeSet, Graph, VertexSet};

mod solve;
mod tree_dp;

pub use solve::{Solver, DEFAULT_BUDGET};
pub use tree_dp::gamma_ev_tree_fast;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Ev,
    Paired,
}

/// All minimum sets of one kind for one graph, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinSetFamily<S> {
    pub kind: Kind,
    pub gamma: usize,
    pub sets: Vec<S>,
}

pub type EvFamily = MinSetFamily<EdgeSet>;
pub type PairedFamily = MinSetFamily<VertexSet>;

impl<S> MinSetFamily<S> {
    pub fn is_unique(&self) -> bool {
        self.sets.len() == 1
    }
}

impl EvFamily {
    pub fn verdict(&self) -> UniquenessVerdict {
        let mut spans: Vec<VertexSet> = self.sets.iter().map(spanned_vertices).collect();
        spans.sort();
        spans.dedup();
        UniquenessVerdict {
            unique: self.is_unique(),
            witness_count: self.sets.len(),
            common_span: (spans.len() == 1).then(|| spans.remove(0)),
        }
    }
}

impl PairedFamily {
    pub fn verdict(&self) -> UniquenessVerdict {
        UniquenessVerdict {
            unique: self.is_unique(),
            witness_count: self.sets.len(),
            common_span: self.is_unique().then(|| self.sets[0].clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniquenessVerdict {
    pub unique: bool,
    pub witness_count: usize,
    /// For ev families: the vertex set spanned by every minimum set, if
    /// they all agree. For paired families: the set itself when unique.
    pub common_span: Option<VertexSet>,
}

fn check_range(g: &Graph, d: &VertexSet) -> Result<()> {
    match d.max() {
        Some(v) if v >= g.n() => Err(Error::Argument(format!(
            "vertex {v} out of range for {} vertices",
            g.n()
        ))),
        _ => Ok(()),
    }
}

pub fn is_dominating_set(g: &Graph, d: &VertexSet) -> Result<bool> {
    check_range(g, d)?;
    Ok((0..g.n())
        .filter(|&v| !d.contains(v))
        .all(|v| g.neighbors(v).iter().any(|&w| d.contains(w))))
}

pub fn is_paired_dominating_set(g: &Graph, d: &VertexSet) -> Result<bool> {
    if !is_dominating_set(g, d)? {
        return Ok(false);
    }
    let (induced, _) = g.induced_subgraph(d)?;
    has_perfect_matching(&induced)
}

/// `e` is incident to `v` or to a neighbor of `v`.
pub fn ev_dominates(g: &Graph, e: &Edge, v: usize) -> bool {
    e.has_endpoint(v) || g.neighbors(v).iter().any(|&w| e.has_endpoint(w))
}

pub fn is_ev_dominating_set(g: &Graph, m: &EdgeSet) -> bool {
    (0..g.n()).all(|v| m.iter().any(|e| ev_dominates(g, e, v)))
}

/// Endpoints of all edges of `m`.
pub fn spanned_vertices(m: &EdgeSet) -> VertexSet {
    m.iter().flat_map(|e| [e.u, e.v]).collect()
}

pub fn solve_ev(g: &Graph) -> Result<EvFamily> {
    Solver::default().solve_ev(g)
}

pub fn solve_pr(g: &Graph) -> Result<PairedFamily> {
    Solver::default().solve_pr(g)
}

pub fn uniqueness(g: &Graph, kind: Kind) -> Result<UniquenessVerdict> {
    Solver::default().uniqueness(g, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{pendant_square, spider222};

    fn vs(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    fn es(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
    }

    /// Every edge subset of size <= `max_k`, smallest feasible size first.
    fn brute_ev(g: &Graph, max_k: usize) -> (usize, Vec<EdgeSet>) {
        let edges = g.edges();
        for k in 1..=max_k {
            let mut found = Vec::new();
            for mask in 0u64..1 << edges.len() {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let m: EdgeSet = (0..edges.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| edges[i])
                    .collect();
                if is_ev_dominating_set(g, &m) {
                    found.push(m);
                }
            }
            if !found.is_empty() {
                found.sort();
                return (k, found);
            }
        }
        panic!("no ev-dominating set of size <= {max_k}");
    }

    fn brute_pr(g: &Graph) -> (usize, Vec<VertexSet>) {
        let n = g.n();
        for k in (2..=n).step_by(2) {
            let mut found: Vec<VertexSet> = (0u64..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .map(VertexSet::from_mask)
                .filter(|d| is_paired_dominating_set(g, d).unwrap())
                .collect();
            if !found.is_empty() {
                found.sort();
                return (k, found);
            }
        }
        panic!("no paired-dominating set");
    }

    #[test]
    fn domination_predicate() {
        let sq = pendant_square();
        assert!(is_dominating_set(&sq, &vs(&[0, 1, 2, 3])).unwrap());
        let p4 = Graph::path(4);
        assert!(is_dominating_set(&p4, &vs(&[1, 2])).unwrap());
        assert!(!is_dominating_set(&p4, &vs(&[0])).unwrap());
        assert!(is_dominating_set(&p4, &vs(&[9])).is_err());
    }

    #[test]
    fn paired_domination_predicate() {
        let sq = pendant_square();
        assert!(is_paired_dominating_set(&sq, &vs(&[0, 1, 2, 3])).unwrap());
        let p4 = Graph::path(4);
        assert!(is_paired_dominating_set(&p4, &vs(&[1, 2])).unwrap());
        assert!(!is_paired_dominating_set(&p4, &vs(&[0, 2])).unwrap());
    }

    #[test]
    fn ev_domination_predicates() {
        let p4 = Graph::path(4);
        assert!(ev_dominates(&p4, &Edge::new(1, 2), 0));
        assert!(!ev_dominates(&p4, &Edge::new(0, 1), 3));
        assert!(ev_dominates(&p4, &Edge::new(1, 2), 2));
        assert!(is_ev_dominating_set(&pendant_square(), &es(&[(0, 1), (2, 3)])));
        assert!(is_ev_dominating_set(&p4, &es(&[(1, 2)])));
        assert!(!is_ev_dominating_set(&p4, &es(&[(0, 1)])));
    }

    #[test]
    fn spans() {
        assert_eq!(spanned_vertices(&es(&[(0, 1), (2, 3)])), vs(&[0, 1, 2, 3]));
        assert_eq!(spanned_vertices(&EdgeSet::new()), VertexSet::new());
        assert_eq!(spanned_vertices(&es(&[(0, 1), (1, 2)])), vs(&[0, 1, 2]));
    }

    #[test]
    fn solve_small_fixtures() {
        let p2 = Graph::path(2);
        let ev = solve_ev(&p2).unwrap();
        assert_eq!((ev.gamma, ev.sets.clone()), (1, vec![es(&[(0, 1)])]));
        let pr = solve_pr(&p2).unwrap();
        assert_eq!((pr.gamma, pr.sets.clone()), (2, vec![vs(&[0, 1])]));

        let sq = pendant_square();
        let ev = solve_ev(&sq).unwrap();
        assert_eq!(ev.gamma, 2);
        assert_eq!(ev.sets, vec![es(&[(0, 1), (2, 3)]), es(&[(0, 3), (1, 2)])]);
        let pr = solve_pr(&sq).unwrap();
        assert_eq!((pr.gamma, pr.sets.clone()), (4, vec![vs(&[0, 1, 2, 3])]));
    }

    #[test]
    fn spider_matches_brute_force() {
        let g = spider222();
        let (k, sets) = brute_ev(&g, 3);
        assert_eq!(k, 3);
        let ev = solve_ev(&g).unwrap();
        assert_eq!((ev.gamma, &ev.sets), (k, &sets));
        let (k, sets) = brute_pr(&g);
        assert_eq!(k, 6);
        let pr = solve_pr(&g).unwrap();
        assert_eq!((pr.gamma, &pr.sets), (k, &sets));
    }

    #[test]
    fn solvers_agree_with_brute_force_on_six_vertex_graphs() {
        let pairs: Vec<(usize, usize)> = (0..6).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in (1u32..1 << pairs.len()).step_by(37) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::from_edges(6, &edges).unwrap();
            if g.has_isolated_vertex() {
                continue;
            }
            let ev = solve_ev(&g).unwrap();
            assert_eq!((ev.gamma, ev.sets), brute_ev(&g, 3), "{edges:?}");
            let pr = solve_pr(&g).unwrap();
            assert_eq!((pr.gamma, pr.sets), brute_pr(&g), "{edges:?}");
        }
    }

    #[test]
    fn uniqueness_verdicts() {
        let v = uniqueness(&Graph::path(4), Kind::Ev).unwrap();
        assert!(v.unique);
        assert_eq!(v.common_span, Some(vs(&[1, 2])));

        let v = uniqueness(&Graph::path(3), Kind::Ev).unwrap();
        assert!(!v.unique);
        assert_eq!(v.witness_count, 2);
        assert_eq!(
            solve_ev(&Graph::path(3)).unwrap().sets,
            vec![es(&[(0, 1)]), es(&[(1, 2)])]
        );

        let v = uniqueness(&pendant_square(), Kind::Ev).unwrap();
        assert_eq!((v.unique, v.witness_count), (false, 2));
        assert_eq!(v.common_span, Some(vs(&[0, 1, 2, 3])));

        let v = uniqueness(&pendant_square(), Kind::Paired).unwrap();
        assert!(v.unique);
        assert_eq!(v.common_span, Some(vs(&[0, 1, 2, 3])));
    }

    #[test]
    fn rejects_isolated_vertices_and_trivial_graphs() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(solve_ev(&g), Err(Error::Domain(_))));
        assert!(matches!(solve_pr(&g), Err(Error::Domain(_))));
        assert!(matches!(solve_ev(&Graph::empty(1)), Err(Error::Domain(_))));
        assert!(matches!(solve_ev(&Graph::empty(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let solver = Solver::new(3);
        assert!(matches!(
            solver.solve_ev(&Graph::path(12)),
            Err(Error::Budget { limit: 3 })
        ));
        assert!(matches!(
            solver.solve_pr(&Graph::path(12)),
            Err(Error::Budget { limit: 3 })
        ));
    }
}
