use super::{EvFamily, Kind, PairedFamily, UniquenessVerdict};
use crate::error::{Error, Result};
use crate::graph::{has_perfect_matching, Edge, EdgeSet, Graph, VertexSet, MATCHING_MAX_N};

/// Default node limit shared by both searches.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Exhaustive minimum-set enumerator with a node budget.
///
/// Both searches run iterative deepening over the set size `k`. Inside one
/// level, candidates are built in increasing index order; the lowest
/// vertex not yet dominated must be handled by one of the next candidates,
/// and `remaining * best_gain < undominated` cuts the branch.
#[derive(Clone, Copy, Debug)]
pub struct Solver {
    budget: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Solver {
    pub fn new(budget: u64) -> Self {
        Solver { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn solve_ev(&self, g: &Graph) -> Result<EvFamily> {
        let neighbors = admissible(g)?;
        let edges = g.edges();
        let closed: Vec<u64> = (0..g.n()).map(|v| neighbors[v] | 1 << v).collect();
        let cover: Vec<u64> = edges.iter().map(|e| closed[e.u] | closed[e.v]).collect();
        let full = full_mask(g.n());

        let best_cover = cover.iter().map(|c| c.count_ones()).max().unwrap_or(1) as usize;
        let lower = g.n().div_ceil(best_cover).max(1);
        let upper = greedy_cover_size(&cover, full);

        let mut search = Search::new(cover, full, self.budget);
        for k in lower..=upper {
            search.run(k, false)?;
            if !search.found.is_empty() {
                let mut sets: Vec<EdgeSet> = search
                    .found
                    .iter()
                    .map(|picked| picked.iter().map(|&i| edges[i]).collect())
                    .collect();
                sets.sort();
                return Ok(EvFamily {
                    kind: Kind::Ev,
                    gamma: k,
                    sets,
                });
            }
        }
        Err(Error::Invariant(format!(
            "no ev-dominating set of size <= greedy bound {upper}"
        )))
    }

    pub fn solve_pr(&self, g: &Graph) -> Result<PairedFamily> {
        let neighbors = admissible(g)?;
        let n = g.n();
        let closed: Vec<u64> = (0..n).map(|v| neighbors[v] | 1 << v).collect();
        let full = full_mask(n);

        let best_cover = closed.iter().map(|c| c.count_ones()).max().unwrap_or(1) as usize;
        let mut lower = n.div_ceil(best_cover).max(2);
        lower += lower % 2;
        let upper = 2 * greedy_maximal_matching(g);

        let mut search = Search::new(closed, full, self.budget);
        search.adjacency = neighbors;
        for k in (lower..=upper).step_by(2) {
            if k > MATCHING_MAX_N {
                return Err(Error::Capability(format!(
                    "paired-dominating candidates of size {k} exceed the matching bound {MATCHING_MAX_N}"
                )));
            }
            search.run(k, true)?;
            if !search.found.is_empty() {
                let mut sets: Vec<VertexSet> = search
                    .found
                    .iter()
                    .map(|picked| picked.iter().copied().collect())
                    .collect();
                sets.sort();
                return Ok(PairedFamily {
                    kind: Kind::Paired,
                    gamma: k,
                    sets,
                });
            }
        }
        Err(Error::Invariant(format!(
            "no paired-dominating set of size <= matching bound {upper}"
        )))
    }

    pub fn uniqueness(&self, g: &Graph, kind: Kind) -> Result<UniquenessVerdict> {
        Ok(match kind {
            Kind::Ev => self.solve_ev(g)?.verdict(),
            Kind::Paired => self.solve_pr(g)?.verdict(),
        })
    }
}

/// Neighbor masks of a graph both solvers accept.
fn admissible(g: &Graph) -> Result<Vec<u64>> {
    if g.n() < 2 {
        return Err(Error::Domain(format!(
            "graphs need at least 2 vertices, got {}",
            g.n()
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Domain(format!("vertex {v} is isolated")));
    }
    g.neighbor_masks().ok_or_else(|| {
        Error::Capability(format!("solvers support at most 64 vertices, got {}", g.n()))
    })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn greedy_cover_size(cover: &[u64], full: u64) -> usize {
    let mut covered = 0u64;
    let mut size = 0;
    while covered != full {
        let best = cover
            .iter()
            .max_by_key(|&&c| (c & !covered).count_ones())
            .expect("graph has edges");
        covered |= best;
        size += 1;
    }
    size
}

fn greedy_maximal_matching(g: &Graph) -> usize {
    let mut matched = vec![false; g.n()];
    let mut size = 0;
    for Edge { u, v } in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            size += 1;
        }
    }
    size
}

struct Search {
    /// Vertices dominated by each candidate (edge or vertex).
    cover: Vec<u64>,
    /// Largest candidate index dominating each vertex.
    last_dominator: Vec<usize>,
    full: u64,
    /// Set for paired search: vertex adjacency for the matching test.
    adjacency: Vec<u64>,
    budget: u64,
    nodes: u64,
    picked: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Search {
    fn new(cover: Vec<u64>, full: u64, budget: u64) -> Self {
        let vertices = full.count_ones() as usize;
        let mut last_dominator = vec![0; vertices];
        for (i, &c) in cover.iter().enumerate() {
            for (v, last) in last_dominator.iter_mut().enumerate() {
                if c >> v & 1 == 1 {
                    *last = i;
                }
            }
        }
        Search {
            cover,
            last_dominator,
            full,
            adjacency: Vec::new(),
            budget,
            nodes: 0,
            picked: Vec::new(),
            found: Vec::new(),
        }
    }

    fn run(&mut self, k: usize, paired: bool) -> Result<()> {
        self.found.clear();
        self.picked.clear();
        self.extend(0, 0, k, paired)
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Budget { limit: self.budget });
        }
        Ok(())
    }

    fn extend(&mut self, start: usize, covered: u64, k: usize, paired: bool) -> Result<()> {
        self.tick()?;
        let remaining = k - self.picked.len();
        if remaining == 0 {
            let accept = covered == self.full && (!paired || self.matchable());
            if accept {
                self.found.push(self.picked.clone());
            }
            return Ok(());
        }
        let candidates = self.cover.len();
        if candidates - start < remaining {
            return Ok(());
        }

        let open = self.full & !covered;
        let last = if open == 0 {
            candidates - 1
        } else {
            let lowest = open.trailing_zeros() as usize;
            let best_gain = self.cover[start..]
                .iter()
                .map(|c| (c & open).count_ones() as usize)
                .max()
                .unwrap_or(0);
            if best_gain * remaining < open.count_ones() as usize {
                return Ok(());
            }
            self.last_dominator[lowest]
        };
        // ev sets: an edge dominating nothing new makes the set non-minimal.
        // paired sets may need such vertices as matching partners.
        for next in start..=last.min(candidates - remaining) {
            let gain = self.cover[next] & open;
            if !paired && gain == 0 {
                continue;
            }
            self.picked.push(next);
            let result = self.extend(next + 1, covered | self.cover[next], k, paired);
            self.picked.pop();
            result?;
        }
        Ok(())
    }

    fn matchable(&self) -> bool {
        let mask = self.picked.iter().fold(0u64, |acc, &v| acc | 1 << v);
        if self.picked.len() <= 14 {
            return match_rest(mask, &self.adjacency);
        }
        let set: VertexSet = self.picked.iter().copied().collect();
        let g = graph_from_masks(&self.adjacency);
        let (induced, _) = g.induced_subgraph(&set).expect("picked vertices are in range");
        has_perfect_matching(&induced).expect("size checked against matching bound")
    }
}

fn match_rest(remaining: u64, adjacency: &[u64]) -> bool {
    if remaining == 0 {
        return true;
    }
    let v = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1 << v);
    let mut partners = adjacency[v] & rest;
    while partners != 0 {
        let w = partners.trailing_zeros();
        partners &= partners - 1;
        if match_rest(rest & !(1 << w), adjacency) {
            return true;
        }
    }
    false
}

fn graph_from_masks(adjacency: &[u64]) -> Graph {
    let edges: Vec<(usize, usize)> = adjacency
        .iter()
        .enumerate()
        .flat_map(|(v, &m)| (0..v).filter(move |&u| m >> u & 1 == 1).map(move |u| (u, v)))
        .collect();
    Graph::from_edges(adjacency.len(), &edges).expect("masks describe a simple graph")
}
