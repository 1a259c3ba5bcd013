use crate::error::{Error, Result};
use crate::graph::Graph;

const INF: usize = usize::MAX / 4;

// Per-vertex states, relative to the edge towards the parent.
const PARENT_EDGE: usize = 0; // edge to parent selected
const TOUCHED: usize = 1; // a child edge selected, parent edge not
const DOMINATED: usize = 2; // untouched, some child touched
const NEEDS_PARENT: usize = 3; // untouched and undominated so far

/// Linear-time edge-vertex domination number of a tree.
///
/// An edge set ev-dominates a graph exactly when its endpoints form a
/// dominating set, so the DP tracks for each vertex whether it is an
/// endpoint of a selected edge and whether a closed neighbor is.
pub fn gamma_ev_tree_fast(tree: &Graph) -> Result<usize> {
    if tree.n() < 2 || !tree.is_tree() {
        return Err(Error::Domain(
            "fast ev-domination path needs a tree on at least 2 vertices".into(),
        ));
    }
    let n = tree.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    parent[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in tree.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }

    let mut best = vec![[INF; 4]; n];
    for &v in order.iter().rev() {
        // agg[child_edge][child_touched][child_needs]
        let mut agg = [[[INF; 2]; 2]; 2];
        agg[0][0][0] = 0;
        for &c in tree.neighbors(v).iter().filter(|&&c| parent[c] == v && c != v) {
            let mut next = [[[INF; 2]; 2]; 2];
            for (edge, a) in agg.iter().enumerate() {
                for (touched, b) in a.iter().enumerate() {
                    for (needs, &cost) in b.iter().enumerate() {
                        if cost >= INF {
                            continue;
                        }
                        for (state, &child_cost) in best[c].iter().enumerate() {
                            if child_cost >= INF {
                                continue;
                            }
                            let e = edge | usize::from(state == PARENT_EDGE);
                            let t = touched | usize::from(state <= TOUCHED);
                            let nd = needs | usize::from(state == NEEDS_PARENT);
                            let slot = &mut next[e][t][nd];
                            *slot = (*slot).min(cost + child_cost);
                        }
                    }
                }
            }
            agg = next;
        }

        let is_root = v == 0;
        let mut states = [INF; 4];
        for (edge, a) in agg.iter().enumerate() {
            for (touched, b) in a.iter().enumerate() {
                for (needs, &cost) in b.iter().enumerate() {
                    if cost >= INF {
                        continue;
                    }
                    if !is_root {
                        states[PARENT_EDGE] = states[PARENT_EDGE].min(cost + 1);
                    }
                    let state = if edge == 1 {
                        TOUCHED
                    } else if needs == 1 {
                        continue;
                    } else if touched == 1 {
                        DOMINATED
                    } else {
                        NEEDS_PARENT
                    };
                    states[state] = states[state].min(cost);
                }
            }
        }
        best[v] = states;
    }
    Ok(best[0][TOUCHED].min(best[0][DOMINATED]))
}
