use std::collections::HashMap;

use super::{Edge, EdgeSet, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by the subset DP.
pub const MATCHING_MAX_N: usize = 24;

fn masks_within_bound(g: &Graph) -> Result<Vec<u32>> {
    if g.n() > MATCHING_MAX_N {
        return Err(Error::Capability(format!(
            "perfect matching search supports at most {MATCHING_MAX_N} vertices, got {}",
            g.n()
        )));
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect())
}

/// Exact perfect-matching test by DP over vertex subsets: the lowest vertex
/// of the remaining set must be matched to one of its remaining neighbors.
pub fn has_perfect_matching(g: &Graph) -> Result<bool> {
    let adj = masks_within_bound(g)?;
    if g.n() % 2 == 1 {
        return Ok(false);
    }
    let full = (1u32 << g.n()) - 1;
    let mut memo = HashMap::new();
    Ok(matchable(full, &adj, &mut memo))
}

fn matchable(remaining: u32, adj: &[u32], memo: &mut HashMap<u32, bool>) -> bool {
    if remaining == 0 {
        return true;
    }
    if let Some(&known) = memo.get(&remaining) {
        return known;
    }
    let v = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1 << v);
    let mut partners = adj[v] & rest;
    let mut found = false;
    while partners != 0 {
        let w = partners.trailing_zeros();
        partners &= partners - 1;
        if matchable(rest & !(1 << w), adj, memo) {
            found = true;
            break;
        }
    }
    memo.insert(remaining, found);
    found
}

/// Every perfect matching of `g`, each sorted, in lexicographic order.
pub fn perfect_matchings(g: &Graph) -> Result<Vec<EdgeSet>> {
    let adj = masks_within_bound(g)?;
    let mut out = Vec::new();
    if g.n().is_multiple_of(2) {
        let full = (1u32 << g.n()) - 1;
        let mut current = Vec::new();
        collect_matchings(full, &adj, &mut current, &mut out);
    }
    out.sort();
    Ok(out)
}

fn collect_matchings(remaining: u32, adj: &[u32], current: &mut Vec<Edge>, out: &mut Vec<EdgeSet>) {
    if remaining == 0 {
        out.push(current.iter().copied().collect());
        return;
    }
    let v = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1 << v);
    let mut partners = adj[v] & rest;
    while partners != 0 {
        let w = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        current.push(Edge::new(v, w));
        collect_matchings(rest & !(1 << w), adj, current, out);
        current.pop();
    }
}
