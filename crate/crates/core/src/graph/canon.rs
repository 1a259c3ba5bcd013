//! Isomorphism-invariant codes.
//!
//! Trees get an AHU parenthesis string rooted at the centroid. Other graphs
//! get the minimum upper-triangle bit string over all labelings reached by
//! individualization-refinement, which is exact because every step of the
//! search is labeling-invariant.

use std::fmt;

use super::Graph;
use crate::error::{Error, Result};

/// Largest non-tree order accepted by [`canonical_code`].
pub const GENERAL_CANON_MAX_N: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    if g.is_tree() {
        return Ok(CanonicalCode(tree_code(g)));
    }
    if g.n() > GENERAL_CANON_MAX_N {
        return Err(Error::Capability(format!(
            "canonical form of non-tree graphs supports at most {GENERAL_CANON_MAX_N} vertices, got {}",
            g.n()
        )));
    }
    Ok(CanonicalCode(general_code(g)))
}

fn tree_code(g: &Graph) -> Vec<u8> {
    let mut code = vec![b'T'];
    match centroids(g).as_slice() {
        [] => {}
        [c] => code.extend(rooted_code(g, *c)),
        [a, b] => {
            let (ca, cb) = (rooted_code(g, *a), rooted_code(g, *b));
            code.extend(ca.min(cb));
        }
        _ => unreachable!("a tree has at most two centroids"),
    }
    code
}

/// BFS order from `root` with parent links.
fn bfs_order(g: &Graph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; g.n()];
    let mut order = Vec::with_capacity(g.n());
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
    }
    (order, parent)
}

fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let (order, parent) = bfs_order(g, 0);
    let mut size = vec![1usize; n];
    let mut heaviest = vec![0usize; n];
    for &v in order.iter().rev() {
        if v != 0 {
            let p = parent[v];
            size[p] += size[v];
            heaviest[p] = heaviest[p].max(size[v]);
        }
    }
    (0..n)
        .filter(|&v| heaviest[v].max(n - size[v]) * 2 <= n)
        .collect()
}

fn rooted_code(g: &Graph, root: usize) -> Vec<u8> {
    let (order, parent) = bfs_order(g, root);
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); g.n()];
    for &v in order.iter().rev() {
        let mut children: Vec<Vec<u8>> = g
            .neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == v && w != root)
            .map(|&w| std::mem::take(&mut codes[w]))
            .collect();
        children.sort();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        children.iter().for_each(|c| code.extend_from_slice(c));
        code.push(b')');
        codes[v] = code;
    }
    std::mem::take(&mut codes[root])
}

fn general_code(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let mut best: Option<u128> = None;
    search(&adj, vec![0; n], &mut best);
    let mut code = vec![b'G', n as u8];
    code.extend_from_slice(&best.unwrap_or(0).to_be_bytes());
    code
}

/// Splits color classes by the multiset of neighbor colors until stable.
/// Colors stay dense and ordered by signature, so the result depends only
/// on the colored graph, never on vertex ids.
fn refine(adj: &[u32], mut colors: Vec<u32>) -> Vec<u32> {
    let n = adj.len();
    let mut classes = distinct(&colors);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> = ones(adj[v]).map(|w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = signatures
            .iter()
            .map(|s| sorted.binary_search(&s).unwrap() as u32)
            .collect();
        let next_classes = sorted.len();
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

fn ones(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

fn search(adj: &[u32], colors: Vec<u32>, best: &mut Option<u128>) {
    let n = adj.len();
    let colors = refine(adj, colors);
    let mut cell_size = vec![0usize; n];
    for &c in &colors {
        cell_size[c as usize] += 1;
    }
    let Some(target) = (0..n).find(|&c| cell_size[c] > 1) else {
        let code = labeled_code(adj, &colors);
        if best.is_none_or(|b| code < b) {
            *best = Some(code);
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
    for (i, &v) in cell.iter().enumerate() {
        // transposing two twins is an automorphism of the colored graph,
        // so their subtrees yield the same codes
        let twin_seen = cell[..i]
            .iter()
            .any(|&u| adj[u] & !(1 << v) == adj[v] & !(1 << u));
        if twin_seen {
            continue;
        }
        let split = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| 2 * c + u32::from(c as usize == target && u != v))
            .collect();
        search(adj, split, best);
    }
}

/// Upper triangle in column order (as graph6 lays it out), first bit most
/// significant, with vertex `v` placed at position `colors[v]`.
fn labeled_code(adj: &[u32], colors: &[u32]) -> u128 {
    let n = adj.len();
    let mut at = vec![0usize; n];
    for (v, &c) in colors.iter().enumerate() {
        at[c as usize] = v;
    }
    let mut code = 0u128;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | u128::from(adj[at[i]] >> at[j] & 1);
        }
    }
    code
}
