//! Exhaustive generators, one representative per isomorphism class.
//!
//! Every tree on `n + 1` vertices is a tree on `n` vertices plus a leaf, and
//! every connected graph on `n + 1` vertices is a connected graph on `n`
//! vertices plus a vertex joined to a nonempty subset (delete a non-cut
//! vertex). Both generators therefore extend the previous level in every
//! possible way and dedup by canonical code.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{canonical_code, CanonicalCode, Graph};

pub const TREE_MAX_N: usize = 16;
pub const CONNECTED_MAX_N: usize = 8;

/// Free trees on `1..=16` vertices (OEIS A000055).
pub const TREE_COUNTS: [usize; 16] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
];

/// Connected simple graphs on `1..=8` vertices (OEIS A001349).
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

pub fn known_tree_count(n: usize) -> Option<usize> {
    n.checked_sub(1).and_then(|i| TREE_COUNTS.get(i)).copied()
}

pub fn known_connected_count(n: usize) -> Option<usize> {
    n.checked_sub(1).and_then(|i| CONNECTED_COUNTS.get(i)).copied()
}

/// Trees on exactly `n` vertices, sorted by canonical code.
pub fn generate_trees(n: usize) -> Result<Vec<Graph>> {
    Ok(trees_up_to(n)?.pop().unwrap_or_default())
}

/// Levels `1..=n` of the tree generator.
pub fn trees_up_to(n: usize) -> Result<Vec<Vec<Graph>>> {
    if n == 0 || n > TREE_MAX_N {
        return Err(Error::Capability(format!(
            "tree generation supports 1..={TREE_MAX_N} vertices, got {n}"
        )));
    }
    let mut levels = vec![vec![Graph::empty(1)]];
    while levels.len() < n {
        let previous = levels.last().expect("at least one level");
        let mut classes: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for tree in previous {
            for v in 0..tree.n() {
                let grown = tree.with_vertex(&[v]);
                classes.entry(canonical_code(&grown)?).or_insert(grown);
            }
        }
        levels.push(classes.into_values().collect());
    }
    Ok(levels)
}

/// Connected graphs on exactly `n` vertices, sorted by canonical code.
pub fn generate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(2..=CONNECTED_MAX_N).contains(&n) {
        return Err(Error::Capability(format!(
            "connected graph generation supports 2..={CONNECTED_MAX_N} vertices, got {n}"
        )));
    }
    Ok(connected_up_to(n)?.pop().unwrap_or_default())
}

/// Levels `1..=n` of the connected-graph generator.
pub fn connected_up_to(n: usize) -> Result<Vec<Vec<Graph>>> {
    if n == 0 || n > CONNECTED_MAX_N {
        return Err(Error::Capability(format!(
            "connected graph generation supports 1..={CONNECTED_MAX_N} vertices, got {n}"
        )));
    }
    let mut levels = vec![vec![Graph::empty(1)]];
    while levels.len() < n {
        let previous = levels.last().expect("at least one level");
        let mut classes: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for g in previous {
            let k = g.n();
            for subset in 1u32..1 << k {
                let neighbors: Vec<usize> = (0..k).filter(|i| subset >> i & 1 == 1).collect();
                let grown = g.with_vertex(&neighbors);
                classes.entry(canonical_code(&grown)?).or_insert(grown);
            }
        }
        levels.push(classes.into_values().collect());
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn codes(graphs: &[Graph]) -> BTreeSet<CanonicalCode> {
        graphs.iter().map(|g| canonical_code(g).unwrap()).collect()
    }

    /// Every Prüfer sequence over `0..n`, decoded and deduplicated.
    fn pruefer_classes(n: usize) -> BTreeSet<CanonicalCode> {
        if n <= 2 {
            return codes(&[Graph::path(n)]);
        }
        let mut out = BTreeSet::new();
        let len = n - 2;
        let mut seq = vec![0usize; len];
        loop {
            let mut degree = vec![1usize; n];
            for &s in &seq {
                degree[s] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &s in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, s));
                degree[leaf] = 0;
                degree[s] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            out.insert(canonical_code(&Graph::from_edges(n, &edges).unwrap()).unwrap());

            let mut i = 0;
            while i < len && seq[i] == n - 1 {
                seq[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
            seq[i] += 1;
        }
        out
    }

    /// Every labeled edge subset, connected ones deduplicated.
    fn labeled_connected_classes(n: usize) -> BTreeSet<CanonicalCode> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut out = BTreeSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                out.insert(canonical_code(&g).unwrap());
            }
        }
        out
    }

    #[test]
    fn small_tree_levels() {
        assert_eq!(generate_trees(1).unwrap().len(), 1);
        assert_eq!(generate_trees(4).unwrap().len(), 2);
        assert_eq!(generate_trees(7).unwrap().len(), 11);
    }

    #[test]
    fn trees_match_pruefer_oracle() {
        for n in 2..=8 {
            let generated = generate_trees(n).unwrap();
            assert!(generated.iter().all(|t| t.is_tree() && t.n() == n));
            assert_eq!(codes(&generated).len(), generated.len(), "duplicate class at n={n}");
            assert_eq!(codes(&generated), pruefer_classes(n), "n={n}");
        }
    }

    #[test]
    fn tree_counts_match_table() {
        let levels = trees_up_to(TREE_MAX_N).unwrap();
        for (i, level) in levels.iter().enumerate() {
            assert_eq!(level.len(), TREE_COUNTS[i], "n={}", i + 1);
        }
    }

    #[test]
    fn connected_graphs_match_labeled_oracle() {
        assert_eq!(generate_connected_graphs(2).unwrap().len(), 1);
        assert_eq!(generate_connected_graphs(3).unwrap().len(), 2);
        assert_eq!(generate_connected_graphs(4).unwrap().len(), 6);
        for n in 2..=6 {
            let generated = generate_connected_graphs(n).unwrap();
            assert!(generated.iter().all(|g| g.is_connected() && g.n() == n));
            assert_eq!(codes(&generated).len(), generated.len());
            assert_eq!(codes(&generated), labeled_connected_classes(n), "n={n}");
        }
    }

    #[test]
    fn generator_bounds() {
        assert!(generate_trees(0).is_err());
        assert!(generate_trees(17).is_err());
        assert!(generate_connected_graphs(1).is_err());
        assert!(generate_connected_graphs(9).is_err());
    }
}
