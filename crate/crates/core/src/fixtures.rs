//! Bundled example graphs.

use crate::graph::{parse_edge_list, Graph};

/// Pendant square: a 4-cycle `c1..c4` (ids 0..3) with a pendant `x_i`
/// (ids 4..7) on each cycle vertex. Its paired-dominating set is unique
/// while its two minimum ev-dominating sets span the same vertices.
pub const FIGURE1_EDGES: &str = include_str!("../fixtures/figure1.edges");

pub fn figure1() -> Graph {
    parse_edge_list(FIGURE1_EDGES).expect("bundled fixture parses")
}

/// Vertex names from a `# names: a b c` comment line, if present.
pub fn vertex_names(text: &str) -> Option<Vec<String>> {
    text.lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .find_map(|l| l.trim().strip_prefix("names:"))
        .map(|names| names.split_whitespace().map(str::to_string).collect())
}
