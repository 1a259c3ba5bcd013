//! Edge-list and graph6 (short form) text formats.

use super::Graph;
use crate::error::{Error, Result};

/// Parses the `n m` header followed by `m` lines of `u v`.
///
/// Lines starting with `#` and blank lines are skipped; line numbers in
/// errors are physical 1-based lines. CRLF endings are accepted.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines.by_ref() {
        if edges.len() == m {
            return Err(Error::parse(
                line_no,
                format!("unexpected line after {m} declared edges"),
            ));
        }
        let (u, v) = parse_pair(line_no, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(
                line_no,
                format!("vertex id out of range 0..{n} in `{line}`"),
            ));
        }
        if u == v {
            return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(Error::parse(
            text.lines().count().max(1),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| Error::parse(line_no, format!("expected two integers in `{line}`")))?;
        field
            .parse()
            .map_err(|_| Error::parse(line_no, format!("`{field}` is not a vertex id")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(Error::parse(
            line_no,
            format!("trailing fields in `{line}`"),
        ));
    }
    Ok(pair)
}

const GRAPH6_MAX_N: usize = 62;

/// Decodes a short-form graph6 string (no `>>graph6<<` header, n <= 62).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, payload) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty string".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("invalid size byte {first:#04x}")));
    }
    let n = (first - 63) as usize;
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6("long-form sizes are not supported".into()));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(Error::Graph6(format!(
            "payload has {} bytes, {n} vertices need {expected}",
            payload.len()
        )));
    }
    if let Some(&bad) = payload.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("invalid character {bad:#04x}")));
    }

    let mut adjacency = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
            k += 1;
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(Graph::from_adjacency_unchecked(adjacency))
}

/// Encodes `g` as short-form graph6.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Capability(format!(
            "graph6 short form holds at most {GRAPH6_MAX_N} vertices, got {n}"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut payload = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                payload[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(payload.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(payload.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}
