//! Edge-list and graph6 readers and writers.

use super::{Graph, VertexSet, MAX_VERTICES};
use crate::error::ParseError;

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split('\n')
        .enumerate()
        .map(|(k, l)| (k + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim().is_empty())
}

fn malformed(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Malformed { line, reason: reason.into() }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let field = fields.next().ok_or_else(|| malformed(line, format!("missing {what}")))?;
        field
            .parse::<usize>()
            .map_err(|_| malformed(line, format!("{what} {field:?} is not a nonnegative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(malformed(line, format!("unexpected trailing field {extra:?}")));
    }
    Ok((a, b))
}

/// Parses the edge-list format: a header line `d n` followed by `n` lines
/// `i j` with 1-based labels. Blank lines are ignored; LF and CRLF both work.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| malformed(1, "empty input"))?;
    let (d, n) = two_numbers(header_line, header)?;
    if d == 0 {
        return Err(malformed(header_line, "vertex count must be positive"));
    }
    if d > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { line: header_line, d });
    }
    let mut adj = [VertexSet::EMPTY; MAX_VERTICES];
    let mut edges = Vec::with_capacity(n);
    for (line, text) in lines {
        if edges.len() == n {
            return Err(malformed(line, format!("more than the declared {n} edges")));
        }
        let (u, v) = two_numbers(line, text)?;
        for vertex in [u, v] {
            if vertex == 0 || vertex > d {
                return Err(ParseError::VertexOutOfRange { line, vertex, d });
            }
        }
        if u == v {
            return Err(ParseError::Loop { line, vertex: u });
        }
        let (a, b) = (u.min(v) - 1, u.max(v) - 1);
        if adj[a].contains(b) {
            return Err(ParseError::DuplicateEdge { line, u: a + 1, v: b + 1 });
        }
        adj[a] = adj[a].with(b);
        adj[b] = adj[b].with(a);
        edges.push((a, b));
    }
    if edges.len() != n {
        return Err(malformed(header_line, format!("declared {n} edges, found {}", edges.len())));
    }
    Ok(Graph::new(d, edges).expect("edges validated above"))
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses graph6 text, one graph per line. An optional `>>graph6<<` header
/// is accepted on each line. Edges come out in lexicographic order.
pub fn parse_graph6(bytes: &[u8]) -> Result<Vec<Graph>, ParseError> {
    let mut graphs = Vec::new();
    for (k, raw) in bytes.split(|&b| b == b'\n').enumerate() {
        let line = k + 1;
        let raw = raw.strip_suffix(b"\r").unwrap_or(raw);
        let raw = raw.strip_prefix(GRAPH6_HEADER.as_bytes()).unwrap_or(raw);
        if raw.iter().all(u8::is_ascii_whitespace) {
            continue;
        }
        graphs.push(decode_graph6_line(line, raw)?);
    }
    Ok(graphs)
}

fn decode_graph6_line(line: usize, raw: &[u8]) -> Result<Graph, ParseError> {
    let mut six = Vec::with_capacity(raw.len());
    for (offset, &byte) in raw.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::InvalidGraph6Byte { line, offset, byte });
        }
        six.push(byte - 63);
    }
    let (d, body) = match six.as_slice() {
        [63, 63, ..] => {
            // 6-byte size form, only used for n >= 258048
            return Err(ParseError::TooManyVertices { line, d: 258_048 });
        }
        [63, a, b, c, rest @ ..] => {
            ((*a as usize) << 12 | (*b as usize) << 6 | *c as usize, rest)
        }
        [63, ..] => return Err(malformed(line, "truncated graph6 size field")),
        [n, rest @ ..] => (*n as usize, rest),
        [] => unreachable!("blank lines are skipped"),
    };
    if d > MAX_VERTICES {
        return Err(ParseError::TooManyVertices { line, d });
    }
    if d == 0 {
        return Err(malformed(line, "graph6 graph with no vertices"));
    }
    let pairs = d * (d - 1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(
            line,
            format!("{d} vertices need {expected} graph6 data bytes, found {}", body.len()),
        ));
    }
    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
    if (pairs..expected * 6).any(bit) {
        return Err(malformed(line, "nonzero graph6 padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..d {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::new(d, edges).expect("graph6 cannot encode loops or duplicates"))
}

/// Encodes a graph as one graph6 line, without a trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let d = g.order();
    let mut out = Vec::new();
    if d <= 62 {
        out.push(d as u8 + 63);
    } else {
        out.extend([126, (d >> 12) as u8 + 63, (d >> 6 & 63) as u8 + 63, (d & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..d {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
