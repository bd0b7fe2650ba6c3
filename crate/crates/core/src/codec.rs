//! Graph input and output formats: graph6 strings and plain edge lists.
//!
//! graph6 encodes a graph as printable ASCII (bytes 63..=126): a size header
//! followed by the upper triangle of the adjacency matrix in column-major
//! order, packed six bits per byte, most significant bit first. Orders below
//! 63 use a single header byte `n + 63`; larger orders (up to 2^18 - 1) use
//! `126` followed by three bytes carrying 18 bits. The optional
//! `>>graph6<<` prefix is accepted and ignored.

use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex label accepted when inferring the order of an edge list.
pub const MAX_EDGE_LIST_VERTEX: u32 = 1_000_000;

/// Parse failures, located by byte offset (graph6) or line number (edge
/// lists).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("byte {offset}: graph6 byte {byte:#04x} outside printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: unsupported graph6 size form")]
    UnsupportedSize { offset: usize },
    #[error("graph6 bit vector truncated: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("byte {offset}: trailing data after graph6 bit vector")]
    TrailingData { offset: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("line {line}: expected two vertex labels, found {found:?}")]
    MalformedEdgeLine { line: usize, found: String },
    #[error("line {line}: vertex label {label:?} is not a non-negative integer")]
    BadLabel { line: usize, label: String },
    #[error("line {line}: vertex label {label} exceeds the supported maximum {max}")]
    LabelTooLarge { line: usize, label: u64, max: u32 },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },
    #[error("edge list contains no edges, cannot infer the vertex count")]
    NoEdges,
}

/// Decodes one graph from its graph6 representation.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let trimmed = text.trim();
    let bytes = trimmed
        .strip_prefix(">>graph6<<")
        .unwrap_or(trimmed)
        .as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }

    let check = |offset: usize| -> Result<u64, ParseError> {
        let byte = bytes[offset];
        if !(63..=126).contains(&byte) {
            return Err(ParseError::InvalidByte { offset, byte });
        }
        Ok(u64::from(byte - 63))
    };

    // Size header: one byte for n < 63, four bytes (126 + 18 bits) for
    // larger n. The eight-byte form (126 126 ...) is not supported.
    let (n, mut offset) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(ParseError::UnsupportedSize { offset: 1 });
        }
        if bytes.len() < 4 {
            return Err(ParseError::Truncated {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = (check(1)? << 12) | (check(2)? << 6) | check(3)?;
        (n as usize, 4)
    } else {
        (check(0)? as usize, 1)
    };
    if n == 0 {
        return Err(ParseError::Empty);
    }

    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let found = bytes.len() - offset;
    if found < expected {
        return Err(ParseError::Truncated { expected, found });
    }
    if found > expected {
        return Err(ParseError::TrailingData {
            offset: offset + expected,
        });
    }

    let mut data = Vec::with_capacity(expected);
    for _ in 0..expected {
        data.push(check(offset)? as u8);
        offset += 1;
    }

    // Upper triangle, column by column: bit position p covers the pair
    // (i, j) with j > i, columns ordered j = 1, 2, ...
    let mut edges = Vec::new();
    let mut pos = 0usize;
    for j in 1..n as u32 {
        for i in 0..j {
            let bit = (data[pos / 6] >> (5 - pos % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range"))
}

/// Encodes a graph as a graph6 string (no `>>graph6<<` prefix).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        assert!(n < 1 << 18, "graph6 encoding supports orders below 2^18");
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }

    let bits = n * (n - 1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut pos = 0usize;
    for j in 1..n as u32 {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[pos / 6] |= 1 << (5 - pos % 6);
            }
            pos += 1;
        }
    }
    out.extend(data.iter().map(|b| b + 63));
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a whole-file edge list: one `u v` pair per line, `#` starts a
/// comment, blank lines are ignored. The vertex count is `max label + 1`
/// and duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut edges: Vec<(u32, u32, usize)> = Vec::new();
    let mut max_label = 0u32;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::MalformedEdgeLine {
                line,
                found: content.to_string(),
            });
        }
        let mut pair = [0u32; 2];
        for (k, token) in tokens.iter().enumerate() {
            let value: u64 = token.parse().map_err(|_| ParseError::BadLabel {
                line,
                label: token.to_string(),
            })?;
            if value > u64::from(MAX_EDGE_LIST_VERTEX) {
                return Err(ParseError::LabelTooLarge {
                    line,
                    label: value,
                    max: MAX_EDGE_LIST_VERTEX,
                });
            }
            pair[k] = value as u32;
        }
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        max_label = max_label.max(u).max(v);
        edges.push((u, v, line));
    }
    if edges.is_empty() {
        return Err(ParseError::NoEdges);
    }
    let n = max_label as usize + 1;
    Ok(
        Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
            .expect("validated edges are in range"),
    )
}
