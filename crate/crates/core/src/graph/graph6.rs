//! The graph6 text format: a size header followed by the upper triangle of
//! the adjacency matrix, column by column, six bits per printable byte.

use super::{SmallGraph, MAX_ORDER};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph6Error {
    /// Byte offset of the problem within the input.
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    InvalidByte(u8),
    Truncated { expected: usize, found: usize },
    TrailingData,
    TooLarge(usize),
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Graph6ErrorKind::Empty => write!(f, "empty graph6 string"),
            Graph6ErrorKind::InvalidByte(b) => write!(f, "invalid byte {b:#04x} at offset {}", self.offset),
            Graph6ErrorKind::Truncated { expected, found } => {
                write!(f, "truncated at offset {}: expected {expected} bytes, found {found}", self.offset)
            }
            Graph6ErrorKind::TrailingData => write!(f, "unexpected data at offset {}", self.offset),
            Graph6ErrorKind::TooLarge(n) => write!(f, "order {n} too large (offset {})", self.offset),
        }
    }
}

/// Encodes a graph given by its order and an adjacency predicate.
pub fn encode_with(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> String {
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        assert!(n < 1 << 18, "order too large for graph6");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | adjacent(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes to an order and an edge list; surrounding whitespace is ignored.
pub fn decode_edges(input: &[u8]) -> Result<(usize, Vec<(usize, usize)>), Graph6Error> {
    let start = input.iter().position(|b| !b.is_ascii_whitespace()).unwrap_or(input.len());
    let end = input.iter().rposition(|b| !b.is_ascii_whitespace()).map_or(start, |p| p + 1);
    let body = &input[start..end];
    let err = |offset: usize, kind| Err(Graph6Error { offset: start + offset, kind });
    if body.is_empty() {
        return err(0, Graph6ErrorKind::Empty);
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return err(i, Graph6ErrorKind::InvalidByte(b));
        }
    }
    let (n, header) = if body[0] < 126 {
        ((body[0] - 63) as usize, 1)
    } else {
        if body.len() < 4 {
            return err(body.len(), Graph6ErrorKind::Truncated { expected: 4, found: body.len() });
        }
        if body[1] == 126 {
            return err(1, Graph6ErrorKind::TooLarge(1 << 18));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let data = &body[header..];
    if data.len() < needed {
        return err(body.len(), Graph6ErrorKind::Truncated { expected: header + needed, found: body.len() });
    }
    if data.len() > needed {
        return err(header + needed, Graph6ErrorKind::TrailingData);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok((n, edges))
}

pub fn graph6_encode(g: &SmallGraph) -> String {
    encode_with(g.order(), |i, j| g.has_edge(i, j))
}

pub fn graph6_decode(input: &[u8]) -> Result<SmallGraph, Graph6Error> {
    let (n, edges) = decode_edges(input)?;
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error { offset: 0, kind: Graph6ErrorKind::TooLarge(n) });
    }
    Ok(SmallGraph::from_edges(n, &edges))
}
