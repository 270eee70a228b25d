//! Reader and writer for the graph6 text format.
//!
//! A line encodes the vertex count followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use crate::graph::{Graph, CAPACITY};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {offset}: invalid graph6 character {byte:#04x}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated {what}")]
    Truncated { offset: usize, what: &'static str },
    #[error("byte {offset}: {extra} unexpected trailing byte(s)")]
    Trailing { offset: usize, extra: usize },
    #[error("byte {offset}: nonzero padding bits")]
    Padding { offset: usize },
    #[error("byte 0: vertex count {n} exceeds capacity {CAPACITY}")]
    TooLarge { n: usize },
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::Truncated {
            offset,
            what: "vertex count",
        }),
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Graph6Error::InvalidByte { offset, byte: b }),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored. Error offsets are relative to the trimmed body.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, mut pos) = if bytes[0] != 126 {
        (sixbits(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sixbits(bytes, i)? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | sixbits(bytes, i)? as usize;
        }
        (n, 8)
    };
    if n > CAPACITY {
        return Err(Graph6Error::TooLarge { n });
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let body_len = pairs.div_ceil(6);
    if bytes.len() < pos + body_len {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            what: "adjacency body",
        });
    }
    if bytes.len() > pos + body_len {
        return Err(Graph6Error::Trailing {
            offset: pos + body_len,
            extra: bytes.len() - pos - body_len,
        });
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                current = match bytes[pos] {
                    b @ 63..=126 => b - 63,
                    b => return Err(Graph6Error::InvalidByte { offset: pos, byte: b }),
                };
                pos += 1;
            }
            if current & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) && current & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(Graph6Error::Padding { offset: pos - 1 });
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are in range and loop-free"))
}

/// Encodes a graph as a graph6 line without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut k = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                current |= 1 << (5 - k % 6);
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(current + 63);
                current = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push(current + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
