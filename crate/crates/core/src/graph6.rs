//! graph6 encoding (McKay's format) for [`SimpleGraph`].
//!
//! One graph per line. The optional `>>graph6<<` header is accepted on input
//! and never produced. Vertex labels follow the bit order of the format:
//! the upper triangle is read column by column, `(0,1), (0,2), (1,2), (0,3)...`.

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{SimpleGraph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 size header")]
    MalformedHeader,
    #[error("byte {byte:#04x} at position {position} is outside the graph6 range 63..=126")]
    InvalidByte { position: usize, byte: u8 },
    #[error("graph6 payload truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 payload has {extra} trailing bytes")]
    TrailingData { extra: usize },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("vertex count {0} outside the supported range 1..={MAX_VERTICES}")]
    OutOfRange(usize),
}

const HEADER: &str = ">>graph6<<";

fn sextet(bytes: &[u8], position: usize) -> Result<u64, Graph6Error> {
    let byte = bytes[position];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::InvalidByte { position, byte });
    }
    Ok(u64::from(byte - 63))
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] != 126 {
        return Ok((sextet(bytes, 0)? as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedHeader);
        }
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        return Ok((n as usize, 8));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::MalformedHeader);
    }
    let mut n = 0u64;
    for i in 1..4 {
        n = (n << 6) | sextet(bytes, i)?;
    }
    Ok((n as usize, 4))
}

/// Decodes one graph6 line. Surrounding whitespace and a leading
/// `>>graph6<<` header are ignored.
pub fn from_graph6(text: &str) -> Result<SimpleGraph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, offset) = decode_size(bytes)?;
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::OutOfRange(n));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let payload = &bytes[offset..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData {
            extra: payload.len() - expected,
        });
    }
    let mut g = SimpleGraph::empty(n).map_err(|_| Graph6Error::OutOfRange(n))?;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let chunk = sextet(payload, k / 6).map_err(|e| match e {
                Graph6Error::InvalidByte { position, byte } => Graph6Error::InvalidByte {
                    position: position + offset,
                    byte,
                },
                other => other,
            })?;
            if (chunk >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(u, v).expect("indices in range");
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = sextet(payload, expected - 1)?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 line without header or newline.
pub fn to_graph6(g: &SimpleGraph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
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
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses a graph6 file body: blank lines, `#` comments and headers are
/// skipped. Errors carry the 1-based line number.
pub fn parse_lines(text: &str) -> Result<Vec<SimpleGraph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#') && l != HEADER
        })
        .map(|(i, l)| from_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}

impl Serialize for SimpleGraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_graph6(self))
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        from_graph6(&text).map_err(de::Error::custom)
    }
}
