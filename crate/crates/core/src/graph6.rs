//! Bit-exact graph6 interchange for graphs of order at most 32.
//!
//! The header byte encodes the order as `63 + n`. The payload is the upper
//! adjacency triangle read column-major — bits (0,1), (0,2), (1,2),
//! (0,3), ... — packed big-endian into 6-bit groups, zero-padded to a
//! multiple of 6, each group emitted as `63 + value`. Longer headers
//! (n > 62) and the sparse6/digraph6 variants are out of scope.

use crate::graph::{Graph, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("invalid header byte 0x{0:02x}")]
    BadHeader(u8),
    #[error("order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("payload has {found} bytes, expected {expected}")]
    PayloadLength { expected: usize, found: usize },
    #[error("invalid payload byte 0x{0:02x}")]
    BadPayloadByte(u8),
    #[error("nonzero padding bits")]
    Padding,
}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 line.
pub fn from_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let (&header, payload) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::BadHeader(header));
    }
    let n = (header - 63) as usize;
    if n > MAX_ORDER {
        // 126 ('~') starts the multi-byte header for n > 62; it lands here too.
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let nbits = if n == 0 { 0 } else { n * (n - 1) / 2 };
    let expected = nbits.div_ceil(6);
    if payload.len() != expected {
        return Err(Graph6Error::PayloadLength {
            expected,
            found: payload.len(),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let mut pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    for &b in payload {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadPayloadByte(b));
        }
        let group = b - 63;
        for k in (0..6).rev() {
            let set = group & (1 << k) != 0;
            if bit < nbits {
                let (u, v) = pairs.next().unwrap();
                if set {
                    g = g.with_edge(u, v);
                }
            } else if set {
                return Err(Graph6Error::Padding);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + payload_len(n.max(1)));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 0..n {
        for u in 0..v {
            group = (group << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

impl Graph {
    /// See [`from_graph6`].
    pub fn from_graph6(line: &str) -> Result<Self, Graph6Error> {
        from_graph6(line)
    }

    /// See [`to_graph6`].
    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn c5() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    }

    // Golden strings hand-packed from the format definition: K4's six
    // upper-triangle bits form the single group 111111 = 63 -> '~', and
    // C5's bits 1,0,1,0,0,1,1,0,0,1 pad to 101001 100100 -> 'h','c'.
    #[test]
    fn golden_encodings() {
        assert_eq!(to_graph6(&k4()), "C~");
        assert_eq!(to_graph6(&c5()), "Dhc");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn golden_decodings() {
        assert_eq!(from_graph6("C~").unwrap(), k4());
        assert_eq!(from_graph6("Dhc").unwrap(), c5());
        assert_eq!(from_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(from_graph6("@").unwrap(), Graph::empty(1));
        // Trailing newline from line readers is tolerated.
        assert_eq!(from_graph6("C~\n").unwrap(), k4());
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(from_graph6("\x20~"), Err(Graph6Error::BadHeader(0x20)));
        assert_eq!(from_graph6("~???"), Err(Graph6Error::OrderTooLarge(63)));
        assert_eq!(
            from_graph6("C~~"),
            Err(Graph6Error::PayloadLength { expected: 1, found: 2 })
        );
        assert_eq!(
            from_graph6("C"),
            Err(Graph6Error::PayloadLength { expected: 1, found: 0 })
        );
        assert_eq!(from_graph6("C\x1f"), Err(Graph6Error::BadPayloadByte(0x1f)));
        // C5 payload with a padding bit forced on: 101001 100101.
        assert_eq!(from_graph6("Dhf"), Err(Graph6Error::Padding));
    }
}
