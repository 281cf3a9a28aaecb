//! graph6 codec, bit-exact per the published format.
//!
//! Layout: an order prefix (byte `63 + n` for `n ≤ 62`, or `'~'` followed by
//! three bytes carrying 18 bits for `63 ≤ n ≤ 258047`), then the upper
//! triangle of the adjacency matrix in column order `(0,1), (0,2), (1,2),
//! (0,3), …`, packed big-endian into 6-bit groups, each group offset by 63
//! into the printable range, with zero padding bits. The optional
//! `>>graph6<<` header is accepted on input and never emitted. Only graph6
//! is supported; sparse6 (`:`) and digraph6 (`&`) lines are rejected with a
//! distinct error.

use alloc::vec::Vec;

use crate::bits::{VertexSet, MAX_ORDER};
use crate::graph::Graph;

/// Decoding errors for [`parse_graph6`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    /// Input is empty or truncated before the order prefix completes.
    BadLengthPrefix,
    /// A byte is outside the printable graph6 range `63..=126`.
    NonPrintable(u8),
    /// Order 0 lines are valid graph6 but below this crate's supported range.
    OrderZero,
    /// Order above 1024.
    OrderTooLarge,
    /// Fewer adjacency bytes than the order requires.
    Truncated,
    /// More bytes than the order requires.
    TrailingBytes,
    /// Zero-padding bits after the last adjacency bit are not zero.
    TrailingBitsNonzero,
    /// Line starts with `:` — sparse6 is not supported.
    SparseSix,
    /// Line starts with `&` — digraph6 is not supported.
    DigraphSix,
}

impl core::fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Graph6Error::BadLengthPrefix => write!(f, "malformed graph6 length prefix"),
            Graph6Error::NonPrintable(b) => write!(f, "byte {b} outside printable graph6 range"),
            Graph6Error::OrderZero => write!(f, "order-0 graph6 line; supported orders are 1..={MAX_ORDER}"),
            Graph6Error::OrderTooLarge => write!(f, "graph order exceeds supported maximum {MAX_ORDER}"),
            Graph6Error::Truncated => write!(f, "graph6 line shorter than its order requires"),
            Graph6Error::TrailingBytes => write!(f, "trailing bytes after graph6 adjacency data"),
            Graph6Error::TrailingBitsNonzero => write!(f, "nonzero padding bits in final graph6 byte"),
            Graph6Error::SparseSix => write!(f, "sparse6 input (leading ':') is not supported; use graph6"),
            Graph6Error::DigraphSix => write!(f, "digraph6 input (leading '&') is not supported; use graph6"),
        }
    }
}

const HEADER: &[u8] = b">>graph6<<";

/// Decodes one graph6 line (optionally prefixed by `>>graph6<<`).
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let body = line.strip_prefix(HEADER).unwrap_or(line);
    let (n, rest) = parse_order(body)?;
    if n == 0 {
        return Err(Graph6Error::OrderZero);
    }
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge);
    }

    let bit_count = n * (n - 1) / 2;
    let byte_count = (bit_count + 5) / 6;
    if rest.len() < byte_count {
        return Err(Graph6Error::Truncated);
    }
    if rest.len() > byte_count {
        return Err(Graph6Error::TrailingBytes);
    }

    let mut adj = alloc::vec![VertexSet::empty(n); n];
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            if read_bit(rest, bit_index)? {
                adj[i].insert(j as u16);
                adj[j].insert(i as u16);
            }
            bit_index += 1;
            if bit_index == bit_count {
                break 'outer;
            }
        }
    }
    for pad in bit_count..byte_count * 6 {
        if read_bit(rest, pad)? {
            return Err(Graph6Error::TrailingBitsNonzero);
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

/// Encodes a graph as a canonical graph6 line: minimal order prefix, zero
/// padding, no header. `parse_graph6(write_graph6(g)) == g`, and encoding is
/// the identity inverse on header-free canonical input lines.
#[must_use]
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let bit_count = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(4 + (bit_count + 5) / 6);
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i as u16, j as u16));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    out
}

fn parse_order(body: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let first = *body.first().ok_or(Graph6Error::BadLengthPrefix)?;
    match first {
        b':' => Err(Graph6Error::SparseSix),
        b'&' => Err(Graph6Error::DigraphSix),
        b'~' => {
            if body.get(1) == Some(&b'~') {
                // Eight-byte prefix form: orders from 258048 up, far above
                // the supported maximum.
                return Err(Graph6Error::OrderTooLarge);
            }
            if body.len() < 4 {
                return Err(Graph6Error::BadLengthPrefix);
            }
            let mut n = 0usize;
            for &b in &body[1..4] {
                n = (n << 6) | sixbits(b)? as usize;
            }
            Ok((n, &body[4..]))
        }
        _ => Ok((sixbits(first)? as usize, &body[1..])),
    }
}

#[inline]
fn sixbits(b: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Graph6Error::NonPrintable(b))
    }
}

#[inline]
fn read_bit(bytes: &[u8], index: usize) -> Result<bool, Graph6Error> {
    let group = sixbits(bytes[index / 6])?;
    Ok(group >> (5 - index % 6) & 1 != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn g(n: usize, edges: &[(u16, u16)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    /// Frozen codec pairs cross-checked against an independent reference
    /// implementation before this codec existed.
    #[test]
    fn frozen_encodings() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let k1 = g(1, &[]);
        let k2 = g(2, &[(0, 1)]);
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
        for (graph, text) in [
            (&k4, "C~"),
            (&k1, "@"),
            (&k2, "A_"),
            (&p3, "Bg"),
            (&c5, "Dhc"),
        ] {
            assert_eq!(write_graph6(graph), text.as_bytes(), "encode {text}");
            assert_eq!(&parse_graph6(text.as_bytes()).unwrap(), graph, "decode {text}");
        }
    }

    #[test]
    fn header_accepted_on_input_never_emitted() {
        let decoded = parse_graph6(b">>graph6<<C~").unwrap();
        assert_eq!(write_graph6(&decoded), b"C~");
    }

    #[test]
    fn rejects_malformed_lines() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::BadLengthPrefix));
        assert_eq!(parse_graph6(b"C~extra"), Err(Graph6Error::TrailingBytes));
        assert_eq!(parse_graph6(&b"C~"[..1]), Err(Graph6Error::Truncated));
        assert_eq!(parse_graph6(b"?"), Err(Graph6Error::OrderZero));
        assert_eq!(parse_graph6(b":Fa@x^"), Err(Graph6Error::SparseSix));
        assert_eq!(parse_graph6(b"&C~~~"), Err(Graph6Error::DigraphSix));
        assert_eq!(parse_graph6(b"B\x1f"), Err(Graph6Error::NonPrintable(0x1f)));
        // Order 2 with one adjacency byte whose padding bits are set:
        // 'A' = order 2, body byte must be '_' (edge) or '?' (no edge).
        assert_eq!(parse_graph6(b"A~"), Err(Graph6Error::TrailingBitsNonzero));
    }

    #[test]
    fn long_prefix_orders_round_trip() {
        for n in [63usize, 64, 100, 1024] {
            // Path graph on n vertices.
            let edges: alloc::vec::Vec<(u16, u16)> =
                (0..n - 1).map(|i| (i as u16, i as u16 + 1)).collect();
            let graph = g(n, &edges);
            let text = write_graph6(&graph);
            assert_eq!(text[0], b'~');
            assert_eq!(parse_graph6(&text).unwrap(), graph, "n={n}");
        }
    }

    #[test]
    fn order_above_supported_rejected() {
        // '~' followed by the 18-bit encoding of 1025.
        let n = 1025usize;
        let line = [
            b'~',
            63 + ((n >> 12) & 0x3f) as u8,
            63 + ((n >> 6) & 0x3f) as u8,
            63 + (n & 0x3f) as u8,
        ];
        assert_eq!(parse_graph6(&line), Err(Graph6Error::OrderTooLarge));
        assert_eq!(parse_graph6(b"~~?????"), Err(Graph6Error::OrderTooLarge));
    }

    #[test]
    fn round_trip_all_orders_small() {
        // Deterministic small graphs: cycles plus one chord where possible.
        for n in 3..40usize {
            let mut edges: alloc::vec::Vec<(u16, u16)> =
                (0..n).map(|i| (i as u16, ((i + 1) % n) as u16)).collect();
            if n > 4 {
                edges.push((0, (n as u16) / 2));
            }
            let graph = g(n, &edges);
            assert_eq!(parse_graph6(&write_graph6(&graph)).unwrap(), graph);
        }
    }
}
