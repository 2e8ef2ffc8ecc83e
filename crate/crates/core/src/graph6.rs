//! graph6 encoding (short form only, up to 62 vertices).
//!
//! The first byte is `n + 63`. The upper triangle of the adjacency matrix is
//! then read column by column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! six bits per byte (most significant bit first), each byte offset by 63, and
//! the final group padded with zero bits.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable in the short form.
pub const MAX_SHORT_ORDER: usize = 62;

/// Optional header emitted by some enumeration tools.
pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;

fn bit_bytes(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses a single graph6 line. A leading `>>graph6<<` header and trailing
/// line terminators are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    let err = |i: usize, reason: String| Error::Graph6 {
        offset: skip + i,
        reason,
    };

    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte 0x{b:02x} outside printable range 63..=126")));
        }
    }
    let Some(&first) = bytes.first() else {
        return Err(err(0, "empty input".into()));
    };
    if first == 126 {
        return Err(err(
            0,
            "long form (n >= 63) is not supported".into(),
        ));
    }
    let n = (first - BIAS) as usize;
    let expected = bit_bytes(n);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(err(
            1 + data.len().min(expected),
            format!(
                "expected {expected} adjacency bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !total_bits.is_multiple_of(6) {
        let last = data[expected - 1] - BIAS;
        let pad = 6 - total_bits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err(expected, "nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph in graph6 short form.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    let mut bits = vec![0u8; bit_bytes(n)];
    for &(u, v) in g.edges() {
        // column-major index of (u, v) with u < v
        let k = v * (v - 1) / 2 + u;
        bits[k / 6] |= 1 << (5 - k % 6);
    }
    let mut out = String::with_capacity(1 + bits.len());
    out.push((n as u8 + BIAS) as char);
    out.extend(bits.into_iter().map(|b| (b + BIAS) as char));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
        assert_eq!(emit_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn hand_encoded_k2() {
        // n = 2 -> 'A'; one bit x(0,1)=1 -> 0b100000 = 32 -> '_'
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(emit_graph6(&g).unwrap(), "A_");
    }

    #[test]
    fn hand_encoded_c5() {
        // bits (0,1)(0,2)(1,2)(0,3)(1,3)(2,3)(0,4)(1,4)(2,4)(3,4) = 1010011001
        // groups 101001 = 41 -> 'h', 100100 = 36 -> 'c'
        let g = parse_graph6("Dhc").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges(), &[(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(emit_graph6(&g).unwrap(), "Dhc");
    }

    #[test]
    fn header_and_newline_are_ignored() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn zero_vertices() {
        let g = parse_graph6("?").unwrap();
        assert_eq!(g.order(), 0);
        assert_eq!(emit_graph6(&g).unwrap(), "?");
    }

    #[test]
    fn errors_name_offsets() {
        match parse_graph6("A ") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        // 'A' needs one data byte
        assert!(matches!(parse_graph6("A"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6 { .. })));
        // padding bits set: 'A' + 0b100001
        let bad = format!("A{}", (0b100001u8 + 63) as char);
        assert!(matches!(parse_graph6(&bad), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~??~"), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn emit_rejects_long_form() {
        assert_eq!(
            emit_graph6(&Graph::empty(63)),
            Err(Error::UnsupportedOrder(63))
        );
        assert!(emit_graph6(&Graph::empty(62)).is_ok());
    }
}
