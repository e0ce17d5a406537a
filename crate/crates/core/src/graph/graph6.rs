//! The graph6 text format.
//!
//! A graph on `n` vertices is written as `N(n)` followed by the upper
//! triangle of its adjacency matrix, column by column (`x(0,1)`, `x(0,2)`,
//! `x(1,2)`, `x(0,3)`, ...), packed big-endian into 6-bit groups with 63
//! added to every byte. `N(n)` is one byte for `n <= 62`, `~` plus three
//! bytes for `n <= 258047`, and `~~` plus six bytes beyond that.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = 68_719_476_735;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        assert!(n <= LONG_MAX, "graph too large for graph6");
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    out
}

pub fn encode_string(g: &Graph) -> String {
    String::from_utf8(encode(g)).expect("graph6 is printable ASCII")
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

fn sextet(bytes: &[u8], at: usize) -> Result<usize> {
    match bytes.get(at) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
        Some(&b) => Err(err(at, format!("byte {b:#04x} outside the graph6 range 63..=126"))),
        None => Err(err(at, "unexpected end of input")),
    }
}

/// Decodes one graph. An optional `>>graph6<<` header and trailing
/// whitespace are accepted; offsets in errors count from the first byte
/// of `bytes`.
pub fn decode(bytes: &[u8]) -> Result<Graph> {
    let mut end = bytes.len();
    while end > 0 && bytes[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    let start = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let body = &bytes[..end];
    if start >= end {
        return Err(err(start, "empty graph6 string"));
    }

    let (n, mut pos) = if body[start] != 126 {
        (sextet(body, start)?, start + 1)
    } else if body.get(start + 1) != Some(&126) {
        let mut n = 0;
        for k in 0..3 {
            n = (n << 6) | sextet(body, start + 1 + k)?;
        }
        if n <= SHORT_MAX {
            return Err(err(start, format!("order {n} must use the one-byte form")));
        }
        (n, start + 4)
    } else {
        let mut n = 0;
        for k in 0..6 {
            n = (n << 6) | sextet(body, start + 2 + k)?;
        }
        if n <= MEDIUM_MAX {
            return Err(err(start, format!("order {n} must use the four-byte form")));
        }
        (n, start + 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        return Err(err(
            pos,
            format!("expected {need} adjacency bytes for {n} vertices, found {}", body.len() - pos),
        ));
    }

    let mut g = Graph::new(n);
    let mut bit = 0;
    let mut current = 0;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                current = sextet(body, pos)?;
                pos += 1;
            }
            if current & (1 << (5 - bit % 6)) != 0 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if bits % 6 != 0 && current & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(err(pos - 1, "non-zero padding bits"));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn empty_graph_is_question_mark() {
        assert_eq!(encode_string(&Graph::new(0)), "?");
        assert_eq!(decode(b"?").unwrap(), Graph::new(0));
    }

    #[test]
    fn known_strings() {
        // the same 5-vertex graph used by other graph6 implementations
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_string(&g), "DQc");
        assert_eq!(encode_string(&complete(4)), "C~");
        assert_eq!(encode_string(&cycle(5)), "Dhc");
    }

    #[test]
    fn medium_form_round_trips() {
        let g = cycle(100);
        let s = encode(&g);
        assert_eq!(s[0], 126);
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn header_and_newline_are_tolerated() {
        assert_eq!(decode(b">>graph6<<C~\n").unwrap(), complete(4));
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        match decode(b"C~~") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        match decode(b"C\x20") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(decode(b"").is_err());
        // three vertices use 3 of 6 bits; 'A' sets a padding bit
        assert!(matches!(decode(b"BA"), Err(Error::Graph6 { .. })));
        assert!(decode(b"~??~").is_err());
    }
}
