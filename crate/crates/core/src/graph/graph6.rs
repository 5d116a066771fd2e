//! graph6 encoding: an order header followed by the upper triangle of the
//! adjacency matrix in column-major order, packed big-endian six bits per
//! byte, each byte offset by 63.

use thiserror::Error;

use super::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6 string truncated at offset {offset}: expected {expected} bytes, found {found}")]
    Truncated { offset: usize, expected: usize, found: usize },
    #[error("unexpected trailing byte at offset {offset}")]
    TrailingData { offset: usize },
}

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
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
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminators are accepted; padding bits are ignored.
pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let digit = |i: usize| -> Result<usize, Graph6Error> {
        match body.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(Graph6Error::InvalidByte { offset: skip + i, byte: b }),
            None => Err(Graph6Error::Truncated { offset: skip + i, expected: i + 1, found: body.len() }),
        }
    };
    let (n, mut pos) = if body[0] != 126 {
        (digit(0)?, 1)
    } else if body.get(1) != Some(&126) {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | digit(i)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | digit(i)?;
        }
        (n, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < pos + needed {
        return Err(Graph6Error::Truncated { offset: skip + body.len(), expected: pos + needed, found: body.len() });
    }
    let mut g = Graph::new(n);
    let mut bit = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            if bit == bits {
                break 'outer;
            }
            let chunk = digit(pos + bit / 6)?;
            if chunk >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    pos += needed;
    if pos < body.len() {
        return Err(Graph6Error::TrailingData { offset: skip + pos });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_graphs() {
        assert_eq!(encode_graph6(&Graph::new(1)), "@");
        assert_eq!(encode_graph6(&Graph::path(2)), "A_");
        assert_eq!(encode_graph6(&Graph::new(0)), "?");
        assert_eq!(decode_graph6("A_").unwrap(), Graph::path(2));
        assert_eq!(decode_graph6(">>graph6<<A_\n").unwrap(), Graph::path(2));
    }

    #[test]
    fn long_order_header() {
        let g = Graph::cycle(77);
        let s = encode_graph6(&g);
        assert!(s.starts_with("~?@L"));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_input_names_offset() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(decode_graph6("A "), Err(Graph6Error::InvalidByte { offset: 1, byte: b' ' }));
        assert!(matches!(decode_graph6("D"), Err(Graph6Error::Truncated { .. })));
        assert_eq!(decode_graph6("A_?"), Err(Graph6Error::TrailingData { offset: 2 }));
        assert!(matches!(decode_graph6("~?"), Err(Graph6Error::Truncated { offset: 2, .. })));
    }
}
