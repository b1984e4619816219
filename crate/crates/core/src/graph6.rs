//! graph6 encoding: the order, then the upper triangle column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per printable byte offset
//! by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`decode`]; the graph itself needs `n²` bits.
pub const MAX_GRAPH6_ORDER: usize = 1 << 16;

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn push_order(out: &mut String, n: usize) {
    let digits = |out: &mut String, count: usize| {
        for i in (0..count).rev() {
            out.push(char::from(((n >> (6 * i)) & 63) as u8 + 63));
        }
    };
    if n <= 62 {
        out.push(char::from(n as u8 + 63));
    } else if n <= 258_047 {
        out.push('~');
        digits(out, 3);
    } else {
        out.push_str("~~");
        digits(out, 6);
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(8 + n * n / 12);
    push_order(&mut out, n);
    let mut word = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push(char::from(word + 63));
                word = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(char::from((word << (6 - bits)) + 63));
    }
    out
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted; offsets in errors count from the start of `text`.
pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    let start = if bytes.starts_with(HEADER.as_bytes()) { HEADER.len() } else { 0 };
    let value = |pos: usize| -> Result<usize> {
        match bytes.get(pos) {
            None => Err(parse_err(pos, "unexpected end of input")),
            Some(&b) if (63..=126).contains(&b) => Ok(usize::from(b - 63)),
            Some(&b) => Err(parse_err(pos, format!("byte 0x{b:02x} is outside the graph6 range 63..=126"))),
        }
    };
    let read_digits = |from: usize, count: usize| -> Result<usize> {
        (from..from + count).try_fold(0usize, |acc, p| Ok((acc << 6) | value(p)?))
    };

    let (n, mut pos) = match value(start)? {
        63 => {
            if bytes.get(start + 1) == Some(&b'~') {
                (read_digits(start + 2, 6)?, start + 8)
            } else {
                (read_digits(start + 1, 3)?, start + 4)
            }
        }
        small => (small, start + 1),
    };
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Capability {
            what: "graph6 decoding",
            limit: MAX_GRAPH6_ORDER,
            got: n,
        });
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let body_len = total_bits.div_ceil(6);
    if bytes.len() != pos + body_len {
        let at = (pos + body_len).min(bytes.len());
        return Err(parse_err(
            at,
            format!("expected {body_len} adjacency bytes for n = {n}, found {}", bytes.len().saturating_sub(pos)),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    let (mut i, mut j) = (0usize, 1usize);
    while bit < total_bits {
        let word = value(pos)?;
        for shift in (0..6).rev() {
            if bit == total_bits {
                if word & ((1 << (shift + 1)) - 1) != 0 {
                    return Err(parse_err(pos, "nonzero padding bits"));
                }
                break;
            }
            if (word >> shift) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Graph::build(n, &edges)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn vectors() {
        assert_eq!(decode("@").unwrap(), Graph::complete(1));
        assert_eq!(decode("A_").unwrap(), Graph::complete(2));
        assert_eq!(decode("D~{").unwrap(), Graph::complete(5));
        assert_eq!(encode(&Graph::complete(5)), "D~{");
        assert_eq!(encode(&Graph::complete(2)), "A_");
        assert_eq!(encode(&Graph::empty(0)), "?");
        // P4 as emitted by networkx: edges 01, 12, 23.
        assert_eq!(encode(&Graph::path(4)), "Ch");
        assert_eq!(decode(">>graph6<<D~{\n").unwrap(), Graph::complete(5));
    }

    #[test]
    fn long_orders_use_the_extended_header() {
        let g = Graph::cycle(63);
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(decode(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode("D~"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(decode("D~{{"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(decode("D~ "), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(decode("D\u{1}{"), Err(Error::Parse { offset: 1, .. })));
        // K2 with a stray padding bit.
        assert!(matches!(decode("A`"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode(">>graph6<<A"), Err(Error::Parse { offset: 11, .. })));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=30).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut b = bits.into_iter();
                for j in 1..n {
                    for i in 0..j {
                        if b.next().unwrap() {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::build(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arb_graph()) {
            prop_assert_eq!(decode(&encode(&g)).unwrap(), g);
        }
    }
}
