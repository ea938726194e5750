//! graph6 encoding for undirected graphs.
//!
//! Upper-triangle adjacency bits in column order `(0,1),(0,2),(1,2),(0,3),...`,
//! packed six to a byte with an offset of 63.

use crate::graph::{Graph, GraphError};

const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;

fn encode_order(n: usize, out: &mut String) {
    if n <= MAX_SHORT {
        out.push((n as u8 + 63) as char);
    } else if n <= MAX_MEDIUM {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - k);
            }
        }
        out.push((byte + 63) as char);
    }
    out
}

pub fn decode(text: &str) -> Result<Graph, GraphError> {
    let bad = |msg: &str| GraphError::Parse {
        line: 1,
        msg: format!("graph6: {msg}"),
    };
    let bytes = text.trim_end().as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside the printable range 63..=126"));
    }
    let (n, rest) = match bytes {
        [] => return Err(bad("empty input")),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated order"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[6..])
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated order"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if rest.len() != nbits.div_ceil(6) {
        return Err(bad("adjacency length does not match order"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(encode(&k2), "A_");
        let c3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(encode(&c3), "Bw");
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(encode(&p3), "Bg");
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(encode(&c4), "Cl");
        assert_eq!(encode(&Graph::new(0, &[]).unwrap()), "?");
    }

    #[test]
    fn decode_inverts_encode() {
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let back = decode(&encode(&c4)).unwrap();
        assert_eq!(encode(&back), encode(&c4));
        assert!(decode("C").is_err());
        assert!(decode("").is_err());
    }
}
