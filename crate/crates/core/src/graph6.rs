//! graph6 encoding as produced by nauty's `geng`/`showg`.
//!
//! Layout: a size prefix (`n + 63` for `n ≤ 62`, otherwise `~` followed by
//! three 6-bit bytes), then the upper triangle of the adjacency matrix in
//! column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), …`), packed six bits
//! per byte big-endian and offset by 63. Padding bits must be zero.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::vset::VertexSet;

const HEADER: &str = ">>graph6<<";

fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Graph6(msg.into()))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut s = text.trim_end_matches(['\n', '\r']);
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return err("empty input");
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return err(format!("byte {b:#04x} outside the printable graph6 range"));
    }
    let (n, body) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return err("graphs with more than 258047 vertices are not supported");
        }
        if bytes.len() < 4 {
            return err("truncated length prefix");
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n < 63 {
            return err(format!("non-canonical length prefix for n={n}"));
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() != nbytes {
        return err(format!(
            "expected {nbytes} data bytes for n={n}, found {}",
            body.len()
        ));
    }
    let pad = nbytes * 6 - nbits;
    if pad > 0 && (body[nbytes - 1] - 63) & ((1 << pad) - 1) != 0 {
        return err("trailing padding bits are nonzero");
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        // D?{ is the star with centre 4
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn header_and_newline() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g, Graph::complete(2).unwrap());
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A").is_err());
        assert!(parse_graph6("A_?").is_err());
        // n=2 has one data bit; 'a' - 63 = 34 = 0b100010 sets a padding bit
        assert!(parse_graph6("Aa").is_err());
        assert!(parse_graph6("~??").is_err());
        assert!(parse_graph6("A\u{7f}").is_err());
    }

    #[test]
    fn large_prefix() {
        let g = Graph::cycle(64).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let p = Graph::path(63).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&p)).unwrap(), p);
    }
}
