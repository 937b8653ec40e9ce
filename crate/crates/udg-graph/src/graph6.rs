//! graph6 reader and writer.
//!
//! The encoding is the standard one: a size prefix `N(n)` followed by the
//! upper triangle of the adjacency matrix in column order, six bits per
//! printable byte (offset 63). The optional `>>graph6<<` header is accepted
//! on input and never written.

use thiserror::Error;

use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

/// Largest vertex count the decoder will allocate for.
pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated size prefix")]
    TruncatedSize,
    #[error("graph6 size {0} exceeds the supported maximum")]
    TooLarge(u64),
    #[error("expected {expected} data bytes after the size prefix, found {found}")]
    Length { expected: usize, found: usize },
    #[error("non-zero padding bits in the final byte")]
    Padding,
}

pub fn encode(g: &Graph) -> String {
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
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    let (n, header_len) = size_prefix(bytes)?;
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: data.len(),
        });
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (data[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Graph6Error::Padding);
    }
    let mut adj = vec![Vec::new(); n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}

fn size_prefix(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    let v = |b: u8| (b - 63) as u64;
    if bytes[0] != 126 {
        return Ok((v(bytes[0]), 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::TruncatedSize);
        }
        let n = bytes[2..8].iter().fold(0u64, |acc, &b| (acc << 6) | v(b));
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::TruncatedSize);
    }
    let n = bytes[1..4].iter().fold(0u64, |acc, &b| (acc << 6) | v(b));
    Ok((n, 4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // reference encodings from the format description
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::cycle(5)), "Dhc");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        assert_eq!(encode(&Graph::path(2)), "A_");
    }

    #[test]
    fn header_optional() {
        assert_eq!(decode(">>graph6<<Dhc").unwrap(), Graph::cycle(5));
        assert_eq!(decode("Dhc\n").unwrap(), Graph::cycle(5));
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("D h"), Err(Graph6Error::BadByte { .. })));
        assert!(matches!(decode("Dh"), Err(Graph6Error::Length { .. })));
        assert_eq!(decode("A`"), Err(Graph6Error::Padding));
        assert_eq!(decode("~?"), Err(Graph6Error::TruncatedSize));
    }

    #[test]
    fn large_prefix_roundtrip() {
        let g = Graph::path(70);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }
}
