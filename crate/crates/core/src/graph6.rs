//! The graph6 text encoding (one graph per line).
//!
//! Header `N(n)` followed by the upper triangle of the adjacency matrix,
//! column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per
//! byte with 63 added. Trailing pad bits must be zero.

use crate::error::{Error, Result};
use crate::image::DigitalImage;

const HEADER: &str = ">>graph6<<";

pub fn write_graph6(img: &DigitalImage) -> String {
    encode_with(img.len(), |i, j| img.is_adjacent(i, j))
}

/// Encodes the graph whose adjacency between `i < j` is `adj(i, j)`.
pub(crate) fn encode_with(n: usize, adj: impl Fn(usize, usize) -> bool) -> String {
    let mut out = encode_size(n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(adj(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + 63));
    }
    out
}

fn encode_size(n: usize) -> String {
    let mut out = String::new();
    if n <= 62 {
        out.push(char::from(n as u8 + 63));
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(char::from(((n >> shift) & 63) as u8 + 63));
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(char::from(((n >> shift) & 63) as u8 + 63));
        }
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<DigitalImage> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let err = |offset: usize, reason: String| Error::Graph6 {
        offset: offset + skip,
        reason,
    };
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, format!("byte {} outside 63..=126", body[pos])));
    }
    let (n, start) = match body {
        [] => return Err(err(0, "empty line".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err(body.len(), "truncated 8-byte size header".into()));
            }
            (sextets(&rest[..6]), 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(body.len(), "truncated 4-byte size header".into()));
            }
            (sextets(&rest[..3]), 4)
        }
        [b, ..] => (usize::from(b - 63), 1),
    };
    if n == 0 {
        return Err(err(0, "graph has no vertices".into()));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[start..];
    if data.len() != expected {
        return Err(err(
            start + data.len().min(expected),
            format!(
                "expected {expected} data bytes for n={n}, found {}",
                data.len()
            ),
        ));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if bits % 6 != 0 {
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if (data[expected - 1] - 63) & pad_mask != 0 {
            return Err(err(start + expected - 1, "nonzero padding bits".into()));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    DigitalImage::from_edges(n, edges)
}

fn sextets(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0, |acc, &b| (acc << 6) | usize::from(b - 63))
}
