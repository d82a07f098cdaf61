//! Plain adjacency-list text: a line with the vertex count, then one
//! whitespace-separated `i j` pair per edge (0-based). `#` starts a comment.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::image::DigitalImage;

pub fn parse_edge_list(text: &str) -> Result<DigitalImage> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |reason: String| Error::EdgeList {
            line: line_no,
            reason,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("not a vertex index: {s:?}")))
        };
        match (n, fields.as_slice()) {
            (None, [count]) => n = Some(parse(count)?),
            (None, _) => return Err(err("first line must hold the vertex count".into())),
            (Some(_), [a, b]) => edges.push((parse(a)?, parse(b)?)),
            (Some(_), _) => return Err(err(format!("expected `i j`, found {line:?}"))),
        }
    }
    let n = n.ok_or(Error::EdgeList {
        line: 0,
        reason: "missing vertex count".into(),
    })?;
    DigitalImage::from_edges(n, edges)
}

pub fn write_edge_list(img: &DigitalImage) -> String {
    let mut out = format!("{}\n", img.len());
    for (a, b) in img.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# a square\n4\n0 1\n1 2 # side\n\n2 3\n3 0\n";
        assert_eq!(
            parse_edge_list(text).unwrap(),
            DigitalImage::cycle(4).unwrap()
        );
    }

    #[test]
    fn round_trip() {
        let g = DigitalImage::complete_bipartite(2, 3).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        let p = DigitalImage::point();
        assert_eq!(parse_edge_list(&write_edge_list(&p)).unwrap(), p);
    }

    #[test]
    fn errors_name_the_line() {
        match parse_edge_list("3\n0 1\n1 x\n").unwrap_err() {
            Error::EdgeList { line, .. } => assert_eq!(line, 3),
            e => panic!("{e}"),
        }
        assert!(parse_edge_list("3 4\n").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("2\n0 2\n").is_err());
        assert!(parse_edge_list("2\n0 1 1\n").is_err());
    }
}
