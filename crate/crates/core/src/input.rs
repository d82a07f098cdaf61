//! Short textual descriptions of images and maps, as accepted on the
//! command line.
//!
//! Images: `point`, `cycle:N`, `complete:N`, `interval:A:B`,
//! `bipartite:A:B`, `pointed-example`, `g6:STRING`, or a path to a file
//! holding an edge list or a graph6 line (gzip allowed for graph6).
//!
//! Maps: `id`, `const:V`, a JSON integer array, or a path to a file holding
//! one.

use std::io::BufRead;
use std::path::Path;

use crate::catalog::open_graph6;
use crate::edgelist::parse_edge_list;
use crate::error::{Error, Result};
use crate::gallery::pointed_counterexample;
use crate::graph6::parse_graph6;
use crate::image::DigitalImage;
use crate::map::VertexMap;

fn number<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::param(format!("bad {what}: {s:?}")))
}

pub fn parse_image_arg(arg: &str) -> Result<DigitalImage> {
    let parts: Vec<&str> = arg.split(':').collect();
    match parts.as_slice() {
        ["point"] => Ok(DigitalImage::point()),
        ["pointed-example"] => Ok(pointed_counterexample()),
        ["cycle", n] => DigitalImage::cycle(number(n, "cycle length")?),
        ["complete", n] => DigitalImage::complete(number(n, "vertex count")?),
        ["interval", a, b] => {
            DigitalImage::interval(number(a, "endpoint")?, number(b, "endpoint")?)
        }
        ["bipartite", a, b] => {
            DigitalImage::complete_bipartite(number(a, "part size")?, number(b, "part size")?)
        }
        ["g6", _, ..] => parse_graph6(&arg[3..]),
        _ => read_image_file(Path::new(arg)),
    }
}

/// Reads an edge list, or a file whose first graph is in graph6.
pub fn read_image_file(path: &Path) -> Result<DigitalImage> {
    if !path.exists() {
        return Err(Error::param(format!(
            "no such image file or description: {}",
            path.display()
        )));
    }
    let mut first = String::new();
    open_graph6(path)?.read_line(&mut first)?;
    let head = first.split('#').next().unwrap_or("").trim();
    if head.is_empty() || head.chars().all(|c| c.is_ascii_digit()) {
        parse_edge_list(&std::fs::read_to_string(path)?)
    } else {
        parse_graph6(head)
    }
}

pub fn parse_map_arg<'a>(
    arg: &str,
    dom: &'a DigitalImage,
    cod: &'a DigitalImage,
) -> Result<VertexMap<'a>> {
    let arg = arg.trim();
    if arg == "id" {
        if dom != cod {
            return Err(Error::param("`id` needs equal domain and codomain"));
        }
        return Ok(VertexMap::identity(dom));
    }
    if let Some(v) = arg.strip_prefix("const:") {
        return VertexMap::constant(dom, cod, number(v, "target point")?);
    }
    let text = if arg.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)?
    };
    let values: Vec<usize> = serde_json::from_str(&text)?;
    VertexMap::new(dom, cod, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn builtin_descriptions() {
        assert_eq!(
            parse_image_arg("cycle:5").unwrap(),
            DigitalImage::cycle(5).unwrap()
        );
        assert_eq!(parse_image_arg("interval:-1:2").unwrap().len(), 4);
        assert_eq!(
            parse_image_arg("g6:Bw").unwrap(),
            DigitalImage::complete(3).unwrap()
        );
        assert_eq!(parse_image_arg("pointed-example").unwrap().len(), 8);
        assert!(parse_image_arg("cycle:x").is_err());
        assert!(parse_image_arg("no/such/file").is_err());
    }

    #[test]
    fn files_are_sniffed() {
        let mut el = tempfile::NamedTempFile::new().unwrap();
        write!(el, "# square\n4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(
            read_image_file(el.path()).unwrap(),
            DigitalImage::cycle(4).unwrap()
        );
        let mut g6 = tempfile::NamedTempFile::new().unwrap();
        writeln!(g6, "Bw").unwrap();
        assert_eq!(
            read_image_file(g6.path()).unwrap(),
            DigitalImage::complete(3).unwrap()
        );
    }

    #[test]
    fn maps() {
        let c4 = DigitalImage::cycle(4).unwrap();
        assert_eq!(
            parse_map_arg("id", &c4, &c4).unwrap(),
            VertexMap::identity(&c4)
        );
        assert_eq!(
            parse_map_arg("const:2", &c4, &c4).unwrap().values(),
            &[2, 2, 2, 2]
        );
        assert_eq!(
            parse_map_arg("[1,0,3,2]", &c4, &c4).unwrap().values(),
            &[1, 0, 3, 2]
        );
        assert!(parse_map_arg("[0,1]", &c4, &c4).is_err());
        assert!(parse_map_arg("const:9", &c4, &c4).is_err());
    }
}
