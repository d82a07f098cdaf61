//! Census of connected images that are not strongly reducible.
//!
//! Sources are connected graphs up to isomorphism, either generated here
//! (`n <= 7`) or read from graph6 files. Each image is filtered by the
//! dominated-point criterion and, optionally, by the budgeted search for a
//! nonsurjection one step from the identity.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use flate2::read::MultiGzDecoder;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph6::{parse_graph6, write_graph6};
use crate::homotopy::{is_reducible, is_strongly_reducible, SearchConfig, Verdict};
use crate::image::DigitalImage;

/// Largest `n` served by [`generate_connected_graphs`].
pub const MAX_GENERATED: usize = 7;

/// One connected graph on `n` points per isomorphism class, each in its
/// canonical labeling, sorted by canonical form.
pub fn generate_connected_graphs(n: usize) -> Result<Vec<DigitalImage>> {
    if n == 0 {
        return Err(Error::param("graphs need at least one point"));
    }
    if n > MAX_GENERATED {
        return Err(Error::param(format!(
            "built-in generation stops at n = {MAX_GENERATED}; ingest a graph6 corpus for n = {n}"
        )));
    }
    let mut level: Vec<Vec<u8>> = vec![canonical_form(&DigitalImage::point())];
    for m in 1..n {
        // every connected graph on m+1 points has a non-cut point
        let mut next: HashSet<Vec<u8>> = HashSet::new();
        for code in &level {
            let g = decode(code);
            for mask in 1u32..(1 << m) {
                let edges = g
                    .edges()
                    .chain((0..m).filter(|&i| mask >> i & 1 == 1).map(|i| (i, m)));
                let h = DigitalImage::from_edges(m + 1, edges)?;
                next.insert(canonical_form(&h));
            }
        }
        level = next.into_iter().collect();
        level.sort();
    }
    Ok(level.iter().map(|c| decode(c)).collect())
}

fn decode(code: &[u8]) -> DigitalImage {
    let text = std::str::from_utf8(code).expect("canonical forms are ASCII");
    parse_graph6(text).expect("canonical forms are valid graph6")
}

/// Opens a graph6 file, transparently decompressing gzip input.
pub fn open_graph6(path: &Path) -> Result<Box<dyn BufRead>> {
    let mut file = File::open(path)?;
    let mut magic = [0u8; 2];
    let got = file.read(&mut magic)?;
    let file = File::open(path)?;
    if got == 2 && magic == [0x1f, 0x8b] {
        Ok(Box::new(BufReader::new(MultiGzDecoder::new(file))))
    } else {
        Ok(Box::new(BufReader::new(file)))
    }
}

/// Parses one graph per non-blank line; errors carry the 1-based line.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<(usize, DigitalImage)>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let img = parse_graph6(line.trim()).map_err(|e| e.at_line(idx + 1))?;
        out.push((idx + 1, img));
    }
    Ok(out)
}

pub fn ingest_graph6(path: &Path) -> Result<Vec<DigitalImage>> {
    Ok(read_graph6(open_graph6(path)?)?
        .into_iter()
        .map(|(_, g)| g)
        .collect())
}

/// Pairs `(line, earlier_line)` of isomorphic entries.
pub fn find_duplicates(lines: &[(usize, DigitalImage)]) -> Vec<(usize, usize)> {
    let forms: Vec<Vec<u8>> = lines.par_iter().map(|(_, g)| canonical_form(g)).collect();
    let mut first: HashMap<&[u8], usize> = HashMap::new();
    let mut dups = Vec::new();
    for ((line, _), form) in lines.iter().zip(&forms) {
        match first.get(form.as_slice()) {
            Some(&earlier) => dups.push((*line, earlier)),
            None => {
                first.insert(form, *line);
            }
        }
    }
    dups
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub n: usize,
    /// Canonical form, itself a graph6 string.
    pub canon: String,
    pub graph6: String,
    pub strongly_reducible: bool,
    /// `None` when the reducibility search was not run.
    pub reducible: Option<Verdict>,
}

impl CatalogEntry {
    pub fn image(&self) -> Result<DigitalImage> {
        parse_graph6(&self.graph6)
    }

    fn check(&self) -> std::result::Result<(), String> {
        let img = parse_graph6(&self.graph6).map_err(|e| format!("field `graph6`: {e}"))?;
        if img.len() != self.n {
            return Err(format!(
                "field `n`: {} but graph6 has {} points",
                self.n,
                img.len()
            ));
        }
        if canonical_form(&img) != self.canon.as_bytes() {
            return Err("field `canon`: does not match the canonical form of `graph6`".into());
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Generated,
    Ingested,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub n: usize,
    /// Connected graphs examined.
    pub total: usize,
    /// Not strongly reducible.
    pub d: usize,
    /// Not reducible, counting only decided cases; `None` if not computed.
    pub c: Option<usize>,
    /// Survivors whose reducibility search ran out of budget.
    pub undecided: usize,
    pub provenance: Provenance,
}

impl CensusRow {
    /// `c`, if it was computed and every case was decided.
    pub fn c_exact(&self) -> Option<usize> {
        self.c.filter(|_| self.undecided == 0)
    }
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    /// Also run the (slower) reducibility search on survivors.
    pub reducible: bool,
    pub search: SearchConfig,
    /// Keep entries for strongly reducible images too.
    pub keep_all: bool,
    pub provenance: Provenance,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            reducible: false,
            search: SearchConfig::default(),
            keep_all: false,
            provenance: Provenance::Generated,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub rows: Vec<CensusRow>,
    /// Sorted by `(n, canon)`.
    pub entries: Vec<CatalogEntry>,
}

/// Filters `images` (connected, pairwise non-isomorphic) and counts per
/// `n`. Strongly reducible images are reducible, so the reducibility search
/// only runs on survivors.
pub fn build_census(images: &[DigitalImage], opts: &CensusOptions) -> Census {
    let classify = |g: &DigitalImage| {
        let strongly = is_strongly_reducible(g).is_some();
        let reducible = match (opts.reducible, strongly) {
            (false, _) => None,
            (true, true) => Some(Verdict::Yes),
            (true, false) => Some(is_reducible(g, &opts.search)),
        };
        let entry = (opts.keep_all || !strongly).then(|| CatalogEntry {
            n: g.len(),
            canon: String::from_utf8(canonical_form(g)).expect("canonical forms are ASCII"),
            graph6: write_graph6(g),
            strongly_reducible: strongly,
            reducible,
        });
        (g.len(), strongly, reducible, entry)
    };
    let all: Vec<_> = if opts.search.parallel {
        images.par_iter().map(classify).collect()
    } else {
        images.iter().map(classify).collect()
    };
    let mut rows: BTreeMap<usize, CensusRow> = BTreeMap::new();
    let mut entries = Vec::new();
    for (n, strongly, reducible, entry) in all {
        let row = rows.entry(n).or_insert(CensusRow {
            n,
            total: 0,
            d: 0,
            c: opts.reducible.then_some(0),
            undecided: 0,
            provenance: opts.provenance,
        });
        row.total += 1;
        if !strongly {
            row.d += 1;
        }
        match reducible {
            Some(Verdict::No) => *row.c.as_mut().expect("c tracked when computed") += 1,
            Some(Verdict::Undecided) => row.undecided += 1,
            _ => {}
        }
        entries.extend(entry);
    }
    entries.sort_by(|a, b| (a.n, &a.canon).cmp(&(b.n, &b.canon)));
    Census {
        rows: rows.into_values().collect(),
        entries,
    }
}

/// Census of the generated connected graphs on `n` points.
pub fn census_generated(n: usize, opts: &CensusOptions) -> Result<Census> {
    let graphs = generate_connected_graphs(n)?;
    Ok(build_census(
        &graphs,
        &CensusOptions {
            provenance: Provenance::Generated,
            ..opts.clone()
        },
    ))
}

pub fn write_catalog_to<W: Write>(entries: &[CatalogEntry], mut w: W) -> Result<()> {
    for e in entries {
        serde_json::to_writer(&mut w, e)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_catalog(entries: &[CatalogEntry], path: &Path) -> Result<()> {
    write_catalog_to(entries, std::io::BufWriter::new(File::create(path)?))
}

pub fn read_catalog_from<R: BufRead>(r: R) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (idx, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let err = |reason: String| Error::Catalog {
            line: idx + 1,
            reason,
        };
        let entry: CatalogEntry = serde_json::from_str(&line).map_err(|e| err(e.to_string()))?;
        entry.check().map_err(err)?;
        out.push(entry);
    }
    Ok(out)
}

pub fn read_catalog(path: &Path) -> Result<Vec<CatalogEntry>> {
    read_catalog_from(BufReader::new(File::open(path)?))
}

/// CSV with columns `n,total,d,c,undecided` (`c` empty when not computed).
pub fn write_census_csv<W: Write>(rows: &[CensusRow], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["n", "total", "d", "c", "undecided"])?;
    for r in rows {
        out.write_record([
            r.n.to_string(),
            r.total.to_string(),
            r.d.to_string(),
            r.c.map(|c| c.to_string()).unwrap_or_default(),
            r.undecided.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_generation_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| generate_connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        assert!(generate_connected_graphs(8).is_err());
        assert!(generate_connected_graphs(0).is_err());
        for g in generate_connected_graphs(5).unwrap() {
            assert!(g.is_connected());
        }
    }

    #[test]
    fn census_small_n() {
        let opts = CensusOptions {
            reducible: true,
            ..Default::default()
        };
        let c1 = census_generated(1, &opts).unwrap();
        assert_eq!((c1.rows[0].d, c1.rows[0].c_exact()), (1, Some(1)));
        let c4 = census_generated(4, &opts).unwrap();
        assert_eq!(
            (c4.rows[0].total, c4.rows[0].d, c4.rows[0].c_exact()),
            (6, 1, Some(0))
        );
        assert_eq!(c4.entries[0].image().unwrap().edge_count(), 4);
    }

    #[test]
    fn graph6_reading() {
        let text = "@\n\nCl\nA`\n";
        let err = read_graph6(text.as_bytes()).unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 4, .. }), "{err}");
        let ok = read_graph6("@\nCl\nCl\n".as_bytes()).unwrap();
        assert_eq!(ok.len(), 3);
        assert_eq!(find_duplicates(&ok), vec![(3, 2)]);
        assert!(read_graph6("".as_bytes()).unwrap().is_empty());
    }

    #[test]
    fn gzip_and_plain_files() {
        let dir = tempfile::tempdir().unwrap();
        let plain = dir.path().join("a.g6");
        std::fs::write(&plain, "@\nCl\n").unwrap();
        let gz = dir.path().join("a.g6.gz");
        let mut enc =
            flate2::write::GzEncoder::new(File::create(&gz).unwrap(), flate2::Compression::fast());
        enc.write_all(b"@\nCl\n").unwrap();
        enc.finish().unwrap();
        assert_eq!(ingest_graph6(&plain).unwrap(), ingest_graph6(&gz).unwrap());
    }

    #[test]
    fn catalog_round_trip_and_schema_errors() {
        let census = census_generated(
            5,
            &CensusOptions {
                reducible: true,
                ..Default::default()
            },
        )
        .unwrap();
        let mut buf = Vec::new();
        write_catalog_to(&census.entries, &mut buf).unwrap();
        assert_eq!(read_catalog_from(buf.as_slice()).unwrap(), census.entries);
        let mut empty = Vec::new();
        write_catalog_to(&[], &mut empty).unwrap();
        assert!(read_catalog_from(empty.as_slice()).unwrap().is_empty());
        let bad = r#"{"n":1,"canon":"@","strongly_reducible":false,"reducible":null}"#;
        let e = read_catalog_from(bad.as_bytes()).unwrap_err().to_string();
        assert!(e.contains("graph6") && e.contains("line 1"), "{e}");
        let wrong =
            r#"{"n":2,"canon":"@","graph6":"@","strongly_reducible":false,"reducible":null}"#;
        assert!(read_catalog_from(wrong.as_bytes())
            .unwrap_err()
            .to_string()
            .contains("`n`"));
    }

    #[test]
    fn csv_output() {
        let census = census_generated(4, &CensusOptions::default()).unwrap();
        let mut buf = Vec::new();
        write_census_csv(&census.rows, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,total,d,c,undecided\n4,6,1,,0\n"
        );
    }
}
