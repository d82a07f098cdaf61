//! A scorecard that re-derives the headline results: census counts,
//! homology of cycles, strong rigidity, the prism identity, invariance of
//! induced maps, the cycle classification and the pointed example.
//!
//! Each item returns a [`CheckResult`]; items needing the `n = 8, 9` graph6
//! corpus are skipped when no corpus directory is given.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use num_bigint::Sign;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canon::{canonical_form, is_isomorphic};
use crate::catalog::{build_census, census_generated, ingest_graph6, CensusOptions, Provenance};
use crate::cycles::{classify_cycle_selfmap, expected_induced, CycleClass};
use crate::gallery::{pointed_counterexample, small_strong_types};
use crate::graph6::{parse_graph6, write_graph6};
use crate::homology::{
    exact_smith_normal_form, homology, induced_homology_map, induced_homology_map_with,
    prism_identity_sides, smith_normal_form, BigIntMatrix, ChainComplex, Homology, HomologyMap,
    IntegerMatrix,
};
use crate::homotopy::{
    homotopic, homotopy_class, homotopy_neighbors, is_homotopy_via_product, is_punctuated,
    is_strong_homotopy_via_product, is_strongly_contractible, is_valid_homotopy,
    is_valid_strong_homotopy, pointed_strongly_contractible, strong_contraction_ordering,
    strong_neighbors, ContractionOrdering, Homotopy, Outcome, SearchConfig, StepKind, Verdict,
};
use crate::image::DigitalImage;
use crate::map::{continuous_maps, search_maps, VertexMap};

pub const DEFAULT_SEED: u64 = 0x5eed;

/// File names looked up in a corpus directory (optionally gzipped).
pub const CORPUS_FILES: [(usize, &str); 2] = [(8, "connected8.g6"), (9, "connected9.g6")];

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub corpus: Option<PathBuf>,
    pub search: SearchConfig,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            corpus: None,
            search: SearchConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub title: &'static str,
    #[serde(flatten)]
    pub status: Status,
    /// What was checked, for the scorecard line.
    pub detail: String,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (tag, why) = match &self.status {
            Status::Pass => ("PASS", String::new()),
            Status::Fail(r) => ("FAIL", format!(" -- {r}")),
            Status::Skipped(r) => ("SKIP", format!(" -- {r}")),
        };
        write!(
            f,
            "[{tag}] {:<3} {}: {}{why}",
            self.id, self.title, self.detail
        )
    }
}

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub const IDS: [&str; 11] = ["1", "1b", "2", "3", "4", "5", "6", "7", "8", "9", "10"];

pub fn title(id: &str) -> &'static str {
    match id {
        "1" => "census d(n), n <= 7",
        "1b" => "census d(n), n = 8, 9",
        "2" => "census c(n), n <= 7",
        "3" => "six-point catalog",
        "4" => "homology of cycles",
        "5" => "strong rigidity of cycles",
        "6" => "prism identity",
        "7" => "strong invariance of induced maps",
        "8" => "cycle selfmaps and induced maps",
        "9" => "pointed example",
        "10" => "property suites",
        _ => "unknown",
    }
}

/// Runs one item by id.
pub fn run(id: &str, opts: &VerifyOptions) -> CheckResult {
    let outcome = match id {
        "1" => census_d_small(opts),
        "1b" => match &opts.corpus {
            Some(dir) => census_d_corpus(dir, opts),
            None => {
                return CheckResult {
                    id: "1b",
                    title: title(id),
                    status: Status::Skipped("no corpus directory given".into()),
                    detail: "d(8) = 507, d(9) = 11800".into(),
                }
            }
        },
        "2" => census_c(opts),
        "3" => six_point_catalog(),
        "4" => cycle_homology(),
        "5" => strong_rigidity(opts),
        "6" => prism_identity(opts),
        "7" => strong_invariance(opts),
        "8" => cycle_selfmaps(opts),
        "9" => pointed_example(opts),
        "10" => property_suites(opts),
        other => Err(format!("no item {other:?}")),
    };
    let id = IDS.iter().copied().find(|&i| i == id).unwrap_or("?");
    let (status, detail) = match outcome {
        Ok(d) => (Status::Pass, d),
        Err(e) => (Status::Fail(e), String::new()),
    };
    CheckResult {
        id,
        title: title(id),
        status,
        detail,
    }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<CheckResult> {
    IDS.iter().map(|id| run(id, opts)).collect()
}

/// The corpus directory from an explicit path or the `DIGITOP_CORPUS`
/// environment variable.
pub fn corpus_from_env(explicit: Option<PathBuf>) -> Option<PathBuf> {
    explicit.or_else(|| std::env::var_os("DIGITOP_CORPUS").map(PathBuf::from))
}

/// Path of the corpus file for `n` in `dir`, plain or gzipped.
pub fn corpus_file(dir: &Path, n: usize) -> Option<PathBuf> {
    let (_, name) = CORPUS_FILES.iter().find(|(m, _)| *m == n)?;
    [dir.join(name), dir.join(format!("{name}.gz"))]
        .into_iter()
        .find(|p| p.is_file())
}

const D_SMALL: [usize; 7] = [1, 0, 0, 1, 2, 9, 46];
const C_SMALL: [usize; 7] = [1, 0, 0, 0, 1, 1, 3];

fn census_d_small(opts: &VerifyOptions) -> Check {
    let co = CensusOptions {
        search: opts.search,
        ..Default::default()
    };
    let mut got = Vec::new();
    for n in 1..=7 {
        got.push(lib(census_generated(n, &co))?.rows[0].d);
    }
    ensure(got == D_SMALL, || {
        format!("d = {got:?}, expected {D_SMALL:?}")
    })?;
    Ok(format!("d(1..7) = {got:?}"))
}

fn census_d_corpus(dir: &Path, opts: &VerifyOptions) -> Check {
    let co = CensusOptions {
        search: opts.search,
        provenance: Provenance::Ingested,
        ..Default::default()
    };
    let mut parts = Vec::new();
    for (n, expected) in [(8, 507), (9, 11800)] {
        let path = corpus_file(dir, n)
            .ok_or_else(|| format!("no corpus file for n = {n} in {}", dir.display()))?;
        let graphs = lib(ingest_graph6(&path))?;
        ensure(
            graphs.iter().all(|g| g.len() == n && g.is_connected()),
            || {
                format!(
                    "{} holds a graph that is not connected on {n} points",
                    path.display()
                )
            },
        )?;
        let row = &build_census(&graphs, &co).rows[0];
        ensure(row.d == expected, || {
            format!("d({n}) = {}, expected {expected}", row.d)
        })?;
        parts.push(format!("d({n}) = {} of {}", row.d, row.total));
    }
    Ok(parts.join(", "))
}

fn census_c(opts: &VerifyOptions) -> Check {
    let co = CensusOptions {
        reducible: true,
        search: opts.search,
        ..Default::default()
    };
    let mut got = Vec::new();
    for n in 1..=7 {
        let row = lib(census_generated(n, &co))?.rows.remove(0);
        let c = row
            .c_exact()
            .ok_or_else(|| format!("c({n}) undecided for {} images", row.undecided))?;
        ensure(row.d >= c, || {
            format!("c({n}) = {c} exceeds d({n}) = {}", row.d)
        })?;
        got.push(c);
    }
    ensure(got == C_SMALL, || {
        format!("c = {got:?}, expected {C_SMALL:?}")
    })?;
    Ok(format!("c(1..7) = {got:?}"))
}

fn six_point_catalog() -> Check {
    let gallery = small_strong_types();
    let mut survivors = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=6 {
        let census = lib(census_generated(n, &CensusOptions::default()))?;
        counts.push(census.entries.len());
        for e in census.entries {
            survivors.push(lib(e.image())?);
        }
    }
    ensure(counts == [1, 0, 0, 1, 2, 9], || {
        format!("survivors per n = {counts:?}")
    })?;
    ensure(survivors.len() == gallery.len(), || {
        "survivor and gallery sizes differ".into()
    })?;
    for s in &survivors {
        let hits = gallery.iter().filter(|(_, g)| is_isomorphic(s, g)).count();
        ensure(hits == 1, || {
            format!("{} matches {hits} gallery images", write_graph6(s))
        })?;
    }
    for name in ["C4", "C5", "C6", "K2,3", "K3,3"] {
        let g = &gallery.iter().find(|(n, _)| *n == name).expect("named").1;
        ensure(survivors.iter().any(|s| is_isomorphic(s, g)), || {
            format!("{name} missing")
        })?;
    }
    Ok(format!(
        "{} survivors, counts per n {counts:?}",
        survivors.len()
    ))
}

fn cycle_homology() -> Check {
    for n in 4..=10 {
        let c = lib(DigitalImage::cycle(n))?;
        for (q, b) in [(0, 1), (1, 1), (2, 0), (3, 0)] {
            let h = lib(homology(&c, q))?;
            ensure(h.betti == b && h.torsion.is_empty(), || {
                format!("H_{q}(C_{n}): betti {} torsion {:?}", h.betti, h.torsion)
            })?;
        }
    }
    Ok("H_q(C_n) = Z, Z, 0, 0 for n = 4..10".into())
}

fn strong_rigidity(opts: &VerifyOptions) -> Check {
    for n in 4..=7 {
        let c = lib(DigitalImage::cycle(n))?;
        let id = VertexMap::identity(&c);
        let nb = lib(strong_neighbors(&id))?;
        ensure(nb == vec![id.values().to_vec()], || {
            format!("C_{n}: {} strong neighbors", nb.len())
        })?;
        let class = lib(homotopy_class(&id, StepKind::Strong, &opts.search))?;
        ensure(class == Outcome::Found(vec![id.values().to_vec()]), || {
            format!("C_{n}: strong class of id is {class:?}")
        })?;
    }
    let c4 = lib(DigitalImage::cycle(4))?;
    let id = VertexMap::identity(&c4);
    let k = lib(VertexMap::constant(&c4, &c4, 0))?;
    let v = lib(homotopic(&id, &k, &opts.search))?;
    ensure(v == Verdict::Yes, || {
        format!("homotopic(id_C4, const) = {v}")
    })?;
    Ok("strong class of id_Cn is {id} for n = 4..7; id_C4 ~ const".into())
}

/// All graphs on `n` points up to isomorphism (brute force; small `n`).
fn all_graphs(n: usize) -> Vec<DigitalImage> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    let mut seen = HashMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let g = DigitalImage::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p),
        )
        .expect("valid edges");
        seen.entry(canonical_form(&g)).or_insert(g);
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

fn connected_upto(n: usize) -> std::result::Result<Vec<DigitalImage>, String> {
    let mut out = Vec::new();
    for m in 1..=n {
        out.extend(lib(crate::catalog::generate_connected_graphs(m))?);
    }
    Ok(out)
}

/// All `g` continuous, differing from `f` at exactly one point, with
/// `g(v) ~ f(v)` there: the one-step punctuated moves from `f`.
fn punctuated_moves(x: &DigitalImage, f: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for v in x.vertices() {
        for y in x.closed_neighborhood(f[v]) {
            if y == f[v] {
                continue;
            }
            let mut g = f.to_vec();
            g[v] = y;
            if crate::map::values_continuous(x, x, &g) {
                out.push(g);
            }
        }
    }
    out
}

fn prism_holds(
    x: &DigitalImage,
    f: &[usize],
    g: &[usize],
    top: usize,
) -> std::result::Result<(), String> {
    let fm = lib(VertexMap::new(x, x, f.to_vec()))?;
    let gm = lib(VertexMap::new(x, x, g.to_vec()))?;
    for q in 0..=top {
        let (l, r) = lib(prism_identity_sides(&fm, &gm, q))?;
        ensure(l == r, || {
            format!(
                "prism identity fails at q={q} for f={f:?} g={g:?} on {}",
                write_graph6(x)
            )
        })?;
    }
    Ok(())
}

/// A uniformly shuffled depth-first continuous map.
fn random_continuous(x: &DigitalImage, y: &DigitalImage, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let candidates: Vec<Vec<usize>> = x
        .vertices()
        .map(|_| {
            let mut c: Vec<usize> = y.vertices().collect();
            c.shuffle(rng);
            c
        })
        .collect();
    let mut found = None;
    search_maps(x, y, &candidates, &mut |_| true, &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found.expect("constant maps are continuous")
}

fn prism_identity(opts: &VerifyOptions) -> Check {
    let mut exhaustive = 0usize;
    for x in connected_upto(4)? {
        let top = ChainComplex::new(&x).top_dimension();
        for f in continuous_maps(&x, &x) {
            for g in punctuated_moves(&x, &f) {
                prism_holds(&x, &f, &g, top)?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let pool: Vec<DigitalImage> = lib(crate::catalog::generate_connected_graphs(5))?
        .into_iter()
        .chain(lib(crate::catalog::generate_connected_graphs(6))?)
        .collect();
    let mut random = 0usize;
    while random < 1000 {
        let x = pool.choose(&mut rng).expect("nonempty pool");
        let f = random_continuous(x, x, &mut rng);
        let moves = punctuated_moves(x, &f);
        let Some(g) = moves.choose(&mut rng) else {
            continue;
        };
        prism_holds(x, &f, g, ChainComplex::new(x).top_dimension())?;
        random += 1;
    }
    Ok(format!(
        "{exhaustive} exhaustive pairs on <= 4 points, {random} random pairs on 5-6 points"
    ))
}

fn strong_invariance(opts: &VerifyOptions) -> Check {
    let mut pairs = 0usize;
    for n in 1..=4 {
        for x in all_graphs(n) {
            let h = lib(Homology::new(&x))?;
            let maps = continuous_maps(&x, &x);
            let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut classes = 0;
            for m in &maps {
                if class_of.contains_key(m) {
                    continue;
                }
                let f = lib(VertexMap::new(&x, &x, m.clone()))?;
                let Outcome::Found(class) =
                    lib(homotopy_class(&f, StepKind::Strong, &opts.search))?
                else {
                    return Err("strong class search ran out of budget".into());
                };
                for g in class {
                    class_of.insert(g, classes);
                }
                classes += 1;
            }
            let mut reps: HashMap<usize, Vec<HomologyMap>> = HashMap::new();
            for m in &maps {
                let f = lib(VertexMap::new(&x, &x, m.clone()))?;
                let star: Vec<HomologyMap> = (0..=2)
                    .map(|q| induced_homology_map_with(&f, q, &h, &h))
                    .collect::<crate::Result<_>>()
                    .map_err(|e| e.to_string())?;
                match reps.get(&class_of[m]) {
                    Some(r) => {
                        ensure(*r == star, || {
                            format!("f_* differs within a strong class on {}", write_graph6(&x))
                        })?;
                        pairs += 1;
                    }
                    None => {
                        reps.insert(class_of[m], star);
                    }
                }
            }
        }
    }
    let c4 = lib(DigitalImage::cycle(4))?;
    let id = lib(induced_homology_map(&VertexMap::identity(&c4), 1))?;
    let c = lib(induced_homology_map(
        &lib(VertexMap::constant(&c4, &c4, 0))?,
        1,
    ))?;
    ensure(id != c, || "id_* = c_* on H_1(C_4)".into())?;
    Ok(format!(
        "{pairs} maps agree with their class representative; id_* != c_* on H_1(C_4)"
    ))
}

fn cycle_selfmaps(opts: &VerifyOptions) -> Check {
    let mut summary = Vec::new();
    for n in [5, 6] {
        let c = lib(DigitalImage::cycle(n))?;
        let h = lib(Homology::new(&c))?;
        let maps = continuous_maps(&c, &c);
        // ordinary homotopy classes as connected components of the map graph
        let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut classes = 0;
        for m in &maps {
            if class_of.contains_key(m) {
                continue;
            }
            let f = lib(VertexMap::new(&c, &c, m.clone()))?;
            let Outcome::Found(class) = lib(homotopy_class(&f, StepKind::Ordinary, &opts.search))?
            else {
                return Err("homotopy class search ran out of budget".into());
            };
            for g in class {
                class_of.insert(g, classes);
            }
            classes += 1;
        }
        ensure(classes == 3, || {
            format!("C_{n} has {classes} homotopy classes")
        })?;
        let mut stars = Vec::with_capacity(maps.len());
        for m in &maps {
            let f = lib(VertexMap::new(&c, &c, m.clone()))?;
            let class = lib(classify_cycle_selfmap(&f))?;
            let star: Vec<HomologyMap> = (0..=2)
                .map(|q| induced_homology_map_with(&f, q, &h, &h))
                .collect::<crate::Result<_>>()
                .map_err(|e| e.to_string())?;
            let want = match class {
                CycleClass::Identity(_) => 1,
                CycleClass::Flip(_) => -1,
                CycleClass::Constant => 0,
            };
            ensure(star[1].scalar() == Some(want), || {
                format!("{f}: f_*1 = {:?}, class {class:?}", star[1].scalar())
            })?;
            for (q, s) in star.iter().enumerate() {
                let e = lib(expected_induced(&f, q))?;
                ensure(e.matches(s), || format!("{f}: q={q} expected {e:?}"))?;
            }
            if class == CycleClass::Constant {
                let k = lib(VertexMap::constant(&c, &c, m[0]))?;
                let v = lib(crate::homotopy::strongly_homotopic(&f, &k, &opts.search))?;
                ensure(v == Verdict::Yes, || {
                    format!("{f} is not strongly homotopic to a constant")
                })?;
            }
            stars.push(star);
        }
        for i in 0..maps.len() {
            for j in 0..maps.len() {
                let same_star = stars[i] == stars[j];
                let same_class = class_of[&maps[i]] == class_of[&maps[j]];
                ensure(same_star == same_class, || {
                    format!(
                        "C_{n}: {:?} vs {:?} induced agree {same_star}, homotopic {same_class}",
                        maps[i], maps[j]
                    )
                })?;
            }
        }
        summary.push(format!("C_{n}: {} maps", maps.len()));
    }
    Ok(summary.join(", "))
}

/// The inclusions listed for the ordering `x_1, ..., x_8` (1-based pairs).
pub const POINTED_INCLUSIONS: [(usize, usize); 7] =
    [(1, 8), (2, 5), (3, 6), (4, 7), (5, 7), (6, 7), (7, 8)];

fn pointed_example(opts: &VerifyOptions) -> Check {
    let x = pointed_counterexample();
    ensure(strong_contraction_ordering(&x).is_some(), || {
        "no contraction ordering found".into()
    })?;
    let order: Vec<usize> = (0..8).collect();
    let o = lib(ContractionOrdering::from_order(&x, order.clone()))?;
    ensure(o.is_valid_for(&x), || {
        "listed ordering does not validate".into()
    })?;
    for &(i, j) in &POINTED_INCLUSIONS {
        ensure(
            ContractionOrdering::inclusion_holds(&x, &order, i - 1, j - 1),
            || format!("N*(x_{i}) not within N*(x_{j}) in X_{i}"),
        )?;
    }
    let id = VertexMap::identity(&x);
    for f in lib(strong_neighbors(&id))? {
        ensure(f == id.values() || f[0] != 0, || format!("{f:?} fixes x_1"))?;
    }
    let p = lib(pointed_strongly_contractible(&x, 0, &opts.search))?;
    ensure(p == Verdict::No, || {
        format!("pointed contractible at x_1: {p}")
    })?;
    ensure(is_strongly_contractible(&x), || {
        "not strongly contractible".into()
    })?;
    Ok("ordering x_1..x_8 valid with 7 inclusions; not pointed contractible at x_1".into())
}

fn random_image(n: usize, rng: &mut ChaCha8Rng) -> DigitalImage {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|b| (0..b).map(move |a| (a, b)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    DigitalImage::from_edges(n, edges).expect("valid edges")
}

fn property_suites(opts: &VerifyOptions) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xa5a5);
    // random homotopies: walks in the one-step map graph plus arbitrary stages
    let mut strong_count = 0;
    for i in 0..1000 {
        let x = random_image(rng.gen_range(1..=5), &mut rng);
        let y = random_image(rng.gen_range(1..=5), &mut rng);
        let k = rng.gen_range(0..=4);
        let mut stages = vec![random_continuous(&x, &y, &mut rng)];
        for _ in 0..k {
            let prev = lib(VertexMap::new(
                &x,
                &y,
                stages.last().expect("nonempty").clone(),
            ))?;
            let next = if i % 3 == 0 {
                random_continuous(&x, &y, &mut rng)
            } else {
                let nb = if i % 3 == 1 {
                    lib(strong_neighbors(&prev))?
                } else {
                    lib(homotopy_neighbors(&prev))?
                };
                nb.choose(&mut rng).expect("f is its own neighbor").clone()
            };
            stages.push(next);
        }
        let h = lib(Homotopy::new(&x, &y, stages))?;
        let (f, g) = (h.start(), h.end());
        let ordinary = is_valid_homotopy(&h, &f, &g);
        let strong = is_valid_strong_homotopy(&h);
        ensure(!strong || ordinary, || {
            format!("strong but not ordinary: {:?}", h.stages())
        })?;
        ensure(ordinary == is_homotopy_via_product(&h), || {
            "NP_1 product check disagrees".into()
        })?;
        ensure(strong == is_strong_homotopy_via_product(&h), || {
            "NP_2 product check disagrees".into()
        })?;
        strong_count += usize::from(strong);
    }
    let corpus6 = connected_upto(6)?;
    for x in &corpus6 {
        let c = ChainComplex::new(x);
        for q in 1..=c.top_dimension() {
            let dd = lib(c.boundary(q).mul(&c.boundary(q + 1)))?;
            ensure(dd.is_zero(), || {
                format!("boundary of boundary nonzero on {}", write_graph6(x))
            })?;
        }
    }
    // random integer matrices, exact arithmetic; the i64 form must match where it fits
    let mut fits = 0usize;
    for _ in 0..1000 {
        let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let m = lib(IntegerMatrix::from_rows(c, &rows))?;
        let s = exact_smith_normal_form(&m);
        let big = BigIntMatrix::from_integer_matrix(&m);
        ensure(
            lib(s.u.mul(&big).and_then(|um| um.mul(&s.v)))? == s.d,
            || format!("UMV != D for {m:?}"),
        )?;
        // U * U^-1 = I over the integers forces |det U| = 1
        ensure(
            lib(s.u.mul(&s.u_inv))? == BigIntMatrix::identity_matrix(r)
                && lib(s.v.mul(&s.v_inv))? == BigIntMatrix::identity_matrix(c),
            || format!("non-unimodular transform for {m:?}"),
        )?;
        ensure(s.d.is_diagonal(), || format!("D not diagonal for {m:?}"))?;
        let f = s.invariant_factors();
        ensure(
            f.iter().all(|x| x.sign() == Sign::Plus)
                && f.windows(2).all(|w| (&w[1] % &w[0]).sign() == Sign::NoSign),
            || format!("divisibility fails: {f:?}"),
        )?;
        if let Ok(small) = smith_normal_form(&m) {
            fits += 1;
            ensure(
                small.u.determinant().is_ok_and(|d| d.abs() == 1)
                    && small.v.determinant().is_ok_and(|d| d.abs() == 1),
                || format!("non-unimodular i64 transform for {m:?}"),
            )?;
            ensure(lib(s.d.to_integer_matrix())? == small.d, || {
                format!("i64 and exact forms differ for {m:?}")
            })?;
        }
    }
    // punctuated homotopies of length 2 between all maps of small images
    let mut punctuated = 0usize;
    for n in 1..=3 {
        for x in all_graphs(n) {
            let maps = continuous_maps(&x, &x);
            for a in &maps {
                for b in &maps {
                    for c in &maps {
                        let h = lib(Homotopy::new(&x, &x, vec![a.clone(), b.clone(), c.clone()]))?;
                        if is_punctuated(&h) && is_valid_homotopy(&h, &h.start(), &h.end()) {
                            ensure(is_valid_strong_homotopy(&h), || {
                                format!("punctuated but not strong: {:?}", h.stages())
                            })?;
                            punctuated += 1;
                        }
                    }
                }
            }
        }
    }
    let corpus7 = connected_upto(7)?;
    for x in &corpus7 {
        let back = lib(parse_graph6(&write_graph6(x)))?;
        ensure(&back == x, || {
            format!("graph6 round trip fails for {}", write_graph6(x))
        })?;
    }
    Ok(format!(
        "1000 random homotopies ({strong_count} strong), dd = 0 on {} images, 1000 exact SNFs ({fits} also in i64), \
         {punctuated} punctuated homotopies, {} graph6 round trips",
        corpus6.len(),
        corpus7.len()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_graph_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11]);
    }

    #[test]
    fn punctuated_moves_differ_in_one_point() {
        let c4 = DigitalImage::cycle(4).unwrap();
        let id: Vec<usize> = c4.vertices().collect();
        let moves = punctuated_moves(&c4, &id);
        // each point of C_4 can move to either neighbor, but only onto a
        // neighbor that keeps the map continuous
        for g in &moves {
            assert_eq!(g.iter().zip(&id).filter(|(a, b)| a != b).count(), 1);
        }
        assert!(moves.is_empty());
    }

    #[test]
    fn skip_without_corpus() {
        let r = run("1b", &VerifyOptions::default());
        assert!(matches!(r.status, Status::Skipped(_)));
        assert!(r.to_string().starts_with("[SKIP] 1b"));
    }

    #[test]
    fn cheap_items_pass() {
        let opts = VerifyOptions::default();
        for id in ["3", "4", "5", "9"] {
            let r = run(id, &opts);
            assert!(r.passed(), "{r}");
        }
    }
}
