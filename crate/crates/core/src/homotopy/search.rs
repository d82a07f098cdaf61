//! Search in the space of continuous maps `X -> Y`.
//!
//! Maps are nodes; two maps are joined when they are homotopic (or strongly
//! homotopic) in one step. Any `k`-step homotopy restricts to `k` one-step
//! homotopies between consecutive stages, and concatenation reassembles
//! them, so homotopy classes are exactly the connected components of this
//! graph. Searches carry a budget and report `Undecided` instead of
//! guessing when it runs out.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Homotopy;
use crate::error::{Error, Result};
use crate::image::DigitalImage;
use crate::map::{same_image, search_maps, VertexMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Cap on distinct maps visited by a breadth-first search, and on
    /// search-tree nodes for the reducibility test.
    pub max_maps: usize,
    /// Candidate-product size above which neighbor enumeration logs a
    /// warning before proceeding.
    pub max_candidates: u128,
    /// Expand BFS frontiers on the rayon pool. Results do not depend on it.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_maps: 1_000_000,
            max_candidates: 1_000_000_000,
            parallel: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_decided(self) -> bool {
        self != Verdict::Undecided
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Undecided => "undecided",
        })
    }
}

/// Result of a budgeted search for a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    Absent,
    /// Budget exhausted before the question was settled.
    Undecided,
}

impl<T> Outcome<T> {
    pub fn verdict(&self) -> Verdict {
        match self {
            Outcome::Found(_) => Verdict::Yes,
            Outcome::Absent => Verdict::No,
            Outcome::Undecided => Verdict::Undecided,
        }
    }

    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    Ordinary,
    Strong,
}

/// Candidate values for each point of a map one step away from `f`. For
/// ordinary steps `g(x) ∈ N*(f(x))`; strong steps additionally need
/// `g(x) ∈ N*(f(x'))` for every neighbor `x'` of `x`.
fn step_candidates(
    dom: &DigitalImage,
    cod: &DigitalImage,
    f: &[usize],
    kind: StepKind,
    pin: Option<(usize, usize)>,
) -> Vec<Vec<usize>> {
    dom.vertices()
        .map(|x| {
            if let Some((x0, y0)) = pin {
                if x == x0 {
                    return if cod.adjacent_or_equal(f[x], y0) {
                        vec![y0]
                    } else {
                        vec![]
                    };
                }
            }
            let mut c = cod.closed_neighborhood(f[x]);
            if kind == StepKind::Strong {
                for &w in dom.neighbors(x) {
                    c.retain(|&y| cod.adjacent_or_equal(f[w], y));
                }
            }
            c
        })
        .collect()
}

fn step_neighbors(
    dom: &DigitalImage,
    cod: &DigitalImage,
    f: &[usize],
    kind: StepKind,
    pin: Option<(usize, usize)>,
    cfg: &SearchConfig,
) -> Vec<Vec<usize>> {
    let candidates = step_candidates(dom, cod, f, kind, pin);
    let product = candidates
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if product > cfg.max_candidates {
        log::warn!(
            "enumerating {product} candidate maps exceeds the configured bound {}",
            cfg.max_candidates
        );
    }
    let mut out = Vec::new();
    search_maps(dom, cod, &candidates, &mut |_| true, &mut |g| {
        out.push(g.to_vec());
        true
    });
    out
}

fn neighbors_of(f: &VertexMap<'_>, kind: StepKind) -> Result<Vec<Vec<usize>>> {
    f.require_continuous("f")?;
    Ok(step_neighbors(
        f.dom(),
        f.cod(),
        f.values(),
        kind,
        None,
        &SearchConfig::default(),
    ))
}

/// All continuous `g` homotopic to `f` in one step (including `f`), in
/// lexicographic order of their values.
pub fn homotopy_neighbors(f: &VertexMap<'_>) -> Result<Vec<Vec<usize>>> {
    neighbors_of(f, StepKind::Ordinary)
}

/// All continuous `g` strongly homotopic to `f` in one step (including `f`).
pub fn strong_neighbors(f: &VertexMap<'_>) -> Result<Vec<Vec<usize>>> {
    neighbors_of(f, StepKind::Strong)
}

struct Bfs {
    nodes: Vec<Vec<usize>>,
    parent: Vec<usize>,
    /// Index of the first node satisfying the target predicate.
    hit: Option<usize>,
    exhausted: bool,
}

/// Level-synchronous BFS from `start`. Neighbor lists are computed per
/// frontier (optionally in parallel) and merged in frontier order, so the
/// visit order is the same either way.
#[allow(clippy::too_many_arguments)]
fn bfs(
    dom: &DigitalImage,
    cod: &DigitalImage,
    start: &[usize],
    kind: StepKind,
    pin: Option<(usize, usize)>,
    cfg: &SearchConfig,
    target: &dyn Fn(&[usize]) -> bool,
    stop_at_target: bool,
) -> Bfs {
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut out = Bfs {
        nodes: vec![start.to_vec()],
        parent: vec![0],
        hit: None,
        exhausted: false,
    };
    index.insert(start.to_vec(), 0);
    if target(start) {
        out.hit = Some(0);
        if stop_at_target {
            return out;
        }
    }
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let expand = |&i: &usize| step_neighbors(dom, cod, &out.nodes[i], kind, pin, cfg);
        let lists: Vec<Vec<Vec<usize>>> = if cfg.parallel {
            frontier.par_iter().map(expand).collect()
        } else {
            frontier.iter().map(expand).collect()
        };
        let mut next = Vec::new();
        for (&from, list) in frontier.iter().zip(lists) {
            for g in list {
                if index.contains_key(&g) {
                    continue;
                }
                if out.nodes.len() >= cfg.max_maps {
                    out.exhausted = true;
                    return out;
                }
                let id = out.nodes.len();
                index.insert(g.clone(), id);
                let is_hit = out.hit.is_none() && target(&g);
                out.nodes.push(g);
                out.parent.push(from);
                next.push(id);
                if is_hit {
                    out.hit = Some(id);
                    if stop_at_target {
                        return out;
                    }
                }
            }
        }
        frontier = next;
    }
    out
}

fn path_to(bfs: &Bfs, mut i: usize) -> Vec<Vec<usize>> {
    let mut path = vec![bfs.nodes[i].clone()];
    while i != 0 {
        i = bfs.parent[i];
        path.push(bfs.nodes[i].clone());
    }
    path.reverse();
    path
}

fn require_pair(f: &VertexMap<'_>, g: &VertexMap<'_>) -> Result<()> {
    if !same_image(f.dom(), g.dom()) || !same_image(f.cod(), g.cod()) {
        return Err(Error::param("maps must share domain and codomain"));
    }
    f.require_continuous("f")?;
    g.require_continuous("g")
}

/// Shortest homotopy (ordinary or strong) from `f` to `g`, as a stage list
/// of one-step moves.
pub fn find_homotopy<'a>(
    f: &VertexMap<'a>,
    g: &VertexMap<'a>,
    kind: StepKind,
    cfg: &SearchConfig,
) -> Result<Outcome<Homotopy<'a>>> {
    require_pair(f, g)?;
    let goal = g.values();
    let res = bfs(
        f.dom(),
        f.cod(),
        f.values(),
        kind,
        None,
        cfg,
        &|m| m == goal,
        true,
    );
    Ok(match res.hit {
        Some(i) => Outcome::Found(Homotopy::new(f.dom(), f.cod(), path_to(&res, i))?),
        None if res.exhausted => Outcome::Undecided,
        None => Outcome::Absent,
    })
}

pub fn homotopic(f: &VertexMap<'_>, g: &VertexMap<'_>, cfg: &SearchConfig) -> Result<Verdict> {
    Ok(find_homotopy(f, g, StepKind::Ordinary, cfg)?.verdict())
}

pub fn strongly_homotopic(
    f: &VertexMap<'_>,
    g: &VertexMap<'_>,
    cfg: &SearchConfig,
) -> Result<Verdict> {
    Ok(find_homotopy(f, g, StepKind::Strong, cfg)?.verdict())
}

/// The whole (strong) homotopy class of `f`, sorted. `Undecided` when the
/// class is larger than the budget.
pub fn homotopy_class(
    f: &VertexMap<'_>,
    kind: StepKind,
    cfg: &SearchConfig,
) -> Result<Outcome<Vec<Vec<usize>>>> {
    f.require_continuous("f")?;
    let res = bfs(
        f.dom(),
        f.cod(),
        f.values(),
        kind,
        None,
        cfg,
        &|_| false,
        false,
    );
    if res.exhausted {
        return Ok(Outcome::Undecided);
    }
    let mut nodes = res.nodes;
    nodes.sort();
    Ok(Outcome::Found(nodes))
}

/// A nonsurjective continuous `g` with `g(x) ∈ N*(x)` for all `x`, i.e. a
/// nonsurjection homotopic to the identity in one step.
pub fn reducibility_witness(x: &DigitalImage, cfg: &SearchConfig) -> Outcome<Vec<usize>> {
    let n = x.len();
    let mut nodes = 0usize;
    let mut exhausted = false;
    for missing in 0..n {
        let candidates: Vec<Vec<usize>> = x
            .vertices()
            .map(|v| {
                let mut c = x.closed_neighborhood(v);
                c.retain(|&y| y != missing);
                c
            })
            .collect();
        if candidates.iter().any(Vec::is_empty) {
            continue;
        }
        let mut found = None;
        search_maps(
            x,
            x,
            &candidates,
            &mut |_| {
                nodes += 1;
                if nodes > cfg.max_maps {
                    exhausted = true;
                }
                !exhausted
            },
            &mut |g| {
                found = Some(g.to_vec());
                false
            },
        );
        if let Some(g) = found {
            return Outcome::Found(g);
        }
        if exhausted {
            return Outcome::Undecided;
        }
    }
    Outcome::Absent
}

/// Is `X` homotopy equivalent to an image with fewer points? Decided by
/// searching for a nonsurjection homotopic to the identity in one step.
pub fn is_reducible(x: &DigitalImage, cfg: &SearchConfig) -> Verdict {
    reducibility_witness(x, cfg).verdict()
}

/// Does a strong homotopy from `id_X` to the constant map at `x0` exist
/// with every stage fixing `x0`?
pub fn pointed_strongly_contractible(
    x: &DigitalImage,
    x0: usize,
    cfg: &SearchConfig,
) -> Result<Verdict> {
    if x0 >= x.len() {
        return Err(Error::param(format!("basepoint {x0} out of range")));
    }
    let start: Vec<usize> = x.vertices().collect();
    let res = bfs(
        x,
        x,
        &start,
        StepKind::Strong,
        Some((x0, x0)),
        cfg,
        &|m| m.iter().all(|&y| y == x0),
        true,
    );
    Ok(match res.hit {
        Some(_) => Verdict::Yes,
        None if res.exhausted => Verdict::Undecided,
        None => Verdict::No,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::{is_valid_homotopy, is_valid_strong_homotopy, one_step_homotopic};
    use crate::map::continuous_maps;

    fn rot<'a>(c: &'a DigitalImage, d: usize) -> VertexMap<'a> {
        let n = c.len();
        VertexMap::new(c, c, (0..n).map(|i| (i + d) % n).collect()).unwrap()
    }

    #[test]
    fn neighbors_of_c4_identity_match_brute_force() {
        let c4 = DigitalImage::cycle(4).unwrap();
        let id = VertexMap::identity(&c4);
        let listed = homotopy_neighbors(&id).unwrap();
        // oracle: all 4^4 arrays filtered by continuity and pointwise closeness
        let mut brute = Vec::new();
        let mut v = vec![0usize; 4];
        loop {
            let g = id.with_values(v.clone()).unwrap();
            if g.is_continuous() && one_step_homotopic(&id, &g).unwrap() {
                brute.push(v.clone());
            }
            if !crate::image::advance_odometer(&mut v, |_| 4) {
                break;
            }
        }
        assert_eq!(listed, brute);
        assert!(listed.contains(&rot(&c4, 1).into_values()));
        assert!(listed.contains(&vec![1, 0, 3, 2]));
        assert!(!listed.contains(&rot(&c4, 2).into_values()));
    }

    #[test]
    fn cycle_identities_are_strongly_isolated() {
        for n in 4..=7 {
            let c = DigitalImage::cycle(n).unwrap();
            let id = VertexMap::identity(&c);
            assert_eq!(strong_neighbors(&id).unwrap(), vec![id.values().to_vec()]);
        }
    }

    #[test]
    fn complete_codomain_admits_everything() {
        let k4 = DigitalImage::complete(4).unwrap();
        let c0 = VertexMap::constant(&k4, &k4, 0).unwrap();
        assert_eq!(strong_neighbors(&c0).unwrap(), continuous_maps(&k4, &k4));
    }

    #[test]
    fn c4_examples() {
        let c4 = DigitalImage::cycle(4).unwrap();
        let id = VertexMap::identity(&c4);
        let c = VertexMap::constant(&c4, &c4, 0).unwrap();
        let cfg = SearchConfig::default();
        assert_eq!(homotopic(&id, &c, &cfg).unwrap(), Verdict::Yes);
        assert_eq!(strongly_homotopic(&id, &c, &cfg).unwrap(), Verdict::No);
        assert_eq!(strongly_homotopic(&id, &id, &cfg).unwrap(), Verdict::Yes);
        let Outcome::Found(h) = find_homotopy(&id, &c, StepKind::Ordinary, &cfg).unwrap() else {
            panic!("expected a homotopy");
        };
        assert!(is_valid_homotopy(&h, &id, &c));
    }

    #[test]
    fn budget_gives_undecided() {
        let c4 = DigitalImage::cycle(4).unwrap();
        let id = VertexMap::identity(&c4);
        let c = VertexMap::constant(&c4, &c4, 0).unwrap();
        let tiny = SearchConfig {
            max_maps: 2,
            ..Default::default()
        };
        assert_eq!(homotopic(&id, &c, &tiny).unwrap(), Verdict::Undecided);
        assert_eq!(
            homotopy_class(&id, StepKind::Ordinary, &tiny).unwrap(),
            Outcome::Undecided
        );
        assert_eq!(
            is_reducible(&DigitalImage::cycle(7).unwrap(), &tiny),
            Verdict::Undecided
        );
    }

    #[test]
    fn found_strong_homotopies_are_strong() {
        let k4 = DigitalImage::complete(4).unwrap();
        let id = VertexMap::identity(&k4);
        let c = VertexMap::constant(&k4, &k4, 3).unwrap();
        let h = find_homotopy(&id, &c, StepKind::Strong, &SearchConfig::default())
            .unwrap()
            .found()
            .unwrap();
        assert!(is_valid_strong_homotopy(&h));
        assert_eq!(h.k(), 1);
    }

    #[test]
    fn reducibility_examples() {
        let cfg = SearchConfig::default();
        let c4 = DigitalImage::cycle(4).unwrap();
        let w = reducibility_witness(&c4, &cfg).found().unwrap();
        let g = VertexMap::new(&c4, &c4, w).unwrap();
        assert!(g.is_continuous() && !g.is_surjective());
        assert!(one_step_homotopic(&VertexMap::identity(&c4), &g).unwrap());
        assert_eq!(
            is_reducible(&DigitalImage::cycle(5).unwrap(), &cfg),
            Verdict::No
        );
        assert_eq!(is_reducible(&DigitalImage::point(), &cfg), Verdict::No);
    }

    #[test]
    fn pointed_examples() {
        let cfg = SearchConfig::default();
        let k2 = DigitalImage::complete(2).unwrap();
        assert_eq!(
            pointed_strongly_contractible(&k2, 0, &cfg).unwrap(),
            Verdict::Yes
        );
        assert_eq!(
            pointed_strongly_contractible(&k2, 1, &cfg).unwrap(),
            Verdict::Yes
        );
        let pt = DigitalImage::point();
        assert_eq!(
            pointed_strongly_contractible(&pt, 0, &cfg).unwrap(),
            Verdict::Yes
        );
        let c4 = DigitalImage::cycle(4).unwrap();
        assert_eq!(
            pointed_strongly_contractible(&c4, 0, &cfg).unwrap(),
            Verdict::No
        );
        assert!(pointed_strongly_contractible(&c4, 9, &cfg).is_err());
    }

    #[test]
    fn parallel_and_serial_agree() {
        let img =
            DigitalImage::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let id = VertexMap::identity(&img);
        let serial = SearchConfig::default();
        let par = SearchConfig {
            parallel: true,
            ..serial
        };
        for kind in [StepKind::Ordinary, StepKind::Strong] {
            assert_eq!(
                homotopy_class(&id, kind, &serial).unwrap(),
                homotopy_class(&id, kind, &par).unwrap()
            );
            let c = VertexMap::constant(&img, &img, 4).unwrap();
            assert_eq!(
                find_homotopy(&id, &c, kind, &serial).unwrap(),
                find_homotopy(&id, &c, kind, &par).unwrap()
            );
        }
    }
}
