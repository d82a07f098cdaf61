//! Homotopies between continuous maps of digital images.
//!
//! A homotopy `H: X × [0,k] -> Y` is stored as its stage maps
//! `H_0, ..., H_k`. It is an ordinary homotopy when it is continuous for the
//! `NP_1` adjacency on `X × [0,k]`, and a strong homotopy for `NP_2`. Both
//! conditions are available in two forms: literally, via the product image,
//! and stagewise, via adjacency conditions between consecutive stages.

mod reduction;
mod search;

pub use reduction::{
    backtracking_contraction_ordering, greedy_contraction_ordering, is_strongly_contractible,
    is_strongly_reducible, strong_contraction_ordering, strong_core, ContractionOrdering,
    StrongCore,
};
pub use search::{
    find_homotopy, homotopic, homotopy_class, homotopy_neighbors, is_reducible,
    pointed_strongly_contractible, reducibility_witness, strong_neighbors, strongly_homotopic,
    Outcome, SearchConfig, StepKind, Verdict,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::DigitalImage;
use crate::map::{same_image, values_continuous, VertexMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homotopy<'a> {
    dom: &'a DigitalImage,
    cod: &'a DigitalImage,
    stages: Vec<Vec<usize>>,
}

/// JSON shape of a homotopy: `{"k": k, "stages": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomotopyRecord {
    pub k: usize,
    pub stages: Vec<Vec<usize>>,
}

/// Why a stage sequence fails to be a homotopy from `f` to `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomotopyDefect {
    StartMismatch,
    EndMismatch,
    /// Stage `t` is not a continuous map.
    StageDiscontinuous {
        t: usize,
    },
    /// `H(x, t)` and `H(x, t + 1)` are neither equal nor adjacent.
    TimeDiscontinuous {
        x: usize,
        t: usize,
    },
}

impl<'a> Homotopy<'a> {
    pub fn new(
        dom: &'a DigitalImage,
        cod: &'a DigitalImage,
        stages: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if stages.is_empty() {
            return Err(Error::param("a homotopy needs at least one stage"));
        }
        for (t, s) in stages.iter().enumerate() {
            if s.len() != dom.len() || s.iter().any(|&y| y >= cod.len()) {
                return Err(Error::param(format!(
                    "stage {t} is not a total map dom -> cod"
                )));
            }
        }
        Ok(Homotopy { dom, cod, stages })
    }

    pub fn from_maps(maps: &[VertexMap<'a>]) -> Result<Self> {
        let first = maps
            .first()
            .ok_or_else(|| Error::param("a homotopy needs at least one stage"))?;
        if maps
            .iter()
            .any(|m| !same_image(m.dom(), first.dom()) || !same_image(m.cod(), first.cod()))
        {
            return Err(Error::param("stages must share domain and codomain"));
        }
        Self::new(
            first.dom(),
            first.cod(),
            maps.iter().map(|m| m.values().to_vec()).collect(),
        )
    }

    /// `f` held fixed for `k` time steps.
    pub fn constant(f: &VertexMap<'a>, k: usize) -> Self {
        Homotopy {
            dom: f.dom(),
            cod: f.cod(),
            stages: vec![f.values().to_vec(); k + 1],
        }
    }

    pub fn from_record(
        dom: &'a DigitalImage,
        cod: &'a DigitalImage,
        rec: HomotopyRecord,
    ) -> Result<Self> {
        if rec.stages.len() != rec.k + 1 {
            return Err(Error::param(format!(
                "k = {} but {} stages given",
                rec.k,
                rec.stages.len()
            )));
        }
        Self::new(dom, cod, rec.stages)
    }

    pub fn to_record(&self) -> HomotopyRecord {
        HomotopyRecord {
            k: self.k(),
            stages: self.stages.clone(),
        }
    }

    pub fn dom(&self) -> &'a DigitalImage {
        self.dom
    }

    pub fn cod(&self) -> &'a DigitalImage {
        self.cod
    }

    /// Time bound: stages are indexed `0..=k`.
    pub fn k(&self) -> usize {
        self.stages.len() - 1
    }

    pub fn stages(&self) -> &[Vec<usize>] {
        &self.stages
    }

    pub fn stage(&self, t: usize) -> VertexMap<'a> {
        VertexMap::new(self.dom, self.cod, self.stages[t].clone()).expect("stages are total")
    }

    pub fn start(&self) -> VertexMap<'a> {
        self.stage(0)
    }

    pub fn end(&self) -> VertexMap<'a> {
        self.stage(self.k())
    }

    pub fn at(&self, x: usize, t: usize) -> usize {
        self.stages[t][x]
    }

    /// `H` as a single map on `dom × [0,k]` with `NP_u` adjacency. Product
    /// vertex `(x, t)` has index `x * (k + 1) + t`.
    pub fn as_product_map(&self, u: usize) -> Result<(DigitalImage, Vec<usize>)> {
        let time = DigitalImage::interval(0, self.k() as i64)?;
        let prod = DigitalImage::product(&[self.dom.clone(), time], u)?;
        let steps = self.k() + 1;
        let values = (0..prod.len())
            .map(|i| self.stages[i % steps][i / steps])
            .collect();
        Ok((prod, values))
    }

    /// Drops stages equal to their predecessor.
    pub fn without_repeated_stages(&self) -> Homotopy<'a> {
        let mut stages = self.stages.clone();
        stages.dedup();
        Homotopy {
            dom: self.dom,
            cod: self.cod,
            stages,
        }
    }
}

/// Literal check: `H` is continuous on `dom × [0,k]` with `NP_1` adjacency.
pub fn is_homotopy_via_product(h: &Homotopy<'_>) -> bool {
    product_continuous(h, 1)
}

/// Literal check: `H` is continuous on `dom × [0,k]` with `NP_2` adjacency.
pub fn is_strong_homotopy_via_product(h: &Homotopy<'_>) -> bool {
    product_continuous(h, 2)
}

fn product_continuous(h: &Homotopy<'_>, u: usize) -> bool {
    let (prod, values) = h
        .as_product_map(u)
        .expect("product of a nonempty image and an interval");
    values_continuous(&prod, h.cod, &values)
}

/// Stagewise check that `h` is a homotopy from `f` to `g`: endpoints match,
/// every stage is continuous, and each point moves to an adjacent-or-equal
/// point between consecutive stages.
pub fn check_homotopy(
    h: &Homotopy<'_>,
    f: &VertexMap<'_>,
    g: &VertexMap<'_>,
) -> std::result::Result<(), HomotopyDefect> {
    if h.stages[0] != f.values() {
        return Err(HomotopyDefect::StartMismatch);
    }
    if h.stages[h.k()] != g.values() {
        return Err(HomotopyDefect::EndMismatch);
    }
    check_stages(h)
}

fn check_stages(h: &Homotopy<'_>) -> std::result::Result<(), HomotopyDefect> {
    for (t, s) in h.stages.iter().enumerate() {
        if !values_continuous(h.dom, h.cod, s) {
            return Err(HomotopyDefect::StageDiscontinuous { t });
        }
    }
    for (t, w) in h.stages.windows(2).enumerate() {
        if let Some(x) = (0..h.dom.len()).find(|&x| !h.cod.adjacent_or_equal(w[0][x], w[1][x])) {
            return Err(HomotopyDefect::TimeDiscontinuous { x, t });
        }
    }
    Ok(())
}

pub fn is_valid_homotopy(h: &Homotopy<'_>, f: &VertexMap<'_>, g: &VertexMap<'_>) -> bool {
    check_homotopy(h, f, g).is_ok()
}

/// Stagewise strong check: every stage continuous and each consecutive
/// pair strongly homotopic in one step.
pub fn is_valid_strong_homotopy(h: &Homotopy<'_>) -> bool {
    h.stages.iter().all(|s| values_continuous(h.dom, h.cod, s))
        && h.stages
            .windows(2)
            .all(|w| strong_step(h.dom, h.cod, &w[0], &w[1]))
}

/// `f(x)` adjacent-or-equal to `g(x)` for every `x`.
pub(crate) fn pointwise_step(cod: &DigitalImage, f: &[usize], g: &[usize]) -> bool {
    f.iter().zip(g).all(|(&a, &b)| cod.adjacent_or_equal(a, b))
}

/// `f(x)` adjacent-or-equal to `g(x')` whenever `x` and `x'` are adjacent
/// or equal. The `x = x'` case is part of `NP_2` continuity and is not
/// implied by the edge condition alone.
pub(crate) fn strong_step(
    dom: &DigitalImage,
    cod: &DigitalImage,
    f: &[usize],
    g: &[usize],
) -> bool {
    pointwise_step(cod, f, g)
        && dom
            .edges()
            .all(|(a, b)| cod.adjacent_or_equal(f[a], g[b]) && cod.adjacent_or_equal(f[b], g[a]))
}

fn require_pair(f: &VertexMap<'_>, g: &VertexMap<'_>) -> Result<()> {
    if !same_image(f.dom(), g.dom()) || !same_image(f.cod(), g.cod()) {
        return Err(Error::param("maps must share domain and codomain"));
    }
    f.require_continuous("f")?;
    g.require_continuous("g")
}

/// Homotopic in one step: pointwise adjacent-or-equal.
pub fn one_step_homotopic(f: &VertexMap<'_>, g: &VertexMap<'_>) -> Result<bool> {
    require_pair(f, g)?;
    Ok(pointwise_step(f.cod(), f.values(), g.values()))
}

/// Strongly homotopic in one step.
pub fn one_step_strong_homotopic(f: &VertexMap<'_>, g: &VertexMap<'_>) -> Result<bool> {
    require_pair(f, g)?;
    Ok(strong_step(f.dom(), f.cod(), f.values(), g.values()))
}

/// `t -> k - t`.
pub fn reverse<'a>(h: &Homotopy<'a>) -> Homotopy<'a> {
    let mut stages = h.stages.clone();
    stages.reverse();
    Homotopy {
        dom: h.dom,
        cod: h.cod,
        stages,
    }
}

/// Runs `h` on `[0, k]` and then `g` on `[k+1, k+l+1]`. The seam requires
/// the last stage of `h` to equal the first stage of `g`.
pub fn concatenate<'a>(h: &Homotopy<'a>, g: &Homotopy<'a>) -> Result<Homotopy<'a>> {
    if !same_image(h.dom, g.dom) || !same_image(h.cod, g.cod) {
        return Err(Error::param("homotopies must share domain and codomain"));
    }
    if h.stages[h.k()] != g.stages[0] {
        return Err(Error::param(
            "last stage of the first homotopy differs from the first stage of the second",
        ));
    }
    let mut stages = h.stages.clone();
    stages.extend(g.stages.iter().cloned());
    Ok(Homotopy {
        dom: h.dom,
        cod: h.cod,
        stages,
    })
}

/// Consecutive stages differ at no more than one point.
pub fn is_punctuated(h: &Homotopy<'_>) -> bool {
    h.stages
        .windows(2)
        .all(|w| w[0].iter().zip(&w[1]).filter(|(a, b)| a != b).count() <= 1)
}

/// Spreads a one-step strong homotopy over `n = #dom` steps so that
/// exactly the point `x_i` switches from `f` to `g` between stages `i` and
/// `i + 1`: `H(x_i, t) = f(x_i)` for `i >= t`, else `g(x_i)`.
pub fn puncturate_one_step<'a>(f: &VertexMap<'a>, g: &VertexMap<'a>) -> Result<Homotopy<'a>> {
    if !one_step_strong_homotopic(f, g)? {
        return Err(Error::Precondition(
            "maps are not strongly homotopic in one step".into(),
        ));
    }
    let n = f.dom().len();
    let stages = (0..=n)
        .map(|t| {
            (0..n)
                .map(|i| if i >= t { f.apply(i) } else { g.apply(i) })
                .collect()
        })
        .collect();
    Ok(Homotopy {
        dom: f.dom(),
        cod: f.cod(),
        stages,
    })
}
