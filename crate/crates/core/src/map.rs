//! Total functions between digital images and digital continuity.

use std::fmt;

use crate::error::{Error, Result};
use crate::image::DigitalImage;

/// A total function `dom -> cod`, stored as the image of each domain vertex.
#[derive(Clone, Debug)]
pub struct VertexMap<'a> {
    dom: &'a DigitalImage,
    cod: &'a DigitalImage,
    values: Vec<usize>,
}

impl PartialEq for VertexMap<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
            && same_image(self.dom, other.dom)
            && same_image(self.cod, other.cod)
    }
}

impl Eq for VertexMap<'_> {}

pub(crate) fn same_image(a: &DigitalImage, b: &DigitalImage) -> bool {
    std::ptr::eq(a, b) || a == b
}

impl<'a> VertexMap<'a> {
    pub fn new(dom: &'a DigitalImage, cod: &'a DigitalImage, values: Vec<usize>) -> Result<Self> {
        if values.len() != dom.len() {
            return Err(Error::param(format!(
                "map has {} values for a domain of {} points",
                values.len(),
                dom.len()
            )));
        }
        if let Some((x, &y)) = values.iter().enumerate().find(|(_, &y)| y >= cod.len()) {
            return Err(Error::param(format!(
                "value {y} at {x} out of range for a codomain of {} points",
                cod.len()
            )));
        }
        Ok(VertexMap { dom, cod, values })
    }

    pub fn identity(x: &'a DigitalImage) -> Self {
        VertexMap {
            dom: x,
            cod: x,
            values: x.vertices().collect(),
        }
    }

    pub fn constant(dom: &'a DigitalImage, cod: &'a DigitalImage, target: usize) -> Result<Self> {
        Self::new(dom, cod, vec![target; dom.len()])
    }

    pub fn dom(&self) -> &'a DigitalImage {
        self.dom
    }

    pub fn cod(&self) -> &'a DigitalImage {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    /// Same domain and codomain, different values.
    pub fn with_values(&self, values: Vec<usize>) -> Result<Self> {
        Self::new(self.dom, self.cod, values)
    }

    pub fn is_continuous(&self) -> bool {
        values_continuous(self.dom, self.cod, &self.values)
    }

    pub fn image_size(&self) -> usize {
        let mut hit = vec![false; self.cod.len()];
        self.values.iter().for_each(|&y| hit[y] = true);
        hit.into_iter().filter(|&h| h).count()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_size() == self.cod.len()
    }

    /// Vertices where the two maps disagree.
    pub fn difference(&self, other: &VertexMap<'_>) -> Vec<usize> {
        self.values
            .iter()
            .zip(&other.values)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(x, _)| x)
            .collect()
    }

    /// `Err(NotContinuous)` naming `what` unless the map is continuous.
    pub fn require_continuous(&self, what: &str) -> Result<()> {
        if self.is_continuous() {
            Ok(())
        } else {
            Err(Error::NotContinuous(format!("{what} {:?}", self.values)))
        }
    }
}

impl fmt::Display for VertexMap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .enumerate()
            .map(|(x, &y)| format!("{}->{}", self.dom.label(x), self.cod.label(y)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn is_continuous(f: &VertexMap<'_>) -> bool {
    f.is_continuous()
}

/// `g ∘ f`.
pub fn compose<'a>(g: &VertexMap<'a>, f: &VertexMap<'a>) -> Result<VertexMap<'a>> {
    if !same_image(f.cod, g.dom) {
        return Err(Error::param("composition needs cod(f) = dom(g)"));
    }
    Ok(VertexMap {
        dom: f.dom,
        cod: g.cod,
        values: f.values.iter().map(|&y| g.values[y]).collect(),
    })
}

pub(crate) fn values_continuous(dom: &DigitalImage, cod: &DigitalImage, values: &[usize]) -> bool {
    dom.edges()
        .all(|(a, b)| cod.adjacent_or_equal(values[a], values[b]))
}

/// Every continuous map `dom -> cod`, as value arrays in lexicographic order.
pub fn continuous_maps(dom: &DigitalImage, cod: &DigitalImage) -> Vec<Vec<usize>> {
    let candidates: Vec<Vec<usize>> = dom.vertices().map(|_| cod.vertices().collect()).collect();
    let mut out = Vec::new();
    search_maps(dom, cod, &candidates, &mut |_: &[usize]| true, &mut |m| {
        out.push(m.to_vec());
        true
    });
    out
}

/// Depth-first search over maps with `values[x] ∈ candidates[x]` that are
/// continuous and pass `accept_partial` on each assigned prefix. `visit`
/// sees every complete map and returns false to stop the search. Returns
/// false if stopped early.
pub(crate) fn search_maps(
    dom: &DigitalImage,
    cod: &DigitalImage,
    candidates: &[Vec<usize>],
    accept_partial: &mut dyn FnMut(&[usize]) -> bool,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = dom.len();
    let mut values = Vec::with_capacity(n);
    fn rec(
        dom: &DigitalImage,
        cod: &DigitalImage,
        candidates: &[Vec<usize>],
        values: &mut Vec<usize>,
        accept_partial: &mut dyn FnMut(&[usize]) -> bool,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let x = values.len();
        if x == dom.len() {
            return visit(values);
        }
        for &y in &candidates[x] {
            let fits = dom
                .neighbors(x)
                .iter()
                .take_while(|&&w| w < x)
                .all(|&w| cod.adjacent_or_equal(values[w], y));
            if !fits {
                continue;
            }
            values.push(y);
            let keep_going =
                !accept_partial(values) || rec(dom, cod, candidates, values, accept_partial, visit);
            values.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    if n == 0 {
        return visit(&values);
    }
    rec(dom, cod, candidates, &mut values, accept_partial, visit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn continuity_examples() {
        let c4 = DigitalImage::cycle(4).unwrap();
        assert!(VertexMap::identity(&c4).is_continuous());
        let c5 = DigitalImage::cycle(5).unwrap();
        let pt = DigitalImage::point();
        assert!(VertexMap::constant(&c5, &pt, 0).unwrap().is_continuous());
        let i2 = DigitalImage::interval(0, 2).unwrap();
        let f = VertexMap::new(&i2, &i2, vec![0, 2, 2]).unwrap();
        assert!(!is_continuous(&f));
    }

    #[test]
    fn totality_enforced() {
        let c4 = DigitalImage::cycle(4).unwrap();
        assert!(VertexMap::new(&c4, &c4, vec![0, 1, 2]).is_err());
        assert!(VertexMap::new(&c4, &c4, vec![0, 1, 2, 4]).is_err());
    }

    #[test]
    fn composition() {
        let c5 = DigitalImage::cycle(5).unwrap();
        let id = VertexMap::identity(&c5);
        let r1 = VertexMap::new(&c5, &c5, (0..5).map(|i| (i + 1) % 5).collect()).unwrap();
        let r2 = VertexMap::new(&c5, &c5, (0..5).map(|i| (i + 2) % 5).collect()).unwrap();
        assert_eq!(compose(&id, &r1).unwrap(), r1);
        assert_eq!(compose(&r1, &id).unwrap(), r1);
        assert_eq!(compose(&r1, &r1).unwrap(), r2);
        let pt = DigitalImage::point();
        let c = VertexMap::constant(&c5, &pt, 0).unwrap();
        assert!(compose(&r1, &c).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let c5 = DigitalImage::cycle(5).unwrap();
        let listed = continuous_maps(&c5, &c5);
        let mut brute = Vec::new();
        let mut v = vec![0usize; 5];
        loop {
            if values_continuous(&c5, &c5, &v) {
                brute.push(v.clone());
            }
            if !crate::image::advance_odometer(&mut v, |_| 5) {
                break;
            }
        }
        assert_eq!(listed, brute);
        // constants (5) + rotations (5) + flips (5) + the rest
        assert!(listed.len() > 15);
    }
}
