//! Dominated vertices, strong cores and strong contraction orderings.
//!
//! A point `x` is dominated by `y ≠ x` when `N*(x) ⊆ N*(y)`. Sending `x` to
//! `y` and fixing everything else is strongly homotopic to the identity in
//! one step, so deleting dominated points never changes the strong homotopy
//! type. All choices break ties by least vertex index.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::image::{DigitalImage, Translation};

/// Least `(x, y)` in lexicographic order with `x ≠ y` and `N*(x) ⊆ N*(y)`.
pub fn is_strongly_reducible(x: &DigitalImage) -> Option<(usize, usize)> {
    x.vertices().find_map(|a| {
        x.vertices()
            .find(|&b| b != a && x.closed_neighborhood_within(a, b))
            .map(|b| (a, b))
    })
}

/// `N*(x) ∩ R ⊆ N*(y) ∩ R`, where `R` is the set flagged in `alive`.
fn dominated_in(img: &DigitalImage, alive: &[bool], x: usize, y: usize) -> bool {
    img.adjacent_or_equal(x, y)
        && img
            .neighbors(x)
            .iter()
            .all(|&w| !alive[w] || w == y || img.is_adjacent(w, y))
}

fn least_dominator(img: &DigitalImage, alive: &[bool], x: usize) -> Option<usize> {
    img.vertices()
        .find(|&y| y != x && alive[y] && dominated_in(img, alive, x, y))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCore {
    pub image: DigitalImage,
    /// Core vertex `i` is original vertex `translation.new_to_old[i]`.
    pub translation: Translation,
    /// Deleted points in order, each with the point it was sent to
    /// (original indices).
    pub removed: Vec<(usize, usize)>,
    /// Retraction of the original image onto the core, as original vertex
    /// to core vertex. Strongly homotopic to the identity after inclusion.
    pub retraction: Vec<usize>,
}

/// Deletes the least dominated point until none is left.
pub fn strong_core(x: &DigitalImage) -> StrongCore {
    let n = x.len();
    let mut alive = vec![true; n];
    let mut removed = Vec::new();
    let mut sent: Vec<usize> = x.vertices().collect();
    'outer: loop {
        for a in x.vertices().filter(|&a| alive[a]) {
            if let Some(b) = least_dominator(x, &alive, a) {
                alive[a] = false;
                removed.push((a, b));
                for s in sent.iter_mut().filter(|s| **s == a) {
                    *s = b;
                }
                continue 'outer;
            }
        }
        break;
    }
    let keep: Vec<usize> = x.vertices().filter(|&v| alive[v]).collect();
    let (image, translation) = x.subimage(&keep).expect("a core keeps at least one point");
    let retraction = sent
        .iter()
        .map(|&s| translation.old_to_new[s].expect("points are sent to survivors"))
        .collect();
    StrongCore {
        image,
        translation,
        removed,
        retraction,
    }
}

/// A deletion order `x_1, ..., x_n` in which every `x_i` (`i < n`) is
/// dominated within `X_i = {x_i, ..., x_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionOrdering {
    pub order: Vec<usize>,
    /// `witnesses[i]` dominates `order[i]` in `X_i`; one entry per `i < n-1`.
    pub witnesses: Vec<usize>,
}

impl ContractionOrdering {
    /// Checks `order` and attaches least-index witnesses.
    pub fn from_order(x: &DigitalImage, order: Vec<usize>) -> Result<Self> {
        let n = x.len();
        let mut seen = vec![false; n];
        if order.len() != n
            || order
                .iter()
                .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
        {
            return Err(Error::param(
                "ordering must be a permutation of the vertices",
            ));
        }
        let mut alive = vec![true; n];
        let mut witnesses = Vec::with_capacity(n.saturating_sub(1));
        for &v in &order[..n - 1] {
            let w = order_witness(x, &alive, &order, v).ok_or_else(|| {
                Error::param(format!(
                    "{} is not dominated when it is deleted",
                    x.label(v)
                ))
            })?;
            witnesses.push(w);
            alive[v] = false;
        }
        Ok(ContractionOrdering { order, witnesses })
    }

    /// Rechecks every inclusion against `x`.
    pub fn is_valid_for(&self, x: &DigitalImage) -> bool {
        let n = x.len();
        if self.order.len() != n || self.witnesses.len() != n.saturating_sub(1) {
            return false;
        }
        let mut alive = vec![true; n];
        for (i, (&v, &w)) in self.order.iter().zip(&self.witnesses).enumerate() {
            let later = self.order[i + 1..].contains(&w);
            if !later || !dominated_in(x, &alive, v, w) {
                return false;
            }
            alive[v] = false;
        }
        true
    }

    /// `N*_{X_i}(order[i]) ⊆ N*_{X_i}(y)`.
    pub fn inclusion_holds(x: &DigitalImage, order: &[usize], i: usize, y: usize) -> bool {
        let mut alive = vec![false; x.len()];
        for &v in &order[i..] {
            alive[v] = true;
        }
        alive[y] && y != order[i] && dominated_in(x, &alive, order[i], y)
    }
}

/// Least-index witness for `v` among points alive after it in `order`.
fn order_witness(x: &DigitalImage, alive: &[bool], order: &[usize], v: usize) -> Option<usize> {
    let pos = order.iter().position(|&w| w == v)?;
    let later: HashSet<usize> = order[pos + 1..].iter().copied().collect();
    x.vertices()
        .find(|&y| later.contains(&y) && alive[y] && dominated_in(x, alive, v, y))
}

fn finish(x: &DigitalImage, order: Vec<usize>) -> ContractionOrdering {
    ContractionOrdering::from_order(x, order).expect("search only emits dominated deletions")
}

/// Repeatedly deletes the least-index dominated point. `None` if this
/// stalls with more than one point left.
pub fn greedy_contraction_ordering(x: &DigitalImage) -> Option<ContractionOrdering> {
    let n = x.len();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 1..n {
        let v = x
            .vertices()
            .find(|&v| alive[v] && least_dominator(x, &alive, v).is_some())?;
        alive[v] = false;
        order.push(v);
    }
    order.extend(x.vertices().filter(|&v| alive[v]));
    Some(finish(x, order))
}

/// Exhaustive search over all dominated-point choices, remembering
/// remaining sets already known to be dead ends.
pub fn backtracking_contraction_ordering(x: &DigitalImage) -> Option<ContractionOrdering> {
    fn rec(
        x: &DigitalImage,
        alive: &mut Vec<bool>,
        left: usize,
        order: &mut Vec<usize>,
        failed: &mut HashSet<Vec<bool>>,
    ) -> bool {
        if left == 1 {
            return true;
        }
        if failed.contains(alive) {
            return false;
        }
        for v in x.vertices() {
            if alive[v] && least_dominator(x, alive, v).is_some() {
                alive[v] = false;
                order.push(v);
                if rec(x, alive, left - 1, order, failed) {
                    return true;
                }
                order.pop();
                alive[v] = true;
            }
        }
        failed.insert(alive.clone());
        false
    }
    let n = x.len();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    if !rec(x, &mut alive, n, &mut order, &mut HashSet::new()) {
        return None;
    }
    order.extend(x.vertices().filter(|&v| alive[v]));
    Some(finish(x, order))
}

/// Greedy first; backtracking if greedy stalls. A disagreement (greedy
/// stalls but backtracking succeeds) is logged.
pub fn strong_contraction_ordering(x: &DigitalImage) -> Option<ContractionOrdering> {
    if let Some(o) = greedy_contraction_ordering(x) {
        return Some(o);
    }
    let found = backtracking_contraction_ordering(x);
    if found.is_some() {
        log::warn!("greedy dismantling stalled on an image that admits an ordering");
    }
    found
}

pub fn is_strongly_contractible(x: &DigitalImage) -> bool {
    strong_contraction_ordering(x).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::{one_step_strong_homotopic, strongly_homotopic, SearchConfig, Verdict};
    use crate::map::VertexMap;

    #[test]
    fn reducibility_witnesses() {
        assert_eq!(
            is_strongly_reducible(&DigitalImage::complete(2).unwrap()),
            Some((0, 1))
        );
        assert_eq!(is_strongly_reducible(&DigitalImage::point()), None);
        for n in 4..=9 {
            assert_eq!(
                is_strongly_reducible(&DigitalImage::cycle(n).unwrap()),
                None
            );
        }
        let path = DigitalImage::interval(0, 3).unwrap();
        assert_eq!(is_strongly_reducible(&path), Some((0, 1)));
    }

    #[test]
    fn cores() {
        let k5 = strong_core(&DigitalImage::complete(5).unwrap());
        assert_eq!(k5.image.len(), 1);
        assert_eq!(k5.retraction, vec![0; 5]);
        let c4 = DigitalImage::cycle(4).unwrap();
        let core = strong_core(&c4);
        assert_eq!(core.image, c4);
        assert!(core.removed.is_empty());
        // C_4 with a pendant point: the pendant point is absorbed
        let g = DigitalImage::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let core = strong_core(&g);
        assert_eq!(core.removed, vec![(4, 0)]);
        assert_eq!(core.translation.new_to_old, vec![0, 1, 2, 3]);
        assert_eq!(core.retraction, vec![0, 1, 2, 3, 0]);
    }

    #[test]
    fn core_retraction_is_one_step_strong_deformation_per_deletion() {
        let g =
            DigitalImage::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let core = strong_core(&g);
        assert_eq!(core.image.len(), 1);
        let mut current: Vec<usize> = g.vertices().collect();
        for &(a, b) in &core.removed {
            let next: Vec<usize> = current
                .iter()
                .map(|&v| if v == a { b } else { v })
                .collect();
            let f = VertexMap::new(&g, &g, current.clone()).unwrap();
            let h = VertexMap::new(&g, &g, next.clone()).unwrap();
            assert!(h.is_continuous());
            assert!(one_step_strong_homotopic(&f, &h).unwrap());
            current = next;
        }
    }

    #[test]
    fn orderings() {
        let k4 = DigitalImage::complete(4).unwrap();
        let o = strong_contraction_ordering(&k4).unwrap();
        assert_eq!(o.order, vec![0, 1, 2, 3]);
        assert_eq!(o.witnesses, vec![1, 2, 3]);
        assert!(o.is_valid_for(&k4));
        let pt = strong_contraction_ordering(&DigitalImage::point()).unwrap();
        assert_eq!(pt.order, vec![0]);
        assert!(pt.witnesses.is_empty());
        assert!(strong_contraction_ordering(&DigitalImage::cycle(4).unwrap()).is_none());
        assert!(!is_strongly_contractible(&DigitalImage::cycle(4).unwrap()));
        assert!(ContractionOrdering::from_order(&k4, vec![0, 1, 2]).is_err());
        let c4 = DigitalImage::cycle(4).unwrap();
        assert!(ContractionOrdering::from_order(&c4, vec![0, 1, 2, 3]).is_err());
    }

    #[test]
    fn greedy_and_backtracking_agree_on_small_cases() {
        let cases = [
            DigitalImage::interval(0, 5).unwrap(),
            DigitalImage::cycle(5).unwrap(),
            DigitalImage::complete_bipartite(2, 3).unwrap(),
            DigitalImage::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 4)]).unwrap(),
        ];
        for g in &cases {
            assert_eq!(
                greedy_contraction_ordering(g).is_some(),
                backtracking_contraction_ordering(g).is_some()
            );
            if let Some(o) = backtracking_contraction_ordering(g) {
                assert!(o.is_valid_for(g));
            }
        }
    }

    #[test]
    fn contractible_matches_map_search() {
        let cfg = SearchConfig::default();
        let cases = [
            DigitalImage::interval(0, 3).unwrap(),
            DigitalImage::cycle(4).unwrap(),
            DigitalImage::complete(3).unwrap(),
            DigitalImage::complete_bipartite(1, 3).unwrap(),
        ];
        for g in &cases {
            let id = VertexMap::identity(g);
            let c = VertexMap::constant(g, g, 0).unwrap();
            let bfs = strongly_homotopic(&id, &c, &cfg).unwrap();
            assert_eq!(bfs, Verdict::from_bool(is_strongly_contractible(g)));
        }
    }
}
