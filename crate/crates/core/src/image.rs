//! Finite digital images, stored as simple graphs.
//!
//! A [`DigitalImage`] is a nonempty vertex set `0..n` with a symmetric,
//! irreflexive adjacency relation. Images are immutable once built; every
//! reduction produces a new image together with a [`Translation`] between
//! the old and new vertex indices.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct DigitalImage {
    adj: Vec<Vec<usize>>,
    // row-major n x n adjacency matrix, kept alongside the lists for O(1) lookups
    matrix: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl PartialEq for DigitalImage {
    /// Labels are cosmetic; two images are equal when their adjacency agrees.
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for DigitalImage {}

/// Vertex bookkeeping between an image and one of its subimages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Translation {
    /// `new_to_old[i]` is the original index of subimage vertex `i`.
    pub new_to_old: Vec<usize>,
    /// `old_to_new[v]` is `Some(i)` when original vertex `v` survives as `i`.
    pub old_to_new: Vec<Option<usize>>,
}

impl Translation {
    pub fn identity(n: usize) -> Self {
        Translation {
            new_to_old: (0..n).collect(),
            old_to_new: (0..n).map(Some).collect(),
        }
    }

    /// Composes `self` (X -> X') with `next` (X' -> X'') into X -> X''.
    pub fn then(&self, next: &Translation) -> Translation {
        Translation {
            new_to_old: next
                .new_to_old
                .iter()
                .map(|&i| self.new_to_old[i])
                .collect(),
            old_to_new: self
                .old_to_new
                .iter()
                .map(|o| o.and_then(|i| next.old_to_new[i]))
                .collect(),
        }
    }
}

impl DigitalImage {
    /// Builds an image on `n` vertices from an edge list. Duplicate edges are
    /// merged; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::param("digital images must have at least one point"));
        }
        let mut matrix = vec![false; n * n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::param(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::param(format!("loop at vertex {a}")));
            }
            matrix[a * n + b] = true;
            matrix[b * n + a] = true;
        }
        Ok(Self::from_matrix_unchecked(n, matrix))
    }

    /// Builds an image from per-vertex neighbor lists, which must already
    /// describe a symmetric irreflexive relation.
    pub fn from_adjacency_lists(lists: Vec<Vec<usize>>) -> Result<Self> {
        let n = lists.len();
        if n == 0 {
            return Err(Error::param("digital images must have at least one point"));
        }
        let mut matrix = vec![false; n * n];
        for (a, nbrs) in lists.iter().enumerate() {
            for &b in nbrs {
                if b >= n {
                    return Err(Error::param(format!("neighbor {b} of {a} out of range")));
                }
                if a == b {
                    return Err(Error::param(format!("loop at vertex {a}")));
                }
                matrix[a * n + b] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if matrix[a * n + b] != matrix[b * n + a] {
                    return Err(Error::param(format!(
                        "adjacency is not symmetric between {a} and {b}"
                    )));
                }
            }
        }
        Ok(Self::from_matrix_unchecked(n, matrix))
    }

    fn from_matrix_unchecked(n: usize, matrix: Vec<bool>) -> Self {
        let adj = (0..n)
            .map(|a| (0..n).filter(|&b| matrix[a * n + b]).collect())
            .collect();
        DigitalImage {
            adj,
            matrix,
            labels: None,
        }
    }

    pub fn point() -> Self {
        Self::from_matrix_unchecked(1, vec![false])
    }

    /// `n` points with no adjacencies.
    pub fn discrete(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    /// The digital interval `[a, b]` with `c_1` adjacency.
    pub fn interval(a: i64, b: i64) -> Result<Self> {
        if a > b {
            return Err(Error::param(format!("empty interval [{a}, {b}]")));
        }
        let n = usize::try_from(b - a + 1).map_err(|_| Error::param("interval too long"))?;
        let img = Self::from_edges(n, (1..n).map(|i| (i - 1, i)))?;
        img.with_labels((a..=b).map(|t| t.to_string()).collect())
    }

    /// The digital cycle `C_n` with `c_i <-> c_{i+1}` (indices mod `n`).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
        }
        let img = Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?;
        img.with_labels((0..n).map(|i| format!("c_{i}")).collect())
    }

    /// Complete bipartite graph `K_{a,b}`; the first `a` vertices form one side.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Self::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
    }

    /// Normal product `NP_u` of the factors. Vertex tuples are encoded
    /// row-major, so the last factor varies fastest.
    pub fn product(factors: &[DigitalImage], u: usize) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::param("product needs at least one factor"));
        }
        if u < 1 || u > factors.len() {
            return Err(Error::param(format!(
                "NP_u needs 1 <= u <= {}, got {u}",
                factors.len()
            )));
        }
        let dims: Vec<usize> = factors.iter().map(|f| f.len()).collect();
        let total = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::param("product too large"))?;
        let mut matrix = vec![false; total * total];
        let mut labels = Vec::with_capacity(total);
        for idx in 0..total {
            let coords = decode_tuple(idx, &dims);
            labels.push(format!(
                "({})",
                coords
                    .iter()
                    .zip(factors)
                    .map(|(&c, f)| f.label(c))
                    .collect::<Vec<_>>()
                    .join(",")
            ));
            let closed: Vec<Vec<usize>> = coords
                .iter()
                .zip(factors)
                .map(|(&c, f)| f.closed_neighborhood(c))
                .collect();
            // walk the product of closed neighborhoods
            let mut pick = vec![0usize; dims.len()];
            loop {
                let other: Vec<usize> = pick.iter().zip(&closed).map(|(&p, c)| c[p]).collect();
                let moved = other.iter().zip(&coords).filter(|(a, b)| a != b).count();
                if moved >= 1 && moved <= u {
                    matrix[idx * total + encode_tuple(&other, &dims)] = true;
                }
                if !advance_odometer(&mut pick, |k| closed[k].len()) {
                    break;
                }
            }
        }
        let img = Self::from_matrix_unchecked(total, matrix);
        img.with_labels(labels)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::param(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    /// Always false; empty images cannot be constructed.
    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.matrix[a * self.len() + b]
    }

    #[inline]
    pub fn adjacent_or_equal(&self, a: usize, b: usize) -> bool {
        a == b || self.is_adjacent(a, b)
    }

    /// `N*(v)`: the vertex together with its neighbors, ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let mut placed = false;
        for &w in &self.adj[v] {
            if !placed && w > v {
                out.push(v);
                placed = true;
            }
            out.push(w);
        }
        if !placed {
            out.push(v);
        }
        out
    }

    /// Is `N*(x) ⊆ N*(y)`?
    pub fn closed_neighborhood_within(&self, x: usize, y: usize) -> bool {
        self.adjacent_or_equal(x, y) && self.adj[x].iter().all(|&w| self.adjacent_or_equal(w, y))
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| nbrs.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Component index per vertex, numbered in order of least vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// The full subimage on `keep` (any order; duplicates rejected).
    /// Subimage vertex `i` is `keep[i]` after sorting ascending.
    pub fn subimage(&self, keep: &[usize]) -> Result<(DigitalImage, Translation)> {
        let n = self.len();
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if kept.len() != keep.len() {
            return Err(Error::param("duplicate vertices in subimage selection"));
        }
        if kept.last().is_some_and(|&v| v >= n) {
            return Err(Error::param("subimage vertex out of range"));
        }
        let mut old_to_new = vec![None; n];
        for (i, &v) in kept.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let m = kept.len();
        if m == 0 {
            return Err(Error::param("digital images must have at least one point"));
        }
        let mut matrix = vec![false; m * m];
        for (i, &a) in kept.iter().enumerate() {
            for (j, &b) in kept.iter().enumerate() {
                matrix[i * m + j] = self.is_adjacent(a, b);
            }
        }
        let mut img = Self::from_matrix_unchecked(m, matrix);
        if let Some(labels) = &self.labels {
            img.labels = Some(kept.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok((
            img,
            Translation {
                new_to_old: kept,
                old_to_new,
            },
        ))
    }

    pub fn remove_vertex(&self, v: usize) -> Result<(DigitalImage, Translation)> {
        if v >= self.len() {
            return Err(Error::param(format!("vertex {v} out of range")));
        }
        let keep: Vec<usize> = self.vertices().filter(|&w| w != v).collect();
        self.subimage(&keep)
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<DigitalImage> {
        let n = self.len();
        if perm.len() != n {
            return Err(Error::param("permutation length mismatch"));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::param("not a permutation"));
            }
        }
        let img = Self::from_edges(n, self.edges().map(|(a, b)| (perm[a], perm[b])))?;
        match &self.labels {
            Some(labels) => {
                let mut new_labels = vec![String::new(); n];
                for (v, l) in labels.iter().enumerate() {
                    new_labels[perm[v]] = l.clone();
                }
                img.with_labels(new_labels)
            }
            None => Ok(img),
        }
    }
}

/// Steps a mixed-radix counter; false once it wraps around to all zeros.
pub(crate) fn advance_odometer(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for k in (0..digits.len()).rev() {
        digits[k] += 1;
        if digits[k] < radix(k) {
            return true;
        }
        digits[k] = 0;
    }
    false
}

pub(crate) fn decode_tuple(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = idx % dims[k];
        idx /= dims[k];
    }
    out
}

pub(crate) fn encode_tuple(coords: &[usize], dims: &[usize]) -> usize {
    coords.iter().zip(dims).fold(0, |acc, (&c, &d)| acc * d + c)
}

impl fmt::Display for DigitalImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} points, {} edges:", self.len(), self.edge_count())?;
        for (a, b) in self.edges() {
            write!(f, " {}-{}", self.label(a), self.label(b))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_well_formed(img: &DigitalImage) {
        for a in img.vertices() {
            assert!(!img.is_adjacent(a, a));
            assert!(img.neighbors(a).windows(2).all(|w| w[0] < w[1]));
            for b in img.vertices() {
                assert_eq!(img.is_adjacent(a, b), img.is_adjacent(b, a));
                assert_eq!(img.is_adjacent(a, b), img.neighbors(a).contains(&b));
            }
        }
    }

    #[test]
    fn interval_shapes() {
        let p = DigitalImage::interval(0, 0).unwrap();
        assert_eq!((p.len(), p.edge_count()), (1, 0));
        let e = DigitalImage::interval(0, 1).unwrap();
        assert_eq!((e.len(), e.edge_count()), (2, 1));
        let path = DigitalImage::interval(0, 4).unwrap();
        assert_eq!(path.edge_count(), 4);
        assert!(!path.is_adjacent(0, 2));
        assert_eq!(path.label(3), "3");
        assert!(DigitalImage::interval(2, 1).is_err());
        assert_eq!(DigitalImage::interval(-2, 2).unwrap().label(0), "-2");
    }

    #[test]
    fn cycle_shapes() {
        let c4 = DigitalImage::cycle(4).unwrap();
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
        assert!(c4.is_adjacent(0, 3));
        assert_eq!(
            DigitalImage::cycle(3).unwrap(),
            DigitalImage::complete(3).unwrap()
        );
        assert!(!DigitalImage::cycle(6).unwrap().is_adjacent(0, 3));
        assert!(DigitalImage::cycle(2).is_err());
        assert_well_formed(&c4);
    }

    #[test]
    fn closed_neighborhoods() {
        let c4 = DigitalImage::cycle(4).unwrap();
        assert_eq!(c4.closed_neighborhood(0), vec![0, 1, 3]);
        assert_eq!(DigitalImage::point().closed_neighborhood(0), vec![0]);
        let k4 = DigitalImage::complete(4).unwrap();
        assert_eq!(k4.closed_neighborhood(2), vec![0, 1, 2, 3]);
    }

    #[test]
    fn products_give_lattice_adjacencies() {
        let seg = DigitalImage::interval(0, 1).unwrap();
        let four = DigitalImage::product(&[seg.clone(), seg.clone()], 1).unwrap();
        assert_eq!(
            four,
            DigitalImage::cycle(4)
                .unwrap()
                .permuted(&[0, 1, 3, 2])
                .unwrap()
        );
        let eight = DigitalImage::product(&[seg.clone(), seg.clone()], 2).unwrap();
        assert_eq!(eight, DigitalImage::complete(4).unwrap());
        let pts =
            DigitalImage::product(&[DigitalImage::point(), DigitalImage::point()], 2).unwrap();
        assert_eq!((pts.len(), pts.edge_count()), (1, 0));
        assert!(DigitalImage::product(std::slice::from_ref(&seg), 2).is_err());
        assert!(DigitalImage::product(std::slice::from_ref(&seg), 0).is_err());
        assert!(DigitalImage::product(&[], 1).is_err());
        assert_well_formed(&eight);
    }

    #[test]
    fn product_matches_edge_rule() {
        // direct evaluation of the NP_u rule on every pair of tuples
        let factors = vec![
            DigitalImage::interval(0, 2).unwrap(),
            DigitalImage::cycle(3).unwrap(),
            DigitalImage::interval(0, 1).unwrap(),
        ];
        let dims: Vec<usize> = factors.iter().map(|f| f.len()).collect();
        for u in 1..=3 {
            let p = DigitalImage::product(&factors, u).unwrap();
            assert_well_formed(&p);
            for a in p.vertices() {
                for b in p.vertices() {
                    let (ca, cb) = (decode_tuple(a, &dims), decode_tuple(b, &dims));
                    let mut adj = 0;
                    let mut ok = true;
                    for k in 0..3 {
                        if ca[k] != cb[k] {
                            if factors[k].is_adjacent(ca[k], cb[k]) {
                                adj += 1;
                            } else {
                                ok = false;
                            }
                        }
                    }
                    let expect = ok && adj >= 1 && adj <= u;
                    assert_eq!(p.is_adjacent(a, b), expect, "u={u} {ca:?} {cb:?}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(DigitalImage::from_edges(0, []).is_err());
        assert!(DigitalImage::from_edges(2, [(0, 0)]).is_err());
        assert!(DigitalImage::from_edges(2, [(0, 2)]).is_err());
        assert!(DigitalImage::from_adjacency_lists(vec![vec![1], vec![]]).is_err());
        assert!(DigitalImage::from_adjacency_lists(vec![]).is_err());
        let dup = DigitalImage::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn subimages_and_translation() {
        let c5 = DigitalImage::cycle(5).unwrap();
        let (sub, tr) = c5.remove_vertex(2).unwrap();
        assert_eq!(sub.len(), 4);
        assert_eq!(sub.edge_count(), 3);
        assert_eq!(tr.new_to_old, vec![0, 1, 3, 4]);
        assert_eq!(tr.old_to_new[2], None);
        assert_eq!(tr.old_to_new[3], Some(2));
        assert_eq!(sub.label(2), "c_3");
        let (sub2, tr2) = sub.remove_vertex(0).unwrap();
        let both = tr.then(&tr2);
        assert_eq!(both.new_to_old, vec![1, 3, 4]);
        assert_eq!(sub2.len(), 3);
        assert_eq!(both.old_to_new, vec![None, Some(0), None, Some(1), Some(2)]);
    }

    #[test]
    fn components() {
        let g = DigitalImage::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0, 0, 1, 2, 2]);
        assert_eq!(g.component_count(), 3);
        assert!(DigitalImage::cycle(5).unwrap().is_connected());
    }
}
