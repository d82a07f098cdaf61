//! Canonical forms for small graphs.
//!
//! Equitable-partition refinement followed by a search over individualized
//! vertices. Each leaf of the search tree is a discrete ordered partition,
//! i.e. a relabeling; the canonical form is the least graph6 string among
//! all leaves. Cells made of pairwise twins only branch on their first
//! vertex, since swapping twins is an automorphism fixing the partition.
//! Intended for the small images this crate works with (n up to about 10).

use crate::graph6;
use crate::image::DigitalImage;

/// Canonical graph6 bytes: equal for two images iff they are isomorphic.
pub fn canonical_form(img: &DigitalImage) -> Vec<u8> {
    canonical_labeling(img).0
}

/// Canonical bytes together with the relabeling `perm` (old vertex `v`
/// becomes `perm[v]`) that produces them.
pub fn canonical_labeling(img: &DigitalImage) -> (Vec<u8>, Vec<usize>) {
    let n = img.len();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let start = refine(img, vec![(0..n).collect()]);
    search(img, start, &mut best);
    best.expect("search visits at least one leaf")
}

pub fn is_isomorphic(a: &DigitalImage, b: &DigitalImage) -> bool {
    a.len() == b.len() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

type Partition = Vec<Vec<usize>>;

fn search(img: &DigitalImage, part: Partition, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let Some(target) = part.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; img.len()];
        for (label, cell) in part.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let mut order = vec![0; img.len()];
        for (v, &p) in perm.iter().enumerate() {
            order[p] = v;
        }
        let code =
            graph6::encode_with(img.len(), |i, j| img.is_adjacent(order[i], order[j])).into_bytes();
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, perm));
        }
        return;
    };
    let cell = &part[target];
    let branches: &[usize] = if all_twins(img, cell) {
        &cell[..1]
    } else {
        cell
    };
    for &v in branches {
        let mut next = part.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        search(img, refine(img, next), best);
    }
}

fn all_twins(img: &DigitalImage, cell: &[usize]) -> bool {
    let first = cell[0];
    cell[1..].iter().all(|&w| {
        img.vertices()
            .filter(|&z| z != first && z != w)
            .all(|z| img.is_adjacent(first, z) == img.is_adjacent(w, z))
    })
}

/// Splits cells by neighbor counts into every cell until stable. New cells
/// are ordered by their count signature, which depends only on the graph
/// structure and the incoming partition.
fn refine(img: &DigitalImage, mut part: Partition) -> Partition {
    let n = img.len();
    let mut cell_of = vec![0usize; n];
    loop {
        for (ci, cell) in part.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let k = part.len();
        let mut next: Partition = Vec::with_capacity(k);
        for cell in &part {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; k];
                    for &w in img.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            for idx in 0..keyed.len() {
                if idx > 0 && keyed[idx].0 != keyed[idx - 1].0 {
                    next.push(std::mem::take(&mut group));
                }
                group.push(keyed[idx].1);
            }
            next.push(group);
        }
        if next.len() == part.len() {
            return next;
        }
        part = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeling_invariance_on_c4() {
        let c4 = DigitalImage::cycle(4).unwrap();
        let other = c4.permuted(&[2, 0, 3, 1]).unwrap();
        assert_ne!(c4, other);
        assert_eq!(canonical_form(&c4), canonical_form(&other));
    }

    #[test]
    fn distinguishes_cycle_and_path() {
        let c4 = DigitalImage::cycle(4).unwrap();
        let p4 = DigitalImage::interval(0, 3).unwrap();
        assert_ne!(canonical_form(&c4), canonical_form(&p4));
        assert!(!is_isomorphic(&c4, &p4));
    }

    #[test]
    fn triangle_is_k3() {
        assert!(is_isomorphic(
            &DigitalImage::cycle(3).unwrap(),
            &DigitalImage::complete(3).unwrap()
        ));
    }

    #[test]
    fn labeling_reproduces_form() {
        let g =
            DigitalImage::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap();
        let (code, perm) = canonical_labeling(&g);
        let relabeled = g.permuted(&perm).unwrap();
        assert_eq!(graph6::write_graph6(&relabeled).into_bytes(), code);
    }

    #[test]
    fn canonical_bytes_are_graph6() {
        let g = DigitalImage::complete_bipartite(3, 3).unwrap();
        let back = graph6::parse_graph6(std::str::from_utf8(&canonical_form(&g)).unwrap()).unwrap();
        assert!(is_isomorphic(&g, &back));
    }

    #[test]
    fn symmetric_graphs_terminate_quickly() {
        for n in 1..=10 {
            let k = DigitalImage::complete(n).unwrap();
            assert_eq!(canonical_form(&k), graph6::write_graph6(&k).into_bytes());
        }
        let k55 = DigitalImage::complete_bipartite(5, 5).unwrap();
        assert!(is_isomorphic(
            &k55,
            &k55.permuted(&[9, 1, 8, 2, 7, 3, 6, 4, 5, 0]).unwrap()
        ));
    }
}
