//! Injective generator maps preserving every Coxeter label.

use crate::coxeter::{CoxeterGraph, Gen};

/// Map from a set of source generators to target generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterEmbedding {
    /// `(source, target)` pairs, sorted by source.
    pub pairs: Vec<(Gen, Gen)>,
}

impl CoxeterEmbedding {
    pub fn apply(&self, s: Gen) -> Gen {
        self.pairs.iter().find(|p| p.0 == s).map(|p| p.1).expect("generator outside embedding domain")
    }

    pub fn map_word(&self, word: &[Gen]) -> Vec<Gen> {
        word.iter().map(|&s| self.apply(s)).collect()
    }

    /// Whether the map shifts heap columns by a constant.
    pub fn preserves_orientation(&self, source: &CoxeterGraph, target: &CoxeterGraph) -> bool {
        let mut shifts = self.pairs.iter().map(|&(s, t)| target.column(t) - source.column(s));
        match shifts.next() {
            None => true,
            Some(first) => shifts.all(|d| d == first),
        }
    }
}

/// All embeddings of the subgraph spanned by `domain` into `target`, in
/// lexicographic order of target images. Both edges and non-edges must keep
/// their labels.
pub fn enumerate_embeddings(source: &CoxeterGraph, domain: &[Gen], target: &CoxeterGraph) -> Vec<CoxeterEmbedding> {
    let mut domain = domain.to_vec();
    domain.sort_unstable();
    domain.dedup();
    let mut out = Vec::new();
    let mut image = Vec::with_capacity(domain.len());
    extend(source, &domain, target, &mut image, &mut out);
    out
}

fn extend(source: &CoxeterGraph, domain: &[Gen], target: &CoxeterGraph, image: &mut Vec<Gen>, out: &mut Vec<CoxeterEmbedding>) {
    let k = image.len();
    if k == domain.len() {
        out.push(CoxeterEmbedding { pairs: domain.iter().copied().zip(image.iter().copied()).collect() });
        return;
    }
    for t in 0..target.rank() {
        if image.contains(&t) {
            continue;
        }
        let ok = (0..k).all(|a| source.m(domain[a], domain[k]) == target.m(image[a], t));
        if ok {
            image.push(t);
            extend(source, domain, target, image, out);
            image.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{graph_for, Family};

    #[test]
    fn path_into_path_gives_shifts_and_reversals() {
        let a3 = graph_for(Family::A, 3).unwrap();
        let a5 = graph_for(Family::A, 5).unwrap();
        let embs = enumerate_embeddings(&a3, &[0, 1, 2], &a5);
        let images: Vec<Vec<Gen>> = embs.iter().map(|e| e.pairs.iter().map(|p| p.1).collect()).collect();
        assert_eq!(images, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 1, 0], vec![2, 3, 4], vec![3, 2, 1], vec![4, 3, 2]]);
        let oriented = embs.iter().filter(|e| e.preserves_orientation(&a3, &a5)).count();
        assert_eq!(oriented, 3);
    }

    #[test]
    fn single_node() {
        let a1 = graph_for(Family::A, 1).unwrap();
        let d5 = graph_for(Family::D, 5).unwrap();
        assert_eq!(enumerate_embeddings(&a1, &[0], &d5).len(), 5);
    }

    #[test]
    fn path_into_b_avoids_label_four() {
        let a7 = graph_for(Family::A, 7).unwrap();
        let b7 = graph_for(Family::B, 7).unwrap();
        assert!(enumerate_embeddings(&a7, &(0..7).collect::<Vec<_>>(), &b7).is_empty());
        let a3 = graph_for(Family::A, 3).unwrap();
        for e in enumerate_embeddings(&a3, &[0, 1, 2], &b7) {
            assert!(e.pairs.iter().all(|p| p.1 != 0));
        }
    }

    #[test]
    fn e6_has_two_self_embeddings() {
        let e6 = graph_for(Family::E, 6).unwrap();
        let e8 = graph_for(Family::E, 8).unwrap();
        let all: Vec<Gen> = (0..6).collect();
        assert_eq!(enumerate_embeddings(&e6, &all, &e6).len(), 2);
        assert_eq!(enumerate_embeddings(&e6, &all, &e8).len(), 2);
    }
}
