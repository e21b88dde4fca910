use crate::bitset::BitSet;
use crate::coxeter::{CoxeterGraph, CoxeterGroup, Gen};
use crate::error::{usage, Result};

/// Heap poset of a word: entry i precedes entry j (i < j) when a chain of
/// non-commuting letters leads from i to j.
#[derive(Clone, Debug)]
pub struct HeapPoset {
    labels: Vec<Gen>,
    below: Vec<BitSet>,
    above: Vec<BitSet>,
}

impl HeapPoset {
    /// Builds the poset without checking reducedness.
    pub fn from_word(graph: &CoxeterGraph, word: &[Gen]) -> Self {
        let k = word.len();
        let mut below: Vec<BitSet> = Vec::with_capacity(k);
        for j in 0..k {
            let mut b = BitSet::new(k);
            for i in 0..j {
                if !graph.commute(word[i], word[j]) && !b.contains(i) {
                    b.insert(i);
                    let bi = below[i].clone();
                    b.union_with(&bi);
                }
            }
            below.push(b);
        }
        let mut above = vec![BitSet::new(k); k];
        for (j, b) in below.iter().enumerate() {
            for i in b.iter() {
                above[i].insert(j);
            }
        }
        HeapPoset { labels: word.to_vec(), below, above }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> Gen {
        self.labels[i]
    }

    pub fn labels(&self) -> &[Gen] {
        &self.labels
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    /// Entries strictly between i and j.
    pub fn between(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.above[i].iter_and(&self.below[j])
    }

    pub fn between_count(&self, i: usize, j: usize) -> usize {
        self.above[i].intersection_count(&self.below[j])
    }

    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.less(i, j) && self.between_count(i, j) == 0
    }

    /// All cover pairs (i, j), i ⋖ j, sorted.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for j in 0..k {
            for i in self.below[j].iter() {
                if self.between_count(i, j) == 0 {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Upper covers of entry i.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        self.above[i].iter().filter(|&j| self.between_count(i, j) == 0).collect()
    }

    /// Equality as labelled posets: the k-th occurrence of each generator in
    /// one word is matched with the k-th occurrence in the other.
    pub fn same_labeled_poset(&self, other: &HeapPoset) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let occ = |labels: &[Gen]| {
            let mut count = std::collections::HashMap::new();
            labels
                .iter()
                .map(|&s| {
                    let c = count.entry(s).or_insert(0usize);
                    *c += 1;
                    (s, *c)
                })
                .collect::<Vec<_>>()
        };
        let a = occ(&self.labels);
        let b = occ(&other.labels);
        let pos: std::collections::HashMap<_, _> = b.iter().enumerate().map(|(i, &key)| (key, i)).collect();
        let Some(map) = a.iter().map(|key| pos.get(key).copied()).collect::<Option<Vec<_>>>() else {
            return false;
        };
        (0..self.len()).all(|i| (0..self.len()).all(|j| self.less(i, j) == other.less(map[i], map[j])))
    }
}

/// Heap poset of a reduced word.
pub fn heap_from_word(group: &CoxeterGroup, word: &[Gen]) -> Result<HeapPoset> {
    let (_, reduced) = group.element_from_word(word)?;
    if !reduced {
        return Err(usage("heap of a non-reduced word"));
    }
    Ok(HeapPoset::from_word(group.graph(), word))
}
