//! Factors and embedded factors in two-sided weak order.

use rustc_hash::FxHashSet;

use super::embedding::enumerate_embeddings;
use crate::coxeter::{CoxeterGraph, CoxeterGroup, Element, Gen, GroupKind};
use crate::error::{usage, Result};

/// Every c with w = c·b and l(w) = l(c) + l(b), grouped by length.
pub struct PrefixSet {
    by_length: Vec<Vec<Element>>,
}

impl PrefixSet {
    pub fn new(group: &CoxeterGroup, w: &Element) -> Self {
        let len = w.length();
        let mut by_length = vec![Vec::new(); len + 1];
        by_length[len].push(w.clone());
        for l in (1..=len).rev() {
            let mut seen = FxHashSet::default();
            let mut next = Vec::new();
            for c in &by_length[l] {
                for s in group.right_descents(c).iter() {
                    let d = group.mul_gen(c, s);
                    if seen.insert(d.clone()) {
                        next.push(d);
                    }
                }
            }
            by_length[l - 1] = next;
        }
        PrefixSet { by_length }
    }

    pub fn len(&self) -> usize {
        self.by_length.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = &Element> {
        self.by_length.iter().flatten()
    }

    /// Whether some prefix ends in the reduced word `y`.
    pub fn has_factor_word(&self, group: &CoxeterGroup, y: &[Gen]) -> bool {
        let Some(&last) = y.last() else { return true };
        self.by_length
            .iter()
            .skip(y.len())
            .flatten()
            .any(|c| group.is_right_descent(c, last) && ends_with(group, c, y))
    }
}

/// Whether c = c'·y with lengths adding, stepping through y from the right.
pub fn ends_with(group: &CoxeterGroup, c: &Element, y: &[Gen]) -> bool {
    let mut cur = c.clone();
    for &s in y.iter().rev() {
        if !group.is_right_descent(&cur, s) {
            return false;
        }
        cur = group.mul_gen(&cur, s);
    }
    true
}

/// Whether w = a·y·b with l(w) = l(a) + l(y) + l(b).
pub fn contains_factor(group: &CoxeterGroup, w: &Element, y: &Element) -> Result<bool> {
    if w.kind() != group.kind() || y.kind() != group.kind() {
        return Err(usage("factor test across different groups"));
    }
    if y.length() > w.length() {
        return Ok(false);
    }
    Ok(PrefixSet::new(group, w).has_factor_word(group, &group.canonical_word(y)))
}

/// A reduced word over an abstract Coxeter graph, probed through embeddings.
#[derive(Clone, Debug)]
pub struct FactorPattern {
    pub name: String,
    pub graph: CoxeterGraph,
    pub word: Vec<Gen>,
}

impl FactorPattern {
    pub fn new(name: impl Into<String>, group: &CoxeterGroup, word: Vec<Gen>) -> Result<Self> {
        let (_, reduced) = group.element_from_word(&word)?;
        if !reduced {
            return Err(usage("pattern word is not reduced"));
        }
        Ok(FactorPattern { name: name.into(), graph: group.graph().clone(), word })
    }

    pub fn from_element(name: impl Into<String>, group: &CoxeterGroup, p: &Element) -> Self {
        FactorPattern { name: name.into(), graph: group.graph().clone(), word: group.canonical_word(p) }
    }

    pub fn kind(&self) -> GroupKind {
        self.graph.kind()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn support(&self) -> Vec<Gen> {
        let mut s = self.word.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Words f(p) for every embedding f into `target`, one per distinct
    /// image element. With `oriented`, only maps shifting columns uniformly.
    pub fn images(&self, target: &CoxeterGroup, oriented: bool) -> Vec<Vec<Gen>> {
        let mut seen = FxHashSet::default();
        enumerate_embeddings(&self.graph, &self.support(), target.graph())
            .into_iter()
            .filter(|f| !oriented || f.preserves_orientation(&self.graph, target.graph()))
            .map(|f| f.map_word(&self.word))
            .filter(|y| seen.insert(target.eval_word(y.iter().copied())))
            .collect()
    }
}

pub fn contains_embedded_factor(group: &CoxeterGroup, w: &Element, p: &FactorPattern) -> bool {
    contains_embedded_factor_with(group, w, p, false)
}

pub fn contains_embedded_factor_with(group: &CoxeterGroup, w: &Element, p: &FactorPattern, oriented: bool) -> bool {
    if p.len() > w.length() {
        return false;
    }
    let prefixes = PrefixSet::new(group, w);
    p.images(group, oriented).iter().any(|y| prefixes.has_factor_word(group, y))
}
