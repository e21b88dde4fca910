//! Full commutativity, short-braid avoidance and convexity.

use super::poset::HeapPoset;
use crate::coxeter::{CoxeterGraph, CoxeterGroup, Element, Family, Gen};
use crate::error::{Error, Result};

/// Whether the heap of `word` has a convex chain alternating two labels s, t
/// of length m(s, t) ≥ 3. A reduced word has such a chain iff its element
/// is not fully commutative.
pub fn has_convex_braid_chain(graph: &CoxeterGraph, heap: &HeapPoset) -> bool {
    let k = heap.len();
    for i in 0..k {
        for j in i + 1..k {
            if !heap.less(i, j) {
                continue;
            }
            let inner: Vec<usize> = heap.between(i, j).collect();
            let Some(&first) = inner.first() else { continue };
            let (s, t) = (heap.label(i), heap.label(first));
            let m = graph.m(s, t) as usize;
            if m < 3 || inner.len() + 2 != m {
                continue;
            }
            let chain: Vec<usize> = std::iter::once(i).chain(inner).chain(std::iter::once(j)).collect();
            let alternates = chain
                .iter()
                .enumerate()
                .all(|(p, &e)| heap.label(e) == if p % 2 == 0 { s } else { t });
            let totally_ordered = chain.windows(2).all(|w| heap.less(w[0], w[1]));
            if alternates && totally_ordered {
                return true;
            }
        }
    }
    false
}

/// Index of the previous entry with the same label, for each entry.
fn previous_same(heap: &HeapPoset) -> Vec<Option<usize>> {
    (0..heap.len())
        .map(|j| (0..j).rev().find(|&i| heap.label(i) == heap.label(j)))
        .collect()
}

/// Number of entries strictly between i and j that do not commute with the
/// label of i.
fn noncommuting_between(graph: &CoxeterGraph, heap: &HeapPoset, i: usize, j: usize) -> usize {
    let s = heap.label(i);
    heap.between(i, j).filter(|&z| !graph.commute(s, heap.label(z))).count()
}

/// Short-braid test on the heap of a reduced word: every pair of
/// consecutive same-label entries needs two non-commuting entries between.
pub fn heap_is_short_braid_avoiding(graph: &CoxeterGraph, heap: &HeapPoset) -> bool {
    previous_same(heap)
        .iter()
        .enumerate()
        .all(|(j, p)| p.map_or(true, |i| noncommuting_between(graph, heap, i, j) >= 2))
}

pub fn is_fully_commutative(group: &CoxeterGroup, w: &Element) -> bool {
    let heap = HeapPoset::from_word(group.graph(), &group.canonical_word(w));
    !has_convex_braid_chain(group.graph(), &heap)
}

pub fn is_short_braid_avoiding(group: &CoxeterGroup, w: &Element) -> bool {
    let heap = HeapPoset::from_word(group.graph(), &group.canonical_word(w));
    heap_is_short_braid_avoiding(group.graph(), &heap)
}

/// Convexity on a reduced word of an A/B/D element: short-braid avoiding,
/// and every minimal same-label pair in a column has entries from both
/// neighbouring columns strictly between it.
pub fn word_is_convex(graph: &CoxeterGraph, word: &[Gen]) -> bool {
    let heap = HeapPoset::from_word(graph, word);
    if !heap_is_short_braid_avoiding(graph, &heap) {
        return false;
    }
    let col = |e: usize| graph.column(heap.label(e));
    for (j, prev) in previous_same(&heap).into_iter().enumerate() {
        let Some(i) = prev else { continue };
        let c = col(j);
        // Another entry of the same column in between: not a minimal pair.
        if heap.between(i, j).any(|z| col(z) == c) {
            continue;
        }
        let left = heap.between(i, j).any(|z| col(z) == c - 1);
        let right = heap.between(i, j).any(|z| col(z) == c + 1);
        if !(left && right) {
            return false;
        }
    }
    true
}

pub fn is_convex(group: &CoxeterGroup, w: &Element) -> Result<bool> {
    if !group.kind().family.is_classical() {
        return Err(Error::Unsupported(format!("convexity in type {}", group.kind())));
    }
    Ok(word_is_convex(group.graph(), &group.canonical_word(w)))
}

fn type_d_one_line<'a>(group: &CoxeterGroup, w: &'a Element) -> Result<&'a [i8]> {
    if group.kind().family != Family::D {
        return Err(Error::Unsupported(format!("type-D 1-line test on {}", group.kind())));
    }
    Ok(w.one_line().expect("type D has 1-line notation"))
}

/// Stembridge's characterization: no triple a, b, c (in position order)
/// with |a| > b > c or −b > |a| > c.
pub fn is_sba_one_line_type_d(group: &CoxeterGroup, w: &Element) -> Result<bool> {
    let v = type_d_one_line(group, w)?;
    Ok(!has_stembridge_triple(v))
}

fn has_stembridge_triple(v: &[i8]) -> bool {
    let n = v.len();
    for i in 0..n {
        let a = v[i].abs();
        for j in i + 1..n {
            let b = v[j];
            for &c in &v[j + 1..] {
                if (a > b && b > c) || (-b > a && a > c) {
                    return true;
                }
            }
        }
    }
    false
}

/// Convexity in type D through 1-line patterns: the Stembridge triples plus
/// the pattern [-1,2,-3].
pub fn is_convex_one_line_type_d(group: &CoxeterGroup, w: &Element) -> Result<bool> {
    let v = type_d_one_line(group, w)?;
    Ok(!has_stembridge_triple(v) && !crate::pattern::contains_one_line(v, &[-1, 2, -3]).0)
}
