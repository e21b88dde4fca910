#![allow(dead_code)]

use std::collections::HashMap;

use deodhar_core::heap::{
    coalesce, defect_by_strings, has_right_critical_zero, heap_from_word, is_convex, lattice_embed, saturated_contains,
    strings_cross_below,
};
use deodhar_core::mask::{evaluate_mask, is_deodhar_bruteforce, Mask};
use deodhar_core::pattern::{contains_embedded_factor, FactorPattern};
use deodhar_core::{CoxeterGroup, Element, Family, Gen};

pub type Check = Result<(), String>;

pub fn group(f: Family, r: usize) -> CoxeterGroup {
    CoxeterGroup::new(f, r).unwrap()
}

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn name(g: &CoxeterGroup, w: &Element) -> String {
    format!("{} {}", g.kind(), g.format_word(&g.canonical_word(w)))
}

/// Distance from the identity in the Cayley graph.
pub fn bfs_lengths(g: &CoxeterGroup) -> HashMap<Element, usize> {
    let mut dist = HashMap::new();
    let mut layer = vec![g.identity()];
    dist.insert(g.identity(), 0);
    let mut d = 0;
    while !layer.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..g.rank() {
                let ws = g.mul_gen(w, s);
                if !dist.contains_key(&ws) {
                    dist.insert(ws.clone(), d);
                    next.push(ws);
                }
            }
        }
        layer = next;
    }
    dist
}

pub fn check_lengths_by_bfs(g: &CoxeterGroup) -> Check {
    let dist = bfs_lengths(g);
    ensure(dist.len() == g.all_elements().len(), || format!("{}: BFS reached {} elements", g.kind(), dist.len()))?;
    for (w, &d) in &dist {
        ensure(w.length() == d && g.recompute_length(w) == d, || format!("{}: length {} vs BFS {d}", name(g, w), w.length()))?;
    }
    Ok(())
}

/// Every commuting swap of adjacent letters leaves the labeled heap poset alone.
pub fn check_commutation_invariance(g: &CoxeterGroup, word: &[Gen]) -> Check {
    let heap = heap_from_word(g, word).map_err(|e| e.to_string())?;
    for i in 1..word.len() {
        if word[i - 1] == word[i] || !g.graph().commute(word[i - 1], word[i]) {
            continue;
        }
        let mut moved = word.to_vec();
        moved.swap(i - 1, i);
        let other = heap_from_word(g, &moved).map_err(|e| e.to_string())?;
        ensure(heap.same_labeled_poset(&other), || format!("{}: swap at {i} changes the heap", g.format_word(word)))?;
    }
    Ok(())
}

pub fn check_commutation_invariance_all_words(g: &CoxeterGroup, w: &Element) -> Check {
    let words = g.all_reduced_words(w, 5000).map_err(|e| e.to_string())?;
    let first = heap_from_word(g, &words[0]).map_err(|e| e.to_string())?;
    for word in &words {
        check_commutation_invariance(g, word)?;
        // Words in one commutation class share the heap; across classes the
        // sizes still agree.
        let h = heap_from_word(g, word).map_err(|e| e.to_string())?;
        ensure(h.len() == first.len(), || format!("{}: heap sizes differ", name(g, w)))?;
    }
    Ok(())
}

fn is_connected_convex(g: &CoxeterGroup, w: &Element) -> bool {
    g.is_connected(w) && is_convex(g, w).unwrap_or(false)
}

/// In the coalesced heap of a connected convex element, covers are exactly
/// the diagonal steps.
pub fn check_heap_cover(g: &CoxeterGroup, w: &Element) -> Check {
    if !is_connected_convex(g, w) {
        return Ok(());
    }
    let h = coalesce(&lattice_embed(g, &g.canonical_word(w)).map_err(|e| e.to_string())?);
    ensure(h.covers_are_diagonal(), || format!("{}: covers are not diagonal", name(g, w)))
}

pub fn check_lateral_convexity(g: &CoxeterGroup, w: &Element) -> Check {
    if !is_connected_convex(g, w) {
        return Ok(());
    }
    let h = coalesce(&lattice_embed(g, &g.canonical_word(w)).map_err(|e| e.to_string())?);
    ensure(h.is_laterally_convex(), || format!("{}: not laterally convex", name(g, w)))
}

/// Defects read from strings match the length test, and the two strings of
/// every defect cross below it. Runs over all masks.
pub fn check_strings(g: &CoxeterGroup, w: &Element) -> Check {
    let word = g.canonical_word(w);
    let h = lattice_embed(g, &word).map_err(|e| e.to_string())?;
    for m in 0..1u64 << word.len() {
        let mask = Mask::from_int(word.len(), m);
        let eval = evaluate_mask(g, &word, &mask).map_err(|e| e.to_string())?;
        for pos in 1..=word.len() {
            let by_strings = defect_by_strings(&h, mask.bits(), pos).map_err(|e| e.to_string())?;
            let by_length = eval.defects.contains(&pos);
            ensure(by_strings == by_length, || format!("{} mask {mask} position {pos}: strings {by_strings}", name(g, w)))?;
            // A type-B s0 entry touches a single string.
            let single = g.kind().family == Family::B && word[pos - 1] == 0;
            if by_length && !single {
                let crossed = strings_cross_below(&h, mask.bits(), pos).map_err(|e| e.to_string())?;
                ensure(crossed, || format!("{} mask {mask}: defect {pos} without a crossing", name(g, w)))?;
            }
        }
    }
    Ok(())
}

/// Every defect of a convex element has a right critical zero, for every mask.
pub fn check_right_critical_zero(g: &CoxeterGroup, w: &Element) -> Check {
    if !is_convex(g, w).unwrap_or(false) {
        return Ok(());
    }
    let h = coalesce(&lattice_embed(g, &g.canonical_word(w)).map_err(|e| e.to_string())?);
    let word = h.word();
    for m in 0..1u64 << word.len() {
        let mask = Mask::from_int(word.len(), m);
        let eval = evaluate_mask(g, &word, &mask).map_err(|e| e.to_string())?;
        for &pos in &eval.defects {
            ensure(has_right_critical_zero(&h, mask.bits(), pos), || {
                format!("{} mask {mask}: defect {pos} lacks a right critical zero", name(g, w))
            })?;
        }
    }
    Ok(())
}

/// Saturated containment and embedded factor containment agree on
/// connected convex pairs.
pub fn check_saturated_vs_factor(g: &CoxeterGroup, w: &Element, p: &Element) -> Check {
    if !is_connected_convex(g, w) || !is_connected_convex(g, p) {
        return Ok(());
    }
    let by_heap = saturated_contains(g, w, g, p).map_err(|e| e.to_string())?;
    let by_factor = contains_embedded_factor(g, w, &FactorPattern::from_element("p", g, p));
    ensure(by_heap == by_factor, || format!("{} in {}: heap {by_heap}, factor {by_factor}", name(g, p), name(g, w)))
}

pub fn check_inverse_closure(g: &CoxeterGroup, w: &Element) -> Check {
    let a = is_deodhar_bruteforce(g, w).map_err(|e| e.to_string())?.0;
    let b = is_deodhar_bruteforce(g, &g.inverse(w)).map_err(|e| e.to_string())?.0;
    ensure(a == b, || format!("{}: verdict {a}, inverse {b}", name(g, w)))
}

/// Runs `check` on every element, stopping at the first failure.
pub fn over_all(elements: &[Element], mut check: impl FnMut(&Element) -> Check) -> Result<usize, String> {
    for w in elements {
        check(w)?;
    }
    Ok(elements.len())
}
