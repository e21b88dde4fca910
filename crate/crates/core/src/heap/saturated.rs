//! Containment of one coalesced heap in another as a saturated point set.

use std::collections::BTreeMap;

use super::lattice::{coalesce, embed_unchecked, LatticeHeap};
use super::poset::HeapPoset;
use super::props::is_convex;
use crate::coxeter::{CoxeterGroup, Element, Gen};
use crate::error::{usage, Result};
use crate::pattern::enumerate_embeddings;

/// Sorted generator labels at each occupied point.
fn labelled_points(h: &LatticeHeap) -> BTreeMap<(i32, i32), Vec<Gen>> {
    h.occupation()
        .into_iter()
        .map(|(pt, idx)| {
            let mut gens: Vec<Gen> = idx.iter().map(|&i| h.entries()[i].gen).collect();
            gens.sort_unstable();
            (pt, gens)
        })
        .collect()
}

/// No entry outside `chosen` lies strictly between two entries of it.
fn is_convex_subposet(poset: &HeapPoset, chosen: &[usize]) -> bool {
    (0..poset.len()).filter(|z| !chosen.contains(z)).all(|z| {
        !(chosen.iter().any(|&a| poset.less(a, z)) && chosen.iter().any(|&b| poset.less(z, b)))
    })
}

fn covers(host: Option<&Vec<Gen>>, part: &[Gen]) -> bool {
    host.is_some_and(|h| part.iter().all(|g| h.contains(g)))
}

/// Whether the coalesced heap of `w` contains a vertically shifted copy of
/// the coalesced heap of f(p), for some Coxeter embedding f, carrying the
/// generators of f(p) at every point of the copy and closed under
/// betweenness in the heap order of `w`.
///
/// At a doubled column-1 point of `w` the copy may use just one of the two
/// generators; the betweenness check then decides.
pub fn saturated_contains(wg: &CoxeterGroup, w: &Element, pg: &CoxeterGroup, p: &Element) -> Result<bool> {
    if !is_convex(wg, w)? || !is_convex(pg, p)? {
        return Err(usage("saturated containment needs convex elements"));
    }
    if p.is_identity() {
        return Ok(true);
    }
    let host_heap = coalesce(&embed_unchecked(wg.graph(), &wg.canonical_word(w)));
    let host = labelled_points(&host_heap);
    let host_occ = host_heap.occupation();
    let poset = host_heap.poset();
    let p_word = pg.canonical_word(p);
    let support: Vec<Gen> = pg.support(p).iter().collect();
    for f in enumerate_embeddings(pg.graph(), &support, wg.graph()) {
        let image = labelled_points(&coalesce(&embed_unchecked(wg.graph(), &f.map_word(&p_word))));
        let (&(c0, l0), gens0) = image.iter().next().expect("nonempty heap");
        let shifts = host.iter().filter(|(&(c, _), g)| c == c0 && covers(Some(g), gens0)).map(|(&(_, l), _)| l - l0);
        for dy in shifts {
            if !image.iter().all(|(&(c, l), g)| covers(host.get(&(c, l + dy)), g)) {
                continue;
            }
            let chosen: Vec<usize> = image
                .iter()
                .flat_map(|(&(c, l), g)| {
                    host_occ[&(c, l + dy)].iter().copied().filter(|&i| g.contains(&host_heap.entries()[i].gen))
                })
                .collect();
            if is_convex_subposet(&poset, &chosen) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Family;

    #[test]
    fn occupation_mismatch() {
        let d4 = CoxeterGroup::new(Family::D, 4).unwrap();
        let p = d4.element_from_reduced_word(&d4.parse_word("s2 s1 s3 s2").unwrap()).unwrap();
        let w = d4.element_from_reduced_word(&d4.parse_word("s2 s1 s~1 s3 s2").unwrap()).unwrap();
        assert!(!saturated_contains(&d4, &w, &d4, &p).unwrap());
        assert!(saturated_contains(&d4, &w, &d4, &w).unwrap());
        assert!(saturated_contains(&d4, &p, &d4, &p).unwrap());
        let bad = d4.element_from_reduced_word(&d4.parse_word("s2 s1 s~1 s2").unwrap()).unwrap();
        assert!(saturated_contains(&d4, &bad, &d4, &p).is_err());
        let part = d4.element_from_reduced_word(&d4.parse_word("s~1 s2").unwrap()).unwrap();
        let host = d4.element_from_reduced_word(&d4.parse_word("s1 s~1 s2").unwrap()).unwrap();
        assert!(saturated_contains(&d4, &host, &d4, &part).unwrap());
    }

    #[test]
    fn across_groups() {
        let a3 = CoxeterGroup::new(Family::A, 3).unwrap();
        let d5 = CoxeterGroup::new(Family::D, 5).unwrap();
        let p = a3.element_from_one_line(&[3, 4, 1, 2]).unwrap();
        let w = d5.element_from_reduced_word(&d5.parse_word("s3 s2 s4 s3").unwrap()).unwrap();
        assert!(saturated_contains(&d5, &w, &a3, &p).unwrap());
    }
}
