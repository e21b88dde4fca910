//! Strings threaded through a decorated heap (types A, B, D).

use super::lattice::LatticeHeap;
use crate::coxeter::{Family, Gen};
use crate::error::{usage, Error, Result};

/// The signed labels of the strings meeting at one entry, just below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EntryStrings {
    pub left: i8,
    /// `None` for the type-B generator s0, which touches a single string.
    pub right: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringDiagram {
    /// Signed labels read along the top; this is the 1-line notation of the
    /// masked product.
    pub top: Vec<i8>,
    /// Indexed like the heap entries.
    pub at_entry: Vec<EntryStrings>,
    /// For each entry, the entries strictly below it (in processing order)
    /// where its two strings crossed each other.
    pub crossings_below: Vec<Vec<usize>>,
}

#[derive(Clone, Copy)]
enum Touch {
    Pair(usize),
    Negate,
    PairNegate,
}

fn touch(family: Family, s: Gen) -> Touch {
    match (family, s) {
        (Family::A, _) => Touch::Pair(s),
        (Family::B, 0) => Touch::Negate,
        (Family::D, 0) => Touch::PairNegate,
        _ => Touch::Pair(s - 1),
    }
}

/// Processing order: by level, then column, then word position. This is a
/// linear extension of the heap different from the word order.
fn processing_order(h: &LatticeHeap) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..h.len()).collect();
    idx.sort_by_key(|&i| {
        let e = h.entries()[i];
        (e.level, e.column, i)
    });
    idx
}

pub fn trace_strings(h: &LatticeHeap, mask: &[bool]) -> Result<StringDiagram> {
    let kind = h.kind();
    if !kind.family.is_classical() {
        return Err(Error::Unsupported(format!("strings in type {kind}")));
    }
    if mask.len() != h.len() {
        return Err(usage(format!("mask has {} bits for {} entries", mask.len(), h.len())));
    }
    let n = if kind.family == Family::A { kind.rank + 1 } else { kind.rank };
    let mut cur: Vec<i8> = (1..=n as i8).collect();
    let mut at_entry = vec![EntryStrings { left: 0, right: None }; h.len()];
    let mut crossings_below = vec![Vec::new(); h.len()];
    // Unordered string pairs crossed so far, with the entry where it happened.
    let mut crossed: Vec<(u8, u8, usize)> = Vec::new();
    for i in processing_order(h) {
        let t = touch(kind.family, h.entries()[i].gen);
        let (p, q) = match t {
            Touch::Pair(p) => (p, Some(p + 1)),
            Touch::PairNegate => (0, Some(1)),
            Touch::Negate => (0, None),
        };
        at_entry[i] = EntryStrings { left: cur[p], right: q.map(|q| cur[q]) };
        if let Some(q) = q {
            let key = ordered(cur[p].unsigned_abs(), cur[q].unsigned_abs());
            crossings_below[i] = crossed.iter().filter(|c| (c.0, c.1) == key).map(|c| c.2).collect();
            if mask[i] {
                crossed.push((key.0, key.1, i));
            }
        }
        if mask[i] {
            match t {
                Touch::Pair(p) => cur.swap(p, p + 1),
                Touch::Negate => cur[0] = -cur[0],
                Touch::PairNegate => {
                    let (a, b) = (cur[0], cur[1]);
                    cur[0] = -b;
                    cur[1] = -a;
                }
            }
        }
    }
    Ok(StringDiagram { top: cur, at_entry, crossings_below })
}

fn ordered(a: u8, b: u8) -> (u8, u8) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Symbol for one string at an entry: which of the two strings it is (1 for
/// the one starting further left at the bottom) and whether it is barred.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Sym(u8, bool);

/// Defect patterns for s~1 and for every other generator, as (left, right).
const FORK_DEFECTS: [(Sym, Sym); 4] = [
    (Sym(1, false), Sym(2, true)),
    (Sym(1, true), Sym(2, true)),
    (Sym(2, true), Sym(1, false)),
    (Sym(2, true), Sym(1, true)),
];
const OTHER_DEFECTS: [(Sym, Sym); 4] = [
    (Sym(1, false), Sym(2, true)),
    (Sym(1, true), Sym(2, true)),
    (Sym(2, false), Sym(1, false)),
    (Sym(2, false), Sym(1, true)),
];

/// Defect status of entry `position` (1-based word position) read off the
/// string labels via the table lookup, without any length computation.
pub fn defect_by_strings(h: &LatticeHeap, mask: &[bool], position: usize) -> Result<bool> {
    if position == 0 || position > h.len() {
        return Err(usage(format!("position {position} outside 1..={}", h.len())));
    }
    let diagram = trace_strings(h, mask)?;
    let i = position - 1;
    let es = diagram.at_entry[i];
    let Some(right) = es.right else {
        // Type-B s0: a defect exactly when its string is barred.
        return Ok(es.left < 0);
    };
    let (l, r) = (es.left, right);
    let left_is_one = l.unsigned_abs() < r.unsigned_abs();
    let sym = |v: i8, one: bool| Sym(if one { 1 } else { 2 }, v < 0);
    let pair = (sym(l, left_is_one), sym(r, !left_is_one));
    let fork = h.kind().family == Family::D && h.entries()[i].gen == 0;
    let table: &[(Sym, Sym)] = if fork { &FORK_DEFECTS } else { &OTHER_DEFECTS };
    Ok(table.contains(&pair))
}

/// Whether the two strings of entry `position` cross strictly below it.
pub fn strings_cross_below(h: &LatticeHeap, mask: &[bool], position: usize) -> Result<bool> {
    if position == 0 || position > h.len() {
        return Err(usage(format!("position {position} outside 1..={}", h.len())));
    }
    Ok(!trace_strings(h, mask)?.crossings_below[position - 1].is_empty())
}

/// Walks south-east from the entry at `position` through mask-one entries
/// and reports whether the first other point reached holds a mask-zero
/// entry. Meant for coalesced heaps.
pub fn has_right_critical_zero(h: &LatticeHeap, mask: &[bool], position: usize) -> bool {
    let occ = h.occupation();
    let e = h.entries()[position - 1];
    let (mut x, mut y) = (e.column + 1, e.level - 1);
    loop {
        let Some(here) = occ.get(&(x, y)) else { return false };
        if here.iter().any(|&j| !mask[j]) {
            return true;
        }
        x += 1;
        y -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterGroup;
    use crate::heap::lattice::lattice_embed;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn all_ones_reads_the_element() {
        let a3 = CoxeterGroup::new(crate::coxeter::Family::A, 3).unwrap();
        let w = a3.element_from_one_line(&[3, 2, 1, 4]).unwrap();
        let h = lattice_embed(&a3, &a3.canonical_word(&w)).unwrap();
        let d = trace_strings(&h, &bits("111")).unwrap();
        assert_eq!(d.top, vec![3, 2, 1, 4]);
        let d = trace_strings(&h, &bits("000")).unwrap();
        assert_eq!(d.top, vec![1, 2, 3, 4]);
        assert!(trace_strings(&h, &bits("00")).is_err());
    }

    #[test]
    fn pictured_defects() {
        let d5 = CoxeterGroup::new(Family::D, 5).unwrap();
        let w = d5.parse_word("s3 s4 s2 s1 s3 s2").unwrap();
        let h = lattice_embed(&d5, &w).unwrap();
        assert!(defect_by_strings(&h, &bits("101010"), 6).unwrap());

        let u = d5.parse_word("s2 s3 s4 s~1 s2 s3 s1 s2 s~1").unwrap();
        let h = lattice_embed(&d5, &u).unwrap();
        let m = bits("100111000");
        let d = trace_strings(&h, &m).unwrap();
        assert_eq!(d.at_entry[8], EntryStrings { left: -3, right: Some(2) });
        assert!(defect_by_strings(&h, &m, 9).unwrap());
        assert!(defect_by_strings(&h, &m, 0).is_err());
    }

    #[test]
    fn crossing_without_defect() {
        // Entry a: the strings met before but arrive as 2̄ 1̄, in increasing order.
        let d4 = CoxeterGroup::new(Family::D, 4).unwrap();
        let w = d4.parse_word("s1 s2 s~1 s3 s2 s1").unwrap();
        let h = lattice_embed(&d4, &w).unwrap();
        let m = bits("111100");
        assert!(strings_cross_below(&h, &m, 6).unwrap());
        let es = trace_strings(&h, &m).unwrap().at_entry[5];
        assert_eq!(es, EntryStrings { left: -3, right: Some(-2) });
        assert!(!defect_by_strings(&h, &m, 6).unwrap());
    }
}
