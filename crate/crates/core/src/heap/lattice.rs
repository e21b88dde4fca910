use std::collections::BTreeMap;

use serde::Serialize;

use super::poset::HeapPoset;
use crate::coxeter::{graph_for, CoxeterGraph, CoxeterGroup, Gen, GroupKind};
use crate::error::{usage, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeapEntry {
    pub gen: Gen,
    pub column: i32,
    pub level: i32,
}

/// Lattice-point picture of a heap. Entries keep the order of the word they
/// came from, so entry j corresponds to letter j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeHeap {
    graph: CoxeterGraph,
    entries: Vec<HeapEntry>,
    coalesced: bool,
}

impl LatticeHeap {
    pub fn kind(&self) -> GroupKind {
        self.graph.kind()
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn entries(&self) -> &[HeapEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_coalesced(&self) -> bool {
        self.coalesced
    }

    pub fn word(&self) -> Vec<Gen> {
        self.entries.iter().map(|e| e.gen).collect()
    }

    pub fn poset(&self) -> HeapPoset {
        HeapPoset::from_word(&self.graph, &self.word())
    }

    /// Entry indices at each occupied lattice point.
    pub fn occupation(&self) -> BTreeMap<(i32, i32), Vec<usize>> {
        let mut map: BTreeMap<(i32, i32), Vec<usize>> = BTreeMap::new();
        for (i, e) in self.entries.iter().enumerate() {
            map.entry((e.column, e.level)).or_default().push(i);
        }
        map
    }

    pub fn occupation_count(&self, column: i32, level: i32) -> usize {
        self.entries.iter().filter(|e| e.column == column && e.level == level).count()
    }

    pub fn level_range(&self) -> Option<(i32, i32)> {
        let lo = self.entries.iter().map(|e| e.level).min()?;
        let hi = self.entries.iter().map(|e| e.level).max()?;
        Some((lo, hi))
    }

    /// Whether every poset cover is a diagonal step (±1, +1) and every such
    /// step between entries is a cover.
    pub fn covers_are_diagonal(&self) -> bool {
        let poset = self.poset();
        let k = self.len();
        for i in 0..k {
            for j in 0..k {
                let (a, b) = (self.entries[i], self.entries[j]);
                let diagonal = (a.column - b.column).abs() == 1 && b.level == a.level + 1;
                if poset.covers(i, j) != diagonal {
                    return false;
                }
            }
        }
        true
    }

    /// Lateral convexity: for occupied points p above q, every lattice point
    /// in the diamond between them (inside the graph's column range) is
    /// occupied.
    pub fn is_laterally_convex(&self) -> bool {
        let occ = self.occupation();
        let (lo, hi) = self.graph.column_range();
        let points: Vec<(i32, i32)> = occ.keys().copied().collect();
        for &(a, b) in &points {
            for &(c, d) in &points {
                if d > b || (a + b - c - d) % 2 != 0 {
                    continue;
                }
                for y in d..=b {
                    for x in lo..=hi {
                        if (x + y - a - b) % 2 != 0 {
                            continue;
                        }
                        let in_lower_cone = (x - a).abs() <= b - y;
                        let in_upper_cone = (x - c).abs() <= y - d;
                        if in_lower_cone && in_upper_cone && !occ.contains_key(&(x, y)) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Machine-readable dump: `{columns, entries: [{column, level, generators, decoration?}]}`.
    pub fn to_json(&self, decorations: Option<&[super::render::Decoration]>) -> serde_json::Value {
        let (lo, hi) = self.graph.column_range();
        let entries: Vec<serde_json::Value> = self
            .occupation()
            .into_iter()
            .map(|((column, level), idx)| {
                let gens: Vec<String> = idx.iter().map(|&i| format!("s{}", self.graph.label(self.entries[i].gen))).collect();
                let mut obj = serde_json::json!({ "column": column, "level": level, "generators": gens });
                if let Some(d) = decorations {
                    let decs: Vec<String> = idx.iter().map(|&i| d[i].name().to_string()).collect();
                    obj["decoration"] = serde_json::json!(decs);
                }
                obj
            })
            .collect();
        serde_json::json!({ "columns": [lo, hi], "entries": entries })
    }
}

/// Places the letters of a word left to right, each at the lowest level
/// above every earlier letter it does not commute with. Levels start at 1.
pub fn lattice_embed(group: &CoxeterGroup, word: &[Gen]) -> Result<LatticeHeap> {
    let (_, reduced) = group.element_from_word(word)?;
    if !reduced {
        return Err(usage("heap of a non-reduced word"));
    }
    Ok(embed_unchecked(group.graph(), word))
}

pub(crate) fn embed_unchecked(graph: &CoxeterGraph, word: &[Gen]) -> LatticeHeap {
    let mut entries: Vec<HeapEntry> = Vec::with_capacity(word.len());
    for &s in word {
        let level = entries
            .iter()
            .filter(|e| !graph.commute(e.gen, s))
            .map(|e| e.level)
            .max()
            .unwrap_or(0)
            + 1;
        entries.push(HeapEntry { gen: s, column: graph.column(s), level });
    }
    LatticeHeap { graph: graph.clone(), entries, coalesced: false }
}

/// Levels making every cover a diagonal step, one connected piece of the
/// cover graph at a time, each piece keeping its lowest level. `None` if
/// the covers do not admit such levels.
fn diagonal_levels(poset: &HeapPoset, start: &[i32]) -> Option<Vec<i32>> {
    let k = start.len();
    let mut adj = vec![Vec::new(); k];
    for (x, y) in poset.cover_relations() {
        adj[x].push((y, 1));
        adj[y].push((x, -1));
    }
    let mut level: Vec<Option<i32>> = vec![None; k];
    for root in 0..k {
        if level[root].is_some() {
            continue;
        }
        level[root] = Some(0);
        let mut piece = vec![root];
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            let lx = level[x].expect("visited");
            for &(y, step) in &adj[x] {
                match level[y] {
                    None => {
                        level[y] = Some(lx + step);
                        piece.push(y);
                        stack.push(y);
                    }
                    Some(ly) if ly != lx + step => return None,
                    Some(_) => {}
                }
            }
        }
        let lo = piece.iter().map(|&i| level[i].expect("visited")).min().expect("nonempty");
        let want = piece.iter().map(|&i| start[i]).min().expect("nonempty");
        for &i in &piece {
            level[i] = level[i].map(|l| l - lo + want);
        }
    }
    Some(level.into_iter().map(|l| l.expect("visited")).collect())
}

/// Pushes the heap together so that covers become diagonal steps, then
/// shifts so the lowest level is 1. Exact for connected convex elements.
/// Otherwise, if no such levels exist, each entry with something above it
/// is raised to sit directly under its lowest upper cover, top down, as a
/// best-effort normal form.
pub fn coalesce(h: &LatticeHeap) -> LatticeHeap {
    let poset = h.poset();
    let mut entries = h.entries.clone();
    for i in (0..entries.len()).rev() {
        let covers = poset.upper_covers(i);
        if let Some(top) = covers.iter().map(|&j| entries[j].level).min() {
            entries[i].level = top - 1;
        }
    }
    let raised: Vec<i32> = entries.iter().map(|e| e.level).collect();
    if let Some(levels) = diagonal_levels(&poset, &raised) {
        for (e, l) in entries.iter_mut().zip(levels) {
            e.level = l;
        }
    }
    if let Some(lo) = entries.iter().map(|e| e.level).min() {
        for e in entries.iter_mut() {
            e.level -= lo - 1;
        }
    }
    LatticeHeap { graph: h.graph.clone(), entries, coalesced: true }
}

/// Lattice heap for an element of a given kind from a word, skipping the
/// reducedness check. Used for library data already known to be reduced.
pub fn lattice_heap_of(kind: GroupKind, word: &[Gen]) -> Result<LatticeHeap> {
    Ok(embed_unchecked(&graph_for(kind.family, kind.rank)?, word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Family;

    fn levels(h: &LatticeHeap) -> Vec<(i32, i32)> {
        h.entries().iter().map(|e| (e.column, e.level)).collect()
    }

    #[test]
    fn gravity_examples() {
        let a4 = CoxeterGroup::new(Family::A, 4).unwrap();
        let h = lattice_embed(&a4, &a4.parse_word("s1 s4 s2 s3").unwrap()).unwrap();
        assert_eq!(levels(&h), vec![(1, 1), (4, 1), (2, 2), (3, 3)]);
        let c = coalesce(&h);
        assert_eq!(levels(&c), vec![(1, 1), (4, 2), (2, 2), (3, 3)]);
        assert!(c.covers_are_diagonal());
        assert_eq!(coalesce(&c), c);

        let empty = lattice_embed(&a4, &[]).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn type_d_linearization() {
        let d4 = CoxeterGroup::new(Family::D, 4).unwrap();
        let h = lattice_embed(&d4, &d4.parse_word("s~1 s2 s3 s1 s2 s~1 s1").unwrap()).unwrap();
        assert_eq!(levels(&h), vec![(1, 1), (2, 2), (3, 3), (1, 3), (2, 4), (1, 5), (1, 5)]);
        assert_eq!(h.occupation_count(1, 5), 2);
    }

    #[test]
    fn coalescing_raises_blocked_entries() {
        // Gravity leaves the right-hand part one level too low.
        let d7 = CoxeterGroup::new(Family::D, 7).unwrap();
        let w = d7.parse_word("s1 s4 s5 s6 s2 s3 s4 s5 s~1 s2 s3 s4 s1 s2").unwrap();
        let h = lattice_embed(&d7, &w).unwrap();
        assert!(!h.covers_are_diagonal());
        let c = coalesce(&h);
        assert!(c.covers_are_diagonal());
        let col4: Vec<i32> = c.entries().iter().filter(|e| e.column == 4).map(|e| e.level).collect();
        assert_eq!(col4, vec![2, 4, 6]);
    }

    #[test]
    fn coalescing_can_lower_entries() {
        // s3 sits two levels above s4 after gravity and after raising.
        let a6 = CoxeterGroup::new(Family::A, 6).unwrap();
        let h = coalesce(&lattice_embed(&a6, &a6.parse_word("s4 s5 s1 s2 s3").unwrap()).unwrap());
        assert!(h.covers_are_diagonal());
        assert_eq!(levels(&h), vec![(4, 2), (5, 3), (1, 1), (2, 2), (3, 3)]);
    }
}
