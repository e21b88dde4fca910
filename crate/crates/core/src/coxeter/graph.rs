use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a simple generator inside its graph (0-based, canonical order).
pub type Gen = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Config(format!("unknown family {other:?}"))),
        }
    }
}

/// Family and rank; identifies a group. Elements carry one of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupKind {
    pub family: Family,
    pub rank: usize,
}

impl GroupKind {
    pub fn new(family: Family, rank: usize) -> Self {
        GroupKind { family, rank }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A finite crystallographic Coxeter graph with labelled generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    kind: GroupKind,
    labels: Vec<String>,
    m: Vec<Vec<u8>>,
}

impl CoxeterGraph {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn family(&self) -> Family {
        self.kind.family
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, s: Gen) -> &str {
        &self.labels[s]
    }

    /// Generator with the given label ("~1", "3", ...).
    pub fn gen_by_label(&self, label: &str) -> Option<Gen> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn m(&self, s: Gen, t: Gen) -> u8 {
        self.m[s][t]
    }

    pub fn commute(&self, s: Gen, t: Gen) -> bool {
        self.m[s][t] == 2
    }

    pub fn neighbors(&self, s: Gen) -> impl Iterator<Item = Gen> + '_ {
        (0..self.rank()).filter(move |&t| self.m[s][t] >= 3)
    }

    pub fn edges(&self) -> Vec<(Gen, Gen, u8)> {
        let mut out = Vec::new();
        for s in 0..self.rank() {
            for t in s + 1..self.rank() {
                if self.m[s][t] >= 3 {
                    out.push((s, t, self.m[s][t]));
                }
            }
        }
        out
    }

    /// Whether the generators in `set` span a connected subgraph.
    pub fn is_connected_subset(&self, set: &[Gen]) -> bool {
        if set.len() <= 1 {
            return true;
        }
        let mut seen = vec![false; self.rank()];
        let inside: Vec<bool> = (0..self.rank()).map(|s| set.contains(&s)).collect();
        let mut stack = vec![set[0]];
        seen[set[0]] = true;
        while let Some(s) = stack.pop() {
            for t in self.neighbors(s) {
                if inside[t] && !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        set.iter().all(|&s| seen[s])
    }

    /// Heap column of a generator for the linear families. Type D sends
    /// both fork generators to column 1.
    pub fn column(&self, s: Gen) -> i32 {
        match self.kind.family {
            Family::A | Family::F | Family::G => s as i32 + 1,
            Family::B | Family::E => s as i32,
            Family::D => {
                if s == 0 {
                    1
                } else {
                    s as i32
                }
            }
        }
    }

    pub fn column_range(&self) -> (i32, i32) {
        let cols = (0..self.rank()).map(|s| self.column(s));
        let lo = cols.clone().min().unwrap_or(1);
        let hi = cols.max().unwrap_or(0);
        (lo, hi)
    }

    /// The generator order used by canonical words: index order, which is
    /// 1~ < 1 < 2 < ... in type D and 0 < 1 < ... in type B.
    pub fn canonical_order(&self) -> std::ops::Range<Gen> {
        0..self.rank()
    }

    /// Nontrivial graph automorphism used for symmetry reduction:
    /// reversal in A and E6, the fork swap in D. `None` elsewhere.
    pub fn automorphism(&self) -> Option<Vec<Gen>> {
        let r = self.rank();
        match self.kind.family {
            Family::A if r >= 2 => Some((0..r).rev().collect()),
            Family::D if r >= 3 => {
                let mut p: Vec<Gen> = (0..r).collect();
                p.swap(0, 1);
                Some(p)
            }
            Family::D if r == 2 => Some(vec![1, 0]),
            Family::E if r == 6 => Some(vec![4, 3, 2, 1, 0, 5]),
            _ => None,
        }
    }
}

/// Builds the Coxeter graph of the given type.
///
/// Supported ranks: A ≥ 1, B ≥ 2, D ≥ 2 (D2 is A1×A1, D3 is A3 drawn as a
/// fork), E 6–8, F 4, G 2.
pub fn graph_for(family: Family, rank: usize) -> Result<CoxeterGraph> {
    let bad = || Error::Config(format!("{family}{rank}"));
    let ok = match family {
        Family::A => rank >= 1,
        Family::B => rank >= 2,
        Family::D => rank >= 2,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if !ok || rank > 15 {
        return Err(bad());
    }
    let mut m = vec![vec![2u8; rank]; rank];
    for (s, row) in m.iter_mut().enumerate() {
        row[s] = 1;
    }
    let mut edge = |s: usize, t: usize, v: u8| {
        m[s][t] = v;
        m[t][s] = v;
    };
    let labels: Vec<String> = match family {
        Family::A => {
            for s in 1..rank {
                edge(s - 1, s, 3);
            }
            (1..=rank).map(|i| i.to_string()).collect()
        }
        Family::B => {
            edge(0, 1, 4);
            for s in 2..rank {
                edge(s - 1, s, 3);
            }
            (0..rank).map(|i| i.to_string()).collect()
        }
        Family::D => {
            if rank >= 3 {
                edge(0, 2, 3);
                edge(1, 2, 3);
            }
            for s in 3..rank {
                edge(s - 1, s, 3);
            }
            std::iter::once("~1".to_string())
                .chain((1..rank).map(|i| i.to_string()))
                .collect()
        }
        Family::E => {
            for (s, t) in [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)] {
                edge(s, t, 3);
            }
            if rank >= 7 {
                edge(4, 6, 3);
            }
            if rank == 8 {
                edge(6, 7, 3);
            }
            (0..rank).map(|i| i.to_string()).collect()
        }
        Family::F => {
            edge(0, 1, 3);
            edge(1, 2, 4);
            edge(2, 3, 3);
            (1..=rank).map(|i| i.to_string()).collect()
        }
        Family::G => {
            edge(0, 1, 6);
            (1..=rank).map(|i| i.to_string()).collect()
        }
    };
    Ok(CoxeterGraph { kind: GroupKind::new(family, rank), labels, m })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_fork() {
        let g = graph_for(Family::D, 4).unwrap();
        let (t1, s1, s2, s3) = (0, 1, 2, 3);
        assert_eq!(g.m(t1, s2), 3);
        assert_eq!(g.m(s1, s2), 3);
        assert_eq!(g.m(s2, s3), 3);
        assert_eq!(g.m(t1, s1), 2);
        assert_eq!(g.label(t1), "~1");
    }

    #[test]
    fn b2_has_one_label_four_edge() {
        let g = graph_for(Family::B, 2).unwrap();
        assert_eq!(g.edges(), vec![(0, 1, 4)]);
        let g = graph_for(Family::B, 5).unwrap();
        assert_eq!(g.edges().iter().filter(|e| e.2 == 4).count(), 1);
    }

    #[test]
    fn a1_is_a_point() {
        let g = graph_for(Family::A, 1).unwrap();
        assert_eq!(g.rank(), 1);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn exceptional_shapes() {
        let e6 = graph_for(Family::E, 6).unwrap();
        assert_eq!(e6.edges().len(), 5);
        assert_eq!(e6.neighbors(2).collect::<Vec<_>>(), vec![1, 3, 5]);
        let e7 = graph_for(Family::E, 7).unwrap();
        assert_eq!(e7.m(4, 6), 3);
        let f4 = graph_for(Family::F, 4).unwrap();
        assert_eq!(f4.m(1, 2), 4);
        assert_eq!(graph_for(Family::G, 2).unwrap().m(0, 1), 6);
    }

    #[test]
    fn symmetric_and_unit_diagonal() {
        for (f, r) in [(Family::A, 5), (Family::B, 4), (Family::D, 6), (Family::E, 8), (Family::F, 4)] {
            let g = graph_for(f, r).unwrap();
            for s in 0..g.rank() {
                assert_eq!(g.m(s, s), 1);
                for t in 0..g.rank() {
                    assert_eq!(g.m(s, t), g.m(t, s));
                    if s != t {
                        assert!(g.m(s, t) >= 2);
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_unsupported() {
        assert!(graph_for(Family::E, 5).is_err());
        assert!(graph_for(Family::F, 3).is_err());
        assert!(graph_for(Family::A, 0).is_err());
        assert!(graph_for(Family::B, 1).is_err());
    }

    #[test]
    fn automorphisms_preserve_m() {
        for (f, r) in [(Family::A, 6), (Family::D, 5), (Family::E, 6)] {
            let g = graph_for(f, r).unwrap();
            let p = g.automorphism().unwrap();
            for s in 0..r {
                for t in 0..r {
                    assert_eq!(g.m(s, t), g.m(p[s], p[t]));
                }
            }
        }
    }
}
