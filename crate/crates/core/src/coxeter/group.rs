use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use super::graph::{graph_for, CoxeterGraph, Family, Gen, GroupKind};
use super::roots;
use crate::error::{usage, Error, Result};

/// Payload storage: a signed 1-line word, or a column-major matrix whose
/// column j is w(α_j) in simple-root coordinates.
pub(crate) type Payload = SmallVec<[i8; 16]>;

/// A Weyl group element. Equality is structural and includes the group, so
/// elements of different groups never compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element {
    kind: GroupKind,
    data: Payload,
    length: u32,
}

impl Element {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Signed 1-line notation, for the A/B/D backend.
    pub fn one_line(&self) -> Option<&[i8]> {
        self.kind.family.is_classical().then_some(&self.data[..])
    }

    #[cfg(test)]
    pub(crate) fn raw(&self) -> &[i8] {
        &self.data
    }
}

/// Bit set of generators, used for descent sets and supports.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct GenSet(pub u32);

impl GenSet {
    pub fn contains(self, s: Gen) -> bool {
        self.0 >> s & 1 == 1
    }
    pub fn insert(&mut self, s: Gen) {
        self.0 |= 1 << s;
    }
    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn iter(self) -> impl Iterator<Item = Gen> {
        (0..32).filter(move |&s| self.contains(s))
    }
}

impl FromIterator<Gen> for GenSet {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        let mut s = GenSet::default();
        for g in iter {
            s.insert(g);
        }
        s
    }
}

#[derive(Clone, Copy, Debug)]
enum Action {
    /// Swap 0-based positions i and i+1.
    Swap(usize),
    /// Negate position 0 (type B s0).
    Negate,
    /// Swap positions 0, 1 and negate both (type D s~1).
    SwapNegate,
}

#[derive(Clone, Debug)]
enum Backend {
    Signed { n: usize, actions: Vec<Action> },
    Roots { cartan: Vec<Vec<i8>>, positive: Vec<Vec<i8>> },
}

/// A finite Weyl group: its graph plus the tables needed to compute with
/// elements. Immutable after construction.
#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    graph: CoxeterGraph,
    backend: Backend,
}

impl CoxeterGroup {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let graph = graph_for(family, rank)?;
        let backend = match family {
            Family::A => Backend::Signed {
                n: rank + 1,
                actions: (0..rank).map(Action::Swap).collect(),
            },
            Family::B => Backend::Signed {
                n: rank,
                actions: std::iter::once(Action::Negate)
                    .chain((0..rank - 1).map(Action::Swap))
                    .collect(),
            },
            Family::D => Backend::Signed {
                n: rank,
                actions: std::iter::once(Action::SwapNegate)
                    .chain((0..rank - 1).map(Action::Swap))
                    .collect(),
            },
            Family::E | Family::F | Family::G => {
                let cartan = roots::cartan_matrix(&graph);
                let positive = roots::positive_roots(&cartan);
                Backend::Roots { cartan, positive }
            }
        };
        Ok(CoxeterGroup { graph, backend })
    }

    pub fn of_kind(kind: GroupKind) -> Result<Self> {
        Self::new(kind.family, kind.rank)
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn kind(&self) -> GroupKind {
        self.graph.kind()
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    /// Length of the signed 1-line word (n+1 in type A_n), or `None` for the
    /// root-matrix backend.
    pub fn one_line_size(&self) -> Option<usize> {
        match &self.backend {
            Backend::Signed { n, .. } => Some(*n),
            Backend::Roots { .. } => None,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        match &self.backend {
            Backend::Signed { n, .. } => match self.graph.family() {
                Family::A => n * (n - 1) / 2,
                Family::B => n * n,
                _ => n * (n - 1),
            },
            Backend::Roots { positive, .. } => positive.len(),
        }
    }

    pub fn identity(&self) -> Element {
        let data = match &self.backend {
            Backend::Signed { n, .. } => (1..=*n as i8).collect(),
            Backend::Roots { .. } => {
                let r = self.rank();
                let mut d: Payload = SmallVec::from_elem(0, r * r);
                for i in 0..r {
                    d[i * r + i] = 1;
                }
                d
            }
        };
        Element { kind: self.kind(), data, length: 0 }
    }

    pub fn generator(&self, s: Gen) -> Element {
        self.mul_gen(&self.identity(), s)
    }

    fn check(&self, w: &Element) -> Result<()> {
        if w.kind != self.kind() {
            return Err(usage(format!("element of {} used with group {}", w.kind, self.kind())));
        }
        Ok(())
    }

    /// Whether l(ws) < l(w).
    #[inline]
    pub fn is_right_descent(&self, w: &Element, s: Gen) -> bool {
        match &self.backend {
            Backend::Signed { actions, .. } => {
                let d = &w.data;
                match actions[s] {
                    Action::Swap(i) => d[i] > d[i + 1],
                    Action::Negate => d[0] < 0,
                    Action::SwapNegate => (d[0] as i32 + d[1] as i32) < 0,
                }
            }
            Backend::Roots { .. } => {
                let r = self.rank();
                let col = &w.data[s * r..(s + 1) * r];
                col.iter().any(|&x| x < 0)
            }
        }
    }

    pub fn right_descents(&self, w: &Element) -> GenSet {
        (0..self.rank()).filter(|&s| self.is_right_descent(w, s)).collect()
    }

    pub fn left_descents(&self, w: &Element) -> GenSet {
        (0..self.rank()).filter(|&s| self.is_left_descent(w, s)).collect()
    }

    pub fn is_left_descent(&self, w: &Element, s: Gen) -> bool {
        match &self.backend {
            Backend::Signed { .. } => self.is_right_descent(&self.inverse(w), s),
            Backend::Roots { .. } => self.mul_gen_left(w, s).length < w.length,
        }
    }

    /// Right multiplication w·s.
    #[inline]
    pub fn mul_gen(&self, w: &Element, s: Gen) -> Element {
        debug_assert_eq!(w.kind, self.kind());
        let down = self.is_right_descent(w, s);
        let mut data = w.data.clone();
        match &self.backend {
            Backend::Signed { actions, .. } => match actions[s] {
                Action::Swap(i) => data.swap(i, i + 1),
                Action::Negate => data[0] = -data[0],
                Action::SwapNegate => {
                    let (a, b) = (data[0], data[1]);
                    data[0] = -b;
                    data[1] = -a;
                }
            },
            Backend::Roots { cartan, .. } => {
                let r = self.rank();
                for j in 0..r {
                    let a = cartan[s][j];
                    if a != 0 && j != s {
                        for k in 0..r {
                            data[j * r + k] -= a * w.data[s * r + k];
                        }
                    }
                }
                for k in 0..r {
                    data[s * r + k] = -w.data[s * r + k];
                }
            }
        }
        let length = if down { w.length - 1 } else { w.length + 1 };
        Element { kind: w.kind, data, length }
    }

    /// Left multiplication s·w.
    pub fn mul_gen_left(&self, w: &Element, s: Gen) -> Element {
        debug_assert_eq!(w.kind, self.kind());
        match &self.backend {
            Backend::Signed { actions, .. } => {
                let mut data = w.data.clone();
                for v in data.iter_mut() {
                    let (a, sg) = (v.abs(), v.signum());
                    *v = match actions[s] {
                        Action::Swap(i) if a as usize == i + 1 => sg * (i as i8 + 2),
                        Action::Swap(i) if a as usize == i + 2 => sg * (i as i8 + 1),
                        Action::Negate if a == 1 => -*v,
                        Action::SwapNegate if a == 1 => -sg * 2,
                        Action::SwapNegate if a == 2 => -sg,
                        _ => *v,
                    };
                }
                self.from_data(data)
            }
            Backend::Roots { cartan, .. } => {
                let r = self.rank();
                let mut data = w.data.clone();
                for j in 0..r {
                    roots::reflect(cartan, s, &mut data[j * r..(j + 1) * r]);
                }
                self.from_data(data)
            }
        }
    }

    fn from_data(&self, data: Payload) -> Element {
        let length = self.length_of(&data) as u32;
        Element { kind: self.kind(), data, length }
    }

    /// Length computed from scratch: inversion formulas for signed words,
    /// the number of positive roots made negative for root matrices.
    fn length_of(&self, d: &[i8]) -> usize {
        match &self.backend {
            Backend::Signed { n, .. } => {
                let n = *n;
                let mut l = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if d[i] > d[j] {
                            l += 1;
                        }
                        if self.graph.family() != Family::A && -d[i] > d[j] {
                            l += 1;
                        }
                    }
                    if self.graph.family() == Family::B && d[i] < 0 {
                        l += 1;
                    }
                }
                l
            }
            Backend::Roots { positive, .. } => {
                let r = self.rank();
                positive
                    .iter()
                    .filter(|beta| {
                        let mut img = [0i32; 8];
                        for (j, &b) in beta.iter().enumerate() {
                            if b != 0 {
                                for k in 0..r {
                                    img[k] += b as i32 * d[j * r + k] as i32;
                                }
                            }
                        }
                        img[..r].iter().any(|&x| x < 0)
                    })
                    .count()
            }
        }
    }

    /// Recomputes the length from the payload; used by tests as an oracle
    /// for the cached value.
    pub fn recompute_length(&self, w: &Element) -> usize {
        self.length_of(&w.data)
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul(&self, a: &Element, b: &Element) -> Element {
        match &self.backend {
            Backend::Signed { .. } => {
                let data = b
                    .data
                    .iter()
                    .map(|&v| {
                        let x = a.data[v.unsigned_abs() as usize - 1];
                        if v < 0 {
                            -x
                        } else {
                            x
                        }
                    })
                    .collect();
                self.from_data(data)
            }
            Backend::Roots { .. } => {
                let r = self.rank();
                let mut data: Payload = SmallVec::from_elem(0, r * r);
                for j in 0..r {
                    for k in 0..r {
                        let c = b.data[j * r + k];
                        if c != 0 {
                            for i in 0..r {
                                data[j * r + i] += c * a.data[k * r + i];
                            }
                        }
                    }
                }
                self.from_data(data)
            }
        }
    }

    pub fn inverse(&self, w: &Element) -> Element {
        match &self.backend {
            Backend::Signed { n, .. } => {
                let mut data: Payload = SmallVec::from_elem(0, *n);
                for (i, &v) in w.data.iter().enumerate() {
                    let p = i as i8 + 1;
                    data[v.unsigned_abs() as usize - 1] = if v < 0 { -p } else { p };
                }
                Element { kind: w.kind, data, length: w.length }
            }
            Backend::Roots { .. } => {
                let word = self.canonical_word(w);
                self.eval_word(word.iter().rev().copied())
            }
        }
    }

    /// Evaluates a word left to right.
    pub fn eval_word(&self, word: impl IntoIterator<Item = Gen>) -> Element {
        word.into_iter().fold(self.identity(), |w, s| self.mul_gen(&w, s))
    }

    /// Evaluates a word and reports whether it is reduced.
    pub fn element_from_word(&self, word: &[Gen]) -> Result<(Element, bool)> {
        if let Some(&s) = word.iter().find(|&&s| s >= self.rank()) {
            return Err(usage(format!("generator index {s} not in {}", self.kind())));
        }
        let w = self.eval_word(word.iter().copied());
        let reduced = w.length() == word.len();
        Ok((w, reduced))
    }

    /// Evaluates a word that must be reduced.
    pub fn element_from_reduced_word(&self, word: &[Gen]) -> Result<Element> {
        let (w, reduced) = self.element_from_word(word)?;
        if !reduced {
            return Err(usage("word is not reduced"));
        }
        Ok(w)
    }

    pub fn element_from_one_line(&self, v: &[i8]) -> Result<Element> {
        let n = self
            .one_line_size()
            .ok_or_else(|| Error::Unsupported(format!("1-line notation in type {}", self.kind())))?;
        if v.len() != n {
            return Err(usage(format!("{} needs {n} entries, got {}", self.kind(), v.len())));
        }
        let mut seen = vec![false; n + 1];
        for &x in v {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(usage(format!("{v:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        let negs = v.iter().filter(|&&x| x < 0).count();
        match self.graph.family() {
            Family::A if negs > 0 => return Err(usage("type A entries must be positive")),
            Family::D if negs % 2 == 1 => {
                return Err(usage("type D needs an even number of negative entries"))
            }
            _ => {}
        }
        Ok(self.from_data(v.iter().copied().collect()))
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    pub fn canonical_word(&self, w: &Element) -> Vec<Gen> {
        let mut word = Vec::with_capacity(w.length());
        let mut cur = w.clone();
        while !cur.is_identity() {
            let s = (0..self.rank()).find(|&s| self.is_right_descent(&cur, s)).unwrap();
            word.push(s);
            cur = self.mul_gen(&cur, s);
        }
        word.reverse();
        word
    }

    /// All reduced words of `w`, in lexicographic order. Fails once more
    /// than `cap` words have been produced.
    pub fn all_reduced_words(&self, w: &Element, cap: usize) -> Result<Vec<Vec<Gen>>> {
        let mut out = Vec::new();
        let mut suffix = Vec::with_capacity(w.length());
        self.words_rec(w, &mut suffix, &mut out, cap)?;
        for word in out.iter_mut() {
            word.reverse();
        }
        out.sort();
        Ok(out)
    }

    fn words_rec(&self, w: &Element, suffix: &mut Vec<Gen>, out: &mut Vec<Vec<Gen>>, cap: usize) -> Result<()> {
        if w.is_identity() {
            if out.len() >= cap {
                return Err(Error::Cap { what: "reduced word count".into(), cap });
            }
            out.push(suffix.clone());
            return Ok(());
        }
        for s in 0..self.rank() {
            if self.is_right_descent(w, s) {
                suffix.push(s);
                self.words_rec(&self.mul_gen(w, s), suffix, out, cap)?;
                suffix.pop();
            }
        }
        Ok(())
    }

    pub fn support(&self, w: &Element) -> GenSet {
        self.canonical_word(w).into_iter().collect()
    }

    pub fn is_connected(&self, w: &Element) -> bool {
        let sup: Vec<Gen> = self.support(w).iter().collect();
        self.graph.is_connected_subset(&sup)
    }

    /// Longest element, found by climbing along ascents.
    pub fn longest_element(&self) -> Element {
        let mut w = self.identity();
        while let Some(s) = (0..self.rank()).find(|&s| !self.is_right_descent(&w, s)) {
            w = self.mul_gen(&w, s);
        }
        w
    }

    /// Image of `w` under a graph automorphism given as a generator map.
    pub fn apply_automorphism(&self, w: &Element, perm: &[Gen]) -> Element {
        self.eval_word(self.canonical_word(w).into_iter().map(|s| perm[s]))
    }

    /// Every element of the group, by breadth-first search in right weak
    /// order. Intended for small groups.
    pub fn all_elements(&self) -> Vec<Element> {
        let mut seen = rustc_hash::FxHashSet::default();
        let mut layer = vec![self.identity()];
        seen.insert(self.identity());
        let mut out = Vec::new();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                for s in 0..self.rank() {
                    if !self.is_right_descent(w, s) {
                        let ws = self.mul_gen(w, s);
                        if seen.insert(ws.clone()) {
                            next.push(ws);
                        }
                    }
                }
            }
            out.append(&mut layer);
            layer = next;
        }
        out
    }

    pub fn format_word(&self, word: &[Gen]) -> String {
        super::notation::format_word(&self.graph, word)
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<Gen>> {
        super::notation::parse_word(&self.graph, text)
    }

    /// 1-line notation for A/B/D, canonical word otherwise.
    pub fn format_element(&self, w: &Element) -> String {
        match w.one_line() {
            Some(v) => super::notation::format_one_line(v),
            None => self.format_word(&self.canonical_word(w)),
        }
    }

    /// Inverse of `format_element`: accepts 1-line or word notation.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        if t.starts_with('[') {
            self.element_from_one_line(&super::notation::parse_one_line(t)?)
        } else {
            self.element_from_reduced_word(&self.parse_word(t)?)
        }
    }
}

/// Serializes through its payload; use `CoxeterGroup::format_element` for
/// human-readable output.
impl Serialize for Element {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.data.as_slice().serialize(ser)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.one_line() {
            Some(v) => f.write_str(&super::notation::format_one_line(v)),
            None => write!(f, "{}{:?}", self.kind, self.data.as_slice()),
        }
    }
}
