//! Enumeration of short-braid-avoiding elements, Deodhar counts, minimal
//! pattern discovery and sequence checks.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::coxeter::{CoxeterGroup, Element, Family, GroupKind};
use crate::error::{usage, Error, Result};
use crate::heap::{is_convex, is_convex_one_line_type_d, is_short_braid_avoiding};
use crate::hecke::is_tight;
use crate::mask::{is_deodhar_bruteforce, is_deodhar_dp, mask_cap};
use crate::pattern::{contains_embedded_factor, Classifier, FactorPattern, PatternLibrary, PatternRole, PrefixSet};

/// Short-braid-avoiding elements grouped by length, identity first. Each
/// element is generated once, from the parent obtained by removing its
/// smallest right descent.
pub fn enumerate_sba_by_length(group: &CoxeterGroup) -> Vec<Vec<Element>> {
    let mut strata = vec![vec![group.identity()]];
    loop {
        let layer = strata.last().expect("nonempty");
        let next: Vec<Element> = layer
            .par_iter()
            .flat_map_iter(|w| {
                (0..group.rank())
                    .filter(|&s| !group.is_right_descent(w, s))
                    .map(|s| (s, group.mul_gen(w, s)))
                    .filter(|(s, ws)| group.right_descents(ws).iter().next() == Some(*s))
                    .filter(|(_, ws)| is_short_braid_avoiding(group, ws))
                    .map(|(_, ws)| ws)
                    .collect::<Vec<_>>()
            })
            .collect();
        if next.is_empty() {
            return strata;
        }
        strata.push(next);
    }
}

pub fn enumerate_sba(group: &CoxeterGroup) -> Vec<Element> {
    enumerate_sba_by_length(group).into_iter().flatten().collect()
}

pub fn group_order(kind: GroupKind) -> u128 {
    let n = kind.rank as u128;
    let fact = |k: u128| (1..=k).product::<u128>();
    match (kind.family, kind.rank) {
        (Family::A, _) => fact(n + 1),
        (Family::B, _) => (1u128 << n) * fact(n),
        (Family::D, _) => (1u128 << (n - 1)) * fact(n),
        (Family::E, 6) => 51_840,
        (Family::E, 7) => 2_903_040,
        (Family::E, 8) => 696_729_600,
        (Family::F, _) => 1_152,
        (Family::G, _) => 12,
        _ => 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Patterns,
    Hecke,
    Masks,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "patterns" => Ok(Method::Patterns),
            "hecke" => Ok(Method::Hecke),
            "masks" => Ok(Method::Masks),
            _ => Err(usage(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Patterns => "patterns",
            Method::Hecke => "hecke",
            Method::Masks => "masks",
        })
    }
}

/// A verdict function for short-braid-avoiding elements of one group.
/// `None` means the method could not decide within its caps.
pub fn deodhar_oracle(group: &CoxeterGroup, method: Method) -> Box<dyn Fn(&Element) -> Option<bool> + Sync + '_> {
    match method {
        Method::Patterns => {
            let classifier = Classifier::new(group);
            Box::new(move |w| Some(classifier.classify(w).deodhar))
        }
        Method::Hecke => Box::new(move |w| is_tight(group, w).ok()),
        Method::Masks => {
            let cap = mask_cap();
            Box::new(move |w| (w.length() <= cap).then(|| is_deodhar_bruteforce(group, w).ok().map(|r| r.0)).flatten())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthRow {
    pub length: usize,
    pub sba: usize,
    pub deodhar: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convex: Option<usize>,
    /// Elements the method could not decide.
    pub undecided: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub method: Method,
    pub group_order: u128,
    pub by_length: Vec<LengthRow>,
    pub sba: usize,
    pub deodhar: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convex: Option<usize>,
    pub undecided: usize,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl EnumerationReport {
    pub fn is_complete(&self) -> bool {
        self.undecided == 0
    }

    /// `type,rank,length,count,sba[,convex]` with count = Deodhar elements.
    pub fn to_csv(&self) -> String {
        let convex = self.convex.is_some();
        let mut out = String::from("type,rank,length,count,sba");
        if convex {
            out.push_str(",convex");
        }
        out.push('\n');
        for r in &self.by_length {
            out.push_str(&format!("{},{},{},{},{}", self.family, self.rank, r.length, r.deodhar, r.sba));
            if let Some(c) = r.convex {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Counts Deodhar elements among the short-braid-avoiding ones; elements
/// outside that set are never Deodhar.
pub fn count_deodhar(group: &CoxeterGroup, method: Method) -> EnumerationReport {
    let start = Instant::now();
    let oracle = deodhar_oracle(group, method);
    let classical = group.kind().family.is_classical();
    let by_length: Vec<LengthRow> = enumerate_sba_by_length(group)
        .into_iter()
        .enumerate()
        .map(|(length, stratum)| {
            let (deodhar, undecided, convex) = stratum
                .par_iter()
                .map(|w| {
                    let v = oracle(w);
                    let c = classical && is_convex(group, w).unwrap_or(false);
                    ((v == Some(true)) as usize, v.is_none() as usize, c as usize)
                })
                .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
            LengthRow { length, sba: stratum.len(), deodhar, convex: classical.then_some(convex), undecided }
        })
        .collect();
    let kind = group.kind();
    EnumerationReport {
        family: kind.family,
        rank: kind.rank,
        method,
        group_order: group_order(kind),
        sba: by_length.iter().map(|r| r.sba).sum(),
        deodhar: by_length.iter().map(|r| r.deodhar).sum(),
        convex: classical.then(|| by_length.iter().filter_map(|r| r.convex).sum()),
        undecided: by_length.iter().map(|r| r.undecided).sum(),
        by_length,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Published (Deodhar, short-braid-avoiding) counts.
pub fn golden_count(kind: GroupKind) -> Option<(usize, usize)> {
    let ab = [(5, 5), (14, 14), (42, 42), (132, 132), (429, 429), (1426, 1430), (4806, 4862)];
    match (kind.family, kind.rank) {
        (Family::A | Family::B, r @ 2..=8) => Some(ab[r - 2]),
        (Family::G, 2) => Some(ab[0]),
        (Family::F, 4) => Some(ab[2]),
        (Family::D, 4) => Some((48, 48)),
        (Family::D, 5) => Some((167, 167)),
        (Family::D, 6) => Some((575, 593)),
        (Family::D, 7) => Some((1976, 2144)),
        (Family::D, 8) => Some((6791, 7864)),
        (Family::E, 6) => Some((642, 662)),
        (Family::E, 7) => Some((2341, 2670)),
        (Family::E, 8) => Some((8305, 10846)),
        _ => None,
    }
}

/// Published numbers of convex elements of D1, D2, ….
pub const CONVEX_TYPE_D: [usize; 6] = [1, 4, 13, 44, 154, 552];

/// Convex elements of D_n, counted by the heap test and by the 1-line
/// characterization over the whole group. D1 is the trivial group.
pub fn count_convex_type_d(rank: usize) -> Result<(usize, usize)> {
    if rank == 0 {
        return Err(usage("rank must be positive"));
    }
    if rank == 1 {
        return Ok((1, 1));
    }
    let g = CoxeterGroup::new(Family::D, rank)?;
    let by_heap = enumerate_sba(&g).par_iter().filter(|w| is_convex(&g, w).unwrap_or(false)).count();
    let by_one_line = g.all_elements().par_iter().filter(|w| is_convex_one_line_type_d(&g, w).unwrap_or(false)).count();
    Ok((by_heap, by_one_line))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stratum {
    Convex,
    Sba,
}

impl FromStr for Stratum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "convex" => Ok(Stratum::Convex),
            "sba" => Ok(Stratum::Sba),
            _ => Err(usage(format!("unknown stratum {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalPattern {
    pub word: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_line: Option<String>,
    pub length: usize,
    /// Library pattern this element is an embedded copy of, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub library_name: Option<String>,
    #[serde(skip)]
    pub element: Option<Element>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalPatternReport {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub stratum: Stratum,
    pub short_braid: bool,
    pub patterns: Vec<MinimalPattern>,
    pub complete: bool,
}

impl MinimalPatternReport {
    /// Number of reported patterns, counting the short braid.
    pub fn count(&self) -> usize {
        self.patterns.len() + self.short_braid as usize
    }
}

/// Minimal non-Deodhar elements of the stratum, found by increasing length.
/// Elements containing an earlier find as an embedded factor are skipped;
/// the rest are tested by the mask recursion. Results are reduced modulo
/// the graph automorphism, keeping the smallest word.
pub fn find_minimal_non_deodhar(group: &CoxeterGroup, stratum: Stratum, max_length: Option<usize>) -> Result<MinimalPatternReport> {
    if stratum == Stratum::Convex && !group.kind().family.is_classical() {
        return Err(Error::Unsupported(format!("convex stratum in type {}", group.kind())));
    }
    let strata = enumerate_sba_by_length(group);
    let complete = max_length.map_or(true, |m| m + 1 >= strata.len());
    let mut found: Vec<Vec<Vec<crate::coxeter::Gen>>> = Vec::new();
    let mut minimal: Vec<Element> = Vec::new();
    for layer in strata.iter().take(max_length.map_or(usize::MAX, |m| m + 1)) {
        let mut hits: Vec<Element> = layer
            .par_iter()
            .filter(|w| stratum == Stratum::Sba || is_convex(group, w).unwrap_or(false))
            .filter(|w| {
                let prefixes = PrefixSet::new(group, w);
                !found.iter().flatten().any(|y| y.len() <= w.length() && prefixes.has_factor_word(group, y))
            })
            .filter(|w| !is_deodhar_dp(group, w))
            .cloned()
            .collect();
        hits.sort_by_key(|w| group.format_word(&group.canonical_word(w)));
        for w in hits {
            found.push(FactorPattern::from_element("", group, &w).images(group, false));
            minimal.push(w);
        }
    }
    let short_braid = group.graph().edges().iter().any(|e| e.2 >= 3);
    let patterns = reduce_by_symmetry(group, minimal);
    Ok(MinimalPatternReport { family: group.kind().family, rank: group.rank(), stratum, short_braid, patterns, complete })
}

fn reduce_by_symmetry(group: &CoxeterGroup, elements: Vec<Element>) -> Vec<MinimalPattern> {
    let auto = group.graph().automorphism();
    let mut reps: Vec<(String, Element)> = Vec::new();
    for w in elements {
        let mut best = (group.format_word(&group.canonical_word(&w)), w.clone());
        if let Some(p) = &auto {
            let image = group.apply_automorphism(&w, p);
            let word = group.format_word(&group.canonical_word(&image));
            if word < best.0 {
                best = (word, image);
            }
        }
        if !reps.iter().any(|r| r.1 == best.1) {
            reps.push(best);
        }
    }
    let library = PatternLibrary::standard();
    reps.into_iter()
        .map(|(word, w)| {
            let library_name = library
                .patterns
                .iter()
                .filter(|p| p.role != PatternRole::Antichain)
                .find(|p| is_embedded_copy(group, &w, &p.factor_pattern()))
                .map(|p| p.name.clone());
            MinimalPattern {
                word,
                one_line: w.one_line().map(crate::coxeter::notation::format_one_line),
                length: w.length(),
                library_name,
                element: Some(w),
            }
        })
        .collect()
}

/// Whether `w` is f(p) for some Coxeter embedding f.
pub fn is_embedded_copy(group: &CoxeterGroup, w: &Element, p: &FactorPattern) -> bool {
    w.length() == p.len() && contains_embedded_factor(group, w, p)
}

/// Initial values c₁..c₆ of the 321-hexagon-avoiding sequence.
pub const STANKOVA_WEST_START: [u64; 6] = [1, 2, 5, 14, 42, 132];

/// Counts Deodhar permutations in S₁..S_{n_max} with the pattern classifier
/// and checks them against the recurrence and initial values.
pub fn stankova_west_check(n_max: usize) -> Result<(bool, Vec<u64>)> {
    if !(6..=12).contains(&n_max) {
        return Err(Error::Cap { what: format!("Stankova–West check up to n = {n_max}"), cap: 12 });
    }
    let mut c = vec![1u64];
    for n in 2..=n_max {
        let g = CoxeterGroup::new(Family::A, n - 1)?;
        let classifier = Classifier::new(&g);
        c.push(enumerate_sba(&g).par_iter().filter(|w| classifier.classify(w).deodhar).count() as u64);
    }
    let starts_ok = c[..6] == STANKOVA_WEST_START;
    let recurrence_ok = (6..n_max).all(|n| {
        // c is 0-indexed: c[k - 1] = c_k.
        let at = |k: usize| c[k - 1] as i64;
        at(n + 1) == 6 * at(n) - 11 * at(n - 1) + 9 * at(n - 2) - 4 * at(n - 3) - 4 * at(n - 4) + at(n - 5)
    });
    Ok((starts_ok && recurrence_ok, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sba_counts_small() {
        let a4 = CoxeterGroup::new(Family::A, 4).unwrap();
        let all = enumerate_sba(&a4);
        assert_eq!(all.len(), 42);
        assert!(all[0].is_identity());
        let d4 = CoxeterGroup::new(Family::D, 4).unwrap();
        let by_onel = d4.all_elements().iter().filter(|w| crate::heap::is_sba_one_line_type_d(&d4, w).unwrap()).count();
        assert_eq!(enumerate_sba(&d4).len(), by_onel);
    }

    #[test]
    fn report_shapes() {
        let a3 = CoxeterGroup::new(Family::A, 3).unwrap();
        let r = count_deodhar(&a3, Method::Patterns);
        assert_eq!((r.deodhar, r.sba, r.convex), (14, 14, Some(14)));
        assert_eq!(r.group_order, 24);
        assert!(r.to_csv().starts_with("type,rank,length,count,sba,convex\nA,3,0,1,1,1\n"));
        assert_eq!(r.to_json()["method"], "patterns");
        assert!("bogus".parse::<Method>().is_err());
    }

    #[test]
    fn convex_small() {
        assert_eq!(count_convex_type_d(1).unwrap(), (1, 1));
        assert_eq!(count_convex_type_d(3).unwrap(), (13, 13));
        assert!(count_convex_type_d(0).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(GroupKind::new(Family::D, 4)), 192);
        assert_eq!(group_order(GroupKind::new(Family::B, 3)), 48);
        assert_eq!(group_order(GroupKind::new(Family::E, 6)), 51_840);
    }
}
