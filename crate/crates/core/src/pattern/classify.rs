//! Deodhar classification by pattern avoidance.

use serde::Serialize;

use super::factor::{contains_embedded_factor_with, contains_factor, FactorPattern, PrefixSet};
use super::library::{PatternLibrary, PatternRole};
use super::one_line::contains_one_line;
use crate::coxeter::{CoxeterGroup, Element, Family, Gen, GenSet};
use crate::error::{usage, Result};
use crate::heap::{is_convex, props::heap_is_short_braid_avoiding};

pub const SHORT_BRAID: &str = "short-braid";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub deodhar: bool,
    /// First pattern found, in library order.
    pub pattern: Option<String>,
}

struct Probe {
    name: String,
    images: Vec<(Vec<Gen>, GenSet)>,
}

/// Library patterns pre-embedded into one group.
pub struct Classifier {
    group: CoxeterGroup,
    probes: Vec<Probe>,
    one_line: Vec<(String, Vec<i8>)>,
}

impl Classifier {
    pub fn new(group: &CoxeterGroup) -> Self {
        Self::with_library(group, PatternLibrary::standard())
    }

    pub fn with_library(group: &CoxeterGroup, lib: &PatternLibrary) -> Self {
        let probes = lib
            .with_role(PatternRole::Factor)
            .map(|p| {
                let images = p
                    .factor_pattern()
                    .images(group, false)
                    .into_iter()
                    .map(|y| {
                        let support = y.iter().copied().collect();
                        (y, support)
                    })
                    .collect();
                Probe { name: p.name.clone(), images }
            })
            .filter(|p| !p.images.is_empty())
            .collect();
        let one_line = if group.kind().family == Family::D {
            lib.with_role(PatternRole::OneLine)
                .filter_map(|p| Some((p.name.clone(), p.one_line.clone()?)))
                .collect()
        } else {
            Vec::new()
        };
        Classifier { group: group.clone(), probes, one_line }
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    /// Names of the patterns this classifier probes, in order.
    pub fn pattern_names(&self) -> Vec<&str> {
        std::iter::once(SHORT_BRAID)
            .chain(self.probes.iter().map(|p| p.name.as_str()))
            .chain(self.one_line.iter().map(|p| p.0.as_str()))
            .collect()
    }

    pub fn classify(&self, w: &Element) -> Classification {
        let g = &self.group;
        let word = g.canonical_word(w);
        let heap = crate::heap::HeapPoset::from_word(g.graph(), &word);
        if !heap_is_short_braid_avoiding(g.graph(), &heap) {
            return violated(SHORT_BRAID);
        }
        let support = g.support(w);
        let mut prefixes: Option<PrefixSet> = None;
        for probe in &self.probes {
            for (y, ys) in &probe.images {
                if y.len() > w.length() || !ys.is_subset(support) {
                    continue;
                }
                let set = prefixes.get_or_insert_with(|| PrefixSet::new(g, w));
                if set.has_factor_word(g, y) {
                    return violated(&probe.name);
                }
            }
        }
        if let Some(v) = w.one_line() {
            for (name, p) in &self.one_line {
                if contains_one_line(v, p).0 {
                    return violated(name);
                }
            }
        }
        Classification { deodhar: true, pattern: None }
    }
}

fn violated(name: &str) -> Classification {
    Classification { deodhar: false, pattern: Some(name.to_string()) }
}

/// One-off classification; build a [`Classifier`] when testing many elements.
pub fn classify_deodhar(group: &CoxeterGroup, w: &Element) -> Classification {
    Classifier::new(group).classify(w)
}

fn pattern_group(p: &FactorPattern, extra_rank: usize) -> Result<CoxeterGroup> {
    CoxeterGroup::new(p.kind().family, p.kind().rank + extra_rank)
}

/// Convex elements of the pattern's own group that contain it as a factor.
pub fn upper_ideal_convex(p: &FactorPattern) -> Result<Vec<Element>> {
    let g = pattern_group(p, 0)?;
    let pe = g.eval_word(p.word.iter().copied());
    if !is_convex(&g, &pe)? {
        return Err(usage(format!("{} is not convex", p.name)));
    }
    let mut out = Vec::new();
    for q in crate::search::enumerate_sba(&g) {
        if q.length() >= pe.length() && is_convex(&g, &q)? && contains_factor(&g, &q, &pe)? {
            out.push(q);
        }
    }
    Ok(out)
}

/// Whether every convex element one rank up that contains the pattern's
/// 1-line form also contains it as an orientation-preserving embedded factor.
pub fn is_ideal_pattern(p: &FactorPattern) -> Result<bool> {
    let g = pattern_group(p, 0)?;
    let pe = g.eval_word(p.word.iter().copied());
    let Some(v) = pe.one_line().map(<[i8]>::to_vec) else {
        return Err(usage("ideal patterns need a 1-line form"));
    };
    let up = pattern_group(p, 1)?;
    for q in crate::search::enumerate_sba(&up) {
        let ql = q.one_line().expect("classical");
        if !contains_one_line(ql, &v).0 || !is_convex(&up, &q)? {
            continue;
        }
        if !contains_embedded_factor_with(&up, &q, p, true) {
            return Ok(false);
        }
    }
    Ok(true)
}
