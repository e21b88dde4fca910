//! The fixed table of minimal non-Deodhar patterns, loaded from JSON.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::factor::FactorPattern;
use crate::coxeter::{CoxeterGroup, Element, Family, Gen, GroupKind};
use crate::error::{usage, Error, Result};
use crate::heap::{coalesce, lattice_heap_of};
use crate::mask::Mask;

const LIBRARY_JSON: &str = include_str!("../../data/patterns.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternRole {
    /// Avoided as an embedded factor by every Deodhar element.
    Factor,
    /// Avoided as a signed 1-line pattern in type D.
    OneLine,
    /// Non-Deodhar, but implied by the other patterns.
    Antichain,
}

/// Lattice points (column, level) of the drawn heap carrying mask value
/// zero, split by defect status. Every other entry has mask value one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessHeap {
    pub zero_defects: Vec<[i32; 2]>,
    pub plain_zeros: Vec<[i32; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LibraryEntry {
    pub name: String,
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub role: PatternRole,
    pub word: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one_line: Option<Vec<i8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessHeap>,
}

impl LibraryEntry {
    pub fn kind(&self) -> GroupKind {
        GroupKind::new(self.family, self.rank)
    }

    pub fn group(&self) -> CoxeterGroup {
        CoxeterGroup::of_kind(self.kind()).expect("library groups are supported")
    }

    pub fn letters(&self, group: &CoxeterGroup) -> Vec<Gen> {
        group.parse_word(&self.word).expect("library words parse")
    }

    pub fn element(&self, group: &CoxeterGroup) -> Element {
        group.eval_word(self.letters(group))
    }

    pub fn factor_pattern(&self) -> FactorPattern {
        let g = self.group();
        let word = self.letters(&g);
        FactorPattern { name: self.name.clone(), graph: g.graph().clone(), word }
    }

    /// The drawn mask, aligned with the stored word.
    pub fn witness_mask(&self) -> Option<Mask> {
        let witness = self.witness.as_ref()?;
        let g = self.group();
        let gravity = lattice_heap_of(self.kind(), &self.letters(&g)).ok()?;
        let zeros: Vec<[i32; 2]> = witness.zero_defects.iter().chain(&witness.plain_zeros).copied().collect();
        // Drawings use the coalesced layout unless some point only exists in the gravity one.
        [coalesce(&gravity), gravity].into_iter().find_map(|heap| {
            let points: Vec<[i32; 2]> = heap.entries().iter().map(|e| [e.column, e.level]).collect();
            zeros
                .iter()
                .all(|z| points.contains(z))
                .then(|| Mask::new(points.iter().map(|pt| !zeros.contains(pt)).collect()))
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PatternLibrary {
    pub version: u32,
    pub patterns: Vec<LibraryEntry>,
}

impl PatternLibrary {
    pub fn from_json(text: &str) -> Result<Self> {
        let lib: PatternLibrary =
            serde_json::from_str(text).map_err(|e| Error::Config(format!("pattern library: {e}")))?;
        for p in &lib.patterns {
            let g = CoxeterGroup::of_kind(p.kind())?;
            let (w, reduced) = g.element_from_word(&g.parse_word(&p.word)?)?;
            if !reduced {
                return Err(Error::Config(format!("{}: word is not reduced", p.name)));
            }
            if let Some(v) = &p.one_line {
                if g.element_from_one_line(v)? != w {
                    return Err(Error::Config(format!("{}: 1-line form disagrees with the word", p.name)));
                }
            }
        }
        Ok(lib)
    }

    /// The shipped table.
    pub fn standard() -> &'static PatternLibrary {
        static LIB: OnceLock<PatternLibrary> = OnceLock::new();
        LIB.get_or_init(|| PatternLibrary::from_json(LIBRARY_JSON).expect("shipped pattern library is valid"))
    }

    pub fn raw_json() -> &'static str {
        LIBRARY_JSON
    }

    pub fn get(&self, name: &str) -> Result<&LibraryEntry> {
        self.patterns.iter().find(|p| p.name == name).ok_or_else(|| usage(format!("no pattern named {name}")))
    }

    pub fn with_role(&self, role: PatternRole) -> impl Iterator<Item = &LibraryEntry> {
        self.patterns.iter().filter(move |p| p.role == role)
    }
}
