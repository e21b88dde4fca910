//! Monospace heap pictures.
//!
//! Each lattice point is a two-character cell; rows run from the top level
//! down, columns left to right, with a column-number footer. Glyphs:
//!
//! | glyph | meaning                         |
//! |-------|---------------------------------|
//! | `o`   | entry, no decoration            |
//! | `*`   | mask value 1                    |
//! | `D`   | zero-defect                     |
//! | `0`   | plain-zero                      |
//! | `?`   | status unknown                  |
//! | `x`   | point marked absent             |
//! | `#`   | highlighted                     |
//!
//! The second character of a cell is `~` for a lone s~1 entry, or the glyph
//! of the s~1 entry when the point holds both s1 and s~1.

use serde::{Deserialize, Serialize};

use super::lattice::LatticeHeap;
use crate::coxeter::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Decoration {
    One,
    ZeroDefect,
    PlainZero,
    Unknown,
    Absent,
    Highlighted,
}

impl Decoration {
    pub fn glyph(self) -> char {
        match self {
            Decoration::One => '*',
            Decoration::ZeroDefect => 'D',
            Decoration::PlainZero => '0',
            Decoration::Unknown => '?',
            Decoration::Absent => 'x',
            Decoration::Highlighted => '#',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Decoration::One => "one",
            Decoration::ZeroDefect => "zero-defect",
            Decoration::PlainZero => "plain-zero",
            Decoration::Unknown => "unknown",
            Decoration::Absent => "absent",
            Decoration::Highlighted => "highlighted",
        }
    }
}

pub const UNDECORATED: char = 'o';

pub fn render_ascii(h: &LatticeHeap, decorations: Option<&[Decoration]>) -> String {
    let Some((lo_level, hi_level)) = h.level_range() else {
        return String::new();
    };
    let (lo_col, hi_col) = h.graph().column_range();
    let occ = h.occupation();
    let fork = |i: usize| h.kind().family == Family::D && h.entries()[i].gen == 0;
    let glyph = |i: usize| decorations.map_or(UNDECORATED, |d| d[i].glyph());
    let mut lines = Vec::new();
    for level in (lo_level..=hi_level).rev() {
        let mut line = String::new();
        for col in lo_col..=hi_col {
            match occ.get(&(col, level)).map(Vec::as_slice) {
                None | Some([]) => line.push_str("  "),
                Some([i]) => {
                    line.push(glyph(*i));
                    line.push(if fork(*i) { '~' } else { ' ' });
                }
                Some(many) => {
                    let mut idx = many.to_vec();
                    idx.sort_by_key(|&i| fork(i));
                    line.push(glyph(idx[0]));
                    line.push(glyph(idx[1]));
                }
            }
        }
        lines.push(line.trim_end().to_string());
    }
    let footer: String = (lo_col..=hi_col).map(|c| format!("{:<2}", c.rem_euclid(10))).collect();
    lines.push(footer.trim_end().to_string());
    lines.join("\n") + "\n"
}
