use deodhar_core::coxeter::notation::parse_one_line;
use deodhar_core::error::Result;
use deodhar_core::{CoxeterGroup, Element, Error, Family, Gen};

use crate::ElementArgs;

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

/// Smallest rank the CLI guesses for each family.
fn min_rank(f: Family) -> usize {
    match f {
        Family::A => 1,
        Family::B | Family::G => 2,
        Family::D | Family::F => 4,
        Family::E => 6,
    }
}

fn infer_rank(f: Family, one_line: Option<&[i8]>, word: Option<&str>) -> usize {
    let guess = match (one_line, word) {
        (Some(v), _) => match f {
            Family::A => v.len().saturating_sub(1),
            _ => v.len(),
        },
        (None, Some(w)) => {
            let top = w
                .split(|c: char| !c.is_ascii_digit())
                .filter_map(|t| t.parse::<usize>().ok())
                .max()
                .unwrap_or(0);
            match f {
                Family::A => top,
                _ => top + 1,
            }
        }
        (None, None) => 0,
    };
    match f {
        Family::F => 4,
        Family::G => 2,
        _ => guess.max(min_rank(f)),
    }
}

pub fn family(text: &str) -> Result<Family> {
    text.parse().map_err(|_| usage(format!("unknown type {text:?}")))
}

pub fn group(family_text: &str, rank: usize) -> Result<CoxeterGroup> {
    let f = family(family_text)?;
    CoxeterGroup::new(f, rank).map_err(|_| usage(format!("no group of type {f}{rank}")))
}

/// The group, the element and the word used to reach it. A given word is
/// kept as typed; a 1-line input uses the canonical word.
pub struct Resolved {
    pub group: CoxeterGroup,
    pub element: Element,
    pub word: Vec<Gen>,
}

pub fn resolve(args: &ElementArgs) -> Result<Resolved> {
    let f = family(&args.family)?;
    let one_line = args.one_line.as_deref().map(parse_one_line).transpose()?;
    if one_line.is_none() && args.word.is_none() {
        return Err(usage("give the element with --one-line or --word"));
    }
    let rank = args.rank.unwrap_or_else(|| infer_rank(f, one_line.as_deref(), args.word.as_deref()));
    let g = CoxeterGroup::new(f, rank).map_err(|_| usage(format!("no group of type {f}{rank}")))?;
    match (one_line, &args.word) {
        (Some(v), _) => {
            if !f.is_classical() {
                return Err(usage(format!("type {f} has no 1-line notation")));
            }
            let w = g.element_from_one_line(&v)?;
            let word = g.canonical_word(&w);
            Ok(Resolved { group: g, element: w, word })
        }
        (None, Some(text)) => {
            let word = g.parse_word(text)?;
            let w = g.element_from_reduced_word(&word)?;
            Ok(Resolved { group: g, element: w, word })
        }
        (None, None) => unreachable!("checked above"),
    }
}

/// A second element of the same group, defaulting to the identity.
pub fn other(g: &CoxeterGroup, one_line: Option<&str>, word: Option<&str>) -> Result<Element> {
    match (one_line, word) {
        (Some(v), _) => g.element_from_one_line(&parse_one_line(v)?),
        (None, Some(w)) => g.element_from_reduced_word(&g.parse_word(w)?),
        (None, None) => Ok(g.identity()),
    }
}
