//! Signed 1-line pattern containment.

use serde::{Deserialize, Serialize};

use crate::coxeter::Family;
use crate::error::{usage, Result};

/// A 1-line word tagged with its family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedPattern {
    pub family: Family,
    pub entries: Vec<i8>,
}

impl SignedPattern {
    pub fn new(family: Family, entries: Vec<i8>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &x in &entries {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(usage(format!("{entries:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        let negs = entries.iter().filter(|&&x| x < 0).count();
        match family {
            Family::A if negs > 0 => Err(usage("type A patterns have no bars")),
            Family::D if negs % 2 == 1 => Err(usage("type D patterns need an even number of bars")),
            Family::A | Family::B | Family::D => Ok(SignedPattern { family, entries }),
            _ => Err(usage(format!("no 1-line notation in type {family}"))),
        }
    }

    pub fn contained_in(&self, w: &[i8]) -> bool {
        contains_one_line(w, &self.entries).0
    }
}

/// Looks for positions i₁ < … < i_k in `w` whose absolute values are
/// order-isomorphic to those of `p` and whose signs match `p` exactly.
/// Returns the lexicographically first witness (1-based positions).
pub fn contains_one_line(w: &[i8], p: &[i8]) -> (bool, Option<Vec<usize>>) {
    if p.len() > w.len() {
        return (false, None);
    }
    let mut chosen = Vec::with_capacity(p.len());
    if search(w, p, 0, &mut chosen) {
        let pos = chosen.iter().map(|&i| i + 1).collect();
        (true, Some(pos))
    } else {
        (false, None)
    }
}

fn search(w: &[i8], p: &[i8], start: usize, chosen: &mut Vec<usize>) -> bool {
    let k = chosen.len();
    if k == p.len() {
        return true;
    }
    let remaining = p.len() - k;
    for i in start..=w.len() - remaining {
        if (w[i] < 0) != (p[k] < 0) {
            continue;
        }
        let consistent = chosen.iter().enumerate().all(|(a, &j)| {
            (w[j].unsigned_abs() < w[i].unsigned_abs()) == (p[a].unsigned_abs() < p[k].unsigned_abs())
        });
        if consistent {
            chosen.push(i);
            if search(w, p, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Classical containment: signs ignored.
pub fn contains_classical(w: &[i8], p: &[i8]) -> bool {
    let wa: Vec<i8> = w.iter().map(|x| x.abs()).collect();
    let pa: Vec<i8> = p.iter().map(|x| x.abs()).collect();
    contains_one_line(&wa, &pa).0
}
