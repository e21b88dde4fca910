//! Masks on reduced words, defects and the Deodhar condition.

use std::fmt;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::coxeter::{CoxeterGroup, Element, Gen};
use crate::error::{usage, Error, Result};
use crate::heap::Decoration;
use crate::poly::Poly;

pub const DEFAULT_MASK_CAP: usize = 24;

/// Longest word the brute-force mask scans accept: `DEODHAR_MASK_CAP` if set
/// to a number, otherwise [`DEFAULT_MASK_CAP`].
pub fn mask_cap() -> usize {
    std::env::var("DEODHAR_MASK_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MASK_CAP)
}

fn check_cap(len: usize) -> Result<()> {
    let cap = mask_cap();
    if len > cap {
        return Err(Error::Cap { what: format!("mask scan over a word of length {len}"), cap });
    }
    Ok(())
}

/// A 0/1 assignment to the letters of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Mask {
    bits: Vec<bool>,
}

impl Mask {
    pub fn new(bits: Vec<bool>) -> Self {
        Mask { bits }
    }

    pub fn ones(k: usize) -> Self {
        Mask { bits: vec![true; k] }
    }

    /// Bit j of `value` is the value at position j + 1.
    pub fn from_int(k: usize, value: u64) -> Self {
        Mask { bits: (0..k).map(|j| value >> j & 1 == 1).collect() }
    }

    pub fn to_int(&self) -> u64 {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| 1u64 << j).sum()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Has at least one zero.
    pub fn is_proper(&self) -> bool {
        self.bits.iter().any(|b| !b)
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bits.iter().try_for_each(|&b| write!(f, "{}", if b { '1' } else { '0' }))
    }
}

impl std::str::FromStr for Mask {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(usage(format!("bad mask character {c:?}"))),
            })
            .collect::<Result<Vec<bool>>>()
            .map(Mask::new)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskEvaluation {
    /// The product of the letters kept by the mask.
    pub element: Element,
    /// Defect positions, 1-based.
    pub defects: Vec<usize>,
    pub zero_defects: usize,
    pub plain_zeros: usize,
    pub proper: bool,
}

impl MaskEvaluation {
    pub fn defect_count(&self) -> usize {
        self.defects.len()
    }
}

pub fn evaluate_mask(group: &CoxeterGroup, word: &[Gen], mask: &Mask) -> Result<MaskEvaluation> {
    if word.len() != mask.len() {
        return Err(usage(format!("mask of length {} on a word of length {}", mask.len(), word.len())));
    }
    let mut x = group.identity();
    let mut defects = Vec::new();
    let (mut zero_defects, mut plain_zeros) = (0, 0);
    for (j, (&s, &bit)) in word.iter().zip(mask.bits()).enumerate() {
        let defect = group.is_right_descent(&x, s);
        if defect {
            defects.push(j + 1);
        }
        match (bit, defect) {
            (true, _) => x = group.mul_gen(&x, s),
            (false, true) => zero_defects += 1,
            (false, false) => plain_zeros += 1,
        }
    }
    Ok(MaskEvaluation { element: x, defects, zero_defects, plain_zeros, proper: mask.is_proper() })
}

/// Zero-defects strictly fewer than plain-zeros.
pub fn is_deodhar_mask(eval: &MaskEvaluation) -> bool {
    eval.zero_defects < eval.plain_zeros
}

pub fn decorate(group: &CoxeterGroup, word: &[Gen], mask: &Mask) -> Result<Vec<Decoration>> {
    let eval = evaluate_mask(group, word, mask)?;
    Ok(mask
        .bits()
        .iter()
        .enumerate()
        .map(|(j, &b)| match (b, eval.defects.contains(&(j + 1))) {
            (true, _) => Decoration::One,
            (false, true) => Decoration::ZeroDefect,
            (false, false) => Decoration::PlainZero,
        })
        .collect())
}

/// State of a depth-first sweep over masks: the product so far, the mask
/// bits chosen as an integer, the defect count and zero statistics.
struct Visit<'a> {
    element: &'a Element,
    value: u64,
    defects: u32,
    zero_defects: i32,
    plain_zeros: i32,
}

/// Folds `leaf` over every mask of `word` into per-thread accumulators,
/// then merges them. Subtrees are split across threads near the root.
fn sweep<T, F, M>(group: &CoxeterGroup, word: &[Gen], leaf: &F, merge: &M) -> T
where
    T: Send + Default,
    F: Fn(&mut T, &Visit) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    let split = if word.len() > 14 { 6 } else { 0 };
    (0..1u64 << split)
        .into_par_iter()
        .fold(T::default, |mut acc, prefix| {
            let mut x = group.identity();
            let (mut defects, mut zd, mut pz) = (0, 0, 0);
            for (j, &s) in word[..split].iter().enumerate() {
                let d = group.is_right_descent(&x, s);
                defects += d as u32;
                if prefix >> j & 1 == 1 {
                    x = group.mul_gen(&x, s);
                } else if d {
                    zd += 1;
                } else {
                    pz += 1;
                }
            }
            let root = Visit { element: &x, value: prefix, defects, zero_defects: zd, plain_zeros: pz };
            descend(group, word, split, &root, &mut acc, leaf);
            acc
        })
        .reduce(T::default, merge)
}

fn descend<T, F: Fn(&mut T, &Visit)>(group: &CoxeterGroup, word: &[Gen], j: usize, v: &Visit, acc: &mut T, leaf: &F) {
    if j == word.len() {
        return leaf(acc, v);
    }
    let s = word[j];
    let d = group.is_right_descent(v.element, s);
    let zero = Visit {
        element: v.element,
        value: v.value,
        defects: v.defects + d as u32,
        zero_defects: v.zero_defects + d as i32,
        plain_zeros: v.plain_zeros + !d as i32,
    };
    descend(group, word, j + 1, &zero, acc, leaf);
    let next = group.mul_gen(v.element, s);
    let one = Visit {
        element: &next,
        value: v.value | 1 << j,
        defects: v.defects + d as u32,
        zero_defects: v.zero_defects,
        plain_zeros: v.plain_zeros,
    };
    descend(group, word, j + 1, &one, acc, leaf);
}

/// Scans every proper mask of the canonical word. Returns the verdict and,
/// for non-Deodhar elements, the violating mask with the smallest integer
/// value.
pub fn is_deodhar_bruteforce(group: &CoxeterGroup, w: &Element) -> Result<(bool, Option<Mask>)> {
    let word = group.canonical_word(w);
    is_deodhar_word_bruteforce(group, &word)
}

pub fn is_deodhar_word_bruteforce(group: &CoxeterGroup, word: &[Gen]) -> Result<(bool, Option<Mask>)> {
    check_cap(word.len())?;
    let full = if word.is_empty() { 0 } else { u64::MAX >> (64 - word.len()) };
    let worst = sweep(
        group,
        word,
        &|acc: &mut Option<u64>, v: &Visit| {
            if v.value != full && v.zero_defects >= v.plain_zeros {
                *acc = Some(acc.map_or(v.value, |a| a.min(v.value)));
            }
        },
        &|a: Option<u64>, b: Option<u64>| match (a, b) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        },
    );
    Ok(match worst {
        None => (true, None),
        Some(v) => (false, Some(Mask::from_int(word.len(), v))),
    })
}

/// Maximum of zero-defects minus plain-zeros over proper masks, computed by
/// dynamic programming over the partial products instead of enumerating
/// masks. `None` when the word is empty. States that cannot reach 0 are
/// dropped, so the result is exact only when it is ≥ 0.
fn best_proper_score(group: &CoxeterGroup, word: &[Gen]) -> Option<i32> {
    let k = word.len();
    if k == 0 {
        return None;
    }
    // The all-ones prefix is the unique state without a zero.
    let mut full = group.identity();
    let mut proper: FxHashMap<Element, i32> = FxHashMap::default();
    for (j, &s) in word.iter().enumerate() {
        let remaining = (k - j - 1) as i32;
        let mut next: FxHashMap<Element, i32> = FxHashMap::default();
        let mut offer = |x: Element, score: i32| {
            if score + remaining >= 0 {
                let e = next.entry(x).or_insert(i32::MIN);
                *e = (*e).max(score);
            }
        };
        for (x, &score) in &proper {
            let d = group.is_right_descent(x, s);
            offer(x.clone(), score + if d { 1 } else { -1 });
            offer(group.mul_gen(x, s), score);
        }
        let d = group.is_right_descent(&full, s);
        offer(full.clone(), if d { 1 } else { -1 });
        full = group.mul_gen(&full, s);
        proper = next;
    }
    proper.values().copied().max()
}

/// Deodhar test by dynamic programming; no length cap.
pub fn is_deodhar_dp(group: &CoxeterGroup, w: &Element) -> bool {
    best_proper_score(group, &group.canonical_word(w)).map_or(true, |best| best < 0)
}

fn require_deodhar(group: &CoxeterGroup, w: &Element) -> Result<()> {
    if !is_deodhar_dp(group, w) {
        return Err(Error::Precondition(format!("{} is not Deodhar", group.format_element(w))));
    }
    Ok(())
}

/// Σ_σ q^d(σ) grouped by the product w^σ, over every mask of `word`.
pub fn mask_sums(group: &CoxeterGroup, word: &[Gen]) -> Result<FxHashMap<Element, Poly>> {
    check_cap(word.len())?;
    type Acc = FxHashMap<Element, Poly>;
    let merge = |mut a: Acc, b: Acc| {
        for (x, p) in b {
            *a.entry(x).or_default() += &p;
        }
        a
    };
    Ok(sweep(
        group,
        word,
        &|acc: &mut Acc, v: &Visit| {
            if let Some(p) = acc.get_mut(v.element) {
                p.add_monomial(1, v.defects as usize);
            } else {
                acc.insert(v.element.clone(), Poly::monomial(1, v.defects as usize));
            }
        },
        &merge,
    ))
}

/// All nonzero P_{x,w} for a Deodhar w, from one sweep over the masks of the
/// canonical word.
pub fn kl_polynomials(group: &CoxeterGroup, w: &Element) -> Result<FxHashMap<Element, Poly>> {
    require_deodhar(group, w)?;
    mask_sums(group, &group.canonical_word(w))
}

pub fn kl_polynomial(group: &CoxeterGroup, w: &Element, x: &Element) -> Result<Poly> {
    if x.kind() != group.kind() {
        return Err(usage("elements from different groups"));
    }
    Ok(kl_polynomials(group, w)?.remove(x).unwrap_or_default())
}

/// Σ over all masks of q^(defects + length of the product), as a polynomial.
pub fn mask_poincare_sum(group: &CoxeterGroup, w: &Element) -> Result<Poly> {
    let word = group.canonical_word(w);
    check_cap(word.len())?;
    let counts: Vec<i64> = sweep(
        group,
        &word,
        &|acc: &mut Vec<i64>, v: &Visit| {
            if acc.is_empty() {
                acc.resize(word.len() + 1, 0);
            }
            acc[v.defects as usize + v.element.length()] += 1;
        },
        &|a: Vec<i64>, b: Vec<i64>| {
            if a.is_empty() {
                return b;
            }
            if b.is_empty() {
                return a;
            }
            a.iter().zip(&b).map(|(x, y)| x + y).collect()
        },
    );
    Ok(Poly::from_coeffs(counts))
}

/// Checks Σ_σ q^(d(σ) + l(w^σ)) = (1 + q)^l(w) for a Deodhar w.
pub fn poincare_identity_check(group: &CoxeterGroup, w: &Element) -> Result<bool> {
    require_deodhar(group, w)?;
    Ok(mask_poincare_sum(group, w)? == Poly::one_plus_q_pow(w.length() as u32))
}

/// Verdicts of the two forms of the Deodhar condition, and the number of
/// proper masks on which they disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionComparison {
    pub zero_defect_form: bool,
    pub degree_bound_form: bool,
    pub disagreeing_masks: u64,
}

pub fn compare_condition_variants(group: &CoxeterGroup, w: &Element) -> Result<ConditionComparison> {
    let word = group.canonical_word(w);
    check_cap(word.len())?;
    let full = if word.is_empty() { 0 } else { u64::MAX >> (64 - word.len()) };
    let l = word.len() as i64;
    // (violates zero-defect form, violates degree-bound form, disagreements)
    let (a, b, n) = sweep(
        group,
        &word,
        &|acc: &mut (bool, bool, u64), v: &Visit| {
            if v.value == full {
                return;
            }
            let first = v.zero_defects >= v.plain_zeros;
            let second = 2 * v.defects as i64 > l - v.element.length() as i64 - 1;
            acc.0 |= first;
            acc.1 |= second;
            acc.2 += (first != second) as u64;
        },
        &|x: (bool, bool, u64), y: (bool, bool, u64)| (x.0 || y.0, x.1 || y.1, x.2 + y.2),
    );
    Ok(ConditionComparison { zero_defect_form: !a, degree_bound_form: !b, disagreeing_masks: n })
}

/// Whether both forms of the condition give the same verdict for `w`.
pub fn deodhar_condition_variants_agree(group: &CoxeterGroup, w: &Element) -> Result<bool> {
    let c = compare_condition_variants(group, w)?;
    Ok(c.zero_defect_form == c.degree_bound_form)
}
