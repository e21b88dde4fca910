//! Hecke algebra arithmetic in the standard basis over Z[v, v⁻¹], v² = q.

use std::collections::hash_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashMap;

use crate::coxeter::{CoxeterGroup, Element, Gen};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Default bound on the number of basis terms kept during a product.
pub const DEFAULT_SUPPORT_CAP: usize = 1 << 20;

/// Laurent polynomial in v with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, exp);
        p
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// q − 1 = v² − 1.
    pub fn q_minus_one() -> Self {
        let mut p = Self::monomial(1, 2);
        p.add_term(-1, 0);
        p
    }

    pub fn from_q_poly(p: &Poly) -> Self {
        let mut out = Self::zero();
        for (d, &c) in p.coeffs().iter().enumerate() {
            out.add_term(c, 2 * d as i32);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<i32, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, c: i64, exp: i32) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&mut self, other: &LaurentPoly) {
        for (&e, &c) in &other.terms {
            self.add_term(c, e);
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = Self::zero();
        for (&a, &x) in &self.terms {
            for (&b, &y) in &other.terms {
                out.add_term(x * y, a + b);
            }
        }
        out
    }

    pub fn shift(&self, by: i32) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + by, c)).collect() }
    }

    /// v ↦ v⁻¹.
    pub fn bar(&self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Reads the polynomial as one in q. Fails on odd or negative exponents.
    pub fn to_q_poly(&self) -> Result<Poly> {
        let mut p = Poly::zero();
        for (&e, &c) in &self.terms {
            if e < 0 || e % 2 != 0 {
                return Err(Error::Precondition(format!("v^{e} is not a power of q")));
            }
            p.add_monomial(c, (e / 2) as usize);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&e, &c)| match e {
                0 => format!("{c}"),
                _ if c == 1 => format!("v^{e}"),
                _ if c == -1 => format!("-v^{e}"),
                _ => format!("{c}*v^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// Finite combination Σ c_w T_w.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeckeElement {
    terms: FxHashMap<Element, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// T_w.
    pub fn basis(w: Element) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &LaurentPoly::one());
        h
    }

    pub fn one(group: &CoxeterGroup) -> Self {
        Self::basis(group.identity())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Element) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Element, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Element, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                o.get_mut().add(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn add(&mut self, other: &HeckeElement) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElement {
        let mut out = Self::zero();
        for (w, p) in &self.terms {
            out.add_term(w.clone(), &p.mul(c));
        }
        out
    }

    /// Terms sorted by length, then by printed form.
    pub fn sorted_terms(&self, group: &CoxeterGroup) -> Vec<(String, &Element, &LaurentPoly)> {
        let mut v: Vec<(String, &Element, &LaurentPoly)> =
            self.terms.iter().map(|(w, c)| (group.format_element(w), w, c)).collect();
        v.sort_by(|a, b| (a.1.length(), &a.0).cmp(&(b.1.length(), &b.0)));
        v
    }

    /// `[{element, poly: {v_exponent: coeff}}]`.
    pub fn to_json(&self, group: &CoxeterGroup) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .sorted_terms(group)
            .into_iter()
            .map(|(name, _, c)| {
                let poly: serde_json::Map<String, serde_json::Value> =
                    c.terms().iter().map(|(e, k)| (e.to_string(), serde_json::json!(k))).collect();
                serde_json::json!({ "element": name, "poly": poly })
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

/// h·T_s.
pub fn t_mult_gen(group: &CoxeterGroup, h: &HeckeElement, s: Gen) -> HeckeElement {
    let q = LaurentPoly::monomial(1, 2);
    let qm1 = LaurentPoly::q_minus_one();
    let mut out = HeckeElement::zero();
    for (w, c) in &h.terms {
        let ws = group.mul_gen(w, s);
        if ws.length() > w.length() {
            out.add_term(ws, c);
        } else {
            out.add_term(w.clone(), &c.mul(&qm1));
            out.add_term(ws, &c.mul(&q));
        }
    }
    out
}

/// h·T_s⁻¹, with T_s⁻¹ = q⁻¹T_s + (q⁻¹ − 1)T₁.
fn t_inv_mult_gen(group: &CoxeterGroup, h: &HeckeElement, s: Gen) -> HeckeElement {
    let mut out = t_mult_gen(group, h, s).scale(&LaurentPoly::monomial(1, -2));
    let mut c = LaurentPoly::monomial(1, -2);
    c.add_term(-1, 0);
    out.add(&h.scale(&c));
    out
}

/// a·b in the standard basis.
pub fn mul(group: &CoxeterGroup, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (y, c) in &b.terms {
        let mut part = a.clone();
        for s in group.canonical_word(y) {
            part = t_mult_gen(group, &part, s);
        }
        out.add(&part.scale(c));
    }
    out
}

/// The bar involution: v ↦ v⁻¹ on coefficients and T_w ↦ (T_{w⁻¹})⁻¹.
pub fn bar(group: &CoxeterGroup, h: &HeckeElement) -> HeckeElement {
    let mut out = HeckeElement::zero();
    for (w, c) in &h.terms {
        let mut part = HeckeElement::one(group);
        for s in group.canonical_word(w) {
            part = t_inv_mult_gen(group, &part, s);
        }
        out.add(&part.scale(&c.bar()));
    }
    out
}

/// C′_s = v⁻¹(T_s + T₁).
pub fn cprime_gen(group: &CoxeterGroup, s: Gen) -> HeckeElement {
    let mut h = HeckeElement::basis(group.generator(s));
    h.add_term(group.identity(), &LaurentPoly::one());
    h.scale(&LaurentPoly::monomial(1, -1))
}

/// h·C′_s.
pub fn cprime_mult_gen(group: &CoxeterGroup, h: &HeckeElement, s: Gen) -> HeckeElement {
    let mut out = t_mult_gen(group, h, s);
    out.add(h);
    out.scale(&LaurentPoly::monomial(1, -1))
}

/// C′_{w₁}⋯C′_{w_k}, failing once the support exceeds `cap` terms.
pub fn cprime_product_capped(group: &CoxeterGroup, word: &[Gen], cap: usize) -> Result<HeckeElement> {
    let mut h = HeckeElement::one(group);
    for &s in word {
        h = cprime_mult_gen(group, &h, s);
        if h.len() > cap {
            return Err(Error::Cap { what: "Hecke product support".into(), cap });
        }
    }
    Ok(h)
}

pub fn cprime_product(group: &CoxeterGroup, word: &[Gen]) -> Result<HeckeElement> {
    cprime_product_capped(group, word, DEFAULT_SUPPORT_CAP)
}

/// q^(−l/2) Σ_σ q^d(σ) T_{w^σ} over the masks of `word`.
pub fn mask_expansion(group: &CoxeterGroup, word: &[Gen]) -> Result<HeckeElement> {
    let mut h = HeckeElement::zero();
    for (x, p) in crate::mask::mask_sums(group, word)? {
        h.add_term(x, &LaurentPoly::from_q_poly(&p).shift(-(word.len() as i32)));
    }
    Ok(h)
}

/// Coefficients R_u(q) of v^l(w) · C′_{w₁}⋯C′_{w_k} for the canonical word.
pub fn product_coefficients(group: &CoxeterGroup, w: &Element) -> Result<FxHashMap<Element, Poly>> {
    let word = group.canonical_word(w);
    let h = cprime_product(group, &word)?;
    h.terms.iter().map(|(u, c)| Ok((u.clone(), c.shift(word.len() as i32).to_q_poly()?))).collect()
}

/// Whether the product of C′ generators along a reduced word of `w` already
/// satisfies the degree bounds of C′_w.
pub fn is_tight(group: &CoxeterGroup, w: &Element) -> Result<bool> {
    let l = w.length() as i64;
    for (u, r) in product_coefficients(group, w)? {
        if &u == w {
            if r != Poly::one() {
                return Ok(false);
            }
        } else if let Some(d) = r.degree() {
            if 2 * d as i64 > l - u.length() as i64 - 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
