mod common;

use common::group;
use deodhar_core::heap::{coalesce, lattice_embed, render_ascii, Decoration};
use deodhar_core::mask::{decorate, is_deodhar_bruteforce, kl_polynomial, Mask};
use deodhar_core::pattern::{classify_deodhar, PatternLibrary};
use deodhar_core::search::{count_deodhar, find_minimal_non_deodhar, Method, Stratum};
use deodhar_core::Family;

#[test]
fn classify_examples() {
    let d8 = group(Family::D, 8);
    let w = d8.element_from_one_line(&[-1, 6, 7, 8, -5, 2, 3, 4]).unwrap();
    let c = classify_deodhar(&d8, &w);
    assert!(!c.deodhar);
    assert_eq!(c.pattern.as_deref(), Some("FLHEX0"));
    let a3 = group(Family::A, 3);
    let w = a3.parse_element("s2 s1 s3 s2").unwrap();
    assert!(classify_deodhar(&a3, &w).deodhar);
    assert!(is_deodhar_bruteforce(&a3, &w).unwrap().0);
    assert!(classify_deodhar(&a3, &a3.parse_element("").unwrap()).deodhar);
}

#[test]
fn kl_examples() {
    let a3 = group(Family::A, 3);
    let w = a3.element_from_one_line(&[3, 4, 1, 2]).unwrap();
    assert_eq!(kl_polynomial(&a3, &w, &a3.identity()).unwrap().to_string(), "1 + q");
    assert_eq!(kl_polynomial(&a3, &w, &w).unwrap().to_string(), "1");
    let s1 = a3.parse_element("s1").unwrap();
    let s2 = a3.parse_element("s2").unwrap();
    assert_eq!(kl_polynomial(&a3, &s2, &s1).unwrap().to_string(), "0");
    // Non-Deodhar input is a precondition error.
    let d8 = group(Family::D, 8);
    let flhex0 = d8.element_from_one_line(&[-1, 6, 7, 8, -5, 2, 3, 4]).unwrap();
    assert!(kl_polynomial(&d8, &flhex0, &d8.identity()).is_err());
}

#[test]
fn hexagon_with_its_witness() {
    let hex = PatternLibrary::standard().get("HEX").unwrap();
    let g = hex.group();
    let word = hex.letters(&g);
    let mask = hex.witness_mask().unwrap();
    let decorations = decorate(&g, &word, &mask).unwrap();
    let h = coalesce(&lattice_embed(&g, &word).unwrap());
    let text = render_ascii(&h, Some(&decorations));
    let w = hex.witness.as_ref().unwrap();
    assert_eq!(text.matches('D').count(), w.zero_defects.len());
    assert_eq!(text.matches('0').count(), w.plain_zeros.len());
    assert_eq!(text.matches('*').count(), word.len() - w.zero_defects.len() - w.plain_zeros.len());
    assert_eq!(text.lines().last(), Some("1 2 3 4 5 6 7"));

    let json = h.to_json(Some(&decorations));
    assert_eq!(json["columns"], serde_json::json!([1, 7]));
    let entries = json["entries"].as_array().unwrap();
    assert_eq!(entries.len(), word.len());
    let zero_defects = entries.iter().filter(|e| e["decoration"][0] == Decoration::ZeroDefect.name()).count();
    assert_eq!(zero_defects, w.zero_defects.len());
    assert!(h.to_json(None)["entries"][0].get("decoration").is_none());
}

#[test]
fn doubled_point_in_json() {
    let d4 = group(Family::D, 4);
    let h = lattice_embed(&d4, &d4.parse_word("s1 s~1 s2").unwrap()).unwrap();
    let json = h.to_json(None);
    let bottom = &json["entries"][0];
    assert_eq!(bottom["column"], 1);
    assert_eq!(bottom["generators"], serde_json::json!(["s1", "s~1"]));
}

#[test]
fn mask_text_forms() {
    let m: Mask = "10110".parse().unwrap();
    assert_eq!(m.to_string(), "10110");
    assert_eq!(Mask::from_int(5, m.to_int()), m);
    assert!("10a".parse::<Mask>().is_err());
    assert!(!Mask::ones(3).is_empty());
}

#[test]
fn counts_agree_across_methods() {
    for (f, r) in [(Family::A, 5), (Family::B, 4), (Family::D, 5), (Family::F, 4), (Family::G, 2)] {
        let g = group(f, r);
        let patterns = count_deodhar(&g, Method::Patterns);
        let hecke = count_deodhar(&g, Method::Hecke);
        let masks = count_deodhar(&g, Method::Masks);
        assert_eq!(patterns.deodhar, hecke.deodhar, "{}", g.kind());
        assert_eq!(patterns.deodhar, masks.deodhar, "{}", g.kind());
        assert!(patterns.is_complete() && hecke.is_complete() && masks.is_complete());
    }
    for (f, r) in [(Family::A, 7), (Family::B, 6), (Family::D, 6), (Family::E, 6)] {
        let g = group(f, r);
        assert_eq!(count_deodhar(&g, Method::Patterns).deodhar, count_deodhar(&g, Method::Hecke).deodhar, "{}", g.kind());
    }
}

#[test]
fn minimal_patterns_are_minimal() {
    for (f, r) in [(Family::A, 7), (Family::E, 6), (Family::D, 7)] {
        let g = group(f, r);
        let report = find_minimal_non_deodhar(&g, Stratum::Sba, None).unwrap();
        assert!(report.complete);
        for p in &report.patterns {
            let w = p.element.as_ref().unwrap();
            assert_eq!(&g.parse_element(&p.word).unwrap(), w);
            assert!(!is_deodhar_bruteforce(&g, w).unwrap().0, "{}", p.word);
            // Stripping an end letter of some reduced word is dividing by a descent.
            let left = g.left_descents(w).iter().map(|s| g.mul_gen_left(w, s));
            let right = g.right_descents(w).iter().map(|s| g.mul_gen(w, s));
            for u in left.chain(right) {
                assert!(is_deodhar_bruteforce(&g, &u).unwrap().0, "{} minus an end letter", p.word);
            }
        }
    }
}

#[test]
fn truncated_search_is_flagged() {
    let a7 = group(Family::A, 7);
    let r = find_minimal_non_deodhar(&a7, Stratum::Sba, Some(10)).unwrap();
    assert!(!r.complete);
    assert!(r.patterns.is_empty());
    let e6 = group(Family::E, 6);
    assert!(find_minimal_non_deodhar(&e6, Stratum::Convex, None).is_err());
}
