use rustc_hash::FxHashMap;

use super::*;
use crate::coxeter::notation::parse_one_line;

fn group(f: Family, r: usize) -> CoxeterGroup {
    CoxeterGroup::new(f, r).unwrap()
}

fn ol(g: &CoxeterGroup, s: &str) -> Element {
    g.element_from_one_line(&parse_one_line(s).unwrap()).unwrap()
}

fn word(g: &CoxeterGroup, s: &str) -> Element {
    g.element_from_reduced_word(&g.parse_word(s).unwrap()).unwrap()
}

/// Word-length distance from the identity by breadth-first search over
/// the Cayley graph, ignoring the cached lengths entirely.
fn bfs_lengths(g: &CoxeterGroup) -> FxHashMap<Vec<i8>, usize> {
    let mut dist = FxHashMap::default();
    let id = g.identity();
    dist.insert(id.raw().to_vec(), 0);
    let mut layer = vec![id];
    let mut d = 0;
    while !layer.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..g.rank() {
                let ws = g.mul_gen(w, s);
                if !dist.contains_key(ws.raw()) {
                    dist.insert(ws.raw().to_vec(), d);
                    next.push(ws);
                }
            }
        }
        layer = next;
    }
    dist
}

#[test]
fn length_formulas_match_bfs() {
    for (f, r, order) in [
        (Family::A, 3, 24),
        (Family::B, 2, 8),
        (Family::B, 3, 48),
        (Family::D, 4, 192),
        (Family::D, 3, 24),
        (Family::G, 2, 12),
        (Family::F, 4, 1152),
    ] {
        let g = group(f, r);
        let dist = bfs_lengths(&g);
        assert_eq!(dist.len(), order, "{f}{r}");
        for w in g.all_elements() {
            let d = dist[w.raw()];
            assert_eq!(w.length(), d);
            assert_eq!(g.recompute_length(&w), d);
        }
    }
}

#[test]
fn group_orders() {
    assert_eq!(group(Family::E, 6).all_elements().len(), 51840);
    assert_eq!(group(Family::A, 4).all_elements().len(), 120);
    assert_eq!(group(Family::D, 2).all_elements().len(), 4);
}

#[test]
fn longest_lengths_are_root_counts() {
    for (f, r) in [(Family::A, 5), (Family::B, 4), (Family::D, 5), (Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        let g = group(f, r);
        let w0 = g.longest_element();
        assert_eq!(w0.length(), g.num_positive_roots(), "{f}{r}");
        assert_eq!(g.recompute_length(&w0), w0.length());
    }
}

#[test]
fn right_action_examples() {
    let a = group(Family::A, 3);
    assert_eq!(a.mul_gen(&ol(&a, "[3,4,1,2]"), 1), ol(&a, "[3,1,4,2]"));
    let b = group(Family::B, 4);
    let w = ol(&b, "[-4,2,-3,1]");
    assert_eq!(b.mul_gen(&w, 0), ol(&b, "[4,2,-3,1]"));
    assert_eq!(b.mul_gen(&w, 1), ol(&b, "[2,-4,-3,1]"));
    let d = group(Family::D, 4);
    assert_eq!(d.mul_gen(&ol(&d, "[4,2,-3,-1]"), 0), ol(&d, "[-2,-4,-3,-1]"));
    assert_eq!(d.mul_gen(&ol(&d, "[-4,2,-3,1]"), 0), ol(&d, "[-2,4,-3,1]"));
}

#[test]
fn left_action_examples() {
    let a = group(Family::A, 3);
    assert_eq!(a.mul_gen_left(&ol(&a, "[3,4,1,2]"), 1), ol(&a, "[2,4,1,3]"));
    let a2 = group(Family::A, 2);
    assert_eq!(a2.mul_gen_left(&a2.identity(), 0), a2.generator(0));
    assert_eq!(a2.mul_gen_left(&ol(&a2, "[2,1,3]"), 0), a2.identity());
}

#[test]
fn left_action_agrees_with_products() {
    for (f, r) in [(Family::B, 3), (Family::D, 4), (Family::E, 6)] {
        let g = group(f, r);
        for w in g.all_elements().into_iter().take(3000) {
            for s in 0..r {
                let left = g.mul_gen_left(&w, s);
                assert_eq!(left, g.mul(&g.generator(s), &w));
                assert_eq!(left.length(), g.recompute_length(&left));
            }
        }
    }
}

#[test]
fn paper_type_d_word() {
    let d = group(Family::D, 4);
    let w = word(&d, "s~1 s2 s3 s1 s2 s~1 s1");
    assert_eq!(w.length(), 7);
    assert_eq!(w, ol(&d, "[-3,-4,-2,-1]"));
    assert!(d.right_descents(&w).contains(1));
}

#[test]
fn inverse_and_descents() {
    let a = group(Family::A, 3);
    let w = ol(&a, "[3,1,4,2]");
    assert_eq!(a.inverse(&w), ol(&a, "[2,4,1,3]"));
    assert_eq!(a.right_descents(&w), [0usize, 2].into_iter().collect());
    assert!(a.right_descents(&a.identity()).is_empty());
    for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::D, 4), (Family::G, 2), (Family::F, 4)] {
        let g = group(f, r);
        for w in g.all_elements() {
            let wi = g.inverse(&w);
            assert_eq!(g.mul(&w, &wi), g.identity());
            assert_eq!(wi.length(), w.length());
            assert_eq!(g.right_descents(&w), g.left_descents(&wi));
            for s in 0..r {
                assert_eq!(g.mul_gen(&g.mul_gen(&w, s), s), w);
                assert_eq!(g.is_right_descent(&w, s), g.mul_gen(&w, s).length() < w.length());
            }
        }
    }
}

#[test]
fn element_from_word_examples() {
    let a = group(Family::A, 3);
    let (w, red) = a.element_from_word(&a.parse_word("s2 s3 s1 s2").unwrap()).unwrap();
    assert!(red);
    assert_eq!(w, ol(&a, "[3,4,1,2]"));
    let a2 = group(Family::A, 2);
    let (w, red) = a2.element_from_word(&[0, 0]).unwrap();
    assert!(!red);
    assert!(w.is_identity());
    let b = group(Family::B, 2);
    let (w, red) = b.element_from_word(&b.parse_word("s0 s1 s0 s1").unwrap()).unwrap();
    assert!(red);
    assert_eq!(w, ol(&b, "[-1,-2]"));
    assert!(a.element_from_word(&[7]).is_err());
}

#[test]
fn canonical_words() {
    for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::D, 4), (Family::E, 6)] {
        let g = group(f, r);
        for w in g.all_elements().into_iter().step_by(7) {
            let cw = g.canonical_word(&w);
            assert_eq!(cw.len(), w.length());
            assert_eq!(g.eval_word(cw.iter().copied()), w);
            let rev: Vec<Gen> = cw.iter().rev().copied().collect();
            assert_eq!(g.eval_word(rev), g.inverse(&w));
        }
    }
    let a = group(Family::A, 3);
    assert!(a.canonical_word(&a.identity()).is_empty());
}

#[test]
fn reduced_word_sets() {
    let a = group(Family::A, 3);
    let w = ol(&a, "[3,4,1,2]");
    let words = a.all_reduced_words(&w, 100).unwrap();
    let shown: Vec<String> = words.iter().map(|x| a.format_word(x)).collect();
    assert_eq!(shown, vec!["s2 s1 s3 s2", "s2 s3 s1 s2"]);
    assert_eq!(a.all_reduced_words(&a.identity(), 10).unwrap(), vec![Vec::<Gen>::new()]);
    let a2 = group(Family::A, 2);
    assert_eq!(a2.all_reduced_words(&a2.longest_element(), 10).unwrap(), vec![vec![0, 1, 0], vec![1, 0, 1]]);
    assert!(a.all_reduced_words(&a.longest_element(), 3).is_err());
}

/// Applies every available commuting or braid move to each word and checks
/// the result is still in the set.
#[test]
fn reduced_words_closed_under_moves() {
    for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::D, 4)] {
        let g = group(f, r);
        let gr = g.graph();
        for w in g.all_elements().into_iter().filter(|w| w.length() <= 8).step_by(5) {
            let words = g.all_reduced_words(&w, 10_000).unwrap();
            let set: std::collections::HashSet<_> = words.iter().cloned().collect();
            for x in &words {
                for i in 0..x.len() {
                    for j in i + 1..=x.len() {
                        let seg = &x[i..j];
                        if seg.len() < 2 {
                            continue;
                        }
                        let (s, t) = (seg[0], seg[1]);
                        let m = gr.m(s, t) as usize;
                        if seg.len() != m || !seg.iter().enumerate().all(|(k, &u)| u == if k % 2 == 0 { s } else { t }) {
                            continue;
                        }
                        let mut y = x.clone();
                        for (k, slot) in y[i..j].iter_mut().enumerate() {
                            *slot = if k % 2 == 0 { t } else { s };
                        }
                        assert!(set.contains(&y));
                    }
                }
            }
        }
    }
}

#[test]
fn support_and_connectivity() {
    let a = group(Family::A, 3);
    assert!(a.support(&a.identity()).is_empty());
    let w = ol(&a, "[3,4,1,2]");
    assert_eq!(a.support(&w).len(), 3);
    assert!(a.is_connected(&w));
    assert!(!a.is_connected(&word(&a, "s1 s3")));
}

#[test]
fn one_line_validation() {
    let a = group(Family::A, 2);
    assert!(a.element_from_one_line(&[1, -2, 3]).is_err());
    assert!(a.element_from_one_line(&[1, 2]).is_err());
    assert!(a.element_from_one_line(&[1, 1, 3]).is_err());
    let d = group(Family::D, 3);
    assert!(d.element_from_one_line(&[-1, 2, 3]).is_err());
    let e = group(Family::E, 6);
    assert!(e.element_from_one_line(&[1]).is_err());
}

#[test]
fn mixed_groups_do_not_mix() {
    let a = group(Family::A, 3);
    let d = group(Family::D, 4);
    assert_ne!(a.identity(), d.identity());
    assert!(a.multiply(&a.identity(), &d.identity()).is_err());
}

#[test]
fn format_parse_round_trip() {
    for (f, r) in [(Family::D, 4), (Family::E, 6), (Family::B, 3)] {
        let g = group(f, r);
        for w in g.all_elements().into_iter().step_by(11) {
            assert_eq!(g.parse_element(&g.format_element(&w)).unwrap(), w);
        }
    }
}

#[test]
fn automorphism_maps_elements() {
    let d = group(Family::D, 4);
    let p = d.graph().automorphism().unwrap();
    let w = word(&d, "s~1 s2");
    assert_eq!(d.apply_automorphism(&w, &p), word(&d, "s1 s2"));
}
