//! Cartan data and positive roots for the root-matrix backend.

use rustc_hash::FxHashSet;

use super::graph::{CoxeterGraph, Family};

/// `cartan[i][j]` is the integer a with s_i(α_j) = α_j − a·α_i.
pub(crate) fn cartan_matrix(graph: &CoxeterGraph) -> Vec<Vec<i8>> {
    let r = graph.rank();
    let mut a = vec![vec![0i8; r]; r];
    for i in 0..r {
        a[i][i] = 2;
        for j in 0..r {
            if i != j && graph.m(i, j) == 3 {
                a[i][j] = -1;
            }
        }
    }
    match graph.family() {
        // α1, α2 long; α3, α4 short.
        Family::F => {
            a[1][2] = -1;
            a[2][1] = -2;
        }
        // α1 short, α2 long.
        Family::G => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        Family::B => {
            // α0 short.
            a[0][1] = -2;
            a[1][0] = -1;
        }
        _ => {}
    }
    a
}

pub(crate) fn reflect(cartan: &[Vec<i8>], i: usize, beta: &mut [i8]) {
    let pairing: i32 = beta.iter().zip(&cartan[i]).map(|(&b, &a)| b as i32 * a as i32).sum();
    beta[i] = (beta[i] as i32 - pairing) as i8;
}

/// All positive roots, found by closing the simple roots under reflections.
pub(crate) fn positive_roots(cartan: &[Vec<i8>]) -> Vec<Vec<i8>> {
    let r = cartan.len();
    let mut roots: Vec<Vec<i8>> = (0..r)
        .map(|i| {
            let mut v = vec![0i8; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut seen: FxHashSet<Vec<i8>> = roots.iter().cloned().collect();
    let mut k = 0;
    while k < roots.len() {
        for i in 0..r {
            let mut b = roots[k].clone();
            reflect(cartan, i, &mut b);
            if is_positive(&b) && seen.insert(b.clone()) {
                roots.push(b);
            }
        }
        k += 1;
    }
    roots.sort_by_key(|v| (v.iter().map(|&x| x as i32).sum::<i32>(), v.clone()));
    roots
}

pub(crate) fn is_positive(v: &[i8]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}
