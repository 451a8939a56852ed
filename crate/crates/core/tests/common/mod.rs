#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use digraph_spectra::catalog::random_strongly_connected;
use digraph_spectra::matrix::{IntegerMatrix, RealMatrix};
use digraph_spectra::Digraph;

/// Any loopless digraph on `lo..=hi` vertices.
pub fn any_digraph(lo: usize, hi: usize) -> impl Strategy<Value = Digraph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs: Vec<_> = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v])
                .collect();
            Digraph::from_arc_list(n, &arcs).unwrap()
        })
    })
}

/// Strongly connected digraph on `lo..=hi` vertices.
pub fn strong_digraph(lo: usize, hi: usize) -> impl Strategy<Value = Digraph> {
    (lo..=hi, 0.0..0.7f64, any::<u64>())
        .prop_map(|(n, p, seed)| random_strongly_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Circulant digraph: arc `i -> i + s` for every `s` in `steps`; strongly connected since 1 is a step.
pub fn circulant(n: usize, steps: &[usize]) -> Digraph {
    let mut arcs = Vec::new();
    for i in 0..n {
        for &s in steps {
            let j = (i + s) % n;
            if j != i && !arcs.contains(&(i, j)) {
                arcs.push((i, j));
            }
        }
    }
    Digraph::from_arc_list(n, &arcs).unwrap()
}

/// Out-regular strongly connected circulant on `lo..=hi` vertices.
pub fn circulant_digraph(lo: usize, hi: usize) -> impl Strategy<Value = Digraph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(1..n.max(2), 0..n.min(4)).prop_map(move |mut steps| {
            steps.push(1);
            circulant(n, &steps)
        })
    })
}

pub fn int_matrix(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = IntegerMatrix> {
    proptest::collection::vec(-bound..=bound, rows * cols).prop_map(move |d| IntegerMatrix::new(rows, cols, d).unwrap())
}

pub fn square_int_matrix(lo: usize, hi: usize, bound: i64) -> impl Strategy<Value = IntegerMatrix> {
    (lo..=hi).prop_flat_map(move |n| int_matrix(n, n, bound))
}

pub fn real(m: &IntegerMatrix) -> RealMatrix {
    m.to_real()
}
