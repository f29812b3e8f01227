#![allow(dead_code)]

use latreg_core::gb::lattice_ideal_generators;
use latreg_core::intlat::{kernel_lattice, IntMatrix};
use latreg_core::{BinomialIdeal, ExponentVector, Grading, Graph, Lattice};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn grading(w: &[u32]) -> Grading {
    Grading::new(w.to_vec()).unwrap()
}

fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

/// Integer basis of `ker(d)`.
pub fn kernel_basis(d: &[u32]) -> Vec<Vec<i64>> {
    let a = IntMatrix::from_rows(d.len(), &[d.iter().map(|&x| x as i64).collect()]).unwrap();
    kernel_lattice(&a).basis().to_i64_rows().unwrap()
}

/// Random sublattice of `ker(d)` of full rank `s - 1` with index at most `max_index`.
pub fn random_homogeneous_lattice(rng: &mut ChaCha8Rng, d: &[u32], max_index: i64) -> Lattice {
    let k = kernel_basis(d);
    let r = k.len();
    let s = d.len();
    loop {
        let m: Vec<Vec<i64>> = (0..r).map(|_| (0..r).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let dt = det(&m).abs();
        if dt == 0 || dt > max_index {
            continue;
        }
        let rows: Vec<Vec<i64>> =
            m.iter().map(|row| (0..s).map(|j| row.iter().zip(&k).map(|(&c, kv)| c * kv[j]).sum()).collect()).collect();
        if rows.iter().flatten().any(|x| x.abs() > 12) {
            continue;
        }
        return Lattice::from_rows(s, &rows).unwrap();
    }
}

pub fn random_weights(rng: &mut ChaCha8Rng, s: usize, max: u32) -> Vec<u32> {
    (0..s).map(|_| rng.gen_range(1..=max)).collect()
}

pub fn lattice_ideal(l: &Lattice, d: &Grading) -> BinomialIdeal {
    lattice_ideal_generators(l, d).unwrap()
}

/// Monomials of total degree `deg` in `n` variables.
pub fn monomials_of_degree(n: usize, deg: u32) -> Vec<ExponentVector> {
    fn go(n: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if prefix.len() + 1 == n {
            prefix.push(deg);
            out.push(ExponentVector::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for k in 0..=deg {
            prefix.push(k);
            go(n, deg - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(n, deg, &mut Vec::new(), &mut out);
    out
}

/// `H(0..=n)` of `S/M` for a monomial ideal under the standard grading, by
/// counting standard monomials.
pub fn count_standard_monomials(gens: &[ExponentVector], vars: usize, n: u32) -> Vec<u64> {
    (0..=n)
        .map(|k| monomials_of_degree(vars, k).iter().filter(|m| !gens.iter().any(|g| g.divides(m))).count() as u64)
        .collect()
}

/// Largest non-member by breadth-first search over sums of generators.
pub fn brute_frobenius(gens: &[u64]) -> i64 {
    let bound = (gens.iter().min().unwrap() * gens.iter().max().unwrap()) as usize + 1;
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(n) = queue.pop_front() {
        for &g in gens {
            let m = n + g as usize;
            if m <= bound && !reach[m] {
                reach[m] = true;
                queue.push_back(m);
            }
        }
    }
    (0..=bound).rev().find(|&n| !reach[n]).map_or(-1, |n| n as i64)
}

/// Random bipartite graph without isolated vertices. The two sides have
/// sizes in `1..=side` and every vertex gets at least one edge.
pub fn random_bipartite_graph(rng: &mut ChaCha8Rng, side: usize, max_edges: usize, connected: bool) -> Graph {
    loop {
        let a = rng.gen_range(1..=side);
        let b = rng.gen_range(1..=side);
        let n = a + b;
        let mut all: Vec<(usize, usize)> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
        all.shuffle(rng);
        let k = rng.gen_range(1..=max_edges.min(all.len()));
        let edges = &all[..k];
        let g = Graph::new(n, edges).unwrap();
        if !g.isolated_vertices().is_empty() || (connected && !g.is_connected()) {
            continue;
        }
        return g;
    }
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &e).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let e: Vec<(usize, usize)> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
    Graph::new(a + b, &e).unwrap()
}

pub fn two_squares() -> Graph {
    Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)]).unwrap()
}

/// Random tree on `n` vertices by attaching each vertex to an earlier one.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let e: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::new(n, &e).unwrap()
}
