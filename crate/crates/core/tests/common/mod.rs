#![allow(dead_code)]

pub mod oracle;

use folkman::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Graph on `n` vertices from the upper-triangle bit list, pairs in
/// lexicographic order.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    g
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let bits: Vec<bool> = (0..n * n.saturating_sub(1) / 2).map(|_| rng.random_bool(p)).collect();
    graph_from_bits(n, &bits)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
