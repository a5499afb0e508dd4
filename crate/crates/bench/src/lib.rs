//! Fixed workloads shared by the criterion benches.

use dichro_core::gen::{self, SplitMix64};
use dichro_core::{build_ap, Digraph, QuasiOrder};

/// Pair digraph of the crown on `2n` elements.
pub fn crown_ap(n: usize) -> Digraph {
    build_ap(&gen::crown(n), false).0
}

/// Seeded random graphs on `n` vertices.
pub fn graphs(count: usize, n: usize, p: f64, seed: u64) -> Vec<Digraph> {
    let mut rng = SplitMix64::new(seed);
    (0..count).map(|_| gen::random_graph(n, p, &mut rng)).collect()
}

/// Seeded random digraphs on `n` vertices.
pub fn digraphs(count: usize, n: usize, p: f64, seed: u64) -> Vec<Digraph> {
    let mut rng = SplitMix64::new(seed);
    (0..count).map(|_| gen::random_digraph(n, p, &mut rng)).collect()
}

/// Seeded random posets on `n` elements.
pub fn posets(count: usize, n: usize, p: f64, seed: u64) -> Vec<QuasiOrder> {
    let mut rng = SplitMix64::new(seed);
    (0..count).map(|_| gen::random_poset(n, p, &mut rng)).collect()
}
