//! Instance generators and the exhaustive poset enumerator.
//!
//! All randomness comes from one [`SplitMix64`] stream, so a seed fixes every output.

use rand::seq::SliceRandom;
use rand::{Rng, RngExt, SeedableRng};

use crate::bits::BitMatrix;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::order::QuasiOrder;

/// Seeded SplitMix64 stream with the sampling helpers the generators need.
#[derive(Clone, Debug)]
pub struct SplitMix64(rand_xoshiro::SplitMix64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(rand_xoshiro::SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        self.0.random()
    }

    /// Panics unless `0 <= p <= 1`.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.0.random_bool(p)
    }

    /// Uniform in `0..bound`.
    pub fn below(&mut self, bound: usize) -> usize {
        self.0.random_range(0..bound)
    }

    /// Uniform in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        self.0.random_range(lo..=hi)
    }

    pub fn shuffle<T>(&mut self, v: &mut [T]) {
        v.shuffle(&mut self.0);
    }
}

pub fn chain(n: usize) -> QuasiOrder {
    QuasiOrder::chain(n)
}

pub fn antichain(n: usize) -> QuasiOrder {
    QuasiOrder::equality(n)
}

/// Standard example `S_n`: minima `a_i = i`, maxima `b_j = n + j`, `a_i < b_j` iff `i ≠ j`.
pub fn crown(n: usize) -> QuasiOrder {
    let m = BitMatrix::from_fn(2 * n, |x, y| x == y || (x < n && y >= n && x != y - n));
    QuasiOrder::from_matrix_unchecked(m)
}

/// Subsets of `0..atoms` ordered by inclusion, element `i` is the bitmask `i`.
pub fn boolean_lattice(atoms: usize) -> QuasiOrder {
    let m = BitMatrix::from_fn(1 << atoms, |x, y| x & !y == 0);
    QuasiOrder::from_matrix_unchecked(m)
}

/// Transitive closure of a random DAG: edges `i → j` for `i < j` with
/// probability `p`, then labels shuffled.
pub fn random_poset(n: usize, p: f64, rng: &mut SplitMix64) -> QuasiOrder {
    let mut m = BitMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.bernoulli(p) {
                m.set(i, j);
            }
        }
    }
    m.close_transitively();
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    let relabelled = BitMatrix::from_fn(n, |a, b| m.get(perm[a], perm[b]));
    QuasiOrder::from_matrix_unchecked(relabelled)
}

/// Random quasi order on `n` elements: a random poset on `1..=n` classes with
/// every element assigned to a class and every class non-empty.
pub fn random_quasi_order(n: usize, p: f64, rng: &mut SplitMix64) -> QuasiOrder {
    if n == 0 {
        return QuasiOrder::equality(0);
    }
    let classes = rng.range_inclusive(1, n);
    let poset = random_poset(classes, p, rng);
    let mut class_of: Vec<usize> = (0..n).map(|i| if i < classes { i } else { rng.below(classes) }).collect();
    rng.shuffle(&mut class_of);
    let m = BitMatrix::from_fn(n, |a, b| poset.leq(class_of[a], class_of[b]));
    QuasiOrder::from_matrix_unchecked(m)
}

/// Each ordered pair of distinct vertices is an edge with probability `p`.
pub fn random_digraph(n: usize, p: f64, rng: &mut SplitMix64) -> Digraph {
    let mut m = BitMatrix::new(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.bernoulli(p) {
                m.set(i, j);
            }
        }
    }
    Digraph::from_matrix_unchecked(m)
}

/// Each unordered pair is a bidirected edge with probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut SplitMix64) -> Digraph {
    let mut m = BitMatrix::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.bernoulli(p) {
                m.set(i, j);
                m.set(j, i);
            }
        }
    }
    Digraph::from_matrix_unchecked(m)
}

/// Largest `n` accepted by [`enumerate_posets`].
pub const MAX_ENUMERATE: usize = 6;

/// Every labelled partial order on `0..n`, each exactly once.
///
/// Built by inserting element `m` into each poset on `0..m` with a down-set
/// `D` and an up-set `U`, disjoint, with every element of `D` below every
/// element of `U`.
pub fn enumerate_posets(n: usize) -> Result<Vec<QuasiOrder>> {
    if n > MAX_ENUMERATE {
        return Err(Error::TooLarge { what: "poset enumeration size", size: n, limit: MAX_ENUMERATE });
    }
    let mut level: Vec<BitMatrix> = vec![BitMatrix::new(0)];
    for m in 0..n {
        let mut next = Vec::new();
        for p in &level {
            let downs = closed_subsets(p, m, true);
            let ups = closed_subsets(p, m, false);
            for &d in &downs {
                for &u in &ups {
                    if d & u != 0 {
                        continue;
                    }
                    let fits = (0..m)
                        .filter(|&a| d >> a & 1 == 1)
                        .all(|a| (0..m).filter(|&b| u >> b & 1 == 1).all(|b| p.get(a, b)));
                    if !fits {
                        continue;
                    }
                    let grown = BitMatrix::from_fn(m + 1, |a, b| {
                        if a == m && b == m {
                            true
                        } else if a == m {
                            u >> b & 1 == 1
                        } else if b == m {
                            d >> a & 1 == 1
                        } else {
                            p.get(a, b)
                        }
                    });
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(QuasiOrder::from_matrix_unchecked).collect())
}

/// Down-closed (or up-closed) subsets of `0..m` as bitmasks.
fn closed_subsets(p: &BitMatrix, m: usize, down: bool) -> Vec<u32> {
    (0u32..1 << m)
        .filter(|&s| {
            (0..m).filter(|&a| s >> a & 1 == 1).all(|a| {
                (0..m).all(|b| {
                    let related = if down { p.get(b, a) } else { p.get(a, b) };
                    !related || s >> b & 1 == 1
                })
            })
        })
        .collect()
}
