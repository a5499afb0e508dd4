//! Digraph homomorphisms and minimal homomorphisms.
//!
//! A homomorphism `Π: G → H` maps edges to edges. It is *minimal* when in
//! addition, for every minimal cycle of `G`, every non-edge between two of its
//! vertices is mapped to a non-edge, so induced copies of `C_n` land on
//! induced copies of `C_n`.

use std::fmt;

use crate::digraph::{Cycle, Digraph};
use crate::error::{Error, Result};
use crate::limits::{Limits, Meter};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomWitness {
    pub map: Vec<usize>,
    pub minimal: bool,
}

impl HomWitness {
    /// `self` followed by `next`.
    pub fn compose(&self, next: &HomWitness) -> HomWitness {
        HomWitness {
            map: self.map.iter().map(|&v| next.map[v]).collect(),
            minimal: self.minimal && next.minimal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomOutcome {
    Found(HomWitness),
    /// The whole search space was exhausted.
    NotFound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomViolation {
    /// The map is not total on the source or points outside the target.
    BadMap(String),
    /// Source edge whose image is not an edge.
    EdgeNotPreserved(usize, usize),
    /// Non-edge inside a minimal source cycle whose image is an edge.
    NonEdgeNotPreserved { cycle: Cycle, pair: (usize, usize) },
    /// Minimal cycles of the source could not be enumerated within budget.
    Undecided(Error),
}

impl fmt::Display for HomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomViolation::BadMap(s) => write!(f, "bad map: {s}"),
            HomViolation::EdgeNotPreserved(u, v) => {
                write!(f, "edge ({u},{v}) is not mapped to an edge")
            }
            HomViolation::NonEdgeNotPreserved { cycle, pair } => write!(
                f,
                "minimal cycle {:?}: non-edge ({},{}) is mapped to an edge",
                cycle.verts(),
                pair.0,
                pair.1
            ),
            HomViolation::Undecided(e) => write!(f, "undecided: {e}"),
        }
    }
}

/// Ordered non-adjacent vertex pairs inside minimal cycles.
fn cycle_non_edges(g: &Digraph, cycles: &[Cycle]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for c in cycles {
        let v = c.verts();
        for &a in v {
            for &b in v {
                if a != b && !g.has_edge(a, b) {
                    pairs.push((a, b));
                }
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Checks condition (edges preserved) always and the minimal-cycle condition
/// when `w.minimal` is set. The first failure found is reported: edges in
/// lexicographic order, then cycles in enumeration order with their vertex
/// pairs in positional order.
pub fn verify_homomorphism(
    g: &Digraph,
    h: &Digraph,
    w: &HomWitness,
    cycle_budget: u64,
) -> std::result::Result<(), HomViolation> {
    if w.map.len() != g.n() {
        return Err(HomViolation::BadMap(format!(
            "map has {} entries for {} vertices",
            w.map.len(),
            g.n()
        )));
    }
    if let Some((i, &t)) = w.map.iter().enumerate().find(|(_, &t)| t >= h.n()) {
        return Err(HomViolation::BadMap(format!("vertex {i} maps to {t} outside target")));
    }
    for (u, v) in g.edges() {
        if !h.has_edge(w.map[u], w.map[v]) {
            return Err(HomViolation::EdgeNotPreserved(u, v));
        }
    }
    if w.minimal {
        let cycles = g
            .minimal_cycles(g.n(), cycle_budget)
            .map_err(HomViolation::Undecided)?;
        for c in cycles {
            let v = c.verts();
            for &a in v {
                for &b in v {
                    if a != b && !g.has_edge(a, b) && h.has_edge(w.map[a], w.map[b]) {
                        return Err(HomViolation::NonEdgeNotPreserved { cycle: c, pair: (a, b) });
                    }
                }
            }
        }
    }
    Ok(())
}

struct HomSearch<'a> {
    g: &'a Digraph,
    h: &'a Digraph,
    order: Vec<usize>,
    /// For each source vertex: non-edge partners `(other, forward)`; `forward`
    /// means the pair is `(v, other)`.
    non_edges: Vec<Vec<(usize, bool)>>,
    map: Vec<Option<usize>>,
    meter: Meter,
}

impl HomSearch<'_> {
    fn consistent(&self, v: usize, t: usize) -> bool {
        for u in self.g.out_neighbors(v).ones() {
            if let Some(tu) = self.map[u] {
                if !self.h.has_edge(t, tu) {
                    return false;
                }
            }
        }
        for u in self.g.in_neighbors(v).ones() {
            if let Some(tu) = self.map[u] {
                if !self.h.has_edge(tu, t) {
                    return false;
                }
            }
        }
        for &(u, forward) in &self.non_edges[v] {
            if let Some(tu) = self.map[u] {
                let hit = if forward {
                    self.h.has_edge(t, tu)
                } else {
                    self.h.has_edge(tu, t)
                };
                if hit {
                    return false;
                }
            }
        }
        true
    }

    fn search(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        for t in 0..self.h.n() {
            self.meter.tick()?;
            if self.consistent(v, t) {
                self.map[v] = Some(t);
                if self.search(depth + 1)? {
                    return Ok(true);
                }
                self.map[v] = None;
            }
        }
        Ok(false)
    }
}

/// Backtracking search for a (minimal) homomorphism `g → h`.
///
/// Source vertices are assigned by decreasing total degree (ties by id), and
/// targets are tried in increasing id, so the first witness in this order is
/// returned. `NotFound` is only returned after the space is exhausted.
pub fn find_homomorphism(g: &Digraph, h: &Digraph, minimal: bool, limits: &Limits) -> Result<HomOutcome> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut non_edges = vec![Vec::new(); n];
    if minimal {
        let cycles = g.minimal_cycles(n, limits.cycle_extensions)?;
        for (a, b) in cycle_non_edges(g, &cycles) {
            non_edges[a].push((b, true));
            non_edges[b].push((a, false));
        }
    }
    let mut s = HomSearch {
        g,
        h,
        order,
        non_edges,
        map: vec![None; n],
        meter: Meter::new("homomorphism search", limits.hom_nodes),
    };
    if s.search(0)? {
        Ok(HomOutcome::Found(HomWitness {
            map: s.map.into_iter().map(|t| t.unwrap()).collect(),
            minimal,
        }))
    } else {
        Ok(HomOutcome::NotFound)
    }
}
