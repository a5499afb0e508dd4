//! Finite simple digraphs: cycle detection, minimal (induced) cycles and
//! strongly connected components.
//!
//! Cycle length follows the convention that `⟨y0, …, yk⟩` has length `k`, so a
//! pair of antiparallel edges is a cycle of length 1.

use fixedbitset::FixedBitSet;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::limits::Meter;
use crate::order::check_index;

/// Irreflexive relation on `0..n`, with the reverse adjacency cached.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    out: BitMatrix,
    inc: BitMatrix,
}

impl Digraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut m = BitMatrix::new(n);
        for &(u, v) in edges {
            check_index(u, n)?;
            check_index(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            m.set(u, v);
        }
        Ok(Self::from_matrix_unchecked(m))
    }

    pub fn from_matrix(m: BitMatrix) -> Result<Self> {
        for i in 0..m.len() {
            if m.get(i, i) {
                return Err(Error::SelfLoop(i));
            }
        }
        Ok(Self::from_matrix_unchecked(m))
    }

    pub(crate) fn from_matrix_unchecked(out: BitMatrix) -> Self {
        let inc = out.transpose();
        Digraph { out, inc }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_matrix_unchecked(BitMatrix::new(n))
    }

    /// Directed cycle `0 → 1 → … → n-1 → 0`; `n` must be at least 2.
    pub fn directed_cycle(n: usize) -> Self {
        assert!(n >= 2, "directed cycle needs two vertices");
        Self::from_matrix_unchecked(BitMatrix::from_fn(n, |i, j| j == (i + 1) % n && i != j))
    }

    /// Complete digraph with every ordered pair of distinct vertices.
    pub fn bidirected_complete(n: usize) -> Self {
        Self::from_matrix_unchecked(BitMatrix::from_fn(n, |i, j| i != j))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.out.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out.get(u, v)
    }

    #[inline]
    pub fn out_neighbors(&self, u: usize) -> &FixedBitSet {
        self.out.row(u)
    }

    #[inline]
    pub fn in_neighbors(&self, u: usize) -> &FixedBitSet {
        self.inc.row(u)
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.out
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.out.pairs().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.out.count_ones()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.out.row(u).count_ones(..) + self.inc.row(u).count_ones(..)
    }

    pub fn is_symmetric(&self) -> bool {
        self.out == self.inc
    }

    /// First edge without a reverse edge, if any.
    pub fn asymmetric_edge(&self) -> Option<(usize, usize)> {
        self.out.pairs().find(|&(u, v)| !self.has_edge(v, u))
    }

    /// Induced subdigraph on `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Digraph {
        Self::from_matrix_unchecked(BitMatrix::from_fn(verts.len(), |i, j| {
            self.has_edge(verts[i], verts[j])
        }))
    }

    fn check_set(&self, s: &[usize]) -> Result<FixedBitSet> {
        let mut set = FixedBitSet::with_capacity(self.n());
        for &v in s {
            check_index(v, self.n())?;
            set.insert(v);
        }
        Ok(set)
    }

    /// Acyclicity of the subdigraph induced on `s`, with a cycle as witness
    /// when it fails.
    pub fn is_acyclic(&self, s: &[usize]) -> Result<Acyclicity> {
        let set = self.check_set(s)?;
        Ok(match self.find_cycle_within(&set) {
            None => Acyclicity::Acyclic,
            Some(c) => Acyclicity::Cyclic(c),
        })
    }

    pub fn is_acyclic_set(&self, set: &FixedBitSet) -> bool {
        self.find_cycle_within(set).is_none()
    }

    /// Iterative DFS restricted to `set`; returns the first back-edge cycle.
    pub fn find_cycle_within(&self, set: &FixedBitSet) -> Option<Cycle> {
        const WHITE: u8 = 0;
        const GREY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.n();
        let mut color = vec![WHITE; n];
        for root in set.ones() {
            if color[root] != WHITE {
                continue;
            }
            // stack of (vertex, iterator position over its out-neighbours in set)
            let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
            let succ = |v: usize| -> Vec<usize> {
                self.out.row(v).intersection(set).collect()
            };
            color[root] = GREY;
            stack.push((root, succ(root), 0));
            while let Some(top) = stack.last_mut() {
                let (v, ref nbrs, ref mut pos) = *top;
                if *pos < nbrs.len() {
                    let w = nbrs[*pos];
                    *pos += 1;
                    match color[w] {
                        WHITE => {
                            color[w] = GREY;
                            let s = succ(w);
                            stack.push((w, s, 0));
                        }
                        GREY => {
                            let start = stack.iter().position(|f| f.0 == w).unwrap();
                            let verts = stack[start..].iter().map(|f| f.0).collect();
                            return Some(Cycle::new(verts));
                        }
                        _ => {}
                    }
                } else {
                    color[v] = BLACK;
                    stack.pop();
                }
            }
        }
        None
    }

    /// Every minimal cycle of length at most `max_len`, each reported once and
    /// rotated to start at its least vertex.
    ///
    /// A cycle is minimal when its vertex set induces exactly a directed cycle.
    /// The enumeration grows induced paths from their least vertex; each path
    /// extension counts against `budget`.
    pub fn minimal_cycles(&self, max_len: usize, budget: u64) -> Result<Vec<Cycle>> {
        let mut meter = Meter::new("minimal-cycle enumeration", budget);
        let mut out = Vec::new();
        if max_len == 0 {
            return Ok(out);
        }
        let mut path = Vec::new();
        for s in 0..self.n() {
            path.push(s);
            self.grow_induced(&mut path, max_len, &mut meter, &mut out)?;
            path.pop();
        }
        Ok(out)
    }

    fn grow_induced(
        &self,
        path: &mut Vec<usize>,
        max_len: usize,
        meter: &mut Meter,
        out: &mut Vec<Cycle>,
    ) -> Result<()> {
        let start = path[0];
        let last = *path.last().unwrap();
        // Closing through a new vertex w gives a cycle of length path.len().
        if path.len() > max_len {
            return Ok(());
        }
        for w in self.out.row(last).ones() {
            if w <= start || path.contains(&w) {
                continue;
            }
            meter.tick()?;
            // No chords: w is adjacent only to `last` (incoming) and maybe `start` (outgoing).
            let interior = &path[..path.len() - 1];
            if interior.iter().any(|&p| self.has_edge(p, w)) {
                continue;
            }
            if path[1..].iter().any(|&p| self.has_edge(w, p)) {
                continue;
            }
            if self.has_edge(w, start) {
                // For the 2-vertex case `start → w → start` is exactly C_1.
                let mut verts = path.clone();
                verts.push(w);
                out.push(Cycle::new(verts));
            } else {
                path.push(w);
                self.grow_induced(path, max_len, meter, out)?;
                path.pop();
            }
        }
        Ok(())
    }

    /// The largest minimal-cycle length, or 0 if the digraph is acyclic.
    pub fn max_minimal_cycle_len(&self, budget: u64) -> Result<usize> {
        Ok(self
            .minimal_cycles(self.n(), budget)?
            .iter()
            .map(Cycle::length)
            .max()
            .unwrap_or(0))
    }

    /// `k`-uniform: every minimal cycle has length at most `k`.
    pub fn is_uniform(&self, k: usize, budget: u64) -> Result<bool> {
        Ok(self.max_minimal_cycle_len(budget)? <= k)
    }

    /// Strongly connected components in topological order of the condensation
    /// (sources first); vertices inside a component are sorted.
    pub fn scc_decompose(&self) -> Vec<Vec<usize>> {
        let mut comps = tarjan(self);
        comps.reverse();
        for c in &mut comps {
            c.sort_unstable();
        }
        comps
    }
}

/// Tarjan's algorithm, iterative. Components come out in reverse topological order.
fn tarjan(g: &Digraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0usize;
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        let mut call: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, g.out_neighbors(root).ones().collect(), 0));
        while let Some(frame) = call.last_mut() {
            let v = frame.0;
            if frame.2 < frame.1.len() {
                let w = frame.1[frame.2];
                frame.2 += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, g.out_neighbors(w).ones().collect(), 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(parent) = call.last() {
                    let p = parent.0;
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Acyclicity {
    Acyclic,
    Cyclic(Cycle),
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic)
    }
}

/// A closed walk `⟨v0, …, vk⟩` with `vk → v0`; its length is `k ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cycle {
    verts: Vec<usize>,
}

impl Cycle {
    pub fn new(verts: Vec<usize>) -> Self {
        Cycle { verts }
    }

    pub fn verts(&self) -> &[usize] {
        &self.verts
    }

    /// Number of vertices minus one.
    pub fn length(&self) -> usize {
        self.verts.len().saturating_sub(1)
    }

    /// Rotation starting at the least vertex.
    pub fn canonical(&self) -> Cycle {
        let Some(pos) = self
            .verts
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
        else {
            return self.clone();
        };
        let mut v = self.verts[pos..].to_vec();
        v.extend_from_slice(&self.verts[..pos]);
        Cycle { verts: v }
    }

    /// Consecutive edges (cyclically) are present and the length is at least 1.
    pub fn verify(&self, d: &Digraph) -> bool {
        let k = self.verts.len();
        if k < 2 || self.verts.iter().any(|&v| v >= d.n()) {
            return false;
        }
        (0..k).all(|i| d.has_edge(self.verts[i], self.verts[(i + 1) % k]))
    }

    /// `(v_i, v_j)` is an edge iff `j = i + 1 mod len`.
    pub fn is_minimal(&self, d: &Digraph) -> bool {
        let k = self.verts.len();
        if k < 2 || self.verts.iter().any(|&v| v >= d.n()) {
            return false;
        }
        (0..k).all(|i| {
            (0..k).all(|j| d.has_edge(self.verts[i], self.verts[j]) == (j == (i + 1) % k))
        })
    }
}
