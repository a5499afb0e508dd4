//! Finite levels of the digraphs `G0(E, f)`.
//!
//! A branching sequence `σ` has every entry at least 2; `T_[σ]` is the set of
//! tuples `t` of length `|σ|` with `t(k) < σ(k)`. A selector picks one tuple
//! `E(σ) ∈ T_[σ]` for every `σ`. The digraph `K(E, σ)` lives on `T_[σ]` and
//! has an edge `s → t` when, for some level `k`, both extend `E(σ↾k)`, agree
//! past `k`, and `t(k) = s(k) + 1 mod σ(k)`.

use std::collections::HashMap;
use std::fmt;

use crate::digraph::{Cycle, Digraph};
use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Finite sequence of branching degrees, all at least 2.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SigmaSeq(Vec<usize>);

impl SigmaSeq {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if let Some(bad) = entries.iter().position(|&e| e < 2) {
            return Err(Error::InvalidSigma(format!(
                "entry {bad} is {}, every entry must be at least 2",
                entries[bad]
            )));
        }
        Ok(SigmaSeq(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `σ↾k`.
    pub fn prefix(&self, k: usize) -> SigmaSeq {
        SigmaSeq(self.0[..k].to_vec())
    }

    /// `|T_[σ]|`, or `None` on overflow.
    pub fn leaf_count(&self) -> Option<usize> {
        self.0.iter().try_fold(1usize, |acc, &e| acc.checked_mul(e))
    }

    /// `s ∈ T_σ`: `|s| ≤ |σ|` and `s(i) < σ(i)`.
    pub fn admits(&self, s: &[usize]) -> bool {
        s.len() <= self.0.len() && s.iter().zip(&self.0).all(|(a, b)| a < b)
    }

    /// All tuples of `T_[σ]` in lexicographic order.
    pub fn leaves(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &e in &self.0 {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..e).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// Lexicographic index of a tuple of `T_[σ]`.
    pub fn leaf_index(&self, t: &[usize]) -> usize {
        t.iter().zip(&self.0).fold(0, |acc, (&x, &e)| acc * e + x)
    }
}

impl fmt::Display for SigmaSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_seq(&self.0))
    }
}

/// `⟨a,b,c⟩`.
pub fn fmt_seq(s: &[usize]) -> String {
    let inner: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("⟨{}⟩", inner.join(","))
}

/// `w(s) = |s| + Σ (s(i) + 1)`.
pub fn seq_weight(s: &[usize]) -> usize {
    2 * s.len() + s.iter().sum::<usize>()
}

/// All sequences of weight `w`, shorter first, then lexicographic.
pub fn seqs_of_weight(w: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for len in 0..=w / 2 {
        let total = w - 2 * len;
        let mut cur = Vec::with_capacity(len);
        compositions(total, len, &mut cur, &mut out);
    }
    out
}

fn compositions(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 0 {
        if total == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if parts == 1 {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for first in 0..=total {
        cur.push(first);
        compositions(total - first, parts - 1, cur, out);
        cur.pop();
    }
}

/// `s_l`: the `l`-th finite sequence of naturals in (weight, shortlex) order.
///
/// A length-`k` sequence has weight at least `2k` and is preceded by the `k`
/// all-zero sequences of lengths `0..k`, so `|s_l| ≤ l`.
pub fn enumerate_seqs(l: usize) -> Vec<usize> {
    let mut remaining = l;
    for w in 0.. {
        let batch = seqs_of_weight(w);
        if remaining < batch.len() {
            return batch[remaining].clone();
        }
        remaining -= batch.len();
    }
    unreachable!()
}

/// The index `l` with `s_l = s`.
pub fn seq_index(s: &[usize]) -> usize {
    let w = seq_weight(s);
    let before: usize = (0..w).map(|v| seqs_of_weight(v).len()).sum();
    let pos = seqs_of_weight(w)
        .iter()
        .position(|t| t == s)
        .expect("every sequence occurs at its own weight");
    before + pos
}

/// Assignment `σ ↦ E(σ) ∈ T_[σ]`; `None` where undefined.
pub trait Selector {
    fn select(&self, sigma: &SigmaSeq) -> Option<Vec<usize>>;
}

/// The dense selector: with `l = |σ|`, `E(σ)` is `s_l` padded with zeros when
/// `s_l ∈ T_σ`, and all zeros otherwise.
#[derive(Clone, Copy, Debug, Default)]
pub struct DenseSelector;

impl Selector for DenseSelector {
    fn select(&self, sigma: &SigmaSeq) -> Option<Vec<usize>> {
        Some(dense_selector(sigma))
    }
}

pub fn dense_selector(sigma: &SigmaSeq) -> Vec<usize> {
    let l = sigma.len();
    let s = enumerate_seqs(l);
    let mut tau = vec![0usize; l];
    if sigma.admits(&s) {
        tau[..s.len()].copy_from_slice(&s);
    }
    tau
}

/// A selector materialized on every `σ` up to a depth and branching bound.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SelectorTable {
    entries: HashMap<SigmaSeq, Vec<usize>>,
}

impl SelectorTable {
    /// Tabulates `sel` on all `σ` with `|σ| ≤ depth` and entries in `2..=max_branch`.
    pub fn build(sel: &impl Selector, depth: usize, max_branch: usize) -> Result<Self> {
        let mut entries = HashMap::new();
        let mut level = vec![SigmaSeq::default()];
        for d in 0..=depth {
            for sigma in &level {
                let value = sel
                    .select(sigma)
                    .ok_or_else(|| Error::InvalidSelector(sigma.entries().to_vec()))?;
                entries.insert(sigma.clone(), value);
            }
            if d < depth {
                level = level
                    .iter()
                    .flat_map(|s| {
                        (2..=max_branch).map(move |b| {
                            let mut v = s.entries().to_vec();
                            v.push(b);
                            SigmaSeq(v)
                        })
                    })
                    .collect();
            }
        }
        Self::from_entries(entries)
    }

    /// Validates `E(σ) ∈ T_[σ]` for every entry.
    pub fn from_entries(entries: HashMap<SigmaSeq, Vec<usize>>) -> Result<Self> {
        for (sigma, tau) in &entries {
            if tau.len() != sigma.len() || !sigma.admits(tau) {
                return Err(Error::InvalidSelector(sigma.entries().to_vec()));
            }
        }
        Ok(SelectorTable { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Selector for SelectorTable {
    fn select(&self, sigma: &SigmaSeq) -> Option<Vec<usize>> {
        self.entries.get(sigma).cloned()
    }
}

fn prefix_values(sel: &impl Selector, sigma: &SigmaSeq) -> Result<Vec<Vec<usize>>> {
    (0..sigma.len())
        .map(|k| {
            let p = sigma.prefix(k);
            match sel.select(&p) {
                Some(t) if t.len() == k && p.admits(&t) => Ok(t),
                _ => Err(Error::InvalidSelector(p.entries().to_vec())),
            }
        })
        .collect()
}

/// `K(E, σ)` with its vertex tuples.
#[derive(Clone, Debug)]
pub struct KDigraph {
    pub sigma: SigmaSeq,
    /// Vertex `i` is `verts[i]`; tuples are in lexicographic order.
    pub verts: Vec<Vec<usize>>,
    pub graph: Digraph,
    /// Number of edges whose witnessing level is `k`.
    pub level_edges: Vec<usize>,
}

pub fn build_k(sel: &impl Selector, sigma: &SigmaSeq, limits: &Limits) -> Result<KDigraph> {
    let size = sigma.leaf_count().unwrap_or(usize::MAX);
    if size > limits.k_vertices {
        return Err(Error::TooLarge { what: "T_[σ]", size, limit: limits.k_vertices });
    }
    let prefixes = prefix_values(sel, sigma)?;
    let verts = sigma.leaves();
    let mut adj = BitMatrix::new(verts.len());
    let mut level_edges = vec![0usize; sigma.len()];
    for (i, s) in verts.iter().enumerate() {
        for (k, pre) in prefixes.iter().enumerate() {
            if s[..k] != pre[..] {
                continue;
            }
            let mut t = s.clone();
            t[k] = (s[k] + 1) % sigma.entries()[k];
            adj.set(i, sigma.leaf_index(&t));
            level_edges[k] += 1;
        }
    }
    Ok(KDigraph {
        sigma: sigma.clone(),
        verts,
        graph: Digraph::from_matrix_unchecked(adj),
        level_edges,
    })
}

/// For each level `k` and each tail `x`, the orbit
/// `⟨E(σ↾k)⌢i⌢x : i < σ(k)⟩`, as vertex ids of `K(E, σ)`.
pub fn canonical_cycles(sel: &impl Selector, sigma: &SigmaSeq, limits: &Limits) -> Result<Vec<Cycle>> {
    let size = sigma.leaf_count().unwrap_or(usize::MAX);
    if size > limits.k_vertices {
        return Err(Error::TooLarge { what: "T_[σ]", size, limit: limits.k_vertices });
    }
    let prefixes = prefix_values(sel, sigma)?;
    let mut out = Vec::new();
    for (k, pre) in prefixes.iter().enumerate() {
        let tail = SigmaSeq(sigma.entries()[k + 1..].to_vec());
        for x in tail.leaves() {
            let verts = (0..sigma.entries()[k])
                .map(|i| {
                    let mut t = pre.clone();
                    t.push(i);
                    t.extend_from_slice(&x);
                    sigma.leaf_index(&t)
                })
                .collect();
            out.push(Cycle::new(verts));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DensityReport {
    /// `(s, l)` with `s ⊆ E(f↾l)` where `l` is the index of `s`.
    pub witnessed: Vec<(Vec<usize>, usize)>,
    /// `(s, l)` whose index exceeds the depth.
    pub unresolved: Vec<(Vec<usize>, usize)>,
    /// `(s, l)` with `l ≤ depth` but `s ⊄ E(f↾l)`; empty for a dense selector.
    pub failures: Vec<(Vec<usize>, usize)>,
}

/// Checks, for every `s ∈ T_{f↾depth}`, that `s` is an initial segment of
/// `E(f↾l)` where `s = s_l`, whenever `l ≤ depth`.
pub fn check_density(sel: &impl Selector, f: &SigmaSeq, depth: usize) -> Result<DensityReport> {
    if f.len() < depth {
        return Err(Error::InvalidSigma(format!(
            "depth {depth} exceeds the truncation length {}",
            f.len()
        )));
    }
    let tree = f.prefix(depth);
    let mut nodes = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for &e in tree.entries() {
        frontier = frontier
            .iter()
            .flat_map(|t: &Vec<usize>| {
                (0..e).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
        nodes.extend(frontier.iter().cloned());
    }
    let mut report = DensityReport::default();
    for s in nodes {
        let l = seq_index(&s);
        if l > depth {
            report.unresolved.push((s, l));
            continue;
        }
        let p = f.prefix(l);
        let e = sel
            .select(&p)
            .ok_or_else(|| Error::InvalidSelector(p.entries().to_vec()))?;
        if e.starts_with(&s) {
            report.witnessed.push((s, l));
        } else {
            report.failures.push((s, l));
        }
    }
    Ok(report)
}

/// First `(m, n)` with `E(f↾m) ⊆ E(f↾n)` but `f(m) > f(n)`.
pub fn monotone_violation(sel: &impl Selector, f: &SigmaSeq) -> Result<Option<(usize, usize)>> {
    let vals = prefix_values(sel, f)?;
    let e = f.entries();
    for m in 0..f.len() {
        for n in 0..f.len() {
            if vals[n].starts_with(&vals[m]) && e[m] > e[n] {
                return Ok(Some((m, n)));
            }
        }
    }
    Ok(None)
}

/// `E(f↾m) ⊆ E(f↾n) ⟹ f(m) ≤ f(n)` for all levels `m, n < |f|`.
pub fn check_monotone(sel: &impl Selector, f: &SigmaSeq) -> Result<bool> {
    Ok(monotone_violation(sel, f)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(v: &[usize]) -> SigmaSeq {
        SigmaSeq::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sigma_validation() {
        assert!(SigmaSeq::new(vec![2, 1]).is_err());
        assert!(SigmaSeq::new(vec![]).is_ok());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_seqs(0), Vec::<usize>::new());
        assert_eq!(enumerate_seqs(1), vec![0]);
        assert_eq!(enumerate_seqs(2), vec![1]);
        assert_eq!(enumerate_seqs(3), vec![2]);
        assert_eq!(enumerate_seqs(4), vec![0, 0]);
        assert_eq!(seqs_of_weight(4), vec![vec![2], vec![0, 0]]);
    }

    #[test]
    fn length_bound_and_index_inverse() {
        for l in 0..300 {
            let s = enumerate_seqs(l);
            assert!(s.len() <= l);
            assert_eq!(seq_index(&s), l);
        }
    }

    #[test]
    fn dense_selector_examples() {
        assert_eq!(dense_selector(&sig(&[])), Vec::<usize>::new());
        assert_eq!(dense_selector(&sig(&[2])), vec![0]);
        assert_eq!(dense_selector(&sig(&[2, 2])), vec![1, 0]);
        // s_3 = ⟨2⟩ is not in T_⟨2,2,2⟩, so all zeros.
        assert_eq!(dense_selector(&sig(&[2, 2, 2])), vec![0, 0, 0]);
        assert_eq!(dense_selector(&sig(&[3, 2, 2])), vec![2, 0, 0]);
    }

    #[test]
    fn k_examples() {
        let lim = Limits::default();
        let k = build_k(&DenseSelector, &sig(&[2]), &lim).unwrap();
        assert_eq!(k.graph.edges(), vec![(0, 1), (1, 0)]);

        let k = build_k(&DenseSelector, &sig(&[3]), &lim).unwrap();
        assert_eq!(k.graph.edges(), vec![(0, 1), (1, 2), (2, 0)]);

        let k = build_k(&DenseSelector, &sig(&[2, 2]), &lim).unwrap();
        assert_eq!(k.verts, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        // 00↔10, 01↔11 at level 0; 00↔01 at level 1.
        assert_eq!(
            k.graph.edges(),
            vec![(0, 1), (0, 2), (1, 0), (1, 3), (2, 0), (3, 1)]
        );
        assert_eq!(k.level_edges, vec![4, 2]);
    }

    #[test]
    fn k_size_guard() {
        let lim = Limits { k_vertices: 8, ..Limits::default() };
        assert!(matches!(
            build_k(&DenseSelector, &sig(&[3, 3]), &lim),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn canonical_cycle_examples() {
        let lim = Limits::default();
        let cs = canonical_cycles(&DenseSelector, &sig(&[3]), &lim).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].length(), 2);

        let cs = canonical_cycles(&DenseSelector, &sig(&[2, 2]), &lim).unwrap();
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.length() == 1));

        let s = sig(&[2, 3]);
        let cs = canonical_cycles(&DenseSelector, &s, &lim).unwrap();
        assert_eq!(cs.len(), 4);
        let k = build_k(&DenseSelector, &s, &lim).unwrap();
        assert!(cs.iter().all(|c| c.verify(&k.graph) && c.is_minimal(&k.graph)));
    }

    #[test]
    fn density_examples() {
        let r = check_density(&DenseSelector, &sig(&[2, 2]), 2).unwrap();
        assert!(r.witnessed.contains(&(vec![0], 1)));
        assert!(r.witnessed.contains(&(vec![1], 2)));
        assert!(r.failures.is_empty());

        let r = check_density(&DenseSelector, &sig(&[2]), 1).unwrap();
        assert!(r.witnessed.contains(&(vec![0], 1)));
        assert_eq!(r.unresolved, vec![(vec![1], 2)]);

        let r = check_density(&DenseSelector, &sig(&[]), 0).unwrap();
        assert_eq!(r.witnessed, vec![(vec![], 0)]);
        assert!(r.unresolved.is_empty() && r.failures.is_empty());

        assert!(check_density(&DenseSelector, &sig(&[2]), 2).is_err());
    }

    #[test]
    fn monotone_examples() {
        assert!(check_monotone(&DenseSelector, &sig(&[3, 3, 3])).unwrap());
        assert!(check_monotone(&DenseSelector, &sig(&[2, 3])).unwrap());
        assert!(!check_monotone(&DenseSelector, &sig(&[3, 2])).unwrap());
        assert_eq!(monotone_violation(&DenseSelector, &sig(&[3, 2])).unwrap(), Some((0, 1)));
    }

    #[test]
    fn selector_table() {
        let t = SelectorTable::build(&DenseSelector, 2, 3).unwrap();
        // 1 + 2 + 4 sequences.
        assert_eq!(t.len(), 7);
        assert_eq!(t.select(&sig(&[2, 2])), Some(vec![1, 0]));
        assert_eq!(t.select(&sig(&[4])), None);
        let a = build_k(&t, &sig(&[2, 3]), &Limits::default()).unwrap();
        let b = build_k(&DenseSelector, &sig(&[2, 3]), &Limits::default()).unwrap();
        assert_eq!(a.graph, b.graph);

        let mut bad = HashMap::new();
        bad.insert(sig(&[2]), vec![2]);
        assert!(SelectorTable::from_entries(bad).is_err());
        assert!(build_k(&t, &sig(&[2, 2, 2]), &Limits::default()).is_ok());
        assert!(build_k(&t, &sig(&[2, 2, 2, 2]), &Limits::default()).is_err());
    }
}
