//! Exact dichromatic number.
//!
//! Vertices outside every non-trivial strongly connected component lie on no
//! cycle and can join any class, so each non-trivial component is solved on
//! its own and the answer is the maximum over components (at least 1 for a
//! non-empty digraph). Each component is solved by iterative deepening on the
//! class count with a backtracking search that picks the most constrained
//! vertex first.

use fixedbitset::FixedBitSet;

use crate::digraph::Digraph;
use crate::error::Result;
use crate::limits::{Limits, Meter};
use crate::reduction::AcyclicCover;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicrResult {
    pub k: usize,
    pub cover: AcyclicCover,
    /// Search nodes spent, summed over components and class counts.
    pub nodes: u64,
}

pub fn dichromatic_number(d: &Digraph, limits: &Limits) -> Result<DicrResult> {
    let n = d.n();
    if n == 0 {
        return Ok(DicrResult { k: 0, cover: AcyclicCover::default(), nodes: 0 });
    }
    let mut meter = Meter::new("dichromatic search", limits.dicr_nodes);
    let mut class_of = vec![0usize; n];
    let mut k = 1;
    for comp in d.scc_decompose() {
        if comp.len() < 2 {
            continue;
        }
        let sub = d.induced(&comp);
        // A non-trivial strongly connected digraph has a cycle.
        let mut kc = 2;
        let colouring = loop {
            if let Some(c) = Dicolouring::new(&sub, kc).solve(&mut meter)? {
                break c;
            }
            kc += 1;
        };
        for (i, &v) in comp.iter().enumerate() {
            class_of[v] = colouring[i];
        }
        k = k.max(kc);
    }
    let mut classes = vec![Vec::new(); k];
    for (v, &c) in class_of.iter().enumerate() {
        classes[c].push(v);
    }
    Ok(DicrResult { k, cover: AcyclicCover { classes }, nodes: meter.used() })
}

/// Partition of `d` into `k` acyclic classes, if one exists (class per vertex).
pub fn dicolour(d: &Digraph, k: usize, limits: &Limits) -> Result<Option<Vec<usize>>> {
    let mut meter = Meter::new("dichromatic search", limits.dicr_nodes);
    if d.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    Dicolouring::new(d, k).solve(&mut meter)
}

const UNASSIGNED: usize = usize::MAX;

struct Dicolouring<'a> {
    d: &'a Digraph,
    k: usize,
    class: Vec<usize>,
    /// `reach[c][u]`: vertices of class `c` reachable from `u` by a non-empty
    /// path whose vertices after `u` all lie in class `c`.
    reach: Vec<Vec<FixedBitSet>>,
    used: usize,
    assigned: usize,
}

impl<'a> Dicolouring<'a> {
    fn new(d: &'a Digraph, k: usize) -> Self {
        let m = d.n();
        Dicolouring {
            d,
            k,
            class: vec![UNASSIGNED; m],
            reach: vec![vec![FixedBitSet::with_capacity(m); m]; k],
            used: 0,
            assigned: 0,
        }
    }

    /// Adding `u` to class `c` closes a cycle iff `u` reaches one of its own
    /// in-neighbours inside `c`.
    #[inline]
    fn allowed(&self, u: usize, c: usize) -> bool {
        self.reach[c][u].is_disjoint(self.d.in_neighbors(u))
    }

    fn add(&mut self, u: usize, c: usize) {
        let mut gained = self.reach[c][u].clone();
        gained.insert(u);
        let into_u = self.d.in_neighbors(u);
        for w in 0..self.d.n() {
            let row = &mut self.reach[c][w];
            if into_u.contains(w) || !row.is_disjoint(into_u) {
                row.union_with(&gained);
            }
        }
        self.class[u] = c;
        self.assigned += 1;
    }

    fn solve(mut self, meter: &mut Meter) -> Result<Option<Vec<usize>>> {
        if self.search(meter)? {
            Ok(Some(self.class))
        } else {
            Ok(None)
        }
    }

    fn search(&mut self, meter: &mut Meter) -> Result<bool> {
        let m = self.d.n();
        if self.assigned == m {
            return Ok(true);
        }
        // Classes beyond `used` are interchangeable: only the first fresh one is tried.
        let open = (self.used + 1).min(self.k);
        let mut best: Option<(usize, Vec<usize>)> = None;
        for u in 0..m {
            if self.class[u] != UNASSIGNED {
                continue;
            }
            let opts: Vec<usize> = (0..open).filter(|&c| self.allowed(u, c)).collect();
            if opts.is_empty() {
                return Ok(false);
            }
            let better = match &best {
                None => true,
                Some((bu, bo)) => {
                    opts.len() < bo.len()
                        || (opts.len() == bo.len() && self.d.degree(u) > self.d.degree(*bu))
                }
            };
            if better {
                let single = opts.len() == 1;
                best = Some((u, opts));
                if single {
                    break;
                }
            }
        }
        let (u, opts) = best.expect("an unassigned vertex exists");
        for c in opts {
            meter.tick()?;
            let saved = self.reach[c].clone();
            let saved_used = self.used;
            self.add(u, c);
            self.used = self.used.max(c + 1);
            if self.search(meter)? {
                return Ok(true);
            }
            self.reach[c] = saved;
            self.used = saved_used;
            self.class[u] = UNASSIGNED;
            self.assigned -= 1;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn empty_and_acyclic() {
        assert_eq!(dichromatic_number(&Digraph::empty(0), &lim()).unwrap().k, 0);
        let r = dichromatic_number(&Digraph::empty(3), &lim()).unwrap();
        assert_eq!(r.k, 1);
        assert_eq!(r.cover.classes, vec![vec![0, 1, 2]]);
        let path = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(dichromatic_number(&path, &lim()).unwrap().k, 1);
    }

    #[test]
    fn cycles_need_two() {
        for n in 2..=7 {
            let c = Digraph::directed_cycle(n);
            let r = dichromatic_number(&c, &lim()).unwrap();
            assert_eq!(r.k, 2, "C_{n}");
            assert_eq!(r.cover.verify(&c), Ok(()));
        }
    }

    #[test]
    fn bidirected_complete() {
        for n in 1..=5 {
            let g = Digraph::bidirected_complete(n);
            let r = dichromatic_number(&g, &lim()).unwrap();
            assert_eq!(r.k, n);
            assert_eq!(r.cover.verify(&g), Ok(()));
            assert_eq!(dicolour(&g, n - 1, &lim()).unwrap(), None);
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let g = Digraph::bidirected_complete(6);
        assert!(matches!(
            dichromatic_number(&g, &Limits { dicr_nodes: 3, ..lim() }),
            Err(crate::Error::LimitExceeded { .. })
        ));
    }
}
