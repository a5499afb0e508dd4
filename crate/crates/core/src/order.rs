//! Finite quasi orders, their quotients, extensions and linearizations.
//!
//! A quasi order on `0..n` is a reflexive transitive relation `≤`. Its
//! symmetric part `E` (`i E j` iff `i ≤ j ∧ j ≤ i`) is an equivalence
//! relation, and `≤` induces a strict partial order on the classes of `E`.

use std::collections::BinaryHeap;
use std::cmp::Reverse;

use crate::bits::BitMatrix;
use crate::error::{Error, Result};

/// Reflexive, transitive relation on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuasiOrder {
    leq: BitMatrix,
}

impl QuasiOrder {
    /// Builds a quasi order from `pairs`.
    ///
    /// With `close`, returns the reflexive-transitive closure; otherwise the
    /// pairs plus the diagonal must already be transitive.
    pub fn make(n: usize, pairs: &[(usize, usize)], close: bool) -> Result<Self> {
        let mut m = BitMatrix::identity(n);
        for &(i, j) in pairs {
            check_index(i, n)?;
            check_index(j, n)?;
            m.set(i, j);
        }
        if close {
            m.close_transitively();
        }
        Self::from_matrix(m)
    }

    /// Validates an arbitrary matrix as a quasi order.
    pub fn from_matrix(leq: BitMatrix) -> Result<Self> {
        for i in 0..leq.len() {
            if !leq.get(i, i) {
                // Report reflexivity failure through the same witness shape.
                return Err(Error::NotQuasiOrder(i, i, i));
            }
        }
        if let Some((i, j, k)) = leq.transitivity_violation() {
            return Err(Error::NotQuasiOrder(i, j, k));
        }
        Ok(QuasiOrder { leq })
    }

    /// Trusted constructor for callers that already guarantee the invariants.
    pub(crate) fn from_matrix_unchecked(leq: BitMatrix) -> Self {
        debug_assert!(Self::from_matrix(leq.clone()).is_ok());
        QuasiOrder { leq }
    }

    pub fn equality(n: usize) -> Self {
        QuasiOrder {
            leq: BitMatrix::identity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        QuasiOrder {
            leq: BitMatrix::from_fn(n, |_, _| true),
        }
    }

    /// The chain `0 ≤ 1 ≤ … ≤ n-1`.
    pub fn chain(n: usize) -> Self {
        QuasiOrder {
            leq: BitMatrix::from_fn(n, |i, j| i <= j),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.leq.len()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    /// `i < j`: `i ≤ j` and not `j ≤ i`.
    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && !self.leq(j, i)
    }

    #[inline]
    pub fn equiv(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && self.leq(j, i)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.leq
    }

    /// All pairs `(i, j)` with `i ≤ j`, diagonal included.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.leq.pairs().collect()
    }

    /// Pairs with `i ≤ j` and `i ≠ j`.
    pub fn off_diagonal_pairs(&self) -> Vec<(usize, usize)> {
        self.leq.pairs().filter(|(i, j)| i != j).collect()
    }

    pub fn is_total(&self) -> bool {
        (0..self.n()).all(|i| (0..self.n()).all(|j| self.comparable(i, j)))
    }

    /// `true` iff `≤` is antisymmetric (a partial order in the reflexive sense).
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n()).all(|i| (0..i).all(|j| !self.equiv(i, j)))
    }

    /// The `E`-classes and the strict order they inherit.
    pub fn quotient(&self) -> QuotientPoset {
        let n = self.n();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: Vec<usize> = (i..n).filter(|&j| self.equiv(i, j)).collect();
            for &j in &members {
                class_of[j] = id;
            }
            classes.push(members);
        }
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let lt = BitMatrix::from_fn(classes.len(), |a, b| self.lt(reps[a], reps[b]));
        QuotientPoset {
            classes,
            class_of,
            lt,
        }
    }

    /// `true` iff `ext` extends `self`: `self ⊆ ext` and both have the same
    /// equivalence classes.
    pub fn is_extended_by(&self, ext: &QuasiOrder) -> Result<bool> {
        if self.n() != ext.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: ext.n(),
            });
        }
        Ok(self.extension_defect(ext).is_none())
    }

    /// Describes why `ext` fails to extend `self`, or `None` if it does.
    pub(crate) fn extension_defect(&self, ext: &QuasiOrder) -> Option<String> {
        if self.n() != ext.n() {
            return Some(format!("size {} vs {}", self.n(), ext.n()));
        }
        for (i, j) in self.leq.pairs() {
            if !ext.leq(i, j) {
                return Some(format!("base pair ({i},{j}) missing from extension"));
            }
        }
        for i in 0..self.n() {
            for j in 0..self.n() {
                if ext.equiv(i, j) && !self.equiv(i, j) {
                    return Some(format!("extension merges classes of {i} and {j}"));
                }
            }
        }
        None
    }

    /// A total quasi order extending `self`.
    ///
    /// Classes are emitted in topological order of the quotient; among the
    /// available classes the one containing the least id goes first.
    pub fn linear_extension(&self) -> QuasiOrder {
        let quot = self.quotient();
        let order = quot.topological_order();
        let mut rank = vec![0usize; quot.len()];
        for (r, &c) in order.iter().enumerate() {
            rank[c] = r;
        }
        let n = self.n();
        let leq = BitMatrix::from_fn(n, |i, j| rank[quot.class_of[i]] <= rank[quot.class_of[j]]);
        QuasiOrder::from_matrix_unchecked(leq)
    }

    /// Entry `i` is the size of the down-set `{j : j ≤ i}`.
    pub fn local_profile(&self) -> Vec<usize> {
        let t = self.leq.transpose();
        (0..self.n()).map(|i| t.row(i).count_ones(..)).collect()
    }

    /// The quasi order whose strict part on classes is `lt` (lifted to `0..n`).
    ///
    /// `x ≤' y` iff `x ≤ y` or `[x] lt [y]`.
    pub fn lift_class_order(&self, quot: &QuotientPoset, class_lt: &BitMatrix) -> Result<QuasiOrder> {
        let n = self.n();
        let m = BitMatrix::from_fn(n, |i, j| {
            self.leq(i, j) || class_lt.get(quot.class_of[i], quot.class_of[j])
        });
        QuasiOrder::from_matrix(m)
    }
}

pub(crate) fn check_index(i: usize, n: usize) -> Result<()> {
    if i < n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i, n })
    }
}

/// The partial order `P/E` induced by a quasi order.
///
/// Classes are numbered by their least member, so class ids are increasing
/// in that member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientPoset {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Strict order on class ids.
    pub lt: BitMatrix,
}

impl QuotientPoset {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Kahn's algorithm, always taking the smallest available class id.
    pub fn topological_order(&self) -> Vec<usize> {
        let m = self.len();
        let mut indeg = vec![0usize; m];
        for (_, b) in self.lt.pairs() {
            indeg[b] += 1;
        }
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..m).filter(|&c| indeg[c] == 0).map(Reverse).collect();
        let mut out = Vec::with_capacity(m);
        while let Some(Reverse(c)) = heap.pop() {
            out.push(c);
            for d in self.lt.row(c).ones() {
                indeg[d] -= 1;
                if indeg[d] == 0 {
                    heap.push(Reverse(d));
                }
            }
        }
        out
    }

    /// Every linear extension of the class order, as sequences of class ids.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let m = self.len();
        let mut out = Vec::new();
        let mut placed = vec![false; m];
        let mut seq = Vec::with_capacity(m);
        self.extend_linear(&mut placed, &mut seq, &mut out);
        out
    }

    fn extend_linear(&self, placed: &mut [bool], seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let m = self.len();
        if seq.len() == m {
            out.push(seq.clone());
            return;
        }
        for c in 0..m {
            if placed[c] {
                continue;
            }
            let ready = (0..m).all(|d| placed[d] || !self.lt.get(d, c));
            if ready {
                placed[c] = true;
                seq.push(c);
                self.extend_linear(placed, seq, out);
                seq.pop();
                placed[c] = false;
            }
        }
    }
}

/// Irreflexive transitive relation on `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrictOrder {
    lt: BitMatrix,
}

impl StrictOrder {
    pub fn from_matrix(lt: BitMatrix) -> Result<Self> {
        for i in 0..lt.len() {
            if lt.get(i, i) {
                return Err(Error::NotStrictOrder(format!("{i} < {i}")));
            }
        }
        if let Some((i, j, k)) = lt.transitivity_violation() {
            return Err(Error::NotStrictOrder(format!(
                "{i} < {j} and {j} < {k} but not {i} < {k}"
            )));
        }
        Ok(StrictOrder { lt })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = BitMatrix::new(n);
        for &(i, j) in pairs {
            check_index(i, n)?;
            check_index(j, n)?;
            m.set(i, j);
        }
        Self::from_matrix(m)
    }

    pub fn empty(n: usize) -> Self {
        StrictOrder {
            lt: BitMatrix::new(n),
        }
    }

    /// `{(x, y) : x ∉ B ∧ y ∈ B}`: everything outside `B` lies below everything in it.
    pub fn below_set(n: usize, set: &[usize]) -> Self {
        let mut inside = vec![false; n];
        for &b in set {
            inside[b] = true;
        }
        StrictOrder {
            lt: BitMatrix::from_fn(n, |x, y| !inside[x] && inside[y]),
        }
    }

    pub fn n(&self) -> usize {
        self.lt.len()
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.lt.get(i, j)
    }
}
