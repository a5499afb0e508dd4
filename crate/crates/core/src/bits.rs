//! Dense square boolean matrices stored as bit rows.

use fixedbitset::FixedBitSet;

/// An `n × n` boolean relation. Row `i` holds the set `{j : (i, j) ∈ R}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    n: usize,
    rows: Vec<FixedBitSet>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        BitMatrix {
            n,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            m.set(i, i);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.set(i, j);
                }
            }
        }
        m
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i].insert(j);
    }

    #[inline]
    pub fn unset(&mut self, i: usize, j: usize) {
        self.rows[i].set(j, false);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.rows[i].ones() {
                t.set(j, i);
            }
        }
        t
    }

    /// Warshall closure in place: afterwards the relation is transitive.
    pub fn close_transitively(&mut self) {
        for k in 0..self.n {
            let row_k = self.rows[k].clone();
            for i in 0..self.n {
                if i != k && self.rows[i].contains(k) {
                    self.rows[i].union_with(&row_k);
                }
            }
        }
    }

    pub fn add_diagonal(&mut self) {
        for i in 0..self.n {
            self.set(i, i);
        }
    }

    /// `true` iff every pair of `self` is also in `other`.
    pub fn is_subset(&self, other: &BitMatrix) -> bool {
        self.n == other.n
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.is_subset(b))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.ones().map(move |j| (i, j)))
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    /// First triple `(i, j, k)` with `(i,j)`, `(j,k)` present and `(i,k)` absent.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.n {
            for j in self.rows[i].ones() {
                if let Some(k) = self.rows[j].difference(&self.rows[i]).next() {
                    return Some((i, j, k));
                }
            }
        }
        None
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BitMatrix")
            .field("n", &self.n)
            .field("pairs", &self.pairs().collect::<Vec<_>>())
            .finish()
    }
}

/// Bit set with capacity `n` containing the given members.
pub fn set_of(n: usize, members: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(n);
    for m in members {
        s.insert(m);
    }
    s
}
