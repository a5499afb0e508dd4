//! The bridge between quasi orders and digraphs.
//!
//! For a quasi order `(P, ≤)` the associated digraph `A_P` has as vertices
//! the pairs `(x, y)` with `y ≰ x`, and an edge `(x0, y0) → (x1, y1)` iff
//! `y0 ≤ x1`. A set of such pairs is cycle-free exactly when adding it to `≤`
//! (and closing transitively) keeps the equivalence classes intact, which
//! turns acyclic covers of `A_P` into extension families and back.

use std::collections::VecDeque;

use crate::bits::BitMatrix;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hom::HomWitness;
use crate::order::{check_index, QuasiOrder, StrictOrder};

/// Bijection between the vertices of `A_P` (or `B_P`) and pairs of elements.
///
/// Pairs are listed in lexicographic order, so vertex ids are stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVertexMap {
    n: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<Option<usize>>,
}

impl PairVertexMap {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, v: usize) -> (usize, usize) {
        self.pairs[v]
    }

    pub fn vertex(&self, x: usize, y: usize) -> Option<usize> {
        if x < self.n && y < self.n {
            self.index[x * self.n + y]
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn to_pairs(&self, verts: &[usize]) -> Vec<(usize, usize)> {
        verts.iter().map(|&v| self.pairs[v]).collect()
    }
}

/// `A_P` (or `B_P` when `incomparable_only`) with its pair map.
pub fn build_ap(q: &QuasiOrder, incomparable_only: bool) -> (Digraph, PairVertexMap) {
    let n = q.n();
    let mut pairs = Vec::new();
    let mut index = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            if !q.leq(y, x) && !(incomparable_only && q.leq(x, y)) {
                index[x * n + y] = Some(pairs.len());
                pairs.push((x, y));
            }
        }
    }
    let m = pairs.len();
    let adj = BitMatrix::from_fn(m, |a, b| q.leq(pairs[a].1, pairs[b].0));
    // y ≰ x at every vertex, so (x,y) → (x,y) would need y ≤ x.
    let d = Digraph::from_matrix_unchecked(adj);
    (d, PairVertexMap { n, pairs, index })
}

/// A family of vertex sets covering a digraph, each inducing no cycle.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AcyclicCover {
    pub classes: Vec<Vec<usize>>,
}

impl AcyclicCover {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Checks coverage and per-class acyclicity against `d`.
    pub fn verify(&self, d: &Digraph) -> std::result::Result<(), String> {
        let mut seen = vec![false; d.n()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                if v >= d.n() {
                    return Err(format!("class {i} names vertex {v} outside 0..{}", d.n()));
                }
                seen[v] = true;
            }
            match d.is_acyclic(class) {
                Ok(a) if a.is_acyclic() => {}
                Ok(crate::digraph::Acyclicity::Cyclic(c)) => {
                    return Err(format!("class {i} contains cycle {:?}", c.verts()))
                }
                Ok(_) => unreachable!(),
                Err(e) => return Err(e.to_string()),
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(format!("vertex {v} is not covered"));
        }
        Ok(())
    }
}

/// Quasi orders extending `base` that jointly decide every pair:
/// for all `x, y` some member has `y ≤_i x`, or `x ≤ y` already holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionFamily {
    pub base: QuasiOrder,
    pub exts: Vec<QuasiOrder>,
}

impl ExtensionFamily {
    pub fn len(&self) -> usize {
        self.exts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exts.is_empty()
    }

    /// First pair `(x, y)` left undecided: `x ≰ y` and no member has `y ≤_i x`.
    pub fn undecided_pair(&self) -> Option<(usize, usize)> {
        let n = self.base.n();
        for x in 0..n {
            for y in 0..n {
                if !self.base.leq(x, y) && !self.exts.iter().any(|e| e.leq(y, x)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn verify(&self) -> std::result::Result<(), String> {
        for (i, e) in self.exts.iter().enumerate() {
            if let Some(why) = self.base.extension_defect(e) {
                return Err(format!("member {i} is not an extension: {why}"));
            }
        }
        if let Some((x, y)) = self.undecided_pair() {
            return Err(format!("pair ({x},{y}) is undecided"));
        }
        Ok(())
    }
}

/// `{(x, y) : y ≰ x ∧ x ⪯ y}`, the `A_P` vertices that `ext` orders upward.
pub fn x_of_extension(base: &QuasiOrder, ext: &QuasiOrder) -> Result<Vec<(usize, usize)>> {
    if base.n() != ext.n() {
        return Err(Error::SizeMismatch {
            left: base.n(),
            right: ext.n(),
        });
    }
    if let Some(why) = base.extension_defect(ext) {
        return Err(Error::NotExtension(why));
    }
    let n = base.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if !base.leq(y, x) && ext.leq(x, y) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

fn check_pairs(base: &QuasiOrder, x: &[(usize, usize)]) -> Result<()> {
    for &(a, b) in x {
        check_index(a, base.n())?;
        check_index(b, base.n())?;
        if base.leq(b, a) {
            return Err(Error::BadPair(a, b));
        }
    }
    Ok(())
}

fn closure_of(base: &QuasiOrder, x: &[(usize, usize)]) -> BitMatrix {
    let mut m = base.matrix().clone();
    for &(a, b) in x {
        m.set(a, b);
    }
    m.close_transitively();
    m
}

/// Transitive closure of `base ∪ x`, provided it keeps the classes of `base`.
///
/// Otherwise `x` contains a cycle of `A_P`; it is returned as
/// [`Error::CycleInX`], assembled from the paths produced by [`witness_path`].
pub fn closure_extend(base: &QuasiOrder, x: &[(usize, usize)]) -> Result<QuasiOrder> {
    check_pairs(base, x)?;
    let z = closure_of(base, x);
    let n = base.n();
    for p in 0..n {
        for q in 0..n {
            if p == q || !(z.get(p, q) && z.get(q, p)) || base.equiv(p, q) {
                continue;
            }
            let cycle = match (base.leq(p, q), base.leq(q, p)) {
                (false, false) => {
                    let mut c = witness_path(base, x, p, q)?;
                    c.extend(witness_path(base, x, q, p)?);
                    c
                }
                // y_k ≤ q ≤ p ≤ x_0 closes the path.
                (false, true) => witness_path(base, x, p, q)?,
                // z_l ≤ p ≤ q ≤ w_0 closes the path.
                (true, false) => witness_path(base, x, q, p)?,
                (true, true) => unreachable!(),
            };
            debug_assert!(is_pair_cycle(base, x, &cycle));
            return Err(Error::CycleInX(cycle));
        }
    }
    Ok(QuasiOrder::from_matrix_unchecked(z))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Base,
    Pair,
}

/// Shortest chain `p = r0, …, rl = r` whose steps are base relations or pairs of `x`.
fn derivation_chain(base: &QuasiOrder, x: &[(usize, usize)], p: usize, r: usize) -> Option<Vec<(usize, Step)>> {
    let n = base.n();
    let mut parent: Vec<Option<(usize, Step)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[p] = true;
    let mut queue = VecDeque::from([p]);
    while let Some(u) = queue.pop_front() {
        if u == r && u != p {
            break;
        }
        let base_next = (0..n).filter(|&v| v != u && base.leq(u, v)).map(|v| (v, Step::Base));
        let pair_next = x
            .iter()
            .filter(|&&(a, b)| a == u && !base.leq(a, b))
            .map(|&(_, b)| (b, Step::Pair));
        for (v, step) in base_next.chain(pair_next).collect::<Vec<_>>() {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some((u, step));
                queue.push_back(v);
            }
        }
    }
    if p == r || !seen[r] {
        return None;
    }
    let mut chain = Vec::new();
    let mut cur = r;
    while cur != p {
        let (prev, step) = parent[cur].unwrap();
        chain.push((cur, step));
        cur = prev;
    }
    chain.reverse();
    Some(chain)
}

/// A path `⟨(x0,y0), …, (xk,yk)⟩` of `A_P` inside `x` with `p ≤ x0` and
/// `yk ≤ r`, for `(p, r)` in the closure of `base ∪ x` but not in `base`.
///
/// The path is rebuilt by walking a derivation chain from `p` to `r` and
/// keeping, for every prefix `p … ri`, either the fact `p ≤ ri` or a path
/// ending below `ri`; base steps keep the path, pair steps append to it.
pub fn witness_path(base: &QuasiOrder, x: &[(usize, usize)], p: usize, r: usize) -> Result<Vec<(usize, usize)>> {
    check_pairs(base, x)?;
    check_index(p, base.n())?;
    check_index(r, base.n())?;
    if base.leq(p, r) {
        return Err(Error::NotApplicable(format!("({p},{r}) already holds in the base order")));
    }
    let chain = derivation_chain(base, x, p, r)
        .ok_or_else(|| Error::NotApplicable(format!("({p},{r}) is not in the closure")))?;
    let mut path: Option<Vec<(usize, usize)>> = None;
    let mut prev = p;
    for (next, step) in chain {
        if base.leq(p, next) {
            path = None;
        } else {
            match (&mut path, step) {
                (None, Step::Pair) => path = Some(vec![(prev, next)]),
                (None, Step::Base) => unreachable!("p ≤ prev ≤ next would put (p,next) in base"),
                (Some(_), Step::Base) => {}
                (Some(pth), Step::Pair) => pth.push((prev, next)),
            }
        }
        prev = next;
    }
    let path = path.expect("(p,r) ∉ base leaves an open path");
    debug_assert!(is_witness_path(base, x, p, r, &path));
    Ok(path)
}

/// Post-condition of [`witness_path`].
pub fn is_witness_path(base: &QuasiOrder, x: &[(usize, usize)], p: usize, r: usize, path: &[(usize, usize)]) -> bool {
    let (Some(first), Some(last)) = (path.first(), path.last()) else {
        return false;
    };
    path.iter().all(|pr| x.contains(pr))
        && path.windows(2).all(|w| base.leq(w[0].1, w[1].0))
        && base.leq(p, first.0)
        && base.leq(last.1, r)
}

/// `cycle` is a closed walk of `A_P` made of pairs from `x`.
pub fn is_pair_cycle(base: &QuasiOrder, x: &[(usize, usize)], cycle: &[(usize, usize)]) -> bool {
    let k = cycle.len();
    k >= 2
        && cycle.iter().all(|pr| x.contains(pr) && !base.leq(pr.1, pr.0))
        && (0..k).all(|i| base.leq(cycle[i].1, cycle[(i + 1) % k].0))
}

/// Turns an acyclic cover of `A_P` into an extension family of the same size.
pub fn cover_to_extensions(base: &QuasiOrder, cover: &AcyclicCover) -> Result<ExtensionFamily> {
    let (ap, map) = build_ap(base, false);
    cover.verify(&ap).map_err(Error::InvalidCover)?;
    let exts = cover
        .classes
        .iter()
        .map(|class| closure_extend(base, &map.to_pairs(class)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtensionFamily {
        base: base.clone(),
        exts,
    })
}

/// Turns an extension family into an acyclic cover of `A_P` of the same size.
pub fn extensions_to_cover(fam: &ExtensionFamily) -> Result<AcyclicCover> {
    fam.verify().map_err(Error::NotExtension)?;
    let (_, map) = build_ap(&fam.base, false);
    let classes = fam
        .exts
        .iter()
        .map(|e| {
            Ok(x_of_extension(&fam.base, e)?
                .into_iter()
                .map(|(a, b)| map.vertex(a, b).expect("X(⪯,≤) consists of A_P vertices"))
                .collect())
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    Ok(AcyclicCover { classes })
}

/// `P(G)` together with the embedding of `G` into its associated digraph.
#[derive(Clone, Debug)]
pub struct PgEmbedding {
    /// The order on `2n` ids: `x` encodes `(0, x)`, `n + x` encodes `(1, x)`.
    pub order: QuasiOrder,
    /// Image pair of every source vertex: `x ↦ ((1, x), (0, x))`.
    pub pairs: Vec<(usize, usize)>,
}

impl PgEmbedding {
    /// The embedding as a map into the vertex ids of `map`.
    pub fn witness(&self, map: &PairVertexMap) -> HomWitness {
        HomWitness {
            map: self
                .pairs
                .iter()
                .map(|&(a, b)| map.vertex(a, b).expect("(1,x),(0,x) is an A_P vertex"))
                .collect(),
            minimal: false,
        }
    }
}

/// The height-two quasi order `P(G)` on `2 × X`: `(0,x) ≤ (1,y)` iff `x → y`.
pub fn build_pg(d: &Digraph) -> PgEmbedding {
    let n = d.n();
    let leq = BitMatrix::from_fn(2 * n, |a, b| a == b || (a < n && b >= n && d.has_edge(a, b - n)));
    PgEmbedding {
        order: QuasiOrder::from_matrix_unchecked(leq),
        pairs: (0..n).map(|x| (n + x, x)).collect(),
    }
}

/// `base ∪ R` with `(a, b) ∈ R` iff some `u ≤ b` lies strictly above (in `s`)
/// every `v ≤ a`. The result extends `base`, and `a ⊴ b` whenever every
/// `u ≤ a` has `u s b`.
pub fn sepext_extend(base: &QuasiOrder, s: &StrictOrder) -> Result<QuasiOrder> {
    let n = base.n();
    if s.n() != n {
        return Err(Error::SizeMismatch { left: n, right: s.n() });
    }
    let down: Vec<Vec<usize>> = (0..n).map(|a| (0..n).filter(|&v| base.leq(v, a)).collect()).collect();
    let m = BitMatrix::from_fn(n, |a, b| {
        base.leq(a, b) || down[b].iter().any(|&u| down[a].iter().all(|&v| s.lt(v, u)))
    });
    QuasiOrder::from_matrix(m)
}

/// Binary-prefix cylinders over `0..n`.
///
/// Ids are written with `⌈log₂ n⌉` bits; for every binary string `s` up to
/// that length the set of ids starting with `s` is emitted, skipping empty
/// sets and repeats. Shorter prefixes come first.
pub fn prefix_separators(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let bits = (usize::BITS - (n - 1).leading_zeros()) as usize;
    let mut out: Vec<Vec<usize>> = Vec::new();
    for len in 0..=bits {
        for prefix in 0..(1usize << len) {
            let set: Vec<usize> = (0..n).filter(|&i| (i >> (bits - len)) == prefix).collect();
            if !set.is_empty() && !out.contains(&set) {
                out.push(set);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparatorOutcome {
    Family(ExtensionFamily),
    /// The sets fail to lift `x` above the down-set of `y`.
    Incomplete { x: usize, y: usize },
}

/// One extension per set `B`, from the strict order "outside `B` below inside `B`".
pub fn separators_to_family(base: &QuasiOrder, sets: &[Vec<usize>]) -> Result<SeparatorOutcome> {
    let n = base.n();
    let mut exts = Vec::with_capacity(sets.len());
    for set in sets {
        for &b in set {
            check_index(b, n)?;
        }
        exts.push(sepext_extend(base, &StrictOrder::below_set(n, set))?);
    }
    let fam = ExtensionFamily {
        base: base.clone(),
        exts,
    };
    Ok(match fam.undecided_pair() {
        Some((x, y)) => SeparatorOutcome::Incomplete { x, y },
        None => SeparatorOutcome::Family(fam),
    })
}
