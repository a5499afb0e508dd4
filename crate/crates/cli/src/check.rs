//! Certificate checkers.
//!
//! Everything here works on plain boolean matrices built from the serialized
//! instance and witness, and shares no code with the solvers it audits.

/// Dense square boolean matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rel {
    pub n: usize,
    bits: Vec<bool>,
}

impl Rel {
    pub fn new(n: usize) -> Self {
        Rel { n, bits: vec![false; n * n] }
    }

    pub fn from_pairs(n: usize, pairs: &[[usize; 2]], reflexive: bool) -> Option<Self> {
        let mut r = Rel::new(n);
        for p in pairs {
            if p[0] >= n || p[1] >= n {
                return None;
            }
            r.set(p[0], p[1]);
        }
        if reflexive {
            for i in 0..n {
                r.set(i, i);
            }
        }
        Some(r)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.n + j] = true;
    }

    pub fn closed(&self) -> Rel {
        let mut r = self.clone();
        for k in 0..r.n {
            for i in 0..r.n {
                if r.get(i, k) {
                    for j in 0..r.n {
                        if r.get(k, j) {
                            r.set(i, j);
                        }
                    }
                }
            }
        }
        r
    }
}

pub fn is_quasi(r: &Rel) -> bool {
    let n = r.n;
    (0..n).all(|i| r.get(i, i))
        && (0..n).all(|i| (0..n).all(|j| !r.get(i, j) || (0..n).all(|k| !r.get(j, k) || r.get(i, k))))
}

/// `ext` contains `base` and creates no new equivalences.
pub fn extends(base: &Rel, ext: &Rel) -> bool {
    let n = base.n;
    ext.n == n
        && is_quasi(ext)
        && (0..n).all(|i| {
            (0..n).all(|j| {
                (!base.get(i, j) || ext.get(i, j))
                    && (!(ext.get(i, j) && ext.get(j, i)) || (base.get(i, j) && base.get(j, i)))
            })
        })
}

/// Every pair with `x ≰ y` is reversed (`y ≤_i x`) by some member.
pub fn decides(base: &Rel, exts: &[Rel]) -> bool {
    let n = base.n;
    (0..n).all(|x| (0..n).all(|y| base.get(x, y) || exts.iter().any(|e| e.get(y, x))))
}

pub fn family_valid(base: &Rel, exts: &[Rel]) -> bool {
    is_quasi(base) && exts.iter().all(|e| extends(base, e)) && decides(base, exts)
}

/// Number of equivalence classes of a quasi order.
pub fn class_count(q: &Rel) -> usize {
    (0..q.n).filter(|&i| (0..i).all(|j| !(q.get(i, j) && q.get(j, i)))).count()
}

/// The pair digraph of a quasi order: vertices `(x, y)` with `y ≰ x` in
/// lexicographic order, edge `(x0,y0) → (x1,y1)` iff `y0 ≤ x1`.
pub struct PairGraph {
    pub pairs: Vec<(usize, usize)>,
    pub adj: Rel,
}

pub fn pair_graph(q: &Rel, incomparable_only: bool) -> PairGraph {
    let n = q.n;
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if !q.get(y, x) && !(incomparable_only && q.get(x, y)) {
                pairs.push((x, y));
            }
        }
    }
    let mut adj = Rel::new(pairs.len());
    for (i, &(_, y0)) in pairs.iter().enumerate() {
        for (j, &(x1, _)) in pairs.iter().enumerate() {
            if q.get(y0, x1) {
                adj.set(i, j);
            }
        }
    }
    PairGraph { pairs, adj }
}

pub fn pair_index(pg: &PairGraph, p: (usize, usize)) -> Option<usize> {
    pg.pairs.iter().position(|&q| q == p)
}

/// No directed cycle among `set` (repeated peeling of sources).
pub fn acyclic(adj: &Rel, set: &[usize]) -> bool {
    let mut alive: Vec<usize> = set.to_vec();
    alive.sort_unstable();
    alive.dedup();
    loop {
        let before = alive.len();
        let keep: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&v| alive.iter().any(|&u| adj.get(u, v)))
            .collect();
        if keep.is_empty() {
            return true;
        }
        if keep.len() == before {
            return false;
        }
        alive = keep;
    }
}

/// Classes cover every vertex, stay in range and each induce no cycle.
pub fn cover_valid(adj: &Rel, classes: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.n];
    for c in classes {
        for &v in c {
            if v >= adj.n {
                return false;
            }
            seen[v] = true;
        }
    }
    seen.iter().all(|&s| s) && classes.iter().all(|c| acyclic(adj, c))
}

/// Whether `adj` splits into `k` acyclic classes, by plain backtracking in
/// vertex order with canonical class labels. `None` when the node cap runs out.
pub fn colourable(adj: &Rel, k: usize, cap: u64) -> Option<bool> {
    fn rec(adj: &Rel, k: usize, v: usize, classes: &mut Vec<Vec<usize>>, nodes: &mut u64, cap: u64) -> Option<bool> {
        if v == adj.n {
            return Some(true);
        }
        let open = (classes.len() + 1).min(k);
        for c in 0..open {
            *nodes += 1;
            if *nodes > cap {
                return None;
            }
            if c == classes.len() {
                classes.push(Vec::new());
            }
            classes[c].push(v);
            if acyclic(adj, &classes[c]) && rec(adj, k, v + 1, classes, nodes, cap)? {
                return Some(true);
            }
            classes[c].pop();
            if classes[c].is_empty() {
                classes.pop();
            }
        }
        Some(false)
    }
    if adj.n == 0 {
        return Some(true);
    }
    let mut nodes = 0;
    rec(adj, k, 0, &mut Vec::new(), &mut nodes, cap)
}

/// `k` is the least number of acyclic classes, given a valid `k`-cover.
pub fn optimal_cover(adj: &Rel, classes: &[Vec<usize>], k: usize, cap: u64) -> bool {
    let nonempty = classes.iter().filter(|c| !c.is_empty()).count();
    cover_valid(adj, classes) && nonempty <= k && (k == 0 || colourable(adj, k - 1, cap) == Some(false))
}

pub fn symmetric(adj: &Rel) -> bool {
    (0..adj.n).all(|i| (0..adj.n).all(|j| adj.get(i, j) == adj.get(j, i)))
}

pub fn proper_colouring(adj: &Rel, colour: &[usize], k: usize) -> bool {
    colour.len() == adj.n
        && colour.iter().all(|&c| c < k)
        && (0..adj.n).all(|i| (0..adj.n).all(|j| !adj.get(i, j) || colour[i] != colour[j]))
}

pub fn is_hom(g: &Rel, h: &Rel, map: &[usize]) -> bool {
    map.len() == g.n
        && map.iter().all(|&v| v < h.n)
        && (0..g.n).all(|u| (0..g.n).all(|v| !g.get(u, v) || h.get(map[u], map[v])))
}

/// Minimal cycles: vertex sequences whose only edges among themselves run
/// from each vertex to the next, listed once with the least vertex first.
pub fn minimal_cycles(adj: &Rel) -> Vec<Vec<usize>> {
    fn induced_ok(adj: &Rel, path: &[usize], w: usize, closing: bool) -> bool {
        // Adding `w` after `path`: the only allowed edges between `w` and the
        // path are last → w, plus w → first when `w` closes the cycle.
        let last = path.len() - 1;
        path.iter().enumerate().all(|(i, &u)| {
            let fwd_ok = !adj.get(u, w) || i == last;
            let back_ok = !adj.get(w, u) || (closing && i == 0);
            fwd_ok && back_ok
        })
    }
    fn rec(adj: &Rel, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for w in start + 1..adj.n {
            if path.contains(&w) || !adj.get(last, w) {
                continue;
            }
            let closes = adj.get(w, start);
            if !induced_ok(adj, path, w, closes) {
                continue;
            }
            path.push(w);
            if closes {
                out.push(path.clone());
            } else {
                rec(adj, path, out);
            }
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in 0..adj.n {
        rec(adj, &mut vec![s], &mut out);
    }
    out
}

pub fn is_minimal_cycle(adj: &Rel, c: &[usize]) -> bool {
    let k = c.len();
    if k < 2 || c.iter().any(|&v| v >= adj.n) {
        return false;
    }
    let mut sorted = c.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == k
        && (0..k).all(|i| (0..k).all(|j| adj.get(c[i], c[j]) == (j == (i + 1) % k)))
}

/// Edge-preserving, and inside every minimal cycle of `g` non-edges go to non-edges.
pub fn is_minimal_hom(g: &Rel, h: &Rel, map: &[usize]) -> bool {
    is_hom(g, h, map)
        && minimal_cycles(g).iter().all(|c| {
            let k = c.len();
            (0..k).all(|i| (0..k).all(|j| i == j || j == (i + 1) % k || !h.get(map[c[i]], map[c[j]])))
        })
}

/// Whether any map `g → h` is a (minimal) homomorphism, by trying all of
/// them. `None` when there are more than `cap` maps.
pub fn any_hom(g: &Rel, h: &Rel, minimal: bool, cap: u64) -> Option<bool> {
    let total = (h.n as u64).checked_pow(g.n as u32)?;
    if total > cap {
        return None;
    }
    let mut map = vec![0usize; g.n];
    for mut code in 0..total {
        for slot in map.iter_mut() {
            *slot = (code % h.n as u64) as usize;
            code /= h.n as u64;
        }
        let ok = if minimal { is_minimal_hom(g, h, &map) } else { is_hom(g, h, &map) };
        if ok {
            return Some(true);
        }
    }
    Some(false)
}

/// Linear orders (as element sequences) extending the quasi order, one per
/// ordering of its classes, each listing the members of a class by id.
pub fn linear_extensions(q: &Rel) -> Vec<Vec<usize>> {
    let n = q.n;
    let reps: Vec<usize> = (0..n).filter(|&i| (0..i).all(|j| !(q.get(i, j) && q.get(j, i)))).collect();
    let mut out = Vec::new();
    let mut seq = Vec::new();
    let mut used = vec![false; reps.len()];
    fn rec(q: &Rel, reps: &[usize], used: &mut [bool], seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if seq.len() == reps.len() {
            let mut flat = Vec::new();
            for &r in seq.iter() {
                flat.extend((0..q.n).filter(|&i| q.get(i, r) && q.get(r, i)));
            }
            out.push(flat);
            return;
        }
        for (c, &r) in reps.iter().enumerate() {
            if used[c] {
                continue;
            }
            let ready = reps
                .iter()
                .enumerate()
                .all(|(d, &s)| used[d] || d == c || !(q.get(s, r) && !q.get(r, s)));
            if ready {
                used[c] = true;
                seq.push(r);
                rec(q, reps, used, seq, out);
                seq.pop();
                used[c] = false;
            }
        }
    }
    rec(q, &reps, &mut used, &mut seq, &mut out);
    out
}

/// The quasi order "earlier class or same class" of an element sequence
/// produced by [`linear_extensions`], for base order `q`.
pub fn sequence_order(q: &Rel, seq: &[usize]) -> Rel {
    let n = q.n;
    let mut pos = vec![0usize; n];
    for (i, &x) in seq.iter().enumerate() {
        pos[x] = i;
    }
    let mut r = Rel::new(n);
    for a in 0..n {
        for b in 0..n {
            if (q.get(a, b) && q.get(b, a)) || pos[a] <= pos[b] {
                r.set(a, b);
            }
        }
    }
    r
}

/// Whether some `d` linear extensions realize `q`. `None` past `cap` subsets.
pub fn realizable_with(q: &Rel, d: usize, cap: u64) -> Option<bool> {
    if class_count(q) <= 1 {
        return Some(true);
    }
    if d == 0 {
        return Some(false);
    }
    let lins: Vec<Rel> = linear_extensions(q).iter().map(|s| sequence_order(q, s)).collect();
    let mut idx: Vec<usize> = (0..d).collect();
    let m = lins.len();
    if d > m {
        idx = (0..m).collect();
    }
    let mut tried = 0u64;
    loop {
        tried += 1;
        if tried > cap {
            return None;
        }
        let chosen: Vec<Rel> = idx.iter().map(|&i| lins[i].clone()).collect();
        if decides(q, &chosen) {
            return Some(true);
        }
        // Next combination in lexicographic order.
        let k = idx.len();
        let mut i = k;
        while i > 0 && idx[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return Some(false);
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
