//! Acceptance criteria AC1–AC11. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.
//!
//! Every expected value is recomputed here by brute force over plain boolean
//! matrices rather than taken from the library.

use std::process::ExitCode;
use std::time::Instant;

use dichro_core::g0::{build_k, canonical_cycles, check_monotone, DenseSelector, SigmaSeq};
use dichro_core::gen::{self, SplitMix64};
use dichro_core::reduction::{
    is_witness_path, prefix_separators, separators_to_family, witness_path, x_of_extension, SeparatorOutcome,
};
use dichro_core::solvers::{realizer_oracle, RealizerOutcome};
use dichro_core::{
    build_ap, build_pg, chromatic_number, closure_extend, cover_to_extensions, dichromatic_number,
    extensions_to_cover, find_homomorphism, order_dimension, verify_homomorphism, Cycle, Digraph, DimMethod, Error,
    HomOutcome, HomWitness, Limits, QuasiOrder,
};

type Mat = Vec<Vec<bool>>;

fn order_mat(q: &QuasiOrder) -> Mat {
    (0..q.n()).map(|i| (0..q.n()).map(|j| q.leq(i, j)).collect()).collect()
}

fn digraph_mat(d: &Digraph) -> Mat {
    (0..d.n()).map(|i| (0..d.n()).map(|j| d.has_edge(i, j)).collect()).collect()
}

fn transitive(m: &Mat) -> bool {
    let n = m.len();
    (0..n).all(|i| (0..n).all(|j| !m[i][j] || (0..n).all(|k| !m[j][k] || m[i][k])))
}

fn closure(m: &Mat) -> Mat {
    let mut r = m.clone();
    let n = r.len();
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                let via = r[k].clone();
                for (cell, &b) in r[i].iter_mut().zip(&via) {
                    *cell |= b;
                }
            }
        }
    }
    r
}

/// Reflexive, transitive, contains `base`, same equivalence classes.
fn is_extension(base: &Mat, ext: &Mat) -> bool {
    let n = base.len();
    (0..n).all(|i| ext[i][i])
        && transitive(ext)
        && (0..n).all(|i| {
            (0..n).all(|j| (!base[i][j] || ext[i][j]) && (!(ext[i][j] && ext[j][i]) || (base[i][j] && base[j][i])))
        })
}

fn decides(base: &Mat, exts: &[Mat]) -> bool {
    let n = base.len();
    (0..n).all(|x| (0..n).all(|y| base[x][y] || exts.iter().any(|e| e[y][x])))
}

/// No directed cycle among `set`, by repeatedly removing vertices without
/// in-neighbours in the set.
fn acyclic(adj: &Mat, set: &[usize]) -> bool {
    let mut alive = set.to_vec();
    loop {
        let keep: Vec<usize> = alive.iter().copied().filter(|&v| alive.iter().any(|&u| adj[u][v])).collect();
        if keep.is_empty() {
            return true;
        }
        if keep.len() == alive.len() {
            return false;
        }
        alive = keep;
    }
}

fn independent(adj: &Mat, set: &[usize]) -> bool {
    set.iter().all(|&u| set.iter().all(|&v| !adj[u][v]))
}

/// Every set partition of `0..n` (restricted growth strings).
fn partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(v: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if v == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..=cur.len() {
            if c == cur.len() {
                cur.push(vec![v]);
            } else {
                cur[c].push(v);
            }
            rec(v + 1, n, cur, out);
            if cur[c].len() == 1 {
                cur.pop();
            } else {
                cur[c].pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

/// Least number of blocks of a partition whose blocks all satisfy `ok`.
fn min_blocks(n: usize, ok: impl Fn(&[usize]) -> bool) -> usize {
    partitions(n).iter().filter(|p| p.iter().all(|b| ok(b))).map(|p| p.len()).min().unwrap_or(0)
}

/// Pair digraph of an order: vertices `(x,y)` with `y ≰ x`, edge iff `y0 ≤ x1`.
fn pair_digraph(q: &Mat, incomparable_only: bool) -> (Vec<(usize, usize)>, Mat) {
    let n = q.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| !q[y][x] && !(incomparable_only && q[x][y]))
        .collect();
    let adj = pairs.iter().map(|&(_, y0)| pairs.iter().map(|&(x1, _)| q[y0][x1]).collect()).collect();
    (pairs, adj)
}

/// Linear extensions of a quasi order as relations ("same class or earlier").
fn linear_extensions(q: &Mat) -> Vec<Mat> {
    let n = q.len();
    let reps: Vec<usize> = (0..n).filter(|&i| (0..i).all(|j| !(q[i][j] && q[j][i]))).collect();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = Vec::new();
    fn rec(q: &Mat, reps: &[usize], perm: &mut Vec<usize>, out: &mut Vec<Mat>) {
        if perm.len() == reps.len() {
            let n = q.len();
            let rank = |x: usize| perm.iter().position(|&r| q[x][r] && q[r][x]).unwrap();
            out.push((0..n).map(|a| (0..n).map(|b| rank(a) <= rank(b)).collect()).collect());
            return;
        }
        for &r in reps {
            if perm.contains(&r) {
                continue;
            }
            if reps.iter().all(|&s| s == r || perm.contains(&s) || !(q[s][r] && !q[r][s])) {
                perm.push(r);
                rec(q, reps, perm, out);
                perm.pop();
            }
        }
    }
    rec(q, &reps, &mut perm, &mut out);
    out
}

/// Least number of linear extensions whose intersection is `q` (0 for at
/// most one class).
fn brute_dimension(q: &Mat) -> usize {
    let lins = linear_extensions(q);
    if lins.len() <= 1 && (0..q.len()).all(|i| (0..q.len()).all(|j| q[i][j])) {
        return 0;
    }
    for d in 1..=lins.len() {
        let mut idx: Vec<usize> = (0..d).collect();
        loop {
            let chosen: Vec<Mat> = idx.iter().map(|&i| lins[i].clone()).collect();
            if decides(q, &chosen) {
                return d;
            }
            let mut i = d;
            while i > 0 && idx[i - 1] == lins.len() - d + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..d {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("all linear extensions together realize the order")
}

/// Posets on `n` elements by filtering every relation on the off-diagonal pairs.
fn brute_poset_count(n: usize) -> usize {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut count = 0;
    for mask in 0u64..(1 << cells.len()) {
        let mut m = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for (b, &(i, j)) in cells.iter().enumerate() {
            m[i][j] = mask >> b & 1 == 1;
        }
        let antisym = (0..n).all(|i| (0..n).all(|j| i == j || !(m[i][j] && m[j][i])));
        if antisym && transitive(&m) {
            count += 1;
        }
    }
    count
}

fn posets_up_to(n: usize) -> Vec<QuasiOrder> {
    (0..=n).flat_map(|m| gen::enumerate_posets(m).unwrap()).collect()
}

fn lim() -> Limits {
    Limits::default()
}

fn classes(q: &QuasiOrder) -> usize {
    q.quotient().len()
}

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1() -> Outcome {
    let mut checked = 0;
    for n in 0..=5 {
        let all = gen::enumerate_posets(n).map_err(|e| e.to_string())?;
        let brute = brute_poset_count(n);
        ensure(all.len() == brute, || format!("n={n}: enumerated {} posets, brute force {brute}", all.len()))?;
        for q in all.iter().filter(|q| classes(q) >= 2) {
            let via = order_dimension(q, DimMethod::ViaDicr, &lim()).map_err(|e| e.to_string())?.d;
            let real = order_dimension(q, DimMethod::Realizer, &lim()).map_err(|e| e.to_string())?.d;
            let (ap, _) = build_ap(q, false);
            let k = dichromatic_number(&ap, &lim()).map_err(|e| e.to_string())?.k;
            let brute = brute_dimension(&order_mat(q));
            ensure(via == real && real == k && k == brute, || {
                format!("{:?}: via_dicr {via}, realizer {real}, dicr {k}, brute force {brute}", q.off_diagonal_pairs())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} posets with >= 2 classes, counts match brute force"))
}

fn ac2() -> Outcome {
    let cases = [
        ("chain 4", gen::chain(4), 1),
        ("antichain 2", gen::antichain(2), 2),
        ("crown 2", gen::crown(2), 2),
        ("crown 3", gen::crown(3), 3),
        ("boolean 3", gen::boolean_lattice(3), 3),
    ];
    for (name, q, expected) in cases {
        let brute = brute_dimension(&order_mat(&q));
        ensure(brute == expected, || format!("{name}: brute force gives {brute}, expected {expected}"))?;
        let oracle = match realizer_oracle(&q, 8, &lim()).map_err(|e| e.to_string())? {
            RealizerOutcome::Dimension { d, .. } => d,
            RealizerOutcome::Exceeds(d) => return Err(format!("{name}: realizer exceeds {d}")),
        };
        let via = order_dimension(&q, DimMethod::ViaDicr, &lim()).map_err(|e| e.to_string())?.d;
        ensure(oracle == expected && via == expected, || format!("{name}: realizer {oracle}, via_dicr {via}"))?;
    }
    Ok("5 landmarks".into())
}

/// No assignment of `0..n` to `k` classes leaves every class acyclic.
fn no_cover_with(adj: &Mat, k: usize) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    if k == 0 {
        return true;
    }
    let total = k.pow(n as u32);
    (0..total).all(|mut code| {
        let mut cls = vec![Vec::new(); k];
        for v in 0..n {
            cls[code % k].push(v);
            code /= k;
        }
        cls.iter().any(|c| !acyclic(adj, c))
    })
}

fn ac3() -> Outcome {
    let mut cases: Vec<(String, Digraph, usize)> = Vec::new();
    for n in 2..=7 {
        cases.push((format!("C_{n}"), Digraph::directed_cycle(n), 2));
    }
    for n in 1..=5 {
        cases.push((format!("K_{n}"), Digraph::bidirected_complete(n), n));
    }
    let mut rng = SplitMix64::new(3);
    for i in 0..50 {
        let n = rng.range_inclusive(1, 8);
        let p = rng.next_f64();
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.bernoulli(p)).collect();
        cases.push((format!("DAG #{i}"), Digraph::new(n, &edges).unwrap(), 1));
    }
    for (name, d, expected) in &cases {
        let r = dichromatic_number(d, &lim()).map_err(|e| e.to_string())?;
        let adj = digraph_mat(d);
        ensure(r.k == *expected, || format!("{name}: got {}, expected {expected}", r.k))?;
        ensure(r.cover.classes.iter().all(|c| acyclic(&adj, c)), || format!("{name}: cover has a cyclic class"))?;
        ensure(no_cover_with(&adj, expected - 1), || format!("{name}: {} classes suffice", expected - 1))?;
    }
    Ok(format!("{} digraphs, k-1 infeasible by exhaustive assignment", cases.len()))
}

fn ac4() -> Outcome {
    let mut rng = SplitMix64::new(4);
    for i in 0..100 {
        let n = rng.range_inclusive(1, 8);
        let p = rng.next_f64();
        let g = gen::random_graph(n, p, &mut rng);
        let chi = chromatic_number(&g, &lim()).map_err(|e| e.to_string())?.k;
        let k = dichromatic_number(&g, &lim()).map_err(|e| e.to_string())?.k;
        let adj = digraph_mat(&g);
        let brute_chi = min_blocks(n, |b| independent(&adj, b));
        let brute_k = min_blocks(n, |b| acyclic(&adj, b));
        ensure(chi == k && chi == brute_chi && k == brute_k, || {
            format!("graph #{i}: chromatic {chi}, dichromatic {k}, brute force {brute_chi}/{brute_k}")
        })?;
    }
    Ok("100 random graphs, n <= 8".into())
}

fn ac5() -> Outcome {
    let all = posets_up_to(5);
    for q in &all {
        let m = order_mat(q);
        let (pairs, adj) = pair_digraph(&m, false);
        let comparable: Vec<usize> = (0..pairs.len()).filter(|&v| m[pairs[v].0][pairs[v].1]).collect();
        ensure(acyclic(&adj, &comparable), || format!("{:?}: A_P minus B_P has a cycle", q.off_diagonal_pairs()))?;
        let ka = dichromatic_number(&build_ap(q, false).0, &lim()).map_err(|e| e.to_string())?.k;
        let kb = dichromatic_number(&build_ap(q, true).0, &lim()).map_err(|e| e.to_string())?.k;
        ensure(ka <= kb + 1, || format!("{:?}: dicr(A_P)={ka}, dicr(B_P)={kb}", q.off_diagonal_pairs()))?;
    }
    Ok(format!("{} posets, n <= 5", all.len()))
}

fn ac6() -> Outcome {
    let mut rng = SplitMix64::new(6);
    let (mut extended, mut cyclic) = (0, 0);
    for i in 0..500 {
        let n = rng.range_inclusive(1, 7);
        let q = gen::random_quasi_order(n, 0.1 + 0.4 * rng.next_f64(), &mut rng);
        let m = order_mat(&q);
        let (pairs, adj) = pair_digraph(&m, false);
        let prefilter = i % 2 == 0;
        let density = rng.next_f64();
        let mut chosen: Vec<usize> = Vec::new();
        for v in 0..pairs.len() {
            if rng.bernoulli(density) {
                chosen.push(v);
                if prefilter && !acyclic(&adj, &chosen) {
                    chosen.pop();
                }
            }
        }
        let x: Vec<(usize, usize)> = chosen.iter().map(|&v| pairs[v]).collect();
        let x_acyclic = acyclic(&adj, &chosen);
        match closure_extend(&q, &x) {
            Ok(ext) => {
                extended += 1;
                let e = order_mat(&ext);
                let mut union = m.clone();
                for &(a, b) in &x {
                    union[a][b] = true;
                }
                ensure(x_acyclic, || format!("instance {i}: closure succeeded on a cyclic X"))?;
                ensure(is_extension(&m, &e) && e == closure(&union), || format!("instance {i}: bad extension"))?;
                for &(a, b) in x.iter().filter(|&&(a, b)| !m[a][b]) {
                    let path = witness_path(&q, &x, a, b).map_err(|e| e.to_string())?;
                    let own = !path.is_empty()
                        && path.iter().all(|p| x.contains(p))
                        && path.windows(2).all(|w| m[w[0].1][w[1].0])
                        && m[a][path[0].0]
                        && m[path[path.len() - 1].1][b];
                    ensure(own && is_witness_path(&q, &x, a, b, &path), || {
                        format!("instance {i}: witness path for ({a},{b}) fails")
                    })?;
                }
            }
            Err(Error::CycleInX(cycle)) => {
                cyclic += 1;
                ensure(!prefilter && !x_acyclic, || format!("instance {i}: error on an acyclic X"))?;
                let k = cycle.len();
                let ok = k >= 2
                    && cycle.iter().all(|p| x.contains(p))
                    && (0..k).all(|j| m[cycle[j].1][cycle[(j + 1) % k].0]);
                ensure(ok, || format!("instance {i}: reported cycle {cycle:?} is not an R_P-cycle in X"))?;
            }
            Err(e) => return Err(format!("instance {i}: unexpected error {e}")),
        }
    }
    Ok(format!("500 instances: {extended} extensions, {cyclic} cycles"))
}

fn ac7() -> Outcome {
    let all = posets_up_to(5);
    for q in &all {
        let name = || format!("{:?}", q.off_diagonal_pairs());
        let m = order_mat(q);
        let (_, adj) = pair_digraph(&m, false);
        let r = dichromatic_number(&build_ap(q, false).0, &lim()).map_err(|e| e.to_string())?;
        let fam = cover_to_extensions(q, &r.cover).map_err(|e| e.to_string())?;
        let exts: Vec<Mat> = fam.exts.iter().map(order_mat).collect();
        ensure(fam.len() == r.k && exts.iter().all(|e| is_extension(&m, e)) && decides(&m, &exts), || {
            format!("{}: family from cover is invalid", name())
        })?;
        let back = extensions_to_cover(&fam).map_err(|e| e.to_string())?;
        ensure(back.len() == r.k && back.classes.iter().all(|c| acyclic(&adj, c)), || {
            format!("{}: cover from family is invalid", name())
        })?;
        let covered = (0..adj.len()).all(|v| back.classes.iter().any(|c| c.contains(&v)));
        ensure(covered, || format!("{}: cover from family misses a vertex", name()))?;
        for e in &fam.exts {
            let x = x_of_extension(q, e).map_err(|e| e.to_string())?;
            let again = closure_extend(q, &x).map_err(|e| e.to_string())?;
            ensure(again == *e, || format!("{}: closure of X(ext) differs from ext", name()))?;
        }
    }
    Ok(format!("{} posets, n <= 5", all.len()))
}

fn is_minimal_cycle(adj: &Mat, c: &[usize]) -> bool {
    let k = c.len();
    k >= 2 && (0..k).all(|i| (0..k).all(|j| adj[c[i]][c[j]] == (j == (i + 1) % k)))
}

fn ac8() -> Outcome {
    let mut sigmas: Vec<Vec<usize>> = vec![vec![]];
    let mut level: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..3 {
        level = level.iter().flat_map(|s| (2..=4).map(move |e| [s.clone(), vec![e]].concat())).collect();
        sigmas.extend(level.iter().cloned());
    }
    for s in &sigmas {
        let sigma = SigmaSeq::new(s.clone()).map_err(|e| e.to_string())?;
        let k = build_k(&DenseSelector, &sigma, &lim()).map_err(|e| e.to_string())?;
        let adj = digraph_mat(&k.graph);
        for (lvl, &count) in k.level_edges.iter().enumerate() {
            let expected = s[lvl] * s[lvl + 1..].iter().product::<usize>();
            ensure(count == expected, || format!("σ={s:?} level {lvl}: {count} edges, formula {expected}"))?;
        }
        let total: usize = k.level_edges.iter().sum();
        ensure(total == k.graph.edge_count(), || format!("σ={s:?}: level counts do not add up"))?;
        for c in canonical_cycles(&DenseSelector, &sigma, &lim()).map_err(|e| e.to_string())? {
            ensure(is_minimal_cycle(&adj, c.verts()), || format!("σ={s:?}: {:?} is not a minimal cycle", c.verts()))?;
        }
        let n = adj.len();
        if !s.is_empty() && s.iter().all(|&e| e == 2) {
            ensure((0..n).all(|i| (0..n).all(|j| adj[i][j] == adj[j][i])), || format!("σ={s:?}: not symmetric"))?;
        }
        if !s.is_empty() && s.iter().all(|&e| e > 2) {
            ensure((0..n).all(|i| (0..n).all(|j| !(adj[i][j] && adj[j][i]))), || {
                format!("σ={s:?}: has a bidirected edge")
            })?;
        }
    }
    let monotone = [
        (vec![2, 2, 2], true),
        (vec![3, 3], true),
        (vec![4, 4, 4, 4], true),
        (vec![2, 3], true),
        (vec![3, 2], false),
    ];
    for (f, expected) in monotone {
        let got = check_monotone(&DenseSelector, &SigmaSeq::new(f.clone()).unwrap()).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("monotone {f:?}: got {got}, expected {expected}"))?;
    }
    Ok(format!("{} sequences, 5 monotonicity cases", sigmas.len()))
}

fn ac9() -> Outcome {
    let mut rng = SplitMix64::new(9);
    for i in 0..100 {
        let n = rng.range_inclusive(1, 6);
        let g = gen::random_digraph(n, rng.next_f64(), &mut rng);
        let pg = build_pg(&g);
        // Independent construction of the order on 2n ids.
        let ga = digraph_mat(&g);
        let expected: Mat =
            (0..2 * n).map(|a| (0..2 * n).map(|b| a == b || (a < n && b >= n && ga[a][b - n])).collect()).collect();
        ensure(order_mat(&pg.order) == expected, || format!("digraph #{i}: P(G) differs"))?;
        let (pairs, adj) = pair_digraph(&expected, false);
        let (ap, map) = build_ap(&pg.order, false);
        let w = pg.witness(&map);
        let img: Vec<usize> = (0..n).map(|x| pairs.iter().position(|&p| p == (n + x, x)).unwrap()).collect();
        ensure(w.map == img, || format!("digraph #{i}: embedding differs"))?;
        ensure((0..n).all(|u| (0..n).all(|v| ga[u][v] == adj[img[u]][img[v]])), || {
            format!("digraph #{i}: embedding does not preserve and reflect edges")
        })?;
        let kg = dichromatic_number(&g, &lim()).map_err(|e| e.to_string())?.k;
        let ka = dichromatic_number(&ap, &lim()).map_err(|e| e.to_string())?.k;
        ensure(kg <= ka, || format!("digraph #{i}: dicr(G)={kg} > dicr(A_P(G))={ka}"))?;
    }
    let mut homs = 0;
    for i in 0..200 {
        let g = gen::random_digraph(rng.range_inclusive(1, 6), 0.2 + 0.4 * rng.next_f64(), &mut rng);
        let h = gen::random_digraph(rng.range_inclusive(1, 5), 0.3 + 0.6 * rng.next_f64(), &mut rng);
        if let HomOutcome::Found(w) = find_homomorphism(&g, &h, false, &lim()).map_err(|e| e.to_string())? {
            homs += 1;
            let (ga, ha) = (digraph_mat(&g), digraph_mat(&h));
            let edge_ok = (0..g.n()).all(|u| (0..g.n()).all(|v| !ga[u][v] || ha[w.map[u]][w.map[v]]));
            let kg = dichromatic_number(&g, &lim()).map_err(|e| e.to_string())?.k;
            let kh = dichromatic_number(&h, &lim()).map_err(|e| e.to_string())?.k;
            ensure(edge_ok && kg <= kh, || format!("pair #{i}: dicr(G)={kg}, dicr(H)={kh}"))?;
        }
    }
    Ok(format!("100 embeddings, {homs} homomorphic pairs"))
}

fn ac10() -> Outcome {
    let all = posets_up_to(5);
    for q in &all {
        let m = order_mat(q);
        let sets = prefix_separators(q.n());
        let fam = match separators_to_family(q, &sets).map_err(|e| e.to_string())? {
            SeparatorOutcome::Family(f) => f,
            SeparatorOutcome::Incomplete { x, y } => {
                return Err(format!("{:?}: incomplete at ({x},{y})", q.off_diagonal_pairs()))
            }
        };
        let exts: Vec<Mat> = fam.exts.iter().map(order_mat).collect();
        ensure(exts.iter().all(|e| is_extension(&m, e)) && decides(&m, &exts), || {
            format!("{:?}: separator family is invalid", q.off_diagonal_pairs())
        })?;
        let d = brute_dimension(&m);
        ensure(fam.len() >= d, || format!("{:?}: bound {} below dimension {d}", q.off_diagonal_pairs(), fam.len()))?;
    }
    Ok(format!("{} posets, n <= 5", all.len()))
}

/// Minimal cycles of `adj`, brute force over vertex sequences starting at
/// their least vertex.
fn all_minimal_cycles(adj: &Mat) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    fn rec(adj: &Mat, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() >= 2 && is_minimal_cycle(adj, path) {
            out.push(path.clone());
        }
        for w in path[0] + 1..adj.len() {
            if !path.contains(&w) && adj[*path.last().unwrap()][w] {
                path.push(w);
                rec(adj, path, out);
                path.pop();
            }
        }
    }
    for s in 0..n {
        rec(adj, &mut vec![s], &mut out);
    }
    out
}

fn is_minimal_hom(g: &Mat, h: &Mat, map: &[usize]) -> bool {
    let n = g.len();
    (0..n).all(|u| (0..n).all(|v| !g[u][v] || h[map[u]][map[v]]))
        && all_minimal_cycles(g).iter().all(|c| {
            let k = c.len();
            (0..k).all(|i| (0..k).all(|j| i == j || j == (i + 1) % k || !h[map[c[i]]][map[c[j]]]))
        })
}

fn grow(d: &Digraph, extra: usize, rng: &mut SplitMix64) -> Digraph {
    let n = d.n() + extra;
    let mut edges = d.edges();
    for u in 0..n {
        for v in d.n().max(u + 1)..n {
            if rng.bernoulli(0.4) {
                edges.push((u, v));
            }
            if rng.bernoulli(0.4) {
                edges.push((v, u));
            }
        }
    }
    Digraph::new(n, &edges).unwrap()
}

fn ac11() -> Outcome {
    let c6 = Digraph::directed_cycle(6);
    let c3 = Digraph::directed_cycle(3);
    let (g, h) = (digraph_mat(&c6), digraph_mat(&c3));
    let (mut plain, mut minimal) = (0, 0);
    for code in 0..729usize {
        let map: Vec<usize> = (0..6).map(|i| code / 3usize.pow(i) % 3).collect();
        if (0..6).all(|u| (0..6).all(|v| !g[u][v] || h[map[u]][map[v]])) {
            plain += 1;
            if is_minimal_hom(&g, &h, &map) {
                minimal += 1;
            }
        }
    }
    ensure(plain > 0 && minimal == 0, || format!("C6->C3: {plain} homomorphisms, {minimal} minimal"))?;
    let found = find_homomorphism(&c6, &c3, false, &lim()).map_err(|e| e.to_string())?;
    let found_min = find_homomorphism(&c6, &c3, true, &lim()).map_err(|e| e.to_string())?;
    ensure(matches!(found, HomOutcome::Found(_)) && found_min == HomOutcome::NotFound, || {
        format!("C6->C3 search: plain {found:?}, minimal {found_min:?}")
    })?;

    let mut rng = SplitMix64::new(11);
    let mut accepted = 0;
    while accepted < 50 {
        let g = gen::random_digraph(rng.range_inclusive(2, 5), 0.3 + 0.3 * rng.next_f64(), &mut rng);
        let h = grow(&g, rng.range_inclusive(0, 2), &mut rng);
        let k = grow(&h, rng.range_inclusive(0, 2), &mut rng);
        let (HomOutcome::Found(w1), HomOutcome::Found(w2)) = (
            find_homomorphism(&g, &h, true, &lim()).map_err(|e| e.to_string())?,
            find_homomorphism(&h, &k, true, &lim()).map_err(|e| e.to_string())?,
        ) else {
            return Err("an induced subdigraph admits no minimal homomorphism".into());
        };
        accepted += 1;
        let (gm, hm, km) = (digraph_mat(&g), digraph_mat(&h), digraph_mat(&k));
        ensure(is_minimal_hom(&gm, &hm, &w1.map) && is_minimal_hom(&hm, &km, &w2.map), || {
            format!("witness #{accepted}: search returned a non-minimal map")
        })?;
        let comp: HomWitness = w1.compose(&w2);
        ensure(is_minimal_hom(&gm, &km, &comp.map), || format!("witness #{accepted}: composition not minimal"))?;
        ensure(verify_homomorphism(&g, &k, &comp, 1_000_000).is_ok(), || {
            format!("witness #{accepted}: library rejects the composition")
        })?;
        for c in all_minimal_cycles(&gm) {
            let image: Vec<usize> = c.iter().map(|&v| w1.map[v]).collect();
            ensure(is_minimal_cycle(&hm, &image) && Cycle::new(image.clone()).is_minimal(&h), || {
                format!("witness #{accepted}: image of {c:?} is not a minimal cycle")
            })?;
        }
    }
    Ok(format!("{plain}/729 maps are homomorphisms, none minimal; 50 minimal witnesses"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1 odim = dicr on all posets n <= 5", ac1),
        ("AC2 dimension landmarks", ac2),
        ("AC3 dichromatic landmarks", ac3),
        ("AC4 chromatic = dichromatic on graphs", ac4),
        ("AC5 A_P minus B_P acyclic, dicr(A_P) <= 1 + dicr(B_P)", ac5),
        ("AC6 closure extends or yields a cycle", ac6),
        ("AC7 witness round trips", ac7),
        ("AC8 K(E,sigma), canonical cycles, monotonicity", ac8),
        ("AC9 P(G) embedding and homomorphism transfer", ac9),
        ("AC10 prefix separators give valid families", ac10),
        ("AC11 minimal homomorphisms", ac11),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name} ({detail}; {secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why} ({secs:.2}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
