//! Certificates: a claim, its instance, a witness, and the checker's verdict.
//!
//! `verified` is always produced by [`recheck`], which reads only the
//! serialized instance and witness.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::check::{self, Rel};
use crate::io::Instance;

/// Node cap for the checkers' exhaustive lower-bound searches.
pub const CHECK_CAP: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub index: usize,
    pub instance: Value,
    pub witness: Value,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub config: Value,
}

impl Certificate {
    pub fn new<I: Serialize, W: Serialize>(claim: &str, index: usize, instance: &I, witness: &W) -> Self {
        let mut c = Certificate {
            claim: claim.to_string(),
            index,
            instance: serde_json::to_value(instance).expect("plain data serializes"),
            witness: serde_json::to_value(witness).expect("plain data serializes"),
            verified: false,
            seed: None,
            config: Value::Null,
        };
        c.verified = recheck(&c);
        c
    }

    pub fn with_context(mut self, seed: Option<u64>, config: &Value) -> Self {
        self.seed = seed;
        self.config = config.clone();
        self
    }
}

// Instance and witness payloads, one pair per claim.

/// Order dimension equals the dichromatic number of the pair digraph.
pub const ODIM_EQ_DICR: &str = "odim_eq_dicr";
/// Order dimension equals a known value.
pub const DIMENSION: &str = "dimension";
/// Dichromatic number, optionally against a known value.
pub const DICR: &str = "dicr";
pub const GRAPH_COLLAPSE: &str = "graph_collapse";
pub const H1PLUS: &str = "h1plus";
pub const CYCLEFREE_EXTENDS: &str = "cyclefree_extends";
pub const ROUND_TRIP: &str = "round_trip";
pub const G0_OBJECTS: &str = "g0_objects";
pub const MONOTONE: &str = "monotone";
pub const XINAPG: &str = "xinapg";
pub const HOM_DICR: &str = "hom_dicr";
pub const SEPARATORS: &str = "separators";
pub const MINHOM: &str = "minhom";
pub const MINHOM_COMPOSE: &str = "minhom_compose";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrderInstance {
    pub order: Instance,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DimWitness {
    pub d: usize,
    /// Extension family of size `d`, as off-diagonal pair lists.
    pub family: Vec<Vec<[usize; 2]>>,
    /// Acyclic cover of the pair digraph with `d` classes.
    pub cover: Vec<Vec<usize>>,
    /// Realizer of `d` linear extensions, as element sequences.
    pub realizer: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DigraphInstance {
    pub digraph: Instance,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DicrWitness {
    pub k: usize,
    pub cover: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CollapseWitness {
    pub chi: usize,
    pub colouring: Vec<usize>,
    pub k: usize,
    pub cover: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct H1PlusWitness {
    pub k_ap: usize,
    pub cover_ap: Vec<Vec<usize>>,
    pub k_bp: usize,
    /// Classes over `B_P` vertex indices.
    pub cover_bp: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClosureInstance {
    pub order: Instance,
    pub x: Vec<[usize; 2]>,
    /// `x` was built to be acyclic in `A_P`, so the closure must succeed.
    pub prefiltered_acyclic: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClosureWitness {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub extension: Option<Vec<[usize; 2]>>,
    /// `(p, r, path)` for every pair `(p, r)` of `x` outside the base order.
    #[serde(default)]
    pub paths: Vec<(usize, usize, Vec<[usize; 2]>)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cycle: Option<Vec<[usize; 2]>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RoundTripWitness {
    pub cover: Vec<Vec<usize>>,
    pub family: Vec<Vec<[usize; 2]>>,
    pub cover_back: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SigmaInstance {
    pub sigma: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct G0Witness {
    /// Selector value on every prefix of σ, shortest first.
    pub selector: Vec<Vec<usize>>,
    pub verts: Vec<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
    pub level_edges: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
    pub dicr: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonotoneInstance {
    pub sigma: Vec<usize>,
    pub expected: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonotoneWitness {
    pub selector: Vec<Vec<usize>>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct XinapgWitness {
    pub pg: Instance,
    pub map: Vec<usize>,
    pub k_g: usize,
    pub cover_g: Vec<Vec<usize>>,
    pub k_apg: usize,
    pub cover_apg: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomInstance {
    pub g: Instance,
    pub h: Instance,
    pub minimal: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub expected: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomDicrWitness {
    pub map: Vec<usize>,
    pub k_g: usize,
    pub cover_g: Vec<Vec<usize>>,
    pub k_h: usize,
    pub cover_h: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomWitnessFile {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub map: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComposeInstance {
    pub g: Instance,
    pub h: Instance,
    pub k: Instance,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComposeWitness {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeparatorInstance {
    pub order: Instance,
    pub sets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeparatorWitness {
    pub family: Vec<Vec<[usize; 2]>>,
    /// Optimal dimension with its realizer, for the upper-bound comparison.
    pub d: usize,
    pub realizer: Vec<Vec<usize>>,
}

/// Re-derives the verdict of a certificate from its instance and witness.
pub fn recheck(c: &Certificate) -> bool {
    let run = || -> Option<bool> {
        Some(match c.claim.as_str() {
            ODIM_EQ_DICR | DIMENSION => check_dimension(parse(&c.instance)?, parse(&c.witness)?)?,
            DICR => check_dicr(parse(&c.instance)?, parse(&c.witness)?)?,
            GRAPH_COLLAPSE => check_collapse(parse(&c.instance)?, parse(&c.witness)?)?,
            H1PLUS => check_h1plus(parse(&c.instance)?, parse(&c.witness)?)?,
            CYCLEFREE_EXTENDS => check_closure(parse(&c.instance)?, parse(&c.witness)?)?,
            ROUND_TRIP => check_round_trip(parse(&c.instance)?, parse(&c.witness)?)?,
            G0_OBJECTS => check_g0(parse(&c.instance)?, parse(&c.witness)?)?,
            MONOTONE => check_monotone(parse(&c.instance)?, parse(&c.witness)?)?,
            XINAPG => check_xinapg(parse(&c.instance)?, parse(&c.witness)?)?,
            HOM_DICR => check_hom_dicr(parse(&c.instance)?, parse(&c.witness)?)?,
            MINHOM => check_minhom(parse(&c.instance)?, parse(&c.witness)?)?,
            MINHOM_COMPOSE => check_compose(parse(&c.instance)?, parse(&c.witness)?)?,
            SEPARATORS => check_separators(parse(&c.instance)?, parse(&c.witness)?)?,
            _ => return None,
        })
    };
    run().unwrap_or(false)
}

fn parse<T: DeserializeOwned>(v: &Value) -> Option<T> {
    serde_json::from_value(v.clone()).ok()
}

/// Order instances as reflexive (and, when flagged, closed) relations.
fn order_rel(inst: &Instance) -> Option<Rel> {
    match inst {
        Instance::Quasi { n, pairs, closure } => {
            let r = Rel::from_pairs(*n, pairs, true)?;
            let r = if *closure { r.closed() } else { r };
            check::is_quasi(&r).then_some(r)
        }
        Instance::Digraph { .. } => None,
    }
}

fn digraph_rel(inst: &Instance) -> Option<Rel> {
    match inst {
        Instance::Digraph { n, edges } => {
            let r = Rel::from_pairs(*n, edges, false)?;
            (0..*n).all(|i| !r.get(i, i)).then_some(r)
        }
        Instance::Quasi { .. } => None,
    }
}

fn ext_rels(n: usize, family: &[Vec<[usize; 2]>]) -> Option<Vec<Rel>> {
    family.iter().map(|pairs| Rel::from_pairs(n, pairs, true)).collect()
}

fn realizer_rels(base: &Rel, realizer: &[Vec<usize>]) -> Option<Vec<Rel>> {
    realizer
        .iter()
        .map(|seq| {
            let mut s = seq.clone();
            s.sort_unstable();
            (s == (0..base.n).collect::<Vec<_>>()).then(|| check::sequence_order(base, seq))
        })
        .collect()
}

fn check_dimension(inst: OrderInstance, w: DimWitness) -> Option<bool> {
    let base = order_rel(&inst.order)?;
    let n = base.n;
    let fam = ext_rels(n, &w.family)?;
    let ap = check::pair_graph(&base, false);
    let real = realizer_rels(&base, &w.realizer)?;
    let trivial = check::class_count(&base) <= 1;
    let sizes_ok = if trivial {
        w.d == 0 && fam.is_empty() && w.realizer.is_empty()
    } else {
        fam.len() == w.d && w.realizer.len() == w.d && w.cover.iter().filter(|c| !c.is_empty()).count() <= w.d
    };
    let lower = w.d == 0 || check::realizable_with(&base, w.d - 1, CHECK_CAP) == Some(false);
    Some(
        sizes_ok
            && lower
            && check::family_valid(&base, &fam)
            && check::family_valid(&base, &real)
            && check::cover_valid(&ap.adj, &w.cover)
            && inst.expected.is_none_or(|e| e == w.d),
    )
}

fn check_dicr(inst: DigraphInstance, w: DicrWitness) -> Option<bool> {
    let d = digraph_rel(&inst.digraph)?;
    Some(check::optimal_cover(&d, &w.cover, w.k, CHECK_CAP) && inst.expected.is_none_or(|e| e == w.k))
}

fn check_collapse(inst: DigraphInstance, w: CollapseWitness) -> Option<bool> {
    let g = digraph_rel(&inst.digraph)?;
    // On a symmetric digraph acyclic sets are exactly independent sets, so one
    // lower-bound search serves both numbers.
    Some(
        check::symmetric(&g)
            && check::proper_colouring(&g, &w.colouring, w.chi)
            && check::optimal_cover(&g, &w.cover, w.k, CHECK_CAP)
            && w.chi == w.k,
    )
}

fn check_h1plus(inst: OrderInstance, w: H1PlusWitness) -> Option<bool> {
    let base = order_rel(&inst.order)?;
    let ap = check::pair_graph(&base, false);
    let bp = check::pair_graph(&base, true);
    let comparable: Vec<usize> = (0..ap.pairs.len())
        .filter(|&v| {
            let (x, y) = ap.pairs[v];
            base.get(x, y)
        })
        .collect();
    // Lift the B_P cover to A_P and add the comparable pairs as one more class.
    let mut lifted: Vec<Vec<usize>> = Vec::new();
    for class in &w.cover_bp {
        let mut c = Vec::new();
        for &v in class {
            c.push(check::pair_index(&ap, *bp.pairs.get(v)?)?);
        }
        lifted.push(c);
    }
    lifted.push(comparable.clone());
    Some(
        check::acyclic(&ap.adj, &comparable)
            && check::optimal_cover(&bp.adj, &w.cover_bp, w.k_bp, CHECK_CAP)
            && check::cover_valid(&ap.adj, &lifted)
            && check::cover_valid(&ap.adj, &w.cover_ap)
            && w.cover_ap.len() == w.k_ap
            && w.k_ap <= w.k_bp + 1,
    )
}

fn is_rp_cycle(base: &Rel, x: &[[usize; 2]], cycle: &[[usize; 2]]) -> bool {
    let k = cycle.len();
    k >= 2
        && cycle.iter().all(|p| x.contains(p) && !base.get(p[1], p[0]))
        && (0..k).all(|i| base.get(cycle[i][1], cycle[(i + 1) % k][0]))
}

fn check_closure(inst: ClosureInstance, w: ClosureWitness) -> Option<bool> {
    let base = order_rel(&inst.order)?;
    let n = base.n;
    let ap = check::pair_graph(&base, false);
    let mut verts = Vec::new();
    for p in &inst.x {
        verts.push(check::pair_index(&ap, (p[0], p[1]))?);
    }
    let x_acyclic = check::acyclic(&ap.adj, &verts);
    match (w.extension, w.cycle) {
        (Some(ext), None) => {
            let ext = Rel::from_pairs(n, &ext, true)?;
            let mut union = base.clone();
            for p in &inst.x {
                union.set(p[0], p[1]);
            }
            let paths_ok = inst.x.iter().filter(|p| !base.get(p[0], p[1])).all(|p| {
                w.paths.iter().any(|(a, b, path)| {
                    (*a, *b) == (p[0], p[1])
                        && !path.is_empty()
                        && path.iter().all(|q| inst.x.contains(q))
                        && path.windows(2).all(|s| base.get(s[0][1], s[1][0]))
                        && base.get(*a, path[0][0])
                        && base.get(path[path.len() - 1][1], *b)
                })
            });
            Some(x_acyclic && ext == union.closed() && check::extends(&base, &ext) && paths_ok)
        }
        (None, Some(cycle)) => Some(!inst.prefiltered_acyclic && !x_acyclic && is_rp_cycle(&base, &inst.x, &cycle)),
        _ => Some(false),
    }
}

fn check_round_trip(inst: OrderInstance, w: RoundTripWitness) -> Option<bool> {
    let base = order_rel(&inst.order)?;
    let n = base.n;
    let ap = check::pair_graph(&base, false);
    let fam = ext_rels(n, &w.family)?;
    let mut each_closure = true;
    for (class, ext) in w.cover.iter().zip(&fam) {
        let mut union = base.clone();
        for &v in class {
            let (a, b) = *ap.pairs.get(v)?;
            union.set(a, b);
        }
        each_closure &= union.closed() == *ext;
        // X(ext, base) closes back to ext.
        let mut from_x = base.clone();
        for a in 0..n {
            for b in 0..n {
                if !base.get(b, a) && ext.get(a, b) {
                    from_x.set(a, b);
                }
            }
        }
        each_closure &= from_x.closed() == *ext;
    }
    Some(
        check::cover_valid(&ap.adj, &w.cover)
            && check::cover_valid(&ap.adj, &w.cover_back)
            && fam.len() == w.cover.len()
            && w.cover_back.len() == w.cover.len()
            && check::family_valid(&base, &fam)
            && each_closure,
    )
}

/// The `l`-th finite sequence by weight `2|s| + Σ s(i)`, then shortlex.
fn nth_seq(l: usize) -> Vec<usize> {
    let mut count = 0;
    for w in 0.. {
        let mut class: Vec<Vec<usize>> = Vec::new();
        compositions(w, &mut Vec::new(), &mut class);
        class.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        if l < count + class.len() {
            return class[l - count].clone();
        }
        count += class.len();
    }
    unreachable!()
}

/// Sequences of weight exactly `w`.
fn compositions(w: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if w == 0 {
        out.push(prefix.clone());
        return;
    }
    if w < 2 {
        return;
    }
    for v in 0..=w - 2 {
        prefix.push(v);
        compositions(w - 2 - v, prefix, out);
        prefix.pop();
    }
}

fn dense_value(sigma: &[usize]) -> Vec<usize> {
    let s = nth_seq(sigma.len());
    let mut out = vec![0; sigma.len()];
    if s.len() <= sigma.len() && s.iter().zip(sigma).all(|(a, b)| a < b) {
        out[..s.len()].copy_from_slice(&s);
    }
    out
}

fn check_g0(inst: SigmaInstance, w: G0Witness) -> Option<bool> {
    let sigma = &inst.sigma;
    let l = sigma.len();
    if sigma.iter().any(|&s| s < 2) {
        return Some(false);
    }
    let sel: Vec<Vec<usize>> = (0..=l).map(|k| dense_value(&sigma[..k])).collect();
    let mut verts: Vec<Vec<usize>> = vec![Vec::new()];
    for &s in sigma {
        verts = verts.into_iter().flat_map(|v| (0..s).map(move |i| [v.clone(), vec![i]].concat())).collect();
    }
    let m = verts.len();
    let mut adj = Rel::new(m);
    let mut levels = vec![0usize; l];
    for (a, s) in verts.iter().enumerate() {
        for (b, t) in verts.iter().enumerate() {
            for k in 0..l {
                if s[..k] == sel[k][..] && t[..k] == sel[k][..] && s[k + 1..] == t[k + 1..] && t[k] == (s[k] + 1) % sigma[k]
                {
                    adj.set(a, b);
                    levels[k] += 1;
                }
            }
        }
    }
    let edges: Vec<[usize; 2]> =
        (0..m).flat_map(|a| (0..m).map(move |b| [a, b])).filter(|e| adj.get(e[0], e[1])).collect();
    let formula_ok = (0..l).all(|k| levels[k] == sigma[k] * sigma[k + 1..].iter().product::<usize>());
    let expected_cycles: usize =
        (0..l).map(|k| if sigma[k] >= 2 { sigma[k + 1..].iter().product::<usize>() } else { 0 }).sum();
    let cycles_ok = w.cycles.len() == expected_cycles && w.cycles.iter().all(|c| check::is_minimal_cycle(&adj, c));
    let symmetric_ok = !sigma.iter().all(|&s| s == 2) || check::symmetric(&adj);
    let oneway_ok =
        !sigma.iter().all(|&s| s > 2) || (0..m).all(|a| (0..m).all(|b| !(adj.get(a, b) && adj.get(b, a))));
    let dicr_ok = l == 0 || (w.dicr >= 2 && check::colourable(&adj, 1, CHECK_CAP) == Some(false));
    Some(
        w.selector == sel
            && w.verts == verts
            && w.edges == edges
            && w.level_edges == levels
            && formula_ok
            && cycles_ok
            && symmetric_ok
            && oneway_ok
            && dicr_ok,
    )
}

fn check_monotone(inst: MonotoneInstance, w: MonotoneWitness) -> Option<bool> {
    let f = &inst.sigma;
    let vals: Vec<Vec<usize>> = (0..=f.len()).map(|k| dense_value(&f[..k])).collect();
    let holds = (0..f.len()).all(|m| (0..f.len()).all(|n| !vals[n].starts_with(&vals[m]) || f[m] <= f[n]));
    Some(w.selector == vals && w.holds == holds && holds == inst.expected)
}

fn pg_rel(g: &Rel) -> Rel {
    let n = g.n;
    let mut r = Rel::new(2 * n);
    for i in 0..2 * n {
        r.set(i, i);
    }
    for x in 0..n {
        for y in 0..n {
            if g.get(x, y) {
                r.set(x, n + y);
            }
        }
    }
    r
}

/// Pull a cover of `h` back along `map` to a cover of `g`.
fn pull_back(map: &[usize], cover_h: &[Vec<usize>]) -> Vec<Vec<usize>> {
    cover_h.iter().map(|c| (0..map.len()).filter(|&v| c.contains(&map[v])).collect()).collect()
}

fn check_xinapg(inst: DigraphInstance, w: XinapgWitness) -> Option<bool> {
    let g = digraph_rel(&inst.digraph)?;
    let pg = order_rel(&w.pg)?;
    let ap = check::pair_graph(&pg, false);
    let reflects = w.map.len() == g.n
        && w.map.iter().all(|&v| v < ap.pairs.len())
        && (0..g.n).all(|u| (0..g.n).all(|v| g.get(u, v) == ap.adj.get(w.map[u], w.map[v])));
    let pulled = pull_back(&w.map, &w.cover_apg);
    Some(
        pg == pg_rel(&g)
            && reflects
            && check::cover_valid(&ap.adj, &w.cover_apg)
            && w.cover_apg.len() == w.k_apg
            && check::cover_valid(&g, &pulled)
            && check::optimal_cover(&g, &w.cover_g, w.k_g, CHECK_CAP)
            && w.k_g <= w.k_apg,
    )
}

fn check_hom_dicr(inst: HomInstance, w: HomDicrWitness) -> Option<bool> {
    let g = digraph_rel(&inst.g)?;
    let h = digraph_rel(&inst.h)?;
    let pulled = pull_back(&w.map, &w.cover_h);
    Some(
        check::is_hom(&g, &h, &w.map)
            && check::cover_valid(&h, &w.cover_h)
            && w.cover_h.len() == w.k_h
            && check::cover_valid(&g, &pulled)
            && check::optimal_cover(&g, &w.cover_g, w.k_g, CHECK_CAP)
            && w.k_g <= w.k_h,
    )
}

fn check_minhom(inst: HomInstance, w: HomWitnessFile) -> Option<bool> {
    let g = digraph_rel(&inst.g)?;
    let h = digraph_rel(&inst.h)?;
    let ok = match (&w.map, w.found) {
        (Some(map), true) => {
            if inst.minimal {
                check::is_minimal_hom(&g, &h, map)
            } else {
                check::is_hom(&g, &h, map)
            }
        }
        (None, false) => !check::any_hom(&g, &h, inst.minimal, CHECK_CAP)?,
        _ => false,
    };
    Some(ok && inst.expected.is_none_or(|e| e == w.found))
}

fn check_compose(inst: ComposeInstance, w: ComposeWitness) -> Option<bool> {
    let g = digraph_rel(&inst.g)?;
    let h = digraph_rel(&inst.h)?;
    let k = digraph_rel(&inst.k)?;
    if !(check::is_minimal_hom(&g, &h, &w.first) && check::is_minimal_hom(&h, &k, &w.second)) {
        return Some(false);
    }
    let composed: Vec<usize> = w.first.iter().map(|&v| w.second[v]).collect();
    let images_ok = check::minimal_cycles(&g).iter().all(|c| {
        let image: Vec<usize> = c.iter().map(|&v| w.first[v]).collect();
        check::is_minimal_cycle(&h, &image)
    });
    Some(check::is_minimal_hom(&g, &k, &composed) && images_ok)
}

fn check_separators(inst: SeparatorInstance, w: SeparatorWitness) -> Option<bool> {
    let base = order_rel(&inst.order)?;
    let n = base.n;
    let fam = ext_rels(n, &w.family)?;
    let real = realizer_rels(&base, &w.realizer)?;
    let lower = w.d == 0 || check::realizable_with(&base, w.d - 1, CHECK_CAP) == Some(false);
    let d_ok = if check::class_count(&base) <= 1 { w.d == 0 } else { real.len() == w.d && lower };
    Some(
        fam.len() == inst.sets.len()
            && check::family_valid(&base, &fam)
            && check::family_valid(&base, &real)
            && d_ok
            && fam.len() >= w.d,
    )
}
