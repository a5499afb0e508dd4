//! Verification campaigns: sweep exhaustive or seeded instances, emit one
//! certificate per instance, stop at the first one that does not verify.

use dichro_core::g0::{build_k, canonical_cycles, dense_selector, DenseSelector, SigmaSeq};
use dichro_core::gen::{self, SplitMix64};
use dichro_core::reduction::{
    is_witness_path, prefix_separators, separators_to_family, witness_path, x_of_extension, SeparatorOutcome,
};
use dichro_core::solvers::{realizer_oracle, RealizerOutcome};
use dichro_core::{
    build_ap, build_pg, chromatic_number, closure_extend, cover_to_extensions, dichromatic_number,
    extensions_to_cover, find_homomorphism, order_dimension, Digraph, DimMethod, Error, HomOutcome, Limits,
    QuasiOrder,
};
use serde_json::{json, Value};

use crate::certificate::*;
use crate::error::CliError;
use crate::io::{arrays, family_file, Instance};

pub const CAMPAIGNS: &[&str] = &[
    "odim-eq-dicr",
    "dim-landmarks",
    "dicr-landmarks",
    "graph-collapse",
    "h1plus",
    "cyclefree-extends",
    "round-trip",
    "g0-objects",
    "xinapg",
    "separators",
    "minhom",
];

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    /// Size bound: poset sweeps cover `0..=n` elements, random instances `1..=n`.
    pub n: usize,
    pub seed: u64,
    pub exhaustive: bool,
    /// Seeded random instances; `None` picks the campaign's default.
    pub count: Option<usize>,
    pub limits: Limits,
}

impl CampaignConfig {
    fn random_count(&self, default: usize) -> usize {
        self.count.unwrap_or(if self.exhaustive { 0 } else { default })
    }

    fn echo(&self, name: &str) -> Value {
        json!({"campaign": name, "n": self.n, "exhaustive": self.exhaustive, "count": self.count})
    }
}

/// Collects certificates, stopping at the first unverified one.
struct Sink<'a> {
    out: Vec<Certificate>,
    emit: &'a mut dyn FnMut(&Certificate),
    config: Value,
}

impl Sink<'_> {
    /// Returns `false` once a certificate has failed.
    fn push(&mut self, cert: Certificate, seed: Option<u64>) -> bool {
        let cert = Certificate { index: self.out.len(), ..cert }.with_context(seed, &self.config);
        (self.emit)(&cert);
        let ok = cert.verified;
        self.out.push(cert);
        ok
    }
}

/// Runs a campaign, passing each certificate to `emit` as it is produced.
pub fn run_campaign(
    name: &str,
    cfg: &CampaignConfig,
    emit: &mut dyn FnMut(&Certificate),
) -> Result<Vec<Certificate>, CliError> {
    let mut sink = Sink { out: Vec::new(), emit, config: cfg.echo(name) };
    match name {
        "odim-eq-dicr" => odim_eq_dicr(cfg, &mut sink)?,
        "dim-landmarks" => dim_landmarks(cfg, &mut sink)?,
        "dicr-landmarks" => dicr_landmarks(cfg, &mut sink)?,
        "graph-collapse" => graph_collapse(cfg, &mut sink)?,
        "h1plus" => h1plus(cfg, &mut sink)?,
        "cyclefree-extends" => cyclefree_extends(cfg, &mut sink)?,
        "round-trip" => round_trip(cfg, &mut sink)?,
        "g0-objects" => g0_objects(cfg, &mut sink)?,
        "xinapg" => xinapg(cfg, &mut sink)?,
        "separators" => separators(cfg, &mut sink)?,
        "minhom" => minhom(cfg, &mut sink)?,
        _ => {
            return Err(CliError::Usage(format!(
                "unknown campaign {name:?}; expected one of {}",
                CAMPAIGNS.join(", ")
            )))
        }
    }
    Ok(sink.out)
}

/// Posets on `0..=n` elements when exhaustive, then seeded random quasi orders.
fn orders(cfg: &CampaignConfig, default_count: usize) -> Result<Vec<(QuasiOrder, Option<u64>)>, CliError> {
    let mut out = Vec::new();
    if cfg.exhaustive {
        for m in 0..=cfg.n {
            out.extend(gen::enumerate_posets(m)?.into_iter().map(|q| (q, None)));
        }
    }
    let mut rng = SplitMix64::new(cfg.seed);
    for _ in 0..cfg.random_count(default_count) {
        let m = rng.range_inclusive(1, cfg.n.max(1));
        let p = 0.15 + 0.5 * rng.next_f64();
        out.push((gen::random_quasi_order(m, p, &mut rng), Some(cfg.seed)));
    }
    Ok(out)
}

fn element_sequences(q: &QuasiOrder, class_seqs: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let quot = q.quotient();
    class_seqs.iter().map(|seq| seq.iter().flat_map(|&c| quot.classes[c].iter().copied()).collect()).collect()
}

fn realizer(q: &QuasiOrder, limits: &Limits) -> Result<(usize, Vec<Vec<usize>>), CliError> {
    match realizer_oracle(q, q.n().max(1), limits)? {
        RealizerOutcome::Dimension { d, linear_extensions } => Ok((d, element_sequences(q, &linear_extensions))),
        RealizerOutcome::Exceeds(_) => unreachable!("dimension never exceeds the element count"),
    }
}

fn dim_witness(q: &QuasiOrder, limits: &Limits) -> Result<DimWitness, CliError> {
    let via = order_dimension(q, DimMethod::ViaDicr, limits)?;
    let by_realizer = order_dimension(q, DimMethod::Realizer, limits)?;
    let (ap, _) = build_ap(q, false);
    let dicr = dichromatic_number(&ap, limits)?;
    let (rd, seqs) = realizer(q, limits)?;
    // Any disagreement between the three numbers surfaces as a size mismatch.
    let d = if via.d == by_realizer.d && via.d == rd && (via.trivial_quotient || via.d == dicr.k) {
        via.d
    } else {
        usize::MAX
    };
    Ok(DimWitness { d, family: family_file(&via.witness).extensions, cover: dicr.cover.classes, realizer: seqs })
}

fn odim_eq_dicr(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    for (q, seed) in orders(cfg, 200)? {
        let w = dim_witness(&q, &cfg.limits)?;
        let inst = OrderInstance { order: Instance::from_order(&q), expected: None };
        if !sink.push(Certificate::new(ODIM_EQ_DICR, 0, &inst, &w), seed) {
            break;
        }
    }
    Ok(())
}

fn landmark_orders() -> Vec<(&'static str, QuasiOrder, usize)> {
    vec![
        ("chain 4", gen::chain(4), 1),
        ("antichain 2", gen::antichain(2), 2),
        ("crown 2", gen::crown(2), 2),
        ("crown 3", gen::crown(3), 3),
        ("boolean 3", gen::boolean_lattice(3), 3),
    ]
}

fn dim_landmarks(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    for (_, q, expected) in landmark_orders() {
        let w = dim_witness(&q, &cfg.limits)?;
        let inst = OrderInstance { order: Instance::from_order(&q), expected: Some(expected) };
        if !sink.push(Certificate::new(DIMENSION, 0, &inst, &w), None) {
            break;
        }
    }
    Ok(())
}

/// Random DAG: edges only from lower to higher id, then relabelled.
fn random_dag(n: usize, p: f64, rng: &mut SplitMix64) -> Digraph {
    let mut perm: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut perm);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.bernoulli(p) {
                edges.push((perm[i], perm[j]));
            }
        }
    }
    Digraph::new(n, &edges).expect("no self-loops")
}

fn dicr_landmarks(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    let mut cases: Vec<(Digraph, usize, Option<u64>)> = Vec::new();
    for n in 2..=7 {
        cases.push((Digraph::directed_cycle(n), 2, None));
    }
    for n in 1..=5 {
        cases.push((Digraph::bidirected_complete(n), n, None));
    }
    let mut rng = SplitMix64::new(cfg.seed);
    for _ in 0..cfg.count.unwrap_or(30) {
        let n = rng.range_inclusive(1, cfg.n.max(1));
        let p = rng.next_f64();
        cases.push((random_dag(n, p, &mut rng), 1, Some(cfg.seed)));
    }
    for (d, expected, seed) in cases {
        let r = dichromatic_number(&d, &cfg.limits)?;
        let inst = DigraphInstance { digraph: Instance::from_digraph(&d), expected: Some(expected) };
        let w = DicrWitness { k: r.k, cover: r.cover.classes };
        if !sink.push(Certificate::new(DICR, 0, &inst, &w), seed) {
            break;
        }
    }
    Ok(())
}

fn graph_collapse(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    let mut rng = SplitMix64::new(cfg.seed);
    for _ in 0..cfg.count.unwrap_or(100) {
        let n = rng.range_inclusive(1, cfg.n.max(1));
        let p = rng.next_f64();
        let g = gen::random_graph(n, p, &mut rng);
        let chi = chromatic_number(&g, &cfg.limits)?;
        let r = dichromatic_number(&g, &cfg.limits)?;
        let inst = DigraphInstance { digraph: Instance::from_digraph(&g), expected: None };
        let w = CollapseWitness { chi: chi.k, colouring: chi.colouring, k: r.k, cover: r.cover.classes };
        if !sink.push(Certificate::new(GRAPH_COLLAPSE, 0, &inst, &w), Some(cfg.seed)) {
            break;
        }
    }
    Ok(())
}

fn h1plus(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    for (q, seed) in orders(cfg, 200)? {
        let (ap, _) = build_ap(&q, false);
        let (bp, _) = build_ap(&q, true);
        let ra = dichromatic_number(&ap, &cfg.limits)?;
        let rb = dichromatic_number(&bp, &cfg.limits)?;
        let inst = OrderInstance { order: Instance::from_order(&q), expected: None };
        let w = H1PlusWitness { k_ap: ra.k, cover_ap: ra.cover.classes, k_bp: rb.k, cover_bp: rb.cover.classes };
        if !sink.push(Certificate::new(H1PLUS, 0, &inst, &w), seed) {
            break;
        }
    }
    Ok(())
}

fn cyclefree_extends(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    let mut rng = SplitMix64::new(cfg.seed);
    for i in 0..cfg.count.unwrap_or(200) {
        let n = rng.range_inclusive(1, cfg.n.max(1));
        let p = 0.1 + 0.4 * rng.next_f64();
        let q = gen::random_quasi_order(n, p, &mut rng);
        let (ap, map) = build_ap(&q, false);
        // Every other instance keeps X acyclic by greedy insertion.
        let prefiltered = i % 2 == 0;
        let mut order: Vec<usize> = (0..ap.n()).collect();
        rng.shuffle(&mut order);
        let density = rng.next_f64();
        let mut verts = Vec::new();
        for v in order {
            if !rng.bernoulli(density) {
                continue;
            }
            verts.push(v);
            if prefiltered && !ap.is_acyclic(&verts)?.is_acyclic() {
                verts.pop();
            }
        }
        let x = map.to_pairs(&verts);
        let w = match closure_extend(&q, &x) {
            Ok(ext) => {
                let mut paths = Vec::new();
                for &(a, b) in x.iter().filter(|&&(a, b)| !q.leq(a, b)) {
                    let path = witness_path(&q, &x, a, b)?;
                    if !is_witness_path(&q, &x, a, b, &path) {
                        return Err(CliError::Violation(format!("witness path for ({a},{b}) fails its post-condition")));
                    }
                    paths.push((a, b, arrays(&path)));
                }
                ClosureWitness { extension: Some(arrays(&ext.off_diagonal_pairs())), paths, cycle: None }
            }
            Err(Error::CycleInX(cycle)) => ClosureWitness { extension: None, paths: Vec::new(), cycle: Some(arrays(&cycle)) },
            Err(e) => return Err(e.into()),
        };
        let inst = ClosureInstance { order: Instance::from_order(&q), x: arrays(&x), prefiltered_acyclic: prefiltered };
        if !sink.push(Certificate::new(CYCLEFREE_EXTENDS, 0, &inst, &w), Some(cfg.seed)) {
            break;
        }
    }
    Ok(())
}

fn round_trip(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    for (q, seed) in orders(cfg, 200)? {
        let (ap, _) = build_ap(&q, false);
        let r = dichromatic_number(&ap, &cfg.limits)?;
        let fam = cover_to_extensions(&q, &r.cover)?;
        let back = extensions_to_cover(&fam)?;
        for e in &fam.exts {
            let x = x_of_extension(&q, e)?;
            if closure_extend(&q, &x)? != *e {
                return Err(CliError::Violation("closure of X(ext) differs from ext".into()));
            }
        }
        let inst = OrderInstance { order: Instance::from_order(&q), expected: None };
        let w = RoundTripWitness {
            cover: r.cover.classes,
            family: family_file(&fam).extensions,
            cover_back: back.classes,
        };
        if !sink.push(Certificate::new(ROUND_TRIP, 0, &inst, &w), seed) {
            break;
        }
    }
    Ok(())
}

/// Every σ of length `0..=len` with entries in `2..=max`.
pub fn all_sigmas(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut level = vec![Vec::new()];
    for _ in 0..len {
        level = level
            .into_iter()
            .flat_map(|s: Vec<usize>| (2..=max).map(move |e| [s.clone(), vec![e]].concat()))
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

fn selector_prefixes(sigma: &SigmaSeq) -> Vec<Vec<usize>> {
    (0..=sigma.len()).map(|k| dense_selector(&sigma.prefix(k))).collect()
}

fn g0_objects(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    for entries in all_sigmas(3, 4) {
        let sigma = SigmaSeq::new(entries.clone())?;
        let k = build_k(&DenseSelector, &sigma, &cfg.limits)?;
        let cycles = canonical_cycles(&DenseSelector, &sigma, &cfg.limits)?;
        let dicr = dichromatic_number(&k.graph, &cfg.limits)?;
        let w = G0Witness {
            selector: selector_prefixes(&sigma),
            verts: k.verts.clone(),
            edges: arrays(&k.graph.edges()),
            level_edges: k.level_edges.clone(),
            cycles: cycles.iter().map(|c| c.verts().to_vec()).collect(),
            dicr: dicr.k,
        };
        if !sink.push(Certificate::new(G0_OBJECTS, 0, &SigmaInstance { sigma: entries }, &w), None) {
            return Ok(());
        }
    }
    let monotone_cases: Vec<(Vec<usize>, bool)> = vec![
        (vec![2, 2, 2], true),
        (vec![3, 3, 3, 3], true),
        (vec![5, 5], true),
        (vec![2, 3], true),
        (vec![3, 2], false),
    ];
    for (entries, expected) in monotone_cases {
        let sigma = SigmaSeq::new(entries.clone())?;
        let holds = dichro_core::g0::check_monotone(&DenseSelector, &sigma)?;
        let w = MonotoneWitness { selector: selector_prefixes(&sigma), holds };
        if !sink.push(Certificate::new(MONOTONE, 0, &MonotoneInstance { sigma: entries, expected }, &w), None) {
            break;
        }
    }
    Ok(())
}

fn xinapg(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    let mut rng = SplitMix64::new(cfg.seed);
    let count = cfg.count.unwrap_or(100);
    for _ in 0..count {
        let n = rng.range_inclusive(1, cfg.n.max(1));
        let p = rng.next_f64();
        let g = gen::random_digraph(n, p, &mut rng);
        let pg = build_pg(&g);
        let (ap, map) = build_ap(&pg.order, false);
        let w = pg.witness(&map);
        let rg = dichromatic_number(&g, &cfg.limits)?;
        let ra = dichromatic_number(&ap, &cfg.limits)?;
        let inst = DigraphInstance { digraph: Instance::from_digraph(&g), expected: None };
        let wit = XinapgWitness {
            pg: Instance::from_order(&pg.order),
            map: w.map,
            k_g: rg.k,
            cover_g: rg.cover.classes,
            k_apg: ra.k,
            cover_apg: ra.cover.classes,
        };
        if !sink.push(Certificate::new(XINAPG, 0, &inst, &wit), Some(cfg.seed)) {
            return Ok(());
        }
    }
    // Random pairs: only those with a homomorphism carry a claim.
    for _ in 0..count {
        let g = gen::random_digraph(rng.range_inclusive(1, 6), 0.2 + 0.4 * rng.next_f64(), &mut rng);
        let h = gen::random_digraph(rng.range_inclusive(1, 5), 0.3 + 0.6 * rng.next_f64(), &mut rng);
        let HomOutcome::Found(w) = find_homomorphism(&g, &h, false, &cfg.limits)? else {
            continue;
        };
        let rg = dichromatic_number(&g, &cfg.limits)?;
        let rh = dichromatic_number(&h, &cfg.limits)?;
        let inst =
            HomInstance { g: Instance::from_digraph(&g), h: Instance::from_digraph(&h), minimal: false, expected: None };
        let wit = HomDicrWitness {
            map: w.map,
            k_g: rg.k,
            cover_g: rg.cover.classes,
            k_h: rh.k,
            cover_h: rh.cover.classes,
        };
        if !sink.push(Certificate::new(HOM_DICR, 0, &inst, &wit), Some(cfg.seed)) {
            break;
        }
    }
    Ok(())
}

fn separators(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    for (q, seed) in orders(cfg, 200)? {
        let sets = prefix_separators(q.n());
        let family = match separators_to_family(&q, &sets)? {
            SeparatorOutcome::Family(f) => family_file(&f).extensions,
            // An empty family cannot satisfy the size check, so the
            // certificate records the failure.
            SeparatorOutcome::Incomplete { .. } => Vec::new(),
        };
        let (d, realizer) = realizer(&q, &cfg.limits)?;
        let inst = SeparatorInstance { order: Instance::from_order(&q), sets };
        let w = SeparatorWitness { family, d, realizer };
        if !sink.push(Certificate::new(SEPARATORS, 0, &inst, &w), seed) {
            break;
        }
    }
    Ok(())
}

fn hom_file(outcome: HomOutcome) -> HomWitnessFile {
    match outcome {
        HomOutcome::Found(w) => HomWitnessFile { found: true, map: Some(w.map) },
        HomOutcome::NotFound => HomWitnessFile { found: false, map: None },
    }
}

fn minhom(cfg: &CampaignConfig, sink: &mut Sink) -> Result<(), CliError> {
    let c6 = Digraph::directed_cycle(6);
    let c3 = Digraph::directed_cycle(3);
    for (minimal, expected) in [(false, true), (true, false)] {
        let outcome = find_homomorphism(&c6, &c3, minimal, &cfg.limits)?;
        let inst = HomInstance {
            g: Instance::from_digraph(&c6),
            h: Instance::from_digraph(&c3),
            minimal,
            expected: Some(expected),
        };
        if !sink.push(Certificate::new(MINHOM, 0, &inst, &hom_file(outcome)), None) {
            return Ok(());
        }
    }
    let wanted = cfg.count.unwrap_or(50);
    let mut rng = SplitMix64::new(cfg.seed);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < wanted && attempts < 20 * wanted.max(1) {
        attempts += 1;
        let g = gen::random_digraph(rng.range_inclusive(2, 5), 0.3 + 0.3 * rng.next_f64(), &mut rng);
        let h = grow(&g, rng.range_inclusive(0, 2), &mut rng);
        let k = grow(&h, rng.range_inclusive(0, 2), &mut rng);
        let (HomOutcome::Found(w1), HomOutcome::Found(w2)) = (
            find_homomorphism(&g, &h, true, &cfg.limits)?,
            find_homomorphism(&h, &k, true, &cfg.limits)?,
        ) else {
            continue;
        };
        accepted += 1;
        let inst = ComposeInstance {
            g: Instance::from_digraph(&g),
            h: Instance::from_digraph(&h),
            k: Instance::from_digraph(&k),
        };
        let w = ComposeWitness { first: w1.map, second: w2.map };
        if !sink.push(Certificate::new(MINHOM_COMPOSE, 0, &inst, &w), Some(cfg.seed)) {
            break;
        }
    }
    Ok(())
}

/// `d` plus `extra` new vertices joined to everything at random, so `d` is an
/// induced subdigraph and minimal homomorphisms into the result exist.
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
    Digraph::new(n, &edges).expect("no self-loops")
}
