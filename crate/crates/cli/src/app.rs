//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dichro_core::g0::{build_k, canonical_cycles, check_density, check_monotone, fmt_seq, DenseSelector, Selector, SigmaSeq};
use dichro_core::gen::{self, SplitMix64};
use dichro_core::hom::HomViolation;
use dichro_core::{
    build_ap, build_pg, chromatic_number, cover_to_extensions, dichromatic_number, extensions_to_cover,
    find_homomorphism, order_dimension, verify_homomorphism, AcyclicCover, DimMethod, HomOutcome, HomWitness,
    Limits,
};
use serde_json::{json, Value};

use crate::campaigns::{run_campaign, CampaignConfig};
use crate::certificate::{Certificate, DicrWitness, DigraphInstance, DICR};
use crate::error::CliError;
use crate::io::{self, arrays, cover_file, family_file, Instance};

#[derive(Parser, Debug)]
#[command(name = "dichro", version, about = "Order dimension, dichromatic number and related certificates")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Node budget for every search (default: built-in limits).
    #[arg(long, global = true, env = "DICHRO_BUDGET")]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dicr,
    Realizer,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order dimension of an order file.
    Dim {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Dicr)]
        method: Method,
    },
    /// Dichromatic number of a digraph file.
    Dicr { file: PathBuf },
    /// Chromatic number of a symmetric digraph file.
    Chrom { file: PathBuf },
    /// Build the pair digraph A_P or B_P of an order, or the order P(G) of a digraph.
    Reduce {
        #[arg(value_enum)]
        which: Reduction,
        file: PathBuf,
    },
    /// Translate between acyclic covers and extension families.
    #[command(subcommand)]
    Convert(Convert),
    /// Selectors, the digraphs K(E,σ), density and monotonicity checks.
    #[command(subcommand)]
    G0(G0),
    /// Homomorphism search and checking.
    #[command(subcommand)]
    Hom(Hom),
    /// Generate an instance file.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Edge probability for random kinds.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List every labelled poset on n elements.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Run a verification campaign and stream its certificates.
    Verify {
        name: String,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        exhaustive: bool,
        /// Number of seeded random instances.
        #[arg(long)]
        count: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Reduction {
    Ap,
    Bp,
    Pg,
}

#[derive(Subcommand, Debug)]
pub enum Convert {
    CoverToExt {
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
    ExtToCover {
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        family: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum G0 {
    /// Dense selector value E(σ).
    Selector {
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// The digraph K(E,σ) with its canonical cycles.
    K {
        #[arg(long)]
        sigma: String,
    },
    Density {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        depth: usize,
    },
    Monotone {
        #[arg(long)]
        sigma: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum Hom {
    Find {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        minimal: bool,
    },
    Check {
        g: PathBuf,
        h: PathBuf,
        /// Image of every source vertex, comma separated.
        #[arg(long)]
        map: String,
        #[arg(long)]
        minimal: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Poset,
    Digraph,
    Graph,
    Crown,
    Chain,
    Antichain,
    Boolean,
}

/// What a command produced: the text to print and whether it verified.
struct Report {
    body: String,
    ok: bool,
    /// Counterexample or diagnostic for stderr.
    note: Option<String>,
}

impl Report {
    fn json(v: &Value) -> Self {
        Report { body: format!("{v}\n"), ok: true, note: None }
    }

    fn pick(format: Format, v: &Value, text: String) -> Self {
        match format {
            Format::Json => Report::json(v),
            Format::Text => Report { body: text, ok: true, note: None },
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    let out_path = cli.out.clone();
    let result = execute(&cli).and_then(|r| {
        match &out_path {
            Some(p) => std::fs::write(p, &r.body).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?,
            None => stdout.write_all(r.body.as_bytes()).map_err(|e| CliError::Io(e.to_string()))?,
        }
        Ok(r)
    });
    match result {
        Ok(r) => {
            if let Some(note) = &r.note {
                let _ = writeln!(stderr, "{note}");
            }
            if r.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    match cli.budget {
        Some(b) => Limits::default().with_node_budget(b),
        None => Limits::default(),
    }
}

fn sigma(s: &str) -> Result<SigmaSeq, CliError> {
    Ok(SigmaSeq::new(io::parse_list(s)?)?)
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let lim = limits(cli);
    let fmt = cli.format;
    match &cli.command {
        Command::Dim { file, method } => {
            let q = io::read_order(file)?;
            let m = match method {
                Method::Dicr => DimMethod::ViaDicr,
                Method::Realizer => DimMethod::Realizer,
            };
            let r = order_dimension(&q, m, &lim)?;
            let fam = family_file(&r.witness);
            let v = json!({"d": r.d, "trivial_quotient": r.trivial_quotient, "family": fam});
            let mut text = format!("dimension {}\n", r.d);
            if r.trivial_quotient {
                text.push_str("quotient has at most one class: the empty family decides every pair\n");
            }
            for (i, e) in fam.extensions.iter().enumerate() {
                text.push_str(&format!("extension {i}: {e:?}\n"));
            }
            Ok(Report::pick(fmt, &v, text))
        }
        Command::Dicr { file } => {
            let d = io::read_digraph(file)?;
            let r = dichromatic_number(&d, &lim)?;
            let cert = Certificate::new(
                DICR,
                0,
                &DigraphInstance { digraph: Instance::from_digraph(&d), expected: None },
                &DicrWitness { k: r.k, cover: r.cover.classes.clone() },
            );
            let v = json!({"k": r.k, "cover": cover_file(&r.cover), "certificate": cert});
            let text = format!("dichromatic number {}\ncover {:?}\nverified {}\n", r.k, r.cover.classes, cert.verified);
            let mut rep = Report::pick(fmt, &v, text);
            rep.ok = cert.verified;
            Ok(rep)
        }
        Command::Chrom { file } => {
            let g = io::read_digraph(file)?;
            let r = chromatic_number(&g, &lim)?;
            let v = json!({"k": r.k, "colouring": r.colouring});
            Ok(Report::pick(fmt, &v, format!("chromatic number {}\ncolouring {:?}\n", r.k, r.colouring)))
        }
        Command::Reduce { which, file } => match which {
            Reduction::Ap | Reduction::Bp => {
                let q = io::read_order(file)?;
                let (d, map) = build_ap(&q, *which == Reduction::Bp);
                let v = json!({
                    "kind": "digraph",
                    "n": d.n(),
                    "edges": arrays(&d.edges()),
                    "pairs": arrays(map.pairs()),
                });
                let text = format!("{} vertices, {} edges\npairs {:?}\n", d.n(), d.edge_count(), map.pairs());
                Ok(Report::pick(fmt, &v, text))
            }
            Reduction::Pg => {
                let g = io::read_digraph(file)?;
                let pg = build_pg(&g);
                let (_, map) = build_ap(&pg.order, false);
                let w = pg.witness(&map);
                let v = json!({
                    "order": Instance::from_order(&pg.order),
                    "pairs": arrays(&pg.pairs),
                    "map": w.map,
                });
                let text = format!("order on {} elements\nembedding {:?}\n", pg.order.n(), pg.pairs);
                Ok(Report::pick(fmt, &v, text))
            }
        },
        Command::Convert(Convert::CoverToExt { order, cover }) => {
            let q = io::read_order(order)?;
            let c: io::CoverFile = io::read_json(cover)?;
            let fam = cover_to_extensions(&q, &AcyclicCover { classes: c.classes })?;
            let f = family_file(&fam);
            let text = f.extensions.iter().enumerate().map(|(i, e)| format!("extension {i}: {e:?}\n")).collect();
            Ok(Report::pick(fmt, &io::to_value(&f), text))
        }
        Command::Convert(Convert::ExtToCover { order, family }) => {
            let q = io::read_order(order)?;
            let f: io::FamilyFile = io::read_json(family)?;
            let fam = io::family_from_file(&q, &f)?;
            let cover = extensions_to_cover(&fam)?;
            let text = cover.classes.iter().enumerate().map(|(i, c)| format!("class {i}: {c:?}\n")).collect();
            Ok(Report::pick(fmt, &io::to_value(&cover_file(&cover)), text))
        }
        Command::G0(g) => g0(g, fmt, &lim),
        Command::Hom(h) => hom(h, fmt, &lim),
        Command::Gen { kind, n, p, seed } => {
            if !(0.0..=1.0).contains(p) {
                return Err(CliError::Usage(format!("--p must lie in [0, 1], got {p}")));
            }
            let mut rng = SplitMix64::new(*seed);
            let inst = match kind {
                GenKind::Poset => Instance::from_order(&gen::random_poset(*n, *p, &mut rng)),
                GenKind::Digraph => Instance::from_digraph(&gen::random_digraph(*n, *p, &mut rng)),
                GenKind::Graph => Instance::from_digraph(&gen::random_graph(*n, *p, &mut rng)),
                GenKind::Crown => Instance::from_order(&gen::crown(*n)),
                GenKind::Chain => Instance::from_order(&gen::chain(*n)),
                GenKind::Antichain => Instance::from_order(&gen::antichain(*n)),
                GenKind::Boolean => {
                    if *n > 10 {
                        return Err(CliError::Usage("boolean lattices are limited to 10 atoms".into()));
                    }
                    Instance::from_order(&gen::boolean_lattice(*n))
                }
            };
            Ok(Report::json(&io::to_value(&inst)))
        }
        Command::Enumerate { n } => {
            let all = gen::enumerate_posets(*n)?;
            match fmt {
                Format::Json => {
                    let body = all.iter().map(|q| format!("{}\n", io::to_value(&Instance::from_order(q)))).collect();
                    Ok(Report { body, ok: true, note: None })
                }
                Format::Text => Ok(Report::pick(fmt, &Value::Null, format!("{} labelled posets on {n} elements\n", all.len()))),
            }
        }
        Command::Verify { name, n, seed, exhaustive, count } => {
            let cfg = CampaignConfig { n: *n, seed: *seed, exhaustive: *exhaustive, count: *count, limits: lim };
            let mut body = String::new();
            let certs = run_campaign(name, &cfg, &mut |c| {
                if fmt == Format::Json {
                    body.push_str(&format!("{}\n", io::to_value(c)));
                }
            })?;
            let failed = certs.iter().find(|c| !c.verified);
            if fmt == Format::Text {
                body = format!(
                    "{name}: {} certificates, {}\n",
                    certs.len(),
                    if failed.is_some() { "FAILED" } else { "all verified" }
                );
            }
            let note = failed.map(|c| format!("counterexample: {}", io::to_value(c)));
            Ok(Report { body, ok: failed.is_none(), note })
        }
    }
}

fn g0(cmd: &G0, fmt: Format, lim: &Limits) -> Result<Report, CliError> {
    match cmd {
        G0::Selector { sigma: s } => {
            let s = sigma(s)?;
            let e = DenseSelector.select(&s).expect("dense selector is total");
            Ok(Report::pick(fmt, &json!({"sigma": s.entries(), "selector": e}), format!("{}\n", fmt_seq(&e))))
        }
        G0::K { sigma: s } => {
            let s = sigma(s)?;
            let k = build_k(&DenseSelector, &s, lim)?;
            let cycles: Vec<Vec<usize>> =
                canonical_cycles(&DenseSelector, &s, lim)?.iter().map(|c| c.verts().to_vec()).collect();
            let v = json!({
                "kind": "digraph",
                "n": k.graph.n(),
                "edges": arrays(&k.graph.edges()),
                "verts": k.verts,
                "level_edges": k.level_edges,
                "canonical_cycles": cycles,
            });
            let mut text = format!("K(E,{s}): {} vertices, {} edges\n", k.graph.n(), k.graph.edge_count());
            text.push_str(&format!("edges per level {:?}\n", k.level_edges));
            for c in &cycles {
                let labels: Vec<String> = c.iter().map(|&i| fmt_seq(&k.verts[i])).collect();
                text.push_str(&format!("cycle {}\n", labels.join(" -> ")));
            }
            Ok(Report::pick(fmt, &v, text))
        }
        G0::Density { sigma: s, depth } => {
            let s = sigma(s)?;
            let r = check_density(&DenseSelector, &s, *depth)?;
            let v = json!({"witnessed": r.witnessed, "unresolved": r.unresolved, "failures": r.failures});
            let mut text = String::new();
            for (seq, l) in &r.witnessed {
                text.push_str(&format!("{} witnessed at l={l}\n", fmt_seq(seq)));
            }
            for (seq, l) in &r.unresolved {
                text.push_str(&format!("{} unresolved (index {l})\n", fmt_seq(seq)));
            }
            for (seq, l) in &r.failures {
                text.push_str(&format!("{} FAILS at l={l}\n", fmt_seq(seq)));
            }
            let mut rep = Report::pick(fmt, &v, text);
            rep.ok = r.failures.is_empty();
            Ok(rep)
        }
        G0::Monotone { sigma: s } => {
            let s = sigma(s)?;
            let holds = check_monotone(&DenseSelector, &s)?;
            let v = json!({"sigma": s.entries(), "monotone": holds});
            Ok(Report::pick(fmt, &v, format!("{holds}\n")))
        }
    }
}

fn hom(cmd: &Hom, fmt: Format, lim: &Limits) -> Result<Report, CliError> {
    match cmd {
        Hom::Find { g, h, minimal } => {
            let (g, h) = (io::read_digraph(g)?, io::read_digraph(h)?);
            let v = match find_homomorphism(&g, &h, *minimal, lim)? {
                HomOutcome::Found(w) => json!({"found": true, "map": w.map, "minimal": w.minimal}),
                HomOutcome::NotFound => json!({"found": false}),
            };
            let text = match v.get("map") {
                Some(m) => format!("homomorphism {m}\n"),
                None => "no homomorphism\n".to_string(),
            };
            Ok(Report::pick(fmt, &v, text))
        }
        Hom::Check { g, h, map, minimal } => {
            let (g, h) = (io::read_digraph(g)?, io::read_digraph(h)?);
            let w = HomWitness { map: io::parse_list(map)?, minimal: *minimal };
            match verify_homomorphism(&g, &h, &w, lim.cycle_extensions) {
                Ok(()) => Ok(Report::pick(fmt, &json!({"valid": true}), "valid\n".into())),
                Err(HomViolation::Undecided(e)) => Err(e.into()),
                Err(HomViolation::BadMap(s)) => Err(CliError::Usage(s)),
                Err(v) => {
                    let mut rep = Report::pick(fmt, &json!({"valid": false, "violation": v.to_string()}), format!("invalid: {v}\n"));
                    rep.ok = false;
                    rep.note = Some(format!("counterexample: {v}"));
                    Ok(rep)
                }
            }
        }
    }
}
