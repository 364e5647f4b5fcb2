//! `coxpop`: depth tables, orbits, normal forms and verification suites for
//! the pop-tsack torsing operator on finite Coxeter groups.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coxpop::conjecture::{self, Conjecture};
use coxpop::dynamics::{conjugation_orbit_set, pop_forest_dot, DepthTable, Terminal};
use coxpop::golden::golden;
use coxpop::normal_form::{block_decompose, dual_braid_lift, sif_count};
use coxpop::verify::{self, Suite, VerifyConfig};
use coxpop::{CoxeterSpec, CoxeterType, Element, Error, GroupContext, NcLattice, Notation, PopEngine};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "coxpop", version, about = "Pop-tsack torsing dynamics on finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunConfig,
}

#[derive(Args, Debug, Clone)]
struct RunConfig {
    /// Coxeter element: standard, bipartite, a word like "w:1 3 2", or an element spec.
    #[arg(long, global = true, default_value = "standard")]
    cox: String,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Directory for cached noncrossing partition lattices.
    #[arg(long, global = true, env = "COXPOP_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads for whole-group scans.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, default_value_t = coxpop::DEFAULT_BUDGET)]
    budget_order: u64,
    /// Lift the enumeration budget entirely.
    #[arg(long, global = true)]
    allow_large: bool,
    /// Compare against the shipped reference values; exit 1 on mismatch.
    #[arg(long, global = true)]
    verify: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
}

impl RunConfig {
    fn budget(&self) -> u64 {
        if self.allow_large {
            u64::MAX
        } else {
            self.budget_order
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
    Dot,
}

/// A group given as `A 4`, `--type A --rank 4`, `I 7` or `G 2`.
#[derive(Args, Debug, Clone)]
struct GroupArgs {
    /// Family letter (A, B, C, D, E, F, G, H, I).
    #[arg(value_name = "TYPE")]
    family: Option<String>,
    /// Rank (for I, the bond label m of I2(m)).
    #[arg(value_name = "RANK")]
    rank: Option<usize>,
    #[arg(long = "type", conflicts_with = "family")]
    type_flag: Option<String>,
    #[arg(long = "rank", conflicts_with = "rank")]
    rank_flag: Option<usize>,
}

impl GroupArgs {
    fn cox_type(&self) -> Result<CoxeterType> {
        let family = self.family.as_ref().or(self.type_flag.as_ref()).ok_or_else(|| usage("missing group type"))?;
        let rank = self.rank.or(self.rank_flag);
        match rank {
            Some(r) => Ok(CoxeterType::from_parts(family, r)?),
            None => Ok(family.parse()?),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of elements needing each number of iterations to reach e.
    Table {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Forward orbit of one element, with pi_T at each step.
    Orbit {
        #[command(flatten)]
        group: GroupArgs,
        /// Element: e, c, c^k, w:<word> or cycle notation.
        #[arg(long = "element", short = 'e')]
        element: Option<String>,
        /// Start from a periodic set, e.g. O5.
        #[arg(long = "in")]
        within: Option<String>,
        /// Element given positionally after the type and rank.
        #[arg(last = true)]
        rest: Vec<String>,
    },
    /// The whole functional graph w -> Pop_T(w) as a DOT forest.
    Tree {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Evaluate a conjectured count at each rank up to --max-rank.
    Conjecture {
        #[arg(value_enum)]
        which: Which,
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Run property suites.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Dual braid lift of an element.
    Nf {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "element", short = 'e')]
        element: Option<String>,
        /// Also print the block decomposition over pi_T(w).
        #[arg(long)]
        blocks: bool,
        #[arg(last = true)]
        rest: Vec<String>,
    },
    /// Number of SIF elements (pi_T(w) = c).
    Sif {
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    A,
    B,
    D,
}

/// Errors that map to exit status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage_like = e.downcast_ref::<Usage>().is_some()
                || matches!(
                    e.downcast_ref::<Error>(),
                    Some(
                        Error::BudgetExceeded { .. }
                            | Error::InvalidType(_)
                            | Error::Parse { .. }
                            | Error::InvalidCoxeterElement(_)
                            | Error::Unsupported(_)
                    )
                );
            ExitCode::from(if usage_like { 2 } else { 1 })
        }
    }
}

/// Output sink honouring `--out`.
struct Sink {
    out: Box<dyn Write>,
}

impl Sink {
    fn new(cfg: &RunConfig) -> Result<Self> {
        let out: Box<dyn Write> = match &cfg.out {
            Some(p) => Box::new(std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?),
            None => Box::new(std::io::stdout()),
        };
        Ok(Sink { out })
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref())?;
        Ok(())
    }

    fn raw(&mut self, s: impl AsRef<str>) -> Result<()> {
        write!(self.out, "{}", s.as_ref())?;
        Ok(())
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let cfg = &cli.run;
    let mut sink = Sink::new(cfg)?;
    match &cli.command {
        Command::Table { group } => cmd_table(cfg, &mut sink, group),
        Command::Orbit { group, element, within, rest } => {
            cmd_orbit(cfg, &mut sink, group, element.as_deref().or(rest.first().map(String::as_str)), within.as_deref())
        }
        Command::Tree { group } => cmd_tree(cfg, &mut sink, group),
        Command::Conjecture { which, max_rank } => cmd_conjecture(cfg, &mut sink, *which, *max_rank),
        Command::Verify { suite } => cmd_verify(cfg, &mut sink, suite),
        Command::Nf { group, element, blocks, rest } => {
            let spec = element.as_deref().or(rest.first().map(String::as_str)).ok_or_else(|| usage("missing element"))?;
            cmd_nf(cfg, &mut sink, group, spec, *blocks)
        }
        Command::Sif { group } => cmd_sif(cfg, &mut sink, group),
    }
}

/// Builds the context with the requested Coxeter element.
fn context(cfg: &RunConfig, group: &GroupArgs) -> Result<GroupContext> {
    let base = GroupContext::new(group.cox_type()?)?;
    let spec = match cfg.cox.trim() {
        "standard" => return Ok(base),
        "bipartite" => CoxeterSpec::Bipartite,
        s if s.starts_with("w:") => {
            let word = s[2..]
                .split(|ch: char| ch.is_whitespace() || ch == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.trim_start_matches('s').parse::<usize>().map(|k| k.wrapping_sub(1)))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| usage(format!("bad Coxeter word {s:?}")))?;
            CoxeterSpec::Word(word)
        }
        s => CoxeterSpec::Element(Notation::new(&base).parse(&base, s)?),
    };
    Ok(base.with_coxeter(spec)?)
}

fn lattice(cfg: &RunConfig, ctx: &GroupContext) -> NcLattice {
    NcLattice::load_or_build(ctx, cfg.cache_dir.as_deref())
}

fn cmd_table(cfg: &RunConfig, sink: &mut Sink, group: &GroupArgs) -> Result<bool> {
    let ctx = context(cfg, group)?;
    let all = ctx.enumerate(cfg.budget())?;
    let lat = lattice(cfg, &ctx);
    let engine = PopEngine::new(&ctx, &lat);
    let table = engine.depth_table(&all, cfg.jobs);
    let name = ctx.cox_type().to_string();
    match cfg.format {
        Format::Json => sink.line(json!({ "group": name, "table": table }).to_string())?,
        Format::Tsv => sink.raw(table.to_tsv())?,
        Format::Text | Format::Dot => sink.line(table_text(&name, &table))?,
    }
    if !cfg.verify {
        return Ok(true);
    }
    let Some(row) = golden().depth_row(&name) else {
        return Err(usage(format!("no reference row for {name}")));
    };
    if row.matches(&table) {
        eprintln!("PASS {name}");
        Ok(true)
    } else {
        let sum: u64 = row.counts.iter().sum::<u64>() + row.periodic;
        let note = if sum != ctx.order() { format!(" (reference row sums to {sum}, group order {})", ctx.order()) } else { String::new() };
        eprintln!("FAIL {name}: expected {:?} inf {}{note}", row.counts, row.periodic);
        Ok(false)
    }
}

fn table_text(name: &str, t: &DepthTable) -> String {
    let counts = t.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
    let mut s = format!("{name}: {counts} | inf {}", t.periodic_count);
    if !t.periodic_orbit_sizes.is_empty() {
        s.push_str(&format!(" ({} periodic orbits, sizes {:?})", t.periodic_orbit_sizes.len(), t.periodic_orbit_sizes));
    }
    s
}

fn start_element(cfg: &RunConfig, ctx: &GroupContext, spec: Option<&str>, within: Option<&str>) -> Result<Element> {
    if let Some(set) = within {
        let k: i64 = set
            .trim()
            .strip_prefix(['O', 'o'])
            .and_then(|k| k.parse().ok())
            .ok_or_else(|| usage(format!("expected O<k>, got {set:?}")))?;
        let all = ctx.enumerate(cfg.budget())?;
        return conjugation_orbit_set(ctx, k, all.elements())
            .into_iter()
            .next()
            .ok_or_else(|| anyhow!("O_{k} is empty: c is not conjugate to c^{k}"));
    }
    let spec = spec.ok_or_else(|| usage("missing element (or --in O<k>)"))?;
    Ok(Notation::new(ctx).parse(ctx, spec)?)
}

fn cmd_orbit(cfg: &RunConfig, sink: &mut Sink, group: &GroupArgs, spec: Option<&str>, within: Option<&str>) -> Result<bool> {
    let ctx = context(cfg, group)?;
    let w = start_element(cfg, &ctx, spec, within)?;
    let lat = lattice(cfg, &ctx);
    let engine = PopEngine::new(&ctx, &lat);
    let notation = Notation::new(&ctx);
    let orbit = engine.forward_orbit(&w);
    let steps: Vec<(String, String)> = orbit
        .trajectory
        .iter()
        .map(|x| (notation.format(&ctx, x), notation.format(&ctx, engine.project(x))))
        .collect();
    let terminal = match orbit.terminal {
        Terminal::ReachesIdentity => "reaches_identity",
        Terminal::PeriodicNonIdentity => "periodic_nonidentity",
    };
    match cfg.format {
        Format::Json => {
            let steps: Vec<_> = steps.iter().map(|(w, p)| json!({ "element": w, "projection": p })).collect();
            sink.line(
                json!({
                    "group": ctx.cox_type().to_string(),
                    "trajectory": steps,
                    "orbit_size": orbit.len(),
                    "transient_length": orbit.transient_length,
                    "cycle_length": orbit.cycle_length,
                    "terminal": terminal,
                })
                .to_string(),
            )?;
        }
        _ => {
            for (i, (w, p)) in steps.iter().enumerate() {
                sink.line(format!("{i}\t{w}\tpi_T = {p}"))?;
            }
            sink.line(format!(
                "orbit size {}, transient {}, cycle length {}, {terminal}",
                orbit.len(),
                orbit.transient_length,
                orbit.cycle_length
            ))?;
        }
    }
    Ok(true)
}

fn cmd_tree(cfg: &RunConfig, sink: &mut Sink, group: &GroupArgs) -> Result<bool> {
    let ctx = context(cfg, group)?;
    let all = ctx.enumerate(cfg.budget())?;
    let lat = lattice(cfg, &ctx);
    let engine = PopEngine::new(&ctx, &lat);
    let next = engine.pop_map(&all, cfg.jobs);
    let notation = Notation::new(&ctx);
    match cfg.format {
        Format::Json => {
            let edges: Vec<_> = all
                .elements()
                .iter()
                .zip(&next)
                .map(|(w, &j)| json!([notation.format(&ctx, w), notation.format(&ctx, all.get(j as usize))]))
                .collect();
            sink.line(json!({ "group": ctx.cox_type().to_string(), "edges": edges }).to_string())?;
        }
        _ => sink.raw(pop_forest_dot(&all, &next, |w| notation.format(&ctx, w)))?,
    }
    Ok(true)
}

fn cmd_conjecture(cfg: &RunConfig, sink: &mut Sink, which: Which, max_rank: Option<usize>) -> Result<bool> {
    let (conj, first, default_max) = match which {
        Which::A => (Conjecture::A, 2, 6),
        Which::B => (Conjecture::B, 2, 6),
        Which::D => (Conjecture::D, 4, 7),
    };
    let mut rows = Vec::new();
    for rank in first..=max_rank.unwrap_or(default_max) {
        let ty = CoxeterType::new(conj.family(), rank)?;
        if ty.order() > cfg.budget() {
            eprintln!("skipping {ty}: order {} above budget (use --allow-large)", ty.order());
            continue;
        }
        let ctx = GroupContext::new(ty)?;
        let all = ctx.enumerate(cfg.budget())?;
        let lat = lattice(cfg, &ctx);
        let table = PopEngine::new(&ctx, &lat).depth_table(&all, cfg.jobs);
        rows.push(conjecture::check(conj, ty, &table));
    }
    match cfg.format {
        Format::Json => sink.line(serde_json::to_string_pretty(&rows)?)?,
        _ => {
            for r in &rows {
                sink.line(r.to_text())?;
            }
        }
    }
    Ok(true)
}

fn cmd_verify(cfg: &RunConfig, sink: &mut Sink, suite: &str) -> Result<bool> {
    let suite: Suite = suite.parse().map_err(|e: Error| usage(e.to_string()))?;
    let vcfg = VerifyConfig { budget: cfg.budget(), jobs: cfg.jobs, cache_dir: cfg.cache_dir.clone(), seed: cfg.seed };
    let checks = verify::run(suite, &vcfg)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    match cfg.format {
        Format::Json => sink.line(serde_json::to_string_pretty(&checks)?)?,
        _ => {
            for c in &checks {
                sink.line(c.to_string())?;
            }
            sink.line(format!("{} checks, {failed} failed", checks.len()))?;
        }
    }
    Ok(failed == 0)
}

fn cmd_nf(cfg: &RunConfig, sink: &mut Sink, group: &GroupArgs, spec: &str, blocks: bool) -> Result<bool> {
    let ctx = context(cfg, group)?;
    let lat = lattice(cfg, &ctx);
    let engine = PopEngine::new(&ctx, &lat);
    let notation = Notation::new(&ctx);
    let w = notation.parse(&ctx, spec)?;
    let lift = match dual_braid_lift(&engine, &w) {
        Ok(l) => l,
        Err(Error::Periodic) => bail!("{spec} lies on a periodic Pop_T orbit; the lift is undefined"),
        Err(e) => return Err(e.into()),
    };
    let factor_text = |x: &Element| {
        if notation.model().is_some() {
            notation.format(&ctx, x)
        } else {
            let word = ctx.reflection_word(x).iter().map(|t| format!("t{}", t + 1)).collect::<Vec<_>>().join(" ");
            format!("[{word}]")
        }
    };
    let factors: Vec<String> = lift.factors.iter().map(|&i| factor_text(lat.element(i))).collect();
    let text = if factors.is_empty() { "e".to_string() } else { factors.join("·") };
    let decomposition = blocks.then(|| block_decompose(&engine, &w));
    match cfg.format {
        Format::Json => {
            let blocks_json = decomposition.as_ref().map(|d| {
                d.blocks
                    .iter()
                    .map(|b| {
                        json!({
                            "reflections": b.reflections.iter().map(|t| t + 1).collect::<Vec<_>>(),
                            "coxeter": factor_text(&b.coxeter),
                            "factor": factor_text(&b.factor),
                        })
                    })
                    .collect::<Vec<_>>()
            });
            sink.line(
                json!({
                    "element": notation.format(&ctx, &w),
                    "factors": lift.factors,
                    "normal_form": text,
                    "blocks": blocks_json,
                })
                .to_string(),
            )?;
        }
        _ => {
            sink.line(text)?;
            if let Some(d) = decomposition {
                for (i, b) in d.blocks.iter().enumerate() {
                    sink.line(format!(
                        "block {}: coxeter {} factor {}",
                        i + 1,
                        factor_text(&b.coxeter),
                        factor_text(&b.factor)
                    ))?;
                }
            }
        }
    }
    Ok(true)
}

fn cmd_sif(cfg: &RunConfig, sink: &mut Sink, group: &GroupArgs) -> Result<bool> {
    let ctx = context(cfg, group)?;
    let all = ctx.enumerate(cfg.budget())?;
    let lat = lattice(cfg, &ctx);
    let count = sif_count(&PopEngine::new(&ctx, &lat), &all, cfg.jobs);
    let name = ctx.cox_type().to_string();
    match cfg.format {
        Format::Json => sink.line(json!({ "group": name, "sif": count }).to_string())?,
        _ => sink.line(format!("{name}: {count}"))?,
    }
    if !cfg.verify {
        return Ok(true);
    }
    match golden().sif_count(&name) {
        Some(expected) if expected == count => {
            eprintln!("PASS {name}");
            Ok(true)
        }
        Some(expected) => {
            eprintln!("FAIL {name}: expected {expected}");
            Ok(false)
        }
        None => Err(usage(format!("no reference SIF count for {name}"))),
    }
}
