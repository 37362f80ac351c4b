//! The `polymat` command line.
//!
//! Exit codes: 0 on success, 1 when a sweep has failing rows, 2 on usage or
//! validation errors. Reports go to standard output, diagnostics to
//! standard error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::gorenstein::{report_from_table, verify_h_description_for, HDescription, ReportOptions, Witness, DEFAULT_MAX_BOX};
use crate::graph::{hypercube, parse_edge_list, parse_graph, petersen, FamilySpec, Graph};
use crate::harness::{
    default_exceptional_grid, default_grid, exceptional_scan, expand_grid, sweep, CapGrid, GridEntry, PredicateId,
    DEFAULT_SEED,
};
use crate::polymatroid::{bases_with, delta, BaseMode, BaseOptions, BaseSet, CapacityVector, DEFAULT_MAX_CANDIDATES};
use crate::rank::{closed_inseparable_sets, rank, rank_table_with_cap, RankTable, Subset, DEFAULT_MAX_N};

#[derive(Debug, Parser)]
#[command(name = "polymat", version, about = "Bounded powers of edge ideals and their Gorenstein polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print δ_c(I(G)).
    Delta(Instance),
    /// List the base set B(G, c).
    Bases {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, value_enum, default_value_t = ModeArg::Exchange)]
        mode: ModeArg,
    },
    /// Rank of one subset, e.g. --set 1,3,5.
    Rank {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        set: String,
    },
    /// Rank of every subset, in bitmask order.
    RankTable(Instance),
    /// The closed and inseparable subsets.
    ClosedSets(Instance),
    /// Decide whether conv(D(G, c)) is Gorenstein.
    Gorenstein(Instance),
    /// Check that an H-description (JSON) cuts out exactly D(G, c).
    VerifyHrep {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, value_name = "FILE")]
        hrep: PathBuf,
    },
    /// Compare a classification predicate with computed verdicts.
    Sweep {
        /// Predicate id, or `all`.
        #[arg(long, default_value = "all")]
        predicate: String,
        #[command(flatten)]
        run: RunOpts,
    },
    /// List Gorenstein cases whose polytope is neither standard cube.
    ExceptionalScan {
        /// Family members to scan (repeatable); paths on 4 to 6 vertices by default.
        #[arg(long)]
        family: Vec<String>,
        /// Largest capacity entry in the scanned grid.
        #[arg(long, default_value_t = 4)]
        max_entry: u32,
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exchange,
    Filter,
}

#[derive(Debug, Args)]
struct RunOpts {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, env = "POLYMAT_MAX_N", default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
    max_candidates: u128,
    /// Seed for sampled capacity vectors.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for sweeps.
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl RunOpts {
    fn report_options(&self) -> ReportOptions {
        ReportOptions {
            bases: BaseOptions {
                mode: BaseMode::Exchange,
                max_candidates: self.max_candidates,
            },
            max_n: self.max_n,
        }
    }
}

#[derive(Debug, Args)]
struct Instance {
    /// Graph file: vertex count, then one edge per line.
    #[arg(long, value_name = "FILE", conflicts_with = "family", required_unless_present = "family")]
    graph: Option<PathBuf>,
    /// Family spec: complete:N, kmn:M,N, cycle:N, path:N, whisker:(SPEC),
    /// cmcw:R,S,FILE, petersen, cube:D.
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
    /// Capacity: comma-separated entries or uniform:K.
    #[arg(long, value_name = "LIST")]
    cap: String,
    #[command(flatten)]
    run: RunOpts,
}

impl Instance {
    fn load(&self) -> anyhow::Result<(Graph, CapacityVector)> {
        let g = match (&self.graph, &self.family) {
            (Some(path), _) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                parse_graph(&text)?
            }
            (None, Some(spec)) => parse_family(spec)?.build()?,
            (None, None) => bail!("one of --graph or --family is required"),
        };
        let c = parse_cap(&self.cap, g.n())?;
        Ok((g, c))
    }
}

/// Parses a capacity argument for a graph on `n` vertices.
pub fn parse_cap(s: &str, n: usize) -> anyhow::Result<CapacityVector> {
    let s = s.trim();
    let entries: Vec<u32> = if let Some(k) = s.strip_prefix("uniform:") {
        let k = k.trim().parse().with_context(|| format!("bad uniform capacity `{k}`"))?;
        vec![k; n]
    } else {
        s.split(',')
            .map(|x| x.trim().parse::<u32>().with_context(|| format!("bad capacity entry `{x}`")))
            .collect::<anyhow::Result<_>>()?
    };
    if entries.len() != n {
        return Err(crate::Error::DimensionMismatch {
            expected: n,
            found: entries.len(),
        }
        .into());
    }
    Ok(CapacityVector::new(entries)?)
}

/// Parses the family mini-language. `cmcw:R,S,FILE` reads the edges of `H`
/// from FILE; `cmcw:R,S,[1-3 2-3]` gives them inline.
pub fn parse_family(s: &str) -> anyhow::Result<FamilySpec> {
    parse_family_in(s, Path::new("."))
}

fn parse_family_in(s: &str, base: &Path) -> anyhow::Result<FamilySpec> {
    let s = s.trim();
    let (head, rest) = s.split_once(':').unwrap_or((s, ""));
    let nums = |r: &str| -> anyhow::Result<Vec<usize>> {
        r.split(',')
            .map(|x| x.trim().parse().with_context(|| format!("bad number `{x}` in `{s}`")))
            .collect()
    };
    let one = |r: &str| -> anyhow::Result<usize> {
        match nums(r)?.as_slice() {
            [x] => Ok(*x),
            _ => bail!("`{head}` takes one parameter"),
        }
    };
    Ok(match head {
        "complete" => FamilySpec::Complete(one(rest)?),
        "cycle" => FamilySpec::Cycle(one(rest)?),
        "path" => FamilySpec::Path(one(rest)?),
        "kmn" => match nums(rest)?.as_slice() {
            [m, n] => FamilySpec::CompleteBipartite(*m, *n),
            _ => bail!("`kmn` takes two parameters"),
        },
        "whisker" => {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| anyhow!("expected whisker:(SPEC), got `{s}`"))?;
            FamilySpec::Whiskered(Box::new(parse_family_in(inner, base)?))
        }
        "cmcw" => {
            let mut parts = rest.splitn(3, ',');
            let (Some(r), Some(t), Some(src)) = (parts.next(), parts.next(), parts.next()) else {
                bail!("expected cmcw:R,S,FILE, got `{s}`");
            };
            let r = r.trim().parse().with_context(|| format!("bad r in `{s}`"))?;
            let t = t.trim().parse().with_context(|| format!("bad s in `{s}`"))?;
            let src = src.trim();
            let h = match src.strip_prefix('[').and_then(|x| x.strip_suffix(']')) {
                Some(inline) => inline
                    .split_whitespace()
                    .map(|e| {
                        let (i, j) = e.split_once('-').ok_or_else(|| anyhow!("bad edge `{e}`"))?;
                        Ok((i.parse()?, j.parse()?))
                    })
                    .collect::<anyhow::Result<Vec<_>>>()?,
                None => {
                    let path = base.join(src);
                    let text =
                        fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    parse_edge_list(&text)?
                }
            };
            FamilySpec::CameronWalker { h, r, s: t }
        }
        "petersen" if rest.is_empty() => FamilySpec::custom("petersen", petersen()),
        "cube" => {
            let d = one(rest)?;
            FamilySpec::custom(format!("cube:{d}"), hypercube(d as u32)?)
        }
        _ => bail!("unknown family `{s}`"),
    })
}

/// Outcome of a command: text for standard output and the exit code.
struct Output {
    body: String,
    code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Self { body, code: 0 }
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = crate::to_canonical_json(v);
    s.push('\n');
    s
}

#[derive(Serialize)]
struct RankOut {
    rank: u32,
    set: Subset,
}

#[derive(Serialize)]
struct RankTableOut {
    delta: u32,
    n: usize,
    ranks: Vec<RankOut>,
}

fn table_out(t: &RankTable) -> RankTableOut {
    RankTableOut {
        delta: t.delta(),
        n: t.n(),
        ranks: (0..=t.full().mask())
            .map(|m| RankOut {
                rank: t.get(Subset::from_mask(m)),
                set: Subset::from_mask(m),
            })
            .collect(),
    }
}

fn parse_set(s: &str, n: usize) -> anyhow::Result<Subset> {
    let labels = s
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse::<usize>().with_context(|| format!("bad label `{x}`")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Subset::from_labels(&labels, n)?)
}

fn base_set(inst: &Instance, g: &Graph, c: &CapacityVector, mode: BaseMode) -> anyhow::Result<BaseSet> {
    let opts = BaseOptions {
        mode,
        max_candidates: inst.run.max_candidates,
    };
    Ok(bases_with(g, c, &opts)?)
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Conflict { first, second } => format!(
            "conflict: rho({}) = {} fixes k = {}, but rho({}) = {}",
            first.set,
            first.rank,
            (first.set.len() as u32 + 1) / first.rank,
            second.set,
            second.rank
        ),
        Witness::Fractional { subset } => format!(
            "fractional: (|A| + 1) / rho(A) = {}/{} for A = {}",
            subset.set.len() + 1,
            subset.rank,
            subset.set
        ),
    }
}

fn execute(cmd: &Command) -> anyhow::Result<Output> {
    match cmd {
        Command::Delta(inst) => {
            let (g, c) = inst.load()?;
            let d = delta(&g, &c)?;
            Ok(Output::ok(match inst.run.format {
                Format::Json => json(&d),
                Format::Text => format!("{d}\n"),
            }))
        }
        Command::Bases { inst, mode } => {
            let (g, c) = inst.load()?;
            let mode = match mode {
                ModeArg::Exchange => BaseMode::Exchange,
                ModeArg::Filter => BaseMode::Filter,
            };
            let b = base_set(inst, &g, &c, mode)?;
            Ok(Output::ok(match inst.run.format {
                Format::Json => json(&b),
                Format::Text => {
                    let mut s = format!("delta = {}, {} bases\n", b.delta(), b.len());
                    for a in b.bases() {
                        s.push_str(&format!("{a}\n"));
                    }
                    s
                }
            }))
        }
        Command::Rank { inst, set } => {
            let (g, c) = inst.load()?;
            let x = parse_set(set, g.n())?;
            let b = base_set(inst, &g, &c, BaseMode::Exchange)?;
            let r = rank(&b, x)?;
            Ok(Output::ok(match inst.run.format {
                Format::Json => json(&RankOut { rank: r, set: x }),
                Format::Text => format!("rho({x}) = {r}\n"),
            }))
        }
        Command::RankTable(inst) | Command::ClosedSets(inst) | Command::Gorenstein(inst) => {
            let (g, c) = inst.load()?;
            let b = base_set(inst, &g, &c, BaseMode::Exchange)?;
            let t = rank_table_with_cap(&b, inst.run.max_n)?;
            let text = inst.run.format == Format::Text;
            Ok(Output::ok(match cmd {
                Command::RankTable(_) if text => {
                    let mut s = String::new();
                    for r in table_out(&t).ranks {
                        s.push_str(&format!("{}\t{}\n", r.set, r.rank));
                    }
                    s
                }
                Command::RankTable(_) => json(&table_out(&t)),
                Command::ClosedSets(_) if text => {
                    let mut s = String::new();
                    for e in closed_inseparable_sets(&t).entries() {
                        s.push_str(&format!("{}\trank {}\n", e.set, e.rank));
                    }
                    s
                }
                Command::ClosedSets(_) => json(&closed_inseparable_sets(&t)),
                _ => {
                    let r = report_from_table(&t);
                    if text {
                        let mut s = format!(
                            "gorenstein: {}\nk: {}\ndelta: {}\n",
                            r.gorenstein,
                            r.k.map_or("-".into(), |k| k.to_string()),
                            r.delta
                        );
                        if let Some(w) = &r.witness {
                            s.push_str(&format!("witness: {}\n", witness_text(w)));
                        }
                        if r.anomaly {
                            s.push_str("anomaly: no closed inseparable sets or not full-dimensional\n");
                        }
                        s.push_str("closed inseparable sets:\n");
                        for e in r.closed_inseparable.entries() {
                            s.push_str(&format!("  {} rank {}\n", e.set, e.rank));
                        }
                        s
                    } else {
                        json(&r)
                    }
                }
            }))
        }
        Command::VerifyHrep { inst, hrep } => {
            let (g, c) = inst.load()?;
            let text = fs::read_to_string(hrep).with_context(|| format!("reading {}", hrep.display()))?;
            let h: HDescription =
                serde_json::from_str(&text).with_context(|| format!("parsing {}", hrep.display()))?;
            let b = base_set(inst, &g, &c, BaseMode::Exchange)?;
            let ok = verify_h_description_for(&b, &h, DEFAULT_MAX_BOX)?;
            #[derive(Serialize)]
            struct Verdict {
                verified: bool,
            }
            Ok(Output::ok(match inst.run.format {
                Format::Json => json(&Verdict { verified: ok }),
                Format::Text => format!("{}\n", if ok { "verified" } else { "mismatch" }),
            }))
        }
        Command::Sweep { predicate, run } => {
            let ids: Vec<PredicateId> = if predicate == "all" {
                PredicateId::ALL.to_vec()
            } else {
                vec![predicate.parse()?]
            };
            let mut body = String::new();
            let mut code = 0;
            for p in ids {
                let cases = expand_grid(&default_grid(p)?, run.seed)?;
                let report = in_pool(run.threads, || sweep(p, &cases, &run.report_options()))??;
                if !report.passed() {
                    code = 1;
                }
                body.push_str(&match run.format {
                    Format::Json => report.to_json_lines(),
                    Format::Text => report.to_text(),
                });
            }
            Ok(Output { body, code })
        }
        Command::ExceptionalScan { family, max_entry, run } => {
            let entries = if family.is_empty() {
                let mut e = default_exceptional_grid();
                for x in &mut e {
                    x.caps = vec![CapGrid::auto(*max_entry)];
                }
                e
            } else {
                family
                    .iter()
                    .map(|f| Ok(GridEntry::new(parse_family(f)?, vec![CapGrid::auto(*max_entry)])))
                    .collect::<anyhow::Result<Vec<_>>>()?
            };
            let cases = expand_grid(&entries, run.seed)?;
            let hits = in_pool(run.threads, || exceptional_scan(&cases, &run.report_options()))??;
            Ok(Output::ok(match run.format {
                Format::Json => hits.iter().map(json).collect(),
                Format::Text => {
                    let mut s = String::new();
                    for h in &hits {
                        s.push_str(&format!(
                            "{}\tc = {}\teffective = {}\tk = {}\n",
                            h.family,
                            h.cap,
                            h.effective_cap,
                            h.k.map_or("-".into(), |k| k.to_string())
                        ));
                    }
                    s.push_str(&format!("{} exceptional of {} cases\n", hits.len(), cases.len()));
                    s
                }
            }))
        }
    }
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .context("building the worker pool")?;
    Ok(pool.install(f))
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            if out.write_all(o.body.as_bytes()).is_err() {
                return 2;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}
