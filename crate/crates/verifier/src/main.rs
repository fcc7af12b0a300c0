use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regpd::invariants::{invariants, parse_graph_text, parse_selection};
use regpd::{exit_code, find_check, find_hunt, load, run, Check, ClutterSpec, Kind, RunOptions, CHECKS, HUNTS};
use regpd_core::graph::io::to_edge_list;
use regpd_core::graph::{build_family, Family};
use regpd_core::homology::Field;
use regpd_core::prime::GapFamily;
use serde_json::json;

#[derive(Parser)]
#[command(name = "regpd", version, about = "Regularity, projective dimension and domination workbench")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Gf2,
    Q,
    Both,
}

impl FieldArg {
    fn fields(self) -> Vec<Field> {
        match self {
            FieldArg::Gf2 => vec![Field::Gf2],
            FieldArg::Q => vec![Field::Rational],
            FieldArg::Both => Field::ALL.to_vec(),
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Check or hunt identifier.
    id: String,
    /// `labeled:n<=K[,filters]`, `graphs:n<=K`, `bipartite:n<=K`, a graph6 file or an edge-list directory.
    #[arg(long)]
    corpus: String,
    #[arg(long, value_enum, default_value = "both")]
    field: FieldArg,
    /// Worker threads (0 = one per CPU).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Per-instance wall-clock limit.
    #[arg(long, default_value_t = 10.0)]
    timeout_secs: f64,
    /// Global wall-clock budget; instances started after it are reported as exceeded.
    #[arg(long)]
    budget_secs: Option<f64>,
    /// Append this many seeded random clutters to the corpus.
    #[arg(long, default_value_t = 0)]
    clutters: usize,
    #[arg(long, default_value_t = 6)]
    clutter_max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify a theorem over a corpus.
    Check(RunArgs),
    /// Search a corpus for a counterexample to an open question.
    Hunt(RunArgs),
    /// Compute selected invariants of one graph.
    Invariants {
        /// graph6 string, or a file holding graph6 or an edge list.
        #[arg(long)]
        graph: String,
        /// Comma-separated: gamma, Gamma, ind_dom, edge_dom, tau, gamma_us, Upsilon, beta_vw,
        /// epsilon, im, alpha, cochord, h_side, pd, reg, betti.
        #[arg(long)]
        select: String,
        #[arg(long, value_enum, default_value = "both")]
        field: FieldArg,
    },
    /// Build a named graph and write it as an edge list.
    Family {
        /// path, cycle, complete, edgeless, star, complete-bipartite, whisker-complete, gap-g, gap-r, gap-z, gap-h.
        name: String,
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// For gap families: certify pd between the decomposition and deletion bounds.
        #[arg(long)]
        sandwich: bool,
    },
    /// List the registered checks and hunts.
    List,
}

/// Prints a line; a closed stdout (e.g. `| head`) ends the process quietly.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("regpd: {e}");
        std::process::exit(2);
    }
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("regpd: {msg}");
    ExitCode::from(2)
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            emit(text);
            Ok(())
        }
    }
}

fn run_cmd(kind: Kind, a: RunArgs) -> ExitCode {
    let check: &Check = match kind {
        Kind::Check => match find_check(&a.id) {
            Some(c) => c,
            None => return fail(format!("unknown check `{}`", a.id)),
        },
        Kind::Hunt => match find_hunt(&a.id) {
            Some(c) => c,
            None => return fail(format!("unknown hunt `{}`", a.id)),
        },
    };
    if !(a.timeout_secs > 0.0) || a.budget_secs.is_some_and(|b| !(b > 0.0)) {
        return fail("time limits must be positive");
    }
    let clutters = (a.clutters > 0).then_some(ClutterSpec {
        count: a.clutters,
        max_n: a.clutter_max_n,
        seed: a.seed,
    });
    let corpus = match load(&a.corpus, clutters) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    for e in &corpus.errors {
        eprintln!("regpd: {}:{}: {}", e.source, e.line, e.message);
    }
    let opts = RunOptions {
        fields: a.field.fields(),
        jobs: a.jobs,
        timeout: Duration::from_secs_f64(a.timeout_secs),
        budget: a.budget_secs.map(Duration::from_secs_f64),
        clutters,
    };
    let report = run(kind, check, &a.corpus, &corpus, &opts);
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    if let Err(e) = write_or_print(a.out.as_deref(), &text) {
        return fail(e);
    }
    if a.out.is_some() {
        emit(&report.summary());
    }
    ExitCode::from(exit_code(&report) as u8)
}

fn family_cmd(name: &str, params: &[usize], out: Option<&Path>, sandwich: bool) -> Result<(), String> {
    if let Ok(gap) = name.parse::<GapFamily>() {
        let gg = gap.build(params).map_err(|e| e.to_string())?;
        let mut summary = json!({
            "schema": 1,
            "family": gap,
            "params": params,
            "n": gg.graph.n(),
            "m": gg.graph.edge_count(),
            "closed_forms": gg.closed_forms,
            "decomposition": gg.decomposition,
            "designated": gg.designated,
        });
        if sandwich {
            let mut s = serde_json::Map::new();
            for f in Field::ALL {
                let v = gg.sandwich(f).map_err(|e| e.to_string())?;
                s.insert(f.name().into(), json!(v));
            }
            summary["sandwich"] = s.into();
        }
        write_or_print(out, &to_edge_list(&gg.graph))?;
        if out.is_some() {
            emit(&serde_json::to_string_pretty(&summary).unwrap());
        }
        return Ok(());
    }
    let fam: Family = name.parse().map_err(|e: regpd_core::Error| e.to_string())?;
    let g = build_family(fam, params).map_err(|e| e.to_string())?;
    write_or_print(out, &to_edge_list(&g))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Check(a) => run_cmd(Kind::Check, a),
        Cmd::Hunt(a) => run_cmd(Kind::Hunt, a),
        Cmd::Invariants { graph, select, field } => {
            let sel = match parse_selection(&select) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            let text = if Path::new(&graph).is_file() {
                match fs::read_to_string(&graph) {
                    Ok(t) => t,
                    Err(e) => return fail(format!("cannot read {graph}: {e}")),
                }
            } else {
                graph.clone()
            };
            let g = match parse_graph_text(&text) {
                Ok(g) => g,
                Err(e) => return fail(e),
            };
            let r = invariants(&g, &sel, &field.fields());
            emit(&serde_json::to_string_pretty(&r).expect("record serializes"));
            ExitCode::SUCCESS
        }
        Cmd::Family {
            name,
            params,
            out,
            sandwich,
        } => match family_cmd(&name, &params, out.as_deref(), sandwich) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(e),
        },
        Cmd::List => {
            for c in CHECKS.iter().chain(HUNTS) {
                emit(&format!("{:<4} {}", c.id, c.statement));
            }
            ExitCode::SUCCESS
        }
    }
}
