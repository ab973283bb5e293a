use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use layerlens::bounds::{self, default_table, Applicability, CoefficientTable};
use layerlens::decomposition::{build_path_decomposition, validate_decomposition};
use layerlens::export::{export, ExportFormat};
use layerlens::reproduce::{self, ReproduceOptions};
use layerlens::search::{self, max_density_with, AbstractBipartiteGraph, Constraint, SearchOptions};
use layerlens::{analyze, Drawing, Family, FamilySpec};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_REPRODUCE: u8 = 3;

#[derive(Parser)]
#[command(name = "layerlens", version, about = "Analyze and search 2-layer k-planar drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family instance or a seeded random drawing as Drawing JSON.
    Gen(GenArgs),
    /// Report crossings, bricks, pathwidth and bound checks for a drawing.
    Analyze {
        drawing: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact maximum edge count over all n-vertex 2-layer drawings.
    Search(SearchArgs),
    /// Minimum over all vertex orders of the maximum per-edge crossings.
    Minimax {
        /// Drawing whose underlying graph is used.
        #[arg(required_unless_present = "complete", conflicts_with = "complete")]
        drawing: Option<PathBuf>,
        /// Complete bipartite graph `A,B`.
        #[arg(long, value_parser = parse_pair)]
        complete: Option<(usize, usize)>,
    },
    /// Build and validate the path decomposition of a drawing.
    Pathwidth {
        drawing: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Density upper bound, general lower bound and quasiplanar threshold for k.
    Bounds {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: Option<usize>,
        /// Coefficient table JSON.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Crossing lower bounds for n vertices and m edges.
    CrossingBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Render a drawing as DOT, SVG or CSV.
    Export {
        drawing: PathBuf,
        #[arg(long)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every reproduction check and emit a pass/fail CSV.
    Reproduce {
        #[arg(long, env = "LAYERLENS_THREADS", default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = ReproduceOptions::default().seed)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, required_unless_present = "random")]
    family: Option<Family>,
    #[arg(long, required_unless_present = "random")]
    size: Option<usize>,
    /// Target k for `general_k`.
    #[arg(long)]
    k: Option<u32>,
    /// Random drawing `P,Q,M` instead of a family.
    #[arg(long, value_parser = parse_triple, conflicts_with_all = ["family", "size", "k"])]
    random: Option<(usize, usize, usize)>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, required_unless_present = "quasi", conflicts_with = "quasi")]
    k: Option<u32>,
    #[arg(long)]
    quasi: Option<u32>,
    #[arg(long, env = "LAYERLENS_THREADS", default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    witness: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    match parse_list(s)?.as_slice() {
        &[a, b] => Ok((a, b)),
        _ => Err(format!("expected `A,B`, got `{s}`")),
    }
}

fn parse_triple(s: &str) -> Result<(usize, usize, usize), String> {
    match parse_list(s)?.as_slice() {
        &[a, b, c] => Ok((a, b, c)),
        _ => Err(format!("expected `P,Q,M`, got `{s}`")),
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',').map(|t| t.trim().parse().map_err(|e| format!("`{t}`: {e}"))).collect()
}

macro_rules! say {
    ($out:expr) => {
        $out.push('\n')
    };
    ($out:expr, $($arg:tt)*) => {{
        let _ = writeln!($out, $($arg)*);
    }};
}

macro_rules! put {
    ($out:expr, $($arg:tt)*) => {{
        let _ = write!($out, $($arg)*);
    }};
}

/// Failure carrying its exit code.
struct Failure(u8, String);

fn input(msg: impl ToString) -> Failure {
    Failure(EXIT_INPUT, msg.to_string())
}

fn read_drawing(path: &Path) -> Result<Drawing, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    Drawing::from_json(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_table(path: Option<&PathBuf>) -> Result<CoefficientTable, Failure> {
    match path {
        None => Ok(default_table()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| input(format!("{}: {e}", p.display())))?;
            CoefficientTable::from_json(&text).map_err(|e| input(format!("{}: {e}", p.display())))
        }
    }
}

fn emit(path: Option<&PathBuf>, text: &str, out: &mut String) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| input(format!("{}: {e}", p.display()))),
        None => {
            out.push_str(text);
            if !text.ends_with('\n') {
                out.push('\n');
            }
            Ok(())
        }
    }
}

fn run(cmd: Command, out: &mut String) -> Result<(), Failure> {
    match cmd {
        Command::Gen(a) => {
            let d = match a.random {
                Some((p, q, m)) => search::random_drawing(p, q, m, a.seed).map_err(input)?,
                None => {
                    let family = a.family.expect("required by clap");
                    let size = a.size.expect("required by clap");
                    let spec = match (family, a.k) {
                        (Family::GeneralK, Some(k)) => FamilySpec::general_k(size, k),
                        (Family::GeneralK, None) => return Err(Failure(EXIT_USAGE, "general_k needs --k".into())),
                        (f, _) => FamilySpec::new(f, size),
                    };
                    spec.build().map_err(input)?
                }
            };
            emit(a.out.as_ref(), &d.to_json(), out)
        }
        Command::Analyze { drawing, json } => {
            let report = analyze(&read_drawing(&drawing)?, &default_table());
            emit(None, &if json { report.to_json() } else { report.to_text() }, out)
        }
        Command::Search(a) => {
            let constraint = match (a.k, a.quasi) {
                (Some(k), _) => Constraint::KPlanar(k),
                (None, Some(h)) => Constraint::Quasiplanar(h),
                (None, None) => unreachable!("required by clap"),
            };
            let r = max_density_with(a.n, constraint, SearchOptions { threads: a.threads.max(1) }).map_err(input)?;
            let millis = r.stats.elapsed.as_millis();
            say!(out, "n={} {} best_m={} nodes={} millis={}", r.n, r.constraint, r.best_m, r.stats.nodes, millis);
            say!(out, "witness p={} q={} {}", r.witness.p(), r.witness.q(), r.witness.to_json());
            if a.threads <= 1 {
                say!(
                    out,
                    "note: single-threaded run; the witness is the first optimum in search order and is reproducible"
                );
            } else {
                say!(out,
                    "note: {} threads; best_m is identical to the single-threaded value, the witness may differ between runs",
                    a.threads
                );
            }
            if let Some(path) = &a.witness {
                fs::write(path, r.witness.to_json()).map_err(|e| input(format!("{}: {e}", path.display())))?;
            }
            if let Some(path) = &a.csv {
                let write = || -> Result<(), Box<dyn std::error::Error>> {
                    let mut w = csv::Writer::from_path(path)?;
                    w.write_record(["n", "constraint", "best_m", "nodes", "millis"])?;
                    w.write_record([
                        r.n.to_string(),
                        r.constraint.to_string(),
                        r.best_m.to_string(),
                        r.stats.nodes.to_string(),
                        millis.to_string(),
                    ])?;
                    w.flush()?;
                    Ok(())
                };
                write().map_err(|e| input(format!("{}: {e}", path.display())))?;
            }
            Ok(())
        }
        Command::Minimax { drawing, complete } => {
            let g = match (drawing, complete) {
                (_, Some((a, b))) => AbstractBipartiteGraph::complete(a, b),
                (Some(path), None) => AbstractBipartiteGraph::from(&read_drawing(&path)?),
                (None, None) => unreachable!("required by clap"),
            };
            let k = search::minimax_k(&g).map_err(input)?;
            say!(out, "minimax_k={k}");
            Ok(())
        }
        Command::Pathwidth { drawing, out: path } => {
            let d = read_drawing(&drawing)?;
            let pd = build_path_decomposition(&d);
            let report = validate_decomposition(&d, &pd);
            for v in &report.violations {
                eprintln!("violation {}: {v}", v.property());
            }
            eprintln!("width={} orientation={:?} valid={}", pd.width(), pd.orientation, report.is_valid());
            emit(path.as_ref(), &pd.to_json(), out)
        }
        Command::Bounds { k, n, table } => {
            let table = read_table(table.as_ref())?;
            if (k as usize) < table.t() {
                let (a, b) = (&table.alpha[k as usize], &table.beta[k as usize]);
                put!(out, "density upper bound: m <= {a} n - {b}");
                if let Some(n) = n {
                    put!(out, " = {}", a * bounds::int(n as i64) - b);
                }
                say!(out);
            } else {
                let ub = bounds::density_upper_bound(n.unwrap_or(4).max(4), k, &table).map_err(input)?;
                put!(
                    out,
                    "density upper bound: m <= {} n ~ {} n",
                    ub.factor,
                    bounds::format_sig(ub.factor.to_f64(), 3)
                );
                if let Some(n) = n {
                    put!(out, " = {}", bounds::format_sig(ub.factor.to_f64() * n as f64, 6));
                }
                say!(out);
            }
            match bounds::density_lower_bound_general(k) {
                Ok(lb) => {
                    put!(out, "general lower bound: {} n - O(1) (band width {})", lb.ell, lb.ell);
                    if let Some(n) = n {
                        put!(out, ", {} edges at n = {}", lb.edges(n / 2), 2 * (n / 2));
                    }
                    say!(out);
                }
                Err(e) => say!(out, "general lower bound: n/a ({e})"),
            }
            match bounds::quasiplanar_threshold(k) {
                Ok(h) => say!(out, "quasiplanar threshold: h = {h}"),
                Err(e) => say!(out, "quasiplanar threshold: n/a ({e})"),
            }
            Ok(())
        }
        Command::CrossingBound { n, m, table } => {
            let table = read_table(table.as_ref())?;
            match bounds::crossing_lower_bound(n, m, &table) {
                Applicability::Applicable(b) => {
                    say!(out, "crossing lemma: applicable cr >= {b} ~ {}", bounds::display(&b))
                }
                Applicability::Inapplicable(why) => say!(out, "crossing lemma: inapplicable ({why})"),
            }
            match bounds::auxiliary_lower_bound(n, m, &table) {
                Ok(b) => {
                    let c = bounds::clamp_zero(b.clone());
                    say!(out, "auxiliary bound: applicable cr >= {b} (clamped {c} ~ {})", bounds::display(&c))
                }
                Err(e) => say!(out, "auxiliary bound: inapplicable ({e})"),
            }
            Ok(())
        }
        Command::Export { drawing, format, out: path } => {
            emit(path.as_ref(), &export(&read_drawing(&drawing)?, format), out)
        }
        Command::Reproduce { threads, seed, out: path } => {
            let rows = reproduce::run_all(ReproduceOptions { threads: threads.max(1), seed });
            emit(path.as_ref(), &reproduce::to_csv(&rows), out)?;
            let failed = rows.iter().filter(|r| !r.pass).count();
            if failed == 0 {
                eprintln!("all {} rows pass", rows.len());
                Ok(())
            } else {
                Err(Failure(EXIT_REPRODUCE, format!("{failed} of {} rows failed", rows.len())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    // a closed pipe downstream is not an error
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
