//! `tnncell` — exact total-nonnegativity and cell-membership testing from
//! the command line.
//!
//! Exit codes: 0 for an affirmative verdict (or plain success), 1 for a
//! negative verdict, 2 for usage or input errors. Malformed input never
//! panics.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tnncell::diagram::{census, CauchonDiagram};
use tnncell::exact::{GridIndex, Matrix};
use tnncell::io;
use tnncell::lacunary::{all_lacunary_from, lacunary_from};
use tnncell::minors::{
    all_minor_specs, det_evaluations, final_minor_specs, initial_minor_specs, minor,
    reset_det_evaluations, MinorSpec,
};
use tnncell::oracle::zero_pattern;
use tnncell::recognition::{build_scheme, membership_test, CellMinorScheme};
use tnncell::reduction::{classify, random_representative, representative};
use tnncell::rng::SplitMix64;

#[derive(Parser)]
#[command(name = "tnncell", version)]
#[command(
    about = "Totally nonnegative matrix cells: classification, mp-minor membership tests, \
                   diagram enumeration and exact minor evaluation"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Decide total nonnegativity and name the cell of a matrix
    Classify {
        /// Matrix file (JSON)
        matrix: PathBuf,
    },
    /// Test membership of the cell of a diagram using mp minors
    Test {
        /// Matrix file (JSON)
        matrix: PathBuf,
        /// Diagram file (ASCII grid: '#' black, '.' white)
        diagram: PathBuf,
        /// Scheme file overriding the default per-box sequences
        #[arg(long)]
        scheme: Option<PathBuf>,
    },
    /// Count diagrams (= nonempty tnn cells) of a shape
    Census {
        rows: usize,
        cols: usize,
        /// Also count cells on which the determinant vanishes (square only)
        #[arg(long)]
        det_stats: bool,
    },
    /// Print a matrix lying in the cell of a diagram
    Representative {
        /// Diagram file (ASCII grid)
        diagram: PathBuf,
        /// Use reproducible random positive t-values instead of all ones
        #[arg(long)]
        random_seed: Option<u64>,
    },
    /// Export the default mp-minor scheme of a diagram
    Scheme {
        /// Diagram file (ASCII grid)
        diagram: PathBuf,
    },
    /// Construct lacunary sequences for a diagram
    Lacunary {
        /// Diagram file (ASCII grid)
        diagram: PathBuf,
        /// Only this start box, as `row col` (default: every box)
        #[arg(long, value_names = ["ROW", "COL"], num_args = 2)]
        r#box: Option<Vec<usize>>,
        /// List every sequence per box instead of the constructed one
        #[arg(long)]
        all: bool,
    },
    /// Evaluate minors of a matrix
    Minors {
        /// Matrix file (JSON)
        matrix: PathBuf,
        /// Which family to evaluate
        #[arg(long, value_enum, default_value_t = MinorSet::Final)]
        set: MinorSet,
        /// Evaluate a single minor, e.g. --spec "1,3|1,2"
        #[arg(long, conflicts_with = "set")]
        spec: Option<String>,
    },
    /// Compare the n²-minor membership test against the all-minors sweep
    Bench {
        /// Square size (at most 8: the sweep side grows exponentially)
        n: usize,
        /// Number of random cell representatives to run
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MinorSet {
    All,
    Final,
    Initial,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Classify { matrix } => cmd_classify(&matrix, cli.format),
        Command::Test {
            matrix,
            diagram,
            scheme,
        } => cmd_test(&matrix, &diagram, scheme.as_deref(), cli.format),
        Command::Census {
            rows,
            cols,
            det_stats,
        } => cmd_census(rows, cols, det_stats, cli.format),
        Command::Representative {
            diagram,
            random_seed,
        } => cmd_representative(&diagram, random_seed, cli.format),
        Command::Scheme { diagram } => cmd_scheme(&diagram, cli.format),
        Command::Lacunary {
            diagram,
            r#box,
            all,
        } => cmd_lacunary(&diagram, r#box, all, cli.format),
        Command::Minors { matrix, set, spec } => cmd_minors(&matrix, set, spec, cli.format),
        Command::Bench { n, trials } => cmd_bench(n, trials, cli.format),
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_matrix(path: &Path) -> Result<Matrix, String> {
    io::matrix_from_json(&read_file(path)?).map_err(|e| e.to_string())
}

fn load_diagram(path: &Path) -> Result<CauchonDiagram, String> {
    CauchonDiagram::parse_ascii(&read_file(path)?).map_err(|e| e.to_string())
}

fn cmd_classify(matrix: &Path, format: Format) -> Result<ExitCode, String> {
    let m = load_matrix(matrix)?;
    let cell = classify(&m);
    match format {
        Format::Json => println!("{}", io::classification_to_json(&cell)),
        Format::Text => {
            println!("tnn: {}", if cell.is_tnn() { "yes" } else { "no" });
            if let Some(d) = &cell.diagram {
                println!("diagram:\n{}", d.to_ascii().trim_end());
            }
            println!("t-matrix:\n{}", cell.t_matrix.to_string().trim_end());
        }
    }
    Ok(ExitCode::from(if cell.is_tnn() { 0 } else { 1 }))
}

fn cmd_test(
    matrix: &Path,
    diagram: &Path,
    scheme: Option<&Path>,
    format: Format,
) -> Result<ExitCode, String> {
    let m = load_matrix(matrix)?;
    let d = load_diagram(diagram)?;
    let scheme = match scheme {
        Some(path) => {
            let s = io::scheme_from_json(&read_file(path)?).map_err(|e| e.to_string())?;
            if s.diagram() != &d {
                return Err("scheme file is for a different diagram".into());
            }
            s
        }
        None => build_scheme(&d),
    };
    let report = membership_test(&m, &scheme).map_err(|e| e.to_string())?;
    match format {
        Format::Json => println!("{}", io::report_to_json(&report)),
        Format::Text => {
            for b in &report.boxes {
                println!(
                    "{} {} = {} (expect {})",
                    if b.pass { "ok  " } else { "FAIL" },
                    b.spec,
                    b.value,
                    b.expected.as_str(),
                );
            }
            println!(
                "verdict: {}",
                if report.verdict {
                    "member"
                } else {
                    "not a member"
                }
            );
        }
    }
    Ok(ExitCode::from(if report.verdict { 0 } else { 1 }))
}

#[derive(Serialize)]
struct CensusOut {
    total: u64,
    #[serde(rename = "detVanishing", skip_serializing_if = "Option::is_none")]
    det_vanishing: Option<u64>,
}

fn cmd_census(
    rows: usize,
    cols: usize,
    det_stats: bool,
    format: Format,
) -> Result<ExitCode, String> {
    let result = census(rows, cols, det_stats, false).map_err(|e| e.to_string())?;
    match format {
        Format::Json => {
            let out = CensusOut {
                total: result.total,
                det_vanishing: result.det_vanishing,
            };
            println!(
                "{}",
                serde_json::to_string(&out).expect("census serializes")
            );
        }
        Format::Text => {
            println!("diagrams: {}", result.total);
            if let Some(v) = result.det_vanishing {
                println!("determinant vanishes on: {v}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_representative(
    diagram: &Path,
    random_seed: Option<u64>,
    format: Format,
) -> Result<ExitCode, String> {
    let d = load_diagram(diagram)?;
    let m = match random_seed {
        Some(seed) => random_representative(&d, seed),
        None => representative(&d),
    };
    match format {
        Format::Json => println!("{}", io::matrix_to_json(&m)),
        Format::Text => print!("{m}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_scheme(diagram: &Path, format: Format) -> Result<ExitCode, String> {
    let d = load_diagram(diagram)?;
    let scheme = build_scheme(&d);
    match format {
        Format::Json => println!("{}", io::scheme_to_json(&scheme)),
        Format::Text => print_scheme_text(&scheme),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_scheme_text(scheme: &CellMinorScheme) {
    for e in scheme.entries() {
        println!("{}: {} -> {}", e.position, e.sequence, e.spec);
    }
}

fn cmd_lacunary(
    diagram: &Path,
    r#box: Option<Vec<usize>>,
    all: bool,
    format: Format,
) -> Result<ExitCode, String> {
    let d = load_diagram(diagram)?;
    let starts: Vec<GridIndex> = match r#box {
        Some(pair) => vec![GridIndex::new(pair[0], pair[1])],
        None => tnncell::exact::grid_positions(d.rows(), d.cols()).collect(),
    };
    let mut entries = Vec::new();
    for start in starts {
        let sequences: Vec<Vec<[usize; 2]>> = if all {
            all_lacunary_from(&d, start)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|s| s.points().iter().map(|p| [p.row, p.col]).collect())
                .collect()
        } else {
            let s = lacunary_from(&d, start).map_err(|e| e.to_string())?;
            vec![s.points().iter().map(|p| [p.row, p.col]).collect()]
        };
        entries.push((start, sequences));
    }
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = entries
                .iter()
                .map(|(start, seqs)| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("box".into(), serde_json::json!([start.row, start.col]));
                    if all {
                        obj.insert("sequences".into(), serde_json::json!(seqs));
                    } else {
                        obj.insert("sequence".into(), serde_json::json!(seqs[0]));
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
        Format::Text => {
            for (start, seqs) in &entries {
                for seq in seqs {
                    let pts: Vec<String> = seq.iter().map(|[i, a]| format!("({i},{a})")).collect();
                    println!("{start}: {}", pts.join(" "));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_minors(
    matrix: &Path,
    set: MinorSet,
    spec: Option<String>,
    format: Format,
) -> Result<ExitCode, String> {
    let m = load_matrix(matrix)?;
    let specs: Vec<MinorSpec> = match spec {
        Some(text) => vec![MinorSpec::parse(&text).map_err(|e| e.to_string())?],
        None => match set {
            MinorSet::All => {
                let count = count_all_minors(m.rows(), m.cols());
                if count > 100_000 {
                    return Err(format!(
                        "{count} minors is too many to list; use --set final or --spec"
                    ));
                }
                all_minor_specs(m.rows(), m.cols())
            }
            MinorSet::Final => final_minor_specs(m.rows(), m.cols()),
            MinorSet::Initial => initial_minor_specs(m.rows(), m.cols()),
        },
    };
    let mut rendered = Vec::new();
    for s in &specs {
        let value = minor(&m, s).map_err(|e| e.to_string())?;
        rendered.push((s, value));
    }
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct MinorOut {
                spec: String,
                rows: Vec<usize>,
                cols: Vec<usize>,
                value: String,
            }
            let items: Vec<MinorOut> = rendered
                .iter()
                .map(|(s, v)| MinorOut {
                    spec: s.to_string(),
                    rows: s.rows().to_vec(),
                    cols: s.cols().to_vec(),
                    value: v.to_string(),
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string(&items).expect("minors serialize")
            );
        }
        Format::Text => {
            for (s, v) in &rendered {
                println!("{s} = {v}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn count_all_minors(rows: usize, cols: usize) -> u128 {
    // C(rows+cols, min) − 1
    let (n, k) = ((rows + cols) as u128, rows.min(cols) as u128);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc - 1
}

fn cmd_bench(n: usize, trials: usize, format: Format) -> Result<ExitCode, String> {
    if n == 0 || n > 8 {
        return Err("bench size must be between 1 and 8".into());
    }
    if trials == 0 {
        return Err("at least one trial is required".into());
    }
    let mut rng = SplitMix64::new(0xbe5c);
    let mut fast_total = Duration::ZERO;
    let mut slow_total = Duration::ZERO;
    let mut fast_count = 0u64;
    let mut slow_count = 0u64;
    for _ in 0..trials {
        let d = CauchonDiagram::random(n, n, &mut rng);
        let m = random_representative(&d, rng.next_u64());
        let scheme = build_scheme(&d);

        reset_det_evaluations();
        let start = Instant::now();
        let report = membership_test(&m, &scheme).map_err(|e| e.to_string())?;
        fast_total += start.elapsed();
        fast_count += det_evaluations();
        if !report.verdict {
            return Err("internal: representative rejected by its own scheme".into());
        }

        reset_det_evaluations();
        let start = Instant::now();
        zero_pattern(&m).map_err(|e| e.to_string())?;
        slow_total += start.elapsed();
        slow_count += det_evaluations();
    }
    let per_trial_fast = fast_count / trials as u64;
    let per_trial_slow = slow_count / trials as u64;
    let speedup = slow_total.as_secs_f64() / fast_total.as_secs_f64().max(1e-9);
    match format {
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct Side {
                minors_per_trial: u64,
                total_ms: f64,
            }
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct BenchOut {
                n: usize,
                trials: usize,
                membership: Side,
                all_minors: Side,
                speedup: f64,
            }
            let out = BenchOut {
                n,
                trials,
                membership: Side {
                    minors_per_trial: per_trial_fast,
                    total_ms: fast_total.as_secs_f64() * 1e3,
                },
                all_minors: Side {
                    minors_per_trial: per_trial_slow,
                    total_ms: slow_total.as_secs_f64() * 1e3,
                },
                speedup,
            };
            println!("{}", serde_json::to_string(&out).expect("bench serializes"));
        }
        Format::Text => {
            println!("n = {n}, trials = {trials}");
            println!(
                "  membership test: {per_trial_fast:>6} minors/trial  total {:>10.3} ms",
                fast_total.as_secs_f64() * 1e3
            );
            println!(
                "  all-minor sweep: {per_trial_slow:>6} minors/trial  total {:>10.3} ms",
                slow_total.as_secs_f64() * 1e3
            );
            println!("  speedup: {speedup:.1}x");
        }
    }
    Ok(ExitCode::SUCCESS)
}
