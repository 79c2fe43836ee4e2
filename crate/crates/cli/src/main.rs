mod parse;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hessenberg_schubert::verify::{verify, VerifyReport, LEMMAS, MAX_VERIFY_N};
use hessenberg_schubert::{
    enumerate_weyl_subsets, fixed_points_cell, fixed_points_chl, fixed_points_interval, Exec, HessenbergFunction,
    Permutation, WeylSubset,
};
use serde_json::{json, Value};

/// Weyl-type subsets, acyclic orientations and torus-fixed points of
/// Hessenberg Schubert varieties.
///
/// Exit codes: 0 success, 1 disagreement or verification failure, 2 usage error.
#[derive(Parser)]
#[command(name = "hess-schubert", version)]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every subset of Weyl type with its class extremes and size.
    WeylSubsets {
        /// Hessenberg function, e.g. 3,4,4,4.
        #[arg(long)]
        h: String,
    },
    /// Torus-fixed points of the opposite Hessenberg Schubert variety.
    FixedPoints {
        #[arg(long)]
        h: String,
        /// Permutation in one-line notation, e.g. 2,3,1,4.
        #[arg(long, conflicts_with = "subset", required_unless_present = "subset")]
        w: Option<String>,
        /// Subset of Weyl type as pairs "i,j;i,j" (its maximal element is used).
        #[arg(long = "S", value_name = "S")]
        subset: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// The incomparability graph, oriented when a subset is given.
    Graph {
        #[arg(long)]
        h: String,
        #[arg(long = "S", value_name = "S")]
        subset: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check every lemma for all Hessenberg functions and subsets of size n.
    Verify {
        #[arg(long)]
        n: usize,
        /// Also sweep every size up to this one.
        #[arg(long)]
        max_n: Option<usize>,
        /// Restrict the run to one lemma.
        #[arg(long, value_name = "NAME")]
        paper_lemma: Option<String>,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Chl,
    Interval,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

enum Failure {
    Usage(String),
    Failed(String),
}

struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn json(value: Value, ok: bool) -> Output {
        Output {
            text: format!("{value}\n"),
            ok,
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn subset_for(h: &HessenbergFunction, text: &str) -> Result<WeylSubset, Failure> {
    WeylSubset::new(h.clone(), parse::roots(text).map_err(usage)?).map_err(|e| usage(format!("--S {text:?}: {e}")))
}

fn weyl_subsets(h: &str) -> Result<Output, Failure> {
    let h = parse::hessenberg(h).map_err(usage)?;
    let mut records: Vec<(String, Value)> = enumerate_weyl_subsets(&h)
        .iter()
        .map(|s| {
            let key = to_json(s).to_string();
            let record = json!({
                "class_size": s.class().len(),
                "subset": to_json(s),
                "w_max": to_json(&s.w_max()),
                "z_min": to_json(&s.z_min()),
            });
            (key, record)
        })
        .collect();
    records.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Output::json(
        Value::Array(records.into_iter().map(|r| r.1).collect()),
        true,
    ))
}

fn fixed_points(h: &str, w: Option<&str>, subset: Option<&str>, method: Method) -> Result<Output, Failure> {
    let h = parse::hessenberg(h).map_err(usage)?;
    enum Input {
        Perm(Permutation),
        Subset(WeylSubset),
    }
    let input = match (w, subset) {
        (Some(w), _) => {
            let w = parse::permutation(w).map_err(usage)?;
            if w.n() != h.n() {
                return Err(usage(format!("--w has size {}, --h has size {}", w.n(), h.n())));
            }
            Input::Perm(w)
        }
        (None, Some(s)) => Input::Subset(subset_for(&h, s)?),
        (None, None) => return Err(usage("one of --w or --S is required")),
    };
    let chl = || -> Result<Vec<Permutation>, Failure> {
        match &input {
            Input::Perm(w) => fixed_points_chl(w, &h),
            Input::Subset(s) => fixed_points_chl(&s.w_max(), &h),
        }
        .map_err(|e| Failure::Failed(e.to_string()))
    };
    let interval = || -> Result<Vec<Permutation>, Failure> {
        match &input {
            Input::Perm(w) => fixed_points_cell(w, &h).map_err(|e| Failure::Failed(e.to_string())),
            Input::Subset(s) => Ok(fixed_points_interval(s)),
        }
    };
    Ok(match method {
        Method::Chl => Output::json(to_json(&chl()?), true),
        Method::Interval => Output::json(to_json(&interval()?), true),
        Method::Both => {
            let (a, b) = (chl()?, interval()?);
            let agreement = a == b;
            Output::json(
                json!({"agreement": agreement, "chl": to_json(&a), "interval": to_json(&b)}),
                agreement,
            )
        }
    })
}

fn graph(h: &str, subset: Option<&str>, format: Format) -> Result<Output, Failure> {
    let h = parse::hessenberg(h).map_err(usage)?;
    let text = match (subset, format) {
        (None, Format::Dot) => h.incomparability_graph().to_dot(),
        (None, Format::Json) => format!("{}\n", to_json(&h.incomparability_graph())),
        (Some(s), Format::Dot) => subset_for(&h, s)?.orientation().to_dot(),
        (Some(s), Format::Json) => format!("{}\n", to_json(&subset_for(&h, s)?.orientation())),
    };
    Ok(Output { text, ok: true })
}

fn run_verify(n: usize, max_n: Option<usize>, lemma: Option<&str>, jobs: Option<usize>) -> Result<Output, Failure> {
    let last = max_n.unwrap_or(n);
    if n == 0 || last > MAX_VERIFY_N {
        return Err(usage(format!("verify supports sizes 1..={MAX_VERIFY_N}")));
    }
    if last < n {
        return Err(usage(format!("--max-n {last} is below --n {n}")));
    }
    if let Some(name) = lemma {
        if !LEMMAS.contains(&name) {
            return Err(usage(format!("unknown lemma {name:?}; known: {}", LEMMAS.join(", "))));
        }
    }
    if jobs == Some(0) {
        return Err(usage("--jobs must be at least 1"));
    }
    let sweep = |exec: Exec| -> Result<Vec<VerifyReport>, Failure> {
        (n..=last)
            .map(|size| verify(size, lemma, exec).map_err(|e| Failure::Failed(e.to_string())))
            .collect()
    };
    let reports = match jobs {
        Some(1) => sweep(Exec::Sequential)?,
        #[cfg(feature = "parallel")]
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Failure::Failed(e.to_string()))?
            .install(|| sweep(Exec::Parallel))?,
        _ => sweep(Exec::default())?,
    };
    let mut stderr = std::io::stderr().lock();
    for d in reports.iter().flat_map(|r| &r.discrepancies) {
        let _ = stderr.write_all(d.to_json_line().as_bytes());
    }
    let ok = reports.iter().all(|r| r.passed);
    let value = if max_n.is_some() {
        Value::Array(reports.iter().map(to_json).collect())
    } else {
        to_json(&reports[0])
    };
    Ok(Output::json(value, ok))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::WeylSubsets { h } => weyl_subsets(h),
        Command::FixedPoints { h, w, subset, method } => fixed_points(h, w.as_deref(), subset.as_deref(), *method),
        Command::Graph { h, subset, format } => graph(h, subset.as_deref(), *format),
        Command::Verify {
            n,
            max_n,
            paper_lemma,
            jobs,
        } => run_verify(*n, *max_n, paper_lemma.as_deref(), *jobs),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text).map_err(|e| format!("{}: {e}", path.display())),
                None => std::io::stdout()
                    .lock()
                    .write_all(out.text.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            match written {
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
                Ok(()) if out.ok => ExitCode::SUCCESS,
                Ok(()) => ExitCode::from(1),
            }
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
