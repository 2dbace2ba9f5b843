//! `nakayama`: command-line access to the library.
//!
//! Every command prints a single JSON report on stdout except `survey`, which
//! streams one verdict per line followed by a summary object. Exit codes: 0 on
//! success, 1 when a counterexample or oracle mismatch is found, 2 for invalid
//! input.

use std::fs::{File, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nakayama::homext::{self, ExtProfile};
use nakayama::modrep::{self, Indecomposable};
use nakayama::oracle;
use nakayama::theorems::{self, Builtin, Check, CheckId, Status, Verdict};
use nakayama::{enumerate, Kind, KupischSeries};

/// Default output directory for survey reports when `--out` is not given.
const OUT_DIR_ENV: &str = "NAKAYAMA_OUT_DIR";

#[derive(Parser)]
#[command(name = "nakayama", version, about = "Homological computations over Nakayama algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct SeriesArg {
    /// Kupisch series, either `kind:c0,c1,...` or `c0,c1,...` with `--kind`.
    #[arg(long)]
    series: String,
    /// Quiver kind for a bare series.
    #[arg(long, value_enum, default_value_t = KindArg::Cyclic)]
    kind: KindArg,
}

#[derive(Copy, Clone, ValueEnum)]
enum KindArg {
    Cyclic,
    Linear,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Cyclic => Kind::Cyclic,
            KindArg::Linear => Kind::Linear,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Jsonl,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Kupisch series.
    Validate(SeriesArg),
    /// Describe one indecomposable module.
    Module {
        #[command(flatten)]
        series: SeriesArg,
        /// Module as `i,k`.
        #[arg(long = "m")]
        module: String,
    },
    /// dim Hom(N, M).
    Hom {
        #[command(flatten)]
        series: SeriesArg,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Recompute with explicit matrices and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// dim Ext^l(N, M) for 0 <= l <= max-degree.
    Ext {
        #[command(flatten)]
        series: SeriesArg,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Defaults to max(2 (rho + pi), 50).
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        oracle: bool,
    },
    /// Rigidity and the infinite self-extension certificate of M.
    Selfext {
        #[command(flatten)]
        series: SeriesArg,
        #[arg(long = "m")]
        module: String,
    },
    /// Global dimension.
    Gldim(SeriesArg),
    /// Injective dimensions of the regular module on both sides.
    Gorenstein(SeriesArg),
    /// Run one named check on one algebra (replays survey verdicts).
    Check {
        #[command(flatten)]
        series: SeriesArg,
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = theorems::DEFAULT_HORIZON)]
        horizon: usize,
    },
    /// Sweep checks over every algebra in a range.
    Survey {
        #[arg(long, value_enum, default_value_t = KindArg::Cyclic)]
        kind: KindArg,
        /// Vertex counts, `a..b` (inclusive) or a single number.
        #[arg(long)]
        n: String,
        #[arg(long)]
        max_loewy: usize,
        /// `all` or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Keep one series per rotation class.
        #[arg(long)]
        dedupe: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
        /// Skip this many algebras and append to `--out`.
        #[arg(long, default_value_t = 0)]
        resume_from: usize,
        #[arg(long, default_value_t = theorems::DEFAULT_HORIZON)]
        horizon: usize,
        /// Also compare every Hom/Ext dimension against the matrix oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Reproduce a worked example: 1.5 and 1.6 use the series [2,...,2,3]
    /// with `--n` entries, 2.2 is K[x]/(x^3).
    Paper {
        #[arg(long)]
        example: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

/// Outcome of a command, mapped onto the exit code.
enum Outcome {
    Ok,
    Counterexample,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Other(anyhow::Error),
}

impl From<nakayama::Error> for CliError {
    fn from(e: nakayama::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Other(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Other(e.into())
    }
}

fn parse_series(arg: &SeriesArg) -> Result<KupischSeries, CliError> {
    if arg.series.contains(':') {
        Ok(arg.series.parse()?)
    } else {
        let seq = nakayama::kupisch::parse_seq(&arg.series)?;
        Ok(KupischSeries::validate(arg.kind.into(), &seq)?)
    }
}

fn parse_module(a: &KupischSeries, s: &str) -> Result<Indecomposable, CliError> {
    let m: Indecomposable = s.parse()?;
    Ok(Indecomposable::new(a, m.i, m.k)?)
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Input(format!("expected a range `a..b` or a number, got `{s}`"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn report(command: &str, algebra: Option<&KupischSeries>, inputs: Value, outputs: Value, start: Instant) {
    let r = json!({
        "command": command,
        "algebra": algebra,
        "inputs": inputs,
        "outputs": outputs,
        "version": env!("CARGO_PKG_VERSION"),
        "elapsed_ms": start.elapsed().as_secs_f64() * 1e3,
    });
    println!("{r}");
}

fn status_outcome(s: Status) -> Outcome {
    match s {
        Status::Counterexample => Outcome::Counterexample,
        _ => Outcome::Ok,
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    match cli.command {
        Command::Validate(arg) => {
            let a = parse_series(&arg)?;
            report(
                "validate",
                Some(&a),
                json!({ "series": arg.series }),
                json!({
                    "valid": true,
                    "n": a.n(),
                    "dim": a.dim(),
                    "loewy_length": a.loewy_length(),
                    "selfinjective": a.is_selfinjective(),
                    "opposite": a.opposite(),
                }),
                start,
            );
            Ok(Outcome::Ok)
        }
        Command::Module { series, module } => {
            let a = parse_series(&series)?;
            let m = parse_module(&a, &module)?;
            let (pd, orbit) = modrep::projective_dimension(&a, m);
            let injdim = modrep::injective_dimension(&a, m);
            report(
                "module",
                Some(&a),
                json!({ "m": m }),
                json!({
                    "dimension_vector": modrep::dimension_vector(&a, m),
                    "top": modrep::top(&a, m),
                    "socle": modrep::socle(&a, m),
                    "projective": m.is_projective(&a),
                    "injective": injdim == modrep::Dimension::Finite(0),
                    "syzygy": modrep::syzygy(&a, m),
                    "dual": modrep::dual(&a, m),
                    "pd": pd,
                    "injdim": injdim,
                    "orbit": orbit,
                }),
                start,
            );
            Ok(Outcome::Ok)
        }
        Command::Hom { series, from, to, oracle: use_oracle } => {
            let a = parse_series(&series)?;
            let (n, m) = (parse_module(&a, &from)?, parse_module(&a, &to)?);
            let dim = homext::hom_dim(&a, n, m);
            let mut out = json!({ "hom_dim": dim });
            let mut outcome = Outcome::Ok;
            if use_oracle {
                let slow = oracle::hom_dim_oracle(&a, n, m);
                out["oracle_hom_dim"] = json!(slow);
                out["agree"] = json!(slow == dim);
                if slow != dim {
                    outcome = Outcome::Counterexample;
                }
            }
            report("hom", Some(&a), json!({ "from": n, "to": m }), out, start);
            Ok(outcome)
        }
        Command::Ext { series, from, to, max_degree, oracle: use_oracle } => {
            let a = parse_series(&series)?;
            let (n, m) = (parse_module(&a, &from)?, parse_module(&a, &to)?);
            let horizon = max_degree.unwrap_or_else(|| homext::default_horizon(&a, n));
            if horizon == 0 {
                return Err(CliError::Input("--max-degree must be at least 1".into()));
            }
            let profile: ExtProfile = homext::ext_dims(&a, n, m, horizon);
            let mut out = serde_json::to_value(&profile).map_err(anyhow::Error::from)?;
            let mut outcome = Outcome::Ok;
            if use_oracle {
                let slow = oracle::ext_dims_oracle(&a, n, m, horizon);
                out["oracle_dims"] = json!(slow);
                out["agree"] = json!(slow == profile.dims);
                if slow != profile.dims {
                    outcome = Outcome::Counterexample;
                }
            }
            report(
                "ext",
                Some(&a),
                json!({ "from": n, "to": m, "max_degree": horizon }),
                out,
                start,
            );
            Ok(outcome)
        }
        Command::Selfext { series, module } => {
            let a = parse_series(&series)?;
            let m = parse_module(&a, &module)?;
            let ext1 = homext::ext_dims(&a, m, m, 1).dims[1];
            let cert = homext::has_infinitely_many_selfext(&a, m);
            report(
                "selfext",
                Some(&a),
                json!({ "m": m }),
                json!({
                    "rigid": ext1 == 0,
                    "ext1": ext1,
                    "criterion": homext::nonrigidity_criterion(&a, m),
                    "certificate": cert,
                }),
                start,
            );
            Ok(Outcome::Ok)
        }
        Command::Gldim(arg) => {
            let a = parse_series(&arg)?;
            report(
                "gldim",
                Some(&a),
                json!({}),
                json!({ "gldim": modrep::global_dimension(&a) }),
                start,
            );
            Ok(Outcome::Ok)
        }
        Command::Gorenstein(arg) => {
            let a = parse_series(&arg)?;
            let g = modrep::gorenstein(&a);
            report(
                "gorenstein",
                Some(&a),
                json!({}),
                serde_json::to_value(g).map_err(anyhow::Error::from)?,
                start,
            );
            Ok(Outcome::Ok)
        }
        Command::Check { series, id, horizon } => {
            let a = parse_series(&series)?;
            let id: CheckId = id.parse()?;
            let v = Builtin { id, horizon }.run(&a);
            println!("{}", serde_json::to_string(&v).map_err(anyhow::Error::from)?);
            Ok(status_outcome(v.status))
        }
        Command::Paper { example, n } => {
            let v: Verdict = match example.as_str() {
                "1.5" | "1.6" => theorems::reproduce_example_223(n)?,
                "2.2" => theorems::reproduce_example_kx3(),
                other => {
                    return Err(CliError::Input(format!(
                        "unknown example `{other}`, expected 1.5, 1.6 or 2.2"
                    )))
                }
            };
            let status = v.status;
            report(
                "paper",
                Some(&v.algebra.clone()),
                json!({ "example": example, "n": n }),
                serde_json::to_value(v).map_err(anyhow::Error::from)?,
                start,
            );
            Ok(status_outcome(status))
        }
        Command::Survey {
            kind,
            n,
            max_loewy,
            checks,
            dedupe,
            jobs,
            out,
            format,
            resume_from,
            horizon,
            oracle: use_oracle,
        } => survey(SurveyArgs {
            kind: kind.into(),
            n,
            max_loewy,
            checks,
            dedupe,
            jobs,
            out,
            format,
            resume_from,
            horizon,
            use_oracle,
            start,
        }),
    }
}

struct SurveyArgs {
    kind: Kind,
    n: String,
    max_loewy: usize,
    checks: String,
    dedupe: bool,
    jobs: usize,
    out: Option<PathBuf>,
    format: Format,
    resume_from: usize,
    horizon: usize,
    use_oracle: bool,
    start: Instant,
}

fn survey(args: SurveyArgs) -> Result<Outcome, CliError> {
    let (lo, hi) = parse_range(&args.n)?;
    if args.max_loewy < 2 {
        return Err(CliError::Input("--max-loewy must be at least 2".into()));
    }
    let mut ids: Vec<CheckId> = if args.checks.trim() == "all" {
        CheckId::ALL.to_vec()
    } else {
        args.checks
            .split(',')
            .map(str::parse)
            .collect::<Result<_, _>>()?
    };
    if args.use_oracle && !ids.contains(&CheckId::OracleAgreement) {
        ids.push(CheckId::OracleAgreement);
    }
    let builtins: Vec<Builtin> = ids
        .iter()
        .map(|&id| Builtin { id, horizon: args.horizon })
        .collect();
    let checks: Vec<&dyn Check> = builtins.iter().map(|b| b as &dyn Check).collect();

    let mut notes = Vec::new();
    if args.kind == Kind::Linear && lo == 1 {
        notes.push("linear n = 1 is semisimple and excluded".to_string());
    }
    let (kind, max_loewy, dedupe) = (args.kind, args.max_loewy, args.dedupe);
    let algebras = (lo..=hi)
        .flat_map(move |n| enumerate(kind, n, max_loewy, dedupe))
        .skip(args.resume_from);

    let path = args.out.clone().or_else(|| {
        std::env::var_os(OUT_DIR_ENV).map(|dir| {
            PathBuf::from(dir).join(format!("survey-{kind}-n{lo}-{hi}-L{max_loewy}.jsonl"))
        })
    });
    let mut sink: Box<dyn Write> = match &path {
        Some(p) => {
            let file: File = if args.resume_from > 0 {
                OpenOptions::new().create(true).append(true).open(p)
            } else {
                File::create(p)
            }
            .with_context(|| format!("opening {}", p.display()))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    if matches!(args.format, Format::Tsv) && args.resume_from == 0 {
        writeln!(sink, "algebra\tcheck\tstatus\tdetail")?;
    }
    let format = args.format;
    let summary = theorems::survey_each(algebras, &checks, args.jobs, |v| -> io::Result<()> {
        match format {
            Format::Jsonl => writeln!(sink, "{}", serde_json::to_string(v)?),
            Format::Tsv => {
                let detail = match (&v.reason, &v.witness) {
                    (Some(r), _) => r.clone(),
                    (None, Some(w)) => w.to_string(),
                    (None, None) => String::new(),
                };
                let status = serde_json::to_value(v.status)?;
                writeln!(
                    sink,
                    "{}\t{}\t{}\t{}",
                    v.algebra,
                    v.check,
                    status.as_str().unwrap_or_default(),
                    detail
                )
            }
        }
    })?;
    let record = json!({
        "summary": summary,
        "command": "survey",
        "inputs": {
            "kind": args.kind,
            "n": [lo, hi],
            "max_loewy": args.max_loewy,
            "checks": ids.iter().map(|c| c.as_str()).collect::<Vec<_>>(),
            "dedupe": args.dedupe,
            "resume_from": args.resume_from,
            "horizon": args.horizon,
        },
        "notes": notes,
        "version": env!("CARGO_PKG_VERSION"),
        "elapsed_ms": args.start.elapsed().as_secs_f64() * 1e3,
    });
    match args.format {
        Format::Jsonl => writeln!(sink, "{record}")?,
        Format::Tsv => writeln!(sink, "# {record}")?,
    }
    sink.flush()?;
    if path.is_some() {
        eprintln!("{record}");
    }
    Ok(if summary.totals.counterexample > 0 {
        Outcome::Counterexample
    } else {
        Outcome::Ok
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Counterexample) => ExitCode::from(1),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
