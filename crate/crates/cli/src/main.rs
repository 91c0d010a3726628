use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use frobenius_core::bounds::{
    bound_bdr_sqrt, bound_davison_lower, bound_erdos_graham, bound_selmer, bound_vitek,
    frobenius_upper_new_with, sigma_lower_combined,
};
use frobenius_core::dedekind::{sigma_naive, sigma_via_rademacher};
use frobenius_core::experiments::{format_real, read_records_csv, run_experiment, summarize, write_records_csv};
use frobenius_core::frobenius::frobenius;
use frobenius_core::partition::partition_count_closed;
use frobenius_core::{BoundOptions, Combine, Error, ExperimentConfig, Rational, SigmaArgs, SummaryStats, Triple};

#[derive(Parser)]
#[command(name = "frobenius", version, about = "Frobenius numbers, Dedekind sums and upper bounds")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Frobenius number of two or more values.
    Exact {
        #[arg(required = true, num_args = 2..)]
        values: Vec<i64>,
    },
    /// Upper and lower bounds for a pairwise coprime triple.
    Bound {
        #[arg(long, value_enum, default_value_t = Method::New)]
        method: Method,
        #[arg(long, default_value_t = 2)]
        iterations: u32,
        #[arg(long, value_enum, default_value_t = CombineArg::Min)]
        combine: CombineArg,
        a: i64,
        b: i64,
        c: i64,
    },
    /// The Fourier-Dedekind sum σ_t(a, b; c) or a lower bound for it.
    #[command(allow_negative_numbers = true)]
    Sigma {
        t: i64,
        a: i64,
        b: i64,
        c: i64,
        #[arg(long, value_enum, default_value_t = SigmaMode::Naive)]
        mode: SigmaMode,
        #[arg(long, default_value_t = 2)]
        iterations: u32,
    },
    /// Number of partitions of n into parts a, b, c.
    Partition { n: u64, a: i64, b: i64, c: i64 },
    /// Seeded random-triple study written as CSV.
    Experiment {
        #[arg(long, default_value_t = 2000)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        min: i64,
        #[arg(long, default_value_t = 750)]
        max: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        iterations: u32,
        #[arg(long, value_enum, default_value_t = CombineArg::Min)]
        combine: CombineArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Summary statistics of an experiment CSV.
    Summarize { file: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    New,
    ErdosGraham,
    Selmer,
    Vitek,
    Davison,
    Bdr,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum CombineArg {
    Min,
    Max,
}

impl From<CombineArg> for Combine {
    fn from(c: CombineArg) -> Self {
        match c {
            CombineArg::Min => Combine::Min,
            CombineArg::Max => Combine::Max,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SigmaMode {
    Naive,
    Rademacher,
    Lower,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonIntegralPartition { .. } | Error::NegativeRadicand { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Exact { values } => exact(values, cli.json),
        Command::Bound {
            method,
            iterations,
            combine,
            a,
            b,
            c,
        } => {
            let opts = BoundOptions {
                iterations: *iterations,
                combine: (*combine).into(),
                ..BoundOptions::default()
            };
            bound(*method, &opts, (*a, *b, *c), cli.json)
        }
        Command::Sigma {
            t,
            a,
            b,
            c,
            mode,
            iterations,
        } => sigma(SigmaArgs::new(*t, *a, *b, *c)?, *mode, *iterations, cli.json),
        Command::Partition { n, a, b, c } => {
            let count = partition_count_closed(*n, *a, *b, *c)?;
            emit(cli.json, json!({ "n": n, "a": a, "b": b, "c": c, "count": count }), &count.to_string());
            Ok(())
        }
        Command::Experiment {
            count,
            min,
            max,
            seed,
            iterations,
            combine,
            out,
        } => {
            let cfg = ExperimentConfig {
                count: *count,
                min: *min,
                max: *max,
                seed: *seed,
                iterations: *iterations,
                combine: (*combine).into(),
            };
            experiment(&cfg, out, cli.json)
        }
        Command::Summarize { file } => {
            let f = File::open(file).map_err(|e| Failure::Usage(format!("cannot open {}: {e}", file.display())))?;
            let records = read_records_csv(f)?;
            print_summary(&summarize(&records)?, cli.json);
            Ok(())
        }
    }
}

fn emit(as_json: bool, value: Value, text: &str) {
    if as_json {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn exact(values: &[i64], as_json: bool) -> Outcome {
    let g = frobenius(values)?;
    let mut text = format!("g = {g}");
    let mut out = json!({ "values": values, "g": g });
    if values.len() == 3 {
        let f = g + values.iter().sum::<i64>();
        text.push_str(&format!("\nf = {f}"));
        out["f"] = json!(f);
    }
    emit(as_json, out, &text);
    Ok(())
}

fn validate_triple(a: i64, b: i64, c: i64) -> Result<Triple, Failure> {
    Triple::new(a, b, c).map_err(|e| {
        Failure::Usage(format!(
            "{e}; bounds need three distinct pairwise coprime values, use `exact` for other inputs"
        ))
    })
}

fn bound(method: Method, opts: &BoundOptions, (a, b, c): (i64, i64, i64), as_json: bool) -> Outcome {
    let t = validate_triple(a, b, c)?;
    let parts = t.parts();
    let all = [
        ("new", Method::New, Value::from(frobenius_upper_new_with(&t, opts)?.g_upper)),
        ("erdos-graham", Method::ErdosGraham, Value::from(bound_erdos_graham(&parts))),
        ("selmer", Method::Selmer, Value::from(bound_selmer(&parts))),
        ("vitek", Method::Vitek, Value::from(bound_vitek(&parts))),
        ("davison", Method::Davison, Value::from(bound_davison_lower(&t))),
        ("bdr", Method::Bdr, Value::from(bound_bdr_sqrt(&t))),
    ];
    let chosen: Vec<_> = all
        .into_iter()
        .filter(|(_, m, _)| method == Method::All || *m == method)
        .map(|(name, m, g)| (name, g.clone(), shift(&g, t.sum(), m == Method::Davison)))
        .collect();

    if as_json {
        let rows: Vec<Value> = chosen
            .iter()
            .map(|(name, g, f)| json!({ "method": name, "g": g, "f": f }))
            .collect();
        println!("{}", json!({ "a": t.a(), "b": t.b(), "c": t.c(), "bounds": rows }));
    } else if let [(_, g, f)] = &chosen[..] {
        println!("{}", show(g));
        println!("f = {}", show(f));
    } else {
        for (name, g, f) in &chosen {
            println!("{name:<13} g = {:<16} f = {}", show(g), show(f));
        }
    }
    Ok(())
}

/// Moves a bound from the `g` scale to the `f` scale. Reals are rounded
/// away from the bounded value: down for a lower bound, up otherwise.
fn shift(g: &Value, sum: i64, lower: bool) -> Value {
    if let Some(n) = g.as_i64() {
        return Value::from(n + sum);
    }
    let f = g.as_f64().expect("numeric bound") + sum as f64;
    Value::from(if lower { f.next_down() } else { f.next_up() })
}

fn show(v: &Value) -> String {
    match v.as_i64() {
        Some(n) => n.to_string(),
        None => format_real(v.as_f64().expect("numeric bound")),
    }
}

fn ratio(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn sigma(args: SigmaArgs, mode: SigmaMode, iterations: u32, as_json: bool) -> Outcome {
    let text = match mode {
        SigmaMode::Naive => ratio(&sigma_naive(&args)?),
        SigmaMode::Rademacher => ratio(&sigma_via_rademacher(&args)?),
        SigmaMode::Lower => {
            let opts = BoundOptions {
                iterations,
                ..BoundOptions::default()
            };
            format_real(sigma_lower_combined(args.a, args.b, args.c, &opts)?.value())
        }
    };
    let out = json!({ "t": args.t, "a": args.a, "b": args.b, "c": args.c, "value": text });
    emit(as_json, out, &text);
    Ok(())
}

fn experiment(cfg: &ExperimentConfig, out: &PathBuf, as_json: bool) -> Outcome {
    cfg.validate()?;
    let file = File::create(out).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", out.display())))?;
    let records = run_experiment(cfg)?;
    let mut w = BufWriter::new(file);
    write_records_csv(&records, &mut w)?;
    w.flush().map_err(|e| Failure::Usage(format!("cannot write {}: {e}", out.display())))?;
    print_summary(&summarize(&records)?, as_json);
    Ok(())
}

fn print_summary(s: &SummaryStats, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_value(s).expect("summary serializes"));
    } else {
        println!("{s}");
    }
}
