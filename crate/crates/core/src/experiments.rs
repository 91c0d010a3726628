//! Random-triple experiments comparing the new upper bound with the classical
//! ones and with the exact values, on the `f = g + a + b + c` scale.

use std::collections::HashSet;
use std::io::{Read, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    bound_known_combined, frobenius_upper_new_with, BoundOptions, Combine,
};
use crate::error::{Error, Result};
use crate::frobenius::{frobenius_exact, Triple};

/// Exact CSV header of the experiment output.
pub const CSV_HEADER: [&str; 13] = [
    "a",
    "b",
    "c",
    "z",
    "f_exact",
    "f_new_upper_n1",
    "f_new_upper",
    "f_known_upper",
    "f_davison_lower",
    "z_pow_5_4",
    "ratio_known_over_new",
    "ratio_new_over_exact",
    "error",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub count: usize,
    pub min: i64,
    pub max: i64,
    pub seed: u64,
    pub iterations: u32,
    pub combine: Combine,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            count: 2000,
            min: 3,
            max: 750,
            seed: 0,
            iterations: 2,
            combine: Combine::Min,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.count < 1 {
            return Err(Error::invalid("count", "must be at least 1"));
        }
        if self.min < 3 {
            return Err(Error::invalid("min", format!("must be at least 3, got {}", self.min)));
        }
        if self.max <= self.min {
            return Err(Error::invalid(
                "max",
                format!("must exceed min ({}), got {}", self.min, self.max),
            ));
        }
        if self.iterations < 1 {
            return Err(Error::invalid("iterations", "must be at least 1"));
        }
        Ok(())
    }

    fn bound_options(&self, iterations: u32) -> BoundOptions {
        BoundOptions {
            iterations,
            combine: self.combine,
            ..BoundOptions::default()
        }
    }
}

/// How per-triple records are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled and falls
    /// back to sequential evaluation otherwise.
    #[default]
    Parallel,
}

/// Draws `count` distinct sorted pairwise coprime triples. Each candidate is
/// three distinct uniform values from `[min, max]`; candidates that are not
/// pairwise coprime or were already drawn are rejected. The generator is
/// ChaCha8 seeded with `seed`.
pub fn gen_random_triples(cfg: &ExperimentConfig) -> Result<Vec<Triple>> {
    cfg.validate()?;
    let exhausted = |got| Error::SamplingExhausted {
        wanted: cfg.count,
        got,
        min: cfg.min,
        max: cfg.max,
    };
    if cfg.max - cfg.min < 2 {
        return Err(exhausted(0));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let budget = cfg.count.saturating_mul(1000).max(100_000);
    let mut seen = HashSet::with_capacity(cfg.count);
    let mut out = Vec::with_capacity(cfg.count);
    for _ in 0..budget {
        if out.len() == cfg.count {
            break;
        }
        let a = rng.random_range(cfg.min..=cfg.max);
        let b = rng.random_range(cfg.min..=cfg.max);
        let c = rng.random_range(cfg.min..=cfg.max);
        if let Ok(t) = Triple::new(a, b, c) {
            if seen.insert(t) {
                out.push(t);
            }
        }
    }
    if out.len() < cfg.count {
        return Err(exhausted(out.len()));
    }
    Ok(out)
}

/// One row of the experiment output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub z: f64,
    pub f_exact: i64,
    pub f_new_upper_n1: f64,
    pub f_new_upper: f64,
    pub f_known_upper: i64,
    pub f_davison_lower: f64,
    pub z_pow_5_4: f64,
    pub ratio_known_over_new: f64,
    pub ratio_new_over_exact: f64,
    /// Set when a bound could not be computed; the affected columns are NaN.
    pub error: Option<String>,
}

impl ExperimentRecord {
    pub fn compute(t: &Triple, cfg: &ExperimentConfig) -> Self {
        let sum = t.sum();
        let z = (t.product() as f64).sqrt();
        let f_exact = frobenius_exact(&t.parts()) + sum;
        let f_known_upper = bound_known_combined(t) + sum;

        let single = frobenius_upper_new_with(t, &cfg.bound_options(1));
        let chosen = frobenius_upper_new_with(t, &cfg.bound_options(cfg.iterations));
        let (n1, new, error) = match (single, chosen) {
            (Ok(s), Ok(n)) => (s.f_upper(t), n.f_upper(t), None),
            (Err(e), _) | (_, Err(e)) => (f64::NAN, f64::NAN, Some(sanitize(&e.to_string()))),
        };

        ExperimentRecord {
            a: t.a(),
            b: t.b(),
            c: t.c(),
            z,
            f_exact,
            f_new_upper_n1: n1,
            f_new_upper: new,
            f_known_upper,
            f_davison_lower: 3f64.sqrt() * z,
            z_pow_5_4: z.powf(1.25),
            ratio_known_over_new: f_known_upper as f64 / new,
            ratio_new_over_exact: new / f_exact as f64,
            error,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.error.is_none()
    }

    pub fn triple(&self) -> Result<Triple> {
        Triple::new(self.a, self.b, self.c)
    }
}

fn sanitize(msg: &str) -> String {
    msg.replace([',', '\n', '\r'], ";")
}

/// One record per triple of [`gen_random_triples`], in sampling order.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    run_experiment_with(cfg, Execution::default())
}

pub fn run_experiment_with(cfg: &ExperimentConfig, exec: Execution) -> Result<Vec<ExperimentRecord>> {
    let triples = gen_random_triples(cfg)?;
    Ok(compute_records(&triples, cfg, exec))
}

pub fn compute_records(triples: &[Triple], cfg: &ExperimentConfig, exec: Execution) -> Vec<ExperimentRecord> {
    match exec {
        Execution::Sequential => triples.iter().map(|t| ExperimentRecord::compute(t, cfg)).collect(),
        Execution::Parallel => compute_parallel(triples, cfg),
    }
}

#[cfg(feature = "parallel")]
fn compute_parallel(triples: &[Triple], cfg: &ExperimentConfig) -> Vec<ExperimentRecord> {
    use rayon::prelude::*;
    triples.par_iter().map(|t| ExperimentRecord::compute(t, cfg)).collect()
}

#[cfg(not(feature = "parallel"))]
fn compute_parallel(triples: &[Triple], cfg: &ExperimentConfig) -> Vec<ExperimentRecord> {
    triples.iter().map(|t| ExperimentRecord::compute(t, cfg)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub n_records: usize,
    pub n_failed: usize,
    pub frac_known_below_new: f64,
    pub median_ratio_known_over_new: f64,
    pub median_ratio_new_over_exact: f64,
    pub frac_new_below_z54: f64,
    pub frac_n2_strictly_better_than_n1: f64,
}

fn lower_median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    v[(v.len() - 1) / 2]
}

/// Fractions and lower medians over the records without an error marker.
pub fn summarize(records: &[ExperimentRecord]) -> Result<SummaryStats> {
    if records.is_empty() {
        return Err(Error::invalid("records", "cannot summarize an empty record list"));
    }
    let ok: Vec<&ExperimentRecord> = records.iter().filter(|r| r.is_ok()).collect();
    if ok.is_empty() {
        return Err(Error::invalid("records", "every record carries an error marker"));
    }
    let n = ok.len() as f64;
    let frac = |pred: &dyn Fn(&ExperimentRecord) -> bool| ok.iter().filter(|r| pred(r)).count() as f64 / n;
    Ok(SummaryStats {
        n_records: records.len(),
        n_failed: records.len() - ok.len(),
        frac_known_below_new: frac(&|r| (r.f_known_upper as f64) < r.f_new_upper),
        median_ratio_known_over_new: lower_median(ok.iter().map(|r| r.ratio_known_over_new).collect()),
        median_ratio_new_over_exact: lower_median(ok.iter().map(|r| r.ratio_new_over_exact).collect()),
        frac_new_below_z54: frac(&|r| r.f_new_upper <= r.z_pow_5_4),
        frac_n2_strictly_better_than_n1: frac(&|r| r.f_new_upper < r.f_new_upper_n1),
    })
}

impl std::fmt::Display for SummaryStats {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "records                       {}", self.n_records)?;
        writeln!(f, "failed                        {}", self.n_failed)?;
        writeln!(f, "known below new (fraction)    {:.4}", self.frac_known_below_new)?;
        writeln!(f, "median known/new              {:.4}", self.median_ratio_known_over_new)?;
        writeln!(f, "median new/exact              {:.4}", self.median_ratio_new_over_exact)?;
        writeln!(f, "new <= z^(5/4) (fraction)     {:.4}", self.frac_new_below_z54)?;
        write!(f, "N>1 strictly below N=1        {:.4}", self.frac_n2_strictly_better_than_n1)
    }
}

/// Formats a real with 9 significant digits, in positional notation for
/// moderate magnitudes.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{x:.8e}");
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..].parse().expect("exponent digits");
    if (-5..15).contains(&exp) {
        format!("{:.*}", (8 - exp).max(0) as usize, x)
    } else {
        sci
    }
}

fn record_fields(r: &ExperimentRecord) -> [String; 13] {
    [
        r.a.to_string(),
        r.b.to_string(),
        r.c.to_string(),
        format_real(r.z),
        r.f_exact.to_string(),
        format_real(r.f_new_upper_n1),
        format_real(r.f_new_upper),
        r.f_known_upper.to_string(),
        format_real(r.f_davison_lower),
        format_real(r.z_pow_5_4),
        format_real(r.ratio_known_over_new),
        format_real(r.ratio_new_over_exact),
        r.error.clone().unwrap_or_default(),
    ]
}

/// Writes the header and one row per record, LF terminated, unquoted.
pub fn write_records_csv<W: Write>(records: &[ExperimentRecord], dest: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .quote_style(csv::QuoteStyle::Never)
        .from_writer(dest);
    let csv_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in records {
        w.write_record(record_fields(r)).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_records_csv<R: Read>(source: R) -> Result<Vec<ExperimentRecord>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(source);
    let mut rows = rdr.records();
    let header = match rows.next() {
        None => return Err(Error::Csv { line: 1, message: "missing header".into() }),
        Some(h) => h.map_err(|e| csv_line_err(&e, 1))?,
    };
    if header.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::Csv {
            line: 1,
            message: format!("unexpected header `{}`", header.iter().collect::<Vec<_>>().join(",")),
        });
    }
    let mut out = Vec::new();
    for (idx, row) in rows.enumerate() {
        let line = idx as u64 + 2;
        let row = row.map_err(|e| csv_line_err(&e, line))?;
        out.push(parse_row(&row, line)?);
    }
    Ok(out)
}

fn csv_line_err(e: &csv::Error, fallback: u64) -> Error {
    let line = e.position().map_or(fallback, |p| p.line());
    Error::Csv { line, message: e.to_string() }
}

fn parse_row(row: &csv::StringRecord, line: u64) -> Result<ExperimentRecord> {
    if row.len() != CSV_HEADER.len() {
        return Err(Error::Csv {
            line,
            message: format!("expected {} fields, found {}", CSV_HEADER.len(), row.len()),
        });
    }
    let int = |i: usize| -> Result<i64> {
        row[i].parse().map_err(|_| Error::Csv {
            line,
            message: format!("column `{}`: `{}` is not an integer", CSV_HEADER[i], &row[i]),
        })
    };
    let real = |i: usize| -> Result<f64> {
        row[i].parse().map_err(|_| Error::Csv {
            line,
            message: format!("column `{}`: `{}` is not a number", CSV_HEADER[i], &row[i]),
        })
    };
    Ok(ExperimentRecord {
        a: int(0)?,
        b: int(1)?,
        c: int(2)?,
        z: real(3)?,
        f_exact: int(4)?,
        f_new_upper_n1: real(5)?,
        f_new_upper: real(6)?,
        f_known_upper: int(7)?,
        f_davison_lower: real(8)?,
        z_pow_5_4: real(9)?,
        ratio_known_over_new: real(10)?,
        ratio_new_over_exact: real(11)?,
        error: (!row[12].is_empty()).then(|| row[12].to_string()),
    })
}
