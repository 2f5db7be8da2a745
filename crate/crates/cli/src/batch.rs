//! Job files: one job per line with the same flags as the CLI, `#` comments.
//!
//! A job is either an input (`examples:...`, `graph:...`, a path) or
//! `random --n N --r R --p P` with `--seed S` or a seed range `--seeds A..B`.
//! Every instance gets `params` at order m (default r-1) and, when m = r-1
//! or the mode is `clique42`, the matching cover construction.

use std::fmt::Write as _;

use clap::Parser;
use hypercover::params::ParamsRecord;
use hypercover::random::bernoulli_hypergraph;
use hypercover::rational::{fmt_pq, int, parse_pq, Rational};
use hypercover::tuza::CoverMode;
use hypercover::Hypergraph;
use rayon::prelude::*;

use crate::input::{self, Input};
use crate::{run_cover, Failure, Outcome};

#[derive(Parser, Debug)]
#[command(no_binary_name = true)]
struct Job {
    input: String,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// half-open range `A..B`
    #[arg(long)]
    seeds: Option<String>,
}

struct Instance {
    line: usize,
    label: String,
    input: Input,
    m: Option<u32>,
    mode: Option<CoverMode>,
}

struct Row {
    text: String,
    tau_over_nu: Option<Rational>,
    nustar_over_nu: Option<Rational>,
}

const HEADER: &str = "line instance r m nu tau nustar tau/nu nustar/nu mode size bound margin";

fn seed_range(text: &str) -> Result<std::ops::Range<u64>, Failure> {
    let bad = || Failure::Input(format!("seed range `{text}` is not A..B"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    Ok(a.parse().map_err(|_| bad())?..b.parse().map_err(|_| bad())?)
}

fn expand(line: usize, text: &str) -> Result<Vec<Instance>, Failure> {
    let job = Job::try_parse_from(text.split_whitespace())
        .map_err(|e| Failure::Input(format!("line {line}: {}", e.to_string().trim())))?;
    let mode = job
        .mode
        .as_deref()
        .map(str::parse::<CoverMode>)
        .transpose()?;
    let r = job.r.unwrap_or(4);
    if job.input != "random" {
        let input = input::load(&job.input, job.n, r)?;
        return Ok(vec![Instance {
            line,
            label: job.input,
            input,
            m: job.m,
            mode,
        }]);
    }
    let missing = |flag: &str| Failure::Input(format!("line {line}: random needs --{flag}"));
    let n = job.n.ok_or_else(|| missing("n"))?;
    let r = job.r.ok_or_else(|| missing("r"))?;
    let p = parse_pq(job.p.as_deref().ok_or_else(|| missing("p"))?)?;
    let seeds = match (&job.seeds, job.seed) {
        (Some(range), _) => seed_range(range)?,
        (None, Some(s)) => s..s + 1,
        (None, None) => 0..1,
    };
    seeds
        .map(|seed| {
            Ok(Instance {
                line,
                label: format!("random(n={n},r={r},p={},seed={seed})", fmt_pq(&p)),
                input: Input::Hyper(bernoulli_hypergraph(n, r, &p, seed)?),
                m: job.m,
                mode,
            })
        })
        .collect()
}

fn default_mode(h: &Hypergraph, m: u32) -> Option<CoverMode> {
    if m + 1 != h.r() {
        return None;
    }
    match h.r() {
        2 => Some(CoverMode::Weak),
        3 => Some(CoverMode::R3),
        4 => Some(CoverMode::R4),
        r if r >= 5 => Some(CoverMode::General),
        _ => None,
    }
}

fn mode_name(mode: CoverMode) -> &'static str {
    match mode {
        CoverMode::Weak => "weak",
        CoverMode::R3 => "r3",
        CoverMode::R4 => "r4",
        CoverMode::General => "general",
        CoverMode::Clique42 => "clique42",
    }
}

fn ratio(a: &Rational, nu: usize) -> Option<Rational> {
    (nu > 0).then(|| a / int(nu as i64))
}

fn opt(v: &Option<Rational>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), fmt_pq)
}

fn evaluate(inst: &Instance) -> Result<Row, Failure> {
    let h = inst.input.hypergraph(4)?;
    let m = match (inst.m, inst.mode) {
        (Some(m), _) => m,
        (None, Some(CoverMode::Clique42)) => 2,
        (None, _) => h.r().saturating_sub(1).max(1),
    };
    let params = ParamsRecord::compute(&h, m)?;
    let nu = params.matching.value;
    let tau = params.cover.value;
    let nustar = params.fractional.value.clone();
    let mode = inst.mode.or_else(|| default_mode(&h, m));
    let (size, bound) = match mode {
        Some(mode) if (mode == CoverMode::Clique42 && m == 2) || m + 1 == h.r() => {
            let (_, cert) = run_cover(&inst.input, mode)?;
            if !cert.verified {
                return Err(Failure::Violation(format!(
                    "line {} {}: cover of size {} fails its bound",
                    inst.line,
                    inst.label,
                    fmt_pq(&cert.size)
                )));
            }
            (Some(cert.size), cert.bound)
        }
        _ => (None, None),
    };
    let margin = match (&size, &bound) {
        (Some(s), Some(b)) => Some(b - s),
        _ => None,
    };
    let tau_over_nu = ratio(&int(tau as i64), nu);
    let nustar_over_nu = ratio(&nustar, nu);
    let text = format!(
        "{} {} {} {m} {nu} {tau} {} {} {} {} {} {} {}",
        inst.line,
        inst.label,
        h.r(),
        fmt_pq(&nustar),
        opt(&tau_over_nu),
        opt(&nustar_over_nu),
        mode.map_or("-", mode_name),
        opt(&size),
        opt(&bound),
        opt(&margin),
    );
    Ok(Row {
        text,
        tau_over_nu,
        nustar_over_nu,
    })
}

/// Runs every instance in parallel and prints rows in job order; the first
/// failing instance ends the table.
pub fn run(spec: &str) -> Outcome {
    let mut instances = Vec::new();
    for (idx, raw) in spec.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        instances.extend(expand(idx + 1, line)?);
    }
    let rows: Vec<Result<Row, Failure>> = instances.par_iter().map(evaluate).collect();

    let mut out = format!("{HEADER}\n");
    let mut max_tau: Option<Rational> = None;
    let mut max_star: Option<Rational> = None;
    for row in rows {
        let row = match row {
            Ok(row) => row,
            Err(Failure::Violation(msg)) => {
                return Err(Failure::Violation(format!("{out}{msg}\n")))
            }
            Err(e) => return Err(e),
        };
        let _ = writeln!(out, "{}", row.text);
        for (best, v) in [
            (&mut max_tau, row.tau_over_nu),
            (&mut max_star, row.nustar_over_nu),
        ] {
            if let Some(v) = v {
                if best.as_ref().is_none_or(|b| v > *b) {
                    *best = Some(v);
                }
            }
        }
    }
    if !instances.is_empty() {
        let _ = writeln!(
            out,
            "# instances={} max tau/nu={} max nustar/nu={}",
            instances.len(),
            opt(&max_tau),
            opt(&max_star)
        );
    }
    Ok(out)
}
