//! `hypercover`: exact parameters, constructive covers, Turán numbers and
//! partition covers from the command line.
//!
//! Exit codes: 0 success, 1 input error, 2 a bound or certificate failed.

mod batch;
mod input;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hypercover::params::{verify_cover, Cover, ParamsRecord};
use hypercover::random::bernoulli_hypergraph;
use hypercover::rational::{fmt_pq, int, parse_pq, Rational};
use hypercover::rng::{PartitionAssignment, SplitMix64};
use hypercover::turan::{
    complement_identity, jstar_bound_check, kcover_best, kcover_budget, kcover_frankl_rodl,
    KCoverResult,
};
use hypercover::tuza::{cover_42_clique, cover_general, cover_r3, cover_r4, weak_cover, CoverMode};
use hypercover::{Error, Hypergraph};

use input::Input;

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TheoremViolation(_) | Error::BudgetNotMet { .. } => {
                Failure::Violation(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

#[derive(Parser, Debug)]
#[command(
    name = "hypercover",
    version,
    about = "Exact m-matchings, m-covers and K-covers of uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// ν, τ and ν* = τ* of the m-shadow, with witnesses
    Params {
        input: String,
        /// cover order; defaults to r-1
        #[arg(long)]
        m: Option<u32>,
        /// uniformity for `empty` and for graph inputs (clique size)
        #[arg(long, default_value_t = 4)]
        r: u32,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Build and verify a fractional (r-1)-cover
    Cover {
        input: String,
        /// weak, r3, r4, general or clique42
        #[arg(long)]
        mode: String,
        /// uniformity for `empty`; defaults to the mode's
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Smallest K_k-cover over seeded random partitions
    Kcover {
        input: String,
        /// clique size; must be r+1
        #[arg(long)]
        k: Option<u32>,
        /// parts for the Frankl–Rödl families instead of the default rule
        #[arg(long)]
        l: Option<u32>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        r: u32,
        #[arg(long)]
        n: Option<u32>,
    },
    /// ex_r(n,k) and T(n,k,r)
    Turan {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        r: u32,
    },
    /// Check τ^(m) <= ex_m(r, m+1) · ν*^(m)
    Jstar {
        input: String,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 4)]
        r: u32,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Random r-graph in HG1, each r-set an edge with probability p
    Random {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        /// edge probability as p/q
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verify a cover file against a hypergraph
    Verify {
        input: String,
        /// cover file: `w p/q : vertices` lines or bare vertex lines
        #[arg(long)]
        cover: String,
        #[arg(long)]
        m: Option<u32>,
        /// size bound as p/q
        #[arg(long)]
        bound: Option<String>,
        #[arg(long, default_value_t = 4)]
        r: u32,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Run params and cover over every instance of a job file
    Batch { spec: String },
}

fn default_m(h: &Hypergraph, m: Option<u32>) -> u32 {
    m.unwrap_or_else(|| h.r().saturating_sub(1).max(1))
}

fn mode_r(mode: CoverMode) -> u32 {
    match mode {
        CoverMode::Weak | CoverMode::R3 => 3,
        CoverMode::R4 | CoverMode::Clique42 => 4,
        CoverMode::General => 5,
    }
}

pub fn run_cover(
    input: &Input,
    mode: CoverMode,
) -> Result<(Hypergraph, hypercover::params::CoverCertificate), Failure> {
    if mode == CoverMode::Clique42 {
        let Input::Graph(g) = input else {
            return Err(Failure::Input(
                "clique42 needs a graph input (graph:...)".into(),
            ));
        };
        return Ok((g.clique_hypergraph(4)?, cover_42_clique(g)?));
    }
    let h = input.hypergraph(mode_r(mode))?;
    let cert = match mode {
        CoverMode::Weak => weak_cover(&h)?,
        CoverMode::R3 => cover_r3(&h)?,
        CoverMode::R4 => cover_r4(&h)?,
        _ => cover_general(&h)?,
    };
    Ok((h, cert))
}

fn certificate_text(cert: &hypercover::params::CoverCertificate) -> String {
    let mut out = cert.dump();
    for line in &cert.transcript {
        let _ = writeln!(out, "# {line}");
    }
    out
}

fn kcover_text(h: &Hypergraph, best: &KCoverResult, budget: &Rational) -> String {
    let mut out = String::new();
    for e in &best.cover {
        let items: Vec<String> = e.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "C: {}", items.join(" "));
    }
    let _ = writeln!(
        out,
        "size={} edges={} k={} budget={} bound={} family={} certified={}",
        best.len(),
        h.len(),
        best.k,
        fmt_pq(budget),
        fmt_pq(&best.size_bound),
        best.family_index,
        u8::from(best.certified)
    );
    out
}

/// Best Frankl–Rödl family over `trials` partitions into `l` parts, judged
/// against `1/l + (1 - 1/l)^r`.
fn frankl_rodl_best(
    h: &Hypergraph,
    l: u32,
    trials: u64,
    seed: u64,
) -> Result<(KCoverResult, Rational), Failure> {
    if l == 0 || trials == 0 {
        return Err(Failure::Input("need l >= 1 and at least one trial".into()));
    }
    let l_q = int(i64::from(l));
    let keep = int(1) - int(1) / &l_q;
    let budget = int(1) / &l_q + num_pow(&keep, h.r());
    let mut best: Option<KCoverResult> = None;
    for t in 0..trials {
        let p = PartitionAssignment::random(h.n(), l, &mut SplitMix64::for_trial(seed, t));
        for c in kcover_frankl_rodl(h, &p)? {
            if best
                .as_ref()
                .is_none_or(|b| (c.len(), &c.cover) < (b.len(), &b.cover))
            {
                best = Some(c);
            }
        }
    }
    let mut best = best.expect("at least one trial");
    best.size_bound = &budget * int(h.len() as i64);
    best.certified = int(best.len() as i64) <= best.size_bound;
    Ok((best, budget))
}

fn num_pow(base: &Rational, e: u32) -> Rational {
    (0..e).fold(int(1), |acc, _| acc * base)
}

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Params { input, m, r, n } => {
            let h = input::load(&input, n, r)?.hypergraph(r)?;
            let m = default_m(&h, m);
            Ok(ParamsRecord::compute(&h, m)?.dump(&h))
        }
        Command::Cover { input, mode, r, n } => {
            let mode: CoverMode = mode.parse()?;
            let input = input::load(&input, n, r.unwrap_or(mode_r(mode)))?;
            let (_, cert) = run_cover(&input, mode)?;
            let text = certificate_text(&cert);
            if cert.verified {
                Ok(text)
            } else {
                Err(Failure::Violation(text))
            }
        }
        Command::Kcover {
            input,
            k,
            l,
            trials,
            seed,
            r,
            n,
        } => {
            let h = input::load(&input, n, r)?.hypergraph(r)?;
            let k = k.unwrap_or(h.r() + 1);
            if k != h.r() + 1 {
                return Err(Failure::Input(format!("k must be r+1 = {}", h.r() + 1)));
            }
            let (best, budget) = match l {
                Some(l) => frankl_rodl_best(&h, l, trials, seed)?,
                None => (kcover_best(&h, k, trials, seed)?, kcover_budget(h.r())),
            };
            let text = kcover_text(&h, &best, &budget);
            if best.certified {
                Ok(text)
            } else {
                Err(Failure::Violation(text))
            }
        }
        Command::Turan { n, k, r } => {
            let (t, ex) = complement_identity(n, k, r)?;
            Ok(format!("ex({n},{k},{r})={ex}\nT({n},{k},{r})={t}\n"))
        }
        Command::Jstar { input, m, r, n } => {
            let h = input::load(&input, n, r)?.hypergraph(r)?;
            let rec = jstar_bound_check(&h, m)?;
            let bound = int(rec.exbound as i64) * &rec.nustar;
            let text = format!(
                "tau={} nustar={} ex={} bound={} satisfied={}\n",
                rec.tau,
                fmt_pq(&rec.nustar),
                rec.exbound,
                fmt_pq(&bound),
                u8::from(rec.satisfied)
            );
            if rec.satisfied {
                Ok(text)
            } else {
                Err(Failure::Violation(text))
            }
        }
        Command::Random { n, r, p, seed } => {
            let p = parse_pq(&p)?;
            Ok(bernoulli_hypergraph(n, r, &p, seed)?.serialize())
        }
        Command::Verify {
            input,
            cover,
            m,
            bound,
            r,
            n,
        } => {
            let h = input::load(&input, n, r)?.hypergraph(r)?;
            let m = default_m(&h, m);
            let cover = Cover::parse(&input::read(&cover)?, m)?;
            let bound = bound.map(|b| parse_pq(&b)).transpose()?;
            let cert = verify_cover(&h, m, &cover, bound.as_ref());
            let text = certificate_text(&cert);
            if cert.verified {
                Ok(text)
            } else {
                Err(Failure::Violation(text))
            }
        }
        Command::Batch { spec } => batch::run(&input::read(&spec)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Violation(msg)) => {
            print!("{msg}");
            eprintln!("error: bound violated");
            ExitCode::from(2)
        }
    }
}
