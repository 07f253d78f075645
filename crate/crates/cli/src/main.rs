use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use dclique_core::expansion::{d_clique_complex, ExpansionParams};
use dclique_core::homology::{betti_profile_with, HomologyMode, DEFAULT_PRIME};
use dclique_core::invariants::{
    contains_subcomplex_copy, is_d_lumpless, strong_domination_at_most, strong_domination_number,
    SearchLimits,
};
use dclique_core::lab::{emit, run_sweep, theorem_thresholds, Format, SweepConfig};
use dclique_core::random::{alpha_to_p, sample_gdnp, ModelParams};
use dclique_core::scx;

#[derive(Parser)]
#[command(
    name = "dclique",
    version,
    about = "d-clique complexes of random simplicial complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the d-clique complex of a complex.
    Expand {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Reduced integer homology, one line `k betti torsion...` per degree.
    Homology {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        kmax: usize,
        #[arg(long, conflicts_with = "mod_p")]
        exact: bool,
        /// Ranks over F_p; torsion is reported as `unchecked`.
        #[arg(long)]
        mod_p: Option<u64>,
    },
    /// Sample G_d(n, p).
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        density: Density,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Strong domination number, or whether it is at most m.
    Gamma {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        at_most: Option<usize>,
        #[arg(long, default_value_t = SearchLimits::default().max_vertices)]
        max_vertices: usize,
    },
    /// d-lumplessness by exhaustive subset check.
    Lumpless {
        #[arg(long)]
        d: usize,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = SearchLimits::default().max_vertices)]
        max_vertices: usize,
    },
    /// Search for a copy of a pattern complex inside a host.
    Contain {
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Exact threshold exponents for (d, k).
    Thresholds {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// Seeded Monte Carlo sweep over alpha.
    Sweep(SweepArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Density {
    #[arg(long)]
    p: Option<f64>,
    /// Uses p = n^alpha.
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Modp,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    kmax: usize,
    /// Comma-separated, e.g. `-0.8,-0.7,-0.4`.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    alphas: Vec<f64>,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    contain_k: Option<usize>,
    #[arg(long)]
    gamma_at_most: Option<usize>,
    #[arg(long)]
    couple: bool,
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// 0 uses all cores. Output does not depend on it.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long, default_value_t = dclique_core::lab::DEFAULT_FACE_BUDGET)]
    face_budget: usize,
    /// Fill the `ms` column (makes output run-dependent).
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutFormat,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Expand {
            d,
            max_dim,
            input,
            out,
        } => {
            let x = scx::read(&input)?;
            let delta = d_clique_complex(&x, ExpansionParams::new(d, max_dim)?);
            let cap = max_dim.map_or_else(|| "none".to_string(), |m| m.to_string());
            let comments = vec![
                format!("{d}-clique complex of {}", input.display()),
                format!("max_dim = {cap}"),
                format!("f = {}", delta.f_vector()),
            ];
            scx::write(&out, &delta, &comments)?;
        }
        Command::Homology {
            input,
            kmax,
            exact: _,
            mod_p,
        } => {
            let c = scx::read(&input)?;
            if c.is_empty() {
                bail!("{} has no vertices", input.display());
            }
            let mode = mod_p.map_or(HomologyMode::Exact, HomologyMode::ModP);
            for h in betti_profile_with(&c, kmax, mode)? {
                let mut line = format!("{} {}", h.degree, h.betti);
                if h.torsion_checked {
                    for t in &h.torsion {
                        line += &format!(" {t}");
                    }
                } else {
                    line += " unchecked";
                }
                println!("{line}");
            }
        }
        Command::Sample {
            n,
            d,
            density,
            seed,
            out,
        } => {
            let p = match (density.p, density.alpha) {
                (Some(p), _) => {
                    if !(0.0..=1.0).contains(&p) {
                        eprintln!("warning: p = {p} clamped into [0, 1]");
                    }
                    p.clamp(0.0, 1.0)
                }
                (None, Some(alpha)) => {
                    let prob = alpha_to_p(n, alpha);
                    if prob.clamped {
                        eprintln!("warning: n^alpha clamped to p = {}", prob.value);
                    }
                    prob.value
                }
                (None, None) => unreachable!("clap requires one of --p, --alpha"),
            };
            let x = sample_gdnp(&ModelParams::new(n, d, p, seed)?);
            let comments = vec![format!(
                "G_d(n, p) with n = {n}, d = {d}, p = {p:.16e}, seed = {seed}"
            )];
            scx::write(&out, &x, &comments)?;
        }
        Command::Gamma {
            input,
            at_most,
            max_vertices,
        } => {
            let c = scx::read(&input)?;
            match at_most {
                Some(m) => println!("{}", strong_domination_at_most(&c, m)?),
                None => {
                    let r = strong_domination_number(&c, &SearchLimits { max_vertices })?;
                    println!("gamma {}", r.gamma);
                    if let Some(w) = r.witness {
                        println!("witness {w}");
                    }
                }
            }
        }
        Command::Lumpless {
            d,
            input,
            max_vertices,
        } => {
            let c = scx::read(&input)?;
            let r = is_d_lumpless(&c, d, &SearchLimits { max_vertices })?;
            println!("{}", r.lumpless);
            if let Some(w) = r.witness {
                println!("witness {w}");
            }
        }
        Command::Contain { host, pattern } => {
            let h = scx::read(&host)?;
            let p = scx::read(&pattern)?;
            match contains_subcomplex_copy(&h, &p) {
                Some(e) => {
                    println!("true");
                    for (a, b) in e.pairs {
                        println!("{a} -> {b}");
                    }
                }
                None => println!("false"),
            }
        }
        Command::Thresholds { d, k } => println!("{}", theorem_thresholds(d, k)?),
        Command::Sweep(args) => sweep(args)?,
    }
    Ok(())
}

fn sweep(args: SweepArgs) -> Result<()> {
    let mut config = SweepConfig::new(
        args.d,
        args.n,
        args.kmax,
        args.trials,
        args.alphas,
        args.seed,
    );
    config.mode = match args.mode {
        Mode::Exact => HomologyMode::Exact,
        Mode::Modp => HomologyMode::ModP(args.prime),
    };
    config.contain_k = args.contain_k;
    config.gamma_at_most = args.gamma_at_most;
    config.couple = args.couple;
    config.workers = args.workers;
    config.face_budget = args.face_budget;
    config.record_timing = args.timing;
    for &a in &config.alphas {
        if a > 0.0 {
            eprintln!("warning: alpha = {a} > 0, p clamped to 1");
        }
    }
    let output = run_sweep(&config)?;
    let format = match args.format {
        OutFormat::Csv => Format::Csv,
        OutFormat::Json => Format::Json,
    };
    emit(&output, format, &args.out)
        .with_context(|| format!("writing sweep output to {}", args.out.display()))?;
    let skipped: usize = output.aggregates.iter().map(|a| a.skipped).sum();
    if skipped > 0 {
        eprintln!("warning: {skipped} trials exceeded the face budget and were skipped");
    }
    Ok(())
}
