// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use freeaction::config::Config;
use freeaction::error::{Error, Result};
use freeaction::fixpt::{product_census, Space};
use freeaction::groups::{elementary_abelian_rank, BGroup, EGroup, PGroup, Presented};
use freeaction::report::{Format, Report};
use freeaction::reps::{character, det_check, inner_product, RepName, RepTable};
use freeaction::suites::{run_suite, Suite};

#[derive(Parser)]
#[command(
    name = "freeaction",
    version,
    about = "Exact certification of a free rank-2 group action on S^5 x S^5"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Default)]
struct Opts {
    /// TOML config file; command-line flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// ε as an exact rational "p/q".
    #[arg(long, global = true)]
    eps: Option<String>,
    #[arg(long, global = true)]
    k_min: Option<u32>,
    #[arg(long, global = true)]
    k_max: Option<u32>,
    /// Comma-separated odd primes for E(p).
    #[arg(long, global = true, value_delimiter = ',')]
    primes: Option<Vec<u32>>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Record per-check wall time (output is then no longer reproducible).
    #[arg(long, global = true)]
    record_timing: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and print its report.
    Verify {
        /// theorem-a | groups | representations | fixedpoints | geometry | gluing | all | negative-controls
        suite: String,
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Facts about a single group.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Check a representation table.
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
    /// Fixed-point census of P(k) on Y, X0, X1 or X2.
    Fixedpoints {
        #[arg(long)]
        space: String,
        /// P<k>, e.g. P3
        #[arg(long)]
        group: String,
    },
    /// Run a suite (default: all) and write the report to a file.
    Report {
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// family: P, E or B; param: k for P and B, p for E.
    Info { family: String, param: u32 },
}

#[derive(Subcommand)]
enum RepCmd {
    /// phi, psi0, psi1, psi2, rho_p3, rho_e<p>, rho_b4, rho_e2
    Check { name: String },
}

fn load_config(o: &Opts) -> Result<Config> {
    let mut c = match &o.config {
        Some(p) => Config::from_file(p)?,
        None => Config::default(),
    };
    if let Some(e) = &o.eps {
        c.eps = e.clone();
    }
    if let Some(k) = o.k_min {
        c.k_min = k;
    }
    if let Some(k) = o.k_max {
        c.k_max = k;
    }
    if let Some(p) = &o.primes {
        c.primes = p.clone();
    }
    if let Some(s) = o.seed {
        c.seed = s;
    }
    if let Some(n) = o.samples {
        c.numeric_samples = n;
    }
    c.record_timing |= o.record_timing;
    c.validate()?;
    Ok(c)
}

fn emit(report: &Report, format: Format, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => {
            report.write(format, p)?;
            eprintln!(
                "{}: {} ({} checks) -> {}",
                report.suite,
                report.status.as_str(),
                report.checks.len(),
                p.display()
            );
        }
        None => print!("{}", report.render(format)?),
    }
    Ok(())
}

fn status_code(certified: bool) -> u8 {
    if certified {
        0
    } else {
        1
    }
}

fn group_info(family: &str, param: u32) -> Result<serde_json::Value> {
    fn info<G>(g: &G, p: u32) -> serde_json::Value
    where
        G: Presented,
        G::Elem: Eq + std::hash::Hash + Ord,
    {
        let pres = g.presentation();
        json!({
            "family": g.family().to_string(),
            "order": g.order(),
            "generators": pres.generators,
            "relations": pres.relations.iter().map(|r| r.label.clone()).collect::<Vec<_>>(),
            "rank_prime": p,
            "rank": elementary_abelian_rank(g, p),
        })
    }
    match family {
        "P" | "p" => Ok(info(&PGroup::new(param)?, 3)),
        "E" | "e" => Ok(info(&EGroup::new(param)?, param)),
        "B" | "b" => Ok(info(&BGroup::new(param, -1)?, 3)),
        _ => Err(Error::Config(format!(
            "unknown family {family:?}; expected P, E or B"
        ))),
    }
}

fn rep_check(name: &str) -> Result<(bool, serde_json::Value)> {
    let name = RepName::from_str(name)?;
    let t = RepTable::build(name)?;
    let rel = t.verify_relations()?;
    let nonunitary = t.non_unitary_generators();
    let mut ok = rel.passed() && nonunitary.is_empty();
    let mut out = json!({
        "name": name.to_string(),
        "source": name.source().to_string(),
        "relations": rel,
        "non_unitary": nonunitary,
    });
    let finite = match name.source() {
        freeaction::groups::Family::Gamma => freeaction::groups::Family::P(3),
        f => f,
    };
    let d = det_check(&t, finite)?;
    let x = character(&t, finite)?;
    let n = inner_product(&x, &x)?;
    if !matches!(name, RepName::Phi | RepName::Psi(_)) {
        ok &= d.passed();
    }
    out["det"] = serde_json::to_value(&d)?;
    out["character_norm"] = json!({ "group": finite.to_string(), "value": n.to_string() });
    Ok((ok, out))
}

fn fixedpoints(space: &str, group: &str) -> Result<(bool, serde_json::Value)> {
    let space = Space::from_str(space)?;
    let k: u32 = group
        .strip_prefix(['P', 'p'])
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Config(format!("group must look like P3, got {group:?}")))?;
    let c = product_census(k, space)?;
    Ok((
        true,
        json!({ "space": space.to_string(), "group": c.group, "checked": c.checked, "offenders": c.listing() }),
    ))
}

fn run(cli: Cli) -> Result<u8> {
    let cfg = load_config(&cli.opts)?;
    match cli.cmd {
        Cmd::Verify { suite, format, out } => {
            let format = match format {
                Some(f) => Format::from_str(&f)?,
                None => cfg.format,
            };
            let out = out.or_else(|| cfg.out.clone());
            let report = run_suite(Suite::from_str(&suite)?, &cfg)?;
            emit(&report, format, out.as_ref())?;
            Ok(status_code(report.is_certified()))
        }
        Cmd::Report { format, out, suite } => {
            let report = run_suite(Suite::from_str(&suite)?, &cfg)?;
            emit(&report, Format::from_str(&format)?, Some(&out))?;
            Ok(status_code(report.is_certified()))
        }
        Cmd::Group {
            cmd: GroupCmd::Info { family, param },
        } => {
            println!(
                "{}",
                serde_json::to_string_pretty(&group_info(&family, param)?)?
            );
            Ok(0)
        }
        Cmd::Rep {
            cmd: RepCmd::Check { name },
        } => {
            let (ok, v) = rep_check(&name)?;
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(status_code(ok))
        }
        Cmd::Fixedpoints { space, group } => {
            let (ok, v) = fixedpoints(&space, &group)?;
            println!("{}", serde_json::to_string_pretty(&v)?);
            Ok(status_code(ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Config(_) | Error::Precondition(_) | Error::Io(_) | Error::Mismatch(_) => 2,
                _ => 3,
            })
        }
    }
}
