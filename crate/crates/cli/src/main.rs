//! Command-line front end: expression evaluation and the verification
//! suites, with machine-readable JSON reports.

mod config;

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hopfcyc::bicyclic::check_bicocyclic;
use hopfcyc::cyclic::{module_for, named_cocycle, verify_cocycle};
use hopfcyc::genbi::{check_gen_bicocyclic, GenBicocyclic};
use hopfcyc::homotopy::{verify_homotopy_formula, Coderivation};
use hopfcyc::hopf::{check_hopf_axioms, check_mpi};
use hopfcyc::pages::{cotor_pages, transfer_class, weight1_pages};
use hopfcyc::parse::parse_tensor;
use hopfcyc::report::{Report, Status};
use hopfcyc::trees::tree_counts;
use hopfcyc::{Algebra, AlgebraId, ModularPair, TruncationSpec};

use config::Config;

#[derive(Parser)]
#[command(name = "hopfcyc", version, about = "Exact Hopf-cyclic cohomology toolkit")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Configuration file (flat sections/key-value).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Algebra name: h1, h1s, h1dag, h1dagN:<N>, K, KmodN:<N>, u, f, cz,
    /// hrt, hck, hckdag, hckdagN:<N>.
    #[arg(long)]
    algebra: String,
    /// Attach a σ-modulus to h1dag/hckdag/K.
    #[arg(long, short = 'N')]
    n_modulus: Option<u32>,
    /// σ-exponent of the modular pair (δ, σ^k).
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// PBW degree cap per tensor factor.
    #[arg(long)]
    pbw_cap: Option<u32>,
    /// Largest rooted-tree size enumerated.
    #[arg(long)]
    tree_cap: Option<u32>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structure verifications.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Weight-filtered spectral-sequence pages (r = 1, 2, 3).
    Pages {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        weight: i64,
        /// Largest total degree p+q.
        #[arg(long, default_value_t = 3)]
        degree_max: usize,
    },
    /// Cotor computation for a σ-cover with MPI (δ, σ^k).
    Cotor {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, default_value_t = 2)]
        q_max: usize,
    },
    /// AW/Ψ⁻¹ class transfer into the Hopf cocyclic module.
    Transfer {
        #[command(flatten)]
        common: CommonOpts,
        /// Class name: TF, GV, Z, TFs, deltaStar, TFck, GVdag, TFdag,
        /// deltaStarDag, TFckdag.
        #[arg(long)]
        name: String,
    },
    /// Rooted-tree enumeration histogram.
    Trees {
        #[arg(long, default_value_t = 5)]
        max: u32,
    },
    /// Evaluate an expression to normal form.
    Eval {
        #[command(flatten)]
        common: CommonOpts,
        expr: String,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Coassociativity, counit and antipode identities on the capped basis.
    Hopf {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// S_δ² = Ad σ for the modular pair (δ, σ^k).
    Mpi {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// b(x) = 0 and τ(x) = (-1)^n x for a named or parsed cocycle.
    Cocycle {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, conflicts_with = "expr")]
        name: Option<String>,
        /// Expression in the surface syntax (slots separated by '#').
        #[arg(long)]
        expr: Option<String>,
    },
    /// Bicocyclic commutation, diagonal cocyclicity, Ψ and AW suites.
    Bicocyclic {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, default_value_t = 2)]
        pmax: usize,
        #[arg(long, default_value_t = 2)]
        qmax: usize,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Also run the generalized (SAYD-coefficient) bicocyclic suite.
        #[arg(long, default_value_t = false)]
        generalized: bool,
    },
    /// The Cartan homotopy formula [e_D + E_D, b + B] = L_D.
    Homotopy {
        #[command(flatten)]
        common: CommonOpts,
        /// Primitive element for D_Z (only Y is registered).
        #[arg(long = "Z", default_value = "Y")]
        z: String,
        /// Highest cochain level checked.
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

struct Settings {
    trunc: TruncationSpec,
    samples: usize,
    seed: u64,
    format: Format,
}

fn settings(
    cli: &Cli,
    common: Option<&CommonOpts>,
    samples: Option<usize>,
    seed: Option<u64>,
) -> Result<Settings> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let pbw = common
        .and_then(|c| c.pbw_cap)
        .or(cfg.get_u32("pbw-cap")?)
        .unwrap_or(4);
    let tree = common
        .and_then(|c| c.tree_cap)
        .or(cfg.get_u32("tree-cap")?)
        .unwrap_or(4);
    Ok(Settings {
        trunc: TruncationSpec {
            pbw_cap: pbw,
            delta_index_cap: pbw,
            tree_size_cap: tree,
            ..Default::default()
        },
        samples: samples.or(cfg.get_usize("samples")?).unwrap_or(30),
        seed: seed.or(cfg.get_u64("seed")?).unwrap_or(0),
        format: cli.format.unwrap_or(Format::Text),
    })
}

fn resolve_algebra(common: &CommonOpts) -> Result<Algebra> {
    let alg = Algebra::by_name(&common.algebra)?;
    if let Some(n) = common.n_modulus {
        let id = match alg.id() {
            AlgebraId::H1Dag(_) => AlgebraId::H1Dag(Some(n)),
            AlgebraId::HckDag(_) => AlgebraId::HckDag(Some(n)),
            AlgebraId::K(_) => AlgebraId::K(Some(n)),
            other => bail!("--N applies to σ-algebras, not {}", other.name()),
        };
        return Ok(Algebra::new(id));
    }
    Ok(alg)
}

fn emit(reports: &[Report], format: Format) -> Result<bool> {
    let mut all_ok = true;
    for r in reports {
        if r.status == Status::Fail {
            all_ok = false;
        }
        match format {
            Format::Json => println!("{}", serde_json::to_string(r)?),
            Format::Text => {
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::EvidenceAtCap => "evidence-at-cap",
                };
                let mut line = format!("[{status}] {} ({})", r.check, r.algebra);
                if !r.params.is_empty() {
                    let params: Vec<String> =
                        r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    line.push_str(&format!(" {}", params.join(" ")));
                }
                if let Some(w) = &r.witness {
                    line.push_str(&format!(" witness: {w}"));
                }
                if let Some(ms) = r.timing_ms {
                    line.push_str(&format!(" ({ms} ms)"));
                }
                for note in &r.notes {
                    line.push_str(&format!("\n    {note}"));
                }
                println!("{line}");
            }
        }
    }
    Ok(all_ok)
}

fn timed<F: FnOnce() -> hopfcyc::Result<Vec<Report>>>(f: F) -> Result<Vec<Report>> {
    let start = Instant::now();
    let mut reports = f().map_err(|e| anyhow!(e.to_string()))?;
    let elapsed = start.elapsed().as_millis();
    for r in &mut reports {
        r.timing_ms = Some(elapsed);
    }
    Ok(reports)
}

fn run() -> Result<bool> {
    let cli = Cli::parse();
    let (reports, format) = match &cli.cmd {
        Cmd::Verify(v) => match v {
            VerifyCmd::Hopf { common } => {
                let s = settings(&cli, Some(common), None, None)?;
                let alg = resolve_algebra(common)?;
                let trunc = s.trunc.clone();
                (timed(|| check_hopf_axioms(&alg, &trunc))?, s.format)
            }
            VerifyCmd::Mpi { common } => {
                let s = settings(&cli, Some(common), None, None)?;
                let alg = resolve_algebra(common)?;
                let k = common.k.unwrap_or(0);
                let trunc = s.trunc.clone();
                (
                    timed(|| {
                        let pair = ModularPair::canonical(&alg, k)?;
                        Ok(vec![check_mpi(&alg, &pair, &trunc)?])
                    })?,
                    s.format,
                )
            }
            VerifyCmd::Cocycle { common, name, expr } => {
                let s = settings(&cli, Some(common), None, None)?;
                let alg = resolve_algebra(common)?;
                let k = common.k;
                (
                    timed(|| {
                        let module = match k {
                            Some(k) => hopfcyc::cyclic::StandardModule::new(
                                alg,
                                ModularPair::canonical(&alg, k)?,
                            ),
                            None => module_for(&alg)?,
                        };
                        let (label, tensor, degree) = match (name, expr) {
                            (Some(n), None) => {
                                let (t, d) = named_cocycle(n, &alg)?;
                                (n.clone(), t, d)
                            }
                            (None, Some(e)) => {
                                let t = parse_tensor(&alg, e)?;
                                let d = t.degree();
                                (e.clone(), t, d)
                            }
                            _ => {
                                return Err(hopfcyc::Error::Invalid(
                                    "exactly one of --name/--expr is required".into(),
                                ))
                            }
                        };
                        Ok(vec![verify_cocycle(&module, &label, &tensor, degree)?])
                    })?,
                    s.format,
                )
            }
            VerifyCmd::Bicocyclic { common, pmax, qmax, samples, seed, generalized } => {
                let s = settings(&cli, Some(common), *samples, *seed)?;
                let alg = resolve_algebra(common)?;
                let k = common.k.unwrap_or(if alg.id().has_sigma() { -1 } else { 0 });
                let (pmax, qmax, generalized) = (*pmax, *qmax, *generalized);
                let trunc = s.trunc.clone();
                let (samples, seed) = (s.samples, s.seed);
                (
                    timed(|| {
                        let mut reports =
                            check_bicocyclic(&alg, k, pmax, qmax, &trunc, samples, seed)?;
                        if generalized {
                            let x = GenBicocyclic::for_cover(&alg, k)?;
                            reports.push(check_gen_bicocyclic(
                                &x, &alg, pmax, qmax, &trunc, samples, seed,
                            )?);
                        }
                        Ok(reports)
                    })?,
                    s.format,
                )
            }
            VerifyCmd::Homotopy { common, z, n, samples, seed } => {
                let s = settings(&cli, Some(common), *samples, *seed)?;
                let alg = resolve_algebra(common)?;
                if z != "Y" {
                    bail!("only the primitive Y is registered for D_Z");
                }
                let n = *n;
                let trunc = s.trunc.clone();
                let (samples, seed) = (s.samples, s.seed);
                (
                    timed(|| {
                        let module = module_for(&alg)?;
                        let d = Coderivation::right_mul_y(&alg);
                        Ok(vec![verify_homotopy_formula(
                            &module, &d, n, &trunc, samples, seed,
                        )?])
                    })?,
                    s.format,
                )
            }
        },
        Cmd::Pages { common, weight, degree_max } => {
            let s = settings(&cli, Some(common), None, None)?;
            let alg = resolve_algebra(common)?;
            let entries = weight1_pages(&alg, *weight, &s.trunc, *degree_max)
                .map_err(|e| anyhow!(e.to_string()))?;
            match s.format {
                Format::Json => {
                    for page in [1u8, 2, 3] {
                        let list: Vec<serde_json::Value> = entries
                            .iter()
                            .filter(|e| e.page == page)
                            .map(|e| {
                                serde_json::json!({
                                    "p": e.p,
                                    "q": e.q,
                                    "dim": e.dim,
                                    "representatives": e
                                        .representatives
                                        .iter()
                                        .map(|t| t.to_string())
                                        .collect::<Vec<_>>(),
                                })
                            })
                            .collect();
                        println!(
                            "{}",
                            serde_json::json!({
                                "algebra": alg.name(),
                                "weight": weight,
                                "page": page,
                                "entries": list,
                            })
                        );
                    }
                }
                Format::Text => {
                    for e in &entries {
                        if e.dim > 0 {
                            let reps: Vec<String> =
                                e.representatives.iter().map(|t| t.to_string()).collect();
                            println!(
                                "E{}[{}] ({},{}): dim {}  {}",
                                e.page,
                                weight,
                                e.p,
                                e.q,
                                e.dim,
                                reps.join(" ; ")
                            );
                        }
                    }
                }
            }
            return Ok(true);
        }
        Cmd::Cotor { common, q_max } => {
            let s = settings(&cli, Some(common), None, None)?;
            let alg = resolve_algebra(common)?;
            let k = common.k.unwrap_or(-1);
            let q_max = *q_max;
            let trunc = s.trunc.clone();
            let (entries, report) =
                cotor_pages(&alg, k, &trunc, q_max, 2).map_err(|e| anyhow!(e.to_string()))?;
            if matches!(s.format, Format::Text) {
                for e in entries.iter().filter(|e| e.dim > 0) {
                    println!("E1 ({},{}): dim {}", e.p, e.q, e.dim);
                }
            }
            (vec![report], s.format)
        }
        Cmd::Transfer { common, name } => {
            let s = settings(&cli, Some(common), None, None)?;
            let alg = resolve_algebra(common)?;
            let k = common.k.unwrap_or(if alg.id().has_sigma() { -1 } else { 0 });
            let (tensor, degree, report) =
                transfer_class(name, &alg, k).map_err(|e| anyhow!(e.to_string()))?;
            if matches!(s.format, Format::Text) {
                println!("{name} (degree {degree}): {tensor}");
            }
            (vec![report], s.format)
        }
        Cmd::Trees { max } => {
            let counts = tree_counts(*max);
            let format = cli.format.unwrap_or(Format::Text);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"check": "trees", "max": max, "counts": counts})
                ),
                Format::Text => println!(
                    "tree counts by size 1..={}: {}",
                    max,
                    counts
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ),
            }
            return Ok(true);
        }
        Cmd::Eval { common, expr } => {
            let s = settings(&cli, Some(common), None, None)?;
            let alg = resolve_algebra(common)?;
            let t = parse_tensor(&alg, expr).map_err(|e| anyhow!(e.to_string()))?;
            match s.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({"algebra": alg.name(), "input": expr, "normal_form": t.to_string()})
                ),
                Format::Text => println!("{t}"),
            }
            return Ok(true);
        }
    };
    emit(&reports, format)
}

fn main() {
    match run() {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
