mod input;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use foxcalc_core::invariants::{
    alexander_matrix, alexander_polynomial, elementary_ideals, handlebody_invariant,
    surfacelink_invariant, twisted_matrix,
};
use foxcalc_core::maps::{conjugacy_classes, enumerate_homs, MatrixGroup};
use foxcalc_core::verify::{
    verify_theta_cyclic, verify_theta_ideals, verify_theta_representation, verify_theta_twisted,
    Report,
};
use foxcalc_core::{Error, Ideal, RingMatrix};
use serde_json::json;

use input::{parse_list, parse_ring, resolve_alpha, resolve_rho, resolve_target};

/// Elementary ideals and twisted Alexander invariants of finitely presented groups.
#[derive(Parser)]
#[command(name = "foxcalc", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IdealDegree {
    /// Index of the elementary ideal.
    #[arg(long, conflicts_with = "all_d")]
    d: Option<usize>,
    /// Every index from 0 up to the first unit ideal.
    #[arg(long)]
    all_d: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Elementary ideals of the Alexander matrix.
    Ideal {
        /// Catalog key, presentation file, or inline `< gens | rels >`.
        target: String,
        /// Abelianization, e.g. `x1=t,x2=t,x3=t^-2@t^inf` or `*=t@t^2`.
        #[arg(long)]
        alpha: Option<String>,
        #[command(flatten)]
        degree: IdealDegree,
        /// Coefficient ring and optional variable orders, e.g. `Z`, `Z2`, `Z:6`.
        #[arg(long)]
        ring: Option<String>,
        /// Print the matrix as well.
        #[arg(long)]
        matrix: bool,
    },
    /// Elementary ideals of the twisted Alexander matrix.
    Twisted {
        target: String,
        #[arg(long)]
        alpha: Option<String>,
        /// Representation file, or `lemma36` for the built-in theta representation.
        #[arg(long)]
        rho: String,
        #[command(flatten)]
        degree: IdealDegree,
        #[arg(long)]
        matrix: bool,
    },
    /// Count homomorphisms into SL(2;Z_p) and their conjugacy classes.
    Reps {
        target: String,
        #[arg(long, default_value_t = 2)]
        p: u64,
        /// List one representative per class.
        #[arg(long)]
        list: bool,
    },
    /// Matrix-form invariant over conjugacy classes and epimorphisms onto Z_k.
    Table1 {
        target: String,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        k: u64,
        #[arg(long, default_value_t = 4)]
        d: usize,
    },
    /// Row-form invariant: the twisted ideals of every conjugacy class.
    Table3 {
        target: String,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        k: u64,
    },
    /// Alexander polynomial (all abelianizer variables of infinite order).
    Polynomial {
        target: String,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Print a presentation in file format.
    Show { target: String },
    /// Check the theta-curve results.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Untwisted ideals of theta:n for n = 3..N.
    #[command(name = "theorem3.4")]
    Theta {
        #[arg(long, default_value_t = 24)]
        n_max: usize,
    },
    /// E_{n-1} over Z[t]/(t^n - 1) for n = 3..N.
    #[command(name = "theorem3.4-cyclic")]
    ThetaCyclic {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Twisted ideals of theta:n under the built-in SL(2;Z2) representation.
    #[command(name = "theorem3.7")]
    ThetaTwisted {
        #[arg(long, default_value = "5,7,11,13")]
        n_list: String,
    },
    /// Construct the built-in representation for each n.
    #[command(name = "lemma3.6")]
    ThetaRepresentation {
        #[arg(long, default_value = "5,7,11,13,17,19,23,25,29,31,35")]
        n_list: String,
    },
}

enum Outcome {
    Done,
    Mismatch,
}

fn degrees(degree: &IdealDegree, m: &RingMatrix) -> Vec<usize> {
    match degree.d {
        Some(d) if !degree.all_d => vec![d],
        _ => (0..=m.declared_cols()).collect(),
    }
}

fn print_ideals(json: bool, m: &RingMatrix, ds: &[usize], ideals: &[Ideal], show_matrix: bool) {
    if json {
        let rows: Vec<_> = ds
            .iter()
            .zip(ideals)
            .map(|(d, e)| {
                json!({
                    "d": d,
                    "ideal": e.to_string(),
                    "generators": e.display_generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut out = json!({ "ring": m.spec().to_string(), "ideals": rows });
        if show_matrix {
            out["matrix"] = json!(m.to_string());
        }
        println!("{out:#}");
        return;
    }
    if show_matrix {
        println!("matrix {m}");
    }
    println!("ring {}", m.spec());
    for (d, e) in ds.iter().zip(ideals) {
        println!("E_{d} = {e}");
    }
}

fn report(json: bool, r: &Report) -> Outcome {
    if json {
        println!("{:#}", json!(r));
    } else {
        println!("{r}");
    }
    if r.passed() {
        Outcome::Done
    } else {
        Outcome::Mismatch
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let json = cli.json;
    match cli.command {
        Command::Ideal {
            target,
            alpha,
            degree,
            ring,
            matrix,
        } => {
            let target = resolve_target(&target)?;
            let ring = ring.as_deref().map(parse_ring).transpose()?;
            let alpha = resolve_alpha(&target, alpha.as_deref(), ring.as_ref(), 0)?;
            let m = alexander_matrix(&target.presentation, &alpha)?;
            let ds = degrees(&degree, &m);
            let ideals = elementary_ideals(&m, ds.iter().copied())?;
            print_ideals(json, &m, &ds, &ideals, matrix);
        }
        Command::Twisted {
            target,
            alpha,
            rho,
            degree,
            matrix,
        } => {
            let target = resolve_target(&target)?;
            let rho = resolve_rho(&target, &rho)?;
            let alpha = resolve_alpha(&target, alpha.as_deref(), None, rho.modulus())?;
            let m = twisted_matrix(&target.presentation, &alpha, &rho)?;
            let ds = degrees(&degree, &m);
            let ideals = elementary_ideals(&m, ds.iter().copied())?;
            print_ideals(json, &m, &ds, &ideals, matrix);
        }
        Command::Reps { target, p, list } => {
            let target = resolve_target(&target)?;
            let group = MatrixGroup::sl(2, p);
            let homs = enumerate_homs(&target.presentation, group)?;
            let classes = conjugacy_classes(&homs, group)?;
            let gens = target.presentation.generators();
            let describe = |c: &foxcalc_core::maps::ConjugacyClass| {
                gens.iter()
                    .zip(c.representative.images())
                    .map(|(g, m)| format!("{g} -> {m}"))
                    .collect::<Vec<_>>()
            };
            if json {
                let listed: Vec<_> = classes
                    .iter()
                    .map(|c| json!({ "size": c.size, "images": describe(c) }))
                    .collect();
                println!(
                    "{:#}",
                    json!({ "homomorphisms": homs.len(), "classes": classes.len(), "list": listed })
                );
            } else {
                println!("homomorphisms {}", homs.len());
                println!("classes {}", classes.len());
                if list {
                    for c in &classes {
                        println!("  [{}] {}", c.size, describe(c).join(", "));
                    }
                }
            }
        }
        Command::Table1 { target, p, k, d } => {
            let target = resolve_target(&target)?;
            let table = handlebody_invariant(&target.presentation, p, k, d)?;
            print_table(json, &table)?;
        }
        Command::Table3 { target, p, k } => {
            let target = resolve_target(&target)?;
            let table = surfacelink_invariant(&target.presentation, p, k)?;
            print_table(json, &table)?;
        }
        Command::Polynomial { target, alpha } => {
            let target = resolve_target(&target)?;
            let alpha = resolve_alpha(&target, alpha.as_deref(), None, 0)?;
            let poly = alexander_polynomial(&target.presentation, &alpha)?;
            if json {
                println!(
                    "{:#}",
                    json!({ "ring": alpha.target().to_string(), "polynomial": poly.to_string() })
                );
            } else {
                println!("{poly}");
            }
        }
        Command::Show { target } => {
            let t = resolve_target(&target)?;
            if json {
                let rels: Vec<String> = t
                    .presentation
                    .relators()
                    .iter()
                    .map(|r| r.display(t.presentation.generators()).to_string())
                    .collect();
                println!(
                    "{:#}",
                    json!({ "name": t.label, "generators": t.presentation.generators(), "relators": rels })
                );
            } else {
                print!("{}", t.presentation.to_file_format());
            }
        }
        Command::Verify { check } => {
            let r = match check {
                Check::Theta { n_max } => verify_theta_ideals(3..=n_max)?,
                Check::ThetaCyclic { n_max } => verify_theta_cyclic(3..=n_max)?,
                Check::ThetaTwisted { n_list } => verify_theta_twisted(parse_list(&n_list)?)?,
                Check::ThetaRepresentation { n_list } => {
                    verify_theta_representation(parse_list(&n_list)?)?
                }
            };
            return Ok(report(json, &r));
        }
    }
    Ok(Outcome::Done)
}

fn print_table(json: bool, table: &foxcalc_core::InvariantTable) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(table)?);
    } else {
        println!("{table}");
    }
    Ok(())
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if let Some(core) = e.downcast_ref::<Error>() {
        return if core.is_parse() { 2 } else { 1 };
    }
    if e.downcast_ref::<std::io::Error>().is_some() {
        return 2;
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
