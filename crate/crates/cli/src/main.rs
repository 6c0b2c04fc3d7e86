//! Command line front end for the tensor product engine.
//!
//! Exit codes: 0 all checks passed, 1 a verification check failed,
//! 2 bad input (unreadable spec, malformed document, invalid flags),
//! 3 a construction hit the size guard.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tensorlat_core::catalog::catalog;
use tensorlat_core::congruence::is_simple;
use tensorlat_core::json::{congruence_blocks, load_spec, tensor_summary, LatticeDoc};
use tensorlat_core::{
    congruence_lattice, full_sub_tensor_product, lattice_dot, run_suite, tensor_dot,
    tensor_product, verify_embedding, verify_isomorphism, Error, FinJoinSemilattice, FinLattice,
    Report, Result, SuiteConfig,
};

#[derive(Parser)]
#[command(
    name = "tensorlat",
    version,
    about = "Tensor products of finite lattices and their congruence lattices"
)]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Abort constructions that grow past this many elements
    #[arg(
        long = "max-size",
        global = true,
        value_name = "N",
        default_value_t = 100_000
    )]
    max_size: usize,

    /// Directory for JSON and DOT artifacts
    #[arg(long, global = true, value_name = "DIR", default_value = ".")]
    out: PathBuf,

    /// Also write DOT Hasse diagrams
    #[arg(long, global = true)]
    dot: bool,

    /// Catalog for `verify suite`, comma separated (e.g. @chain:3,@M3)
    #[arg(long, global = true, value_name = "LIST", value_delimiter = ',')]
    catalog: Option<Vec<String>>,

    /// Machine readable summaries on stdout instead of prose
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a lattice: size, atoms, distributivity, simplicity
    Show { spec: String },
    /// Construct the tensor product of two lattices and write a summary
    Tensor { a: String, b: String },
    /// Compute the congruence lattice and its block listings
    Con { spec: String },
    /// Run verification checks
    Verify {
        #[command(subcommand)]
        scope: VerifyScope,
    },
}

#[derive(Subcommand)]
enum VerifyScope {
    /// Check that congruence pairs generate all congruences of the tensor
    Iso { a: String, b: String },
    /// Check that congruence pairs embed into congruences of the tensor
    Embed { a: String, b: String },
    /// Run the whole check battery over a catalog of lattices
    Suite,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.run.max_size < 2 {
        eprintln!("error: --max-size must be at least 2");
        return ExitCode::from(2);
    }
    let outcome = match &cli.command {
        Command::Show { spec } => cmd_show(&cli.run, spec),
        Command::Tensor { a, b } => cmd_tensor(&cli.run, a, b),
        Command::Con { spec } => cmd_con(&cli.run, spec),
        Command::Verify { scope } => match scope {
            VerifyScope::Iso { a, b } => cmd_verify_pair(&cli.run, a, b, true),
            VerifyScope::Embed { a, b } => cmd_verify_pair(&cli.run, a, b, false),
            VerifyScope::Suite => cmd_verify_suite(&cli.run),
        },
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::SizeGuardExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// Load a spec, folding IO and JSON failures into one diagnosis that
/// names the offending spec.
fn load(spec: &str) -> Result<FinLattice> {
    load_spec(spec).map_err(|e| match e {
        Error::Io(io) => Error::InvalidDocument(format!("{spec}: {io}")),
        Error::Json(json) => Error::InvalidDocument(format!("{spec}: {json}")),
        other => other,
    })
}

/// File stem for artifacts derived from a spec: `@chain:3` becomes
/// `chain_3`, a path keeps its stem.
fn slug(spec: &str) -> String {
    let base = spec.strip_prefix('@').unwrap_or(spec);
    let base = Path::new(base)
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or(base);
    base.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn write_artifact(dir: &Path, name: &str, text: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, text)?;
    Ok(path)
}

fn pretty<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn cmd_show(cfg: &RunConfig, spec: &str) -> Result<ExitCode> {
    let l = load(spec)?;
    let atoms = l.atoms().len();
    let distributive = l.is_distributive();
    let simple = is_simple(&l)?;
    if cfg.json {
        let doc = serde_json::json!({
            "spec": spec,
            "size": l.size(),
            "atoms": atoms,
            "distributive": distributive,
            "simple": simple,
        });
        println!("{doc}");
    } else {
        println!(
            "{spec}: size {}, atoms {}, distributive={distributive}, simple={simple}",
            l.size(),
            atoms
        );
    }
    if cfg.dot {
        let path = write_artifact(
            &cfg.out,
            &format!("{}.dot", slug(spec)),
            &lattice_dot(spec, &l),
        )?;
        println!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_tensor(cfg: &RunConfig, a: &str, b: &str) -> Result<ExitCode> {
    let la = load(a)?;
    let lb = load(b)?;
    let t = tensor_product(
        &FinJoinSemilattice::join_reduct(&la),
        &FinJoinSemilattice::join_reduct(&lb),
        cfg.max_size,
    )?;
    let summary = tensor_summary((a, b), &t);
    let stem = format!("tensor_{}_{}", slug(a), slug(b));
    let path = write_artifact(&cfg.out, &format!("{stem}.json"), &pretty(&summary)?)?;
    if cfg.json {
        println!("{}", serde_json::to_string(&summary)?);
    } else {
        println!(
            "{a} \u{2297} {b}: size {}, atoms {}",
            summary.size, summary.atoms
        );
        println!("wrote {}", path.display());
    }
    if cfg.dot {
        let graph = format!("{a} \u{2297} {b}");
        let dot_path = write_artifact(&cfg.out, &format!("{stem}.dot"), &tensor_dot(&graph, &t))?;
        if !cfg.json {
            println!("wrote {}", dot_path.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_con(cfg: &RunConfig, spec: &str) -> Result<ExitCode> {
    let l = load(spec)?;
    let con = congruence_lattice(&l);
    let as_lattice = con.to_lattice();
    let stem = format!("con_{}", slug(spec));
    let doc = LatticeDoc::from_lattice(&format!("Con {spec}"), &as_lattice);
    let blocks = congruence_blocks(spec, &l, &con);
    let lattice_path = write_artifact(&cfg.out, &format!("{stem}.json"), &pretty(&doc)?)?;
    let blocks_path = write_artifact(&cfg.out, &format!("{stem}_blocks.json"), &pretty(&blocks)?)?;
    if cfg.json {
        println!("{}", serde_json::to_string(&blocks)?);
    } else {
        let noun = if con.size() == 1 {
            "congruence"
        } else {
            "congruences"
        };
        println!(
            "Con {spec}: {} {noun}, distributive={}",
            con.size(),
            as_lattice.is_distributive()
        );
        println!("wrote {}", lattice_path.display());
        println!("wrote {}", blocks_path.display());
    }
    if cfg.dot {
        let graph = format!("Con {spec}");
        let path = write_artifact(
            &cfg.out,
            &format!("{stem}.dot"),
            &lattice_dot(&graph, &as_lattice),
        )?;
        if !cfg.json {
            println!("wrote {}", path.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify_pair(cfg: &RunConfig, a: &str, b: &str, iso: bool) -> Result<ExitCode> {
    let la = load(a)?;
    let lb = load(b)?;
    let t = tensor_product(
        &FinJoinSemilattice::join_reduct(&la),
        &FinJoinSemilattice::join_reduct(&lb),
        cfg.max_size,
    )?;
    let c = full_sub_tensor_product(&t);
    let report = if iso {
        verify_isomorphism((a, b), &c, cfg.max_size)?
    } else {
        verify_embedding((a, b), &c, cfg.max_size)?
    };
    emit_reports(cfg, &[report])
}

fn cmd_verify_suite(cfg: &RunConfig) -> Result<ExitCode> {
    let mut suite_cfg = SuiteConfig {
        guard: cfg.max_size,
        ..SuiteConfig::default()
    };
    if let Some(list) = &cfg.catalog {
        suite_cfg.catalog = list
            .iter()
            .map(|entry| {
                let name = entry.strip_prefix('@').unwrap_or(entry);
                catalog(name)?;
                Ok(name.to_string())
            })
            .collect::<Result<Vec<_>>>()?;
    }
    let reports = run_suite(&suite_cfg)?;
    write_artifact(&cfg.out, "suite_reports.json", &pretty(&reports)?)?;
    emit_reports(cfg, &reports)
}

fn emit_reports(cfg: &RunConfig, reports: &[Report]) -> Result<ExitCode> {
    if cfg.json {
        println!("{}", serde_json::to_string(reports)?);
    } else {
        for r in reports {
            let sizes = r
                .sizes
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            if r.passed() {
                println!("{} [{}, {}]: pass ({sizes})", r.check, r.pair[0], r.pair[1]);
            } else {
                let witness = r.witness.as_deref().unwrap_or("no witness recorded");
                println!(
                    "{} [{}, {}]: FAIL ({sizes}) {witness}",
                    r.check, r.pair[0], r.pair[1]
                );
            }
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        if reports.len() > 1 {
            if failed == 0 {
                println!("all {} checks passed", reports.len());
            } else {
                println!("{failed} of {} checks failed", reports.len());
            }
        }
    }
    let all_pass = reports.iter().all(Report::passed);
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
