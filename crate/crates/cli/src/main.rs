//! `catcw`: command-line front end for the catcw library.
//!
//! Exit status is 0 for success or a positive verdict, 1 for a negative
//! verdict and 2 for unreadable input or a failed computation.

mod commands;
mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Limits, Report};

#[derive(Debug, Parser)]
#[command(name = "catcw", version, about = "Finitely presented categories, CW-complexes, K0 witnesses and sheaves")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Args)]
struct Global {
    /// Maximum hom-set size when enumerating finite models.
    #[arg(long, global = true, default_value_t = catcw::DEFAULT_BOUND)]
    bound: usize,
    /// Rule budget for completion (check, sphere).
    #[arg(long, global = true, default_value_t = catcw::DEFAULT_BUDGET)]
    budget: usize,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Args)]
struct PointedArgs {
    /// Presentation, finite category or pointed category file.
    file: Option<PathBuf>,
    /// Basepoint; defaults to the stored one or the first object.
    #[arg(long)]
    basepoint: Option<String>,
    /// Use a random free category instead of a file.
    #[arg(long, conflicts_with = "file")]
    seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Validate an input file and summarize it.
    Check { file: PathBuf },
    /// Decide whether a functor is an equivalence.
    Equiv {
        file: PathBuf,
        /// Re-check a stored certificate instead.
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// Pushout of a span `{left, right}`.
    Pushout {
        file: PathBuf,
        /// Replace the right leg by a cofibration first.
        #[arg(long)]
        one_sided: bool,
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// The n-sphere.
    Sphere {
        n: usize,
        /// Also enumerate its finite model.
        #[arg(long)]
        to_finite: bool,
    },
    /// Suspension of a pointed category.
    Suspend(PointedArgs),
    /// Cone of a pointed category.
    Cone(PointedArgs),
    /// Write a witness that the class of a pointed category vanishes in K0.
    K0Witness {
        #[command(flatten)]
        input: PointedArgs,
        /// Witness file; defaults to `<stem>.k0.json`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Check a stored witness instead of building one.
        #[arg(long, conflicts_with_all = ["file", "seed"])]
        verify: Option<PathBuf>,
        /// With --verify, also recompute and compare byte for byte.
        #[arg(long, requires = "verify")]
        replay: bool,
    },
    /// Decide whether a category is a CW-complex and of which dimension.
    CwClassify { file: PathBuf },
    /// Build a 2-complex from a groupoid presentation.
    CwBuild { file: PathBuf },
    /// Check that A -> Γ(#cA) is an isomorphism.
    SheafUnit {
        category: PathBuf,
        space: PathBuf,
        #[arg(long)]
        verify: Option<PathBuf>,
    },
    /// The exotic self-map of a constant sheaf over a two-point discrete space.
    SheafExotic,
    /// Decide whether a sheaf is a CW-sheaf: a sheaf file, or a category and a space to sheafify over.
    SheafClassify { file: PathBuf, space: Option<PathBuf> },
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let limits = Limits {
        bound: cli.global.bound,
        budget: cli.global.budget,
    };
    let pointed = |a: &PointedArgs| input::pointed(a.file.as_deref(), a.basepoint.as_deref(), a.seed);
    match &cli.verb {
        Verb::Check { file } => commands::check(file, limits),
        Verb::Equiv { file, verify } => commands::equiv(file, verify.as_deref(), limits),
        Verb::Pushout { file, one_sided, verify } => commands::pushout_cmd(file, *one_sided, verify.as_deref()),
        Verb::Sphere { n, to_finite } => commands::sphere_cmd(*n, *to_finite, limits),
        Verb::Suspend(a) => commands::suspend_cmd(&pointed(a)?),
        Verb::Cone(a) => commands::cone_cmd(&pointed(a)?),
        Verb::K0Witness {
            input,
            out,
            verify,
            replay,
        } => commands::k0_witness(
            input.file.as_deref(),
            input.basepoint.as_deref(),
            input.seed,
            out.as_deref(),
            verify.as_deref(),
            *replay,
        ),
        Verb::CwClassify { file } => commands::cw_classify_cmd(file),
        Verb::CwBuild { file } => commands::cw_build(file),
        Verb::SheafUnit { category, space, verify } => commands::sheaf_unit(category, space, verify.as_deref(), limits),
        Verb::SheafExotic => commands::sheaf_exotic(),
        Verb::SheafClassify { file, space } => commands::sheaf_classify(file, space.as_deref(), limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let body = if cli.global.json {
                serde_json::to_string_pretty(&report.json).expect("values serialize") + "\n"
            } else {
                report.text
            };
            // a closed pipe is not worth a panic
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(if report.positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
