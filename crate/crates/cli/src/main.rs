use std::io::{ErrorKind, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use hitcalc::cache::{default_dir, Cache, CACHE_DIR_ENV};
use hitcalc::commands::{self, parse_degrees, Context};
use hitcalc::manifest::{reproduce, Manifest, Tier};
use hitcalc::output::Format;
use hitcore::group::Group;
use hitcore::hit::Limits;
use hitcore::lambda::LambdaAlgebra;
use hitcore::poly::WeightVector;

#[derive(Parser)]
#[command(name = "hitcalc", version, about = "Hit problem, invariants, Kameko maps, lambda-algebra Ext and the algebraic transfer over GF(2)")]
struct Cli {
    /// Cache directory for admissible bases.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Compute instances above the capacity limit.
    #[arg(long, global = true)]
    force: bool,
    /// Capacity limit, in monomials (or lambda basis words).
    #[arg(long, global = true, default_value_t = hitcore::hit::DEFAULT_MAX_COLUMNS)]
    max_columns: usize,
    /// Output format; `reproduce` defaults to a table, everything else to JSON.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension and admissible basis of QP_n, optionally one weight component.
    Cohit {
        #[arg(long)]
        h: usize,
        /// A degree, an inclusive range "1..13", or a list "8,10".
        #[arg(long)]
        n: String,
        /// Weight vector, e.g. "2,3".
        #[arg(long)]
        weight: Option<WeightVector>,
        /// Leave the admissible monomials out of the JSON.
        #[arg(long)]
        no_basis: bool,
    },
    /// Invariants of QP_n under S_h or GL_h (GL_h also reports the coinvariant dimension).
    Invariants {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        n: String,
        #[arg(long, default_value = "gl")]
        group: Group,
    },
    /// The Kameko map QP_n -> QP_{(n-h)/2}.
    Kameko {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        n: u32,
        /// List a basis of the kernel.
        #[arg(long)]
        kernel: bool,
    },
    /// Ext^{s,s+t} from the homology of the lambda algebra.
    Ext {
        #[arg(long)]
        s: usize,
        /// A stem, a range or a list.
        #[arg(long)]
        t: String,
    },
    /// Basis of the annihilated part of the dual in degree n.
    Annihilated {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        n: u32,
        /// Also compute the GL_h-coinvariants and their representatives.
        #[arg(long)]
        coinvariants: bool,
    },
    /// Image of an annihilated dual element under the transfer, via psi_h.
    Transfer {
        #[arg(long)]
        h: Option<usize>,
        #[arg(long)]
        n: Option<u32>,
        /// JSON file {"h", "n", "terms"} or inline "d(1,1,1,15)+...".
        #[arg(long)]
        element: String,
    },
    /// Check every claim of a manifest; exits 1 if any claim fails.
    Reproduce {
        manifest: PathBuf,
        #[arg(long, value_enum, default_value = "fast")]
        tier: Tier,
    },
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ctx = Context {
        cache: Cache::new(cli.cache_dir.unwrap_or_else(default_dir)),
        limits: Limits { max_columns: cli.max_columns, force: cli.force },
    };
    let format = cli.format;
    let alg = LambdaAlgebra::new();
    let out = match cli.command {
        Command::Cohit { h, n, weight, no_basis } => commands::cohit(&ctx, h, &parse_degrees(&n)?, weight.as_ref(), !no_basis)?,
        Command::Invariants { h, n, group } => commands::invariants_cmd(&ctx, h, &parse_degrees(&n)?, group)?,
        Command::Kameko { h, n, kernel } => commands::kameko_cmd(&ctx, h, n, kernel)?,
        Command::Ext { s, t } => commands::ext_cmd(&ctx, &alg, s, &parse_degrees(&t)?)?,
        Command::Annihilated { h, n, coinvariants } => commands::annihilated_cmd(&ctx, h, n, coinvariants)?,
        Command::Transfer { h, n, element } => {
            let xi = commands::load_element(&element, h, n)?;
            commands::transfer_cmd(&ctx, &alg, &xi)?
        }
        Command::Reproduce { manifest, tier } => {
            let m = Manifest::load(&manifest)?;
            let report = reproduce(&ctx, &m, tier)?;
            emit(&report.output.render(format.unwrap_or(Format::Table))?)?;
            return Ok(if report.failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    };
    emit(&out.render(format.unwrap_or(Format::Json))?)?;
    Ok(ExitCode::SUCCESS)
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) -> Result<()> {
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
