mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use wncoh::vey::{Inequality, Variant};
use wncoh::Error;

use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "wncoh",
    version,
    about = "Cohomology of formal vector fields and diffeomorphism groups"
)]
struct Cli {
    /// Emit the report as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the symbolic layer.
    #[arg(long, global = true, env = "WNCOH_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact checks on the cochain complex.
    Check {
        #[command(subcommand)]
        what: CheckKind,
    },
    /// Characteristic forms: closedness, relativity, structure identities and kappa_p.
    Classes {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        force: bool,
    },
    /// Dimension tables of the Vey basis.
    Vey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ineq: Option<Inequality>,
        #[arg(long, value_enum, default_value_t = VariantArg::Both)]
        variant: VariantArg,
    },
    /// Godbillon-Vey cocycle c(f, g, h) at basepoint x.
    Gv {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Bott cocycle c(g1, g2) on the circle.
    Bott {
        #[arg(long, allow_hyphen_values = true)]
        g1: String,
        #[arg(long, allow_hyphen_values = true)]
        g2: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Verification reports.
    Verify {
        #[command(subcommand)]
        what: VerifyKind,
    },
    /// Every check at desk scale.
    Suite,
    /// Evaluate a JSON job file ("-" reads stdin).
    Job { file: String },
}

#[derive(Subcommand, Debug)]
enum CheckKind {
    /// d^2 = 0 on every generator up to jet order R.
    D2 {
        #[arg(long)]
        n: u8,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyKind {
    /// Gelfand-Kazhdan form and the local Godbillon-Vey form.
    GvLocal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    General,
    Relative,
    Both,
}

fn run(cli: &Cli) -> wncoh::Result<Report> {
    match &cli.command {
        Command::Check {
            what: CheckKind::D2 { n, order, force },
        } => {
            commands::desk_limits(*n, *order, *force)?;
            commands::check_d2(*n, *order)
        }
        Command::Classes { n, force } => {
            commands::desk_limits(*n, 3, *force)?;
            commands::classes(*n)
        }
        Command::Vey { n, ineq, variant } => {
            let variants = match variant {
                VariantArg::General => vec![Variant::General],
                VariantArg::Relative => vec![Variant::Relative],
                VariantArg::Both => vec![Variant::General, Variant::Relative],
            };
            let ineqs = match ineq {
                Some(i) => vec![*i],
                None => vec![Inequality::Le, Inequality::Ge],
            };
            commands::vey_tables(*n, &ineqs, &variants)
        }
        Command::Gv { f, g, h, x, tol } => commands::gv(f, g, h, *x, *tol),
        Command::Bott { g1, g2, tol } => commands::bott(g1, g2, *tol),
        Command::Verify {
            what: VerifyKind::GvLocal,
        } => commands::gv_local(),
        Command::Suite => commands::suite(),
        Command::Job { file } => {
            let src = if file == "-" {
                std::io::read_to_string(std::io::stdin())
            } else {
                std::fs::read_to_string(file)
            }
            .map_err(|e| Error::Job(format!("{file}: {e}")))?;
            commands::job(&src)
        }
    }
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax { .. }
            | Error::UnknownIdentifier { .. }
            | Error::InvalidDiffeo(_)
            | Error::OutOfRange(_)
            | Error::TooLarge(_)
            | Error::Job(_)
            | Error::ArityMismatch { .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("warning: could not configure {threads} threads: {e}");
        }
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(report) => {
            let report = report.finish(start.elapsed());
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                println!("{report}");
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}
