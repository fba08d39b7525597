use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use joinmeet::algebra::{Characteristic, OrderKind};
use joinmeet::lattice::{CrystalParams, LatticeError};
use joinmeet::report::{
    betti_pipeline, figure_data, groebner_pipeline, lattice_check, render_betti, render_figure_csv,
    render_groebner, render_lattice_report, render_table1, render_verification, table1,
    verify_theorem, OutputFormat, PipelineError, PipelineOptions, Route, Theorem, VerifyOptions,
};
use joinmeet::resolution::BettiOptions;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "joinmeet",
    version,
    about = "Join-meet ideals of crystal lattices and their Betti numbers"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", global = true, default_value = "0")]
    characteristic: Characteristic,
    /// Output format: text, json or csv.
    #[arg(long, global = true, default_value = "text")]
    format: OutputFormat,
    /// Monomial order: degrevlex, deglex or lex.
    #[arg(long, global = true, default_value = "degrevlex")]
    order: OrderKind,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Run Buchberger under an order that is not compatible with the lattice.
    #[arg(long, global = true)]
    allow_incompatible: bool,
}

#[derive(Args)]
struct Crystal {
    /// Number of chains.
    #[arg(long)]
    k: usize,
    /// Chain lengths, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti table of R/in(I) for a crystal lattice.
    Betti {
        #[command(flatten)]
        crystal: Crystal,
        #[arg(long, default_value = "hochster")]
        route: Route,
        /// Compute rows 0..=r only.
        #[arg(long)]
        max_index: Option<usize>,
    },
    /// Reduced Gröbner basis and initial ideal.
    Groebner {
        #[command(flatten)]
        crystal: Crystal,
    },
    /// Check the closed-form Betti numbers for L_2(n1, 1) or L_2(n1, 2).
    Verify {
        /// 1 for n2 = 1, 2 for n2 = 2.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n_max: u64,
        #[arg(long, default_value = "hochster")]
        route: Route,
    },
    /// First Betti totals for n2 = 1, 2.
    Table1 {
        /// Add the n1 = 13 row.
        #[arg(long)]
        fill_gaps: bool,
    },
    /// CSV of computed and closed-form second Betti totals.
    FigureData {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        n2: u8,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n_max: u64,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate and classify a lattice given by cover relations.
    LatticeCheck {
        /// File with one `lower upper` pair per line.
        covers: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &PipelineError) -> u8 {
    match e {
        _ if e.is_resource_guard() => EXIT_RESOURCE,
        PipelineError::Lattice(LatticeError::InvalidParams(_))
        | PipelineError::Field(_)
        | PipelineError::IncompatibleOrder { .. } => EXIT_USAGE,
        _ => EXIT_MISMATCH,
    }
}

fn run(cli: &Cli) -> Result<ExitCode, PipelineError> {
    let g = &cli.global;
    let pipeline = PipelineOptions {
        order: g.order,
        characteristic: g.characteristic,
        allow_incompatible: g.allow_incompatible,
        ..PipelineOptions::default()
    };
    let verify_options = |route| VerifyOptions {
        route,
        characteristic: g.characteristic,
        support: None,
    };
    match &cli.command {
        Command::Betti {
            crystal,
            route,
            max_index,
        } => {
            let params = CrystalParams::new(crystal.k, crystal.n.clone())?;
            let betti = BettiOptions {
                characteristic: g.characteristic,
                max_index: *max_index,
                ..BettiOptions::default()
            };
            let (_, table) = betti_pipeline(&params, &pipeline, *route, &betti)?;
            print!("{}", render_betti(&table, g.format));
        }
        Command::Groebner { crystal } => {
            let params = CrystalParams::new(crystal.k, crystal.n.clone())?;
            let outcome = groebner_pipeline(&params, &pipeline)?;
            print!("{}", render_groebner(&outcome.report, g.format));
        }
        Command::Verify {
            theorem,
            n_max,
            route,
        } => {
            let theorem = Theorem::from_number(*theorem).expect("range checked by clap");
            let rows = verify_theorem(theorem, 2..=*n_max as usize, &verify_options(*route))?;
            print!("{}", render_verification(&rows, g.format));
            if rows.iter().any(|r| !r.pass) {
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
        }
        Command::Table1 { fill_gaps } => {
            let rows = table1(*fill_gaps, &pipeline)?;
            print!("{}", render_table1(&rows, g.format));
        }
        Command::FigureData { n2, n_max, out } => {
            let theorem = Theorem::from_number(*n2).expect("range checked by clap");
            let rows = figure_data(theorem, *n_max as usize, &verify_options(Route::Hochster))?;
            let csv = render_figure_csv(&rows);
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, csv) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return Ok(ExitCode::from(EXIT_MISMATCH));
                    }
                }
                None => print!("{csv}"),
            }
        }
        Command::LatticeCheck { covers } => {
            let text = match std::fs::read_to_string(covers) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", covers.display());
                    return Ok(ExitCode::from(EXIT_USAGE));
                }
            };
            match lattice_check(&text) {
                Ok(report) => print!("{}", render_lattice_report(&report, g.format)),
                Err(e) => {
                    println!("valid lattice: no");
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(EXIT_MISMATCH));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
