use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use faddeyeva_cli::{
    cmd_bench, cmd_compare, cmd_eval, cmd_grid, cmd_verify, control_for, exit, CliError, GridSpec,
    Reference, Threading,
};

/// Evaluate the Faddeyeva function w(z) = V + iL and check its accuracy.
#[derive(Parser)]
#[command(name = "faddeyeva", version, allow_negative_numbers = true)]
struct Cli {
    /// Target relative error; defaults to the most accurate setting.
    #[arg(long, global = true)]
    tiny: Option<f64>,

    /// Grid as xstart:xstop:xcount,yexpstart:yexpstop:ycount.
    #[arg(
        long,
        global = true,
        conflicts_with = "full_paper_grid",
        allow_hyphen_values = true
    )]
    grid: Option<GridSpec>,

    /// Use the full 71 × 40001 sweep instead of the 71 × 4001 default.
    #[arg(long, global = true)]
    full_paper_grid: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate at one point.
    #[command(allow_negative_numbers = true)]
    Eval {
        x: f64,
        y: f64,
        /// Also print the four first partial derivatives.
        #[arg(long)]
        derivatives: bool,
    },
    /// Write V and L over a grid as CSV.
    Grid {
        #[arg(long)]
        out: PathBuf,
    },
    /// Largest relative deviation of --tiny from a reference over a grid.
    Compare {
        #[arg(long, value_enum, default_value_t = RefArg::TinyMin)]
        reference: RefArg,
    },
    /// Median whole-grid timing for several tiny values.
    Bench {
        /// Comma-separated tiny values; defaults to the most accurate, 1e-8 and 1e-4.
        #[arg(long, value_delimiter = ',')]
        tiny_list: Option<Vec<String>>,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        /// Time multi-threaded throughput instead of one thread.
        #[arg(long)]
        parallel: bool,
    },
    /// Check against published reference values.
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum RefArg {
    TinyMin,
    Oracle,
}

fn grid_of(cli: &Cli) -> GridSpec {
    match (cli.grid, cli.full_paper_grid) {
        (Some(g), _) => g,
        (None, true) => GridSpec::FULL,
        (None, false) => GridSpec::DESK,
    }
}

fn parse_tiny_list(raw: Option<Vec<String>>) -> Result<Vec<f64>, CliError> {
    let Some(raw) = raw else {
        let lo = faddeyeva::AccuracyControl::most_accurate().tiny_effective;
        return Ok(vec![lo, 1e-8, 1e-4]);
    };
    raw.iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("`{s}` is not a number")))
        })
        .collect()
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let ctl = control_for(cli.tiny);
    let grid = grid_of(&cli);
    match cli.command {
        Command::Eval { x, y, derivatives } => {
            println!("{}", cmd_eval(x, y, &ctl, derivatives)?);
        }
        Command::Grid { out } => {
            if ctl.clamped {
                eprintln!("warning: tiny clamped to {:e}", ctl.tiny_effective);
            }
            cmd_grid(&grid, &ctl, &out)?;
            println!("points={}", grid.len());
            println!("out={}", out.display());
        }
        Command::Compare { reference } => {
            let reference = match reference {
                RefArg::TinyMin => Reference::TinyMin,
                RefArg::Oracle => Reference::Oracle,
            };
            println!("{}", cmd_compare(&grid, &ctl, reference)?);
        }
        Command::Bench {
            tiny_list,
            repeats,
            parallel,
        } => {
            let list = parse_tiny_list(tiny_list)?;
            let threading = if parallel {
                Threading::Parallel
            } else {
                Threading::Single
            };
            println!("{}", cmd_bench(&grid, &list, repeats, threading)?);
        }
        Command::Verify => {
            let report = cmd_verify()?;
            println!("{report}");
            if !report.pass() {
                return Ok(exit::FAILURE);
            }
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
