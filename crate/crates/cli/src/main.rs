use std::io::Write;
use std::process::ExitCode;

use bernoulli_euler::{
    cmd_eval, cmd_table, cmd_verify, exit, CliError, EvalRequest, Family, Format, Method,
    VerifyOptions, DEFAULT_ROW_CAP,
};
use bernoulli_euler_core::{parse_rational, Rational};
use clap::{Parser, Subcommand};

/// Exact higher-order Bernoulli and Euler polynomials.
#[derive(Debug, Parser)]
#[command(name = "bernoulli-euler", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate B_n^(alpha)(x) or E_n^(alpha)(x) by one route or all three.
    Eval {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Order alpha as `p/q` or an integer.
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        alpha: Rational,
        /// Evaluation point; omit to get the closed-form coefficient list.
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        x: Option<Rational>,
        #[arg(long, value_enum, default_value = "closed")]
        method: Method,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Print the numbers for n = 0..=nmax (Bernoulli at x = 0, Euler as 2^n E_n(1/2)).
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        nmax: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = rational_arg)]
        alpha: Rational,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Largest accepted --nmax.
        #[arg(long, default_value_t = DEFAULT_ROW_CAP)]
        cap: usize,
    },
    /// Check every route and identity up to --max-n.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, hide = true)]
        corrupt_gamma1: bool,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let mut stdout = std::io::stdout().lock();
    let code = match cli.command {
        Command::Eval {
            family,
            n,
            alpha,
            x,
            method,
            format,
        } => {
            let result = cmd_eval(&EvalRequest {
                family,
                n,
                alpha,
                x,
                method,
            })?;
            let _ = stdout.write_all(result.render(format).as_bytes());
            if result.disagrees() {
                eprintln!("routes disagree");
                exit::DISAGREEMENT
            } else {
                exit::SUCCESS
            }
        }
        Command::Table {
            family,
            nmax,
            alpha,
            format,
            cap,
        } => {
            let out = cmd_table(family, nmax, &alpha, format, cap)?;
            let _ = stdout.write_all(out.as_bytes());
            exit::SUCCESS
        }
        Command::Verify {
            max_n,
            seed,
            corrupt_gamma1,
        } => {
            let report = cmd_verify(&VerifyOptions {
                max_n,
                seed,
                corrupt_gamma_1: corrupt_gamma1,
            });
            let _ = stdout.write_all(report.render().as_bytes());
            if report.all_passed() {
                exit::SUCCESS
            } else {
                exit::DISAGREEMENT
            }
        }
    };
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::USAGE)
        }
    }
}
