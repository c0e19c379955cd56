//! `kempner` — digit-restricted harmonic sums from the command line.
//!
//! Exit codes: 0 success, 2 usage error, 3 resource guard tripped,
//! 4 internal assertion (a computed quantity left its proven range).

mod records;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kempner_core::fischer::{fischer_betas, fischer_sum, fischer_terms};
use kempner_core::kempner::kempner_sum;
use kempner_core::moments::compute_moments;
use kempner_core::oracle;
use kempner_core::ratfun::taylor;
use kempner_core::{Decimal, Error};

use records::OutputRecord;

/// Term ceiling for the enumeration oracle; overridable via
/// `KEMPNER_MAX_TERMS`.
const DEFAULT_MAX_TERMS: u64 = 100_000_000;

pub(crate) fn max_terms_from_env() -> u64 {
    std::env::var("KEMPNER_MAX_TERMS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_TERMS)
}

#[derive(Parser)]
#[command(
    name = "kempner",
    version,
    about = "Kempner sums K(b, b-1): exact moments, certified summation, cross-validation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute K(b, b-1) to a given number of fractional digits
    Sum {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        base: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2000))]
        prec: u32,
        #[arg(long)]
        json: bool,
    },
    /// Compare the cubic expansion against the exact sum for several bases
    Table {
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(2..))]
        bases: Vec<u64>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2000))]
        prec: u32,
        #[arg(long)]
        json: bool,
    },
    /// Print the exact moments v_0..v_M of a base
    Moments {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        base: u64,
        /// Highest order M
        #[arg(long)]
        count: u32,
        /// Print exact rationals instead of decimals
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=2000))]
        prec: u32,
        #[arg(long)]
        json: bool,
    },
    /// Taylor coefficients of w_m = v_m - b/(m+1) at c = 0
    Ratfun {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        order: u32,
        #[arg(long)]
        json: bool,
    },
    /// Fischer's rational coefficients and series for K(10, 9)
    Fischer {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2000))]
        prec: u32,
        /// How many beta coefficients to print
        #[arg(long, default_value_t = 10)]
        terms: u32,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate digit-restricted integers: exact partial sums and brackets
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        base: u64,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        levels: u32,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=2000))]
        prec: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run every module's invariant suite and report pass/fail
    Verify {
        /// Smaller grids, same properties
        #[arg(long)]
        quick: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::EnumerationLimitExceeded { .. } | Error::PrecisionOverflow { .. } => 3,
        Error::MomentBoundViolated { .. } | Error::RootFindingFailed { .. } => 4,
        _ => 2,
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Sum { base, prec, json } => {
            let result = kempner_sum(base, prec)?;
            if json {
                let rec = OutputRecord::new("sum")
                    .input("base", base)
                    .input("prec", prec)
                    .precision(prec)
                    .value("K", &result.value)
                    .tail_bound(&result.tail_bound);
                println!("{}", rec.to_json_line());
            } else {
                println!("{}", result.value);
            }
        }
        Command::Table { bases, prec, json } => {
            let columns = table::compute_table(&bases, prec)?;
            if json {
                for rec in table::to_records(&columns, prec) {
                    println!("{}", rec.to_json_line());
                }
            } else {
                print!("{}", table::render(&columns));
            }
        }
        Command::Moments { base, count, exact, prec, json } => {
            let table = compute_moments(base, count)?;
            if json {
                let mut rec = OutputRecord::new("moments")
                    .input("base", base)
                    .input("count", count)
                    .input("exact", exact);
                if !exact {
                    rec = rec.input("prec", prec).precision(prec);
                }
                for m in 0..=count {
                    let name = format!("v_{m}");
                    if exact {
                        rec = rec.value(&name, table.value(m));
                    } else {
                        rec = rec.value(&name, Decimal::from_rational(&table.value(m), prec));
                    }
                }
                println!("{}", rec.to_json_line());
            } else {
                for m in 0..=count {
                    if exact {
                        println!("v_{m} = {}", table.value(m));
                    } else {
                        println!("v_{m} = {}", Decimal::from_rational(&table.value(m), prec));
                    }
                }
            }
        }
        Command::Ratfun { m, order, json } => {
            let coeffs = taylor(m, order);
            if json {
                let mut rec = OutputRecord::new("ratfun").input("m", m).input("order", order);
                for (k, coeff) in coeffs.iter().enumerate() {
                    rec = rec.value(&format!("c^{k}"), coeff);
                }
                println!("{}", rec.to_json_line());
            } else {
                for (k, coeff) in coeffs.iter().enumerate() {
                    println!("c^{k}: {coeff}");
                }
            }
        }
        Command::Fischer { prec, terms, json } => {
            let betas = fischer_betas(terms);
            let sum = fischer_sum(prec);
            if json {
                let mut rec = OutputRecord::new("fischer")
                    .input("prec", prec)
                    .input("terms", terms)
                    .precision(prec);
                for m in 0..=terms {
                    rec = rec.value(&format!("beta_{m}"), betas.value(m));
                }
                rec = rec.value("K(10,9)", &sum);
                println!("{}", rec.to_json_line());
            } else {
                for m in 0..=terms {
                    println!("beta_{m} = {}", betas.value(m));
                }
                println!("series terms used: {}", fischer_terms(prec));
                println!("K(10,9) = {sum}");
            }
        }
        Command::Oracle { base, levels, prec, json } => {
            let limit = max_terms_from_env();
            let report = oracle::enumerate_levels(base, levels, limit)?;
            for entry in &report {
                let lower = Decimal::from_rational(&entry.cumulative, prec);
                // upper bound rendered with ceiling so the printed bracket
                // stays valid; the width is closed-form, no re-enumeration
                let width = oracle::bracket_width(base, entry.level);
                let upper_num = entry.cumulative.numer() * width.denom()
                    + width.numer() * entry.cumulative.denom();
                let upper_den = entry.cumulative.denom() * width.denom();
                let upper = Decimal::from_ratio_ceil(&upper_num, &upper_den, prec);
                if json {
                    let rec = OutputRecord::new("oracle")
                        .input("base", base)
                        .input("level", entry.level)
                        .input("prec", prec)
                        .precision(prec)
                        .value("count", entry.count)
                        .value("partial", &lower)
                        .value("upper", &upper);
                    println!("{}", rec.to_json_line());
                } else {
                    println!(
                        "level {}: count={} partial={} bracket=[{}, {}]",
                        entry.level, entry.count, lower, lower, upper
                    );
                }
            }
        }
        Command::Verify { quick } => {
            let checks = verify::run(quick);
            let mut all = true;
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                println!("{status} {} ({})", c.name, c.detail);
                all &= c.passed;
            }
            let (passed, total) = (checks.iter().filter(|c| c.passed).count(), checks.len());
            println!("{passed}/{total} checks passed");
            if !all {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
