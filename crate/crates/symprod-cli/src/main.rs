//! Command-line front end: parses profile files and polynomial
//! expressions, dispatches to the series engines, runs the brute-force
//! oracle, and prints tables, JSON, or CSV.
//!
//! Exit codes: 0 success, 2 input error, 3 internal consistency failure
//! (the two computation routes disagreed, or the oracle found a mismatch).

use std::fmt;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use symprod::genera::{
    configuration_series, invariant_of_symmetric_product, signature_series, specialization_bridge,
    symmetric_series,
};
use symprod::prelambda::{lambda_series, sigma_series, PreLambdaElement};
use symprod::symgrp::{character_table, class_size};
use symprod::{
    parse::parse_poly, rat, Error, GenusData, GenusKind, GenusProfile, GradedDims, ProfileFile,
    TruncatedSeries, VarSet,
};

mod emit;

#[derive(Parser)]
#[command(name = "symprod", version, about = "Generating series for genera of symmetric products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SeriesArgs {
    /// Profile file (JSON)
    #[arg(long)]
    profile: String,
    /// Truncation order; overrides the file's `order`, default 10
    #[arg(long)]
    order: Option<usize>,
    /// Emit machine-readable JSON
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Flatten to CSV rows `name,n,monomial,coefficient`
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Symmetric-product series for every profile in a file
    Series(SeriesArgs),
    /// Configuration-space series for every profile in a file
    ConfigSeries(SeriesArgs),
    /// Signature series from --sigma/--chi, or derived per profile
    Signature {
        #[arg(long, requires = "chi")]
        sigma: Option<i64>,
        #[arg(long)]
        chi: Option<i64>,
        #[arg(long, conflicts_with = "sigma")]
        profile: Option<String>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// The invariant of the n-th symmetric product (one coefficient)
    Invariant {
        #[arg(long)]
        profile: String,
        /// Which symmetric product
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Specialization report (e, chi_y, betti, euler, ...) of hodge profiles
    Specialize {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force oracle vs series on a graded-dimensions JSON file
    OracleCheck {
        /// GradedDims file: a JSON list of {p, q, k, dim}
        #[arg(long)]
        input: String,
        /// Check symmetric and alternating powers for n = 0..=max_n
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Print the Adams substitutions of a polynomial for r = 1..=order
    Adams {
        /// Polynomial expression, e.g. "y + 2*x^-1"
        poly: String,
        /// Variable set, e.g. yxz, yx, y, z
        #[arg(long, default_value = "yxz")]
        vars: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Print the character table of the symmetric group S_n
    Characters {
        n: u64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    // Die quietly when output is piped into `head` and the pipe closes.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

enum AppError {
    Lib(Error),
    Io(String, std::io::Error),
    /// The oracle reported mismatches: an internal consistency failure.
    OracleFailed(usize),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Lib(Error::Consistency(_)) | AppError::OracleFailed(_) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Lib(e) => write!(f, "{e}"),
            AppError::Io(path, e) => write!(f, "{path}: {e}"),
            AppError::OracleFailed(n) => write!(f, "oracle check failed on {n} comparisons"),
        }
    }
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        AppError::Lib(e)
    }
}

type AppResult<T> = Result<T, AppError>;

fn read_file(path: &str) -> AppResult<String> {
    std::fs::read_to_string(path).map_err(|e| AppError::Io(path.to_string(), e))
}

fn load_profiles(path: &str) -> AppResult<(Vec<GenusProfile>, Option<usize>)> {
    let file = ProfileFile::from_json(&read_file(path)?)?;
    let profiles = file.genus_profiles()?;
    Ok((profiles, file.order))
}

fn resolve_order(flag: Option<usize>, file: Option<usize>) -> usize {
    flag.or(file).unwrap_or(10)
}

fn run(command: Command) -> AppResult<()> {
    match command {
        Command::Series(args) => run_series(&args, false),
        Command::ConfigSeries(args) => run_series(&args, true),
        Command::Signature {
            sigma,
            chi,
            profile,
            order,
            json,
            csv,
        } => run_signature(sigma, chi, profile.as_deref(), order, json, csv),
        Command::Invariant { profile, n, json } => run_invariant(&profile, n, json),
        Command::Specialize { profile, json } => run_specialize(&profile, json),
        Command::OracleCheck { input, max_n } => run_oracle_check(&input, max_n),
        Command::Adams { poly, vars, order } => run_adams(&poly, &vars, order),
        Command::Characters { n, json } => run_characters(n, json),
    }
}

fn run_series(args: &SeriesArgs, configuration: bool) -> AppResult<()> {
    let (profiles, file_order) = load_profiles(&args.profile)?;
    let order = resolve_order(args.order, file_order);
    let command = if configuration { "config-series" } else { "series" };
    let mut results = Vec::new();
    for p in &profiles {
        let series = if configuration {
            configuration_series(p, order)?
        } else {
            symmetric_series(p, order)?
        };
        results.push((p.clone(), series));
    }
    if args.json {
        emit::series_json(command, order, &results);
    } else if args.csv {
        emit::series_csv(&results);
    } else {
        emit::series_text(order, &results);
    }
    Ok(())
}

/// The (sigma, chi) pair determined by a profile, when there is one.
fn signature_pair(p: &GenusProfile) -> AppResult<Option<(i64, i64)>> {
    let chi_y = match (&p.kind, &p.data) {
        (GenusKind::Signature, GenusData::Signature { sigma, chi }) => {
            return Ok(Some((*sigma, *chi)))
        }
        (GenusKind::Euler | GenusKind::Betti, _) => return Ok(None),
        (GenusKind::Hodge, _) => specialization_bridge(p)?.chi_y.poly().unwrap().clone(),
        (GenusKind::E, GenusData::Poly(q)) => q.eval_var("x", rat(1))?,
        (GenusKind::ChiY, GenusData::Poly(q)) => q.clone(),
        _ => unreachable!("profile validated"),
    };
    let value = |at: i64| -> AppResult<i64> {
        let c = chi_y.eval_var("y", rat(at))?;
        let c = c.as_constant().expect("chi_y evaluates to a constant");
        if !c.is_integer() {
            return Err(AppError::Lib(Error::Profile {
                name: p.name.clone(),
                msg: format!("chi_y({at}) = {c} is not an integer"),
            }));
        }
        i64::try_from(c.to_integer()).map_err(|_| {
            AppError::Lib(Error::Profile {
                name: p.name.clone(),
                msg: format!("chi_y({at}) out of range"),
            })
        })
    };
    Ok(Some((value(-1)?, value(1)?)))
}

fn run_signature(
    sigma: Option<i64>,
    chi: Option<i64>,
    profile: Option<&str>,
    order: Option<usize>,
    json: bool,
    csv: bool,
) -> AppResult<()> {
    let mut results: Vec<(GenusProfile, TruncatedSeries)> = Vec::new();
    let mut skipped: Vec<String> = Vec::new();
    let order = match (sigma, chi, profile) {
        (Some(s), Some(c), None) => {
            let order = resolve_order(order, None);
            let prof = GenusProfile::new(
                format!("signature({s},{c})"),
                GenusKind::Signature,
                GenusData::Signature { sigma: s, chi: c },
                false,
            )?;
            results.push((prof, signature_series(s, c, order)?));
            order
        }
        (None, None, Some(path)) => {
            let (profiles, file_order) = load_profiles(path)?;
            let order = resolve_order(order, file_order);
            for p in &profiles {
                match signature_pair(p)? {
                    Some((s, c)) => {
                        let prof = GenusProfile::new(
                            p.name.clone(),
                            GenusKind::Signature,
                            GenusData::Signature { sigma: s, chi: c },
                            p.compact_support,
                        )?;
                        results.push((prof, signature_series(s, c, order)?));
                    }
                    None => skipped.push(p.name.clone()),
                }
            }
            order
        }
        _ => {
            return Err(AppError::Lib(Error::Profile {
                name: "signature".to_string(),
                msg: "pass either --sigma and --chi, or --profile".to_string(),
            }))
        }
    };
    if json {
        emit::series_json("signature", order, &results);
    } else if csv {
        emit::series_csv(&results);
    } else {
        emit::series_text(order, &results);
        for name in &skipped {
            println!("# {name}: skipped (no signature data for this kind)");
        }
    }
    Ok(())
}

fn run_invariant(profile: &str, n: usize, json: bool) -> AppResult<()> {
    let (profiles, _) = load_profiles(profile)?;
    let mut rows = Vec::new();
    for p in &profiles {
        rows.push((p.clone(), invariant_of_symmetric_product(p, n)?));
    }
    emit::invariant(n, &rows, json);
    Ok(())
}

fn run_specialize(profile: &str, json: bool) -> AppResult<()> {
    let (profiles, _) = load_profiles(profile)?;
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for p in &profiles {
        if p.kind == GenusKind::Hodge {
            reports.push((p.name.clone(), specialization_bridge(p)?));
        } else {
            skipped.push(p.name.clone());
        }
    }
    emit::specialize(&reports, &skipped, json);
    Ok(())
}

fn run_oracle_check(input: &str, max_n: usize) -> AppResult<()> {
    let dims = GradedDims::from_json(&read_file(input)?)?;
    let element = PreLambdaElement::Poly(dims.hodge_poly());
    let sigma = sigma_series(&element, max_n)?;
    let lambda = lambda_series(&element, max_n)?;
    println!("# oracle check on {input}: h = {}", dims.hodge_poly());
    let mut comparisons = 0usize;
    let mut failures = 0usize;
    for n in 0..=max_n {
        let brute_sym = dims.sym_power_brute(n)?.hodge_poly();
        let brute_alt = dims.alt_power_brute(n)?.hodge_poly();
        for (label, brute, series) in [
            ("sym", brute_sym, sigma.coefficient(n)),
            ("alt", brute_alt, lambda.coefficient(n)),
        ] {
            let mut monomials: Vec<_> = brute.terms().map(|(m, _)| m.clone()).collect();
            for (m, _) in series.terms() {
                if !monomials.contains(m) {
                    monomials.push(m.clone());
                }
            }
            monomials.sort();
            if monomials.is_empty() {
                comparisons += 1;
                println!("{label} n={n}  [zero]  brute=0 series=0  PASS");
                continue;
            }
            for m in &monomials {
                comparisons += 1;
                let b = brute.coefficient(m);
                let s = series.coefficient(m);
                let ok = b == s;
                if !ok {
                    failures += 1;
                }
                println!(
                    "{label} n={n}  [{}]  brute={b} series={s}  {}",
                    brute.monomial_string(m),
                    if ok { "PASS" } else { "FAIL" }
                );
            }
        }
    }
    if failures > 0 {
        println!("# RESULT: FAIL ({failures} of {comparisons} comparisons)");
        return Err(AppError::OracleFailed(failures));
    }
    println!("# RESULT: PASS ({comparisons} comparisons)");
    Ok(())
}

fn run_adams(poly: &str, vars: &str, order: usize) -> AppResult<()> {
    let names: Vec<String> = vars.chars().map(|c| c.to_string()).collect();
    let vars = VarSet::new(&names)?;
    let p = parse_poly(poly, &vars)?;
    let width = order.to_string().len();
    for r in 1..=order {
        println!("r={:<width$}  {}", r, p.adams(r as u32)?);
    }
    Ok(())
}


fn run_characters(n: u64, json: bool) -> AppResult<()> {
    let (parts, table) = character_table(n);
    // Classes with the identity first, i.e. reverse of the row order.
    let classes: Vec<_> = parts.iter().rev().cloned().collect();
    if json {
        emit::characters_json(n, &parts, &classes, &table);
        return Ok(());
    }
    println!("# character table of S_{n}");
    let label_width = parts
        .iter()
        .map(|p| p.to_string().len())
        .chain(["lambda \\ mu".len()])
        .max()
        .unwrap();
    let ncols = parts.len();
    let col_widths: Vec<usize> = classes
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let values = table
                .iter()
                .map(|row| row[ncols - 1 - j].to_string().len())
                .max()
                .unwrap_or(1);
            c.to_string()
                .len()
                .max(values)
                .max(class_size(c).to_string().len())
        })
        .collect();
    print!("{:<label_width$}", "lambda \\ mu");
    for (c, w) in classes.iter().zip(&col_widths) {
        print!("  {:>w$}", c.to_string());
    }
    println!();
    print!("{:<label_width$}", "|class|");
    for (c, w) in classes.iter().zip(&col_widths) {
        print!("  {:>w$}", class_size(c));
    }
    println!();
    for (i, lambda) in parts.iter().enumerate() {
        print!("{:<label_width$}", lambda.to_string());
        for (j, w) in col_widths.iter().enumerate() {
            print!("  {:>w$}", table[i][ncols - 1 - j]);
        }
        println!();
    }
    Ok(())
}
