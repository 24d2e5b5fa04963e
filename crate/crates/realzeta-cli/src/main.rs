use clap::{ArgGroup, Parser, ValueEnum};
use realzeta::report::selftest::{run_self_test, Verdict};
use realzeta::report::{run, to_dot, to_text, Input, Level, Options};
use realzeta::zeta::Mode;
use realzeta::Error;
use std::process::ExitCode;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Naive,
    Plus,
    Minus,
    Complex,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    Top,
    Beta,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

/// Real, signed and complexified topological zeta functions of plane curve germs.
#[derive(Debug, Parser)]
#[command(name = "realzeta", version)]
#[command(group(ArgGroup::new("source").args(["poly", "factored", "dl_json", "self_test"]).required(true)))]
struct Cli {
    /// Polynomial in x and y vanishing at the origin.
    #[arg(long)]
    poly: Option<String>,
    /// Factor as EXPR or EXPR:EXP; repeat for each factor.
    #[arg(long, value_name = "EXPR[:EXP]")]
    factored: Vec<String>,
    /// Path to a DLDatum JSON file.
    #[arg(long, value_name = "PATH")]
    dl_json: Option<String>,
    #[arg(long, value_enum, default_value = "all")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "all")]
    level: LevelArg,
    /// Print T^0..T^N of each beta-level function.
    #[arg(long, value_name = "N")]
    series: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Run the built-in verification suite.
    #[arg(long)]
    self_test: bool,
}

fn exit_for(e: &Error) -> ExitCode {
    match e {
        Error::Parse { .. } | Error::Input(_) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn self_test() -> ExitCode {
    let results = run_self_test();
    let mut failed = false;
    for r in &results {
        println!("{}", r.line());
        failed |= r.verdict == Verdict::Fail;
    }
    let total: u128 = results.iter().map(|r| r.millis).sum();
    println!("self-test finished in {} ms", total);
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.self_test {
        return self_test();
    }
    let input = if let Some(p) = cli.poly {
        Input::Poly(p)
    } else if !cli.factored.is_empty() {
        Input::Factored(cli.factored)
    } else {
        let path = cli.dl_json.unwrap_or_default();
        match std::fs::read_to_string(&path) {
            Ok(t) => Input::DlJson(t),
            Err(e) => {
                eprintln!("error: cannot read {}: {}", path, e);
                return ExitCode::from(2);
            }
        }
    };
    let modes = match cli.mode {
        ModeArg::Naive => vec![Mode::Naive],
        ModeArg::Plus => vec![Mode::Plus],
        ModeArg::Minus => vec![Mode::Minus],
        ModeArg::Complex => vec![Mode::Complex],
        ModeArg::All => Mode::ALL.to_vec(),
    };
    let level = match cli.level {
        LevelArg::Top => Level::Top,
        LevelArg::Beta => Level::Beta,
        LevelArg::All => Level::All,
    };
    let opts = Options { modes, level, series: cli.series };
    let report = match run(&input, &opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e);
            return exit_for(&e);
        }
    };
    let out = match cli.format {
        Format::Text => to_text(&report),
        Format::Json => report.to_json(),
        Format::Dot => match to_dot(&report) {
            Ok(d) => d,
            Err(e) => {
                eprintln!("error: {}", e);
                return exit_for(&e);
            }
        },
    };
    print!("{}", out);
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
