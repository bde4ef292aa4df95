use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pfsdist::repro::{reproduce, Selector};
use pfsdist::{
    classify_batch, emit_table, Cell, Dataset, DistanceMethod, Error, PatternLibrary, Table,
    TableFormat,
};

const EXIT_INPUT: u8 = 2;
const EXIT_CONFORMABILITY: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

/// Distances between Pythagorean fuzzy sets and nearest-pattern classification.
#[derive(Debug, Parser)]
#[command(name = "pfsdist", version)]
struct Cli {
    #[command(flatten)]
    config: Config,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Config {
    /// ifs-hamming, ifs-euclid, pfs-hamming, pfs-euclid, chen or matrix
    #[arg(long, global = true, default_value = "matrix")]
    method: String,

    /// Exponent for the chen method (>= 1)
    #[arg(long, global = true)]
    beta: Option<f64>,

    /// Allowed excess of mu² + nu² over one when reading datasets
    #[arg(long, global = true, default_value_t = pfsdist::DEFAULT_EPSILON)]
    epsilon: f64,

    /// csv, md or plain
    #[arg(long, global = true, default_value = "plain")]
    format: String,

    /// Decimal places in printed numbers
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u8).range(1..=12))]
    precision: u8,

    /// Write results here instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance between two named sets
    Dist {
        file_a: PathBuf,
        file_b: PathBuf,
        set_a: String,
        set_b: String,
    },
    /// Assign every sample to its nearest pattern
    Classify { patterns: PathBuf, samples: PathBuf },
    /// Regenerate a published table and compare it with the printed values
    Repro {
        /// table1, table2, table4, app1, app2, app3 or all
        which: String,

        /// Also append discrepancy lines to this file
        #[arg(long)]
        discrepancy_log: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_conformability() {
            EXIT_CONFORMABILITY
        } else {
            EXIT_INPUT
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(what: &std::path::Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("cannot write {}: {e}", what.display()),
    }
}

struct Output {
    text: String,
    code: u8,
}

fn method_of(config: &Config) -> Result<DistanceMethod, Failure> {
    Ok(DistanceMethod::from_name(&config.method, config.beta)?)
}

fn cmd_dist(
    config: &Config,
    file_a: &PathBuf,
    file_b: &PathBuf,
    set_a: &str,
    set_b: &str,
) -> Result<Output, Failure> {
    let method = method_of(config)?;
    let format: TableFormat = config.format.parse()?;
    let left = Dataset::from_path(file_a, config.epsilon)?;
    let right = if file_b == file_a {
        left.clone()
    } else {
        Dataset::from_path(file_b, config.epsilon)?
    };
    let a = left.require(set_a)?;
    let b = right.require(set_b)?;
    let d = method.distance(a, b)?;
    let precision = usize::from(config.precision);

    let text = match format {
        TableFormat::Plain => format!("{}\n", pfsdist::table::format_fixed(d.value(), precision)),
        other => {
            let mut t = Table::new("", ["set_a", "set_b", "method", "distance"]);
            t.push_row(vec![
                set_a.into(),
                set_b.into(),
                method.to_string().into(),
                d.value().into(),
            ]);
            emit_table(&t, other, precision)
        }
    };
    Ok(Output { text, code: 0 })
}

fn cmd_classify(config: &Config, patterns: &PathBuf, samples: &PathBuf) -> Result<Output, Failure> {
    let method = method_of(config)?;
    let format: TableFormat = config.format.parse()?;
    let library = PatternLibrary::new(Dataset::from_path(patterns, config.epsilon)?.into_sets())?;
    let samples = Dataset::from_path(samples, config.epsilon)?.into_sets();
    let results = classify_batch(&library, &samples, method)?;

    let header = std::iter::once("sample".to_string())
        .chain(library.names().map(str::to_string))
        .chain(["winner".to_string(), "tied".to_string()]);
    let mut t = Table::new(format!("Nearest pattern by {method}"), header);
    for r in &results {
        let mut row = vec![Cell::from(r.sample_name.as_str())];
        row.extend(r.distances.iter().map(|(_, d)| Cell::Number(d.value())));
        row.push(r.winner_name().into());
        let tied = if r.is_tied() {
            r.tied
                .iter()
                .map(|&i| r.distances[i].0.as_str())
                .collect::<Vec<_>>()
                .join(";")
        } else {
            "no".to_string()
        };
        row.push(tied.into());
        t.push_row(row);
    }
    Ok(Output {
        text: emit_table(&t, format, usize::from(config.precision)),
        code: 0,
    })
}

fn cmd_repro(config: &Config, which: &str, log: Option<&PathBuf>) -> Result<Output, Failure> {
    let selector: Selector = which.parse()?;
    let format: TableFormat = config.format.parse()?;
    let report = reproduce(selector);

    let mut text = String::new();
    for (i, t) in report.tables.iter().enumerate() {
        if i > 0 {
            text.push('\n');
        }
        text.push_str(&emit_table(t, format, usize::from(config.precision)));
    }

    let mut lines = String::new();
    for d in &report.discrepancies {
        writeln!(lines, "{d}").unwrap();
    }
    eprint!("{lines}");
    if let Some(path) = log {
        std::fs::write(path, &lines).map_err(|e| io_failure(path, e))?;
    }
    let code = if report.matches() { 0 } else { EXIT_MISMATCH };
    Ok(Output { text, code })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let config = &cli.config;
    let out = match &cli.command {
        Command::Dist {
            file_a,
            file_b,
            set_a,
            set_b,
        } => cmd_dist(config, file_a, file_b, set_a, set_b)?,
        Command::Classify { patterns, samples } => cmd_classify(config, patterns, samples)?,
        Command::Repro {
            which,
            discrepancy_log,
        } => cmd_repro(config, which, discrepancy_log.as_ref())?,
    };
    match &config.output {
        Some(path) => std::fs::write(path, &out.text).map_err(|e| io_failure(path, e))?,
        None => print!("{}", out.text),
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => ExitCode::from(out.code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
