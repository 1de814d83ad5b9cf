use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sgforge_core::lab::concentration::{concentration_stats, concentration_table};
use sgforge_core::lab::ratios::{bounds_table, parity_table};
use sgforge_core::lab::{self, Check, SweepParams};
use sgforge_core::record::{parse_generators, InspectRecord};
use sgforge_core::table::Table;
use sgforge_core::tree::{CensusOptions, CountBy};
use sgforge_core::{enumerate, CensusTable, EnumConfig, NumericalSemigroup};

#[derive(Parser, Debug)]
#[command(name = "sgforge", version, about = "Enumerate numerical semigroups and check counting identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct RunArgs {
    /// Worker threads; SGFORGE_THREADS takes precedence.
    #[arg(long)]
    workers: Option<usize>,
    /// Genus at which subtrees are handed to workers (0 walks on one thread).
    #[arg(long)]
    split_depth: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the table here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count semigroups up to a genus.
    Count {
        #[arg(long)]
        max_genus: u32,
        #[arg(long, value_enum, default_value_t = By::Genus)]
        by: By,
        /// Frobenius cap for `--by frobenius` (defaults to the max genus).
        #[arg(long)]
        max_frobenius: Option<u32>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print the JSON record of the semigroup with these generators.
    Inspect {
        #[arg(required = true, num_args = 1..)]
        generators: Vec<String>,
    },
    /// Run a named check; exits 2 when it finds violations.
    Verify {
        name: String,
        #[arg(long)]
        max_genus: u32,
        #[arg(long)]
        max_frobenius: Option<u32>,
        #[arg(long, default_value_t = 9)]
        max_multiplicity: u32,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Derived tables: bounds, concentration, strong, parity.
    Report {
        kind: ReportKind,
        #[arg(long)]
        max_genus: u32,
        /// Tolerance for `concentration`.
        #[arg(long, default_value_t = 0.25)]
        epsilon: f64,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum By {
    Genus,
    Multiplicity,
    Efficacy,
    Frobenius,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportKind {
    Bounds,
    Concentration,
    Strong,
    Parity,
}

impl RunArgs {
    fn workers(&self) -> Result<usize, String> {
        if let Ok(v) = std::env::var("SGFORGE_THREADS") {
            return v
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| format!("SGFORGE_THREADS must be a positive integer, got {v:?}"));
        }
        match self.workers {
            Some(0) => Err("--workers must be at least 1".into()),
            Some(n) => Ok(n),
            None => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
        }
    }

    /// Explicit depth, else a shallow split whenever more than one worker runs.
    fn split_depth(&self, max_genus: u32, workers: usize) -> u32 {
        match self.split_depth {
            Some(d) => d,
            None if workers > 1 => max_genus.min(8).saturating_sub(2).min(max_genus / 2),
            None => 0,
        }
    }

    fn render(&self, table: &Table) -> String {
        match self.format {
            Format::Csv => table.to_csv(),
            Format::Json => table.to_json(),
        }
    }

    fn emit(&self, table: &Table) -> Result<(), String> {
        let text = self.render(table);
        match &self.output {
            Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
            None => io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
        }
    }
}

fn config(max_genus: u32, run: &RunArgs) -> Result<EnumConfig, String> {
    let workers = run.workers()?;
    let depth = run.split_depth(max_genus, workers);
    if depth > max_genus {
        return Err(format!("--split-depth {depth} exceeds the enumerated genus {max_genus}"));
    }
    Ok(EnumConfig::new(max_genus).split(depth, workers))
}

fn count(max_genus: u32, by: By, max_frobenius: Option<u32>, run: &RunArgs) -> Result<ExitCode, String> {
    let census = match by {
        By::Frobenius => {
            let fmax = max_frobenius.unwrap_or(max_genus);
            let base = config(fmax, run)?;
            let cfg = EnumConfig::by_frobenius(fmax).split(base.split_depth, base.workers);
            enumerate(&cfg, CensusTable::by_frobenius(fmax, CensusOptions::default()))
        }
        _ => enumerate(&config(max_genus, run)?, CensusTable::new(max_genus, CensusOptions::default())),
    }
    .map_err(|e| e.to_string())?;
    let by = match by {
        By::Genus => CountBy::Genus,
        By::Multiplicity => CountBy::Multiplicity,
        By::Efficacy => CountBy::Efficacy,
        By::Frobenius => CountBy::Frobenius,
    };
    run.emit(&census.to_table(by))?;
    Ok(ExitCode::SUCCESS)
}

fn inspect(args: &[String]) -> Result<ExitCode, String> {
    let gens = parse_generators(&args.join(" ")).map_err(|e| e.to_string())?;
    let s = NumericalSemigroup::from_generators(&gens).map_err(|e| e.to_string())?;
    println!("{}", InspectRecord::new(&s).to_json());
    Ok(ExitCode::SUCCESS)
}

fn verify(name: &str, mut params: SweepParams, run: &RunArgs) -> Result<ExitCode, String> {
    let check: Check = name.parse().map_err(|_| {
        let known: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
        format!("unknown check {name:?}; expected one of {}", known.join(", "))
    })?;
    let workers = run.workers()?;
    let depth = run.split_depth(params.max_genus, workers);
    params = params.split(depth, workers);
    let report = lab::run(check, &params).map_err(|e| e.to_string())?;
    run.emit(&report.table)?;
    let mut out = io::stdout().lock();
    for w in &report.violations {
        writeln!(out, "{w}").map_err(|e| e.to_string())?;
    }
    eprintln!("{}", report.summary());
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn report(kind: ReportKind, max_genus: u32, epsilon: f64, run: &RunArgs) -> Result<ExitCode, String> {
    let options = CensusOptions { by_multiplicity_and_frobenius: matches!(kind, ReportKind::Concentration) };
    let census =
        enumerate(&config(max_genus, run)?, CensusTable::new(max_genus, options)).map_err(|e| e.to_string())?;
    let table = match kind {
        ReportKind::Bounds => bounds_table(&census).map_err(|e| e.to_string())?,
        ReportKind::Concentration => {
            concentration_table(&concentration_stats(&census, epsilon).map_err(|e| e.to_string())?)
        }
        ReportKind::Parity => parity_table(&census, max_genus),
        ReportKind::Strong => {
            let strong = census.strongly_descended_census().map_err(|e| e.to_string())?;
            let mut t = Table::new(&["g", "strong", "count"]);
            for (g, &s) in strong.strong.iter().enumerate() {
                t.push(vec![g.into(), s.into(), census.n(g as u32).into()]);
            }
            t
        }
    };
    run.emit(&table)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Count { max_genus, by, max_frobenius, run } => count(*max_genus, *by, *max_frobenius, run),
        Command::Inspect { generators } => inspect(generators),
        Command::Verify { name, max_genus, max_frobenius, max_multiplicity, run } => {
            let mut params = SweepParams::new(*max_genus);
            params.max_frobenius = *max_frobenius;
            params.max_multiplicity = *max_multiplicity;
            verify(name, params, run)
        }
        Command::Report { kind, max_genus, epsilon, run } => report(*kind, *max_genus, *epsilon, run),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })
}
