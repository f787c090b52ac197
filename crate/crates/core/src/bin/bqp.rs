use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bqp::analysis::analyze;
use bqp::bench::bench;
use bqp::dispatch::{dispatch_solve, Algorithm, SolveOptions};
use bqp::generate::{generate_instance, Kind};
use bqp::io::{format_cut_instance, format_instance, format_qp01, format_solution, parse_instance, ParsedInstance};
use bqp::solver::cut::DEFAULT_ELIMINATOR_LIMIT;
use bqp::solver::enumerate::DEFAULT_M_LIMIT;
use bqp::solver::fixed_rank::DEFAULT_P_LIMIT;
use bqp::solver::rank_one::{breakpoint_table, RankOneForm};
use bqp::transform::{bqp01_to_cut, bqp01_to_qp01, cut_to_bqp01, to_homogeneous};
use bqp::{Error, Instance, Result};

#[derive(Parser)]
#[command(name = "bqp", version, about = "Exact solvers for bipartite 0-1 quadratic programs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Homogeneous,
    Cut,
    Qp01,
}

#[derive(clap::Args)]
struct Limits {
    #[arg(long, default_value_t = DEFAULT_P_LIMIT)]
    p_limit: usize,
    #[arg(long, default_value_t = DEFAULT_M_LIMIT)]
    m_limit: usize,
    #[arg(long, default_value_t = DEFAULT_ELIMINATOR_LIMIT)]
    eliminator_limit: usize,
    /// Try every basis split in the fixed-rank solver.
    #[arg(long)]
    no_dual_filter: bool,
}

impl Limits {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            p_limit: self.p_limit,
            m_limit: self.m_limit,
            eliminator_limit: self.eliminator_limit,
            dual_filter: !self.no_dual_filter,
            ..SolveOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file (`-` reads stdin).
    Solve {
        input: String,
        #[arg(long, default_value = "auto")]
        algorithm: String,
        #[command(flatten)]
        limits: Limits,
        /// Print the h1/h2 breakpoint tables of a rank-one instance.
        #[arg(long)]
        dump_breakpoints: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Report rank, additivity, nonnegativity and the minimum eliminator.
    Analyze {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Rewrite an instance in another form.
    Transform {
        input: String,
        #[arg(long, value_enum)]
        to: Form,
    },
    /// Print a random instance of the given kind.
    Gen {
        /// general, rank<p>, additive, nonnegative or sparse-negative<k>
        kind: String,
        m: usize,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        range: i64,
    },
    /// Run several algorithms on each instance and require equal values.
    Bench {
        inputs: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "oracle,auto")]
        algorithms: Vec<String>,
        #[command(flatten)]
        limits: Limits,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn read_input(path: &str) -> Result<ParsedInstance> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?
    };
    parse_instance(&text)
}

/// The 0-1 instance to solve; cut-form input maps `+1 ↔ 1`, `-1 ↔ 0`.
fn as_bqp01(parsed: &ParsedInstance) -> Instance {
    match parsed {
        ParsedInstance::Bqp01(inst) => inst.clone(),
        ParsedInstance::Bqp11(cut) => cut_to_bqp01(cut),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve {
            input,
            algorithm,
            limits,
            dump_breakpoints,
            format,
        } => {
            let parsed = read_input(&input)?;
            let inst = as_bqp01(&parsed);
            if dump_breakpoints {
                print!("{}", breakpoint_table(&RankOneForm::from_instance(&inst)?));
            }
            let report = dispatch_solve(&inst, algorithm.parse::<Algorithm>()?, &limits.options())?;
            if matches!(parsed, ParsedInstance::Bqp11(_)) {
                println!("# spins: 1 means +1, 0 means -1");
            }
            match format {
                Format::Text => print!("{report}\n{}", format_solution(&report.solution)),
                Format::Kv => print!("{}", report.to_kv()),
            }
        }
        Command::Analyze { input, format } => {
            let report = analyze(read_input(&input)?.data());
            match format {
                Format::Text => println!("{report}"),
                Format::Kv => print!("{}", report.to_kv()),
            }
        }
        Command::Transform { input, to } => {
            let parsed = read_input(&input)?;
            let out = match (to, &parsed) {
                (Form::Cut, ParsedInstance::Bqp01(inst)) => format_cut_instance(&bqp01_to_cut(inst)),
                (Form::Cut, ParsedInstance::Bqp11(cut)) => format_instance(&cut_to_bqp01(cut)),
                (Form::Homogeneous, p) => {
                    let (h, big_m) = to_homogeneous(&as_bqp01(p));
                    format!("# optimum minus {big_m} is the original optimum\n{}", format_instance(&h))
                }
                (Form::Qp01, p) => format_qp01(&bqp01_to_qp01(&as_bqp01(p))),
            };
            print!("{out}");
        }
        Command::Gen { kind, m, n, seed, range } => {
            print!("{}", format_instance(&generate_instance(kind.parse::<Kind>()?, m, n, seed, range)?));
        }
        Command::Bench {
            inputs,
            algorithms,
            limits,
            format,
        } => {
            let instances = inputs
                .iter()
                .map(|p| Ok((p.clone(), as_bqp01(&read_input(p)?))))
                .collect::<Result<Vec<_>>>()?;
            let algorithms = algorithms
                .iter()
                .map(|a| a.parse())
                .collect::<Result<Vec<Algorithm>>>()?;
            let table = bench(&instances, &algorithms, &limits.options())?;
            match format {
                Format::Text => print!("{}", table.to_text()),
                Format::Kv => print!("{}", table.to_kv()),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bqp: {e}");
            ExitCode::from(match e {
                Error::LimitExceeded { .. } | Error::NoSolver { .. } | Error::NotApplicable(_) => 2,
                Error::Parse { .. } => 3,
                Error::Disagreement(_) => 4,
                _ => 1,
            })
        }
    }
}
