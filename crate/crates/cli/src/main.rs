//! `regcc`: classify regular languages by communication complexity and check
//! the supporting oracles from the command line.

use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use regcc_core::automata::{builtin_language, BUILTIN_LANGUAGES};
use regcc_core::classification::{
    builtin_monoid, classify_language, classify_nondet, SearchBounds, BUILTIN_MONOIDS,
    DEFAULT_MAX_WITNESS_LEN,
};
use regcc_core::commcc::{
    exact_deterministic_cc, format_ranges, language_problem, max_fooling_set, min_cover,
    min_disjoint_cover, BuiltinKind, CommFunction, Cover, BUILTIN_FUNCTIONS,
};
use regcc_core::monoid::{syntactic_ordered_monoid, DEFAULT_ELEMENT_CAP};
use regcc_core::reductions::{
    builtin_reduction, search_local_reduction_nonexistence, verify_reduction, Descriptor,
    SearchMode, VerificationReport, BUILTIN_REDUCTIONS,
};
use regcc_core::Dfa;

#[derive(Parser)]
#[command(
    name = "regcc",
    version,
    about = "Communication complexity of regular languages"
)]
struct Cli {
    /// Progress and timings on standard error.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect or minimize an automaton.
    #[command(subcommand)]
    Dfa(DfaCommand),
    /// Syntactic monoids.
    #[command(subcommand)]
    Monoid(MonoidCommand),
    /// Complexity tier of a language with certificates.
    Classify {
        /// DFA file, `builtin:LANGUAGE` or `builtin:MONOID`.
        file: String,
        #[arg(long, default_value_t = DEFAULT_MAX_WITNESS_LEN)]
        max_witness_len: usize,
    },
    /// Exact communication-complexity oracles.
    #[command(subcommand)]
    Cc(CcCommand),
    /// Reductions between problems.
    #[command(subcommand)]
    Reduce(ReduceCommand),
    /// Named built-in objects.
    #[command(subcommand)]
    Builtin(BuiltinCommand),
}

#[derive(Subcommand)]
enum DfaCommand {
    /// Print the automaton in canonical form.
    Show { file: String },
    /// Print the minimal automaton.
    Minimize { file: String },
}

#[derive(Subcommand)]
enum MonoidCommand {
    /// Transition monoid of the minimal automaton.
    Compute {
        file: String,
        /// Include the syntactic order.
        #[arg(long)]
        ordered: bool,
    },
}

#[derive(Args)]
struct FunctionArgs {
    /// Built-in function name, such as EQ or IP.
    name: String,
    #[arg(long)]
    n: usize,
    /// Modulus for IP.
    #[arg(long)]
    q: Option<usize>,
}

#[derive(Subcommand)]
enum CcCommand {
    /// Deterministic complexity by exhaustive protocol search.
    Exact(FunctionArgs),
    /// Minimum cover by monochromatic rectangles of one color.
    Cover {
        #[command(flatten)]
        f: FunctionArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
        color: u8,
    },
    /// Minimum partition into monochromatic rectangles.
    Disjoint(FunctionArgs),
    /// Maximum fooling set.
    Fooling {
        #[command(flatten)]
        f: FunctionArgs,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
        color: u8,
    },
    /// Covers and fooling sets of a language's length-n problem.
    Language {
        file: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum ReduceCommand {
    /// Check a built-in reduction on every in-domain input.
    Verify {
        name: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
    },
    /// Bounded search for a local reduction from PDISJ to L5.
    SearchNonexistence {
        #[arg(long, default_value_t = 2)]
        s_max: usize,
        /// Drop the requirement eval(UvU) ≰ eval(U).
        #[arg(long)]
        relaxed: bool,
        /// Enumerate every matrix instead of pruning by letter balance.
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Subcommand)]
enum BuiltinCommand {
    /// Names of all built-in languages, monoids, functions and reductions.
    List,
}

fn progress(verbose: bool, msg: impl FnOnce() -> String) {
    if verbose {
        eprintln!("{}", msg());
    }
}

fn load_dfa(source: &str) -> Result<Dfa> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return Ok(builtin_language(name)?);
    }
    let text =
        std::fs::read_to_string(Path::new(source)).with_context(|| format!("reading {source}"))?;
    Dfa::parse(&text).with_context(|| format!("parsing {source}"))
}

fn toml_doc<T: Serialize>(value: &T) -> Result<String> {
    Ok(toml::to_string(value)?)
}

#[derive(Serialize)]
struct RectangleDoc {
    color: u8,
    rows: String,
    cols: String,
}

fn rectangles(cover: &Cover) -> Vec<RectangleDoc> {
    cover
        .rectangles
        .iter()
        .map(|(z, r)| RectangleDoc {
            color: u8::from(*z),
            rows: format_ranges(&r.rows),
            cols: format_ranges(&r.cols),
        })
        .collect()
}

#[derive(Serialize)]
struct FunctionHeader {
    function: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<usize>,
}

fn function(args: &FunctionArgs) -> Result<(FunctionHeader, CommFunction)> {
    let kind = BuiltinKind::parse(&args.name, args.q)?;
    let f = kind.matrix(args.n)?;
    let header = FunctionHeader {
        function: kind.name().to_string(),
        n: args.n,
        q: match kind {
            BuiltinKind::Ip(q) => Some(q),
            _ => None,
        },
    };
    Ok((header, f))
}

fn cc(cmd: &CcCommand, verbose: bool) -> Result<String> {
    match cmd {
        CcCommand::Exact(args) => {
            #[derive(Serialize)]
            struct Doc {
                #[serde(flatten)]
                header: FunctionHeader,
                measure: &'static str,
                value: usize,
                leaves: usize,
            }
            let (header, f) = function(args)?;
            let (d, tree) = exact_deterministic_cc(&f)?;
            progress(verbose, || {
                format!("protocol tree with {} leaves", tree.leaf_count())
            });
            toml_doc(&Doc {
                header,
                measure: "D",
                value: d,
                leaves: tree.leaf_count(),
            })
        }
        CcCommand::Cover { f: args, color } => {
            #[derive(Serialize)]
            struct Doc {
                #[serde(flatten)]
                header: FunctionHeader,
                measure: String,
                value: usize,
                log2_ceil: u32,
                rectangles: Vec<RectangleDoc>,
            }
            let (header, f) = function(args)?;
            let (size, cover) = min_cover(&f, *color == 1)?;
            toml_doc(&Doc {
                header,
                measure: format!("C{color}"),
                value: size,
                log2_ceil: size.max(1).next_power_of_two().trailing_zeros(),
                rectangles: rectangles(&cover),
            })
        }
        CcCommand::Disjoint(args) => {
            #[derive(Serialize)]
            struct Doc {
                #[serde(flatten)]
                header: FunctionHeader,
                measure: &'static str,
                value: usize,
                rectangles: Vec<RectangleDoc>,
            }
            let (header, f) = function(args)?;
            let (size, cover) = min_disjoint_cover(&f)?;
            toml_doc(&Doc {
                header,
                measure: "CD",
                value: size,
                rectangles: rectangles(&cover),
            })
        }
        CcCommand::Fooling { f: args, color } => {
            #[derive(Serialize)]
            struct Doc {
                #[serde(flatten)]
                header: FunctionHeader,
                color: u8,
                value: usize,
                cells: Vec<[String; 2]>,
            }
            let (header, f) = function(args)?;
            let set = max_fooling_set(&f, *color == 1);
            toml_doc(&Doc {
                header,
                color: *color,
                value: set.len(),
                cells: set
                    .iter()
                    .map(|&(r, c)| [f.row_labels()[r].clone(), f.col_labels()[c].clone()])
                    .collect(),
            })
        }
        CcCommand::Language { file, n } => {
            #[derive(Serialize)]
            struct Doc {
                n: usize,
                rows: usize,
                cols: usize,
                ones: usize,
                c0: usize,
                c1: usize,
                fooling0: usize,
                fooling1: usize,
            }
            let d = load_dfa(file)?;
            let f = language_problem(&d, *n)?;
            progress(verbose, || {
                format!("matrix {} × {}", f.row_count(), f.col_count())
            });
            let (c0, _) = min_cover(&f, false)?;
            let (c1, _) = min_cover(&f, true)?;
            toml_doc(&Doc {
                n: *n,
                rows: f.row_count(),
                cols: f.col_count(),
                ones: f.count(true),
                c0,
                c1,
                fooling0: max_fooling_set(&f, false).len(),
                fooling1: max_fooling_set(&f, true).len(),
            })
        }
    }
}

/// Default verification depth per reduction, sized to finish in seconds.
fn default_n_max(name: &str) -> usize {
    match name.to_ascii_lowercase().as_str() {
        "pdisj_to_ipq" => 10,
        "ipq_to_group" => 8,
        "lt_to_noncommutative" => 3,
        _ => 6,
    }
}

fn run(cli: &Cli) -> Result<String> {
    let verbose = cli.verbose;
    match &cli.command {
        Command::Dfa(DfaCommand::Show { file }) => Ok(load_dfa(file)?.serialize()),
        Command::Dfa(DfaCommand::Minimize { file }) => Ok(load_dfa(file)?.minimize().serialize()),
        Command::Monoid(MonoidCommand::Compute { file, ordered }) => {
            let syn = syntactic_ordered_monoid(&load_dfa(file)?, DEFAULT_ELEMENT_CAP)?;
            let m = &syn.ordered;
            Ok(m.monoid.serialize(ordered.then_some(&m.order)))
        }
        Command::Classify {
            file,
            max_witness_len,
        } => {
            let bounds = SearchBounds {
                max_witness_len: *max_witness_len,
            };
            let started = Instant::now();
            let report = match file.strip_prefix("builtin:") {
                Some(name) if builtin_language(name).is_err() => {
                    classify_nondet(&builtin_monoid(name)?, bounds)?
                }
                _ => classify_language(&load_dfa(file)?, bounds)?,
            };
            progress(verbose, || format!("classified in {:?}", started.elapsed()));
            Ok(report.report())
        }
        Command::Cc(cmd) => cc(cmd, verbose),
        Command::Reduce(ReduceCommand::Verify { name, n_max, q }) => {
            let r = builtin_reduction(name, *q)?;
            let n_max = n_max.unwrap_or_else(|| default_n_max(name));
            let started = Instant::now();
            let report = verify_reduction(&r, n_max)?;
            progress(verbose, || format!("verified in {:?}", started.elapsed()));
            #[derive(Serialize)]
            struct Doc {
                reduction: Descriptor,
                report: VerificationReport,
            }
            toml_doc(&Doc {
                reduction: r.descriptor_doc(),
                report,
            })
        }
        Command::Reduce(ReduceCommand::SearchNonexistence {
            s_max,
            relaxed,
            exhaustive,
        }) => {
            let mode = if *exhaustive {
                SearchMode::Exhaustive
            } else {
                SearchMode::Pruned
            };
            Ok(search_local_reduction_nonexistence(*s_max, mode, *relaxed)?.serialize())
        }
        Command::Builtin(BuiltinCommand::List) => {
            #[derive(Serialize)]
            struct Doc {
                languages: Vec<&'static str>,
                monoids: Vec<&'static str>,
                functions: Vec<&'static str>,
                reductions: Vec<&'static str>,
            }
            toml_doc(&Doc {
                languages: BUILTIN_LANGUAGES.to_vec(),
                monoids: BUILTIN_MONOIDS.to_vec(),
                functions: BUILTIN_FUNCTIONS.to_vec(),
                reductions: BUILTIN_REDUCTIONS.to_vec(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
