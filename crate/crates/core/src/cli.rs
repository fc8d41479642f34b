//! Command-line front end. `main.rs` only forwards to [`main_with_args`].
//!
//! Exit codes: 0 success, 1 divergence between classify and an oracle, 2 usage
//! or parse error, 3 enumeration guard.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::classify::{classify, clean, ClassificationReport};
use crate::error::Result;
use crate::ideal::{path_complex, path_ideal};
use crate::oracles::{all_instances, check_instance, cross_validate, InstanceRecord};
use crate::tree::RootedTree;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIVERGENCE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "path-ideals",
    version,
    about = "Classify path ideals of directed rooted trees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify I_t of one tree.
    Analyze(InstanceArgs),
    /// Run every oracle on one tree and compare with the classification.
    OracleCheck(InstanceArgs),
    /// Cross-validate all valid t on a seeded random corpus.
    Batch(CorpusArgs),
    /// Write a seeded random corpus of trees.
    Gen(CorpusArgs),
    /// Export the facet complex, the Stanley–Reisner complex, the ideal or a DOT drawing.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Facet,
    StanleyReisner,
    Ideal,
    Dot,
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// Tree file in text or JSON form; `-` reads standard input.
    #[arg(long)]
    pub input: PathBuf,
    /// Path length in vertices.
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
    pub t: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(2..=64))]
    pub n_max: u64,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    #[arg(long, value_enum, default_value_t = Which::Facet)]
    pub which: Which,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Diagnostics go to `stderr`.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    match run(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_guard() {
                EXIT_GUARD
            } else {
                EXIT_USAGE
            }
        }
    }
}

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Analyze(a) => cmd_analyze(a, stdout),
        Command::OracleCheck(a) => cmd_oracle_check(a, stdout),
        Command::Batch(a) => cmd_batch(a, stdout),
        Command::Gen(a) => cmd_gen(a, stdout),
        Command::Export(a) => cmd_export(a, stdout),
    }
}

fn read_tree(path: &Path) -> Result<RootedTree> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    RootedTree::parse(&text)
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn cmd_analyze(args: &InstanceArgs, stdout: &mut dyn Write) -> Result<i32> {
    let tree = read_tree(&args.input)?;
    let report = classify(&tree, args.t as usize)?;
    let text = match args.format {
        Format::Json => pretty(&report),
        Format::Text => report_text(&report),
    };
    emit(&args.out, &text, stdout)?;
    Ok(EXIT_OK)
}

/// Human-readable rendering of a report.
pub fn report_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n = {}, t = {}", r.n, r.t);
    if r.zero_ideal {
        let _ = writeln!(s, "ideal: (0)");
    } else {
        let _ = writeln!(s, "ideal: ({})", r.generators.join(", "));
    }
    let _ = writeln!(s, "cleaned vertices: {}", r.clean_removed);
    let _ = writeln!(s, "clean form is a t-chain: {}", r.clean_is_t_chain);
    let _ = writeln!(s, "t-partitioned: {}", r.partitioned);
    let _ = writeln!(s, "fitting: {}", r.fitting);
    if let Some(c) = &r.certificate {
        let facets: Vec<String> = c.facets.iter().map(|f| f.to_string()).collect();
        let _ = writeln!(s, "partition: {}", facets.join(" "));
        for b in &c.branches {
            let _ = writeln!(
                s,
                "branch {} at {} ({}, level {})",
                b.path,
                b.attach_vertex,
                if b.initial { "initial" } else { "non-initial" },
                b.branch_level
            );
        }
    }
    if let Some(w) = &r.failure_witness {
        let _ = writeln!(s, "witness: {w}");
    }
    for (name, value) in [
        ("unmixed", r.unmixed),
        ("cohen_macaulay", r.cohen_macaulay),
        ("serre_sr", r.serre_sr),
        ("gorenstein", r.gorenstein),
        ("complete_intersection", r.complete_intersection),
        ("matroid", r.matroid),
        ("all_powers_cm", r.all_powers_cm),
    ] {
        let _ = writeln!(s, "{name}: {value}");
    }
    let opt = |v: Option<usize>| v.map_or("unknown".to_string(), |v| v.to_string());
    let _ = writeln!(s, "height: {}", r.height);
    let _ = writeln!(s, "krull_dim: {}", r.krull_dim);
    let _ = writeln!(s, "depth: {}", opt(r.depth));
    let _ = writeln!(s, "proj_dim: {}", opt(r.proj_dim));
    s
}

pub fn cmd_oracle_check(args: &InstanceArgs, stdout: &mut dyn Write) -> Result<i32> {
    let tree = read_tree(&args.input)?;
    let t = args.t as usize;
    // Surface t and tree errors as usage errors before any oracle runs.
    classify(&tree, t)?;
    let record = check_instance(0, &tree, t);
    let text = match args.format {
        Format::Json => pretty(&record),
        Format::Text => record_text(&record),
    };
    emit(&args.out, &text, stdout)?;
    Ok(if record.guard.is_some() {
        EXIT_GUARD
    } else if record.divergences.is_empty() {
        EXIT_OK
    } else {
        EXIT_DIVERGENCE
    })
}

fn record_text(r: &InstanceRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "instance {}: n = {}, t = {}, fitting = {}, gorenstein = {}",
        r.index, r.n, r.t, r.fitting, r.gorenstein
    );
    if let Some(g) = &r.guard {
        let _ = writeln!(s, "guard: {g}");
    }
    for o in &r.oracles {
        let _ = write!(s, "  {}: {}", o.name, o.verdict);
        if let Some(w) = &o.witness {
            let _ = write!(
                s,
                " {}",
                serde_json::to_string(w).expect("witness serializes")
            );
        }
        s.push('\n');
    }
    for d in &r.divergences {
        let _ = writeln!(s, "  DIVERGENCE: {d}");
    }
    s
}

pub fn cmd_batch(args: &CorpusArgs, stdout: &mut dyn Write) -> Result<i32> {
    let trees = RootedTree::random_corpus(args.count, args.n_max as usize, args.seed)?;
    let result = cross_validate(&all_instances(&trees));
    let text = match args.format {
        Format::Json => result.to_json_lines(),
        Format::Text => {
            let mut s = String::new();
            for r in result.records.iter().filter(|r| !r.agrees()) {
                s.push_str(&record_text(r));
            }
            let m = &result.summary;
            let _ = writeln!(
                s,
                "instances: {}, agreements: {}, cohen_macaulay: {}, gorenstein: {}, divergences: {}, guard breaches: {}",
                m.instances, m.agreements, m.cohen_macaulay, m.gorenstein, m.divergences, m.guard_breaches
            );
            s
        }
    };
    emit(&args.out, &text, stdout)?;
    Ok(if result.summary.divergences == 0 {
        EXIT_OK
    } else {
        EXIT_DIVERGENCE
    })
}

pub fn cmd_gen(args: &CorpusArgs, stdout: &mut dyn Write) -> Result<i32> {
    let trees = RootedTree::random_corpus(args.count, args.n_max as usize, args.seed)?;
    let mut s = String::new();
    for tree in &trees {
        match args.format {
            Format::Json => {
                s.push_str(&tree.to_json());
                s.push('\n');
            }
            Format::Text => {
                s.push_str(&tree.to_text());
                s.push('\n');
            }
        }
    }
    emit(&args.out, &s, stdout)?;
    Ok(EXIT_OK)
}

pub fn cmd_export(args: &ExportArgs, stdout: &mut dyn Write) -> Result<i32> {
    let a = &args.instance;
    let tree = read_tree(&a.input)?;
    let t = a.t as usize;
    let text = match (args.which, a.format) {
        (Which::Dot, _) => tree_dot(&tree, t)?,
        (Which::Facet, Format::Json) => pretty(&path_complex(&tree, t)?.to_file()),
        (Which::StanleyReisner, Format::Json) => {
            pretty(&path_ideal(&tree, t)?.stanley_reisner_complex()?.to_file())
        }
        (Which::Ideal, Format::Json) => pretty(&path_ideal(&tree, t)?.to_file()),
        (Which::Facet, Format::Text) => facets_text(path_complex(&tree, t)?.facets()),
        (Which::StanleyReisner, Format::Text) => {
            facets_text(path_ideal(&tree, t)?.stanley_reisner_complex()?.facets())
        }
        (Which::Ideal, Format::Text) => format!("{}\n", path_ideal(&tree, t)?),
    };
    emit(&a.out, &text, stdout)?;
    Ok(EXIT_OK)
}

fn facets_text(facets: &[crate::VertexSet]) -> String {
    facets.iter().map(|f| format!("{f}\n")).collect()
}

/// Graphviz drawing of `tree`. Vertices deleted by cleaning for `t` and the
/// edges into them are dashed and gray.
pub fn tree_dot(tree: &RootedTree, t: usize) -> Result<String> {
    let removed = clean(tree, t)?.removed;
    let mut s = String::from("digraph tree {\n  node [shape=circle];\n");
    for v in tree.vertices().iter() {
        let _ = write!(s, "  {v} [label=\"v{v}\"");
        if v == tree.root() {
            s.push_str(", peripheries=2");
        }
        if removed.contains(v) {
            s.push_str(", style=dashed, color=gray, fontcolor=gray");
        }
        s.push_str("];\n");
    }
    for (p, c) in tree.edges() {
        let _ = write!(s, "  {p} -> {c}");
        if removed.contains(c) {
            s.push_str(" [style=dashed, color=gray]");
        }
        s.push_str(";\n");
    }
    s.push_str("}\n");
    Ok(s)
}
