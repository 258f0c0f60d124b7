//! Command-line driver for the `soembed` library.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use soembed::codes::{self, even_code, hamming, reed_muller, simplex};
use soembed::embed::{embed_shortest, embed_with, shortest_length, DfsConfig};
use soembed::fixtures::{self, Fixture};
use soembed::orthosearch::{
    coset_representatives, orthogonal_group_order, sweep_selfdual_embeddings, DEFAULT_GROUP_BOUND,
};
use soembed::search::{search_all, SearchConfig};
use soembed::{Error, LinearCode, Strategy};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CAPABILITY: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "soembed",
    version,
    about = "Shortest self-orthogonal embeddings of binary linear codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print parameters, hull dimension, flags and the shortest embedding length.
    Info(SourceArgs),
    /// Build one shortest self-orthogonal embedding.
    Embed {
        #[command(flatten)]
        source: SourceArgs,
        /// identity, dfs, even-canonical, orthobasis or theorem-odd-case
        #[arg(long)]
        strategy: Option<Strategy>,
        /// Write the embedded code to this file (`n k` format).
        #[arg(long, value_name = "PATH")]
        emit: Option<PathBuf>,
    },
    /// Enumerate embeddings up to permutation equivalence.
    Search {
        #[command(flatten)]
        source: SourceArgs,
        /// Columns to add; defaults to the shortest length.
        #[arg(long)]
        m: Option<usize>,
        /// Report every class instead of the first one found.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Tree depth at which work is split between threads.
        #[arg(long, default_value_t = 2)]
        partition_depth: usize,
        /// Search all first-row tails instead of the `1..10..0` patterns.
        #[arg(long)]
        no_normalize: bool,
    },
    /// Sweep the self-dual embeddings of an odd dual-containing code.
    Sweep {
        #[command(flatten)]
        source: SourceArgs,
        /// Count or list the orthogonal group O(s, 2) instead.
        #[arg(long, value_name = "S", conflicts_with_all = ["file", "hamming", "simplex", "even", "rm"])]
        orthogroup: Option<usize>,
        #[arg(long, requires = "orthogroup")]
        count_only: bool,
    },
    /// Check the built-in fixture table.
    Verify {
        #[arg(long, required = true)]
        fixtures: bool,
    },
}

/// A code file or one of the inline families.
#[derive(Args, Debug, Default)]
#[group(multiple = false)]
pub struct SourceArgs {
    /// Code file: header `n k` then 0/1 rows, or `hex n k` then hex rows.
    pub file: Option<PathBuf>,
    /// Hamming code of redundancy r.
    #[arg(long, value_name = "R")]
    pub hamming: Option<usize>,
    /// Simplex code of dimension r.
    #[arg(long, value_name = "R")]
    pub simplex: Option<usize>,
    /// Even-weight code of length n.
    #[arg(long, value_name = "N")]
    pub even: Option<usize>,
    /// Reed-Muller code RM(r, m).
    #[arg(long, num_args = 2, value_names = ["R", "M"])]
    pub rm: Option<Vec<usize>>,
}

impl SourceArgs {
    fn is_empty(&self) -> bool {
        self.file.is_none()
            && self.hamming.is_none()
            && self.simplex.is_none()
            && self.even.is_none()
            && self.rm.is_none()
    }

    pub fn load(&self) -> Result<LinearCode, Failure> {
        if let Some(r) = self.hamming {
            return Ok(hamming(r)?);
        }
        if let Some(r) = self.simplex {
            return Ok(simplex(r)?);
        }
        if let Some(n) = self.even {
            return Ok(even_code(n)?);
        }
        if let Some(rm) = &self.rm {
            return Ok(reed_muller(rm[0], rm[1])?);
        }
        let Some(path) = &self.file else {
            return Err(Failure::Usage(
                "give a code file or one of --hamming, --simplex, --even, --rm".into(),
            ));
        };
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        codes::parse_code_file(&text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

/// Why a command stopped, mapped onto an exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verify(String),
    Capability(String),
    Io(io::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Verify(_) | Failure::Io(_) => EXIT_VERIFY,
            Failure::Capability(_) => EXIT_CAPABILITY,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Verify(m) | Failure::Capability(m) => f.write_str(m),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capability { .. } => Failure::Capability(e.to_string()),
            Error::Infeasible(_) | Error::Structure(_) => Failure::Verify(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// One JSON-lines output record. Field order is part of the format.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub params: (usize, usize, Option<usize>),
    pub weight_distribution: Option<Vec<u64>>,
    pub generator_hex: Vec<String>,
    pub strategy: String,
    pub class_index: Option<usize>,
}

impl Record {
    pub fn new(c: &LinearCode, strategy: &str, class_index: Option<usize>) -> Self {
        let weights = c.weight_distribution().ok();
        Record {
            params: (c.n(), c.k(), weights.and_then(|w| w.min_distance())),
            weight_distribution: weights.map(|w| w.counts().to_vec()),
            generator_hex: codes::emit_hex(c),
            strategy: strategy.to_owned(),
            class_index,
        }
    }

    fn write(&self, out: &mut dyn Write) -> Result<(), Failure> {
        let line = serde_json::to_string(self).expect("records always serialize");
        writeln!(out, "{line}")?;
        Ok(())
    }
}

/// The one-line `info` summary.
pub fn info_line(c: &LinearCode) -> String {
    let d = match c.min_distance() {
        Ok(d) => d.to_string(),
        Err(_) if c.k() == 0 => "-".into(),
        Err(_) => "?".into(),
    };
    let mut s = format!(
        "n={} k={} d={d} hull={} {}",
        c.n(),
        c.k(),
        c.hull_dim(),
        if c.is_even() { "even" } else { "odd" }
    );
    if c.is_self_orthogonal() {
        s.push_str(" self-orthogonal");
    }
    if c.is_lcd() {
        s.push_str(" lcd");
    }
    if c.contains_dual() {
        s.push_str(" dual-containing");
    }
    s.push_str(&format!(" predict_m={}", shortest_length(c)));
    s
}

fn check_fixture(f: &Fixture) -> Result<(), String> {
    let c = (f.build)().map_err(|e| e.to_string())?;
    if c.params() != (f.n, f.k) {
        return Err(format!("parameters {:?}", c.params()));
    }
    if c.is_self_orthogonal() != f.self_orthogonal {
        return Err(format!("self-orthogonal = {}", c.is_self_orthogonal()));
    }
    if c.hull_dim() != f.hull {
        return Err(format!("hull = {}", c.hull_dim()));
    }
    let w = c.weight_distribution().map_err(|e| e.to_string())?;
    if w.min_distance() != Some(f.d) {
        return Err(format!("d = {:?}", w.min_distance()));
    }
    if let Some(expect) = f.weights {
        let got: Vec<(usize, u64)> = w.nonzero().collect();
        if got != expect {
            return Err(format!("weights {got:?}"));
        }
    }
    Ok(())
}

/// Runs a parsed command, writing records to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Info(source) => {
            let c = source.load()?;
            writeln!(out, "{}", info_line(&c))?;
        }
        Command::Embed {
            source,
            strategy,
            emit,
        } => {
            let c = source.load()?;
            let cfg = DfsConfig::default();
            let e = match strategy {
                Some(s) => embed_with(&c, *s, &cfg)?,
                None => embed_shortest(&c, &cfg)?,
            };
            e.verify()?;
            Record::new(&e.result, e.strategy.as_str(), None).write(out)?;
            if let Some(path) = emit {
                fs::write(path, codes::write_code_file(&e.result))?;
            }
        }
        Command::Search {
            source,
            m,
            all,
            threads,
            partition_depth,
            no_normalize,
        } => {
            let c = source.load()?;
            let cfg = SearchConfig {
                m: *m,
                normalize_first_row: !no_normalize,
                max_solutions: if *all { None } else { Some(1) },
                thread_partition_depth: if *threads > 1 { *partition_depth } else { 0 },
                threads: (*threads).max(1),
                ..SearchConfig::default()
            };
            let outcome = search_all(&c, &cfg)?;
            for (i, rep) in outcome.classes.representatives().enumerate() {
                Record::new(rep, "search", Some(i)).write(out)?;
            }
            writeln!(
                err,
                "m={} leaves={} classes={} undecided={}",
                outcome.m,
                outcome.distinct_leaves,
                outcome.classes.len(),
                outcome.classes.undecided()
            )?;
            if outcome.classes.undecided() > 0 {
                return Err(Failure::Capability(
                    "equivalence budget exhausted for some leaves".into(),
                ));
            }
        }
        Command::Sweep {
            source,
            orthogroup,
            count_only,
        } => {
            if let Some(s) = *orthogroup {
                let order = orthogonal_group_order(s, DEFAULT_GROUP_BOUND)?;
                if *count_only {
                    writeln!(out, "{order}")?;
                } else {
                    let cosets = coset_representatives(s)?.len();
                    writeln!(out, "order={order} cosets={cosets}")?;
                }
                return Ok(());
            }
            if source.is_empty() {
                return Err(Failure::Usage(
                    "give a code file, an inline family or --orthogroup".into(),
                ));
            }
            let c = source.load()?;
            let report = sweep_selfdual_embeddings(&c)?;
            for (i, class) in report.classes.iter().enumerate() {
                Record::new(&class.code, Strategy::Orthobasis.as_str(), Some(i)).write(out)?;
            }
            let ds: Vec<String> = report.classes.iter().map(|c| c.d.to_string()).collect();
            writeln!(
                err,
                "swept {} coset representatives (s={}): {} classes, d in {{{}}}, undecided={}",
                report.matrices_swept,
                report.frame.s(),
                report.classes.len(),
                ds.join(", "),
                report.undecided
            )?;
            if report.undecided > 0 {
                return Err(Failure::Capability(
                    "equivalence budget exhausted for some codes".into(),
                ));
            }
        }
        Command::Verify { .. } => {
            let mut failed = 0;
            for f in fixtures::fixture_set() {
                match check_fixture(&f) {
                    Ok(()) => writeln!(
                        out,
                        "PASS {} [{},{},{}] hull={}{}",
                        f.name,
                        f.n,
                        f.k,
                        f.d,
                        f.hull,
                        if f.self_orthogonal {
                            " self-orthogonal"
                        } else {
                            ""
                        }
                    )?,
                    Err(why) => {
                        failed += 1;
                        writeln!(out, "FAIL {}: {why}", f.name)?;
                    }
                }
            }
            if failed > 0 {
                return Err(Failure::Verify(format!("{failed} fixture(s) failed")));
            }
        }
    }
    Ok(())
}

/// Exit code and message for a finished command.
pub fn exit_code(result: &Result<(), Failure>) -> u8 {
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => f.exit_code(),
    }
}
