//! Command-line front end for `mullineux-core`.

pub mod cache;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mullineux_core::bijections::{eta_tilde, eta_tilde_inv};
use mullineux_core::characters::{required_size, verify_identity_with, CountsTable};
use mullineux_core::folding::{check_fold_relations, fold_cartan};
use mullineux_core::mullineux::{fixed_set, irr_alternating_count, mullineux, FixedPointRecord};
use mullineux_core::twisted::{enumerate_twisted, TwistedCrystal};
use mullineux_core::typea::enumerate_kleshchev;
use mullineux_core::{CrystalKind, Error, Partition};

use cache::Cache;

#[derive(Debug, Parser)]
#[command(
    name = "mull",
    version,
    about = "Mullineux involution and twisted crystals"
)]
pub struct Cli {
    /// Bypass the on-disk cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mullineux image of an e-regular partition.
    Compute {
        #[arg(short)]
        e: usize,
        partition: Partition,
    },
    /// Mullineux-fixed e-regular partitions of n.
    Fixed {
        #[arg(short)]
        e: usize,
        #[arg(short)]
        n: usize,
        /// Append the residue counts to each partition.
        #[arg(long)]
        profile: bool,
        /// One JSON record per line.
        #[arg(long)]
        json: bool,
    },
    /// Crystal graph operations.
    Crystal {
        #[command(subcommand)]
        command: CrystalCommand,
    },
    /// Twisted crystal operations.
    Twisted {
        #[command(subcommand)]
        command: TwistedCommand,
    },
    /// Mullineux-fixed partition attached to a twisted crystal vertex.
    Eta {
        #[command(flatten)]
        kind: TwistedKindArgs,
        partition: Partition,
        /// Print the full relation report as JSON.
        #[arg(long)]
        report: bool,
    },
    /// Distinct-part / self-conjugate bijection.
    Bijection {
        direction: Direction,
        partition: Partition,
    },
    /// Folded Cartan matrix for e.
    FoldCartan {
        #[arg(short)]
        e: usize,
    },
    /// Check the character identity degree by degree.
    Verify {
        #[command(flatten)]
        kind: TwistedKindArgs,
        #[arg(long)]
        max_deg: usize,
        #[arg(long)]
        json: bool,
    },
    /// Alternating-group count (|K_n| + 3 |fixed|) / 2.
    AltCount {
        #[arg(short)]
        e: usize,
        #[arg(short)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CrystalCommand {
    /// Write the crystal graph up to a size bound.
    Export {
        #[arg(long)]
        kind: GraphKindArg,
        #[arg(short, required_if_eq("kind", "typea"), conflicts_with = "ell")]
        e: Option<usize>,
        #[arg(long, required_if_eq_any([("kind", "odd"), ("kind", "even")]))]
        ell: Option<usize>,
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum TwistedCommand {
    /// Canonical path from the empty partition.
    Path {
        #[command(flatten)]
        kind: TwistedKindArgs,
        partition: Partition,
    },
}

#[derive(Debug, Args)]
pub struct TwistedKindArgs {
    #[arg(long)]
    pub kind: KindArg,
    #[arg(long)]
    pub ell: usize,
}

impl TwistedKindArgs {
    fn kind(&self) -> Result<CrystalKind, Error> {
        match self.kind {
            KindArg::Odd => CrystalKind::odd(self.ell),
            KindArg::Even => CrystalKind::even(self.ell),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Odd,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphKindArg {
    Typea,
    Odd,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Jsonl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Dp2sp,
    Sp2dp,
}

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// A command that ran but whose checks did not pass.
#[derive(Debug)]
struct Failed(String);

impl std::fmt::Display for Failed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Failed {}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status. Diagnostics go to stderr as a single line.
pub fn run<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) if !err.use_stderr() => {
            let _ = write!(out, "{err}");
            return EXIT_OK;
        }
        Err(err) => {
            let rendered = err.render().to_string();
            let line: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect();
            eprintln!("{}", line.join(" "));
            return EXIT_USAGE;
        }
    };
    let cache = if cli.no_cache {
        Cache::disabled()
    } else {
        Cache::from_env()
    };
    match execute(&cli.command, &cache, out) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            eprintln!("error: {err:#}");
            let failed = err.downcast_ref::<Failed>().is_some()
                || matches!(
                    err.downcast_ref::<Error>(),
                    Some(Error::InternalConsistency(_))
                );
            if failed {
                EXIT_FAILED
            } else {
                EXIT_USAGE
            }
        }
    }
}

pub fn execute(command: &Command, cache: &Cache, out: &mut impl Write) -> Result<()> {
    match command {
        Command::Compute { e, partition } => {
            writeln!(out, "{}", mullineux(partition, *e)?)?;
        }
        Command::Fixed {
            e,
            n,
            profile,
            json,
        } => {
            let records = cached_fixed_set(cache, *e, *n)?;
            for r in &records {
                if *json {
                    writeln!(out, "{}", serde_json::to_string(r)?)?;
                } else if *profile {
                    let profile: Vec<String> =
                        r.residue_profile.iter().map(usize::to_string).collect();
                    writeln!(out, "{} {}", r.partition, profile.join(","))?;
                } else {
                    writeln!(out, "{}", r.partition)?;
                }
            }
        }
        Command::Crystal {
            command:
                CrystalCommand::Export {
                    kind,
                    e,
                    ell,
                    bound,
                    format,
                    output,
                },
        } => {
            let text = crystal_export(cache, *kind, *e, *ell, *bound, *format)?;
            match output {
                Some(path) => std::fs::write(path, text)
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Twisted {
            command: TwistedCommand::Path { kind, partition },
        } => {
            let word = TwistedCrystal::new(kind.kind()?)?.canonical_path(partition)?;
            writeln!(out, "{}", join_word(&word))?;
        }
        Command::Eta {
            kind,
            partition,
            report,
        } => {
            let r = check_fold_relations(partition, kind.kind()?)?;
            if *report {
                writeln!(out, "{}", serde_json::to_string(&r)?)?;
            } else {
                writeln!(out, "{}", r.image)?;
            }
            if !r.all_passed() {
                let names: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
                return Err(Failed(format!("relations failed: {}", names.join(", "))).into());
            }
        }
        Command::Bijection {
            direction,
            partition,
        } => {
            let image = match direction {
                Direction::Dp2sp => eta_tilde(partition)?,
                Direction::Sp2dp => eta_tilde_inv(partition)?,
            };
            writeln!(out, "{image}")?;
        }
        Command::FoldCartan { e } => {
            for row in fold_cartan(*e)?.matrix {
                let row: Vec<String> = row.iter().map(i64::to_string).collect();
                writeln!(out, "{}", row.join(" "))?;
            }
        }
        Command::Verify {
            kind,
            max_deg,
            json,
        } => {
            let kind = kind.kind()?;
            let max_size = required_size(kind, *max_deg);
            let mut records = Vec::new();
            for n in 0..=max_size {
                records.extend(cached_fixed_set(cache, kind.e(), n)?);
            }
            let table = CountsTable::from_records(kind.e(), max_size, &records)?;
            let report = verify_identity_with(kind, *max_deg, &table)?;
            if *json {
                writeln!(out, "{}", serde_json::to_string(&report)?)?;
            } else {
                write!(out, "{}", identity_table(&report.rows))?;
            }
            if let Some(d) = report.first_failure {
                return Err(Failed(format!("identity fails for {kind} at degree {d}")).into());
            }
        }
        Command::AltCount { e, n } => {
            writeln!(out, "{}", irr_alternating_count(*e, *n)?)?;
        }
    }
    Ok(())
}

fn fixed_key(e: usize, n: usize) -> String {
    format!("fixed-e{e}-n{n}")
}

/// Fixed-point records of size `n`, stored as JSON lines.
pub fn cached_fixed_set(cache: &Cache, e: usize, n: usize) -> Result<Vec<FixedPointRecord>> {
    let payload = cache.get_or_insert_with(&fixed_key(e, n), || {
        let mut s = String::new();
        for r in fixed_set(e, n)? {
            writeln!(s, "{}", serde_json::to_string(&r)?)?;
        }
        Ok(s)
    })?;
    payload
        .lines()
        .map(|line| serde_json::from_str(line).context("malformed cache entry"))
        .collect()
}

fn crystal_export(
    cache: &Cache,
    kind: GraphKindArg,
    e: Option<usize>,
    ell: Option<usize>,
    bound: usize,
    format: Format,
) -> Result<String> {
    let (name, param) = match kind {
        GraphKindArg::Typea => ("typea", e),
        GraphKindArg::Odd => ("odd", ell),
        GraphKindArg::Even => ("even", ell),
    };
    let param = param.context("missing -e/--ell for this kind")?;
    let ext = match format {
        Format::Dot => "dot",
        Format::Jsonl => "jsonl",
    };
    let key = format!("crystal-{name}-{param}-b{bound}-{ext}");
    cache.get_or_insert_with(&key, || {
        let graph = match kind {
            GraphKindArg::Typea => enumerate_kleshchev(param, bound)?,
            GraphKindArg::Odd => enumerate_twisted(CrystalKind::odd(param)?, bound)?,
            GraphKindArg::Even => enumerate_twisted(CrystalKind::even(param)?, bound)?,
        };
        Ok(match format {
            Format::Dot => graph.to_dot(),
            Format::Jsonl => graph.to_jsonl(),
        })
    })
}

fn join_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "-".into();
    }
    let letters: Vec<String> = word.iter().map(usize::to_string).collect();
    letters.join(",")
}

fn identity_table(rows: &[mullineux_core::characters::IdentityRow]) -> String {
    let mut s = format!(
        "{:>6} {:>12} {:>12} {:>12}  {}\n",
        "degree", "lhs", "rhs_counts", "rhs_crystal", "status"
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:>6} {:>12} {:>12} {:>12}  {}",
            r.degree,
            r.lhs,
            r.rhs_counts,
            r.rhs_crystal,
            if r.ok { "ok" } else { "FAIL" }
        );
    }
    s
}
