//! `lucastrick`: terms, partial-sum divisibility, sum tricks, verification
//! suites and OEIS b-files for Lucas and n-nacci sequences.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad flags or unknown id,
//! 3 no closed form for the request, 4 closed form and brute force disagree,
//! 5 `--init` given but no trick exists.

mod output;
mod select;
mod verify;

use std::fmt;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lucastrick_core::divisibility::DEFAULT_MAX_SCAN;
use lucastrick_core::{
    find_common_trick, max_div_index_bruteforce, max_div_index_closed, oeis_sequence, perform_trick, ClosedFamily,
    Error, Integer, OeisId, ScanConfig, TrickCertificate,
};
use serde_json::json;

use output::{emit, print_indexed, Format};
use select::{parse_integer, SequenceArgs};

const MAX_SCAN_ENV: &str = "LUCASTRICK_MAX_SCAN";

#[derive(Debug, Parser)]
#[command(name = "lucastrick", version, about = "Exact Lucas-sequence sums, divisibility and sum tricks")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first terms of a sequence.
    Seq {
        #[command(flatten)]
        sequence: SequenceArgs,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Largest index whose term divides the partial sum.
    Maxdiv {
        #[command(flatten)]
        sequence: SequenceArgs,
        #[command(flatten)]
        range: RangeArgs,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Find the common trick for a recurrence, or perform it on given initial terms.
    Trick {
        #[command(flatten)]
        sequence: SequenceArgs,
        #[command(flatten)]
        range: RangeArgs,
        /// Initial terms at indices 1..=order, comma separated.
        #[arg(long, value_delimiter = ',', value_parser = parse_integer, allow_hyphen_values = true)]
        init: Option<Vec<Integer>>,
        /// Largest m to consider (default n + 2).
        #[arg(long)]
        m_bound: Option<u64>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        #[arg(long, default_value_t = 25, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Dump one of the generated OEIS sequences.
    Oeis {
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
}

#[derive(Debug, Clone, Args)]
struct RangeArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// Run every n up to and including this value.
    #[arg(long)]
    to: Option<u64>,
}

impl RangeArgs {
    fn values(&self) -> Result<std::ops::RangeInclusive<u64>, CliError> {
        let end = self.to.unwrap_or(self.n);
        if end < self.n {
            return Err(CliError::usage("--to must not be below --n"));
        }
        Ok(self.n..=end)
    }
}

#[derive(Debug, Clone, Args)]
#[group(multiple = false)]
struct ModeArgs {
    #[arg(long)]
    closed: bool,
    #[arg(long)]
    brute: bool,
    #[arg(long)]
    both: bool,
}

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(e: impl fmt::Display) -> Self {
        Self { code: 2, message: e.to_string() }
    }

    pub fn runtime(e: impl fmt::Display) -> Self {
        Self { code: 1, message: e.to_string() }
    }

    fn silent(code: u8) -> Self {
        Self { code, message: String::new() }
    }
}

fn scan_config() -> Result<ScanConfig, CliError> {
    match std::env::var(MAX_SCAN_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(|max_index| ScanConfig { max_index })
            .map_err(|e| CliError::usage(format!("{MAX_SCAN_ENV}={v:?}: {e}"))),
        Err(_) => Ok(ScanConfig { max_index: DEFAULT_MAX_SCAN }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("lucastrick: {}", e.message);
            }
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Seq { sequence, count } => {
            let seq = sequence.sequence()?;
            let terms: Vec<Integer> = seq.iter().take(count as usize).collect();
            print_indexed(format, "seq", seq.first_index, &terms);
            Ok(())
        }
        Command::Maxdiv { sequence, range, mode } => maxdiv(format, &sequence, &range, &mode),
        Command::Trick { sequence, range, init, m_bound } => trick(format, &sequence, &range, init, m_bound),
        Command::Verify { suite, bound } => {
            let outcome = verify::run(suite, bound, &scan_config()?)?;
            match format {
                Format::JsonLines => emit(json!({
                    "command": "verify",
                    "suite": format!("{suite:?}").to_lowercase(),
                    "status": outcome.status.as_str(),
                    "summary": outcome.summary,
                    "report": outcome.payload,
                })),
                _ => {
                    println!("{}  {}", outcome.status.as_str(), outcome.summary);
                    for d in &outcome.details {
                        println!("  {d}");
                    }
                }
            }
            match outcome.status {
                verify::Status::Fail => Err(CliError::silent(1)),
                _ => Ok(()),
            }
        }
        Command::Oeis { id, count } => {
            let id: OeisId = id.parse().map_err(CliError::usage)?;
            let values = oeis_sequence(id, count as usize).map_err(CliError::runtime)?;
            print_indexed(format, id.as_str(), id.offset(), &values);
            Ok(())
        }
    }
}

fn maxdiv(format: Format, sequence: &SequenceArgs, range: &RangeArgs, mode: &ModeArgs) -> Result<(), CliError> {
    let seq = sequence.sequence()?;
    let scan = scan_config()?;
    let want_closed = mode.closed || mode.both;
    let want_brute = mode.brute || mode.both || !mode.closed;
    let family = ClosedFamily::of_sequence(&seq);
    if want_closed && family.is_none() {
        return Err(CliError { code: 3, message: "no closed form is known for this sequence".into() });
    }
    let mut mismatch = false;
    for n in range.values()? {
        let closed = match family.filter(|_| want_closed) {
            Some(f) => Some(max_div_index_closed(f, n).map_err(|e| CliError { code: 3, message: e.to_string() })?),
            None => None,
        };
        let brute =
            if want_brute { Some(max_div_index_bruteforce(&seq, n, &scan).map_err(CliError::runtime)?) } else { None };
        let agree = match (&closed, &brute) {
            (Some(c), Some(b)) => Some(c.result == *b),
            _ => None,
        };
        mismatch |= agree == Some(false);
        match format {
            Format::JsonLines => {
                for (mode, result, confidence) in [
                    ("closed", closed.as_ref().map(|c| &c.result), closed.as_ref().map(|c| c.confidence.as_str())),
                    ("brute", brute.as_ref(), brute.as_ref().map(|_| "exhaustive")),
                ] {
                    if let Some(result) = result {
                        emit(json!({
                            "command": "maxdiv",
                            "n": n,
                            "mode": mode,
                            "result": result,
                            "confidence": confidence,
                            "match": agree,
                        }));
                    }
                }
            }
            Format::Text | Format::Bfile => {
                let mut line = format!("n={n}");
                if let Some(c) = &closed {
                    line += &format!(" closed: {} ({})", c.result, c.confidence.as_str());
                }
                if let Some(b) = &brute {
                    if closed.is_some() {
                        line += " brute:";
                    }
                    line += &format!(" {b}");
                }
                match agree {
                    Some(true) => line += " match",
                    Some(false) => line += " MISMATCH",
                    None => {}
                }
                println!("{line}");
            }
        }
    }
    if mismatch {
        return Err(CliError { code: 4, message: "closed form and brute force disagree".into() });
    }
    Ok(())
}

fn certificate_text(c: &TrickCertificate) -> String {
    let kind = serde_json::to_value(c.kind).expect("serializable");
    let mut s = format!("n={} m={} z={} kind={}", c.n, c.m, c.z, kind.as_str().unwrap_or_default());
    if c.periodic {
        s += " periodic";
    }
    s
}

fn trick(
    format: Format,
    sequence: &SequenceArgs,
    range: &RangeArgs,
    init: Option<Vec<Integer>>,
    m_bound: Option<u64>,
) -> Result<(), CliError> {
    let rec = sequence.recurrence()?;
    if init.is_some() && m_bound.is_some() {
        return Err(CliError::usage("--m-bound cannot be combined with --init"));
    }
    let mut missing = false;
    for n in range.values()? {
        match &init {
            None => {
                let bound = m_bound.unwrap_or(n + 2);
                let cert = find_common_trick(&rec, n, bound);
                match format {
                    Format::JsonLines => emit(json!({ "command": "trick", "n": n, "certificate": cert })),
                    _ => match &cert {
                        Some(c) => println!("{}", certificate_text(c)),
                        None => println!("n={n} no common trick"),
                    },
                }
            }
            Some(values) => match perform_trick(values, &rec, n) {
                Ok(t) => match format {
                    Format::JsonLines => emit(json!({ "command": "trick", "n": n, "performed": t })),
                    _ => println!("sum={} term{}={} z={}", t.sum, t.m, t.mth_term, t.z),
                },
                Err(Error::UnsupportedTrick { n, nearby }) => {
                    missing = true;
                    eprintln!("lucastrick: no common trick for n = {n}; nearby n with a trick: {nearby:?}");
                }
                Err(e) => return Err(CliError::usage(e)),
            },
        }
    }
    if missing {
        return Err(CliError::silent(5));
    }
    Ok(())
}
