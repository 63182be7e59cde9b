mod bench;
mod commands;
mod format;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use bench::{Rep, Suite};
use commands::{BitOp, Collection, Special, SpecialOutput};
use format::Format;

/// Giant natural numbers as hereditarily run-length compressed trees.
#[derive(Parser)]
#[command(name = "giant", version)]
struct Cli {
    /// Refuse to print decimal or bij digits of values with more digits than this.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_bits: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert a value between formats.
    Convert {
        from: Format,
        to: Format,
        value: String,
    },
    /// Build a Mersenne, Fermat or perfect number from its exponent.
    Special {
        kind: Special,
        p: String,
        #[arg(long, default_value = "tree")]
        output: SpecialOutput,
    },
    /// Encode comma-separated decimal elements as a natural.
    Encode {
        view: Collection,
        elements: String,
        #[arg(long, default_value = "tree")]
        rep: Format,
    },
    /// Decode a natural into comma-separated decimal elements.
    Decode {
        view: Collection,
        value: String,
        #[arg(long, default_value = "tree")]
        rep: Format,
    },
    /// Bitwise operations through the set view.
    Bits {
        op: BitOp,
        #[arg(required = true)]
        operands: Vec<String>,
        /// Bit length for `not`.
        #[arg(long)]
        bitlen: Option<u64>,
        #[arg(long, default_value = "dec")]
        format: Format,
    },
    /// Print the folded DAG of a value as Graphviz DOT.
    Dot {
        value: String,
        #[arg(long, default_value = "dec")]
        from: Format,
    },
    /// Run the timed benchmark suite.
    Bench {
        #[arg(default_value = "all")]
        suite: Suite,
        /// Representation; all three when omitted.
        #[arg(long)]
        rep: Option<Rep>,
    },
    /// Syracuse trajectory of n down to 0.
    Nsyr { n: String },
    /// The first k primes.
    Primes { k: usize },
    /// Ackermann's function.
    Ack { m: String, n: String },
    /// Check the representations against native arithmetic on all pairs up to a bound.
    Verify {
        #[arg(long, default_value_t = 128)]
        bound: u64,
    },
}

fn run(cli: Cli) -> Result<()> {
    let cap = cli.max_bits;
    let out = match cli.command {
        Command::Convert { from, to, value } => commands::convert(from, to, &value, cap)?,
        Command::Special { kind, p, output } => commands::special(kind, &p, output, cap)?,
        Command::Encode {
            view,
            elements,
            rep,
        } => commands::encode(view, &elements, rep, cap)?,
        Command::Decode { view, value, rep } => commands::decode(view, &value, rep, cap)?,
        Command::Bits {
            op,
            operands,
            bitlen,
            format,
        } => commands::bits(op, &operands, bitlen, format, cap)?,
        Command::Dot { value, from } => commands::dot(&value, from)?,
        Command::Bench { suite, rep } => {
            let reps = rep.map_or(vec![Rep::T, Rep::B, Rep::N], |r| vec![r]);
            let mut stdout = std::io::stdout().lock();
            let mut res = Ok(());
            bench::run(suite, &reps, |r| {
                if res.is_ok() {
                    res = writeln!(stdout, "{r}").and_then(|_| stdout.flush());
                }
            });
            res?;
            return Ok(());
        }
        Command::Nsyr { n } => commands::nsyr(&n)?,
        Command::Primes { k } => commands::primes(k),
        Command::Ack { m, n } => commands::ack(&m, &n)?,
        Command::Verify { bound } => commands::verify(bound)?,
    };
    writeln!(std::io::stdout(), "{out}")?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
