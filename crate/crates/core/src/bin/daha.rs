use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use daha::cartan::AffineCartanDatum;
use daha::config::{self, VerifyConfig};
use daha::hecke::Daha;
use daha::involution::{verify_homomorphism_samples, verify_duality};
use daha::lemmas::verify_all;
use daha::report::Status;
use daha::weyl::parse_element;

#[derive(Parser)]
#[command(version, about = "Exact computations in double affine Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan data of an affine type, as JSON.
    Info { label: String },
    /// Reduced word, length and inversion set of an affine Weyl group element.
    Word {
        label: String,
        /// e.g. `s0 s1 s2` or `t[1,0] * s1`
        element: String,
    },
    /// Normal form of an algebra expression, as a JSON term list.
    Eval {
        label: String,
        /// e.g. `T0 X[1,0] - ts^1/2 Y[0,1]`
        expr: String,
    },
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Subcommand)]
enum Verify {
    /// Relation transport, the T_0 bridge, involutivity and homomorphism samples.
    Involution {
        label: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The theta - theta_s identities, one JSON line per check.
    Lemmas { label: String },
    /// Everything, for the labels listed in a TOML file.
    All {
        #[arg(long)]
        config: PathBuf,
    },
}

// a closed pipe (`daha ... | head`) is not an error
macro_rules! emit {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

fn run(cli: Cli) -> daha::error::Result<bool> {
    match cli.command {
        Command::Info { label } => {
            emit!("{}", AffineCartanDatum::load(&label)?.to_json());
        }
        Command::Word { label, element } => {
            let d = AffineCartanDatum::load(&label)?;
            emit!("{}", parse_element(&d, &element)?.to_json(&d));
        }
        Command::Eval { label, expr } => {
            let h = Daha::load(&label)?;
            let value = h.evaluate_str(&expr)?;
            emit!("{}", json!({"type": label, "terms": value.to_json(h.datum())}));
        }
        Command::Verify(Verify::Involution { label, samples, seed }) => {
            let d = AffineCartanDatum::load(&label)?;
            let mut report = verify_duality(&d)?;
            let sampled = verify_homomorphism_samples(&d, samples, seed)?;
            report.elapsed += sampled.elapsed;
            report.checks.extend(sampled.checks);
            emit!("{}", report.to_json());
            return Ok(report.passed());
        }
        Command::Verify(Verify::Lemmas { label }) => {
            let d = AffineCartanDatum::load(&label)?;
            let mut ok = true;
            for lemma in verify_all(&d)? {
                ok &= lemma.status != Status::Fail;
                for line in lemma.json_lines() {
                    emit!("{line}");
                }
            }
            return Ok(ok);
        }
        Command::Verify(Verify::All { config }) => {
            let (lines, ok) = config::run(&VerifyConfig::load(&config)?)?;
            for line in lines {
                emit!("{line}");
            }
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
