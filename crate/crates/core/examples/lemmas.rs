// The `theta - theta_s` identities, one JSON line per check.
//
// `cargo run --example lemmas [label..]`

use daha::cartan::{supported_labels, AffineCartanDatum};
use daha::lemmas::verify_all;
use daha::report::Status;

pub fn run_example(labels: &[String], quiet: bool) -> Result<bool, Box<dyn std::error::Error>> {
    let mut ok = true;
    for label in labels {
        let d = AffineCartanDatum::load(label)?;
        for report in verify_all(&d)? {
            ok &= report.status != Status::Fail;
            eprintln!("{label} {}: {} ({:.3}s)", report.lemma, report.status.as_str(), report.elapsed);
            if !quiet {
                for line in report.json_lines() {
                    println!("{line}");
                }
            }
        }
    }
    Ok(ok)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let labels = if args.is_empty() { supported_labels() } else { args };
    run_example(&labels, false)?;
    Ok(())
}
