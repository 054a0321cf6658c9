// Check the duality map on every supported type.
//
// `cargo run --release --example involution [label..]`

use daha::cartan::{supported_labels, AffineCartanDatum};
use daha::hecke::expr::parse_word;
use daha::involution::{verify_homomorphism_samples, verify_duality, PhiMap};

pub fn run_example(labels: &[String], samples: usize) -> Result<bool, Box<dyn std::error::Error>> {
    let mut ok = true;
    for label in labels {
        let d = AffineCartanDatum::load(label)?;
        let phi = PhiMap::new(&d)?;
        let t0 = parse_word("T0", d.rank())?;
        println!("{label}: phi(T0) = {}", phi.phi_word(&t0));

        let r = verify_duality(&d)?;
        let s = verify_homomorphism_samples(&d, samples, 7)?;
        ok &= r.passed() && s.passed();
        println!(
            "  -> {}: {} checks, {} failed, {:.2}s; {samples} samples {} in {:.2}s",
            r.iota_type,
            r.checks.len(),
            r.failures().count(),
            r.elapsed,
            if s.passed() { "pass" } else { "FAIL" },
            s.elapsed,
        );
        for c in r.failures().chain(s.failures()).take(8) {
            println!("  {} {}", c.name, c.witness.as_deref().unwrap_or(""));
        }
    }
    Ok(ok)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let labels = if args.is_empty() { supported_labels() } else { args };
    run_example(&labels, 50)?;
    Ok(())
}
