// Reduced words, lengths and inversion sets in the affine Weyl group.
//
// `cargo run --example weyl_words [label] [element]`

use daha::cartan::AffineCartanDatum;
use daha::weyl::{enumerate_affine, length_cross_check, length_formula, parse_element};

pub fn run_example(label: &str, element: &str, max_len: usize) -> Result<(), Box<dyn std::error::Error>> {
    let d = AffineCartanDatum::load(label)?;
    let w = parse_element(&d, element)?;
    println!("{label} {element}: {}", w.to_json(&d));
    println!("  closed-form length: {}", length_formula(&d, &w.finite, &w.trans)?);

    let counts: Vec<usize> =
        (0..=max_len).map(|l| enumerate_affine(&d, l).iter().filter(|(_, len)| *len == l).count()).collect();
    println!("  elements by length 0..={max_len}: {counts:?}");

    let (checked, bad) = length_cross_check(&d, max_len)?;
    println!("  length agreement on {checked} elements: {}", if bad.is_empty() { "ok" } else { "MISMATCH" });
    for line in bad.iter().take(5) {
        println!("    {line}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let label = args.next().unwrap_or_else(|| "C2~".into());
    let element = args.next().unwrap_or_else(|| "s0 s1 s2 s1".into());
    run_example(&label, &element, 5)
}
