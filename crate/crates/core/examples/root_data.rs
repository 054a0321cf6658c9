// Cartan data of an affine type: roots, highest roots, Gram matrix.
//
// `cargo run --example root_data [label]`

use daha::cartan::AffineCartanDatum;
use daha::weyl::{minimal_conjugator, AffineWeylElement, FiniteWeylElement};

pub fn run_example(label: &str) -> Result<(), Box<dyn std::error::Error>> {
    let d = AffineCartanDatum::load(label)?;
    let info = d.to_json();
    println!("{label}: rank {}, p = {}, m = {}", d.rank(), d.p(), d.m());
    println!("  positive roots: {}", info["positive_roots"]);
    println!("  theta = {}, theta_s = {}", info["theta"], info["theta_s"]);
    println!("  node classes: {}", info["node_classes"]);
    println!("  gram: {}", info["gram"]);

    let theta = d.theta_coords();
    let s_theta = AffineWeylElement::from_finite(FiniteWeylElement::reflection(&d, &theta)?);
    println!("  s_theta = s{:?}", s_theta.reduced_word(&d));

    let (iota, _) = d.iota_datum()?;
    println!("  dual type: {}", iota.label());

    if !d.is_simply_laced() {
        let diff: Vec<i64> = theta.iter().zip(d.theta_s_coords().iter()).map(|(a, b)| a - b).collect();
        let (w, j0) = minimal_conjugator(&d, &diff)?;
        let word = AffineWeylElement::from_finite(w).reduced_word(&d);
        println!("  theta - theta_s = {diff:?} is conjugate to a{j0} by s{word:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "G2~".into());
    run_example(&label)
}
