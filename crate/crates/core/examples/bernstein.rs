// Rewriting the affine Hecke subalgebra in the basis `Y_mu T_w`.
//
// `cargo run --example bernstein [label]`

use daha::hecke::bernstein::Bernstein;
use daha::hecke::Daha;

pub fn run_example(label: &str) -> Result<(), Box<dyn std::error::Error>> {
    let h = Daha::load(label)?;
    let b = Bernstein::new(&h);
    for src in ["T0", "T0 T1", "T1 T0 T1"] {
        let value = h.evaluate_str(src)?;
        let basis = b.to_bernstein(&value)?;
        let back = b.evaluate(&basis)?;
        println!("{label} {src}: {} terms, round trip {}", basis.len(), back == value);
        println!("  {}", basis.to_json(&h));
    }
    let n = h.rank();
    let mut nu = vec![0; n];
    nu[0] = 1;
    println!("T1 Y{nu:?} = {}", b.push_y_through_t(1, &nu).to_json(&h));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "C2~".into());
    run_example(&label)
}
