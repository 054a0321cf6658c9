// Normal forms `X_beta T_u` of algebra expressions, and the relation suite.
//
// `cargo run --example daha_eval [label] [expr]`

use daha::hecke::relations::relation_suite;
use daha::hecke::Daha;

pub fn run_example(label: &str, expr: &str) -> Result<(), Box<dyn std::error::Error>> {
    let h = Daha::load(label)?;
    let value = h.evaluate_str(expr)?;
    println!("{label}: {expr}");
    println!("  = {}", value.render(h.datum()));
    println!("  json {}", value.to_json(h.datum()));

    // T_j and its inverse really are inverse
    for j in 0..=h.rank() {
        let prod = h.multiply(&h.t_generator(j)?, &h.t_inverse(j)?);
        assert_eq!(prod, h.one(), "T{j} T{j}^-1");
    }

    let checks = relation_suite(&h)?;
    let failed: Vec<_> = checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    println!("  relation suite: {} checks, failed {failed:?}", checks.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let label = args.next().unwrap_or_else(|| "B2~".into());
    let expr = args.next().unwrap_or_else(|| "T0 X[1,0] T1 - q^-1 Y[0,1]".into());
    run_example(&label, &expr)
}
