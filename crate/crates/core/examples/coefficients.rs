// Laurent polynomials in `q^(1/6)`, `t_s^(1/2)` and `t_l^(1/2)`.
//
// `cargo run --example coefficients`

use daha::cartan::Rational;
use daha::coeffs::LaurentCoefficient as C;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = &(&C::integer(3) * &C::q_pow(-1)) * &C::ts_half(1) - C::tl_half(2);
    println!("a            = {a}");
    println!("a bar        = {}", a.bar());
    println!("a swapped    = {}", a.swap_t());
    println!("a transport  = {}", a.transport(true));

    let cs = C::hecke_unit(false);
    println!("c_s          = {cs}");
    println!("c_s^2        = {}", &cs * &cs);
    // (t^1/2 - t^-1/2)(t^1/2 + t^-1/2) = t - t^-1
    let plus = &C::ts_half(1) + &C::ts_half(-1);
    println!("c_s (ts^1/2 + ts^-1/2) = {}", &cs * &plus);
    println!("merged render = {}", (&cs * &C::hecke_unit(true)).render(true));

    let sixth = C::q_pow_rational(Rational::new(1, 6))?;
    println!("q^1/6 ^ 6    = {}", (0..6).fold(C::one(), |acc, _| &acc * &sixth));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
