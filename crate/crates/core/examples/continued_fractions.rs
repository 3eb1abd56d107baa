// Partial quotients, convergents, and the best single fraction under a
// denominator cap.
use num_bigint::BigInt;
use primefrac::arith::{best_single_approx, continued_fraction, dist_nearest_int};
use primefrac::experiment::parse_alpha;
use primefrac::Rational;

pub fn run() -> primefrac::Result<()> {
    let x: Rational = "355/113".parse()?;
    let cf = continued_fraction(&x);
    println!(
        "{x} = {:?}",
        cf.partial_quotients
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
    );
    for c in &cf.convergents {
        println!(
            "  convergent {c:>8}   ||113 * c|| = {}",
            dist_nearest_int(&(c * Rational::from(113i64)))
        );
    }

    let pi = parse_alpha("convergent:pi:100000000")?;
    for cap in [10u64, 1000, 100000] {
        let (p, q) = best_single_approx(&pi, &BigInt::from(cap));
        println!("pi, denominator <= {cap:>6}: {p}/{q}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
