// Two window primes plus one arbitrary integer from `[N/2, N]`.
use primefrac::primes::sieve_window;
use primefrac::search::{theorem2_search, SearchMode, SearchParams};
use primefrac::Rational;

pub fn run() -> primefrac::Result<()> {
    let alpha: Rational = "1234/3001".parse()?;
    for phi in ["3/2", "7/4", "2"] {
        let p = SearchParams::new(
            alpha.clone(),
            1234,
            3001,
            60,
            3,
            "1/4".parse()?,
            phi.parse()?,
            SearchMode::Theorem2,
        )?;
        let res = theorem2_search(&p, &sieve_window(60, 3001)?)?;
        println!(
            "phi = {phi:>3}: denominators {:?}, error {}, met target: {}, branch {}",
            res.denominators, res.error, res.met_target, res.branch
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
