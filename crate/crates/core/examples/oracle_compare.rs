// The constructive search next to the brute-force optimum over the same
// denominator class.
use primefrac::error::DEFAULT_WORK_BUDGET;
use primefrac::oracle::{achieved_exponent, best_multi_approx, DenomClass};
use primefrac::primes::sieve_window;
use primefrac::search::{theorem1_search, SearchMode, SearchParams};
use primefrac::Rational;

pub fn run() -> primefrac::Result<()> {
    let single = best_multi_approx(
        &"355/113".parse()?,
        &DenomClass::all_up_to(10, 1),
        DEFAULT_WORK_BUDGET,
    )?;
    println!(
        "355/113 with one denominator <= 10: q = {:?}, error {}",
        single.denominators, single.error
    );

    let (a, q, big_n) = (71i64, 113u64, 60u64);
    let alpha = Rational::new(a, q)?;
    let params = SearchParams::new(
        alpha.clone(),
        a,
        q,
        big_n,
        2,
        "1/2".parse()?,
        "2".parse()?,
        SearchMode::Theorem1,
    )?;
    let found = theorem1_search(&params, &sieve_window(big_n, q)?)?;
    let best = best_multi_approx(
        &alpha,
        &DenomClass::primes_in_window(big_n, 2).excluding(q),
        DEFAULT_WORK_BUDGET,
    )?;
    for (label, r) in [("search", &found), ("oracle", &best)] {
        println!(
            "{label}: {:?} error {} (exponent {:.3})",
            r.denominators,
            r.error,
            achieved_exponent(q, &r.error, big_n)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
