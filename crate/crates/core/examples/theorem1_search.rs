// Two window primes whose fractions sum to within the target of alpha.
use primefrac::primes::sieve_window;
use primefrac::search::{kappa, theorem1_search, SearchMode, SearchParams};
use primefrac::Rational;

pub fn run() -> primefrac::Result<()> {
    let alpha: Rational = "377/610".parse()?;
    // 55/89 is the convergent used as the hypothesis approximation
    let params = SearchParams::new(
        alpha.clone(),
        55,
        89,
        50,
        2,
        "1/2".parse()?,
        kappa(2),
        SearchMode::Theorem1,
    )?;
    let res = theorem1_search(&params, &sieve_window(50, 89)?)?;
    let terms: Vec<String> = res
        .numerators
        .iter()
        .zip(&res.denominators)
        .map(|(a, q)| format!("{a}/{q}"))
        .collect();
    println!("{alpha} ~ {}", terms.join(" + "));
    println!(
        "error {} (target {}), L = {}, branch {}",
        res.error, res.target_bound, res.big_l, res.branch
    );
    assert!(res.verify(&alpha));
    println!(
        "{}",
        serde_json::to_string_pretty(&res).expect("serializable")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
