use num_bigint::BigInt;
use num_traits::ToPrimitive;
use primefrac::arith::best_single_approx;
use primefrac::error::DEFAULT_WORK_BUDGET;
use primefrac::experiment::parse_alpha;
use primefrac::search::corollary2_probe;

/// One fraction `A/Q` whose denominator has exactly `n` prime factors.
pub fn run() -> primefrac::Result<()> {
    let alpha = parse_alpha("convergent:sqrt2:100000")?;
    for x in [200u64, 2000, 20000] {
        let (a, q) = best_single_approx(&alpha, &BigInt::from(x));
        let rep = corollary2_probe(
            &alpha,
            a.to_i64().unwrap(),
            q.to_u64().unwrap(),
            x,
            2,
            &"1/2".parse()?,
            DEFAULT_WORK_BUDGET,
        )?;
        println!(
            "X = {x:>5}: N = {:>3}, A/Q = {}/{} (omega = {}), error {}, Q within bound: {}",
            rep.big_n, rep.big_a, rep.big_q, rep.omega_q, rep.result.error, rep.q_within_bound
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
