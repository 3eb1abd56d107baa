use primefrac::error::DEFAULT_WORK_BUDGET;
use primefrac::expsum::{distinct_sum_s, lemma1_lhs, lemma2_lhs, ExpSumParams, ThresholdForm};
use primefrac::primes::sieve_window;

pub fn run() -> primefrac::Result<()> {
    let (a, q, big_n) = (17i64, 1009u64, 120u64);
    let window = sieve_window(big_n, q)?;
    for (n, big_l) in [(1u32, 10u64), (2, 10), (3, 40)] {
        let p = ExpSumParams::new(a, q, n, 0, big_l, big_n);
        let plain = lemma1_lhs(&p, &window, DEFAULT_WORK_BUDGET)?;
        println!(
            "n = {n}, L = {big_l:>2}: lhs {:>12.3}  majorant {:>14.1}  conditions hold: {}",
            plain.lhs, plain.rhs_bound, plain.condition_ok
        );
    }
    let powered = lemma2_lhs(
        &ExpSumParams::new(a, q, 3, 0, 20, big_n).with_pattern(vec![2, 1]),
        &window,
        DEFAULT_WORK_BUDGET,
    )?;
    println!("pattern [2, 1]: lhs {:.3}", powered.lhs);
    for form in [ThresholdForm::NSquared, ThresholdForm::Binomial] {
        let d = distinct_sum_s(a, q, 2, 20, &window, form, DEFAULT_WORK_BUDGET)?;
        println!(
            "distinct pairs ({form:?}): {:.3} vs threshold {:.3}",
            d.lhs, d.threshold
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
