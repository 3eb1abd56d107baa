use primefrac::expsum::vinogradov_sum;

/// `sum_r min(N, 1/||a r/q||)` in exact arithmetic next to `N + 2q(1 + ln q)`.
pub fn run() -> primefrac::Result<()> {
    for (a, q, n) in [
        (1i64, 3u64, 2u64),
        (3, 4, 100),
        (5, 97, 1000),
        (611, 1999, 50),
    ] {
        let rep = vinogradov_sum(a, q, n)?;
        println!(
            "a = {a:>3}, q = {q:>4}, N = {n:>4}: sum = {:>10.3}  bound = {:>10.3}  ratio {:.3}",
            rep.lhs.to_f64(),
            rep.bound,
            rep.ratio
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
