// Primes in `[N/2, N]`, optionally dropping those that divide a modulus.
use primefrac::primes::{sieve_window, window_size_check};

pub fn run() -> primefrac::Result<()> {
    for (n, q) in [(30u64, 1u64), (30, 29 * 23), (1000, 1)] {
        let w = sieve_window(n, q)?;
        let shown: Vec<u64> = w.primes.iter().copied().take(8).collect();
        println!(
            "N = {n:>4}, q = {q:>3}: {} primes, first {:?}, >= N/(3 ln N): {}",
            w.len(),
            shown,
            window_size_check(&w)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
