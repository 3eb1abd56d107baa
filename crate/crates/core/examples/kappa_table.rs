use primefrac::search::kappa;

pub fn run() -> primefrac::Result<()> {
    for n in 1..=10 {
        let k = kappa(n);
        println!("n = {n:>2}  kappa = {k:>5}  ({:.4})", k.to_f64());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
