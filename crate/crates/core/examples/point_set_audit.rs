// A point set with every element far from the integers keeps the averaged
// exponential sum above `J/6`. Falling below `J/6` certifies a point near
// an integer.
use primefrac::expsum::erdos_turan_check;
use primefrac::Rational;

pub fn run() -> primefrac::Result<()> {
    let far: Vec<Rational> = (1..=40)
        .map(|j| Rational::new(j * 7 % 20 + 5, 30))
        .collect::<Result<_, _>>()?;
    let rep = erdos_turan_check(&far, 6)?;
    println!(
        "far set:  S = {:.3}, J/6 = {:.3}, S <= J/6: {}",
        rep.s, rep.threshold, rep.conclusion
    );

    // j/41 cancels completely for l < 41, and j = 0 is an integer
    let spread: Vec<Rational> = (0..41)
        .map(|j| Rational::new(j, 41))
        .collect::<Result<_, _>>()?;
    let rep = erdos_turan_check(&spread, 6)?;
    println!(
        "j/41:     S = {:.3}, J/6 = {:.3}, S <= J/6: {}",
        rep.s, rep.threshold, rep.conclusion
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
