use num_bigint::BigInt;
use primefrac::arith::crt_partial_fractions;

/// 7/30 = integer + 1/2 + 1/3 + 2/5 style splittings, and their inverse.
pub fn run() -> primefrac::Result<()> {
    for (b, dens) in [
        (7i64, vec![2u64, 3, 5]),
        (1, vec![3, 5]),
        (1000, vec![7, 11, 13]),
    ] {
        let pf = crt_partial_fractions(&BigInt::from(b), &dens)?;
        let terms: Vec<String> = pf.terms.iter().map(|(a, q)| format!("{a}/{q}")).collect();
        println!(
            "{b}/{} = {} + {}",
            dens.iter().product::<u64>(),
            pf.integer_part,
            terms.join(" + ")
        );
        assert_eq!(
            pf.recompose(),
            primefrac::Rational::new(b, dens.iter().product::<u64>())?
        );
    }
    match crt_partial_fractions(&BigInt::from(1), &[4, 6]) {
        Err(e) => println!("[4, 6]: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
