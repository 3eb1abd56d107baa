// Which exponents the search reaches for golden-ratio convergents. The
// table is descriptive only.
use primefrac::error::DEFAULT_WORK_BUDGET;
use primefrac::experiment::parse_alpha;
use primefrac::search::{conjecture_scan, default_phi_grid};

pub fn run() -> primefrac::Result<()> {
    let alphas = vec![parse_alpha("convergent:golden:1000000")?];
    let table = conjecture_scan(
        &alphas,
        &[50, 100],
        2,
        &"1/2".parse()?,
        &default_phi_grid(2),
        DEFAULT_WORK_BUDGET,
        false,
    )?;
    for row in &table.rows {
        println!(
            "N = {:>3}  phi = {:>4}  q = {:>7}  met = {:<5}  achieved {:.3}  {}",
            row.big_n,
            row.phi.to_string(),
            row.q,
            row.result.met_target,
            row.achieved_exponent,
            row.result.branch
        );
    }
    for s in &table.summary {
        println!(
            "N = {}: largest phi met = {:?}",
            s.big_n,
            s.empirical_phi.as_ref().map(|p| p.to_string())
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
