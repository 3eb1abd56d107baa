// Builds a CLI configuration in code and renders the same report twice.
use clap::Parser;
use primefrac::experiment::{run as run_config, Cli, ExperimentConfig};

pub fn run() -> primefrac::Result<()> {
    let args = ["primefrac", "et-audit", "--trials", "5", "--seed", "7"];
    let cfg = ExperimentConfig::from_cli(Cli::try_parse_from(args).expect("valid arguments"))?;
    let first = run_config(&cfg)?;
    let second = run_config(&cfg)?;
    assert_eq!(first, second);
    print!("{}", String::from_utf8_lossy(&first));
    Ok(())
}

#[allow(dead_code)]
fn main() -> primefrac::Result<()> {
    run()
}
