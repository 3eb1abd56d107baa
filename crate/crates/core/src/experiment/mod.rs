//! Reproducible experiment runs: parameter grids, seeded audits and
//! CSV/JSON reports. The `primefrac` binary is a thin wrapper over
//! [`main_with_args`].

mod cli;
mod constants;
mod report;
mod rng;

pub use cli::{
    main_with_args, run, Cli, Command, ExperimentConfig, Format, IntList, ModeArg, RatList,
    BUDGET_ENV,
};
pub use constants::{named_convergent, parse_alpha};
pub use report::Table;
pub use rng::SplitMix64;
