use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use serde_json::{json, Value};

use super::constants::parse_alpha;
use super::report::{float, join, result_cells, ResultContext, Table, RESULT_COLUMNS};
use super::rng::SplitMix64;
use crate::arith::{best_single_approx, dist_nearest_int, floor_scaled_pow, Rational};
use crate::error::{Error, Result, DEFAULT_WORK_BUDGET};
use crate::expsum::{
    distinct_sum_s, erdos_turan_check, lemma1_lhs, lemma2_lhs, validate_conditions, vinogradov_sum,
    ExpSumParams, ThresholdForm,
};
use crate::oracle::{achieved_exponent, best_multi_approx, DenomClass};
use crate::primes::sieve_window;
use crate::search::{
    conjecture_scan, corollary2_probe, default_phi_grid, kappa, theorem1_search, theorem2_search,
    SearchMode, SearchParams,
};

/// Environment variable consulted when `--work-budget` is absent.
pub const BUDGET_ENV: &str = "PRIMEFRAC_WORK_BUDGET";

/// Comma-separated integers; `a..b` expands to `a, a+1, ..., b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IntList(pub Vec<u64>);

impl FromStr for IntList {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            if let Some((lo, hi)) = part.split_once("..") {
                let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
                let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
                if lo > hi || hi - lo > 1_000_000 {
                    return Err(bad());
                }
                out.extend(lo..=hi);
            } else {
                out.push(part.parse().map_err(|_| bad())?);
            }
        }
        Ok(IntList(out))
    }
}

/// Comma-separated rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RatList(pub Vec<Rational>);

impl FromStr for RatList {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|p| p.trim().parse())
            .collect::<Result<_>>()
            .map(RatList)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModeArg {
    Theorem1,
    Theorem2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassArg {
    Primes,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdArg {
    NSquared,
    Binomial,
}

#[derive(Debug, Clone, Parser, Serialize)]
#[command(
    name = "primefrac",
    version,
    about = "Sums of fractions with prime denominators: searches, oracles and audits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for the randomized audits.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Defaults to json for search, oracle and corollary2-probe, csv otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Report file; stdout when absent.
    #[arg(long, short, global = true)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    /// Work budget in elementary steps; falls back to $PRIMEFRAC_WORK_BUDGET.
    #[arg(long, global = true)]
    pub work_budget: Option<u64>,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    /// Exponent kappa(n) as exact fractions.
    KappaTable {
        #[arg(long, default_value = "1..10")]
        n: IntList,
    },
    /// Prime-denominator search over a grid of (N, n, epsilon, phi).
    Search {
        #[arg(long)]
        alpha: String,
        #[arg(long = "N")]
        #[serde(rename = "N")]
        big_n: IntList,
        #[arg(long, default_value = "2")]
        n: IntList,
        #[arg(long, default_value = "1/2")]
        epsilon: RatList,
        /// Defaults to kappa(n).
        #[arg(long)]
        phi: Option<RatList>,
        /// Hypothesis a/q; defaults to the convergent of alpha below N^phi.
        #[arg(long)]
        hyp: Option<String>,
        #[arg(long, value_enum, default_value = "theorem1")]
        mode: ModeArg,
    },
    /// Brute-force optimum over a denominator class.
    Oracle {
        #[arg(long)]
        alpha: String,
        #[arg(long = "N")]
        #[serde(rename = "N")]
        big_n: IntList,
        #[arg(long, default_value = "2")]
        n: IntList,
        #[arg(long, value_enum, default_value = "primes")]
        class: ClassArg,
        /// Leave out window primes dividing this.
        #[arg(long, default_value_t = 1)]
        exclude: u64,
    },
    /// Exponential sums against their majorants over a parameter grid.
    ExpsumAudit {
        #[arg(long = "N")]
        #[serde(rename = "N")]
        big_n: IntList,
        #[arg(long, default_value = "2")]
        n: IntList,
        #[arg(long, default_value = "0")]
        k: IntList,
        #[arg(long = "L")]
        #[serde(rename = "L")]
        big_l: IntList,
        #[arg(long)]
        q: IntList,
        /// Fixed a; drawn uniformly among units mod q otherwise.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        /// Exponent pattern such as `2,1`; selects the powered sum.
        #[arg(long)]
        pattern: Option<IntList>,
        /// Also evaluate the distinct-tuple sum.
        #[arg(long)]
        distinct: bool,
        #[arg(long, value_enum, default_value = "n-squared")]
        threshold: ThresholdArg,
    },
    /// Random point sets kept at distance >= 1/L from the integers.
    EtAudit {
        #[arg(long, default_value_t = 500)]
        trials: u64,
        #[arg(long, default_value_t = 200)]
        max_j: u64,
        #[arg(long, default_value_t = 50)]
        max_l: u64,
    },
    /// Random (a, q, N) against the explicit reciprocal-distance bound.
    VinogradovAudit {
        #[arg(long, default_value_t = 300)]
        trials: u64,
        #[arg(long, default_value_t = 2000)]
        max_q: u64,
        #[arg(long = "max-N", default_value_t = 2000)]
        #[serde(rename = "max_N")]
        max_n: u64,
    },
    /// Achieved exponents of the search across a phi grid.
    ConjectureScan {
        /// Comma-separated alpha specs.
        #[arg(long)]
        alpha: String,
        #[arg(long = "N")]
        #[serde(rename = "N")]
        big_n: IntList,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value = "1/2")]
        epsilon: Rational,
        /// Defaults to n/2, n/2 + 1/8, ..., n.
        #[arg(long)]
        phi: Option<RatList>,
        /// Record wall-clock milliseconds (breaks byte-identical reruns).
        #[arg(long)]
        timing: bool,
    },
    /// Single fraction with n prime factors in its denominator.
    Corollary2Probe {
        #[arg(long)]
        alpha: String,
        #[arg(long = "X")]
        #[serde(rename = "X")]
        big_x: IntList,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value = "1/2")]
        epsilon: Rational,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::KappaTable { .. } => "kappa-table",
            Command::Search { .. } => "search",
            Command::Oracle { .. } => "oracle",
            Command::ExpsumAudit { .. } => "expsum-audit",
            Command::EtAudit { .. } => "et-audit",
            Command::VinogradovAudit { .. } => "vinogradov-audit",
            Command::ConjectureScan { .. } => "conjecture-scan",
            Command::Corollary2Probe { .. } => "corollary2-probe",
        }
    }

    fn default_format(&self) -> Format {
        match self {
            Command::Search { .. } | Command::Oracle { .. } | Command::Corollary2Probe { .. } => {
                Format::Json
            }
            _ => Format::Csv,
        }
    }
}

/// Fully resolved run description; serialized into every report header.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentConfig {
    #[serde(skip)]
    pub subcommand: &'static str,
    pub params: Command,
    pub seed: u64,
    pub format: Format,
    pub work_budget: u64,
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    /// Resolves defaults; the budget comes from the flag, then
    /// [`BUDGET_ENV`], then the library default.
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let work_budget = match cli.work_budget {
            Some(b) => b,
            None => match std::env::var(BUDGET_ENV) {
                Ok(v) => v.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!("{BUDGET_ENV}={v} is not an integer"))
                })?,
                Err(_) => DEFAULT_WORK_BUDGET,
            },
        };
        Ok(ExperimentConfig {
            subcommand: cli.command.name(),
            format: cli.format.unwrap_or_else(|| cli.command.default_format()),
            params: cli.command,
            seed: cli.seed,
            work_budget,
            output: cli.output,
        })
    }

    fn header(&self) -> Value {
        serde_json::to_value(self).expect("config serializes")
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Executes the configured run and returns the report bytes.
pub fn run(cfg: &ExperimentConfig) -> Result<Vec<u8>> {
    let table = match &cfg.params {
        Command::KappaTable { n } => kappa_table(&n.0)?,
        Command::Search {
            alpha,
            big_n,
            n,
            epsilon,
            phi,
            hyp,
            mode,
        } => search_grid(
            cfg,
            alpha,
            &big_n.0,
            &n.0,
            &epsilon.0,
            phi.as_ref(),
            hyp.as_deref(),
            *mode,
        )?,
        Command::Oracle {
            alpha,
            big_n,
            n,
            class,
            exclude,
        } => oracle_grid(cfg, alpha, &big_n.0, &n.0, *class, *exclude)?,
        Command::ExpsumAudit {
            big_n,
            n,
            k,
            big_l,
            q,
            a,
            pattern,
            distinct,
            threshold,
        } => expsum_grid(
            cfg,
            &big_n.0,
            &n.0,
            &k.0,
            &big_l.0,
            &q.0,
            *a,
            pattern.as_ref(),
            *distinct,
            *threshold,
        )?,
        Command::EtAudit {
            trials,
            max_j,
            max_l,
        } => et_audit(cfg.seed, *trials, *max_j, *max_l)?,
        Command::VinogradovAudit {
            trials,
            max_q,
            max_n,
        } => vinogradov_audit(cfg.seed, *trials, *max_q, *max_n)?,
        Command::ConjectureScan {
            alpha,
            big_n,
            n,
            epsilon,
            phi,
            timing,
        } => scan(cfg, alpha, &big_n.0, *n, epsilon, phi.as_ref(), *timing)?,
        Command::Corollary2Probe {
            alpha,
            big_x,
            n,
            epsilon,
        } => corollary2(cfg, alpha, &big_x.0, *n, epsilon)?,
    };
    let header = cfg.header();
    match cfg.format {
        Format::Csv => table.to_csv(&header),
        Format::Json => table.to_json(&header),
    }
}

/// Parses `args` (program name first), runs, writes the report and returns
/// the exit code: 0 on success, 2 when the work budget is exceeded, 1 for
/// anything else.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = ExperimentConfig::from_cli(cli).and_then(|cfg| {
        let bytes = run(&cfg)?;
        match &cfg.output {
            Some(path) => std::fs::write(path, &bytes)
                .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display()))),
            None => std::io::stdout().write_all(&bytes).map_err(Error::from),
        }
    });
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn to_u32(x: u64, what: &'static str) -> Result<u32> {
    u32::try_from(x).map_err(|_| Error::Overflow(what))
}

fn kappa_table(ns: &[u64]) -> Result<Table> {
    let mut t = Table::new(&[
        "n",
        "kappa",
        "kappa_num",
        "kappa_den",
        "kappa_approx_nonauthoritative",
    ]);
    for &n in ns {
        if n == 0 {
            return Err(Error::InvalidInput("n must be >= 1".into()));
        }
        let k = kappa(to_u32(n, "n")?);
        t.push(
            vec![
                n.to_string(),
                k.to_string(),
                k.numer().to_string(),
                k.denom().to_string(),
                float(k.to_f64()),
            ],
            json!({ "n": n, "kappa": k }),
        );
    }
    Ok(t)
}

fn parse_hyp(s: &str) -> Result<(i64, u64)> {
    let r: Rational = s.parse()?;
    let a = r
        .numer()
        .to_i64()
        .ok_or(Error::Overflow("hypothesis numerator"))?;
    let q = r
        .denom()
        .to_u64()
        .ok_or(Error::Overflow("hypothesis denominator"))?;
    Ok((a, q))
}

/// Convergent of `alpha` with the largest denominator `<= N^phi`.
fn convergent_hyp(alpha: &Rational, big_n: u64, phi: &Rational) -> Result<(i64, u64)> {
    let x = floor_scaled_pow(&Rational::one(), big_n, phi)?.max(BigInt::one());
    let (a, q) = best_single_approx(alpha, &x);
    Ok((
        a.to_i64().ok_or(Error::Overflow("hypothesis numerator"))?,
        q.to_u64()
            .ok_or(Error::Overflow("hypothesis denominator"))?,
    ))
}

#[allow(clippy::too_many_arguments)]
fn search_grid(
    cfg: &ExperimentConfig,
    alpha_spec: &str,
    big_ns: &[u64],
    ns: &[u64],
    epsilons: &[Rational],
    phis: Option<&RatList>,
    hyp: Option<&str>,
    mode: ModeArg,
) -> Result<Table> {
    let alpha = parse_alpha(alpha_spec)?;
    let mode = match mode {
        ModeArg::Theorem1 => SearchMode::Theorem1,
        ModeArg::Theorem2 => SearchMode::Theorem2,
    };
    let mut t = Table::new(RESULT_COLUMNS);
    for &big_n in big_ns {
        for &n in ns {
            let n = to_u32(n, "n")?;
            if n == 0 {
                return Err(Error::InvalidInput("n must be >= 1".into()));
            }
            let phi_list = phis.map_or_else(|| vec![kappa(n)], |p| p.0.clone());
            for eps in epsilons {
                for phi in &phi_list {
                    let (a, q) = match hyp {
                        Some(h) => parse_hyp(h)?,
                        None => convergent_hyp(&alpha, big_n, phi)?,
                    };
                    let params = SearchParams::new(
                        alpha.clone(),
                        a,
                        q,
                        big_n,
                        n,
                        eps.clone(),
                        phi.clone(),
                        mode,
                    )?
                    .with_budget(cfg.work_budget);
                    let window = sieve_window(big_n, q)?;
                    let result = match mode {
                        SearchMode::Theorem1 => theorem1_search(&params, &window)?,
                        SearchMode::Theorem2 => theorem2_search(&params, &window)?,
                    };
                    let ctx = ResultContext {
                        alpha: &alpha,
                        q,
                        big_n,
                        n,
                        phi: Some(phi),
                        epsilon: Some(eps),
                        wall_ms: 0,
                    };
                    t.push(
                        result_cells(&ctx, &result),
                        json!({ "params": params, "a": a, "result": result }),
                    );
                }
            }
        }
    }
    Ok(t)
}

fn oracle_grid(
    cfg: &ExperimentConfig,
    alpha_spec: &str,
    big_ns: &[u64],
    ns: &[u64],
    class: ClassArg,
    exclude: u64,
) -> Result<Table> {
    let alpha = parse_alpha(alpha_spec)?;
    let mut t = Table::new(RESULT_COLUMNS);
    for &big_n in big_ns {
        for &n in ns {
            let n = to_u32(n, "n")?;
            let cls = match class {
                ClassArg::Primes => DenomClass::primes_in_window(big_n, n).excluding(exclude),
                ClassArg::All => DenomClass::all_up_to(big_n, n),
            };
            let result = best_multi_approx(&alpha, &cls, cfg.work_budget)?;
            let ctx = ResultContext {
                alpha: &alpha,
                q: exclude,
                big_n,
                n,
                phi: None,
                epsilon: None,
                wall_ms: 0,
            };
            t.push(
                result_cells(&ctx, &result),
                json!({ "alpha": alpha, "class": cls, "result": result }),
            );
        }
    }
    Ok(t)
}

fn random_unit(rng: &mut SplitMix64, q: u64) -> i64 {
    loop {
        let a = rng.range(1, q);
        if a.gcd(&q) == 1 {
            return a as i64;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn expsum_grid(
    cfg: &ExperimentConfig,
    big_ns: &[u64],
    ns: &[u64],
    ks: &[u64],
    big_ls: &[u64],
    qs: &[u64],
    fixed_a: Option<i64>,
    pattern: Option<&IntList>,
    distinct: bool,
    threshold: ThresholdArg,
) -> Result<Table> {
    let mut rng = SplitMix64::new(cfg.seed);
    let form = match threshold {
        ThresholdArg::NSquared => ThresholdForm::NSquared,
        ThresholdArg::Binomial => ThresholdForm::Binomial,
    };
    let pattern: Option<Vec<u32>> = pattern
        .map(|p| {
            p.0.iter()
                .map(|&r| to_u32(r, "pattern"))
                .collect::<Result<_>>()
        })
        .transpose()?;
    let mut t = Table::new(&[
        "kind",
        "a",
        "q",
        "n",
        "k",
        "L",
        "N",
        "pattern",
        "lhs",
        "rhs_bound",
        "ratio",
        "condition_ok",
        "term_count",
        "float_error_bound",
    ]);
    for &big_n in big_ns {
        for &n in ns {
            let n = to_u32(n, "n")?;
            for &k in ks {
                let k = to_u32(k, "k")?;
                for &big_l in big_ls {
                    for &q in qs {
                        if q == 0 {
                            return Err(Error::InvalidInput("q must be >= 1".into()));
                        }
                        let a = fixed_a.unwrap_or_else(|| random_unit(&mut rng, q));
                        let window = sieve_window(big_n, q)?;
                        let mut p = ExpSumParams::new(a, q, n, k, big_l, big_n);
                        let report = match &pattern {
                            Some(pat) => {
                                p = p.with_pattern(pat.clone());
                                lemma2_lhs(&p, &window, cfg.work_budget)?
                            }
                            None => lemma1_lhs(&p, &window, cfg.work_budget)?,
                        };
                        let kind = serde_json::to_value(report.kind)?
                            .as_str()
                            .unwrap_or_default()
                            .to_string();
                        t.push(
                            vec![
                                kind,
                                a.to_string(),
                                q.to_string(),
                                n.to_string(),
                                k.to_string(),
                                big_l.to_string(),
                                big_n.to_string(),
                                pattern.as_deref().map(join).unwrap_or_default(),
                                float(report.lhs),
                                float(report.rhs_bound),
                                report.ratio.map(float).unwrap_or_default(),
                                report.condition_ok.to_string(),
                                report.term_count.to_string(),
                                float(report.float_error_bound),
                            ],
                            serde_json::to_value(&report)?,
                        );
                        if distinct {
                            let d = distinct_sum_s(a, q, n, big_l, &window, form, cfg.work_budget)?;
                            let kind = format!(
                                "distinct_{}",
                                serde_json::to_value(form)?.as_str().unwrap_or_default()
                            );
                            t.push(
                                vec![
                                    kind,
                                    a.to_string(),
                                    q.to_string(),
                                    n.to_string(),
                                    k.to_string(),
                                    big_l.to_string(),
                                    big_n.to_string(),
                                    String::new(),
                                    float(d.lhs),
                                    float(d.threshold),
                                    float(d.lhs / d.threshold),
                                    validate_conditions(&ExpSumParams::new(
                                        a, q, n, k, big_l, big_n,
                                    ))
                                    .to_string(),
                                    d.term_count.to_string(),
                                    float(d.float_error_bound),
                                ],
                                serde_json::to_value(&d)?,
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(t)
}

/// Points `num / (L * 10007)` with `num` in `[10007, (L-1) * 10007]`, so
/// every point is at distance `>= 1/L` from the integers.
pub(crate) fn far_point_set(rng: &mut SplitMix64, j: u64, big_l: u64) -> Vec<Rational> {
    const SPREAD: u64 = 10007;
    let den = big_l * SPREAD;
    (0..j)
        .map(|_| Rational::new(rng.range(SPREAD, den - SPREAD) as i64, den).expect("den > 0"))
        .collect()
}

fn et_audit(seed: u64, trials: u64, max_j: u64, max_l: u64) -> Result<Table> {
    if max_j == 0 || max_l < 2 {
        return Err(Error::InvalidInput("need max-j >= 1 and max-l >= 2".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut t = Table::new(&[
        "trial",
        "J",
        "L",
        "S",
        "threshold",
        "s_exceeds_threshold",
        "min_dist_num",
        "min_dist_den",
    ]);
    for trial in 0..trials {
        let j = rng.range(1, max_j);
        let big_l = rng.range(2, max_l);
        let points = far_point_set(&mut rng, j, big_l);
        let min_dist = points.iter().map(dist_nearest_int).min().expect("j >= 1");
        let rep = erdos_turan_check(&points, big_l)?;
        t.push(
            vec![
                trial.to_string(),
                j.to_string(),
                big_l.to_string(),
                float(rep.s),
                float(rep.threshold),
                (!rep.conclusion).to_string(),
                min_dist.numer().to_string(),
                min_dist.denom().to_string(),
            ],
            json!({ "trial": trial, "min_dist": min_dist, "report": rep }),
        );
    }
    Ok(t)
}

fn vinogradov_audit(seed: u64, trials: u64, max_q: u64, max_n: u64) -> Result<Table> {
    if max_q == 0 || max_n == 0 {
        return Err(Error::InvalidInput("need max-q >= 1 and max-N >= 1".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut t = Table::new(&[
        "trial",
        "a",
        "q",
        "N",
        "lhs_num",
        "lhs_den",
        "bound",
        "ratio",
        "within_bound",
        "lhs_approx_nonauthoritative",
    ]);
    for trial in 0..trials {
        let q = rng.range(1, max_q);
        let a = random_unit(&mut rng, q);
        let big_n = rng.range(1, max_n);
        let rep = vinogradov_sum(a, q, big_n)?;
        let within = rep.lhs.to_f64() <= rep.bound;
        t.push(
            vec![
                trial.to_string(),
                a.to_string(),
                q.to_string(),
                big_n.to_string(),
                rep.lhs.numer().to_string(),
                rep.lhs.denom().to_string(),
                float(rep.bound),
                float(rep.ratio),
                within.to_string(),
                float(rep.lhs.to_f64()),
            ],
            json!({ "trial": trial, "within_bound": within, "report": rep }),
        );
    }
    Ok(t)
}

#[allow(clippy::too_many_arguments)]
fn scan(
    cfg: &ExperimentConfig,
    alpha_specs: &str,
    big_ns: &[u64],
    n: u32,
    epsilon: &Rational,
    phis: Option<&RatList>,
    timing: bool,
) -> Result<Table> {
    let alphas: Vec<Rational> = alpha_specs
        .split(',')
        .map(parse_alpha)
        .collect::<Result<_>>()?;
    let grid = phis.map_or_else(|| default_phi_grid(n), |p| p.0.clone());
    let table = conjecture_scan(&alphas, big_ns, n, epsilon, &grid, cfg.work_budget, timing)?;
    let mut t = Table::new(
        &[
            RESULT_COLUMNS,
            &["achieved_exponent_nonauthoritative", "empirical_phi"],
        ]
        .concat(),
    );
    for row in &table.rows {
        let ctx = ResultContext {
            alpha: &row.alpha,
            q: row.q,
            big_n: row.big_n,
            n: row.n,
            phi: Some(&row.phi),
            epsilon: Some(&row.epsilon),
            wall_ms: row.wall_ms,
        };
        let empirical = table
            .summary
            .iter()
            .find(|s| s.alpha == row.alpha && s.big_n == row.big_n)
            .and_then(|s| s.empirical_phi.as_ref())
            .map(Rational::to_string)
            .unwrap_or_default();
        let mut cells = result_cells(&ctx, &row.result);
        cells.push(float(row.achieved_exponent));
        cells.push(empirical);
        t.push(cells, serde_json::to_value(row)?);
    }
    Ok(t)
}

fn corollary2(
    cfg: &ExperimentConfig,
    alpha_spec: &str,
    big_xs: &[u64],
    n: u32,
    epsilon: &Rational,
) -> Result<Table> {
    let alpha = parse_alpha(alpha_spec)?;
    let mut t = Table::new(&[
        "alpha",
        "X",
        "N",
        "n",
        "kappa",
        "A",
        "Q",
        "omega_Q",
        "reduced",
        "error_num",
        "error_den",
        "q_within_bound",
        "error_within_target",
        "achieved_exponent_nonauthoritative",
    ]);
    for &big_x in big_xs {
        let (a, q) = {
            let (a, q) = best_single_approx(&alpha, &BigInt::from(big_x.max(1)));
            (
                a.to_i64().ok_or(Error::Overflow("hypothesis numerator"))?,
                q.to_u64()
                    .ok_or(Error::Overflow("hypothesis denominator"))?,
            )
        };
        let rep = corollary2_probe(&alpha, a, q, big_x, n, epsilon, cfg.work_budget)?;
        t.push(
            vec![
                alpha.to_string(),
                big_x.to_string(),
                rep.big_n.to_string(),
                n.to_string(),
                rep.kappa.to_string(),
                rep.big_a.to_string(),
                rep.big_q.to_string(),
                rep.omega_q.to_string(),
                rep.reduced.to_string(),
                rep.result.error.numer().to_string(),
                rep.result.error.denom().to_string(),
                rep.q_within_bound.to_string(),
                rep.error_within_target.to_string(),
                float(achieved_exponent(q, &rep.result.error, big_x)),
            ],
            json!({ "alpha": alpha, "a": a, "q": q, "report": rep }),
        );
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> ExperimentConfig {
        let mut full = vec!["primefrac"];
        full.extend_from_slice(args);
        ExperimentConfig::from_cli(Cli::try_parse_from(full).unwrap()).unwrap()
    }

    #[test]
    fn int_lists() {
        assert_eq!("1..4".parse::<IntList>().unwrap().0, vec![1, 2, 3, 4]);
        assert_eq!("2, 5,7..8".parse::<IntList>().unwrap().0, vec![2, 5, 7, 8]);
        assert!("4..1".parse::<IntList>().is_err());
        assert!("x".parse::<IntList>().is_err());
    }

    #[test]
    fn kappa_rows() {
        let out = String::from_utf8(run(&cfg(&["kappa-table", "--n", "1..4"])).unwrap()).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert!(lines[0].starts_with("# config: "));
        assert_eq!(
            lines[1],
            "n,kappa,kappa_num,kappa_den,kappa_approx_nonauthoritative"
        );
        assert!(lines[2].starts_with("1,1/2,"));
        assert!(lines[3].starts_with("2,5/4,"));
        assert!(lines[4].starts_with("3,7/4,"));
        assert!(lines[5].starts_with("4,5/2,"));
    }

    #[test]
    fn far_points_are_far() {
        let mut rng = SplitMix64::new(3);
        for l in 2..20 {
            for x in far_point_set(&mut rng, 50, l) {
                assert!(dist_nearest_int(&x) >= Rational::new(1, l).unwrap());
            }
        }
    }

    #[test]
    fn budget_maps_to_exit_two() {
        let code = main_with_args([
            "primefrac",
            "oracle",
            "--alpha",
            "1/3",
            "--N",
            "2000",
            "--n",
            "3",
            "--work-budget",
            "10",
        ]);
        assert_eq!(code, 2);
        assert_eq!(main_with_args(["primefrac", "bogus"]), 1);
        assert_eq!(
            main_with_args(["primefrac", "search", "--alpha", "1/0", "--N", "50"]),
            1
        );
    }
}
