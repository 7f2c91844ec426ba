use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qyl_core::arith::{parse_rational, QValue, Rational};

// aliases keep clap from reading `Option<Vec<_>>` as a repeated flag
pub type Ints = Vec<i64>;
pub type Signs = Vec<i8>;

#[derive(Parser, Debug)]
#[command(name = "qyl", version, about = "Irreducibility of tensor products of evaluation modules over the q-Yangian of gl_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide irreducibility of L(lambda) (x) L(mu) by the crossing criterion.
    Check(Common),
    /// Decide irreducibility by linear algebra on the action matrices.
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Largest module dimension for the matrix-algebra check.
        #[arg(long, default_value_t = qyl_core::oracle::DEFAULT_BURNSIDE_BOUND)]
        burnside_bound: usize,
    },
    /// Compare the criterion with the oracle over a range of pairs.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        range: SweepArgs,
    },
    /// Run one of the exact identity suites.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Write L(lambda) and its evaluation operators t_ij(u) as JSON.
    Export(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Deformation parameter, a rational p/q other than 0 and 1 and -1.
    #[arg(long, env = "QYL_Q", default_value = "3/2", value_parser = parse_q)]
    pub q: QValue,
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated weakly decreasing integers.
    #[arg(long, value_parser = parse_ints::<i64>, allow_hyphen_values = true)]
    pub lambda: Option<Ints>,
    #[arg(long, value_parser = parse_ints::<i64>, allow_hyphen_values = true)]
    pub mu: Option<Ints>,
    /// Evaluation parameter of the first factor.
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    /// Evaluation parameter of the second factor.
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub h: Option<Rational>,
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub hp: Option<Rational>,
    /// Signs of the first factor, e.g. 1,-1,1.
    #[arg(long, value_parser = parse_ints::<i8>, allow_hyphen_values = true)]
    pub eps: Option<Signs>,
    #[arg(long, value_parser = parse_ints::<i8>, allow_hyphen_values = true)]
    pub epsp: Option<Signs>,
    /// Write the JSON here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub debug: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SweepArgs {
    /// n = 2 exhaustive range: 0 <= lambda_1 <= this, lambda_2 = 0.
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    pub lambda_max: i64,
    /// n = 2 exhaustive range: -this <= mu_2 <= mu_1 <= this.
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    pub mu_bound: i64,
    /// Sample pairs even for n = 2.
    #[arg(long)]
    pub sample: bool,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    /// Sampled range: lambda_1 - lambda_n and mu_1 - mu_n at most this, |mu_n| at most this.
    #[arg(long, default_value_t = 3)]
    pub width: i64,
    #[arg(long, default_value_t = 1000)]
    pub max_dim: u64,
    #[arg(long, default_value_t = qyl_core::oracle::DEFAULT_BURNSIDE_BOUND)]
    pub burnside_bound: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Rtt,
    Minors,
    Gt,
    Theta,
}

fn parse_q(s: &str) -> Result<QValue, String> {
    QValue::new(parse_rat(s)?).map_err(|e| e.to_string())
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_ints<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| format!("{x:?} is not an integer in the list {s:?}")))
        .collect()
}
