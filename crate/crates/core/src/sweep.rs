//! Batch comparison of the combinatorial criterion with the oracle.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::QValue;
use crate::criterion::{check_pairwise, check_theorem, Verdict};
use crate::gln::GlnRep;
use crate::gt::HighestWeight;
use crate::oracle::{oracle_with_burnside, OracleVerdict};
use crate::yangian::{EvalModule, TensorModule};

/// Which pairs `(lambda, mu)` to visit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SweepRange {
    /// `gl_2`: `lambda = (l, 0)` with `0 <= l <= lambda_max` and every
    /// `mu` with `-mu_bound <= mu_2 <= mu_1 <= mu_bound`.
    Exhaustive { lambda_max: i64, mu_bound: i64 },
    /// `count` distinct pairs drawn uniformly from the box: `lambda_n = 0`,
    /// `-width <= mu_n <= width`, `lambda_1 - lambda_n <= width`,
    /// `mu_1 - mu_n <= width`, `dim L(lambda) dim L(mu) <= max_dim`.
    Sampled { n: usize, count: usize, seed: u64, width: i64, max_dim: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepCase {
    pub lambda: HighestWeight,
    pub mu: HighestWeight,
    pub criterion: Verdict,
    pub pairwise: Verdict,
    pub oracle: OracleVerdict,
    pub agree: bool,
}

/// Counts indexed by (criterion verdict, oracle verdict).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AgreementMatrix {
    pub irreducible_irreducible: usize,
    pub irreducible_reducible: usize,
    pub reducible_irreducible: usize,
    pub reducible_reducible: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub total: usize,
    pub agree: usize,
    pub pairwise_agree: usize,
    pub matrix: AgreementMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub q: QValue,
    pub range: SweepRange,
    pub cases: Vec<SweepCase>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn all_agree(&self) -> bool {
        self.summary.agree == self.summary.total && self.summary.pairwise_agree == self.summary.total
    }
}

/// Dominant weights with last entry `lowest` and first entry at most `lowest + width`.
fn weights_in_box(n: usize, lowest: i64, width: i64) -> Vec<HighestWeight> {
    fn rec(hi: i64, lowest: i64, left: usize, cur: &mut Vec<i64>, out: &mut Vec<HighestWeight>) {
        if left == 0 {
            let mut e = cur.clone();
            e.push(lowest);
            out.push(HighestWeight::new(e).expect("built non-increasing"));
            return;
        }
        for x in (lowest..=hi).rev() {
            cur.push(x);
            rec(x, lowest, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lowest + width, lowest, n - 1, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The pairs visited by a sweep, sorted.
pub fn sweep_pairs(range: &SweepRange) -> Vec<(HighestWeight, HighestWeight)> {
    let mut pairs = match range {
        SweepRange::Exhaustive { lambda_max, mu_bound } => {
            let mut v = Vec::new();
            for l in 0..=*lambda_max {
                for m1 in -mu_bound..=*mu_bound {
                    for m2 in -mu_bound..=m1 {
                        v.push((HighestWeight::new(vec![l, 0]).unwrap(), HighestWeight::new(vec![m1, m2]).unwrap()));
                    }
                }
            }
            v
        }
        SweepRange::Sampled { n, count, seed, width, max_dim } => {
            let lambdas = weights_in_box(*n, 0, *width);
            let mus: Vec<HighestWeight> = (-width..=*width).flat_map(|low| weights_in_box(*n, low, *width)).collect();
            let mut all = Vec::new();
            for l in &lambdas {
                for m in &mus {
                    if l.weyl_dimension() * m.weyl_dimension() <= *max_dim {
                        all.push((l.clone(), m.clone()));
                    }
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            all.choose_multiple(&mut rng, *count).cloned().collect()
        }
    };
    pairs.sort();
    pairs
}

/// Runs the criterion, the pairwise condition and the oracle on one pair.
pub fn run_case(lambda: &HighestWeight, mu: &HighestWeight, q: &QValue, burnside_bound: usize) -> SweepCase {
    let criterion = check_theorem(lambda, mu).expect("sweep pairs share n").verdict;
    let pairwise = check_pairwise(lambda, mu).expect("sweep pairs share n");
    let tm = TensorModule::pair(
        EvalModule::standard(GlnRep::build(lambda, q)),
        EvalModule::standard(GlnRep::build(mu, q)),
    )
    .expect("same n and q");
    let oracle = oracle_with_burnside(&tm, burnside_bound);
    let agree = criterion.is_irreducible() == oracle.irreducible
        && oracle.burnside_algebra_dim.is_none_or(|d| (d == tm_dim_sq(lambda, mu)) == oracle.irreducible);
    SweepCase { lambda: lambda.clone(), mu: mu.clone(), criterion, pairwise, oracle, agree }
}

fn tm_dim_sq(lambda: &HighestWeight, mu: &HighestWeight) -> usize {
    let d = (lambda.weyl_dimension() * mu.weyl_dimension()) as usize;
    d * d
}

/// Runs every pair in parallel; the output order is the sorted pair order.
pub fn run_sweep(range: &SweepRange, q: &QValue, burnside_bound: usize) -> SweepReport {
    let pairs = sweep_pairs(range);
    let cases: Vec<SweepCase> = pairs.par_iter().map(|(l, m)| run_case(l, m, q, burnside_bound)).collect();
    let mut matrix = AgreementMatrix::default();
    for c in &cases {
        let slot = match (c.criterion.is_irreducible(), c.oracle.irreducible) {
            (true, true) => &mut matrix.irreducible_irreducible,
            (true, false) => &mut matrix.irreducible_reducible,
            (false, true) => &mut matrix.reducible_irreducible,
            (false, false) => &mut matrix.reducible_reducible,
        };
        *slot += 1;
    }
    let summary = SweepSummary {
        total: cases.len(),
        agree: cases.iter().filter(|c| c.agree).count(),
        pairwise_agree: cases.iter().filter(|c| c.pairwise == c.criterion).count(),
        matrix,
    };
    SweepReport { q: q.clone(), range: range.clone(), cases, summary }
}
