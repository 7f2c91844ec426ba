//! The combinatorial irreducibility criterion for `L(lambda) (x) L(mu)` and
//! its reduction from general evaluation parameters.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{serialize_rational, QValue, Rational};
use crate::error::{Error, Result};
use crate::gt::HighestWeight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Irreducible,
    Reducible,
}

impl Verdict {
    pub fn from_irreducible(b: bool) -> Verdict {
        if b {
            Verdict::Irreducible
        } else {
            Verdict::Reducible
        }
    }

    pub fn is_irreducible(self) -> bool {
        self == Verdict::Irreducible
    }
}

/// `A_lambda = {l_1, ..., l_n}` with `l_i = lambda_i - i + 1`.
pub fn a_set(lambda: &HighestWeight) -> BTreeSet<i64> {
    lambda.l_values().into_iter().collect()
}

/// The lexicographically smallest increasing quadruple `x1<x2<x3<x4` whose
/// entries alternate between `a` and `b`, if any.
pub fn crossing_witness(a: &BTreeSet<i64>, b: &BTreeSet<i64>) -> Option<[i64; 4]> {
    let mut all: Vec<(i64, bool)> = a.iter().map(|&x| (x, true)).chain(b.iter().map(|&x| (x, false))).collect();
    all.sort();
    let len = all.len();
    for i in 0..len {
        for j in i + 1..len {
            if all[j].1 == all[i].1 {
                continue;
            }
            for k in j + 1..len {
                if all[k].1 != all[i].1 {
                    continue;
                }
                if let Some(l) = (k + 1..len).find(|&l| all[l].1 == all[j].1) {
                    return Some([all[i].0, all[j].0, all[k].0, all[l].0]);
                }
            }
        }
    }
    None
}

/// Disjoint sets `a`, `b` are crossing if `a1<b1<a2<b2` or `b1<a1<b2<a2`
/// for some elements.
pub fn is_crossing(a: &BTreeSet<i64>, b: &BTreeSet<i64>) -> bool {
    crossing_witness(a, b).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremResult {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[i64; 4]>,
}

fn same_rank(lambda: &HighestWeight, mu: &HighestWeight) -> Result<()> {
    if lambda.n() != mu.n() {
        return Err(Error::RankMismatch(lambda.n(), mu.n()));
    }
    Ok(())
}

/// Irreducible iff `A_lambda \ A_mu` and `A_mu \ A_lambda` are not crossing.
pub fn check_theorem(lambda: &HighestWeight, mu: &HighestWeight) -> Result<TheoremResult> {
    same_rank(lambda, mu)?;
    let (a, b) = (a_set(lambda), a_set(mu));
    let da: BTreeSet<i64> = a.difference(&b).copied().collect();
    let db: BTreeSet<i64> = b.difference(&a).copied().collect();
    let witness = crossing_witness(&da, &db);
    Ok(TheoremResult { verdict: Verdict::from_irreducible(witness.is_none()), witness })
}

/// `<x_j, x_i> = {x_j, ..., x_i} \ {x_j, x_{j-1}, ..., x_i}` for `i < j`
/// (1-based) and a strictly decreasing `x`.
pub fn bracket(x: &[i64], i: usize, j: usize) -> BTreeSet<i64> {
    assert!(1 <= i && i < j && j <= x.len(), "bracket needs 1 <= i < j <= n");
    let excluded: BTreeSet<i64> = x[i - 1..j].iter().copied().collect();
    (x[j - 1]..=x[i - 1]).filter(|v| !excluded.contains(v)).collect()
}

/// Whether the pair `(i, j)` satisfies
/// `m_j, m_i not in <l_j, l_i>` or `l_j, l_i not in <m_j, m_i>`.
pub fn pair_condition(l: &[i64], m: &[i64], i: usize, j: usize) -> bool {
    let bl = bracket(l, i, j);
    let bm = bracket(m, i, j);
    (!bl.contains(&m[j - 1]) && !bl.contains(&m[i - 1])) || (!bm.contains(&l[j - 1]) && !bm.contains(&l[i - 1]))
}

/// Irreducible iff every pair `i < j` satisfies [`pair_condition`].
pub fn check_pairwise(lambda: &HighestWeight, mu: &HighestWeight) -> Result<Verdict> {
    same_rank(lambda, mu)?;
    let (l, m) = (lambda.l_values(), mu.l_values());
    let n = l.len();
    let ok = (1..=n).all(|j| (1..j).all(|i| pair_condition(&l, &m, i, j)));
    Ok(Verdict::from_irreducible(ok))
}

/// Parameters of `L_a(h, eps, lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralParams {
    #[serde(serialize_with = "serialize_rational")]
    pub h: Rational,
    pub eps: Vec<i8>,
    pub lambda: HighestWeight,
    #[serde(serialize_with = "serialize_rational")]
    pub a: Rational,
}

impl GeneralParams {
    pub fn new(lambda: HighestWeight, a: Rational, h: Rational, eps: Vec<i8>) -> Result<Self> {
        if a.is_zero() || h.is_zero() {
            return Err(Error::ZeroParameter);
        }
        if eps.len() != lambda.n() {
            return Err(Error::RankMismatch(lambda.n(), eps.len()));
        }
        if eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::InvalidSigns);
        }
        Ok(GeneralParams { h, eps, lambda, a })
    }

    /// `h = 1`, `eps = (1, ..., 1)`, `a = 1`.
    pub fn standard(lambda: HighestWeight) -> Self {
        let n = lambda.n();
        GeneralParams { h: Rational::one(), eps: vec![1; n], lambda, a: Rational::one() }
    }

    /// `b = a h^{-2}`.
    pub fn b(&self) -> Rational {
        &self.a / (&self.h * &self.h)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Reduction {
    /// `b / b'` is not an even power of `q`.
    Irreducible,
    /// `b / b' = q^{2k}`; the module behaves like `L(lambda) (x) L(mu)`.
    Pair { k: i64, lambda: HighestWeight, mu: HighestWeight },
}

/// `k` with `q^{2k} = x`, if any.
pub fn even_q_log(x: &Rational, q: &QValue) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let bits = |v: &BigInt| v.abs().bits() as i64;
    let bound = bits(x.numer()).max(bits(x.denom())) + 1;
    (-bound..=bound).find(|&k| &q.pow(2 * k) == x)
}

/// Reduces `L_a(h, eps, lambda) (x) L_a'(h', eps', lambda')` to the
/// standard form `L(lambda) (x) L(lambda' + k I)` where `b / b' = q^{2k}`.
pub fn reduce_general(p: &GeneralParams, pp: &GeneralParams, q: &QValue) -> Result<Reduction> {
    same_rank(&p.lambda, &pp.lambda)?;
    let ratio = p.b() / pp.b();
    Ok(match even_q_log(&ratio, q) {
        None => Reduction::Irreducible,
        Some(k) => Reduction::Pair { k, lambda: p.lambda.clone(), mu: pp.lambda.shifted(k) },
    })
}

/// The full decision for two general factors.
pub fn check_general(p: &GeneralParams, pp: &GeneralParams, q: &QValue) -> Result<(Reduction, TheoremResult)> {
    let red = reduce_general(p, pp, q)?;
    let res = match &red {
        Reduction::Irreducible => TheoremResult { verdict: Verdict::Irreducible, witness: None },
        Reduction::Pair { lambda, mu, .. } => check_theorem(lambda, mu)?,
    };
    Ok((red, res))
}

/// A tensor product of several evaluation modules is irreducible iff every
/// two-factor subproduct (in the given order) is.
pub fn multi_factor_check(params: &[GeneralParams], q: &QValue) -> Result<Verdict> {
    if params.is_empty() {
        return Err(Error::Invalid("multi_factor_check needs at least one factor".into()));
    }
    for i in 0..params.len() {
        for j in i + 1..params.len() {
            if !check_general(&params[i], &params[j], q)?.1.verdict.is_irreducible() {
                return Ok(Verdict::Reducible);
            }
        }
    }
    Ok(Verdict::Irreducible)
}

/// Data for the explicit singular vector in a reducible `L(lambda) (x) L(mu)`
/// where only the pair `(1, n)` violates [`pair_condition`]: after ordering
/// the factors, `m_n in <l_{p+1}, l_p>` and `l_1 in <m_{n-p+1}, m_{n-p}>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaCase {
    pub lambda: HighestWeight,
    pub mu: HighestWeight,
    /// The factors were exchanged relative to the query.
    pub swapped: bool,
    pub p: usize,
    /// `k_i = l_i - m_{n-p+i}`, all positive.
    pub k: Vec<i64>,
}

/// `k` for the given ordered pair and `p`, when the hypotheses hold.
pub fn theta_hypotheses(lambda: &HighestWeight, mu: &HighestWeight, p: usize) -> Option<Vec<i64>> {
    let n = lambda.n();
    if n < 2 || mu.n() != n || p == 0 || p >= n {
        return None;
    }
    let (l, m) = (lambda.l_values(), mu.l_values());
    let only_corner = (1..=n).all(|j| (1..j).all(|i| (i, j) == (1, n) || pair_condition(&l, &m, i, j)));
    if !only_corner || pair_condition(&l, &m, 1, n) {
        return None;
    }
    let in_l = bracket(&l, p, p + 1).contains(&m[n - 1]);
    let in_m = bracket(&m, n - p, n - p + 1).contains(&l[0]);
    if !(in_l && in_m) {
        return None;
    }
    let k: Vec<i64> = (1..=p).map(|i| l[i - 1] - m[n - p + i - 1]).collect();
    k.iter().all(|&x| x > 0).then_some(k)
}

/// All singular-vector configurations for the pair, in either order.
pub fn theta_cases(lambda: &HighestWeight, mu: &HighestWeight) -> Vec<ThetaCase> {
    let mut out = Vec::new();
    for (swapped, (x, y)) in [(false, (lambda, mu)), (true, (mu, lambda))] {
        for p in 1..x.n() {
            if let Some(k) = theta_hypotheses(x, y, p) {
                out.push(ThetaCase { lambda: x.clone(), mu: y.clone(), swapped, p, k });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn hw(v: &[i64]) -> HighestWeight {
        HighestWeight::new(v.to_vec()).unwrap()
    }

    fn set(v: &[i64]) -> BTreeSet<i64> {
        v.iter().copied().collect()
    }

    #[test]
    fn a_set_examples() {
        assert_eq!(a_set(&hw(&[0, 0, 0])), set(&[0, -1, -2]));
        assert_eq!(a_set(&hw(&[2, 1, 0])), set(&[2, 0, -2]));
        assert_eq!(a_set(&hw(&[1, 0])), set(&[1, -1]));
    }

    #[test]
    fn crossing_examples() {
        assert!(!is_crossing(&set(&[]), &set(&[1, 2, 3])));
        assert!(is_crossing(&set(&[1, 3]), &set(&[2, 4])));
        assert!(!is_crossing(&set(&[1, 2]), &set(&[3, 4])));
        assert_eq!(crossing_witness(&set(&[1, -1]), &set(&[0, -2])), Some([-2, -1, 0, 1]));
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(check_theorem(&hw(&[2, 0]), &hw(&[1, 0])).unwrap().verdict, Verdict::Irreducible);
        let r = check_theorem(&hw(&[1, 0]), &hw(&[0, -1])).unwrap();
        assert_eq!(r.verdict, Verdict::Reducible);
        assert_eq!(r.witness, Some([-2, -1, 0, 1]));
        assert!(check_theorem(&hw(&[1, 0]), &hw(&[1, 0, 0])).is_err());
    }

    #[test]
    fn pairwise_examples() {
        let (l, m) = (hw(&[1, 0]).l_values(), hw(&[0, -1]).l_values());
        assert_eq!(bracket(&l, 1, 2), set(&[0]));
        assert_eq!(bracket(&m, 1, 2), set(&[-1]));
        assert_eq!(check_pairwise(&hw(&[1, 0]), &hw(&[0, -1])).unwrap(), Verdict::Reducible);
        assert!(bracket(&hw(&[3, 3, 3]).l_values(), 1, 3).is_empty());
    }

    #[test]
    fn reduction_examples() {
        let q2 = QValue::new(rat(2, 1)).unwrap();
        let mk = |a: Rational| GeneralParams::new(hw(&[1, 0]), a, rat(1, 1), vec![1, 1]).unwrap();
        assert_eq!(
            reduce_general(&mk(rat(1, 1)), &mk(rat(1, 1)), &q2).unwrap(),
            Reduction::Pair { k: 0, lambda: hw(&[1, 0]), mu: hw(&[1, 0]) }
        );
        assert_eq!(reduce_general(&mk(rat(8, 1)), &mk(rat(1, 1)), &q2).unwrap(), Reduction::Irreducible);
        assert_eq!(
            reduce_general(&mk(rat(4, 1)), &mk(rat(1, 1)), &q2).unwrap(),
            Reduction::Pair { k: 1, lambda: hw(&[1, 0]), mu: hw(&[2, 1]) }
        );
        assert_eq!(even_q_log(&rat(1, 16), &q2), Some(-2));
        assert_eq!(even_q_log(&rat(-4, 1), &q2), None);
    }

    #[test]
    fn multi_factor_examples() {
        let q = QValue::default();
        let f = |l: &[i64]| GeneralParams::standard(hw(l));
        assert_eq!(multi_factor_check(&[f(&[1, 0])], &q).unwrap(), Verdict::Irreducible);
        assert_eq!(multi_factor_check(&[f(&[1, 0]), f(&[1, 0]), f(&[1, 0])], &q).unwrap(), Verdict::Irreducible);
        assert_eq!(multi_factor_check(&[f(&[2, 2]), f(&[1, 0]), f(&[0, -1])], &q).unwrap(), Verdict::Reducible);
    }

    #[test]
    fn theta_case_example() {
        let cases = theta_cases(&hw(&[1, 0]), &hw(&[0, -1]));
        assert_eq!(cases.len(), 1);
        let c = &cases[0];
        assert!(c.swapped);
        assert_eq!((c.lambda.entries(), c.mu.entries(), c.p, c.k.clone()), (&[0, -1][..], &[1, 0][..], 1, vec![1]));
    }

    fn arb_pair() -> impl Strategy<Value = (HighestWeight, HighestWeight)> {
        (2usize..=4)
            .prop_flat_map(|n| (prop::collection::vec(-3i64..=3, n), prop::collection::vec(-3i64..=3, n)))
            .prop_map(|(mut a, mut b)| {
                a.sort_by(|x, y| y.cmp(x));
                b.sort_by(|x, y| y.cmp(x));
                (HighestWeight::new(a).unwrap(), HighestWeight::new(b).unwrap())
            })
    }

    proptest! {
        #[test]
        fn theorem_is_symmetric((l, m) in arb_pair()) {
            prop_assert_eq!(check_theorem(&l, &m).unwrap().verdict, check_theorem(&m, &l).unwrap().verdict);
        }

        #[test]
        fn theorem_is_shift_equivariant((l, m) in arb_pair(), t in -5i64..=5) {
            prop_assert_eq!(
                check_theorem(&l, &m).unwrap().verdict,
                check_theorem(&l.shifted(t), &m.shifted(t)).unwrap().verdict
            );
        }

        #[test]
        fn theorem_matches_pairwise((l, m) in arb_pair()) {
            prop_assert_eq!(check_theorem(&l, &m).unwrap().verdict, check_pairwise(&l, &m).unwrap());
        }

        #[test]
        fn trivial_reduction_is_identity((l, m) in arb_pair()) {
            let q = QValue::default();
            let r = reduce_general(&GeneralParams::standard(l.clone()), &GeneralParams::standard(m.clone()), &q).unwrap();
            prop_assert_eq!(r, Reduction::Pair { k: 0, lambda: l, mu: m });
        }
    }
}
