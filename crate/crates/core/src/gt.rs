//! Gelfand–Tsetlin patterns: enumeration, weights, elementary shifts and the
//! shifted coordinates `l_{ki} = lambda_{ki} - i + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A `gl_n` highest weight: a weakly decreasing integer tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct HighestWeight(Vec<i64>);

impl HighestWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() || entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidHighestWeight(entries));
        }
        Ok(HighestWeight(entries))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `lambda + t * (1, ..., 1)`.
    pub fn shifted(&self, t: i64) -> HighestWeight {
        HighestWeight(self.0.iter().map(|x| x + t).collect())
    }

    /// `l_i = lambda_i - i + 1` for `i = 1..n`, strictly decreasing.
    pub fn l_values(&self) -> Vec<i64> {
        self.0.iter().enumerate().map(|(i, x)| x - i as i64).collect()
    }

    /// Dimension of `L(lambda)` by the Weyl dimension formula.
    pub fn weyl_dimension(&self) -> u64 {
        let l = &self.0;
        let n = l.len();
        let (mut num, mut den) = (1u128, 1u128);
        for i in 0..n {
            for j in i + 1..n {
                num *= (l[i] - l[j] + (j - i) as i64) as u128;
                den *= (j - i) as u128;
            }
        }
        (num / den) as u64
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A Gelfand–Tsetlin pattern. Row `k` (`1 <= k <= n`, counted from the
/// bottom) has `k` entries; row `n` is the highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    rows: Vec<Vec<i64>>,
}

impl Pattern {
    /// Validates betweenness; `rows` is given bottom row first.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Option<Pattern> {
        let ok = rows.iter().enumerate().all(|(k, r)| r.len() == k + 1)
            && HighestWeight::new(rows.last()?.clone()).is_ok()
            && rows.windows(2).all(|w| interlaces(&w[0], &w[1]));
        ok.then_some(Pattern { rows })
    }

    /// The pattern whose every row is as large as possible.
    pub fn highest(lambda: &HighestWeight) -> Pattern {
        let n = lambda.n();
        Pattern { rows: (1..=n).map(|k| lambda.0[..k].to_vec()).collect() }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn top(&self) -> &[i64] {
        &self.rows[self.n() - 1]
    }

    /// Row `k` (1-based from the bottom).
    pub fn row(&self, k: usize) -> &[i64] {
        &self.rows[k - 1]
    }

    /// Entry `lambda_{kj}` (both 1-based).
    pub fn entry(&self, k: usize, j: usize) -> i64 {
        self.rows[k - 1][j - 1]
    }

    /// Weight `w_k = sum_i lambda_{ki} - sum_i lambda_{k-1,i}`: `t_k` acts by `q^{w_k}`.
    pub fn weight(&self) -> Vec<i64> {
        let sums: Vec<i64> = self.rows.iter().map(|r| r.iter().sum()).collect();
        (0..self.n()).map(|k| sums[k] - if k == 0 { 0 } else { sums[k - 1] }).collect()
    }

    /// `Lambda +- delta_{kj}`, or `None` when the result violates betweenness.
    ///
    /// # Panics
    /// If not `1 <= j <= k <= n - 1`.
    pub fn shift(&self, k: usize, j: usize, sign: i64) -> Option<Pattern> {
        assert!(
            1 <= j && j <= k && k < self.n(),
            "shift({k}, {j}) needs 1 <= j <= k <= n-1 (n = {})",
            self.n()
        );
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        let mut rows = self.rows.clone();
        rows[k - 1][j - 1] += sign;
        let ok = interlaces(&rows[k - 1], &rows[k]) && (k == 1 || interlaces(&rows[k - 2], &rows[k - 1]));
        ok.then_some(Pattern { rows })
    }

    /// `(l_{k1}, ..., l_{kk})` with `l_{ki} = lambda_{ki} - i + 1`.
    pub fn l_values(&self, k: usize) -> Vec<i64> {
        self.row(k).iter().enumerate().map(|(i, x)| x - i as i64).collect()
    }
}

/// `lower` interlaces `upper` (one entry longer).
fn interlaces(lower: &[i64], upper: &[i64]) -> bool {
    lower.iter().enumerate().all(|(i, &x)| upper[i + 1] <= x && x <= upper[i])
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let top_first: Vec<&Vec<i64>> = self.rows.iter().rev().collect();
        top_first.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut rows = Vec::<Vec<i64>>::deserialize(d)?;
        rows.reverse();
        Pattern::from_rows(rows).ok_or_else(|| serde::de::Error::custom("not a Gelfand-Tsetlin pattern"))
    }
}

/// All patterns with top row `lambda`, ordered lexicographically (descending)
/// by the concatenation of rows `n-1, n-2, ..., 1`. The highest pattern comes
/// first.
pub fn enumerate_patterns(lambda: &HighestWeight) -> Vec<Pattern> {
    let n = lambda.n();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![lambda.0.clone()];
    fill(&mut stack, n, &mut out);
    out
}

fn fill(top_down: &mut Vec<Vec<i64>>, n: usize, out: &mut Vec<Pattern>) {
    let upper = top_down.last().unwrap().clone();
    if upper.len() == 1 {
        let mut rows = top_down.clone();
        rows.reverse();
        out.push(Pattern { rows });
        return;
    }
    let k = upper.len() - 1;
    let mut row = vec![0; k];
    choose(&upper, 0, &mut row, top_down, n, out);
}

fn choose(upper: &[i64], i: usize, row: &mut Vec<i64>, top_down: &mut Vec<Vec<i64>>, n: usize, out: &mut Vec<Pattern>) {
    if i == row.len() {
        top_down.push(row.clone());
        fill(top_down, n, out);
        top_down.pop();
        return;
    }
    for x in (upper[i + 1]..=upper[i]).rev() {
        row[i] = x;
        choose(upper, i + 1, row, top_down, n, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn hw(v: &[i64]) -> HighestWeight {
        HighestWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing_weights() {
        assert!(HighestWeight::new(vec![0, 1]).is_err());
        assert!(HighestWeight::new(vec![]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_patterns(&hw(&[5])).len(), 1);
        let two = enumerate_patterns(&hw(&[1, 0]));
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].row(1), &[1]);
        assert_eq!(two[1].row(1), &[0]);
        // Weyl: (2-1+1)(1-0+1)(2-0+2)/(1*1*2) = 8
        assert_eq!(enumerate_patterns(&hw(&[2, 1, 0])).len(), 8);
        assert_eq!(hw(&[2, 1, 0]).weyl_dimension(), 8);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(Pattern::highest(&hw(&[2, 1, 0])).weight(), vec![2, 1, 0]);
        let p = Pattern::from_rows(vec![vec![0], vec![1, 0]]).unwrap();
        assert_eq!(p.weight(), vec![0, 1]);
        let p = Pattern::from_rows(vec![vec![1], vec![1, 0]]).unwrap();
        assert_eq!(p.weight(), vec![1, 0]);
    }

    #[test]
    fn shift_examples() {
        let top = Pattern::highest(&hw(&[1, 0]));
        assert_eq!(top.shift(1, 1, 1), None);
        assert_eq!(top.shift(1, 1, -1), Pattern::from_rows(vec![vec![0], vec![1, 0]]));
    }

    #[test]
    #[should_panic]
    fn shift_on_gl1_is_a_precondition_violation() {
        Pattern::highest(&hw(&[3])).shift(1, 1, 1);
    }

    #[test]
    fn l_value_examples() {
        assert_eq!(hw(&[2, 1, 0]).l_values(), vec![2, 0, -2]);
        assert_eq!(Pattern::highest(&hw(&[1, 0])).l_values(2), vec![1, -1]);
        assert_eq!(Pattern::highest(&hw(&[0, 0, 0])).l_values(3), vec![0, -1, -2]);
    }

    #[test]
    fn json_is_top_row_first() {
        let p = Pattern::from_rows(vec![vec![0], vec![1, 0]]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[1,0],[0]]");
        let back: Pattern = serde_json::from_str("[[1,0],[0]]").unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<Pattern>("[[1,0],[2]]").is_err());
    }

    fn arb_weight() -> impl Strategy<Value = HighestWeight> {
        (1usize..=4, -2i64..=2, prop::collection::vec(0i64..=2, 3)).prop_map(|(n, base, gaps)| {
            let mut v = vec![base];
            for g in gaps.iter().take(n - 1) {
                let last = *v.last().unwrap();
                v.push(last - g);
            }
            HighestWeight::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn enumeration_matches_weyl_and_is_sorted(l in arb_weight()) {
            let ps = enumerate_patterns(&l);
            prop_assert_eq!(ps.len() as u64, l.weyl_dimension());
            let distinct: HashSet<_> = ps.iter().collect();
            prop_assert_eq!(distinct.len(), ps.len());
            let keys: Vec<Vec<i64>> = ps.iter().map(|p| (1..p.n()).rev().flat_map(|k| p.row(k).to_vec()).collect()).collect();
            prop_assert!(keys.windows(2).all(|w| w[0] > w[1]));
            prop_assert_eq!(&ps[0], &Pattern::highest(&l));
        }

        #[test]
        fn l_values_strictly_decrease(l in arb_weight()) {
            for p in enumerate_patterns(&l) {
                for k in 1..=p.n() {
                    prop_assert!(p.l_values(k).windows(2).all(|w| w[0] > w[1]));
                }
            }
        }

        #[test]
        fn opposite_shifts_cancel(l in arb_weight()) {
            for p in enumerate_patterns(&l) {
                for k in 1..p.n() {
                    for j in 1..=k {
                        for s in [1, -1] {
                            if let Some(r) = p.shift(k, j, s) {
                                prop_assert_eq!(r.shift(k, j, -s), Some(p.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
}
