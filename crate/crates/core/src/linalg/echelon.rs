use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

/// Incrementally maintained row-echelon basis of a subspace of `Q^dim`.
/// Every stored row has leading coefficient 1 at its pivot and vanishes at
/// all earlier pivots' positions that precede it.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the span; the result is zero iff `v` lies in it.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        v.retain(|_, x| !x.is_zero());
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(p) = next else { break };
            let coeff = v[&p].clone();
            for (j, x) in &self.rows[&p] {
                let slot = v.entry(*j).or_insert_with(Rational::zero);
                *slot -= &coeff * x;
                if slot.is_zero() {
                    v.remove(j);
                }
            }
            cursor = p + 1;
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((&p, lead)) = r.iter().next() else { return false };
        if !lead.is_one() {
            let inv = lead.recip();
            for x in r.values_mut() {
                *x *= &inv;
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }
}

pub(crate) fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub(crate) fn to_dense(v: &SparseVec, dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(i, x)| (i, int(x))).filter(|(_, x)| !x.is_zero()).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(sv(&[(0, 1), (1, 2)])));
        assert!(e.insert(sv(&[(1, 1), (2, 1)])));
        assert!(!e.insert(sv(&[(0, 1), (1, 3), (2, 1)])));
        assert!(e.contains(&sv(&[(0, 2), (1, 4)])));
        assert!(!e.contains(&sv(&[(2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(!e.insert(SparseVec::new()));
    }
}
