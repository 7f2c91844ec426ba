//! The algebra generated by the action: a module is absolutely irreducible
//! iff its action matrices span the full matrix algebra.
//!
//! The closure under products is computed over `F_p`. Products that are
//! independent mod `p` are independent over `Q`, so reaching `d^2` mod `p`
//! proves fullness exactly. A smaller count is confirmed over `Q` by an
//! explicit proper invariant subspace; failing that, the closure is redone
//! over `Q`.

use std::collections::HashMap;

use serde::Serialize;

use super::modp;
use super::{proper_invariant_subspace, Grading, OracleVerdict};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, SparseVec};
use crate::yangian::YangianModule;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurnsideOutcome {
    /// Whether the action spans all `d x d` matrices.
    pub full: bool,
    /// Dimension of the generated algebra: over `F_p` unless `exact`.
    pub algebra_dim: usize,
    /// `algebra_dim` is the dimension over `Q` (always so when `full`).
    pub exact: bool,
    /// Dimension of the proper invariant subspace confirming `!full`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_subspace_dim: Option<usize>,
}

/// A weight-homogeneous generator over `F_p`, by columns.
struct FpGenerator {
    shift: Vec<i64>,
    columns: Vec<Vec<(usize, u64)>>,
}

/// The positions `(i, j)` with `wt(i) - wt(j) = delta`, for each `delta`.
struct Classes {
    keys: HashMap<Vec<i64>, usize>,
    shifts: Vec<Vec<i64>>,
    positions: Vec<Vec<(usize, usize)>>,
    /// `(class, local index)` of each `i * d + j`.
    slot: Vec<(usize, usize)>,
}

impl Classes {
    fn new(weights: &[Vec<i64>]) -> Self {
        let d = weights.len();
        let mut c = Classes { keys: HashMap::new(), shifts: Vec::new(), positions: Vec::new(), slot: vec![(0, 0); d * d] };
        for i in 0..d {
            for j in 0..d {
                let delta: Vec<i64> = weights[i].iter().zip(&weights[j]).map(|(a, b)| a - b).collect();
                let k = *c.keys.entry(delta.clone()).or_insert_with(|| {
                    c.shifts.push(delta);
                    c.positions.push(Vec::new());
                    c.positions.len() - 1
                });
                c.slot[i * d + j] = (k, c.positions[k].len());
                c.positions[k].push((i, j));
            }
        }
        c
    }
}

/// Semi-echelon rows over `F_p` in insertion order; pivots normalised to 1.
#[derive(Default)]
struct FpEchelon {
    rows: Vec<(usize, Vec<u64>)>,
}

impl FpEchelon {
    /// Reduces `v`; returns the normalised remainder if it is new.
    fn insert(&mut self, mut v: Vec<u64>) -> Option<Vec<u64>> {
        for (p, row) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    if *r != 0 {
                        *x = modp::sub(*x, modp::mul(c, *r));
                    }
                }
            }
        }
        let p = v.iter().position(|&x| x != 0)?;
        let s = modp::inv(v[p]);
        for x in v.iter_mut() {
            *x = modp::mul(*x, s);
        }
        self.rows.push((p, v.clone()));
        Some(v)
    }
}

fn fp_generators(m: &dyn YangianModule) -> Option<Vec<FpGenerator>> {
    let n = m.n();
    let d = m.dim();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let mut shift = vec![0; n];
            shift[i - 1] += 1;
            shift[j - 1] -= 1;
            for mat in m.t_op(i, j).coeffs().values() {
                let mut columns = vec![Vec::new(); d];
                for (r, c, x) in mat.triplets() {
                    columns[c].push((r, modp::from_rational(x)?));
                }
                out.push(FpGenerator { shift: shift.clone(), columns });
            }
        }
    }
    Some(out)
}

/// Dimension over `F_p` of the algebra generated by the identity and the
/// coefficients of all `t_ij(u)`; `None` if `p` divides a denominator.
fn closure_mod_p(m: &dyn YangianModule) -> Option<usize> {
    let d = m.dim();
    let classes = Classes::new(m.weights());
    let gens = fp_generators(m)?;
    let mut spans: Vec<FpEchelon> = (0..classes.shifts.len()).map(|_| FpEchelon::default()).collect();
    let zero = classes.keys[&vec![0; m.n()]];
    let identity: Vec<u64> = classes.positions[zero].iter().map(|&(i, j)| u64::from(i == j)).collect();
    let mut frontier = vec![(zero, spans[zero].insert(identity).expect("identity is nonzero"))];
    let mut total = 1;
    while let Some((k, x)) = frontier.pop() {
        if total == d * d {
            break;
        }
        for g in &gens {
            let target: Vec<i64> = classes.shifts[k].iter().zip(&g.shift).map(|(a, b)| a + b).collect();
            let Some(&t) = classes.keys.get(&target) else { continue };
            if spans[t].rows.len() == classes.positions[t].len() {
                continue;
            }
            let mut y = vec![0u64; classes.positions[t].len()];
            let mut nonzero = false;
            for (&(i, j), &xv) in classes.positions[k].iter().zip(&x) {
                if xv == 0 {
                    continue;
                }
                for &(r, gv) in &g.columns[i] {
                    let (tc, local) = classes.slot[r * d + j];
                    debug_assert_eq!(tc, t, "generator is not weight-homogeneous");
                    y[local] = modp::add(y[local], modp::mul(gv, xv));
                    nonzero = true;
                }
            }
            if !nonzero {
                continue;
            }
            if let Some(v) = spans[t].insert(y) {
                total += 1;
                frontier.push((t, v));
            }
        }
    }
    Some(total)
}

/// The same closure over `Q`.
fn closure_exact(m: &dyn YangianModule) -> usize {
    let d = m.dim();
    let g = Grading::new(m);
    let n = m.n();
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let mut delta = vec![0; n];
            delta[i - 1] += 1;
            delta[j - 1] -= 1;
            for mat in m.t_op(i, j).coeffs().values() {
                gens.push((delta.clone(), mat.clone()));
            }
        }
    }
    let capacity = |delta: &[i64]| -> usize {
        g.blocks.iter().map(|(w, b)| b.len() * g.size(&w.iter().zip(delta).map(|(a, b)| a + b).collect::<Vec<_>>())).sum()
    };
    let vectorize = |x: &Matrix| -> SparseVec { x.triplets().map(|(i, j, v)| (i * d + j, v.clone())).collect() };
    let mut spans: HashMap<Vec<i64>, Echelon> = HashMap::new();
    let zero = vec![0; n];
    let id = Matrix::identity(d);
    spans.entry(zero.clone()).or_default().insert(vectorize(&id));
    let mut frontier = vec![(zero, id)];
    let mut total = 1;
    while let Some((delta, x)) = frontier.pop() {
        if total == d * d {
            break;
        }
        for (gd, gm) in &gens {
            let nd: Vec<i64> = delta.iter().zip(gd).map(|(a, b)| a + b).collect();
            let cap = capacity(&nd);
            if cap == 0 || spans.get(&nd).is_some_and(|e| e.rank() == cap) {
                continue;
            }
            let y = gm.mul(&x);
            if y.is_zero() {
                continue;
            }
            if spans.entry(nd.clone()).or_default().insert(vectorize(&y)) {
                total += 1;
                frontier.push((nd, y));
            }
        }
    }
    total
}

/// Whether the action generates the full matrix algebra, with the evidence.
/// Errors if the module dimension exceeds `bound`.
pub fn burnside_outcome(m: &dyn YangianModule, bound: usize) -> Result<BurnsideOutcome> {
    let d = m.dim();
    if d > bound {
        return Err(Error::BurnsideBound { dim: d, bound });
    }
    if let Some(dim) = closure_mod_p(m) {
        if dim == d * d {
            return Ok(BurnsideOutcome { full: true, algebra_dim: dim, exact: true, invariant_subspace_dim: None });
        }
        if let Some(w) = proper_invariant_subspace(m) {
            return Ok(BurnsideOutcome { full: false, algebra_dim: dim, exact: false, invariant_subspace_dim: Some(w) });
        }
    }
    let dim = closure_exact(m);
    Ok(BurnsideOutcome { full: dim == d * d, algebra_dim: dim, exact: true, invariant_subspace_dim: None })
}

pub fn burnside_algebra_dim(m: &dyn YangianModule, bound: usize) -> Result<usize> {
    burnside_outcome(m, bound).map(|o| o.algebra_dim)
}

pub fn burnside_check(m: &dyn YangianModule, bound: usize) -> Result<bool> {
    burnside_outcome(m, bound).map(|o| o.full)
}

/// [`super::oracle_irreducible`] plus the algebra dimension when within `bound`.
pub fn oracle_with_burnside(m: &dyn YangianModule, bound: usize) -> OracleVerdict {
    let mut v = super::oracle_irreducible(m);
    v.burnside_algebra_dim = burnside_algebra_dim(m, bound).ok();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QValue;
    use crate::gln::GlnRep;
    use crate::gt::HighestWeight;
    use crate::yangian::{EvalModule, TensorModule};

    fn eval(l: &[i64]) -> EvalModule {
        EvalModule::standard(GlnRep::build(&HighestWeight::new(l.to_vec()).unwrap(), &QValue::default()))
    }

    #[test]
    fn modular_closure_matches_exact() {
        for (l, m) in [(&[1, 0][..], &[1, 0][..]), (&[1, 0], &[0, -1]), (&[0, -1], &[1, 0]), (&[2, 0], &[1, -1])] {
            let tm = TensorModule::pair(eval(l), eval(m)).unwrap();
            assert_eq!(closure_mod_p(&tm), Some(closure_exact(&tm)), "{l:?} {m:?}");
        }
    }

    #[test]
    fn reducible_outcome_carries_a_subspace() {
        let tm = TensorModule::pair(eval(&[0, -1]), eval(&[1, 0])).unwrap();
        let o = burnside_outcome(&tm, 36).unwrap();
        assert!(!o.full);
        assert!(o.invariant_subspace_dim.is_some_and(|w| 0 < w && w < 4));
    }
}
