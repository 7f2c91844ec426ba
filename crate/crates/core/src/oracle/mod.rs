//! Irreducibility by direct linear algebra on the action matrices.
//!
//! All `t_ij^{(r)}` shift the `gl_n`-weight by `eps_i - eps_j`, so every
//! computation here runs weight block by weight block.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::arith::Rational;
use crate::linalg::{rref_rank_kernel, Echelon, Matrix, SparseVec};
use crate::yangian::YangianModule;

mod burnside;
mod modp;

pub use burnside::{burnside_algebra_dim, burnside_check, burnside_outcome, oracle_with_burnside, BurnsideOutcome};

pub const DEFAULT_BURNSIDE_BOUND: usize = 36;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub cyclic_from_top: bool,
    pub singular_dim: usize,
    pub irreducible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub burnside_algebra_dim: Option<usize>,
}

/// Basis indices grouped by weight.
struct Grading {
    blocks: BTreeMap<Vec<i64>, Vec<usize>>,
}

impl Grading {
    fn new(m: &dyn YangianModule) -> Self {
        let mut blocks: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (i, w) in m.weights().iter().enumerate() {
            blocks.entry(w.clone()).or_default().push(i);
        }
        Grading { blocks }
    }

    fn size(&self, w: &[i64]) -> usize {
        self.blocks.get(w).map_or(0, Vec::len)
    }
}

fn shifted(w: &[i64], i: usize, j: usize) -> Vec<i64> {
    let mut v = w.to_vec();
    v[i - 1] += 1;
    v[j - 1] -= 1;
    v
}

/// A nonzero action matrix, stored by columns, that raises the weight by
/// `eps_i - eps_j`.
struct Generator {
    i: usize,
    j: usize,
    columns: Matrix,
}

/// All coefficient matrices of `t_ij(u)` (and of `t-bar_ij(u)` if asked).
/// `dual` gives the transposed action, which shifts weights the other way.
fn generators(m: &dyn YangianModule, with_tbar: bool, dual: bool) -> Vec<Generator> {
    let n = m.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let mut ops = vec![m.t_op(i, j)];
            if with_tbar {
                ops.push(m.tbar_op(i, j));
            }
            for op in ops {
                for mat in op.coeffs().values() {
                    out.push(if dual {
                        Generator { i: j, j: i, columns: mat.clone() }
                    } else {
                        Generator { i, j, columns: mat.transpose() }
                    });
                }
            }
        }
    }
    out
}

/// Basis of the common kernel of `ops`, where each entry of `ops` holds the
/// matrix of an operator by columns. Solved one weight block at a time.
fn block_kernel(m: &dyn YangianModule, ops: &[Matrix]) -> Vec<Vec<Rational>> {
    let dim = m.dim();
    let g = Grading::new(m);
    let mut out = Vec::new();
    for idx in g.blocks.values() {
        let local: HashMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        // rows of the restricted system: one per (operator, target index)
        let mut rows: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        for (o, cols) in ops.iter().enumerate() {
            for &c in idx {
                for (r, v) in cols.row(c) {
                    rows.entry((o, *r)).or_default().push((local[&c], v.clone()));
                }
            }
        }
        let triplets = rows.into_values().enumerate().flat_map(|(r, es)| es.into_iter().map(move |(c, v)| (r, c, v)));
        let nrows = ops.len() * dim;
        let sys = Matrix::from_triplets(nrows.max(1), idx.len(), triplets);
        for k in rref_rank_kernel(&sys).kernel {
            let mut v = vec![Rational::zero(); dim];
            for (pos, x) in k.into_iter().enumerate() {
                v[idx[pos]] = x;
            }
            out.push(v);
        }
    }
    out
}

fn coefficient_matrices(m: &dyn YangianModule, pairs: impl Iterator<Item = (usize, usize)>) -> Vec<Matrix> {
    pairs.flat_map(|(i, j)| m.t_op(i, j).coeffs().values().cloned().collect::<Vec<_>>()).collect()
}

/// Basis of the vectors killed by every `t_ij^{(r)}` with `i < j`.
pub fn singular_space(m: &dyn YangianModule) -> Vec<Vec<Rational>> {
    let n = m.n();
    let raising = coefficient_matrices(m, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))));
    block_kernel(m, &raising.iter().map(Matrix::transpose).collect::<Vec<_>>())
}

/// Vectors of the dual module killed by every transposed `t_ij^{(r)}` with `i > j`.
fn dual_singular_space(m: &dyn YangianModule) -> Vec<Vec<Rational>> {
    let n = m.n();
    let lowering = coefficient_matrices(m, (1..=n).flat_map(|i| (1..i).map(move |j| (i, j))));
    block_kernel(m, &lowering)
}

fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn weight_of(m: &dyn YangianModule, v: &SparseVec) -> Option<Vec<i64>> {
    v.keys().next().map(|&i| m.weights()[i].clone())
}

/// Dimension of some nonzero proper subspace invariant under all `t_ij^{(r)}`,
/// found exactly over `Q`, if one of the cheap candidates works. The
/// candidates are the submodules generated by singular vectors, and the
/// annihilators of the dual submodules generated by the lowest vector and by
/// dual singular vectors.
pub fn proper_invariant_subspace(m: &dyn YangianModule) -> Option<usize> {
    let d = m.dim();
    let gens = generators(m, false, false);
    let (v, w) = top_seed(m);
    let s = graded_span(m, &gens, v, w);
    if s < d {
        return Some(s);
    }
    for v in singular_space(m).iter().map(|v| to_sparse(v)) {
        let Some(w) = weight_of(m, &v) else { continue };
        let s = graded_span(m, &gens, v, w);
        if s < d {
            return Some(s);
        }
    }
    let dual = generators(m, false, true);
    let mut seeds = vec![to_sparse(&(0..d).map(|i| Rational::from_integer(i64::from(i + 1 == d).into())).collect::<Vec<_>>())];
    seeds.extend(dual_singular_space(m).iter().map(|v| to_sparse(v)));
    for v in seeds {
        let Some(w) = weight_of(m, &v) else { continue };
        let s = graded_span(m, &dual, v, w);
        if s < d {
            return Some(d - s);
        }
    }
    None
}

fn graded_span(m: &dyn YangianModule, gens: &[Generator], seed: SparseVec, w0: Vec<i64>) -> usize {
    let g = Grading::new(m);
    let mut spans: BTreeMap<Vec<i64>, Echelon> = BTreeMap::new();
    let mut frontier = vec![(w0.clone(), seed.clone())];
    spans.entry(w0).or_default().insert(seed);
    let mut total = 1;
    while let Some((w, v)) = frontier.pop() {
        if total == m.dim() {
            break;
        }
        for gen in gens {
            let tw = shifted(&w, gen.i, gen.j);
            let cap = g.size(&tw);
            if cap == 0 || spans.get(&tw).is_some_and(|e| e.rank() == cap) {
                continue;
            }
            let x = Matrix::apply_sparse_transposed(&gen.columns, &v);
            if x.is_empty() {
                continue;
            }
            let e = spans.entry(tw.clone()).or_default();
            let r = e.reduce(x);
            if !r.is_empty() {
                e.insert(r.clone());
                total += 1;
                frontier.push((tw, r));
            }
        }
    }
    total
}

fn top_seed(m: &dyn YangianModule) -> (SparseVec, Vec<i64>) {
    let mut v = SparseVec::new();
    v.insert(0, Rational::from_integer(1.into()));
    (v, m.weights()[0].clone())
}

/// Whether the highest vector generates the whole module under all
/// coefficients of `t_ij(u)`.
pub fn is_cyclic_from_top(m: &dyn YangianModule) -> bool {
    let (v, w) = top_seed(m);
    graded_span(m, &generators(m, false, false), v, w) == m.dim()
}

/// As [`is_cyclic_from_top`], also using the coefficients of `t-bar_ij(u)`.
pub fn is_cyclic_from_top_with_tbar(m: &dyn YangianModule) -> bool {
    let (v, w) = top_seed(m);
    graded_span(m, &generators(m, true, false), v, w) == m.dim()
}

/// Irreducible iff cyclic from the top vector and the singular space is the
/// line through it.
pub fn oracle_irreducible(m: &dyn YangianModule) -> OracleVerdict {
    let cyclic_from_top = is_cyclic_from_top(m);
    let singular_dim = singular_space(m).len();
    OracleVerdict { cyclic_from_top, singular_dim, irreducible: cyclic_from_top && singular_dim == 1, burnside_algebra_dim: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QValue;
    use crate::error::Error;
    use crate::gln::GlnRep;
    use crate::gt::HighestWeight;
    use crate::linalg::joint_kernel;
    use crate::yangian::{EvalModule, TensorModule};

    fn eval(l: &[i64]) -> EvalModule {
        EvalModule::standard(GlnRep::build(&HighestWeight::new(l.to_vec()).unwrap(), &QValue::default()))
    }

    fn pair(l: &[i64], m: &[i64]) -> TensorModule {
        TensorModule::pair(eval(l), eval(m)).unwrap()
    }

    #[test]
    fn single_factor_examples() {
        let m = TensorModule::new(vec![eval(&[3])]).unwrap();
        assert!(is_cyclic_from_top(&m));
        assert_eq!(singular_space(&m).len(), 1);
        assert!(burnside_check(&m, 36).unwrap());
    }

    #[test]
    fn gl2_examples() {
        let same = oracle_with_burnside(&pair(&[1, 0], &[1, 0]), 36);
        assert_eq!(same, OracleVerdict { cyclic_from_top: true, singular_dim: 1, irreducible: true, burnside_algebra_dim: Some(16) });

        let red = pair(&[1, 0], &[0, -1]);
        let v = oracle_with_burnside(&red, 36);
        assert!(!v.cyclic_from_top && !v.irreducible);
        assert_eq!(v.singular_dim, 1);
        assert!(v.burnside_algebra_dim.unwrap() < 16);
        // the other order is cyclic but has a second singular vector
        let v = oracle_irreducible(&pair(&[0, -1], &[1, 0]));
        assert!(v.cyclic_from_top && !v.irreducible);
        assert_eq!(v.singular_dim, 2);

        assert!(oracle_irreducible(&pair(&[2, 0], &[1, 0])).irreducible);
    }

    #[test]
    fn burnside_guard() {
        let m = pair(&[2, 0, 0], &[2, 0, 0]);
        assert!(matches!(burnside_check(&m, 35), Err(Error::BurnsideBound { dim: 36, bound: 35 })));
    }

    #[test]
    fn blockwise_singular_space_matches_direct_kernel() {
        for (l, m) in [(&[1, 0][..], &[0, -1][..]), (&[2, 0], &[1, 0]), (&[1, 0, 0], &[0, 0, -1])] {
            let tm = pair(l, m);
            let raising: Vec<Matrix> = (1..=tm.n())
                .flat_map(|i| (i + 1..=tm.n()).map(move |j| (i, j)))
                .flat_map(|(i, j)| tm.t_op(i, j).coeffs().values().cloned().collect::<Vec<_>>())
                .collect();
            let direct = joint_kernel(&raising, tm.dim());
            let blocked = singular_space(&tm);
            assert_eq!(direct.len(), blocked.len());
            for v in &blocked {
                assert!(raising.iter().all(|r| r.mul_vec(v).iter().all(Zero::is_zero)));
            }
        }
    }

    #[test]
    fn tbar_does_not_change_cyclicity() {
        for (l, m) in [(&[1, 0][..], &[0, -1][..]), (&[1, 0], &[1, 0]), (&[0, -1], &[1, 0])] {
            let tm = pair(l, m);
            assert_eq!(is_cyclic_from_top(&tm), is_cyclic_from_top_with_tbar(&tm));
        }
    }
}
