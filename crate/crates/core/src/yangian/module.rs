//! Evaluation modules and their tensor products over the q-Yangian.

use num_traits::{One, Zero};

use super::operator::OperatorPoly;
use crate::arith::{QValue, Rational};
use crate::error::{Error, Result};
use crate::gln::GlnRep;
use crate::linalg::Matrix;

/// A finite-dimensional q-Yangian module with a weight basis whose first
/// vector is the highest one.
pub trait YangianModule: Sync {
    fn n(&self) -> usize;
    fn dim(&self) -> usize;
    fn q(&self) -> &QValue;
    /// `t_ij(u)` as an operator polynomial in `u` (1-based indices).
    fn t_op(&self, i: usize, j: usize) -> &OperatorPoly;
    /// `t-bar_ij(u)` as an operator polynomial in `u` (1-based indices).
    fn tbar_op(&self, i: usize, j: usize) -> &OperatorPoly;
    /// `gl_n`-weight of each basis vector.
    fn weights(&self) -> &[Vec<i64>];

    /// Coefficient matrix `t_ij^{(r)}` of `u^{-r}`.
    fn t_coeff(&self, i: usize, j: usize, r: i32) -> Matrix {
        self.t_op(i, j).coeff(-r)
    }

    /// Largest `r` with some `t_ij^{(r)}` nonzero.
    fn max_order(&self) -> i32 {
        let n = self.n();
        let mut m = 0;
        for i in 1..=n {
            for j in 1..=n {
                if let Some(e) = self.t_op(i, j).support().first() {
                    m = m.max(-e);
                }
            }
        }
        m
    }

    fn highest_vector(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[0] = Rational::one();
        v
    }
}

/// `L_a(h, eps, lambda)`: `t_ij(u) = t_ij - a t-bar_ij u^{-1}`,
/// `t-bar_ij(u) = t-bar_ij - a^{-1} t_ij u`.
#[derive(Clone, Debug)]
pub struct EvalModule {
    rep: GlnRep,
    a: Rational,
    ops: Vec<OperatorPoly>,
    bar_ops: Vec<OperatorPoly>,
    weights: Vec<Vec<i64>>,
}

impl EvalModule {
    pub fn new(rep: GlnRep, a: Rational) -> Result<EvalModule> {
        if a.is_zero() {
            return Err(Error::ZeroParameter);
        }
        let n = rep.n();
        let (t, tb) = rep.t_matrices();
        let ainv = a.recip();
        let mut ops = Vec::with_capacity(n * n);
        let mut bar_ops = Vec::with_capacity(n * n);
        for k in 0..n * n {
            ops.push(OperatorPoly::from_coeffs(rep.dim(), [(0, t[k].clone()), (-1, tb[k].scale(&-a.clone()))]));
            bar_ops.push(OperatorPoly::from_coeffs(rep.dim(), [(0, tb[k].clone()), (1, t[k].scale(&-ainv.clone()))]));
        }
        let weights = rep.basis().iter().map(|p| p.weight()).collect();
        Ok(EvalModule { rep, a, ops, bar_ops, weights })
    }

    /// `L(lambda)` with evaluation parameter 1.
    pub fn standard(rep: GlnRep) -> EvalModule {
        Self::new(rep, Rational::one()).expect("a = 1 is valid")
    }

    pub fn rep(&self) -> &GlnRep {
        &self.rep
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
}

impl YangianModule for EvalModule {
    fn n(&self) -> usize {
        self.rep.n()
    }

    fn dim(&self) -> usize {
        self.rep.dim()
    }

    fn q(&self) -> &QValue {
        self.rep.q()
    }

    fn t_op(&self, i: usize, j: usize) -> &OperatorPoly {
        &self.ops[(i - 1) * self.n() + j - 1]
    }

    fn tbar_op(&self, i: usize, j: usize) -> &OperatorPoly {
        &self.bar_ops[(i - 1) * self.n() + j - 1]
    }

    fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }
}

/// Tensor product of evaluation modules with the coproduct
/// `t_ij(u) -> sum_k t_ik(u) (x) t_kj(u)`. The basis index of
/// `(x_1, ..., x_k)` is the Kronecker (row-major) index.
#[derive(Clone, Debug)]
pub struct TensorModule {
    factors: Vec<EvalModule>,
    q: QValue,
    n: usize,
    dim: usize,
    ops: Vec<OperatorPoly>,
    bar_ops: Vec<OperatorPoly>,
    weights: Vec<Vec<i64>>,
}

impl TensorModule {
    pub fn new(factors: Vec<EvalModule>) -> Result<TensorModule> {
        let first = factors.first().ok_or_else(|| Error::Invalid("tensor product needs a factor".into()))?;
        let n = first.n();
        let q = first.q().clone();
        for f in &factors {
            if f.n() != n {
                return Err(Error::RankMismatch(n, f.n()));
            }
            if f.q() != &q {
                return Err(Error::Invalid("tensor factors use different q".into()));
            }
        }
        let mut ops: Vec<OperatorPoly> = (0..n * n).map(|k| first.ops[k].clone()).collect();
        let mut bar_ops: Vec<OperatorPoly> = (0..n * n).map(|k| first.bar_ops[k].clone()).collect();
        let mut weights = first.weights.clone();
        for f in &factors[1..] {
            ops = coproduct(n, &ops, &f.ops);
            bar_ops = coproduct(n, &bar_ops, &f.bar_ops);
            weights = weights
                .iter()
                .flat_map(|w| f.weights.iter().map(move |v| w.iter().zip(v).map(|(a, b)| a + b).collect()))
                .collect();
        }
        let dim = weights.len();
        Ok(TensorModule { factors, q, n, dim, ops, bar_ops, weights })
    }

    pub fn pair(left: EvalModule, right: EvalModule) -> Result<TensorModule> {
        Self::new(vec![left, right])
    }

    pub fn factors(&self) -> &[EvalModule] {
        &self.factors
    }

    /// Kronecker index of a tuple of factor indices.
    pub fn index_of(&self, parts: &[usize]) -> usize {
        parts.iter().zip(&self.factors).fold(0, |acc, (x, f)| acc * f.dim() + x)
    }
}

fn coproduct(n: usize, left: &[OperatorPoly], right: &[OperatorPoly]) -> Vec<OperatorPoly> {
    let dim = left[0].dim() * right[0].dim();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = OperatorPoly::zero(dim);
            for k in 0..n {
                let (l, r) = (&left[i * n + k], &right[k * n + j]);
                if !l.is_zero() && !r.is_zero() {
                    acc = acc.add(&l.kron(r));
                }
            }
            out.push(acc);
        }
    }
    out
}

impl YangianModule for TensorModule {
    fn n(&self) -> usize {
        self.n
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn q(&self) -> &QValue {
        &self.q
    }

    fn t_op(&self, i: usize, j: usize) -> &OperatorPoly {
        &self.ops[(i - 1) * self.n + j - 1]
    }

    fn tbar_op(&self, i: usize, j: usize) -> &OperatorPoly {
        &self.bar_ops[(i - 1) * self.n + j - 1]
    }

    fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::gt::HighestWeight;

    fn eval(l: &[i64]) -> EvalModule {
        EvalModule::standard(GlnRep::build(&HighestWeight::new(l.to_vec()).unwrap(), &QValue::default()))
    }

    #[test]
    fn evaluation_examples() {
        let m = eval(&[1, 0]);
        let q = m.q().clone();
        // t_11(u) xi = (q - q^{-1} u^{-1}) xi
        let v = m.t_op(1, 1).apply(&m.highest_vector());
        assert_eq!(v[&0][0], q.pow(1));
        assert_eq!(v[&-1][0], -q.pow(-1));
        assert!(m.t_op(1, 2).coeff(0).is_zero());
        assert_eq!(m.t_op(2, 1).support(), vec![0]);
        assert_eq!(m.t_op(2, 1).coeff(0), m.rep().t(1).mul(m.rep().f(1)).scale(&q.q_minus_qinv()));
    }

    #[test]
    fn tensor_highest_weight() {
        let t = TensorModule::pair(eval(&[1, 0]), eval(&[0, -1])).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.max_order(), 2);
        for i in 1..=2 {
            for j in 1..=2 {
                let img = t.t_op(i, j).apply(&t.highest_vector());
                if i < j {
                    assert!(img.is_empty());
                }
                for e in t.t_op(i, j).support() {
                    assert!((-2..=0).contains(&e));
                }
            }
        }
        // nu_1(u) = (q - q^{-1} u^{-1})(1 - u^{-1})
        let q = t.q().clone();
        let img = t.t_op(1, 1).apply(&t.highest_vector());
        assert_eq!(img[&0][0], q.pow(1));
        assert_eq!(img[&-1][0], -(q.pow(1) + q.pow(-1)));
        assert_eq!(img[&-2][0], q.pow(-1));
    }

    #[test]
    fn evaluation_parameter_must_be_nonzero() {
        let rep = GlnRep::build(&HighestWeight::new(vec![1, 0]).unwrap(), &QValue::default());
        assert!(EvalModule::new(rep, rat(0, 1)).is_err());
    }
}
