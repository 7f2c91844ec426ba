//! Lowering operators built from quantum minors in `T_ij(u)`, the
//! Gelfand–Tsetlin vectors they produce, and the singular vector `theta`
//! in a reducible tensor product.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::minor::{minor_expansion, MinorTerm};
use super::module::{EvalModule, TensorModule, YangianModule};
use super::operator::OperatorPoly;
use crate::arith::{int, pow, QValue, Rational};
use crate::criterion::theta_hypotheses;
use crate::error::{Error, Result};
use crate::gt::{enumerate_patterns, HighestWeight, Pattern};
use crate::linalg::{rank, Matrix};
use crate::report::Report;

/// Power of `u` in the polynomial normalization `T_ij(u) = u^p t_ij(u^2)`
/// used on two-factor tensor products. `t_ij(u^2)` reaches `u^{-4}` there,
/// so `p = 4` is the least power that clears the denominators.
pub const SINGULAR_POWER: i32 = 4;

/// How `T_ij(u)` is formed from `t_ij(u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `T_ij(u) = u t_ij(u^2) / (q - q^{-1})`, and `tau_ra` carries `q^{r-a}`.
    Gt,
    /// `T_ij(u) = u^power t_ij(u^2)`, and `tau_ra` has no prefactor.
    Singular { power: i32 },
}

impl Normalization {
    pub fn singular() -> Self {
        Normalization::Singular { power: SINGULAR_POWER }
    }
}

/// A vector-valued Laurent polynomial in `u`.
pub type VecPoly = BTreeMap<i32, Vec<Rational>>;

fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `d/du` of a vector polynomial (formal, negative powers allowed).
pub fn vec_poly_derivative(p: &VecPoly) -> VecPoly {
    p.iter()
        .filter(|(e, _)| **e != 0)
        .map(|(e, v)| (e - 1, v.iter().map(|x| x * int(*e as i64)).collect()))
        .collect()
}

pub fn vec_poly_eval(p: &VecPoly, x: &Rational, dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (e, v) in p {
        axpy(&mut out, &pow(x, *e as i64), v);
    }
    out
}

/// The matrix `T(u) = (T_ij(u))` of a module in a chosen normalization,
/// with its minors and lowering operators.
pub struct CapitalT<'a> {
    module: &'a dyn YangianModule,
    norm: Normalization,
    ops: Vec<OperatorPoly>,
}

impl<'a> CapitalT<'a> {
    pub fn new(module: &'a dyn YangianModule, norm: Normalization) -> Self {
        let n = module.n();
        let c = module.q().q_minus_qinv().recip();
        let mut ops = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let sq = module.t_op(i, j).square_arg();
                ops.push(match norm {
                    Normalization::Gt => sq.shift_degree(1).scale(&c),
                    Normalization::Singular { power } => sq.shift_degree(power),
                });
            }
        }
        CapitalT { module, norm, ops }
    }

    pub fn module(&self) -> &dyn YangianModule {
        self.module
    }

    fn q(&self) -> &QValue {
        self.module.q()
    }

    fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn entry(&self, i: usize, j: usize) -> &OperatorPoly {
        &self.ops[(i - 1) * self.module.n() + j - 1]
    }

    fn terms(&self, rows: &[usize], cols: &[usize]) -> Vec<MinorTerm> {
        minor_expansion(rows, cols, self.q())
    }

    /// `T^{rows}_{cols}(u)`; the `k`-th factor is taken at `q^{-k} u`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> OperatorPoly {
        let q = self.q();
        super::minor::assemble(self.dim(), &self.terms(rows, cols), |i, j, k| {
            self.entry(i, j).scale_arg(&q.pow(-(k as i64)))
        })
    }

    /// `T^{rows}_{cols}(x) v` without forming the operator.
    pub fn minor_at(&self, rows: &[usize], cols: &[usize], x: &Rational, v: &[Rational]) -> Vec<Rational> {
        let q = self.q();
        let mut out = vec![Rational::zero(); self.dim()];
        for (c, factors) in self.terms(rows, cols) {
            let mut w = v.to_vec();
            for &(i, j, k) in factors.iter().rev() {
                w = apply_at(self.entry(i, j), &(x * q.pow(-(k as i64))), &w);
                if is_zero_vec(&w) {
                    break;
                }
            }
            axpy(&mut out, &c, &w);
        }
        out
    }

    /// `T^{rows}_{cols}(c u) p(u)` as a vector polynomial in `u`.
    pub fn minor_poly(&self, rows: &[usize], cols: &[usize], c: &Rational, p: &VecPoly) -> VecPoly {
        let q = self.q();
        let mut out = VecPoly::new();
        for (coef, factors) in self.terms(rows, cols) {
            let mut w = p.clone();
            for &(i, j, k) in factors.iter().rev() {
                w = apply_poly(self.entry(i, j), &(c * q.pow(-(k as i64))), &w);
                if w.is_empty() {
                    break;
                }
            }
            for (e, v) in w {
                let slot = out.entry(e).or_insert_with(|| vec![Rational::zero(); v.len()]);
                axpy(slot, &coef, &v);
            }
        }
        out.retain(|_, v| !is_zero_vec(v));
        out
    }

    fn tau_indices(&self, r: usize, a: usize) -> (Vec<usize>, Vec<usize>, Rational) {
        assert!(1 <= a && a < r && r <= self.module.n(), "tau_ra needs 1 <= a < r <= n");
        let pre = match self.norm {
            Normalization::Gt => self.q().pow((r - a) as i64),
            Normalization::Singular { .. } => Rational::one(),
        };
        ((a + 1..=r).collect(), (a..r).collect(), pre)
    }

    /// The lowering operator `tau_ra(u)`.
    pub fn tau(&self, r: usize, a: usize) -> OperatorPoly {
        let (rows, cols, pre) = self.tau_indices(r, a);
        self.minor(&rows, &cols).scale(&pre)
    }

    pub fn tau_at(&self, r: usize, a: usize, x: &Rational, v: &[Rational]) -> Vec<Rational> {
        let (rows, cols, pre) = self.tau_indices(r, a);
        self.minor_at(&rows, &cols, x, v).iter().map(|y| y * &pre).collect()
    }

    /// `T_ra(u, k) = tau_ra(u) tau_ra(q u) ... tau_ra(q^{k-1} u)` applied to
    /// `v`, as a polynomial in `u`.
    pub fn tau_product_poly(&self, r: usize, a: usize, k: i64, v: &[Rational]) -> VecPoly {
        let (rows, cols, pre) = self.tau_indices(r, a);
        let mut p = VecPoly::from([(0, v.to_vec())]);
        for i in (0..k).rev() {
            p = self.minor_poly(&rows, &cols, &self.q().pow(i), &p);
            for w in p.values_mut() {
                for y in w.iter_mut() {
                    *y *= &pre;
                }
            }
        }
        p
    }

    /// `T_ra(x, k) v`.
    pub fn tau_product_at(&self, r: usize, a: usize, x: &Rational, k: i64, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        for i in (0..k).rev() {
            w = self.tau_at(r, a, &(x * self.q().pow(i)), &w);
        }
        w
    }
}

fn apply_at(op: &OperatorPoly, x: &Rational, v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); v.len()];
    for (e, m) in op.coeffs() {
        axpy(&mut out, &pow(x, *e as i64), &m.mul_vec(v));
    }
    out
}

fn apply_poly(op: &OperatorPoly, c: &Rational, p: &VecPoly) -> VecPoly {
    let mut out = VecPoly::new();
    for (e, m) in op.coeffs() {
        let ce = pow(c, *e as i64);
        for (f, v) in p {
            let w = m.mul_vec(v);
            if is_zero_vec(&w) {
                continue;
            }
            let slot = out.entry(e + f).or_insert_with(|| vec![Rational::zero(); w.len()]);
            axpy(slot, &ce, &w);
        }
    }
    out.retain(|_, v| !is_zero_vec(v));
    out
}

fn require_standard(m: &EvalModule) -> Result<()> {
    let rep = m.rep();
    if !m.a().is_one() || !rep.h().is_one() || rep.eps().iter().any(|&e| e != 1) {
        return Err(Error::Invalid("lowering operators need the standard evaluation module L(lambda)".into()));
    }
    Ok(())
}

/// `xi_Lambda`: for `r = n, ..., 2` (so row `n` acts first) and each
/// `a < r`, applies `tau_ra` at `q^{-lambda_ra}, ..., q^{-lambda_{r-1,a}-1}`
/// to the highest vector.
pub fn gt_vector(m: &EvalModule, pattern: &Pattern) -> Result<Vec<Rational>> {
    require_standard(m)?;
    if pattern.top() != m.rep().lambda().entries() {
        return Err(Error::Invalid(format!("pattern does not belong to {}", m.rep().lambda())));
    }
    let ct = CapitalT::new(m, Normalization::Gt);
    let q = m.q();
    let mut v = m.highest_vector();
    for r in (2..=m.n()).rev() {
        for a in (1..r).rev() {
            let (top, low) = (pattern.entry(r, a), pattern.entry(r - 1, a));
            v = ct.tau_product_at(r, a, &q.pow(-top), top - low, &v);
        }
    }
    Ok(v)
}

/// The pattern with row `n-1` equal to `mu` and every lower row maximal.
pub fn branching_pattern(lambda: &HighestWeight, mu: &[i64]) -> Result<Pattern> {
    let n = lambda.n();
    if mu.len() + 1 != n {
        return Err(Error::RankMismatch(n - 1, mu.len()));
    }
    let mut rows: Vec<Vec<i64>> = (1..n).map(|k| mu[..k].to_vec()).collect();
    rows.push(lambda.entries().to_vec());
    Pattern::from_rows(rows).ok_or_else(|| Error::Invalid(format!("{mu:?} does not interlace {lambda}")))
}

/// `xi_mu = prod_a tau_na(q^{-mu_a - 1}) ... tau_na(q^{-lambda_a}) xi`.
pub fn branching_vector(m: &EvalModule, mu: &[i64]) -> Result<Vec<Rational>> {
    let p = branching_pattern(m.rep().lambda(), mu)?;
    require_standard(m)?;
    let n = m.n();
    let ct = CapitalT::new(m, Normalization::Gt);
    let q = m.q();
    let lambda = p.top();
    let mut v = m.highest_vector();
    for a in (1..n).rev() {
        v = ct.tau_product_at(n, a, &q.pow(-lambda[a - 1]), lambda[a - 1] - mu[a - 1], &v);
    }
    Ok(v)
}

/// `x = c e` for a basis vector `e` and some `c != 0`.
fn is_multiple_of_basis(x: &[Rational], index: usize) -> bool {
    x.iter().enumerate().all(|(i, v)| (i == index) != v.is_zero())
}

/// `x = c y` for some `c` (possibly zero); `y` nonzero.
fn proportional(x: &[Rational], y: &[Rational]) -> Option<Rational> {
    let k = y.iter().position(|v| !v.is_zero())?;
    let c = &x[k] / &y[k];
    x.iter().zip(y).all(|(a, b)| *a == &c * b).then_some(c)
}

/// Gelfand–Tsetlin checks on `L(lambda)`: every `xi_Lambda` is a nonzero
/// multiple of its basis vector and they are independent; branching vectors
/// are highest for `gl_{n-1}` with the right weight; the minor eigenvalues
/// on branching vectors; commutativity of the lowering operators.
pub fn check_gt_suite(m: &EvalModule) -> Result<Report> {
    require_standard(m)?;
    let mut rep = Report::new("gt");
    let n = m.n();
    let q = m.q();
    let rep_l = m.rep();
    let lambda = rep_l.lambda();
    let patterns = enumerate_patterns(lambda);
    let mut vectors = Vec::with_capacity(patterns.len());
    for p in &patterns {
        let v = gt_vector(m, p)?;
        let idx = rep_l.index_of(p).expect("enumerated pattern is in the basis");
        rep.record(!is_zero_vec(&v), || format!("xi_Lambda vanishes for {p:?}"));
        rep.record(is_multiple_of_basis(&v, idx), || format!("xi_Lambda is not along its basis vector for {p:?}"));
        vectors.push(v);
    }
    rep.record(rank(&Matrix::from_dense(&vectors)) == patterns.len(), || "xi_Lambda are dependent".into());

    if n >= 2 {
        let mut seen = std::collections::BTreeSet::new();
        for p in &patterns {
            let mu = p.row(n - 1).to_vec();
            if !seen.insert(mu.clone()) {
                continue;
            }
            let xi = branching_vector(m, &mu)?;
            let bp = branching_pattern(lambda, &mu)?;
            rep.record(xi == gt_vector(m, &bp)?, || format!("branching vector differs from xi_Lambda for mu = {mu:?}"));
            for k in 1..n - 1 {
                rep.record(is_zero_vec(&rep_l.e(k).mul_vec(&xi)), || format!("e_{k} xi_mu != 0 for mu = {mu:?}"));
            }
            for k in 1..n {
                let expect: Vec<Rational> = xi.iter().map(|x| x * q.pow(mu[k - 1])).collect();
                rep.record(rep_l.t(k).mul_vec(&xi) == expect, || format!("t_{k} xi_mu has the wrong eigenvalue for mu = {mu:?}"));
            }
            check_minor_eigenvalues(m, &mu, &mut rep)?;
        }
    }

    let ct = CapitalT::new(m, Normalization::Gt);
    for r in 2..=n {
        for a in 1..r {
            let ta = ct.tau(r, a);
            for s in r..=n {
                for b in 1..=a.min(s - 1) {
                    let tb = ct.tau(s, b);
                    let ok = ta.coeffs().values().all(|x| tb.coeffs().values().all(|y| Matrix::commutator(x, y).is_zero()));
                    rep.record(ok, || format!("tau_{r}{a}(u) and tau_{s}{b}(v) do not commute"));
                }
            }
        }
    }
    Ok(rep)
}

/// With `a` the least index where `mu_a < lambda_a` and `mu'` equal to `mu`
/// with `mu_a` raised to `lambda_a`:
/// `T^{a+1..n-1}_{a+1..n-1}(q^{-mu_a-1}) xi_mu' = prod_{i=a+1}^{n-1} [m_i - m_a] xi_mu'`
/// and the `n`-row minor gives `prod_{i=a+1}^{n} [l_i - m_a]`.
fn check_minor_eigenvalues(m: &EvalModule, mu: &[i64], rep: &mut Report) -> Result<()> {
    let n = m.n();
    let q = m.q();
    let lambda = m.rep().lambda().entries();
    let Some(a) = (1..n).find(|&a| mu[a - 1] < lambda[a - 1]) else { return Ok(()) };
    let mut mu_p = mu.to_vec();
    mu_p[a - 1] = lambda[a - 1];
    let xi = branching_vector(m, &mu_p)?;
    let ct = CapitalT::new(m, Normalization::Gt);
    let x = q.pow(-mu[a - 1] - 1);
    let mv = |i: usize| mu[i - 1] - i as i64 + 1;
    let lv = |i: usize| lambda[i - 1] - i as i64 + 1;
    let cases: [(usize, Box<dyn Fn(usize) -> i64>); 2] = [(n - 1, Box::new(mv)), (n, Box::new(lv))];
    for (top, val) in cases {
        let idx: Vec<usize> = (a + 1..=top).collect();
        let got = ct.minor_at(&idx, &idx, &x, &xi);
        let c = (a + 1..=top).fold(Rational::one(), |acc, i| acc * q.q_int(val(i) - mv(a)));
        let expect: Vec<Rational> = xi.iter().map(|y| y * &c).collect();
        rep.record(got == expect, || format!("{top}-row minor eigenvalue on xi_mu' fails for mu = {mu:?}, a = {a}"));
    }
    Ok(())
}

fn standard_lambda(f: &EvalModule) -> Result<&HighestWeight> {
    require_standard(f)?;
    Ok(f.rep().lambda())
}

/// `theta = T_{n-p+1,1}(q^{-lambda_1}, k_1) T'_{n-p+2,2}(q^{-lambda_2}, k_2)
/// ... T'_{n,p}(q^{-lambda_p}, k_p) (xi (x) xi')`, where `'` is the
/// derivative in `u`, on `L(lambda) (x) L(mu)`.
pub fn theta_vector(tm: &TensorModule, p: usize, norm: Normalization) -> Result<Vec<Rational>> {
    let [left, right] = tm.factors() else {
        return Err(Error::NotReducibleConfiguration("theta needs exactly two tensor factors".into()));
    };
    let (lambda, mu) = (standard_lambda(left)?, standard_lambda(right)?);
    let k = theta_hypotheses(lambda, mu, p)
        .ok_or_else(|| Error::NotReducibleConfiguration(format!("lambda = {lambda}, mu = {mu}, p = {p}")))?;
    let n = tm.n();
    let q = tm.q();
    let dim = tm.dim();
    let ct = CapitalT::new(tm, norm);
    let mut v = tm.highest_vector();
    for i in (1..=p).rev() {
        let r = n - p + i;
        let x = q.pow(-lambda.entries()[i - 1]);
        v = if i == 1 {
            ct.tau_product_at(r, i, &x, k[i - 1], &v)
        } else {
            vec_poly_eval(&vec_poly_derivative(&ct.tau_product_poly(r, i, k[i - 1], &v)), &x, dim)
        };
    }
    Ok(v)
}

/// `xi_Lambda` in `L(lambda)` with `Lambda` read off from the `theta` data:
/// the same products of lowering operators with no derivatives.
pub fn theta_leading_vector(m: &EvalModule, mu: &HighestWeight, p: usize) -> Result<Vec<Rational>> {
    let lambda = standard_lambda(m)?;
    let k = theta_hypotheses(lambda, mu, p)
        .ok_or_else(|| Error::NotReducibleConfiguration(format!("lambda = {lambda}, mu = {mu}, p = {p}")))?;
    let n = m.n();
    let ct = CapitalT::new(m, Normalization::Gt);
    let mut v = m.highest_vector();
    for i in (1..=p).rev() {
        v = ct.tau_product_at(n - p + i, i, &m.q().pow(-lambda.entries()[i - 1]), k[i - 1], &v);
    }
    Ok(v)
}

/// `theta` is nonzero, killed by every `t_ij^{(r)}` with `i < j`, not a
/// multiple of `xi (x) xi'`, and its `xi'`-component has a nonzero
/// coefficient along `xi_Lambda (x) xi'`.
pub fn check_theta(tm: &TensorModule, p: usize, norm: Normalization) -> Result<Report> {
    let mut rep = Report::new("theta");
    let theta = theta_vector(tm, p, norm)?;
    let n = tm.n();
    rep.record(!is_zero_vec(&theta), || "theta = 0".into());
    for i in 1..=n {
        for j in i + 1..=n {
            for (e, mat) in tm.t_op(i, j).coeffs() {
                rep.record(is_zero_vec(&mat.mul_vec(&theta)), || format!("t_{i}{j}^({}) theta != 0", -e));
            }
        }
    }
    rep.record(proportional(&theta, &tm.highest_vector()).is_none(), || "theta is a multiple of the top vector".into());

    let (left, right) = (&tm.factors()[0], &tm.factors()[1]);
    let lead = theta_leading_vector(left, right.rep().lambda(), p)?;
    let k = lead.iter().position(|x| !x.is_zero());
    rep.record(k.is_some(), || "xi_Lambda = 0".into());
    if let Some(k) = k {
        let coord = &theta[tm.index_of(&[k, 0])];
        rep.record(is_multiple_of_basis(&lead, k), || "xi_Lambda is not a basis direction".into());
        rep.record(!coord.is_zero(), || "theta has no xi_Lambda (x) xi' component".into());
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gln::GlnRep;

    fn eval(l: &[i64]) -> EvalModule {
        EvalModule::standard(GlnRep::build(&HighestWeight::new(l.to_vec()).unwrap(), &QValue::default()))
    }

    #[test]
    fn tau_21_on_gl2() {
        let m = eval(&[1, 0]);
        let ct = CapitalT::new(&m, Normalization::Gt);
        let q = m.q();
        let expect = OperatorPoly::monomial(m.rep().t(1).mul(m.rep().f(1)).scale(&q.pow(1)), 1);
        assert_eq!(ct.tau(2, 1), expect);
    }

    #[test]
    fn singular_normalization_is_polynomial_on_tensors() {
        let tm = TensorModule::pair(eval(&[1, 0]), eval(&[0, -1])).unwrap();
        let ct = CapitalT::new(&tm, Normalization::singular());
        for i in 1..=2 {
            for j in 1..=2 {
                assert!(ct.entry(i, j).support().iter().all(|&e| e >= 0));
            }
        }
        let two = CapitalT::new(&tm, Normalization::Singular { power: 2 });
        assert_eq!(two.entry(1, 1).support().first(), Some(&-2));
    }

    #[test]
    fn gt_vector_of_highest_pattern_is_xi() {
        let m = eval(&[2, 1, 0]);
        let p = Pattern::highest(m.rep().lambda());
        assert_eq!(gt_vector(&m, &p).unwrap(), m.highest_vector());
    }

    #[test]
    fn gt_vector_gl2_lowest() {
        let m = eval(&[1, 0]);
        let p = Pattern::from_rows(vec![vec![0], vec![1, 0]]).unwrap();
        let v = gt_vector(&m, &p).unwrap();
        assert!(!is_zero_vec(&v));
        // the lowest vector: killed by f_1, raised back to xi by e_1
        assert!(is_zero_vec(&m.rep().f(1).mul_vec(&v)));
        assert!(proportional(&m.rep().e(1).mul_vec(&v), &m.highest_vector()).is_some_and(|c| !c.is_zero()));
        assert_eq!(m.rep().t(1).mul_vec(&v), v);
    }

    #[test]
    fn gt_suites() {
        for l in [&[1, 0][..], &[2, 0], &[3, 1], &[1, 0, 0], &[2, 1, 0], &[2, 0, 0], &[1, 1, 0]] {
            let r = check_gt_suite(&eval(l)).unwrap();
            assert!(r.is_ok(), "{l:?}: {:?}", r.failures);
        }
    }

    #[test]
    fn theta_gl2_example() {
        let tm = TensorModule::pair(eval(&[0, -1]), eval(&[1, 0])).unwrap();
        let r = check_theta(&tm, 1, Normalization::singular()).unwrap();
        assert!(r.is_ok(), "{:?}", r.failures);
        assert!(matches!(
            theta_vector(&TensorModule::pair(eval(&[1, 0]), eval(&[0, -1])).unwrap(), 1, Normalization::singular()),
            Err(Error::NotReducibleConfiguration(_))
        ));
    }

    #[test]
    fn gt_vector_rejects_foreign_patterns() {
        let m = eval(&[1, 0]);
        let p = Pattern::highest(&HighestWeight::new(vec![2, 0]).unwrap());
        assert!(gt_vector(&m, &p).is_err());
    }
}
