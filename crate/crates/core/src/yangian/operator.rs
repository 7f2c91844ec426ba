//! Operator-valued Laurent polynomials in one or several spectral parameters.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::arith::{int, pow, Rational};
use crate::error::{Error, Result};
use crate::linalg::{LaurentMatrix, Matrix};

/// `sum_e M_e u^e` with square coefficient matrices of a common size. No zero
/// coefficients are stored, so derived equality is operator equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorPoly {
    dim: usize,
    coeffs: BTreeMap<i32, Matrix>,
}

impl OperatorPoly {
    pub fn zero(dim: usize) -> Self {
        OperatorPoly { dim, coeffs: BTreeMap::new() }
    }

    pub fn constant(m: Matrix) -> Self {
        Self::monomial(m, 0)
    }

    pub fn identity(dim: usize) -> Self {
        Self::constant(Matrix::identity(dim))
    }

    pub fn monomial(m: Matrix, e: i32) -> Self {
        assert_eq!(m.rows(), m.cols(), "operator coefficients must be square");
        let dim = m.rows();
        let mut coeffs = BTreeMap::new();
        if !m.is_zero() {
            coeffs.insert(e, m);
        }
        OperatorPoly { dim, coeffs }
    }

    pub fn from_coeffs(dim: usize, coeffs: impl IntoIterator<Item = (i32, Matrix)>) -> Self {
        let mut p = Self::zero(dim);
        for (e, m) in coeffs {
            p.add_term(e, &m, &Rational::one());
        }
        p
    }

    fn add_term(&mut self, e: i32, m: &Matrix, c: &Rational) {
        assert_eq!(m.rows(), self.dim, "operator size mismatch");
        let merged = match self.coeffs.remove(&e) {
            Some(old) => old.add_scaled(m, c),
            None => m.scale(c),
        };
        if !merged.is_zero() {
            self.coeffs.insert(e, merged);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, e: i32) -> Matrix {
        self.coeffs.get(&e).cloned().unwrap_or_else(|| Matrix::zeros(self.dim, self.dim))
    }

    pub fn coeffs(&self) -> &BTreeMap<i32, Matrix> {
        &self.coeffs
    }

    /// Exponents with a nonzero coefficient.
    pub fn support(&self) -> Vec<i32> {
        self.coeffs.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn add_scaled(&self, other: &Self, c: &Rational) -> Self {
        let mut out = self.clone();
        for (e, m) in &other.coeffs {
            out.add_term(*e, m, c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.dim, self.coeffs.iter().map(|(e, m)| (*e, m.scale(c))))
    }

    /// Multiplies by `u^k`.
    pub fn shift_degree(&self, k: i32) -> Self {
        OperatorPoly { dim: self.dim, coeffs: self.coeffs.iter().map(|(e, m)| (e + k, m.clone())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "operator size mismatch");
        let mut out = Self::zero(self.dim);
        for (e1, a) in &self.coeffs {
            for (e2, b) in &other.coeffs {
                out.add_term(e1 + e2, &a.mul(b), &Rational::one());
            }
        }
        out
    }

    /// Left multiplication by a constant matrix.
    pub fn left_mul(&self, m: &Matrix) -> Self {
        Self::from_coeffs(self.dim, self.coeffs.iter().map(|(e, a)| (*e, m.mul(a))))
    }

    /// Right multiplication by a constant matrix.
    pub fn right_mul(&self, m: &Matrix) -> Self {
        Self::from_coeffs(self.dim, self.coeffs.iter().map(|(e, a)| (*e, a.mul(m))))
    }

    /// `A(u) (x) B(u)` on the Kronecker product space.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim * other.dim);
        for (e1, a) in &self.coeffs {
            for (e2, b) in &other.coeffs {
                out.add_term(e1 + e2, &a.kron(b), &Rational::one());
            }
        }
        out
    }

    /// `p(c u)`.
    pub fn scale_arg(&self, c: &Rational) -> Self {
        assert!(!c.is_zero(), "scale_arg needs a nonzero factor");
        Self::from_coeffs(self.dim, self.coeffs.iter().map(|(e, m)| (*e, m.scale(&pow(c, *e as i64)))))
    }

    /// `p(u^2)`.
    pub fn square_arg(&self) -> Self {
        OperatorPoly { dim: self.dim, coeffs: self.coeffs.iter().map(|(e, m)| (2 * e, m.clone())).collect() }
    }

    /// Formal derivative; defined only when no negative powers occur.
    pub fn derivative(&self) -> Result<Self> {
        if let Some((&e, _)) = self.coeffs.iter().next().filter(|(e, _)| **e < 0) {
            return Err(Error::NotAPolynomial(e));
        }
        Ok(Self::from_coeffs(
            self.dim,
            self.coeffs.iter().filter(|(e, _)| **e != 0).map(|(e, m)| (e - 1, m.scale(&int(*e as i64)))),
        ))
    }

    pub fn eval_at(&self, x: &Rational) -> Result<Matrix> {
        if x.is_zero() {
            return Err(Error::ZeroEvaluationPoint);
        }
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (e, m) in &self.coeffs {
            out = out.add_scaled(m, &pow(x, *e as i64));
        }
        Ok(out)
    }

    /// Applies the operator to a constant vector, giving a vector-valued
    /// Laurent polynomial.
    pub fn apply(&self, v: &[Rational]) -> BTreeMap<i32, Vec<Rational>> {
        self.coeffs.iter().map(|(e, m)| (*e, m.mul_vec(v))).filter(|(_, w)| w.iter().any(|x| !x.is_zero())).collect()
    }

    /// `p(u) = s(u) * Id` for a scalar Laurent polynomial `s`, if so.
    pub fn as_scalar(&self) -> Option<BTreeMap<i32, Rational>> {
        let mut out = BTreeMap::new();
        for (e, m) in &self.coeffs {
            let c = m.get(0, 0);
            if *m != Matrix::scalar(self.dim, c.clone()) {
                return None;
            }
            out.insert(*e, c);
        }
        Some(out)
    }

    pub fn to_laurent_matrix(&self) -> LaurentMatrix {
        LaurentMatrix::from_coefficients(self.dim, self.dim, &self.coeffs)
    }
}

impl Serialize for OperatorPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (e, m) in &self.coeffs {
            map.serialize_entry(&e.to_string(), m)?;
        }
        map.end()
    }
}

/// Scalar Laurent polynomial in several variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, c, vec![0; nvars])
    }

    pub fn monomial(nvars: usize, c: Rational, exps: Vec<i32>) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { nvars, terms }
    }

    /// `c * x_var`.
    pub fn var(nvars: usize, var: usize, c: Rational) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Self::monomial(nvars, c, e)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Vec<i32>, c: Rational) {
        let v = self.terms.remove(&e).unwrap_or_else(Rational::zero) + c;
        if !v.is_zero() {
            self.terms.insert(e, v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e1, a) in &self.terms {
            for (e2, b) in &other.terms {
                out.add_term(add_exps(e1, e2), a * b);
            }
        }
        out
    }

    pub fn eval(&self, xs: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| e.iter().zip(xs).fold(c.clone(), |acc, (k, x)| acc * pow(x, *k as i64)))
            .fold(Rational::zero(), |a, b| a + b)
    }
}

fn add_exps(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Operator-valued Laurent polynomial in several variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiOp {
    nvars: usize,
    dim: usize,
    terms: BTreeMap<Vec<i32>, Matrix>,
}

impl MultiOp {
    pub fn zero(nvars: usize, dim: usize) -> Self {
        MultiOp { nvars, dim, terms: BTreeMap::new() }
    }

    /// Embeds a one-variable operator as a function of variable `var`.
    pub fn from_op(op: &OperatorPoly, var: usize, nvars: usize) -> Self {
        let mut out = Self::zero(nvars, op.dim());
        for (e, m) in op.coeffs() {
            let mut k = vec![0; nvars];
            k[var] = *e;
            out.add_term(k, m, &Rational::one());
        }
        out
    }

    fn add_term(&mut self, e: Vec<i32>, m: &Matrix, c: &Rational) {
        let merged = match self.terms.remove(&e) {
            Some(old) => old.add_scaled(m, c),
            None => m.scale(c),
        };
        if !merged.is_zero() {
            self.terms.insert(e, merged);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (e, m) in &other.terms {
            self.add_term(e.clone(), m, &Rational::one());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, m) in &other.terms {
            out.add_term(e.clone(), m, &-Rational::one());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars, self.dim);
        for (e1, a) in &self.terms {
            for (e2, b) in &other.terms {
                out.add_term(add_exps(e1, e2), &a.mul(b), &Rational::one());
            }
        }
        out
    }

    /// Multiplication by a scalar polynomial.
    pub fn mul_scalar(&self, p: &MultiPoly) -> Self {
        let mut out = Self::zero(self.nvars, self.dim);
        for (e1, a) in &self.terms {
            for (e2, c) in p.terms() {
                out.add_term(add_exps(e1, e2), a, c);
            }
        }
        out
    }

    /// `self += p * other`.
    pub fn add_mul_scalar(&mut self, p: &MultiPoly, other: &Self) {
        for (e1, a) in &other.terms {
            for (e2, c) in p.terms() {
                self.add_term(add_exps(e1, e2), a, c);
            }
        }
    }
}

/// Square matrix with [`MultiPoly`] entries, stored by sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    nvars: usize,
    rows: Vec<BTreeMap<usize, MultiPoly>>,
}

impl PolyMatrix {
    pub fn zeros(size: usize, nvars: usize) -> Self {
        PolyMatrix { size, nvars, rows: vec![BTreeMap::new(); size] }
    }

    pub fn identity(size: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(size, nvars);
        for i in 0..size {
            m.add(i, i, &MultiPoly::constant(nvars, Rational::one()));
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add(&mut self, i: usize, j: usize, p: &MultiPoly) {
        let cur = self.rows[i].remove(&j).unwrap_or_else(|| MultiPoly::zero(self.nvars));
        let v = cur.add(p);
        if !v.is_zero() {
            self.rows[i].insert(j, v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> MultiPoly {
        self.rows[i].get(&j).cloned().unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, MultiPoly> {
        &self.rows[i]
    }

    /// Nonzero entries of column `j` as `(row, entry)`.
    pub fn column(&self, j: usize) -> Vec<(usize, &MultiPoly)> {
        self.rows.iter().enumerate().filter_map(|(i, r)| r.get(&j).map(|p| (i, p))).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.size, self.nvars);
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    out.add(i, j.to_owned(), &a.mul(b));
                }
            }
        }
        out
    }

    pub fn eval(&self, xs: &[Rational]) -> Matrix {
        let trip = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, p)| (i, *j, p.eval(xs))))
            .collect::<Vec<_>>();
        Matrix::from_triplets(self.size, self.size, trip)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn d(v: &[i64]) -> Matrix {
        Matrix::diagonal(v.iter().map(|x| int(*x)).collect())
    }

    #[test]
    fn product_and_evaluation_commute() {
        let a = OperatorPoly::from_coeffs(2, [(0, d(&[1, 2])), (-1, d(&[3, 0]))]);
        let b = OperatorPoly::from_coeffs(2, [(0, d(&[0, 1])), (-1, d(&[1, 1]))]);
        let x = rat(2, 3);
        assert_eq!(a.mul(&b).eval_at(&x).unwrap(), a.eval_at(&x).unwrap().mul(&b.eval_at(&x).unwrap()));
        assert_eq!(a.mul(&b).support(), vec![-2, -1, 0]);
    }

    #[test]
    fn derivative_refuses_negative_powers() {
        let a = OperatorPoly::from_coeffs(1, [(-1, d(&[1]))]);
        assert_eq!(a.derivative(), Err(Error::NotAPolynomial(-1)));
        let b = OperatorPoly::from_coeffs(1, [(2, d(&[3])), (0, d(&[5]))]);
        assert_eq!(b.derivative().unwrap(), OperatorPoly::from_coeffs(1, [(1, d(&[6]))]));
    }

    #[test]
    fn scalar_detection() {
        let a = OperatorPoly::from_coeffs(2, [(0, d(&[2, 2])), (-1, d(&[1, 1]))]);
        assert_eq!(a.as_scalar().unwrap().len(), 2);
        assert!(OperatorPoly::constant(d(&[1, 2])).as_scalar().is_none());
    }

    #[test]
    fn multi_op_products_track_each_variable() {
        let a = OperatorPoly::from_coeffs(1, [(-1, d(&[2]))]);
        let m = MultiOp::from_op(&a, 0, 2).mul(&MultiOp::from_op(&a, 1, 2));
        assert_eq!(m.terms.keys().cloned().collect::<Vec<_>>(), vec![vec![-1, -1]]);
    }
}
