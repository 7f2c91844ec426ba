//! The irreducible `U_q(gl_n)`-module `L(lambda)` as explicit matrices in the
//! Gelfand–Tsetlin basis, its root vectors, the `T`/`T-bar` generators and a
//! relation checker.
//!
//! Indices in the public API are 1-based.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{int, QValue, Rational};
use crate::error::{Error, Result};
use crate::gt::{enumerate_patterns, HighestWeight, Pattern};
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct GlnRep {
    lambda: HighestWeight,
    q: QValue,
    h: Rational,
    eps: Vec<i8>,
    basis: Vec<Pattern>,
    index: HashMap<Pattern, usize>,
    t: Vec<Matrix>,
    tinv: Vec<Matrix>,
    e: Vec<Matrix>,
    f: Vec<Matrix>,
    /// `e_ij` for all `i != j` with the default middle index, row-major `n x n`.
    roots: Vec<Option<Matrix>>,
}

impl GlnRep {
    /// `L(lambda)` with the matrices of the Gelfand–Tsetlin formulas.
    pub fn build(lambda: &HighestWeight, q: &QValue) -> GlnRep {
        Self::build_general(lambda, q, &Rational::one(), &vec![1; lambda.n()]).expect("trivial parameters are valid")
    }

    /// `L(h, eps, lambda)`: highest vector eigenvalues `h * eps_i * q^{lambda_i}`.
    /// Obtained from `L(lambda)` by `t_i -> h eps_i t_i`,
    /// `f_i -> eps_i eps_{i+1} f_i`, `e_i` unchanged.
    pub fn build_general(lambda: &HighestWeight, q: &QValue, h: &Rational, eps: &[i8]) -> Result<GlnRep> {
        let n = lambda.n();
        if h.is_zero() {
            return Err(Error::ZeroParameter);
        }
        if eps.len() != n {
            return Err(Error::RankMismatch(n, eps.len()));
        }
        if eps.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidSigns);
        }
        let basis = enumerate_patterns(lambda);
        let dim = basis.len();
        let index: HashMap<Pattern, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut t = Vec::with_capacity(n);
        let mut tinv = Vec::with_capacity(n);
        for k in 0..n {
            let scale = h * int(eps[k] as i64);
            let diag: Vec<Rational> = basis.iter().map(|p| &scale * q.pow(p.weight()[k])).collect();
            tinv.push(Matrix::diagonal(diag.iter().map(|x| x.recip()).collect()));
            t.push(Matrix::diagonal(diag));
        }

        let mut e = Vec::with_capacity(n.saturating_sub(1));
        let mut f = Vec::with_capacity(n.saturating_sub(1));
        for k in 1..n {
            let (mut et, mut ft) = (Vec::new(), Vec::new());
            let sign = int((eps[k - 1] * eps[k]) as i64);
            for (col, p) in basis.iter().enumerate() {
                let lk = p.l_values(k);
                let lup = p.l_values(k + 1);
                let ldown = if k > 1 { p.l_values(k - 1) } else { Vec::new() };
                for j in 1..=k {
                    let lkj = lk[j - 1];
                    let mut den = Rational::one();
                    for (i, &li) in lk.iter().enumerate() {
                        if i + 1 != j {
                            den *= q.q_int(li - lkj);
                        }
                    }
                    assert!(!den.is_zero(), "zero denominator in the Gelfand-Tsetlin formulas");
                    if let Some(up) = p.shift(k, j, 1) {
                        let num: Rational = lup.iter().map(|&l| q.q_int(l - lkj)).product();
                        let c = -(num / &den);
                        if !c.is_zero() {
                            et.push((index[&up], col, c));
                        }
                    }
                    if let Some(down) = p.shift(k, j, -1) {
                        let num: Rational = ldown.iter().map(|&l| q.q_int(l - lkj)).product();
                        let c = num / &den * &sign;
                        if !c.is_zero() {
                            ft.push((index[&down], col, c));
                        }
                    }
                }
            }
            e.push(Matrix::from_triplets(dim, dim, et));
            f.push(Matrix::from_triplets(dim, dim, ft));
        }

        let mut rep = GlnRep {
            lambda: lambda.clone(),
            q: q.clone(),
            h: h.clone(),
            eps: eps.to_vec(),
            basis,
            index,
            t,
            tinv,
            e,
            f,
            roots: Vec::new(),
        };
        rep.roots = rep.all_root_vectors();
        Ok(rep)
    }

    fn all_root_vectors(&self) -> Vec<Option<Matrix>> {
        let n = self.n();
        let mut roots: Vec<Option<Matrix>> = vec![None; n * n];
        // Fill by increasing |i - j| so the recursion finds its inputs.
        for d in 1..n {
            for i in 1..=n - d {
                let j = i + d;
                let up = if d == 1 {
                    self.e[i - 1].clone()
                } else {
                    let k = i + 1;
                    Matrix::q_commutator(
                        roots[(i - 1) * n + k - 1].as_ref().unwrap(),
                        roots[(k - 1) * n + j - 1].as_ref().unwrap(),
                        self.q.value(),
                    )
                };
                let down = if d == 1 {
                    self.f[i - 1].clone()
                } else {
                    let k = j - 1;
                    Matrix::q_commutator(
                        roots[(j - 1) * n + k - 1].as_ref().unwrap(),
                        roots[(k - 1) * n + i - 1].as_ref().unwrap(),
                        &self.q.pow(-1),
                    )
                };
                roots[(i - 1) * n + j - 1] = Some(up);
                roots[(j - 1) * n + i - 1] = Some(down);
            }
        }
        roots
    }

    pub fn lambda(&self) -> &HighestWeight {
        &self.lambda
    }

    pub fn q(&self) -> &QValue {
        &self.q
    }

    pub fn h(&self) -> &Rational {
        &self.h
    }

    pub fn eps(&self) -> &[i8] {
        &self.eps
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Pattern] {
        &self.basis
    }

    pub fn index_of(&self, p: &Pattern) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn t(&self, k: usize) -> &Matrix {
        &self.t[k - 1]
    }

    pub fn t_inv(&self, k: usize) -> &Matrix {
        &self.tinv[k - 1]
    }

    pub fn e(&self, k: usize) -> &Matrix {
        &self.e[k - 1]
    }

    pub fn f(&self, k: usize) -> &Matrix {
        &self.f[k - 1]
    }

    /// `k_i = t_i t_{i+1}^{-1}`.
    pub fn k(&self, i: usize) -> Matrix {
        self.t(i).mul(self.t_inv(i + 1))
    }

    /// `e_ij` with the default middle index (`i + 1` for `i < j`, `i - 1` for `i > j`).
    pub fn root_vector(&self, i: usize, j: usize) -> &Matrix {
        assert!(i != j, "root vectors need i != j");
        self.roots[(i - 1) * self.n() + j - 1].as_ref().unwrap()
    }

    /// `e_ij = [e_ik, e_kj]_zeta` with an explicit middle index `k` strictly
    /// between `i` and `j`; `zeta = q` when `i < j` and `q^{-1}` otherwise.
    pub fn root_vector_via(&self, i: usize, k: usize, j: usize) -> Matrix {
        assert!((i < k && k < j) || (i > k && k > j), "middle index must lie strictly between i and j");
        let zeta = if i < j { self.q.pow(1) } else { self.q.pow(-1) };
        Matrix::q_commutator(self.root_vector(i, k), self.root_vector(k, j), &zeta)
    }

    /// `t_ij`: `t_ii = t_i`, `t_ij = (q - q^{-1}) t_j e_ij` for `i > j`, zero for `i < j`.
    pub fn t_entry(&self, i: usize, j: usize) -> Matrix {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => self.t(i).clone(),
            std::cmp::Ordering::Less => Matrix::zeros(self.dim(), self.dim()),
            std::cmp::Ordering::Greater => self.t(j).mul(self.root_vector(i, j)).scale(&self.q.q_minus_qinv()),
        }
    }

    /// `t-bar_ij`: `t-bar_ii = t_i^{-1}`, `t-bar_ij = -(q - q^{-1}) e_ij t_i^{-1}`
    /// for `i < j`, zero for `i > j`.
    pub fn tbar_entry(&self, i: usize, j: usize) -> Matrix {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => self.t_inv(i).clone(),
            std::cmp::Ordering::Greater => Matrix::zeros(self.dim(), self.dim()),
            std::cmp::Ordering::Less => self.root_vector(i, j).mul(self.t_inv(i)).scale(&-self.q.q_minus_qinv()),
        }
    }

    /// Row-major `n x n` grids `(T, T-bar)`.
    pub fn t_matrices(&self) -> (Vec<Matrix>, Vec<Matrix>) {
        let n = self.n();
        let mut t = Vec::with_capacity(n * n);
        let mut tb = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                t.push(self.t_entry(i, j));
                tb.push(self.tbar_entry(i, j));
            }
        }
        (t, tb)
    }

    /// Index of the highest basis vector (always 0).
    pub fn highest_index(&self) -> usize {
        0
    }

    /// Checks every defining relation of both presentations as exact matrix
    /// identities; returns the names of the violated ones.
    pub fn verify_relations(&self) -> Vec<String> {
        let n = self.n();
        let q = &self.q;
        let dim = self.dim();
        let id = Matrix::identity(dim);
        let mut bad = Vec::new();
        let mut check = |ok: bool, name: String| {
            if !ok {
                bad.push(name);
            }
        };
        for i in 1..=n {
            check(self.t(i).mul(self.t_inv(i)) == id, format!("t{i} t{i}^-1 = 1"));
            for j in 1..=n {
                check(self.t(i).mul(self.t(j)) == self.t(j).mul(self.t(i)), format!("[t{i}, t{j}] = 0"));
            }
            for j in 1..n {
                let d = (i == j) as i64 - (i == j + 1) as i64;
                let conj = |m: &Matrix| self.t(i).mul(m).mul(self.t_inv(i));
                check(conj(self.e(j)) == self.e(j).scale(&q.pow(d)), format!("t{i} e{j} t{i}^-1"));
                check(conj(self.f(j)) == self.f(j).scale(&q.pow(-d)), format!("t{i} f{j} t{i}^-1"));
            }
        }
        for i in 1..n {
            for j in 1..n {
                let lhs = Matrix::commutator(self.e(i), self.f(j));
                let rhs = if i == j {
                    let k = self.k(i);
                    let kinv = self.t_inv(i).mul(self.t(i + 1));
                    k.sub(&kinv).scale(&q.q_minus_qinv().recip())
                } else {
                    Matrix::zeros(dim, dim)
                };
                check(lhs == rhs, format!("[e{i}, f{j}]"));
                if i.abs_diff(j) > 1 {
                    check(Matrix::commutator(self.e(i), self.e(j)).is_zero(), format!("[e{i}, e{j}] = 0"));
                    check(Matrix::commutator(self.f(i), self.f(j)).is_zero(), format!("[f{i}, f{j}] = 0"));
                }
                if i.abs_diff(j) == 1 {
                    let qv = q.value();
                    let serre = |x: &Matrix, y: &Matrix| Matrix::q_commutator(x, &Matrix::q_commutator(y, x, qv), qv);
                    check(serre(self.e(i), self.e(j)).is_zero(), format!("Serre e{i} e{j}"));
                    check(serre(self.f(i), self.f(j)).is_zero(), format!("Serre f{i} f{j}"));
                }
            }
        }
        let (t, tb) = self.t_matrices();
        for i in 1..=n {
            check(t[(i - 1) * n + i - 1].mul(&tb[(i - 1) * n + i - 1]) == id, format!("t{i}{i} tbar{i}{i} = 1"));
            for j in i + 1..=n {
                check(t[(i - 1) * n + j - 1].is_zero(), format!("t{i}{j} = 0"));
                check(tb[(j - 1) * n + i - 1].is_zero(), format!("tbar{j}{i} = 0"));
            }
        }
        let r = constant_r_matrix(n, q);
        for (name, a, b) in [("R T1 T2 = T2 T1 R", &t, &t), ("R Tb1 Tb2 = Tb2 Tb1 R", &tb, &tb), ("R Tb1 T2 = T2 Tb1 R", &tb, &t)] {
            if let Some(at) = rtt_constant_violation(n, &r, a, b) {
                bad.push(format!("{name} at {at:?}"));
            }
        }
        bad
    }

    pub fn export(&self) -> RepExport<'_> {
        let n = self.n();
        RepExport {
            lambda: &self.lambda,
            q: &self.q,
            dim: self.dim(),
            basis: &self.basis,
            t: &self.t,
            t_inv: &self.tinv,
            e: &self.e,
            f: &self.f,
            n,
        }
    }
}

/// JSON view of a [`GlnRep`].
#[derive(Serialize)]
pub struct RepExport<'a> {
    lambda: &'a HighestWeight,
    q: &'a QValue,
    n: usize,
    dim: usize,
    basis: &'a [Pattern],
    t: &'a [Matrix],
    t_inv: &'a [Matrix],
    e: &'a [Matrix],
    f: &'a [Matrix],
}

/// `R = q sum E_ii (x) E_ii + sum_{i != j} E_ii (x) E_jj + (q - q^{-1}) sum_{i<j} E_ij (x) E_ji`
/// on `C^n (x) C^n`, basis `(i, j) -> i * n + j` (0-based).
pub fn constant_r_matrix(n: usize, q: &QValue) -> Matrix {
    let mut trip = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = if i == j { q.value().clone() } else { Rational::one() };
            trip.push((i * n + j, i * n + j, c));
            if i < j {
                trip.push((i * n + j, j * n + i, q.q_minus_qinv()));
            }
        }
    }
    Matrix::from_triplets(n * n, n * n, trip)
}

/// Checks `R A_1 B_2 = B_2 A_1 R` entrywise for operator grids `a`, `b`
/// (row-major `n x n`). Returns the first failing entry `((a,b),(c,d))`.
fn rtt_constant_violation(n: usize, r: &Matrix, a: &[Matrix], b: &[Matrix]) -> Option<(usize, usize, usize, usize)> {
    let dim = a[0].rows();
    for x in 0..n {
        for y in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let mut lhs = Matrix::zeros(dim, dim);
                    for (col, coef) in r.row(x * n + y) {
                        let (e, f) = (col / n, col % n);
                        lhs = lhs.add_scaled(&a[e * n + c].mul(&b[f * n + d]), coef);
                    }
                    let mut rhs = Matrix::zeros(dim, dim);
                    for e in 0..n {
                        for f in 0..n {
                            let coef = r.get(e * n + f, c * n + d);
                            if !coef.is_zero() {
                                rhs = rhs.add_scaled(&b[y * n + f].mul(&a[x * n + e]), &coef);
                            }
                        }
                    }
                    if lhs != rhs {
                        return Some((x + 1, y + 1, c + 1, d + 1));
                    }
                }
            }
        }
    }
    None
}
