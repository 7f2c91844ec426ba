//! R-matrices, the q-permutation operator and q-antisymmetrizers on tensor
//! powers of `C^n`. The basis index of `(a_1, ..., a_r)` (0-based entries)
//! is `sum_k a_k n^{r-1-k}`.

use itertools::Itertools;
use num_traits::{One, Zero};

use super::operator::{MultiPoly, PolyMatrix};
use crate::arith::{QValue, Rational};
use crate::linalg::Matrix;

pub use crate::gln::constant_r_matrix;

/// Trigonometric `R(u, v)` on `C^n (x) C^n` as a polynomial matrix in the
/// variables `(vars.0, vars.1)` out of `nvars`.
pub fn trig_r_matrix_in(n: usize, q: &QValue, nvars: usize, vars: (usize, usize)) -> PolyMatrix {
    let (uu, vv) = vars;
    let qv = q.value().clone();
    let qi = q.pow(-1);
    let mut r = PolyMatrix::zeros(n * n, nvars);
    for i in 0..n {
        for j in 0..n {
            let d = i * n + j;
            if i == j {
                r.add(d, d, &MultiPoly::var(nvars, uu, qi.clone()).add(&MultiPoly::var(nvars, vv, -qv.clone())));
            } else {
                r.add(d, d, &MultiPoly::var(nvars, uu, Rational::one()).add(&MultiPoly::var(nvars, vv, -Rational::one())));
                let c = &qi - &qv;
                let p = if i > j { MultiPoly::var(nvars, uu, c) } else { MultiPoly::var(nvars, vv, c) };
                r.add(d, j * n + i, &p);
            }
        }
    }
    r
}

/// Trigonometric `R(u, v)` in two variables.
pub fn trig_r_matrix(n: usize, q: &QValue) -> PolyMatrix {
    trig_r_matrix_in(n, q, 2, (0, 1))
}

/// `R(u, v)` at numerical `u`, `v`.
pub fn trig_r_at(n: usize, q: &QValue, u: &Rational, v: &Rational) -> Matrix {
    trig_r_matrix(n, q).eval(&[u.clone(), v.clone()])
}

fn digits(mut x: usize, n: usize, r: usize) -> Vec<usize> {
    let mut d = vec![0; r];
    for k in (0..r).rev() {
        d[k] = x % n;
        x /= n;
    }
    d
}

fn undigits(d: &[usize], n: usize) -> usize {
    d.iter().fold(0, |acc, x| acc * n + x)
}

/// Places a two-site polynomial operator on sites `(s, t)` of the `r`-fold power.
pub fn embed_poly(m: &PolyMatrix, n: usize, r: usize, s: usize, t: usize) -> PolyMatrix {
    let size = n.pow(r as u32);
    let mut out = PolyMatrix::zeros(size, m.nvars());
    for x in 0..size {
        let d = digits(x, n, r);
        for (col, p) in m.row(d[s] * n + d[t]) {
            let mut e = d.clone();
            e[s] = col / n;
            e[t] = col % n;
            out.add(x, undigits(&e, n), p);
        }
    }
    out
}

/// Places a two-site matrix on sites `(s, t)` of the `r`-fold power.
pub fn embed(m: &Matrix, n: usize, r: usize, s: usize, t: usize) -> Matrix {
    let size = n.pow(r as u32);
    let mut trip = Vec::new();
    for x in 0..size {
        let d = digits(x, n, r);
        for (col, c) in m.row(d[s] * n + d[t]) {
            let mut e = d.clone();
            e[s] = col / n;
            e[t] = col % n;
            trip.push((x, undigits(&e, n), c.clone()));
        }
    }
    Matrix::from_triplets(size, size, trip)
}

/// `R(u_1, ..., u_r) = prod_{i<j} R_ij(u_i, u_j)`, pairs in lexicographic order.
pub fn fused_r_matrix(n: usize, q: &QValue, r: usize) -> PolyMatrix {
    let mut acc = PolyMatrix::identity(n.pow(r as u32), r);
    for (i, j) in (0..r).tuple_combinations() {
        let rij = trig_r_matrix_in(n, q, r, (i, j));
        acc = acc.mul(&embed_poly(&rij, n, r, i, j));
    }
    acc
}

/// `P = sum E_ii (x) E_ii + q sum_{i>j} E_ij (x) E_ji + q^{-1} sum_{i<j} E_ij (x) E_ji`.
pub fn q_permutation(n: usize, q: &QValue) -> Matrix {
    let mut trip = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = match i.cmp(&j) {
                std::cmp::Ordering::Equal => Rational::one(),
                std::cmp::Ordering::Greater => q.pow(1),
                std::cmp::Ordering::Less => q.pow(-1),
            };
            trip.push((i * n + j, j * n + i, c));
        }
    }
    Matrix::from_triplets(n * n, n * n, trip)
}

/// A reduced word `[i_1, ..., i_l]` (0-based) with `sigma = s_{i_1} ... s_{i_l}`.
fn reduced_word(sigma: &[usize]) -> Vec<usize> {
    let mut s = sigma.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..s.len().saturating_sub(1)).find(|&i| s[i] > s[i + 1]) {
        s.swap(i, i + 1);
        rev.push(i);
    }
    rev.reverse();
    rev
}

/// `A_r = sum_sigma sgn(sigma) P_sigma` on `(C^n)^{(x) r}`.
pub fn antisymmetrizer(n: usize, r: usize, q: &QValue) -> Matrix {
    let size = n.pow(r as u32);
    let p = q_permutation(n, q);
    let gens: Vec<Matrix> = (0..r.saturating_sub(1)).map(|i| embed(&p, n, r, i, i + 1)).collect();
    let mut acc = Matrix::zeros(size, size);
    for sigma in (0..r).permutations(r) {
        let word = reduced_word(&sigma);
        let mut m = Matrix::identity(size);
        for i in &word {
            m = m.mul(&gens[*i]);
        }
        let sign = if word.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
        acc = acc.add_scaled(&m, &sign);
    }
    acc
}

/// Checks `R(1, q^{-2}, ..., q^{-2r+2}) = prod_{0<=i<j<r} (q^{-2i} - q^{-2j}) A_r`.
pub fn antisymmetrizer_identity_holds(n: usize, r: usize, q: &QValue) -> bool {
    let point: Vec<Rational> = (0..r).map(|i| q.pow(-2 * i as i64)).collect();
    let lhs = fused_r_matrix(n, q, r).eval(&point);
    let mut c = Rational::one();
    for (i, j) in (0..r).tuple_combinations() {
        c *= q.pow(-2 * i as i64) - q.pow(-2 * j as i64);
    }
    !c.is_zero() && lhs == antisymmetrizer(n, r, q).scale(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::linalg::rank;

    #[test]
    fn antisymmetrizer_small_cases() {
        let q = QValue::default();
        assert_eq!(antisymmetrizer(3, 1, &q), Matrix::identity(3));
        for n in 2..=4 {
            let a2 = antisymmetrizer(n, 2, &q);
            assert_eq!(a2, Matrix::identity(n * n).sub(&q_permutation(n, &q)));
            assert_eq!(rank(&a2), n * (n - 1) / 2);
        }
    }

    #[test]
    fn prop_antisymmetrizer_identity() {
        for q in [QValue::default(), QValue::new(rat(2, 1)).unwrap()] {
            assert!(antisymmetrizer_identity_holds(2, 2, &q));
            assert!(antisymmetrizer_identity_holds(3, 2, &q));
            assert!(antisymmetrizer_identity_holds(3, 3, &q));
            assert!(antisymmetrizer_identity_holds(2, 3, &q));
        }
    }

    #[test]
    fn r_matrix_is_homogeneous() {
        let q = QValue::default();
        let (u, v, c) = (rat(5, 3), rat(-2, 7), q.pow(2));
        assert_eq!(trig_r_at(3, &q, &(&u * &c), &(&v * &c)), trig_r_at(3, &q, &u, &v).scale(&c));
    }

    #[test]
    fn fused_with_two_sites_is_plain_r() {
        let q = QValue::default();
        assert_eq!(fused_r_matrix(3, &q, 2), trig_r_matrix(3, &q));
    }

    #[test]
    fn reduced_words() {
        assert_eq!(reduced_word(&[0, 1, 2]), Vec::<usize>::new());
        assert_eq!(reduced_word(&[2, 1, 0]).len(), 3);
    }
}
