//! Quantum minors, the quantum determinant and the quantum comatrix.

use itertools::Itertools;
use num_traits::One;

use super::module::YangianModule;
use super::operator::OperatorPoly;
use crate::arith::{QValue, Rational};

/// Which expansion to use for a minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorForm {
    /// Sum over permutations of the rows; needs increasing rows.
    Row,
    /// Sum over permutations of the columns, factors in reverse order; needs
    /// increasing columns.
    Column,
}

/// One term of a minor expansion: a coefficient and the factors in product
/// order, each `(row, col, k)` standing for `t_{row,col}` at the `k`-th
/// shifted argument.
pub type MinorTerm = (Rational, Vec<(usize, usize, i32)>);

fn inversions(x: &[usize]) -> usize {
    (0..x.len()).flat_map(|i| (i + 1..x.len()).map(move |j| (i, j))).filter(|&(i, j)| x[i] > x[j]).count()
}

fn has_repeat(x: &[usize]) -> bool {
    x.iter().sorted().tuple_windows().any(|(a, b)| a == b)
}

/// Expansion of the minor with the given rows and columns. Increasing rows use
/// the row form, otherwise increasing columns use the column form, otherwise
/// the rows are sorted first (picking up `(-q)^{inversions}`). A repeated
/// row or column index gives the empty expansion (zero). `r = 0` gives the
/// single empty product.
pub fn minor_expansion(rows: &[usize], cols: &[usize], q: &QValue) -> Vec<MinorTerm> {
    assert_eq!(rows.len(), cols.len(), "a minor needs as many rows as columns");
    if has_repeat(rows) || has_repeat(cols) {
        return Vec::new();
    }
    let sorted = |x: &[usize]| x.windows(2).all(|w| w[0] < w[1]);
    if sorted(rows) {
        minor_expansion_in(rows, cols, q, MinorForm::Row)
    } else if sorted(cols) {
        minor_expansion_in(rows, cols, q, MinorForm::Column)
    } else {
        let inv = inversions(rows) as i64;
        let s: Vec<usize> = rows.iter().copied().sorted().collect();
        let c = (-q.value().clone()).pow(inv as i32);
        minor_expansion_in(&s, cols, q, MinorForm::Row).into_iter().map(|(x, f)| (x * &c, f)).collect()
    }
}

/// Expansion in a prescribed form.
///
/// # Panics
/// If the indices required to increase for `form` do not.
pub fn minor_expansion_in(rows: &[usize], cols: &[usize], q: &QValue, form: MinorForm) -> Vec<MinorTerm> {
    let r = rows.len();
    let mq = -q.value().clone();
    let mut out = Vec::new();
    for sigma in (0..r).permutations(r) {
        let l = inversions(&sigma) as i32;
        match form {
            MinorForm::Row => {
                assert!(rows.windows(2).all(|w| w[0] < w[1]), "row form needs increasing rows");
                let factors = (0..r).map(|m| (rows[sigma[m]], cols[m], m as i32)).collect();
                out.push((mq.pow(-l), factors));
            }
            MinorForm::Column => {
                assert!(cols.windows(2).all(|w| w[0] < w[1]), "column form needs increasing columns");
                let factors = (0..r).rev().map(|m| (rows[m], cols[sigma[m]], m as i32)).collect();
                out.push((mq.pow(l), factors));
            }
        }
    }
    out
}

/// Sums an expansion, with `entry(i, j, k)` supplying the `k`-th shifted factor.
pub fn assemble<F>(dim: usize, terms: &[MinorTerm], entry: F) -> OperatorPoly
where
    F: Fn(usize, usize, i32) -> OperatorPoly,
{
    let mut acc = OperatorPoly::zero(dim);
    for (c, factors) in terms {
        let mut prod = OperatorPoly::identity(dim);
        for &(i, j, k) in factors {
            let f = entry(i, j, k);
            if f.is_zero() {
                prod = OperatorPoly::zero(dim);
                break;
            }
            prod = prod.mul(&f);
        }
        acc = acc.add_scaled(&prod, c);
    }
    acc
}

/// `t^{rows}_{cols}(u)` with the `k`-th factor evaluated at `q^{-2k} u`.
pub fn quantum_minor(m: &dyn YangianModule, rows: &[usize], cols: &[usize]) -> OperatorPoly {
    quantum_minor_in(m, rows, cols, None)
}

/// As [`quantum_minor`], forcing an expansion form when given.
pub fn quantum_minor_in(m: &dyn YangianModule, rows: &[usize], cols: &[usize], form: Option<MinorForm>) -> OperatorPoly {
    let q = m.q();
    let terms = match form {
        Some(f) => minor_expansion_in(rows, cols, q, f),
        None => minor_expansion(rows, cols, q),
    };
    assemble(m.dim(), &terms, |i, j, k| m.t_op(i, j).scale_arg(&q.pow(-2 * k as i64)))
}

/// `qdet T(u) = t^{1..n}_{1..n}(u)`.
pub fn qdet(m: &dyn YangianModule) -> OperatorPoly {
    let idx: Vec<usize> = (1..=m.n()).collect();
    quantum_minor(m, &idx, &idx)
}

/// `t-hat_ij(u) = (-q)^{j-i} t^{1..^j..n}_{1..^i..n}(u)`, row-major.
pub fn comatrix(m: &dyn YangianModule) -> Vec<OperatorPoly> {
    let n = m.n();
    let mq = -m.q().value().clone();
    let mut out = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let rows: Vec<usize> = (1..=n).filter(|&x| x != j).collect();
            let cols: Vec<usize> = (1..=n).filter(|&x| x != i).collect();
            out.push(quantum_minor(m, &rows, &cols).scale(&mq.pow(j as i32 - i as i32)));
        }
    }
    out
}

/// `prod_i (q^{lambda_i} - q^{-lambda_i + 2i - 2} u^{-1})`, the eigenvalue of
/// `qdet T(u)` on `L(lambda)`, as `exponent -> coefficient`.
pub fn qdet_eigenvalue(lambda: &[i64], q: &QValue) -> std::collections::BTreeMap<i32, Rational> {
    let mut acc = std::collections::BTreeMap::from([(0, Rational::one())]);
    for (i, l) in lambda.iter().enumerate() {
        let factor = [(0, q.pow(*l)), (-1, -q.pow(-l + 2 * i as i64))];
        let mut next = std::collections::BTreeMap::new();
        for (e, c) in &acc {
            for (f, d) in &factor {
                *next.entry(e + f).or_insert_with(num_traits::Zero::zero) += c * d;
            }
        }
        next.retain(|_, v: &mut Rational| !num_traits::Zero::is_zero(v));
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gln::GlnRep;
    use crate::gt::HighestWeight;
    use crate::yangian::module::EvalModule;

    fn eval(l: &[i64]) -> EvalModule {
        EvalModule::standard(GlnRep::build(&HighestWeight::new(l.to_vec()).unwrap(), &QValue::default()))
    }

    #[test]
    fn size_one_minor_is_the_generator() {
        let m = eval(&[1, 0]);
        assert_eq!(&quantum_minor(&m, &[2], &[1]), m.t_op(2, 1));
    }

    #[test]
    fn row_swap_sign() {
        let m = eval(&[1, 0, -1]);
        let q = m.q().value().clone();
        let a = quantum_minor(&m, &[1, 2], &[2, 3]);
        let b = quantum_minor(&m, &[2, 1], &[2, 3]);
        assert_eq!(b, a.scale(&-q.clone()));
        let c = quantum_minor(&m, &[1, 2], &[3, 2]);
        assert_eq!(c, a.scale(&-q.recip()));
    }

    #[test]
    fn repeated_indices_vanish() {
        let m = eval(&[1, 0]);
        assert!(quantum_minor(&m, &[1, 1], &[1, 2]).is_zero());
        assert!(quantum_minor(&m, &[2, 2], &[2, 2]).is_zero());
    }

    #[test]
    fn row_and_column_forms_agree() {
        let m = eval(&[2, 1, 0]);
        for rows in [[1, 2], [1, 3], [2, 3]] {
            for cols in [[1, 2], [1, 3], [2, 3]] {
                assert_eq!(
                    quantum_minor_in(&m, &rows, &cols, Some(MinorForm::Row)),
                    quantum_minor_in(&m, &rows, &cols, Some(MinorForm::Column))
                );
            }
        }
    }

    #[test]
    fn comatrix_sign_convention_gl2() {
        let m = eval(&[1, 0]);
        let c = comatrix(&m);
        let q = m.q().value().clone();
        assert_eq!(&c[0], m.t_op(2, 2));
        assert_eq!(c[1], m.t_op(1, 2).scale(&-q));
    }

    #[test]
    fn qdet_of_gl1_is_t11() {
        let m = eval(&[3]);
        assert_eq!(&qdet(&m), m.t_op(1, 1));
    }

    #[test]
    fn qdet_is_the_closed_form_scalar() {
        for l in [[1, 0], [2, -1]] {
            let m = eval(&l);
            assert_eq!(qdet(&m).as_scalar().unwrap(), qdet_eigenvalue(&l, m.q()));
        }
    }
}
