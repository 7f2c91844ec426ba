//! Exact checks of the defining relations of the q-Yangian and of the
//! quantum minor identities on concrete modules.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::minor::{comatrix, qdet, quantum_minor, quantum_minor_in, MinorForm};
use super::module::{TensorModule, YangianModule};
use super::operator::{MultiOp, MultiPoly, OperatorPoly};
use super::rmatrix::{fused_r_matrix, trig_r_matrix};
use crate::arith::Rational;
use crate::linalg::Matrix;
use crate::report::Report;

fn lift_all(m: &dyn YangianModule, var: usize, nvars: usize) -> Vec<MultiOp> {
    let n = m.n();
    (1..=n).cartesian_product(1..=n).map(|(i, j)| MultiOp::from_op(m.t_op(i, j), var, nvars)).collect()
}

fn lin(cu: Rational, cv: Rational) -> MultiPoly {
    MultiPoly::var(2, 0, cu).add(&MultiPoly::var(2, 1, cv))
}

/// The relations between `t_ij(u)` and `t_kl(v)` written out entrywise.
pub fn check_generator_relations(m: &dyn YangianModule) -> Report {
    let n = m.n();
    let q = m.q();
    let (qv, qi) = (q.pow(1), q.pow(-1));
    let d = &qi - &qv;
    let tu = lift_all(m, 0, 2);
    let tv = lift_all(m, 1, 2);
    let at = |v: &Vec<MultiOp>, i: usize, j: usize| v[(i - 1) * n + j - 1].clone();
    let mut rep = Report::new("generator relations");
    for (i, j, k, l) in itertools::iproduct!(1..=n, 1..=n, 1..=n, 1..=n) {
        let (dik, djl) = (i == k, j == l);
        let p = |same: bool| if same { lin(qi.clone(), -qv.clone()) } else { lin(Rational::one(), -Rational::one()) };
        let mut lhs = at(&tu, i, j).mul(&at(&tv, k, l)).mul_scalar(&p(dik));
        let w1 = lin(if i > k { d.clone() } else { Rational::zero() }, if i < k { d.clone() } else { Rational::zero() });
        lhs.add_mul_scalar(&w1, &at(&tu, k, j).mul(&at(&tv, i, l)));
        let mut rhs = at(&tv, k, l).mul(&at(&tu, i, j)).mul_scalar(&p(djl));
        let w2 = lin(if j < l { d.clone() } else { Rational::zero() }, if j > l { d.clone() } else { Rational::zero() });
        rhs.add_mul_scalar(&w2, &at(&tv, k, j).mul(&at(&tu, i, l)));
        rep.record(lhs == rhs, || format!("(i,j,k,l)=({i},{j},{k},{l})"));
    }
    rep
}

/// `R(u,v) T_1(u) T_2(v) = T_2(v) T_1(u) R(u,v)` coefficientwise, for the
/// operator grids `x(u)` and `y(v)` given as row-major lists.
fn rtt_like(n: usize, dim: usize, name: &str, lhs_pair: impl Fn(usize, usize, usize, usize) -> MultiOp, rhs_pair: impl Fn(usize, usize, usize, usize) -> MultiOp, q: &crate::arith::QValue) -> Report {
    let r = trig_r_matrix(n, q);
    let mut rep = Report::new(name);
    for (a, b, cc, dd) in itertools::iproduct!(0..n, 0..n, 0..n, 0..n) {
        let mut lhs = MultiOp::zero(2, dim);
        for (col, p) in r.row(a * n + b) {
            lhs.add_mul_scalar(p, &lhs_pair(col / n, col % n, cc, dd));
        }
        let mut rhs = MultiOp::zero(2, dim);
        for (row, p) in r.column(cc * n + dd) {
            rhs.add_mul_scalar(p, &rhs_pair(a, b, row / n, row % n));
        }
        rep.record(lhs == rhs, || format!("entry ({},{}),({},{})", a + 1, b + 1, cc + 1, dd + 1));
    }
    rep
}

/// The RTT relation with the trigonometric R-matrix.
pub fn check_rtt(m: &dyn YangianModule) -> Report {
    let n = m.n();
    let tu = lift_all(m, 0, 2);
    let tv = lift_all(m, 1, 2);
    rtt_like(
        n,
        m.dim(),
        "rtt",
        |e, f, c, d| tu[e * n + c].mul(&tv[f * n + d]),
        |a, b, e, f| tv[b * n + f].mul(&tu[a * n + e]),
        m.q(),
    )
}

/// `R(u,v) T-hat_2(v) T-hat_1(u) = T-hat_1(u) T-hat_2(v) R(u,v)`.
pub fn check_comatrix_rtt(m: &dyn YangianModule) -> Report {
    let n = m.n();
    let hat = comatrix(m);
    let hu: Vec<MultiOp> = hat.iter().map(|p| MultiOp::from_op(p, 0, 2)).collect();
    let hv: Vec<MultiOp> = hat.iter().map(|p| MultiOp::from_op(p, 1, 2)).collect();
    rtt_like(
        n,
        m.dim(),
        "comatrix rtt",
        |e, f, c, d| hv[f * n + d].mul(&hu[e * n + c]),
        |a, b, e, f| hu[a * n + e].mul(&hv[b * n + f]),
        m.q(),
    )
}

/// `R(u1,u2,u3) T_1(u1) T_2(u2) T_3(u3) = T_3(u3) T_2(u2) T_1(u1) R(u1,u2,u3)`.
pub fn check_fusion3(m: &dyn YangianModule) -> Report {
    let n = m.n();
    let dim = m.dim();
    let r = fused_r_matrix(n, m.q(), 3);
    let t: Vec<Vec<MultiOp>> = (0..3).map(|v| lift_all(m, v, 3)).collect();
    let size = n * n * n;
    let dig = |x: usize| [x / (n * n), (x / n) % n, x % n];
    // forward[c][b] = t_{c1 b1}(u1) t_{c2 b2}(u2) t_{c3 b3}(u3); backward[a][c] = t_{a3 c3}(u3) t_{a2 c2}(u2) t_{a1 c1}(u1)
    let mut forward = HashMap::new();
    let mut backward = HashMap::new();
    for (x, y) in (0..size).cartesian_product(0..size) {
        let (a, b) = (dig(x), dig(y));
        let f = t[0][a[0] * n + b[0]].mul(&t[1][a[1] * n + b[1]]).mul(&t[2][a[2] * n + b[2]]);
        let g = t[2][a[2] * n + b[2]].mul(&t[1][a[1] * n + b[1]]).mul(&t[0][a[0] * n + b[0]]);
        forward.insert((x, y), f);
        backward.insert((x, y), g);
    }
    let mut rep = Report::new("fusion r=3");
    for (a, b) in (0..size).cartesian_product(0..size) {
        let mut lhs = MultiOp::zero(3, dim);
        for (cc, p) in r.row(a) {
            lhs.add_mul_scalar(p, &forward[&(*cc, b)]);
        }
        let mut rhs = MultiOp::zero(3, dim);
        for (cc, p) in r.column(b) {
            rhs.add_mul_scalar(p, &backward[&(a, cc)]);
        }
        rep.record(lhs == rhs, || format!("entry {:?},{:?}", dig(a), dig(b)));
    }
    rep
}

/// Which column index multiplies `t_{a, .}(u)` in the second and third sums
/// of the right-hand side of the minor-generator relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BSideIndex {
    /// `t_{a d_i}(u)`, the summation index.
    Summed,
    /// `t_{a d_l}(u)`, as printed; only defined when `l >= 1`.
    AsPrinted,
}

/// One instance of the relation between `t_ab(u)` and the minor
/// `t^{c}_{d}(v)` (both `c`, `d` increasing).
pub fn minor_generator_relation(
    m: &dyn YangianModule,
    a: usize,
    b: usize,
    c: &[usize],
    d: &[usize],
    variant: BSideIndex,
    cache: &mut HashMap<(Vec<usize>, Vec<usize>), MultiOp>,
) -> Option<bool> {
    let q = m.q();
    let (qv, qi) = (q.pow(1), q.pow(-1));
    let mq = -qv.clone();
    let r = c.len();
    let mut minor = |rows: Vec<usize>, cols: Vec<usize>| -> MultiOp {
        cache
            .entry((rows.clone(), cols.clone()))
            .or_insert_with(|| MultiOp::from_op(&quantum_minor(m, &rows, &cols), 1, 2))
            .clone()
    };
    let t = |i: usize, j: usize| MultiOp::from_op(m.t_op(i, j), 0, 2);
    let main = minor(c.to_vec(), d.to_vec());
    let diff = &qi - &qv;

    let lhs = if c.contains(&a) {
        t(a, b).mul(&main).mul_scalar(&lin(qi.clone(), -qv.clone()))
    } else {
        let k = c.iter().filter(|&&x| x < a).count();
        let mut acc = t(a, b).mul(&main).mul_scalar(&lin(Rational::one(), -Rational::one()));
        for i in 1..=r {
            let mut rows: Vec<usize> = c.to_vec();
            rows.remove(i - 1);
            rows.push(a);
            rows.sort();
            let (coef, var) = if i <= k { (mq.pow(k as i32 - i as i32), 0) } else { (mq.pow(k as i32 - i as i32 + 1), 1) };
            let p = MultiPoly::var(2, var, &diff * &coef);
            acc.add_mul_scalar(&p, &t(c[i - 1], b).mul(&minor(rows, d.to_vec())));
        }
        acc
    };

    let rhs = if d.contains(&b) {
        main.mul(&t(a, b)).mul_scalar(&lin(qi.clone(), -qv.clone()))
    } else {
        let l = d.iter().filter(|&&x| x < b).count();
        if variant == BSideIndex::AsPrinted && l == 0 {
            return None;
        }
        let mut acc = main.mul(&t(a, b)).mul_scalar(&lin(Rational::one(), -Rational::one()));
        for i in 1..=r {
            let mut cols: Vec<usize> = d.to_vec();
            cols.remove(i - 1);
            cols.push(b);
            cols.sort();
            let (coef, var) = if i <= l { (mq.pow(i as i32 - l as i32), 1) } else { (mq.pow(i as i32 - l as i32 - 1), 0) };
            let col = match variant {
                BSideIndex::Summed => d[i - 1],
                BSideIndex::AsPrinted => d[l - 1],
            };
            let p = MultiPoly::var(2, var, &diff * &coef);
            acc.add_mul_scalar(&p, &minor(c.to_vec(), cols).mul(&t(a, col)));
        }
        acc
    };
    Some(lhs == rhs)
}

/// All instances of the minor-generator relation for minor sizes `1..=n`.
pub fn check_minor_generator_relations(m: &dyn YangianModule, variant: BSideIndex) -> Report {
    let n = m.n();
    let mut rep = Report::new("minor-generator relations");
    let mut cache = HashMap::new();
    for r in 1..=n {
        for c in (1..=n).combinations(r) {
            for d in (1..=n).combinations(r) {
                for (a, b) in (1..=n).cartesian_product(1..=n) {
                    if let Some(ok) = minor_generator_relation(m, a, b, &c, &d, variant, &mut cache) {
                        rep.record(ok, || format!("a={a} b={b} c={c:?} d={d:?}"));
                    }
                }
            }
        }
    }
    rep
}

fn commute_coefficientwise(x: &OperatorPoly, y: &OperatorPoly) -> bool {
    x.coeffs().values().all(|a| y.coeffs().values().all(|b| Matrix::commutator(a, b).is_zero()))
}

/// `[t_{c_i d_j}(u), t^{c}_{d}(v)] = 0` for all increasing `c`, `d` and all `i`, `j`.
pub fn check_minor_centrality(m: &dyn YangianModule) -> Report {
    let n = m.n();
    let mut rep = Report::new("minor centrality");
    for r in 1..=n {
        for c in (1..=n).combinations(r) {
            for d in (1..=n).combinations(r) {
                let mn = quantum_minor(m, &c, &d);
                for (&ci, &dj) in c.iter().cartesian_product(&d) {
                    rep.record(commute_coefficientwise(m.t_op(ci, dj), &mn), || format!("t_{ci}{dj} vs minor {c:?},{d:?}"));
                }
            }
        }
    }
    rep
}

/// `qdet T(u)` commutes with every `t_ij^{(r)}` and, on an irreducible
/// module, is a scalar.
pub fn check_qdet_central(m: &dyn YangianModule, expect_scalar: bool) -> Report {
    let n = m.n();
    let qd = qdet(m);
    let mut rep = Report::new("qdet centrality");
    for (i, j) in (1..=n).cartesian_product(1..=n) {
        rep.record(commute_coefficientwise(m.t_op(i, j), &qd), || format!("t_{i}{j}"));
    }
    if expect_scalar {
        rep.record(qd.as_scalar().is_some(), || "qdet is not scalar".into());
    }
    rep
}

/// `T-hat(u) T(q^{-2n+2} u) = qdet T(u)` entrywise.
pub fn check_comatrix(m: &dyn YangianModule) -> Report {
    let n = m.n();
    let hat = comatrix(m);
    let qd = qdet(m);
    let shift = m.q().pow(-2 * n as i64 + 2);
    let shifted: Vec<OperatorPoly> = (1..=n).cartesian_product(1..=n).map(|(i, j)| m.t_op(i, j).scale_arg(&shift)).collect();
    let mut rep = Report::new("comatrix");
    for (i, j) in (0..n).cartesian_product(0..n) {
        let mut acc = OperatorPoly::zero(m.dim());
        for k in 0..n {
            acc = acc.add(&hat[i * n + k].mul(&shifted[k * n + j]));
        }
        let expect = if i == j { qd.clone() } else { OperatorPoly::zero(m.dim()) };
        rep.record(acc == expect, || format!("entry ({},{})", i + 1, j + 1));
    }
    rep
}

/// `t^{2..n}_{1..n-2,n} t^{2..n-1}_{2..n-1} = t^{2..n-1}_{1..n-2} t^{2..n}_{2..n} + q t^{2..n}_{1..n-1} t^{2..n-1}_{2..n-2,n}`, `n >= 3`.
pub fn check_minor_quadratic(m: &dyn YangianModule) -> Report {
    let n = m.n();
    let mut rep = Report::new("minor quadratic relation");
    if n < 3 {
        return rep;
    }
    let range = |a: usize, b: usize| (a..=b).collect::<Vec<usize>>();
    let with_n = |mut v: Vec<usize>| {
        v.push(n);
        v
    };
    let mn = |r: Vec<usize>, c: Vec<usize>| quantum_minor(m, &r, &c);
    let lhs = mn(range(2, n), with_n(range(1, n - 2))).mul(&mn(range(2, n - 1), range(2, n - 1)));
    let rhs = mn(range(2, n - 1), range(1, n - 2))
        .mul(&mn(range(2, n), range(2, n)))
        .add(&mn(range(2, n), range(1, n - 1)).mul(&mn(range(2, n - 1), with_n(range(2, n - 2)))).scale(&m.q().pow(1)));
    rep.record(lhs == rhs, || format!("n={n}"));
    rep
}

/// The two expansions of every minor with increasing rows and columns agree.
pub fn check_minor_forms(m: &dyn YangianModule) -> Report {
    let n = m.n();
    let mut rep = Report::new("minor forms");
    for r in 1..=n {
        for c in (1..=n).combinations(r) {
            for d in (1..=n).combinations(r) {
                let a = quantum_minor_in(m, &c, &d, Some(MinorForm::Row));
                let b = quantum_minor_in(m, &c, &d, Some(MinorForm::Column));
                rep.record(a == b, || format!("{c:?},{d:?}"));
            }
        }
    }
    rep
}

/// Coproduct of minors on a two-factor tensor module:
/// `t^{a}_{b}(u) = sum_{c increasing} t^{a}_{c}(u) (x) t^{c}_{b}(u)`.
pub fn check_minor_coproduct(tm: &TensorModule) -> Report {
    let mut rep = Report::new("minor coproduct");
    let [left, right] = tm.factors() else {
        rep.record(false, || "needs exactly two factors".into());
        return rep;
    };
    let n = tm.n();
    for r in 1..=n {
        for a in (1..=n).combinations(r) {
            for b in (1..=n).combinations(r) {
                let lhs = quantum_minor(tm, &a, &b);
                let mut rhs = OperatorPoly::zero(tm.dim());
                for c in (1..=n).combinations(r) {
                    rhs = rhs.add(&quantum_minor(left, &a, &c).kron(&quantum_minor(right, &c, &b)));
                }
                rep.record(lhs == rhs, || format!("{a:?},{b:?}"));
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QValue;
    use crate::gln::GlnRep;
    use crate::gt::HighestWeight;
    use crate::yangian::module::EvalModule;

    fn eval(l: &[i64]) -> EvalModule {
        EvalModule::standard(GlnRep::build(&HighestWeight::new(l.to_vec()).unwrap(), &QValue::default()))
    }

    #[test]
    fn gl2_suites() {
        let m = eval(&[1, 0]);
        for rep in [
            check_generator_relations(&m),
            check_rtt(&m),
            check_minor_generator_relations(&m, BSideIndex::Summed),
            check_minor_centrality(&m),
            check_qdet_central(&m, true),
            check_comatrix(&m),
            check_comatrix_rtt(&m),
            check_minor_forms(&m),
        ] {
            assert!(rep.is_ok(), "{rep:?}");
        }
    }

    #[test]
    fn gl2_tensor_coproduct() {
        let t = TensorModule::pair(eval(&[1, 0]), eval(&[1, 0])).unwrap();
        assert!(check_minor_coproduct(&t).is_ok());
        assert!(check_rtt(&t).is_ok());
    }

    #[test]
    fn printed_column_index_fails() {
        let m = eval(&[1, 0, 0]);
        assert!(check_minor_generator_relations(&m, BSideIndex::Summed).is_ok());
        assert!(!check_minor_generator_relations(&m, BSideIndex::AsPrinted).is_ok());
    }

    #[test]
    fn gl3_minor_quadratic() {
        assert!(check_minor_quadratic(&eval(&[1, 0, 0])).is_ok());
        assert!(check_minor_quadratic(&eval(&[2, 1, 0])).is_ok());
    }
}
