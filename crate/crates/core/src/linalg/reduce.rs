use num_traits::{One, Zero};

use super::echelon::{to_dense, to_sparse, Echelon};
use super::matrix::Matrix;
use crate::arith::Rational;

/// Reduced row-echelon form together with rank and a kernel basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Gauss–Jordan elimination: columns are scanned left to right, the first
/// row with a nonzero entry becomes the pivot row and is normalised to 1.
pub fn rref_rank_kernel(m: &Matrix) -> Rref {
    let cols = m.cols();
    let mut a = m.to_dense();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        if !inv.is_one() {
            for x in a[r].iter_mut().skip(c) {
                *x *= &inv;
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let rank = pivots.len();
    let mut kernel = Vec::new();
    let mut pivot_iter = pivots.iter().peekable();
    for free in 0..cols {
        if pivot_iter.peek() == Some(&&free) {
            pivot_iter.next();
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        kernel.push(v);
    }
    Rref { reduced: Matrix::from_dense(&a), rank, pivots, kernel }
}

pub fn rank(m: &Matrix) -> usize {
    let mut e = Echelon::new();
    for i in 0..m.rows() {
        e.insert(m.row(i).iter().cloned().collect());
    }
    e.rank()
}

/// Basis of the intersection of the kernels of `ms`, all with `cols` columns.
/// An empty list yields the standard basis of the whole space.
pub fn joint_kernel(ms: &[Matrix], cols: usize) -> Vec<Vec<Rational>> {
    let mut stacked = Vec::new();
    for m in ms {
        assert_eq!(m.cols(), cols, "joint_kernel: column counts differ");
        for i in 0..m.rows() {
            if !m.row(i).is_empty() {
                stacked.push(m.row(i).iter().map(|(j, v)| (stacked.len(), *j, v.clone())).collect::<Vec<_>>());
            }
        }
    }
    let rows = stacked.len();
    let all = Matrix::from_triplets(rows, cols, stacked.into_iter().flatten());
    rref_rank_kernel(&all).kernel
}

/// Smallest subspace containing `seeds` and stable under every generator,
/// returned as a reduced row-echelon basis. Generators are applied
/// breadth-first to newly found basis vectors until a full pass adds nothing.
pub fn invariant_span(generators: &[Matrix], seeds: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let dim = match (generators.first(), seeds.first()) {
        (Some(g), _) => g.cols(),
        (None, Some(s)) => s.len(),
        (None, None) => return Vec::new(),
    };
    for g in generators {
        assert!(g.rows() == dim && g.cols() == dim, "invariant_span: generators must be square of matching size");
    }
    let columns: Vec<Matrix> = generators.iter().map(Matrix::transpose).collect();
    let mut span = Echelon::new();
    let mut frontier = Vec::new();
    for s in seeds {
        let v = to_sparse(s);
        if span.insert(v.clone()) {
            frontier.push(v);
        }
    }
    while !frontier.is_empty() && span.rank() < dim {
        let mut next = Vec::new();
        for v in &frontier {
            for g in &columns {
                let w = Matrix::apply_sparse_transposed(g, v);
                if span.insert(w.clone()) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    let basis: Vec<Vec<Rational>> = span.basis().map(|v| to_dense(v, dim)).collect();
    if basis.is_empty() {
        return basis;
    }
    let r = rref_rank_kernel(&Matrix::from_dense(&basis));
    r.reduced.to_dense().into_iter().take(r.rank).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let r = rref_rank_kernel(&Matrix::identity(3));
        assert_eq!((r.rank, r.kernel.len()), (3, 0));

        let r = rref_rank_kernel(&Matrix::zeros(2, 2));
        assert_eq!(r.rank, 0);
        assert_eq!(r.kernel, vec![v(&[1, 0]), v(&[0, 1])]);

        let r = rref_rank_kernel(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.kernel, vec![v(&[-2, 1])]);
        assert_eq!(r.reduced, m(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn joint_kernel_examples() {
        assert!(joint_kernel(&[Matrix::identity(2)], 2).is_empty());
        assert_eq!(joint_kernel(&[], 2).len(), 2);
        let e12 = m(&[&[0, 1], &[0, 0]]);
        let e21 = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(joint_kernel(&[e12.clone()], 2), vec![v(&[1, 0])]);
        assert!(joint_kernel(&[e12, e21], 2).is_empty());
    }

    #[test]
    fn invariant_span_examples() {
        assert_eq!(invariant_span(&[Matrix::identity(2)], &[v(&[1, 0])]), vec![v(&[1, 0])]);
        let e21 = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(invariant_span(&[e21], &[v(&[1, 0])]), vec![v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(invariant_span(&[], &[v(&[2, 4]), v(&[1, 2])]), vec![v(&[1, 2])]);
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows).prop_map(|d| {
            Matrix::from_dense(&d.into_iter().map(|r| r.into_iter().map(int).collect()).collect::<Vec<_>>())
        })
    }

    proptest! {
        #[test]
        fn rank_of_transpose(a in arb_matrix(4, 6)) {
            prop_assert_eq!(rref_rank_kernel(&a).rank, rref_rank_kernel(&a.transpose()).rank);
            prop_assert_eq!(rank(&a), rref_rank_kernel(&a).rank);
        }

        #[test]
        fn kernel_is_annihilated(a in arb_matrix(3, 5)) {
            let r = rref_rank_kernel(&a);
            prop_assert_eq!(r.rank + r.kernel.len(), 5);
            for k in &r.kernel {
                prop_assert!(a.mul_vec(k).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn invariant_span_is_minimal_and_stable(g in arb_matrix(4, 4), h in arb_matrix(4, 4), s in prop::collection::vec(-2i64..=2, 4)) {
            let seed: Vec<Rational> = s.into_iter().map(int).collect();
            let w = invariant_span(&[g.clone(), h.clone()], &[seed.clone()]);
            let mut e = Echelon::new();
            for b in &w { e.insert(to_sparse(b)); }
            prop_assert!(e.contains(&to_sparse(&seed)));
            for b in &w {
                prop_assert!(e.contains(&to_sparse(&g.mul_vec(b))));
                prop_assert!(e.contains(&to_sparse(&h.mul_vec(b))));
            }
            // closure from W itself must not grow
            prop_assert_eq!(invariant_span(&[g, h], &w).len(), w.len());
        }
    }

    #[test]
    fn rational_pivots_are_normalised() {
        let r = rref_rank_kernel(&Matrix::from_dense(&[vec![rat(2, 3), rat(1, 3)]]));
        assert_eq!(r.reduced.get(0, 0), int(1));
        assert_eq!(r.reduced.get(0, 1), rat(1, 2));
    }
}
