use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::echelon::SparseVec;
use crate::arith::Rational;

/// Sparse exact matrix; each row holds `(column, value)` pairs sorted by
/// column with no stored zeros, so derived equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(n, n);
        }
        Matrix { rows: n, cols: n, data: (0..n).map(|i| vec![(i, c.clone())]).collect() }
    }

    pub fn diagonal(entries: Vec<Rational>) -> Self {
        let n = entries.len();
        let data = entries
            .into_iter()
            .enumerate()
            .map(|(i, c)| if c.is_zero() { vec![] } else { vec![(i, c)] })
            .collect();
        Matrix { rows: n, cols: n, data }
    }

    /// Builds from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); rows];
        for (i, j, v) in triplets {
            assert!(i < rows && j < cols, "triplet ({i}, {j}) outside {rows}x{cols}");
            *acc[i].entry(j).or_insert_with(Rational::zero) += v;
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn from_dense(dense: &[Vec<Rational>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let data = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged dense matrix");
                r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect()
            })
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.data
            .iter()
            .map(|row| {
                let mut d = vec![Rational::zero(); self.cols];
                for (j, v) in row {
                    d[*j] = v.clone();
                }
                d
            })
            .collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.data[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, j, v) in self.triplets() {
            data[j].push((i, v.clone()));
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        let data = self.data.iter().map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.combine(other, Rational::one())
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.combine(other, -Rational::one())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Matrix, c: &Rational) -> Matrix {
        self.combine(other, c.clone())
    }

    fn combine(&self, other: &Matrix, c: Rational) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| merge_rows(a, b, &c))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        *acc.entry(*j).or_insert_with(Rational::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Matrix { rows: self.rows, cols: other.cols, data }
    }

    /// `ab - zeta * ba`.
    pub fn q_commutator(a: &Matrix, b: &Matrix, zeta: &Rational) -> Matrix {
        a.mul(b).add_scaled(&b.mul(a), &-zeta.clone())
    }

    pub fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
        a.mul(b).sub(&b.mul(a))
    }

    /// Kronecker product; the row index of `(i, k)` is `i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for arow in &self.data {
            for brow in &other.data {
                let mut row = Vec::with_capacity(arow.len() * brow.len());
                for (j, a) in arow {
                    for (l, b) in brow {
                        row.push((j * other.cols + l, a * b));
                    }
                }
                data.push(row);
            }
        }
        Matrix { rows: self.rows * other.rows, cols: self.cols * other.cols, data }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "shape mismatch in matrix-vector product");
        self.data
            .iter()
            .map(|row| row.iter().fold(Rational::zero(), |acc, (j, a)| acc + a * &v[*j]))
            .collect()
    }

    /// Applies the matrix to a sparse vector. `self` is passed transposed
    /// (`columns`) so only the touched columns are visited.
    pub fn apply_sparse_transposed(columns: &Matrix, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v {
            for (i, a) in &columns.data[*j] {
                *out.entry(*i).or_insert_with(Rational::zero) += a * x;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

fn merge_rows(a: &[(usize, Rational)], b: &[(usize, Rational)], c: &Rational) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut k) = (0, 0);
    while i < a.len() || k < b.len() {
        let take_a = k >= b.len() || (i < a.len() && a[i].0 < b[k].0);
        let take_b = i >= a.len() || (k < b.len() && b[k].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = &b[k].1 * c;
            if !v.is_zero() {
                out.push((b[k].0, v));
            }
            k += 1;
        } else {
            let v = &a[i].1 + &b[k].1 * c;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            k += 1;
        }
    }
    out
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `{rows, cols, entries: [[i, j, "p/q"], ...]}` with 0-based indices.
impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<(usize, usize, String)> =
            self.triplets().map(|(i, j, v)| (i, j, v.to_string())).collect();
        let mut st = s.serialize_struct("Matrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn product_and_sum() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[1, 0]]));
        assert_eq!(a.add(&b), m(&[&[1, 3], &[1, 1]]));
        assert_eq!(a.sub(&a), Matrix::zeros(2, 2));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn kron_layout() {
        let a = m(&[&[1, 2]]);
        let b = m(&[&[0], &[3]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        assert_eq!(k, m(&[&[0, 0], &[3, 6]]));
    }

    #[test]
    fn json_triplets() {
        let a = Matrix::from_triplets(2, 3, [(1, 2, rat(-1, 2))]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"{"rows":2,"cols":3,"entries":[[1,2,"-1/2"]]}"#);
    }

    #[test]
    fn sparse_application_matches_dense() {
        let a = m(&[&[1, 2, 0], &[0, 0, 3], &[4, 0, 5]]);
        let mut v = SparseVec::new();
        v.insert(0, int(1));
        v.insert(2, int(-1));
        let w = Matrix::apply_sparse_transposed(&a.transpose(), &v);
        let dense = a.mul_vec(&[int(1), int(0), int(-1)]);
        for (i, x) in dense.iter().enumerate() {
            assert_eq!(w.get(&i).cloned().unwrap_or_else(|| int(0)), *x);
        }
    }
}
