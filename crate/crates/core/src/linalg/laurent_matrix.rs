use std::collections::BTreeMap;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::matrix::Matrix;
use crate::arith::LaurentPoly;

/// Dense matrix of Laurent polynomials. It is interchangeable with its
/// coefficient decomposition `M(u) = sum_e u^e M_e`, and `M(u) = 0` exactly
/// when every `M_e` vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn from_coefficients(rows: usize, cols: usize, coeffs: &BTreeMap<i32, Matrix>) -> Self {
        let mut out = Self::zeros(rows, cols);
        for (e, m) in coeffs {
            assert_eq!((m.rows(), m.cols()), (rows, cols), "coefficient shape mismatch");
            for (i, j, v) in m.triplets() {
                out.entries[i * cols + j].add_term(*e, v.clone());
            }
        }
        out
    }

    pub fn coefficients(&self) -> BTreeMap<i32, Matrix> {
        let mut trip: BTreeMap<i32, Vec<_>> = BTreeMap::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                for (e, c) in self.get(i, j).terms() {
                    trip.entry(e).or_default().push((i, j, c.clone()));
                }
            }
        }
        trip.into_iter().map(|(e, t)| (e, Matrix::from_triplets(self.rows, self.cols, t))).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        LaurentMatrix { rows: self.rows, cols: self.cols, entries }
    }
}

/// Same triplet layout as [`Matrix`], with a Laurent polynomial object in
/// place of each rational string.
impl Serialize for LaurentMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut entries = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let p = self.get(i, j);
                if !p.is_zero() {
                    entries.push((i, j, p));
                }
            }
        }
        let mut st = s.serialize_struct("LaurentMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}
