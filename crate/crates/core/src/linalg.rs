//! Dense matrices over a [`FieldSpec`] with reduced row echelon form as the
//! canonical representative of a row space.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![FieldElem(0); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<FieldElem>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Unique reduced row echelon form with zero rows dropped; two matrices
    /// have the same row space iff their rrefs are identical.
    pub fn rref(&self, fs: &FieldSpec) -> Mat {
        let mut m = self.clone();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            let Some(r) = (pivot_row..m.rows).find(|&r| m.at(r, col) != FieldElem(0)) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m.at(pivot_row, j);
                m.set(pivot_row, j, m.at(r, j));
                m.set(r, j, tmp);
            }
            let inv = fs.inv(m.at(pivot_row, col)).expect("pivot nonzero");
            for j in col..m.cols {
                m.set(pivot_row, j, fs.mul(m.at(pivot_row, j), inv));
            }
            for r2 in 0..m.rows {
                if r2 == pivot_row || m.at(r2, col) == FieldElem(0) {
                    continue;
                }
                let f = m.at(r2, col);
                for j in col..m.cols {
                    let v = fs.sub(m.at(r2, j), fs.mul(f, m.at(pivot_row, j)));
                    m.set(r2, j, v);
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        m.data.truncate(pivot_row * m.cols);
        m.rows = pivot_row;
        m
    }

    pub fn rank(&self, fs: &FieldSpec) -> usize {
        self.rref(fs).rows
    }

    /// Coordinate permutation of the codeword positions: column j of the
    /// result at position sigma(j) is column j of self.
    pub fn permute_cols(&self, sigma: &Permutation) -> Result<Mat> {
        if sigma.degree() as usize != self.cols {
            return Err(Error::DegreeMismatch(sigma.degree(), self.cols as u64));
        }
        let mut out = Mat::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, sigma.apply(j as u64) as usize, self.at(i, j));
            }
        }
        Ok(out)
    }
}

// Rows of integer-encoded field elements (polynomial coefficients base r).
impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<u64> = self.row(i).iter().map(|e| e.0).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::field;

    #[test]
    fn rref_canonical() {
        let f = field(2, 1).unwrap();
        let e = |v: u64| FieldElem(v);
        let m = Mat::from_rows(
            vec![
                vec![e(1), e(1), e(0)],
                vec![e(0), e(1), e(1)],
                vec![e(1), e(0), e(1)],
            ],
            3,
        )
        .unwrap();
        let r = m.rref(&f);
        assert_eq!(r.rows(), 2);
        // row-space invariance under row operations
        let m2 = Mat::from_rows(
            vec![vec![e(1), e(0), e(1)], vec![e(1), e(1), e(0)]],
            3,
        )
        .unwrap();
        assert_eq!(m2.rref(&f), r);
    }

    #[test]
    fn rref_gf3() {
        let f = field(3, 1).unwrap();
        let e = |v: u64| FieldElem(v);
        // [[2,1],[1,2]] is singular over GF(3) (row2 = 2*row1)
        let m = Mat::from_rows(vec![vec![e(2), e(1)], vec![e(1), e(2)]], 2).unwrap();
        assert_eq!(m.rank(&f), 1);
        let m = Mat::from_rows(vec![vec![e(2), e(1)], vec![e(1), e(1)]], 2).unwrap();
        let r = m.rref(&f);
        assert_eq!(r.rows(), 2);
        assert_eq!(r.at(0, 0), e(1));
        assert_eq!(r.at(0, 1), e(0));
        assert_eq!(r.at(1, 1), e(1));
    }
}
