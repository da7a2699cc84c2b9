//! Exact sparse linear algebra over ℚ.
//!
//! Rank is computed by fraction-free (Bareiss) elimination on integer rows
//! obtained by clearing denominators, so intermediates stay exact integers.
//! Kernel bases and preimages come from exact Gauss-Jordan reduction over
//! ℚ. There is no floating point and no modular shortcut anywhere.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, entries: BTreeMap::new() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.nrows && c < self.ncols, "entry outside declared indices");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: Rational) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.ncols {
            return Err(Error::DimMismatch(format!(
                "matrix has {} columns, vector has {} entries",
                self.ncols,
                v.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.nrows];
        for ((r, c), a) in &self.entries {
            if !v[*c].is_zero() {
                out[*r] += a * &v[*c];
            }
        }
        Ok(out)
    }

    /// Rows as primitive integer vectors (denominators cleared, content divided out).
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let mut rows = vec![vec![BigInt::zero(); self.ncols]; self.nrows];
        for r in 0..self.nrows {
            let mut lcm = BigInt::one();
            for c in 0..self.ncols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    lcm = lcm.lcm(v.denom());
                }
            }
            let mut row = vec![BigInt::zero(); self.ncols];
            for c in 0..self.ncols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    row[c] = v.numer() * (&lcm / v.denom());
                }
            }
            let mut content = BigInt::zero();
            for x in &row {
                content = content.gcd(x);
            }
            if !content.is_zero() && !content.is_one() {
                for x in &mut row {
                    *x /= &content;
                }
            }
            rows[r] = row;
        }
        rows
    }

    /// Exact rank via fraction-free Bareiss elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.integer_rows();
        let (nr, nc) = (self.nrows, self.ncols);
        let mut rank = 0usize;
        let mut prev = BigInt::one();
        let mut row = 0usize;
        for col in 0..nc {
            if row >= nr {
                break;
            }
            // pick the pivot with smallest magnitude to limit growth
            let mut piv: Option<usize> = None;
            for r in row..nr {
                if !m[r][col].is_zero() {
                    piv = match piv {
                        None => Some(r),
                        Some(p) if m[r][col].abs() < m[p][col].abs() => Some(r),
                        keep => keep,
                    };
                }
            }
            let Some(p) = piv else { continue };
            m.swap(row, p);
            for r in row + 1..nr {
                for c in col + 1..nc {
                    let t = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                    m[r][c] = &t / &prev;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[row][col].clone();
            row += 1;
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form over ℚ; returns (rref rows, pivot columns).
    fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut m: Vec<Vec<Rational>> = (0..self.nrows)
            .map(|r| (0..self.ncols).map(|c| self.get(r, c)).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.ncols {
            if row >= self.nrows {
                break;
            }
            let Some(p) = (row..self.nrows).find(|r| !m[*r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for c in col..self.ncols {
                let v = &m[row][c] * &inv;
                m[row][c] = v;
            }
            for r in 0..self.nrows {
                if r != row && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in col..self.ncols {
                        let v = &m[r][c] - &factor * &m[row][c];
                        m[r][c] = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Basis of the null space.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (m, pivots) = self.rref();
        let pivot_of_col: BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, c)| (*c, r)).collect();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_of_col.contains_key(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.ncols];
            v[free] = Rational::one();
            for (col, r) in &pivot_of_col {
                v[*col] = -m[*r][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Preimage witness: some `w` with `M·w = v`, or `None` when `v` is not
    /// in the image.
    pub fn solve(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if v.len() != self.nrows {
            return Err(Error::DimMismatch(format!(
                "matrix has {} rows, vector has {} entries",
                self.nrows,
                v.len()
            )));
        }
        // RREF of the augmented matrix
        let mut aug = SparseMatrix::new(self.nrows, self.ncols + 1);
        for ((r, c), val) in &self.entries {
            aug.set(*r, *c, val.clone());
        }
        for (r, val) in v.iter().enumerate() {
            aug.set(r, self.ncols, val.clone());
        }
        let (m, pivots) = aug.rref();
        if pivots.contains(&self.ncols) {
            return Ok(None); // inconsistent
        }
        let mut w = vec![Rational::zero(); self.ncols];
        for (r, col) in pivots.iter().enumerate() {
            w[*col] = m[r][self.ncols].clone();
        }
        Ok(Some(w))
    }

    /// `true` together with a witness when `v` lies in the column span.
    pub fn in_image(&self, v: &[Rational]) -> Result<(bool, Option<Vec<Rational>>)> {
        match self.solve(v)? {
            Some(w) => Ok((true, Some(w))),
            None => Ok((false, None)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn from_rows(rows: &[&[i64]]) -> SparseMatrix {
        let nr = rows.len();
        let nc = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut m = SparseMatrix::new(nr, nc);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, rat(*v));
            }
        }
        m
    }

    #[test]
    fn identity_rank() {
        let m = from_rows(&[&[1, 0], &[0, 1]]);
        assert_eq!(m.rank(), 2);
        assert!(m.kernel().is_empty());
    }

    #[test]
    fn zero_matrix() {
        let m = SparseMatrix::new(3, 4);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel().len(), 4);
    }

    #[test]
    fn dependent_rows() {
        // hand Gaussian elimination: rank 1
        let m = from_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel().len(), 2);
        for k in m.kernel() {
            assert!(m.mul_vec(&k).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_and_witness() {
        let m = from_rows(&[&[1, 1], &[0, 1], &[1, 0]]);
        let x = vec![rat(3), rat(-2)];
        let v = m.mul_vec(&x).unwrap();
        let (ok, w) = m.in_image(&v).unwrap();
        assert!(ok);
        assert_eq!(m.mul_vec(&w.unwrap()).unwrap(), v);

        let bad = vec![rat(1), rat(0), rat(0)];
        let (ok, w) = m.in_image(&bad).unwrap();
        assert!(!ok && w.is_none());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let m = from_rows(&[&[1, 2]]);
        assert!(m.solve(&[rat(1), rat(2)]).is_err());
    }
}
