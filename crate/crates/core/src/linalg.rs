//! Dense linear algebra over a prime field.

use alloc::vec::Vec;

use crate::field::PrimeField;

/// A dense matrix over `GF(p)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl DenseMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field,
            rows,
            cols,
            data: alloc::vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zero(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, field.reduce(x as i64));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let k = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = k.inv(self.get(r, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let x = k.mul(self.get(r, j), inv);
                self.set(r, j, x);
            }
            for i in 0..self.rows {
                let f = self.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let x = k.sub(self.get(i, j), k.mul(f, self.get(r, j)));
                    self.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// A basis of the right kernel `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let k = self.field;
        let mut basis = Vec::new();
        let mut is_pivot = alloc::vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = alloc::vec![0; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = k.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        let k = self.field;
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(0, |acc, j| k.add(acc, k.mul(self.get(i, j), v[j])))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let k = PrimeField::new(7).unwrap();
        let m = DenseMatrix::from_rows(k, &[alloc::vec![1, 2, 3], alloc::vec![2, 4, 6], alloc::vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(|&x| x == 0));
    }

    #[test]
    fn empty_shapes() {
        let k = PrimeField::new(5).unwrap();
        let m = DenseMatrix::zero(k, 0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel().len(), 3);
    }
}
