use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

fn words(len: usize) -> usize {
    len.div_ceil(64)
}

/// Vector over GF(2), packed 64 entries per word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct F2Vector {
    len: usize,
    bits: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector { len, bits: vec![0; words(len)] }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = F2Vector::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = F2Vector::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = F2Vector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        let m = 1u64 << (i % 64);
        if b {
            self.bits[i / 64] |= m;
        } else {
            self.bits[i / 64] &= !m;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn add_assign(&mut self, other: &F2Vector) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn dot(&self, other: &F2Vector) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .fold(0, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Kronecker product; the left factor indexes the high part.
    pub fn tensor(&self, other: &F2Vector) -> F2Vector {
        let mut out = F2Vector::zeros(self.len * other.len);
        for i in (0..self.len).filter(|&i| self.get(i)) {
            for j in (0..other.len).filter(|&j| other.get(j)) {
                out.set(i * other.len + j, true);
            }
        }
        out
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }
}

/// Dense matrix over GF(2) with packed rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix { rows, cols, data: vec![F2Vector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// All-ones `rows x cols`.
    pub fn all_ones(rows: usize, cols: usize) -> Self {
        F2Matrix { rows, cols, data: vec![F2Vector::ones(cols); rows] }
    }

    pub fn from_rows(rows: Vec<F2Vector>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("rows of unequal length".into()));
        }
        Ok(F2Matrix { rows: rows.len(), cols, data: rows })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &F2Vector {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.data[i].set(j, b);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul_vec(&self, v: &F2Vector) -> Result<F2Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = F2Vector::zeros(self.rows);
        for (i, r) in self.data.iter().enumerate() {
            out.set(i, r.dot(v));
        }
        Ok(out)
    }

    /// Row rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> = self.data.iter().map(|r| r.bits.clone()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let (w, b) = (col / 64, 1u64 << (col % 64));
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let (head, tail) = rows.split_at_mut(rank + 1);
            let pivot = &head[rank];
            tail.par_iter_mut().filter(|r| r[w] & b != 0).for_each(|r| {
                for (x, y) in r[w..].iter_mut().zip(&pivot[w..]) {
                    *x ^= y;
                }
            });
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(what()))
    }
}

/// Kronecker product `A ⊗ B`.
pub fn f2_tensor(a: &F2Matrix, b: &F2Matrix) -> F2Matrix {
    let mut out = F2Matrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for k in 0..b.rows {
            out.data[i * b.rows + k] = a.data[i].tensor(&b.data[k]);
        }
    }
    out
}

pub fn f2_add(a: &F2Matrix, b: &F2Matrix) -> Result<F2Matrix> {
    check(a.rows == b.rows && a.cols == b.cols, || {
        format!("{}x{} + {}x{}", a.rows, a.cols, b.rows, b.cols)
    })?;
    let mut out = a.clone();
    for (r, s) in out.data.iter_mut().zip(&b.data) {
        r.add_assign(s);
    }
    Ok(out)
}

pub fn f2_mul(a: &F2Matrix, b: &F2Matrix) -> Result<F2Matrix> {
    check(a.cols == b.rows, || format!("{}x{} * {}x{}", a.rows, a.cols, b.rows, b.cols))?;
    let data = a
        .data
        .par_iter()
        .map(|r| {
            let mut acc = F2Vector::zeros(b.cols);
            for j in (0..a.cols).filter(|&j| r.get(j)) {
                acc.add_assign(&b.data[j]);
            }
            acc
        })
        .collect();
    Ok(F2Matrix { rows: a.rows, cols: b.cols, data })
}

/// `cols - rank`.
pub fn f2_nullity(m: &F2Matrix) -> usize {
    m.cols - m.rank()
}
