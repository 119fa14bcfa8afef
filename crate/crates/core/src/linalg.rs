//! Dense exact linear algebra over field scalars (ℚ or 𝔽_p), used by slice
//! homology over fields and by the brute-force Λ engine.

use crate::gring::{RingTag, Scalar};

/// A dense matrix of field scalars. Rows index equations, columns unknowns.
#[derive(Debug, Clone)]
pub struct FieldMat {
    pub ring: RingTag,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl FieldMat {
    pub fn zero(ring: RingTag, rows: usize, cols: usize) -> FieldMat {
        assert!(ring.is_field());
        FieldMat {
            ring,
            rows,
            cols,
            data: vec![Scalar::zero(ring); rows * cols],
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        let cur = self.at(i, j).clone();
        self.set(i, j, cur.add(v).unwrap());
    }

    /// In-place row echelon reduction; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                self.data.swap(r * self.cols + j, pr * self.cols + j);
            }
            let inv = self.at(r, c).inverse().unwrap();
            for j in 0..self.cols {
                let v = self.at(r, j).mul(&inv).unwrap();
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let f = self.at(i, c).clone();
                    for j in 0..self.cols {
                        let sub = f.mul(self.at(r, j)).unwrap();
                        let v = self.at(i, j).sub(&sub).unwrap();
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Basis of the null space, as column vectors of length `cols`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let mut basis = Vec::new();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        for &fc in &free {
            let mut v = vec![Scalar::zero(self.ring); self.cols];
            v[fc] = Scalar::one(self.ring);
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = m.at(ri, fc).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self · x = b`; returns one solution if the system is consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = FieldMat::zero(self.ring, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.row_reduce();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(self.ring); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(ri, self.cols).clone();
        }
        Some(x)
    }
}

/// Rank of the subspace spanned by `vecs` (each of equal length) over `ring`.
pub fn span_rank(ring: RingTag, vecs: &[Vec<Scalar>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    let cols = vecs[0].len();
    let mut m = FieldMat::zero(ring, vecs.len(), cols);
    for (i, v) in vecs.iter().enumerate() {
        for (j, x) in v.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    m.rank()
}
