//! Exact Gaussian elimination over Q and Q(ζ_N): ranks, kernels and span
//! membership.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::CycloNum;

pub trait Field: Clone + PartialEq + Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Only called on nonzero values.
    fn recip(&self) -> Self;
}

impl Field for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn recip(&self) -> Self {
        BigRational::recip(self)
    }
}

impl Field for CycloNum {
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn recip(&self) -> Self {
        self.inv().expect("pivot is nonzero")
    }
}

/// Brings `rows` to reduced row echelon form in place and returns the pivot
/// columns. Zero rows are removed.
pub fn row_reduce<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        if rows[r][col] != rows[r][col].one_like() {
            let inv = rows[r][col].recip();
            for v in rows[r][col..].iter_mut() {
                *v = v.mul(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *v = v.sub(&factor.mul(p));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut rows = rows.to_vec();
    row_reduce(&mut rows).len()
}

/// Basis of `{x : M x = 0}` for an `m × ncols` matrix given by rows.
pub fn kernel<F: Field>(matrix: &[Vec<F>], zero: &F) -> Vec<Vec<F>> {
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut rows = matrix.to_vec();
    let pivots = row_reduce(&mut rows);
    let one = zero.one_like();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); ncols];
        v[free] = one.clone();
        for (row, &p) in rows.iter().zip(&pivots) {
            if !row[free].is_zero() {
                v[p] = zero.sub(&row[free]);
            }
        }
        basis.push(v);
    }
    basis
}

/// The row space of a set of vectors, held in reduced echelon form.
#[derive(Debug, Clone)]
pub struct Span<F> {
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    ambient: usize,
}

impl<F: Field> Span<F> {
    pub fn new(vectors: &[Vec<F>], ambient: usize) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length mismatch");
        let mut rows = vectors.to_vec();
        let pivots = row_reduce(&mut rows);
        Span {
            rows,
            pivots,
            ambient,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Coordinates of `v` against the echelon basis, or `None` when `v` lies
    /// outside the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let factor = rest[p].clone();
            if !factor.is_zero() {
                for (x, r) in rest.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = x.sub(&factor.mul(r));
                    }
                }
            }
            coords.push(factor);
        }
        rest.iter().all(Field::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Rebuild a vector from echelon coordinates.
    pub fn combine(&self, coords: &[F], zero: &F) -> Vec<F> {
        let mut out = vec![zero.clone(); self.ambient];
        for (c, row) in coords.iter().zip(&self.rows) {
            for (o, r) in out.iter_mut().zip(row) {
                *o = o.add(&c.mul(r));
            }
        }
        out
    }
}
