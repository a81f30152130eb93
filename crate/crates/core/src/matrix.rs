//! Dense matrices over an exact field, with the elimination routines the
//! rest of the crate is built on.
//!
//! Matrices act on column vectors, `(A*B)(x) = A(B(x))`, and the Kronecker
//! product uses the index convention `(i ⊗ j) ↦ i * dim_b + j` everywhere.
//! Elimination is plain Gauss-Jordan; entries are mostly zero in the tensor
//! computations downstream, so every inner loop skips zero coefficients.

use std::fmt;

use crate::field::{FieldSpec, Scalar};
use crate::space::Subspace;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            entries.extend(row);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            field,
            entries,
        }
    }

    /// Like [`Matrix::from_rows`] but with an explicit column count, so an
    /// empty row list still has the right shape.
    pub fn from_rows_or_empty(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        if rows.is_empty() {
            return Matrix::zero(field, 0, cols);
        }
        let m = Matrix::from_rows(field, rows);
        assert_eq!(m.cols, cols, "row length does not match declared cols");
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            entries,
        }
    }

    /// Column vector as a single-column matrix.
    pub fn column(field: FieldSpec, v: &[Scalar]) -> Self {
        Matrix::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        self.entries[i * self.cols + j] = s;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.at(i, j);
                if i == j && !e.is_one() {
                    return false;
                }
                if i != j && !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        assert_eq!(self.field, rhs.field, "matrix product field mismatch");
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix apply shape mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() || v[k].is_zero() {
                    continue;
                }
                out[i] = out[i].add(&a.mul(&v[k]));
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Matrix {
        let entries = self.entries.iter().map(Scalar::neg).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|e| e.mul(c)).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries,
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    /// Kronecker product with the global index convention
    /// `(i ⊗ j) ↦ i * b.rows + j` on rows and likewise on columns, so that
    /// `kron(a, b) · (x ⊗ y) = (a·x) ⊗ (b·y)`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "kron field mismatch");
        let mut out = Matrix::zero(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.at(j, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * rhs.rows + j, k * rhs.cols + l, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                rhs.at(i, j - self.cols).clone()
            }
        })
    }

    /// Reduced row echelon form together with the pivot columns.
    /// The shape is preserved (zero rows are kept in place at the bottom).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // Find a row at or below pivot_row with a nonzero entry here.
            let found = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(r) = found else { continue };
            m.swap_rows(pivot_row, r);
            let inv = m.at(pivot_row, col).inv().expect("nonzero pivot");
            m.scale_row(pivot_row, &inv);
            for r2 in 0..m.rows {
                if r2 == pivot_row {
                    continue;
                }
                let c = m.at(r2, col).clone();
                if c.is_zero() {
                    continue;
                }
                m.row_axpy(r2, pivot_row, &c.neg());
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the solution space of `self · x = 0`, as a canonical subspace.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row_idx, &p) in pivots.iter().enumerate() {
                v[p] = Some(row_idx);
            }
            v
        };
        let mut basis = Vec::new();
        for j in 0..self.cols {
            if pivot_set[j].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[j] = self.field.one();
            for (row_idx, &p) in pivots.iter().enumerate() {
                v[p] = r.at(row_idx, j).neg();
            }
            basis.push(v);
        }
        Subspace::from_rows(self.field, self.cols, basis)
    }

    /// Any particular solution of `self · x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let aug = self.hstack(&Matrix::column(self.field, b));
        let (r, pivots) = aug.rref();
        // Inconsistent iff some pivot lands in the last column.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row_idx, &p) in pivots.iter().enumerate() {
            x[p] = r.at(row_idx, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let aug = self.hstack(&Matrix::identity(self.field, self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(self.field, self.rows, self.rows, |i, j| {
            r.at(i, self.cols + j).clone()
        }))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        if c.is_one() {
            return;
        }
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            if !self.entries[idx].is_zero() {
                self.entries[idx] = self.entries[idx].mul(c);
            }
        }
    }

    /// row[dst] += c * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.entries[src * self.cols + j].clone();
            if s.is_zero() {
                continue;
            }
            let idx = dst * self.cols + j;
            self.entries[idx] = self.entries[idx].add(&c.mul(&s));
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Render a vector for witness messages.
pub fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Parse helper used across tests and fixtures: rows of integers over `field`.
pub fn mat_i64(field: FieldSpec, rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(
        field,
        rows.iter()
            .map(|r| r.iter().map(|&n| field.from_i64(n)).collect())
            .collect(),
    )
}

/// Integer column vector over `field`.
pub fn vec_i64(field: FieldSpec, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&n| field.from_i64(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rref_rank_one() {
        let m = mat_i64(Q, &[&[2, 4], &[1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, mat_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_identity_is_fixed() {
        let m = Matrix::identity(Q, 3);
        let (r, pivots) = m.rref();
        assert!(r.is_identity());
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_over_f2() {
        let f2 = FieldSpec::prime_field(2).unwrap();
        let m = mat_i64(f2, &[&[1, 1], &[1, 1]]);
        let (r, _) = m.rref();
        assert_eq!(r, mat_i64(f2, &[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn rref_is_idempotent_and_canonical() {
        let m = mat_i64(Q, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let (r1, _) = m.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
        // Same row space, different presentation.
        let m2 = mat_i64(Q, &[&[5, 7, 9], &[1, 2, 3], &[3, 3, 3]]);
        let (r3, _) = m2.rref();
        assert_eq!(r1, r3);
    }

    #[test]
    fn kernel_examples() {
        let m = mat_i64(Q, &[&[1, 1], &[1, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&vec_i64(Q, &[1, -1])));

        assert_eq!(Matrix::identity(Q, 2).kernel().dim(), 0);
        assert_eq!(Matrix::zero(Q, 2, 3).kernel().dim(), 3);
    }

    #[test]
    fn rank_nullity_holds() {
        let m = mat_i64(Q, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(Q, 2);
        assert_eq!(id.solve(&vec_i64(Q, &[3, 4])), Some(vec_i64(Q, &[3, 4])));

        let m = mat_i64(Q, &[&[1, 1]]);
        let x = m.solve(&vec_i64(Q, &[5])).unwrap();
        assert_eq!(m.apply(&x), vec_i64(Q, &[5]));

        let m = mat_i64(Q, &[&[1], &[1]]);
        assert_eq!(m.solve(&vec_i64(Q, &[0, 1])), None);
    }

    #[test]
    fn inverse_round_trip() {
        let m = mat_i64(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
        assert!(mat_i64(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn kron_identity() {
        let k = Matrix::identity(Q, 2).kron(&Matrix::identity(Q, 3));
        assert!(k.is_identity());
        assert_eq!(k.rows(), 6);
    }

    #[test]
    fn kron_scalar_block() {
        let c = mat_i64(Q, &[&[3]]);
        let m = mat_i64(Q, &[&[1, 2], &[3, 4]]);
        assert_eq!(c.kron(&m), m.scale(&Q.from_i64(3)));
    }

    fn small_vec(len: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-4i64..5, len)
    }

    proptest! {
        // kron(a,b)·(x⊗y) = (a·x)⊗(b·y) under the fixed index convention.
        #[test]
        fn kron_respects_tensor_of_vectors(
            a_rows in small_vec(6),
            b_rows in small_vec(6),
            x in small_vec(2),
            y in small_vec(3),
        ) {
            let a = Matrix::from_fn(Q, 3, 2, |i, j| Q.from_i64(a_rows[i * 2 + j]));
            let b = Matrix::from_fn(Q, 2, 3, |i, j| Q.from_i64(b_rows[i * 3 + j]));
            let xv = vec_i64(Q, &x);
            let yv = vec_i64(Q, &y);
            let mut xy = Vec::new();
            for xi in &xv {
                for yj in &yv {
                    xy.push(xi.mul(yj));
                }
            }
            let lhs = a.kron(&b).apply(&xy);
            let ax = a.apply(&xv);
            let by = b.apply(&yv);
            let mut rhs = Vec::new();
            for xi in &ax {
                for yj in &by {
                    rhs.push(xi.mul(yj));
                }
            }
            prop_assert_eq!(lhs, rhs);
        }

        // rref canonicality: scaling rows does not change the canonical form.
        #[test]
        fn rref_invariant_under_row_scaling(entries in small_vec(9), scale in 1i64..5) {
            let m = Matrix::from_fn(Q, 3, 3, |i, j| Q.from_i64(entries[i * 3 + j]));
            let scaled = Matrix::from_fn(Q, 3, 3, |i, j| {
                Q.from_i64(entries[i * 3 + j] * scale)
            });
            prop_assert_eq!(m.rref().0, scaled.rref().0);
        }
    }
}
