//! Subspaces with canonical bases, and quotient spaces presented by a
//! projection/section pair.
//!
//! A subspace is always stored by its reduced-echelon basis, so subspace
//! equality and membership are coordinate comparisons. A quotient picks its
//! basis from the non-pivot ambient coordinates, which makes equality of
//! quotient classes bit-exact and the section a genuine right inverse of the
//! projection.

use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// A linear subspace of an ambient coordinate space, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    field: FieldSpec,
    /// Rows form a reduced-echelon basis; no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the given vectors, canonicalised.
    pub fn from_rows(field: FieldSpec, ambient_dim: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let mut ech = Echelon::new(field, ambient_dim);
        for r in rows {
            assert_eq!(r.len(), ambient_dim, "subspace vector of wrong length");
            ech.insert(r);
        }
        ech.into_subspace()
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            field,
            basis: Matrix::zero(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            field,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.basis.row_vec(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the basis; the remainder is zero iff `v` lies in
    /// the subspace.
    fn reduce(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = rem[p].clone();
            coords.push(c.clone());
            if c.is_zero() {
                continue;
            }
            let nc = c.neg();
            for j in 0..self.ambient_dim {
                let b = self.basis.at(row, j);
                if b.is_zero() {
                    continue;
                }
                rem[j] = rem[j].add(&nc.mul(b));
            }
        }
        (coords, rem)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let (_, rem) = self.reduce(v);
        rem.iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim);
        let (coords, rem) = self.reduce(v);
        if rem.iter().all(Scalar::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    /// Linear combination of the basis with the given coordinates.
    pub fn vector_from_coords(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        self.basis.transpose().apply(coords)
    }
}

/// A presented quotient of a coordinate space by a subspace of relations.
///
/// The quotient basis is the set of non-pivot ambient coordinates of the
/// relation subspace, so `projection · section = id` exactly and
/// `kernel(projection) = relations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient_dim: usize,
    relations: Subspace,
    projection: Matrix,
    section: Matrix,
}

impl QuotientSpace {
    pub fn new(ambient_dim: usize, relations: Subspace) -> Self {
        assert_eq!(relations.ambient_dim(), ambient_dim);
        let field = relations.field();
        let pivot_flags = {
            let mut v = vec![false; ambient_dim];
            for &p in relations.pivots() {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..ambient_dim).filter(|&j| !pivot_flags[j]).collect();
        let dim = free.len();

        let mut projection = Matrix::zero(field, dim, ambient_dim);
        for (q, &j) in free.iter().enumerate() {
            projection.set(q, j, field.one());
        }
        // A pivot coordinate maps to minus the free part of its relation row.
        for (row, &p) in relations.pivots().iter().enumerate() {
            for (q, &j) in free.iter().enumerate() {
                let c = relations.basis().at(row, j);
                if !c.is_zero() {
                    projection.set(q, p, c.neg());
                }
            }
        }

        let mut section = Matrix::zero(field, ambient_dim, dim);
        for (q, &j) in free.iter().enumerate() {
            section.set(j, q, field.one());
        }

        QuotientSpace {
            ambient_dim,
            relations,
            projection,
            section,
        }
    }

    /// Quotient of a space by the zero subspace: projection and section are
    /// identities.
    pub fn trivial(field: FieldSpec, ambient_dim: usize) -> Self {
        QuotientSpace::new(ambient_dim, Subspace::zero(field, ambient_dim))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.relations.field()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }

    pub fn lift(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.section.apply(v)
    }

    /// Push an ambient endomorphism down to the quotient, checking that it
    /// preserves the relations. Returns `None` when it does not descend.
    pub fn descend(&self, map: &Matrix) -> Option<Matrix> {
        descend_between(self, self, map)
    }
}

/// Descend an ambient map `src_ambient -> dst_ambient` to a map between the
/// two quotients, verifying that source relations land in target relations.
pub fn descend_between(src: &QuotientSpace, dst: &QuotientSpace, map: &Matrix) -> Option<Matrix> {
    assert_eq!(map.cols(), src.ambient_dim(), "descend shape mismatch");
    assert_eq!(map.rows(), dst.ambient_dim(), "descend shape mismatch");
    for i in 0..src.relations.dim() {
        let r = src.relations.basis_vector(i);
        if !dst.relations.contains(&map.apply(&r)) {
            return None;
        }
    }
    Some(dst.projection.mul(map).mul(&src.section))
}

/// Incrementally maintained reduced-echelon basis. Rows are inserted one at
/// a time and the full RREF invariant is restored after each insertion, so
/// memory stays bounded by the rank even when the row stream is huge.
pub struct Echelon {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: FieldSpec, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduce `v` against the current basis in place.
    pub fn reduce(&self, v: &mut [Scalar]) {
        assert_eq!(v.len(), self.cols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            let nc = c.neg();
            for (j, b) in row.iter().enumerate() {
                if !b.is_zero() {
                    v[j] = v[j].add(&nc.mul(b));
                }
            }
        }
    }

    /// Insert a row; returns true when it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero leading entry");
        if !inv.is_one() {
            for s in v.iter_mut() {
                if !s.is_zero() {
                    *s = s.mul(&inv);
                }
            }
        }
        // Clear the new pivot column from existing rows.
        for row in self.rows.iter_mut() {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            let nc = c.neg();
            for (j, b) in v.iter().enumerate() {
                if !b.is_zero() {
                    row[j] = row[j].add(&nc.mul(b));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// The accumulated row space as a canonical subspace.
    pub fn into_subspace(self) -> Subspace {
        let basis = Matrix::from_rows_or_empty(self.field, self.cols, self.rows);
        Subspace {
            ambient_dim: self.cols,
            field: self.field,
            basis,
            pivots: self.pivots,
        }
    }

    /// Kernel of the stacked rows, viewing them as a linear system on the
    /// column space: the usual free-column construction.
    pub fn kernel_subspace(&self) -> Subspace {
        let mut pivot_row = vec![None; self.cols];
        for (r, &p) in self.pivots.iter().enumerate() {
            pivot_row[p] = Some(r);
        }
        let mut basis = Vec::new();
        for j in 0..self.cols {
            if pivot_row[j].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[j] = self.field.one();
            for (r, &p) in self.pivots.iter().enumerate() {
                v[p] = self.rows[r][j].neg();
            }
            basis.push(v);
        }
        Subspace::from_rows(self.field, self.cols, basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{mat_i64, vec_i64};

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn quotient_of_plane_by_antidiagonal() {
        let rel = Subspace::from_rows(Q, 2, vec![vec_i64(Q, &[1, -1])]);
        let q = QuotientSpace::new(2, rel);
        assert_eq!(q.dim(), 1);
        // (1,0) and (0,1) land in the same class.
        assert_eq!(
            q.project(&vec_i64(Q, &[1, 0])),
            q.project(&vec_i64(Q, &[0, 1]))
        );
        assert!(q.projection().mul(q.section()).is_identity());
    }

    #[test]
    fn quotient_by_zero_and_by_everything() {
        let q = QuotientSpace::trivial(Q, 4);
        assert_eq!(q.dim(), 4);
        assert!(q.projection().is_identity());

        let q = QuotientSpace::new(3, Subspace::full(Q, 3));
        assert_eq!(q.dim(), 0);
    }

    #[test]
    fn projection_kills_exactly_the_relations() {
        let rel = Subspace::from_rows(
            Q,
            4,
            vec![vec_i64(Q, &[1, 2, 0, 1]), vec_i64(Q, &[0, 1, 1, 0])],
        );
        let q = QuotientSpace::new(4, rel.clone());
        assert_eq!(q.dim(), 2);
        for i in 0..rel.dim() {
            let image = q.project(&rel.basis_vector(i));
            assert!(image.iter().all(Scalar::is_zero));
        }
        assert!(q.projection().mul(q.section()).is_identity());
        // kernel(projection) = relations
        assert_eq!(q.projection().kernel(), rel);
    }

    #[test]
    fn coords_round_trip() {
        let s = Subspace::from_rows(Q, 3, vec![vec_i64(Q, &[1, 0, 2]), vec_i64(Q, &[0, 1, -1])]);
        let v = vec_i64(Q, &[3, 2, 4]);
        let coords = s.coords_of(&v).unwrap();
        assert_eq!(s.vector_from_coords(&coords), v);
        assert!(s.coords_of(&vec_i64(Q, &[0, 0, 1])).is_none());
    }

    #[test]
    fn descend_rejects_relation_breakers() {
        let rel = Subspace::from_rows(Q, 2, vec![vec_i64(Q, &[1, -1])]);
        let q = QuotientSpace::new(2, rel);
        // Swap preserves the span of (1,-1).
        let swap = mat_i64(Q, &[&[0, 1], &[1, 0]]);
        assert!(q.descend(&swap).is_some());
        // Projection onto the first coordinate does not.
        let proj = mat_i64(Q, &[&[1, 0], &[0, 0]]);
        assert!(q.descend(&proj).is_none());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // The incremental echelon agrees with batch rref on the same rows.
            #[test]
            fn echelon_matches_batch_rref(entries in prop::collection::vec(-3i64..4, 12)) {
                let rows: Vec<Vec<Scalar>> = entries
                    .chunks(4)
                    .map(|c| c.iter().map(|&n| Q.from_i64(n)).collect())
                    .collect();
                let via_subspace = Subspace::from_rows(Q, 4, rows.clone());
                let (rref, pivots) = Matrix::from_rows(Q, rows).rref();
                let rref_rows: Vec<Vec<Scalar>> =
                    (0..pivots.len()).map(|i| rref.row_vec(i)).collect();
                let via_rref = Subspace::from_rows(Q, 4, rref_rows);
                prop_assert_eq!(via_subspace, via_rref);
            }

            // Quotient invariants hold for arbitrary relation spans.
            #[test]
            fn quotient_invariants(entries in prop::collection::vec(-3i64..4, 10)) {
                let rows: Vec<Vec<Scalar>> = entries
                    .chunks(5)
                    .map(|c| c.iter().map(|&n| Q.from_i64(n)).collect())
                    .collect();
                let rel = Subspace::from_rows(Q, 5, rows);
                let rank = rel.dim();
                let q = QuotientSpace::new(5, rel.clone());
                prop_assert_eq!(q.dim(), 5 - rank);
                prop_assert!(q.projection().mul(q.section()).is_identity());
                for i in 0..rel.dim() {
                    let img = q.project(&rel.basis_vector(i));
                    prop_assert!(img.iter().all(Scalar::is_zero));
                }
            }
        }
    }
}
