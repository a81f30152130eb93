//! Finite-dimensional unital associative algebras presented by structure
//! constants: `e_i · e_j = Σ_k c[i][j][k] e_k`.

use crate::field::{FieldSpec, Scalar};
use crate::matrix::{fmt_vec, Matrix};
use crate::report::AxiomReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    field: FieldSpec,
    /// Dense structure constants, indexed `i * dim² + j * dim + k`.
    consts: Vec<Scalar>,
    unit: Vec<Scalar>,
}

impl Algebra {
    pub fn new(field: FieldSpec, dim: usize, consts: Vec<Scalar>, unit: Vec<Scalar>) -> Self {
        assert_eq!(consts.len(), dim * dim * dim, "structure constant count");
        assert_eq!(unit.len(), dim, "unit vector length");
        Algebra {
            dim,
            field,
            consts,
            unit,
        }
    }

    /// Build from sparse `(i, j, k, c)` triples; omitted entries are zero.
    pub fn from_sparse_consts(
        field: FieldSpec,
        dim: usize,
        triples: &[(usize, usize, usize, Scalar)],
        unit: Vec<Scalar>,
    ) -> Self {
        let mut consts = vec![field.zero(); dim * dim * dim];
        for (i, j, k, c) in triples {
            consts[i * dim * dim + j * dim + k] = c.clone();
        }
        Algebra::new(field, dim, consts, unit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.consts[i * self.dim * self.dim + j * self.dim + k]
    }

    /// The product `e_i · e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let base = i * self.dim * self.dim + j * self.dim;
        self.consts[base..base + self.dim].to_vec()
    }

    /// Bilinear product of two coordinate vectors.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].mul(&y[j]);
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] = out[k].add(&xy.mul(c));
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication `z ↦ x · z`.
    pub fn lmul(&self, x: &[Scalar]) -> Matrix {
        assert_eq!(x.len(), self.dim);
        let mut m = Matrix::zero(self.field, self.dim, self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        let cur = m.at(k, j).add(&x[i].mul(c));
                        m.set(k, j, cur);
                    }
                }
            }
        }
        m
    }

    /// Matrix of right multiplication `z ↦ z · y`.
    pub fn rmul(&self, y: &[Scalar]) -> Matrix {
        assert_eq!(y.len(), self.dim);
        let mut m = Matrix::zero(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            if y[j].is_zero() {
                continue;
            }
            for i in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        let cur = m.at(k, i).add(&y[j].mul(c));
                        m.set(k, i, cur);
                    }
                }
            }
        }
        m
    }

    pub fn lmul_basis(&self, i: usize) -> Matrix {
        let mut x = vec![self.field.zero(); self.dim];
        x[i] = self.field.one();
        self.lmul(&x)
    }

    pub fn rmul_basis(&self, j: usize) -> Matrix {
        let mut y = vec![self.field.zero(); self.dim];
        y[j] = self.field.one();
        self.rmul(&y)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// The opposite algebra: structure constants transposed in the first two
    /// indices, same unit. An involution on presentations.
    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let mut consts = vec![self.field.zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    consts[i * d * d + j * d + k] = self.c(j, i, k).clone();
                }
            }
        }
        Algebra::new(self.field, d, consts, self.unit.clone())
    }

    /// Tensor product algebra `self ⊗ other`, basis index `(i, j) ↦ i * other.dim + j`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        assert_eq!(
            self.field, other.field,
            "tensor of algebras over different fields"
        );
        let da = self.dim;
        let db = other.dim;
        let d = da * db;
        let mut consts = vec![self.field.zero(); d * d * d];
        for i1 in 0..da {
            for i2 in 0..da {
                for k1 in 0..da {
                    let ca = self.c(i1, i2, k1);
                    if ca.is_zero() {
                        continue;
                    }
                    for j1 in 0..db {
                        for j2 in 0..db {
                            for k2 in 0..db {
                                let cb = other.c(j1, j2, k2);
                                if cb.is_zero() {
                                    continue;
                                }
                                let idx =
                                    (i1 * db + j1) * d * d + (i2 * db + j2) * d + (k1 * db + k2);
                                consts[idx] = ca.mul(cb);
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![self.field.zero(); d];
        for (i, ui) in self.unit.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, uj) in other.unit.iter().enumerate() {
                if !uj.is_zero() {
                    unit[i * db + j] = ui.mul(uj);
                }
            }
        }
        Algebra::new(self.field, d, consts, unit)
    }

    pub fn check_associativity(&self, name: &str) -> AxiomReport {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let jk = self.basis_product(j, k);
                    let lhs = self.multiply(&ij, &self.basis_vector(k));
                    let rhs = self.multiply(&self.basis_vector(i), &jk);
                    if lhs != rhs {
                        return AxiomReport::fail(
                            name,
                            vec![i, j, k],
                            format!(
                                "(e{i}·e{j})·e{k} = {} but e{i}·(e{j}·e{k}) = {}",
                                fmt_vec(&lhs),
                                fmt_vec(&rhs)
                            ),
                        );
                    }
                }
            }
        }
        AxiomReport::pass(name)
    }

    pub fn check_unit(&self, name: &str) -> AxiomReport {
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            let left = self.multiply(&self.unit, &e);
            let right = self.multiply(&e, &self.unit);
            if left != e || right != e {
                return AxiomReport::fail(
                    name,
                    vec![i],
                    format!("1·e{i} = {}, e{i}·1 = {}", fmt_vec(&left), fmt_vec(&right)),
                );
            }
        }
        AxiomReport::pass(name)
    }

    // Common small algebras used throughout the fixtures and tests.

    /// The ground field as a one-dimensional algebra.
    pub fn ground_field(field: FieldSpec) -> Algebra {
        Algebra::from_sparse_consts(field, 1, &[(0, 0, 0, field.one())], vec![field.one()])
    }

    /// kⁿ with coordinatewise multiplication; basis of orthogonal idempotents.
    pub fn diagonal(field: FieldSpec, n: usize) -> Algebra {
        let triples: Vec<_> = (0..n).map(|i| (i, i, i, field.one())).collect();
        Algebra::from_sparse_consts(field, n, &triples, vec![field.one(); n])
    }

    /// Full matrix algebra M_n(k) with basis `e_{ij}` at index `i * n + j`.
    pub fn matrix_algebra(field: FieldSpec, n: usize) -> Algebra {
        let mut triples = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    // e_ij · e_jl = e_il
                    triples.push((i * n + j, j * n + l, i * n + l, field.one()));
                }
            }
        }
        let mut unit = vec![field.zero(); n * n];
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        Algebra::from_sparse_consts(field, n * n, &triples, unit)
    }

    /// Upper-triangular 2×2 matrices, basis {e11, e12, e22}.
    pub fn upper_triangular_2x2(field: FieldSpec) -> Algebra {
        let one = field.one();
        let triples = [
            (0, 0, 0, one.clone()), // e11 e11 = e11
            (0, 1, 1, one.clone()), // e11 e12 = e12
            (1, 2, 1, one.clone()), // e12 e22 = e12
            (2, 2, 2, one.clone()), // e22 e22 = e22
        ];
        let unit = vec![one.clone(), field.zero(), one];
        Algebra::from_sparse_consts(field, 3, &triples, unit)
    }
}

/// Verify that the matrix `f` is an algebra map `src → dst` on all basis
/// pairs, and that it carries the unit to the unit when `unital` is set.
///
/// A map out of `A^op` is checked by passing `src.opposite()`.
pub fn check_algebra_map(
    f: &Matrix,
    src: &Algebra,
    dst: &Algebra,
    unital: bool,
    name: &str,
) -> AxiomReport {
    assert_eq!(f.cols(), src.dim(), "algebra map domain mismatch");
    assert_eq!(f.rows(), dst.dim(), "algebra map codomain mismatch");
    if unital {
        let img = f.apply(src.unit());
        if img != dst.unit() {
            return AxiomReport::fail(
                name,
                vec![],
                format!("f(1) = {} but 1 = {}", fmt_vec(&img), fmt_vec(dst.unit())),
            );
        }
    }
    for i in 0..src.dim() {
        let fi = f.apply(&src.basis_vector(i));
        for j in 0..src.dim() {
            let fj = f.apply(&src.basis_vector(j));
            let lhs = f.apply(&src.basis_product(i, j));
            let rhs = dst.multiply(&fi, &fj);
            if lhs != rhs {
                return AxiomReport::fail(
                    name,
                    vec![i, j],
                    format!(
                        "f(e{i}·e{j}) = {} but f(e{i})·f(e{j}) = {}",
                        fmt_vec(&lhs),
                        fmt_vec(&rhs)
                    ),
                );
            }
        }
    }
    AxiomReport::pass(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_i64;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn matrix_algebra_products() {
        let m2 = Algebra::matrix_algebra(Q, 2);
        // e12 · e21 = e11
        let p = m2.multiply(&m2.basis_vector(1), &m2.basis_vector(2));
        assert_eq!(p, vec_i64(Q, &[1, 0, 0, 0]));
        // e21 · e12 = e22
        let p = m2.multiply(&m2.basis_vector(2), &m2.basis_vector(1));
        assert_eq!(p, vec_i64(Q, &[0, 0, 0, 1]));
        assert!(m2.check_associativity("assoc").passed);
        assert!(m2.check_unit("unit").passed);
    }

    #[test]
    fn unit_acts_as_identity() {
        let a = Algebra::upper_triangular_2x2(Q);
        for i in 0..a.dim() {
            let e = a.basis_vector(i);
            assert_eq!(a.multiply(a.unit(), &e), e);
            assert_eq!(a.multiply(&e, a.unit()), e);
        }
    }

    #[test]
    fn group_algebra_z2_square() {
        // k[Z2] = span{e, g} with g² = e, built by hand here.
        let kz2 = Algebra::from_sparse_consts(
            Q,
            2,
            &[
                (0, 0, 0, Q.one()),
                (0, 1, 1, Q.one()),
                (1, 0, 1, Q.one()),
                (1, 1, 0, Q.one()),
            ],
            vec![Q.one(), Q.zero()],
        );
        let g = kz2.basis_vector(1);
        assert_eq!(kz2.multiply(&g, &g), kz2.basis_vector(0));
    }

    #[test]
    fn opposite_is_an_involution() {
        let a = Algebra::matrix_algebra(Q, 2);
        assert_eq!(a.opposite().opposite(), a);
        let comm = Algebra::diagonal(Q, 3);
        assert_eq!(comm.opposite(), comm);
    }

    #[test]
    fn opposite_transposes_products() {
        let m2 = Algebra::matrix_algebra(Q, 2);
        let op = m2.opposite();
        // In M2(k)^op: e12 ∘ e21 = e21 · e12 = e22.
        let p = op.multiply(&op.basis_vector(1), &op.basis_vector(2));
        assert_eq!(p, vec_i64(Q, &[0, 0, 0, 1]));
    }

    #[test]
    fn corrupted_struct_consts_fail_associativity_with_witness() {
        let m2 = Algebra::matrix_algebra(Q, 2);
        let mut consts = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    consts.push(m2.c(i, j, k).clone());
                }
            }
        }
        consts[0] = consts[0].add(&Q.one()); // perturb c[0][0][0]
        let bad = Algebra::new(Q, 4, consts, m2.unit().to_vec());
        let report = bad.check_associativity("assoc");
        assert!(!report.passed);
        assert!(report.witness.is_some());
    }

    #[test]
    fn one_dimensional_algebra_passes() {
        let k = Algebra::ground_field(Q);
        assert!(k.check_associativity("assoc").passed);
        assert!(k.check_unit("unit").passed);
    }

    #[test]
    fn algebra_map_checks() {
        let a = Algebra::diagonal(Q, 2);
        let id = Matrix::identity(Q, 2);
        assert!(check_algebra_map(&id, &a, &a, true, "id").passed);

        let zero = Matrix::zero(Q, 2, 2);
        let r = check_algebra_map(&zero, &a, &a, true, "zero");
        assert!(!r.passed);
    }

    #[test]
    fn multiply_is_bilinear_on_basis_sums() {
        let a = Algebra::matrix_algebra(Q, 2);
        let x = a.basis_vector(0);
        let x2 = a.basis_vector(3);
        let y = a.basis_vector(1);
        let sum: Vec<Scalar> = x.iter().zip(&x2).map(|(u, v)| u.add(v)).collect();
        let lhs = a.multiply(&sum, &y);
        let rhs: Vec<Scalar> = a
            .multiply(&x, &y)
            .iter()
            .zip(&a.multiply(&x2, &y))
            .map(|(u, v)| u.add(v))
            .collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn algebra_map_against_opposite_swaps_arguments() {
        // beta-style validation: a map passes against dst iff it passes against
        // opposite(dst) with swapped arguments. Here lmul vs rmul of M2.
        let m2 = Algebra::matrix_algebra(Q, 2);
        // x ↦ transpose embedding of M2 into itself is an algebra map into M2^op.
        let n = 2;
        let transpose_map = Matrix::from_fn(Q, 4, 4, |row, col| {
            let (i, j) = (col / n, col % n);
            if row == j * n + i {
                Q.one()
            } else {
                Q.zero()
            }
        });
        assert!(check_algebra_map(&transpose_map, &m2, &m2.opposite(), true, "t").passed);
        assert!(!check_algebra_map(&transpose_map, &m2, &m2, true, "t").passed);
    }
}
