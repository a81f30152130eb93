//! Bimodules over a pair of algebras, their tensor product over a middle
//! algebra, and Hom spaces of one-sided module maps.
//!
//! Actions are stored as one matrix per basis element of the acting algebra.
//! Tensor products over the middle algebra are quotient spaces of the plain
//! tensor square, by the span of `(x·a) ⊗ y − x ⊗ (a·y)`. Hom spaces are
//! solution spaces of the intertwiner equations, presented as canonical
//! subspaces of the flattened (row-major) matrix space.

use crate::algebra::Algebra;
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::report::AxiomReport;
use crate::space::{Echelon, QuotientSpace, Subspace};

/// A vector space with a left action of `left_alg` and a commuting right
/// action of `right_alg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left_alg: Algebra,
    right_alg: Algebra,
    dim: usize,
    /// One matrix per basis element of `left_alg`.
    left_action: Vec<Matrix>,
    /// One matrix per basis element of `right_alg`.
    right_action: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        left_alg: Algebra,
        right_alg: Algebra,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Self {
        assert_eq!(left_action.len(), left_alg.dim());
        assert_eq!(right_action.len(), right_alg.dim());
        for m in left_action.iter().chain(&right_action) {
            assert_eq!(m.rows(), dim);
            assert_eq!(m.cols(), dim);
        }
        Bimodule {
            left_alg,
            right_alg,
            dim,
            left_action,
            right_action,
        }
    }

    /// The algebra itself as its regular bimodule.
    pub fn regular(alg: &Algebra) -> Self {
        let left: Vec<Matrix> = (0..alg.dim()).map(|i| alg.lmul_basis(i)).collect();
        let right: Vec<Matrix> = (0..alg.dim()).map(|j| alg.rmul_basis(j)).collect();
        Bimodule::new(alg.clone(), alg.clone(), alg.dim(), left, right)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.left_alg.field()
    }

    pub fn left_alg(&self) -> &Algebra {
        &self.left_alg
    }

    pub fn right_alg(&self) -> &Algebra {
        &self.right_alg
    }

    pub fn left_basis_action(&self, i: usize) -> &Matrix {
        &self.left_action[i]
    }

    pub fn right_basis_action(&self, j: usize) -> &Matrix {
        &self.right_action[j]
    }

    /// Action matrix of a general element of the left algebra.
    pub fn left_act(&self, a: &[Scalar]) -> Matrix {
        combine_action(self.field(), self.dim, &self.left_action, a)
    }

    pub fn right_act(&self, b: &[Scalar]) -> Matrix {
        combine_action(self.field(), self.dim, &self.right_action, b)
    }

    /// Verify the bimodule axioms: the left action is a unital
    /// representation, the right action a unital anti-representation, and
    /// the two commute.
    pub fn check(&self) -> Vec<AxiomReport> {
        let mut reports = Vec::new();
        let la = &self.left_alg;
        let ra = &self.right_alg;

        let mut rep = AxiomReport::pass("left_representation");
        'left: for i in 0..la.dim() {
            for j in 0..la.dim() {
                let lhs = self.left_action[i].mul(&self.left_action[j]);
                let rhs = self.left_act(&la.basis_product(i, j));
                if lhs != rhs {
                    rep = AxiomReport::fail(
                        "left_representation",
                        vec![i, j],
                        "λ(e_i)λ(e_j) != λ(e_i e_j)",
                    );
                    break 'left;
                }
            }
        }
        reports.push(rep);
        reports.push(if self.left_act(la.unit()).is_identity() {
            AxiomReport::pass("left_unital")
        } else {
            AxiomReport::fail("left_unital", vec![], "λ(1) != id")
        });

        let mut rep = AxiomReport::pass("right_antirepresentation");
        'right: for i in 0..ra.dim() {
            for j in 0..ra.dim() {
                // x·(e_i e_j) = (x·e_i)·e_j, i.e. ρ(e_i e_j) = ρ(e_j)ρ(e_i).
                let lhs = self.right_act(&ra.basis_product(i, j));
                let rhs = self.right_action[j].mul(&self.right_action[i]);
                if lhs != rhs {
                    rep = AxiomReport::fail(
                        "right_antirepresentation",
                        vec![i, j],
                        "ρ(e_i e_j) != ρ(e_j)ρ(e_i)",
                    );
                    break 'right;
                }
            }
        }
        reports.push(rep);
        reports.push(if self.right_act(ra.unit()).is_identity() {
            AxiomReport::pass("right_unital")
        } else {
            AxiomReport::fail("right_unital", vec![], "ρ(1) != id")
        });

        let mut rep = AxiomReport::pass("actions_commute");
        'comm: for i in 0..la.dim() {
            for j in 0..ra.dim() {
                let lr = self.left_action[i].mul(&self.right_action[j]);
                let rl = self.right_action[j].mul(&self.left_action[i]);
                if lr != rl {
                    rep = AxiomReport::fail(
                        "actions_commute",
                        vec![i, j],
                        "λ(e_i)ρ(e_j) != ρ(e_j)λ(e_i)",
                    );
                    break 'comm;
                }
            }
        }
        reports.push(rep);
        reports
    }

    /// Tensor product over the middle algebra, as a quotient of the plain
    /// tensor square with the left action of `self` and the right action of
    /// `other` descended through the projection.
    pub fn tensor_over(&self, other: &Bimodule) -> Result<(QuotientSpace, Bimodule), Error> {
        if self.right_alg != other.left_alg {
            return Err(Error::MiddleAlgebraMismatch);
        }
        let quot = tensor_quotient(
            self.field(),
            self.dim,
            other.dim,
            &self.right_action,
            &other.left_action,
        );
        let id_m = Matrix::identity(self.field(), self.dim);
        let id_n = Matrix::identity(self.field(), other.dim);
        let mut left = Vec::with_capacity(self.left_alg.dim());
        for i in 0..self.left_alg.dim() {
            let ambient = self.left_action[i].kron(&id_n);
            let descended = quot
                .descend(&ambient)
                .ok_or(Error::ActionNotDescending("tensor_over left action"))?;
            left.push(descended);
        }
        let mut right = Vec::with_capacity(other.right_alg.dim());
        for j in 0..other.right_alg.dim() {
            let ambient = id_m.kron(&other.right_action[j]);
            let descended = quot
                .descend(&ambient)
                .ok_or(Error::ActionNotDescending("tensor_over right action"))?;
            right.push(descended);
        }
        let module = Bimodule::new(
            self.left_alg.clone(),
            other.right_alg.clone(),
            quot.dim(),
            left,
            right,
        );
        Ok((quot, module))
    }
}

fn combine_action(field: FieldSpec, dim: usize, mats: &[Matrix], coeffs: &[Scalar]) -> Matrix {
    assert_eq!(mats.len(), coeffs.len(), "action coefficient mismatch");
    let mut out = Matrix::zero(field, dim, dim);
    for (c, m) in coeffs.iter().zip(mats) {
        if c.is_zero() {
            continue;
        }
        out = out.add(&m.scale(c));
    }
    out
}

/// Quotient of `k^dim_m ⊗ k^dim_n` by the middle-algebra relations
/// `span{ ρ(a)x ⊗ y − x ⊗ λ(a)y }`, where `ρ` ranges over `right_acts` and
/// `λ` over `left_acts` (one matrix per basis element of the middle algebra).
pub fn tensor_quotient(
    field: FieldSpec,
    dim_m: usize,
    dim_n: usize,
    right_acts: &[Matrix],
    left_acts: &[Matrix],
) -> QuotientSpace {
    assert_eq!(right_acts.len(), left_acts.len(), "middle algebra mismatch");
    let ambient = dim_m * dim_n;
    let mut ech = Echelon::new(field, ambient);
    for (rho, lam) in right_acts.iter().zip(left_acts) {
        for x in 0..dim_m {
            for y in 0..dim_n {
                let mut row = vec![field.zero(); ambient];
                let mut nonzero = false;
                for i in 0..dim_m {
                    let c = rho.at(i, x);
                    if !c.is_zero() {
                        row[i * dim_n + y] = row[i * dim_n + y].add(c);
                        nonzero = true;
                    }
                }
                for j in 0..dim_n {
                    let c = lam.at(j, y);
                    if !c.is_zero() {
                        row[x * dim_n + j] = row[x * dim_n + j].sub(c);
                        nonzero = true;
                    }
                }
                if nonzero {
                    ech.insert(row);
                }
            }
        }
    }
    QuotientSpace::new(ambient, ech.into_subspace())
}

/// The space of matrices `T : src → dst` with `T · src_ops[k] = dst_ops[k] · T`
/// for every `k`, as a canonical subspace of the row-major matrix space.
pub fn intertwiner_space(field: FieldSpec, src_ops: &[Matrix], dst_ops: &[Matrix]) -> Subspace {
    assert_eq!(src_ops.len(), dst_ops.len(), "operator list mismatch");
    let src_dim = src_ops.first().map_or(0, Matrix::cols);
    let dst_dim = dst_ops.first().map_or(0, Matrix::cols);
    let n = dst_dim * src_dim;
    let mut ech = Echelon::new(field, n);
    for (a, b) in src_ops.iter().zip(dst_ops) {
        // Constraint rows indexed by output coordinates (i, m):
        //   Σ_l T[i][l] A[l][m] − Σ_j B[i][j] T[j][m] = 0.
        for i in 0..dst_dim {
            for m in 0..src_dim {
                let mut row = vec![field.zero(); n];
                let mut nonzero = false;
                for l in 0..src_dim {
                    let c = a.at(l, m);
                    if !c.is_zero() {
                        row[i * src_dim + l] = row[i * src_dim + l].add(c);
                        nonzero = true;
                    }
                }
                for j in 0..dst_dim {
                    let c = b.at(i, j);
                    if !c.is_zero() {
                        row[j * src_dim + m] = row[j * src_dim + m].sub(c);
                        nonzero = true;
                    }
                }
                if nonzero {
                    ech.insert(row);
                }
            }
        }
    }
    ech.kernel_subspace()
}

/// Reassemble a flattened basis vector of an intertwiner space into a matrix.
pub fn unflatten(field: FieldSpec, dst_dim: usize, src_dim: usize, v: &[Scalar]) -> Matrix {
    assert_eq!(v.len(), dst_dim * src_dim);
    Matrix::from_fn(field, dst_dim, src_dim, |i, j| v[i * src_dim + j].clone())
}

/// Flatten a matrix to the row-major coordinate vector used by the Hom
/// subspaces.
pub fn flatten(m: &Matrix) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        v.extend(m.row(i).iter().cloned());
    }
    v
}

/// Left-module homomorphisms `m → n`: matrices commuting with the left
/// actions. Both bimodules must share their left algebra.
pub fn hom_left(m: &Bimodule, n: &Bimodule) -> Subspace {
    assert_eq!(
        m.left_alg, n.left_alg,
        "hom_left requires a common left algebra"
    );
    intertwiner_space(m.field(), &m.left_action, &n.left_action)
}

/// Right-module homomorphisms `m → n`: matrices commuting with the right
/// actions.
pub fn hom_right(m: &Bimodule, n: &Bimodule) -> Subspace {
    assert_eq!(
        m.right_alg, n.right_alg,
        "hom_right requires a common right algebra"
    );
    intertwiner_space(m.field(), &m.right_action, &n.right_action)
}

/// The dual space A* as an A-bimodule with `(c · f · a)(b) = f(abc)`:
/// the left action of `c` is precomposition with right multiplication,
/// transposed to dual-basis coordinates, and symmetrically on the right.
pub fn dual_of_algebra(a: &Algebra) -> Bimodule {
    let left: Vec<Matrix> = (0..a.dim()).map(|c| a.rmul_basis(c).transpose()).collect();
    let right: Vec<Matrix> = (0..a.dim()).map(|x| a.lmul_basis(x).transpose()).collect();
    Bimodule::new(a.clone(), a.clone(), a.dim(), left, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_passed;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn regular_bimodule_of_ground_field_tensors_to_dim_one() {
        let k = Algebra::ground_field(Q);
        let m = Bimodule::regular(&k);
        let (quot, out) = m.tensor_over(&m).unwrap();
        assert_eq!(quot.dim(), 1);
        assert!(all_passed(&out.check()));
    }

    #[test]
    fn regular_tensor_regular_over_diagonal_algebra() {
        // A ⊗_A A ≅ A for A = k×k: dimension 2.
        let a = Algebra::diagonal(Q, 2);
        let m = Bimodule::regular(&a);
        let (quot, out) = m.tensor_over(&m).unwrap();
        assert_eq!(quot.dim(), 2);
        assert!(all_passed(&out.check()));
    }

    #[test]
    fn tensor_requires_matching_middle_algebra() {
        let a = Bimodule::regular(&Algebra::diagonal(Q, 2));
        let b = Bimodule::regular(&Algebra::ground_field(Q));
        assert!(matches!(
            a.tensor_over(&b),
            Err(Error::MiddleAlgebraMismatch)
        ));
    }

    #[test]
    fn endomorphisms_of_regular_m2_as_left_module() {
        // Left-module endomorphisms of M2(k) over itself are the right
        // multiplications: dimension 4.
        let m2 = Algebra::matrix_algebra(Q, 2);
        let m = Bimodule::regular(&m2);
        let hom = hom_left(&m, &m);
        assert_eq!(hom.dim(), 4);
        // Each basis element is indeed an intertwiner.
        for i in 0..hom.dim() {
            let t = unflatten(Q, 4, 4, &hom.basis_vector(i));
            for k in 0..4 {
                let a = m2.lmul_basis(k);
                assert_eq!(t.mul(&a), a.mul(&t));
            }
        }
    }

    #[test]
    fn hom_over_trivial_algebra_is_everything() {
        let k = Algebra::ground_field(Q);
        let m = Bimodule::new(
            k.clone(),
            k.clone(),
            2,
            vec![Matrix::identity(Q, 2)],
            vec![Matrix::identity(Q, 2)],
        );
        let n = Bimodule::new(
            k.clone(),
            k.clone(),
            3,
            vec![Matrix::identity(Q, 3)],
            vec![Matrix::identity(Q, 3)],
        );
        assert_eq!(hom_left(&m, &n).dim(), 6);
    }

    #[test]
    fn schur_vanishing_for_distinct_idempotent_modules() {
        // Over k×k the two coordinate lines are non-isomorphic simples.
        let a = Algebra::diagonal(Q, 2);
        let line = |which: usize| {
            let act = |idx: usize| {
                if idx == which {
                    Matrix::identity(Q, 1)
                } else {
                    Matrix::zero(Q, 1, 1)
                }
            };
            Bimodule::new(
                a.clone(),
                a.clone(),
                1,
                vec![act(0), act(1)],
                vec![act(0), act(1)],
            )
        };
        let (l0, l1) = (line(0), line(1));
        assert_eq!(hom_left(&l0, &l1).dim(), 0);
        assert_eq!(hom_left(&l0, &l0).dim(), 1);
    }

    #[test]
    fn dual_of_algebra_satisfies_bimodule_axioms() {
        for alg in [
            Algebra::ground_field(Q),
            Algebra::diagonal(Q, 2),
            Algebra::upper_triangular_2x2(Q),
            Algebra::matrix_algebra(Q, 2),
        ] {
            let dual = dual_of_algebra(&alg);
            assert!(all_passed(&dual.check()), "dual of {alg:?}");
        }
    }

    #[test]
    fn dual_of_diagonal_action_formula() {
        // A = k×k: (c·f)(b) = f(bc). Acting by δ1 on the dual basis vector
        // δ1* gives δ1* back; acting on δ2* kills it.
        let a = Algebra::diagonal(Q, 2);
        let dual = dual_of_algebra(&a);
        let f1 = vec![Q.one(), Q.zero()];
        let f2 = vec![Q.zero(), Q.one()];
        let act = dual.left_basis_action(0);
        assert_eq!(act.apply(&f1), f1);
        assert_eq!(act.apply(&f2), vec![Q.zero(), Q.zero()]);
    }

    #[test]
    fn tensor_action_matrices_annihilate_relations() {
        let a = Algebra::diagonal(Q, 2);
        let m = Bimodule::regular(&a);
        let (quot, _) = m.tensor_over(&m).unwrap();
        let id = Matrix::identity(Q, 2);
        for i in 0..a.dim() {
            let ambient = m.left_basis_action(i).kron(&id);
            for r in 0..quot.relations().dim() {
                let img = ambient.apply(&quot.relations().basis_vector(r));
                assert!(quot.relations().contains(&img));
            }
        }
    }

    #[test]
    fn right_module_endomorphisms_mirror_left_ones() {
        // Right-module endomorphisms of the regular bimodule are the left
        // multiplications: dimension 4 again, but spanned by lmul matrices.
        let m2 = Algebra::matrix_algebra(Q, 2);
        let m = Bimodule::regular(&m2);
        let hom = hom_right(&m, &m);
        assert_eq!(hom.dim(), 4);
        for i in 0..4 {
            assert!(hom.contains(&flatten(&m2.lmul_basis(i))));
        }
    }

    #[test]
    fn hom_dimension_invariant_under_base_change() {
        // Conjugating one side by an invertible intertwiner of the regular
        // module must not change hom dimensions.
        let m2 = Algebra::matrix_algebra(Q, 2);
        let m = Bimodule::regular(&m2);
        let d = hom_left(&m, &m).dim();
        // Change basis of the underlying space by an invertible matrix that
        // commutes with nothing in particular; conjugate all actions.
        let g = crate::matrix::mat_i64(
            Q,
            &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]],
        );
        let ginv = g.inverse().unwrap();
        let conj = |mats: &Vec<Matrix>| -> Vec<Matrix> {
            mats.iter().map(|a| g.mul(a).mul(&ginv)).collect()
        };
        let m_conj = Bimodule::new(
            m2.clone(),
            m2.clone(),
            4,
            conj(&(0..4).map(|i| m2.lmul_basis(i)).collect()),
            conj(&(0..4).map(|i| m2.rmul_basis(i)).collect()),
        );
        assert_eq!(hom_left(&m, &m_conj).dim(), d);
    }
}
