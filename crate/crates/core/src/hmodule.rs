//! Modules over a Hopf algebroid: induced bimodule structure, the monoidal
//! product, intertwiner spaces, isomorphism search, and the fusion
//! isomorphisms between the two presentations of `H ⊗ M` and `M ⊗ H`.

use std::sync::Arc;

use crate::bialgebroid::first_col_diff;
use crate::bimodule::{intertwiner_space, tensor_quotient, unflatten, Bimodule};
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::hopf::HopfAlgebroid;
use crate::matrix::Matrix;
use crate::report::AxiomReport;
use crate::space::{descend_between, QuotientSpace, Subspace};

/// A left H-module presented by one action matrix per basis element of H.
#[derive(Clone, Debug)]
pub struct HModule {
    parent: Arc<HopfAlgebroid>,
    dim: usize,
    action: Vec<Matrix>,
}

/// An H-module map, kept with its endpoints' dimensions for sanity.
#[derive(Clone, Debug)]
pub struct HModuleMap {
    pub src_dim: usize,
    pub dst_dim: usize,
    pub matrix: Matrix,
}

/// Result of the monoidal product: the module together with its carrier
/// quotient, which downstream checks need for explicit element chasing.
#[derive(Clone, Debug)]
pub struct TensorModule {
    pub module: HModule,
    pub carrier: QuotientSpace,
}

/// Outcome of the deterministic isomorphism search. Over Q the search is
/// conclusive once the coefficient grid is large enough for the degree of
/// the determinant; over F_p it is conclusive when the whole coefficient
/// space was enumerated.
#[derive(Clone, Debug)]
pub enum IsoSearch {
    Found(HModuleMap),
    /// No isomorphism exists (certified).
    NoneConclusive,
    /// The candidate budget ran out before the certifying grid was covered.
    Exhausted,
}

impl IsoSearch {
    pub fn found(&self) -> Option<&HModuleMap> {
        match self {
            IsoSearch::Found(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, IsoSearch::Found(_))
    }
}

/// Budget for [`HModule::find_iso`].
#[derive(Clone, Copy, Debug)]
pub struct IsoSearchOptions {
    /// Maximum coefficient-box radius to enumerate over Q.
    pub max_radius: i64,
    /// Hard cap on the number of candidate combinations.
    pub max_candidates: usize,
}

impl Default for IsoSearchOptions {
    fn default() -> Self {
        IsoSearchOptions {
            max_radius: 16,
            max_candidates: 50_000,
        }
    }
}

impl HModule {
    pub fn new(parent: Arc<HopfAlgebroid>, dim: usize, action: Vec<Matrix>) -> Result<Self, Error> {
        let dh = parent.bialgebroid().total().dim();
        if action.len() != dh {
            return Err(Error::DimensionMismatch {
                context: "module action family",
                expected: dh,
                actual: action.len(),
            });
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    context: "module action matrix",
                    expected: dim,
                    actual: m.rows(),
                });
            }
        }
        Ok(HModule {
            parent,
            dim,
            action,
        })
    }

    /// H acting on itself by left multiplication.
    pub fn regular(parent: &Arc<HopfAlgebroid>) -> Self {
        let total = parent.bialgebroid().total();
        let action = (0..total.dim()).map(|i| total.lmul_basis(i)).collect();
        HModule {
            parent: Arc::clone(parent),
            dim: total.dim(),
            action,
        }
    }

    /// The base algebra with `h · a = ε(hα(a))`: the unit object of the
    /// monoidal category.
    pub fn base_module(parent: &Arc<HopfAlgebroid>) -> Self {
        let bia = parent.bialgebroid();
        HModule {
            parent: Arc::clone(parent),
            dim: bia.base().dim(),
            action: bia.base_action_matrices(),
        }
    }

    pub fn parent(&self) -> &Arc<HopfAlgebroid> {
        &self.parent
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.parent.field()
    }

    pub fn basis_action(&self, h: usize) -> &Matrix {
        &self.action[h]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Action matrix of a general element of H.
    pub fn act_of(&self, h: &[Scalar]) -> Matrix {
        let mut out = Matrix::zero(self.field(), self.dim, self.dim);
        for (c, m) in h.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    pub fn same_parent(&self, other: &HModule) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) || *self.parent == *other.parent
    }

    /// Unital-representation axioms.
    pub fn check(&self) -> Vec<AxiomReport> {
        let total = self.parent.bialgebroid().total();
        let mut rep = AxiomReport::pass("module_representation");
        'outer: for i in 0..total.dim() {
            for j in 0..total.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.act_of(&total.basis_product(i, j));
                if lhs != rhs {
                    rep = AxiomReport::fail(
                        "module_representation",
                        vec![i, j],
                        "ρ(e_i)ρ(e_j) != ρ(e_i e_j)",
                    );
                    break 'outer;
                }
            }
        }
        let unital = if self.act_of(total.unit()).is_identity() {
            AxiomReport::pass("module_unital")
        } else {
            AxiomReport::fail("module_unital", vec![], "ρ(1_H) != id")
        };
        vec![rep, unital]
    }

    /// The A-bimodule induced by `a · m · b = (α(a)β(b)) · m`.
    pub fn induced_bimodule(&self) -> Bimodule {
        let bia = self.parent.bialgebroid();
        let da = bia.base().dim();
        let left: Vec<Matrix> = (0..da).map(|a| self.act_of(&bia.alpha_basis(a))).collect();
        let right: Vec<Matrix> = (0..da).map(|b| self.act_of(&bia.beta_basis(b))).collect();
        Bimodule::new(
            bia.base().clone(),
            bia.base().clone(),
            self.dim,
            left,
            right,
        )
    }

    /// Monoidal product of H-modules: carrier `M ⊗_A N` (through the induced
    /// bimodule structures) with the diagonal action through the Δ-lift.
    /// Well-definedness, lift-independence and the module axioms are all
    /// verified; failures indicate invalid parent data.
    pub fn tensor_h(&self, other: &HModule) -> Result<TensorModule, Error> {
        if !self.same_parent(other) {
            return Err(Error::ParentMismatch);
        }
        let bia = self.parent.bialgebroid();
        let da = bia.base().dim();
        let dh = bia.total().dim();
        let field = self.field();

        let right_acts: Vec<Matrix> = (0..da).map(|a| self.act_of(&bia.beta_basis(a))).collect();
        let left_acts: Vec<Matrix> = (0..da).map(|a| other.act_of(&bia.alpha_basis(a))).collect();
        let carrier = tensor_quotient(field, self.dim, other.dim, &right_acts, &left_acts);

        let ambient_of = |terms: &[(usize, usize, Scalar)]| -> Matrix {
            let mut out = Matrix::zero(field, self.dim * other.dim, self.dim * other.dim);
            for (p, q, c) in terms {
                let k = self.action[*p].kron(&other.action[*q]);
                out = out.add(&k.scale(c));
            }
            out
        };

        let mut action = Vec::with_capacity(dh);
        for h in 0..dh {
            let terms = bia.lift_terms(&bia.total().basis_vector(h));
            let ambient = ambient_of(&terms);
            let descended = carrier
                .descend(&ambient)
                .ok_or(Error::ActionNotDescending("tensor_h action"))?;
            action.push(descended);
        }

        // Lift-independence: a relation-valued shift of the Δ-lift must not
        // change the descended action.
        let hh_relations = bia.hh().relations();
        for r in 0..hh_relations.dim() {
            let rv = hh_relations.basis_vector(r);
            let mut terms = Vec::new();
            for p in 0..dh {
                for q in 0..dh {
                    let c = &rv[p * dh + q];
                    if !c.is_zero() {
                        terms.push((p, q, c.clone()));
                    }
                }
            }
            let ambient = ambient_of(&terms);
            let shift = carrier.projection().mul(&ambient).mul(carrier.section());
            if !shift.is_zero() {
                return Err(Error::ActionNotDescending("tensor_h lift-independence"));
            }
        }

        let module = HModule::new(Arc::clone(&self.parent), carrier.dim(), action)?;
        let checks = module.check();
        if !crate::report::all_passed(&checks) {
            return Err(Error::InvalidHopfData("tensor_h module axioms"));
        }
        Ok(TensorModule { module, carrier })
    }

    /// The intertwiner space `Hom_H(self, other)` as a canonical subspace of
    /// the flattened matrix space.
    pub fn hom_h(&self, other: &HModule) -> Subspace {
        assert!(self.same_parent(other), "hom_h requires a common parent");
        intertwiner_space(self.field(), &self.action, &other.action)
    }

    /// Deterministic search for an invertible intertwiner. Tries the Hom
    /// basis, then prefix sums, then integer coefficient boxes of growing
    /// radius. Over Q a full grid of radius `dim` certifies non-existence
    /// (the determinant is a polynomial of degree `dim` per coefficient);
    /// over F_p exhausting the coefficient space does.
    pub fn find_iso(&self, other: &HModule, opts: IsoSearchOptions) -> IsoSearch {
        if self.dim != other.dim {
            return IsoSearch::NoneConclusive;
        }
        if self.dim == 0 {
            return IsoSearch::Found(HModuleMap {
                src_dim: 0,
                dst_dim: 0,
                matrix: Matrix::zero(self.field(), 0, 0),
            });
        }
        let hom = self.hom_h(other);
        let d = hom.dim();
        if d == 0 {
            return IsoSearch::NoneConclusive;
        }
        let field = self.field();
        let basis: Vec<Matrix> = (0..d)
            .map(|k| unflatten(field, other.dim, self.dim, &hom.basis_vector(k)))
            .collect();

        let mut tried = 0usize;
        let check = |coeffs: &[i64]| -> Option<HModuleMap> {
            let mut t = Matrix::zero(field, other.dim, self.dim);
            for (c, b) in coeffs.iter().zip(&basis) {
                if *c != 0 {
                    t = t.add(&b.scale(&field.from_i64(*c)));
                }
            }
            if t.inverse().is_some() {
                Some(HModuleMap {
                    src_dim: self.dim,
                    dst_dim: other.dim,
                    matrix: t,
                })
            } else {
                None
            }
        };

        // Single basis elements, then prefix sums.
        for k in 0..d {
            let mut coeffs = vec![0i64; d];
            coeffs[k] = 1;
            tried += 1;
            if let Some(m) = check(&coeffs) {
                return IsoSearch::Found(m);
            }
        }
        for k in 1..=d {
            let mut coeffs = vec![0i64; d];
            for c in coeffs.iter_mut().take(k) {
                *c = 1;
            }
            tried += 1;
            if let Some(m) = check(&coeffs) {
                return IsoSearch::Found(m);
            }
        }

        // Growing coefficient boxes; negative coefficients are redundant
        // over F_p, where the box saturates at the whole field.
        let (signed, conclusive_radius) = match field {
            FieldSpec::Rationals => (true, self.dim as i64),
            FieldSpec::PrimeField(p) => (false, (p - 1) as i64),
        };
        let max_radius = opts.max_radius.min(conclusive_radius.max(1));
        'boxes: for r in 1..=max_radius {
            let low = if signed { -r } else { 0 };
            let mut coeffs = vec![low; d];
            loop {
                // Only the shell of the box: inf-norm exactly r.
                if coeffs.iter().any(|&c| c.abs() == r) {
                    tried += 1;
                    if tried > opts.max_candidates {
                        break 'boxes;
                    }
                    if let Some(m) = check(&coeffs) {
                        return IsoSearch::Found(m);
                    }
                }
                // Mixed-radix increment; rolling over ends this box.
                let mut pos = 0;
                loop {
                    if pos == d {
                        if r >= conclusive_radius {
                            return IsoSearch::NoneConclusive;
                        }
                        continue 'boxes;
                    }
                    if coeffs[pos] < r {
                        coeffs[pos] += 1;
                        for c in coeffs.iter_mut().take(pos) {
                            *c = low;
                        }
                        break;
                    }
                    pos += 1;
                }
            }
        }
        IsoSearch::Exhausted
    }
}

/// The two presentations of `H ⊗ M` (or `M ⊗ H`) with the mutually inverse
/// equivariant maps between them.
#[derive(Clone, Debug)]
pub struct FusionIso {
    /// The one-sided presentation (`⊗_{A^op}`, action by multiplication on H).
    pub op_module: HModule,
    pub op_carrier: QuotientSpace,
    /// The diagonal presentation (`⊗_A`, action through Δ).
    pub diag_module: HModule,
    pub diag_carrier: QuotientSpace,
    pub forward: Matrix,
    pub backward: Matrix,
}

/// Fusion operator for `H ⊗ M`:
/// `h ⊗_{A^op} m ↦ h₁ ⊗_A h₂·m`, inverse `h ⊗_A m ↦ S⁻¹(S(h)₂) ⊗_{A^op} S(h)₁·m`.
pub fn fusion_right(m: &HModule) -> Result<FusionIso, Error> {
    let parent = Arc::clone(m.parent());
    let bia = parent.bialgebroid();
    let total = bia.total();
    let field = m.field();
    let (da, dh, dm) = (bia.base().dim(), total.dim(), m.dim());

    // H ⊗_{A^op} M: relations hβ(a) ⊗ m − h ⊗ β(a)·m.
    let right_acts: Vec<Matrix> = (0..da).map(|a| total.rmul(&bia.beta_basis(a))).collect();
    let left_acts: Vec<Matrix> = (0..da).map(|a| m.act_of(&bia.beta_basis(a))).collect();
    let op_carrier = tensor_quotient(field, dh, dm, &right_acts, &left_acts);

    let id_m = Matrix::identity(field, dm);
    let mut op_action = Vec::with_capacity(dh);
    for h in 0..dh {
        let ambient = total.lmul_basis(h).kron(&id_m);
        let a = op_carrier
            .descend(&ambient)
            .ok_or(Error::ActionNotDescending("fusion_right op action"))?;
        op_action.push(a);
    }
    let op_module = HModule::new(Arc::clone(&parent), op_carrier.dim(), op_action)?;

    let diag = m_regular_tensor(m)?;

    // Forward on the ambient tensor: e_i ⊗ e_j ↦ Σ Δ(e_i) legs.
    let mut forward_amb = Matrix::zero(field, dh * dm, dh * dm);
    for i in 0..dh {
        for (p, q, c) in bia.lift_terms(&total.basis_vector(i)) {
            let act_q = m.basis_action(q);
            for j in 0..dm {
                for k in 0..dm {
                    let w = act_q.at(k, j);
                    if !w.is_zero() {
                        let cur = forward_amb.at(p * dm + k, i * dm + j).add(&c.mul(w));
                        forward_amb.set(p * dm + k, i * dm + j, cur);
                    }
                }
            }
        }
    }
    let forward = descend_between(&op_carrier, &diag.carrier, &forward_amb)
        .ok_or(Error::ActionNotDescending("fusion_right forward map"))?;

    // Backward: e_i ⊗ e_j ↦ Σ over Δ(S(e_i)) legs: S⁻¹(leg₂) ⊗ leg₁·m.
    let mut backward_amb = Matrix::zero(field, dh * dm, dh * dm);
    for i in 0..dh {
        let s_i = parent.antipode().col_vec(i);
        for (p, q, c) in bia.lift_terms(&s_i) {
            let sinv_q = parent.antipode_inv().col_vec(q);
            let act_p = m.basis_action(p);
            for (u, su) in sinv_q.iter().enumerate() {
                if su.is_zero() {
                    continue;
                }
                let cu = c.mul(su);
                for j in 0..dm {
                    for k in 0..dm {
                        let w = act_p.at(k, j);
                        if !w.is_zero() {
                            let cur = backward_amb.at(u * dm + k, i * dm + j).add(&cu.mul(w));
                            backward_amb.set(u * dm + k, i * dm + j, cur);
                        }
                    }
                }
            }
        }
    }
    let backward = descend_between(&diag.carrier, &op_carrier, &backward_amb)
        .ok_or(Error::ActionNotDescending("fusion_right backward map"))?;

    finish_fusion(op_module, op_carrier, diag, forward, backward)
}

/// Fusion operator for `M ⊗ H`:
/// `m ⊗_{A^op} h ↦ h₁·m ⊗_A h₂`, inverse `m ⊗_A h ↦ S⁻¹(h)₂·m ⊗_{A^op} S(S⁻¹(h)₁)`.
pub fn fusion_left(m: &HModule) -> Result<FusionIso, Error> {
    let parent = Arc::clone(m.parent());
    let bia = parent.bialgebroid();
    let total = bia.total();
    let field = m.field();
    let (da, dh, dm) = (bia.base().dim(), total.dim(), m.dim());

    // M ⊗_{A^op} H: relations α(a)·m ⊗ h − m ⊗ hα(a).
    let right_acts: Vec<Matrix> = (0..da).map(|a| m.act_of(&bia.alpha_basis(a))).collect();
    let left_acts: Vec<Matrix> = (0..da).map(|a| total.rmul(&bia.alpha_basis(a))).collect();
    let op_carrier = tensor_quotient(field, dm, dh, &right_acts, &left_acts);

    let id_m = Matrix::identity(field, dm);
    let mut op_action = Vec::with_capacity(dh);
    for h in 0..dh {
        let ambient = id_m.kron(&total.lmul_basis(h));
        let a = op_carrier
            .descend(&ambient)
            .ok_or(Error::ActionNotDescending("fusion_left op action"))?;
        op_action.push(a);
    }
    let op_module = HModule::new(Arc::clone(&parent), op_carrier.dim(), op_action)?;

    let diag = regular_tensor_m(m)?;

    let mut forward_amb = Matrix::zero(field, dm * dh, dm * dh);
    for i in 0..dh {
        for (p, q, c) in bia.lift_terms(&total.basis_vector(i)) {
            let act_p = m.basis_action(p);
            for j in 0..dm {
                for k in 0..dm {
                    let w = act_p.at(k, j);
                    if !w.is_zero() {
                        let cur = forward_amb.at(k * dh + q, j * dh + i).add(&c.mul(w));
                        forward_amb.set(k * dh + q, j * dh + i, cur);
                    }
                }
            }
        }
    }
    let forward = descend_between(&op_carrier, &diag.carrier, &forward_amb)
        .ok_or(Error::ActionNotDescending("fusion_left forward map"))?;

    let mut backward_amb = Matrix::zero(field, dm * dh, dm * dh);
    for i in 0..dh {
        let sinv_i = parent.antipode_inv().col_vec(i);
        for (p, q, c) in bia.lift_terms(&sinv_i) {
            let s_p = parent.antipode().col_vec(p);
            let act_q = m.basis_action(q);
            for (u, su) in s_p.iter().enumerate() {
                if su.is_zero() {
                    continue;
                }
                let cu = c.mul(su);
                for j in 0..dm {
                    for k in 0..dm {
                        let w = act_q.at(k, j);
                        if !w.is_zero() {
                            let cur = backward_amb.at(k * dh + u, j * dh + i).add(&cu.mul(w));
                            backward_amb.set(k * dh + u, j * dh + i, cur);
                        }
                    }
                }
            }
        }
    }
    let backward = descend_between(&diag.carrier, &op_carrier, &backward_amb)
        .ok_or(Error::ActionNotDescending("fusion_left backward map"))?;

    finish_fusion(op_module, op_carrier, diag, forward, backward)
}

fn m_regular_tensor(m: &HModule) -> Result<TensorModule, Error> {
    let regular = HModule::regular(m.parent());
    regular.tensor_h(m)
}

fn regular_tensor_m(m: &HModule) -> Result<TensorModule, Error> {
    let regular = HModule::regular(m.parent());
    m.tensor_h(&regular)
}

fn finish_fusion(
    op_module: HModule,
    op_carrier: QuotientSpace,
    diag: TensorModule,
    forward: Matrix,
    backward: Matrix,
) -> Result<FusionIso, Error> {
    if !forward.mul(&backward).is_identity() || !backward.mul(&forward).is_identity() {
        return Err(Error::InvalidHopfData(
            "fusion maps are not mutually inverse",
        ));
    }
    let dh = op_module.parent().bialgebroid().total().dim();
    for h in 0..dh {
        let lhs = forward.mul(op_module.basis_action(h));
        let rhs = diag.module.basis_action(h).mul(&forward);
        if first_col_diff(&lhs, &rhs).is_some() {
            return Err(Error::InvalidHopfData(
                "fusion forward map is not equivariant",
            ));
        }
    }
    Ok(FusionIso {
        op_module,
        op_carrier,
        diag_module: diag.module,
        diag_carrier: diag.carrier,
        forward,
        backward,
    })
}
