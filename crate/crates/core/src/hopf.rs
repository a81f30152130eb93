//! Hopf algebroids: a bialgebroid together with an invertible antipode, and
//! the derived automorphism φ of the base algebra.

use crate::bialgebroid::{first_col_diff, Bialgebroid};
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{fmt_vec, Matrix};
use crate::report::AxiomReport;

#[derive(Clone, Debug)]
pub struct HopfAlgebroid {
    bia: Bialgebroid,
    antipode: Matrix,
    antipode_inv: Matrix,
    /// True when the inverse antipode was not supplied and had to be
    /// computed by matrix inversion.
    antipode_inv_computed: bool,
}

impl PartialEq for HopfAlgebroid {
    fn eq(&self, other: &Self) -> bool {
        // Provenance of the inverse is bookkeeping, not structure.
        self.bia == other.bia
            && self.antipode == other.antipode
            && self.antipode_inv == other.antipode_inv
    }
}

impl Eq for HopfAlgebroid {}

/// The automorphism φ of A with `Sα = βφ` and its companion identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMap {
    pub phi: Matrix,
    pub phi_inv: Matrix,
}

impl HopfAlgebroid {
    /// Bundle a bialgebroid with its antipode. When `antipode_inv` is absent
    /// it is computed by inverting the matrix (and flagged, so descriptor
    /// emitters can surface a warning).
    pub fn new(
        bia: Bialgebroid,
        antipode: Matrix,
        antipode_inv: Option<Matrix>,
    ) -> Result<Self, Error> {
        let dh = bia.total().dim();
        if antipode.rows() != dh || antipode.cols() != dh {
            return Err(Error::DimensionMismatch {
                context: "antipode",
                expected: dh,
                actual: antipode.rows(),
            });
        }
        let (antipode_inv, computed) = match antipode_inv {
            Some(m) => {
                if m.rows() != dh || m.cols() != dh {
                    return Err(Error::DimensionMismatch {
                        context: "antipode_inv",
                        expected: dh,
                        actual: m.rows(),
                    });
                }
                (m, false)
            }
            None => (
                antipode.inverse().ok_or(Error::NotInvertible("antipode"))?,
                true,
            ),
        };
        Ok(HopfAlgebroid {
            bia,
            antipode,
            antipode_inv,
            antipode_inv_computed: computed,
        })
    }

    pub fn bialgebroid(&self) -> &Bialgebroid {
        &self.bia
    }

    pub fn field(&self) -> FieldSpec {
        self.bia.field()
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn antipode_inv_was_computed(&self) -> bool {
        self.antipode_inv_computed
    }

    /// Same bundle with a different Δ-lift (tensor caches shared).
    pub fn with_delta_lift(&self, delta_lift: Matrix) -> Self {
        HopfAlgebroid {
            bia: self.bia.with_delta_lift(delta_lift),
            antipode: self.antipode.clone(),
            antipode_inv: self.antipode_inv.clone(),
            antipode_inv_computed: self.antipode_inv_computed,
        }
    }

    pub fn s_of(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(h)
    }

    pub fn s_inv_of(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.antipode_inv.apply(h)
    }

    /// The antipode axioms of the defining data, in dependency order.
    pub fn check_antipode(&self) -> Vec<AxiomReport> {
        vec![
            self.check_s_invertible(),
            self.check_s_antiautomorphism(),
            self.check_s_beta_alpha(),
            self.check_antipode_axiom_1(),
            self.check_antipode_axiom_2(),
        ]
    }

    fn check_s_invertible(&self) -> AxiomReport {
        let name = "antipode_invertible";
        if self.antipode.mul(&self.antipode_inv).is_identity()
            && self.antipode_inv.mul(&self.antipode).is_identity()
        {
            AxiomReport::pass(name)
        } else {
            AxiomReport::fail(name, vec![], "S∘S⁻¹ or S⁻¹∘S is not the identity")
        }
    }

    fn check_s_antiautomorphism(&self) -> AxiomReport {
        let name = "antipode_antiautomorphism";
        let total = self.bia.total();
        let s_unit = self.s_of(total.unit());
        if s_unit != total.unit() {
            return AxiomReport::fail(name, vec![], format!("S(1) = {} != 1", fmt_vec(&s_unit)));
        }
        for i in 0..total.dim() {
            let si = self.antipode.col_vec(i);
            for j in 0..total.dim() {
                let sj = self.antipode.col_vec(j);
                let lhs = self.s_of(&total.basis_product(i, j));
                let rhs = total.multiply(&sj, &si);
                if lhs != rhs {
                    return AxiomReport::fail(
                        name,
                        vec![i, j],
                        format!(
                            "S(e{i}e{j}) = {} but S(e{j})S(e{i}) = {}",
                            fmt_vec(&lhs),
                            fmt_vec(&rhs)
                        ),
                    );
                }
            }
        }
        AxiomReport::pass(name)
    }

    fn check_s_beta_alpha(&self) -> AxiomReport {
        let name = "antipode_beta_alpha";
        let composed = self.antipode.mul(self.bia.beta());
        if let Some(a) = first_col_diff(&composed, self.bia.alpha()) {
            AxiomReport::fail(
                name,
                vec![a],
                format!(
                    "S(β(e{a})) = {} but α(e{a}) = {}",
                    fmt_vec(&composed.col_vec(a)),
                    fmt_vec(&self.bia.alpha().col_vec(a))
                ),
            )
        } else {
            AxiomReport::pass(name)
        }
    }

    /// `S(h₁)₁ h₂ ⊗_A S(h₁)₂ = 1_H ⊗_A S(h)`.
    fn check_antipode_axiom_1(&self) -> AxiomReport {
        let name = "antipode_axiom_1";
        let total = self.bia.total();
        let dh = total.dim();
        let hh = self.bia.hh();
        for h in 0..dh {
            let mut lhs = vec![self.field().zero(); dh * dh];
            for (p, q, c) in self.bia.lift_terms(&total.basis_vector(h)) {
                // p = h₁, q = h₂; expand Δ(S(h₁)) and multiply its first leg by h₂.
                let s_p = self.antipode.col_vec(p);
                for (u, v, d) in self.bia.lift_terms(&s_p) {
                    let coeff = c.mul(&d);
                    let uv = total.basis_product(u, q);
                    for (k, w) in uv.iter().enumerate() {
                        if !w.is_zero() {
                            lhs[k * dh + v] = lhs[k * dh + v].add(&coeff.mul(w));
                        }
                    }
                }
            }
            let mut rhs = vec![self.field().zero(); dh * dh];
            let s_h = self.antipode.col_vec(h);
            for (k, u) in total.unit().iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (v, s) in s_h.iter().enumerate() {
                    if !s.is_zero() {
                        rhs[k * dh + v] = rhs[k * dh + v].add(&u.mul(s));
                    }
                }
            }
            let pl = hh.project(&lhs);
            let pr = hh.project(&rhs);
            if pl != pr {
                return AxiomReport::fail(
                    name,
                    vec![h],
                    format!(
                        "S((e{h})₁)₁(e{h})₂ ⊗ S((e{h})₁)₂ projects to {} but 1 ⊗ S(e{h}) to {}",
                        fmt_vec(&pl),
                        fmt_vec(&pr)
                    ),
                );
            }
        }
        AxiomReport::pass(name)
    }

    /// `(S⁻¹h₂)₁ ⊗_A (S⁻¹h₂)₂ h₁ = S⁻¹(h) ⊗_A 1_H`.
    fn check_antipode_axiom_2(&self) -> AxiomReport {
        let name = "antipode_axiom_2";
        let total = self.bia.total();
        let dh = total.dim();
        let hh = self.bia.hh();
        for h in 0..dh {
            let mut lhs = vec![self.field().zero(); dh * dh];
            for (p, q, c) in self.bia.lift_terms(&total.basis_vector(h)) {
                let sinv_q = self.antipode_inv.col_vec(q);
                for (u, v, d) in self.bia.lift_terms(&sinv_q) {
                    let coeff = c.mul(&d);
                    let vp = total.basis_product(v, p);
                    for (k, w) in vp.iter().enumerate() {
                        if !w.is_zero() {
                            lhs[u * dh + k] = lhs[u * dh + k].add(&coeff.mul(w));
                        }
                    }
                }
            }
            let mut rhs = vec![self.field().zero(); dh * dh];
            let sinv_h = self.antipode_inv.col_vec(h);
            for (u, s) in sinv_h.iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                for (k, un) in total.unit().iter().enumerate() {
                    if !un.is_zero() {
                        rhs[u * dh + k] = rhs[u * dh + k].add(&s.mul(un));
                    }
                }
            }
            let pl = hh.project(&lhs);
            let pr = hh.project(&rhs);
            if pl != pr {
                return AxiomReport::fail(
                    name,
                    vec![h],
                    format!(
                        "(S⁻¹(e{h})₂)₁ ⊗ (S⁻¹(e{h})₂)₂(e{h})₁ projects to {} but S⁻¹(e{h}) ⊗ 1 to {}",
                        fmt_vec(&pl),
                        fmt_vec(&pr)
                    ),
                );
            }
        }
        AxiomReport::pass(name)
    }

    /// Derive φ from the antipode: applying ε to `Sα = βφ` and using
    /// `ε∘β = id` gives `φ = ε∘S∘α`. Fails when the result is not
    /// invertible or does not satisfy `Sα = βφ`.
    pub fn compute_phi(&self) -> Result<PhiMap, Error> {
        let phi = self.bia.counit().mul(&self.antipode).mul(self.bia.alpha());
        let phi_inv = phi.inverse().ok_or(Error::NotInvertible("phi"))?;
        let s_alpha = self.antipode.mul(self.bia.alpha());
        let beta_phi = self.bia.beta().mul(&phi);
        if s_alpha != beta_phi {
            return Err(Error::InvalidHopfData("Sα != βφ for the computed φ"));
        }
        Ok(PhiMap { phi, phi_inv })
    }

    /// The φ identities: `Sα = βφ`, `φεS⁻¹ = εS`, `S²β = βφ`, `εS² = φε`,
    /// and the twisted intertwining `φ(h·a) = S²(h)·φ(a)`.
    pub fn check_phi(&self, p: &PhiMap) -> Vec<AxiomReport> {
        let mut reports = Vec::new();
        let bia = &self.bia;
        let s2 = self.antipode.mul(&self.antipode);

        reports.push(if p.phi.apply(bia.base().unit()) == bia.base().unit() {
            AxiomReport::pass("phi_unital")
        } else {
            AxiomReport::fail("phi_unital", vec![], "φ(1) != 1")
        });

        let s_alpha = self.antipode.mul(bia.alpha());
        let beta_phi = bia.beta().mul(&p.phi);
        reports.push(match first_col_diff(&s_alpha, &beta_phi) {
            None => AxiomReport::pass("phi_s_alpha"),
            Some(a) => AxiomReport::fail("phi_s_alpha", vec![a], "Sα != βφ"),
        });

        let lhs = p.phi.mul(bia.counit()).mul(&self.antipode_inv);
        let rhs = bia.counit().mul(&self.antipode);
        reports.push(match first_col_diff(&lhs, &rhs) {
            None => AxiomReport::pass("phi_eps_sinv"),
            Some(h) => AxiomReport::fail("phi_eps_sinv", vec![h], "φεS⁻¹ != εS"),
        });

        let lhs = s2.mul(bia.beta());
        let rhs = bia.beta().mul(&p.phi);
        reports.push(match first_col_diff(&lhs, &rhs) {
            None => AxiomReport::pass("phi_s2_beta"),
            Some(a) => AxiomReport::fail("phi_s2_beta", vec![a], "S²β != βφ"),
        });

        let lhs = bia.counit().mul(&s2);
        let rhs = p.phi.mul(bia.counit());
        reports.push(match first_col_diff(&lhs, &rhs) {
            None => AxiomReport::pass("phi_eps_s2"),
            Some(h) => AxiomReport::fail("phi_eps_s2", vec![h], "εS² != φε"),
        });

        // φ(h·a) = S²(h)·φ(a), through the base action.
        let mut twisted = AxiomReport::pass("phi_twisted_module");
        'outer: for h in 0..bia.total().dim() {
            let act_h = bia.base_action_basis(h);
            let s2_h = s2.col_vec(h);
            let act_s2h = bia.counit().mul(&bia.total().lmul(&s2_h)).mul(bia.alpha());
            let lhs = p.phi.mul(&act_h);
            let rhs = act_s2h.mul(&p.phi);
            if let Some(a) = first_col_diff(&lhs, &rhs) {
                twisted = AxiomReport::fail(
                    "phi_twisted_module",
                    vec![h, a],
                    format!(
                        "φ(e{h}·e{a}) = {} but S²(e{h})·φ(e{a}) = {}",
                        fmt_vec(&lhs.col_vec(a)),
                        fmt_vec(&rhs.col_vec(a))
                    ),
                );
                break 'outer;
            }
        }
        reports.push(twisted);
        reports
    }

    /// The full ordered suite: bialgebroid axioms, antipode axioms, then the
    /// φ construction and identities.
    pub fn check_all(&self) -> Vec<AxiomReport> {
        let mut reports = self.bia.check_all();
        reports.extend(self.check_antipode());
        match self.compute_phi() {
            Ok(p) => {
                reports.push(AxiomReport::pass("phi_construction"));
                reports.extend(self.check_phi(&p));
            }
            Err(e) => {
                reports.push(AxiomReport::fail("phi_construction", vec![], e.to_string()));
            }
        }
        reports
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cyclic_group_table, groupoid_fixture, hopf_algebra_fixture};
    use crate::report::all_passed;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn antipode_suite_passes_on_fixtures() {
        let z2 = hopf_algebra_fixture(&cyclic_group_table(2), Q).unwrap();
        assert!(all_passed(&z2.check_antipode()));
        let groupoid = groupoid_fixture(2, Q).unwrap();
        assert!(all_passed(&groupoid.check_antipode()));
    }

    /// Antipodes of a Hopf algebroid are not unique: twisting the flip
    /// antipode of the pair groupoid by an invertible diagonal, or the
    /// antipode of a group algebra by a character, satisfies every displayed
    /// axiom. Both twists must therefore pass.
    #[test]
    fn twisted_antipodes_are_genuine_antipodes() {
        // Diagonal twist on the pair groupoid: S(g_ij) = (u_j/u_i) g_ji.
        let groupoid = groupoid_fixture(2, Q).unwrap();
        let mut s = Matrix::zero(Q, 4, 4);
        s.set(0, 0, Q.one());
        s.set(2, 1, Q.from_i64(2));
        s.set(1, 2, Q.from_i64(2).inv().unwrap());
        s.set(3, 3, Q.one());
        let s_inv = s.inverse().unwrap();
        let twisted = HopfAlgebroid::new(groupoid.bialgebroid().clone(), s, Some(s_inv)).unwrap();
        assert!(all_passed(&twisted.check_antipode()));
        let phi = twisted.compute_phi().unwrap();
        assert!(all_passed(&twisted.check_phi(&phi)));

        // Sign twist on kZ2: S(g) = −g.
        let z2 = hopf_algebra_fixture(&cyclic_group_table(2), Q).unwrap();
        let mut s = Matrix::identity(Q, 2);
        s.set(1, 1, Q.from_i64(-1));
        let s_inv = s.clone();
        let twisted = HopfAlgebroid::new(z2.bialgebroid().clone(), s, Some(s_inv)).unwrap();
        assert!(all_passed(&twisted.check_antipode()));
    }

    #[test]
    fn identity_map_fails_axiom_one_on_noncommutative_total() {
        // S = id is invertible and fixes the α = β images, but it is not an
        // anti-automorphism of M2, and the first displayed identity fails too.
        let groupoid = groupoid_fixture(2, Q).unwrap();
        let id = Matrix::identity(Q, 4);
        let bad = HopfAlgebroid::new(groupoid.bialgebroid().clone(), id.clone(), Some(id)).unwrap();
        let reports = bad.check_antipode();
        assert!(reports[0].passed, "invertibility holds");
        assert!(!reports[1].passed, "anti-automorphism fails");
        assert!(reports[2].passed, "S∘β = α holds");
        assert!(!reports[3].passed, "first antipode identity fails");
    }

    #[test]
    fn mismatched_inverse_fails_invertibility_first() {
        let groupoid = groupoid_fixture(2, Q).unwrap();
        let s = groupoid.antipode().clone();
        let wrong_inv = s.scale(&Q.from_i64(2));
        let bad = HopfAlgebroid::new(groupoid.bialgebroid().clone(), s, Some(wrong_inv)).unwrap();
        let reports = bad.check_antipode();
        assert!(!reports[0].passed);
        assert_eq!(reports[0].name, "antipode_invertible");
    }

    #[test]
    fn missing_inverse_is_computed_and_flagged() {
        let groupoid = groupoid_fixture(2, Q).unwrap();
        let h = HopfAlgebroid::new(
            groupoid.bialgebroid().clone(),
            groupoid.antipode().clone(),
            None,
        )
        .unwrap();
        assert!(h.antipode_inv_was_computed());
        assert!(all_passed(&h.check_antipode()));
    }

    #[test]
    fn phi_scaled_fails_unital_check() {
        let z2 = hopf_algebra_fixture(&cyclic_group_table(2), Q).unwrap();
        let phi = PhiMap {
            phi: Matrix::identity(Q, 1).scale(&Q.from_i64(2)),
            phi_inv: Matrix::identity(Q, 1).scale(&Q.from_i64(2).inv().unwrap()),
        };
        let reports = z2.check_phi(&phi);
        assert_eq!(reports[0].name, "phi_unital");
        assert!(!reports[0].passed);
    }
}
