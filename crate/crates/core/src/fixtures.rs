//! Deterministic builders for the desk-scale example Hopf algebroids used by
//! the test suites: group algebras over the ground field, the pair-groupoid
//! convolution algebra over kⁿ, and the enveloping algebroid `A ⊗ A^op` of a
//! base algebra. Each builder also knows its standard module set.
//!
//! The corrupted variants at the bottom perturb exactly one structure map
//! each, tuned so that the perturbation passes every check that runs before
//! its target and fails the target itself.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::bialgebroid::Bialgebroid;
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::hmodule::HModule;
use crate::hopf::HopfAlgebroid;
use crate::matrix::Matrix;

/// A fixture bundle: the algebroid plus its named standard modules.
pub struct FixtureSet {
    pub name: String,
    pub hopf: Arc<HopfAlgebroid>,
    pub modules: Vec<(String, HModule)>,
}

/// Multiplication table of the cyclic group Z_n.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect()
}

fn group_inverses(table: &[Vec<usize>]) -> Result<(usize, Vec<usize>), Error> {
    let n = table.len();
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotAGroup(format!("row {i} has wrong length")));
        }
        for &e in row {
            if e >= n {
                return Err(Error::NotAGroup(format!("entry out of range in row {i}")));
            }
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let mut inverses = vec![usize::MAX; n];
    for g in 0..n {
        let inv = (0..n)
            .find(|&h| table[g][h] == identity && table[h][g] == identity)
            .ok_or_else(|| Error::NotAGroup(format!("element {g} has no inverse")))?;
        inverses[g] = inv;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    Ok((identity, inverses))
}

/// Hopf algebra as a Hopf algebroid over `A = k`: the group algebra with
/// grouplike comultiplication, `ε(g) = 1` and `S(g) = g⁻¹`.
pub fn hopf_algebra_fixture(
    table: &[Vec<usize>],
    field: FieldSpec,
) -> Result<Arc<HopfAlgebroid>, Error> {
    let (identity, inverses) = group_inverses(table)?;
    let n = table.len();
    let base = Algebra::ground_field(field);
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            triples.push((i, j, table[i][j], field.one()));
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[identity] = field.one();
    let total = Algebra::from_sparse_consts(field, n, &triples, unit.clone());

    let alpha = Matrix::column(field, &unit);
    let beta = alpha.clone();
    let mut delta = Matrix::zero(field, n * n, n);
    for g in 0..n {
        delta.set(g * n + g, g, field.one());
    }
    let counit = Matrix::from_fn(field, 1, n, |_, _| field.one());
    let mut antipode = Matrix::zero(field, n, n);
    for g in 0..n {
        antipode.set(inverses[g], g, field.one());
    }
    let bia = Bialgebroid::new(base, total, alpha, beta, delta, counit)?;
    let antipode_inv = antipode.clone();
    Ok(Arc::new(HopfAlgebroid::new(
        bia,
        antipode,
        Some(antipode_inv),
    )?))
}

/// The pair groupoid on `n` objects: H is spanned by arrows `g_ij` (index
/// `i*n + j`) with `g_ij g_kl = δ_jk g_il`, base algebra kⁿ,
/// `α(δ_x) = β(δ_x) = g_xx`, grouplike Δ, `ε(g_ij) = δ_i`, `S(g_ij) = g_ji`.
pub fn groupoid_fixture(n: usize, field: FieldSpec) -> Result<Arc<HopfAlgebroid>, Error> {
    assert!(n >= 1, "pair groupoid needs at least one object");
    let base = Algebra::diagonal(field, n);
    let dh = n * n;
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                triples.push((i * n + j, j * n + l, i * n + l, field.one()));
            }
        }
    }
    let mut unit = vec![field.zero(); dh];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    let total = Algebra::from_sparse_consts(field, dh, &triples, unit);

    let mut alpha = Matrix::zero(field, dh, n);
    for x in 0..n {
        alpha.set(x * n + x, x, field.one());
    }
    let beta = alpha.clone();
    let mut delta = Matrix::zero(field, dh * dh, dh);
    for g in 0..dh {
        delta.set(g * dh + g, g, field.one());
    }
    let mut counit = Matrix::zero(field, n, dh);
    for i in 0..n {
        for j in 0..n {
            counit.set(i, i * n + j, field.one());
        }
    }
    let mut antipode = Matrix::zero(field, dh, dh);
    for i in 0..n {
        for j in 0..n {
            antipode.set(j * n + i, i * n + j, field.one());
        }
    }
    let bia = Bialgebroid::new(base, total, alpha, beta, delta, counit)?;
    let antipode_inv = antipode.clone();
    Ok(Arc::new(HopfAlgebroid::new(
        bia,
        antipode,
        Some(antipode_inv),
    )?))
}

/// The enveloping algebroid `H = A ⊗ A^op` over base `A`, with
/// `α(a) = a⊗1`, `β(b) = 1⊗b`, `Δ(a⊗b) = (a⊗1) ⊗_A (1⊗b)`, `ε(a⊗b) = ab`
/// and flip antipode `S(a⊗b) = b⊗a`.
pub fn enveloping_fixture(a: &Algebra) -> Result<Arc<HopfAlgebroid>, Error> {
    let field = a.field();
    let da = a.dim();
    let dh = da * da;
    let total = a.tensor(&a.opposite());

    // α(x) = x ⊗ 1, β(y) = 1 ⊗ y, expanded over the unit coordinates.
    let mut alpha = Matrix::zero(field, dh, da);
    let mut beta = Matrix::zero(field, dh, da);
    for x in 0..da {
        for (j, uj) in a.unit().iter().enumerate() {
            if !uj.is_zero() {
                alpha.set(x * da + j, x, uj.clone());
                beta.set(j * da + x, x, uj.clone());
            }
        }
    }

    // Δ(e_i ⊗ ē_j) = (e_i ⊗ 1̄) ⊗ (1 ⊗ ē_j).
    let mut delta = Matrix::zero(field, dh * dh, dh);
    for i in 0..da {
        for j in 0..da {
            let col = i * da + j;
            for (u, uu) in a.unit().iter().enumerate() {
                if uu.is_zero() {
                    continue;
                }
                for (v, uv) in a.unit().iter().enumerate() {
                    if uv.is_zero() {
                        continue;
                    }
                    let first = i * da + u;
                    let second = v * da + j;
                    delta.set(first * dh + second, col, uu.mul(uv));
                }
            }
        }
    }

    // ε(x ⊗ ȳ) = xy in A.
    let mut counit = Matrix::zero(field, da, dh);
    for i in 0..da {
        for j in 0..da {
            let prod = a.basis_product(i, j);
            for (k, c) in prod.iter().enumerate() {
                if !c.is_zero() {
                    counit.set(k, i * da + j, c.clone());
                }
            }
        }
    }

    let mut antipode = Matrix::zero(field, dh, dh);
    for i in 0..da {
        for j in 0..da {
            antipode.set(j * da + i, i * da + j, field.one());
        }
    }
    let bia = Bialgebroid::new(a.clone(), total, alpha, beta, delta, counit)?;
    let antipode_inv = antipode.clone();
    Ok(Arc::new(HopfAlgebroid::new(
        bia,
        antipode,
        Some(antipode_inv),
    )?))
}

/// A one-dimensional module from a character vector (one scalar per basis
/// element of H).
pub fn character_module(parent: &Arc<HopfAlgebroid>, values: &[Scalar]) -> HModule {
    let field = parent.field();
    let action = values
        .iter()
        .map(|v| {
            let mut m = Matrix::zero(field, 1, 1);
            m.set(0, 0, v.clone());
            m
        })
        .collect();
    HModule::new(Arc::clone(parent), 1, action).expect("character module")
}

/// Column module of the pair groupoid: the span of `{g_ij : i}` for fixed j.
pub fn groupoid_column_module(parent: &Arc<HopfAlgebroid>, n: usize, col: usize) -> HModule {
    let field = parent.field();
    let dh = n * n;
    let mut action = Vec::with_capacity(dh);
    for k in 0..n {
        for l in 0..n {
            // g_kl · g_ij = δ_li g_kj
            let mut m = Matrix::zero(field, n, n);
            m.set(k, l, field.one());
            action.push(m);
        }
    }
    assert!(col < n);
    HModule::new(Arc::clone(parent), n, action).expect("column module")
}

/// The Z2 fixture with modules {base, regular, trivial, sign}.
pub fn fixture_z2(field: FieldSpec) -> FixtureSet {
    let hopf = hopf_algebra_fixture(&cyclic_group_table(2), field).expect("z2 fixture");
    let modules = vec![
        ("base".to_string(), HModule::base_module(&hopf)),
        ("regular".to_string(), HModule::regular(&hopf)),
        (
            "trivial".to_string(),
            character_module(&hopf, &[field.one(), field.one()]),
        ),
        (
            "sign".to_string(),
            character_module(&hopf, &[field.one(), field.from_i64(-1)]),
        ),
    ];
    FixtureSet {
        name: format!("z2_{}", field),
        hopf,
        modules,
    }
}

/// The Z3 fixture with modules {base, regular} (characters need cube roots
/// of unity, so they are only included over fields that have them).
pub fn fixture_z3(field: FieldSpec) -> FixtureSet {
    let hopf = hopf_algebra_fixture(&cyclic_group_table(3), field).expect("z3 fixture");
    let mut modules = vec![
        ("base".to_string(), HModule::base_module(&hopf)),
        ("regular".to_string(), HModule::regular(&hopf)),
    ];
    if let FieldSpec::PrimeField(p) = field {
        // A primitive cube root of unity exists iff 3 | p − 1.
        if (p - 1).is_multiple_of(3) {
            if let Some(w) = (2..p).find(|&w| {
                let w2 = (w as u128 * w as u128 % p as u128) as u64;
                (w2 as u128 * w as u128 % p as u128) as u64 == 1 && w != 1
            }) {
                let omega = field.from_i64(w as i64);
                let omega2 = omega.mul(&omega);
                modules.push((
                    "character_omega".to_string(),
                    character_module(&hopf, &[field.one(), omega, omega2]),
                ));
            }
        }
    }
    FixtureSet {
        name: format!("z3_{}", field),
        hopf,
        modules,
    }
}

/// The pair groupoid on two objects with modules {base, regular, col1, col2}.
pub fn fixture_groupoid2(field: FieldSpec) -> FixtureSet {
    let hopf = groupoid_fixture(2, field).expect("groupoid fixture");
    let modules = vec![
        ("base".to_string(), HModule::base_module(&hopf)),
        ("regular".to_string(), HModule::regular(&hopf)),
        ("col1".to_string(), groupoid_column_module(&hopf, 2, 0)),
        ("col2".to_string(), groupoid_column_module(&hopf, 2, 1)),
    ];
    FixtureSet {
        name: format!("pair_groupoid2_{}", field),
        hopf,
        modules,
    }
}

/// The enveloping algebroid of the upper-triangular 2×2 algebra with
/// modules {base, regular}.
pub fn fixture_env_ut2(field: FieldSpec) -> FixtureSet {
    let a = Algebra::upper_triangular_2x2(field);
    let hopf = enveloping_fixture(&a).expect("enveloping fixture");
    let modules = vec![
        ("base".to_string(), HModule::base_module(&hopf)),
        ("regular".to_string(), HModule::regular(&hopf)),
    ];
    FixtureSet {
        name: format!("env_ut2_{}", field),
        hopf,
        modules,
    }
}

/// The acceptance fixture list: kZ2 over Q, the pair groupoid over Q and
/// F7, and the enveloping algebroid of UT2 over Q.
pub fn standard_fixtures() -> Vec<FixtureSet> {
    let f7 = FieldSpec::prime_field(7).expect("7 is prime");
    vec![
        fixture_z2(FieldSpec::Rationals),
        fixture_groupoid2(FieldSpec::Rationals),
        fixture_groupoid2(f7),
        fixture_env_ut2(FieldSpec::Rationals),
    ]
}

/// A fixture with exactly one structure map perturbed, engineered so that
/// `target` is the first failing check of the full suite.
pub struct CorruptedFixture {
    pub name: &'static str,
    pub target: &'static str,
    pub hopf: HopfAlgebroid,
}

#[allow(clippy::too_many_arguments)]
fn rebuild(
    h: &HopfAlgebroid,
    base: Option<Algebra>,
    total: Option<Algebra>,
    alpha: Option<Matrix>,
    beta: Option<Matrix>,
    delta: Option<Matrix>,
    counit: Option<Matrix>,
    antipode: Option<Matrix>,
    antipode_inv: Option<Matrix>,
) -> HopfAlgebroid {
    let bia = h.bialgebroid();
    let new_bia = Bialgebroid::new(
        base.unwrap_or_else(|| bia.base().clone()),
        total.unwrap_or_else(|| bia.total().clone()),
        alpha.unwrap_or_else(|| bia.alpha().clone()),
        beta.unwrap_or_else(|| bia.beta().clone()),
        delta.unwrap_or_else(|| bia.delta_lift().clone()),
        counit.unwrap_or_else(|| bia.counit().clone()),
    )
    .expect("corrupted bundle still has consistent shapes");
    HopfAlgebroid::new(
        new_bia,
        antipode.unwrap_or_else(|| h.antipode().clone()),
        Some(antipode_inv.unwrap_or_else(|| h.antipode_inv().clone())),
    )
    .expect("corrupted bundle still has consistent shapes")
}

/// The twelve targeted corruption variants over Q. Groupoid indices:
/// `g11 = 0, g12 = 1, g21 = 2, g22 = 3`; Z2 indices: `e = 0, g = 1`.
// Tensor coordinates are written as `p * dh + q` even when p or q is zero,
// to keep the leg structure visible.
#[allow(clippy::identity_op, clippy::erasing_op)]
pub fn corrupted_variants() -> Vec<CorruptedFixture> {
    let q = FieldSpec::Rationals;
    let groupoid = groupoid_fixture(2, q).expect("groupoid fixture");
    let z2 = hopf_algebra_fixture(&cyclic_group_table(2), q).expect("z2 fixture");
    let mut variants = Vec::new();

    // 1. Perturb a total-algebra structure constant: g11·g11 = 2·g11.
    {
        let total = groupoid.bialgebroid().total();
        let d = total.dim();
        let mut consts = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    consts.push(total.c(i, j, k).clone());
                }
            }
        }
        consts[0] = consts[0].add(&q.one());
        let bad = Algebra::new(q, d, consts, total.unit().to_vec());
        variants.push(CorruptedFixture {
            name: "total_struct_const",
            target: "total_associativity",
            hopf: rebuild(
                &groupoid,
                None,
                Some(bad),
                None,
                None,
                None,
                None,
                None,
                None,
            ),
        });
    }

    // 2. Drop g22 from the unit of H.
    {
        let total = groupoid.bialgebroid().total();
        let d = total.dim();
        let mut consts = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    consts.push(total.c(i, j, k).clone());
                }
            }
        }
        let mut unit = total.unit().to_vec();
        unit[3] = q.zero();
        let bad = Algebra::new(q, d, consts, unit);
        variants.push(CorruptedFixture {
            name: "total_unit_vector",
            target: "total_unit",
            hopf: rebuild(
                &groupoid,
                None,
                Some(bad),
                None,
                None,
                None,
                None,
                None,
                None,
            ),
        });
    }

    // 3. α(δ1) = g11 + g12: idempotent, but α(δ1)α(δ2) = g12 ≠ 0 = α(0).
    {
        let mut alpha = groupoid.bialgebroid().alpha().clone();
        alpha.set(1, 0, q.one());
        variants.push(CorruptedFixture {
            name: "alpha_not_multiplicative",
            target: "alpha_algebra_map",
            hopf: rebuild(
                &groupoid,
                None,
                None,
                Some(alpha),
                None,
                None,
                None,
                None,
                None,
            ),
        });
    }

    // 4. Same perturbation on β.
    {
        let mut beta = groupoid.bialgebroid().beta().clone();
        beta.set(1, 0, q.one());
        variants.push(CorruptedFixture {
            name: "beta_not_multiplicative",
            target: "beta_algebra_map",
            hopf: rebuild(
                &groupoid,
                None,
                None,
                None,
                Some(beta),
                None,
                None,
                None,
                None,
            ),
        });
    }

    // 5. β conjugated by 1 + g12: still an algebra map from A^op
    //    (β'(δ1) = g11 − g12, β'(δ2) = g22 + g12), but α(δ1)β'(δ1) ≠ β'(δ1)α(δ1).
    {
        let mut beta = Matrix::zero(q, 4, 2);
        beta.set(0, 0, q.one());
        beta.set(1, 0, q.from_i64(-1));
        beta.set(3, 1, q.one());
        beta.set(1, 1, q.one());
        variants.push(CorruptedFixture {
            name: "beta_conjugated",
            target: "commuting_images",
            hopf: rebuild(
                &groupoid,
                None,
                None,
                None,
                Some(beta),
                None,
                None,
                None,
                None,
            ),
        });
    }

    // 6. Δ(g12) = g21 ⊗ g21: breaks Δ(α(a)β(b)h) = α(a)h₁ ⊗ β(b)h₂.
    {
        let mut delta = groupoid.bialgebroid().delta_lift().clone();
        let dh = 4;
        delta.set(1 * dh + 1, 1, q.zero());
        delta.set(2 * dh + 2, 1, q.one());
        variants.push(CorruptedFixture {
            name: "delta_wrong_grouplike",
            target: "delta_bimodule_map",
            hopf: rebuild(
                &groupoid,
                None,
                None,
                None,
                None,
                Some(delta),
                None,
                None,
                None,
            ),
        });
    }

    // 7. Δ(g12) = g12 ⊗ g11: the bimodule-map axiom still holds, but the
    //    Takeuchi identity fails at a = δ1.
    {
        let mut delta = groupoid.bialgebroid().delta_lift().clone();
        let dh = 4;
        delta.set(1 * dh + 1, 1, q.zero());
        delta.set(1 * dh + 0, 1, q.one());
        variants.push(CorruptedFixture {
            name: "delta_takeuchi_breaker",
            target: "takeuchi",
            hopf: rebuild(
                &groupoid,
                None,
                None,
                None,
                None,
                Some(delta),
                None,
                None,
                None,
            ),
        });
    }

    // 8. On kZ2: Δ(g) = g⊗e + e⊗g is primitive-style, which is linear over
    //    the trivial base and Takeuchi-trivial, but fails Δ(g²) = Δ(g)².
    {
        let mut delta = z2.bialgebroid().delta_lift().clone();
        let dh = 2;
        delta.set(1 * dh + 1, 1, q.zero());
        delta.set(1 * dh + 0, 1, q.one());
        delta.set(0 * dh + 1, 1, q.one());
        variants.push(CorruptedFixture {
            name: "delta_primitive_style",
            target: "delta_multiplicativity",
            hopf: rebuild(&z2, None, None, None, None, Some(delta), None, None, None),
        });
    }

    // 9. On kZ2: Δ(e) = (e⊗e + g⊗g)/2, Δ(g) = (g⊗e + e⊗g)/2 is an algebra
    //    map H → H⊗H and coassociative, but Δ(1) ≠ 1⊗1.
    {
        let dh = 2;
        let half = q.from_i64(2).inv().expect("2 invertible over Q");
        let mut delta = Matrix::zero(q, dh * dh, dh);
        delta.set(0 * dh + 0, 0, half.clone());
        delta.set(1 * dh + 1, 0, half.clone());
        delta.set(1 * dh + 0, 1, half.clone());
        delta.set(0 * dh + 1, 1, half);
        variants.push(CorruptedFixture {
            name: "delta_idempotent_twist",
            target: "delta_unitality",
            hopf: rebuild(&z2, None, None, None, None, Some(delta), None, None, None),
        });
    }

    // 10. ε(g_ij) = δ_j instead of δ_i.
    {
        let mut counit = Matrix::zero(q, 2, 4);
        for i in 0..2 {
            for j in 0..2 {
                counit.set(j, i * 2 + j, q.one());
            }
        }
        variants.push(CorruptedFixture {
            name: "counit_wrong_leg",
            target: "counit_bimodule_map",
            hopf: rebuild(
                &groupoid,
                None,
                None,
                None,
                None,
                None,
                Some(counit),
                None,
                None,
            ),
        });
    }

    // 11. ε = 0 passes the ε-bimodule and ε-multiplicativity identities
    //     vacuously but cannot reproduce h in the counitality axiom.
    {
        let counit = Matrix::zero(q, 2, 4);
        variants.push(CorruptedFixture {
            name: "counit_zero",
            target: "counitality",
            hopf: rebuild(
                &groupoid,
                None,
                None,
                None,
                None,
                None,
                Some(counit),
                None,
                None,
            ),
        });
    }

    // 12. S = id on the groupoid: invertible and fixing α = β images, but
    //     not anti-multiplicative on the noncommutative total algebra.
    //     (Conjugating or rescaling the flip antipode is NOT a corruption:
    //     antipodes of a Hopf algebroid are not unique, and such twists
    //     satisfy every displayed axiom — see the hopf module tests.)
    {
        let s = Matrix::identity(q, 4);
        variants.push(CorruptedFixture {
            name: "antipode_identity_map",
            target: "antipode_antiautomorphism",
            hopf: rebuild(
                &groupoid,
                None,
                None,
                None,
                None,
                None,
                None,
                Some(s.clone()),
                Some(s),
            ),
        });
    }

    variants
}
