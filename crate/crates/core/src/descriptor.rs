//! JSON descriptors for algebras, Hopf algebroid bundles and modules.
//!
//! Scalars serialize as strings (`"3"`, `"-2/7"`, `"5"`), matrices as
//! `{"rows", "cols", "entries"}` with row-major entry lists, algebras with
//! sparse structure-constant quadruples, and a descriptor file gathers named
//! algebras, bundles and modules. Name maps are B-tree ordered so emitted
//! files and reports are byte-deterministic.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::bialgebroid::Bialgebroid;
use crate::error::Error;
use crate::field::{FieldSpec, Scalar};
use crate::hmodule::HModule;
use crate::hopf::HopfAlgebroid;
use crate::matrix::Matrix;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDesc {
    Rationals,
    PrimeField { characteristic: u64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixDesc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraDesc {
    pub dim: usize,
    pub field: FieldDesc,
    pub unit: Vec<String>,
    /// Sparse `(i, j, k, c)` quadruples; omitted entries are zero.
    pub struct_consts: Vec<(usize, usize, usize, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HopfDesc {
    pub base: String,
    pub total: String,
    pub alpha: MatrixDesc,
    pub beta: MatrixDesc,
    pub delta_lift: MatrixDesc,
    pub counit: MatrixDesc,
    pub antipode: MatrixDesc,
    /// Optional; computed by inversion (with a warning) when absent.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipode_inv: Option<MatrixDesc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleDesc {
    pub parent: String,
    pub dim: usize,
    /// Sparse `[h_index, matrix]` pairs; omitted actions are zero.
    pub action: Vec<(usize, MatrixDesc)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BimoduleDesc {
    pub left_alg: String,
    pub right_alg: String,
    pub dim: usize,
    /// Sparse `[a_index, matrix]` pairs for the left action.
    pub left: Vec<(usize, MatrixDesc)>,
    pub right: Vec<(usize, MatrixDesc)>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct DescriptorFile {
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraDesc>,
    #[serde(default)]
    pub hopf_algebroids: BTreeMap<String, HopfDesc>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleDesc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bimodules: BTreeMap<String, BimoduleDesc>,
}

/// A descriptor with every reference resolved into core values.
pub struct Resolved {
    pub algebras: BTreeMap<String, Algebra>,
    pub hopf_algebroids: BTreeMap<String, Arc<HopfAlgebroid>>,
    /// Module name → (parent bundle name, module).
    pub modules: BTreeMap<String, (String, HModule)>,
    pub bimodules: BTreeMap<String, crate::bimodule::Bimodule>,
    /// Bundles whose inverse antipode had to be computed.
    pub computed_antipode_inverses: Vec<String>,
}

impl FieldDesc {
    pub fn to_field(&self) -> Result<FieldSpec, Error> {
        match self {
            FieldDesc::Rationals => Ok(FieldSpec::Rationals),
            FieldDesc::PrimeField { characteristic } => FieldSpec::prime_field(*characteristic),
        }
    }

    pub fn of(field: FieldSpec) -> FieldDesc {
        match field {
            FieldSpec::Rationals => FieldDesc::Rationals,
            FieldSpec::PrimeField(p) => FieldDesc::PrimeField { characteristic: p },
        }
    }
}

impl MatrixDesc {
    pub fn to_matrix(&self, field: FieldSpec) -> Result<Matrix, Error> {
        if self.entries.len() != self.rows {
            return Err(Error::InvalidDescriptor(format!(
                "matrix declares {} rows but has {}",
                self.rows,
                self.entries.len()
            )));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for row in &self.entries {
            if row.len() != self.cols {
                return Err(Error::InvalidDescriptor(format!(
                    "matrix declares {} cols but a row has {}",
                    self.cols,
                    row.len()
                )));
            }
            let parsed: Result<Vec<Scalar>, Error> =
                row.iter().map(|s| field.parse_scalar(s)).collect();
            rows.push(parsed?);
        }
        Ok(Matrix::from_rows_or_empty(field, self.cols, rows))
    }

    pub fn of(m: &Matrix) -> MatrixDesc {
        MatrixDesc {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(|s| s.to_string()).collect())
                .collect(),
        }
    }
}

impl AlgebraDesc {
    pub fn to_algebra(&self) -> Result<Algebra, Error> {
        let field = self.field.to_field()?;
        if self.unit.len() != self.dim {
            return Err(Error::InvalidDescriptor(format!(
                "unit vector has length {} but dim is {}",
                self.unit.len(),
                self.dim
            )));
        }
        let unit: Result<Vec<Scalar>, Error> =
            self.unit.iter().map(|s| field.parse_scalar(s)).collect();
        let mut triples = Vec::with_capacity(self.struct_consts.len());
        for (i, j, k, c) in &self.struct_consts {
            if *i >= self.dim || *j >= self.dim || *k >= self.dim {
                return Err(Error::InvalidDescriptor(format!(
                    "structure constant index ({i}, {j}, {k}) out of range for dim {}",
                    self.dim
                )));
            }
            triples.push((*i, *j, *k, field.parse_scalar(c)?));
        }
        Ok(Algebra::from_sparse_consts(
            field, self.dim, &triples, unit?,
        ))
    }

    pub fn of(a: &Algebra) -> AlgebraDesc {
        let mut struct_consts = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                for k in 0..a.dim() {
                    let c = a.c(i, j, k);
                    if !c.is_zero() {
                        struct_consts.push((i, j, k, c.to_string()));
                    }
                }
            }
        }
        AlgebraDesc {
            dim: a.dim(),
            field: FieldDesc::of(a.field()),
            unit: a.unit().iter().map(|s| s.to_string()).collect(),
            struct_consts,
        }
    }
}

impl ModuleDesc {
    pub fn to_module(&self, parent: &Arc<HopfAlgebroid>) -> Result<HModule, Error> {
        let field = parent.field();
        let dh = parent.bialgebroid().total().dim();
        let mut action = vec![Matrix::zero(field, self.dim, self.dim); dh];
        for (h, m) in &self.action {
            if *h >= dh {
                return Err(Error::InvalidDescriptor(format!(
                    "module action index {h} out of range for dim H = {dh}"
                )));
            }
            action[*h] = m.to_matrix(field)?;
        }
        HModule::new(Arc::clone(parent), self.dim, action)
    }

    pub fn of(parent_name: &str, m: &HModule) -> ModuleDesc {
        ModuleDesc {
            parent: parent_name.to_string(),
            dim: m.dim(),
            action: m
                .actions()
                .iter()
                .enumerate()
                .map(|(h, mat)| (h, MatrixDesc::of(mat)))
                .collect(),
        }
    }
}

impl BimoduleDesc {
    pub fn to_bimodule(
        &self,
        left_alg: &Algebra,
        right_alg: &Algebra,
    ) -> Result<crate::bimodule::Bimodule, Error> {
        let field = left_alg.field();
        let expand = |pairs: &[(usize, MatrixDesc)], count: usize| -> Result<Vec<Matrix>, Error> {
            let mut mats = vec![Matrix::zero(field, self.dim, self.dim); count];
            for (idx, m) in pairs {
                if *idx >= count {
                    return Err(Error::InvalidDescriptor(format!(
                        "bimodule action index {idx} out of range"
                    )));
                }
                mats[*idx] = m.to_matrix(field)?;
            }
            Ok(mats)
        };
        Ok(crate::bimodule::Bimodule::new(
            left_alg.clone(),
            right_alg.clone(),
            self.dim,
            expand(&self.left, left_alg.dim())?,
            expand(&self.right, right_alg.dim())?,
        ))
    }

    pub fn of(left_name: &str, right_name: &str, b: &crate::bimodule::Bimodule) -> BimoduleDesc {
        BimoduleDesc {
            left_alg: left_name.to_string(),
            right_alg: right_name.to_string(),
            dim: b.dim(),
            left: (0..b.left_alg().dim())
                .map(|a| (a, MatrixDesc::of(b.left_basis_action(a))))
                .collect(),
            right: (0..b.right_alg().dim())
                .map(|a| (a, MatrixDesc::of(b.right_basis_action(a))))
                .collect(),
        }
    }
}

impl DescriptorFile {
    pub fn from_json(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }

    /// Resolve all references, building the actual algebra and algebroid
    /// values. Reference and shape problems surface as errors; axiom
    /// violations do not (checking is a separate step).
    pub fn resolve(&self) -> Result<Resolved, Error> {
        let mut algebras = BTreeMap::new();
        for (name, desc) in &self.algebras {
            algebras.insert(name.clone(), desc.to_algebra()?);
        }
        let mut hopfs = BTreeMap::new();
        let mut computed = Vec::new();
        for (name, desc) in &self.hopf_algebroids {
            let base = algebras
                .get(&desc.base)
                .ok_or_else(|| Error::UnknownReference(desc.base.clone()))?
                .clone();
            let total = algebras
                .get(&desc.total)
                .ok_or_else(|| Error::UnknownReference(desc.total.clone()))?
                .clone();
            let field = total.field();
            let bia = Bialgebroid::new(
                base,
                total,
                desc.alpha.to_matrix(field)?,
                desc.beta.to_matrix(field)?,
                desc.delta_lift.to_matrix(field)?,
                desc.counit.to_matrix(field)?,
            )?;
            let antipode = desc.antipode.to_matrix(field)?;
            let antipode_inv = desc
                .antipode_inv
                .as_ref()
                .map(|m| m.to_matrix(field))
                .transpose()?;
            let hopf = Arc::new(HopfAlgebroid::new(bia, antipode, antipode_inv)?);
            if hopf.antipode_inv_was_computed() {
                computed.push(name.clone());
            }
            hopfs.insert(name.clone(), hopf);
        }
        let mut modules = BTreeMap::new();
        for (name, desc) in &self.modules {
            let parent = hopfs
                .get(&desc.parent)
                .ok_or_else(|| Error::UnknownReference(desc.parent.clone()))?;
            modules.insert(name.clone(), (desc.parent.clone(), desc.to_module(parent)?));
        }
        let mut bimodules = BTreeMap::new();
        for (name, desc) in &self.bimodules {
            let left = algebras
                .get(&desc.left_alg)
                .ok_or_else(|| Error::UnknownReference(desc.left_alg.clone()))?;
            let right = algebras
                .get(&desc.right_alg)
                .ok_or_else(|| Error::UnknownReference(desc.right_alg.clone()))?;
            bimodules.insert(name.clone(), desc.to_bimodule(left, right)?);
        }
        Ok(Resolved {
            algebras,
            hopf_algebroids: hopfs,
            modules,
            bimodules,
            computed_antipode_inverses: computed,
        })
    }
}

/// Descriptor for one bundle and its modules, with conventional names
/// `A` (base), `H` (total) and `main` (the bundle).
pub fn descriptor_from_hopf(hopf: &HopfAlgebroid, modules: &[(String, HModule)]) -> DescriptorFile {
    let bia = hopf.bialgebroid();
    let mut file = DescriptorFile::default();
    file.algebras
        .insert("A".to_string(), AlgebraDesc::of(bia.base()));
    file.algebras
        .insert("H".to_string(), AlgebraDesc::of(bia.total()));
    file.hopf_algebroids.insert(
        "main".to_string(),
        HopfDesc {
            base: "A".to_string(),
            total: "H".to_string(),
            alpha: MatrixDesc::of(bia.alpha()),
            beta: MatrixDesc::of(bia.beta()),
            delta_lift: MatrixDesc::of(bia.delta_lift()),
            counit: MatrixDesc::of(bia.counit()),
            antipode: MatrixDesc::of(hopf.antipode()),
            antipode_inv: Some(MatrixDesc::of(hopf.antipode_inv())),
        },
    );
    for (name, m) in modules {
        file.modules.insert(name.clone(), ModuleDesc::of("main", m));
    }
    file
}
