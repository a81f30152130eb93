//! Exact-arithmetic models of finite-dimensional Hopf algebroids.
//!
//! Everything is presented concretely: algebras by structure constants,
//! maps by matrices over Q or F_p, comultiplications by a chosen lift into
//! the plain tensor square, and tensor products over the base algebra by
//! quotient spaces with explicit projections and sections. On top of that
//! substrate the crate builds the module category machinery: H-modules,
//! their monoidal product, internal Homs, the dualising object A*, the
//! dualising functors D and D⁻¹, and the checks that the whole bundle
//! satisfies every axiom it is supposed to.
//!
//! All arithmetic is exact; every comparison in the axiom checkers is an
//! equality of canonical coordinates, never a tolerance.
//!
//! ```
//! use algebroid::fixtures;
//! use algebroid::report::all_passed;
//! use algebroid::FieldSpec;
//!
//! // The pair-groupoid convolution algebra over k² passes the whole suite,
//! // and its module category carries the expected duality structure.
//! let fixture = fixtures::fixture_groupoid2(FieldSpec::Rationals);
//! assert!(all_passed(&fixture.hopf.check_all()));
//!
//! let base = &fixture.modules[0].1;
//! assert!(algebroid::gv::gv_adjunction_check(base, base).passed);
//! assert!(algebroid::gv::double_dual_check(base).passed);
//! ```

// Index-aligned loops over several arrays at once are the house style in
// the linear-algebra kernels; iterator rewrites would obscure the indices.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bialgebroid;
pub mod bimodule;
pub mod descriptor;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod gv;
pub mod hmodule;
pub mod hopf;
pub mod matrix;
pub mod report;
pub mod space;

pub use algebra::Algebra;
pub use bialgebroid::Bialgebroid;
pub use bimodule::Bimodule;
pub use error::Error;
pub use field::{FieldSpec, Scalar};
pub use hmodule::HModule;
pub use hopf::HopfAlgebroid;
pub use matrix::Matrix;
pub use report::AxiomReport;
pub use space::{QuotientSpace, Subspace};

#[cfg(test)]
mod concurrency {
    // Everything is immutable after construction; the whole object graph
    // moves freely across threads.
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::Scalar>();
        assert_send_sync::<crate::Matrix>();
        assert_send_sync::<crate::Subspace>();
        assert_send_sync::<crate::QuotientSpace>();
        assert_send_sync::<crate::Algebra>();
        assert_send_sync::<crate::Bimodule>();
        assert_send_sync::<crate::Bialgebroid>();
        assert_send_sync::<crate::HopfAlgebroid>();
        assert_send_sync::<crate::HModule>();
    }
}
