//! Exact q-Varchenko matrices of reflection-symmetric hyperplane
//! arrangements and their Smith normal forms over `Z[q]`.
//!
//! The q-Varchenko matrix of an arrangement is indexed by its regions,
//! with `(i, j)`-entry `q^{#sep(R_i, R_j)}` where `sep` counts the
//! hyperplanes separating two regions. This crate provides
//!
//! * [`poly`]: exact polynomial arithmetic over `Z` and `Q`,
//! * [`matrix`]: dense matrices over `Z[q]` with circulant/shift/block
//!   structure and exact determinants,
//! * [`geometry`]: an independent oracle that enumerates regions of exact
//!   rational arrangements by sign vectors and rebuilds the matrix from
//!   first principles,
//! * [`models`]: closed-form builders for the cyclic and dihedral families
//!   and the tetrahedron/cube/octahedron/pyramid models, each bundled with
//!   its congruence pipeline and claimed diagonal,
//! * [`snf`]: the verification engine, including an independent Smith
//!   normal form over `Q[q]` and Betti-number cross-checks via the
//!   intersection poset,
//! * [`cli`]: the `varchenko` command-line tool.
//!
//! The `examples/` directory has one runnable example per capability; start
//! with `cargo run --example verify_catalogue`.

pub mod cli;
pub mod geometry;
pub mod matrix;
pub mod models;
pub mod poly;
pub mod snf;

pub use geometry::{Arrangement, Hyperplane, IntersectionPoset, Region, Side};
pub use matrix::{apply_pipeline, BlockLayout, PolyMat};
pub use models::{ModelId, ModelSpec, StructuredVector};
pub use poly::{PolyQ, PolyZ};
pub use snf::{snf_over_field, valuation_profile, verify_model, SnfReport};
