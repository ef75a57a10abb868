//! Exact symbolic computation for Yangians of gl_n, their twisted (orthogonal
//! and symplectic) analogues, and Casimir-element constructions on the
//! classical Lie algebras — together with a verification harness that checks
//! the classical closed-form identities at small rank in exact arithmetic.
//!
//! Layering, bottom up:
//! - [`scalar`], [`ring`]: exact rational/polynomial coefficients and the
//!   carrier trait every algebra implements;
//! - [`series`], [`biseries`], [`matrix`]: truncated Laurent series, their
//!   two-variable version, labelled matrices and quasi-determinants;
//! - [`lie`], [`sym`]: enveloping algebras in PBW normal form, the
//!   Harish-Chandra projection, symmetric-function targets;
//! - [`yangian`]: the Y(gl_n) rewriting engine, relation oracle and Hopf
//!   structure maps;
//! - [`tensor`]: operators on tensor powers, R-matrices, fusion,
//!   antisymmetrizers, trace families;
//! - [`qdet`], [`homs`], [`sl2`]: quantum determinant theory, certified
//!   homomorphisms, the two rank-one realizations;
//! - [`twisted`]: reflection-equation algebras, Sklyanin determinants and
//!   their combinatorics;
//! - [`casimir`]: Capelli determinants, Newton identities, path-sum central
//!   families, Pfaffian/Hafnian families and their decompositions;
//! - [`report`]: machine-readable check reports and the named verification
//!   suites driven by the CLI.

pub mod biseries;
pub mod casimir;
pub mod homs;
pub mod lie;
pub mod matrix;
pub mod qdet;
pub mod report;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod sl2;
pub mod sym;
pub mod tensor;
pub mod twisted;
pub mod yangian;

pub use ring::Ring;
pub use scalar::Scalar;
pub use series::Series;
