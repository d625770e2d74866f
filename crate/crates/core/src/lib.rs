//! Exact Newton-diagram invariants of isolated singularities.
//!
//! The crate computes Milnor numbers, geometric genera, mixed covolumes and
//! Ehrhart data of convenient Newton diagrams with exact rational arithmetic,
//! and checks Durfee-type inequalities `μ > C(n,r)·p_g` on concrete inputs.
//!
//! Geometry ([`lattice`]) and polynomial fitting ([`poly`]) are generic over
//! an [`ExactField`](scalar::ExactField); the singularity layers above them
//! work in [`Rational`].

pub mod check;
pub mod combinatorics;
pub mod covolume;
mod dd;
pub mod ehrhart;
pub mod error;
pub mod harness;
pub mod invariants;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod newton;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};

/// Arbitrary-precision rational used throughout the invariant layers.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Lattice polytope with rational vertices.
pub type Polytope = lattice::Polytope<Rational>;
/// Ehrhart polynomial with rational coefficients.
pub type EhrhartPolynomial = ehrhart::EhrhartPolynomial<Rational>;
/// Univariate polynomial with rational coefficients.
pub type Polynomial = poly::UniPoly<Rational>;

pub use combinatorics::{cnr, compositions, multinomial, stirling2, Composition};
pub use newton::{DiagramTuple, NewtonDiagram, NewtonPolyhedron, SupportSet};
