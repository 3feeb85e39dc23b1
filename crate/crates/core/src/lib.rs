//! Exact verification toolkit for tangent bundles of biquotients.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: graded rings presented by degree-2 generators and confluent rewrite rules;
//! * [`charclass`]: Pontryagin, Euler and Chern classes of sums of line bundles;
//! * [`search`]: certified exhaustive searches for line-bundle splittings;
//! * [`genus`]: truncated power series and the Hirzebruch chi_y genus;
//! * [`reps`]: Weyl-dimension catalogs for `Spin(2m+1)` and `SU(2)` and the
//!   representation-dimension obstruction;
//! * [`case`]: case documents, the built-in library, and canonical JSON reports.
//!
//! All arithmetic is exact.

pub mod case;
pub mod charclass;
pub mod error;
pub mod genus;
pub mod rational;
pub mod reps;
pub mod ring;
pub mod rings;
pub mod search;

pub use error::{Error, Result};
pub use rational::Rational;
