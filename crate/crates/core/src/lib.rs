//! Exact F-thresholds, F-pure thresholds, test ideals and F-jumping
//! coefficients of monomial ideals on toric rings.
//!
//! A toric ring `R = k[σ^∨ ∩ M]` is given by a strongly convex rational cone
//! `σ ⊂ N_R`. Monomial ideals are sets of exponent vectors in `σ^∨ ∩ M`. All
//! invariants are computed from polyhedral data (Newton polyhedra, staircase
//! regions, dual cones) with exact rational linear programming, and the
//! F-threshold can be cross-checked against a brute-force Frobenius oracle
//! working directly on exponent vectors.
//!
//! ```
//! use std::sync::Arc;
//! use fthresh_core::{DualPair, MonomialIdeal, thresholds};
//! use fthresh_core::rational::rat;
//!
//! let plane = Arc::new(DualPair::new(&[vec![1, 0], vec![0, 1]]).unwrap());
//! let a = MonomialIdeal::new(&plane, vec![vec![2, 0], vec![0, 3]]).unwrap();
//! assert_eq!(thresholds::fpt(&a).unwrap().value, rat(5, 6));
//! ```

pub mod cone;
pub mod error;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod lp;
pub mod newton;
pub mod oracle;
pub mod rational;
pub mod thresholds;

pub use cone::{dual_cone, Cone, DualPair, GorensteinData};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use newton::{NewtonFacet, NewtonPolyhedron};
pub use rational::{IVec, QVector, Rational};
pub use thresholds::{JumpingChain, Method, ThresholdValue};
