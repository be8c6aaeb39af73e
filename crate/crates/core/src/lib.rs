//! Exact computation in the Sergeev superalgebra `S_n = C Sym_n^- (x) Cl_n`.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure algebra:
//!
//! * [`scalar`]: the coefficient field `Q(i, sqrt 2, sqrt 3, ...)`.
//! * [`tableaux`]: strict partitions, shifted (barred) tableaux, signed contents.
//! * [`algebra`]: normal-form elements of `S_n`, generators and Jucys-Murphy elements.
//! * [`idempotents`]: primitive idempotents `e_U`, intertwiners, the zeta basis.
//! * [`repmodules`]: matrix realizations of the modules `U^lambda` and `V^lambda`.
//! * [`fusion`]: rational functions with values in `S_n` and the fusion procedure.
//!
//! IO, JSON formats and the command-line tool live in the `sergeev` crate.

#![no_std]

extern crate alloc;

pub mod algebra;
mod error;
pub mod fusion;
pub mod idempotents;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod repmodules;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod tableaux;

pub use algebra::{AlgebraElement, Parity, Sergeev, Word};
pub use error::Error;
pub use perm::Permutation;
pub use report::Report;
pub use scalar::{Gaussian, Rational, Scalar};
pub use tableaux::{ShiftedTableau, StrictPartition};

pub type Result<T> = core::result::Result<T, Error>;
