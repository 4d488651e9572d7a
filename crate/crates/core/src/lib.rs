//! Exact products in coinvariant symmetric powers of noncommutative algebras.

pub mod coeff;
pub mod comb;
pub mod error;
pub mod expmat;
pub mod lin;
pub mod perm;
pub mod qsym;
pub mod schur;
pub mod superalg;
pub mod sympow;
pub mod verify;
pub mod weyl;

pub use coeff::{GaussRat, HPoly};
pub use error::{Error, Result};
pub use expmat::ExpMatrix;
pub use lin::Lin;
