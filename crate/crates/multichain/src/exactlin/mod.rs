//! Exact linear algebra over `Z`, `Q`, and `Z/p`.
//!
//! Everything downstream (boundary matrices, cocycle bases, Smith normal
//! form) funnels through this module, so all arithmetic here is exact:
//! big integers for `Z`, reduced big rationals for `Q`, and `u64` residues
//! for `Z/p` with `p` prime.

mod field;
mod homology;
mod matrix;
mod ring;
mod snf;

pub use field::{kernel_basis, rank, solve, Echelon, Reduction, SparseVec};
pub use homology::{homology_of_pair, HomologySummary};
pub use matrix::SparseMatrix;
pub use ring::{Coefficient, RingSpec};
pub use snf::smith_normal_form;
