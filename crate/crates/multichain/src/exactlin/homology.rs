//! Homology of a two-step piece `C_{n+1} -> C_n -> C_{n-1}` of a complex.

use num::BigInt;

use crate::error::{Error, Result};

use super::{rank, smith_normal_form, RingSpec, SparseMatrix};

/// Betti number and torsion summands of one homology group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySummary {
    pub degree: usize,
    pub betti: usize,
    /// Nontrivial invariant factors (`> 1`), empty over fields.
    pub torsion: Vec<BigInt>,
}

impl std::fmt::Display for HomologySummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "H_{}: rank {}", self.degree, self.betti)?;
        if !self.torsion.is_empty() {
            let parts: Vec<String> = self.torsion.iter().map(|t| format!("Z/{t}")).collect();
            write!(f, " + {}", parts.join(" + "))?;
        }
        Ok(())
    }
}

/// Homology at the middle of `d_out: C_n -> C_{n-1}` and `d_in: C_{n+1} -> C_n`.
///
/// Checks shape compatibility and that `d_out . d_in = 0`.  Betti numbers are
/// computed over the fraction field; torsion (over `Z` only) from the Smith
/// normal form of `d_in`.
pub fn homology_of_pair(
    degree: usize,
    d_in: &SparseMatrix,
    d_out: &SparseMatrix,
    ring: RingSpec,
) -> Result<HomologySummary> {
    if d_in.ring() != ring {
        return Err(Error::RingMismatch(d_in.ring(), ring));
    }
    if d_out.ring() != ring {
        return Err(Error::RingMismatch(d_out.ring(), ring));
    }
    if d_out.cols() != d_in.rows() {
        return Err(Error::Invalid(format!(
            "shape mismatch: d_out has {} columns but d_in has {} rows",
            d_out.cols(),
            d_in.rows()
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::CompositionNotZero);
    }
    let dim = d_in.rows();
    let (r_out, r_in) = if ring.is_field() {
        (rank(d_out)?, rank(d_in)?)
    } else {
        (
            rank(&d_out.clone().into_fraction_field())?,
            rank(&d_in.clone().into_fraction_field())?,
        )
    };
    let betti = dim - r_out - r_in;
    let torsion = if ring == RingSpec::Z {
        smith_normal_form(d_in)?
            .into_iter()
            .filter(|d| *d > BigInt::from(1))
            .collect()
    } else {
        Vec::new()
    };
    Ok(HomologySummary { degree, betti, torsion })
}
