//! Energy spectra of the scalar singleton: the o(n) branching table and the
//! Majorana mass spectrum.

use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::quotient::SingletonQuotient;
use crate::error::{Error, Result};
use crate::exactcore::GR;
use crate::youngdim::{o_dim, YoungDiagram};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchingRow {
    pub level: usize,
    pub dim: usize,
    /// Dimension of the traceless symmetric o(n) irrep `[level]`.
    pub o_dim: u128,
    /// Eigenvalue of `E` on the level.
    pub energy: GR,
    pub expected_energy: GR,
}

impl BranchingRow {
    pub fn ok(&self) -> bool {
        self.dim as u128 == self.o_dim && self.energy == self.expected_energy
    }
}

fn energy_of(q: &SingletonQuotient, t: usize) -> Result<GR> {
    let e = q.basis_operator(q.algebra().index_of("E").expect("E in compact basis"));
    e.scalar_on_level(t)?
        .ok_or_else(|| Error::InvalidArgument(format!("E is not scalar on level {t}")))
}

/// Levels `0..=tmax` of the scalar singleton: dimension, o(n) irrep
/// dimension and the eigenvalue of `E`.
pub fn branching_check(n: usize, tmax: usize) -> Result<Vec<BranchingRow>> {
    let mut q = SingletonQuotient::levels_only(n, tmax)?;
    (0..=tmax)
        .map(|t| {
            let energy = q.energy(t)?;
            Ok(BranchingRow {
                level: t,
                dim: q.level_dim(t),
                o_dim: o_dim(&YoungDiagram::new(vec![t])?, n)?,
                energy,
                expected_energy: GR::real(BigRational::from_integer(t.into()) + q.e0()),
            })
        })
        .collect()
}

/// `(s, M / E_s)` for `s = 0..=smax`, where `E_s = s + n/2 - 1` is the energy
/// of level `s` read off from the matrix of `E`.
pub fn majorana_spectrum(n: usize, mass: &BigRational, smax: usize) -> Result<Vec<(usize, BigRational)>> {
    if !mass.is_positive() {
        return Err(Error::InvalidArgument("mass parameter must be positive".into()));
    }
    let q = SingletonQuotient::new(n, smax)?;
    (0..=smax)
        .map(|s| {
            let e = energy_of(&q, s)?;
            if !e.is_real() || !e.re.is_positive() {
                return Err(Error::InvalidArgument(format!("non-positive energy {e} at level {s}")));
            }
            Ok((s, mass / &e.re))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    #[test]
    fn branching_small() {
        let rows = branching_check(3, 4).unwrap();
        let dims: Vec<usize> = rows.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![1, 3, 5, 7, 9]);
        assert!(rows.iter().all(BranchingRow::ok));
        assert_eq!(rows[0].energy, GR::frac(1, 2));
        let rows = branching_check(4, 3).unwrap();
        let dims: Vec<usize> = rows.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![1, 4, 9, 16]);
    }

    #[test]
    fn energy_agrees_with_matrix() {
        let q = SingletonQuotient::new(4, 3).unwrap();
        let mut lite = SingletonQuotient::levels_only(4, 3).unwrap();
        for t in 0..=3 {
            assert_eq!(energy_of(&q, t).unwrap(), lite.energy(t).unwrap());
        }
    }

    #[test]
    fn majorana() {
        let sp = majorana_spectrum(3, &rat(1, 1), 2).unwrap();
        assert_eq!(sp, vec![(0, rat(2, 1)), (1, rat(2, 3)), (2, rat(2, 5))]);
        assert_eq!(majorana_spectrum(4, &rat(1, 1), 0).unwrap(), vec![(0, rat(1, 1))]);
        assert!(majorana_spectrum(3, &rat(0, 1), 2).is_err());
    }
}
