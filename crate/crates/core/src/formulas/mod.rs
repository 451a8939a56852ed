//! Closed-form spectra, multiplicities and eigenvectors of products and constructions.

mod cartesian;
mod lexicographic;
mod tensor;

pub use cartesian::{eigvecs_box_j, jordan_box_j, spec_box_i, spec_box_j, spec_cartesian};
pub use lexicographic::{
    check_lexp_hypotheses, complement_matrix, complement_shift, distance_regime, eigvecs_lexp, eigvecs_lexp_digraph,
    gmult_lexp, gmult_lexp_digraph, lexp_kernel, spec_lexp_construction, spec_lexp_digraph, ComplementShift, GmultCase,
    GmultQuery, LexpEigvecs, LexpKernel, LexpKind, SkippedPair,
};
pub use tensor::{spec_direct, spec_strong};

use num_complex::Complex64;

use crate::eigen::{eigenvalues, eigenvectors, CVec, Eigenpair, Spectrum, Tolerances};
use crate::error::{Error, Hypothesis, Operand, Result};
use crate::matrix::RealMatrix;

pub(crate) fn ones(n: usize) -> CVec {
    vec![Complex64::new(1.0, 0.0); n]
}

pub(crate) fn sum(v: &[Complex64]) -> Complex64 {
    v.iter().sum()
}

/// Below this relative size a closed-form denominator counts as zero.
pub(crate) const DENOMINATOR_FLOOR: f64 = 1e-12;

/// Spectral data of a constant-row-sum factor: the Perron value and the remaining eigenvalues.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorSpectralData {
    n: usize,
    rho: f64,
    rest: Spectrum,
    eigvecs: Vec<Eigenpair>,
}

impl FactorSpectralData {
    pub fn new(n: usize, rho: f64, rest: Spectrum) -> Result<FactorSpectralData> {
        if rest.order() + 1 != n {
            return Err(Error::OrderMismatch {
                expected: n,
                got: rest.order() + 1,
            });
        }
        Ok(FactorSpectralData {
            n,
            rho,
            rest,
            eigvecs: Vec::new(),
        })
    }

    /// Numerical data for `m`; the Perron value is its constant row sum.
    pub fn from_matrix(m: &RealMatrix, which: Operand, tol: &Tolerances) -> Result<FactorSpectralData> {
        let rho = m
            .constant_row_sum(tol.rank * (1.0 + m.norm_inf()))
            .ok_or(Error::HypothesisViolated(Hypothesis::ConstantRowSum(which)))?;
        let all = eigenvalues(m, tol.cluster)?;
        FactorSpectralData::new(m.rows(), rho, all.without_one(Complex64::new(rho, 0.0)))
    }

    /// Attaches the ones vector for `rho` and eigenvectors of `m` for each remaining value.
    pub fn with_eigvecs(mut self, m: &RealMatrix, tol: &Tolerances) -> Result<FactorSpectralData> {
        let mut pairs = vec![(Complex64::new(self.rho, 0.0), ones(self.n))];
        for z in self.rest.values() {
            let mut vs = eigenvectors(m, z, tol.rank)?;
            if vs.is_empty() {
                vs = eigenvectors(m, z, tol.cluster)?;
            }
            pairs.extend(vs.into_iter().map(|v| (z, v)));
        }
        self.eigvecs = pairs;
        Ok(self)
    }

    /// Caller-supplied eigenpairs; the first must be the ones vector at `rho`.
    pub fn with_given_eigvecs(mut self, pairs: Vec<Eigenpair>) -> FactorSpectralData {
        self.eigvecs = pairs;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn rest(&self) -> &Spectrum {
        &self.rest
    }

    pub fn eigvecs(&self) -> &[Eigenpair] {
        &self.eigvecs
    }

    /// Eigenpairs other than the leading ones vector.
    pub fn non_perron(&self) -> &[Eigenpair] {
        self.eigvecs.get(1..).unwrap_or(&[])
    }

    pub fn full_spectrum(&self) -> Spectrum {
        self.rest.union(&Spectrum::from_reals(&[self.rho]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_checked() {
        let rest = Spectrum::from_reals(&[-1.0]);
        assert!(FactorSpectralData::new(2, 1.0, rest.clone()).is_ok());
        assert!(matches!(
            FactorSpectralData::new(3, 1.0, rest),
            Err(Error::OrderMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn from_matrix_drops_perron() {
        let m = RealMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let f = FactorSpectralData::from_matrix(&m, Operand::First, &Tolerances::default())
            .unwrap()
            .with_eigvecs(&m, &Tolerances::default())
            .unwrap();
        assert_eq!(f.rho(), 1.0);
        assert_eq!(f.rest().order(), 1);
        assert!((f.rest().values()[0] - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert_eq!(f.eigvecs().len(), 2);
        assert!(sum(&f.non_perron()[0].1).norm() < 1e-12);
    }

    #[test]
    fn nonconstant_rows_rejected() {
        let m = RealMatrix::from_rows(&[vec![0.0, 2.0], vec![1.0, 0.0]]).unwrap();
        assert!(matches!(
            FactorSpectralData::from_matrix(&m, Operand::Second, &Tolerances::default()),
            Err(Error::HypothesisViolated(Hypothesis::ConstantRowSum(Operand::Second)))
        ));
    }
}
