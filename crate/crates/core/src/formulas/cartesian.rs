use num_complex::Complex64;

use super::{ones, sum, FactorSpectralData, DENOMINATOR_FLOOR};
use crate::digraph::Digraph;
use crate::eigen::{eigenvalues, Eigenpair, JordanStructure, Spectrum, Tolerances};
use crate::error::{Error, Operand, Result};
use crate::matrix::{digraph_matrix, kron_vec, MatrixKind};

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Spectrum of `M ⊗ I + I ⊗ M'`: all pairwise sums.
pub fn spec_box_i(s: &Spectrum, s2: &Spectrum) -> Spectrum {
    let pairs: Vec<_> = s
        .items()
        .iter()
        .flat_map(|a| s2.items().iter().map(move |b| (a.value + b.value, a.mult * b.mult)))
        .collect();
    Spectrum::from_weighted(&pairs)
}

/// Spectrum of `M ⊗ J + J ⊗ M'` for constant-row-sum factors.
pub fn spec_box_j(f: &FactorSpectralData, f2: &FactorSpectralData) -> Result<Spectrum> {
    let (n, n2) = (f.n(), f2.n());
    let (nf, n2f) = (n as f64, n2 as f64);
    let mut pairs = vec![
        (real(nf * f2.rho() + n2f * f.rho()), 1),
        (real(0.0), (n - 1) * (n2 - 1)),
    ];
    pairs.extend(f.rest().items().iter().map(|it| (it.value * n2f, it.mult)));
    pairs.extend(f2.rest().items().iter().map(|it| (it.value * nf, it.mult)));
    let out = Spectrum::from_weighted(&pairs);
    if out.order() != n * n2 {
        return Err(Error::OrderMismatch {
            expected: n * n2,
            got: out.order(),
        });
    }
    Ok(out)
}

fn perron_simple(j: &JordanStructure, rho: f64) -> Result<()> {
    if j.sizes_at(real(rho), 1e-8 * (1.0 + rho.abs())) == [1] {
        Ok(())
    } else {
        Err(Error::PerronNotSimple)
    }
}

/// Jordan structure of `M ⊗ J + J ⊗ M'` from the structures of the factors.
pub fn jordan_box_j(jm: &JordanStructure, rho: f64, jm2: &JordanStructure, rho2: f64) -> Result<JordanStructure> {
    perron_simple(jm, rho)?;
    perron_simple(jm2, rho2)?;
    let (n, n2) = (jm.order(), jm2.order());
    let mut entries = vec![
        (real(n as f64 * rho2 + n2 as f64 * rho), vec![1]),
        (real(0.0), vec![1; (n - 1) * (n2 - 1)]),
    ];
    let scaled = |j: &JordanStructure, perron: f64, by: f64| {
        j.blocks()
            .iter()
            .filter(|b| (b.value - real(perron)).norm() > 1e-8 * (1.0 + perron.abs()))
            .map(|b| (b.value * by, b.sizes.clone()))
            .collect::<Vec<_>>()
    };
    entries.extend(scaled(jm, rho, n2 as f64));
    entries.extend(scaled(jm2, rho2, n as f64));
    Ok(JordanStructure::new(entries))
}

/// Eigenvectors of `M ⊗ J + J ⊗ M'`: the ones vector, lifted eigenvectors of each factor
/// corrected by a multiple of the ones vector, and products of null vectors of `J`.
pub fn eigvecs_box_j(f: &FactorSpectralData, f2: &FactorSpectralData) -> Result<Vec<Eigenpair>> {
    let (n, n2) = (f.n(), f2.n());
    let (nf, n2f) = (n as f64, n2 as f64);
    let (rho, rho2) = (f.rho(), f2.rho());
    let top = nf * rho2 + n2f * rho;
    let scale = 1.0 + top.abs();
    let all_ones = ones(n * n2);
    let mut out = vec![(real(top), all_ones.clone())];
    let mut lifted = |pairs: &[Eigenpair], own: f64, other_rho: f64, first: bool| -> Result<()> {
        for (lambda, v) in pairs {
            let den = lambda * own - top;
            if den.norm() < DENOMINATOR_FLOOR * scale {
                return Err(Error::DenominatorVanishes);
            }
            let gamma = sum(v) * other_rho / den;
            let base = if first {
                kron_vec(v, &ones(n2))
            } else {
                kron_vec(&ones(n), v)
            };
            let w = base.iter().zip(&all_ones).map(|(a, b)| a + gamma * b).collect();
            out.push((lambda * own, w));
        }
        Ok(())
    };
    lifted(f.non_perron(), n2f, rho2, true)?;
    lifted(f2.non_perron(), nf, rho, false)?;
    let null = |k: usize| -> Vec<Vec<Complex64>> {
        (1..k)
            .map(|i| {
                let mut z = vec![real(0.0); k];
                z[0] = real(1.0);
                z[i] = real(-1.0);
                z
            })
            .collect()
    };
    for z in null(n) {
        for z2 in null(n2) {
            out.push((real(0.0), kron_vec(&z, &z2)));
        }
    }
    Ok(out)
}

fn transmission(g: &Digraph, which: Operand) -> Result<f64> {
    g.metrics()
        .transmission_regularity
        .map(|t| t as f64)
        .ok_or(Error::NotTransmissionRegular(which))
}

/// Spectrum of the chosen matrix of the Cartesian product, from the factors' spectra.
pub fn spec_cartesian(g: &Digraph, h: &Digraph, kind: MatrixKind, tol: &Tolerances) -> Result<Spectrum> {
    if !kind.is_distance() {
        let s = eigenvalues(&digraph_matrix(g, kind)?, tol.cluster)?;
        let s2 = eigenvalues(&digraph_matrix(h, kind)?, tol.cluster)?;
        return Ok(spec_box_i(&s, &s2));
    }
    let t = transmission(g, Operand::First)?;
    let t2 = transmission(h, Operand::Second)?;
    let f = FactorSpectralData::from_matrix(&digraph_matrix(g, kind)?, Operand::First, tol)?;
    let f2 = FactorSpectralData::from_matrix(&digraph_matrix(h, kind)?, Operand::Second, tol)?;
    if kind == MatrixKind::D {
        return spec_box_j(&f, &f2);
    }
    let (n, n2) = (g.n(), h.n());
    let (nf, n2f) = (n as f64, n2 as f64);
    let total = nf * t2 + n2f * t;
    let top = if kind == MatrixKind::DL { 0.0 } else { 2.0 * total };
    let mut pairs = vec![(real(top), 1), (real(total), (n - 1) * (n2 - 1))];
    pairs.extend(f.rest().items().iter().map(|it| (it.value * n2f + nf * t2, it.mult)));
    pairs.extend(f2.rest().items().iter().map(|it| (it.value * nf + n2f * t, it.mult)));
    Ok(Spectrum::from_weighted(&pairs))
}
