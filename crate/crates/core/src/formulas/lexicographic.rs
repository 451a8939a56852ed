use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{ones, sum, FactorSpectralData, DENOMINATOR_FLOOR};
use crate::digraph::Digraph;
use crate::eigen::{
    cluster_radius, eigenpairs, eigenspace_perp_ones, eigenvalues, geometric_multiplicity, linearly_independent,
    Eigenpair, GmultMode, Spectrum, Tolerances,
};
use crate::error::{Error, Hypothesis, Operand, Result};
use crate::matrix::{digraph_matrix, kron_vec, MatrixKind, RealMatrix};

/// Spectral data of `F1 ⊗ J + I ⊗ F2` up to an affine change of variables:
/// the spectrum is `{n' λ + shift : λ ∈ spec F1} ∪ {(sign μ + offset)^(n) : μ ∈ spec F2 minus rho2}`.
#[derive(Clone, Debug)]
pub struct LexpKernel {
    first: RealMatrix,
    first_spectrum: Spectrum,
    shift: f64,
    second: RealMatrix,
    second_rho: f64,
    second_rest: Spectrum,
    sign: f64,
    offset: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GmultCase {
    FirstOnly,
    SecondOnly,
    BothPerp,
    BothNotPerp,
    Neither,
}

/// A multiplicity query with every intermediate quantity of the case table.
#[derive(Clone, Debug, Serialize)]
pub struct GmultQuery {
    pub z: Complex64,
    pub z_tilde: Complex64,
    pub z_hat: Complex64,
    pub g: usize,
    pub g2: usize,
    pub in_first: bool,
    pub in_second: bool,
    pub perp: Option<bool>,
    pub case: GmultCase,
    pub value: usize,
}

fn nearest(s: &Spectrum, z: Complex64, radius: f64) -> Option<Complex64> {
    s.values()
        .into_iter()
        .filter(|v| (v - z).norm() <= radius)
        .min_by(|a, b| (a - z).norm().total_cmp(&(b - z).norm()))
}

fn gmult_at(m: &RealMatrix, z: Complex64, tol: &Tolerances) -> Result<usize> {
    let g = geometric_multiplicity(m, z, GmultMode::Numeric(tol.rank))?;
    if g > 0 {
        return Ok(g);
    }
    geometric_multiplicity(m, z, GmultMode::Numeric(tol.cluster))
}

fn perp_at(m: &RealMatrix, z: Complex64, tol: &Tolerances) -> Result<bool> {
    match eigenspace_perp_ones(m, z, tol.rank) {
        Err(Error::NotAnEigenvalue) => eigenspace_perp_ones(m, z, tol.cluster),
        other => other,
    }
}

impl LexpKernel {
    #[allow(clippy::too_many_arguments)]
    fn build(
        first: RealMatrix,
        shift: f64,
        second: RealMatrix,
        second_rho: f64,
        sign: f64,
        offset: f64,
        tol: &Tolerances,
    ) -> Result<LexpKernel> {
        let first_spectrum = eigenvalues(&first, tol.cluster)?;
        let second_rest = eigenvalues(&second, tol.cluster)?.without_one(Complex64::new(second_rho, 0.0));
        Ok(LexpKernel {
            first,
            first_spectrum,
            shift,
            second,
            second_rho,
            second_rest,
            sign,
            offset,
        })
    }

    /// The construction `M ⊗ J + I ⊗ M'` itself; `M'` must have constant row sums.
    pub fn from_matrices(m: &RealMatrix, m2: &RealMatrix, tol: &Tolerances) -> Result<LexpKernel> {
        for (x, which) in [(m, Operand::First), (m2, Operand::Second)] {
            x.order()?;
            if !x.is_nonnegative() {
                return Err(Error::HypothesisViolated(Hypothesis::Nonnegative(which)));
            }
            if !x.is_irreducible() {
                return Err(Error::HypothesisViolated(Hypothesis::Irreducible(which)));
            }
        }
        let rho2 = m2
            .constant_row_sum(tol.rank * (1.0 + m2.norm_inf()))
            .ok_or(Error::HypothesisViolated(Hypothesis::ConstantRowSum(Operand::Second)))?;
        LexpKernel::build(m.clone(), rho2, m2.clone(), rho2, 1.0, 0.0, tol)
    }

    pub fn n(&self) -> usize {
        self.first.rows()
    }

    pub fn n2(&self) -> usize {
        self.second.rows()
    }

    pub fn first(&self) -> &RealMatrix {
        &self.first
    }

    pub fn second(&self) -> &RealMatrix {
        &self.second
    }

    pub fn second_rho(&self) -> f64 {
        self.second_rho
    }

    /// `(shift, sign, offset)`.
    pub fn parameters(&self) -> (f64, f64, f64) {
        (self.shift, self.sign, self.offset)
    }

    pub fn spectrum(&self) -> Spectrum {
        let n2 = self.n2() as f64;
        let lifted = self.first_spectrum.map(|l| l * n2 + self.shift);
        let moved = self.second_rest.map(|m| m * self.sign + self.offset).repeated(self.n());
        lifted.union(&moved)
    }

    /// Five-case geometric multiplicity at `z`.
    pub fn gmult(&self, z: Complex64, tol: &Tolerances) -> Result<GmultQuery> {
        let z_tilde = (z - self.shift) / self.n2() as f64;
        let z_hat = (z - self.offset) / self.sign;
        let near1 = nearest(&self.first_spectrum, z_tilde, cluster_radius(&self.first, tol.cluster));
        let near2 = nearest(&self.second_rest, z_hat, cluster_radius(&self.second, tol.cluster));
        let g = match near1 {
            Some(v) => gmult_at(&self.first, v, tol)?,
            None => 0,
        };
        let g2 = match near2 {
            Some(v) => gmult_at(&self.second, v, tol)?,
            None => 0,
        };
        let perp = match (near1, near2) {
            (Some(_), Some(v)) => Some(perp_at(&self.second, v, tol)?),
            _ => None,
        };
        let n = self.n();
        let (case, value) = match (near1.is_some(), near2.is_some(), perp) {
            (true, false, _) => (GmultCase::FirstOnly, g),
            (false, true, _) => (GmultCase::SecondOnly, n * g2),
            (true, true, Some(true)) => (GmultCase::BothPerp, n * g2 + g),
            (true, true, _) => (GmultCase::BothNotPerp, n * g2),
            (false, false, _) => (GmultCase::Neither, 0),
        };
        Ok(GmultQuery {
            z,
            z_tilde,
            z_hat,
            g,
            g2,
            in_first: near1.is_some(),
            in_second: near2.is_some(),
            perp,
            case,
            value,
        })
    }
}

/// Spectrum of `M ⊗ J + I ⊗ M'` from the full spectrum of `M` and the data of `M'`.
pub fn spec_lexp_construction(sm: &Spectrum, f2: &FactorSpectralData) -> Result<Spectrum> {
    let (n, n2) = (sm.order(), f2.n());
    let lifted = sm.map(|l| l * n2 as f64 + f2.rho());
    let out = lifted.union(&f2.rest().repeated(n));
    if out.order() != n * n2 {
        return Err(Error::OrderMismatch {
            expected: n * n2,
            got: out.order(),
        });
    }
    Ok(out)
}

pub fn gmult_lexp(m: &RealMatrix, m2: &RealMatrix, z: Complex64, tol: &Tolerances) -> Result<GmultQuery> {
    LexpKernel::from_matrices(m, m2, tol)?.gmult(z, tol)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LexpKind {
    A,
    L,
    Q,
    DGirth,
    DDoubly,
    DLGirth,
    DLDoubly,
    DQGirth,
    DQDoubly,
}

impl LexpKind {
    pub const ALL: [LexpKind; 9] = [
        LexpKind::A,
        LexpKind::L,
        LexpKind::Q,
        LexpKind::DGirth,
        LexpKind::DDoubly,
        LexpKind::DLGirth,
        LexpKind::DLDoubly,
        LexpKind::DQGirth,
        LexpKind::DQDoubly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LexpKind::A => "A",
            LexpKind::L => "L",
            LexpKind::Q => "Q",
            LexpKind::DGirth => "D-girth",
            LexpKind::DDoubly => "D-doubly",
            LexpKind::DLGirth => "DL-girth",
            LexpKind::DLDoubly => "DL-doubly",
            LexpKind::DQGirth => "DQ-girth",
            LexpKind::DQDoubly => "DQ-doubly",
        }
    }

    /// Matrix of the product whose spectrum is predicted.
    pub fn matrix_kind(self) -> MatrixKind {
        match self {
            LexpKind::A => MatrixKind::A,
            LexpKind::L => MatrixKind::L,
            LexpKind::Q => MatrixKind::Q,
            LexpKind::DGirth | LexpKind::DDoubly => MatrixKind::D,
            LexpKind::DLGirth | LexpKind::DLDoubly => MatrixKind::DL,
            LexpKind::DQGirth | LexpKind::DQDoubly => MatrixKind::DQ,
        }
    }

    fn second_kind(self) -> MatrixKind {
        match self {
            LexpKind::DGirth => MatrixKind::D,
            LexpKind::DLGirth => MatrixKind::DL,
            LexpKind::DQGirth => MatrixKind::DQ,
            LexpKind::L => MatrixKind::L,
            LexpKind::Q => MatrixKind::Q,
            _ => MatrixKind::A,
        }
    }

    pub fn is_doubly(self) -> bool {
        matches!(self, LexpKind::DDoubly | LexpKind::DLDoubly | LexpKind::DQDoubly)
    }
}

impl fmt::Display for LexpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LexpKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        LexpKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown lexicographic case {s}"))
    }
}

fn violated(h: Hypothesis) -> Result<()> {
    Err(Error::HypothesisViolated(h))
}

/// Checks every structural condition of `kind`, reporting the first one that fails.
pub fn check_lexp_hypotheses(g: &Digraph, h: &Digraph, kind: LexpKind) -> Result<()> {
    if !g.is_strongly_connected() {
        return violated(Hypothesis::StronglyConnected(Operand::First));
    }
    if !h.is_strongly_connected() {
        return violated(Hypothesis::StronglyConnected(Operand::Second));
    }
    let (mg, mh) = (g.metrics(), h.metrics());
    let needs_first_out = matches!(kind, LexpKind::L | LexpKind::Q);
    let needs_second_out = matches!(kind, LexpKind::A | LexpKind::L | LexpKind::Q) || kind.is_doubly();
    let needs_first_trans = matches!(
        kind,
        LexpKind::DLGirth | LexpKind::DQGirth | LexpKind::DLDoubly | LexpKind::DQDoubly
    );
    let girth_kind = matches!(kind, LexpKind::DGirth | LexpKind::DLGirth | LexpKind::DQGirth);
    if needs_first_out && !mg.is_out_regular() {
        return violated(Hypothesis::OutRegular(Operand::First));
    }
    if needs_second_out && !mh.is_out_regular() {
        return violated(Hypothesis::OutRegular(Operand::Second));
    }
    if needs_first_trans && !mg.is_transmission_regular() {
        return violated(Hypothesis::TransmissionRegular(Operand::First));
    }
    if girth_kind && !mh.is_transmission_regular() {
        return violated(Hypothesis::TransmissionRegular(Operand::Second));
    }
    if girth_kind && mh.diameter > mg.girth {
        return violated(Hypothesis::DiameterWithinGirth);
    }
    if kind.is_doubly() && !mg.doubly_directed_cover {
        return violated(Hypothesis::DoublyDirectedCover);
    }
    Ok(())
}

/// Kernel parameters of a digraph case after its hypotheses are checked.
pub fn lexp_kernel(g: &Digraph, h: &Digraph, kind: LexpKind, tol: &Tolerances) -> Result<LexpKernel> {
    check_lexp_hypotheses(g, h, kind)?;
    let (mg, mh) = (g.metrics(), h.metrics());
    let n2 = h.n() as f64;
    let r = mg.out_regularity.unwrap_or(0) as f64;
    let r2 = mh.out_regularity.unwrap_or(0) as f64;
    let t = mg.transmission_regularity.unwrap_or(0) as f64;
    let t2 = mh.transmission_regularity.unwrap_or(0) as f64;
    let first = digraph_matrix(g, kind.matrix_kind())?;
    let second = digraph_matrix(h, kind.second_kind())?;
    let (shift, rho2, sign, offset) = match kind {
        LexpKind::A => (r2, r2, 1.0, 0.0),
        LexpKind::L => (0.0, 0.0, 1.0, r * n2),
        LexpKind::Q => (2.0 * r2, 2.0 * r2, 1.0, r * n2),
        LexpKind::DGirth => (t2, t2, 1.0, 0.0),
        LexpKind::DDoubly => (2.0 * n2 - 2.0 - r2, r2, -1.0, -2.0),
        LexpKind::DLGirth => (0.0, 0.0, 1.0, t * n2),
        LexpKind::DQGirth => (2.0 * t2, 2.0 * t2, 1.0, t * n2),
        LexpKind::DLDoubly => (0.0, r2, 1.0, t * n2 + 2.0 * n2 - r2),
        LexpKind::DQDoubly => (4.0 * n2 - 4.0 - 2.0 * r2, r2, -1.0, t * n2 + 2.0 * n2 - r2 - 4.0),
    };
    LexpKernel::build(first, shift, second, rho2, sign, offset, tol)
}

pub fn spec_lexp_digraph(g: &Digraph, h: &Digraph, kind: LexpKind, tol: &Tolerances) -> Result<Spectrum> {
    Ok(lexp_kernel(g, h, kind, tol)?.spectrum())
}

pub fn gmult_lexp_digraph(
    g: &Digraph,
    h: &Digraph,
    kind: LexpKind,
    z: Complex64,
    tol: &Tolerances,
) -> Result<GmultQuery> {
    lexp_kernel(g, h, kind, tol)?.gmult(z, tol)
}

/// The distance-type case that applies to `(g, h)`, preferring the girth condition.
pub fn distance_regime(g: &Digraph, h: &Digraph, kind: MatrixKind) -> Result<LexpKind> {
    let (girth, doubly) = match kind {
        MatrixKind::D => (LexpKind::DGirth, LexpKind::DDoubly),
        MatrixKind::DL => (LexpKind::DLGirth, LexpKind::DLDoubly),
        MatrixKind::DQ => (LexpKind::DQGirth, LexpKind::DQDoubly),
        _ => return Err(Error::DimensionMismatch(format!("{kind} is not a distance matrix"))),
    };
    match check_lexp_hypotheses(g, h, girth) {
        Ok(()) => Ok(girth),
        Err(e) => check_lexp_hypotheses(g, h, doubly).map(|_| doubly).map_err(|_| e),
    }
}

/// `2 J - 2 I - A`, the matrix `A + 2 A(complement)` of an adjacency matrix `A`.
pub fn complement_matrix(a: &RealMatrix) -> RealMatrix {
    let n = a.rows();
    RealMatrix::from_fn(n, n, |i, j| if i == j { 0.0 } else { 2.0 - a[(i, j)] })
}

/// Data of `2 J - 2 I - A` derived from that of an `r`-out-regular adjacency matrix.
#[derive(Clone, Debug)]
pub struct ComplementShift {
    pub data: FactorSpectralData,
    /// `beta_j` for each non-Perron eigenpair, in order.
    pub betas: Vec<Complex64>,
    r: f64,
}

impl ComplementShift {
    /// `gmult_B(z)` read off the adjacency matrix `a` through the shift `z = -alpha - 2`.
    pub fn transferred_gmult(&self, a: &RealMatrix, z: Complex64, tol: &Tolerances) -> Result<usize> {
        let top = Complex64::new(self.data.rho(), 0.0);
        let radius = cluster_radius(a, tol.cluster);
        let perron = usize::from((z - top).norm() <= radius);
        let alpha = -z - 2.0;
        let mut g = geometric_multiplicity(a, alpha, GmultMode::Numeric(tol.rank))?;
        if (alpha - Complex64::new(self.r, 0.0)).norm() <= radius {
            g = g.saturating_sub(1);
        }
        Ok(perron + g)
    }
}

pub fn complement_shift(f: &FactorSpectralData) -> Result<ComplementShift> {
    let (n, r) = (f.n() as f64, f.rho());
    let top = 2.0 * n - 2.0 - r;
    let rest = f.rest().map(|alpha| -(alpha + 2.0));
    let mut pairs = Vec::new();
    let mut betas = Vec::new();
    if !f.eigvecs().is_empty() {
        pairs.push((Complex64::new(top, 0.0), ones(f.n())));
        for (alpha, v) in f.non_perron() {
            let den = r - alpha - 2.0 * n;
            if den.norm() < DENOMINATOR_FLOOR * (1.0 + 2.0 * n) {
                return Err(Error::DenominatorVanishes);
            }
            let beta = sum(v) * 2.0 / den;
            pairs.push((-(alpha + 2.0), v.iter().map(|x| x + beta).collect()));
            betas.push(beta);
        }
    }
    let data = FactorSpectralData::new(f.n(), top, rest)?.with_given_eigvecs(pairs);
    Ok(ComplementShift { data, betas, r })
}

#[derive(Clone, Debug, Serialize)]
pub struct SkippedPair {
    pub first: usize,
    pub second: usize,
    pub denominator: Complex64,
}

#[derive(Clone, Debug)]
pub struct LexpEigvecs {
    pub pairs: Vec<Eigenpair>,
    pub skipped: Vec<SkippedPair>,
    pub independent: bool,
}

/// Eigenvectors `v ⊗ 1` and `v ⊗ v' + gamma v ⊗ 1` of `M ⊗ J + I ⊗ M'`.
pub fn eigvecs_lexp(first: &[Eigenpair], f2: &FactorSpectralData, tol: &Tolerances) -> LexpEigvecs {
    let n2 = f2.n();
    let rho2 = f2.rho();
    let one2 = ones(n2);
    let mut pairs: Vec<Eigenpair> = first
        .iter()
        .map(|(l, v)| (l * n2 as f64 + rho2, kron_vec(v, &one2)))
        .collect();
    let mut skipped = Vec::new();
    for (j, (mu, v2)) in f2.non_perron().iter().enumerate() {
        let s = sum(v2);
        for (i, (l, v)) in first.iter().enumerate() {
            let den = l * n2 as f64 + rho2 - mu;
            let scale = 1.0 + rho2.abs() + n2 as f64 * l.norm() + mu.norm();
            if den.norm() < DENOMINATOR_FLOOR * scale {
                log::warn!("skipping eigenvector pair ({i}, {j}): denominator {den}");
                skipped.push(SkippedPair {
                    first: i,
                    second: j,
                    denominator: den,
                });
                continue;
            }
            let gamma = -l * s / den;
            let w = kron_vec(v, v2)
                .into_iter()
                .zip(kron_vec(v, &one2))
                .map(|(a, b)| a + gamma * b)
                .collect();
            pairs.push((*mu, w));
        }
    }
    let vectors: Vec<_> = pairs.iter().map(|p| p.1.clone()).collect();
    LexpEigvecs {
        independent: linearly_independent(&vectors, tol.rank),
        pairs,
        skipped,
    }
}

/// Eigenvectors of the adjacency or distance matrix of `g ∘ h` for the cases with a formula.
pub fn eigvecs_lexp_digraph(g: &Digraph, h: &Digraph, kind: LexpKind, tol: &Tolerances) -> Result<LexpEigvecs> {
    check_lexp_hypotheses(g, h, kind)?;
    let first = digraph_matrix(g, kind.matrix_kind())?;
    let first_pairs = eigenpairs(&first, tol)?;
    let second = digraph_matrix(h, kind.second_kind())?;
    let f2 = FactorSpectralData::from_matrix(&second, Operand::Second, tol)?.with_eigvecs(&second, tol)?;
    match kind {
        LexpKind::A | LexpKind::DGirth => Ok(eigvecs_lexp(&first_pairs, &f2, tol)),
        LexpKind::DDoubly => Ok(eigvecs_lexp(&first_pairs, &complement_shift(&f2)?.data, tol)),
        other => Err(Error::NoEigenvectorFormula(other.name())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{directed_cycle, figure1};
    use crate::eigen::{relative_residual, spectrum_match};
    use crate::matrix::{construction, Construction};
    use crate::products::{product, ProductKind};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn example_pair() -> (RealMatrix, RealMatrix) {
        let a = (28.0 - 7f64.sqrt()) / 3.0;
        let m = RealMatrix::from_rows(&[vec![0.0, a], vec![a, 0.0]]).unwrap();
        let m2 = RealMatrix::from_rows(&[vec![12.0, 6.0, 12.0], vec![7.0, 13.0, 10.0], vec![6.0, 15.0, 9.0]]).unwrap();
        (m, m2)
    }

    #[test]
    fn worked_example_spectrum() {
        let tol = Tolerances::default();
        let (m, m2) = example_pair();
        let s7 = 7f64.sqrt();
        let want = Spectrum::from_weighted(&[(c(58.0 - s7, 0.0), 1), (c(2.0 + s7, 0.0), 3), (c(2.0 - s7, 0.0), 2)]);
        let f2 = FactorSpectralData::from_matrix(&m2, Operand::Second, &tol).unwrap();
        let got = spec_lexp_construction(&eigenvalues(&m, 1e-8).unwrap(), &f2).unwrap();
        assert!(spectrum_match(&want, &got, 1e-9).unwrap().passed);
        let kernel = LexpKernel::from_matrices(&m, &m2, &tol).unwrap();
        assert!(spectrum_match(&want, &kernel.spectrum(), 1e-9).unwrap().passed);
    }

    #[test]
    fn worked_example_multiplicities() {
        let tol = Tolerances::default();
        let (m, m2) = example_pair();
        let s7 = 7f64.sqrt();
        let q1 = gmult_lexp(&m, &m2, c(58.0 - s7, 0.0), &tol).unwrap();
        assert_eq!((q1.case, q1.value), (GmultCase::FirstOnly, 1));
        let q2 = gmult_lexp(&m, &m2, c(2.0 - s7, 0.0), &tol).unwrap();
        assert_eq!((q2.case, q2.value), (GmultCase::SecondOnly, 2));
        let q3 = gmult_lexp(&m, &m2, c(2.0 + s7, 0.0), &tol).unwrap();
        assert_eq!((q3.case, q3.value), (GmultCase::BothNotPerp, 2));
        assert_eq!(q3.perp, Some(false));
        let q4 = gmult_lexp(&m, &m2, c(1.0, 0.0), &tol).unwrap();
        assert_eq!((q4.case, q4.value), (GmultCase::Neither, 0));
    }

    #[test]
    fn worked_example_eigenvectors() {
        let tol = Tolerances::default();
        let (m, m2) = example_pair();
        let f2 = FactorSpectralData::from_matrix(&m2, Operand::Second, &tol)
            .unwrap()
            .with_eigvecs(&m2, &tol)
            .unwrap();
        let first = eigenpairs(&m, &tol).unwrap();
        let out = eigvecs_lexp(&first, &f2, &tol);
        let prod = construction(Construction::Lexp, &m, &m2).unwrap();
        assert!(out.independent);
        assert_eq!(out.skipped.len(), 1);
        assert_eq!(out.pairs.len(), 5);
        for (mu, w) in &out.pairs {
            assert!(relative_residual(&prod, *mu, w) <= 1e-8);
        }
    }

    #[test]
    fn long_girth_distance_case() {
        let tol = Tolerances::default();
        let (g, h) = (directed_cycle(5), directed_cycle(3));
        let got = spec_lexp_digraph(&g, &h, LexpKind::DGirth, &tol).unwrap();
        let d = digraph_matrix(&product(&g, &h, ProductKind::Lexicographic), MatrixKind::D).unwrap();
        let oracle = eigenvalues(&d, 1e-8).unwrap();
        assert!(spectrum_match(&got, &oracle, 1e-7).unwrap().passed);
        assert!(matches!(
            spec_lexp_digraph(&h, &g, LexpKind::DGirth, &tol),
            Err(Error::HypothesisViolated(Hypothesis::DiameterWithinGirth))
        ));
    }

    #[test]
    fn doubly_directed_case_on_figure1() {
        let tol = Tolerances::default();
        let (g, h) = (figure1(), directed_cycle(3));
        let got = spec_lexp_digraph(&g, &h, LexpKind::DDoubly, &tol).unwrap();
        let w = c(-0.5, 3f64.sqrt() / 2.0);
        let want = Spectrum::from_weighted(&[
            (c(15.0, 0.0), 1),
            (c(0.0, 0.0), 2),
            (c(-3.0, 0.0), 1),
            (-(w + 2.0), 4),
            (-(w.conj() + 2.0), 4),
        ]);
        assert!(spectrum_match(&want, &got, 1e-9).unwrap().passed);
        let d = digraph_matrix(&product(&g, &h, ProductKind::Lexicographic), MatrixKind::D).unwrap();
        let vecs = eigvecs_lexp_digraph(&g, &h, LexpKind::DDoubly, &tol).unwrap();
        assert!(vecs.independent);
        for (mu, w) in &vecs.pairs {
            assert!(relative_residual(&d, *mu, w) <= 1e-8);
        }
    }

    #[test]
    fn complement_of_four_cycle() {
        let tol = Tolerances::default();
        let a = digraph_matrix(&directed_cycle(4), MatrixKind::A).unwrap();
        let f = FactorSpectralData::from_matrix(&a, Operand::Second, &tol)
            .unwrap()
            .with_eigvecs(&a, &tol)
            .unwrap();
        let cs = complement_shift(&f).unwrap();
        let b = complement_matrix(&a);
        let oracle = eigenvalues(&b, 1e-8).unwrap();
        let want = Spectrum::from_values(&[c(5.0, 0.0), c(-2.0, -1.0), c(-1.0, 0.0), c(-2.0, 1.0)]);
        assert!(spectrum_match(&want, &cs.data.full_spectrum(), 1e-9).unwrap().passed);
        assert!(spectrum_match(&want, &oracle, 1e-7).unwrap().passed);
        for (mu, w) in cs.data.eigvecs() {
            assert!(relative_residual(&b, *mu, w) <= 1e-8);
        }
        for z in oracle.values() {
            let direct = geometric_multiplicity(&b, z, GmultMode::Numeric(1e-10)).unwrap();
            assert_eq!(cs.transferred_gmult(&a, z, &tol).unwrap(), direct);
        }
    }

    #[test]
    fn kind_names_round_trip() {
        for k in LexpKind::ALL {
            assert_eq!(k.name().parse::<LexpKind>().unwrap(), k);
        }
    }
}
