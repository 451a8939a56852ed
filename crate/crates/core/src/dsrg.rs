//! Directed strongly regular graphs and few-eigenvalue distance spectra.

use num_complex::Complex64;
use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Dist};
use crate::eigen::{eigenvalues, eigenvectors, CVec, Spectrum, Tolerances};
use crate::error::{Error, Hypothesis, Result};
use crate::matrix::{digraph_integer_matrix, digraph_matrix, MatrixKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DsrgParams {
    pub n: i64,
    pub k: i64,
    pub s: i64,
    pub a: i64,
    pub c: i64,
}

impl DsrgParams {
    pub fn new(n: i64, k: i64, s: i64, a: i64, c: i64) -> DsrgParams {
        DsrgParams { n, k, s, a, c }
    }

    /// `(c - a)^2 + 4 (s - c)`.
    pub fn discriminant(&self) -> i64 {
        (self.c - self.a).pow(2) + 4 * (self.s - self.c)
    }

    /// Row sums of the defining identity must agree: `k^2 = s + a k + c (n - 1 - k)`.
    pub fn satisfies_counting_identity(&self) -> bool {
        let DsrgParams { n, k, s, a, c } = *self;
        n > 0 && 0 <= k && k < n && 0 <= s && s <= k && k * k == s + a * k + c * (n - 1 - k)
    }
}

/// Exact integer check of `A^2 = s I + a A + c (J - I - A)` and `A J = J A = k J`.
pub fn validate_dsrg(g: &Digraph, p: &DsrgParams) -> bool {
    let n = g.n();
    if n as i64 != p.n || !(0..p.n).contains(&p.k) || p.s > p.k || p.s < 0 {
        return false;
    }
    let a = digraph_integer_matrix(g, MatrixKind::A).expect("adjacency always exists");
    let row_ok = (0..n).all(|i| (0..n).map(|j| a.get(i, j)).sum::<i64>() == p.k);
    let col_ok = (0..n).all(|j| (0..n).map(|i| a.get(i, j)).sum::<i64>() == p.k);
    if !row_ok || !col_ok {
        return false;
    }
    (0..n).all(|i| {
        (0..n).all(|j| {
            let sq: i64 = (0..n).map(|l| a.get(i, l) * a.get(l, j)).sum();
            let want = if i == j {
                p.s
            } else if a.get(i, j) == 1 {
                p.a
            } else {
                p.c
            };
            sq == want
        })
    })
}

/// Reads `(n, k, s, a, c)` off the adjacency matrix, if `g` is a DSRG.
pub fn infer_dsrg_params(g: &Digraph) -> Option<DsrgParams> {
    let n = g.n();
    let k = g.out_degree(0) as i64;
    let sq = |i: usize, j: usize| g.out_neighbors(i).filter(|&l| g.has_arc(l, j)).count() as i64;
    let s = sq(0, 0);
    let pairs = || (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j);
    let a = pairs().find(|&(i, j)| g.has_arc(i, j)).map_or(0, |(i, j)| sq(i, j));
    let c = pairs().find(|&(i, j)| !g.has_arc(i, j)).map_or(0, |(i, j)| sq(i, j));
    let p = DsrgParams::new(n as i64, k, s, a, c);
    validate_dsrg(g, &p).then_some(p)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DuvalSpectrum {
    pub params: DsrgParams,
    pub discriminant: i64,
    /// `k`, then the `+` and `-` roots of `x^2 - (a - c) x - (s - c)`.
    pub theta: [Complex64; 3],
    /// Exact values when the discriminant is a perfect square.
    pub exact_theta: Option<[Ratio<i64>; 3]>,
    pub mult: [Ratio<i64>; 3],
}

impl DuvalSpectrum {
    /// Multiplicities when all three are nonnegative integers.
    pub fn multiplicities(&self) -> Option<[usize; 3]> {
        let mut out = [0; 3];
        for (o, m) in out.iter_mut().zip(&self.mult) {
            if !m.is_integer() || *m < Ratio::zero() {
                return None;
            }
            *o = m.to_integer() as usize;
        }
        Some(out)
    }

    pub fn spectrum(&self) -> Result<Spectrum> {
        let mult = self.multiplicities().ok_or(Error::InadmissibleParameters)?;
        let pairs: Vec<_> = self.theta.iter().copied().zip(mult).collect();
        Ok(Spectrum::from_weighted(&pairs))
    }
}

pub fn duval_spectrum(p: &DsrgParams) -> Result<DuvalSpectrum> {
    let d = p.discriminant();
    if d == 0 {
        return Err(Error::DegenerateDiscriminant);
    }
    let k = Ratio::from_integer(p.k);
    let n1 = Ratio::from_integer(p.n - 1);
    let shift = (p.a - p.c) as f64 / 2.0;
    let root = (d.abs() as f64).sqrt() / 2.0;
    let (theta2, theta3) = if d > 0 {
        (Complex64::new(shift + root, 0.0), Complex64::new(shift - root, 0.0))
    } else {
        (Complex64::new(shift, root), Complex64::new(shift, -root))
    };
    let e = if d > 0 { d.sqrt() } else { -1 };
    let (exact_theta, mult) = if e * e == d {
        let t2 = Ratio::new(p.a - p.c + e, 2);
        let t3 = Ratio::new(p.a - p.c - e, 2);
        let m2 = -(k + t3 * n1) / (t2 - t3);
        (Some([k, t2, t3]), [Ratio::from_integer(1), m2, n1 - m2])
    } else {
        let half = n1 / 2;
        (None, [Ratio::from_integer(1), half, half])
    };
    Ok(DuvalSpectrum {
        params: *p,
        discriminant: d,
        theta: [Complex64::new(p.k as f64, 0.0), theta2, theta3],
        exact_theta,
        mult,
    })
}

/// Spectrum of `A`, `L`, `Q`, `D`, `DL` or `DQ` of a DSRG with parameters `p`.
pub fn dsrg_derived_spectra(p: &DsrgParams, kind: MatrixKind) -> Result<Spectrum> {
    let duval = duval_spectrum(p)?;
    let mult = duval.multiplicities().ok_or(Error::InadmissibleParameters)?;
    if kind.is_distance() && p.c == 0 && p.k < p.n - 1 {
        return Err(Error::HypothesisViolated(Hypothesis::DiameterAtMostTwo));
    }
    let (n, k) = (p.n as f64, p.k as f64);
    let [_, t2, t3] = duval.theta;
    let c = |x: f64| Complex64::new(x, 0.0);
    let values = match kind {
        MatrixKind::A => [c(k), t2, t3],
        MatrixKind::L => [c(0.0), k - t2, k - t3],
        MatrixKind::Q => [c(2.0 * k), k + t2, k + t3],
        MatrixKind::D => [c(2.0 * n - 2.0 - k), -2.0 - t2, -2.0 - t3],
        MatrixKind::DL => [c(0.0), 2.0 * n - k + t2, 2.0 * n - k + t3],
        MatrixKind::DQ => [
            c(4.0 * n - 4.0 - 2.0 * k),
            2.0 * n - k - 4.0 - t2,
            2.0 * n - k - 4.0 - t3,
        ],
    };
    let pairs: Vec<_> = values.into_iter().zip(mult).collect();
    Ok(Spectrum::from_weighted(&pairs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SpectrumClass {
    AllRational,
    /// Real but irrational; only graph-like parameter sets with `s = k` land here.
    RealIrrational,
    Nonreal,
}

pub fn nonreal_classification(p: &DsrgParams) -> SpectrumClass {
    let d = p.discriminant();
    if (p.n == 2 * p.k + 1 && p.s == 0 && p.c == p.a + 1) || d < 0 {
        SpectrumClass::Nonreal
    } else if d.sqrt().pow(2) == d {
        SpectrumClass::AllRational
    } else {
        SpectrumClass::RealIrrational
    }
}

#[derive(Clone, Debug)]
pub struct Diam2Spectrum {
    pub spectrum: Spectrum,
    /// `(eigenvalue of D, eigenvector)`; eigenvectors of `A` carried over unchanged, plus the ones vector.
    pub eigvecs: Vec<(Complex64, CVec)>,
}

/// Distance spectrum `{2n - 2 - k, -(alpha + 2)}` of a `k`-regular digraph of diameter at most 2.
pub fn diam2_distance_spectrum(g: &Digraph, tol: &Tolerances) -> Result<Diam2Spectrum> {
    let m = g.metrics();
    let k = m.regularity().ok_or(Error::HypothesisViolated(Hypothesis::Regular))?;
    if m.diameter > Dist::finite(2) {
        return Err(Error::HypothesisViolated(Hypothesis::DiameterAtMostTwo));
    }
    let n = g.n();
    let a = digraph_matrix(g, MatrixKind::A)?;
    let perron = Complex64::new(k as f64, 0.0);
    let rest = eigenvalues(&a, tol.cluster)?.without_one(perron);
    let shifted = rest.map(|alpha| -(alpha + 2.0));
    let top = Complex64::new((2 * n - 2 - k) as f64, 0.0);
    let spectrum = shifted.union(&Spectrum::from_values(&[top]));
    let mut eigvecs = vec![(top, vec![Complex64::new(1.0, 0.0); n])];
    for alpha in rest.values() {
        for v in eigenvectors(&a, alpha, tol.rank)? {
            eigvecs.push((-(alpha + 2.0), v));
        }
    }
    Ok(Diam2Spectrum { spectrum, eigvecs })
}

/// `{l t n^(l-1), (p n^(l-1))^(m l), 0^(n^l - 1 - m l)}` for the `l`-th Cartesian power of a
/// transmission regular digraph whose distance spectrum is `{t, p^(m), 0^(n-1-m)}`.
pub fn cartesian_power_spectrum(t: f64, partial2: Complex64, m: usize, n: usize, ell: u32) -> Result<Spectrum> {
    if n == 0 || ell == 0 || m > n - 1 {
        return Err(Error::ShapeViolated);
    }
    let scale = (n as f64).powi(ell as i32 - 1);
    let order = n.checked_pow(ell).ok_or(Error::ShapeViolated)?;
    let ml = m * ell as usize;
    Ok(Spectrum::from_weighted(&[
        (Complex64::new(ell as f64 * t * scale, 0.0), 1),
        (partial2 * scale, ml),
        (Complex64::new(0.0, 0.0), order - 1 - ml),
    ]))
}

/// Splits a distance spectrum into `(t, p, m)` for [`cartesian_power_spectrum`].
pub fn power_shape(spectrum: &Spectrum, t: f64, radius: f64) -> Result<(Complex64, usize)> {
    let perron = Complex64::new(t, 0.0);
    if spectrum.multiplicity_near(perron, radius) == 0 {
        return Err(Error::ShapeViolated);
    }
    let rest = spectrum.without_one(perron);
    let nonzero: Vec<_> = rest.items().iter().filter(|it| it.value.norm() > radius).collect();
    match nonzero.as_slice() {
        [] => Ok((Complex64::new(0.0, 0.0), 0)),
        [one] => Ok((one.value, one.mult)),
        _ => Err(Error::ShapeViolated),
    }
}

/// Numeric value of a rational, for reporting.
pub fn ratio_to_f64(r: &Ratio<i64>) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{directed_cycle, figure1, figure2_dsrg, paley_tournament};

    fn r(x: i64) -> Ratio<i64> {
        Ratio::from_integer(x)
    }

    #[test]
    fn figure2_parameters() {
        let p = DsrgParams::new(8, 4, 3, 1, 3);
        assert!(validate_dsrg(&figure2_dsrg(), &p));
        assert_eq!(infer_dsrg_params(&figure2_dsrg()), Some(p));
        let d = duval_spectrum(&p).unwrap();
        assert_eq!(d.exact_theta, Some([r(4), r(0), r(-2)]));
        assert_eq!(d.multiplicities(), Some([1, 5, 2]));
    }

    #[test]
    fn triangle_is_dsrg() {
        assert!(validate_dsrg(&directed_cycle(3), &DsrgParams::new(3, 1, 0, 0, 1)));
    }

    #[test]
    fn figure1_is_not_dsrg() {
        assert_eq!(infer_dsrg_params(&figure1()), None);
    }

    #[test]
    fn paley_parameters() {
        let p = DsrgParams::new(7, 3, 0, 1, 2);
        assert!(validate_dsrg(&paley_tournament(7).unwrap(), &p));
        let d = duval_spectrum(&p).unwrap();
        assert_eq!(d.discriminant, -7);
        assert!((d.theta[1] - Complex64::new(-0.5, 7f64.sqrt() / 2.0)).norm() < 1e-15);
        assert_eq!(d.multiplicities(), Some([1, 3, 3]));
        assert_eq!(nonreal_classification(&p), SpectrumClass::Nonreal);
    }

    #[test]
    fn inadmissible_still_evaluates() {
        let p = DsrgParams::new(4, 1, 0, 0, 1);
        let d = duval_spectrum(&p).unwrap();
        assert_eq!(d.multiplicities(), None);
        assert!(matches!(d.spectrum(), Err(Error::InadmissibleParameters)));
    }

    #[test]
    fn degenerate_discriminant() {
        // (c - a)^2 + 4 (s - c) = 0 at s = c, a = c
        assert!(matches!(
            duval_spectrum(&DsrgParams::new(5, 2, 1, 1, 1)),
            Err(Error::DegenerateDiscriminant)
        ));
    }

    #[test]
    fn classification_patterns() {
        assert_eq!(
            nonreal_classification(&DsrgParams::new(8, 4, 3, 1, 3)),
            SpectrumClass::AllRational
        );
        assert_eq!(
            nonreal_classification(&DsrgParams::new(11, 5, 0, 2, 3)),
            SpectrumClass::Nonreal
        );
        assert_eq!(
            nonreal_classification(&DsrgParams::new(5, 2, 2, 0, 1)),
            SpectrumClass::RealIrrational
        );
    }

    #[test]
    fn power_base_case() {
        let s = cartesian_power_spectrum(10.0, Complex64::new(-2.0, 0.0), 5, 8, 1).unwrap();
        assert_eq!(s, Spectrum::from_reals(&[10.0, -2.0, -2.0, -2.0, -2.0, -2.0, 0.0, 0.0]));
        assert!(matches!(
            cartesian_power_spectrum(10.0, Complex64::new(-2.0, 0.0), 8, 8, 2),
            Err(Error::ShapeViolated)
        ));
    }
}
