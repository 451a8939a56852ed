//! Brute-force spectral oracle: eigenvalues, kernels, multiplicities and matching.

mod hqr;
mod matching;
mod svd;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{exact_geometric_multiplicity, rational_from_f64};
use crate::matrix::{ComplexMatrix, RealMatrix};

pub use matching::{deviation, spectrum_match, MatchReport, MatchedPair};
pub use svd::{null_space_basis, numerical_rank};

pub type CVec = Vec<Complex64>;

/// `(eigenvalue, eigenvector)`.
pub type Eigenpair = (Complex64, CVec);

/// Largest order accepted by the eigensolver.
pub const ORDER_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Eigenvalue clustering, relative to `1 + ||m||_inf`.
    pub cluster: f64,
    /// Kernel and rank decisions, relative to `1 + ||m||_inf`.
    pub rank: f64,
    /// Multiset matching, blended absolute/relative per value.
    pub matching: f64,
    /// Eigenvector residuals, relative to `(1 + ||m||_inf) ||w||`.
    pub residual: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            cluster: 1e-8,
            rank: 1e-10,
            matching: 1e-7,
            residual: 1e-8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumItem {
    pub value: Complex64,
    pub mult: usize,
}

/// Multiset of complex eigenvalues, sorted by real part descending then imaginary part ascending.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    items: Vec<SpectrumItem>,
}

fn clean(z: Complex64) -> Complex64 {
    // drop negative zeros so output is stable
    Complex64::new(z.re + 0.0, z.im + 0.0)
}

impl Spectrum {
    fn sorted(mut items: Vec<SpectrumItem>) -> Spectrum {
        for it in &mut items {
            it.value = clean(it.value);
        }
        items.retain(|it| it.mult > 0);
        items.sort_by(|a, b| {
            b.value
                .re
                .total_cmp(&a.value.re)
                .then(a.value.im.total_cmp(&b.value.im))
        });
        Spectrum { items }
    }

    /// Single-linkage clustering within `radius`; each cluster is represented by its mean.
    pub fn cluster_weighted(values: &[(Complex64, usize)], radius: f64) -> Spectrum {
        let n = values.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| values[a].0.re.total_cmp(&values[b].0.re));
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in 0..n {
            for b in a + 1..n {
                let (i, j) = (order[a], order[b]);
                if values[j].0.re - values[i].0.re > radius {
                    break;
                }
                if (values[i].0 - values[j].0).norm() <= radius {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let mut sums: Vec<(Complex64, usize)> = vec![(Complex64::new(0.0, 0.0), 0); n];
        for (i, &(v, m)) in values.iter().enumerate() {
            let r = find(&mut parent, i);
            sums[r].0 += v * m as f64;
            sums[r].1 += m;
        }
        Spectrum::sorted(
            sums.into_iter()
                .filter(|s| s.1 > 0)
                .map(|(s, m)| SpectrumItem {
                    value: s / m as f64,
                    mult: m,
                })
                .collect(),
        )
    }

    pub fn cluster(values: &[Complex64], radius: f64) -> Spectrum {
        let pairs: Vec<_> = values.iter().map(|&v| (v, 1)).collect();
        Spectrum::cluster_weighted(&pairs, radius)
    }

    /// Multiset of closed-form values; merges only floating-point noise.
    pub fn from_weighted(pairs: &[(Complex64, usize)]) -> Spectrum {
        let scale = pairs.iter().map(|p| p.0.norm()).fold(0.0, f64::max);
        Spectrum::cluster_weighted(pairs, 1e-9 * (1.0 + scale))
    }

    pub fn from_values(values: &[Complex64]) -> Spectrum {
        let pairs: Vec<_> = values.iter().map(|&v| (v, 1)).collect();
        Spectrum::from_weighted(&pairs)
    }

    pub fn from_reals(values: &[f64]) -> Spectrum {
        let v: Vec<_> = values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Spectrum::from_values(&v)
    }

    pub fn items(&self) -> &[SpectrumItem] {
        &self.items
    }

    pub fn pairs(&self) -> Vec<(Complex64, usize)> {
        self.items.iter().map(|it| (it.value, it.mult)).collect()
    }

    /// Total multiplicity.
    pub fn order(&self) -> usize {
        self.items.iter().map(|it| it.mult).sum()
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.items.iter().map(|it| it.value).collect()
    }

    pub fn expanded(&self) -> Vec<Complex64> {
        self.items
            .iter()
            .flat_map(|it| std::iter::repeat_n(it.value, it.mult))
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.items.iter().map(|it| it.value.norm()).fold(0.0, f64::max)
    }

    fn nearest_index(&self, z: Complex64) -> Option<usize> {
        (0..self.items.len()).min_by(|&a, &b| {
            (self.items[a].value - z)
                .norm()
                .total_cmp(&(self.items[b].value - z).norm())
        })
    }

    /// Total multiplicity of values within `radius` of `z`.
    pub fn multiplicity_near(&self, z: Complex64, radius: f64) -> usize {
        self.items
            .iter()
            .filter(|it| (it.value - z).norm() <= radius)
            .map(|it| it.mult)
            .sum()
    }

    pub fn contains(&self, z: Complex64, radius: f64) -> bool {
        self.multiplicity_near(z, radius) > 0
    }

    /// Removes one copy of the value closest to `z`.
    pub fn without_one(&self, z: Complex64) -> Spectrum {
        let mut items = self.items.clone();
        if let Some(i) = self.nearest_index(z) {
            items[i].mult -= 1;
        }
        Spectrum::sorted(items)
    }

    /// Applies `f` to every value, keeping multiplicities.
    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Spectrum {
        let pairs: Vec<_> = self.items.iter().map(|it| (f(it.value), it.mult)).collect();
        Spectrum::from_weighted(&pairs)
    }

    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut pairs = self.pairs();
        pairs.extend(other.pairs());
        Spectrum::from_weighted(&pairs)
    }

    /// Every multiplicity multiplied by `k`.
    pub fn repeated(&self, k: usize) -> Spectrum {
        let pairs: Vec<_> = self.items.iter().map(|it| (it.value, it.mult * k)).collect();
        Spectrum::sorted(
            pairs
                .into_iter()
                .map(|(value, mult)| SpectrumItem { value, mult })
                .collect(),
        )
    }

    pub fn has_nonreal(&self, radius: f64) -> bool {
        self.items.iter().any(|it| it.value.im.abs() > radius)
    }
}

pub fn eigenvalues_raw(m: &RealMatrix) -> Result<Vec<Complex64>> {
    let n = m.order()?;
    if n > ORDER_CAP {
        return Err(Error::TooLarge {
            order: n,
            cap: ORDER_CAP,
        });
    }
    hqr::eigenvalues_dense(n, m.data())
}

/// Clustering radius used by [`eigenvalues`].
pub fn cluster_radius(m: &RealMatrix, tol: f64) -> f64 {
    tol * (1.0 + m.norm_inf())
}

/// All eigenvalues, clustered with radius `tol * (1 + ||m||_inf)`.
///
/// A defective eigenvalue with a Jordan block of size `k` comes back from QR as a
/// ring of radius about `eps^(1/k)`. Such rings are merged into their mean when the
/// mean is itself an eigenvalue at the same tolerance.
pub fn eigenvalues(m: &RealMatrix, tol: f64) -> Result<Spectrum> {
    let raw = eigenvalues_raw(m)?;
    let tight = Spectrum::cluster(&raw, cluster_radius(m, tol));
    Ok(merge_defective_rings(m, tight, tol))
}

const RING_CAP: f64 = 1e-3;

fn merge_defective_rings(m: &RealMatrix, tight: Spectrum, tol: f64) -> Spectrum {
    // spectral radius, not the matrix norm: companion-like matrices have huge norms
    let scale = 1.0 + tight.max_abs();
    let wide = Spectrum::cluster_weighted(&tight.pairs(), RING_CAP * scale);
    if wide.items().len() == tight.items().len() {
        return tight;
    }
    let mut out = Vec::new();
    for group in wide.items() {
        let members: Vec<_> = tight
            .items()
            .iter()
            .filter(|it| (it.value - group.value).norm() <= RING_CAP * scale * group.mult as f64)
            .copied()
            .collect();
        let claimed: usize = members.iter().map(|it| it.mult).sum();
        let bound = (100.0 * f64::EPSILON).powf(1.0 / group.mult as f64).min(RING_CAP) * scale;
        let is_ring = members.len() > 1
            && claimed == group.mult
            && members.iter().all(|it| (it.value - group.value).norm() <= bound)
            && !null_space_basis(&ComplexMatrix::shifted(m, group.value), tol).is_empty();
        if is_ring || members.len() == 1 {
            out.push((group.value, group.mult));
        } else {
            out.extend(members.iter().map(|it| (it.value, it.mult)));
        }
    }
    Spectrum::cluster_weighted(&out, 0.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GmultMode {
    Numeric(f64),
    Exact,
}

/// `n - rank(m - z I)`.
pub fn geometric_multiplicity(m: &RealMatrix, z: Complex64, mode: GmultMode) -> Result<usize> {
    m.order()?;
    match mode {
        GmultMode::Numeric(tol) => Ok(null_space_basis(&ComplexMatrix::shifted(m, z), tol).len()),
        GmultMode::Exact => {
            let im = m.to_integer().ok_or(Error::ExactModeUnavailable)?;
            if z.im != 0.0 {
                return Err(Error::ExactModeUnavailable);
            }
            let q = rational_from_f64(z.re).ok_or(Error::ExactModeUnavailable)?;
            Ok(exact_geometric_multiplicity(&im, &q))
        }
    }
}

fn ones_sum(v: &[Complex64]) -> Complex64 {
    v.iter().sum()
}

/// Whether the whole eigenspace at `z` is orthogonal to the all-ones vector.
pub fn eigenspace_perp_ones(m: &RealMatrix, z: Complex64, tol: f64) -> Result<bool> {
    let n = m.order()?;
    let basis = null_space_basis(&ComplexMatrix::shifted(m, z), tol);
    if basis.is_empty() {
        return Err(Error::NotAnEigenvalue);
    }
    let bound = tol * (n as f64).sqrt();
    Ok(basis.iter().all(|v| ones_sum(v).norm() <= bound * svd::norm(v)))
}

/// `||m w - z w|| / ((1 + ||m||_inf) ||w||)`.
pub fn relative_residual(m: &RealMatrix, z: Complex64, w: &[Complex64]) -> f64 {
    let mw = m.apply(w);
    let r: f64 = mw
        .iter()
        .zip(w)
        .map(|(a, b)| (a - z * b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    r / ((1.0 + m.norm_inf()) * svd::norm(w))
}

fn normalize(v: &mut [Complex64]) {
    let s = svd::norm(v);
    if s > 0.0 {
        for x in v.iter_mut() {
            *x /= s;
        }
    }
}

/// Modified Gram-Schmidt; drops vectors that become negligible.
fn orthonormalize(vs: Vec<CVec>) -> Vec<CVec> {
    let mut out: Vec<CVec> = Vec::new();
    for mut v in vs {
        for q in &out {
            let c = svd::dot(q, &v);
            for (x, y) in v.iter_mut().zip(q) {
                *x -= c * y;
            }
        }
        if svd::norm(&v) > 1e-8 {
            normalize(&mut v);
            out.push(v);
        }
    }
    out
}

/// Orthonormal eigenvectors at `z`: kernel of `m - z I` refined by three inverse-iteration steps.
pub fn eigenvectors(m: &RealMatrix, z: Complex64, tol: f64) -> Result<Vec<CVec>> {
    m.order()?;
    let basis = null_space_basis(&ComplexMatrix::shifted(m, z), tol);
    if basis.is_empty() {
        return Ok(basis);
    }
    let delta = 1e-10 * (1.0 + m.norm_inf());
    let lu = svd::Lu::new(&ComplexMatrix::shifted(m, z + delta));
    let refined: Vec<CVec> = basis
        .into_iter()
        .map(|v| {
            let mut w = v.clone();
            for _ in 0..3 {
                w = lu.solve(&w);
                normalize(&mut w);
            }
            if w.iter().all(|x| x.is_finite()) && relative_residual(m, z, &w) <= relative_residual(m, z, &v) {
                w
            } else {
                v
            }
        })
        .collect();
    Ok(orthonormalize(refined))
}

fn complex_matmul(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let n = a.rows();
    let mut out = ComplexMatrix::zeros(n, b.cols());
    for i in 0..n {
        for k in 0..a.cols() {
            let x = a[(i, k)];
            if x == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..b.cols() {
                out[(i, j)] += x * b[(k, j)];
            }
        }
    }
    out
}

/// Jordan block sizes at `z` from numerical ranks of powers of `m - z I`, largest first.
pub fn jordan_structure_numeric(m: &RealMatrix, z: Complex64, tol: f64) -> Result<Vec<usize>> {
    let n = m.order()?;
    let base = ComplexMatrix::shifted(m, z);
    let mut ranks = vec![n, numerical_rank(&base, tol)];
    let mut power = base.clone();
    while ranks[ranks.len() - 1] < ranks[ranks.len() - 2] && ranks.len() <= n + 1 {
        power = complex_matmul(&power, &base);
        ranks.push(numerical_rank(&power, tol).min(ranks[ranks.len() - 1]));
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut sizes = Vec::new();
    for (p, &count) in at_least.iter().enumerate() {
        let next = at_least.get(p + 1).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(p + 1, count.saturating_sub(next)));
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sizes)
}

/// Eigenvectors for every distinct eigenvalue of `m`.
pub fn eigenpairs(m: &RealMatrix, tol: &Tolerances) -> Result<Vec<Eigenpair>> {
    let spectrum = eigenvalues(m, tol.cluster)?;
    let mut out = Vec::new();
    for z in spectrum.values() {
        let mut vs = eigenvectors(m, z, tol.rank)?;
        if vs.is_empty() {
            vs = eigenvectors(m, z, tol.cluster)?;
        }
        out.extend(vs.into_iter().map(|v| (z, v)));
    }
    Ok(out)
}

/// Whether the vectors, each scaled to unit length, have full numerical rank.
pub fn linearly_independent(vectors: &[CVec], tol: f64) -> bool {
    let Some(first) = vectors.first() else {
        return true;
    };
    let rows = first.len();
    let mut m = ComplexMatrix::zeros(rows, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        let s = svd::norm(v);
        if s == 0.0 || v.len() != rows {
            return false;
        }
        for i in 0..rows {
            m[(i, j)] = v[i] / s;
        }
    }
    numerical_rank(&m, tol) == vectors.len()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JordanBlocks {
    pub value: Complex64,
    /// Block sizes, largest first.
    pub sizes: Vec<usize>,
}

/// Jordan block sizes grouped by eigenvalue.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct JordanStructure {
    blocks: Vec<JordanBlocks>,
}

impl JordanStructure {
    /// Merges entries whose values agree up to floating-point noise.
    pub fn new(entries: Vec<(Complex64, Vec<usize>)>) -> JordanStructure {
        let scale = entries.iter().map(|e| e.0.norm()).fold(0.0, f64::max);
        let radius = 1e-9 * (1.0 + scale);
        let mut blocks: Vec<JordanBlocks> = Vec::new();
        for (value, sizes) in entries {
            match blocks.iter_mut().find(|b| (b.value - value).norm() <= radius) {
                Some(b) => b.sizes.extend(sizes),
                None => blocks.push(JordanBlocks {
                    value: clean(value),
                    sizes,
                }),
            }
        }
        for b in &mut blocks {
            b.sizes.retain(|&s| s > 0);
            b.sizes.sort_unstable_by(|x, y| y.cmp(x));
        }
        blocks.retain(|b| !b.sizes.is_empty());
        blocks.sort_by(|a, b| {
            b.value
                .re
                .total_cmp(&a.value.re)
                .then(a.value.im.total_cmp(&b.value.im))
        });
        JordanStructure { blocks }
    }

    /// Numerical structure from ranks of powers at each clustered eigenvalue.
    pub fn numeric(m: &RealMatrix, tol: &Tolerances) -> Result<JordanStructure> {
        let spectrum = eigenvalues(m, tol.cluster)?;
        let mut entries = Vec::new();
        for it in spectrum.items() {
            let mut sizes = jordan_structure_numeric(m, it.value, tol.rank)?;
            if sizes.iter().sum::<usize>() != it.mult {
                sizes = jordan_structure_numeric(m, it.value, tol.cluster)?;
            }
            entries.push((it.value, sizes));
        }
        Ok(JordanStructure::new(entries))
    }

    pub fn blocks(&self) -> &[JordanBlocks] {
        &self.blocks
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().flat_map(|b| &b.sizes).sum()
    }

    /// Block sizes at the value nearest `z` within `radius`; empty if none.
    pub fn sizes_at(&self, z: Complex64, radius: f64) -> Vec<usize> {
        self.blocks
            .iter()
            .filter(|b| (b.value - z).norm() <= radius)
            .flat_map(|b| b.sizes.iter().copied())
            .collect()
    }

    pub fn spectrum(&self) -> Spectrum {
        let pairs: Vec<_> = self.blocks.iter().map(|b| (b.value, b.sizes.iter().sum())).collect();
        Spectrum::from_weighted(&pairs)
    }
}
