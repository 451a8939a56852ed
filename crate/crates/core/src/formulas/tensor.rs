use num_complex::Complex64;

use crate::eigen::Spectrum;

fn pairwise(s: &Spectrum, s2: &Spectrum, f: impl Fn(Complex64, Complex64) -> Complex64) -> Spectrum {
    let pairs: Vec<_> = s
        .items()
        .iter()
        .flat_map(|a| s2.items().iter().map(|b| (f(a.value, b.value), a.mult * b.mult)))
        .collect();
    Spectrum::from_weighted(&pairs)
}

/// Adjacency spectrum of the direct product: pairwise products.
pub fn spec_direct(s: &Spectrum, s2: &Spectrum) -> Spectrum {
    pairwise(s, s2, |a, b| a * b)
}

/// Adjacency spectrum of the strong product: `a b + a + b`.
pub fn spec_strong(s: &Spectrum, s2: &Spectrum) -> Spectrum {
    pairwise(s, s2, |a, b| a * b + a + b)
}
