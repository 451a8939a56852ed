use num_complex::Complex64;
use serde::Serialize;

use super::Spectrum;
use crate::error::{Error, Result};

/// Deviation of `a` from `b`, absolute near zero and relative for large values.
pub fn deviation(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / (1.0 + a.norm().max(b.norm()))
}

/// Minimum-cost perfect assignment; returns the column matched to each row.
pub(crate) fn assignment(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut out = vec![0; n];
    for j in 1..=n {
        out[p[j] - 1] = j - 1;
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct MatchedPair {
    pub predicted: Complex64,
    pub computed: Complex64,
    pub deviation: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatchReport {
    pub passed: bool,
    pub tolerance: f64,
    /// Largest blended deviation over matched pairs.
    pub worst_deviation: f64,
    pub worst_pair: Option<MatchedPair>,
    pub pairs: Vec<MatchedPair>,
}

/// Optimal assignment between the two multisets; passes when every pair is within `tol`.
pub fn spectrum_match(predicted: &Spectrum, computed: &Spectrum, tol: f64) -> Result<MatchReport> {
    let a = predicted.expanded();
    let b = computed.expanded();
    if a.len() != b.len() {
        return Err(Error::CardinalityMismatch {
            predicted: a.len(),
            computed: b.len(),
        });
    }
    let cost: Vec<Vec<f64>> = a
        .iter()
        .map(|&x| b.iter().map(|&y| deviation(x, y)).collect())
        .collect();
    let assign = assignment(&cost);
    let pairs: Vec<MatchedPair> = assign
        .iter()
        .enumerate()
        .map(|(i, &j)| MatchedPair {
            predicted: a[i],
            computed: b[j],
            deviation: cost[i][j],
        })
        .collect();
    let worst_pair = pairs.iter().max_by(|x, y| x.deviation.total_cmp(&y.deviation)).cloned();
    let worst_deviation = worst_pair.as_ref().map_or(0.0, |p| p.deviation);
    Ok(MatchReport {
        passed: worst_deviation <= tol,
        tolerance: tol,
        worst_deviation,
        worst_pair,
        pairs,
    })
}
