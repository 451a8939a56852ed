//! Fraction-free elimination over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntegerMatrix;

type BigRows = Vec<Vec<BigInt>>;

fn to_big(m: &IntegerMatrix) -> BigRows {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| BigInt::from(m.get(i, j))).collect())
        .collect()
}

/// Bareiss elimination in place. Returns the rank and the sign of the row permutation.
fn bareiss(a: &mut BigRows) -> (usize, i8) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = 1i8;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign = -sign;
        }
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in bottom.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    (rank, sign)
}

fn rank_of(mut a: BigRows) -> usize {
    bareiss(&mut a).0
}

pub fn exact_rank(m: &IntegerMatrix) -> usize {
    rank_of(to_big(m))
}

pub fn exact_determinant(m: &IntegerMatrix) -> Result<BigInt> {
    if m.rows() != m.cols() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = to_big(m);
    let (rank, sign) = bareiss(&mut a);
    if rank < n {
        return Ok(BigInt::zero());
    }
    Ok(&a[n - 1][n - 1] * BigInt::from(sign))
}

/// `q m - p I` for `z = p/q`; same kernel and Jordan data at zero as `m - z I`.
fn scaled_shift(m: &IntegerMatrix, z: &BigRational) -> BigRows {
    let (p, q) = (z.numer(), z.denom());
    let mut a = to_big(m);
    for (i, row) in a.iter_mut().enumerate() {
        for x in row.iter_mut() {
            *x *= q;
        }
        if i < row.len() {
            row[i] -= p;
        }
    }
    a
}

/// `n - rank(m - z I)` computed exactly.
pub fn exact_geometric_multiplicity(m: &IntegerMatrix, z: &BigRational) -> usize {
    m.rows() - rank_of(scaled_shift(m, z))
}

fn matmul(a: &BigRows, b: &BigRows) -> BigRows {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

fn remove_content(a: &mut BigRows) {
    let g = a.iter().flatten().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g > BigInt::one() {
        for x in a.iter_mut().flatten() {
            *x /= &g;
        }
    }
}

/// Jordan block sizes of `m` at `z`, largest first, from ranks of powers of `m - z I`.
/// Empty when `z` is not an eigenvalue.
pub fn jordan_structure_exact(m: &IntegerMatrix, z: &BigRational) -> Vec<usize> {
    assert_eq!(m.rows(), m.cols(), "square matrix required");
    let n = m.rows();
    let base = scaled_shift(m, z);
    let mut ranks = vec![n, rank_of(base.clone())];
    let mut power = base.clone();
    while ranks[ranks.len() - 1] < ranks[ranks.len() - 2] {
        power = matmul(&power, &base);
        remove_content(&mut power);
        ranks.push(rank_of(power.clone()));
    }
    // at_least[p] = number of blocks of size >= p
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut sizes = Vec::new();
    for (p, &count) in at_least.iter().enumerate() {
        let next = at_least.get(p + 1).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(p + 1, count - next));
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Exact rational value of a float; every finite double is a dyadic rational.
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}
