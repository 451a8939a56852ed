//! Dense matrices, Kronecker constructions and the six digraph matrices.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl fmt::Debug for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RealMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl RealMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<RealMatrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::DimensionMismatch("non-finite entry".into()));
        }
        Ok(RealMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<RealMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        RealMatrix::new(rows.len(), cols, rows.concat())
    }

    pub fn zeros(rows: usize, cols: usize) -> RealMatrix {
        RealMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> RealMatrix {
        let mut m = RealMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn ones(n: usize) -> RealMatrix {
        RealMatrix {
            rows: n,
            cols: n,
            data: vec![1.0; n * n],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> f64) -> RealMatrix {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        RealMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> RealMatrix {
        RealMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn matmul(&self, other: &RealMatrix) -> RealMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = RealMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RealMatrix) -> RealMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        RealMatrix { data, ..*self }
    }

    pub fn sub(&self, other: &RealMatrix) -> RealMatrix {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> RealMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        RealMatrix { data, ..*self }
    }

    /// `self + s I`.
    pub fn shift(&self, s: f64) -> RealMatrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] += s;
        }
        m
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, x)| x * a).sum())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Common row sum if all row sums agree within `tol`.
    pub fn constant_row_sum(&self, tol: f64) -> Option<f64> {
        let sums = self.row_sums();
        let first = *sums.first()?;
        sums.iter()
            .all(|s| (s - first).abs() <= tol * (1.0 + first.abs()))
            .then_some(first)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&x| x >= 0.0)
    }

    /// Digraph of the off-diagonal nonzero pattern.
    pub fn pattern(&self) -> Result<Digraph> {
        let n = self.order()?;
        let arcs = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self[(i, j)] != 0.0);
        Ok(Digraph::from_valid_arcs(n.max(1), arcs))
    }

    /// Irreducible in the Perron-Frobenius sense; order one counts as irreducible.
    pub fn is_irreducible(&self) -> bool {
        match self.pattern() {
            Ok(g) => self.rows <= 1 || g.is_strongly_connected(),
            Err(_) => false,
        }
    }

    /// Exact integer copy when every entry is an integer of safe magnitude.
    pub fn to_integer(&self) -> Option<IntegerMatrix> {
        const SAFE: f64 = 9.007_199_254_740_992e15;
        self.data
            .iter()
            .all(|x| x.fract() == 0.0 && x.abs() < SAFE)
            .then(|| IntegerMatrix {
                rows: self.rows,
                cols: self.cols,
                data: self.data.iter().map(|&x| x as i64).collect(),
            })
    }
}

impl Index<(usize, usize)> for RealMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Integer matrix used where exact arithmetic is required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<IntegerMatrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntegerMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntegerMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        IntegerMatrix::new(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn to_real(&self) -> RealMatrix {
        RealMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x as f64).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ComplexMatrix {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn from_real(m: &RealMatrix) -> ComplexMatrix {
        ComplexMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    /// `m - z I`.
    pub fn shifted(m: &RealMatrix, z: Complex64) -> ComplexMatrix {
        let mut c = ComplexMatrix::from_real(m);
        for i in 0..m.rows.min(m.cols) {
            c[(i, i)] -= z;
        }
        c
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// `(a ⊗ b)[(i n' + j, k n' + l)] = a[i,k] b[j,l]`.
pub fn kronecker(a: &RealMatrix, b: &RealMatrix) -> Result<RealMatrix> {
    let n = a.order()?;
    let n2 = b.order()?;
    Ok(RealMatrix::from_fn(n * n2, n * n2, |r, c| {
        a[(r / n2, c / n2)] * b[(r % n2, c % n2)]
    }))
}

/// Kronecker product of complex vectors under the same index convention.
pub fn kron_vec(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Construction {
    /// `M ⊗ I + I ⊗ M'`
    BoxI,
    /// `M ⊗ J + J ⊗ M'`
    BoxJ,
    /// `M ⊗ J + I ⊗ M'`
    Lexp,
}

pub fn construction(op: Construction, m: &RealMatrix, m2: &RealMatrix) -> Result<RealMatrix> {
    let n = m.order()?;
    let n2 = m2.order()?;
    Ok(RealMatrix::from_fn(n * n2, n * n2, |r, c| {
        let (x, x2) = (r / n2, r % n2);
        let (y, y2) = (c / n2, c % n2);
        let (left, right) = match op {
            Construction::BoxI => ((x2 == y2) as u8 as f64, (x == y) as u8 as f64),
            Construction::BoxJ => (1.0, 1.0),
            Construction::Lexp => (1.0, (x == y) as u8 as f64),
        };
        m[(x, y)] * left + right * m2[(x2, y2)]
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    A,
    L,
    Q,
    D,
    DL,
    DQ,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 6] = [
        MatrixKind::A,
        MatrixKind::L,
        MatrixKind::Q,
        MatrixKind::D,
        MatrixKind::DL,
        MatrixKind::DQ,
    ];

    pub fn is_distance(self) -> bool {
        matches!(self, MatrixKind::D | MatrixKind::DL | MatrixKind::DQ)
    }

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::A => "A",
            MatrixKind::L => "L",
            MatrixKind::Q => "Q",
            MatrixKind::D => "D",
            MatrixKind::DL => "DL",
            MatrixKind::DQ => "DQ",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        MatrixKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown matrix kind {s}"))
    }
}

pub fn digraph_integer_matrix(g: &Digraph, kind: MatrixKind) -> Result<IntegerMatrix> {
    let n = g.n();
    let mut data = vec![0i64; n * n];
    if kind.is_distance() {
        let dd = g.distance_data();
        let trans = dd.transmissions().ok_or(Error::NotStronglyConnected)?;
        let sign = match kind {
            MatrixKind::DL => -1,
            _ => 1,
        };
        for u in 0..n {
            for v in 0..n {
                data[u * n + v] = sign * dd.get(u, v).value().unwrap_or(0) as i64;
            }
            if kind != MatrixKind::D {
                data[u * n + u] = trans[u] as i64;
            }
        }
    } else {
        let sign = if kind == MatrixKind::L { -1 } else { 1 };
        for (u, v) in g.arcs() {
            data[u * n + v] = sign;
        }
        if kind != MatrixKind::A {
            for u in 0..n {
                data[u * n + u] = g.out_degree(u) as i64;
            }
        }
    }
    IntegerMatrix::new(n, n, data)
}

pub fn digraph_matrix(g: &Digraph, kind: MatrixKind) -> Result<RealMatrix> {
    digraph_integer_matrix(g, kind).map(|m| m.to_real())
}
