//! The four standard digraph products and closed-form product distances.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Dist};
use crate::error::{Error, Result};
use crate::matrix::RealMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
    Direct,
    Strong,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Lexicographic,
        ProductKind::Direct,
        ProductKind::Strong,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Direct => "direct",
            ProductKind::Strong => "strong",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ProductKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown product kind {s}"))
    }
}

/// Product digraph on `n n'` vertices with `(x, x')` numbered `x n' + x'`.
pub fn product(g: &Digraph, h: &Digraph, kind: ProductKind) -> Digraph {
    let (n, n2) = (g.n(), h.n());
    let idx = |x: usize, x2: usize| x * n2 + x2;
    let mut arcs = Vec::new();
    let cartesian = matches!(kind, ProductKind::Cartesian | ProductKind::Strong);
    let direct = matches!(kind, ProductKind::Direct | ProductKind::Strong);
    if cartesian {
        for x in 0..n {
            for (x2, y2) in h.arcs() {
                arcs.push((idx(x, x2), idx(x, y2)));
            }
        }
        for (x, y) in g.arcs() {
            for x2 in 0..n2 {
                arcs.push((idx(x, x2), idx(y, x2)));
            }
        }
    }
    if direct {
        for (x, y) in g.arcs() {
            for (x2, y2) in h.arcs() {
                arcs.push((idx(x, x2), idx(y, y2)));
            }
        }
    }
    if kind == ProductKind::Lexicographic {
        for (x, y) in g.arcs() {
            for x2 in 0..n2 {
                for y2 in 0..n2 {
                    arcs.push((idx(x, x2), idx(y, y2)));
                }
            }
        }
        for x in 0..n {
            for (x2, y2) in h.arcs() {
                arcs.push((idx(x, x2), idx(x, y2)));
            }
        }
    }
    Digraph::from_valid_arcs(n * n2, arcs)
}

fn to_matrix(n: usize, dist: impl Fn(usize, usize) -> Dist) -> Result<RealMatrix> {
    let mut m = RealMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            m[(r, c)] = dist(r, c).value().ok_or(Error::NotStronglyConnected)? as f64;
        }
    }
    Ok(m)
}

/// Distances of the lexicographic product: `d_g(x, y)` off the diagonal blocks,
/// `min(xi_g(x), d_h(x', y'))` inside block `x`.
pub fn lexicographic_distance_matrix(g: &Digraph, h: &Digraph) -> Result<RealMatrix> {
    if !g.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let n2 = h.n();
    let dg = g.distance_data();
    let dh = h.distance_data();
    let xi = g.metrics().xi;
    to_matrix(g.n() * n2, |r, c| {
        let (x, x2, y, y2) = (r / n2, r % n2, c / n2, c % n2);
        if x != y {
            dg.get(x, y)
        } else if x2 == y2 {
            Dist::ZERO
        } else {
            xi[x].min(dh.get(x2, y2))
        }
    })
}

/// Distances of the strong product: `max(d_g(x, y), d_h(x', y'))`.
pub fn strong_distance_matrix(g: &Digraph, h: &Digraph) -> Result<RealMatrix> {
    if !g.is_strongly_connected() || !h.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let n2 = h.n();
    let dg = g.distance_data();
    let dh = h.distance_data();
    to_matrix(g.n() * n2, |r, c| dg.get(r / n2, c / n2).max(dh.get(r % n2, c % n2)))
}
