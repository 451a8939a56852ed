//! Loop-free digraphs stored as out-neighbor bit rows.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shortest-dipath length, or `INF` when no dipath exists.
///
/// `INF` compares greater than every finite value and absorbs addition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Dist(u32);

impl Dist {
    pub const INF: Dist = Dist(u32::MAX);
    pub const ZERO: Dist = Dist(0);

    pub fn finite(d: u32) -> Dist {
        assert!(d < u32::MAX, "finite distance out of range");
        Dist(d)
    }

    pub fn is_finite(self) -> bool {
        self != Dist::INF
    }

    pub fn value(self) -> Option<u32> {
        self.is_finite().then_some(self.0)
    }
}

impl Add for Dist {
    type Output = Dist;
    fn add(self, rhs: Dist) -> Dist {
        if !self.is_finite() || !rhs.is_finite() {
            Dist::INF
        } else {
            Dist(self.0.saturating_add(rhs.0).min(u32::MAX - 1))
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(d) => write!(f, "{d}"),
            None => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs())
            .finish()
    }
}

impl Digraph {
    pub fn from_arc_list(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut g = Digraph::empty(n);
        for &(u, v) in arcs {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
            if g.has_arc(u, v) {
                return Err(Error::DuplicateArc(u, v));
            }
            g.set_arc(u, v);
        }
        Ok(g)
    }

    /// Digraph with `n` vertices and no arcs.
    pub fn empty(n: usize) -> Digraph {
        let words = n.div_ceil(64).max(1);
        Digraph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds from arcs already known to be valid; repeated arcs collapse.
    pub(crate) fn from_valid_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Digraph {
        let mut g = Digraph::empty(n);
        for (u, v) in arcs {
            debug_assert!(u < n && v < n && u != v);
            g.set_arc(u, v);
        }
        g
    }

    fn set_arc(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1u64 << (v % 64);
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(w, &bits)| {
            let mut rest = bits;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for u in 0..self.n {
            for v in self.out_neighbors(u) {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn arc_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.out_neighbors(u).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Digraph {
        let mut g = Digraph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.has_arc(u, v) {
                    g.set_arc(u, v);
                }
            }
        }
        g
    }

    pub fn reverse(&self) -> Digraph {
        Digraph::from_valid_arcs(self.n, self.arcs().into_iter().map(|(u, v)| (v, u)))
    }

    /// BFS distances from `source` using word-parallel frontier expansion.
    pub fn distances_from(&self, source: usize) -> Vec<Dist> {
        let mut dist = vec![Dist::INF; self.n];
        let mut visited = vec![0u64; self.words];
        let mut reached = vec![0u64; self.words];
        dist[source] = Dist::ZERO;
        visited[source / 64] |= 1 << (source % 64);
        let mut frontier = vec![source];
        let mut level = 0u32;
        while !frontier.is_empty() {
            level += 1;
            reached.fill(0);
            for &u in &frontier {
                for (r, w) in reached.iter_mut().zip(self.row(u)) {
                    *r |= w;
                }
            }
            frontier.clear();
            for (w, (r, seen)) in reached.iter().zip(visited.iter_mut()).enumerate() {
                let mut fresh = r & !*seen;
                *seen |= fresh;
                while fresh != 0 {
                    let v = w * 64 + fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    dist[v] = Dist(level);
                    frontier.push(v);
                }
            }
        }
        dist
    }

    pub fn is_strongly_connected(&self) -> bool {
        let all = |d: Vec<Dist>| d.iter().all(|x| x.is_finite());
        all(self.distances_from(0)) && all(self.reverse().distances_from(0))
    }

    pub fn distance_data(&self) -> DistanceData {
        let mut dist = Vec::with_capacity(self.n * self.n);
        for s in 0..self.n {
            dist.extend(self.distances_from(s));
        }
        DistanceData { n: self.n, dist }
    }

    pub fn metrics(&self) -> Metrics {
        let dd = self.distance_data();
        let n = self.n;
        let out_degrees: Vec<usize> = (0..n).map(|u| self.out_degree(u)).collect();
        let in_degrees = self.in_degrees();
        let transmissions = dd.transmissions();
        let diameter = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .map(|(u, v)| dd.get(u, v))
            .max()
            .unwrap_or(Dist::ZERO);
        let xi: Vec<Dist> = (0..n)
            .map(|x| {
                self.out_neighbors(x)
                    .map(|y| Dist(1) + dd.get(y, x))
                    .min()
                    .unwrap_or(Dist::INF)
            })
            .collect();
        let girth = xi.iter().copied().min().unwrap_or(Dist::INF);
        let doubly_directed_cover = (0..n).all(|x| self.out_neighbors(x).any(|u| self.has_arc(u, x)));
        Metrics {
            out_regularity: constant(&out_degrees),
            transmission_regularity: transmissions.as_deref().and_then(constant),
            out_degrees,
            in_degrees,
            transmissions,
            diameter,
            girth,
            xi,
            doubly_directed_cover,
        }
    }
}

fn constant<T: Copy + PartialEq>(xs: &[T]) -> Option<T> {
    let first = *xs.first()?;
    xs.iter().all(|&x| x == first).then_some(first)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<Dist>,
}

impl DistanceData {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Dist] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn all_finite(&self) -> bool {
        self.dist.iter().all(|d| d.is_finite())
    }

    /// Row sums, defined only when every distance is finite.
    pub fn transmissions(&self) -> Option<Vec<u64>> {
        if !self.all_finite() {
            return None;
        }
        Some(
            (0..self.n)
                .map(|u| self.row(u).iter().map(|d| d.0 as u64).sum())
                .collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metrics {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
    /// Common out-degree when out-regular.
    pub out_regularity: Option<usize>,
    pub transmissions: Option<Vec<u64>>,
    /// Common transmission when transmission regular.
    pub transmission_regularity: Option<u64>,
    pub diameter: Dist,
    pub girth: Dist,
    /// Length of a shortest dicycle through each vertex.
    pub xi: Vec<Dist>,
    pub doubly_directed_cover: bool,
}

impl Metrics {
    pub fn is_out_regular(&self) -> bool {
        self.out_regularity.is_some()
    }

    pub fn is_transmission_regular(&self) -> bool {
        self.transmission_regularity.is_some()
    }

    /// Common degree when every in- and out-degree is equal.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.out_regularity?;
        self.in_degrees.iter().all(|&d| d == k).then_some(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::from_arc_list(n, &arcs).unwrap()
    }

    #[test]
    fn rejects_bad_arcs() {
        assert!(matches!(Digraph::from_arc_list(2, &[(0, 0)]), Err(Error::LoopArc(0))));
        assert!(matches!(
            Digraph::from_arc_list(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, n: 2 })
        ));
        assert!(matches!(
            Digraph::from_arc_list(2, &[(0, 1), (0, 1)]),
            Err(Error::DuplicateArc(0, 1))
        ));
        assert!(matches!(Digraph::from_arc_list(0, &[]), Err(Error::NoVertices)));
    }

    #[test]
    fn cycle_distances() {
        let dd = cycle(3).distance_data();
        let rows: Vec<Vec<u32>> = (0..3)
            .map(|u| dd.row(u).iter().map(|d| d.value().unwrap()).collect())
            .collect();
        assert_eq!(rows, vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]]);
    }

    #[test]
    fn isolated_pair_is_infinite() {
        let g = Digraph::empty(2);
        let dd = g.distance_data();
        assert_eq!(dd.get(0, 1), Dist::INF);
        assert!(dd.transmissions().is_none());
        assert!(!g.is_strongly_connected());
        assert!(Digraph::empty(1).is_strongly_connected());
        assert!(!Digraph::from_arc_list(2, &[(0, 1)]).unwrap().is_strongly_connected());
    }

    #[test]
    fn five_cycle_metrics() {
        let m = cycle(5).metrics();
        assert_eq!(m.girth, Dist::finite(5));
        assert!(m.xi.iter().all(|&x| x == Dist::finite(5)));
        assert_eq!(m.out_regularity, Some(1));
        assert_eq!(m.transmission_regularity, Some(10));
        assert!(!m.doubly_directed_cover);
        assert_eq!(m.diameter, Dist::finite(4));
    }

    #[test]
    fn complement_of_triangle_is_reverse() {
        let g = cycle(3);
        assert_eq!(g.complement(), g.reverse());
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let g = cycle(130);
        assert!(g.is_strongly_connected());
        assert_eq!(g.distances_from(0)[129], Dist::finite(129));
        assert_eq!(g.out_neighbors(63).collect::<Vec<_>>(), vec![64]);
    }

    #[test]
    fn inf_absorbs() {
        assert_eq!(Dist::INF + Dist::finite(3), Dist::INF);
        assert!(Dist::finite(1_000_000) < Dist::INF);
        assert_eq!(Dist::finite(2).min(Dist::INF), Dist::finite(2));
    }
}
