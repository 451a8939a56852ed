//! Named fixtures and generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::products::{product, ProductKind};

pub fn directed_cycle(n: usize) -> Digraph {
    let arcs: Vec<_> = if n > 1 {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    } else {
        Vec::new()
    };
    Digraph::from_arc_list(n, &arcs).expect("cycle arcs are valid")
}

/// Two vertices joined by both arcs.
pub fn digon() -> Digraph {
    Digraph::from_arc_list(2, &[(0, 1), (1, 0)]).expect("valid")
}

fn both_ways(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    pairs.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect()
}

/// Transmission regular, diameter two, distance matrix not diagonalizable.
pub fn figure1() -> Digraph {
    let mut arcs = both_ways(&[(0, 1), (0, 3), (1, 2)]);
    arcs.extend([(2, 0), (3, 2)]);
    Digraph::from_arc_list(4, &arcs).expect("valid")
}

const FIGURE2_DOUBLE: [(usize, usize); 12] = [
    (1, 3),
    (1, 6),
    (1, 7),
    (2, 4),
    (2, 5),
    (2, 6),
    (3, 5),
    (3, 8),
    (4, 7),
    (4, 8),
    (5, 7),
    (6, 8),
];
const FIGURE2_SINGLE: [(usize, usize); 8] = [(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5)];
const FIGURE2_SHA256: &str = "3b13d369873fe6c4d1781bf84a9b30d77a50ebca21f287d96a5113c709d3b2f7";

/// SHA-256 of the sorted arc list, one `u v` line per arc.
pub fn arc_list_checksum(g: &Digraph) -> String {
    let text: String = g.arcs().iter().map(|(u, v)| format!("{u} {v}\n")).collect();
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// The directed strongly regular graph with parameters (8,4,3,1,3).
pub fn figure2_dsrg() -> Digraph {
    let zero_based = |&(u, v): &(usize, usize)| (u - 1, v - 1);
    let mut arcs = both_ways(&FIGURE2_DOUBLE.iter().map(zero_based).collect::<Vec<_>>());
    arcs.extend(FIGURE2_SINGLE.iter().map(zero_based));
    let g = Digraph::from_arc_list(8, &arcs).expect("valid");
    assert_eq!(arc_list_checksum(&g), FIGURE2_SHA256, "figure 2 arc list altered");
    g
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Arc `i -> j` iff `j - i` is a nonzero square mod `p`.
pub fn paley_tournament(p: u64) -> Result<Digraph> {
    if !is_prime(p) || p % 4 != 3 {
        return Err(Error::BadPrime(p));
    }
    let n = p as usize;
    let mut residue = vec![false; n];
    for x in 1..n {
        residue[x * x % n] = true;
    }
    let arcs: Vec<_> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && residue[(j + n - i) % n])
        .collect();
    Digraph::from_arc_list(n, &arcs)
}

/// Cartesian product of `ell` copies of `g`; `ell = 0` gives a single vertex.
pub fn cartesian_power(g: &Digraph, ell: usize) -> Digraph {
    let mut out = Digraph::empty(1);
    for _ in 0..ell {
        out = product(&out, g, ProductKind::Cartesian);
    }
    out
}

/// Random strongly connected digraph: a random Hamiltonian cycle plus arcs of density `p`.
pub fn random_strongly_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut arcs: Vec<(usize, usize)> = if n > 1 {
        (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect()
    } else {
        Vec::new()
    };
    for u in 0..n {
        for v in 0..n {
            if u != v && !arcs.contains(&(u, v)) && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arc_list(n, &arcs).expect("valid")
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub digraph: Digraph,
}

/// Deterministic fixture set: small cycles, both figures, the Paley tournament on 7
/// vertices and seeded random strongly connected digraphs on at most 5 vertices.
pub fn catalog() -> Vec<Fixture> {
    let mut out = vec![
        Fixture {
            name: "c3".into(),
            digraph: directed_cycle(3),
        },
        Fixture {
            name: "c4".into(),
            digraph: directed_cycle(4),
        },
        Fixture {
            name: "c5".into(),
            digraph: directed_cycle(5),
        },
        Fixture {
            name: "figure1".into(),
            digraph: figure1(),
        },
        Fixture {
            name: "figure2".into(),
            digraph: figure2_dsrg(),
        },
        Fixture {
            name: "paley7".into(),
            digraph: paley_tournament(7).expect("7 is 3 mod 4"),
        },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (i, n) in [3usize, 4, 4, 5].into_iter().enumerate() {
        out.push(Fixture {
            name: format!("random{i}"),
            digraph: random_strongly_connected(n, 0.35, &mut rng),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure2_counts() {
        let g = figure2_dsrg();
        assert_eq!(g.arc_count(), 32);
        assert!((0..8).all(|u| g.out_degree(u) == 4));
    }

    #[test]
    fn paley_rejects_bad_primes() {
        assert!(matches!(paley_tournament(5), Err(Error::BadPrime(5))));
        assert!(matches!(paley_tournament(15), Err(Error::BadPrime(15))));
        let t = paley_tournament(7).unwrap();
        assert_eq!(t.arc_count(), 21);
        assert!((0..7).all(|u| (0..7).all(|v| u == v || t.has_arc(u, v) != t.has_arc(v, u))));
    }

    #[test]
    fn power_of_triangle() {
        let g = cartesian_power(&directed_cycle(3), 2);
        assert_eq!(g.n(), 9);
        assert_eq!(g.metrics().transmission_regularity, Some(18));
        assert_eq!(cartesian_power(&directed_cycle(3), 1), directed_cycle(3));
    }

    #[test]
    fn catalog_is_connected_and_deterministic() {
        let a = catalog();
        let b = catalog();
        assert!(a.iter().all(|f| f.digraph.is_strongly_connected()));
        assert!(a.iter().zip(&b).all(|(x, y)| x.digraph == y.digraph));
    }
}
