mod common;

use proptest::prelude::*;

use common::{any_digraph, strong_digraph};
use digraph_spectra::{Digraph, Dist};

fn is_acyclic(g: &Digraph) -> bool {
    let mut indeg = g.in_degrees();
    let mut ready: Vec<usize> = (0..g.n()).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = ready.pop() {
        seen += 1;
        for v in g.out_neighbors(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push(v);
            }
        }
    }
    seen == g.n()
}

proptest! {
    #[test]
    fn transmissions_are_distance_row_sums(g in strong_digraph(1, 7)) {
        let d = g.distance_data();
        let want: Vec<u64> = (0..g.n())
            .map(|u| d.row(u).iter().map(|x| x.value().unwrap() as u64).sum())
            .collect();
        prop_assert_eq!(g.metrics().transmissions, Some(want));
    }

    #[test]
    fn girth_is_smallest_local_cycle(g in any_digraph(1, 7)) {
        let m = g.metrics();
        let least = m.xi.iter().copied().min().unwrap();
        prop_assert_eq!(m.girth, least);
        prop_assert_eq!(m.girth == Dist::INF, is_acyclic(&g));
        prop_assert_eq!(m.xi.iter().all(|x| *x == Dist::INF), is_acyclic(&g));
    }

    #[test]
    fn unit_distance_means_arc(g in any_digraph(1, 7)) {
        let d = g.distance_data();
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(d.get(u, v) == Dist::finite(1), g.has_arc(u, v));
            }
        }
    }

    #[test]
    fn diameter_below_order(g in strong_digraph(1, 7)) {
        let diam = g.metrics().diameter.value().unwrap();
        prop_assert!((diam as usize) < g.n());
    }

    #[test]
    fn arc_list_round_trip(g in any_digraph(1, 7)) {
        let again = Digraph::from_arc_list(g.n(), &g.arcs()).unwrap();
        prop_assert_eq!(again, g);
    }
}
