use diffcolor::generate;
use diffcolor::{decision_dc_at_least, differential_value, exact_dc, Graph};
use itertools::Itertools;

fn brute_force_dc(g: &Graph) -> usize {
    let n = g.n();
    (1..=n).permutations(n).map(|labels| differential_value(g, &labels).unwrap()).max().unwrap()
}

#[test]
fn oracle_matches_brute_force_on_small_trees() {
    for n in 2..=7 {
        for g in generate::nonisomorphic_trees(n) {
            let r = exact_dc(&g).unwrap();
            assert_eq!(r.dc, brute_force_dc(&g), "{g}");
            assert_eq!(differential_value(&g, r.witness.labels()).unwrap(), r.dc);
        }
    }
}

#[test]
fn oracle_matches_brute_force_on_small_forests() {
    let forests = [
        Graph::new(5, [(0, 1), (2, 3)]).unwrap(),
        Graph::new(6, [(0, 1), (1, 2), (3, 4)]).unwrap(),
        Graph::new(6, [(0, 1), (0, 2), (0, 3), (4, 5)]).unwrap(),
    ];
    for g in forests {
        assert_eq!(exact_dc(&g).unwrap().dc, brute_force_dc(&g), "{g}");
    }
}

#[test]
fn decision_is_monotone() {
    for g in generate::nonisomorphic_trees(8) {
        let dc = exact_dc(&g).unwrap().dc;
        for d in 1..=g.n() {
            let feasible = decision_dc_at_least(&g, d).unwrap();
            assert_eq!(feasible.is_some(), d <= dc, "{g} d={d}");
            if let Some(w) = feasible {
                assert!(differential_value(&g, w.labels()).unwrap() >= d);
            }
        }
    }
}

#[test]
fn paths_reach_half() {
    for n in 2..=14 {
        assert_eq!(exact_dc(&Graph::path(n)).unwrap().dc, n / 2);
    }
}
