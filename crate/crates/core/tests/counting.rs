mod common;

use common::{brute_count, random_graphs, structured_fixtures};
use degpat::counter::{count_bicliques, count_comatchings, count_pattern, decide_pattern};
use degpat::pattern::Pattern;
use degpat::{fixtures, Graph};
use num_bigint::BigUint;

const SPECS: [&str; 7] = [
    "biclique:2,2",
    "biclique:3,2",
    "comatching:2",
    "comatching:3",
    "ladder:2",
    "ladder:3",
    "shattered:2",
];

fn check(name: &str, g: &Graph, spec: &str) {
    let p = Pattern::from_builtin(spec).unwrap();
    let got = count_pattern(g, &p).unwrap().count;
    let want = BigUint::from(brute_count(g, &p));
    assert_eq!(got, want, "{spec} on {name}");
    assert_eq!(decide_pattern(g, &p).unwrap(), want > BigUint::ZERO, "decide {spec} on {name}");
}

#[test]
fn builtins_match_brute_force_on_fixtures() {
    for (name, g) in structured_fixtures() {
        for spec in SPECS {
            check(&name, &g, spec);
        }
    }
}

#[test]
fn builtins_match_brute_force_on_random_graphs() {
    for (i, g) in random_graphs(200, 9, 7).iter().enumerate() {
        for spec in SPECS {
            check(&format!("random #{i}"), g, spec);
        }
    }
}

#[test]
fn semiladder_and_asymmetric_patterns() {
    for (i, g) in random_graphs(60, 8, 11).iter().enumerate() {
        for spec in ["semiladder:2", "semiladder:3", "biclique:2,3", "biclique:3,3"] {
            check(&format!("random #{i}"), g, spec);
        }
    }
}

#[test]
fn specialised_paths_agree() {
    for g in random_graphs(80, 9, 3) {
        for (s, t) in [(2, 2), (3, 2), (3, 3), (2, 1), (4, 1)] {
            let want = brute_count(&g, &Pattern::biclique(s, t).unwrap());
            assert_eq!(count_bicliques(&g, s, t).unwrap().count, BigUint::from(want), "K{s},{t}");
        }
        for t in [2, 3] {
            let want = brute_count(&g, &Pattern::comatching(t).unwrap());
            assert_eq!(count_comatchings(&g, t).unwrap().count, BigUint::from(want));
        }
    }
}

#[test]
fn relabelling_preserves_counts() {
    let g = fixtures::petersen();
    let perm: Vec<u32> = vec![3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
    let h = g.relabel(&perm);
    for spec in ["biclique:2,2", "comatching:3", "ladder:3"] {
        let p = Pattern::from_builtin(spec).unwrap();
        assert_eq!(count_pattern(&g, &p).unwrap().count, count_pattern(&h, &p).unwrap().count);
    }
}

#[test]
fn adding_edges_never_lowers_biclique_counts() {
    for g in random_graphs(30, 8, 5) {
        let before = count_bicliques(&g, 2, 2).unwrap().count;
        let n = g.n() as u32;
        let mut edges: Vec<_> = g.edges().collect();
        if let Some(missing) = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| !g.has_edge(u, v)) {
            edges.push(missing);
        }
        let after = count_bicliques(&Graph::from_edges(g.n(), &edges), 2, 2).unwrap().count;
        assert!(after >= before);
    }
}
