mod common;

use common::{brute_ladder, random_graphs, structured_fixtures};
use degpat::ladder::{ladder_approx, ladder_approx_unpruned, ladder_upper_bound};
use degpat::{degeneracy_order, fixtures};

#[test]
fn sandwich_on_random_graphs() {
    for (i, g) in random_graphs(100, 12, 13).iter().enumerate() {
        let t = brute_ladder(g);
        let res = ladder_approx(g).unwrap();
        assert!(res.k >= t / 2 && res.k <= t, "random #{i}: t={t} k={}", res.k);
        assert!(res.verify(g));
        assert!(t <= ladder_upper_bound(&degeneracy_order(g)));
    }
}

#[test]
fn sandwich_on_fixtures() {
    for (name, g) in structured_fixtures() {
        let t = brute_ladder(&g);
        let res = ladder_approx(&g).unwrap();
        assert!(res.k >= t / 2 && res.k <= t, "{name}: t={t} k={}", res.k);
        assert!(res.verify(&g));
    }
    for t in [4, 6] {
        let g = fixtures::ladder(t);
        assert_eq!(brute_ladder(&g), t);
        let k = ladder_approx(&g).unwrap().k;
        assert!(k >= t / 2 && k <= t);
    }
}

#[test]
fn pruning_matches_full_enumeration() {
    for g in random_graphs(40, 11, 17) {
        assert_eq!(ladder_approx(&g).unwrap().k, ladder_approx_unpruned(&g).unwrap().k);
    }
}
