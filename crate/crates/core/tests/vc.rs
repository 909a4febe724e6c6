mod common;

use common::{all_graphs_up_to_iso, brute_vc, has_triangle, random_graphs, structured_fixtures};
use degpat::vc::{clique_reduction, vc_approx, vc_approx_linear, vc_exact, VcConfig, vc_exact_with};
use degpat::{degeneracy_order, fixtures, Control, Graph};

#[test]
fn exact_matches_brute_force_on_random_graphs() {
    for (i, g) in random_graphs(300, 14, 21).iter().enumerate() {
        let res = vc_exact(g).unwrap();
        assert_eq!(res.vc, brute_vc(g), "random #{i}");
        assert!(res.verify(g));
        assert!(res.vc <= degeneracy_order(g).degeneracy() + 1);
    }
}

#[test]
fn exact_on_fixtures() {
    for (name, g) in structured_fixtures() {
        let res = vc_exact(&g).unwrap();
        assert_eq!(res.vc, brute_vc(&g), "{name}");
        assert!(res.verify(&g), "{name}");
    }
    for t in 1..=3 {
        assert_eq!(vc_exact(&fixtures::shattered(t)).unwrap().vc, t);
    }
    assert_eq!(vc_exact(&fixtures::cycle(4)).unwrap().vc, brute_vc(&fixtures::cycle(4)));
}

#[test]
fn brute_force_switch_does_not_change_values() {
    for g in random_graphs(60, 12, 4) {
        let eager = vc_exact_with(&g, &VcConfig { brute_force_factor: 0.0 }, &Control::unbounded()).unwrap();
        let never = vc_exact_with(&g, &VcConfig { brute_force_factor: f64::INFINITY }, &Control::unbounded()).unwrap();
        assert_eq!(eager.vc, never.vc);
    }
}

#[test]
fn approximations_are_sound_and_large_enough() {
    for g in random_graphs(120, 14, 8) {
        let opt = vc_exact(&g).unwrap().vc;
        for eps in [0.25, 0.5, 1.0] {
            let res = vc_approx(&g, eps).unwrap();
            assert!(res.verify(&g));
            assert!(res.vc <= opt);
            assert!(res.vc >= (eps * opt as f64).ceil() as usize, "eps {eps}: {} vs {opt}", res.vc);
        }
        let lin = vc_approx_linear(&g).unwrap();
        assert!(lin.verify(&g) && lin.vc <= opt);
    }
}

#[test]
fn reduction_on_small_hosts() {
    for n in 3..=5 {
        for h in all_graphs_up_to_iso(n) {
            let g = clique_reduction(&h, 3).unwrap();
            let res = vc_exact(&g).unwrap();
            assert_eq!(res.vc, brute_vc(&g));
            assert!(res.verify(&g));
            assert!(res.vc <= degeneracy_order(&g).degeneracy() + 1);
            assert_eq!(res.vc >= 3, has_triangle(&h));
        }
    }
}

#[test]
fn edge_cases() {
    assert_eq!(vc_exact(&Graph::new(0)).unwrap().vc, 0);
    assert_eq!(vc_exact(&fixtures::matching(3)).unwrap().vc, 1);
}
