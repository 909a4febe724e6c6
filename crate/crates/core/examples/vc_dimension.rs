//! Exact and approximate VC-dimension of the neighbourhood set system.

use degpat::fixtures;
use degpat::vc::{vc_approx, vc_approx_linear, vc_exact};

fn main() -> degpat::Result<()> {
    for (name, g) in [
        ("C5", fixtures::cycle(5)),
        ("petersen", fixtures::petersen()),
        ("K4,4", fixtures::complete_bipartite(4, 4)),
        ("shattered3", fixtures::shattered(3)),
    ] {
        let exact = vc_exact(&g)?;
        assert!(exact.verify(&g));
        let half = vc_approx(&g, 0.5)?;
        let lin = vc_approx_linear(&g)?;
        println!(
            "{name:<10} d={} exact={} {:?}  eps=0.5 -> {}  linear -> {}",
            exact.degeneracy, exact.vc, exact.shattered_set, half.vc, lin.vc
        );
    }
    let g = fixtures::shattered(2);
    let res = vc_exact(&g)?;
    for w in &res.witnesses {
        println!("  {:?} seen exactly by {}", w.subset, w.vertex);
    }
    Ok(())
}
