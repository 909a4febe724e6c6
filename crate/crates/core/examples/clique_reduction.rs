//! Reduction from triangle detection: the output graph has VC-dimension 3
//! exactly when the host contains a triangle.

use degpat::fixtures;
use degpat::vc::{clique_reduction, vc_exact};
use degpat::degeneracy_order;

fn main() -> degpat::Result<()> {
    for (name, h) in [("K3", fixtures::complete(3)), ("C4", fixtures::cycle(4)), ("C5", fixtures::cycle(5)), ("K4", fixtures::complete(4))] {
        let g = clique_reduction(&h, 3)?;
        let d = degeneracy_order(&g).degeneracy();
        println!("{name}: n={} m={} d={d} vc={}", g.n(), g.m(), vc_exact(&g)?.vc);
    }
    Ok(())
}
