//! Ordered-sides pattern counts on a few small graphs.

use degpat::counter::{count_bicliques, count_comatchings, count_pattern, decide_pattern, max_biclique};
use degpat::fixtures;
use degpat::pattern::Pattern;

fn main() -> degpat::Result<()> {
    let graphs = [
        ("K3,3", fixtures::complete_bipartite(3, 3)),
        ("crown4", fixtures::crown(4)),
        ("petersen", fixtures::petersen()),
        ("ladder5", fixtures::ladder(5)),
    ];
    let l2 = Pattern::ladder(2)?;
    for (name, g) in &graphs {
        println!(
            "{name:<9} K2,2={:<5} comatch2={:<5} ladder2={:<5} max_biclique={} has_ladder2={}",
            count_bicliques(g, 2, 2)?.count,
            count_comatchings(g, 2)?.count,
            count_pattern(g, &l2)?.count,
            max_biclique(g)?,
            decide_pattern(g, &l2)?,
        );
    }
    Ok(())
}
