//! Ladder approximation with its certificate.

use degpat::fixtures;
use degpat::ladder::ladder_approx;

fn main() -> degpat::Result<()> {
    for t in [3, 5, 8] {
        let g = fixtures::ladder(t);
        let res = ladder_approx(&g)?;
        assert!(res.verify(&g));
        let (a, b) = res.sequences();
        println!("L{t}: k={} a={a:?} b={b:?}", res.k);
        for (i, level) in res.levels.iter().enumerate() {
            println!("  M{i} = {:?} via {}", level.set, level.witness);
        }
    }
    Ok(())
}
