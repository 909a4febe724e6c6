//! Smallest-last ordering of an edge list read from a file or stdin.
//!
//! cargo run --example degeneracy -- graph.txt

use std::io::{self, Read};

use degpat::{degeneracy_order, load_edge_list};

fn main() -> degpat::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    let loaded = load_edge_list(&text)?;
    let og = degeneracy_order(&loaded.graph);
    println!("n={} m={} degeneracy={}", og.n(), loaded.graph.m(), og.degeneracy());
    for &v in og.order() {
        let left = loaded.labels_of(og.left_neighbors(v));
        println!("{:>4}  {:<8} <- {}", og.rank(v), loaded.label(v), left.join(" "));
    }
    Ok(())
}
