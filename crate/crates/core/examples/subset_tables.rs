//! Trie of left-neighbourhood subsets and the exact-neighbourhood table
//! it yields for a small vertex set.

use degpat::fixtures;
use degpat::subset_dict::{LocalTable, SubsetDictionary};
use degpat::witness::{ExactNeighborhoodTable, LeftSubsetCounter};
use degpat::degeneracy_order;

fn main() -> degpat::Result<()> {
    let mut dict: SubsetDictionary<i64> = SubsetDictionary::new();
    dict.add(&[1, 4], 2)?;
    dict.add(&[1], 1)?;
    dict.add(&[2, 4], 5)?;
    dict.for_each_subset(&[1, 2, 4], |mask, v| println!("mask {mask:03b} -> {v}"))?;

    // Zeta and Möbius transforms undo each other.
    let t = LocalTable::from_values(vec![3, 1, 4, 1])?;
    assert_eq!(t.zeta_up().mobius_invert_up(), t);
    println!("up-sums of {:?}: {:?}", t.values(), t.zeta_up().values());

    let g = fixtures::petersen();
    let og = degeneracy_order(&g);
    let r = LeftSubsetCounter::build(&og, og.degeneracy());
    let q = ExactNeighborhoodTable::build(&r, &[0, 1, 5])?;
    println!("Petersen, S = {:?}", q.universe());
    for mask in 0..=q.full_mask() {
        println!("  N(v) ∩ S = {:?}: {}", q.vertices_of(mask), q.lookup(mask)?);
    }
    Ok(())
}
