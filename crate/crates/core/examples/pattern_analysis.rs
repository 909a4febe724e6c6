//! Cover numbers and completed signatures of the built-in patterns.

use degpat::pattern::{analyze, Pattern};

fn main() -> degpat::Result<()> {
    for spec in ["biclique:2,2", "biclique:3,2", "comatching:3", "ladder:3", "semiladder:3", "shattered:2"] {
        let p = Pattern::from_builtin(spec)?;
        let a = analyze(&p)?;
        println!(
            "{spec:<14} |H|={:<2} lc={} sigs X/Y={}/{} hoa={}",
            p.vertex_count(),
            a.lc,
            a.sigs_x.len(),
            a.sigs_y.len(),
            a.hoa
        );
    }
    let p = Pattern::from_builtin("ladder:2")?;
    println!("{}", p.to_json());
    Ok(())
}
