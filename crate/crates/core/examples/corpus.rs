//! Runs every statistic over a directory of edge lists and prints the CSV.
//!
//! cargo run --example corpus -- DIR [TIMEOUT_SECS]

use std::io;
use std::time::Duration;

use degpat::harness::{run_corpus, write_csv, CorpusOptions};

fn main() -> degpat::Result<()> {
    let mut args = std::env::args().skip(1);
    let dir = args.next().unwrap_or_else(|| ".".into());
    let secs: f64 = args.next().map_or(60.0, |s| s.parse().expect("timeout in seconds"));
    let opts = CorpusOptions {
        timeout: Duration::from_secs_f64(secs),
        ..Default::default()
    };
    let rows = run_corpus(dir.as_ref(), &opts)?;
    write_csv(&rows, &mut io::stdout().lock(), false)?;
    Ok(())
}
