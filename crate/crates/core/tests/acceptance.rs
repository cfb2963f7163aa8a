//! Runs every acceptance criterion and prints one line per criterion.

use std::io::Write;

use cyclic_flats::verify::{run_one, CRITERIA};

#[test]
fn acceptance() {
    let outcomes: Vec<_> = (1..=CRITERIA.len()).map(|id| run_one(id, 0)).collect();
    // Written to the real stdout, not the captured one, so the report shows
    // up in a plain `cargo test` run.
    let mut out = std::io::stdout().lock();
    for o in &outcomes {
        writeln!(out, "{}", o.line()).unwrap();
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
