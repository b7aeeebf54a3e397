//! Runs the golden-fixture checks (the same ones as `kaclie verify-all`).
//!
//! cargo run --release --example golden_checks

use kaclie::verify::{run_all, summarize};

fn main() {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{:<4} {:<36} {:>8} checks  {}", o.id, o.title, o.checked, if o.passed() { "ok" } else { "FAILED" });
    }
    let s = summarize(&outcomes);
    println!("{} passed, {} failed", s.passed, s.failed);
}
