//! Runs the nine acceptance criteria in sequence and prints one line each.
//! Exits nonzero when any criterion fails.

use ttknot::suite::Criterion;

fn main() {
    let mut failed = Vec::new();
    for c in Criterion::ALL {
        let outcome = c.run();
        println!("{}", outcome.line());
        if !outcome.passed() {
            failed.push(c);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", Criterion::ALL.len());
    } else {
        println!("acceptance: {} failing: {:?}", failed.len(), failed);
        std::process::exit(1);
    }
}
