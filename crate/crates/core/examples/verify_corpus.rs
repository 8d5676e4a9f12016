//! Runs the corpus-wide verification and prints the summary tables.
//!
//! cargo run --release --example verify_corpus [max_n]

use transgraph::transform::TransformKind;
use transgraph::verify::{self, Allowlist, CorpusSpec};

fn main() {
    let max_n = std::env::args()
        .nth(1)
        .map_or(5, |s| s.parse().expect("max_n is an integer"));
    let mut spec = CorpusSpec::default();
    spec.enumerate[0].max_n = max_n;

    let report = verify::run_suite(&spec, &TransformKind::ALL, &Allowlist::known_errata())
        .expect("valid corpus");
    print!("{}", report.to_table());

    let busiest = report
        .coverage()
        .into_iter()
        .max_by_key(|&(_, n)| n)
        .unwrap();
    println!("most-checked claim: {} ({} graphs)", busiest.0, busiest.1);
}
