//! Generates a few standard graphs and prints their degree-based indices.
//!
//! cargo run --example indices

use transgraph::indices::IndexReport;
use transgraph::{generate, parse_edge_list, Family};

fn main() {
    let families = [
        Family::Path(5),
        Family::Cycle(6),
        Family::Star(5),
        Family::Complete(4),
        Family::CompleteBipartite(2, 3),
        Family::Gnm {
            n: 8,
            m: 12,
            seed: 7,
        },
    ];
    println!(
        "{:<16} {:>3} {:>3} {:>5} {:>5} {:>8} {:>12}",
        "graph", "n", "m", "M1", "M2", "NK", "Pi1*"
    );
    for family in families {
        let g = generate(family).expect("valid parameters");
        let r = IndexReport::new(&g);
        println!(
            "{:<16} {:>3} {:>3} {:>5} {:>5} {:>8} {:>12}",
            family.to_string(),
            r.n,
            r.m,
            r.m1,
            r.m2,
            r.nk,
            r.pi1star
        );
    }

    // The same indices from an edge list, as read by the CLI.
    let g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 1  # a triangle with a pendant vertex\n")
        .expect("well-formed edge list");
    println!("\nedge list input:\n{}", IndexReport::new(&g).to_text());
}
