//! Builds all fifteen transformation graphs of the path on three vertices
//! and prints each one's size and degree per vertex-role.
//!
//! cargo run --example transforms

use transgraph::indices;
use transgraph::{build, generate, Family, TransformKind};

fn main() {
    let g = generate(Family::Path(3)).unwrap();
    println!("source: {}", g.to_edge_list().replace('\n', "  "));

    for kind in TransformKind::ALL {
        let t = build(&g, kind);
        let degrees: Vec<String> = t
            .degree_dump()
            .degrees
            .iter()
            .map(|d| format!("{}:{}", d.role, d.degree))
            .collect();
        println!(
            "{:<6} |V|={} |E|={:<2} NK={:<6} {}",
            kind.name(),
            t.graph.order(),
            t.graph.size(),
            indices::nk(&t.graph),
            degrees.join(" ")
        );
    }

    println!(
        "\nG+++ of P3 in dot format:\n{}",
        build(&g, "g+++".parse().unwrap()).to_dot()
    );
}
