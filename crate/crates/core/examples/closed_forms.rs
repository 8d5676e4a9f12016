//! Compares the constructed NK index with its closed form for every variant,
//! then checks the regular-graph specialisations on a 3-regular graph.
//!
//! cargo run --example closed_forms

use transgraph::formulas::{self, BOUNDED};
use transgraph::indices;
use transgraph::{build, generate, Family, TransformKind};

fn main() {
    let g = generate(Family::Gnm {
        n: 7,
        m: 10,
        seed: 42,
    })
    .unwrap();
    println!(
        "random graph n=7 m=10, degrees {:?}",
        g.degrees().as_slice()
    );
    for kind in TransformKind::ALL {
        let oracle = indices::nk(&build(&g, kind).graph);
        let formula = formulas::nk_exact(kind, &g).expect("degrees are non-negative");
        let verdict = if oracle == formula {
            "MATCH"
        } else {
            "MISMATCH"
        };
        println!("{:<6} {:>24} {verdict}", kind.name(), formula);
    }

    // K4 is 3-regular: the corollaries depend on n, m and r only.
    let k4 = generate(Family::Complete(4)).unwrap();
    println!("\nK4 (n=4, m=6, r=3)");
    for kind in BOUNDED {
        let corollary = formulas::regular_corollary(kind, 4, 6, 3).unwrap();
        let oracle = indices::nk(&build(&k4, kind).graph);
        println!(
            "{:<6} corollary {:>12} constructed {:>12}",
            kind.name(),
            corollary,
            oracle
        );
    }
}
