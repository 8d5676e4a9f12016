//! Checks the printed worked examples for cycles and complete graphs and
//! lists the ones that disagree with construction.
//!
//! cargo run --example errata

use transgraph::formulas::{self, ExampleFamily};
use transgraph::indices;
use transgraph::{build, generate, Family, TransformKind};

fn main() {
    for (family, label) in [(ExampleFamily::Cycle, "C"), (ExampleFamily::Complete, "K")] {
        for kind in TransformKind::GXYZ.into_iter().chain([
            "g++".parse().unwrap(),
            "g+-".parse().unwrap(),
            "g-+".parse().unwrap(),
            "g--".parse().unwrap(),
        ]) {
            let mut first_failure = None;
            for n in 3..=8 {
                let graph = match family {
                    ExampleFamily::Cycle => generate(Family::Cycle(n)),
                    ExampleFamily::Complete => generate(Family::Complete(n)),
                }
                .unwrap();
                let printed = formulas::family_example(family, kind, n).unwrap();
                let constructed = indices::nk(&build(&graph, kind).graph);
                if formulas::rational_to_nat(&printed).as_ref() != Some(&constructed) {
                    first_failure = Some((n, printed, constructed));
                    break;
                }
            }
            match first_failure {
                None => println!("{label}_n {:<5} holds for 3 <= n <= 8", kind.name()),
                Some((n, printed, constructed)) => println!(
                    "{label}_n {:<5} fails at n = {n}: printed {printed}, constructed {constructed}",
                    kind.name()
                ),
            }
        }
    }
}
