//! AM-GM upper bounds for the seven bounded variants: tight on a regular
//! graph, strict on most others, and tight again whenever every averaged
//! factor happens to coincide.
//!
//! cargo run --example amgm_bounds

use transgraph::formulas::{self, approx, BoundOutcome, BOUNDED};
use transgraph::{generate, ExactRational, Family};

fn main() {
    let graphs = [
        ("cycle:6", Family::Cycle(6)),
        ("path:5", Family::Path(5)),
        ("star:5", Family::Star(5)),
        ("bipartite:2,4", Family::CompleteBipartite(2, 4)),
    ];
    for (name, family) in graphs {
        let g = generate(family).unwrap();
        println!("{name} (regular: {:?})", g.is_regular());
        for kind in BOUNDED {
            let b = formulas::nk_bound(kind, &g).expect("graph has edges");
            let outcome = match b.outcome() {
                BoundOutcome::Tight => "tight",
                BoundOutcome::Strict => "strict",
                BoundOutcome::Violated => "VIOLATED",
            };
            println!(
                "  {:<5} exact {:>14} bound {:>18.1} ratio {:.4} {outcome}",
                kind.name(),
                b.exact,
                approx(&b.bound),
                approx(&ratio(&b)),
            );
        }
    }
}

fn ratio(b: &formulas::BoundResult) -> ExactRational {
    ExactRational::from_integer(b.exact.clone().into()) / &b.bound
}
