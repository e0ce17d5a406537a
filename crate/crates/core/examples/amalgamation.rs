//! Amalgamating regular graphs into biaffine planes, and the general
//! switching composition of an (r,g)- and an (s,g)-graph.
//!
//!     cargo run --release --example amalgamation

use babi::constructions::{amalgamate, compose_babi};
use babi::geometry::BiaffineKind;
use babi::graph::{cycle, perfect_matching_graph};
use babi::named::{petersen, robertson};

fn main() -> babi::Result<()> {
    let runs = [
        (4, BiaffineKind::Type1, perfect_matching_graph(4), "matching"),
        (7, BiaffineKind::Type2, cycle(6), "hexagon"),
        (11, BiaffineKind::Type2, petersen(), "Petersen"),
        (19, BiaffineKind::Type1, robertson(), "Robertson"),
    ];
    for (q, kind, gamma, name) in runs {
        let c = amalgamate(q, kind, &gamma)?;
        let census = c.certificate.census.expect("census");
        println!(
            "q={q:2} {kind} + {name:9}: {} of order {:3}, fat {:3}, thin {}",
            c.certificate.params, c.graph.order(), census.fat, census.thin
        );
    }
    let c = compose_babi(&petersen(), &robertson(), 5)?;
    println!("Petersen with Robertson by switching: {} of order {}", c.certificate.params, c.graph.order());
    Ok(())
}
