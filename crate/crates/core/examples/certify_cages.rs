//! Exhaustive search: smallest orders, cage certificates and isomorphism
//! class counts.
//!
//!     cargo run --release --example certify_cages

use babi::constructions::{babi_235, babi_g6_pair};
use babi::graph::graph6;
use babi::search::{certify_cage, count_nonisomorphic, exhaustive_min, SearchMode, SearchSpec};
use babi::BabiParams;

fn main() -> babi::Result<()> {
    for (r, s, g, v_max) in [(2, 3, 5, 12), (2, 3, 6, 16), (2, 4, 5, 14), (3, 4, 5, 16)] {
        let p = BabiParams::new(r, s, g)?;
        let out = exhaustive_min(&SearchSpec::new(p, v_max).mode(SearchMode::ProveMin))?;
        println!(
            "{p}: minimum {:?} (refuted {:?}, {} nodes, exhaustive {}) {}",
            out.min_order,
            out.refuted,
            out.nodes,
            out.exhaustive,
            out.witness.as_ref().map(graph6::encode_string).unwrap_or_default()
        );
    }

    let p = BabiParams::new(2, 3, 5)?;
    println!("babi_235 is a cage: {}", certify_cage(&babi_235()?.graph, &p)?);
    let ten = exhaustive_min(&SearchSpec::new(p, 12).v_min(12))?.witness.expect("12-vertex witness");
    println!("a {}-vertex (2,3;5)-graph is a cage: {}", ten.order(), certify_cage(&ten, &p)?);
    let p6 = BabiParams::new(2, 3, 6)?;
    println!("babi_g6_pair(2) is a cage: {}", certify_cage(&babi_g6_pair(2)?.graph, &p6)?);
    println!("(2,3;6)-babi-cages of order 12: {}", count_nonisomorphic(&p6, 12)?);
    Ok(())
}
