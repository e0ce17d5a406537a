//! Lower, exact and upper bounds, the equality test for girths 5 and 6,
//! and the edge-census caps.
//!
//!     cargo run --example bounds_table [-- r s g]

use babi::bounds::{all_bounds, census_caps, equality56_feasible, fat_edge_lower};

fn main() -> babi::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (r, s, g) = match args.as_slice() {
        [r, s, g] => (*r, *s, *g),
        _ => (11, 14, 5),
    };
    println!("bounds for ({r},{s};{g}):");
    for (name, b) in all_bounds(r, s, g)? {
        println!("  {name:22} {:>10}  {:?}", b.value, b.kind);
    }
    if g == 5 || g == 6 {
        let f = equality56_feasible(r, s, g)?;
        println!("  equality feasible: {} (witness {:?})", f.feasible, f.witness);
    }

    let feasible: Vec<(usize, usize)> = (2..=50)
        .flat_map(|s| (2..s).map(move |r| (r, s)))
        .filter(|&(r, s)| equality56_feasible(r, s, 5).map(|f| f.feasible).unwrap_or(false))
        .collect();
    println!("girth 5, s <= 50: equality feasible only at {feasible:?}");

    println!("fat edges in a 240-vertex (11,14)-graph: at least {}", fat_edge_lower(240, 11, 14)?);
    let caps = census_caps(12, 2, 4)?;
    println!("(2,3;6) order 12: fat <= {}, thin <= {}", caps.fat_max, caps.thin_max);
    Ok(())
}
