//! Exact babi-cages of girth 3 and 4 against their closed-form orders.
//!
//!     cargo run --example small_girth_cages

use babi::bounds::{babi_g3_exact, babi_g4_exact};
use babi::constructions::{babi_g3, babi_g4};

fn main() -> babi::Result<()> {
    println!(" r  s   g=3 (exact)   g=4 (exact)");
    for s in 3..=8 {
        for r in 2..s {
            let g3 = babi_g3(r, s)?;
            let g4 = babi_g4(r, s)?;
            println!(
                "{r:2} {s:2}   {:3} ({:3})     {:3} ({:3})",
                g3.graph.order(),
                babi_g3_exact(r, s)?.value,
                g4.graph.order(),
                babi_g4_exact(r, s)?.value
            );
        }
    }
    Ok(())
}
