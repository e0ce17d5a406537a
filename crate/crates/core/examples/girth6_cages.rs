//! Girth-6 babi-graphs carved out of the Levi graphs of PG(2,q).
//!
//!     cargo run --example girth6_cages

use babi::bounds::semireg6_lower;
use babi::constructions::{babi_g6_mod4, babi_g6_oval, babi_g6_pair, babi_g6_triangle};

fn main() -> babi::Result<()> {
    for q in [2, 3, 4, 5, 7] {
        let c = babi_g6_pair(q)?;
        println!("pair     q={q}: {} order {:3}", c.certificate.params, c.graph.order());
    }
    for q in [4, 5, 7, 8] {
        let c = babi_g6_triangle(q)?;
        let bound = semireg6_lower(q as usize)?.value;
        println!("triangle q={q}: {} order {:3} (bound {bound})", c.certificate.params, c.graph.order());
    }
    for q in [5, 9, 13] {
        let c = babi_g6_mod4(q)?;
        let bound = semireg6_lower(q as usize)?.value;
        println!("mod4     q={q}: {} order {:3} (bound {bound})", c.certificate.params, c.graph.order());
    }
    for q in [5, 7, 9] {
        let c = babi_g6_oval(q)?;
        println!("oval     q={q}: {} order {:3}", c.certificate.params, c.graph.order());
    }
    Ok(())
}
