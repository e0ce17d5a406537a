//! Girth-5 babi-graphs from the Petersen, Robertson, (6,5)-, Hoffman-Singleton
//! and Robertson-Wegner graphs and from PG(2,4), with the semi-regular bound.
//!
//!     cargo run --example girth5_cages

use babi::bounds::semireg5_lower;
use babi::constructions::{
    babi_235, babi_345, babi_3555_from_rw, babi_455_24, babi_455_28, babi_565, babi_675, Construction,
};

fn show(c: &Construction) {
    let cert = &c.certificate;
    let census = cert.census.expect("babi-graphs have a census");
    let bound = match semireg5_lower(cert.params.r) {
        Ok(b) if cert.params.s == cert.params.r + 1 => format!("{}", b.value),
        _ => "-".into(),
    };
    println!(
        "{:10} order {:3}  bound {:>3}  fat {:3} thin {:3} mixed {:3}",
        cert.params.to_string(),
        cert.order,
        bound,
        census.fat,
        census.thin,
        census.mixed
    );
}

fn main() -> babi::Result<()> {
    for c in [babi_235()?, babi_345()?, babi_455_24()?, babi_675()?, babi_455_28()?, babi_3555_from_rw()?] {
        show(&c);
    }
    match babi_565(None) {
        Ok(c) => show(&c),
        Err(e) => println!("(5,6;5) skipped: {e}"),
    }
    Ok(())
}
