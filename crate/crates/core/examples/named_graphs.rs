//! The built-in cages and data assets, exported as graph6.
//!
//!     cargo run --example named_graphs [-- <out-dir>]

use std::path::PathBuf;

use babi::graph::{girth, graph6};
use babi::named::{builtin, load_named, robertson_wegner, Source, ENTRIES};

fn main() -> babi::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from);
    for e in ENTRIES {
        let g = match e.source {
            Source::DataFile => match load_named(e.name, None) {
                Ok(g) => g,
                Err(err) => {
                    println!("{:18} unavailable: {err}", e.name);
                    continue;
                }
            },
            _ => builtin(e.name)?,
        };
        println!("{:18} order {:2}, girth {}, degrees {:?}", e.name, g.order(), girth(&g), g.degree_histogram());
        if let Some(dir) = &out {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join(format!("{}.g6", e.name)), format!("{}\n", graph6::encode_string(&g)))?;
        }
    }
    let rw = robertson_wegner();
    println!("Robertson-Wegner: {} cubes, {} tetrahedra", rw.cubes.len(), rw.tetrahedra.len());
    Ok(())
}
