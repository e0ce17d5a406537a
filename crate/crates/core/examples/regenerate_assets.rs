//! Rebuilds the graph6 files under `data/`.
//!
//! `cage-6-5.g6`: the Hoffman-Singleton graph minus the Petersen graph
//! induced on pentagon 0 and pentagram 0. Every other vertex has exactly one
//! neighbour there, so 40 vertices of degree 6 remain.
//!
//! `hog-53705.g6` and `hog-54321.g6`: the smallest (2,4;5)- and
//! (2,3;6)-babi-graphs found by exhaustive search; for the latter the class
//! with 6 fat and 3 thin edges is kept.
//!
//!     cargo run --release --example regenerate_assets [-- <dir>]

use std::path::PathBuf;

use babi::graph::{edge_census, girth, graph6};
use babi::named::{hoffman_singleton, load_named};
use babi::search::enumerate_nonisomorphic;
use babi::BabiParams;

fn main() -> babi::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data"));
    std::fs::create_dir_all(&dir)?;

    let hs = hoffman_singleton();
    let petersen: Vec<usize> = (0..5).chain(25..30).collect();
    let (cage, _) = hs.remove_vertices(&petersen);
    write(&dir, "cage-6-5.g6", &cage)?;
    println!("cage-6-5: {} vertices, girth {}, diameter {:?}", cage.order(), girth(&cage), cage.diameter());

    let p = BabiParams::new(2, 4, 5)?;
    let all = enumerate_nonisomorphic(&p, 14, None)?;
    println!("(2,4;5) order 14: {} isomorphism classes", all.len());
    write(&dir, "hog-53705.g6", &all[0])?;

    let p = BabiParams::new(2, 3, 6)?;
    let all = enumerate_nonisomorphic(&p, 12, None)?;
    let chosen: Vec<_> = all.iter().filter(|g| edge_census(g, &p).is_ok_and(|c| (c.fat, c.thin) == (6, 3))).collect();
    println!("(2,3;6) order 12: {} classes, {} with 6 fat and 3 thin edges", all.len(), chosen.len());
    write(&dir, "hog-54321.g6", chosen[0])?;

    for name in ["cage-6-5", "hog-53705", "hog-54321"] {
        load_named(name, Some(&dir))?;
    }
    println!("wrote and validated assets in {}", dir.display());
    Ok(())
}

fn write(dir: &std::path::Path, file: &str, g: &babi::Graph) -> babi::Result<()> {
    std::fs::write(dir.join(file), format!("{}\n", graph6::encode_string(g)))?;
    Ok(())
}
