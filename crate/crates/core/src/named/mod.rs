//! The specific cages the constructions start from.
//!
//! Small classical graphs are built directly; the (6,5)-cage and two
//! House of Graphs babi-cages are graph6 assets under the data directory.
//! Every provider validates order, degrees and girth before returning.

mod assets;
mod robertson_wegner;

pub use assets::{asset_dir, load_named, ASSET_ENV, ASSET_FILES};
pub use robertson_wegner::{robertson_wegner, RobertsonWegner, ZPhi};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::pg2;
use crate::graph::{girth, verify_babi, BabiParams, Girth, Graph};

/// What a named graph must look like before it is handed out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Expected {
    /// `k`-regular of girth `g`
    Regular { k: usize, g: usize },
    /// an `(r, s; g)`-babi-graph
    Babi(BabiParams),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Constructed,
    AdjacencyTable,
    DataFile,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct NamedGraphEntry {
    pub name: &'static str,
    pub order: usize,
    pub expected: Expected,
    pub source: Source,
}

pub const ENTRIES: &[NamedGraphEntry] = &[
    NamedGraphEntry { name: "petersen", order: 10, expected: Expected::Regular { k: 3, g: 5 }, source: Source::Constructed },
    NamedGraphEntry { name: "heawood", order: 14, expected: Expected::Regular { k: 3, g: 6 }, source: Source::Constructed },
    NamedGraphEntry { name: "robertson", order: 19, expected: Expected::Regular { k: 4, g: 5 }, source: Source::AdjacencyTable },
    NamedGraphEntry { name: "hoffman-singleton", order: 50, expected: Expected::Regular { k: 7, g: 5 }, source: Source::Constructed },
    NamedGraphEntry { name: "robertson-wegner", order: 30, expected: Expected::Regular { k: 5, g: 5 }, source: Source::Constructed },
    NamedGraphEntry { name: "cage-6-5", order: 40, expected: Expected::Regular { k: 6, g: 5 }, source: Source::DataFile },
    NamedGraphEntry {
        name: "hog-53705",
        order: 14,
        expected: Expected::Babi(BabiParams { r: 2, s: 4, g: 5 }),
        source: Source::DataFile,
    },
    NamedGraphEntry {
        name: "hog-54321",
        order: 12,
        expected: Expected::Babi(BabiParams { r: 2, s: 3, g: 6 }),
        source: Source::DataFile,
    },
];

pub fn entry(name: &str) -> Result<&'static NamedGraphEntry> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownGraph(name.to_string()))
}

impl NamedGraphEntry {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |reason: String| Err(Error::Validation { name: self.name.to_string(), reason });
        if g.order() != self.order {
            return fail(format!("order {} instead of {}", g.order(), self.order));
        }
        match self.expected {
            Expected::Regular { k, g: gi } => {
                if g.regular_degree() != Some(k) {
                    return fail(format!("not {k}-regular: degrees {:?}", g.degree_histogram()));
                }
                if girth(g) != Girth::Finite(gi) {
                    return fail(format!("girth {} instead of {gi}", girth(g)));
                }
            }
            Expected::Babi(p) => {
                let cert = verify_babi(g, &p);
                if !cert.babi {
                    return fail(format!("not a {p}-babi-graph (degrees {:?}, girth {})", cert.degrees, cert.girth));
                }
            }
        }
        Ok(())
    }
}

fn checked(name: &str, g: Graph) -> Graph {
    entry(name).and_then(|e| e.validate(&g)).unwrap_or_else(|e| panic!("built-in graph is wrong: {e}"));
    g
}

/// Kneser graph K(5,2): 2-subsets of `{0..4}` in lexicographic order,
/// adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut g = Graph::new(10);
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                g.add_edge(i, j);
            }
        }
    }
    checked("petersen", g)
}

/// Levi graph of the Fano plane.
pub fn heawood() -> Graph {
    checked("heawood", pg2(2).expect("PG(2,2)").levi())
}

/// Adjacency table of the (4,5)-cage on vertices `1..=19`.
pub const ROBERTSON_TABLE: [[usize; 4]; 19] = [
    [2, 3, 4, 5],
    [1, 8, 9, 10],
    [1, 12, 14, 16],
    [1, 11, 18, 19],
    [1, 13, 15, 17],
    [7, 14, 17, 19],
    [6, 15, 16, 18],
    [2, 13, 14, 18],
    [2, 11, 16, 17],
    [2, 12, 15, 19],
    [4, 9, 14, 15],
    [3, 10, 17, 18],
    [5, 8, 16, 19],
    [3, 6, 8, 11],
    [5, 7, 10, 11],
    [3, 7, 9, 13],
    [5, 6, 9, 12],
    [4, 7, 8, 12],
    [4, 6, 10, 13],
];

/// The Robertson graph; table vertex `i` is graph vertex `i - 1`.
pub fn robertson() -> Graph {
    let adj = ROBERTSON_TABLE.iter().map(|row| row.iter().map(|v| v - 1).collect()).collect();
    checked("robertson", Graph::from_adjacency(adj).expect("table is symmetric"))
}

/// Pentagons `P_h` (vertices `5h + i`) and pentagrams `Q_h` (vertices
/// `25 + 5h + i`), with `P_{h,i} ~ Q_{k, hk+i}`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, i: usize| 5 * h + i % 5;
    let q = |h: usize, i: usize| 25 + 5 * h + i % 5;
    let mut g = Graph::new(50);
    for h in 0..5 {
        for i in 0..5 {
            g.add_edge(p(h, i), p(h, i + 1));
            g.add_edge(q(h, i), q(h, i + 2));
            for k in 0..5 {
                g.add_edge(p(h, i), q(k, h * k + i));
            }
        }
    }
    checked("hoffman-singleton", g)
}

/// Built-in graphs by name; data-file entries go through [`load_named`].
pub fn builtin(name: &str) -> Result<Graph> {
    Ok(match name {
        "petersen" => petersen(),
        "heawood" => heawood(),
        "robertson" => robertson(),
        "hoffman-singleton" => hoffman_singleton(),
        "robertson-wegner" => robertson_wegner().graph,
        other => {
            entry(other)?;
            return Err(Error::InvalidParams(format!("`{other}` is a data asset; use load_named")));
        }
    })
}
