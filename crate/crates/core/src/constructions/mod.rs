//! Explicit babi-graph constructions, each returning the graph with its
//! verification certificate.

mod amalgam;
mod girth5;
mod girth6;
mod small_girth;

use std::path::PathBuf;

use serde::Serialize;

use crate::bounds;
use crate::error::{Error, Result};
use crate::geometry::BiaffineKind;
use crate::graph::{verify_babi, BabiParams, Certificate, Graph};

pub use amalgam::{amalgamate, compose_babi};
pub use girth5::{
    babi_235, babi_345, babi_3555_from_rw, babi_455_24, babi_455_28, babi_565, babi_675, rw_labels, RwLabels,
    NEW_EDGES_455,
};
pub use girth6::{babi_g6_mod4, babi_g6_oval, babi_g6_pair, babi_g6_triangle};
pub use small_girth::{babi_g3, babi_g4};

#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: Graph,
    pub certificate: Certificate,
}

/// Verifies `g` as an `(r, s; g)`-babi-graph, failing with
/// [`Error::Construction`] if it is not one.
pub(crate) fn finish(g: Graph, p: BabiParams, provenance: impl Into<String>) -> Result<Construction> {
    let certificate = verify_babi(&g, &p).with_provenance(provenance);
    if !certificate.babi {
        return Err(Error::Construction(format!(
            "result is not a {p}-babi-graph: order {}, degrees {:?}, girth {}",
            certificate.order, certificate.degrees, certificate.girth
        )));
    }
    Ok(Construction { graph: g, certificate })
}

pub(crate) fn delete_and_finish(
    g: &Graph,
    doomed: &[usize],
    p: BabiParams,
    provenance: impl Into<String>,
) -> Result<Construction> {
    let (h, _) = g.remove_vertices(doomed);
    finish(h, p, format!("{}; survivors renumbered in increasing order", provenance.into()))
}

/// Arguments a recipe may draw on; unused fields are ignored.
#[derive(Clone, Debug, Default)]
pub struct RecipeArgs {
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub q: Option<u32>,
    pub kind: Option<BiaffineKind>,
    /// named graph, `matching` or `cycle`, built on the amalgamation class size
    pub gamma: Option<String>,
    pub asset_dir: Option<PathBuf>,
}

impl RecipeArgs {
    fn need<T: Copy>(v: Option<T>, what: &str, recipe: &str) -> Result<T> {
        v.ok_or_else(|| Error::InvalidParams(format!("recipe `{recipe}` needs --{what}")))
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ConstructionRecipe {
    pub name: &'static str,
    pub params: &'static str,
    pub domain: &'static str,
    pub order: &'static str,
    #[serde(skip)]
    pub build: fn(&RecipeArgs) -> Result<Construction>,
}

fn amalgam_gamma(args: &RecipeArgs, q: u32, kind: BiaffineKind) -> Result<Graph> {
    let size = kind.class_size(q as usize);
    match args.gamma.as_deref().unwrap_or("matching") {
        "matching" => {
            if size % 2 == 1 {
                return Err(Error::Precondition(format!("no perfect matching on {size} vertices")));
            }
            Ok(crate::graph::perfect_matching_graph(size))
        }
        "cycle" => Ok(crate::graph::cycle(size)),
        name => {
            let g = crate::named::builtin(name)?;
            if g.order() != size {
                return Err(Error::Precondition(format!(
                    "{name} has {} vertices, the {kind} classes of q={q} have {size}",
                    g.order()
                )));
            }
            Ok(g)
        }
    }
}

pub const RECIPES: &[ConstructionRecipe] = &[
    ConstructionRecipe {
        name: "g3",
        params: "(r,s;3)",
        domain: "2 <= r < s",
        order: "exact girth-3 value",
        build: |a| babi_g3(RecipeArgs::need(a.r, "r", "g3")?, RecipeArgs::need(a.s, "s", "g3")?),
    },
    ConstructionRecipe {
        name: "g4",
        params: "(r,s;4)",
        domain: "2 <= r < s",
        order: "exact girth-4 value",
        build: |a| babi_g4(RecipeArgs::need(a.r, "r", "g4")?, RecipeArgs::need(a.s, "s", "g4")?),
    },
    ConstructionRecipe { name: "babi-235", params: "(2,3;5)", domain: "-", order: "8", build: |_| babi_235() },
    ConstructionRecipe { name: "babi-345", params: "(3,4;5)", domain: "-", order: "16", build: |_| babi_345() },
    ConstructionRecipe {
        name: "babi-455-24",
        params: "(4,5;5)",
        domain: "-",
        order: "24",
        build: |_| babi_455_24(),
    },
    ConstructionRecipe {
        name: "babi-455-28",
        params: "(4,5;5)",
        domain: "-",
        order: "28",
        build: |_| babi_455_28(),
    },
    ConstructionRecipe {
        name: "babi-565",
        params: "(5,6;5)",
        domain: "needs the (6,5)-cage data file",
        order: "36",
        build: |a| babi_565(a.asset_dir.as_deref()),
    },
    ConstructionRecipe { name: "babi-675", params: "(6,7;5)", domain: "-", order: "48", build: |_| babi_675() },
    ConstructionRecipe {
        name: "babi-3555",
        params: "(3,5;5)",
        domain: "-",
        order: "28",
        build: |_| babi_3555_from_rw(),
    },
    ConstructionRecipe {
        name: "amalgam",
        params: "(q,q+k;5)",
        domain: "q prime power, kind type1|type2, k-regular gamma of girth >= 5 on the class size",
        order: "2q^2 (type1) or 2(q^2-1) (type2)",
        build: |a| {
            let q = RecipeArgs::need(a.q, "q", "amalgam")?;
            let kind = a.kind.unwrap_or(BiaffineKind::Type1);
            amalgamate(q, kind, &amalgam_gamma(a, q, kind)?)
        },
    },
    ConstructionRecipe {
        name: "g6-pair",
        params: "(q,q+1;6)",
        domain: "q prime power",
        order: "2(q^2+q)",
        build: |a| babi_g6_pair(RecipeArgs::need(a.q, "q", "g6-pair")?),
    },
    ConstructionRecipe {
        name: "g6-triangle",
        params: "(q,q+1;6)",
        domain: "q prime power, q > 3",
        order: "2(q^2+q-2)",
        build: |a| babi_g6_triangle(RecipeArgs::need(a.q, "q", "g6-triangle")?),
    },
    ConstructionRecipe {
        name: "g6-mod4",
        params: "(q,q+1;6)",
        domain: "q prime power, q = 1 mod 4",
        order: "2q^2+q+1",
        build: |a| babi_g6_mod4(RecipeArgs::need(a.q, "q", "g6-mod4")?),
    },
    ConstructionRecipe {
        name: "g6-oval",
        params: "(q-2,q;6)",
        domain: "odd prime power q > 3",
        order: "2(q^2-q)",
        build: |a| babi_g6_oval(RecipeArgs::need(a.q, "q", "g6-oval")?),
    },
];

pub fn recipe(name: &str) -> Result<&'static ConstructionRecipe> {
    RECIPES
        .iter()
        .find(|r| r.name == name)
        .ok_or_else(|| Error::InvalidParams(format!("unknown construction `{name}`")))
}

/// Construction order against the best lower bound for its parameters.
pub fn gap_to_bound(c: &Construction) -> Result<(u64, bounds::BoundResult)> {
    let p = c.certificate.params;
    let best = bounds::all_bounds(p.r, p.s, p.g)?
        .into_iter()
        .map(|(_, b)| b)
        .filter(|b| b.kind != bounds::BoundKind::Upper)
        .max_by_key(|b| b.value)
        .ok_or_else(|| Error::Precondition(format!("no lower bound for {p}")))?;
    Ok((c.graph.order() as u64, best))
}
