use super::{girth, shortest_cycle, Graph};
use crate::error::{Error, Result};

/// Connection of two graphs through switching: take the disjoint union
/// (vertices of `g2` shifted by `|g1|`), delete `x1y1` and `x2y2`, add
/// `x1x2` and `y1y2`. Every degree is preserved and a cycle through the new
/// edges has length at least `2 * min(girth)`.
///
/// `g1` and `g2` must be distinct values in memory; pass a clone to switch a
/// graph with a copy of itself.
pub fn connect_switch(
    g1: &Graph,
    (x1, y1): (usize, usize),
    g2: &Graph,
    (x2, y2): (usize, usize),
) -> Result<Graph> {
    if std::ptr::eq(g1, g2) {
        return Err(Error::Precondition("cannot switch a graph with itself".into()));
    }
    if !g1.has_edge(x1, y1) {
        return Err(Error::MissingEdge(x1, y1));
    }
    if !g2.has_edge(x2, y2) {
        return Err(Error::MissingEdge(x2, y2));
    }
    let offset = g1.order();
    let mut g = g1.disjoint_union(g2);
    g.remove_edge(x1, y1)?;
    g.remove_edge(x2 + offset, y2 + offset)?;
    g.add_edge(x1, x2 + offset);
    g.add_edge(y1, y2 + offset);
    Ok(g)
}

/// Lowest edge (lexicographically) not lying on `cycle`.
pub(crate) fn edge_off_cycle(g: &Graph, cycle: &[usize]) -> Option<(usize, usize)> {
    let on_cycle = |u: usize, v: usize| {
        (0..cycle.len()).any(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    };
    g.edges().find(|&(u, v)| !on_cycle(u, v))
}

/// `k`-regular graph of order `n |G|` with the same girth as `G`, for a
/// `k`-regular `G` with `k > 2`.
///
/// Copy `i + 1` is switched onto the current graph along the lowest edge
/// of `G` off its first girth cycle and the lowest edge of the current
/// graph, so every new copy still carries an intact girth cycle.
pub fn replicate(g: &Graph, n: usize) -> Result<Graph> {
    let k = g
        .regular_degree()
        .ok_or_else(|| Error::Precondition("replicate needs a regular graph".into()))?;
    if k <= 2 {
        return Err(Error::Precondition(format!("replicate needs degree > 2, got {k}")));
    }
    if n == 0 {
        return Err(Error::InvalidParams("replication factor must be positive".into()));
    }
    let cycle = shortest_cycle(g)
        .ok_or_else(|| Error::Precondition("replicate needs a graph with a cycle".into()))?;
    let e = edge_off_cycle(g, &cycle).expect("a k-regular graph with k > 2 has an edge off any cycle");

    let mut acc = g.clone();
    for _ in 1..n {
        let f = acc.edges().next().expect("non-empty");
        acc = connect_switch(&acc, f, g, e)?;
    }
    debug_assert_eq!(girth(&acc), girth(g));
    Ok(acc)
}

/// Attaches `s - deg(u)` pendant vertices to every original vertex `u`.
pub fn glue_leaves(g: &Graph, s: usize) -> Result<Graph> {
    if let Some(u) = (0..g.order()).find(|&u| g.degree(u) > s) {
        return Err(Error::Precondition(format!(
            "vertex {u} has degree {} > {s}",
            g.degree(u)
        )));
    }
    let mut out = g.clone();
    for u in 0..g.order() {
        for _ in g.degree(u)..s {
            let leaf = out.add_vertex();
            out.add_edge(u, leaf);
        }
    }
    Ok(out)
}

/// Deletes every vertex of degree one (a single pass) and re-indexes.
pub fn strip_leaves(g: &Graph) -> Graph {
    let leaves: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == 1).collect();
    g.remove_vertices(&leaves).0
}
