//! Amalgamation into biaffine planes and the general switching composition.

use super::{finish, Construction};
use crate::error::{Error, Result};
use crate::geometry::{biaffine, levi, BiaffineKind};
use crate::graph::{connect_switch, edge_off_cycle, girth, replicate, shortest_cycle, BabiParams, Girth, Graph};

/// Copies `gamma` onto every amalgamation class of the biaffine plane of
/// order `q` (gamma's vertex `i` becomes the class's `i`-th point).
///
/// `gamma` must be `k`-regular (`k >= 1`) with girth at least 5 (forests
/// included) and have `q` (type 1) or `q - 1` (type 2) vertices. The result
/// is a `(q, q+k; 5)`-babi-graph with no thin edges.
pub fn amalgamate(q: u32, kind: BiaffineKind, gamma: &Graph) -> Result<Construction> {
    let size = kind.class_size(q as usize);
    if gamma.order() != size {
        return Err(Error::Precondition(format!(
            "{kind} amalgamation over q={q} needs a graph on {size} vertices, got {}",
            gamma.order()
        )));
    }
    let k = gamma
        .regular_degree()
        .filter(|&k| k >= 1)
        .ok_or_else(|| Error::Precondition("amalgamated graph must be regular of degree >= 1".into()))?;
    if !girth(gamma).is_at_least(5) {
        return Err(Error::Precondition(format!("amalgamated graph has girth {} < 5", girth(gamma))));
    }
    let inc = biaffine(q, kind)?;
    let mut g = levi(&inc);
    for class in &inc.classes {
        for (a, b) in gamma.edges() {
            g.add_edge(class[a], class[b]);
        }
    }
    finish(
        g,
        BabiParams::new(q as usize, q as usize + k, 5)?,
        format!(
            "{kind} biaffine plane of PG(2,{q}) (points then lines), {k}-regular graph on {size} vertices copied onto \
             each of its {} classes",
            inc.classes.len()
        ),
    )
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `n` copies of `g`: by [`replicate`] when the degree exceeds 2, by
/// disjoint union otherwise.
fn scale(g: &Graph, n: usize) -> Result<Graph> {
    if g.regular_degree().is_some_and(|k| k > 2) {
        return replicate(g, n);
    }
    Ok((1..n).fold(g.clone(), |acc, _| acc.disjoint_union(g)))
}

/// `(r, s; g)`-babi-graph from an `(r, g)`-graph and an `(s, g)`-graph.
///
/// Both are scaled to the common order `lcm(v_r, v_s)` and joined by one
/// switching, using an edge of the `s`-side off its first girth cycle, so
/// the order is `2 lcm(v_r, v_s)`.
pub fn compose_babi(g_r: &Graph, g_s: &Graph, g: usize) -> Result<Construction> {
    let r = g_r.regular_degree().ok_or_else(|| Error::Precondition("first graph is not regular".into()))?;
    let s = g_s.regular_degree().ok_or_else(|| Error::Precondition("second graph is not regular".into()))?;
    if r >= s || s <= 2 || r < 2 {
        return Err(Error::Precondition(format!("need 2 <= r < s and s > 2, got r={r}, s={s}")));
    }
    for (name, x) in [("first", g_r), ("second", g_s)] {
        if girth(x) != Girth::Finite(g) {
            return Err(Error::Precondition(format!("{name} graph has girth {}, not {g}", girth(x))));
        }
    }
    let (vr, vs) = (g_r.order(), g_s.order());
    let l = vr / gcd(vr, vs) * vs;
    let big_r = scale(g_r, l / vr)?;
    let big_s = scale(g_s, l / vs)?;
    let cycle = shortest_cycle(&big_s).expect("girth is finite");
    let e_s = edge_off_cycle(&big_s, &cycle).expect("degree > 2 leaves an edge off the cycle");
    let e_r = big_r.edges().next().expect("non-empty");
    let joined = connect_switch(&big_r, e_r, &big_s, e_s)?;
    finish(
        joined,
        BabiParams::new(r, s, g)?,
        format!(
            "switching composition: ({r},{g})-graph x{} and ({s},{g})-graph x{} to common order lcm({vr},{vs}) = {l} \
             (the lcm replaces the product {vr}*{vs}), switched on {e_r:?} and {e_s:?}",
            l / vr,
            l / vs
        ),
    )
}
