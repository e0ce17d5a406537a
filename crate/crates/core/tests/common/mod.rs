//! Deliberately naive reference implementations.
#![allow(dead_code)]

use std::collections::BTreeSet;

use babi::graph::canon::{canonical_graph, CanonicalForm};
use babi::{BabiParams, Graph};

/// Girth by deleting each edge in turn and measuring the distance between
/// its ends; `None` for forests.
pub fn naive_girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (u, v) in g.edges().collect::<Vec<_>>() {
        let mut h = g.clone();
        h.remove_edge(u, v).unwrap();
        // plain BFS
        let n = h.order();
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in h.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            let len = dist[v] + 1;
            best = Some(best.map_or(len, |b| b.min(len)));
        }
    }
    best
}

/// Every labelled graph on `v` vertices in which the first `v/2` vertices
/// have degree `s` and the rest degree `r` and no cycle is shorter than
/// `g`, by including or excluding each vertex pair in lexicographic order.
/// Prunes only on degree caps and on BFS distance before adding an edge.
/// `visit` returns `false` to stop the enumeration.
pub fn naive_labelled(p: &BabiParams, v: usize, mut visit: impl FnMut(&Graph) -> bool) {
    let short = p.g - 1;
    let target: Vec<usize> = (0..v).map(|i| if i < v / 2 { p.s } else { p.r }).collect();
    let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
    let mut g = Graph::new(v);
    fn rec(
        short: usize,
        i: usize,
        pairs: &[(usize, usize)],
        target: &[usize],
        g: &mut Graph,
        visit: &mut dyn FnMut(&Graph) -> bool,
    ) -> bool {
        if i == pairs.len() {
            if (0..g.order()).all(|x| g.degree(x) == target[x]) {
                return visit(g);
            }
            return true;
        }
        let (a, b) = pairs[i];
        // once every pair at `a` is decided, `a` must be full
        let last_for_a = b == g.order() - 1;
        let far = short <= 2 || g.distance(a, b).is_none_or(|d| d >= short);
        if g.degree(a) < target[a] && g.degree(b) < target[b] && far {
            g.add_edge(a, b);
            let go = (last_for_a && g.degree(a) != target[a]) || rec(short, i + 1, pairs, target, g, visit);
            g.remove_edge(a, b).unwrap();
            if !go {
                return false;
            }
        }
        if !last_for_a || g.degree(a) == target[a] {
            return rec(short, i + 1, pairs, target, g, visit);
        }
        true
    }
    rec(short, 0, &pairs, &target, &mut g, &mut visit);
}

/// Canonical forms of all `(r, s; g)`-babi-graphs on `v` vertices.
pub fn naive_classes(p: &BabiParams, v: usize) -> BTreeSet<CanonicalForm> {
    let mut out = BTreeSet::new();
    if v % 2 == 1 || p.s >= v {
        return out;
    }
    naive_labelled(p, v, |g| {
        if naive_girth(g) == Some(p.g) {
            out.insert(canonical_graph(g));
        }
        true
    });
    out
}

pub fn naive_exists(p: &BabiParams, v: usize) -> bool {
    if v % 2 == 1 || p.s >= v {
        return false;
    }
    let mut found = false;
    naive_labelled(p, v, |g| {
        found = naive_girth(g) == Some(p.g);
        !found
    });
    found
}

/// Smallest admissible order in `[from, to]` with a babi-graph, by the naive filter.
pub fn naive_min(p: &BabiParams, from: usize, to: usize) -> Option<usize> {
    (from..=to)
        .filter(|&v| v % 2 == 0 && ((p.s - p.r).is_multiple_of(2) || v % 4 == 0))
        .find(|&v| naive_exists(p, v))
}
