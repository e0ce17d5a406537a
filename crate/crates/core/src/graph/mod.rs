//! Simple undirected graphs on dense vertex indices.

mod babi;
pub mod canon;
mod compose;
mod girth;
pub mod graph6;
pub mod matching;

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

pub use babi::{edge_census, max_fat_edge_sum, verify_babi, BabiParams, Certificate, EdgeCensus};
pub use compose::{connect_switch, glue_leaves, replicate, strip_leaves};
pub(crate) use compose::edge_off_cycle;
pub use girth::{girth, shortest_cycle, Girth};

/// Undirected simple graph. Vertices are `0..n`; every adjacency list is
/// kept sorted and symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParams(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency lists, checking symmetry and looplessness.
    pub fn from_adjacency(adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        let mut g = Graph::new(n);
        for (u, nbrs) in adj.iter().enumerate() {
            for &v in nbrs {
                g.check_vertex(v)?;
                if u == v {
                    return Err(Error::InvalidParams(format!("loop at vertex {u}")));
                }
                if !adj[v].contains(&u) {
                    return Err(Error::InvalidParams(format!(
                        "adjacency is not symmetric: {u} lists {v} but not conversely"
                    )));
                }
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Inserts `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loops are not allowed");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                true
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.order() || v >= self.order() {
            return Err(Error::MissingEdge(u, v));
        }
        match (self.adj[u].binary_search(&v), self.adj[v].binary_search(&u)) {
            (Ok(i), Ok(j)) => {
                self.adj[u].remove(i);
                self.adj[v].remove(j);
                Ok(())
            }
            _ => Err(Error::MissingEdge(u, v)),
        }
    }

    /// Adds a fresh isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Degree -> number of vertices with that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for nbrs in &self.adj {
            *hist.entry(nbrs.len()).or_insert(0) += 1;
        }
        hist
    }

    /// `Some(k)` when every vertex has degree `k` (and the graph is non-empty).
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == first).then_some(first)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Deletes the given vertices and re-indexes the survivors densely,
    /// preserving their relative order. Returns the new graph together with
    /// the old-to-new index map.
    pub fn remove_vertices(&self, doomed: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut keep = vec![true; self.order()];
        for &v in doomed {
            keep[v] = false;
        }
        let mut map = vec![None; self.order()];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if keep[v] {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut g = Graph::new(next);
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                g.add_edge(a, b);
            }
        }
        (g, map)
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + offset).collect::<Vec<_>>()),
        );
        Graph { adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut g = Graph::new(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Largest finite distance; `None` if the graph is disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.order() == 0 {
            return None;
        }
        let mut best = 0;
        for v in 0..self.order() {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Two-colouring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        for start in 0..self.order() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Graph on the same vertices where `u ~ v` iff their distance is exactly `d`.
    pub fn distance_graph(&self, d: usize) -> Graph {
        let mut g = Graph::new(self.order());
        for u in 0..self.order() {
            for (v, dv) in self.distances_from(u).into_iter().enumerate() {
                if v > u && dv == Some(d) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }
}

/// The cycle `C_n` on vertices `0..n` in cyclic order.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `n/2` disjoint edges `{0,1}, {2,3}, ...`.
pub fn perfect_matching_graph(n: usize) -> Graph {
    assert!(n.is_multiple_of(2), "a perfect matching needs an even number of vertices");
    Graph::from_edges(n, (0..n / 2).map(|i| (2 * i, 2 * i + 1))).unwrap()
}
