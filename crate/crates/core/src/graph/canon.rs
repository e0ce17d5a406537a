//! Canonical labelling of small vertex-coloured graphs by individualisation
//! and refinement.
//!
//! The partition starts as the colour classes in increasing colour order and
//! is refined to an equitable partition; non-discrete partitions branch on
//! every vertex of the first non-singleton cell. Each leaf gives a
//! relabelling and the lexicographically smallest relabelled adjacency is the
//! canonical form. Branches are pruned by twin classes and by the orbits of
//! automorphisms discovered at equal leaves.
//!
//! Graphs are limited to 64 vertices (one `u64` adjacency row each).

use super::Graph;

pub const MAX_ORDER: usize = 64;

/// Colour sequence and relabelled adjacency rows; equal iff the coloured
/// graphs are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub colors: Vec<u32>,
    pub rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Graph {
        let n = self.rows.len();
        let mut g = Graph::new(n);
        for (u, row) in self.rows.iter().enumerate() {
            for v in u + 1..n {
                if row >> v & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

pub fn adjacency_rows(g: &Graph) -> Vec<u64> {
    assert!(g.order() <= MAX_ORDER, "canonical labelling supports at most 64 vertices");
    (0..g.order())
        .map(|u| g.neighbors(u).iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect()
}

pub fn canonical_graph(g: &Graph) -> CanonicalForm {
    canonical_form(&adjacency_rows(g), &vec![0; g.order()]).0
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_graph(a) == canonical_graph(b)
}

/// Canonical form of the coloured graph together with the labelling that
/// produces it (`labelling[v]` is the new index of `v`).
pub fn canonical_form(rows: &[u64], colors: &[u32]) -> (CanonicalForm, Vec<usize>) {
    let n = rows.len();
    assert!(n <= MAX_ORDER);
    assert_eq!(colors.len(), n);

    let mut palette: Vec<u32> = colors.to_vec();
    palette.sort_unstable();
    palette.dedup();
    let cells: Vec<Vec<usize>> = palette
        .iter()
        .map(|&c| (0..n).filter(|&v| colors[v] == c).collect())
        .collect();
    let mut sorted_colors = colors.to_vec();
    sorted_colors.sort_unstable();

    let mut search = Search {
        rows,
        twins: twin_classes(rows, colors),
        best: None,
        automorphisms: Vec::new(),
    };
    let mut cells = cells;
    refine(rows, &mut cells);
    search.descend(cells, &mut Vec::new());

    let (best_rows, labelling) = search.best.expect("at least one leaf");
    (CanonicalForm { colors: sorted_colors, rows: best_rows }, labelling)
}

/// `twins[v]` has bit `u` set when `u` and `v` have the same colour and the
/// same neighbourhood apart from each other; swapping them is then an
/// automorphism fixing everything else.
fn twin_classes(rows: &[u64], colors: &[u32]) -> Vec<u64> {
    let n = rows.len();
    (0..n)
        .map(|v| {
            (0..n).filter(|&u| u != v).fold(0u64, |acc, u| {
                let mask = !((1u64 << u) | (1u64 << v));
                if colors[u] == colors[v] && rows[u] & mask == rows[v] & mask {
                    acc | 1 << u
                } else {
                    acc
                }
            })
        })
        .collect()
}

/// Splits cells until every cell has a constant number of neighbours in
/// every other cell. Sub-cells replace the parent in increasing order of
/// that count, so the result depends only on the isomorphism type.
fn refine(rows: &[u64], cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for w in 0..cells.len() {
            let splitter = cells[w].iter().fold(0u64, |acc, &v| acc | 1 << v);
            for x in 0..cells.len() {
                if cells[x].len() < 2 {
                    continue;
                }
                let count = |v: usize| (rows[v] & splitter).count_ones();
                let first = count(cells[x][0]);
                if cells[x].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut members = std::mem::take(&mut cells[x]);
                members.sort_by_key(|&v| (count(v), v));
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for v in members {
                    let c = count(v);
                    if last != Some(c) {
                        parts.push(Vec::new());
                        last = Some(c);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(x..=x, parts);
                continue 'outer;
            }
        }
        return;
    }
}

struct Search<'a> {
    rows: &'a [u64],
    twins: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>, fixed: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for (i, &v) in cells[target].iter().enumerate() {
            if cells[target][..i].iter().any(|&u| self.twins[v] >> u & 1 == 1) {
                continue;
            }
            if tried.iter().any(|&t| self.same_orbit(t, v, fixed)) {
                continue;
            }
            tried.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&x| x != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            refine(self.rows, &mut child);
            fixed.push(v);
            self.descend(child, fixed);
            fixed.pop();
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.rows.len();
        let mut labelling = vec![0; n];
        for (pos, cell) in cells.iter().enumerate() {
            labelling[cell[0]] = pos;
        }
        let mut relabelled = vec![0u64; n];
        for (u, &row) in self.rows.iter().enumerate() {
            let mut bits = row;
            let mut out = 0u64;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out |= 1 << labelling[v];
            }
            relabelled[labelling[u]] = out;
        }
        match &self.best {
            Some((best_rows, best_lab)) if *best_rows == relabelled => {
                // automorphism: v -> best^-1(labelling(v))
                let mut inverse = vec![0; n];
                for (v, &p) in best_lab.iter().enumerate() {
                    inverse[p] = v;
                }
                let auto: Vec<usize> = labelling.iter().map(|&p| inverse[p]).collect();
                self.automorphisms.push(auto);
            }
            Some((best_rows, _)) if *best_rows <= relabelled => {}
            _ => self.best = Some((relabelled, labelling)),
        }
    }

    /// Whether `a` and `b` share an orbit under the recorded automorphisms
    /// that fix every individualised vertex.
    fn same_orbit(&self, a: usize, b: usize, fixed: &[usize]) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|g| fixed.iter().all(|&f| g[f] == f))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.rows.len()];
        let mut stack = vec![a];
        seen[a] = true;
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            for g in &gens {
                let y = g[x];
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        false
    }
}
