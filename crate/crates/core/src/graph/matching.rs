//! Maximum matchings in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use super::Graph;

/// `mate[v]` is the partner of `v`, if matched.
pub type Mates = Vec<Option<usize>>;

/// Grows `initial` (or the empty matching) to a maximum matching by
/// repeated augmenting-path search from each exposed vertex, in index order.
pub fn maximum_matching(g: &Graph, initial: Option<&Mates>) -> Mates {
    let n = g.order();
    let mut mate: Mates = match initial {
        Some(m) => {
            assert_eq!(m.len(), n);
            m.clone()
        }
        None => vec![None; n],
    };
    for root in 0..n {
        if mate[root].is_none() {
            if let Some(path_end) = BlossomSearch::new(g, &mate).run(root) {
                augment(&mut mate, path_end);
            }
        }
    }
    mate
}

/// Augments a matching until it has `target` edges or no augmenting path
/// remains. Returns `None` if `target` is out of reach.
pub fn extend_to_size(g: &Graph, initial: &Mates, target: usize) -> Option<Mates> {
    let n = g.order();
    let mut mate = initial.clone();
    let size = |m: &Mates| m.iter().filter(|x| x.is_some()).count() / 2;
    for root in 0..n {
        if size(&mate) >= target {
            break;
        }
        if mate[root].is_none() {
            if let Some(path_end) = BlossomSearch::new(g, &mate).run(root) {
                augment(&mut mate, path_end);
            }
        }
    }
    (size(&mate) >= target).then_some(mate)
}

pub fn perfect_matching(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let mate = maximum_matching(g, None);
    mate.iter().all(Option::is_some).then(|| mates_to_edges(&mate))
}

pub fn mates_to_edges(mate: &Mates) -> Vec<(usize, usize)> {
    mate.iter()
        .enumerate()
        .filter_map(|(u, m)| m.filter(|&v| v > u).map(|v| (u, v)))
        .collect()
}

/// Matching chosen greedily over `edges` in the given order.
pub fn greedy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Mates {
    let mut mate = vec![None; n];
    for (u, v) in edges {
        if mate[u].is_none() && mate[v].is_none() {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
    }
    mate
}

/// Alternating-tree state of one search; `parent` links give the path.
struct BlossomSearch<'a> {
    g: &'a Graph,
    mate: &'a Mates,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    queue: VecDeque<usize>,
}

struct Augmenting {
    parent: Vec<Option<usize>>,
    end: usize,
}

impl<'a> BlossomSearch<'a> {
    fn new(g: &'a Graph, mate: &'a Mates) -> Self {
        let n = g.order();
        BlossomSearch {
            g,
            mate,
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("matched outer vertex has a tree parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b].expect("walk stays on the tree")].expect("tree parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            let m = self.mate[v].expect("inner path vertex is matched");
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("tree parent");
        }
    }

    fn run(mut self, root: usize) -> Option<Augmenting> {
        let n = self.g.order();
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer = to == root
                    || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_outer {
                    let cur = self.lca(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, cur, to, &mut in_blossom);
                    self.mark_path(to, cur, v, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(Augmenting { parent: self.parent, end: to }),
                        Some(m) => {
                            self.used[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }
}

fn augment(mate: &mut Mates, path: Augmenting) {
    let mut v = Some(path.end);
    while let Some(x) = v {
        let pv = path.parent[x].expect("augmenting path reaches the root");
        let next = mate[pv];
        mate[x] = Some(pv);
        mate[pv] = Some(x);
        v = next;
    }
}
