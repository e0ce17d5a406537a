//! Depth-first completion of a partial `{r, s}`-graph with girth pruning.
//!
//! Vertices `0..v/2` have target degree `s`, the rest `r`. The search always
//! saturates the lowest unsaturated vertex `u`, adding its missing
//! neighbours in increasing order among higher unsaturated vertices. An edge
//! `uw` is admissible only if `d(u, w) >= g - 1`. Untouched vertices of one
//! class are interchangeable, so only the lowest unused one may be taken.
//! After each saturation the coloured partial graph is canonically labelled
//! and skipped if an isomorphic one was already expanded.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use crate::graph::canon::{canonical_form, CanonicalForm};
use crate::graph::{girth, BabiParams, Girth, Graph};

const CHECK_INTERVAL: u64 = 1 << 10;
const MEMO_CAP: usize = 1 << 21;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct State {
    pub adj: Vec<u64>,
    pub deg: Vec<u8>,
}

impl State {
    pub fn empty(v: usize) -> Self {
        State { adj: vec![0; v], deg: vec![0; v] }
    }

    pub fn to_graph(&self) -> Graph {
        let n = self.adj.len();
        let mut g = Graph::new(n);
        for u in 0..n {
            for w in u + 1..n {
                if self.adj[u] >> w & 1 == 1 {
                    g.add_edge(u, w);
                }
            }
        }
        g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Stop {
    Found,
    NodeLimit,
    TimeLimit,
    Cancelled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Goal {
    /// stop at the first babi-graph
    FindFirst,
    /// keep every babi-graph (one per expanded isomorphism class of parents)
    Collect,
    /// stop descending once vertex `split` is the lowest unsaturated one
    Frontier { split: usize },
}

pub(crate) struct Kernel<'a> {
    g: usize,
    target: Vec<u8>,
    fat: Vec<bool>,
    adj: Vec<u64>,
    deg: Vec<u8>,
    memo: HashSet<CanonicalForm>,
    goal: Goal,
    pub nodes: u64,
    node_cap: u64,
    deadline: Option<Instant>,
    cancel: Option<(&'a AtomicUsize, usize)>,
    pub found: Vec<Graph>,
    pub frontier: Vec<State>,
}

fn ball(adj: &[u64], u: usize, radius: usize) -> u64 {
    let mut seen = 1u64 << u;
    let mut front = seen;
    for _ in 0..radius {
        let mut next = 0;
        let mut f = front;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[x];
        }
        front = next & !seen;
        if front == 0 {
            break;
        }
        seen |= front;
    }
    seen
}

impl<'a> Kernel<'a> {
    pub fn new(p: &BabiParams, state: State, goal: Goal, node_cap: u64) -> Self {
        let v = state.adj.len();
        let half = v / 2;
        Kernel {
            g: p.g,
            target: (0..v).map(|i| if i < half { p.s as u8 } else { p.r as u8 }).collect(),
            fat: (0..v).map(|i| i < half).collect(),
            adj: state.adj,
            deg: state.deg,
            memo: HashSet::new(),
            goal,
            nodes: 0,
            node_cap,
            deadline: None,
            cancel: None,
            found: Vec::new(),
            frontier: Vec::new(),
        }
    }

    pub fn with_deadline(mut self, deadline: Option<Instant>) -> Self {
        self.deadline = deadline;
        self
    }

    /// Abandon the subtree once a lower-indexed subtree has succeeded.
    pub fn with_cancel(mut self, best: &'a AtomicUsize, index: usize) -> Self {
        self.cancel = Some((best, index));
        self
    }

    pub fn run(&mut self) -> Result<(), Stop> {
        self.descend()
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn tick(&mut self) -> Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(Stop::NodeLimit);
        }
        if self.nodes.is_multiple_of(CHECK_INTERVAL) {
            if self.deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(Stop::TimeLimit);
            }
            if let Some((best, index)) = self.cancel {
                if best.load(Ordering::Relaxed) < index {
                    return Err(Stop::Cancelled);
                }
            }
        }
        Ok(())
    }

    fn saturated(&self, w: usize) -> bool {
        self.deg[w] == self.target[w]
    }

    fn snapshot(&self) -> State {
        State { adj: self.adj.clone(), deg: self.deg.clone() }
    }

    /// Every unsaturated vertex still has enough admissible partners.
    fn feasible(&self) -> bool {
        let n = self.n();
        let open = (0..n).filter(|&w| !self.saturated(w)).fold(0u64, |acc, w| acc | 1 << w);
        let mut rest = open;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let free = open & !ball(&self.adj, w, self.g - 2);
            if (free.count_ones() as u8) < self.target[w] - self.deg[w] {
                return false;
            }
        }
        true
    }

    fn descend(&mut self) -> Result<(), Stop> {
        self.tick()?;
        let next = (0..self.n()).find(|&w| !self.saturated(w));
        if let Goal::Frontier { split } = self.goal {
            if next.is_none_or(|u| u >= split) {
                self.frontier.push(self.snapshot());
                return Ok(());
            }
        }
        let Some(u) = next else {
            let graph = self.snapshot().to_graph();
            if girth(&graph) != Girth::Finite(self.g) {
                return Ok(());
            }
            self.found.push(graph);
            return match self.goal {
                Goal::FindFirst => Err(Stop::Found),
                _ => Ok(()),
            };
        };
        if !self.feasible() {
            return Ok(());
        }
        if self.memo.len() < MEMO_CAP {
            let colors: Vec<u32> =
                (0..self.n()).map(|w| 2 * self.fat[w] as u32 + self.saturated(w) as u32).collect();
            let (form, _) = canonical_form(&self.adj, &colors);
            if !self.memo.insert(form) {
                return Ok(());
            }
        }
        let fresh = [self.next_fresh(u, false), self.next_fresh(u, true)];
        self.fill(u, u + 1, fresh)
    }

    fn next_fresh(&self, after: usize, fat: bool) -> Option<usize> {
        (after + 1..self.n()).find(|&w| self.deg[w] == 0 && self.fat[w] == fat)
    }

    fn fill(&mut self, u: usize, start: usize, fresh: [Option<usize>; 2]) -> Result<(), Stop> {
        if self.saturated(u) {
            return self.descend();
        }
        let need = (self.target[u] - self.deg[u]) as usize;
        let blocked = ball(&self.adj, u, self.g - 2);
        let n = self.n();
        for w in start..n {
            if n - w < need {
                break;
            }
            if self.saturated(w) || blocked >> w & 1 == 1 {
                continue;
            }
            let mut fresh_after = fresh;
            if self.deg[w] == 0 {
                let c = self.fat[w] as usize;
                if fresh[c] != Some(w) {
                    continue;
                }
                fresh_after[c] = self.next_fresh(w, self.fat[w]);
            }
            self.tick()?;
            self.link(u, w, true);
            let res = self.fill(u, w + 1, fresh_after);
            self.link(u, w, false);
            res?;
        }
        Ok(())
    }

    fn link(&mut self, u: usize, w: usize, on: bool) {
        self.adj[u] ^= 1 << w;
        self.adj[w] ^= 1 << u;
        if on {
            self.deg[u] += 1;
            self.deg[w] += 1;
        } else {
            self.deg[u] -= 1;
            self.deg[w] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_of_a_path() {
        // path 0-1-2-3
        let adj = vec![0b0010, 0b0101, 0b1010, 0b0100];
        assert_eq!(ball(&adj, 0, 1), 0b0011);
        assert_eq!(ball(&adj, 0, 2), 0b0111);
        assert_eq!(ball(&adj, 1, 5), 0b1111);
    }

    #[test]
    fn finds_the_eight_vertex_235_graph() {
        let p = BabiParams::new(2, 3, 5).unwrap();
        let mut k = Kernel::new(&p, State::empty(8), Goal::FindFirst, u64::MAX);
        assert_eq!(k.run(), Err(Stop::Found));
        assert_eq!(k.found[0].order(), 8);
        let mut k = Kernel::new(&p, State::empty(4), Goal::FindFirst, u64::MAX);
        assert_eq!(k.run(), Ok(()));
    }

    #[test]
    fn node_cap_stops_the_search() {
        let p = BabiParams::new(2, 4, 5).unwrap();
        let mut k = Kernel::new(&p, State::empty(14), Goal::Collect, 10);
        assert_eq!(k.run(), Err(Stop::NodeLimit));
    }
}
