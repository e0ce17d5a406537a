//! Exhaustive, isomorph-pruned search for small babi-graphs.
//!
//! For each admissible order the search space is split at the point where
//! the first few vertices are saturated; the resulting subtrees (the
//! frontier) are searched in parallel and merged in frontier order, so
//! outcomes and node counts do not depend on the number of workers. Node
//! limits are applied to the cumulative count in frontier order. A time
//! limit is the one source of nondeterminism: which subtree it interrupts
//! depends on the machine.
//!
//! # Checkpoints
//!
//! With [`SearchSpec::checkpoint`] set, progress is written after every
//! finished subtree as JSON:
//!
//! ```json
//! {
//!   "schema": 1,
//!   "params": { "r": 2, "s": 4, "g": 5 },
//!   "v_max": 14,
//!   "start": 14,
//!   "refuted": [ { "order": 12, "nodes": 3581 } ],
//!   "current": { "order": 14, "frontier": 9, "frontier_nodes": 40, "done": { "0": 812, "1": 77 } }
//! }
//! ```
//!
//! `refuted` lists orders searched completely without a witness; `current`
//! records the frontier size of the order in progress and the node count of
//! each subtree finished without a witness. Resuming regenerates the
//! frontier (it is deterministic), checks its size, and skips the listed
//! subtrees.

mod checkpoint;
mod kernel;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

pub use checkpoint::{Checkpoint, OrderProgress, RefutedOrder};
use kernel::{Goal, Kernel, State, Stop};

use crate::bounds::{babi_lower, round_to_admissible};
use crate::error::{Error, Result};
use crate::graph::canon::canonical_graph;
use crate::graph::{graph6, verify_babi, BabiParams, Graph};

/// Largest order the kernel handles (one machine word per adjacency row).
pub const MAX_SEARCH_ORDER: usize = 64;

/// Orders up to which exhaustive runs are expected to finish.
pub const EXHAUSTIVE_ORDER_HINT: usize = 20;

/// Vertices saturated before the search splits into parallel subtrees.
const SPLIT_DEPTH: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// start at the closed-form lower bound (rounded to an admissible order)
    FindFirst,
    /// start at the smallest admissible order `>= s + 1`, so every smaller
    /// order is refuted by search alone
    ProveMin,
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub params: BabiParams,
    pub v_max: usize,
    pub mode: SearchMode,
    /// overrides the mode's starting order (rounded up to admissible)
    pub v_min: Option<usize>,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// worker count; `None` uses the available parallelism
    pub threads: Option<usize>,
    pub checkpoint: Option<PathBuf>,
}

impl SearchSpec {
    pub fn new(params: BabiParams, v_max: usize) -> Self {
        SearchSpec {
            params,
            v_max,
            mode: SearchMode::FindFirst,
            v_min: None,
            node_limit: None,
            time_limit: None,
            threads: None,
            checkpoint: None,
        }
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn v_min(mut self, v: usize) -> Self {
        self.v_min = Some(v);
        self
    }

    pub fn node_limit(mut self, limit: u64) -> Self {
        self.node_limit = Some(limit);
        self
    }

    pub fn time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn threads(mut self, n: usize) -> Self {
        self.threads = Some(n);
        self
    }

    pub fn checkpoint(mut self, path: impl Into<PathBuf>) -> Self {
        self.checkpoint = Some(path.into());
        self
    }

    /// First order the search visits.
    pub fn start(&self) -> Result<usize> {
        let p = &self.params;
        let base = match (self.v_min, self.mode) {
            (Some(v), _) => v as u64,
            (None, SearchMode::FindFirst) => babi_lower(p.r, p.s, p.g)?.value,
            (None, SearchMode::ProveMin) => p.s as u64 + 1,
        };
        Ok(round_to_admissible(base.max(2), p.r, p.s) as usize)
    }

    fn validate(&self) -> Result<()> {
        let p = &self.params;
        if p.r < 2 {
            return Err(Error::InvalidParams(format!("search needs r >= 2, got {}", p.r)));
        }
        if self.v_max > MAX_SEARCH_ORDER {
            return Err(Error::InvalidParams(format!("v_max {} exceeds {MAX_SEARCH_ORDER}", self.v_max)));
        }
        if !admissible(self.v_max, p) {
            let unit = if (p.s - p.r) % 2 == 1 { 4 } else { 2 };
            return Err(Error::InvalidParams(format!("v_max {} must be a multiple of {unit} for {p}", self.v_max)));
        }
        Ok(())
    }
}

/// Orders a `{r, s}` degree-balanced graph can have: even, and a multiple
/// of 4 when `s - r` is odd.
pub fn admissible(v: usize, p: &BabiParams) -> bool {
    v.is_multiple_of(2) && ((p.s - p.r).is_multiple_of(2) || v.is_multiple_of(4))
}

/// Admissible orders in `[from, to]`.
pub fn admissible_orders(p: &BabiParams, from: usize, to: usize) -> Vec<usize> {
    (from..=to).filter(|&v| v > 0 && admissible(v, p)).collect()
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub params: BabiParams,
    pub v_max: usize,
    pub start: usize,
    pub min_order: Option<usize>,
    pub witness: Option<Graph>,
    /// orders searched completely without a witness
    pub refuted: Vec<usize>,
    pub nodes: u64,
    /// every admissible order from `start` below the result (or up to
    /// `v_max`) was searched to completion
    pub exhaustive: bool,
    /// set when a node or time limit ended the search
    pub budget_exhausted: Option<String>,
}

#[derive(Serialize)]
struct OutcomeJson<'a> {
    schema: u32,
    params: BabiParams,
    v_max: usize,
    start: usize,
    min_order: Option<usize>,
    witness: Option<String>,
    refuted: &'a [usize],
    nodes: u64,
    exhaustive: bool,
    budget_exhausted: Option<&'a str>,
}

impl SearchOutcome {
    pub fn to_json(&self) -> String {
        let out = OutcomeJson {
            schema: 1,
            params: self.params,
            v_max: self.v_max,
            start: self.start,
            min_order: self.min_order,
            witness: self.witness.as_ref().map(graph6::encode_string),
            refuted: &self.refuted,
            nodes: self.nodes,
            exhaustive: self.exhaustive,
            budget_exhausted: self.budget_exhausted.as_deref(),
        };
        serde_json::to_string_pretty(&out).expect("outcome serialises")
    }
}

enum OrderResult {
    Found(Graph),
    Refuted,
    Stopped(String),
}

struct Budget {
    nodes_left: u64,
    deadline: Option<Instant>,
}

fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n.max(1));
    }
    b.build().map_err(|e| Error::InvalidParams(format!("worker pool: {e}")))
}

fn stop_reason(stop: Stop) -> String {
    match stop {
        Stop::NodeLimit => "node limit".into(),
        Stop::TimeLimit => "time limit".into(),
        Stop::Found | Stop::Cancelled => unreachable!("not a budget stop"),
    }
}

/// Frontier of subtrees for order `v`, plus the nodes spent producing it.
fn frontier(p: &BabiParams, v: usize, budget: &Budget) -> std::result::Result<(Vec<State>, u64), (Stop, u64)> {
    let mut k = Kernel::new(p, State::empty(v), Goal::Frontier { split: SPLIT_DEPTH }, budget.nodes_left)
        .with_deadline(budget.deadline);
    match k.run() {
        Ok(()) => Ok((std::mem::take(&mut k.frontier), k.nodes)),
        Err(stop) => Err((stop, k.nodes)),
    }
}

type Hook<'a> = &'a (dyn Fn(usize, u64) -> Result<()> + Sync);

/// Resume state and progress callbacks for one order.
struct Progress<'a> {
    /// node counts of subtrees already known to be empty
    done: &'a std::collections::BTreeMap<usize, u64>,
    expected_frontier: Option<usize>,
    on_frontier: Hook<'a>,
    on_done: Hook<'a>,
}

type SubtreeResult = (std::result::Result<(), Stop>, u64, Option<Graph>);

/// Searches one order.
fn search_order(
    p: &BabiParams,
    v: usize,
    budget: &mut Budget,
    nodes: &mut u64,
    progress: Progress<'_>,
) -> Result<OrderResult> {
    let Progress { done, expected_frontier, on_frontier, on_done } = progress;
    let (subtrees, spent) = match frontier(p, v, budget) {
        Ok(x) => x,
        Err((stop, spent)) => {
            *nodes += spent;
            return Ok(OrderResult::Stopped(stop_reason(stop)));
        }
    };
    if expected_frontier.is_some_and(|f| f != subtrees.len()) {
        return Err(Error::Checkpoint(format!(
            "checkpoint frontier has {} subtrees, regenerated frontier has {}",
            expected_frontier.unwrap(),
            subtrees.len()
        )));
    }
    *nodes += spent;
    budget.nodes_left = budget.nodes_left.saturating_sub(spent);
    on_frontier(subtrees.len(), spent)?;

    let best = AtomicUsize::new(usize::MAX);
    let cap = budget.nodes_left;
    let deadline = budget.deadline;
    let results: Vec<Result<SubtreeResult>> = subtrees
        .into_par_iter()
        .enumerate()
        .map(|(i, state)| {
            if let Some(&n) = done.get(&i) {
                return Ok((Ok(()), n, None));
            }
            let mut k = Kernel::new(p, state, Goal::FindFirst, cap).with_deadline(deadline).with_cancel(&best, i);
            let res = k.run();
            match res {
                Err(Stop::Found) => {
                    best.fetch_min(i, Ordering::Relaxed);
                }
                Ok(()) => on_done(i, k.nodes)?,
                Err(_) => {}
            }
            Ok((res, k.nodes, k.found.pop()))
        })
        .collect();

    for r in results {
        let (res, spent, witness) = r?;
        *nodes += spent;
        if spent > budget.nodes_left {
            budget.nodes_left = 0;
            return Ok(OrderResult::Stopped("node limit".into()));
        }
        budget.nodes_left -= spent;
        match res {
            Ok(()) => {}
            Err(Stop::Found) => return Ok(OrderResult::Found(witness.expect("found graph is kept"))),
            Err(Stop::Cancelled) => unreachable!("only subtrees after a success are cancelled"),
            Err(stop) => return Ok(OrderResult::Stopped(stop_reason(stop))),
        }
    }
    Ok(OrderResult::Refuted)
}

/// Smallest admissible order in `[start, v_max]` admitting an
/// `(r, s; g)`-babi-graph, with a witness.
pub fn exhaustive_min(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let p = spec.params;
    let start = spec.start()?;
    let mut ck = match &spec.checkpoint {
        Some(path) if path.is_file() => {
            let ck = Checkpoint::load(path)?;
            ck.check_matches(&p, spec.v_max, start)?;
            ck
        }
        _ => Checkpoint::new(p, spec.v_max, start),
    };
    let mut outcome = SearchOutcome {
        params: p,
        v_max: spec.v_max,
        start,
        min_order: None,
        witness: None,
        refuted: Vec::new(),
        nodes: 0,
        exhaustive: false,
        budget_exhausted: None,
    };
    let mut budget = Budget {
        nodes_left: spec.node_limit.unwrap_or(u64::MAX),
        deadline: spec.time_limit.map(|t| Instant::now() + t),
    };
    let workers = pool(spec.threads)?;

    for v in admissible_orders(&p, start, spec.v_max) {
        if let Some(r) = ck.refuted.iter().find(|r| r.order == v) {
            outcome.nodes += r.nodes;
            budget.nodes_left = budget.nodes_left.saturating_sub(r.nodes);
            outcome.refuted.push(v);
            continue;
        }
        let resume = ck.current.as_ref().filter(|c| c.order == v).cloned();
        let done = resume.as_ref().map(|c| c.done.clone()).unwrap_or_default();
        let expected = resume.as_ref().map(|c| c.frontier);
        let shared = Mutex::new(&mut ck);
        let path = spec.checkpoint.clone();
        let save = |ck: &Checkpoint| -> Result<()> {
            match &path {
                Some(p) => ck.save(p),
                None => Ok(()),
            }
        };
        let on_frontier = |len: usize, spent: u64| -> Result<()> {
            let mut ck = shared.lock().expect("checkpoint lock");
            if ck.current.as_ref().is_none_or(|c| c.order != v) {
                ck.current = Some(OrderProgress { order: v, frontier: len, frontier_nodes: spent, done: Default::default() });
            }
            save(&ck)
        };
        let on_done = |i: usize, spent: u64| -> Result<()> {
            let mut ck = shared.lock().expect("checkpoint lock");
            ck.current.as_mut().expect("frontier recorded first").done.insert(i, spent);
            save(&ck)
        };
        let mut nodes = 0;
        let result = workers.install(|| {
            let progress =
                Progress { done: &done, expected_frontier: expected, on_frontier: &on_frontier, on_done: &on_done };
            search_order(&p, v, &mut budget, &mut nodes, progress)
        })?;
        outcome.nodes += nodes;
        match result {
            OrderResult::Found(g) => {
                outcome.min_order = Some(v);
                outcome.witness = Some(g);
                outcome.exhaustive = true;
                return Ok(outcome);
            }
            OrderResult::Refuted => {
                outcome.refuted.push(v);
                ck.current = None;
                ck.refuted.push(RefutedOrder { order: v, nodes });
                save(&ck)?;
            }
            OrderResult::Stopped(reason) => {
                outcome.budget_exhausted = Some(reason);
                return Ok(outcome);
            }
        }
    }
    outcome.exhaustive = true;
    Ok(outcome)
}

/// Whether `g` is a babi-cage: no `(r, s; g)`-babi-graph of smaller
/// admissible order exists (orders below the closed-form bound are excluded
/// by it). Fails if `g` is not a babi-graph or the search runs out of budget.
pub fn certify_cage(g: &Graph, p: &BabiParams) -> Result<bool> {
    certify_cage_with(g, p, None)
}

pub fn certify_cage_with(g: &Graph, p: &BabiParams, node_limit: Option<u64>) -> Result<bool> {
    let cert = verify_babi(g, p);
    if !cert.babi {
        return Err(Error::Precondition(format!("graph is not a {p}-babi-graph")));
    }
    if g.order() > MAX_SEARCH_ORDER {
        return Err(Error::InvalidParams(format!("order {} exceeds {MAX_SEARCH_ORDER}", g.order())));
    }
    let spec = SearchSpec::new(*p, g.order());
    if spec.start()? >= g.order() {
        return Ok(true);
    }
    let below = admissible_orders(p, 0, g.order() - 1).into_iter().max().expect("2 is below");
    let mut spec = SearchSpec { v_max: below, ..spec };
    spec.node_limit = node_limit;
    let out = exhaustive_min(&spec)?;
    if out.min_order.is_some() {
        return Ok(false);
    }
    match out.budget_exhausted {
        Some(reason) => Err(Error::Budget(reason)),
        None => Ok(true),
    }
}

/// All `(r, s; g)`-babi-graphs of order `v` up to isomorphism, in
/// canonical-form order.
pub fn enumerate_nonisomorphic(p: &BabiParams, v: usize, node_limit: Option<u64>) -> Result<Vec<Graph>> {
    if p.r < 2 {
        return Err(Error::InvalidParams(format!("search needs r >= 2, got {}", p.r)));
    }
    if v > MAX_SEARCH_ORDER {
        return Err(Error::InvalidParams(format!("order {v} exceeds {MAX_SEARCH_ORDER}")));
    }
    if v == 0 || !admissible(v, p) {
        return Ok(Vec::new());
    }
    let mut budget = Budget { nodes_left: node_limit.unwrap_or(u64::MAX), deadline: None };
    let (subtrees, spent) = frontier(p, v, &budget).map_err(|(s, _)| Error::Budget(stop_reason(s)))?;
    budget.nodes_left -= spent;
    let cap = budget.nodes_left;
    let results: Vec<(std::result::Result<(), Stop>, u64, Vec<Graph>)> = subtrees
        .into_par_iter()
        .map(|state| {
            let mut k = Kernel::new(p, state, Goal::Collect, cap);
            let res = k.run();
            (res, k.nodes, k.found)
        })
        .collect();
    let mut forms = BTreeSet::new();
    for (res, spent, found) in results {
        if spent > budget.nodes_left {
            return Err(Error::Budget("node limit".into()));
        }
        budget.nodes_left -= spent;
        if let Err(stop) = res {
            return Err(Error::Budget(stop_reason(stop)));
        }
        forms.extend(found.iter().map(canonical_graph));
    }
    Ok(forms.into_iter().map(|f| f.to_graph()).collect())
}

/// Number of `(r, s; g)`-babi-graphs of order `v` up to isomorphism.
pub fn count_nonisomorphic(p: &BabiParams, v: usize) -> Result<usize> {
    Ok(enumerate_nonisomorphic(p, v, None)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_census;

    fn params(r: usize, s: usize, g: usize) -> BabiParams {
        BabiParams::new(r, s, g).unwrap()
    }

    #[test]
    fn admissible_orders_respect_parity() {
        assert_eq!(admissible_orders(&params(2, 3, 5), 1, 13), vec![4, 8, 12]);
        assert_eq!(admissible_orders(&params(2, 4, 5), 9, 14), vec![10, 12, 14]);
    }

    #[test]
    fn spec_rejects_inadmissible_ceiling() {
        assert!(exhaustive_min(&SearchSpec::new(params(2, 3, 5), 10)).is_err());
        assert!(exhaustive_min(&SearchSpec::new(params(2, 3, 5), 66)).is_err());
    }

    #[test]
    fn minimum_of_235_is_eight() {
        let out = exhaustive_min(&SearchSpec::new(params(2, 3, 5), 12)).unwrap();
        assert_eq!(out.min_order, Some(8));
        assert!(out.exhaustive);
        let prove = exhaustive_min(&SearchSpec::new(params(2, 3, 5), 12).mode(SearchMode::ProveMin)).unwrap();
        assert_eq!(prove.start, 4);
        assert_eq!(prove.refuted, vec![4]);
        assert_eq!(prove.min_order, Some(8));
    }

    #[test]
    fn node_counts_do_not_depend_on_workers() {
        let spec = SearchSpec::new(params(2, 3, 6), 12).mode(SearchMode::ProveMin);
        let one = exhaustive_min(&spec.clone().threads(1)).unwrap();
        let four = exhaustive_min(&spec.threads(4)).unwrap();
        assert_eq!(one.nodes, four.nodes);
        assert_eq!(one.min_order, Some(12));
        assert_eq!(
            graph6::encode_string(one.witness.as_ref().unwrap()),
            graph6::encode_string(four.witness.as_ref().unwrap())
        );
    }

    #[test]
    fn node_limit_clears_the_exhaustive_flag() {
        let out = exhaustive_min(&SearchSpec::new(params(2, 3, 6), 12).node_limit(5)).unwrap();
        assert!(!out.exhaustive);
        assert_eq!(out.budget_exhausted.as_deref(), Some("node limit"));
        assert!(out.nodes <= 5 + 1);
    }

    #[test]
    fn counts() {
        assert_eq!(count_nonisomorphic(&params(2, 3, 5), 6).unwrap(), 0);
        assert_eq!(count_nonisomorphic(&params(2, 3, 3), 2).unwrap(), 0);
        let twelve = enumerate_nonisomorphic(&params(2, 3, 6), 12, None).unwrap();
        assert!(twelve.len() >= 2);
        let fats: BTreeSet<usize> =
            twelve.iter().map(|g| edge_census(g, &params(2, 3, 6)).unwrap().fat).collect();
        assert!(fats.len() >= 2);
    }

    #[test]
    fn checkpoint_resume_matches_fresh_run() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ck.json");
        let spec = SearchSpec::new(params(2, 4, 5), 14).v_min(10);
        let fresh = exhaustive_min(&spec).unwrap();
        let first = exhaustive_min(&spec.clone().checkpoint(&path)).unwrap();
        assert_eq!(first.nodes, fresh.nodes);
        let ck = Checkpoint::load(&path).unwrap();
        assert_eq!(ck.refuted.iter().map(|r| r.order).collect::<Vec<_>>(), vec![10, 12]);
        let again = exhaustive_min(&spec.checkpoint(&path)).unwrap();
        assert_eq!(again.nodes, fresh.nodes);
        assert_eq!(again.min_order, Some(14));
    }
}
