use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{girth, Girth, Graph};
use crate::error::{Error, Result};

/// Degree pair and girth `(r, s; g)` with `1 <= r < s` and `g >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BabiParams {
    pub r: usize,
    pub s: usize,
    pub g: usize,
}

impl BabiParams {
    pub fn new(r: usize, s: usize, g: usize) -> Result<Self> {
        if r < 1 || r >= s {
            return Err(Error::InvalidParams(format!("need 1 <= r < s, got r={r}, s={s}")));
        }
        if g < 3 {
            return Err(Error::InvalidParams(format!("girth must be at least 3, got {g}")));
        }
        Ok(BabiParams { r, s, g })
    }
}

impl fmt::Display for BabiParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.r, self.s, self.g)
    }
}

impl FromStr for BabiParams {
    type Err = Error;

    /// Parses `r,s,g`.
    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<usize> = text
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::InvalidParams(format!("`{text}`: {e}")))?;
        match parts.as_slice() {
            [r, s, g] => BabiParams::new(*r, *s, *g),
            _ => Err(Error::InvalidParams(format!("expected r,s,g, got `{text}`"))),
        }
    }
}

/// Fat (both ends degree `s`), thin (both ends degree `r`) and mixed edge counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCensus {
    pub fat: usize,
    pub thin: usize,
    pub mixed: usize,
    pub order: usize,
}

impl EdgeCensus {
    pub fn total(&self) -> usize {
        self.fat + self.thin + self.mixed
    }

    /// Checks `2f + m = (v/2) s`, `2t + m = (v/2) r` and `4f = v (s - r) + 4t`
    /// in exact integer arithmetic.
    pub fn identities_hold(&self, p: &BabiParams) -> bool {
        let v = self.order;
        v.is_multiple_of(2)
            && 2 * self.fat + self.mixed == v / 2 * p.s
            && 2 * self.thin + self.mixed == v / 2 * p.r
            && 4 * self.fat == v * (p.s - p.r) + 4 * self.thin
    }
}

/// Verification report for a candidate babi-graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub params: BabiParams,
    pub order: usize,
    /// degree -> multiplicity
    pub degrees: BTreeMap<usize, usize>,
    pub girth: Girth,
    /// exactly `order/2` vertices of degree `r` and `order/2` of degree `s`
    pub balanced: bool,
    /// `balanced` and the girth equals `g`
    pub babi: bool,
    pub connected: bool,
    pub census: Option<EdgeCensus>,
    pub provenance: String,
}

impl Certificate {
    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialises")
    }
}

fn degree_balanced(g: &Graph, p: &BabiParams) -> bool {
    let n = g.order();
    if n == 0 || n % 2 == 1 {
        return false;
    }
    let hist = g.degree_histogram();
    hist.len() == 2 && hist.get(&p.r) == Some(&(n / 2)) && hist.get(&p.s) == Some(&(n / 2))
}

/// Never fails: every shortcoming is recorded in the certificate.
pub fn verify_babi(g: &Graph, p: &BabiParams) -> Certificate {
    let gi = girth(g);
    let balanced = degree_balanced(g, p);
    Certificate {
        schema: 1,
        params: *p,
        order: g.order(),
        degrees: g.degree_histogram(),
        girth: gi,
        balanced,
        babi: balanced && gi == Girth::Finite(p.g),
        connected: g.is_connected(),
        census: edge_census(g, p).ok(),
        provenance: String::new(),
    }
}

pub fn edge_census(g: &Graph, p: &BabiParams) -> Result<EdgeCensus> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) != p.r && g.degree(v) != p.s) {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {}, outside {{{}, {}}}",
            g.degree(v),
            p.r,
            p.s
        )));
    }
    let mut census = EdgeCensus { fat: 0, thin: 0, mixed: 0, order: g.order() };
    for (u, v) in g.edges() {
        match (g.degree(u) == p.s, g.degree(v) == p.s) {
            (true, true) => census.fat += 1,
            (false, false) => census.thin += 1,
            _ => census.mixed += 1,
        }
    }
    Ok(census)
}

/// Largest `deg_f(x) + deg_f(y)` over fat edges `xy`, where `deg_f` counts
/// fat edges at a vertex; 0 when there is no fat edge. Requires a
/// degree-balanced `{r, s}` graph (girth plays no role in the count).
pub fn max_fat_edge_sum(g: &Graph, p: &BabiParams) -> Result<usize> {
    if !degree_balanced(g, p) {
        return Err(Error::Precondition(format!("graph is not a balanced {{{}, {}}} graph", p.r, p.s)));
    }
    let fat = |v: usize| g.degree(v) == p.s;
    let fat_deg: Vec<usize> = (0..g.order())
        .map(|v| if fat(v) { g.neighbors(v).iter().filter(|&&w| fat(w)).count() } else { 0 })
        .collect();
    Ok(g.edges()
        .filter(|&(u, v)| fat(u) && fat(v))
        .map(|(u, v)| fat_deg[u] + fat_deg[v])
        .max()
        .unwrap_or(0))
}
