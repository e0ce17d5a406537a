use serde::{Deserialize, Serialize};

use super::field::{gf, FieldTable};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Points, lines and incidences of a finite point-line geometry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceStructure {
    pub points: Vec<String>,
    pub lines: Vec<String>,
    /// sorted point indices on each line
    pub incidence: Vec<Vec<usize>>,
    /// collinear point sets earmarked for amalgamation (possibly empty)
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn lines_through(&self) -> Vec<Vec<usize>> {
        let mut through = vec![Vec::new(); self.num_points()];
        for (l, pts) in self.incidence.iter().enumerate() {
            for &p in pts {
                through[p].push(l);
            }
        }
        through
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("incidence structure serialises")
    }
}

/// Incidence (Levi) graph: points are vertices `0..P`, lines `P..P+L`.
pub fn levi(inc: &IncidenceStructure) -> Graph {
    let offset = inc.num_points();
    let mut g = Graph::new(offset + inc.num_lines());
    for (l, pts) in inc.incidence.iter().enumerate() {
        for &p in pts {
            g.add_edge(p, offset + l);
        }
    }
    g
}

/// Homogeneous coordinates over GF(q), first non-zero entry equal to 1.
pub type Triple = [usize; 3];

/// PG(2, q) with its coordinates.
///
/// Points and lines share one list of normalised triples, in the order
/// `(1, a, b)` for `a, b` in GF(q) (`a` major), then `(0, 1, b)`, then
/// `(0, 0, 1)`. Point `x` lies on line `[u]` iff `u . x = 0`.
#[derive(Clone, Debug)]
pub struct ProjectivePlane {
    pub field: FieldTable,
    pub coords: Vec<Triple>,
    pub structure: IncidenceStructure,
    lines_through: Vec<Vec<usize>>,
}

fn normalised_triples(q: usize) -> Vec<Triple> {
    let mut out = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            out.push([1, a, b]);
        }
    }
    for b in 0..q {
        out.push([0, 1, b]);
    }
    out.push([0, 0, 1]);
    out
}

fn label(t: &Triple) -> String {
    format!("({},{},{})", t[0], t[1], t[2])
}

/// Exhaustive axiom checks run up to this order; larger planes are sampled.
const FULL_CHECK_MAX: usize = 9;
const SAMPLED_PAIRS: usize = 1000;

pub fn pg2(q: u32) -> Result<ProjectivePlane> {
    let field = gf(q)?;
    let coords = normalised_triples(field.order());
    let incidence: Vec<Vec<usize>> = coords
        .iter()
        .map(|line| {
            (0..coords.len())
                .filter(|&p| dot(&field, line, &coords[p]) == 0)
                .collect()
        })
        .collect();
    let structure = IncidenceStructure {
        points: coords.iter().map(label).collect(),
        lines: coords.iter().map(|t| format!("[{},{},{}]", t[0], t[1], t[2])).collect(),
        incidence,
        classes: Vec::new(),
    };
    let lines_through = structure.lines_through();
    let plane = ProjectivePlane { field, coords, structure, lines_through };
    plane.check_axioms()?;
    Ok(plane)
}

fn dot(f: &FieldTable, a: &Triple, b: &Triple) -> usize {
    (0..3).fold(0, |acc, i| f.add(acc, f.mul(a[i], b[i])))
}

impl ProjectivePlane {
    pub fn order(&self) -> usize {
        self.field.order()
    }

    /// Number of points (= number of lines).
    pub fn size(&self) -> usize {
        self.coords.len()
    }

    pub fn points_on(&self, line: usize) -> &[usize] {
        &self.structure.incidence[line]
    }

    pub fn lines_through(&self, point: usize) -> &[usize] {
        &self.lines_through[point]
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.structure.incidence[line].binary_search(&point).is_ok()
    }

    pub fn point_index(&self, t: Triple) -> Option<usize> {
        let t = self.normalise(t)?;
        self.coords.iter().position(|c| *c == t)
    }

    /// Same coordinate space is used for lines.
    pub fn line_index(&self, t: Triple) -> Option<usize> {
        self.point_index(t)
    }

    pub fn normalise(&self, t: Triple) -> Option<Triple> {
        let f = &self.field;
        let lead = t.iter().copied().find(|&x| x != 0)?;
        let inv = f.inv(lead)?;
        Some([f.mul(t[0], inv), f.mul(t[1], inv), f.mul(t[2], inv)])
    }

    /// The line through two distinct points.
    pub fn join(&self, a: usize, b: usize) -> usize {
        assert_ne!(a, b);
        *self.lines_through(a)
            .iter()
            .find(|&&l| self.incident(b, l))
            .expect("two points span a line")
    }

    /// The common point of two distinct lines.
    pub fn meet(&self, l: usize, m: usize) -> usize {
        assert_ne!(l, m);
        *self.points_on(l)
            .iter()
            .find(|&&p| self.incident(p, m))
            .expect("two lines meet")
    }

    pub fn levi(&self) -> Graph {
        levi(&self.structure)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.size();
        let q = self.order();
        let fail = |reason: String| Err(Error::Validation { name: format!("PG(2,{q})"), reason });
        if n != q * q + q + 1 {
            return fail(format!("{n} points"));
        }
        if let Some(l) = (0..n).find(|&l| self.points_on(l).len() != q + 1) {
            return fail(format!("line {l} has {} points (P3)", self.points_on(l).len()));
        }
        if let Some(p) = (0..n).find(|&p| self.lines_through(p).len() != q + 1) {
            return fail(format!("point {p} is on {} lines (P4)", self.lines_through(p).len()));
        }
        let common = |a: &[usize], b: &[usize]| a.iter().filter(|x| b.binary_search(x).is_ok()).count();
        let pairs: Vec<(usize, usize)> = if q <= FULL_CHECK_MAX {
            (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
        } else {
            sampled_pairs(n, SAMPLED_PAIRS)
        };
        for &(a, b) in &pairs {
            if common(self.lines_through(a), self.lines_through(b)) != 1 {
                return fail(format!("points {a},{b} do not span exactly one line (P1)"));
            }
            if common(self.points_on(a), self.points_on(b)) != 1 {
                return fail(format!("lines {a},{b} do not meet in exactly one point (P2)"));
            }
        }
        Ok(())
    }
}

/// Deterministic spread of distinct index pairs (an LCG walk; no seeding needed).
fn sampled_pairs(n: usize, count: usize) -> Vec<(usize, usize)> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = || {
        state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
        (state >> 33) as usize
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (a, b) = (next() % n, next() % n);
        if a != b {
            out.push((a.min(b), a.max(b)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, Girth};

    #[test]
    fn fano_plane() {
        let pg = pg2(2).unwrap();
        assert_eq!(pg.size(), 7);
        assert!((0..7).all(|l| pg.points_on(l).len() == 3));
    }

    #[test]
    fn sizes_follow_q_squared_plus_q_plus_one() {
        for (q, n) in [(3, 13), (4, 21), (5, 31), (19, 381)] {
            assert_eq!(pg2(q).unwrap().size(), n);
        }
    }

    #[test]
    fn join_and_meet_are_dual() {
        let pg = pg2(3).unwrap();
        let l = pg.join(0, 5);
        assert!(pg.incident(0, l) && pg.incident(5, l));
        let p = pg.meet(l, (l + 1) % pg.size());
        assert!(pg.incident(p, l));
    }

    #[test]
    fn normalisation_is_canonical() {
        let pg = pg2(5).unwrap();
        let a = pg.point_index([2, 4, 1]).unwrap();
        let b = pg.point_index([4, 3, 2]).unwrap();
        assert_eq!(a, b);
        assert!(pg.point_index([0, 0, 0]).is_none());
    }

    #[test]
    fn levi_graph_of_pg2_3() {
        let g = pg2(3).unwrap().levi();
        assert_eq!(g.order(), 26);
        assert_eq!(g.regular_degree(), Some(4));
        assert_eq!(girth(&g), Girth::Finite(6));
    }

    #[test]
    fn json_export_lists_incidences() {
        let json = pg2(2).unwrap().structure.to_json();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["points"].as_array().unwrap().len(), 7);
        assert_eq!(v["incidence"][0].as_array().unwrap().len(), 3);
    }
}
