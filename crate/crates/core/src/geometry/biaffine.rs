use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::plane::{pg2, IncidenceStructure};
use crate::error::{Error, Result};

/// Type 1 removes an incident point-line pair, type 2 a non-incident one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BiaffineKind {
    Type1,
    Type2,
}

impl BiaffineKind {
    /// Number of points (and lines) left in a plane of order `q`.
    pub fn size(self, q: usize) -> usize {
        match self {
            BiaffineKind::Type1 => q * q,
            BiaffineKind::Type2 => q * q - 1,
        }
    }

    /// Size of each amalgamation class.
    pub fn class_size(self, q: usize) -> usize {
        match self {
            BiaffineKind::Type1 => q,
            BiaffineKind::Type2 => q - 1,
        }
    }
}

impl fmt::Display for BiaffineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BiaffineKind::Type1 => "type1",
            BiaffineKind::Type2 => "type2",
        })
    }
}

impl FromStr for BiaffineKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" | "type1" => Ok(BiaffineKind::Type1),
            "2" | "type2" => Ok(BiaffineKind::Type2),
            other => Err(Error::InvalidParams(format!("unknown biaffine type `{other}`"))),
        }
    }
}

/// The biaffine plane obtained from PG(2, q) by deleting the point
/// `P = (1,0,0)`, a line `l` (the first line through `P` for type 1, the
/// first line missing `P` for type 2), every line through `P` and every
/// point of `l`.
///
/// `classes` lists, for each deleted line through `P` other than `l` in
/// index order, its surviving points.
pub fn biaffine(q: u32, kind: BiaffineKind) -> Result<IncidenceStructure> {
    let pg = pg2(q)?;
    let p = 0;
    let l = (0..pg.size())
        .find(|&l| pg.incident(p, l) == (kind == BiaffineKind::Type1))
        .expect("some line fits");

    let keep_point: Vec<bool> = (0..pg.size()).map(|x| x != p && !pg.incident(x, l)).collect();
    let keep_line: Vec<bool> = (0..pg.size()).map(|m| m != l && !pg.incident(p, m)).collect();
    let mut new_index = vec![usize::MAX; pg.size()];
    let mut points = Vec::new();
    for x in (0..pg.size()).filter(|&x| keep_point[x]) {
        new_index[x] = points.len();
        points.push(pg.structure.points[x].clone());
    }
    let mut lines = Vec::new();
    let mut incidence = Vec::new();
    for m in (0..pg.size()).filter(|&m| keep_line[m]) {
        lines.push(pg.structure.lines[m].clone());
        incidence.push(
            pg.points_on(m)
                .iter()
                .filter(|&&x| keep_point[x])
                .map(|&x| new_index[x])
                .collect(),
        );
    }
    let classes = pg
        .lines_through(p)
        .iter()
        .filter(|&&m| m != l)
        .map(|&m| {
            pg.points_on(m)
                .iter()
                .filter(|&&x| keep_point[x])
                .map(|&x| new_index[x])
                .collect()
        })
        .collect();

    Ok(IncidenceStructure { points, lines, incidence, classes })
}
