//! The conic `Y = X^2` in PG(2, q), q odd, and the classification of lines
//! and points relative to it.
//!
//! Affine points `(a, b)` sit at `(a, b, 1)`. The conic consists of the
//! points `(x, x^2, 1)` and `P = (0, 1, 0)`, the common point at infinity of
//! the vertical lines. Algebraically:
//!
//! * `Y = mX + k` meets the conic where `X^2 - mX - k = 0`, so it is a
//!   secant, tangent or external line as `m^2 + 4k` is a non-zero square,
//!   zero, or a non-square. Vertical lines are secants and `Z = 0` is the
//!   tangent at `P`.
//! * the tangent at `(x, x^2)` is `Y = 2xX - x^2`; it passes through
//!   `(a, b)` iff `x^2 - 2ax + b = 0`, so `(a, b)` off the conic is external
//!   iff `a^2 - b` is a non-zero square. Points at infinity other than `P`
//!   lie on `Z = 0` and one more tangent, so they are external.

use serde::Serialize;

use super::plane::{pg2, ProjectivePlane};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineTag {
    Tangent,
    Secant,
    External,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PointTag {
    Oval,
    External,
    Internal,
}

#[derive(Clone, Debug)]
pub struct OvalClassification {
    pub plane: ProjectivePlane,
    /// point indices of the conic, `P` last
    pub oval: Vec<usize>,
    /// the point at infinity of the vertical lines
    pub p_infinity: usize,
    /// the tangent at `p_infinity` (the line `Z = 0`)
    pub tangent_at_p: usize,
    pub line_tags: Vec<LineTag>,
    pub point_tags: Vec<PointTag>,
}

impl OvalClassification {
    pub fn count_lines(&self, tag: LineTag) -> usize {
        self.line_tags.iter().filter(|&&t| t == tag).count()
    }

    pub fn count_points(&self, tag: PointTag) -> usize {
        self.point_tags.iter().filter(|&&t| t == tag).count()
    }
}

/// Classifies by the square tests above and checks every tag against a
/// direct count of incidences.
pub fn conic_oval(q: u32) -> Result<OvalClassification> {
    if q.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("conic oval needs odd q, got {q}")));
    }
    let plane = pg2(q)?;
    let f = &plane.field;
    let n = f.order();
    let four = f.from_int(4);

    let p_infinity = plane.point_index([0, 1, 0]).unwrap();
    let tangent_at_p = plane.line_index([0, 0, 1]).unwrap();
    let mut oval: Vec<usize> = (0..n)
        .map(|x| plane.point_index([x, f.mul(x, x), 1]).unwrap())
        .collect();
    oval.push(p_infinity);

    let square_class = |d: usize| if d == 0 { 0 } else if f.is_nonzero_square(d) { 1 } else { 2 };

    let mut line_tags = vec![LineTag::Tangent; plane.size()];
    for m in 0..n {
        for k in 0..n {
            // mX - Y + kZ = 0
            let l = plane.line_index([m, f.neg(1), k]).unwrap();
            let disc = f.add(f.mul(m, m), f.mul(four, k));
            line_tags[l] = [LineTag::Tangent, LineTag::Secant, LineTag::External][square_class(disc)];
        }
    }
    for c in 0..n {
        // X = c
        line_tags[plane.line_index([1, 0, f.neg(c)]).unwrap()] = LineTag::Secant;
    }
    line_tags[tangent_at_p] = LineTag::Tangent;

    let mut point_tags = vec![PointTag::External; plane.size()];
    for a in 0..n {
        for b in 0..n {
            let x = plane.point_index([a, b, 1]).unwrap();
            let disc = f.sub(f.mul(a, a), b);
            point_tags[x] = [PointTag::Oval, PointTag::External, PointTag::Internal][square_class(disc)];
        }
    }
    point_tags[p_infinity] = PointTag::Oval;

    let classification = OvalClassification { plane, oval, p_infinity, tangent_at_p, line_tags, point_tags };
    check_geometric(&classification)?;
    Ok(classification)
}

fn check_geometric(c: &OvalClassification) -> Result<()> {
    let pg = &c.plane;
    let fail = |reason: String| Err(Error::Validation { name: format!("conic in PG(2,{})", pg.order()), reason });
    let on_oval = |x: usize| c.oval.contains(&x);
    for l in 0..pg.size() {
        let expected = match pg.points_on(l).iter().filter(|&&x| on_oval(x)).count() {
            0 => LineTag::External,
            1 => LineTag::Tangent,
            2 => LineTag::Secant,
            k => return fail(format!("line {l} meets the conic in {k} points")),
        };
        if c.line_tags[l] != expected {
            return fail(format!("line {l}: algebra says {:?}, incidence says {expected:?}", c.line_tags[l]));
        }
    }
    for x in 0..pg.size() {
        let expected = if on_oval(x) {
            PointTag::Oval
        } else {
            match pg.lines_through(x).iter().filter(|&&l| c.line_tags[l] == LineTag::Tangent).count() {
                0 => PointTag::Internal,
                2 => PointTag::External,
                k => return fail(format!("point {x} is on {k} tangents")),
            }
        };
        if c.point_tags[x] != expected {
            return fail(format!("point {x}: algebra says {:?}, incidence says {expected:?}", c.point_tags[x]));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_q5() {
        let c = conic_oval(5).unwrap();
        assert_eq!(c.oval.len(), 6);
        assert_eq!(c.count_lines(LineTag::Tangent), 6);
        assert_eq!(c.count_lines(LineTag::Secant), 15);
        assert_eq!(c.count_lines(LineTag::External), 10);
        assert_eq!(c.count_points(PointTag::External), 15);
        assert_eq!(c.count_points(PointTag::Internal), 10);
    }

    #[test]
    fn counts_follow_q_for_odd_orders() {
        for q in [3usize, 7, 9, 11, 13, 25, 27] {
            let c = conic_oval(q as u32).unwrap();
            assert_eq!(c.count_lines(LineTag::Tangent), q + 1);
            assert_eq!(c.count_lines(LineTag::Secant), q * (q + 1) / 2);
            assert_eq!(c.count_lines(LineTag::External), q * (q - 1) / 2);
            assert_eq!(c.count_points(PointTag::External), q * (q + 1) / 2);
            assert_eq!(c.count_points(PointTag::Internal), q * (q - 1) / 2);
        }
    }

    #[test]
    fn even_order_is_rejected() {
        assert!(matches!(conic_oval(4), Err(Error::InvalidParams(_))));
    }
}
