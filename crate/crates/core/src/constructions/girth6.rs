//! Girth-6 babi-graphs from projective planes.

use super::{delete_and_finish, finish, Construction};
use crate::error::{Error, Result};
use crate::geometry::{conic_oval, pg2, LineTag, PointTag, ProjectivePlane};
use crate::graph::matching::{extend_to_size, greedy, mates_to_edges};
use crate::graph::{BabiParams, Graph};

/// Removes `count` independent edges between vertices of degree `fat`:
/// greedily in edge order, completed by augmenting paths if greedy stalls.
fn remove_fat_matching(g: &mut Graph, fat: usize, count: usize) -> Result<Vec<(usize, usize)>> {
    let fat_edges: Vec<(usize, usize)> =
        g.edges().filter(|&(a, b)| g.degree(a) == fat && g.degree(b) == fat).collect();
    let sub = Graph::from_edges(g.order(), fat_edges.iter().copied())?;
    let start = greedy(g.order(), fat_edges.iter().copied());
    let mates = if mates_to_edges(&start).len() >= count {
        start
    } else {
        extend_to_size(&sub, &start, count)
            .ok_or_else(|| Error::Construction(format!("no {count} independent edges among degree-{fat} vertices")))?
    };
    let chosen: Vec<(usize, usize)> = mates_to_edges(&mates).into_iter().take(count).collect();
    for &(a, b) in &chosen {
        g.remove_edge(a, b)?;
    }
    Ok(chosen)
}

fn line_vertex(pg: &ProjectivePlane, l: usize) -> usize {
    pg.size() + l
}

/// `(q, q+1; 6)`-babi-graph of order `2(q^2+q)`: delete a non-incident
/// point-line pair from the Levi graph, then `(q^2-q-2)/2` independent fat edges.
pub fn babi_g6_pair(q: u32) -> Result<Construction> {
    let pg = pg2(q)?;
    let n = pg.order();
    let p = 0;
    let l = (0..pg.size()).find(|&l| !pg.incident(p, l)).expect("some line misses P");
    let (mut g, _) = pg.levi().remove_vertices(&[p, line_vertex(&pg, l)]);
    let removed = remove_fat_matching(&mut g, n + 1, (n * n - n - 2) / 2)?;
    finish(
        g,
        BabiParams::new(n, n + 1, 6)?,
        format!(
            "Levi graph of PG(2,{q}) minus point {p} and line {l} (survivors renumbered in order), minus independent \
             fat edges {removed:?}"
        ),
    )
}

/// `(q, q+1; 6)`-babi-graph of order `2(q^2+q-2)`, `q > 3`: delete three
/// non-collinear points and their three joining lines, then
/// `(q-1)(q-4)/2` independent fat edges.
pub fn babi_g6_triangle(q: u32) -> Result<Construction> {
    if q <= 3 {
        return Err(Error::InvalidParams(format!("triangle construction needs q > 3, got {q}")));
    }
    let pg = pg2(q)?;
    let n = pg.order();
    let (p1, p2) = (0, 1);
    let l12 = pg.join(p1, p2);
    let p3 = (0..pg.size()).find(|&x| !pg.incident(x, l12)).expect("a point off the line");
    let lines = [l12, pg.join(p2, p3), pg.join(p3, p1)];
    let doomed = [p1, p2, p3].into_iter().chain(lines.iter().map(|&l| line_vertex(&pg, l))).collect::<Vec<_>>();
    let (mut g, _) = pg.levi().remove_vertices(&doomed);
    let removed = remove_fat_matching(&mut g, n + 1, (n - 1) * (n - 4) / 2)?;
    finish(
        g,
        BabiParams::new(n, n + 1, 6)?,
        format!(
            "Levi graph of PG(2,{q}) minus points {:?} and lines {lines:?} (survivors renumbered in order), minus \
             independent fat edges {removed:?}",
            [p1, p2, p3]
        ),
    )
}

/// `(q, q+1; 6)`-babi-graph of order `2q^2+q+1` for `q = 1 (mod 4)`:
/// delete a line through `P` and its other points, then `(q-1)/4`
/// incidences between further lines through `P` and points on them.
pub fn babi_g6_mod4(q: u32) -> Result<Construction> {
    if q % 4 != 1 {
        return Err(Error::InvalidParams(format!("construction needs q = 1 (mod 4), got {q}")));
    }
    let pg = pg2(q)?;
    let n = pg.order();
    let p = 0;
    let l = pg.lines_through(p)[0];
    let mut g = pg.levi();
    let picks: Vec<(usize, usize)> = pg
        .lines_through(p)
        .iter()
        .filter(|&&m| m != l)
        .take((n - 1) / 4)
        .map(|&m| (*pg.points_on(m).iter().find(|&&x| x != p).expect("q+1 points"), m))
        .collect();
    for &(x, m) in &picks {
        g.remove_edge(x, line_vertex(&pg, m))?;
    }
    let doomed: Vec<usize> = pg
        .points_on(l)
        .iter()
        .copied()
        .filter(|&x| x != p)
        .chain([line_vertex(&pg, l)])
        .collect();
    delete_and_finish(
        &g,
        &doomed,
        BabiParams::new(n, n + 1, 6)?,
        format!("Levi graph of PG(2,{q}) minus incidences (point, line) {picks:?}, minus line {l} and its points other than {p}"),
    )
}

/// `(q-2, q; 6)`-babi-graph of order `2(q^2-q)` for odd `q > 3`, from the
/// conic `Y = X^2`: delete the conic, the points of the tangent at
/// `P = (0,1,0)`, all tangents, and every line through `P`.
pub fn babi_g6_oval(q: u32) -> Result<Construction> {
    if q.is_multiple_of(2) || q <= 3 {
        return Err(Error::InvalidParams(format!("oval construction needs odd q > 3, got {q}")));
    }
    let c = conic_oval(q)?;
    let pg = &c.plane;
    let n = pg.order();
    let points = (0..pg.size()).filter(|&x| c.point_tags[x] == PointTag::Oval || pg.incident(x, c.tangent_at_p));
    let lines = (0..pg.size())
        .filter(|&l| c.line_tags[l] == LineTag::Tangent || pg.incident(c.p_infinity, l))
        .map(|l| line_vertex(pg, l));
    let doomed: Vec<usize> = points.chain(lines).collect();
    delete_and_finish(
        &pg.levi(),
        &doomed,
        BabiParams::new(n - 2, n, 6)?,
        format!(
            "Levi graph of PG(2,{q}) minus the conic Y=X^2, the points of its tangent at (0,1,0), all tangents and \
             all lines through (0,1,0): removed vertices {doomed:?}"
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::semireg6_lower;

    #[test]
    fn pair_construction_orders() {
        assert_eq!(babi_g6_pair(2).unwrap().graph.order(), 12);
        assert_eq!(babi_g6_pair(3).unwrap().graph.order(), 24);
        assert_eq!(babi_g6_pair(5).unwrap().graph.order(), 60);
    }

    #[test]
    fn triangle_and_mod4_reach_the_bound_at_five() {
        let bound = semireg6_lower(5).unwrap().value as usize;
        assert_eq!(babi_g6_triangle(5).unwrap().graph.order(), bound);
        assert_eq!(babi_g6_mod4(5).unwrap().graph.order(), bound);
        assert_eq!(babi_g6_triangle(4).unwrap().graph.order(), 36);
        assert_eq!(babi_g6_mod4(9).unwrap().graph.order(), 172);
    }

    #[test]
    fn preconditions() {
        assert!(babi_g6_triangle(3).is_err());
        assert!(babi_g6_mod4(7).is_err());
        assert!(babi_g6_oval(4).is_err());
        assert!(babi_g6_oval(3).is_err());
    }

    #[test]
    fn oval_construction() {
        let c = babi_g6_oval(5).unwrap();
        assert_eq!(c.graph.order(), 40);
        assert_eq!(c.certificate.degrees.get(&3), Some(&20));
        assert_eq!(babi_g6_oval(7).unwrap().graph.order(), 84);
    }
}
