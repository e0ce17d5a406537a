//! Girth-5 babi-graphs obtained by deleting from, or extending, known cages.

use super::{delete_and_finish, finish, Construction};
use crate::error::{Error, Result};
use crate::geometry::fano_subplane_pg24;
use crate::graph::matching::{maximum_matching, mates_to_edges};
use crate::graph::{BabiParams, Graph};
use crate::named::{hoffman_singleton, load_named, petersen, robertson, robertson_wegner, RobertsonWegner};

/// `(2,3;5)`-babi-cage of order 8: Petersen minus both ends of its lowest edge.
pub fn babi_235() -> Result<Construction> {
    let g = petersen();
    let (a, b) = g.edges().next().expect("Petersen has edges");
    delete_and_finish(&g, &[a, b], BabiParams::new(2, 3, 5)?, format!("Petersen (Kneser K(5,2)) minus edge {a}-{b}"))
}

/// `(3,4;5)`-babi-cage of order 16: Robertson minus a 3-path.
pub fn babi_345() -> Result<Construction> {
    let g = robertson();
    let u1 = 0;
    let u2 = g.neighbors(u1)[0];
    let u3 = *g.neighbors(u2).iter().find(|&&x| x != u1).expect("degree 4");
    delete_and_finish(
        &g,
        &[u1, u2, u3],
        BabiParams::new(3, 4, 5)?,
        format!("Robertson minus the 3-path {}-{}-{} (table labels)", u1 + 1, u2 + 1, u3 + 1),
    )
}

/// `(5,6;5)`-babi-cage of order 36: the (6,5)-cage minus a 4-path joining
/// two vertices at distance 3. Needs the `cage-6-5` asset.
pub fn babi_565(asset_dir: Option<&std::path::Path>) -> Result<Construction> {
    let g = load_named("cage-6-5", asset_dir)?;
    let n = g.order();
    let (u1, u4) = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| g.distance(a, b) == Some(3))
        .ok_or_else(|| Error::Construction("no pair of vertices at distance 3".into()))?;
    let u2 = *g
        .neighbors(u1)
        .iter()
        .find(|&&x| g.distance(x, u4) == Some(2))
        .ok_or_else(|| Error::Construction("no 4-path between the chosen pair".into()))?;
    let u3 = *g.neighbors(u2).iter().find(|&&x| g.has_edge(x, u4)).expect("distance 2 gives a common neighbour");
    delete_and_finish(
        &g,
        &[u1, u2, u3, u4],
        BabiParams::new(5, 6, 5)?,
        format!("(6,5)-cage minus the 4-path {u1}-{u2}-{u3}-{u4} with d({u1},{u4}) = 3"),
    )
}

/// `(6,7;5)`-babi-cage of order 48 from a 1-factor `F` of the
/// Hoffman-Singleton graph: delete the ends of one edge of `F`, then six of
/// the `F`-edges whose ends both kept degree 7.
///
/// The 12/12 split of the remaining `F`-edges is checked for each choice of
/// deleted edge; the first edge of `F` that works is used.
pub fn babi_675() -> Result<Construction> {
    let hs = hoffman_singleton();
    let factor = mates_to_edges(&maximum_matching(&hs, None));
    if factor.len() != 25 {
        return Err(Error::Construction("no 1-factor of Hoffman-Singleton found".into()));
    }
    for (attempt, &(u1, u2)) in factor.iter().enumerate() {
        let (g, map) = hs.remove_vertices(&[u1, u2]);
        let rest: Vec<(usize, usize)> = factor
            .iter()
            .filter(|&&e| e != (u1, u2))
            .map(|&(a, b)| (map[a].unwrap(), map[b].unwrap()))
            .collect();
        let untouched: Vec<(usize, usize)> =
            rest.iter().copied().filter(|&(a, b)| g.degree(a) == 7 && g.degree(b) == 7).collect();
        let one_side = rest.iter().filter(|&&(a, b)| (g.degree(a) == 7) != (g.degree(b) == 7)).count();
        if untouched.len() != 12 || one_side != 12 {
            continue;
        }
        let mut g = g;
        for &(a, b) in &untouched[..6] {
            g.remove_edge(a, b)?;
        }
        return finish(
            g,
            BabiParams::new(6, 7, 5)?,
            format!(
                "Hoffman-Singleton, 1-factor by augmenting paths, deleted F-edge {u1}-{u2} (attempt {}), \
                 then removed F-edges {:?} (indices after deletion)",
                attempt + 1,
                &untouched[..6]
            ),
        );
    }
    Err(Error::Construction("no edge of the 1-factor gives the 12/12 split".into()))
}

/// New edges from the five-cycle `a..e` into the Robertson graph (table labels).
pub const NEW_EDGES_455: [(char, usize); 11] = [
    ('a', 11),
    ('a', 12),
    ('a', 13),
    ('b', 2),
    ('b', 6),
    ('c', 3),
    ('c', 15),
    ('d', 8),
    ('d', 17),
    ('e', 1),
    ('e', 7),
];

/// `(4,5;5)`-babi-cage of order 24: Robertson plus a five-cycle `a..e`
/// (vertices 19..23) and eleven connecting edges.
pub fn babi_455_24() -> Result<Construction> {
    let r = robertson();
    let mut g = r.disjoint_union(&Graph::new(5));
    let c = |name: char| 19 + (name as usize - 'a' as usize);
    for i in 0..5 {
        g.add_edge(19 + i, 19 + (i + 1) % 5);
    }
    for (name, label) in NEW_EDGES_455 {
        g.add_edge(c(name), label - 1);
    }
    finish(
        g,
        BabiParams::new(4, 5, 5)?,
        "Robertson (table labels 1..19 -> 0..18) plus five-cycle a..e (19..23) and edges \
         a11 a12 a13 b2 b6 c3 c15 d8 d17 e1 e7",
    )
}

/// `(4,5;5)`-babi-graph of order 28 from PG(2,4) minus a Fano subplane,
/// with each tangent pair `e_i, f_i` joined.
pub fn babi_455_28() -> Result<Construction> {
    let sub = fano_subplane_pg24()?;
    let n = sub.plane.size();
    let mut g = sub.plane.levi();
    for &(e, f) in &sub.tangents {
        g.add_edge(n + e, n + f);
    }
    let doomed: Vec<usize> = sub.points.iter().copied().chain(sub.lines.iter().map(|l| n + l)).collect();
    delete_and_finish(
        &g,
        &doomed,
        BabiParams::new(4, 5, 5)?,
        format!(
            "Levi graph of PG(2,4) (points 0..21, lines 21..42) plus tangent-pair edges, minus the GF(2) subplane \
             points {:?} and lines {:?}",
            sub.points, sub.lines
        ),
    )
}

/// The labelled cube faces used by [`babi_3555_from_rw`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RwLabels {
    pub cube: usize,
    /// `[A, B, C, D]` for faces 1 and 2, `A_2` the cube neighbour of `A_1` etc.
    pub faces: [[usize; 4]; 2],
    /// `(E_i, F_i)`
    pub ef: [(usize, usize); 2],
    /// `(G_2, H_2, K_2, L_2)`
    pub ghkl: (usize, usize, usize, usize),
}

fn cube_faces(rw: &RobertsonWegner, cube: &[usize; 8]) -> Vec<[usize; 4]> {
    // a face is a 4-cycle a-b-c-d of cube edges
    let mut faces = Vec::new();
    for &a in cube {
        for &b in cube.iter().filter(|&&b| rw.cube_edge(a, b)) {
            for &d in cube.iter().filter(|&&d| d > b && rw.cube_edge(a, d)) {
                for &c in cube {
                    if c != a && rw.cube_edge(b, c) && rw.cube_edge(d, c) {
                        let mut key = [a, b, c, d];
                        key.sort_unstable();
                        if !faces.iter().any(|(k, _)| *k == key) {
                            faces.push((key, [a, b, c, d]));
                        }
                    }
                }
            }
        }
    }
    faces.sort();
    faces.into_iter().map(|(_, cyc)| cyc).collect()
}

/// Dodecahedron edges `EF` with `E ~ A, B` and `F ~ C, D`.
fn ef_edges(rw: &RobertsonWegner, [a, b, c, d]: [usize; 4]) -> Vec<(usize, usize)> {
    let dd = |x: usize, y: usize| rw.dodecahedron_edge(x, y);
    let mut out = Vec::new();
    for e in 0..RobertsonWegner::DODECAHEDRON {
        for f in 0..RobertsonWegner::DODECAHEDRON {
            if dd(e, f) && dd(a, e) && dd(b, e) && dd(c, f) && dd(d, f) {
                out.push((e, f));
            }
        }
    }
    out
}

/// Resolves the labelled substructure: the first cube, its first face and
/// the opposite face, the rotation of face 1 for which `E_1 F_1` exists
/// (required to be unique), and the pentagon completions on face 2.
pub fn rw_labels(rw: &RobertsonWegner) -> Result<RwLabels> {
    let fail = |m: String| Error::Construction(format!("Robertson-Wegner labelling: {m}"));
    let cube = 0;
    let verts = rw.cubes[cube];
    let faces = cube_faces(rw, &verts);
    if faces.len() != 6 {
        return Err(fail(format!("cube has {} faces", faces.len())));
    }
    let f1 = faces[0];
    let f2 = *faces
        .iter()
        .find(|f| f.iter().all(|v| !f1.contains(v)))
        .ok_or_else(|| fail("no opposite face".into()))?;

    let mut found = Vec::new();
    for rot in 0..4 {
        for rev in [false, true] {
            let mut lab = [f1[rot], f1[(rot + 1) % 4], f1[(rot + 2) % 4], f1[(rot + 3) % 4]];
            if rev {
                lab = [lab[1], lab[0], lab[3], lab[2]];
            }
            for ef in ef_edges(rw, lab) {
                found.push((lab, ef));
            }
        }
    }
    // relabellings of the same configuration (swapping A/B, C/D, or the two sides) are not distinct
    let mut distinct: Vec<(Vec<usize>, Vec<usize>)> = found
        .iter()
        .map(|(lab, (e, f))| {
            let mut pair = vec![*e, *f];
            pair.sort_unstable();
            let mut sides = vec![lab[0].min(lab[1]) * 100 + lab[0].max(lab[1]), lab[2].min(lab[3]) * 100 + lab[2].max(lab[3])];
            sides.sort_unstable();
            (pair, sides)
        })
        .collect();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != 1 {
        return Err(fail(format!("face 1 determines {} edges E1F1, expected exactly one", distinct.len())));
    }
    let (lab1, ef1) = found[0];
    let below = |x: usize| *f2.iter().find(|&&y| rw.cube_edge(x, y)).expect("opposite faces are matched by cube edges");
    let lab2 = lab1.map(below);
    let ef2 = *ef_edges(rw, lab2).first().ok_or_else(|| fail("no E2F2 over face 2".into()))?;

    let dd = |x: usize, y: usize| rw.dodecahedron_edge(x, y);
    let pentagon = |a: usize, e: usize, b: usize| -> Option<(usize, usize)> {
        // face a-e-b-g-h: g ~ b, h ~ a, g ~ h
        (0..RobertsonWegner::DODECAHEDRON)
            .filter(|&g| g != e && dd(b, g))
            .flat_map(|g| (0..RobertsonWegner::DODECAHEDRON).map(move |h| (g, h)))
            .find(|&(g, h)| h != e && dd(a, h) && dd(g, h))
    };
    let [a2, b2, c2, d2] = lab2;
    let (g2, h2) = pentagon(a2, ef2.0, b2).ok_or_else(|| fail("no face through A2 E2 B2".into()))?;
    // face C2 F2 D2 K2 L2: K2 ~ D2, L2 ~ C2
    let (k2, l2) = pentagon(c2, ef2.1, d2).ok_or_else(|| fail("no face through C2 F2 D2".into()))?;
    Ok(RwLabels { cube, faces: [lab1, lab2], ef: [ef1, ef2], ghkl: (g2, h2, k2, l2) })
}

/// `(3,5;5)`-babi-graph of order 28 from the Robertson-Wegner graph.
///
/// Both tetrahedral vertices of one cube are deleted, then the edges
/// `A1E1, B1E1, C1F1, D1F1` and the face paths `A2H2G2B2`, `C2L2K2D2`.
/// The edge `E1F1` is kept: deleting it would leave `E1, F1` at degree 2.
pub fn babi_3555_from_rw() -> Result<Construction> {
    let rw = robertson_wegner();
    let lab = rw_labels(&rw)?;
    let [[a1, b1, c1, d1], [a2, b2, c2, d2]] = lab.faces;
    let [(e1, f1), _] = lab.ef;
    let (g2, h2, k2, l2) = lab.ghkl;
    let mut g = rw.graph.clone();
    let removed = [(a1, e1), (b1, e1), (c1, f1), (d1, f1), (a2, h2), (h2, g2), (g2, b2), (c2, l2), (l2, k2), (k2, d2)];
    for (x, y) in removed {
        g.remove_edge(x, y)?;
    }
    let tetra = [RobertsonWegner::tetra_vertex(2 * lab.cube), RobertsonWegner::tetra_vertex(2 * lab.cube + 1)];
    delete_and_finish(
        &g,
        &tetra,
        BabiParams::new(3, 5, 5)?,
        format!(
            "Robertson-Wegner (dodecahedron 0..19, tetrahedra 20..29) minus tetrahedral vertices {tetra:?} of cube {}, \
             minus edges {removed:?}",
            lab.cube
        ),
    )
}
