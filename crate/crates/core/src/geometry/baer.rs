use super::plane::{pg2, ProjectivePlane};
use crate::error::{Error, Result};

/// The Fano subplane of PG(2,4) formed by the points and lines whose
/// normalised coordinates lie in GF(2).
#[derive(Clone, Debug)]
pub struct FanoSubplane {
    pub plane: ProjectivePlane,
    /// point indices in PG(2,4)
    pub points: Vec<usize>,
    /// line indices in PG(2,4)
    pub lines: Vec<usize>,
    /// `tangents[i]` are the two lines through `points[i]` meeting the
    /// subplane only there
    pub tangents: Vec<(usize, usize)>,
}

pub fn fano_subplane_pg24() -> Result<FanoSubplane> {
    let plane = pg2(4)?;
    let in_gf2 = |i: usize| plane.coords[i].iter().all(|&c| plane.field.is_in_subfield(c, 2));
    let points: Vec<usize> = (0..plane.size()).filter(|&i| in_gf2(i)).collect();
    let lines = points.clone();
    let meets = |l: usize| plane.points_on(l).iter().filter(|p| points.contains(p)).count();

    let fail = |reason: String| Err(Error::Validation { name: "Fano subplane of PG(2,4)".into(), reason });
    if points.len() != 7 {
        return fail(format!("{} subfield points", points.len()));
    }
    for l in 0..plane.size() {
        let k = meets(l);
        if lines.contains(&l) != (k == 3) || !(k == 1 || k == 3) {
            return fail(format!("line {l} meets the subplane in {k} points"));
        }
    }
    let mut tangents = Vec::with_capacity(7);
    for &p in &points {
        let t: Vec<usize> = plane.lines_through(p).iter().copied().filter(|l| !lines.contains(l)).collect();
        if t.len() != 2 {
            return fail(format!("point {p} is on {} tangents", t.len()));
        }
        tangents.push((t[0], t[1]));
    }
    Ok(FanoSubplane { plane, points, lines, tangents })
}
