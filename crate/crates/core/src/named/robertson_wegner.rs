//! The Robertson-Wegner (5,5)-cage from the regular dodecahedron.
//!
//! Coordinates live in `Z[phi]` with `phi^2 = phi + 1`, so every distance
//! comparison is exact.

use std::ops::{Add, Mul, Neg, Sub};

use crate::graph::Graph;

/// `a + b phi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZPhi(pub i64, pub i64);

impl ZPhi {
    pub const ZERO: ZPhi = ZPhi(0, 0);
    pub const ONE: ZPhi = ZPhi(1, 0);
    pub const PHI: ZPhi = ZPhi(0, 1);
    /// `1/phi = phi - 1`
    pub const PHI_INV: ZPhi = ZPhi(-1, 1);
}

impl Add for ZPhi {
    type Output = ZPhi;
    fn add(self, o: ZPhi) -> ZPhi {
        ZPhi(self.0 + o.0, self.1 + o.1)
    }
}

impl Sub for ZPhi {
    type Output = ZPhi;
    fn sub(self, o: ZPhi) -> ZPhi {
        ZPhi(self.0 - o.0, self.1 - o.1)
    }
}

impl Neg for ZPhi {
    type Output = ZPhi;
    fn neg(self) -> ZPhi {
        ZPhi(-self.0, -self.1)
    }
}

impl Mul for ZPhi {
    type Output = ZPhi;
    fn mul(self, o: ZPhi) -> ZPhi {
        let bd = self.1 * o.1;
        ZPhi(self.0 * o.0 + bd, self.0 * o.1 + self.1 * o.0 + bd)
    }
}

pub type Point3 = [ZPhi; 3];

fn dist2(a: &Point3, b: &Point3) -> ZPhi {
    (0..3).fold(ZPhi::ZERO, |acc, i| {
        let d = a[i] - b[i];
        acc + d * d
    })
}

/// Squared edge length of the dodecahedron with these coordinates, `(2/phi)^2`.
pub const EDGE2: ZPhi = ZPhi(8, -4);
const CUBE_EDGE2: ZPhi = ZPhi(4, 0);
const CUBE_FACE2: ZPhi = ZPhi(8, 0);
const CUBE_BODY2: ZPhi = ZPhi(12, 0);

/// The graph together with the geometry it came from.
#[derive(Clone, Debug)]
pub struct RobertsonWegner {
    /// vertices `0..20` are the dodecahedron, `20..30` the tetrahedra
    pub graph: Graph,
    pub coords: Vec<Point3>,
    /// the five inscribed cubes, vertex sets sorted
    pub cubes: Vec<[usize; 8]>,
    /// `tetrahedra[t]` are the corners of tetrahedral vertex `20 + t`;
    /// tetrahedra `2c` and `2c + 1` come from cube `c`
    pub tetrahedra: Vec<[usize; 4]>,
}

impl RobertsonWegner {
    pub const DODECAHEDRON: usize = 20;

    pub fn tetra_vertex(t: usize) -> usize {
        Self::DODECAHEDRON + t
    }

    pub fn dist2(&self, a: usize, b: usize) -> ZPhi {
        dist2(&self.coords[a], &self.coords[b])
    }

    /// Whether `a` and `b` are adjacent vertices of cube `c`.
    pub fn cube_edge(&self, a: usize, b: usize) -> bool {
        self.dist2(a, b) == CUBE_EDGE2
    }

    pub fn dodecahedron_edge(&self, a: usize, b: usize) -> bool {
        a < Self::DODECAHEDRON && b < Self::DODECAHEDRON && self.dist2(a, b) == EDGE2
    }
}

fn dodecahedron_coords() -> Vec<Point3> {
    let one = ZPhi::ONE;
    let signs = |x: ZPhi| if x == ZPhi::ZERO { vec![x] } else { vec![x, -x] };
    let mut pts = Vec::with_capacity(20);
    for x in signs(one) {
        for y in signs(one) {
            for z in signs(one) {
                pts.push([x, y, z]);
            }
        }
    }
    // cyclic shifts of (0, 1/phi, phi)
    let base = [ZPhi::ZERO, ZPhi::PHI_INV, ZPhi::PHI];
    for shift in 0..3 {
        let c = [base[shift % 3], base[(shift + 1) % 3], base[(shift + 2) % 3]];
        for x in signs(c[0]) {
            for y in signs(c[1]) {
                for z in signs(c[2]) {
                    pts.push([x, y, z]);
                }
            }
        }
    }
    pts
}

/// 8-subsets whose pairwise squared distances are cube distances, each
/// vertex having exactly three cube neighbours.
fn find_cubes(coords: &[Point3]) -> Vec<[usize; 8]> {
    let n = coords.len();
    let compatible = |a: usize, b: usize| {
        let d = dist2(&coords[a], &coords[b]);
        d == CUBE_EDGE2 || d == CUBE_FACE2 || d == CUBE_BODY2
    };
    let mut cubes = Vec::new();
    let mut current = Vec::with_capacity(8);
    fn extend(
        start: usize,
        n: usize,
        current: &mut Vec<usize>,
        compatible: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<[usize; 8]>,
    ) {
        if current.len() == 8 {
            out.push(current.as_slice().try_into().unwrap());
            return;
        }
        for v in start..n {
            if current.iter().all(|&u| compatible(u, v)) {
                current.push(v);
                extend(v + 1, n, current, compatible, out);
                current.pop();
            }
        }
    }
    extend(0, n, &mut current, &compatible, &mut cubes);
    cubes.retain(|cube| {
        cube.iter().all(|&a| {
            cube.iter().filter(|&&b| dist2(&coords[a], &coords[b]) == CUBE_EDGE2).count() == 3
        })
    });
    cubes
}

/// Splits a cube into its two inscribed tetrahedra (the colour classes of
/// the cube graph), the one holding the cube's smallest vertex first.
fn tetrahedra_of(cube: &[usize; 8], coords: &[Point3]) -> [[usize; 4]; 2] {
    let mut side = [None; 8];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..8 {
            if dist2(&coords[cube[i]], &coords[cube[j]]) == CUBE_EDGE2 && side[j].is_none() {
                side[j] = Some(!side[i].unwrap());
                stack.push(j);
            }
        }
    }
    let pick = |s: bool| -> [usize; 4] {
        let v: Vec<usize> = (0..8).filter(|&i| side[i] == Some(s)).map(|i| cube[i]).collect();
        v.try_into().expect("a cube splits 4 + 4")
    };
    [pick(false), pick(true)]
}

pub fn robertson_wegner() -> RobertsonWegner {
    let mut coords = dodecahedron_coords();
    let n = RobertsonWegner::DODECAHEDRON;
    assert_eq!(coords.len(), n);
    let cubes = find_cubes(&coords);
    assert_eq!(cubes.len(), 5, "a dodecahedron holds five cubes");

    let mut g = Graph::new(n + 2 * cubes.len());
    for a in 0..n {
        for b in a + 1..n {
            if dist2(&coords[a], &coords[b]) == EDGE2 {
                g.add_edge(a, b);
            }
        }
    }
    let mut tetrahedra = Vec::with_capacity(10);
    for cube in &cubes {
        let pair = tetrahedra_of(cube, &coords);
        let (t0, t1) = (n + tetrahedra.len(), n + tetrahedra.len() + 1);
        for (t, corners) in [(t0, &pair[0]), (t1, &pair[1])] {
            for &c in corners.iter() {
                g.add_edge(t, c);
            }
        }
        g.add_edge(t0, t1);
        tetrahedra.extend(pair);
    }
    // tetrahedral vertices sit at the origin; they take no part in distances
    coords.extend(std::iter::repeat_n([ZPhi::ZERO; 3], tetrahedra.len()));

    let rw = RobertsonWegner { graph: g, coords, cubes, tetrahedra };
    super::entry("robertson-wegner")
        .and_then(|e| e.validate(&rw.graph))
        .unwrap_or_else(|e| panic!("built-in graph is wrong: {e}"));
    rw
}
