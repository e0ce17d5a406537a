//! Closed-form bounds on `n_bb(r, s; g)` and on regular cages, in exact
//! integer arithmetic.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Exact,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub value: u64,
    pub kind: BoundKind,
    pub source: &'static str,
}

impl BoundResult {
    fn lower(value: u64, source: &'static str) -> Self {
        BoundResult { value, kind: BoundKind::Lower, source }
    }

    fn exact(value: u64, source: &'static str) -> Self {
        BoundResult { value, kind: BoundKind::Exact, source }
    }
}

fn overflow() -> Error {
    Error::InvalidParams("bound does not fit in 64 bits".into())
}

fn pow(base: u64, exp: u64) -> Result<u64> {
    base.checked_pow(u32::try_from(exp).map_err(|_| overflow())?).ok_or_else(overflow)
}

/// `sum_{i=lo}^{hi} base^i`, zero for an empty range.
fn geometric_sum(base: u64, lo: u64, hi: u64) -> Result<u64> {
    (lo..=hi).try_fold(0u64, |acc, i| acc.checked_add(pow(base, i)?).ok_or_else(overflow))
}

fn check_rs(r: usize, s: usize) -> Result<()> {
    if r < 2 || r >= s {
        return Err(Error::InvalidParams(format!("need 2 <= r < s, got r={r}, s={s}")));
    }
    Ok(())
}

/// Moore bound `n0(k, g)` for `k`-regular graphs of girth `g`.
pub fn moore(k: usize, g: usize) -> Result<BoundResult> {
    if k < 3 || g < 3 {
        return Err(Error::InvalidParams(format!("Moore bound needs k >= 3 and g >= 3, got k={k}, g={g}")));
    }
    let (k, g) = (k as u64, g as u64);
    let numerator = if g % 2 == 1 {
        k.checked_mul(pow(k - 1, (g - 1) / 2)?).ok_or_else(overflow)? - 2
    } else {
        2u64.checked_mul(pow(k - 1, g / 2)?).ok_or_else(overflow)? - 2
    };
    assert_eq!(numerator % (k - 2), 0, "Moore bound numerator must be divisible by k-2");
    Ok(BoundResult::lower(numerator / (k - 2), "moore"))
}

/// The Moore-tree lower bound for `(r, s; g)`-babi-graphs.
pub fn babi_lower(r: usize, s: usize, g: usize) -> Result<BoundResult> {
    check_rs(r, s)?;
    if g < 3 {
        return Err(Error::InvalidParams(format!("girth must be at least 3, got {g}")));
    }
    let (r, s, g) = (r as u64, s as u64, g as u64);
    let core = r * s + (s - r) * (s - r);
    let value = match g {
        3 => 1 + s,
        4 => 2 * s,
        _ if g % 2 == 1 => {
            let tail = geometric_sum(r - 1, 0, (g - 5) / 2)?;
            (core - s).checked_mul(tail).and_then(|x| x.checked_add(1 + s)).ok_or_else(overflow)?
        }
        _ => {
            let tail = geometric_sum(r - 1, 0, (g - 6) / 2)?;
            (core - 2 * s + 1)
                .checked_mul(tail)
                .and_then(|x| x.checked_add(s))
                .and_then(|x| x.checked_mul(2))
                .ok_or_else(overflow)?
        }
    };
    Ok(BoundResult::lower(value, "babi moore tree"))
}

/// Smallest order `>= v` a babi-graph can have: even, and divisible by 4
/// when `s - r` is odd.
pub fn round_to_admissible(v: u64, r: usize, s: usize) -> u64 {
    let step = if (s - r) % 2 == 1 { 4 } else { 2 };
    v.div_ceil(step) * step
}

/// [`babi_lower`] made strict where the equality case is impossible
/// (`g = 5, 6`) and rounded up to an admissible order.
pub fn babi_lower_sharpened(r: usize, s: usize, g: usize) -> Result<BoundResult> {
    let base = babi_lower(r, s, g)?.value;
    let strict = matches!(g, 5 | 6) && !equality56_feasible(r, s, g)?.feasible;
    let value = round_to_admissible(base + u64::from(strict), r, s);
    Ok(BoundResult::lower(value, "babi moore tree, strict unless equality is feasible, parity"))
}

/// Exact `n_bb(r, s; 3)`.
pub fn babi_g3_exact(r: usize, s: usize) -> Result<BoundResult> {
    check_rs(r, s)?;
    let (r, s) = (r as u64, s as u64);
    let value = if s + 1 >= 2 * r {
        2 * (s - r + 1)
    } else {
        s + g3_offset(r, s)
    };
    Ok(BoundResult::exact(value, "girth 3 exact"))
}

/// The `i` with `n_bb(r, s; 3) = s + i` when `2r > s + 1`.
pub(crate) fn g3_offset(r: u64, s: u64) -> u64 {
    match (s % 4, r % 2 == 1) {
        (3, _) | (1, true) => 1,
        (2, _) | (0, false) => 2,
        (1, false) => 3,
        (0, true) => 4,
        _ => unreachable!(),
    }
}

/// Exact `n_bb(r, s; 4)`.
pub fn babi_g4_exact(r: usize, s: usize) -> Result<BoundResult> {
    check_rs(r, s)?;
    let (r, s) = (r as u64, s as u64);
    let value = if s >= 2 * r {
        4 * (s - r)
    } else if s % 2 == 0 {
        2 * s
    } else {
        2 * (s + 1)
    };
    Ok(BoundResult::exact(value, "girth 4 exact"))
}

/// Lower bound for `(r, r+1; 5)`-babi-graphs, `r > 2`.
pub fn semireg5_lower(r: usize) -> Result<BoundResult> {
    if r <= 2 {
        return Err(Error::InvalidParams(format!("semi-regular girth 5 bound needs r > 2, got {r}")));
    }
    let r = r as u64;
    let extra = if matches!(r % 4, 0 | 3) { 4 } else { 6 };
    Ok(BoundResult::lower(r * r + r + extra, "semi-regular girth 5"))
}

/// Lower bound for `(r, r+1; 6)`-babi-graphs, `r >= 2`.
pub fn semireg6_lower(r: usize) -> Result<BoundResult> {
    if r < 2 {
        return Err(Error::InvalidParams(format!("semi-regular girth 6 bound needs r >= 2, got {r}")));
    }
    let r = r as u64;
    let extra = match r {
        2 | 4 | 6 => 2,
        _ if r % 2 == 1 => 3,
        _ => 4,
    };
    Ok(BoundResult::lower(2 * (r * r + extra), "semi-regular girth 6"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Feasibility {
    pub feasible: bool,
    /// the `d` solving the girth-6 equation, when one exists
    pub witness: Option<u64>,
}

/// Necessary conditions for the Moore-tree bound to be attained at
/// `g = 5` or `g = 6`. They do not assert that such a graph exists.
///
/// For `g = 5` the fat-vertex count forces
/// `2((s-r)^2 + r^2 - r + 1) = rs + (s-r)^2 + 1`. For `g = 6` some integer
/// `0 <= d <= min(r, s-r-1)` must solve `s^2 - (3r+1)s + 4r^2 - 2d^2 + 1 = 0`
/// with `8d^2 > 7r^2 - 6r + 3` and `s < 2r - 2`.
pub fn equality56_feasible(r: usize, s: usize, g: usize) -> Result<Feasibility> {
    check_rs(r, s)?;
    let (r, s) = (r as i128, s as i128);
    match g {
        5 => {
            let feasible = 2 * ((s - r) * (s - r) + r * r - r + 1) == r * s + (s - r) * (s - r) + 1;
            Ok(Feasibility { feasible, witness: None })
        }
        6 => {
            if s >= 2 * r - 2 {
                return Ok(Feasibility { feasible: false, witness: None });
            }
            let witness = (0..=r.min(s - r - 1)).find(|&d| {
                s * s - (3 * r + 1) * s + 4 * r * r - 2 * d * d + 1 == 0 && 8 * d * d > 7 * r * r - 6 * r + 3
            });
            Ok(Feasibility { feasible: witness.is_some(), witness: witness.map(|d| d as u64) })
        }
        _ => Err(Error::InvalidParams(format!("equality conditions are defined for g = 5, 6 only, got {g}"))),
    }
}

/// General upper bound `32 (sum_{t=1}^{g-2} (r-1)^t)(sum_{t=1}^{g-2} (s-1)^t)`.
pub fn babi_upper(r: usize, s: usize, g: usize) -> Result<BoundResult> {
    check_rs(r, s)?;
    if g < 3 {
        return Err(Error::InvalidParams(format!("girth must be at least 3, got {g}")));
    }
    let hi = g as u64 - 2;
    let a = geometric_sum(r as u64 - 1, 1, hi)?;
    let b = geometric_sum(s as u64 - 1, 1, hi)?;
    let value = a.checked_mul(b).and_then(|x| x.checked_mul(32)).ok_or_else(overflow)?;
    Ok(BoundResult { value, kind: BoundKind::Upper, source: "switching composition of cages" })
}

/// Least number of fat edges in a babi-graph of order `v`: `ceil(v(s-r)/4)`.
pub fn fat_edge_lower(v: usize, r: usize, s: usize) -> Result<u64> {
    check_rs(r, s)?;
    if v % 2 == 1 {
        return Err(Error::InvalidParams(format!("babi-graphs have even order, got {v}")));
    }
    Ok(((v * (s - r)) as u64).div_ceil(4))
}

/// Inclusive caps on the fat and thin edge counts of an
/// `(r, r+1; 6)`-babi-graph of order `v = 2r^2 + c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusCaps {
    pub c: u64,
    pub v: u64,
    /// `f <= cv/8`
    pub fat_max: u64,
    /// `t <= (c-2)v/8`
    pub thin_max: u64,
    /// set for `r = 2`, where the strict form `f < cv/8` is known to fail
    pub note: Option<&'static str>,
}

pub fn census_caps(v: usize, r: usize, c: usize) -> Result<CensusCaps> {
    if v % 2 == 1 {
        return Err(Error::InvalidParams(format!("babi-graphs have even order, got {v}")));
    }
    if c <= 2 || r < 2 || v != 2 * r * r + c {
        return Err(Error::InvalidParams(format!("need c > 2 and v = 2r^2 + c, got v={v}, r={r}, c={c}")));
    }
    let (c, v) = (c as u64, v as u64);
    Ok(CensusCaps {
        c,
        v,
        fat_max: c * v / 8,
        thin_max: (c - 2) * v / 8,
        note: (r == 2).then_some("r = 2: the 12-vertex (2,3;6) cage attains both caps, so they cannot be strict"),
    })
}

/// Every bound that applies to `(r, s; g)`, keyed by name.
pub fn all_bounds(r: usize, s: usize, g: usize) -> Result<Vec<(&'static str, BoundResult)>> {
    let mut out = vec![
        ("babi_lower", babi_lower(r, s, g)?),
        ("babi_lower_sharpened", babi_lower_sharpened(r, s, g)?),
        ("babi_upper", babi_upper(r, s, g)?),
    ];
    for (name, k) in [("moore_r", r), ("moore_s", s)] {
        if k >= 3 {
            out.push((name, moore(k, g)?));
        }
    }
    match g {
        3 => out.push(("babi_g3_exact", babi_g3_exact(r, s)?)),
        4 => out.push(("babi_g4_exact", babi_g4_exact(r, s)?)),
        5 if s == r + 1 && r > 2 => out.push(("semireg5_lower", semireg5_lower(r)?)),
        6 if s == r + 1 => out.push(("semireg6_lower", semireg6_lower(r)?)),
        _ => {}
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moore_values() {
        assert_eq!(moore(3, 5).unwrap().value, 10);
        assert_eq!(moore(5, 6).unwrap().value, 42);
        assert_eq!(moore(7, 5).unwrap().value, 50);
        assert_eq!(moore(3, 6).unwrap().value, 14);
        assert!(moore(2, 5).is_err());
    }

    #[test]
    fn lower_bound_cases() {
        assert_eq!(babi_lower(2, 3, 5).unwrap().value, 8);
        assert_eq!(babi_lower(2, 3, 3).unwrap().value, 4);
        assert_eq!(babi_lower(3, 5, 4).unwrap().value, 10);
        assert_eq!(babi_lower(11, 14, 5).unwrap().value, 164);
        assert_eq!(babi_lower(19, 23, 5).unwrap().value, 454);
        // even g = 6: 2(s + rs + (s-r)^2 - 2s + 1)
        assert_eq!(babi_lower(2, 3, 6).unwrap().value, 2 * (3 + 6 + 1 - 6 + 1));
        assert!(babi_lower(1, 3, 5).is_err());
    }

    #[test]
    fn sharpened_bounds() {
        assert_eq!(babi_lower_sharpened(2, 3, 5).unwrap().value, 8);
        assert_eq!(babi_lower_sharpened(11, 14, 5).unwrap().value, 168);
        assert_eq!(babi_lower_sharpened(19, 23, 5).unwrap().value, 456);
        assert_eq!(babi_lower_sharpened(2, 4, 5).unwrap().value, 14);
        assert_eq!(babi_lower_sharpened(2, 3, 6).unwrap().value, 12);
    }

    #[test]
    fn exact_small_girths() {
        assert_eq!(babi_g3_exact(2, 5).unwrap().value, 8);
        assert_eq!(babi_g3_exact(3, 4).unwrap().value, 8);
        assert_eq!(babi_g3_exact(4, 5).unwrap().value, 8);
        assert_eq!(babi_g4_exact(2, 4).unwrap().value, 8);
        assert_eq!(babi_g4_exact(3, 4).unwrap().value, 8);
        assert_eq!(babi_g4_exact(4, 5).unwrap().value, 12);
    }

    #[test]
    fn semiregular_tables() {
        assert_eq!(semireg5_lower(3).unwrap().value, 16);
        assert_eq!(semireg5_lower(4).unwrap().value, 24);
        assert_eq!(semireg5_lower(5).unwrap().value, 36);
        assert_eq!(semireg5_lower(6).unwrap().value, 48);
        assert!(semireg5_lower(2).is_err());
        assert_eq!(semireg6_lower(2).unwrap().value, 12);
        assert_eq!(semireg6_lower(5).unwrap().value, 56);
        assert_eq!(semireg6_lower(8).unwrap().value, 136);
    }

    #[test]
    fn equality_conditions() {
        assert!(equality56_feasible(2, 3, 5).unwrap().feasible);
        assert!(!equality56_feasible(3, 4, 5).unwrap().feasible);
        for r in 2..30 {
            assert!(!equality56_feasible(r, 2 * r, 6).unwrap().feasible);
        }
    }

    #[test]
    fn caps_and_fat_edges() {
        assert_eq!(fat_edge_lower(8, 2, 3).unwrap(), 2);
        assert_eq!(fat_edge_lower(240, 11, 14).unwrap(), 180);
        assert!(fat_edge_lower(7, 2, 3).is_err());
        let caps = census_caps(12, 2, 4).unwrap();
        assert_eq!((caps.fat_max, caps.thin_max), (6, 3));
        assert!(caps.note.is_some());
        assert!(census_caps(12, 2, 5).is_err());
    }

    #[test]
    fn upper_bound_dominates_lower() {
        for g in 3..8 {
            for r in 2..6 {
                for s in r + 1..8 {
                    let lo = babi_lower(r, s, g).unwrap().value;
                    let hi = babi_upper(r, s, g).unwrap().value;
                    assert!(lo <= hi, "({r},{s};{g})");
                }
            }
        }
    }
}
