//! Exact babi-cages of girth 3 and 4.

use super::{finish, Construction};
use crate::bounds::g3_offset;
use crate::error::{Error, Result};
use crate::graph::{BabiParams, Graph};

fn check(r: usize, s: usize) -> Result<()> {
    if r < 2 || r >= s {
        return Err(Error::InvalidParams(format!("need 2 <= r < s, got r={r}, s={s}")));
    }
    Ok(())
}

/// 1-factors of `K_n`, `n` even, by the round-robin rule: factor `k` pairs
/// `n-1` with `k` and `k+i` with `k-i` (mod `n-1`).
pub(crate) fn one_factor(n: usize, k: usize) -> Vec<(usize, usize)> {
    let m = n - 1;
    let mut f = vec![(k, m)];
    for i in 1..n / 2 {
        f.push(((k + i) % m, (k + m - i) % m));
    }
    f
}

/// Hamilton cycles of `K_n`, `n = 2m+1` odd (Walecki): cycle `k` visits
/// `n-1`, then `k, k+1, k-1, k+2, k-2, ..., k+m` (mod `2m`).
pub(crate) fn hamilton_cycle(n: usize, k: usize) -> Vec<usize> {
    let m2 = n - 1;
    let m = m2 / 2;
    let mut seq = vec![n - 1, k % m2];
    for i in 1..m {
        seq.push((k + i) % m2);
        seq.push((k + m2 - i) % m2);
    }
    seq.push((k + m) % m2);
    seq
}

/// Exact `(r, s; 3)`-babi-cage.
///
/// When `s + 1 >= 2r`: `K_{s-r+1}` on `u_0..`, and `w_i ~ u_{i+j}` for
/// `j < r` (indices mod `s-r+1`). Otherwise `K_{s+i}` split into halves `U`,
/// `W`; `i-1` perfect matchings of `U x W` and then `s-r` 1-factors (or
/// `(s-r)/2` Hamilton cycles when `|W|` is odd) of `K_W` are removed.
pub fn babi_g3(r: usize, s: usize) -> Result<Construction> {
    check(r, s)?;
    let p = BabiParams::new(r, s, 3)?;
    if s + 1 >= 2 * r {
        let m = s - r + 1;
        let mut g = Graph::new(2 * m);
        for a in 0..m {
            for b in a + 1..m {
                g.add_edge(a, b);
            }
            for j in 0..r {
                g.add_edge(m + a, (a + j) % m);
            }
        }
        return finish(g, p, format!("babi_g3({r},{s}): K_{m} on u_0..u_{} with w_i ~ u_(i+j mod {m}), j < {r}", m - 1));
    }

    let i = g3_offset(r as u64, s as u64) as usize;
    let v = s + i;
    let h = v / 2;
    let mut g = Graph::new(v);
    for a in 0..v {
        for b in a + 1..v {
            g.add_edge(a, b);
        }
    }
    for t in 0..i - 1 {
        for a in 0..h {
            g.remove_edge(a, h + (a + t) % h)?;
        }
    }
    let how = if h.is_multiple_of(2) {
        for k in 0..s - r {
            for (a, b) in one_factor(h, k) {
                g.remove_edge(h + a, h + b)?;
            }
        }
        format!("{} round-robin 1-factors", s - r)
    } else {
        for k in 0..(s - r) / 2 {
            let c = hamilton_cycle(h, k);
            for idx in 0..c.len() {
                g.remove_edge(h + c[idx], h + c[(idx + 1) % c.len()])?;
            }
        }
        format!("{} Walecki Hamilton cycles", (s - r) / 2)
    };
    finish(
        g,
        p,
        format!("babi_g3({r},{s}): K_{v} minus {} perfect matchings u_a w_(a+t) of U x W, minus {how} of K_W", i - 1),
    )
}

/// Complete bipartite graph on `U = {u_0.., x_1..}` and `L = {w_0.., y_1..}`
/// (`s/2` of each) minus `u_i w_{i+j}`, `j < s-r`.
fn gamma2(r: usize, s: usize) -> (Graph, usize) {
    let e = s / 2;
    // u_i = i, x_i = e + i - 1, w_i = 2e + i, y_i = 3e + i - 1
    let mut g = Graph::new(4 * e);
    for a in 0..2 * e {
        for b in 2 * e..4 * e {
            g.add_edge(a, b);
        }
    }
    for i in 0..e {
        for j in 0..s - r {
            g.remove_edge(i, 2 * e + (i + j) % e).expect("edge of the complete bipartite graph");
        }
    }
    (g, e)
}

/// Exact `(r, s; 4)`-babi-cage, in the three cases `s >= 2r`,
/// `2r > s` with `s` even, and `2r > s` with `s` odd.
pub fn babi_g4(r: usize, s: usize) -> Result<Construction> {
    check(r, s)?;
    let p = BabiParams::new(r, s, 4)?;
    if s >= 2 * r {
        let d = s - r;
        // u_i = i, x_i = d + i - 1, w_i = 2d + i, y_i = 3d + i - 1
        let (x, y) = (|i: usize| d + i - 1, |i: usize| 3 * d + i - 1);
        let (u, w) = (|i: usize| i % d, |i: usize| 2 * d + i % d);
        let mut g = Graph::new(4 * d);
        for i in 1..=d {
            for j in 1..=d {
                g.add_edge(x(i), y(j));
            }
            for j in 0..r {
                g.add_edge(x(i), w(d + i + j));
                g.add_edge(y(i), u(d + i + j));
            }
        }
        return finish(g, p, format!("babi_g4({r},{s}): K_{d},{d} on x/y, x_i ~ w_(i+j), y_i ~ u_(i+j), j < {r}"));
    }
    if s.is_multiple_of(2) {
        let (g, _) = gamma2(r, s);
        return finish(g, p, format!("babi_g4({r},{s}): K_{s},{s} minus u_i w_(i+j), j < {}", s - r));
    }
    let (mut g, e) = gamma2(r, s + 1);
    for i in 1..=e {
        g.remove_edge(e + i - 1, 3 * e + i - 1)?;
    }
    finish(
        g,
        p,
        format!("babi_g4({r},{s}): the s+1 = {} graph with all x_i y_i removed", s + 1),
    )
}
