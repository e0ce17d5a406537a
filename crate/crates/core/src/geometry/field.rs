//! Finite fields GF(q), q <= 32, as complete operation tables.
//!
//! Element `x` of GF(p^k) is the polynomial whose base-`p` digits (least
//! significant first) are its coefficients, reduced modulo a fixed monic
//! irreducible of degree `k`. Indices 0 and 1 are the field's zero and one.

use crate::error::{Error, Result};

pub const MAX_ORDER: u32 = 32;

/// Monic irreducible polynomials, coefficients lowest degree first,
/// leading coefficient included.
const IRREDUCIBLES: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),       // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]),    // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0, 1]), // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0, 1]), // x^5 + x^2 + 1
    (3, 2, &[1, 0, 1]),       // x^2 + 1
    (3, 3, &[1, 2, 0, 1]),    // x^3 + 2x + 1
    (5, 2, &[2, 1, 1]),       // x^2 + x + 2
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldTable {
    q: usize,
    p: u32,
    k: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    square: Vec<bool>,
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn digits(x: usize, p: u32, k: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(k as usize);
    let mut x = x as u32;
    for _ in 0..k {
        d.push(x % p);
        x /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> usize {
    d.iter().rev().fold(0, |acc, &c| acc * p + c) as usize
}

/// GF(q) for a prime power `q <= 32`; every field axiom is checked
/// exhaustively before the table is returned.
pub fn gf(q: u32) -> Result<FieldTable> {
    let (p, k) = prime_power(q).filter(|_| q <= MAX_ORDER).ok_or(Error::NotPrimePower(q))?;
    let n = q as usize;
    let modulus: &[u32] = if k == 1 {
        &[]
    } else {
        IRREDUCIBLES
            .iter()
            .find(|(pp, kk, _)| *pp == p && *kk == k)
            .map(|(_, _, m)| *m)
            .expect("irreducible polynomial table covers every q <= 32")
    };

    let mut add = vec![0u8; n * n];
    let mut mul = vec![0u8; n * n];
    for a in 0..n {
        let da = digits(a, p, k);
        for b in 0..n {
            let db = digits(b, p, k);
            let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[a * n + b] = undigits(&sum, p) as u8;

            let prod = if k == 1 {
                vec![da[0] * db[0] % p]
            } else {
                poly_mul_mod(&da, &db, modulus, p)
            };
            mul[a * n + b] = undigits(&prod, p) as u8;
        }
    }
    let neg = (0..n)
        .map(|a| (0..n).find(|&b| add[a * n + b] == 0).unwrap() as u8)
        .collect();
    let inv = (0..n)
        .map(|a| if a == 0 { 0 } else { (1..n).find(|&b| mul[a * n + b] == 1).unwrap_or(0) as u8 })
        .collect();
    let mut square = vec![false; n];
    for x in 1..n {
        square[mul[x * n + x] as usize] = true;
    }

    let field = FieldTable { q: n, p, k, add, mul, neg, inv, square };
    field.check_axioms()?;
    Ok(field)
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = a.len();
    let mut prod = vec![0u32; 2 * k - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // reduce: x^k = -(modulus[0..k])
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &m) in modulus[..k].iter().enumerate() {
            let shift = deg - k + i;
            prod[shift] = (prod[shift] + (p - m) * c) % p;
        }
    }
    prod.truncate(k);
    prod
}

impl FieldTable {
    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a] as usize)
    }

    /// Whether `a` is a non-zero square.
    pub fn is_nonzero_square(&self, a: usize) -> bool {
        self.square[a]
    }

    /// The image of the integer `m` under `Z -> GF(q)`.
    pub fn from_int(&self, m: u32) -> usize {
        (0..m % self.p).fold(0, |acc, _| self.add(acc, 1))
    }

    /// Whether `a` lies in the subfield with `order` elements.
    pub fn is_in_subfield(&self, a: usize, order: usize) -> bool {
        // x lies in GF(order) iff x^order = x
        let mut y = a;
        for _ in 1..order {
            y = self.mul(y, a);
        }
        y == a
    }

    fn check_axioms(&self) -> Result<()> {
        let q = self.q;
        let fail = |what: &str| Err(Error::Validation { name: format!("GF({q})"), reason: what.into() });
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return fail("identity laws");
            }
            if self.add(a, self.neg(a)) != 0 {
                return fail("additive inverse");
            }
            if a != 0 && self.mul(a, self.inv[a] as usize) != 1 {
                return fail("multiplicative inverse");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    {
                        return fail("associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_is_xor_and() {
        let f = gf(2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(f.add(a, b), a ^ b);
                assert_eq!(f.mul(a, b), a & b);
            }
        }
    }

    #[test]
    fn gf4_nonzero_elements_are_cube_roots_of_unity() {
        let f = gf(4).unwrap();
        for x in 1..4 {
            assert_eq!(f.mul(f.mul(x, x), x), 1);
        }
        // x^2 + x + 1 = 0 for the generator 2 ("x")
        assert_eq!(f.add(f.add(f.mul(2, 2), 2), 1), 0);
    }

    #[test]
    fn non_prime_powers_and_large_orders_are_rejected() {
        for q in [0, 1, 6, 10, 12, 15, 18, 20, 33, 49] {
            assert!(matches!(gf(q), Err(Error::NotPrimePower(_))), "q={q}");
        }
    }

    #[test]
    fn every_supported_order_builds() {
        let orders: Vec<u32> = (2..=32).filter(|&q| prime_power(q).is_some()).collect();
        assert_eq!(orders, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]);
        for q in orders {
            let f = gf(q).unwrap();
            // multiplicative group is cyclic of order q-1: some element has that order
            let has_generator = (1..f.order()).any(|g| {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = f.mul(x, g);
                    ord += 1;
                }
                ord == f.order() - 1
            });
            assert!(has_generator, "GF({q})");
        }
    }

    #[test]
    fn half_of_nonzero_elements_are_squares_in_odd_order() {
        for q in [3, 5, 7, 9, 25, 27] {
            let f = gf(q).unwrap();
            let count = (1..f.order()).filter(|&x| f.is_nonzero_square(x)).count();
            assert_eq!(count, (f.order() - 1) / 2);
        }
    }

    #[test]
    fn subfield_membership() {
        let f = gf(4).unwrap();
        let sub: Vec<usize> = (0..4).filter(|&x| f.is_in_subfield(x, 2)).collect();
        assert_eq!(sub, vec![0, 1]);
        assert_eq!(f.from_int(3), 1);
    }
}
