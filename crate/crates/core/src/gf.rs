//! Finite fields GF(p^k) with elements encoded as base-p integers.
//!
//! An element is the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` of its
//! coefficient vector, least-significant coefficient first. The prime
//! subfield is therefore exactly the encodings `0..p`, and the scalar action
//! of GF(p) on GF(p^k) is ordinary field multiplication by those encodings.

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// Field sizes at or below this get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Dense polynomials over GF(p), coefficient `i` multiplies `x^i`.
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub fn rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
            trim(&mut r);
        }
        r
    }
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p
/// digits of `index`.
fn monic_from_index(index: u64, deg: u32, p: u32) -> Vec<u32> {
    let mut c = Vec::with_capacity(deg as usize + 1);
    let mut x = index;
    for _ in 0..deg {
        c.push((x % p as u64) as u32);
        x /= p as u64;
    }
    c.push(1);
    c
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
pub fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() as u32 - 1;
    if deg == 0 || *m.last().unwrap() != 1 {
        return false;
    }
    for d in 1..=deg / 2 {
        for idx in 0..(p as u64).pow(d) {
            let divisor = monic_from_index(idx, d, p);
            if poly::rem_monic(m, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The first irreducible monic polynomial of degree `k` when the lower
/// coefficient vectors are ordered by their base-p encoding.
pub fn default_modulus(p: u32, k: u32) -> Vec<u32> {
    (0..(p as u64).pow(k))
        .map(|idx| monic_from_index(idx, k, p))
        .find(|m| is_irreducible(m, p))
        .expect("an irreducible polynomial of every degree exists")
}

/// GF(p^k) as a k-dimensional vector space over GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    k: u32,
    order: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

impl Field {
    /// GF(p^k) with the default modulus.
    pub fn new(p: u32, k: u32) -> Result<Field> {
        Field::with_modulus(p, k, None)
    }

    /// GF(p^k) reduced modulo `modulus` (coefficients low to high, monic).
    pub fn with_modulus(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidParameters(
                "extension degree must be >= 1".into(),
            ));
        }
        let order = (p as u64)
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, k })? as u32;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m.iter().any(|&c| c >= p) || !is_irreducible(&m, p)
                {
                    return Err(Error::ReducibleModulus { degree: k });
                }
                m
            }
            None => default_modulus(p, k),
        };
        let mut field = Field {
            p,
            k,
            order,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.order;
        if q <= ADD_TABLE_LIMIT {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = self.add_digits(a, b);
                }
            }
            self.add_table = Some(t);
        }
        let group = q - 1;
        let factors = prime_factors(group.max(1));
        let generator = (1..q)
            .find(|&g| {
                group == 1
                    || factors
                        .iter()
                        .all(|&r| self.pow_slow(g, (group / r) as u64) != 1)
            })
            .expect("multiplicative group is cyclic");
        self.exp = Vec::with_capacity(group as usize);
        self.log = vec![0; q as usize];
        let mut x = 1u32;
        for i in 0..group {
            self.exp.push(x);
            self.log[x as usize] = i;
            x = self.mul_slow(x, generator);
        }
    }

    fn to_poly(&self, a: u32) -> Vec<u32> {
        let mut c = Vec::with_capacity(self.k as usize);
        let mut x = a;
        for _ in 0..self.k {
            c.push(x % self.p);
            x /= self.p;
        }
        poly::trim(&mut c);
        c
    }

    fn from_poly(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let prod = poly::mul(&self.to_poly(a), &self.to_poly(b), self.p);
        self.from_poly(&poly::rem_monic(&prod, &self.modulus, self.p))
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Number of elements, `p^k`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.order
    }

    /// Prime subfield elements; these are also the scalars of the vector-space view.
    pub fn scalars(&self) -> std::ops::Range<u32> {
        0..self.p
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.order
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.order && b < self.order);
        match &self.add_table {
            Some(t) => t[(a * self.order + b) as usize],
            None => self.add_digits(a, b),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut x = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.k {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.order && b < self.order);
        if a == 0 || b == 0 {
            return 0;
        }
        let group = self.order - 1;
        let e = (self.log[a as usize] + self.log[b as usize]) % group;
        self.exp[e as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 || a >= self.order {
            return None;
        }
        let group = self.order - 1;
        Some(self.exp[((group - self.log[a as usize]) % group) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let group = (self.order - 1) as u64;
        let l = (self.log[a as usize] as u64 * (e % group)) % group;
        self.exp[l as usize]
    }

    /// Action of the prime-subfield scalar `alpha` on `v`.
    pub fn scale(&self, alpha: u32, v: u32) -> u32 {
        debug_assert!(alpha < self.p);
        self.mul(alpha, v)
    }

    /// `sum_i coeffs[i] * xs[i]`.
    pub fn dot(&self, coeffs: &[u32], xs: &[u32]) -> u32 {
        coeffs
            .iter()
            .zip(xs)
            .fold(0, |acc, (&c, &x)| self.add(acc, self.mul(c, x)))
    }

    /// The affine line `{a + alpha v : alpha in GF(p)}`.
    pub fn line(&self, base: u32, direction: u32) -> Result<Line> {
        if !self.contains(base) {
            return Err(Error::NotAnElement(base));
        }
        if !self.contains(direction) {
            return Err(Error::NotAnElement(direction));
        }
        if direction == 0 {
            return Err(Error::ZeroDirection);
        }
        let points = self
            .scalars()
            .map(|alpha| self.add(base, self.scale(alpha, direction)))
            .collect();
        Ok(Line {
            base,
            direction,
            points,
        })
    }

    /// Whether `v` is the canonical representative of its class
    /// `GF(p)^* v`: its most significant nonzero digit equals 1, which is
    /// also the least encoding in the class.
    pub fn is_canonical_direction(&self, v: u32) -> bool {
        if v == 0 || v >= self.order {
            return false;
        }
        let mut x = v;
        while x >= self.p {
            x /= self.p;
        }
        x == 1
    }

    /// One direction per 1-dimensional GF(p)-subspace, ascending.
    pub fn canonical_directions(&self) -> Vec<u32> {
        self.elements()
            .filter(|&v| self.is_canonical_direction(v))
            .collect()
    }
}

/// A 1-dimensional affine GF(p)-subspace of GF(p^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    base: u32,
    direction: u32,
    points: Vec<u32>,
}

impl Line {
    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn direction(&self) -> u32 {
        self.direction
    }

    /// Points indexed by the scalar `alpha`.
    pub fn points(&self) -> &[u32] {
        &self.points
    }

    pub fn contains(&self, x: u32) -> bool {
        self.points.contains(&x)
    }

    /// The scalar `alpha` with `x = base + alpha * direction`.
    pub fn position(&self, x: u32) -> Option<usize> {
        self.points.iter().position(|&y| y == x)
    }

    /// Point set in ascending order.
    pub fn sorted_points(&self) -> Vec<u32> {
        let mut s = self.points.clone();
        s.sort_unstable();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Schoolbook GF(p)[x]/(m) multiplication, independent of the log tables.
    fn oracle_mul(a: u32, b: u32, p: u32, m: &[u32]) -> u32 {
        let k = m.len() - 1;
        let digits = |mut x: u32| {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect::<Vec<_>>()
        };
        let (da, db) = (digits(a), digits(b));
        let mut prod = vec![0u32; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c != 0 {
                for i in 0..=k {
                    let pos = deg - k + i;
                    prod[pos] = (prod[pos] + p * p - c * m[i]) % p;
                }
            }
        }
        (0..k).rev().fold(0, |acc, i| acc * p + prod[i])
    }

    #[test]
    fn gf3_arithmetic() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.add(2, 2), 1);
        assert_eq!(f.mul(2, 2), 1);
        assert_eq!(f.neg(1), 2);
        assert_eq!(f.inv(2), Some(2));
    }

    #[test]
    fn gf4_x_times_x() {
        let f = Field::with_modulus(2, 2, Some(vec![1, 1, 1])).unwrap();
        assert_eq!(oracle_mul(2, 2, 2, &[1, 1, 1]), 3);
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn gf9_group_order() {
        let f = Field::new(3, 2).unwrap();
        for e in 1..9 {
            let mut acc = 1;
            for _ in 0..8 {
                acc = f.mul(acc, e);
            }
            assert_eq!(acc, 1, "e={e}");
        }
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 2), vec![1, 1, 1]);
        assert_eq!(default_modulus(3, 2), vec![1, 0, 1]);
        assert_eq!(default_modulus(2, 4), vec![1, 1, 0, 0, 1]);
    }

    #[test]
    fn tables_agree_with_schoolbook() {
        for &(p, k) in &[
            (2, 2),
            (2, 3),
            (3, 2),
            (2, 4),
            (5, 2),
            (3, 3),
            (7, 2),
            (2, 8),
        ] {
            let f = Field::new(p, k).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), oracle_mul(a, b, p, f.modulus()));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for &(p, k) in &[(2, 3), (3, 2), (5, 1), (2, 4)] {
            let f = Field::new(p, k).unwrap();
            for a in f.elements() {
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn large_field_without_add_table() {
        let f = Field::new(3, 7).unwrap();
        assert!(f.add_table.is_none());
        assert_eq!(f.order(), 2187);
        for a in (1..f.order()).step_by(97) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            assert_eq!(f.sub(f.add(a, 5), 5), a);
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(
            Field::with_modulus(2, 2, Some(vec![1, 0, 1])),
            Err(Error::ReducibleModulus { degree: 2 })
        );
        assert!(matches!(
            Field::new(2, 21),
            Err(Error::FieldTooLarge { .. })
        ));
    }

    #[test]
    fn lines() {
        let f = Field::new(3, 2).unwrap();
        for a in f.elements() {
            for v in 1..9 {
                let l = f.line(a, v).unwrap();
                assert_eq!(l.points().len(), 3);
                assert_eq!(l.points()[0], a);
                // L(a, v) = L(a, alpha v) for alpha != 0
                assert_eq!(
                    l.sorted_points(),
                    f.line(a, f.scale(2, v)).unwrap().sorted_points()
                );
            }
            let through: BTreeSet<Vec<u32>> = (1..9)
                .map(|v| f.line(a, v).unwrap().sorted_points())
                .collect();
            assert_eq!(through.len(), 4);
            // the lines through a partition the other 8 points
            let mut others: Vec<u32> = through
                .iter()
                .flatten()
                .copied()
                .filter(|&x| x != a)
                .collect();
            others.sort_unstable();
            assert_eq!(others, f.elements().filter(|&x| x != a).collect::<Vec<_>>());
        }
        let g4 = Field::new(2, 2).unwrap();
        assert_eq!(g4.line(0, 1).unwrap().sorted_points(), vec![0, 1]);
        assert_eq!(f.line(0, 0), Err(Error::ZeroDirection));
        assert_eq!(f.canonical_directions().len(), 4);
        assert_eq!(Field::new(2, 4).unwrap().canonical_directions().len(), 15);
        assert_eq!(Field::new(5, 2).unwrap().canonical_directions().len(), 6);
    }
}
