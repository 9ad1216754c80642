//! Exact arithmetic in GF(p^k) for odd primes p.
//!
//! Elements are polynomials over GF(p) of degree below k, reduced modulo a
//! fixed monic irreducible polynomial. Each element is stored as its
//! canonical index: the coefficient list `c_0, c_1, .., c_{k-1}` read as
//! base-p digits with `c_0` most significant. Index order is therefore the
//! lexicographic order on little-endian coefficient lists, and that is the
//! canonical order used everywhere (element listings, parameter selection,
//! vertex ids).
//!
//! Multiplication goes through discrete log tables built once per field;
//! addition is digit-wise.

pub mod lemmas;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

/// Largest field order for which tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("characteristic {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    TooLarge(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operands belong to different fields (q = {0} and q = {1})")]
    ContextMismatch(u32, u32),
    #[error("invalid field element text {0:?}: {1}")]
    ParseElement(String, String),
    #[error("invalid field descriptor {0:?}, expected \"p^k\"")]
    ParseDescriptor(String),
}

/// A field size written as `p^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    pub p: u32,
    pub k: u32,
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.k)
    }
}

impl FromStr for FieldDescriptor {
    type Err = GfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GfError::ParseDescriptor(s.to_string());
        let (p, k) = s.trim().split_once('^').ok_or_else(bad)?;
        Ok(FieldDescriptor { p: p.trim().parse().map_err(|_| bad())?, k: k.trim().parse().map_err(|_| bad())? })
    }
}

/// An element of some GF(q), identified by its canonical index.
///
/// The element remembers only `q`; arithmetic goes through the owning
/// [`FieldContext`], which rejects elements of a different order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FieldElement {
    index: u32,
    q: u32,
}

impl FieldElement {
    /// Position in the canonical element order.
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn order(self) -> u32 {
        self.q
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }
}

#[derive(Debug)]
struct Tables {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a fixed primitive element g, `i` in `0..q-1`.
    exp: Vec<u32>,
    /// `log[x]` for nonzero x; `log[0]` is unused.
    log: Vec<u32>,
    one: u32,
}

/// Immutable description of GF(p^k); cheap to clone.
#[derive(Debug, Clone)]
pub struct FieldContext {
    t: Arc<Tables>,
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.t.q == other.t.q && self.t.modulus == other.t.modulus
    }
}

impl Eq for FieldContext {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
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

/// Dense polynomials over GF(p), little-endian, no trailing zeros.
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        // p is prime, so a^(p-2)
        let (mut base, mut e, mut acc) = (a as u64, p as u64 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            e >>= 1;
        }
        acc as u32
    }

    /// Remainder of `a` modulo `m` (m nonzero).
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p) as u64;
        let p64 = p as u64;
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let c = r[r.len() - 1] as u64 * lead_inv % p64;
            for (i, &mi) in m.iter().enumerate() {
                let sub = c * mi as u64 % p64;
                let slot = &mut r[shift + i];
                *slot = ((*slot as u64 + p64 - sub) % p64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let p64 = p as u64;
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
            }
        }
        let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
        trim(&mut out);
        out
    }

    pub fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        rem(&mul(a, b, p), m, p)
    }

    pub fn powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
        let mut acc = rem(&[1], m, p);
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        acc
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let mut out: Vec<u32> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    /// Rabin's test for a monic polynomial of degree k >= 1.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let k = f.len() - 1;
        if k == 1 {
            return true;
        }
        let x = [0, 1];
        let frob = |times: u64| -> Vec<u32> {
            let mut cur = rem(&x, f, p);
            for _ in 0..times {
                cur = powmod(&cur, p as u64, f, p);
            }
            cur
        };
        if !sub(&frob(k as u64), &rem(&x, f, p), p).is_empty() {
            return false;
        }
        for d in super::prime_factors(k as u64) {
            let h = sub(&frob(k as u64 / d), &x, p);
            if gcd(f, &h, p).len() != 1 {
                return false;
            }
        }
        true
    }

    pub fn has_root(f: &[u32], p: u32) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (acc * x as u64 + c as u64) % p as u64;
            }
            acc == 0
        })
    }
}

pub use poly::has_root as poly_has_root;
pub use poly::is_irreducible as poly_is_irreducible;

impl FieldContext {
    /// Builds GF(p^k) with the lexicographically smallest monic irreducible
    /// modulus (coefficients compared low-to-high).
    pub fn new(p: u32, k: u32) -> Result<Self, GfError> {
        if p == 2 || !is_prime(p as u64) {
            return Err(GfError::NotOddPrime(p as u64));
        }
        if k == 0 {
            return Err(GfError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if q > MAX_FIELD_ORDER {
            return Err(GfError::TooLarge(q));
        }
        let q = q as u32;
        let digits = |mut v: u32| -> Vec<u32> {
            let mut c = vec![0; k as usize];
            for slot in c.iter_mut().rev() {
                *slot = v % p;
                v /= p;
            }
            c
        };
        let modulus = (0..q)
            .map(|lower| {
                let mut m = digits(lower);
                m.push(1);
                m
            })
            .find(|m| poly::is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");

        let encode = |c: &[u32]| -> u32 { (0..k as usize).fold(0, |acc, i| acc * p + c.get(i).copied().unwrap_or(0)) };
        let pow_index = |v: u32, e: u64| -> u32 { encode(&poly::powmod(&digits(v), e, &modulus, p)) };
        let one = encode(&[1]);
        let order = q as u64 - 1;
        let factors = prime_factors(order);
        let generator = (1..q)
            .find(|&g| factors.iter().all(|&f| pow_index(g, order / f) != one))
            .expect("the multiplicative group of a finite field is cyclic");

        let gen_poly = digits(generator);
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![1u32];
        for i in 0..order as u32 {
            let v = encode(&cur);
            exp.push(v);
            log[v as usize] = i;
            cur = poly::mulmod(&cur, &gen_poly, &modulus, p);
        }

        Ok(FieldContext { t: Arc::new(Tables { p, k, q, modulus, exp, log, one }) })
    }

    pub fn from_descriptor(d: FieldDescriptor) -> Result<Self, GfError> {
        Self::new(d.p, d.k)
    }

    pub fn p(&self) -> u32 {
        self.t.p
    }

    pub fn k(&self) -> u32 {
        self.t.k
    }

    pub fn q(&self) -> u32 {
        self.t.q
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { p: self.t.p, k: self.t.k }
    }

    /// Monic modulus, coefficients low-to-high (length k + 1).
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(self.t.one)
    }

    fn elem(&self, index: u32) -> FieldElement {
        FieldElement { index, q: self.t.q }
    }

    /// Element at position `index` of the canonical order.
    pub fn element(&self, index: u32) -> Option<FieldElement> {
        (index < self.t.q).then(|| self.elem(index))
    }

    /// The image of an integer under the prime-subfield embedding.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let r = n.rem_euclid(self.t.p as i64) as u32;
        self.from_coeffs(&[r]).expect("residue in range")
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, GfError> {
        let (p, k) = (self.t.p, self.t.k as usize);
        if coeffs.len() > k || coeffs.iter().any(|&c| c >= p) {
            return Err(GfError::ParseElement(format!("{coeffs:?}"), format!("need at most {k} residues below {p}")));
        }
        let idx = (0..k).fold(0, |acc, i| acc * p + coeffs.get(i).copied().unwrap_or(0));
        Ok(self.elem(idx))
    }

    /// The k residues of `a`, low-to-high.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut c = vec![0; self.t.k as usize];
        self.digits_into(a.index, &mut c);
        c
    }

    fn digits_into(&self, mut v: u32, out: &mut [u32]) {
        let p = self.t.p;
        for slot in out.iter_mut().rev() {
            *slot = v % p;
            v /= p;
        }
    }

    /// All q elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.t.q).map(|i| self.elem(i))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.t.q).map(|i| self.elem(i))
    }

    fn check(&self, a: FieldElement) -> Result<(), GfError> {
        if a.q == self.t.q {
            Ok(())
        } else {
            Err(GfError::ContextMismatch(a.q, self.t.q))
        }
    }

    fn expect_same(&self, a: FieldElement) {
        if let Err(e) = self.check(a) {
            panic!("{e}");
        }
    }

    fn raw_add(&self, a: u32, b: u32, negate_b: bool) -> u32 {
        let p = self.t.p;
        if self.t.k == 1 {
            return if negate_b { (a + p - b) % p } else { (a + b) % p };
        }
        let (mut x, mut y, mut out, mut scale) = (a, b, 0u32, 1u32);
        for _ in 0..self.t.k {
            let (dx, dy) = (x % p, y % p);
            let d = if negate_b { (dx + p - dy) % p } else { (dx + dy) % p };
            out += d * scale;
            scale *= p;
            x /= p;
            y /= p;
        }
        out
    }

    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.t.exp.len() as u64;
        let e = (self.t.log[a as usize] as u64 + self.t.log[b as usize] as u64) % n;
        self.t.exp[e as usize]
    }

    pub fn checked_add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.elem(self.raw_add(a.index, b.index, false)))
    }

    pub fn checked_sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.elem(self.raw_add(a.index, b.index, true)))
    }

    pub fn checked_mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.elem(self.raw_mul(a.index, b.index)))
    }

    pub fn checked_neg(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        Ok(self.elem(self.raw_add(0, a.index, true)))
    }

    /// `a` raised to an integer power; negative exponents invert first.
    pub fn checked_pow(&self, a: FieldElement, e: i64) -> Result<FieldElement, GfError> {
        self.check(a)?;
        if a.is_zero() {
            return match e {
                0 => Ok(self.one()),
                e if e > 0 => Ok(self.zero()),
                _ => Err(GfError::ZeroInverse),
            };
        }
        let n = self.t.exp.len() as i128;
        let l = self.t.log[a.index as usize] as i128;
        let idx = (l * e as i128).rem_euclid(n);
        Ok(self.elem(self.t.exp[idx as usize]))
    }

    /// Panics if the operands come from a different field; use
    /// [`checked_add`](Self::checked_add) to get an error instead.
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.expect_same(a);
        self.expect_same(b);
        self.elem(self.raw_add(a.index, b.index, false))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.expect_same(a);
        self.expect_same(b);
        self.elem(self.raw_add(a.index, b.index, true))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.expect_same(a);
        self.expect_same(b);
        self.elem(self.raw_mul(a.index, b.index))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.expect_same(a);
        self.elem(self.raw_add(0, a.index, true))
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement, GfError> {
        self.checked_pow(a, e)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        self.check(a)?;
        if a.is_zero() {
            return Err(GfError::ZeroInverse);
        }
        let n = self.t.exp.len();
        let l = self.t.log[a.index as usize] as usize;
        Ok(self.elem(self.t.exp[(n - l) % n]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Decimal residue for prime fields, otherwise comma-separated
    /// coefficients low-to-high.
    pub fn format(&self, a: FieldElement) -> String {
        self.coeffs(a).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn parse(&self, s: &str) -> Result<FieldElement, GfError> {
        let err = |why: String| GfError::ParseElement(s.to_string(), why);
        let parts: Vec<&str> = s.trim().split(',').map(str::trim).collect();
        if parts.len() != self.t.k as usize {
            return Err(err(format!("expected {} coefficient(s)", self.t.k)));
        }
        let coeffs =
            parts.iter().map(|c| c.parse::<u32>().map_err(|e| err(e.to_string()))).collect::<Result<Vec<_>, _>>()?;
        if coeffs.iter().any(|&c| c >= self.t.p) {
            return Err(err(format!("coefficients must be below {}", self.t.p)));
        }
        self.from_coeffs(&coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_modulus_x() {
        let f = FieldContext::new(5, 1).unwrap();
        assert_eq!(f.q(), 5);
        assert_eq!(f.modulus(), &[0, 1]);
    }

    #[test]
    fn gf9_modulus_is_smallest_irreducible_quadratic() {
        let f = FieldContext::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        // every monic quadratic lexicographically below x^2 + 1 has a root mod 3
        for c0 in 0..3u32 {
            for c1 in 0..3u32 {
                if (c0, c1) < (1, 0) {
                    assert!(poly_has_root(&[c0, c1, 1], 3), "{c0} {c1}");
                }
            }
        }
        assert!(!poly_has_root(&[1, 0, 1], 3));
    }

    #[test]
    fn rejects_even_and_composite_characteristic() {
        assert_eq!(FieldContext::new(2, 1), Err(GfError::NotOddPrime(2)));
        assert_eq!(FieldContext::new(9, 1), Err(GfError::NotOddPrime(9)));
        assert_eq!(FieldContext::new(1, 1), Err(GfError::NotOddPrime(1)));
        assert_eq!(FieldContext::new(3, 0), Err(GfError::ZeroDegree));
        assert!(matches!(FieldContext::new(3, 30), Err(GfError::TooLarge(_))));
    }

    #[test]
    fn small_prime_field_arithmetic() {
        let f = FieldContext::new(5, 1).unwrap();
        let e = |n| f.from_int(n);
        assert_eq!(f.add(e(2), e(4)), e(1));
        assert_eq!(f.inv(e(2)).unwrap(), e(3));
        assert_eq!(f.inv(e(0)), Err(GfError::ZeroInverse));
        assert_eq!(f.neg(e(1)), e(4));
        assert_eq!(f.pow(e(2), -1).unwrap(), e(3));
        assert_eq!(f.pow(e(2), 4).unwrap(), e(1));
        assert_eq!(f.pow(e(0), 0).unwrap(), e(1));
        assert!(f.pow(e(0), -2).is_err());
    }

    #[test]
    fn gf9_x_squared_is_minus_one() {
        let f = FieldContext::new(3, 2).unwrap();
        let x = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.mul(x, x), f.from_int(2));
        assert_eq!(f.coeffs(f.mul(x, x)), vec![2, 0]);
    }

    #[test]
    fn element_listing_order() {
        let f3 = FieldContext::new(3, 1).unwrap();
        let listed: Vec<String> = f3.elements().map(|e| f3.format(e)).collect();
        assert_eq!(listed, ["0", "1", "2"]);
        let f5 = FieldContext::new(5, 1).unwrap();
        let nz: Vec<String> = f5.nonzero_elements().map(|e| f5.format(e)).collect();
        assert_eq!(nz, ["1", "2", "3", "4"]);
        let f9 = FieldContext::new(3, 2).unwrap();
        let all: Vec<FieldElement> = f9.elements().collect();
        assert_eq!(all.len(), 9);
        assert!(all[0].is_zero());
        let coeffs: Vec<Vec<u32>> = all.iter().map(|&e| f9.coeffs(e)).collect();
        let mut sorted = coeffs.clone();
        sorted.sort();
        assert_eq!(coeffs, sorted);
    }

    #[test]
    fn mixed_contexts_are_rejected() {
        let f5 = FieldContext::new(5, 1).unwrap();
        let f7 = FieldContext::new(7, 1).unwrap();
        let a = f5.one();
        let b = f7.one();
        assert_eq!(f5.checked_add(a, b), Err(GfError::ContextMismatch(7, 5)));
        assert!(f7.inv(a).is_err());
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixed_contexts_panic_in_unchecked_ops() {
        let f5 = FieldContext::new(5, 1).unwrap();
        let f7 = FieldContext::new(7, 1).unwrap();
        f5.mul(f5.one(), f7.one());
    }

    #[test]
    fn text_forms() {
        let f9 = FieldContext::new(3, 2).unwrap();
        let a = f9.parse("2,1").unwrap();
        assert_eq!(f9.coeffs(a), vec![2, 1]);
        assert_eq!(f9.format(a), "2,1");
        assert!(f9.parse("3,0").is_err());
        assert!(f9.parse("1").is_err());
        let d: FieldDescriptor = "3^2".parse().unwrap();
        assert_eq!(d, FieldDescriptor { p: 3, k: 2 });
        assert_eq!(d.to_string(), "3^2");
        assert!("9".parse::<FieldDescriptor>().is_err());
    }

    #[test]
    fn rabin_agrees_with_root_test_up_to_cubics() {
        for p in [3u32, 5, 7] {
            for k in 2..=3u32 {
                let count = p.pow(k);
                for lower in 0..count {
                    let mut f: Vec<u32> = (0..k).map(|i| lower / p.pow(i) % p).collect();
                    f.push(1);
                    assert_eq!(poly_is_irreducible(&f, p), !poly_has_root(&f, p), "{f:?} mod {p}");
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, k) in [(3, 1), (5, 1), (3, 2), (7, 1), (5, 2), (3, 3)] {
            let f = FieldContext::new(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
            }
        }
    }
}
