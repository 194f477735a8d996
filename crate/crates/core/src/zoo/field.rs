//! Arithmetic in GF(p^n) as polynomials over Z_p reduced by a fixed monic
//! irreducible modulus.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`
//! where `c_i` is the coefficient of `t^i`. Addition, multiplication and
//! inversion are tabulated at construction.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field order accepted (tables are `q^2` entries).
pub const MAX_FIELD_ORDER: u32 = 1024;

/// Built-in moduli as `(p, n, coefficients low to high)`, all monic.
///
/// GF(4): t^2+t+1, GF(8): t^3+t+1, GF(16): t^4+t+1, GF(32): t^5+t^2+1,
/// GF(64): t^6+t^4+t^3+t+1, GF(9): t^2+2t+2, GF(27): t^3+2t+1,
/// GF(81): t^4+2t^3+2, GF(25): t^2+4t+2, GF(49): t^2+6t+3.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
];

/// Element of a [`Field`], as its integer code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u32);

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub struct Field {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    generator: FieldElement,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.n)
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// GF(p^n) with the built-in modulus (`t` for `n = 1`).
pub fn make_field(p: u32, n: u32) -> Result<Field> {
    if !is_prime(p as u64) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::Precondition("field degree must be positive".into()));
    }
    if n == 1 {
        return Field::with_modulus(p, vec![0, 1]);
    }
    let m = MODULI
        .iter()
        .find(|(mp, mn, _)| *mp == p && *mn == n)
        .ok_or_else(|| Error::Precondition(format!("no built-in modulus for GF({p}^{n}); supply one")))?;
    Field::with_modulus(p, m.2.to_vec())
}

/// Remainder of `a` modulo monic `m`, coefficients low to high.
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_is_zero(a: &[u32]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Irreducibility by trial division with every monic polynomial of degree
/// `1..=deg/2`.
pub fn is_irreducible(p: u32, m: &[u32]) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                f.push((c % p as u64) as u32);
                c /= p as u64;
            }
            f.push(1);
            if poly_is_zero(&poly_rem(p, m, &f)) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Field with a caller-supplied monic modulus (coefficients low to high).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::Precondition("modulus must be monic with coefficients in 0..p".into()));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::Precondition(format!("modulus {modulus:?} is reducible over Z_{p}")));
        }
        let n = (modulus.len() - 1) as u32;
        let q = (p as u64).pow(n);
        if q > MAX_FIELD_ORDER as u64 {
            return Err(Error::capacity("field order", MAX_FIELD_ORDER as u64));
        }
        let q = q as u32;
        let decode = |mut x: u32| {
            (0..n)
                .map(|_| {
                    let c = x % p;
                    x /= p;
                    c
                })
                .collect::<Vec<u32>>()
        };
        let encode = |cs: &[u32]| cs.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let qs = q as usize;
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for a in 0..q {
            let ca = decode(a);
            for b in 0..q {
                let cb = decode(b);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = encode(&sum);
                let mut prod = vec![0u32; 2 * n as usize - 1];
                for (i, x) in ca.iter().enumerate() {
                    for (j, y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let r = poly_rem(p, &prod, &modulus);
                let mut r = r;
                r.resize(n as usize, 0);
                mul[a as usize * qs + b as usize] = encode(&r);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a as usize * qs + b as usize] == 0).unwrap())
            .collect();
        let mut inv = vec![0u32; qs];
        for a in 1..q {
            inv[a as usize] = (1..q)
                .find(|&b| mul[a as usize * qs + b as usize] == 1)
                .ok_or_else(|| Error::Internal(format!("{a} has no inverse")))?;
        }
        let mut field = Field {
            p,
            n,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
            generator: FieldElement(1),
        };
        field.generator = (1..q)
            .map(FieldElement)
            .find(|&g| field.mult_order(g) == (q - 1) as usize)
            .ok_or_else(|| Error::Internal("unit group is not cyclic".into()))?;
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// A generator of the multiplicative group (least code of full order).
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    /// Coefficients of `t^0, ..., t^{n-1}`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut x = a.0;
        (0..self.n)
            .map(|_| {
                let c = x % self.p;
                x /= self.p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, cs: &[u32]) -> Result<FieldElement> {
        if cs.len() != self.n as usize || cs.iter().any(|&c| c >= self.p) {
            return Err(Error::Domain("coefficient vector out of range".into()));
        }
        Ok(FieldElement(cs.iter().rev().fold(0, |acc, &c| acc * self.p + c)))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[(a.0 * self.q + b.0) as usize])
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[(a.0 * self.q + b.0) as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::Domain("zero has no inverse".into()));
        }
        Ok(FieldElement(self.inv[a.0 as usize]))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a -> a^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u64)
    }

    /// Multiplicative order of a nonzero element; `0` for zero.
    pub fn mult_order(&self, a: FieldElement) -> usize {
        if a.0 == 0 {
            return 0;
        }
        let mut k = 1;
        let mut x = a;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        for p in [2, 3, 5, 7, 11] {
            let f = make_field(p, 1).unwrap();
            assert_eq!(f.order(), p);
            assert_eq!(f.mult_order(f.generator()), (p - 1) as usize);
            assert_eq!(f.mul(FieldElement(p - 1), FieldElement(p - 1)), f.one());
        }
    }

    #[test]
    fn gf4_t_squared_is_t_plus_one() {
        let f = make_field(2, 2).unwrap();
        let t = f.from_coeffs(&[0, 1]).unwrap();
        let t_plus_1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.mul(t, t), t_plus_1);
    }

    #[test]
    fn gf9_generator_has_order_8() {
        let f = make_field(3, 2).unwrap();
        let g = f.generator();
        // Exhaust the powers of the generator.
        let mut seen = std::collections::BTreeSet::new();
        let mut x = f.one();
        for _ in 0..8 {
            seen.insert(x);
            x = f.mul(x, g);
        }
        assert_eq!(x, f.one());
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn every_table_modulus_is_irreducible_and_fields_are_fields() {
        for &(p, n, _) in MODULI {
            let f = make_field(p, n).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
            assert_eq!(f.mult_order(f.generator()) as u32, f.order() - 1);
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(make_field(4, 1).is_err());
        assert!(make_field(2, 0).is_err());
        assert!(make_field(11, 2).is_err());
        // t^2 + 1 = (t + 1)^2 over GF(2).
        assert!(Field::with_modulus(2, vec![1, 0, 1]).is_err());
    }

    #[test]
    fn frobenius_is_additive() {
        let f = make_field(3, 2).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
            }
        }
    }
}
