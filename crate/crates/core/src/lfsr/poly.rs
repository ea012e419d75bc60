//! Polynomials over GF(2), packed into a `u128` coefficient mask.

use std::fmt;
use std::str::FromStr;

use super::mersenne::factor_mersenne;
use crate::error::{Error, Result};

/// Largest degree [`poly_order`] accepts; bounded by the Mersenne factoring range.
pub const MAX_ORDER_DEGREE: u32 = 60;

/// Largest representable degree.
pub const MAX_POLY_DEGREE: u32 = 127;

/// A GF(2) polynomial of degree at least 1.
///
/// The text form lists the exponents with coefficient 1 in descending order,
/// comma separated: `45,4,3,1,0` is `z^45 + z^4 + z^3 + z + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryPolynomial {
    mask: u128,
}

impl BinaryPolynomial {
    pub fn from_exponents<I: IntoIterator<Item = u32>>(exponents: I) -> Result<Self> {
        let mut mask = 0u128;
        for e in exponents {
            if e > MAX_POLY_DEGREE {
                return Err(Error::DegreeTooLarge {
                    degree: e,
                    max: MAX_POLY_DEGREE,
                });
            }
            mask |= 1 << e;
        }
        Self::from_mask(mask)
    }

    /// Bit `i` of `mask` is the coefficient of `x^i`.
    pub fn from_mask(mask: u128) -> Result<Self> {
        if mask < 2 {
            return Err(Error::InvalidPolynomial(format!("{mask:#x}")));
        }
        Ok(BinaryPolynomial { mask })
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    pub fn degree(&self) -> u32 {
        degree(self.mask)
    }

    /// Exponents with coefficient 1, descending.
    pub fn exponents(&self) -> Vec<u32> {
        (0..=self.degree())
            .rev()
            .filter(|&e| self.mask >> e & 1 == 1)
            .collect()
    }

    pub fn has_constant_term(&self) -> bool {
        self.mask & 1 == 1
    }

    /// Ben-Or irreducibility test. On failure returns a proper factor.
    pub fn irreducibility(&self) -> std::result::Result<(), BinaryPolynomial> {
        let f = self.mask;
        let d = self.degree();
        if d > 1 && f & 1 == 0 {
            return Err(BinaryPolynomial { mask: 0b10 });
        }
        let mut h = 0b10u128;
        for i in 1..=d / 2 {
            h = mul_mod(h, h, f);
            let g = gcd(h ^ 0b10, f);
            if g != 1 {
                let factor = if g == f { split_equal_degree(f, i) } else { g };
                return Err(BinaryPolynomial { mask: factor });
            }
        }
        Ok(())
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducibility().is_ok()
    }

    pub fn is_primitive(&self) -> bool {
        self.degree() <= MAX_ORDER_DEGREE
            && poly_order(self).is_ok_and(|e| e == (1u64 << self.degree()) - 1)
    }
}

impl fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps = self.exponents();
        for (i, e) in exps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for BinaryPolynomial {
    type Err = Error;

    /// Strictly descending, comma separated exponents. Whitespace around
    /// entries is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPolynomial(s.to_string());
        let exps = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if exps.windows(2).any(|w| w[0] <= w[1]) {
            return Err(bad());
        }
        match BinaryPolynomial::from_exponents(exps) {
            Err(Error::InvalidPolynomial(_)) => Err(bad()),
            other => other,
        }
    }
}

/// Multiplicative order of `x` modulo an irreducible `poly`: the smallest
/// `e >= 1` with `x^e = 1`.
///
/// `e` divides `2^d - 1`, so it is found by starting from `2^d - 1` and
/// stripping each prime factor `q` while `x^(e/q)` is still 1.
pub fn poly_order(poly: &BinaryPolynomial) -> Result<u64> {
    if !poly.has_constant_term() {
        return Err(Error::MissingConstantTerm(*poly));
    }
    let d = poly.degree();
    if d > MAX_ORDER_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree: d,
            max: MAX_ORDER_DEGREE,
        });
    }
    poly.irreducibility().map_err(|factor| Error::Reducible {
        poly: *poly,
        factor,
    })?;
    let f = poly.mask;
    let mut factors = factor_mersenne(d)?;
    factors.dedup();
    let mut order = (1u64 << d) - 1;
    for q in factors {
        while order.is_multiple_of(q) && pow_mod(0b10, (order / q) as u128, f) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

#[inline]
pub(crate) fn degree(a: u128) -> u32 {
    127 - a.leading_zeros()
}

/// `a * b mod f`; `a`, `b` reduced, `deg f <= 126`.
pub(crate) fn mul_mod(mut a: u128, mut b: u128, f: u128) -> u128 {
    let top = 1u128 << degree(f);
    let mut r = 0;
    while b != 0 {
        if b & 1 == 1 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= f;
        }
    }
    r
}

pub(crate) fn pow_mod(base: u128, mut e: u128, f: u128) -> u128 {
    let mut b = rem(base, f);
    let mut r = rem(1, f);
    while e != 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, f);
        }
        b = mul_mod(b, b, f);
        e >>= 1;
    }
    r
}

pub(crate) fn rem(mut a: u128, b: u128) -> u128 {
    let db = degree(b);
    while a != 0 && degree(a) >= db {
        a ^= b << (degree(a) - db);
    }
    a
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// Splits a product of at least two distinct irreducibles of degree `k`
/// using the trace map `a + a^2 + ... + a^(2^(k-1))`.
fn split_equal_degree(f: u128, k: u32) -> u128 {
    let d = degree(f);
    for a in 2u128.. {
        let mut term = rem(a, f);
        let mut trace = term;
        for _ in 1..k {
            term = mul_mod(term, term, f);
            trace ^= term;
        }
        let g = gcd(f, trace);
        if g != 1 && degree(g) < d {
            return g;
        }
    }
    unreachable!()
}
