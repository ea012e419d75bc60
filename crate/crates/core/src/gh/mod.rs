//! Gopala-Hemachandra (GH) residue sequences.
//!
//! A GH sequence is the Fibonacci recurrence `G(n) = G(n-1) + G(n-2)` started
//! from an arbitrary seed pair `(a, b)`. Reduced modulo `m` it is purely
//! periodic: the map `(x, y) -> (y, x + y)` is invertible on residue pairs, so
//! the orbit of the initial pair returns to it without a pre-period.

mod classify;
mod report;

pub use classify::{b_primes, b_sequence, classify_prime, verify_period_theorem, PeriodClass};
pub use report::{
    composite_bound_sweep, is_two_times_power_of_five, theorem_sweep, PeriodReport,
    PERIOD_CSV_HEADER,
};

use crate::error::{Error, Result};
use crate::scalar::Residue;

/// Largest supported modulus, `2^31 - 1`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// Seed pair and modulus of a GH residue sequence. Seeds are stored reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GhParams<R: Residue> {
    a: R,
    b: R,
    modulus: R,
}

impl<R: Residue> GhParams<R> {
    pub fn new(a: R, b: R, modulus: R) -> Result<Self> {
        let m = modulus.to_u64().unwrap_or(u64::MAX);
        if modulus < R::from(2).unwrap() {
            return Err(Error::ModulusTooSmall(m));
        }
        // x + y for residues x, y < m must fit in R
        let max = MAX_MODULUS.min((R::max_value() >> 1).to_u64().unwrap_or(u64::MAX));
        if m > max {
            return Err(Error::ModulusTooLarge { modulus: m, max });
        }
        let (a, b) = (a % modulus, b % modulus);
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateSeed {
                a: a.to_u64().unwrap(),
                b: b.to_u64().unwrap(),
                modulus: m,
            });
        }
        Ok(GhParams { a, b, modulus })
    }

    /// Fibonacci seeds `(1, 1)`.
    pub fn fibonacci(modulus: R) -> Result<Self> {
        Self::new(R::one(), R::one(), modulus)
    }

    pub fn a(&self) -> R {
        self.a
    }

    pub fn b(&self) -> R {
        self.b
    }

    pub fn modulus(&self) -> R {
        self.modulus
    }

    pub fn residues(&self) -> GhResidues<R> {
        GhResidues {
            current: self.a,
            next: self.b,
            modulus: self.modulus,
        }
    }
}

/// Infinite stream of residues `r_0 = a, r_1 = b, r_k = r_{k-1} + r_{k-2} mod m`.
#[derive(Debug, Clone)]
pub struct GhResidues<R: Residue> {
    current: R,
    next: R,
    modulus: R,
}

#[inline]
fn add_mod<R: Residue>(x: R, y: R, m: R) -> R {
    let s = x + y;
    if s >= m {
        s - m
    } else {
        s
    }
}

impl<R: Residue> Iterator for GhResidues<R> {
    type Item = R;

    #[inline]
    fn next(&mut self) -> Option<R> {
        let out = self.current;
        let following = add_mod(self.current, self.next, self.modulus);
        self.current = self.next;
        self.next = following;
        Some(out)
    }
}

/// The first `count` residues of the sequence.
pub fn gh_residues<R: Residue>(params: &GhParams<R>, count: usize) -> Result<Vec<R>> {
    if count == 0 {
        return Err(Error::ZeroCount);
    }
    Ok(params.residues().take(count).collect())
}

/// Smallest `N >= 1` with `(r_N, r_{N+1}) = (r_0, r_1)`.
///
/// The orbit has at most `m^2 - 1` non-zero pairs and the period never exceeds
/// `6m`, so the scan is capped at `max(6m + 2, m^2)` steps.
pub fn gh_period<R: Residue>(params: &GhParams<R>) -> Result<u64> {
    let m = params.modulus.to_u64().unwrap();
    let limit = (6 * m + 2).max(m * m);
    let (a, b, modulus) = (params.a, params.b, params.modulus);
    let (mut x, mut y) = (b, add_mod(a, b, modulus));
    let mut n = 1u64;
    while n <= limit {
        if x == a && y == b {
            return Ok(n);
        }
        let z = add_mod(x, y, modulus);
        x = y;
        y = z;
        n += 1;
    }
    Err(Error::PeriodSearchExhausted { modulus: m, limit })
}
