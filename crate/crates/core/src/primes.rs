//! Prime enumeration and primality by trial division.

use crate::error::{Error, Result};

/// Sieve of Eratosthenes over `[0, limit]`.
fn sieve(limit: u64) -> Vec<bool> {
    let n = limit as usize;
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    if n >= 1 {
        is_prime[1] = false;
    }
    let mut i = 2;
    while i * i <= n {
        if is_prime[i] {
            (i * i..=n).step_by(i).for_each(|j| is_prime[j] = false);
        }
        i += 1;
    }
    is_prime
}

/// Primes in `[lo, hi]`, ascending. An empty interval yields an empty list.
pub fn primes_in_range(lo: u64, hi: u64) -> Result<Vec<u64>> {
    if lo < 2 || lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let table = sieve(hi);
    Ok((lo..=hi).filter(|&n| table[n as usize]).collect())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Unbounded ascending prime iterator backed by a growing sieve.
#[derive(Debug, Clone)]
pub struct Primes {
    table: Vec<bool>,
    next: u64,
}

impl Primes {
    pub fn new() -> Self {
        Primes {
            table: sieve(1024),
            next: 2,
        }
    }
}

impl Default for Primes {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            let n = self.next;
            if n as usize >= self.table.len() {
                self.table = sieve(2 * self.table.len() as u64);
            }
            self.next += 1;
            if self.table[n as usize] {
                return Some(n);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_examples() {
        assert_eq!(primes_in_range(2, 12).unwrap(), vec![2, 3, 5, 7, 11]);
        assert!(primes_in_range(14, 16).unwrap().is_empty());
        assert_eq!(primes_in_range(90, 100).unwrap(), vec![97]);
        assert_eq!(primes_in_range(2, 2).unwrap(), vec![2]);
        assert!(primes_in_range(1, 10).is_err());
        assert!(primes_in_range(10, 9).is_err());
    }

    #[test]
    fn iterator_agrees_with_trial_division() {
        let from_iter: Vec<u64> = Primes::new().take_while(|&p| p < 5000).collect();
        let from_trial: Vec<u64> = (0..5000).filter(|&n| is_prime(n)).collect();
        assert_eq!(from_iter, from_trial);
        assert_eq!(from_iter, primes_in_range(2, 4999).unwrap());
    }

    #[test]
    fn trial_division_edges() {
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(!is_prime(25));
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
    }
}
