use crate::error::{Error, Result};

pub const MAX_MERSENNE_EXPONENT: u32 = 60;

/// Prime factors of `2^degree - 1` with multiplicity, ascending, by trial
/// division. `2^1 - 1 = 1` has no factors.
pub fn factor_mersenne(degree: u32) -> Result<Vec<u64>> {
    if degree == 0 || degree > MAX_MERSENNE_EXPONENT {
        return Err(Error::DegreeTooLarge {
            degree,
            max: MAX_MERSENNE_EXPONENT,
        });
    }
    Ok(trial_division((1u64 << degree) - 1))
}

fn trial_division(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    // 2^d - 1 is odd
    let mut d = 3u64;
    while d * d <= n {
        while n.is_multiple_of(d) {
            factors.push(d);
            n /= d;
        }
        d += 2;
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::is_prime;

    #[test]
    fn examples() {
        assert_eq!(factor_mersenne(4).unwrap(), vec![3, 5]);
        assert_eq!(factor_mersenne(11).unwrap(), vec![23, 89]);
        assert_eq!(factor_mersenne(1).unwrap(), Vec::<u64>::new());
        assert_eq!(factor_mersenne(6).unwrap(), vec![3, 3, 7]);
        assert_eq!(
            factor_mersenne(45).unwrap(),
            vec![7, 31, 73, 151, 631, 23311]
        );
    }

    #[test]
    fn products_and_primality() {
        for d in 1..=MAX_MERSENNE_EXPONENT {
            let f = factor_mersenne(d).unwrap();
            assert_eq!(f.iter().product::<u64>(), (1u64 << d) - 1, "degree {d}");
            assert!(f.iter().all(|&q| is_prime(q)), "degree {d}: {f:?}");
            assert!(f.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn range() {
        assert!(factor_mersenne(0).is_err());
        assert!(factor_mersenne(61).is_err());
    }
}
