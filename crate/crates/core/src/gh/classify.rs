use std::fmt;

use super::{gh_period, GhParams, PeriodReport};
use crate::bipolar::BipolarSequence;
use crate::error::{Error, Result};
use crate::primes::{is_prime, Primes};

/// Period family of an odd prime modulus, decided by its last decimal digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeriodClass {
    /// `p mod 10` in {1, 9}: the period divides `p - 1`.
    DividesPMinusOne,
    /// `p mod 10` in {3, 7}: the period divides `2p + 2`.
    DividesTwoPPlusTwo,
    /// `p = 5`: period 20.
    SpecialFive,
}

impl PeriodClass {
    /// Short label used in CSV output.
    pub fn label(self) -> &'static str {
        match self {
            PeriodClass::DividesPMinusOne => "pm1",
            PeriodClass::DividesTwoPPlusTwo => "2pp2",
            PeriodClass::SpecialFive => "special5",
        }
    }

    /// B(n) symbol. `SpecialFive` has none.
    pub fn symbol(self) -> Option<i8> {
        match self {
            PeriodClass::DividesPMinusOne => Some(1),
            PeriodClass::DividesTwoPPlusTwo => Some(-1),
            PeriodClass::SpecialFive => None,
        }
    }

    /// Residue-class rule without the primality check.
    fn from_last_digit(p: u64) -> Option<Self> {
        match p % 10 {
            1 | 9 => Some(PeriodClass::DividesPMinusOne),
            3 | 7 => Some(PeriodClass::DividesTwoPPlusTwo),
            5 if p == 5 => Some(PeriodClass::SpecialFive),
            _ => None,
        }
    }

    /// The value every period in this class must divide.
    pub fn period_multiple(self, p: u64) -> u64 {
        match self {
            PeriodClass::DividesPMinusOne => p - 1,
            PeriodClass::DividesTwoPPlusTwo => 2 * p + 2,
            PeriodClass::SpecialFive => 20,
        }
    }
}

impl fmt::Display for PeriodClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify_prime(p: u64) -> Result<PeriodClass> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    PeriodClass::from_last_digit(p).ok_or(Error::UnclassifiedPrime(p))
}

/// Computes the period for seeds `seed` modulo `p` and checks it against the
/// class of `p`.
///
/// For seeds `(1, 1)` modulo 5 the period must be exactly 20; other seeds
/// modulo 5 only have to divide 20.
pub fn verify_period_theorem(p: u64, seed: (u64, u64)) -> Result<PeriodReport> {
    let class = classify_prime(p)?;
    let params = GhParams::<u64>::new(seed.0, seed.1, p)?;
    let period = gh_period(&params)?;
    let fibonacci_seed = params.a() == 1 && params.b() == 1;
    let holds = match class {
        PeriodClass::SpecialFive if fibonacci_seed => period == 20,
        _ => class.period_multiple(p) % period == 0,
    };
    if !holds {
        return Err(Error::PeriodTheoremViolation {
            modulus: p,
            period,
            class,
        });
    }
    Ok(PeriodReport::new(p, period, Some(class)))
}

/// The bipolar sequence B(n): ascending primes from 3, skipping 5, with +1
/// for the `p - 1` family and -1 for the `2p + 2` family.
pub fn b_sequence(count: usize) -> Result<BipolarSequence> {
    if count == 0 {
        return Err(Error::ZeroCount);
    }
    let values = b_primes()
        .take(count)
        .map(|p| {
            PeriodClass::from_last_digit(p)
                .and_then(PeriodClass::symbol)
                .unwrap()
        })
        .collect();
    BipolarSequence::new(values)
}

/// The primes enumerated by [`b_sequence`], in order.
pub fn b_primes() -> impl Iterator<Item = u64> {
    Primes::new().filter(|&p| p != 2 && p != 5)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Printed in the source as "the first 20 bits of B(n)" but only 18 values
    /// are listed. It does not agree with ascending-prime enumeration and is
    /// kept as an unreconciled reference.
    const PRINTED_PREFIX_UNRECONCILED: [i8; 18] = [
        -1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1, 1, -1, 1, -1,
    ];

    #[test]
    fn classification_examples() {
        assert_eq!(classify_prime(11).unwrap(), PeriodClass::DividesPMinusOne);
        assert_eq!(classify_prime(19).unwrap(), PeriodClass::DividesPMinusOne);
        assert_eq!(classify_prime(7).unwrap(), PeriodClass::DividesTwoPPlusTwo);
        assert_eq!(classify_prime(13).unwrap(), PeriodClass::DividesTwoPPlusTwo);
        assert_eq!(classify_prime(5).unwrap(), PeriodClass::SpecialFive);
    }

    #[test]
    fn classification_errors() {
        assert!(matches!(
            classify_prime(2),
            Err(Error::UnclassifiedPrime(2))
        ));
        assert!(matches!(classify_prime(21), Err(Error::NotPrime(21))));
        assert!(matches!(classify_prime(15), Err(Error::NotPrime(15))));
        assert!(matches!(classify_prime(1), Err(Error::NotPrime(1))));
    }

    #[test]
    fn theorem_examples() {
        let r = verify_period_theorem(19, (1, 1)).unwrap();
        assert_eq!(
            (r.period, r.class),
            (18, Some(PeriodClass::DividesPMinusOne))
        );
        let r = verify_period_theorem(7, (1, 1)).unwrap();
        assert_eq!(
            (r.period, r.class),
            (16, Some(PeriodClass::DividesTwoPPlusTwo))
        );
        let r = verify_period_theorem(29, (1, 1)).unwrap();
        assert_eq!(
            (r.period, r.class),
            (14, Some(PeriodClass::DividesPMinusOne))
        );
        assert_eq!(28 % r.period, 0);
        let r = verify_period_theorem(5, (1, 1)).unwrap();
        assert_eq!((r.period, r.class), (20, Some(PeriodClass::SpecialFive)));
        // Lucas numbers mod 5 have period 4
        assert_eq!(verify_period_theorem(5, (2, 1)).unwrap().period, 4);
    }

    #[test]
    fn theorem_rejects_bad_input() {
        assert!(matches!(
            verify_period_theorem(2, (1, 1)),
            Err(Error::UnclassifiedPrime(2))
        ));
        assert!(matches!(
            verify_period_theorem(9, (1, 1)),
            Err(Error::NotPrime(9))
        ));
        assert!(matches!(
            verify_period_theorem(11, (11, 22)),
            Err(Error::DegenerateSeed { .. })
        ));
    }

    #[test]
    fn b_sequence_examples() {
        assert_eq!(b_sequence(5).unwrap().as_slice(), &[-1, -1, 1, -1, -1]);
        assert_eq!(b_sequence(1).unwrap().as_slice(), &[-1]);
        assert!(matches!(b_sequence(0), Err(Error::ZeroCount)));
    }

    #[test]
    fn b_sequence_first_twenty_follow_period_check() {
        let primes: Vec<u64> = b_primes().take(20).collect();
        assert_eq!(primes[..4], [3, 7, 11, 13]);
        let bits = b_sequence(20).unwrap();
        for (&p, &bit) in primes.iter().zip(bits.iter()) {
            let report = verify_period_theorem(p, (1, 1)).unwrap();
            let expected = if report.class == Some(PeriodClass::DividesPMinusOne) {
                1
            } else {
                -1
            };
            assert_eq!(bit, expected, "p = {p}");
            assert_eq!(bit == 1, p % 10 == 1 || p % 10 == 9);
        }
    }

    #[test]
    fn printed_prefix_is_not_reproduced() {
        let ours = b_sequence(18).unwrap();
        assert_ne!(ours.as_slice(), &PRINTED_PREFIX_UNRECONCILED);
        assert_eq!(ours[0], PRINTED_PREFIX_UNRECONCILED[0]);
    }

    #[test]
    fn b_sequence_is_deterministic() {
        assert_eq!(b_sequence(500).unwrap(), b_sequence(500).unwrap());
    }
}
