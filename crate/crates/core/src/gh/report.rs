use super::{classify_prime, gh_period, verify_period_theorem, GhParams, PeriodClass};
use crate::error::{Error, Result};
use crate::primes::{is_prime, primes_in_range};

pub const PERIOD_CSV_HEADER: &str = "modulus,period,class,bound_tight";

/// Period of one modulus, with its class when the modulus is a classified prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodReport {
    pub modulus: u64,
    pub period: u64,
    pub class: Option<PeriodClass>,
    /// `period == 6 * modulus`
    pub bound_tight: bool,
}

impl PeriodReport {
    pub fn new(modulus: u64, period: u64, class: Option<PeriodClass>) -> Self {
        PeriodReport {
            modulus,
            period,
            class,
            bound_tight: period == 6 * modulus,
        }
    }

    /// Period report for arbitrary seeds, classifying the modulus when possible.
    pub fn compute(modulus: u64, seed: (u64, u64)) -> Result<Self> {
        let period = gh_period(&GhParams::<u64>::new(seed.0, seed.1, modulus)?)?;
        Ok(PeriodReport::new(
            modulus,
            period,
            classify_prime(modulus).ok(),
        ))
    }

    /// `modulus,period,class,bound_tight`; moduli without a class print `nonprime`.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.modulus,
            self.period,
            self.class.map_or("nonprime", PeriodClass::label),
            self.bound_tight
        )
    }
}

pub fn is_two_times_power_of_five(m: u64) -> bool {
    if m < 10 || !m.is_multiple_of(2) {
        return false;
    }
    let mut n = m / 2;
    while n.is_multiple_of(5) {
        n /= 5;
    }
    n == 1
}

/// Fibonacci periods for every modulus in `[2, m_max]`, checking `N(m) <= 6m`
/// with equality exactly at `m = 2 * 5^n`.
pub fn composite_bound_sweep(m_max: u64) -> Result<Vec<PeriodReport>> {
    if m_max < 2 {
        return Err(Error::InvalidRange { lo: 2, hi: m_max });
    }
    (2..=m_max)
        .map(|m| {
            let period = gh_period(&GhParams::<u64>::fibonacci(m)?)?;
            if period > 6 * m {
                return Err(Error::BoundViolation { modulus: m, period });
            }
            let class = if is_prime(m) {
                classify_prime(m).ok()
            } else {
                None
            };
            let report = PeriodReport::new(m, period, class);
            let expected = is_two_times_power_of_five(m);
            if report.bound_tight != expected {
                return Err(Error::TightBoundMismatch {
                    modulus: m,
                    tight: report.bound_tight,
                    expected,
                });
            }
            Ok(report)
        })
        .collect()
}

/// [`verify_period_theorem`] with seeds `(1, 1)` for every prime in `[3, p_max]`.
pub fn theorem_sweep(p_max: u64) -> Result<Vec<PeriodReport>> {
    if p_max < 3 {
        return Ok(Vec::new());
    }
    primes_in_range(3, p_max)?
        .into_iter()
        .map(|p| verify_period_theorem(p, (1, 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tight_set(m_max: u64) -> Vec<u64> {
        composite_bound_sweep(m_max)
            .unwrap()
            .into_iter()
            .filter(|r| r.bound_tight)
            .map(|r| r.modulus)
            .collect()
    }

    #[test]
    fn sweep_examples() {
        assert_eq!(tight_set(100), vec![10, 50]);
        assert!(tight_set(9).is_empty());
        assert_eq!(tight_set(250), vec![10, 50, 250]);
        let reports = composite_bound_sweep(100).unwrap();
        assert_eq!(reports.len(), 99);
        assert_eq!(reports[8].period, 60);
        assert_eq!(reports[48].period, 300);
    }

    #[test]
    fn sweep_rejects_empty_range() {
        assert!(composite_bound_sweep(1).is_err());
        assert_eq!(composite_bound_sweep(2).unwrap().len(), 1);
    }

    #[test]
    fn power_of_five_predicate() {
        let hits: Vec<u64> = (0..10_000)
            .filter(|&m| is_two_times_power_of_five(m))
            .collect();
        assert_eq!(hits, vec![10, 50, 250, 1250, 6250]);
    }

    #[test]
    fn csv_rows() {
        assert_eq!(
            PeriodReport::compute(10, (1, 1)).unwrap().to_csv_row(),
            "10,60,nonprime,true"
        );
        assert_eq!(
            PeriodReport::compute(7, (1, 1)).unwrap().to_csv_row(),
            "7,16,2pp2,false"
        );
        assert_eq!(
            PeriodReport::compute(11, (1, 1)).unwrap().to_csv_row(),
            "11,10,pm1,false"
        );
        assert_eq!(
            PeriodReport::compute(5, (1, 1)).unwrap().to_csv_row(),
            "5,20,special5,false"
        );
        assert_eq!(
            PeriodReport::compute(2, (1, 1)).unwrap().to_csv_row(),
            "2,3,nonprime,false"
        );
    }

    #[test]
    fn theorem_sweep_small() {
        let reports = theorem_sweep(1000).unwrap();
        assert_eq!(reports.len(), 167);
        assert!(reports.iter().all(|r| r.class.is_some()));
        assert!(theorem_sweep(2).unwrap().is_empty());
    }
}
