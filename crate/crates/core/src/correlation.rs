//! Periodic cross-correlation of bipolar sequences.
//!
//! ```text
//! CCF(k) = (1/N) * sum_{j=0}^{N-1} a_j * b_{(j+k) mod N}
//! ```
//!
//! Every lag is accumulated as an exact integer and divided once, so a series
//! is the same whichever [`CcfScalar`] it is instantiated with, up to the
//! rounding of that one division.

use std::fmt::Write as _;

use crate::bipolar::BipolarSequence;
use crate::decimal::format_ratio;
use crate::error::{Error, Result};
use crate::scalar::CcfScalar;

pub const CCF_CSV_HEADER: &str = "lag,ccf";

/// Normalized CCF values for lags `0..N`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationSeries<T> {
    sums: Vec<i64>,
    values: Vec<T>,
}

/// How the peak of a series is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PeakMode {
    /// Largest `|CCF(k)|`.
    #[default]
    Absolute,
    /// Largest signed `CCF(k)`.
    Raw,
}

impl<T: CcfScalar> CorrelationSeries<T> {
    /// Builds a series from unnormalized lag sums `N * CCF(k)`.
    pub fn from_sums(sums: Vec<i64>) -> Result<Self> {
        let n = sums.len() as i64;
        if n == 0 {
            return Err(Error::EmptySequence);
        }
        if let Some(&bad) = sums.iter().find(|&&s| s.abs() > n || (s - n) % 2 != 0) {
            return Err(Error::InvalidConfig(format!(
                "lag sum {bad} is impossible for length {n}"
            )));
        }
        let values = sums.iter().map(|&s| T::from_ratio(s, n)).collect();
        Ok(CorrelationSeries { sums, values })
    }

    /// Sequence length `N`, also the number of lags.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// `N * CCF(k)` for each lag.
    pub fn sums(&self) -> &[i64] {
        &self.sums
    }

    /// Same series over another scalar type.
    pub fn convert<U: CcfScalar>(&self) -> CorrelationSeries<U> {
        let n = self.len() as i64;
        CorrelationSeries {
            sums: self.sums.clone(),
            values: self.sums.iter().map(|&s| U::from_ratio(s, n)).collect(),
        }
    }

    /// `lag,ccf` with six decimals, rounded half to even from the exact ratio.
    pub fn to_csv(&self) -> String {
        let n = self.len() as i64;
        let mut out = String::with_capacity(16 * (self.len() + 1));
        out.push_str(CCF_CSV_HEADER);
        out.push('\n');
        for (lag, &s) in self.sums.iter().enumerate() {
            let _ = writeln!(out, "{lag},{}", format_ratio(s, n, 6));
        }
        out
    }
}

/// Periodic cross-correlation of two equal-length sequences.
pub fn ccf<T: CcfScalar>(a: &BipolarSequence, b: &BipolarSequence) -> Result<CorrelationSeries<T>> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    let sums = (0..n)
        .map(|k| {
            let (head, tail) = b.split_at(k);
            // b rotated left by k is tail ++ head
            let front: i64 = a[..n - k]
                .iter()
                .zip(tail)
                .map(|(&x, &y)| (x * y) as i64)
                .sum();
            let back: i64 = a[n - k..]
                .iter()
                .zip(head)
                .map(|(&x, &y)| (x * y) as i64)
                .sum();
            front + back
        })
        .collect();
    CorrelationSeries::from_sums(sums)
}

/// Largest absolute CCF value, over lags `1..N` when `exclude_zero_lag` is set
/// and over all lags otherwise.
pub fn peak_ccf<T: CcfScalar>(series: &CorrelationSeries<T>, exclude_zero_lag: bool) -> Result<T> {
    peak_ccf_with(series, exclude_zero_lag, PeakMode::Absolute)
}

pub fn peak_ccf_with<T: CcfScalar>(
    series: &CorrelationSeries<T>,
    exclude_zero_lag: bool,
    mode: PeakMode,
) -> Result<T> {
    let start = usize::from(exclude_zero_lag);
    if series.len() <= start {
        return Err(Error::SeriesTooShort {
            len: series.len(),
            required: start + 1,
        });
    }
    let lags = series.sums[start..].iter();
    let peak = match mode {
        PeakMode::Absolute => lags.map(|s| s.abs()).max(),
        PeakMode::Raw => lags.copied().max(),
    };
    Ok(T::from_ratio(peak.unwrap(), series.len() as i64))
}

/// `R = 1 - (sum_{k=1}^{N-1} |CCF(k)|) / (N - 1)`.
///
/// 1 for an ideal delta-like correlation, 0 for a constant sequence.
pub fn randomness_measure<T: CcfScalar>(series: &CorrelationSeries<T>) -> Result<T> {
    let n = series.len() as i64;
    if n < 2 {
        return Err(Error::SeriesTooShort {
            len: series.len(),
            required: 2,
        });
    }
    let sidelobes: i64 = series.sums[1..].iter().map(|s| s.abs()).sum();
    let den = n * (n - 1);
    Ok(T::from_ratio(den - sidelobes, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn seq(v: &[i8]) -> BipolarSequence {
        BipolarSequence::new(v.to_vec()).unwrap()
    }

    fn series(sums: &[i64]) -> CorrelationSeries<f64> {
        CorrelationSeries::from_sums(sums.to_vec()).unwrap()
    }

    #[test]
    fn ccf_examples() {
        let ones = seq(&[1, 1, 1, 1]);
        assert_eq!(ccf::<f64>(&ones, &ones).unwrap().values(), &[1.0; 4]);
        let alt = seq(&[1, -1, 1, -1]);
        assert_eq!(
            ccf::<f64>(&alt, &alt).unwrap().values(),
            &[1.0, -1.0, 1.0, -1.0]
        );
        let square = seq(&[1, 1, -1, -1]);
        assert_eq!(ccf::<f64>(&square, &alt).unwrap().values(), &[0.0; 4]);
    }

    #[test]
    fn ccf_is_circular() {
        let a = seq(&[1, -1, -1]);
        let b = seq(&[-1, 1, 1]);
        // b rotated by 1 is [1, 1, -1]
        assert_eq!(ccf::<f64>(&a, &b).unwrap().sums(), &[-3, 1, 1]);
    }

    #[test]
    fn ccf_length_mismatch() {
        match ccf::<f64>(&seq(&[1, 1]), &seq(&[1, 1, 1])) {
            Err(Error::LengthMismatch { left: 2, right: 3 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn peak_examples() {
        assert_eq!(peak_ccf(&series(&[4, -4, 4, -4]), false).unwrap(), 1.0);
        assert_eq!(peak_ccf(&series(&[0, 0, 0, 0]), false).unwrap(), 0.0);
        // leading values [1.0, 0.25, -0.5, 0.25], zero elsewhere
        let s = series(&[8, 2, -4, 2, 0, 0, 0, 0]);
        assert_eq!(s.values()[..4], [1.0, 0.25, -0.5, 0.25]);
        assert_eq!(peak_ccf(&s, true).unwrap(), 0.5);
        assert_eq!(peak_ccf(&s, false).unwrap(), 1.0);
    }

    #[test]
    fn impossible_sums_rejected() {
        assert!(CorrelationSeries::<f64>::from_sums(vec![4, 1, -2, 1]).is_err());
        assert!(CorrelationSeries::<f64>::from_sums(vec![3, 5, 1]).is_err());
        assert!(CorrelationSeries::<f64>::from_sums(vec![]).is_err());
    }

    #[test]
    fn raw_peak() {
        let s = series(&[-4, -2, 0, 2]);
        assert_eq!(peak_ccf_with(&s, false, PeakMode::Raw).unwrap(), 0.5);
        assert_eq!(peak_ccf_with(&s, false, PeakMode::Absolute).unwrap(), 1.0);
    }

    #[test]
    fn peak_errors() {
        let s = series(&[1]);
        assert!(matches!(
            peak_ccf(&s, true),
            Err(Error::SeriesTooShort {
                len: 1,
                required: 2
            })
        ));
        assert_eq!(peak_ccf(&s, false).unwrap(), 1.0);
    }

    #[test]
    fn randomness_examples() {
        let ones = seq(&[1, 1, 1, 1]);
        let r: Ratio<i64> = randomness_measure(&ccf(&ones, &ones).unwrap()).unwrap();
        assert_eq!(r, Ratio::from_integer(0));
        let delta = CorrelationSeries::<Ratio<i64>>::from_sums(vec![4, 0, 0, 0]).unwrap();
        assert_eq!(randomness_measure(&delta).unwrap(), Ratio::from_integer(1));
        assert!(randomness_measure(&series(&[1])).is_err());
    }

    #[test]
    fn csv_output() {
        let s = series(&[3, -1, 1]);
        assert_eq!(s.to_csv(), "lag,ccf\n0,1.000000\n1,-0.333333\n2,0.333333\n");
        // 2/256 = 0.0078125 is a tie and rounds to even
        let mut sums = vec![0i64; 256];
        sums[0] = 256;
        sums[1] = 2;
        sums[2] = -6;
        let csv = CorrelationSeries::<f64>::from_sums(sums).unwrap().to_csv();
        assert!(csv.contains("\n1,0.007812\n2,-0.023438\n"), "{csv}");
    }

    #[test]
    fn scalar_instantiations_agree() {
        let a = seq(&[1, -1, -1, 1, -1, 1, 1]);
        let b = seq(&[-1, -1, 1, 1, 1, -1, 1]);
        let exact: CorrelationSeries<Ratio<i64>> = ccf(&a, &b).unwrap();
        let wide: CorrelationSeries<f64> = ccf(&a, &b).unwrap();
        let narrow: CorrelationSeries<f32> = ccf(&a, &b).unwrap();
        assert_eq!(exact.sums(), wide.sums());
        assert_eq!(exact.convert::<f64>(), wide);
        assert_eq!(wide.convert::<f32>(), narrow);
    }
}
