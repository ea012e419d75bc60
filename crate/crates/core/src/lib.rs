//! Gopala-Hemachandra residue sequences, LFSR pseudo-noise sequences and
//! periodic cross-correlation metrics.
//!
//! - [`gh`]: GH residues modulo `m`, exact periods, the prime period classes
//!   and the bipolar sequence B(n).
//! - [`lfsr`]: Fibonacci shift registers over GF(2), polynomial order and
//!   m-sequence certification.
//! - [`correlation`]: periodic CCF, peak CCF and the randomness measure.
//! - [`harness`]: fragment experiments, the peak comparison table, CSV and SVG
//!   output.
//!
//! Correlation code is generic over [`scalar::CcfScalar`] and GH code over
//! [`scalar::Residue`]; the aliases below name the usual instantiations.

pub mod bipolar;
pub mod correlation;
mod decimal;
pub mod error;
pub mod gh;
pub mod harness;
pub mod lfsr;
pub mod primes;
pub mod scalar;

pub use bipolar::BipolarSequence;
pub use correlation::{
    ccf, peak_ccf, peak_ccf_with, randomness_measure, CorrelationSeries, PeakMode,
};
pub use decimal::format_ratio;
pub use error::{Error, Result};
pub use gh::{
    b_sequence, classify_prime, composite_bound_sweep, gh_period, gh_residues,
    verify_period_theorem, GhParams, PeriodClass, PeriodReport,
};
pub use lfsr::{
    factor_mersenne, lfsr_bits, pn_fragment, poly_order, sequence_period, BinaryPolynomial,
    LfsrState, Seed,
};
pub use primes::primes_in_range;

/// Exact rational used for bit-reproducible correlation output.
pub type Exact = num_rational::Ratio<i64>;

pub type CorrelationSeriesF32 = CorrelationSeries<f32>;
pub type CorrelationSeriesF64 = CorrelationSeries<f64>;
pub type ExactCorrelationSeries = CorrelationSeries<Exact>;

pub type GhParams16 = GhParams<u16>;
pub type GhParams32 = GhParams<u32>;
pub type GhParams64 = GhParams<u64>;
