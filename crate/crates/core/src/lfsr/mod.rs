//! Linear feedback shift registers over GF(2) and the polynomial algebra used
//! to prove their periods.
//!
//! A register with a primitive feedback polynomial of degree `d` produces an
//! m-sequence of period `2^d - 1`. For degrees too large to simulate, the
//! period is certified by [`poly_order`] instead.

mod mersenne;
mod poly;
mod register;

pub use mersenne::{factor_mersenne, MAX_MERSENNE_EXPONENT};
pub use poly::{poly_order, BinaryPolynomial, MAX_ORDER_DEGREE, MAX_POLY_DEGREE};
pub use register::{
    lfsr_bits, pn_fragment, sequence_period, LfsrState, Seed, MAX_REGISTER_DEGREE,
    MAX_SIMULATION_DEGREE,
};

/// `z^45 + z^4 + z^3 + z + 1`, primitive, period `2^45 - 1`.
pub const DEFAULT_POLY: &str = "45,4,3,1,0";

/// A second primitive degree-45 pentanomial for cross-generator comparisons.
pub const DEFAULT_SECOND_POLY: &str = "45,6,4,1,0";
