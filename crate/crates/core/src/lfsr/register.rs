use std::fmt;
use std::str::FromStr;

use super::poly::BinaryPolynomial;
use crate::bipolar::BipolarSequence;
use crate::error::{Error, Result};

/// Longest register supported.
pub const MAX_REGISTER_DEGREE: u32 = 63;

/// Largest degree [`sequence_period`] will simulate.
pub const MAX_SIMULATION_DEGREE: u32 = 24;

/// Initial register contents, most significant stage first.
///
/// The last character is the stage that is output first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed {
    bits: u64,
    len: u32,
}

impl Seed {
    pub fn new(bits: u64, len: u32) -> Result<Self> {
        if len == 0 || len > MAX_REGISTER_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: len,
                max: MAX_REGISTER_DEGREE,
            });
        }
        if bits >> len != 0 {
            return Err(Error::SeedLength {
                expected: len as usize,
                found: 64 - bits.leading_zeros() as usize,
            });
        }
        if bits == 0 {
            return Err(Error::ZeroSeed);
        }
        Ok(Seed { bits, len })
    }

    /// `00...01`: only the output stage set.
    pub fn single_one(len: u32) -> Result<Self> {
        Seed::new(1, len)
    }

    pub fn all_ones(len: u32) -> Result<Self> {
        Seed::new(u64::MAX >> (64 - len.clamp(1, 64)), len)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Register length.
    pub fn width(&self) -> u32 {
        self.len
    }
}

impl FromStr for Seed {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || !s.bytes().all(|c| c == b'0' || c == b'1') {
            return Err(Error::InvalidSeed(s.to_string()));
        }
        if s.len() > MAX_REGISTER_DEGREE as usize {
            return Err(Error::DegreeTooLarge {
                degree: s.len() as u32,
                max: MAX_REGISTER_DEGREE,
            });
        }
        let bits = u64::from_str_radix(s, 2).map_err(|_| Error::InvalidSeed(s.to_string()))?;
        Seed::new(bits, s.len() as u32)
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.len as usize)
    }
}

/// Fibonacci (external XOR) shift register.
///
/// For feedback polynomial `x^d + sum c_e x^e` the output stream satisfies
/// `a[n + d] = sum over e < d with c_e = 1 of a[n + e]`. Bit `i` of the
/// register holds `a[n + i]`, so each step outputs bit 0, shifts right and
/// writes the feedback parity into bit `d - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfsrState {
    poly: BinaryPolynomial,
    register: u64,
    taps: u64,
    degree: u32,
}

impl LfsrState {
    pub fn new(poly: &BinaryPolynomial, seed: &Seed) -> Result<Self> {
        let degree = poly.degree();
        if degree > MAX_REGISTER_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: MAX_REGISTER_DEGREE,
            });
        }
        if !poly.has_constant_term() {
            return Err(Error::MissingConstantTerm(*poly));
        }
        if seed.width() != degree {
            return Err(Error::SeedLength {
                expected: degree as usize,
                found: seed.width() as usize,
            });
        }
        let taps = (poly.mask() & ((1u128 << degree) - 1)) as u64;
        Ok(LfsrState {
            poly: *poly,
            register: seed.bits(),
            taps,
            degree,
        })
    }

    pub fn poly(&self) -> &BinaryPolynomial {
        &self.poly
    }

    pub fn register(&self) -> u64 {
        self.register
    }

    #[inline]
    pub fn step(&mut self) -> u8 {
        let out = (self.register & 1) as u8;
        let feedback = (self.register & self.taps).count_ones() as u64 & 1;
        self.register = (self.register >> 1) | (feedback << (self.degree - 1));
        out
    }

    pub fn advance(&mut self, n: u64) {
        for _ in 0..n {
            self.step();
        }
    }
}

impl Iterator for LfsrState {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        Some(self.step())
    }
}

pub fn lfsr_bits(poly: &BinaryPolynomial, seed: &Seed, count: usize) -> Result<Vec<u8>> {
    if count == 0 {
        return Err(Error::ZeroCount);
    }
    Ok(LfsrState::new(poly, seed)?.take(count).collect())
}

/// Output bits `[offset, offset + length)` mapped to `1 - 2b`.
///
/// The window is checked against the period bound `2^d - 1`, and against the
/// exact period for registers short enough to simulate.
pub fn pn_fragment(
    poly: &BinaryPolynomial,
    seed: &Seed,
    offset: u64,
    length: usize,
) -> Result<BipolarSequence> {
    if length == 0 {
        return Err(Error::ZeroCount);
    }
    let mut state = LfsrState::new(poly, seed)?;
    let end = offset.saturating_add(length as u64);
    let degree = poly.degree();
    if degree <= 16 {
        let period = sequence_period(poly, seed)?;
        if end > period {
            return Err(Error::FragmentExceedsPeriod {
                offset,
                end,
                period,
            });
        }
    } else if degree < 64 && end > (1u64 << degree) - 1 {
        return Err(Error::FragmentExceedsPeriod {
            offset,
            end,
            period: (1u64 << degree) - 1,
        });
    }
    state.advance(offset);
    let bits: Vec<u8> = state.take(length).collect();
    BipolarSequence::from_bits(&bits)
}

/// Smallest `t >= 1` with `state(t) = state(0)`, by walking the register.
pub fn sequence_period(poly: &BinaryPolynomial, seed: &Seed) -> Result<u64> {
    let degree = poly.degree();
    if degree > MAX_SIMULATION_DEGREE {
        return Err(Error::DirectSimulationTooLarge { degree });
    }
    let mut state = LfsrState::new(poly, seed)?;
    let start = state.register;
    let bound = (1u64 << degree) - 1;
    let mut t = 0u64;
    loop {
        state.step();
        t += 1;
        if state.register == start {
            debug_assert!(t <= bound);
            return Ok(t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinaryPolynomial {
        s.parse().unwrap()
    }

    fn seed(s: &str) -> Seed {
        s.parse().unwrap()
    }

    fn bit_string(bits: &[u8]) -> String {
        bits.iter().map(|b| char::from(b'0' + b)).collect()
    }

    #[test]
    fn bits_examples() {
        let poly = p("3,1,0");
        assert_eq!(
            bit_string(&lfsr_bits(&poly, &seed("111"), 7).unwrap()),
            "1110010"
        );
        assert_eq!(
            bit_string(&lfsr_bits(&poly, &seed("111"), 14).unwrap()),
            "11100101110010"
        );
        assert_eq!(
            bit_string(&lfsr_bits(&p("1,0"), &seed("1"), 4).unwrap()),
            "1111"
        );
    }

    #[test]
    fn seed_string_orientation() {
        // last character is output first
        let bits = lfsr_bits(&p("3,1,0"), &seed("001"), 3).unwrap();
        assert_eq!(bits, vec![1, 0, 0]);
        assert_eq!(Seed::single_one(5).unwrap().to_string(), "00001");
        assert_eq!(Seed::all_ones(45).unwrap().to_string(), "1".repeat(45));
    }

    #[test]
    fn bits_errors() {
        let poly = p("3,1,0");
        assert!(matches!("000".parse::<Seed>(), Err(Error::ZeroSeed)));
        assert!(matches!("10x".parse::<Seed>(), Err(Error::InvalidSeed(_))));
        assert!(matches!(
            lfsr_bits(&poly, &seed("11"), 3),
            Err(Error::SeedLength {
                expected: 3,
                found: 2
            })
        ));
        assert!(matches!(
            lfsr_bits(&p("3,1"), &seed("111"), 3),
            Err(Error::MissingConstantTerm(_))
        ));
        assert!(matches!(
            lfsr_bits(&poly, &seed("111"), 0),
            Err(Error::ZeroCount)
        ));
        assert!(matches!(
            Seed::new(0b1000, 3),
            Err(Error::SeedLength { .. })
        ));
    }

    #[test]
    fn fragment_examples() {
        let poly = p("3,1,0");
        let s = seed("111");
        assert_eq!(
            pn_fragment(&poly, &s, 0, 3).unwrap().as_slice(),
            &[-1, -1, -1]
        );
        assert_eq!(pn_fragment(&poly, &s, 3, 2).unwrap().as_slice(), &[1, 1]);
        // first output 0 when the last stage is clear
        assert_eq!(
            pn_fragment(&poly, &seed("110"), 0, 1).unwrap().as_slice(),
            &[1]
        );
        assert!(matches!(
            pn_fragment(&poly, &s, 5, 3),
            Err(Error::FragmentExceedsPeriod { period: 7, .. })
        ));
    }

    #[test]
    fn period_examples() {
        assert_eq!(sequence_period(&p("3,1,0"), &seed("111")).unwrap(), 7);
        for s in 1..16u64 {
            let sd = Seed::new(s, 4).unwrap();
            assert_eq!(sequence_period(&p("4,1,0"), &sd).unwrap(), 15);
        }
        assert_eq!(sequence_period(&p("2,1,0"), &seed("11")).unwrap(), 3);
        // not primitive: x^4+x^3+x^2+x+1 has order 5
        assert_eq!(sequence_period(&p("4,3,2,1,0"), &seed("0001")).unwrap(), 5);
        assert!(matches!(
            sequence_period(&p("45,4,3,1,0"), &Seed::single_one(45).unwrap()),
            Err(Error::DirectSimulationTooLarge { degree: 45 })
        ));
    }

    #[test]
    fn long_register_fragment() {
        let poly = p("45,4,3,1,0");
        let frag = pn_fragment(&poly, &Seed::single_one(45).unwrap(), 0, 63).unwrap();
        assert_eq!(frag[0], -1);
        assert_eq!(frag[45], -1);
        assert_eq!(frag.iter().filter(|&&v| v == -1).count(), 2);
    }
}
