use std::fmt;
use std::ops::{Deref, Neg};

use crate::error::{Error, Result};

/// A non-empty sequence over `{+1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipolarSequence(Vec<i8>);

impl BipolarSequence {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(&bad) = values.iter().find(|&&v| v != 1 && v != -1) {
            return Err(Error::InvalidSymbol(bad as i64));
        }
        Ok(BipolarSequence(values))
    }

    /// Maps bit `b` to `1 - 2b`, so 0 becomes +1 and 1 becomes -1.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptySequence);
        }
        bits.iter()
            .map(|&b| match b {
                0 => Ok(1),
                1 => Ok(-1),
                other => Err(Error::InvalidSymbol(other as i64)),
            })
            .collect::<Result<Vec<_>>>()
            .map(BipolarSequence)
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i8> {
        self.0
    }

    /// Contiguous window `[offset, offset + len)`.
    pub fn window(&self, offset: usize, len: usize) -> Result<Self> {
        let end = offset
            .checked_add(len)
            .filter(|&end| end <= self.0.len())
            .ok_or(Error::SeriesTooShort {
                len: self.0.len(),
                required: offset.saturating_add(len),
            })?;
        BipolarSequence::new(self.0[offset..end].to_vec())
    }

    /// Cyclic left rotation by `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        let n = v.len();
        v.rotate_left(k % n);
        BipolarSequence(v)
    }
}

impl Deref for BipolarSequence {
    type Target = [i8];

    fn deref(&self) -> &[i8] {
        &self.0
    }
}

impl Neg for &BipolarSequence {
    type Output = BipolarSequence;

    fn neg(self) -> BipolarSequence {
        BipolarSequence(self.0.iter().map(|&v| -v).collect())
    }
}

impl fmt::Display for BipolarSequence {
    /// Comma-separated, `1` and `-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
