//! Exponent scalars.
//!
//! Monomials, ideals and covers are generic over the unsigned integer type
//! used to store exponents. Cover ideals and their squares never need an
//! exponent above 2, so `u8` is the natural choice for graph work; arbitrary
//! user ideals go through `u32`.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{PrimInt, Unsigned};

use crate::error::{Error, Result};

pub trait Exponent:
    PrimInt + Unsigned + Hash + Debug + Display + FromStr + Default + Send + Sync + 'static
{
    /// Widens to `u64` (always lossless for the supported types).
    #[inline]
    fn as_u64(self) -> u64 {
        self.to_u64().expect("unsigned exponent fits in u64")
    }

    /// Narrows a `u64`, failing when the value does not fit.
    #[inline]
    fn try_from_u64(value: u64) -> Result<Self> {
        Self::from(value).ok_or(Error::ExponentOverflow { value })
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl<T> Exponent for T where
    T: PrimInt + Unsigned + Hash + Debug + Display + FromStr + Default + Send + Sync + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn narrow_rejects_overflow() {
        assert_eq!(u8::try_from_u64(255).unwrap(), 255u8);
        assert_eq!(u8::try_from_u64(256), Err(Error::ExponentOverflow { value: 256 }));
        assert_eq!(u32::try_from_u64(256).unwrap().as_u64(), 256);
        assert_eq!(u16::two(), 2);
    }
}
