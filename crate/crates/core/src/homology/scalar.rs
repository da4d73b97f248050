//! Integer entry types for elimination: `i64` that reports overflow, and `BigInt`.
//!
//! Eliminations run on `i64` first and restart on `BigInt` if any operation
//! overflows, so results are always exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) type Checked<T> = Result<T, Overflow>;

pub(crate) trait Entry: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - a * b`
    fn sub_mul(&self, a: &Self, b: &Self) -> Checked<Self>;
    fn mul(&self, other: &Self) -> Checked<Self>;
    /// Non-negative gcd.
    fn gcd(&self, other: &Self) -> Checked<Self>;
    /// Exact quotient; `other` divides `self`.
    fn div_exact(&self, other: &Self) -> Checked<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Entry for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }

    fn is_nil(&self) -> bool {
        *self == 0
    }

    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }

    fn sub_mul(&self, a: &Self, b: &Self) -> Checked<Self> {
        a.checked_mul(*b)
            .and_then(|p| self.checked_sub(p))
            .ok_or(Overflow)
    }

    fn mul(&self, other: &Self) -> Checked<Self> {
        self.checked_mul(*other).ok_or(Overflow)
    }

    fn gcd(&self, other: &Self) -> Checked<Self> {
        // |i64::MIN| is not representable
        if *self == i64::MIN || *other == i64::MIN {
            return Err(Overflow);
        }
        Ok(Integer::gcd(self, other))
    }

    fn div_exact(&self, other: &Self) -> Checked<Self> {
        self.checked_div(*other).ok_or(Overflow)
    }

    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn sub_mul(&self, a: &Self, b: &Self) -> Checked<Self> {
        Ok(self - a * b)
    }

    fn mul(&self, other: &Self) -> Checked<Self> {
        Ok(self * other)
    }

    fn gcd(&self, other: &Self) -> Checked<Self> {
        Ok(Integer::gcd(self, other))
    }

    fn div_exact(&self, other: &Self) -> Checked<Self> {
        Ok(self / other)
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}
