use super::Elem;
use crate::{Error, Result};
use std::fmt::Display;

/// A semiring with a (possibly partial) Kleene star.
///
/// Integers use wrapping arithmetic, so the laws hold in Z/2^64; star is
/// only defined at zero.
pub trait StarSemiring: Elem + Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn star(&self) -> Result<Self>;
    /// Image of an integer literal (scalars in expressions are integers).
    fn from_int(n: i64) -> Self;
    /// Whether `x + x = x` holds, which licenses deduplicating sums.
    fn idempotent() -> bool;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn try_not(&self) -> Result<Self> {
        Err(Error::NotBoolean)
    }

    fn sum_of<'a>(items: impl IntoIterator<Item = &'a Self>) -> Self {
        items.into_iter().fold(Self::zero(), |acc, x| acc.plus(x))
    }
}

impl StarSemiring for bool {
    fn zero() -> Self {
        false
    }
    fn one() -> Self {
        true
    }
    fn plus(&self, other: &Self) -> Self {
        *self || *other
    }
    fn times(&self, other: &Self) -> Self {
        *self && *other
    }
    fn star(&self) -> Result<Self> {
        Ok(true)
    }
    fn from_int(n: i64) -> Self {
        n != 0
    }
    fn idempotent() -> bool {
        true
    }
    fn try_not(&self) -> Result<Self> {
        Ok(!*self)
    }
}

impl StarSemiring for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn plus(&self, other: &Self) -> Self {
        self.wrapping_add(*other)
    }
    fn times(&self, other: &Self) -> Self {
        self.wrapping_mul(*other)
    }
    fn star(&self) -> Result<Self> {
        if *self == 0 {
            Ok(1)
        } else {
            Err(Error::NotStarrable(self.to_string()))
        }
    }
    fn from_int(n: i64) -> Self {
        n
    }
    fn idempotent() -> bool {
        false
    }
}
