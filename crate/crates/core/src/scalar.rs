//! Exact integer scalars with checked arithmetic.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Sub};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, Zero};

use crate::error::{Error, Result};

/// An exact, signed integer type whose arithmetic reports overflow instead of
/// wrapping. Implemented for every primitive signed integer and for `BigInt`.
pub trait ExactInt:
    Clone
    + Ord
    + Debug
    + Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + Send
    + Sync
{
}

impl<T> ExactInt for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + Send
        + Sync
{
}

pub(crate) fn from_count<T: ExactInt>(count: usize, what: &'static str) -> Result<T> {
    T::from_usize(count).ok_or(Error::Overflow(what))
}

pub(crate) fn checked_pow<T: ExactInt>(base: &T, exp: u32, what: &'static str) -> Result<T> {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or(Error::Overflow(what))?;
    }
    Ok(acc)
}

pub(crate) fn checked_sum<T, I>(terms: I, what: &'static str) -> Result<T>
where
    T: ExactInt,
    I: IntoIterator<Item = Result<T>>,
{
    terms.into_iter().try_fold(T::zero(), |acc, term| {
        acc.checked_add(&term?).ok_or(Error::Overflow(what))
    })
}

/// Overflow-propagating wrapper so closed forms can be written as ordinary
/// arithmetic expressions. `None` means some intermediate step overflowed.
#[derive(Debug, Clone)]
pub(crate) struct Checked<T>(Option<T>);

impl<T: ExactInt> Checked<T> {
    pub(crate) fn new(value: &T) -> Self {
        Checked(Some(value.clone()))
    }

    pub(crate) fn lit(value: i64) -> Self {
        Checked(T::from_i64(value))
    }

    pub(crate) fn count(value: usize) -> Self {
        Checked(T::from_usize(value))
    }

    pub(crate) fn finish(self, what: &'static str) -> Result<T> {
        self.0.ok_or(Error::Overflow(what))
    }

    fn zip(self, rhs: Self, f: impl FnOnce(&T, &T) -> Option<T>) -> Self {
        match (self.0, rhs.0) {
            (Some(a), Some(b)) => Checked(f(&a, &b)),
            _ => Checked(None),
        }
    }
}

impl<T: ExactInt> Add for Checked<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip(rhs, |a, b| a.checked_add(b))
    }
}

impl<T: ExactInt> Sub for Checked<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip(rhs, |a, b| a.checked_sub(b))
    }
}

impl<T: ExactInt> Mul for Checked<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.zip(rhs, |a, b| a.checked_mul(b))
    }
}
