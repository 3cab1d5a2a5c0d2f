//! Scalar fields used throughout the crate.
//!
//! Every exact computation runs over [`Field`] implementors. The exact
//! instances are the rationals and the cyclotomic field `Q(zeta_7)`; the
//! floating-point instances (`f64`, `Complex<f64>`) exist so the same generic
//! code can be replayed numerically as a cross-check.

mod cyclo;
pub mod embed;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rat;

pub use cyclo::Cyclo;

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn try_inv(&self) -> Result<Self>;

    fn from_i64(n: i64) -> Self;

    fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * other.try_inv()?)
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }
}

impl Field for Rat {
    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        Rat::from_integer(n.into())
    }
}

impl Field for f64 {
    fn try_inv(&self) -> Result<Self> {
        if *self == 0.0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(1.0 / self)
        }
    }

    fn from_i64(n: i64) -> Self {
        n as f64
    }
}

impl Field for Complex<f64> {
    fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv())
        }
    }

    fn from_i64(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }
}

/// Parses `"p/q"` or `"p"` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = n.trim().parse().map_err(|_| bad())?;
            let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Formats a rational as `"num/den"`, always with an explicit denominator.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_text_format() {
        let r = parse_rat("-6/4").unwrap();
        assert_eq!(format_rat(&r), "-3/2");
        assert_eq!(format_rat(&parse_rat("7").unwrap()), "7/1");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn pow_by_squaring() {
        let two = Rat::from_i64(2);
        assert_eq!(two.pow(10), Rat::from_i64(1024));
        assert_eq!(two.pow(0), Rat::one());
        assert_eq!(Rat::zero().try_inv(), Err(Error::DivisionByZero));
    }
}
