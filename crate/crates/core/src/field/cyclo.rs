use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Field;
use crate::error::{Error, Result};

/// Number of power-basis coordinates of `Q(zeta_7)`.
pub const DEGREE: usize = 6;

/// An element `c0 + c1 z + ... + c5 z^5` of the seventh cyclotomic field over
/// the coefficient field `T`, where `z = exp(2 pi i / 7)`.
///
/// The representation is canonical: `z^6` is always rewritten as
/// `-(1 + z + ... + z^5)`, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo<T> {
    c: [T; DEGREE],
}

impl<T: Field> Cyclo<T> {
    pub fn from_coeffs(c: [T; DEGREE]) -> Self {
        Self { c }
    }

    pub fn from_scalar(x: T) -> Self {
        let mut c: [T; DEGREE] = std::array::from_fn(|_| T::zero());
        c[0] = x;
        Self { c }
    }

    /// `z^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(7) as usize;
        if k == 6 {
            Self { c: std::array::from_fn(|_| -T::one()) }
        } else {
            let mut c: [T; DEGREE] = std::array::from_fn(|_| T::zero());
            c[k] = T::one();
            Self { c }
        }
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    pub fn coeffs(&self) -> &[T; DEGREE] {
        &self.c
    }

    /// True when the element lies in the coefficient field.
    pub fn is_scalar(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { c: std::array::from_fn(|i| self.c[i].clone() * s.clone()) }
    }

    /// Reduces a polynomial in `z` of any degree to canonical form.
    fn reduce(mut p: Vec<T>) -> Self {
        for d in (7..p.len()).rev() {
            let v = std::mem::replace(&mut p[d], T::zero());
            p[d - 7] = p[d - 7].clone() + v;
        }
        p.resize(7, T::zero());
        let top = p[6].clone();
        Self { c: std::array::from_fn(|i| p[i].clone() - top.clone()) }
    }

    /// The Galois automorphism `z -> z^k`, `k` coprime to 7.
    pub fn galois(&self, k: i64) -> Self {
        assert!(k.rem_euclid(7) != 0, "z -> z^0 is not an automorphism");
        let mut p = vec![T::zero(); 7];
        for (i, ci) in self.c.iter().enumerate() {
            let e = (i as i64 * k).rem_euclid(7) as usize;
            p[e] = p[e].clone() + ci.clone();
        }
        Self::reduce(p)
    }

    /// Field norm down to the coefficient field: the product of all six
    /// conjugates.
    pub fn norm(&self) -> T {
        let mut acc = self.clone();
        for k in 2..7 {
            acc = acc * self.galois(k);
        }
        debug_assert!(acc.is_scalar());
        acc.c[0].clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if rhs.is_scalar() {
            return self.scale(&rhs.c[0]);
        }
        if self.is_scalar() {
            return rhs.scale(&self.c[0]);
        }
        let mut p = vec![T::zero(); 2 * DEGREE - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    p[i + j] = p[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Self::reduce(p)
    }

    /// Inverse by the extended Euclidean algorithm against
    /// `Phi_7 = 1 + x + ... + x^6`.
    fn inv_euclid(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_scalar() {
            return Ok(Self::from_scalar(self.c[0].try_inv()?));
        }
        let mut r0 = poly::trim(vec![T::one(); 7]);
        let mut r1 = poly::trim(self.c.to_vec());
        let mut s0: Vec<T> = Vec::new();
        let mut s1 = vec![T::one()];
        while !r1.is_empty() {
            let (q, r) = poly::divrem(&r0, &r1)?;
            let s2 = poly::sub(&s0, &poly::mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is the gcd; Phi_7 is irreducible so it is a nonzero constant.
        if r0.len() != 1 {
            return Err(Error::DivisionByZero);
        }
        let g = r0[0].try_inv()?;
        Ok(Self::reduce(s0).scale(&g))
    }
}

mod poly {
    //! Dense univariate polynomials, lowest degree first, no trailing zeros.
    use super::Field;
    use crate::error::{Error, Result};

    pub fn trim<T: Field>(mut p: Vec<T>) -> Vec<T> {
        while p.last().is_some_and(|x| x.is_zero()) {
            p.pop();
        }
        p
    }

    pub fn sub<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(T::zero);
                let y = b.get(i).cloned().unwrap_or_else(T::zero);
                x - y
            })
            .collect();
        trim(out)
    }

    pub fn mul<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![T::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        trim(out)
    }

    pub fn divrem<T: Field>(a: &[T], b: &[T]) -> Result<(Vec<T>, Vec<T>)> {
        let lead = b.last().ok_or(Error::DivisionByZero)?.try_inv()?;
        let mut r = a.to_vec();
        if r.len() < b.len() {
            return Ok((Vec::new(), r));
        }
        let mut q = vec![T::zero(); r.len() - b.len() + 1];
        for k in (0..q.len()).rev() {
            let coef = r[k + b.len() - 1].clone() * lead.clone();
            if coef.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                r[k + j] = r[k + j].clone() - coef.clone() * bj.clone();
            }
            q[k] = coef;
        }
        r.truncate(b.len() - 1);
        Ok((trim(q), trim(r)))
    }
}

impl<T: Field> Zero for Cyclo<T> {
    fn zero() -> Self {
        Self { c: std::array::from_fn(|_| T::zero()) }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl<T: Field> One for Cyclo<T> {
    fn one() -> Self {
        Self::from_scalar(T::one())
    }
}

impl<T: Field> Add for Cyclo<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Field> Add for &Cyclo<T> {
    type Output = Cyclo<T>;
    fn add(self, rhs: Self) -> Cyclo<T> {
        Cyclo { c: std::array::from_fn(|i| self.c[i].clone() + rhs.c[i].clone()) }
    }
}

impl<T: Field> Sub for Cyclo<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Field> Sub for &Cyclo<T> {
    type Output = Cyclo<T>;
    fn sub(self, rhs: Self) -> Cyclo<T> {
        Cyclo { c: std::array::from_fn(|i| self.c[i].clone() - rhs.c[i].clone()) }
    }
}

impl<T: Field> Mul for Cyclo<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<T: Field> Mul for &Cyclo<T> {
    type Output = Cyclo<T>;
    fn mul(self, rhs: Self) -> Cyclo<T> {
        self.mul_ref(rhs)
    }
}

impl<T: Field> Neg for Cyclo<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclo { c: self.c.map(|x| -x) }
    }
}

impl<T: Field> Field for Cyclo<T> {
    fn try_inv(&self) -> Result<Self> {
        self.inv_euclid()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_scalar(T::from_i64(n))
    }
}

impl<T: Field> fmt::Display for Cyclo<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<T: Field> fmt::Debug for Cyclo<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{self}]")
    }
}
