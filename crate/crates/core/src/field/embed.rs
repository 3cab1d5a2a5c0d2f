//! Complex embeddings of `Q(zeta_7)`.
//!
//! [`embed`] gives a rigorous enclosure: fixed-point midpoints with an explicit
//! radius, built from scratch (Machin's formula for pi, Taylor series for the
//! trigonometric values). It never decides equality; it is the numerical
//! channel against which exact results are cross-checked.
//!
//! [`embed_approx`] is the plain floating-point evaluation, generic over the
//! float type.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, FloatConst, Signed, ToPrimitive, Zero};

use crate::{CycloElem, Rat};

/// Guard bits carried on top of the requested precision.
const GUARD_BITS: u32 = 32;

/// A real interval `[mid - rad, mid + rad] * 2^-bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    mid: BigInt,
    rad: BigInt,
    bits: u32,
}

impl Ball {
    fn exact(mid: BigInt, bits: u32) -> Self {
        Self { mid, rad: BigInt::zero(), bits }
    }

    fn from_rat(r: &Rat, bits: u32) -> Self {
        let scaled = r.numer() << bits;
        let (q, rem) = scaled.div_mod_floor(r.denom());
        let rad = if rem.is_zero() { BigInt::zero() } else { BigInt::from(1) };
        Self { mid: q, rad, bits }
    }

    fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        Self { mid: &self.mid + &o.mid, rad: &self.rad + &o.rad, bits: self.bits }
    }

    fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        Self { mid: &self.mid - &o.mid, rad: &self.rad + &o.rad, bits: self.bits }
    }

    fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.bits, o.bits);
        let prod = &self.mid * &o.mid;
        let err = self.mid.abs() * &o.rad + o.mid.abs() * &self.rad + &self.rad * &o.rad;
        let (mid, rem) = prod.div_mod_floor(&(BigInt::from(1) << self.bits));
        let mut rad = ceil_shift(&err, self.bits);
        if !rem.is_zero() {
            rad += 1;
        }
        Self { mid, rad, bits: self.bits }
    }

    /// Re-expresses the ball at a coarser scale; the result encloses `self`.
    pub fn coarsen(&self, bits: u32) -> Self {
        assert!(bits <= self.bits);
        let shift = self.bits - bits;
        let (mid, rem) = self.mid.div_mod_floor(&(BigInt::from(1) << shift));
        let mut rad = ceil_shift(&self.rad, shift);
        if !rem.is_zero() {
            rad += 1;
        }
        Self { mid, rad, bits }
    }

    /// Whether two enclosures can contain a common value.
    pub fn overlaps(&self, o: &Self) -> bool {
        let bits = self.bits.min(o.bits);
        let (a, b) = (self.coarsen(bits), o.coarsen(bits));
        (&a.mid - &b.mid).abs() <= &a.rad + &b.rad
    }

    pub fn mid_f64(&self) -> f64 {
        scaled_to_f64(&self.mid, self.bits)
    }

    /// An upper bound on the radius as an `f64`.
    pub fn radius_f64(&self) -> f64 {
        scaled_to_f64(&self.rad, self.bits) * (1.0 + 1e-12)
    }

    /// An upper bound on `|x|` for every `x` in the ball.
    pub fn abs_upper_f64(&self) -> f64 {
        scaled_to_f64(&(self.mid.abs() + &self.rad), self.bits) * (1.0 + 1e-12)
    }
}

fn ceil_shift(x: &BigInt, shift: u32) -> BigInt {
    let d = BigInt::from(1) << shift;
    let (q, r) = x.div_mod_floor(&d);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

fn scaled_to_f64(x: &BigInt, bits: u32) -> f64 {
    // Shift down first so huge midpoints do not overflow.
    let excess = x.bits().saturating_sub(60) as u32;
    let top = (x >> excess).to_f64().unwrap_or(f64::NAN);
    let exp = excess as i32 - bits as i32;
    top * 2f64.powi(exp)
}

/// A complex interval: independent real and imaginary balls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBall {
    pub re: Ball,
    pub im: Ball,
}

impl ComplexBall {
    pub fn add(&self, o: &Self) -> Self {
        Self { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.re.overlaps(&o.re) && self.im.overlaps(&o.im)
    }

    /// Working scale of the midpoints, in bits.
    pub fn bits(&self) -> u32 {
        self.re.bits
    }

    pub fn midpoint(&self) -> Complex<f64> {
        Complex::new(self.re.mid_f64(), self.im.mid_f64())
    }

    /// Upper bound on the distance from the midpoint to any enclosed value.
    pub fn radius_f64(&self) -> f64 {
        self.re.radius_f64().hypot(self.im.radius_f64()) * (1.0 + 1e-12)
    }

    /// Upper bound on `|z|` over the enclosure.
    pub fn abs_upper_f64(&self) -> f64 {
        self.re.abs_upper_f64().hypot(self.im.abs_upper_f64()) * (1.0 + 1e-12)
    }
}

/// `atan(1/n)` at scale `2^-bits`, as (midpoint, radius in ulps).
fn atan_inv(n: u32, bits: u32) -> (BigInt, BigInt) {
    let n2 = BigInt::from(n) * n;
    let mut term = (BigInt::from(1) << bits) / n;
    let mut sum = term.clone();
    let mut k: u32 = 1;
    loop {
        term /= &n2;
        if term.is_zero() {
            break;
        }
        let t = &term / (2 * k + 1);
        if k % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        k += 1;
    }
    // Each term carries at most 3 ulps of truncation error; the neglected
    // tail is below one ulp.
    (sum, BigInt::from(3 * (k + 2)))
}

/// `cos(theta)` and `sin(theta)` from a Taylor series evaluated at the exact
/// fixed-point value `theta * 2^-bits` (assumed `|theta| < 1.5`).
fn cos_sin(theta: &BigInt, bits: u32) -> ((BigInt, BigInt), (BigInt, BigInt)) {
    let one = BigInt::from(1) << bits;
    let theta2 = (theta * theta) >> bits;
    let series = |first: BigInt, offset: u64| {
        let mut term = first;
        let mut sum = term.clone();
        let mut k: u64 = 1;
        loop {
            let denom = (2 * k - 1 + offset) * (2 * k + offset);
            term = ((&term * &theta2) >> bits) / denom;
            if term.is_zero() {
                break;
            }
            if k % 2 == 1 {
                sum -= &term;
            } else {
                sum += &term;
            }
            k += 1;
        }
        // Term k accumulates at most k+1 ulps (theta^2 itself is truncated);
        // the tail is below the last computed term.
        let rad = BigInt::from((k + 2) * (k + 3));
        (sum, rad)
    };
    (series(one, 0), series(theta.clone(), 1))
}

/// `exp(2 pi i / 7)` at scale `2^-bits`.
fn primitive_root(bits: u32) -> ComplexBall {
    let (a5, r5) = atan_inv(5, bits);
    let (a239, r239) = atan_inv(239, bits);
    let pi = BigInt::from(16) * a5 - BigInt::from(4) * a239;
    let pi_rad = BigInt::from(16) * r5 + BigInt::from(4) * r239;
    let theta = (&pi * 2) / 7;
    let theta_rad = (&pi_rad * 2) / 7 + 2;
    let ((c, cr), (s, sr)) = cos_sin(&theta, bits);
    // |d cos| and |d sin| are bounded by |d theta|.
    ComplexBall {
        re: Ball { mid: c, rad: cr + &theta_rad, bits },
        im: Ball { mid: s, rad: sr + &theta_rad, bits },
    }
}

/// Rigorous enclosure of the image of `a` under `zeta -> exp(2 pi i / 7)`.
///
/// The returned radius is below `2^-(precision/2)` for elements with
/// moderate coefficients; callers read it via [`ComplexBall::radius_f64`].
pub fn embed(a: &CycloElem, precision: u32) -> ComplexBall {
    assert!(precision >= 64, "embedding precision must be at least 64 bits");
    let bits = precision + GUARD_BITS;
    let z = primitive_root(bits);
    let one = ComplexBall {
        re: Ball::exact(BigInt::from(1) << bits, bits),
        im: Ball::exact(BigInt::zero(), bits),
    };
    let zero = ComplexBall {
        re: Ball::exact(BigInt::zero(), bits),
        im: Ball::exact(BigInt::zero(), bits),
    };
    let mut power = one;
    let mut acc = zero;
    for c in a.coeffs() {
        if !c.is_zero() {
            let cb = Ball::from_rat(c, bits);
            let term = ComplexBall { re: cb.mul(&power.re), im: cb.mul(&power.im) };
            acc = acc.add(&term);
        }
        power = power.mul(&z);
    }
    acc
}

/// Floating-point image of `a`, generic over the float type.
pub fn embed_approx<F: Float + FloatConst>(a: &CycloElem) -> Complex<F> {
    let theta = F::TAU() / F::from(7).unwrap();
    a.coeffs()
        .iter()
        .enumerate()
        .fold(Complex::new(F::zero(), F::zero()), |acc, (k, c)| {
            let angle = theta * F::from(k).unwrap();
            let cf = rat_to_float::<F>(c);
            acc + Complex::new(angle.cos(), angle.sin()) * cf
        })
}

fn rat_to_float<F: Float>(r: &Rat) -> F {
    // Keep about 64 significant bits from each side before converting.
    let shift_n = r.numer().bits().saturating_sub(64) as u32;
    let shift_d = r.denom().bits().saturating_sub(64) as u32;
    let nf = F::from((r.numer() >> shift_n).to_f64().unwrap()).unwrap();
    let df = F::from((r.denom() >> shift_d).to_f64().unwrap()).unwrap();
    nf / df * F::from(2.0).unwrap().powi(shift_n as i32 - shift_d as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn embeds_one_exactly() {
        let b = embed(&CycloElem::one(), 128);
        let m = b.midpoint();
        assert_eq!(m, Complex::new(1.0, 0.0));
        assert!(b.radius_f64() < 1e-40);
    }

    #[test]
    fn twice_cosine() {
        // z + z^6 = 2 cos(2 pi / 7)
        let x = CycloElem::zeta() + CycloElem::zeta_pow(6);
        let b = embed(&x, 128);
        let expect = 2.0 * (std::f64::consts::TAU / 7.0).cos();
        assert!((b.midpoint().re - expect).abs() < 1e-15);
        assert!(b.midpoint().im.abs() < 1e-30);
        assert!((b.midpoint().re - 1.246_979_603_717_467).abs() < 1e-15);
    }

    #[test]
    fn radius_meets_half_precision_bound() {
        let x = CycloElem::from_coeffs(std::array::from_fn(|i| Rat::new((i as i64 * 7 - 11).into(), 3.into())));
        for p in [64u32, 128, 256] {
            let b = embed(&x, p);
            assert!(b.radius_f64() < 2f64.powi(-(p as i32) / 2), "precision {p}");
        }
    }

    #[test]
    fn approx_matches_rigorous_midpoint() {
        let x = CycloElem::zeta_pow(3) + CycloElem::zeta_pow(5).scale(&Rat::new((-5).into(), 2.into()));
        let a: Complex<f64> = embed_approx(&x);
        let b = embed(&x, 96).midpoint();
        assert!((a - b).norm() < 1e-13);
        let a32: Complex<f32> = embed_approx(&x);
        assert!((a32.re as f64 - b.re).abs() < 1e-5);
    }

    #[test]
    fn rat_to_float_handles_signs_and_size() {
        let r = Rat::new((-7).into(), 2.into());
        assert_eq!(rat_to_float::<f64>(&r), -3.5);
        let big = Rat::new(BigInt::from(3) << 200, BigInt::from(1) << 199);
        assert!((rat_to_float::<f64>(&big) - 6.0).abs() < 1e-12);
    }
}
