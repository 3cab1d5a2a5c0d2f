//! The projective line over a field, Moebius maps, cross-ratios and
//! projective equivalence of seven-point configurations.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::CycloElem;

/// A point of the projective line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjPoint<F> {
    Finite(F),
    Infinity,
}

impl<F: Field> ProjPoint<F> {
    pub fn finite(x: F) -> Self {
        ProjPoint::Finite(x)
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }

    pub fn value(&self) -> Option<&F> {
        match self {
            ProjPoint::Finite(x) => Some(x),
            ProjPoint::Infinity => None,
        }
    }

    /// Homogeneous coordinates `(x : 1)` or `(1 : 0)`.
    pub fn homogeneous(&self) -> (F, F) {
        match self {
            ProjPoint::Finite(x) => (x.clone(), F::one()),
            ProjPoint::Infinity => (F::one(), F::zero()),
        }
    }

    pub fn from_homogeneous(x: F, y: F) -> Result<Self> {
        if y.is_zero() {
            if x.is_zero() {
                return Err(Error::DegenerateMap);
            }
            Ok(ProjPoint::Infinity)
        } else {
            Ok(ProjPoint::Finite(x.try_div(&y)?))
        }
    }

    /// Equality of homogeneous pairs by cross-multiplication.
    pub fn matches_homogeneous(&self, x: &F, y: &F) -> bool {
        let (u, v) = self.homogeneous();
        u * y.clone() == v * x.clone()
    }
}

impl<F: Field> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(x) => write!(f, "{x}"),
            ProjPoint::Infinity => write!(f, "inf"),
        }
    }
}

/// `x -> (a x + b) / (c x + d)`, stored as its matrix.
#[derive(Clone, Debug)]
pub struct Moebius<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
}

impl<F: Field> PartialEq for Moebius<F> {
    /// Maps are equal when their matrices are proportional.
    fn eq(&self, o: &Self) -> bool {
        let m = [&self.a, &self.b, &self.c, &self.d];
        let n = [&o.a, &o.b, &o.c, &o.d];
        (0..4).all(|i| (i + 1..4).all(|j| m[i].clone() * n[j].clone() == m[j].clone() * n[i].clone()))
    }
}

impl<F: Field> Moebius<F> {
    pub fn new(a: F, b: F, c: F, d: F) -> Result<Self> {
        let m = Self { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::DegenerateMap);
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self { a: F::one(), b: F::zero(), c: F::zero(), d: F::one() }
    }

    pub fn det(&self) -> F {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    /// Image in homogeneous coordinates; never divides.
    pub fn apply_homogeneous(&self, p: &ProjPoint<F>) -> (F, F) {
        let (x, y) = p.homogeneous();
        (
            self.a.clone() * x.clone() + self.b.clone() * y.clone(),
            self.c.clone() * x + self.d.clone() * y,
        )
    }

    pub fn apply(&self, p: &ProjPoint<F>) -> ProjPoint<F> {
        let (x, y) = self.apply_homogeneous(p);
        ProjPoint::from_homogeneous(x, y).expect("nondegenerate map sends points to points")
    }

    /// `self o other`.
    pub fn compose(&self, o: &Self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        Self {
            a: a.clone() * o.a.clone() + b.clone() * o.c.clone(),
            b: a.clone() * o.b.clone() + b.clone() * o.d.clone(),
            c: c.clone() * o.a.clone() + d.clone() * o.c.clone(),
            d: c.clone() * o.b.clone() + d.clone() * o.d.clone(),
        }
    }

    /// Inverse via the adjugate (equal to the inverse up to scalar).
    pub fn inverse(&self) -> Self {
        Self { a: self.d.clone(), b: -self.b.clone(), c: -self.c.clone(), d: self.a.clone() }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// Smallest `n <= max` with `self^n = id`.
    pub fn order(&self, max: u32) -> Option<u32> {
        let id = Self::identity();
        let mut acc = self.clone();
        for n in 1..=max {
            if acc == id {
                return Some(n);
            }
            acc = acc.compose(self);
        }
        None
    }

    /// Fixed points when `c = 0` (so infinity is fixed).
    pub fn fixed_points_affine(&self) -> Option<Vec<ProjPoint<F>>> {
        if !self.c.is_zero() {
            return None;
        }
        let mut out = vec![ProjPoint::Infinity];
        let diff = self.d.clone() - self.a.clone();
        if !diff.is_zero() {
            out.push(ProjPoint::Finite(self.b.try_div(&diff).ok()?));
        }
        Some(out)
    }

    pub fn map_coeffs<G>(&self, f: impl Fn(&F) -> G) -> Moebius<G> {
        Moebius { a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }
}

impl<F: Field> fmt::Display for Moebius<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> (({}) x + ({})) / (({}) x + ({}))", self.a, self.b, self.c, self.d)
    }
}

fn det2<F: Field>(p: &(F, F), q: &(F, F)) -> F {
    p.0.clone() * q.1.clone() - p.1.clone() * q.0.clone()
}

/// The map sending `p -> inf`, `q -> 0`, `r -> 1`.
pub fn three_point_map<F: Field>(p: &ProjPoint<F>, q: &ProjPoint<F>, r: &ProjPoint<F>) -> Result<Moebius<F>> {
    let (hp, hq, hr) = (p.homogeneous(), q.homogeneous(), r.homogeneous());
    // L_s(z) = det(z, s) vanishes exactly at s.
    let lp_r = det2(&hr, &hp);
    let lq_r = det2(&hr, &hq);
    if lp_r.is_zero() || lq_r.is_zero() || det2(&hp, &hq).is_zero() {
        return Err(Error::RepeatedPoints);
    }
    // z -> [L_q(z) L_p(r) : L_p(z) L_q(r)]
    Moebius::new(
        hq.1.clone() * lp_r.clone(),
        -(hq.0.clone() * lp_r),
        hp.1.clone() * lq_r.clone(),
        -(hp.0.clone() * lq_r),
    )
}

/// The map sending each `src[i]` to `dst[i]`.
pub fn map_triple<F: Field>(src: [&ProjPoint<F>; 3], dst: [&ProjPoint<F>; 3]) -> Result<Moebius<F>> {
    let s = three_point_map(src[0], src[1], src[2])?;
    let t = three_point_map(dst[0], dst[1], dst[2])?;
    Ok(t.inverse().compose(&s))
}

/// Image of `p4` under the normalization sending `(p1, p2, p3)` to
/// `(inf, 0, 1)`.
pub fn cross_ratio<F: Field>(p1: &ProjPoint<F>, p2: &ProjPoint<F>, p3: &ProjPoint<F>, p4: &ProjPoint<F>) -> Result<F> {
    let m = three_point_map(p1, p2, p3)?;
    match m.apply(p4) {
        ProjPoint::Finite(x) if !x.is_zero() && x != F::one() => Ok(x),
        _ => Err(Error::RepeatedPoints),
    }
}

/// Seven pairwise distinct points of the projective line.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchPoints<F> {
    points: Vec<ProjPoint<F>>,
}

impl<F: Field> BranchPoints<F> {
    pub fn new(points: Vec<ProjPoint<F>>) -> Result<Self> {
        if points.len() != 7 {
            return Err(Error::Cardinality { expected: 7, got: points.len() });
        }
        for i in 0..7 {
            for j in i + 1..7 {
                if points[i] == points[j] {
                    return Err(Error::RepeatedPoints);
                }
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[ProjPoint<F>] {
        &self.points
    }

    pub fn image(&self, m: &Moebius<F>) -> Self {
        Self { points: self.points.iter().map(|p| m.apply(p)).collect() }
    }

    /// Whether `m` maps this set onto `other` (as sets).
    pub fn maps_onto(&self, m: &Moebius<F>, other: &Self) -> bool {
        maps_points_onto(m, &self.points, &other.points)
    }
}

/// Whether `m` sends every point of `src` into `dst`; for sets of equal size
/// this means onto.
pub fn maps_points_onto<F: Field>(m: &Moebius<F>, src: &[ProjPoint<F>], dst: &[ProjPoint<F>]) -> bool {
    src.len() == dst.len()
        && src.iter().all(|p| {
            let (x, y) = m.apply_homogeneous(p);
            dst.iter().any(|q| q.matches_homogeneous(&x, &y))
        })
}

/// Searches for a Moebius map carrying `s1` onto `s2`.
///
/// The first three points of `s1` are sent, in turn, to each of the 210
/// ordered triples of `s2`; the first map that carries the whole set across
/// is returned.
pub fn branch_sets_equivalent<F: Field>(s1: &BranchPoints<F>, s2: &BranchPoints<F>) -> Option<Moebius<F>> {
    let src = three_point_map(&s1.points[0], &s1.points[1], &s1.points[2]).ok()?;
    let pts = &s2.points;
    for i in 0..7 {
        for j in 0..7 {
            for k in 0..7 {
                if i == j || j == k || i == k {
                    continue;
                }
                let dst = three_point_map(&pts[i], &pts[j], &pts[k]).ok()?;
                let m = dst.inverse().compose(&src);
                if s1.maps_onto(&m, s2) {
                    return Some(m);
                }
            }
        }
    }
    None
}

/// `A(x) = (1 + z)(x - z) / (z (x - 1))`, sending `1 -> inf`, `z -> 0`,
/// `z^2 -> 1`.
pub fn a_map() -> Moebius<CycloElem> {
    let z = CycloElem::zeta();
    let one = CycloElem::one();
    let s = one.clone() + z.clone();
    Moebius::new(s.clone(), -(s * z.clone()), z.clone(), -z).expect("A is nondegenerate")
}

/// The rotation `x -> z x`.
pub fn rotation() -> Moebius<CycloElem> {
    Moebius::new(CycloElem::zeta(), CycloElem::zero(), CycloElem::zero(), CycloElem::one()).expect("rotation")
}
