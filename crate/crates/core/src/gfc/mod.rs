//! The quadric model of the genus-49 curve, its automorphisms and its
//! quotients by free `Z2^3` subgroups.

pub mod aut;
pub mod fiber;
pub mod invariants;
pub mod smooth;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::moebius::{BranchPoints, ProjPoint};

/// A parameter `mu = (mu4, mu5, mu6, mu7)` in `Omega`: no entry is 0 or 1
/// and the entries are pairwise distinct.
#[derive(Clone, Debug, PartialEq)]
pub struct MuPoint<F> {
    mu: [F; 4],
}

impl<F: Field> MuPoint<F> {
    pub fn new(mu: [F; 4]) -> Result<Self> {
        for (i, m) in mu.iter().enumerate() {
            if m.is_zero() || *m == F::one() {
                return Err(Error::OmegaViolation(format!("mu{} = {m}", i + 4)));
            }
            for (j, n) in mu.iter().enumerate().skip(i + 1) {
                if m == n {
                    return Err(Error::OmegaViolation(format!("mu{} = mu{}", i + 4, j + 4)));
                }
            }
        }
        Ok(Self { mu })
    }

    pub fn from_ints(v: [i64; 4]) -> Result<Self> {
        Self::new(v.map(F::from_i64))
    }

    /// `mu_k` for `4 <= k <= 7`.
    pub fn mu(&self, k: usize) -> &F {
        &self.mu[k - 4]
    }

    pub fn values(&self) -> &[F; 4] {
        &self.mu
    }

    /// Row coefficients `(1, mu4, mu5, mu6, mu7)` on `x1^2`.
    pub fn alpha(&self) -> [F; 5] {
        [F::one(), self.mu[0].clone(), self.mu[1].clone(), self.mu[2].clone(), self.mu[3].clone()]
    }

    /// Branch point with label `k`: `inf, 0, 1, mu4, ..., mu7`.
    pub fn branch_point(&self, k: usize) -> ProjPoint<F> {
        match k {
            1 => ProjPoint::Infinity,
            2 => ProjPoint::Finite(F::zero()),
            3 => ProjPoint::Finite(F::one()),
            4..=7 => ProjPoint::Finite(self.mu[k - 4].clone()),
            _ => panic!("branch label out of range: {k}"),
        }
    }

    pub fn branch_set(&self) -> BranchPoints<F> {
        BranchPoints::new((1..=7).map(|k| self.branch_point(k)).collect()).expect("Omega points are distinct")
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> MuPoint<G> {
        MuPoint { mu: [f(&self.mu[0]), f(&self.mu[1]), f(&self.mu[2]), f(&self.mu[3])] }
    }
}

impl<F: Field> fmt::Display for MuPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.mu[0], self.mu[1], self.mu[2], self.mu[3])
    }
}

/// The five quadrics `alpha_i x1^2 + x2^2 + x_{i+3}^2 = 0`, `i = 0..5`,
/// with `alpha = (1, mu4, mu5, mu6, mu7)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadrics<F> {
    pub alpha: [F; 5],
}

impl<F: Field> Quadrics<F> {
    /// Coefficient matrix in the squares `x1^2, ..., x7^2` (5 x 7).
    pub fn matrix(&self) -> Vec<Vec<F>> {
        (0..5)
            .map(|i| {
                let mut row = vec![F::zero(); 7];
                row[0] = self.alpha[i].clone();
                row[1] = F::one();
                row[i + 2] = F::one();
                row
            })
            .collect()
    }

    /// Evaluates the five quadrics at a point.
    pub fn eval(&self, x: &[F; 7]) -> [F; 5] {
        std::array::from_fn(|i| self.alpha[i].clone() * x[0].square() + x[1].square() + x[i + 2].square())
    }
}

pub fn build_quadrics<F: Field>(mu: &MuPoint<F>) -> Quadrics<F> {
    Quadrics { alpha: mu.alpha() }
}

/// A monomial in `x1, ..., x7`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub exp: [u32; 7],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exp: [0; 7] }
    }

    /// Product of the listed variables, with repetition.
    pub fn of(vars: &[usize]) -> Self {
        let mut exp = [0; 7];
        for &v in vars {
            exp[v - 1] += 1;
        }
        Monomial { exp }
    }

    pub fn degree(&self) -> u32 {
        self.exp.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial { exp: std::array::from_fn(|i| self.exp[i] + o.exp[i]) }
    }

    /// Parity vector: bit `j - 1` set when `x_j` has odd exponent.
    pub fn parity(&self) -> u8 {
        (0..7).fold(0, |acc, j| acc | ((self.exp[j] & 1) as u8) << j)
    }

    /// Renames `x_j` to `x_{perm[j-1]}`.
    pub fn relabel(&self, perm: &[usize; 7]) -> Monomial {
        let mut exp = [0; 7];
        for j in 0..7 {
            exp[perm[j] - 1] = self.exp[j];
        }
        Monomial { exp }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        for (j, &e) in self.exp.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", j + 1)?,
                _ => write!(f, "x{}^{e}", j + 1)?,
            }
        }
        Ok(())
    }
}
