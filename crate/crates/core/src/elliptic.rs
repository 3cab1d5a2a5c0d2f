//! Elliptic curves as double covers of the line branched at four points.

use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gfc::MuPoint;
use crate::group_h::{fano_lines, k_subgroup, FanoLine};
use crate::moebius::{a_map, cross_ratio, BranchPoints, ProjPoint};
use crate::{CycloElem, Rat};

/// `y^2 = prod (x - r)` over the listed roots; with three roots the fourth
/// branch point is infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleCover<F> {
    branch: [ProjPoint<F>; 4],
}

impl<F: Field> DoubleCover<F> {
    /// From the four branch points of the projective line.
    pub fn from_branch(points: Vec<ProjPoint<F>>) -> Result<Self> {
        let n = points.len();
        let branch: [ProjPoint<F>; 4] = points.try_into().map_err(|_| Error::Cardinality { expected: 4, got: n })?;
        for i in 0..4 {
            for j in i + 1..4 {
                if branch[i] == branch[j] {
                    return Err(Error::RepeatedPoints);
                }
            }
        }
        Ok(Self { branch })
    }

    /// From the finite roots of the right-hand side (3 or 4 of them).
    pub fn from_roots(roots: Vec<F>) -> Result<Self> {
        let mut pts: Vec<ProjPoint<F>> = roots.into_iter().map(ProjPoint::Finite).collect();
        match pts.len() {
            3 => pts.insert(0, ProjPoint::Infinity),
            4 => {}
            n => return Err(Error::Cardinality { expected: 4, got: n }),
        }
        Self::from_branch(pts)
    }

    pub fn branch_points(&self) -> &[ProjPoint<F>; 4] {
        &self.branch
    }

    /// Finite roots of the right-hand side.
    pub fn finite_roots(&self) -> Vec<F> {
        self.branch.iter().filter_map(|p| p.value().cloned()).collect()
    }

    /// Legendre parameter of the branch points in stored order.
    pub fn lambda(&self) -> Result<F> {
        let [a, b, c, d] = &self.branch;
        cross_ratio(a, b, c, d)
    }

    pub fn j_invariant(&self) -> Result<F> {
        j_of_lambda(&self.lambda()?)
    }
}

/// `256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)`.
pub fn j_of_lambda<F: Field>(l: &F) -> Result<F> {
    let one = F::one();
    let num = (l.square() - l.clone() + one.clone()).pow(3) * F::from_i64(256);
    let den = l.square() * (l.clone() - one).square();
    num.try_div(&den)
}

pub fn isomorphic<F: Field>(e1: &DoubleCover<F>, e2: &DoubleCover<F>) -> Result<bool> {
    Ok(e1.j_invariant()? == e2.j_invariant()?)
}

/// `y^2 = prod_{k not in line} (x - mu_k)` with `mu1 = inf`, `mu2 = 0`,
/// `mu3 = 1`.
pub fn t_curve<F: Field>(mu: &MuPoint<F>, line: &FanoLine) -> DoubleCover<F> {
    let pts = (1..=7).filter(|k| !line.contains(k)).map(|k| mu.branch_point(k)).collect();
    DoubleCover::from_branch(pts).expect("Omega points are distinct")
}

/// The seven `T`-curves in Fano-line order.
pub fn t_curves<F: Field>(mu: &MuPoint<F>) -> Vec<(FanoLine, DoubleCover<F>)> {
    fano_lines(k_subgroup())
        .expect("K is free of order 8")
        .into_iter()
        .map(|line| (line, t_curve(mu, &line)))
        .collect()
}

/// Index pairs naming the seven `T`-curves in the displayed table.
pub const T_TABLE_PAIRS: [(usize, usize); 7] = [(1, 2), (1, 3), (1, 5), (2, 3), (2, 6), (3, 4), (4, 7)];

/// Label `Tij` of a line, using the pair from the displayed table that lies
/// on it.
pub fn t_label(line: &FanoLine) -> String {
    let (i, j) = T_TABLE_PAIRS
        .iter()
        .copied()
        .find(|(i, j)| line.contains(i) && line.contains(j))
        .unwrap_or((line[0], line[1]));
    format!("T{i}{j}")
}

fn zeta(k: i64) -> CycloElem {
    CycloElem::zeta_pow(k)
}

fn a_of(k: i64) -> CycloElem {
    a_map().apply(&ProjPoint::Finite(zeta(k))).value().cloned().expect("finite")
}

/// `cos(2 pi k / 7) = (z^k + z^-k) / 2`.
pub fn cos_2pi_7(k: i64) -> CycloElem {
    (zeta(k) + zeta(-k)).scale(&Rat::new(1.into(), 2.into()))
}

/// The displayed curves `E, E1, ..., E6`.
pub fn e_curves_mu0() -> Vec<(&'static str, DoubleCover<CycloElem>)> {
    let one = CycloElem::one();
    let quad = |ks: [i64; 4]| DoubleCover::from_roots(ks.iter().map(|&k| zeta(k)).collect()).expect("distinct roots");
    vec![
        ("E", DoubleCover::from_roots(vec![CycloElem::from_i64(0), one.clone(), a_of(6)]).expect("distinct")),
        ("E1", quad([0, 1, 2, 3])),
        ("E2", quad([0, 1, 2, 4])),
        ("E3", quad([0, 1, 2, 5])),
        ("E4", quad([0, 1, 3, 4])),
        ("E5", quad([0, 1, 4, 5])),
        ("E6", DoubleCover::from_roots(vec![one, cos_2pi_7(1), cos_2pi_7(2), cos_2pi_7(3)]).expect("distinct")),
    ]
}

/// j-invariants of the 35 four-point subsets, in lexicographic subset order.
pub fn thirty_five_factors<F: Field>(branch: &BranchPoints<F>) -> Result<Vec<F>> {
    let p = branch.points();
    let mut out = Vec::with_capacity(35);
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                for d in c + 1..7 {
                    let e = DoubleCover::from_branch(vec![p[a].clone(), p[b].clone(), p[c].clone(), p[d].clone()])?;
                    out.push(e.j_invariant()?);
                }
            }
        }
    }
    Ok(out)
}

/// Groups equal values, keeping first-occurrence order.
pub fn with_multiplicity<F: PartialEq + Clone>(values: &[F]) -> Vec<(F, usize)> {
    let mut out: Vec<(F, usize)> = Vec::new();
    for v in values {
        match out.iter_mut().find(|(w, _)| w == v) {
            Some((_, n)) => *n += 1,
            None => out.push((v.clone(), 1)),
        }
    }
    out
}
