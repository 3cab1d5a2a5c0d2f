//! The parameter space `Omega`, the action of `S7 = <A, B>` on it, and the
//! special points `mu0` and `mu~`.
//!
//! A permutation `p` of the seven branch labels acts by
//! `new slot i <- normalized image of old slot p(i)`, where normalization is
//! the Moebius map sending the new slots 1, 2, 3 to `inf, 0, 1`. Acting by
//! `g` then `h` is acting by `g o h`.

use std::collections::{HashMap, VecDeque};

use num_traits::One;

use crate::elliptic::t_curve;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::gfc::MuPoint;
use crate::group_h::{fano_lines, k_subgroup, kstar_subgroup};
use crate::moebius::{maps_points_onto, three_point_map, Moebius, ProjPoint};
use crate::{CycloElem, ModuliPoint};

/// `perm[i - 1]` is the old slot feeding new slot `i`.
pub type Perm = [usize; 7];

pub const IDENTITY: Perm = [1, 2, 3, 4, 5, 6, 7];
/// `A`: swaps the labels of `inf` and `0`.
pub const PI_A: Perm = [2, 1, 3, 4, 5, 6, 7];
/// `B`: the 7-cycle `1 -> 2 -> ... -> 7 -> 1` on label positions.
pub const PI_B: Perm = [7, 1, 2, 3, 4, 5, 6];
/// Label permutation realizing `mu -> mu~`.
pub const DUAL_PERM: Perm = [1, 2, 5, 6, 7, 4, 3];

/// `g` then `h`.
pub fn compose(g: &Perm, h: &Perm) -> Perm {
    std::array::from_fn(|i| g[h[i] - 1])
}

pub fn inverse(p: &Perm) -> Perm {
    let mut out = [0; 7];
    for (i, &v) in p.iter().enumerate() {
        out[v - 1] = i + 1;
    }
    out
}

pub fn perm_of_word(word: &str) -> Result<Perm> {
    word.chars().try_fold(IDENTITY, |acc, c| match c {
        'A' => Ok(compose(&acc, &PI_A)),
        'B' => Ok(compose(&acc, &PI_B)),
        _ => Err(Error::Parse(format!("bad letter {c:?} in group word"))),
    })
}

/// Cycle type, sorted descending.
pub fn cycle_type(p: &Perm) -> Vec<usize> {
    let mut seen = [false; 7];
    let mut out = Vec::new();
    for s in 0..7 {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i] - 1;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `mu -> (1/mu4, 1/mu5, 1/mu6, 1/mu7)`.
pub fn act_a<F: Field>(mu: &MuPoint<F>) -> Result<MuPoint<F>> {
    let v = mu.values();
    MuPoint::new([v[0].try_inv()?, v[1].try_inv()?, v[2].try_inv()?, v[3].try_inv()?])
}

/// `mu -> (mu7/(mu7 - 1), mu7/(mu7 - mu4), mu7/(mu7 - mu5), mu7/(mu7 - mu6))`.
pub fn act_b<F: Field>(mu: &MuPoint<F>) -> Result<MuPoint<F>> {
    let v = mu.values();
    let m7 = &v[3];
    let f = |d: &F| m7.try_div(&(m7.clone() - d.clone()));
    MuPoint::new([f(&F::one())?, f(&v[0])?, f(&v[1])?, f(&v[2])?])
}

/// `T_sigma`: `sigma[k - 4]` is `sigma(k)` for `k = 4..7`.
pub fn act_sigma<F: Field>(sigma: [usize; 4], mu: &MuPoint<F>) -> Result<MuPoint<F>> {
    MuPoint::new(sigma.map(|k| mu.mu(k).clone()))
}

pub fn sigma_perm(sigma: [usize; 4]) -> Perm {
    [1, 2, 3, sigma[0], sigma[1], sigma[2], sigma[3]]
}

pub fn apply_word<F: Field>(mu: &MuPoint<F>, word: &str) -> Result<MuPoint<F>> {
    word.chars().try_fold(mu.clone(), |acc, c| match c {
        'A' => act_a(&acc),
        'B' => act_b(&acc),
        _ => Err(Error::Parse(format!("bad letter {c:?} in group word"))),
    })
}

fn normalizer<F: Field>(mu: &MuPoint<F>, p: &Perm) -> Result<Moebius<F>> {
    three_point_map(&mu.branch_point(p[0]), &mu.branch_point(p[1]), &mu.branch_point(p[2]))
}

/// The action of an arbitrary label permutation, through branch points.
pub fn act_perm<F: Field>(mu: &MuPoint<F>, p: &Perm) -> Result<MuPoint<F>> {
    let m = normalizer(mu, p)?;
    let img = |k: usize| match m.apply(&mu.branch_point(p[k - 1])) {
        ProjPoint::Finite(x) => Ok(x),
        ProjPoint::Infinity => Err(Error::OmegaViolation("branch point sent to infinity".into())),
    };
    MuPoint::new([img(4)?, img(5)?, img(6)?, img(7)?])
}

/// Whether `act_perm(mu, p) = target`, compared without divisions.
pub fn perm_maps_to<F: Field>(mu: &MuPoint<F>, p: &Perm, target: &MuPoint<F>) -> bool {
    let Ok(m) = normalizer(mu, p) else {
        return false;
    };
    (4..=7).all(|k| {
        let (x, y) = m.apply_homogeneous(&mu.branch_point(p[k - 1]));
        target.branch_point(k).matches_homogeneous(&x, &y)
    })
}

/// A group element with a word in `A`, `B` reaching it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliAction {
    pub word: String,
    pub perm: Perm,
}

/// All elements of `<A, B>` by breadth-first search, shortest words first.
pub fn group_closure() -> Vec<ModuliAction> {
    let mut seen: HashMap<Perm, usize> = HashMap::new();
    let mut out = vec![ModuliAction { word: String::new(), perm: IDENTITY }];
    seen.insert(IDENTITY, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (c, g) in [('A', PI_A), ('B', PI_B)] {
            let perm = compose(&out[i].perm, &g);
            if !seen.contains_key(&perm) {
                seen.insert(perm, out.len());
                let mut word = out[i].word.clone();
                word.push(c);
                out.push(ModuliAction { word, perm });
                queue.push_back(out.len() - 1);
            }
        }
    }
    out
}

pub fn group_order() -> usize {
    group_closure().len()
}

/// Shortest word reaching `p`, if `p` lies in `<A, B>`.
pub fn word_for(p: &Perm) -> Option<String> {
    group_closure().into_iter().find(|a| a.perm == *p).map(|a| a.word)
}

/// The element carrying `mu` to `target`, if any.
pub fn equivalent<F: Field>(mu: &MuPoint<F>, target: &MuPoint<F>) -> Option<ModuliAction> {
    group_closure().into_iter().find(|a| perm_maps_to(mu, &a.perm, target))
}

/// `mu~ = (mu6/mu5, mu7/mu5, mu4/mu5, 1/mu5)`.
pub fn dual_mu<F: Field>(mu: &MuPoint<F>) -> Result<MuPoint<F>> {
    let m5 = mu.mu(5);
    MuPoint::new([mu.mu(6).try_div(m5)?, mu.mu(7).try_div(m5)?, mu.mu(4).try_div(m5)?, m5.try_inv()?])
}

/// `(1 + z)(z^(k-1) - 1) / (z^k - 1)` for `k = 3..6`.
pub fn mu0() -> ModuliPoint {
    let z = CycloElem::zeta;
    let one = CycloElem::one();
    let entry = |k: i64| {
        let num = (one.clone() + z()) * (CycloElem::zeta_pow(k - 1) - one.clone());
        num.try_div(&(CycloElem::zeta_pow(k) - one.clone())).expect("z^k != 1")
    };
    MuPoint::new([3, 4, 5, 6].map(entry)).expect("mu0 lies in Omega")
}

/// `x^6 - 5x^4 - 6x^2 - 1` as displayed.
pub fn printed_sextic<F: Field>(x: &F) -> F {
    x.pow(6) - F::from_i64(5) * x.pow(4) - F::from_i64(6) * x.pow(2) - F::one()
}

/// `x^6 - 5x^4 + 6x^2 - 1`, the relation actually satisfied by `mu0_5`.
pub fn corrected_sextic<F: Field>(x: &F) -> F {
    x.pow(6) - F::from_i64(5) * x.pow(4) + F::from_i64(6) * x.pow(2) - F::one()
}

/// The two relations `mu6 = mu5^2 / mu4`, `mu7 = mu5^2`.
pub fn zeta_relations<F: Field>(mu: &MuPoint<F>) -> bool {
    let sq = mu.mu(5).square();
    mu.mu(6).clone() * mu.mu(4).clone() == sq && *mu.mu(7) == sq
}

/// The conditions for `zeta` to lift, with the sextic in its corrected form.
pub fn zeta_condition<F: Field>(mu: &MuPoint<F>) -> bool {
    zeta_relations(mu) && corrected_sextic(mu.mu(5)).is_zero()
}

/// Relabeling of Fano lines induced by `mu -> mu~` (old label to new).
pub fn dual_line_map() -> Perm {
    inverse(&DUAL_PERM)
}

/// `x -> x / mu5` carries each `T`-curve of `K` at `mu` onto the
/// `T`-curve of the relabeled `K*`-line at `mu~`, and the relabeling
/// maps the lines of `K` onto those of `K*`.
pub fn verify_duality<F: Field>(mu: &MuPoint<F>) -> Result<bool> {
    let dual = dual_mu(mu)?;
    let t = Moebius::new(F::one(), F::zero(), F::zero(), mu.mu(5).clone())?;
    let relabel = dual_line_map();
    let kstar_lines = fano_lines(kstar_subgroup())?;
    for line in fano_lines(k_subgroup())? {
        let mut image = line.map(|j| relabel[j - 1]);
        image.sort();
        if !kstar_lines.contains(&image) {
            return Ok(false);
        }
        let src = t_curve(mu, &line);
        let dst = t_curve(&dual, &image);
        if !maps_points_onto(&t, src.branch_points(), dst.branch_points()) {
            return Ok(false);
        }
    }
    Ok(true)
}
