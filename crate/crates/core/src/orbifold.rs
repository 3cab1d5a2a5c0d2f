//! Riemann-Hurwitz bookkeeping for the quotients of the genus-49 curve.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group_h::{generate, preimage, GroupElem, Subgroup};
use crate::moebius::{rotation, ProjPoint};
use crate::{CycloElem, Rat};

/// Genus and cone orders of a quotient orbifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbSignature {
    pub genus: u32,
    pub cone_orders: Vec<u32>,
}

impl fmt::Display for OrbSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cones: Vec<String> = self.cone_orders.iter().map(u32::to_string).collect();
        if cones.is_empty() {
            write!(f, "({})", self.genus)
        } else {
            write!(f, "({}; {})", self.genus, cones.join(", "))
        }
    }
}

/// Signature of `S / J` for the genus-49 curve `S`.
///
/// `S / J` covers the sphere with group `H / J` of order `d`. Over the
/// `k`-th branch point there are `d / 2` points of index 2 when `a_k` is
/// not in `J`; otherwise there are `d` unramified points, each a cone point
/// of order 2.
pub fn quotient_genus_and_cones(j: Subgroup) -> OrbSignature {
    let d = (64 / j.order()) as i64;
    let in_j: Vec<bool> = (1..=7).map(|k| j.contains(GroupElem::generator(k))).collect();
    let ramification: i64 = in_j.iter().filter(|&&b| !b).count() as i64 * d / 2;
    let two_g_minus_2 = -2 * d + ramification;
    let cones = in_j.iter().filter(|&&b| b).count() as i64 * d;
    OrbSignature { genus: (two_g_minus_2 / 2 + 1) as u32, cone_orders: vec![2; cones as usize] }
}

/// Fixed points of the involution induced by `a_r` on `S / k`.
///
/// Points of `S / k` over branch point `m` have stabilizer generated by the
/// image of `a_m`, so `a_r` fixes the `|H/k| / 2` points over each `m` with
/// `a_m = a_r` modulo `k`.
pub fn fixed_point_count(r: usize, k: Subgroup) -> Result<u32> {
    if !(1..=7).contains(&r) {
        return Err(Error::Precondition(format!("involution index {r} out of range")));
    }
    let ar = GroupElem::generator(r);
    if k.contains(ar) {
        return Err(Error::Precondition(format!("a{r} lies in the subgroup")));
    }
    let half = (64 / k.order() / 2) as u32;
    Ok((1..=7).filter(|&m| k.contains(GroupElem::generator(m) * ar)).count() as u32 * half)
}

/// `(0; 2, 7, 7)`: the sphere with cone points at the seventh roots of
/// unity, divided by `z -> z z7`.
pub fn rotation_quotient_signature() -> OrbSignature {
    let rot = rotation();
    let cones: Vec<ProjPoint<CycloElem>> = (0..7).map(|k| ProjPoint::Finite(CycloElem::zeta_pow(k))).collect();
    let order = rot.order(7).expect("rotation has finite order") as u32;
    // Orbits of the cone points; each orbit of size `order` keeps order 2.
    let mut seen = vec![false; cones.len()];
    let mut cone_orders = Vec::new();
    for i in 0..cones.len() {
        if seen[i] {
            continue;
        }
        let mut p = cones[i].clone();
        let mut size = 0;
        loop {
            let idx = cones.iter().position(|q| *q == p).expect("rotation preserves the cone set");
            if seen[idx] {
                break;
            }
            seen[idx] = true;
            size += 1;
            p = rot.apply(&p);
        }
        cone_orders.push(2 * order / size);
    }
    let fixed = rot.fixed_points_affine().expect("rotation fixes infinity");
    debug_assert_eq!(fixed, vec![ProjPoint::Infinity, ProjPoint::Finite(CycloElem::zero())]);
    cone_orders.extend(std::iter::repeat(order).take(fixed.len()));
    cone_orders.sort();
    // Orbifold Euler characteristics multiply by the degree of the cover.
    let cover = OrbSignature { genus: 0, cone_orders: vec![2; cones.len()] };
    let chi = euler_characteristic(&cover) / Rat::from_i64(order as i64);
    let cone_sum: Rat = cone_orders.iter().map(|&m| Rat::one() - Rat::new(1.into(), (m as i64).into())).sum();
    let two_minus_2g = chi + cone_sum;
    let genus = (Rat::from_i64(2) - two_minus_2g) / Rat::from_i64(2);
    assert!(genus.is_integer(), "Riemann-Hurwitz gives a non-integral genus");
    OrbSignature { genus: genus.to_integer().try_into().expect("small genus"), cone_orders }
}

/// `2 - 2g - sum (1 - 1/m)`.
pub fn euler_characteristic(sig: &OrbSignature) -> Rat {
    let defect: Rat = sig.cone_orders.iter().map(|&m| Rat::one() - Rat::new(1.into(), (m as i64).into())).sum();
    Rat::from_i64(2 - 2 * sig.genus as i64) - defect
}

/// Solutions `(g0, r)` of `2 * 7 - 2 = 8 (2 g0 - 2) + 4 r`: a genus-7 curve
/// with a `Z2^3` action whose quotient has genus `g0` and `r` cone points of
/// order 2.
pub fn sg_dichotomy() -> Vec<(u32, u32)> {
    (0..=7u32)
        .flat_map(|g0| (0..=7u32).map(move |r| (g0, r)))
        .filter(|&(g0, r)| 12 == 8 * (2 * g0 as i64 - 2) + 4 * r as i64)
        .collect()
}

/// Orders of automorphisms of a genus-1 surface fixing a point.
pub const TORUS_POINT_STABILIZER_ORDERS: [u32; 5] = [1, 2, 3, 4, 6];

/// Checks the three Kani-Rosen hypotheses for the seven order-4 subgroups
/// `L` of `H / k` (given by their preimages): pairwise products commute,
/// each `S_k / L` has genus 1, each `S_k / (L L')` has genus 0, and the
/// genera add up to the genus of `S_k`.
pub fn kani_rosen(k: Subgroup, lines: &[[usize; 3]]) -> bool {
    let subs: Vec<Subgroup> = lines.iter().map(|l| preimage(k, l)).collect();
    let g_total = quotient_genus_and_cones(k).genus;
    let each_one = subs.iter().all(|s| quotient_genus_and_cones(*s).genus == 1);
    let sum: u32 = subs.iter().map(|s| quotient_genus_and_cones(*s).genus).sum();
    let pairs = subs.iter().enumerate().all(|(i, a)| {
        subs.iter().skip(i + 1).all(|b| a.product(*b) == b.product(*a) && quotient_genus_and_cones(a.product(*b)).genus == 0)
    });
    each_one && pairs && sum == g_total
}

/// The seven order-2 subgroups `<a_r*>` of `H / k`, lifted to `H`.
pub fn involution_preimages(k: Subgroup) -> Vec<Subgroup> {
    (1..=7).map(|r| generate(&[GroupElem::generator(r)]).product(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_h::{fano_lines, k_subgroup, kstar_subgroup};

    #[test]
    fn genus_chain() {
        let k = k_subgroup();
        assert_eq!(quotient_genus_and_cones(Subgroup::trivial()), OrbSignature { genus: 49, cone_orders: vec![] });
        assert_eq!(quotient_genus_and_cones(k).genus, 7);
        assert!(quotient_genus_and_cones(k).cone_orders.is_empty());
        assert_eq!(quotient_genus_and_cones(Subgroup::whole()), OrbSignature { genus: 0, cone_orders: vec![2; 7] });
        let l23 = preimage(k, &[2, 3]);
        assert_eq!(quotient_genus_and_cones(l23), OrbSignature { genus: 1, cone_orders: vec![2; 6] });
        for s in involution_preimages(k) {
            assert_eq!(quotient_genus_and_cones(s), OrbSignature { genus: 3, cone_orders: vec![2; 4] });
        }
    }

    #[test]
    fn fixed_points() {
        let k = k_subgroup();
        let counts: Vec<u32> = (1..=7).map(|r| fixed_point_count(r, k).unwrap()).collect();
        assert_eq!(counts, vec![4; 7]);
        assert_eq!(counts.iter().sum::<u32>(), 28);
        // 2 * 7 - 2 = 8 (0 - 2) + 28
        assert_eq!(2 * 7 - 2, 8 * -2 + 28);
        let with_a1 = generate(&[GroupElem::generator(1)]);
        assert!(fixed_point_count(1, with_a1).is_err());
        assert!(fixed_point_count(8, k).is_err());
    }

    #[test]
    fn rotation_signature() {
        assert_eq!(rotation_quotient_signature(), OrbSignature { genus: 0, cone_orders: vec![2, 7, 7] });
        assert_eq!(rotation_quotient_signature().to_string(), "(0; 2, 7, 7)");
    }

    #[test]
    fn dichotomy() {
        assert_eq!(sg_dichotomy(), vec![(0, 7), (1, 3)]);
        assert!(!TORUS_POINT_STABILIZER_ORDERS.contains(&7));
    }

    #[test]
    fn kani_rosen_hypotheses() {
        for k in [k_subgroup(), kstar_subgroup()] {
            assert!(kani_rosen(k, &fano_lines(k).unwrap()));
        }
    }
}
