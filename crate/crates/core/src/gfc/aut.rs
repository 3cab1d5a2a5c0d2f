//! Linear automorphisms `y_i = c_i x_{source(i)}` of the quadric model,
//! checked through the squares `c_i^2` only.

use num_traits::One;

use super::{build_quadrics, MuPoint};
use crate::field::Field;
use crate::linalg::rank;
use crate::moebius::a_map;
use crate::{CycloElem, P1Point};

/// A scaled coordinate permutation: new coordinate `i` is
/// `c_i * x_{source[i-1]}`, recorded through `squared_scalars[i-1] = c_i^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearAut<F> {
    pub source: [usize; 7],
    pub squared_scalars: [F; 7],
}

/// Pulls back the five quadrics: the coefficient `q_{k,i}` of `y_i^2` moves
/// to column `source[i]` multiplied by `s_i`.
pub fn pulled_back_rows<F: Field>(mu: &MuPoint<F>, w: &LinearAut<F>) -> Vec<Vec<F>> {
    build_quadrics(mu)
        .matrix()
        .into_iter()
        .map(|row| {
            let mut out = vec![F::zero(); 7];
            for (i, q) in row.into_iter().enumerate() {
                let c = w.source[i] - 1;
                out[c] = out[c].clone() + q * w.squared_scalars[i].clone();
            }
            out
        })
        .collect()
}

/// True iff every pulled-back quadric lies in the span of the original
/// five, i.e. the stacked 10 x 7 matrix still has rank 5.
pub fn verify_linear_aut<F: Field>(mu: &MuPoint<F>, w: &LinearAut<F>) -> bool {
    if w.squared_scalars.iter().any(|s| s.is_zero()) {
        return false;
    }
    let mut rows = build_quadrics(mu).matrix();
    rows.extend(pulled_back_rows(mu, w));
    rank(&rows) == 5
}

/// `A(z^k)` as a field element.
pub fn a_of_zeta(k: i64) -> CycloElem {
    match a_map().apply(&P1Point::Finite(CycloElem::zeta_pow(k))) {
        P1Point::Finite(v) => v,
        P1Point::Infinity => panic!("A(z^{k}) is infinite"),
    }
}

/// The order-7 lift `[x7 : c2 x1 : x2 : c4 x3 : c5 x4 : c6 x5 : c7 x6]`.
///
/// With `signs = true` the squares are `c2^2 = A(z^6)` and
/// `c_k^2 = -A(z^{k-1})` for `k = 4..7`; `false` drops the minus signs.
pub fn t_hat_witness(signs: bool) -> LinearAut<CycloElem> {
    let one = CycloElem::one();
    let s = |k: i64| if signs { -a_of_zeta(k) } else { a_of_zeta(k) };
    LinearAut {
        source: [7, 1, 2, 3, 4, 5, 6],
        squared_scalars: [one.clone(), a_of_zeta(6), one, s(3), s(4), s(5), s(6)],
    }
}

/// The involutive lift `[x2 : d2 x1 : x7 : d4 x6 : d5 x5 : d6 x4 : d7 x3]`
/// with `d2^2 = d7^2 = A(z^6)`, `d4^2 = A(z^3)`, `d5^2 = A(z^4)`,
/// `d6^2 = A(z^5)`; `negate = true` flips the signs of `d4^2 .. d7^2`.
pub fn u_witness(negate: bool) -> LinearAut<CycloElem> {
    let one = CycloElem::one();
    let s = |k: i64| if negate { -a_of_zeta(k) } else { a_of_zeta(k) };
    LinearAut {
        source: [2, 1, 7, 6, 5, 4, 3],
        squared_scalars: [one.clone(), a_of_zeta(6), one, s(3), s(4), s(5), s(6)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn mu0() -> MuPoint<CycloElem> {
        MuPoint::new([3, 4, 5, 6].map(a_of_zeta)).unwrap()
    }

    #[test]
    fn lifts_at_mu0() {
        assert!(verify_linear_aut(&mu0(), &t_hat_witness(true)));
        assert!(!verify_linear_aut(&mu0(), &t_hat_witness(false)));
        assert!(verify_linear_aut(&mu0(), &u_witness(false)));
        assert!(!verify_linear_aut(&mu0(), &u_witness(true)));
    }

    #[test]
    fn t_hat_fails_at_generic_point() {
        let mu = MuPoint::<CycloElem>::from_ints([2, 3, 4, 5]).unwrap();
        assert!(!verify_linear_aut(&mu, &t_hat_witness(true)));
        assert!(!verify_linear_aut(&mu, &t_hat_witness(false)));
    }

    #[test]
    fn sign_flips_are_automorphisms() {
        let mu = MuPoint::<Rat>::from_ints([2, 3, 4, 5]).unwrap();
        let flip = LinearAut { source: [1, 2, 3, 4, 5, 6, 7], squared_scalars: [1; 7].map(Rat::from_i64) };
        assert!(verify_linear_aut(&mu, &flip));
        let swap = LinearAut { source: [2, 1, 3, 4, 5, 6, 7], squared_scalars: [1; 7].map(Rat::from_i64) };
        assert!(!verify_linear_aut(&mu, &swap));
    }
}
