//! Invariant monomials of a free `Z2^3` subgroup in the affine chart
//! `x7 = 1`, and the binomial and linear relations among them.

use super::{build_quadrics, Monomial, MuPoint};
use crate::field::Field;
use crate::group_h::{GroupElem, Subgroup};

/// Sign of `g` on `m`: the canonical mask of `g` never involves `x7`, so in
/// the chart `x7 = 1` it acts by flipping the coordinates in its mask.
pub fn sign(g: GroupElem, m: &Monomial) -> i32 {
    if (g.mask() & m.parity()).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn is_invariant(k: Subgroup, m: &Monomial) -> bool {
    k.elements().into_iter().all(|g| sign(g, m) == 1)
}

/// All monomials in `x1..x6` of degree `1..=max_degree`.
fn monomials_up_to(max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exp = [0u32; 7];
    fn rec(pos: usize, left: u32, exp: &mut [u32; 7], out: &mut Vec<Monomial>) {
        if pos == 6 {
            let m = Monomial { exp: *exp };
            if m.degree() > 0 {
                out.push(m);
            }
            return;
        }
        for e in 0..=left {
            exp[pos] = e;
            rec(pos + 1, left - e, exp, out);
        }
        exp[pos] = 0;
    }
    rec(0, max_degree, &mut exp, &mut out);
    out
}

/// Minimal generators among the invariant monomials of degree at most 4:
/// invariant monomials that are not a product of two nonconstant invariant
/// monomials. Squares come first, then the rest ordered by degree and
/// exponent vector.
pub fn invariant_monomials(k: Subgroup) -> Vec<Monomial> {
    let inv: Vec<Monomial> = monomials_up_to(4).into_iter().filter(|m| is_invariant(k, m)).collect();
    let mut gens: Vec<Monomial> = inv
        .iter()
        .filter(|m| {
            !inv.iter().any(|d| {
                d != *m && d.exp.iter().zip(m.exp.iter()).all(|(a, b)| a <= b) && {
                    let q = Monomial { exp: std::array::from_fn(|i| m.exp[i] - d.exp[i]) };
                    q.degree() > 0 && is_invariant(k, &q)
                }
            })
        })
        .copied()
        .collect();
    gens.sort_by_key(|m| (m.parity() != 0, m.degree(), std::cmp::Reverse(m.exp)));
    gens
}

/// `t1, ..., t13` as displayed for `K`.
pub fn t_monomials() -> [Monomial; 13] {
    [
        Monomial::of(&[1, 1]),
        Monomial::of(&[2, 2]),
        Monomial::of(&[3, 3]),
        Monomial::of(&[4, 4]),
        Monomial::of(&[5, 5]),
        Monomial::of(&[6, 6]),
        Monomial::of(&[1, 2, 5]),
        Monomial::of(&[1, 2, 3, 6]),
        Monomial::of(&[1, 4, 6]),
        Monomial::of(&[1, 3, 4, 5]),
        Monomial::of(&[2, 4, 5, 6]),
        Monomial::of(&[2, 3, 4]),
        Monomial::of(&[3, 5, 6]),
    ]
}

/// A relation `prod t_lhs = prod t_rhs` between t-variables (1-based).
#[derive(Clone, Debug, PartialEq)]
pub struct Binomial {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

/// The thirty binomial relations among `t1, ..., t13`.
pub fn binomial_relations() -> Vec<Binomial> {
    let table: [(&[usize], &[usize]); 30] = [
        (&[6, 10], &[9, 13]),
        (&[6, 7, 12], &[8, 11]),
        (&[5, 9, 12], &[10, 11]),
        (&[5, 8], &[7, 13]),
        (&[5, 6, 12], &[11, 13]),
        (&[4, 8], &[9, 12]),
        (&[4, 7, 13], &[10, 11]),
        (&[4, 6, 7], &[9, 11]),
        (&[3, 11], &[12, 13]),
        (&[3, 6, 7], &[8, 13]),
        (&[3, 5, 9], &[10, 13]),
        (&[3, 5, 6], &[13, 13]),
        (&[3, 4, 7], &[10, 12]),
        (&[2, 10], &[7, 12]),
        (&[2, 9, 13], &[8, 11]),
        (&[2, 5, 9], &[7, 11]),
        (&[2, 4, 13], &[11, 12]),
        (&[2, 4, 5, 6], &[11, 11]),
        (&[2, 3, 9], &[8, 12]),
        (&[2, 3, 4], &[12, 12]),
        (&[1, 12, 13], &[8, 10]),
        (&[1, 11], &[7, 9]),
        (&[1, 6, 12], &[8, 9]),
        (&[1, 5, 12], &[7, 10]),
        (&[1, 4, 13], &[9, 10]),
        (&[1, 4, 6], &[9, 9]),
        (&[1, 3, 4, 5], &[10, 10]),
        (&[1, 2, 13], &[7, 8]),
        (&[1, 2, 5], &[7, 7]),
        (&[1, 2, 3, 6], &[8, 8]),
    ];
    table.iter().map(|(l, r)| Binomial { lhs: l.to_vec(), rhs: r.to_vec() }).collect()
}

pub fn expand(ts: &[Monomial], idx: &[usize]) -> Monomial {
    idx.iter().fold(Monomial::one(), |acc, &i| acc.mul(&ts[i - 1]))
}

/// Both sides of a binomial after substituting the t-monomials.
pub fn binomial_sides(ts: &[Monomial], b: &Binomial) -> (Monomial, Monomial) {
    (expand(ts, &b.lhs), expand(ts, &b.rhs))
}

/// The five linear relations `alpha_i t1 + t2 + t_{i+3} = 0`, with the last
/// `t`-slot replaced by the constant 1, as coefficient rows over
/// `(t1, ..., t6, 1)`.
pub fn linear_relations<F: Field>(mu: &MuPoint<F>) -> Vec<[F; 7]> {
    mu.alpha()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut row: [F; 7] = std::array::from_fn(|_| F::zero());
            row[0] = a.clone();
            row[1] = F::one();
            row[i + 2] = F::one();
            row
        })
        .collect()
}

/// Outcome of checking the quotient model's relation system.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub binomials_ok: usize,
    pub linear_ok: usize,
    pub failures: Vec<String>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.binomials_ok == 30 && self.linear_ok == 5
    }
}

/// Checks the thirty binomials as monomial identities and the five linear
/// rows against the quadrics dehomogenized at `x7 = 1`.
pub fn verify_quotient_relations<F: Field>(mu: &MuPoint<F>) -> RelationCheck {
    let ts = t_monomials();
    let mut failures = Vec::new();
    let mut binomials_ok = 0;
    for b in binomial_relations() {
        let (l, r) = binomial_sides(&ts, &b);
        if l == r {
            binomials_ok += 1;
        } else {
            failures.push(format!("{:?} = {:?}: {l} != {r}", b.lhs, b.rhs));
        }
    }
    // t_j = x_j^2 for j <= 6 and the constant stands for x7^2 = 1, so each
    // row must be the corresponding quadric's coefficient row verbatim.
    let quad = build_quadrics(mu).matrix();
    let mut linear_ok = 0;
    for (i, (row, q)) in linear_relations(mu).iter().zip(quad.iter()).enumerate() {
        let squares_are_t = (0..6).all(|j| ts[j] == Monomial::of(&[j + 1, j + 1]));
        if squares_are_t && row.as_slice() == q.as_slice() {
            linear_ok += 1;
        } else {
            failures.push(format!("linear row {}", i + 1));
        }
    }
    RelationCheck { binomials_ok, linear_ok, failures }
}

/// Signs of `t1..t13` under `g`.
pub fn sign_pattern(ts: &[Monomial], g: GroupElem) -> Vec<i32> {
    ts.iter().map(|m| sign(g, m)).collect()
}

/// The displayed generators of `G`, as signs on `t1..t13`.
pub fn displayed_involutions() -> [[i32; 13]; 3] {
    let from_negated = |neg: &[usize]| std::array::from_fn(|i| if neg.contains(&(i + 1)) { -1 } else { 1 });
    [from_negated(&[7, 8, 9, 10]), from_negated(&[7, 8, 11, 12]), from_negated(&[8, 10, 12, 13])]
}

/// Renames coordinates by the chart-preserving relabeling `(1 6)(2 5)(3 4)`,
/// which carries `K` onto `K*`.
pub const K_TO_KSTAR: [usize; 7] = [6, 5, 4, 3, 2, 1, 7];

/// The t-monomials for `K*`, transported from those of `K`.
pub fn t_monomials_kstar() -> [Monomial; 13] {
    t_monomials().map(|m| m.relabel(&K_TO_KSTAR))
}
