//! Smoothness of the quadric model by case analysis on which coordinates
//! vanish.
//!
//! On the curve the squares satisfy `x_k^2 = -alpha_k x1^2 - x2^2` for
//! `k >= 3`, so every square is a linear form in `(x1^2, x2^2)`. Any two of
//! these forms are independent on `Omega`, which rules out two vanishing
//! coordinates. The remaining eight patterns each get a 5 x 5 minor of the
//! Jacobian that expands to a single nonzero monomial.

use std::collections::BTreeMap;

use super::{Monomial, MuPoint};
use crate::field::Field;

/// One vanishing pattern and how it was discharged.
#[derive(Clone, Debug)]
pub enum Verdict<F> {
    /// No nonzero point has exactly this pattern; `reason` is the equation
    /// that forces `x1 = x2 = 0`, and `coefficient` is its nonzero factor.
    Inconsistent { reason: String, coefficient: F },
    /// A nonsingular minor: the determinant on `columns` (1-based) is
    /// `coefficient * monomial`, up to the common factor `2^5`.
    Minor { columns: [usize; 5], coefficient: F, monomial: Monomial },
}

#[derive(Clone, Debug)]
pub struct PatternCase<F> {
    /// Coordinates (1-based) that vanish; all others are nonzero.
    pub zeros: Vec<usize>,
    pub verdict: Verdict<F>,
}

#[derive(Clone, Debug)]
pub struct SmoothCertificate<F> {
    pub cases: Vec<PatternCase<F>>,
    /// Patterns that could not be discharged.
    pub failures: Vec<Vec<usize>>,
}

impl<F: Field> SmoothCertificate<F> {
    pub fn is_smooth(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn case(&self, zeros: &[usize]) -> Option<&PatternCase<F>> {
        self.cases.iter().find(|c| c.zeros == zeros)
    }
}

/// Coefficient of `x1^2` in the quadric that contains `x_k^2`, `k >= 3`.
fn alpha<F: Field>(mu: &MuPoint<F>, k: usize) -> F {
    mu.alpha()[k - 3].clone()
}

fn alpha_label(k: usize) -> String {
    if k == 3 {
        "1".into()
    } else {
        format!("mu{k}")
    }
}

/// Jacobian entry `(coefficient, variable)` at row `r`, column `c`
/// (0-based), dropping the factor 2.
fn jacobian_entry<F: Field>(mu: &MuPoint<F>, r: usize, c: usize) -> Option<(F, usize)> {
    match c {
        0 => Some((mu.alpha()[r].clone(), 1)),
        1 => Some((F::one(), 2)),
        _ if c == r + 2 => Some((F::one(), c + 1)),
        _ => None,
    }
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<(Vec<usize>, bool)>) {
        if prefix.len() == n {
            let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| prefix[i] > prefix[j]).count();
            out.push((prefix.clone(), inversions % 2 == 1));
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

/// Leibniz expansion of the minor on `columns` (1-based), collected by
/// monomial; zero terms are dropped.
pub fn symbolic_minor<F: Field>(mu: &MuPoint<F>, columns: [usize; 5]) -> Vec<(F, Monomial)> {
    let mut terms: BTreeMap<Monomial, F> = BTreeMap::new();
    for (perm, odd) in permutations(5) {
        let mut coef = F::one();
        let mut vars = Vec::new();
        let mut zero = false;
        for (r, &p) in perm.iter().enumerate() {
            match jacobian_entry(mu, r, columns[p] - 1) {
                Some((c, v)) => {
                    coef = coef * c;
                    vars.push(v);
                }
                None => {
                    zero = true;
                    break;
                }
            }
        }
        if zero {
            continue;
        }
        if odd {
            coef = -coef;
        }
        let m = Monomial::of(&vars);
        let acc = terms.remove(&m).unwrap_or_else(F::zero) + coef;
        terms.insert(m, acc);
    }
    terms.into_iter().filter(|(_, c)| !c.is_zero()).map(|(m, c)| (c, m)).collect()
}

fn inconsistent<F: Field>(mu: &MuPoint<F>, zeros: &[usize]) -> (String, F) {
    let (a, b) = (zeros[0], zeros[1]);
    match (a, b) {
        (1, 2) => ("x1 = x2 = 0 forces every coordinate to vanish".into(), F::one()),
        // x_b^2 = -alpha_b x1^2 - x2^2 with x1 = 0
        (1, _) => ("x2^2 = 0".into(), F::one()),
        (2, _) => {
            let label = alpha_label(b);
            let reason = if b == 3 { "x1^2 = 0".to_string() } else { format!("{label}*x1^2 = 0") };
            (reason, alpha(mu, b))
        }
        // subtracting the rows of x_a^2 and x_b^2
        _ => (format!("({} - {})*x1^2 = 0", alpha_label(b), alpha_label(a)), alpha(mu, b) - alpha(mu, a)),
    }
}

/// Columns of the minor used for an admissible pattern.
fn minor_columns(zeros: &[usize]) -> [usize; 5] {
    match zeros {
        [] | [1] | [2] => [3, 4, 5, 6, 7],
        [k] => {
            let mut cols = [2, 0, 0, 0, 0];
            let rest: Vec<usize> = (3..=7).filter(|c| c != k).collect();
            cols[1..].copy_from_slice(&rest);
            cols
        }
        _ => unreachable!("only patterns with at most one zero are admissible"),
    }
}

/// Discharges all 127 vanishing patterns of a nonzero point.
pub fn smoothness_certificate<F: Field>(mu: &MuPoint<F>) -> SmoothCertificate<F> {
    let mut cases = Vec::new();
    let mut failures = Vec::new();
    for mask in 0u8..127 {
        let zeros: Vec<usize> = (1..=7).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let verdict = if zeros.len() >= 2 {
            let (reason, coefficient) = inconsistent(mu, &zeros);
            if coefficient.is_zero() {
                failures.push(zeros.clone());
            }
            Verdict::Inconsistent { reason, coefficient }
        } else {
            let columns = minor_columns(&zeros);
            match symbolic_minor(mu, columns).as_slice() {
                [(c, m)] if m.exp.iter().enumerate().all(|(j, &e)| e == 0 || !zeros.contains(&(j + 1))) => {
                    Verdict::Minor { columns, coefficient: c.clone(), monomial: *m }
                }
                _ => {
                    failures.push(zeros.clone());
                    Verdict::Minor { columns, coefficient: F::zero(), monomial: Monomial::one() }
                }
            }
        };
        cases.push(PatternCase { zeros, verdict });
    }
    SmoothCertificate { cases, failures }
}
