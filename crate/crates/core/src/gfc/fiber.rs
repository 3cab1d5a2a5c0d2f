//! Fiber products of three `T`-curves as plane-free models of the genus-7
//! quotients, and comparison with displayed models.

use std::collections::BTreeSet;

use super::MuPoint;
use crate::elliptic::{t_curve, DoubleCover};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group_h::{fano_lines, k_subgroup, kstar_subgroup, FanoLine, Subgroup};
use crate::moebius::{Moebius, ProjPoint};

/// Which free subgroup the quotient is taken by.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quotient {
    K,
    KStar,
}

impl Quotient {
    pub fn subgroup(self) -> Subgroup {
        match self {
            Quotient::K => k_subgroup(),
            Quotient::KStar => kstar_subgroup(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Quotient::K => "K",
            Quotient::KStar => "Kstar",
        }
    }
}

/// Three double covers whose fiber product over the `x`-line is the quotient
/// curve.
#[derive(Clone, Debug)]
pub struct FiberProduct<F> {
    pub rows: Vec<(FanoLine, DoubleCover<F>)>,
}

/// The line of `lines` through indices `i` and `j`.
pub fn line_through(lines: &[FanoLine], i: usize, j: usize) -> Option<FanoLine> {
    lines.iter().copied().find(|l| l.contains(&i) && l.contains(&j))
}

/// Three lines meet in no common point; then the three order-4 subgroups
/// intersect trivially and the fiber product recovers the quotient.
pub fn non_concurrent(lines: &[FanoLine; 3]) -> bool {
    (1..=7).all(|p| !lines.iter().all(|l| l.contains(&p)))
}

/// Uses the lines through the index pairs `(2, 3)`, `(1, 2)`, `(1, 3)`.
pub fn fiber_product_model<F: Field>(mu: &MuPoint<F>, q: Quotient) -> Result<FiberProduct<F>> {
    let lines = fano_lines(q.subgroup())?;
    let pick = [(2, 3), (1, 2), (1, 3)].map(|(i, j)| line_through(&lines, i, j).expect("Fano planes join any two points"));
    if !non_concurrent(&pick) {
        return Err(Error::Precondition("chosen lines are concurrent".into()));
    }
    Ok(FiberProduct { rows: pick.iter().map(|l| (*l, t_curve(mu, l))).collect() })
}

/// Branch labels `{1..7} \ line`.
pub fn complement(line: &FanoLine) -> BTreeSet<usize> {
    (1..=7).filter(|k| !line.contains(k)).collect()
}

/// A displayed model, each row given by its set of branch labels
/// (`1` = infinity, `2` = 0, `3` = 1, `k` = `mu_k`).
pub fn displayed_rows(q: Quotient) -> [BTreeSet<usize>; 3] {
    let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<usize>>();
    match q {
        Quotient::K => [set(&[1, 4, 6, 7]), set(&[3, 5, 6, 7]), set(&[2, 4, 5, 6])],
        Quotient::KStar => [set(&[1, 4, 5, 6]), set(&[1, 4, 5, 6]), set(&[2, 3, 4, 6])],
    }
}

/// How a displayed model relates to the derived Fano lines.
#[derive(Clone, Debug, PartialEq)]
pub struct DisplayComparison {
    /// For each displayed row, the line whose complement it is.
    pub row_lines: Vec<Option<FanoLine>>,
    /// Pairs of displayed rows (1-based) with equal right-hand sides.
    pub repeated: Vec<(usize, usize)>,
    /// Displayed rows (1-based) that differ from the derived model's row.
    pub differs: Vec<usize>,
}

impl DisplayComparison {
    pub fn consistent(&self) -> bool {
        self.row_lines.iter().all(Option::is_some) && self.repeated.is_empty() && self.differs.is_empty()
    }
}

pub fn compare_display(q: Quotient) -> Result<DisplayComparison> {
    let lines = fano_lines(q.subgroup())?;
    let shown = displayed_rows(q);
    let row_lines = shown.iter().map(|row| lines.iter().copied().find(|l| complement(l) == *row)).collect();
    let mut repeated = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            if shown[i] == shown[j] {
                repeated.push((i + 1, j + 1));
            }
        }
    }
    let derived = [(2, 3), (1, 2), (1, 3)].map(|(i, j)| line_through(&lines, i, j).expect("Fano plane"));
    let differs = (0..3).filter(|&i| complement(&derived[i]) != shown[i]).map(|i| i + 1).collect();
    Ok(DisplayComparison { row_lines, repeated, differs })
}

/// Images of each row's branch points under `m` (as point lists).
pub fn pullback_branch<F: Field>(model: &FiberProduct<F>, m: &Moebius<F>) -> Vec<Vec<ProjPoint<F>>> {
    model.rows.iter().map(|(_, e)| e.branch_points().iter().map(|p| m.apply(p)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn k_model_rows() {
        let mu = MuPoint::<Rat>::from_ints([2, 3, 4, 5]).unwrap();
        let fp = fiber_product_model(&mu, Quotient::K).unwrap();
        let lines: Vec<FanoLine> = fp.rows.iter().map(|r| r.0).collect();
        assert_eq!(lines, vec![[2, 3, 5], [1, 2, 4], [1, 3, 7]]);
        let roots: Vec<Vec<Rat>> = fp.rows.iter().map(|r| r.1.finite_roots()).collect();
        let r = |v: &[i64]| v.iter().map(|&x| Rat::from_i64(x)).collect::<Vec<_>>();
        // (x - mu4)(x - mu6)(x - mu7); (x - 1)(x - mu5)(x - mu6)(x - mu7); x(x - mu4)(x - mu5)(x - mu6)
        assert_eq!(roots, vec![r(&[2, 4, 5]), r(&[1, 3, 4, 5]), r(&[0, 2, 3, 4])]);
    }

    #[test]
    fn k_display_matches() {
        assert!(compare_display(Quotient::K).unwrap().consistent());
    }

    #[test]
    fn kstar_display_has_repeated_row() {
        let c = compare_display(Quotient::KStar).unwrap();
        assert_eq!(c.repeated, vec![(1, 2)]);
        assert_eq!(c.row_lines, vec![Some([2, 3, 7]), Some([2, 3, 7]), Some([1, 5, 7])]);
        assert_eq!(c.differs, vec![2, 3]);
    }

    #[test]
    fn kstar_model_lines() {
        let mu = MuPoint::<Rat>::from_ints([2, 3, 4, 5]).unwrap();
        let fp = fiber_product_model(&mu, Quotient::KStar).unwrap();
        let lines: Vec<FanoLine> = fp.rows.iter().map(|r| r.0).collect();
        assert_eq!(lines, vec![[2, 3, 7], [1, 2, 6], [1, 3, 4]]);
        assert!(!non_concurrent(&[[1, 2, 4], [1, 3, 7], [1, 5, 6]]));
    }
}
