//! Exact linear algebra over a [`Field`].

use crate::field::Field;

/// Rank by fraction-free (Bareiss) elimination.
///
/// Every entry stays a polynomial expression in the input entries; the
/// only division is the exact one by the previous pivot.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let n_rows = m.len();
    let n_cols = m.first().map_or(0, |r| r.len());
    let mut prev = F::one();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..n_rows {
            for k in c + 1..n_cols {
                let v = m[r][c].clone() * m[i][k].clone() - m[i][c].clone() * m[r][k].clone();
                m[i][k] = v.try_div(&prev).expect("Bareiss pivots are nonzero");
            }
            m[i][c] = F::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Whether `v` lies in the row space of `rows`.
pub fn in_row_space<F: Field>(rows: &[Vec<F>], v: &[F]) -> bool {
    let mut ext = rows.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == rank(rows)
}

/// Determinant by fraction-free elimination.
pub fn det<F: Field>(rows: &[Vec<F>]) -> F {
    let n = rows.len();
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut prev = F::one();
    let mut sign = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            m.swap(c, p);
            sign = -sign;
        }
        for i in c + 1..n {
            for k in c + 1..n {
                let v = m[c][c].clone() * m[i][k].clone() - m[i][c].clone() * m[c][k].clone();
                m[i][k] = v.try_div(&prev).expect("Bareiss pivots are nonzero");
            }
            m[i][c] = F::zero();
        }
        prev = m[c][c].clone();
    }
    sign * prev
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn r(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|row| row.iter().map(|&x| Rat::from_i64(x)).collect()).collect()
    }

    #[test]
    fn rank_and_membership() {
        let m = r(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&m), 2);
        assert!(in_row_space(&m, &r(&[&[1, 3, 4]])[0]));
        assert!(!in_row_space(&m, &r(&[&[0, 0, 1]])[0]));
        assert_eq!(rank::<Rat>(&[]), 0);
    }

    #[test]
    fn determinant() {
        let m = r(&[&[0, 2, 1], &[3, 1, 0], &[1, 1, 1]]);
        // 0*(1-0) - 2*(3-0) + 1*(3-1) = -4
        assert_eq!(det(&m), Rat::from_i64(-4));
        assert_eq!(det(&r(&[&[1, 2], &[2, 4]])), Rat::from_i64(0));
    }
}
