//! Integer solutions of linear systems by unimodular column reduction.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Applies the unimodular column operation mixing columns `c` and `j` of
/// every matrix in `mats` so that row `r` of `a` gets a zero in column `j`.
fn eliminate(a: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], r: usize, c: usize, j: usize) {
    let x = a[r][c].clone();
    let y = a[r][j].clone();
    let e = x.extended_gcd(&y);
    let (g, s, t) = (e.gcd, e.x, e.y);
    let (xg, yg) = (&x / &g, &y / &g);
    // [col_c, col_j] <- [s col_c + t col_j, -yg col_c + xg col_j]; det = 1.
    for m in [a, u] {
        for row in m.iter_mut() {
            let cc = row[c].clone();
            let cj = row[j].clone();
            row[c] = &s * &cc + &t * &cj;
            row[j] = &xg * &cj - &yg * &cc;
        }
    }
}

/// Some `x ∈ Z^n` with `a x = b`, or `None` if no integer solution exists.
pub(crate) fn solve_integer(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    // pivots[r] = Some(column) if row r carries a pivot.
    let mut pivots = vec![None; m];
    let mut col = 0;
    for r in 0..m {
        if col == n {
            break;
        }
        for j in col + 1..n {
            if !h[r][j].is_zero() {
                eliminate(&mut h, &mut u, r, col, j);
            }
        }
        if !h[r][col].is_zero() {
            pivots[r] = Some(col);
            col += 1;
        }
    }
    let mut y = vec![BigInt::zero(); n];
    for r in 0..m {
        let known = pivots[r].unwrap_or(col.min(n));
        let mut residual = b[r].clone();
        for j in 0..known {
            residual -= &h[r][j] * &y[j];
        }
        match pivots[r] {
            Some(c) => {
                let (q, rem) = residual.div_rem(&h[r][c]);
                if !rem.is_zero() {
                    return None;
                }
                y[c] = q;
            }
            None => {
                if !residual.is_zero() {
                    return None;
                }
            }
        }
    }
    Some((0..n).map(|i| (0..n).map(|j| &u[i][j] * &y[j]).sum()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn vecb(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn apply(a: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
        a.iter()
            .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
            .collect()
    }

    #[test]
    fn rational_but_not_integral() {
        assert_eq!(solve_integer(&mat(&[&[2]]), &vecb(&[1])), None);
        assert_eq!(solve_integer(&mat(&[&[2]]), &vecb(&[4])), Some(vecb(&[2])));
    }

    #[test]
    fn singular_consistent_and_inconsistent() {
        let a = mat(&[&[1, 1], &[1, 1]]);
        let x = solve_integer(&a, &vecb(&[3, 3])).unwrap();
        assert_eq!(apply(&a, &x), vecb(&[3, 3]));
        assert_eq!(solve_integer(&a, &vecb(&[3, 4])), None);
    }

    #[test]
    fn lattice_index_matters() {
        // Columns (2, 0) and (1, 1) span an index-2 sublattice of Z^2.
        let a = mat(&[&[2, 1], &[0, 1]]);
        assert!(solve_integer(&a, &vecb(&[1, 1])).is_some());
        assert!(solve_integer(&a, &vecb(&[1, 0])).is_none());
    }

    /// Brute force over a box of candidate solutions.
    fn brute(a: &[Vec<BigInt>], b: &[BigInt], bound: i64) -> bool {
        let n = a[0].len();
        let mut x = vec![-bound; n];
        loop {
            let xb: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
            if apply(a, &xb) == b {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                x[i] += 1;
                if x[i] <= bound {
                    break;
                }
                x[i] = -bound;
                i += 1;
            }
        }
    }

    proptest! {
        #[test]
        fn found_solutions_are_solutions(
            a in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 3),
            b in proptest::collection::vec(-6i64..=6, 3),
        ) {
            let am: Vec<Vec<BigInt>> = a.iter().map(|r| vecb(r)).collect();
            let bb = vecb(&b);
            match solve_integer(&am, &bb) {
                Some(x) => prop_assert_eq!(apply(&am, &x), bb),
                // Not exhaustive, but any small solution would contradict.
                None => prop_assert!(!brute(&am, &bb, 4)),
            }
        }

        #[test]
        fn planted_solutions_are_found(
            a in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 3), 2..5),
            x in proptest::collection::vec(-3i64..=3, 3),
        ) {
            let am: Vec<Vec<BigInt>> = a.iter().map(|r| vecb(r)).collect();
            let b = apply(&am, &vecb(&x));
            let found = solve_integer(&am, &b);
            prop_assert!(found.is_some());
            prop_assert_eq!(apply(&am, &found.unwrap()), b);
        }
    }
}
