//! Exact linear algebra used by the Jacobian and cone code.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Rank of a rational matrix given by rows.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = &rows[r][col] * &inv;
                let (pivot_row, row) = if r < rank {
                    let (head, tail) = rows.split_at_mut(rank);
                    (&tail[0], &mut head[r])
                } else {
                    let (head, tail) = rows.split_at_mut(r);
                    (&head[rank], &mut tail[0])
                };
                for (x, p) in row[col..ncols].iter_mut().zip(&pivot_row[col..ncols]) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    rank(rows.iter().map(|r| r.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect()).collect())
}

/// An integer solution of `matrix * x = rhs`, if one exists.
///
/// Column-style Hermite reduction: unimodular column operations bring the
/// matrix to lower echelon form `H = matrix * U`, then `H y = rhs` is solved
/// by forward substitution and `x = U y`.
pub fn solve_integer(matrix: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<i64>> {
    let m = matrix.len();
    let n = matrix.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut u: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();

    // column operation: cols (a, b) <- (a, b) * [[p, q], [r, s]] applied to h and u
    fn combine(mat: &mut [Vec<BigInt>], a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for row in mat.iter_mut() {
            let (x, y) = (row[a].clone(), row[b].clone());
            row[a] = &x * p + &y * r;
            row[b] = &x * q + &y * s;
        }
    }

    let mut pivots: Vec<Option<usize>> = Vec::with_capacity(m);
    let mut col = 0;
    for row in 0..m {
        if col >= n {
            pivots.push(None);
            continue;
        }
        for other in col + 1..n {
            if h[row][other].is_zero() {
                continue;
            }
            let a = h[row][col].clone();
            let b = h[row][other].clone();
            let e = a.extended_gcd(&b);
            // [x, -b/g; y, a/g] has determinant 1
            let p = e.x.clone();
            let q = -(&b / &e.gcd);
            let r = e.y.clone();
            let s = &a / &e.gcd;
            combine(&mut h, col, other, &p, &q, &r, &s);
            combine(&mut u, col, other, &p, &q, &r, &s);
        }
        if h[row][col].is_zero() {
            pivots.push(None);
        } else {
            pivots.push(Some(col));
            col += 1;
        }
    }

    let mut y: Vec<BigInt> = alloc::vec![BigInt::zero(); n];
    for row in 0..m {
        let known: BigInt = (0..n).filter(|&c| pivots[row] != Some(c)).map(|c| &h[row][c] * &y[c]).sum();
        let residual = BigInt::from(rhs[row]) - known;
        match pivots[row] {
            Some(c) => {
                let (q, rem) = residual.div_rem(&h[row][c]);
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

    use num_traits::ToPrimitive;
    (0..n).map(|i| (0..n).map(|j| &u[i][j] * &y[j]).sum::<BigInt>().to_i64()).collect()
}

/// Exact feasibility of `rows[k] . x >= rhs[k]` for all `k`, by
/// Fourier–Motzkin elimination.
pub fn feasible(rows: &[Vec<Rational>], rhs: &[Rational]) -> bool {
    let n = rows.first().map_or(0, Vec::len);
    let mut system: Vec<(Vec<Rational>, Rational)> = rows.iter().cloned().zip(rhs.iter().cloned()).collect();
    for var in 0..n {
        let mut zero = Vec::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (row, b) in system {
            let c = row[var].clone();
            if c.is_zero() {
                zero.push((row, b));
            } else {
                // normalize so the coefficient of `var` is +-1
                let scale = c.abs().recip();
                let row: Vec<Rational> = row.iter().map(|v| v * &scale).collect();
                let b = b * &scale;
                if c.is_positive() {
                    pos.push((row, b));
                } else {
                    neg.push((row, b));
                }
            }
        }
        let mut next = zero;
        for (pr, pb) in &pos {
            for (nr, nb) in &neg {
                let row: Vec<Rational> = pr.iter().zip(nr).map(|(a, b)| a + b).collect();
                let candidate = (row, pb + nb);
                if !next.contains(&candidate) {
                    next.push(candidate);
                }
            }
        }
        system = next;
    }
    system.iter().all(|(_, b)| !b.is_positive())
}
