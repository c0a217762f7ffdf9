//! Dense linear algebra over ℚ(r, s).

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Scalar::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot
/// columns; pivots are chosen left to right.
pub fn rref(mut rows: Matrix, ncols: usize) -> (Matrix, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    let ncols = m.first().map_or(0, Vec::len);
    rref(m.clone(), ncols).1.len()
}

/// Basis of `{v : M v = 0}`.
pub fn nullspace(m: &Matrix, ncols: usize) -> Vec<Vec<Scalar>> {
    let (rows, pivots) = rref(m.clone(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Scalar::zero(); ncols];
            v[fc] = Scalar::one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = -&row[fc];
            }
            v
        })
        .collect()
}

/// Multiply each row by the denominators of its entries so every entry is a
/// polynomial. Returns the scaled matrix and the per-row factors.
fn clear_denominators(m: &Matrix) -> (Matrix, Vec<Scalar>) {
    let mut factors = Vec::with_capacity(m.len());
    let rows = m
        .iter()
        .map(|row| {
            let mut row = row.clone();
            let mut total = Scalar::one();
            for k in 0..row.len() {
                let d = Scalar::from_laurent(&row[k].denominator());
                if !d.is_one() {
                    total = &total * &d;
                    for x in row.iter_mut() {
                        *x = &*x * &d;
                    }
                }
            }
            factors.push(total);
            row
        })
        .collect();
    (rows, factors)
}

/// Fraction-free Gauss-Jordan elimination on `[A | B]`.
///
/// Returns `(det A, p, p · A^{-1} B)` where `p` is the final pivot, or `None`
/// when `A` is singular.
fn bareiss_jordan(a: &Matrix, b: &Matrix) -> Option<(Scalar, Scalar, Matrix)> {
    let n = a.len();
    let extra = b.first().map_or(0, Vec::len);
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb).cloned().collect())
        .collect();
    let width = n + extra;
    let mut prev = Scalar::one();
    let mut sign = Scalar::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        let pivot = m[k][k].clone();
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for i in 0..n {
            if i == k {
                continue;
            }
            let lead = m[i][k].clone();
            for j in 0..width {
                let v = &(&pivot * &m[i][j]) - &(&lead * &m[k][j]);
                m[i][j] = if prev_inv.is_one() { v } else { &v * &prev_inv };
            }
        }
        prev = pivot;
    }
    let rhs = m.into_iter().map(|row| row[n..].to_vec()).collect();
    Some((&sign * &prev, prev, rhs))
}

pub fn determinant(a: &Matrix) -> Scalar {
    if a.is_empty() {
        return Scalar::one();
    }
    let (scaled, factors) = clear_denominators(a);
    let empty: Matrix = vec![Vec::new(); a.len()];
    match bareiss_jordan(&scaled, &empty) {
        Some((det, _, _)) => {
            let total = factors.iter().fold(Scalar::one(), |acc, f| acc * f);
            det.checked_div(&total).expect("nonzero row factors")
        }
        None => Scalar::zero(),
    }
}

/// Inverse via fraction-free elimination; `None` when singular.
pub fn try_inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    if n == 0 {
        return Some(Vec::new());
    }
    // (D A)^{-1} D = A^{-1} for the diagonal row-scaling D.
    let (scaled, factors) = clear_denominators(a);
    let mut rhs = identity(n);
    for (i, f) in factors.into_iter().enumerate() {
        rhs[i][i] = f;
    }
    let (_, pivot, block) = bareiss_jordan(&scaled, &rhs)?;
    let inv = pivot.inv().expect("nonzero pivot");
    Some(
        block
            .into_iter()
            .map(|row| row.into_iter().map(|x| &x * &inv).collect())
            .collect(),
    )
}

pub fn inverse(a: &Matrix) -> Result<Matrix> {
    try_inverse(a).ok_or_else(|| Error::SingularGram(format!("{}x{} matrix", a.len(), a.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> Scalar {
        Scalar::r()
    }
    fn s() -> Scalar {
        Scalar::s()
    }

    fn sample() -> Matrix {
        vec![
            vec![r(), Scalar::one(), s()],
            vec![Scalar::one().checked_div(&(r() - s())).unwrap(), s(), Scalar::zero()],
            vec![Scalar::from_int(2), Scalar::zero(), Scalar::monomial(-1, 2)],
        ]
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let a = sample();
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        assert_eq!(mat_mul(&inv, &a), identity(3));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let a = sample();
        let cof = &a[0][0] * &(&(&a[1][1] * &a[2][2]) - &(&a[1][2] * &a[2][1]))
            - &a[0][1] * &(&(&a[1][0] * &a[2][2]) - &(&a[1][2] * &a[2][0]))
            + &a[0][2] * &(&(&a[1][0] * &a[2][1]) - &(&a[1][1] * &a[2][0]));
        assert_eq!(determinant(&a), cof);
    }

    #[test]
    fn singular_matrix() {
        let a = vec![vec![r(), s()], vec![r() * r(), r() * s()]];
        assert!(determinant(&a).is_zero());
        assert!(inverse(&a).is_err());
        assert_eq!(rank(&a), 1);
        let ns = nullspace(&a, 2);
        assert_eq!(ns.len(), 1);
        assert!((&(&a[0][0] * &ns[0][0]) + &(&a[0][1] * &ns[0][1])).is_zero());
    }
}
