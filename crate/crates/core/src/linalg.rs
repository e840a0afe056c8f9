//! Exact rational linear algebra on small dense matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer value of `q`, if it is one.
pub fn to_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// Solves `Σ_H x_H · m[H][K] = f[K]` for lower-triangular `m`
/// (`m[H][K] = 0` whenever `K > H`) with nonzero diagonal.
pub fn solve_row_lower_triangular(m: &[Vec<u64>], f: &[Rational]) -> Result<Vec<Rational>> {
    let c = m.len();
    let mut x = vec![Rational::zero(); c];
    for k in (0..c).rev() {
        let mut acc = f[k].clone();
        for h in k + 1..c {
            if m[h][k] != 0 && !x[h].is_zero() {
                acc -= &x[h] * Rational::from_integer(BigInt::from(m[h][k]));
            }
        }
        if m[k][k] == 0 {
            return Err(Error::Singular);
        }
        x[k] = acc / Rational::from_integer(BigInt::from(m[k][k]));
    }
    Ok(x)
}

pub fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    let mut s = Rational::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            s += x * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(Rational::zero(), |s, (x, y)| s + x * y)
        })
        .collect()
}

/// Inverse by Gauss-Jordan elimination.
pub fn inverse(a: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::Singular)?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..n {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in 0..n {
                let (a, b) = (m[col][j].clone(), inv[col][j].clone());
                m[r][j] -= &factor * a;
                inv[r][j] -= &factor * b;
            }
        }
    }
    Ok(inv)
}

/// Solves `a x = b`.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    Ok(mat_vec(&inverse(a)?, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_solve_s3() {
        let m = vec![
            vec![6, 0, 0, 0],
            vec![3, 1, 0, 0],
            vec![2, 0, 2, 0],
            vec![1, 1, 1, 1],
        ];
        let f = vec![rat(3), rat(1), rat(0), rat(0)];
        let x = solve_row_lower_triangular(&m, &f).unwrap();
        assert_eq!(x, vec![rat(0), rat(1), rat(0), rat(0)]);
        let x = solve_row_lower_triangular(&m, &[rat(1), rat(0), rat(0), rat(0)]).unwrap();
        assert_eq!(x[0], rat_frac(1, 6));
    }

    #[test]
    fn inverse_round_trip() {
        let a = vec![
            vec![rat(2), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(3)],
            vec![rat(1), rat(0), rat(1)],
        ];
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        let singular = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(inverse(&singular).unwrap_err(), Error::Singular);
    }
}
