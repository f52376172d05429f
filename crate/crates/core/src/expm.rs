//! Matrix exponential of small dense matrices by scaling and squaring.

use crate::error::{Error, Result};
use crate::operator::Matrix8;

const N: usize = 8;

/// Default truncation tolerance of the Taylor series.
pub const DEFAULT_TOL: f64 = 1e-14;

pub fn identity() -> Matrix8 {
    let mut m = [[0.0; N]; N];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

pub fn mat_mul(a: &Matrix8, b: &Matrix8) -> Matrix8 {
    let mut c = [[0.0; N]; N];
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..N {
                c[i][j] += aik * b[k][j];
            }
        }
    }
    c
}

/// Maximum absolute row sum.
pub fn inf_norm(a: &Matrix8) -> f64 {
    a.iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `e^A`: scale by `2^-s` until the norm is below one half, sum the Taylor
/// series until a term drops below `tol`, then square `s` times.
pub fn expm(a: &Matrix8, tol: f64) -> Result<Matrix8> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("series tolerance must be positive, got {tol}")));
    }
    if a.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("exponent"));
    }
    let norm = inf_norm(a);
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale >= 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let mut scaled = *a;
    scaled.iter_mut().flatten().for_each(|x| *x *= scale);

    let mut sum = identity();
    let mut term = identity();
    for n in 1..64 {
        term = mat_mul(&term, &scaled);
        let inv = 1.0 / n as f64;
        term.iter_mut().flatten().for_each(|x| *x *= inv);
        for (s, t) in sum.iter_mut().flatten().zip(term.iter().flatten()) {
            *s += t;
        }
        if inf_norm(&term) < tol {
            break;
        }
    }
    for _ in 0..squarings {
        sum = mat_mul(&sum, &sum);
    }
    if sum.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite("exponential overflowed"));
    }
    Ok(sum)
}
