//! Matrix exponential by scaling and squaring with a Taylor core.
//!
//! Self-contained so it can serve as an independent oracle against
//! closed-form exponentials elsewhere in the crate.

use nalgebra::{DMatrix, Matrix4};
use num_complex::Complex64;

/// exp(M) for a square complex matrix.
pub fn expm_c(m: &Matrix4<Complex64>) -> Matrix4<Complex64> {
    let d = DMatrix::from_fn(4, 4, |r, c| m[(r, c)]);
    let e = expm_dyn(&d);
    Matrix4::from_fn(|r, c| e[(r, c)])
}

/// exp(M) for a square real matrix of any size.
pub fn expm_r(m: &DMatrix<f64>) -> DMatrix<f64> {
    let d = m.map(|x| Complex64::new(x, 0.0));
    expm_dyn(&d).map(|x| x.re)
}

/// Scaling-and-squaring Taylor exponential on dynamic complex matrices.
pub fn expm_dyn(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "expm requires a square matrix");
    let norm = m.iter().map(|x| x.norm()).fold(0.0_f64, f64::max) * n as f64;
    // scale so the Taylor series converges to machine precision quickly
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale *= 0.5;
        squarings += 1;
    }
    let ms = m.map(|x| x * scale);

    let mut result = DMatrix::<Complex64>::identity(n, n);
    let mut term = DMatrix::<Complex64>::identity(n, n);
    for k in 1..=24u32 {
        term = (&term * &ms) / Complex64::new(k as f64, 0.0);
        result += &term;
        if term.iter().map(|x| x.norm()).sum::<f64>() < 1e-20 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}
