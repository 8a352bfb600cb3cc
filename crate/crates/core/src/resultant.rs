//! Sylvester resultants over `Z[x, y, p, t, u]`, evaluated with fraction-free (Bareiss)
//! elimination so every intermediate entry stays a polynomial with integer coefficients.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::LabError;
use crate::poly::{MultiPoly, Var};

/// The `(m + n) × (m + n)` Sylvester matrix of `f` (degree `m`) and `g` (degree `n`) in `v`.
pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, v: Var) -> Vec<Vec<MultiPoly>> {
    let fc = f.coeffs_in(v);
    let gc = g.coeffs_in(v);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (shifts, coeffs) in [(n, &fc), (m, &gc)] {
        for shift in 0..shifts {
            let mut row = vec![MultiPoly::zero(); size];
            for (i, c) in coeffs.iter().rev().enumerate() {
                row[shift + i] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Determinant by Bareiss elimination; every division is exact.
pub fn bareiss_determinant(mut matrix: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let size = matrix.len();
    if size == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut previous = MultiPoly::one();
    for k in 0..size - 1 {
        if matrix[k][k].is_zero() {
            let Some(pivot) = (k + 1..size).find(|&i| !matrix[i][k].is_zero()) else {
                return MultiPoly::zero();
            };
            matrix.swap(k, pivot);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let cross = &(&matrix[k][k] * &matrix[i][j]) - &(&matrix[i][k] * &matrix[k][j]);
                matrix[i][j] = cross
                    .exact_div(&previous)
                    .expect("Bareiss division is exact");
            }
        }
        previous = matrix[k][k].clone();
    }
    let det = matrix[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `Res_v(f, g)`, the Sylvester determinant; `lc(f)^n Π g(α)` over the roots `α` of `f`.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, v: Var) -> Result<MultiPoly, LabError> {
    if f.is_zero() || g.is_zero() {
        return Err(LabError::ZeroPolynomial);
    }
    Ok(bareiss_determinant(sylvester_matrix(f, g, v)))
}

/// `Res_v(f, ∂f/∂v)` with the integer content removed and a positive leading coefficient.
pub fn discriminant(f: &MultiPoly, v: Var) -> Result<MultiPoly, LabError> {
    let df = f.derivative(v);
    if df.is_zero() {
        return Err(LabError::ConstantIn(v));
    }
    Ok(resultant(f, &df, v)?.primitive_part())
}
