//! Schur-function determinants through specialized double Schubert
//! polynomials, plus a fraction-free determinant.

use crate::coeff::{Coefficient, Rational};
use crate::double::{double_schubert, transpose_layers};
use crate::poly::Polynomial;
use crate::{Error, Result};

/// The ambient scalar ring the matrix entries live in.
pub type Scalar = Polynomial<Rational>;

// y layer over the ambient scalars, and x layer over that.
type YLayer = Polynomial<Scalar>;
type XLayer = Polynomial<YLayer>;

/// One matrix entry: the double Schubert polynomial of `index` with its x
/// variables substituted by the alphabet (1-based ambient variable indices)
/// and yⱼ specialized to the j-th ambient variable.
pub fn schur_entry(nvars: usize, alphabet: &[usize], index: &[i64]) -> Result<Scalar> {
    let pu = double_schubert().expand(index)?;
    let nx = pu.nvars();
    let ny = pu.iter().map(|(_, c)| c.nvars()).max().unwrap_or(0);
    if ny > nvars {
        return Err(Error::NvarsMismatch(ny, nvars));
    }
    // Lift to three layers: x over y over the ambient scalars.
    let lifted: XLayer = pu.map_coeffs(|yp| {
        yp.change_nb_variables(ny)
            .expect("growth cannot fail")
            .map_coeffs(|c| Scalar::constant(nvars, c.clone()))
    });
    // Substitute the alphabet into the x variables, all at once; a short
    // alphabet leaves x variables behind and surfaces below as a non-scalar
    // residue, extra letters are no-ops.
    let x_values: Vec<(usize, XLayer)> = alphabet
        .iter()
        .enumerate()
        .filter(|(i, _)| *i < nx)
        .map(|(i, &a)| {
            (
                i + 1,
                Polynomial::constant(nx, Polynomial::constant(ny, Scalar::var(nvars, a))),
            )
        })
        .collect();
    let constant_in_x = lifted.subs_var(&x_values)?;
    // Swap the two outer layers, then substitute the y's.
    let swapped = transpose_layers(&constant_in_x, ny);
    let y_values: Vec<(usize, Polynomial<Polynomial<Scalar>>)> = (1..=ny)
        .map(|j| {
            (
                j,
                Polynomial::constant(ny, Polynomial::constant(nx, Scalar::var(nvars, j))),
            )
        })
        .collect();
    let resolved = swapped.subs_var(&y_values)?;
    // The residue must be a single constant term in both layers.
    let mut out = Scalar::zero(nvars);
    for (ye, inner) in resolved.iter() {
        if ye.iter().any(|&e| e != 0) {
            return Err(Error::NotScalar(ye.clone()));
        }
        for (xe, c) in inner.iter() {
            if xe.iter().any(|&e| e != 0) {
                return Err(Error::NotScalar(xe.clone()));
            }
            out = out.add(c);
        }
    }
    Ok(out)
}

/// The matrix of specialized double Schubert polynomials: one row per index
/// vector, one column per alphabet.
pub fn schur_matrix(
    nvars: usize,
    alphabets: &[Vec<usize>],
    indices: &[Vec<i64>],
) -> Result<Vec<Vec<Scalar>>> {
    if alphabets.len() != indices.len() {
        return Err(Error::NvarsMismatch(alphabets.len(), indices.len()));
    }
    indices
        .iter()
        .map(|u| {
            alphabets
                .iter()
                .map(|a| schur_entry(nvars, a, u))
                .collect()
        })
        .collect()
}

fn check_square<C>(matrix: &[Vec<C>]) -> Result<usize> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(Error::NvarsMismatch(row.len(), n));
        }
    }
    Ok(n)
}

/// Exact determinant by fraction-free (Bareiss) elimination; every interior
/// division stays in the coefficient ring.
pub fn determinant<C: Coefficient>(matrix: &[Vec<C>]) -> Result<C> {
    let n = check_square(matrix)?;
    if n == 0 {
        return Ok(C::one());
    }
    let mut m: Vec<Vec<C>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(C::zero());
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .ok_or_else(|| Error::NotDivisible("Bareiss pivot".to_string()))?;
            }
            m[i][k] = C::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg_ref() } else { det })
}

/// Cofactor-expansion determinant; the quadratic-blowup oracle for tests.
pub fn determinant_cofactor<C: Coefficient>(matrix: &[Vec<C>]) -> Result<C> {
    let n = check_square(matrix)?;
    Ok(cofactor(matrix, n))
}

fn cofactor<C: Coefficient>(m: &[Vec<C>], n: usize) -> C {
    if n == 0 {
        return C::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = C::zero();
    for (col, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<C>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let term = top.mul_ref(&cofactor(&minor, n - 1));
        acc = if col % 2 == 0 {
            acc.add_ref(&term)
        } else {
            acc.sub_ref(&term)
        };
    }
    acc
}
