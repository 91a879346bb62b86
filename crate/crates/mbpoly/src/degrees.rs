//! Projective degrees of Schubert varieties: Lehmer codes, the hyperplane
//! class of the flag manifold, and the Schubert-coefficient extraction.

use num::ToPrimitive;

use crate::bases::schubert;
use crate::coeff::{rat_int, Rational};
use crate::poly::Polynomial;
use crate::{Error, Result};

/// Lehmer code of a permutation in one-line notation:
/// codeᵢ = #{ j > i : σⱼ < σᵢ }.
pub fn lehmer_code(perm: &[usize]) -> Result<Vec<i64>> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p == 0 || p > n || seen[p - 1] {
            return Err(Error::BadPermutation(n));
        }
        seen[p - 1] = true;
    }
    Ok((0..n)
        .map(|i| ((i + 1)..n).filter(|&j| perm[j] < perm[i]).count() as i64)
        .collect())
}

/// Number of inversions, the length of the permutation.
pub fn inversions(perm: &[usize]) -> Result<i64> {
    Ok(lehmer_code(perm)?.iter().sum())
}

/// First Chern class of the flag manifold's Plücker embedding:
/// (n−1)x₁ + (n−2)x₂ + … + x_{n−1}, an n-variable form.
pub fn chern_form(n: usize) -> Polynomial<Rational> {
    let mut h = Polynomial::zero(n);
    for i in 1..n {
        h = h.add(&Polynomial::var(n, i).scale(&rat_int((n - i) as i64)));
    }
    h
}

/// Projective degree of the Schubert variety indexed by a permutation: the
/// coefficient of Y(n−1, …, 1, 0) in h^d · Y_code, where d complements the
/// inversion count to the flag-manifold dimension.
pub fn proj_deg(perm: &[usize]) -> Result<i64> {
    let n = perm.len();
    let code = lehmer_code(perm)?;
    let length: i64 = code.iter().sum();
    let d = (n * (n - 1) / 2) as i64 - length;
    let sch = schubert::<Rational>();
    let product = sch.expand(&code)?.mul(&chern_form(n).pow(d as u32));
    let expansion = sch.to_basis(&product)?;
    let top: Vec<i64> = (0..n as i64).rev().collect();
    let coeff = expansion.coefficient(&top);
    debug_assert!(coeff.is_integer(), "degree must be an integer");
    Ok(coeff.to_integer().to_i64().expect("degree fits in i64"))
}

/// All permutations of 1..=n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fill(n, &mut cur, &mut used, &mut out);
    out
}

fn fill(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for v in 1..=n {
        if !used[v - 1] {
            used[v - 1] = true;
            cur.push(v);
            fill(n, cur, used, out);
            cur.pop();
            used[v - 1] = false;
        }
    }
}
