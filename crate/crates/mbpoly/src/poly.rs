//! Sparse Laurent polynomials in n variables over a coefficient ring.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{coeff_prefix, join_terms, Coefficient, Rational};
use crate::weyl::Family;
use crate::{Error, Result};

/// Finite-support association from exponent vectors (entries may be
/// negative) to nonzero coefficients, with an explicit variable count.
#[derive(Clone)]
pub struct Polynomial<C: Coefficient> {
    nvars: usize,
    // No stored zero coefficients; every key has length `nvars`.
    terms: BTreeMap<Vec<i64>, C>,
}

// Equality is stable under the embedding that appends unused variables.
impl<C: Coefficient> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.nvars == other.nvars {
            return self.terms == other.terms;
        }
        let (a, b) = self.unified(other);
        a.terms == b.terms
    }
}

impl<C: Coefficient> Polynomial<C> {
    /// Constructs the zero polynomial in `nvars` variables.
    #[inline]
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// Constructs a constant polynomial.
    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// Constructs the multiplicative unit.
    #[inline]
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// Constructs a single term `c·x^expo`.
    pub fn monomial(expo: Vec<i64>, c: C) -> Self {
        let nvars = expo.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(expo, c);
        }
        Polynomial { nvars, terms }
    }

    /// The variable `xᵢ` (1-based) in `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable index out of range");
        let mut expo = vec![0; nvars];
        expo[i - 1] = 1;
        Self::monomial(expo, C::one())
    }

    /// Collects terms, accumulating duplicate exponent vectors and dropping
    /// zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, C)>) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &C)> {
        self.terms.iter()
    }

    /// The coefficient of `x^expo` (zero when absent).
    pub fn coefficient(&self, expo: &[i64]) -> C {
        self.terms.get(expo).cloned().unwrap_or_else(C::zero)
    }

    /// The value as a coefficient if the support is at most a constant term.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                if e.iter().all(|&v| v == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// True when no stored coefficient is zero and all exponent vectors
    /// have the right length (the representation invariant).
    pub fn support_is_clean(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| e.len() == self.nvars && !c.is_zero())
    }

    pub fn add_term(&mut self, expo: Vec<i64>, c: C) {
        debug_assert_eq!(expo.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(expo) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_nvars(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "variable counts differ; use change_nb_variables first"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_nvars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.neg_ref()))
            .collect();
        Polynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_nvars(other);
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.mul_ref(cb));
            }
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(e, v)| (e.clone(), v.mul_ref(c))),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Rebuilds each term through `f`, accumulating collisions.
    pub fn map_terms(&self, f: impl Fn(&[i64], &C) -> (Vec<i64>, C)) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, c)| f(e, c)))
    }

    /// Maps coefficients into another ring, dropping vanished terms.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Grows or (when legal) shrinks the variable count.
    pub fn change_nb_variables(&self, m: usize) -> Result<Self> {
        if m >= self.nvars {
            return Ok(Self::from_terms(
                m,
                self.terms.iter().map(|(e, c)| {
                    let mut v = e.clone();
                    v.resize(m, 0);
                    (v, c.clone())
                }),
            ));
        }
        for e in self.terms.keys() {
            if e[m..].iter().any(|&v| v != 0) {
                return Err(Error::ShrinkDropsExponent {
                    target: m,
                    vector: e.clone(),
                });
            }
        }
        Ok(Self::from_terms(
            m,
            self.terms
                .iter()
                .map(|(e, c)| (e[..m].to_vec(), c.clone())),
        ))
    }

    /// Simultaneously substitutes the listed variables (1-based indices) by
    /// polynomial values. Negative powers of a substituted variable are
    /// cleared by exact division and reported as an error when the value
    /// does not divide.
    pub fn subs_var(&self, assignments: &[(usize, Polynomial<C>)]) -> Result<Self> {
        for (i, val) in assignments {
            assert!(*i >= 1 && *i <= self.nvars, "variable index out of range");
            assert_eq!(val.nvars, self.nvars, "substitution value variable count");
        }
        // Most negative exponent per substituted variable, for clearing.
        let mut clear: Vec<(usize, &Polynomial<C>, i64)> = Vec::new();
        for (i, val) in assignments {
            let min = self
                .terms
                .keys()
                .map(|e| e[i - 1])
                .min()
                .unwrap_or(0)
                .min(0);
            clear.push((*i, val, -min));
        }
        let mut num = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut stripped = e.clone();
            let mut part = {
                for (i, _, _) in &clear {
                    stripped[i - 1] = 0;
                }
                Self::monomial(stripped, c.clone())
            };
            for (i, val, k) in &clear {
                let power = (e[i - 1] + k) as u32;
                if power > 0 {
                    part = part.mul(&val.pow(power));
                }
            }
            num = num.add(&part);
        }
        let mut out = num;
        for (i, val, k) in &clear {
            if *k > 0 {
                out = out.divexact(&val.pow(*k as u32)).ok_or_else(|| {
                    Error::NonInvertibleSubstitution {
                        index: *i,
                        exponent: -*k,
                    }
                })?;
            }
        }
        Ok(out)
    }

    /// Transforms the support by the simple reflection `sᵢ` of the given
    /// type (1-based index); coefficients are unchanged.
    pub fn act_reflection(&self, i: usize, family: Family) -> Result<Self> {
        family.check_index(i, self.nvars)?;
        Ok(self.map_terms(|e, c| (family.reflect(e, i), c.clone())))
    }

    // Leading term under graded-lexicographic order (total degree, then
    // entry-wise), taking the maximum.
    fn leading_graded(&self) -> Option<(&Vec<i64>, &C)> {
        self.terms.iter().max_by(|(a, _), (b, _)| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            da.cmp(&db).then_with(|| a.as_slice().cmp(b.as_slice()))
        })
    }

    fn shift(&self, by: &[i64]) -> Self {
        self.map_terms(|e, c| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
    }

    /// Exact quotient `self / other`, `None` when the division leaves a
    /// remainder (or `other` is zero). Works on Laurent supports by
    /// shifting both operands into ordinary exponents first.
    pub fn divexact(&self, other: &Self) -> Option<Self> {
        self.check_nvars(other);
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let floor = |p: &Self| -> Vec<i64> {
            let mut m = vec![0i64; p.nvars];
            for e in p.terms.keys() {
                for (mi, &v) in m.iter_mut().zip(e) {
                    *mi = (*mi).min(v);
                }
            }
            m
        };
        let sp: Vec<i64> = floor(self).iter().map(|v| -v).collect();
        let sd: Vec<i64> = floor(other).iter().map(|v| -v).collect();
        let mut rem = self.shift(&sp);
        let div = other.shift(&sd);
        let (dk, dc) = {
            let (k, c) = div.leading_graded().unwrap();
            (k.clone(), c.clone())
        };
        let mut quot = Self::zero(self.nvars);
        while !rem.is_zero() {
            let (rk, rc) = rem.leading_graded().unwrap();
            let mut qkey = Vec::with_capacity(rk.len());
            for (a, b) in rk.iter().zip(&dk) {
                if a < b {
                    return None;
                }
                qkey.push(a - b);
            }
            let qc = rc.exact_div(&dc)?;
            let qmono = Self::monomial(qkey, qc);
            rem = rem.sub(&qmono.mul(&div));
            quot = quot.add(&qmono);
        }
        // Undo both shifts: self/other = x^(sd−sp)·(shifted quotient).
        let unshift: Vec<i64> = sd.iter().zip(&sp).map(|(d, p)| d - p).collect();
        Some(quot.shift(&unshift))
    }

    /// Renders with a variable letter and bracket pair; `spaced` controls
    /// the top-level style (`x[1, 1, 2]`) versus the compact coefficient
    /// style (`y(1,1,0)`).
    pub fn render(&self, letter: &str, brackets: (char, char), spaced: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let sep = if spaced { ", " } else { "," };
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            da.cmp(&db).then_with(|| a.as_slice().cmp(b.as_slice()))
        });
        let rendered = keys.into_iter().map(|e| {
            let body = format!(
                "{letter}{}{}{}",
                brackets.0,
                e.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(sep),
                brackets.1
            );
            format!("{}{}", coeff_prefix(&self.terms[e]), body)
        });
        if spaced {
            join_terms(rendered)
        } else {
            let mut out = String::new();
            for t in rendered {
                if !out.is_empty() && !t.starts_with('-') {
                    out.push('+');
                }
                out.push_str(&t);
            }
            out
        }
    }

    // Embeds into a larger variable set by appending zero exponents.
    fn lifted(&self, nvars: usize) -> Self {
        if self.nvars == nvars {
            return self.clone();
        }
        debug_assert!(self.nvars < nvars, "incompatible variable counts");
        self.change_nb_variables(nvars).expect("growth cannot fail")
    }

    fn unified(&self, other: &Self) -> (Self, Self) {
        let n = self.nvars.max(other.nvars);
        (self.lifted(n), other.lifted(n))
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x", ('[', ']'), true))
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({} vars: {})", self.nvars, self)
    }
}

impl<C: Coefficient> std::ops::Add for Polynomial<C> {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        let (a, b) = self.unified(&other);
        Polynomial::add(&a, &b)
    }
}

impl<C: Coefficient> std::ops::Sub for Polynomial<C> {
    type Output = Self;
    fn sub(self, other: Self) -> Self {
        let (a, b) = self.unified(&other);
        Polynomial::sub(&a, &b)
    }
}

impl<C: Coefficient> std::ops::Mul for Polynomial<C> {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        let (a, b) = self.unified(&other);
        Polynomial::mul(&a, &b)
    }
}

impl<C: Coefficient> std::ops::Neg for Polynomial<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial::neg(&self)
    }
}

impl<C: Coefficient> num::Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial::zero(0)
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
}

impl<C: Coefficient> num::One for Polynomial<C> {
    fn one() -> Self {
        Polynomial::one(0)
    }
}

// Polynomials may themselves serve as coefficients (the double algebra uses
// y-polynomial coefficients). Operands in fewer variables embed by
// appending zero exponents before combining.
impl<C: Coefficient> Coefficient for Polynomial<C> {
    fn add_ref(&self, other: &Self) -> Self {
        let (a, b) = self.unified(other);
        Polynomial::add(&a, &b)
    }

    fn neg_ref(&self) -> Self {
        self.neg()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let (a, b) = self.unified(other);
        Polynomial::mul(&a, &b)
    }

    fn inverse(&self) -> Option<Self> {
        // Laurent units are the single terms with unit coefficients.
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        let inv = c.inverse()?;
        Some(Self::monomial(e.iter().map(|v| -v).collect(), inv))
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        let (a, b) = self.unified(other);
        a.divexact(&b)
    }

    fn from_rational(r: &Rational) -> Self {
        Polynomial::constant(0, C::from_rational(r))
    }

    fn coeff_string(&self) -> String {
        // Nested coefficients are the secondary (y) alphabet.
        self.render("y", ('(', ')'), false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat_int, Rational};

    fn m(expo: &[i64]) -> Polynomial<Rational> {
        Polynomial::monomial(expo.to_vec(), rat_int(1))
    }

    // ---- Add tests ----

    #[test]
    fn test_add_basic() {
        // x[1,1,2] + x[2,3,0] stays a two-term polynomial
        let p = m(&[1, 1, 2]).add(&m(&[2, 3, 0]));
        assert_eq!(p.term_count(), 2);
        assert_eq!(p.coefficient(&[1, 1, 2]), rat_int(1));
        assert!(p.support_is_clean());
    }

    #[test]
    fn test_add_cancellation() {
        // x^(1,0) + (−1)·x^(1,0) = 0
        let p = m(&[1, 0]).add(&m(&[1, 0]).neg());
        assert!(p.is_zero());
        assert!(p.support_is_clean());
    }

    // ---- Mul tests ----

    #[test]
    fn test_mul_square() {
        // (x[1,1,2,0] + x[2,3,0,0])^2 = x[2,2,4,0] + 2*x[3,4,2,0] + x[4,6,0,0]
        let p = m(&[1, 1, 2, 0]).add(&m(&[2, 3, 0, 0]));
        let sq = p.pow(2);
        let expected = Polynomial::from_terms(
            4,
            vec![
                (vec![2, 2, 4, 0], rat_int(1)),
                (vec![3, 4, 2, 0], rat_int(2)),
                (vec![4, 6, 0, 0], rat_int(1)),
            ],
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn test_mul_laurent() {
        // x^(−1,0) · x^(1,0) = 1
        let p = m(&[-1, 0]).mul(&m(&[1, 0]));
        assert_eq!(p, Polynomial::one(2));
        // p · 1 = p
        let q = m(&[2, -3]);
        assert_eq!(q.mul(&Polynomial::one(2)), q);
    }

    // ---- Variable count tests ----

    #[test]
    fn test_change_nb_variables() {
        let p = m(&[1, 1, 2]).add(&m(&[2, 3, 0]));
        let grown = p.change_nb_variables(4).unwrap();
        assert_eq!(grown.coefficient(&[1, 1, 2, 0]), rat_int(1));
        assert_eq!(grown.coefficient(&[2, 3, 0, 0]), rat_int(1));
        // legal truncation
        let q = m(&[1, 0, 0]).change_nb_variables(1).unwrap();
        assert_eq!(q, m(&[1]));
        // zero polynomial converts to any count
        assert!(Polynomial::<Rational>::zero(3)
            .change_nb_variables(5)
            .unwrap()
            .is_zero());
        // dropping a used variable is an error
        assert!(matches!(
            p.change_nb_variables(2),
            Err(Error::ShrinkDropsExponent { target: 2, .. })
        ));
    }

    // ---- Substitution tests ----

    #[test]
    fn test_subs_identity_and_rename() {
        let p = m(&[1, 1]);
        let x1 = Polynomial::<Rational>::var(2, 1);
        let x2 = Polynomial::<Rational>::var(2, 2);
        assert_eq!(p.subs_var(&[(1, x1.clone())]).unwrap(), p);
        // x(1,1) under x1 → x2 becomes x(0,2)
        assert_eq!(p.subs_var(&[(1, x2.clone())]).unwrap(), m(&[0, 2]));
        // simultaneous swap is not sequential
        let swapped = m(&[2, 1]).subs_var(&[(1, x2), (2, x1)]).unwrap();
        assert_eq!(swapped, m(&[1, 2]));
    }

    #[test]
    fn test_subs_negative_power_clears() {
        // (x1^{-1} + x1^{-1}x2) = x1^{-1}(1+x2); substituting x1 → 1+x2 clears
        let p = m(&[-1, 0]).add(&m(&[-1, 1]));
        let val = Polynomial::one(2).add(&Polynomial::var(2, 2));
        assert_eq!(p.subs_var(&[(1, val)]).unwrap(), Polynomial::one(2));
    }

    #[test]
    fn test_subs_negative_power_error() {
        // x1^{-1} under x1 → 1+x2 does not clear
        let p = m(&[-1, 0]);
        let val = Polynomial::one(2).add(&Polynomial::var(2, 2));
        assert_eq!(
            p.subs_var(&[(1, val)]),
            Err(Error::NonInvertibleSubstitution {
                index: 1,
                exponent: -1
            })
        );
    }

    #[test]
    fn test_subs_single_term_inverse() {
        // x1^{-1} + 1 under x1 → x1^{-1} becomes x1 + 1
        let p = m(&[-1]).add(&m(&[0]));
        let val = m(&[-1]);
        assert_eq!(p.subs_var(&[(1, val)]).unwrap(), m(&[1]).add(&m(&[0])));
    }

    // ---- Reflection tests ----

    #[test]
    fn test_reflections() {
        // type A swaps adjacent entries
        assert_eq!(
            m(&[4, 1]).act_reflection(1, Family::A).unwrap(),
            m(&[1, 4])
        );
        // type B negates the indexed entry
        assert_eq!(
            m(&[1, 1, 2]).act_reflection(2, Family::B).unwrap(),
            m(&[1, -1, 2])
        );
        // type D negates and swaps the two entries ending at the index
        assert_eq!(
            m(&[2, 3, 0]).act_reflection(2, Family::D).unwrap(),
            m(&[-3, -2, 0])
        );
        // involution on a random-ish combination
        let p = m(&[1, -2, 3]).add(&m(&[0, 4, -1]).scale(&rat_int(5)));
        for (fam, i) in [(Family::A, 1), (Family::B, 3), (Family::C, 2), (Family::D, 3)] {
            let twice = p
                .act_reflection(i, fam)
                .unwrap()
                .act_reflection(i, fam)
                .unwrap();
            assert_eq!(twice, p);
        }
    }

    // ---- Division tests ----

    #[test]
    fn test_divexact() {
        // (x^2 − y^2)/(x − y) = x + y
        let p = m(&[2, 0]).sub(&m(&[0, 2]));
        let d = m(&[1, 0]).sub(&m(&[0, 1]));
        assert_eq!(p.divexact(&d), Some(m(&[1, 0]).add(&m(&[0, 1]))));
        // non-divisible pair
        assert_eq!(m(&[2, 0]).add(&m(&[0, 2])).divexact(&d), None);
        // Laurent operands divide after shifting
        let lp = p.mul(&m(&[-1, -1]));
        assert_eq!(lp.divexact(&d), Some(m(&[0, -1]).add(&m(&[-1, 0]))));
        assert_eq!(p.divexact(&Polynomial::zero(2)), None);
    }

    // ---- Display tests ----

    #[test]
    fn test_display() {
        let p = m(&[1, 1, 2]).add(&m(&[2, 3, 0]));
        assert_eq!(p.to_string(), "x[1, 1, 2] + x[2, 3, 0]");
        let q = m(&[2, 1, 1]).sub(&m(&[1, 1, 1])).add(&m(&[2, 2, 0]).scale(&rat_int(3)));
        assert_eq!(q.to_string(), "-x[1, 1, 1] + x[2, 1, 1] + 3*x[2, 2, 0]");
        assert_eq!(Polynomial::<Rational>::zero(2).to_string(), "0");
        assert_eq!(q.render("x", ('(', ')'), true), "-x(1, 1, 1) + x(2, 1, 1) + 3*x(2, 2, 0)");
        // compact coefficient form used by the double algebra
        assert_eq!(q.coeff_string(), "-y(1,1,1)+y(2,1,1)+3*y(2,2,0)");
    }
}
