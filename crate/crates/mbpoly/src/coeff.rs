//! The coefficient-ring interface and the base rational scalars.

use std::fmt;
use std::ops::Neg;

use num::{BigInt, BigRational, One, Signed, Zero};

/// Arbitrary-precision rational scalar, always stored reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds the rational `n/d`.
///
/// Panics if `d == 0`; fallible callers should check first.
#[inline]
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the rational `n/1`.
#[inline]
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A pluggable exact coefficient ring.
///
/// The same polynomial engine runs over plain rationals, rational functions
/// in named parameters, and nested polynomial coefficients; this trait is
/// the surface those rings share. All operations are exact.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + 'static
{
    fn add_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;

    /// Multiplicative inverse, `None` when the value is not a unit.
    fn inverse(&self) -> Option<Self>;

    /// Exact quotient `self / other` inside the ring, `None` when `other`
    /// does not divide `self` exactly (or is zero).
    fn exact_div(&self, other: &Self) -> Option<Self>;

    /// Embeds a rational constant.
    fn from_rational(r: &Rational) -> Self;

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    #[inline]
    fn from_int(n: i64) -> Self {
        Self::from_rational(&rat_int(n))
    }

    /// Compact rendering used when the value sits in coefficient position
    /// (no spaces inside sums or vectors).
    fn coeff_string(&self) -> String {
        self.to_string()
    }

    /// Whether rendered values never need parentheses in coefficient
    /// position. True only for plain scalars; composite rings return false
    /// so that signed or multi-term coefficients get wrapped.
    fn coeff_atomic() -> bool {
        false
    }
}

impl Coefficient for Rational {
    #[inline]
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    #[inline]
    fn neg_ref(&self) -> Self {
        -self
    }

    #[inline]
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        // Every nonzero rational divides exactly.
        other.inverse().map(|inv| self * inv)
    }

    #[inline]
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn coeff_atomic() -> bool {
        true
    }
}

/// Renders a coefficient in front of a basis-element body, mirroring the
/// conventions of the reference listings: `1` is dropped, `-1` collapses to
/// a bare sign, atomic scalars print unwrapped, and composite coefficients
/// containing a sign or a sum get parenthesized.
pub fn coeff_prefix<C: Coefficient>(c: &C) -> String {
    if c.is_one() {
        return String::new();
    }
    if *c == C::one().neg_ref() {
        return "-".to_string();
    }
    let s = c.coeff_string();
    if !C::coeff_atomic() && s.contains(['+', '-']) {
        format!("({s})*")
    } else {
        format!("{s}*")
    }
}

/// Joins rendered terms with ` + `, folding a leading minus sign of a term
/// into ` - `, matching the reference display (`a + b - c`).
pub fn join_terms(terms: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Signed sign of a rational: −1, 0, or 1.
pub fn rational_signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // ---- Rational arithmetic ----

    #[test]
    fn test_add_reduces() {
        // 1/2 + 1/3 = 5/6
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
    }

    #[test]
    fn test_canonical_form() {
        // 2/4 * 1 = 1/2, stored reduced
        assert_eq!(rat(2, 4) * rat_int(1), rat(1, 2));
        assert_eq!(rat(2, 4).to_string(), "1/2");
        assert_eq!(rat_int(-3).to_string(), "-3");
    }

    #[test]
    fn test_division() {
        // (-6/4) / (3/2) = -1
        assert_eq!(rat(-6, 4).exact_div(&rat(3, 2)), Some(rat_int(-1)));
        assert_eq!(rat(1, 2).exact_div(&rat_int(0)), None);
        assert_eq!(rat_int(0).inverse(), None);
    }

    #[test]
    fn test_trait_ops() {
        let a = rat(3, 7);
        assert!(a.sub_ref(&a).is_zero());
        assert_eq!(a.mul_ref(&a.inverse().unwrap()), rat_int(1));
        assert_eq!(<Rational as Coefficient>::from_int(-2), rat_int(-2));
    }

    // ---- Display helpers ----

    #[test]
    fn test_coeff_prefix() {
        assert_eq!(coeff_prefix(&rat_int(1)), "");
        assert_eq!(coeff_prefix(&rat_int(-1)), "-");
        assert_eq!(coeff_prefix(&rat_int(2)), "2*");
        assert_eq!(coeff_prefix(&rat(-3, 4)), "-3/4*");
    }

    #[test]
    fn test_join_terms() {
        let joined = join_terms(vec![
            "2*x(0, 0)".to_string(),
            "x(-2, 0)".to_string(),
            "-x(-2, -1)".to_string(),
            "-3*x(-1, 0)".to_string(),
        ]);
        assert_eq!(joined, "2*x(0, 0) + x(-2, 0) - x(-2, -1) - 3*x(-1, 0)");
        assert_eq!(join_terms(Vec::<String>::new()), "0");
    }
}
