//! Polynomials in x with y-polynomial coefficients: the double Schubert and
//! double Grothendieck bases, coefficient-basis change, and the x/y role
//! swap.

use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

use num::{One, Zero};

use crate::bases::{ascent_parent, first_ascent};
use crate::basis::{Basis, Domain, Expansion, Order, Outcome, PolyOp, Step};
use crate::coeff::{join_terms, Coefficient, Rational};
use crate::poly::Polynomial;
use crate::weyl::Family;
use crate::Result;

/// Inner coefficient ring of the double algebra.
pub type YPolynomial = Polynomial<Rational>;

/// Dominant ancestor reached by iterating the first-ascent lift.
pub fn dominant_ancestor(v: &[i64]) -> Vec<i64> {
    let mut u = v.to_vec();
    while let Some(i) = first_ascent(&u) {
        u = ascent_parent(&u, i);
    }
    u
}

// Inner variable count for a double base case: the largest entry of the
// dominant ancestor.
fn y_count(v: &[i64]) -> usize {
    dominant_ancestor(v).iter().copied().max().unwrap_or(0).max(0) as usize
}

// Π over i of Π_{j ≤ λᵢ} of one factor, for dominant λ.
fn dominant_product(
    lambda: &[i64],
    factor: impl Fn(usize, usize, usize, usize) -> Polynomial<YPolynomial>,
) -> Polynomial<YPolynomial> {
    let n = lambda.len();
    let ynv = y_count(lambda);
    let mut out = Polynomial::constant(n, YPolynomial::one(ynv));
    for (i, &li) in lambda.iter().enumerate() {
        for j in 1..=li.max(0) as usize {
            out = out.mul(&factor(n, ynv, i, j));
        }
    }
    out
}

// xᵢ − yⱼ (0-based x position, 1-based y index).
fn schubert_factor(n: usize, ynv: usize, i: usize, j: usize) -> Polynomial<YPolynomial> {
    let mut unit = vec![0; n];
    unit[i] = 1;
    Polynomial::monomial(unit, YPolynomial::one(ynv))
        .sub(&Polynomial::constant(n, YPolynomial::var(ynv, j)))
}

// 1 − yⱼ·xᵢ⁻¹.
fn groth_factor(n: usize, ynv: usize, i: usize, j: usize) -> Polynomial<YPolynomial> {
    let mut unit = vec![0; n];
    unit[i] = -1;
    Polynomial::constant(n, YPolynomial::one(ynv))
        .sub(&Polynomial::monomial(unit, YPolynomial::var(ynv, j)))
}

/// Double Schubert polynomials: dominant base case Πᵢ Π_{j≤λᵢ} (xᵢ − yⱼ),
/// ascents lift through ∂ᵢ acting on x with inert y-coefficients.
pub fn double_schubert() -> Rc<Basis<YPolynomial>> {
    Rc::new(
        Basis::new(
            "double-schubert",
            "YY",
            Domain::Naturals,
            Order::LexMin,
            |v| match first_ascent(v) {
                Some(i) => Outcome::Steps(vec![Step::plain(
                    ascent_parent(v, i),
                    PolyOp::Newton(Family::A, i),
                )]),
                None => Outcome::Base(dominant_product(v, schubert_factor)),
            },
        )
        .with_family(Family::A),
    )
}

/// Double Grothendieck polynomials: dominant base case Πᵢ Π_{j≤λᵢ}
/// (1 − yⱼxᵢ⁻¹), ascents lift through πᵢ. Expansion only, like the simple
/// x⁻¹ form.
pub fn double_groth() -> Rc<Basis<YPolynomial>> {
    Rc::new(
        Basis::new("double-groth", "GG", Domain::Naturals, Order::LexMin, |v| {
            match first_ascent(v) {
                Some(i) => Outcome::Steps(vec![Step::plain(
                    ascent_parent(v, i),
                    PolyOp::Isobaric(Family::A, i),
                )]),
                None => Outcome::Base(dominant_product(v, groth_factor)),
            }
        })
        .with_family(Family::A)
        .without_conversion(),
    )
}

/// The Schubert basis on the x side of the double ring, with y-polynomial
/// coefficients.
pub fn schubert_x() -> Rc<Basis<YPolynomial>> {
    Rc::new(
        Basis::new("schubert-x", "Yx", Domain::Naturals, Order::LexMin, |v| {
            crate::bases::schubert_rule(v)
        })
        .with_family(Family::A),
    )
}

/// Scalar Schubert twin displayed with the x-marked prefix.
pub fn schubert_x_scalar() -> Rc<Basis<Rational>> {
    Rc::new(
        Basis::new("schubert-x", "Yx", Domain::Naturals, Order::LexMin, |v| {
            crate::bases::schubert_rule(v)
        })
        .with_family(Family::A),
    )
}

/// Scalar Schubert basis for the y variables.
pub fn schubert_y() -> Rc<Basis<Rational>> {
    Rc::new(
        Basis::new("schubert-y", "Yy", Domain::Naturals, Order::LexMin, |v| {
            crate::bases::schubert_rule(v)
        })
        .with_family(Family::A),
    )
}

/// Scalar monomial basis for the y variables.
pub fn monomial_y() -> Rc<Basis<Rational>> {
    Rc::new(
        Basis::new("monomial-y", "y", Domain::Integers, Order::LexMin, |v| {
            Outcome::Base(Polynomial::monomial(v.to_vec(), Rational::one()))
        })
        .with_brackets('[', ']'),
    )
}

/// Transposes a two-layer polynomial: outer exponents become inner and
/// vice versa. `inner_nvars` sets the transposed outer count when the
/// coefficients are all constants.
pub fn transpose_layers<C: Coefficient>(
    p: &Polynomial<Polynomial<C>>,
    inner_nvars: usize,
) -> Polynomial<Polynomial<C>> {
    let target = p
        .iter()
        .map(|(_, c)| c.nvars())
        .max()
        .unwrap_or(0)
        .max(inner_nvars);
    let mut out: Polynomial<Polynomial<C>> = Polynomial::zero(target);
    for (oe, inner) in p.iter() {
        for (ie, c) in inner.iter() {
            let mut key = ie.clone();
            key.resize(target, 0);
            out.add_term(key, Polynomial::monomial(oe.clone(), c.clone()));
        }
    }
    out
}

fn eval_at_constant(p: &YPolynomial, value: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for (e, c) in p.iter() {
        let total: i64 = e.iter().sum();
        assert!(total >= 0, "negative inner exponent under specialization");
        let mut term = c.clone();
        for _ in 0..total {
            term *= value.clone();
        }
        acc += term;
    }
    acc
}

/// A polynomial over one variable set whose coefficients are polynomials
/// over the other; `letters` records which set is outer after swaps.
#[derive(Clone)]
pub struct DoublePolynomial {
    poly: Polynomial<YPolynomial>,
    inner_nvars: usize,
    letters: (String, String),
}

impl DoublePolynomial {
    /// Wraps an x-major polynomial, padding every coefficient to one inner
    /// variable count.
    pub fn new(poly: Polynomial<YPolynomial>, y_nvars: usize) -> Self {
        Self::oriented(poly, y_nvars, ("x".into(), "y".into()))
    }

    fn oriented(poly: Polynomial<YPolynomial>, inner_nvars: usize, letters: (String, String)) -> Self {
        let target = poly
            .iter()
            .map(|(_, c)| c.nvars())
            .max()
            .unwrap_or(0)
            .max(inner_nvars);
        let poly = poly.map_coeffs(|c| c.change_nb_variables(target).expect("growth cannot fail"));
        DoublePolynomial {
            poly,
            inner_nvars: target,
            letters,
        }
    }

    #[inline]
    pub fn poly(&self) -> &Polynomial<YPolynomial> {
        &self.poly
    }

    #[inline]
    pub fn outer_nvars(&self) -> usize {
        self.poly.nvars()
    }

    #[inline]
    pub fn inner_nvars(&self) -> usize {
        self.inner_nvars
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.letters, other.letters);
        Self::oriented(
            self.poly.add(&other.poly),
            self.inner_nvars.max(other.inner_nvars),
            self.letters.clone(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DoublePolynomial {
            poly: self.poly.neg(),
            inner_nvars: self.inner_nvars,
            letters: self.letters.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.letters, other.letters);
        Self::oriented(
            self.poly.mul(&other.poly),
            self.inner_nvars.max(other.inner_nvars),
            self.letters.clone(),
        )
    }

    /// Exchanges the roles of the two variable sets; an involution.
    pub fn swap_coeffs_elements(&self) -> Self {
        Self::oriented(
            transpose_layers(&self.poly, self.inner_nvars),
            self.poly.nvars(),
            (self.letters.1.clone(), self.letters.0.clone()),
        )
    }

    /// Replaces every inner variable by one rational constant, collapsing
    /// the coefficients to scalars.
    pub fn specialize_inner(&self, value: &Rational) -> Polynomial<Rational> {
        self.poly.map_coeffs(|c| eval_at_constant(c, value))
    }

    /// Renders with the given outer bracket pair.
    pub fn render(&self, brackets: (char, char)) -> String {
        if self.poly.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<i64>> = self.poly.iter().map(|(e, _)| e).collect();
        keys.sort_by(|a, b| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            da.cmp(&db).then_with(|| a.as_slice().cmp(b.as_slice()))
        });
        let rendered = keys.into_iter().map(|e| {
            let coeff = self.poly.coefficient(e);
            let prefix = if coeff.is_one() {
                String::new()
            } else if coeff.neg().is_one() {
                "-".to_string()
            } else {
                let s = coeff.render(&self.letters.1, ('(', ')'), false);
                if s.contains(['+', '-']) {
                    format!("({s})*")
                } else {
                    format!("{s}*")
                }
            };
            format!(
                "{prefix}{}{}{}{}",
                self.letters.0,
                brackets.0,
                e.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                brackets.1
            )
        });
        join_terms(rendered)
    }
}

// Equality compares the nested data; letters and padding are display-only.
impl PartialEq for DoublePolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}

impl fmt::Display for DoublePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(('(', ')')))
    }
}

impl fmt::Debug for DoublePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DoublePolynomial({}:{} vars: {})",
            self.poly.nvars(),
            self.inner_nvars,
            self
        )
    }
}

fn is_unit_expansion(e: &Expansion<Rational>) -> bool {
    e.term_count() == 1
        && e.iter()
            .next()
            .is_some_and(|(v, c)| v.iter().all(|&x| x == 0) && c.is_one())
}

/// A combination of outer-basis elements whose coefficients are
/// combinations in another basis: the grouped display form of the double
/// ring.
#[derive(Clone)]
pub struct DoubleExpansion {
    outer: Rc<Basis<Rational>>,
    terms: BTreeMap<Vec<i64>, Expansion<Rational>>,
}

impl DoubleExpansion {
    pub fn new(outer: &Rc<Basis<Rational>>) -> Self {
        DoubleExpansion {
            outer: outer.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The product of one outer-basis element and a coefficient.
    pub fn element(
        outer: &Rc<Basis<Rational>>,
        index: &[i64],
        coeff: Expansion<Rational>,
    ) -> Result<Self> {
        let mut e = Self::new(outer);
        e.add_term(index.to_vec(), coeff)?;
        Ok(e)
    }

    pub fn add_term(&mut self, v: Vec<i64>, coeff: Expansion<Rational>) -> Result<()> {
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(v) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff)?;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn outer_basis(&self) -> &Rc<Basis<Rational>> {
        &self.outer
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &Expansion<Rational>)> {
        self.terms.iter()
    }

    /// Expands the outer side into the given monomial-style basis, keeping
    /// the coefficients grouped.
    pub fn expand_outer(&self, display: &Rc<Basis<Rational>>) -> Result<DoubleExpansion> {
        let mut out = DoubleExpansion::new(display);
        for (v, coeff) in &self.terms {
            let expanded = self.outer.expand(v)?;
            for (e, c) in expanded.iter() {
                out.add_term(e.clone(), coeff.scale(c))?;
            }
        }
        Ok(out)
    }

    /// Rewrites every coefficient in the target basis.
    pub fn change_coeffs_bases(&self, target: &Rc<Basis<Rational>>) -> Result<DoubleExpansion> {
        let mut out = DoubleExpansion::new(&self.outer);
        for (v, coeff) in &self.terms {
            out.add_term(v.clone(), coeff.convert(target)?)?;
        }
        Ok(out)
    }

    /// Transposes the grouped form: coefficient-basis elements become the
    /// outer index and outer elements the coefficients.
    pub fn swap_coeffs_elements(&self) -> Result<DoubleExpansion> {
        let inner_basis = match self.terms.values().next() {
            Some(c) => c.basis().clone(),
            None => return Ok(self.clone()),
        };
        let mut out = DoubleExpansion::new(&inner_basis);
        for (v, coeff) in &self.terms {
            for (w, c) in coeff.iter() {
                out.add_term(
                    w.clone(),
                    Expansion::from_terms(&self.outer, v.len(), [(v.clone(), c.clone())]),
                )?;
            }
        }
        Ok(out)
    }

    /// Collapses into the raw double polynomial (outer-major, monomials on
    /// both sides).
    pub fn to_double(&self) -> Result<DoublePolynomial> {
        let mut acc: Option<Polynomial<YPolynomial>> = None;
        for (v, coeff) in &self.terms {
            let outer = self.outer.expand(v)?;
            let inner = coeff.expand()?;
            let contribution = outer.map_coeffs(|c| inner.scale(c));
            acc = Some(match acc {
                Some(a) => a.add(&contribution),
                None => contribution,
            });
        }
        Ok(DoublePolynomial::new(
            acc.unwrap_or_else(|| Polynomial::zero(0)),
            0,
        ))
    }
}

impl fmt::Display for DoubleExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            da.cmp(&db).then_with(|| a.as_slice().cmp(b.as_slice()))
        });
        let (open, close) = self.outer.brackets();
        let rendered = keys.into_iter().map(|v| {
            let coeff = &self.terms[v];
            let prefix = if is_unit_expansion(coeff) {
                String::new()
            } else {
                format!("({})*", coeff.render(false))
            };
            format!(
                "{prefix}{}{open}{}{close}",
                self.outer.prefix(),
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        });
        f.write_str(&join_terms(rendered))
    }
}

impl fmt::Debug for DoubleExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoubleExpansion({})", self)
    }
}
