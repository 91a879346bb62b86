//! The multi-basis machinery: bases defined by recursive reduction rules,
//! memoized expansion into monomials, and triangular conversion back.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use crate::coeff::{coeff_prefix, join_terms, Coefficient};
use crate::poly::Polynomial;
use crate::weyl::{self, Family};
use crate::{Error, Result};

/// Index domain of a basis.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Domain {
    Naturals,
    Integers,
}

/// Leading-term selection order used by triangular conversion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Order {
    /// Lexicographically smallest support vector leads.
    LexMin,
    /// Smallest total degree leads, ties broken lexicographically.
    GradedMinLexMin,
    /// Largest total degree leads; ties compare the multiset of entries
    /// (sorted decreasingly), then the reversed vector, largest first.
    GradedMaxSortedMax,
}

impl Order {
    // Ordering::Less means `a` is eliminated before `b`.
    fn priority(&self, a: &[i64], b: &[i64]) -> Ordering {
        let deg = |v: &[i64]| -> i64 { v.iter().sum() };
        match self {
            Order::LexMin => a.cmp(b),
            Order::GradedMinLexMin => deg(a).cmp(&deg(b)).then_with(|| a.cmp(b)),
            Order::GradedMaxSortedMax => {
                let key = |v: &[i64]| {
                    let mut sorted = v.to_vec();
                    sorted.sort_unstable_by(|x, y| y.cmp(x));
                    let rev: Vec<i64> = v.iter().rev().copied().collect();
                    (deg(v), sorted, rev)
                };
                key(b).cmp(&key(a))
            }
        }
    }

    /// The support vector eliminated first under this order.
    pub fn leading<'a>(&self, keys: impl Iterator<Item = &'a Vec<i64>>) -> Option<&'a Vec<i64>> {
        keys.min_by(|a, b| self.priority(a, b))
    }
}

/// A single linear operator on polynomials, applied during reduction.
#[derive(Clone)]
pub enum PolyOp<C: Coefficient> {
    Identity,
    /// Divided difference ∂ᵢ of a family.
    Newton(Family, usize),
    /// Isobaric divided difference πᵢ of a family.
    Isobaric(Family, usize),
    /// πᵢ − id.
    IsobaricHat(Family, usize),
    /// Type-A Hecke generator with bound parameter values.
    HeckeT { i: usize, t1: C, t2: C },
    /// The step τᵢ(f) = ∂ᵢ(f) + πᵢ(f∘sᵢ), the image of πᵢ under the
    /// change of variables xᵢ ↦ 1 − xᵢ⁻¹ (type A).
    Tau(usize),
    /// Any other linear map, e.g. a raising operator.
    Custom(Rc<dyn Fn(&Polynomial<C>) -> Result<Polynomial<C>>>),
}

impl<C: Coefficient> PolyOp<C> {
    pub fn apply(&self, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        match self {
            PolyOp::Identity => Ok(f.clone()),
            PolyOp::Newton(fam, i) => weyl::divided_difference(f, *fam, *i),
            PolyOp::Isobaric(fam, i) => weyl::isobaric(f, *fam, *i),
            PolyOp::IsobaricHat(fam, i) => weyl::isobaric_hat(f, *fam, *i),
            PolyOp::HeckeT { i, t1, t2 } => weyl::hecke_t(f, *i, t1, t2),
            PolyOp::Tau(i) => {
                let swapped = f.act_reflection(*i, Family::A)?;
                Ok(weyl::divided_difference(f, Family::A, *i)?
                    .add(&weyl::isobaric(&swapped, Family::A, *i)?))
            }
            PolyOp::Custom(g) => g(f),
        }
    }
}

/// One reduction step: expand the parent index, apply the operator,
/// multiply by the scalar.
pub struct Step<C: Coefficient> {
    pub parent: Vec<i64>,
    pub op: PolyOp<C>,
    pub scale: C,
}

impl<C: Coefficient> Step<C> {
    pub fn plain(parent: Vec<i64>, op: PolyOp<C>) -> Self {
        Step {
            parent,
            op,
            scale: C::one(),
        }
    }
}

/// What a reduction rule returns for an index vector.
pub enum Outcome<C: Coefficient> {
    Base(Polynomial<C>),
    Steps(Vec<Step<C>>),
}

/// A linear basis defined by a reduction rule from index vectors to
/// monomial polynomials, with a memoization cache.
pub struct Basis<C: Coefficient> {
    name: String,
    prefix: String,
    brackets: (char, char),
    domain: Domain,
    order: Order,
    family: Option<Family>,
    params: Vec<String>,
    convertible: bool,
    rule: Box<dyn Fn(&[i64]) -> Outcome<C>>,
    // Interior mutability confines a basis to one thread; clones of the
    // constructors give independent caches for parallel use.
    cache: RefCell<HashMap<Vec<i64>, Polynomial<C>>>,
}

impl<C: Coefficient> Basis<C> {
    pub fn new(
        name: &str,
        prefix: &str,
        domain: Domain,
        order: Order,
        rule: impl Fn(&[i64]) -> Outcome<C> + 'static,
    ) -> Self {
        Basis {
            name: name.to_string(),
            prefix: prefix.to_string(),
            brackets: ('(', ')'),
            domain,
            order,
            family: None,
            params: Vec::new(),
            convertible: true,
            rule: Box::new(rule),
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// Marks a basis whose index vectors are not support vectors of its
    /// expansions, so greedy elimination does not apply.
    pub fn without_conversion(mut self) -> Self {
        self.convertible = false;
        self
    }

    pub fn with_brackets(mut self, open: char, close: char) -> Self {
        self.brackets = (open, close);
        self
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = Some(family);
        self
    }

    pub fn with_params(mut self, params: &[&str]) -> Self {
        self.params = params.iter().map(|s| s.to_string()).collect();
        self
    }

    #[inline]
    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn prefix(&self) -> &str {
        &self.prefix
    }

    #[inline]
    pub fn brackets(&self) -> (char, char) {
        self.brackets
    }

    #[inline]
    pub fn order(&self) -> Order {
        self.order
    }

    #[inline]
    pub fn family(&self) -> Option<Family> {
        self.family
    }

    #[inline]
    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn check_index(&self, v: &[i64]) -> Result<()> {
        if self.domain == Domain::Naturals && v.iter().any(|&x| x < 0) {
            return Err(Error::IndexOutsideDomain {
                basis: self.name.clone(),
                index: v.to_vec(),
            });
        }
        Ok(())
    }

    /// Expands one basis element into the monomial basis.
    pub fn expand(&self, v: &[i64]) -> Result<Polynomial<C>> {
        self.check_index(v)?;
        // Generous for every built-in rule; converts a non-terminating
        // custom rule into a clean error.
        let bound =
            4 * (v.iter().map(|x| x.unsigned_abs() as usize).sum::<usize>() + v.len() * v.len());
        self.expand_bounded(v, bound, bound)
    }

    fn expand_bounded(&self, v: &[i64], budget: usize, bound: usize) -> Result<Polynomial<C>> {
        if let Some(p) = self.cache.borrow().get(v) {
            return Ok(p.clone());
        }
        if budget == 0 {
            return Err(Error::DepthExceeded {
                basis: self.name.clone(),
                index: v.to_vec(),
                bound,
            });
        }
        let result = match (self.rule)(v) {
            Outcome::Base(p) => p,
            Outcome::Steps(steps) => {
                let mut acc = Polynomial::zero(v.len());
                for s in steps {
                    let parent = self.expand_bounded(&s.parent, budget - 1, bound)?;
                    acc = acc.add(&s.op.apply(&parent)?.scale(&s.scale));
                }
                acc
            }
        };
        self.cache.borrow_mut().insert(v.to_vec(), result.clone());
        Ok(result)
    }

    /// Rewrites a polynomial as a combination of basis elements by greedy
    /// triangular elimination under the basis's leading-term order.
    pub fn to_basis(self: &Rc<Self>, p: &Polynomial<C>) -> Result<Expansion<C>> {
        if !self.convertible {
            return Err(Error::Unsupported(format!(
                "basis `{}` does not support conversion",
                self.name
            )));
        }
        let mut rem = p.clone();
        let mut out = Expansion::empty(self, p.nvars());
        let mut prev: Option<Vec<i64>> = None;
        while !rem.is_zero() {
            let u = self
                .order
                .leading(rem.iter().map(|(e, _)| e))
                .unwrap()
                .clone();
            if let Some(pv) = &prev {
                if self.order.priority(pv, &u) != Ordering::Less {
                    return Err(Error::NotTriangular {
                        basis: self.name.clone(),
                        prev: pv.clone(),
                        next: u,
                    });
                }
            }
            self.check_index(&u)?;
            let element = self.expand(&u)?;
            let lead = element.coefficient(&u);
            if lead.is_zero() {
                return Err(Error::NotTriangular {
                    basis: self.name.clone(),
                    prev: u.clone(),
                    next: u,
                });
            }
            let c = rem.coefficient(&u).exact_div(&lead).ok_or_else(|| {
                Error::NotDivisible(format!(
                    "leading coefficient of {}{:?} does not divide",
                    self.name, u
                ))
            })?;
            rem = rem.sub(&element.scale(&c));
            out.add_term(u.clone(), c);
            prev = Some(u);
        }
        Ok(out)
    }
}

impl<C: Coefficient> fmt::Debug for Basis<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Basis({})", self.name)
    }
}

/// A finite combination of basis elements with an explicit index length.
#[derive(Clone)]
pub struct Expansion<C: Coefficient> {
    basis: Rc<Basis<C>>,
    nvars: usize,
    terms: BTreeMap<Vec<i64>, C>,
}

impl<C: Coefficient> Expansion<C> {
    pub fn empty(basis: &Rc<Basis<C>>, nvars: usize) -> Self {
        Expansion {
            basis: basis.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The single element with index `v` and coefficient 1.
    pub fn element(basis: &Rc<Basis<C>>, v: &[i64]) -> Self {
        let mut e = Self::empty(basis, v.len());
        e.add_term(v.to_vec(), C::one());
        e
    }

    pub fn from_terms(
        basis: &Rc<Basis<C>>,
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, C)>,
    ) -> Self {
        let mut e = Self::empty(basis, nvars);
        for (v, c) in terms {
            e.add_term(v, c);
        }
        e
    }

    pub fn add_term(&mut self, v: Vec<i64>, c: C) {
        debug_assert_eq!(v.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(v) {
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

    #[inline]
    pub fn basis(&self) -> &Rc<Basis<C>> {
        &self.basis
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

    pub fn coefficient(&self, v: &[i64]) -> C {
        self.terms.get(v).cloned().unwrap_or_else(C::zero)
    }

    fn check_same_basis(&self, other: &Self) -> Result<()> {
        if self.basis.name != other.basis.name {
            return Err(Error::BasisMismatch(
                self.basis.name.clone(),
                other.basis.name.clone(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_basis(other)?;
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(v.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            &self.basis,
            self.nvars,
            self.terms.iter().map(|(v, k)| (v.clone(), k.mul_ref(c))),
        )
    }

    /// Linear extension of element expansion into the monomial basis.
    pub fn expand(&self) -> Result<Polynomial<C>> {
        let mut out = Polynomial::zero(self.nvars);
        for (v, c) in &self.terms {
            out = out.add(&self.basis.expand(v)?.scale(c));
        }
        Ok(out)
    }

    /// Re-expresses the combination in another basis.
    pub fn convert(&self, target: &Rc<Basis<C>>) -> Result<Expansion<C>> {
        if Rc::ptr_eq(&self.basis, target) {
            return Ok(self.clone());
        }
        target.to_basis(&self.expand()?)
    }

    /// Product computed through the monomial basis and converted back.
    pub fn multiply(&self, other: &Self) -> Result<Expansion<C>> {
        self.check_same_basis(other)?;
        let product = self.expand()?.mul(&other.expand()?);
        self.basis.to_basis(&product)
    }
}

impl<C: Coefficient> Expansion<C> {
    /// Renders in the basis's display form; `spaced` selects the top-level
    /// style (`Y(1, 2, 2) + …`) versus the compact coefficient style
    /// (`Yy(2,1,3)`).
    pub fn render(&self, spaced: bool) -> String {
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
        let (open, close) = self.basis.brackets;
        let rendered = keys.into_iter().map(|v| {
            let body = format!(
                "{}{}{}{}",
                self.basis.prefix,
                open,
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(sep),
                close
            );
            format!("{}{}", coeff_prefix(&self.terms[v]), body)
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
}

impl<C: Coefficient> fmt::Display for Expansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl<C: Coefficient> fmt::Debug for Expansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Expansion[{}]({})", self.basis.name, self)
    }
}

/// A set of user-registered bases with unique names and display prefixes.
pub struct Registry<C: Coefficient> {
    bases: Vec<Rc<Basis<C>>>,
}

impl<C: Coefficient> Registry<C> {
    pub fn new() -> Self {
        Registry { bases: Vec::new() }
    }

    pub fn register(&mut self, basis: Basis<C>) -> Result<Rc<Basis<C>>> {
        if self.bases.iter().any(|b| b.name == basis.name) {
            return Err(Error::DuplicateBasis(basis.name));
        }
        if self.bases.iter().any(|b| b.prefix == basis.prefix) {
            return Err(Error::DuplicatePrefix(basis.prefix));
        }
        let rc = Rc::new(basis);
        self.bases.push(rc.clone());
        Ok(rc)
    }

    pub fn get(&self, name: &str) -> Result<&Rc<Basis<C>>> {
        self.bases
            .iter()
            .find(|b| b.name == name)
            .ok_or_else(|| Error::UnknownBasis(name.to_string()))
    }
}

impl<C: Coefficient> Default for Registry<C> {
    fn default() -> Self {
        Self::new()
    }
}
