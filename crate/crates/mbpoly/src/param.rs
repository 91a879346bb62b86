//! Sparse polynomials and reduced fractions in named parameters (q, t1, t2, …).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, Integer, One, Zero};

use crate::coeff::{rational_signum, Coefficient, Rational};
use crate::{Error, Result};

/// The declared parameter alphabet of a coefficient ring.
///
/// The set is fixed at construction; using an undeclared name is an error.
/// An empty ring holds plain rational constants, which embed into any ring.
#[derive(Debug, PartialEq, Eq)]
pub struct ParamRing {
    names: Vec<String>,
}

// gcd(n1/d1, n2/d2) = gcd(n1, n2) / lcm(d1, d2), non-negative.
fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    Rational::new(
        a.numer().gcd(b.numer()),
        a.denom().lcm(b.denom()),
    )
}

impl ParamRing {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Self> {
        Arc::new(ParamRing {
            names: names.into_iter().map(Into::into).collect(),
        })
    }

    /// The ring with no parameters (plain rationals).
    pub fn empty() -> Arc<Self> {
        ParamRing::new(Vec::<String>::new())
    }

    #[inline]
    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

// Exponent tuple ordered graded-lexicographically: total degree first, then
// entry-wise left to right. `BTreeMap` iteration is therefore ascending and
// the last key is the leading monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
struct PKey(Vec<u32>);

impl Ord for PKey {
    fn cmp(&self, other: &Self) -> Ordering {
        let da: u64 = self.0.iter().map(|&e| e as u64).sum();
        let db: u64 = other.0.iter().map(|&e| e as u64).sum();
        da.cmp(&db).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in the ring's parameters over the rationals.
#[derive(Clone, Debug)]
pub struct ParamPolynomial {
    ring: Arc<ParamRing>,
    // No stored zero coefficients; key length = ring.len().
    terms: BTreeMap<PKey, Rational>,
}

impl ParamPolynomial {
    pub fn zero_in(ring: &Arc<ParamRing>) -> Self {
        ParamPolynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_in(ring: &Arc<ParamRing>, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(PKey(vec![0; ring.len()]), c);
        }
        ParamPolynomial { ring: ring.clone(), terms }
    }

    /// A rational constant in the empty ring; unifies with any ring on use.
    pub fn constant(c: Rational) -> Self {
        Self::constant_in(&ParamRing::empty(), c)
    }

    /// The polynomial consisting of the named parameter.
    pub fn parameter(ring: &Arc<ParamRing>, name: &str) -> Result<Self> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))?;
        let mut key = vec![0; ring.len()];
        key[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(PKey(key), Rational::one());
        Ok(ParamPolynomial { ring: ring.clone(), terms })
    }

    /// Builds a single monomial `c * Π nameᵢ^eᵢ`.
    pub fn monomial(ring: &Arc<ParamRing>, exponents: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exponents.len(), ring.len(), "exponent tuple length");
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(PKey(exponents), c);
        }
        ParamPolynomial { ring: ring.clone(), terms }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<ParamRing> {
        &self.ring
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Returns the value as a rational if it is constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                if k.0.iter().all(|&e| e == 0) {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Leading coefficient under the graded-lexicographic order.
    pub fn leading_rational(&self) -> Rational {
        self.terms
            .last_key_value()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    fn insert_term(&mut self, key: PKey, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if Zero::is_zero(&sum) {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    // Lifts a constant (empty-ring value) into `ring`; identity otherwise.
    fn lifted(&self, ring: &Arc<ParamRing>) -> Self {
        if self.ring.len() == ring.len() {
            return self.clone();
        }
        debug_assert!(self.ring.is_empty());
        Self::constant_in(ring, self.as_rational().expect("constant value"))
    }

    // Resolves the common ring of two values: equal rings pass through,
    // empty-ring constants adopt the other side. Distinct non-empty rings
    // are a programming error.
    fn common_ring(&self, other: &Self) -> Arc<ParamRing> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            self.ring.clone()
        } else if self.ring.is_empty() {
            other.ring.clone()
        } else if other.ring.is_empty() {
            self.ring.clone()
        } else {
            panic!(
                "parameter rings differ: {:?} vs {:?}",
                self.ring.names(),
                other.ring.names()
            );
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let ring = self.common_ring(other);
        let mut out = self.lifted(&ring);
        for (k, c) in other.lifted(&ring).terms {
            out.insert_term(k, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect();
        ParamPolynomial { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let ring = self.common_ring(other);
        let a = self.lifted(&ring);
        let b = other.lifted(&ring);
        let mut out = Self::zero_in(&ring);
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let key: Vec<u32> = ka.0.iter().zip(&kb.0).map(|(x, y)| x + y).collect();
                out.insert_term(PKey(key), ca * cb);
            }
        }
        out
    }

    pub fn mul_rational(&self, c: &Rational) -> Self {
        if Zero::is_zero(c) {
            return Self::zero_in(&self.ring);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        ParamPolynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant_in(&self.ring, Rational::one());
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

    /// Total degree of the leading monomial (0 for constants and zero).
    pub fn total_degree(&self) -> u64 {
        self.terms
            .last_key_value()
            .map(|(k, _)| k.0.iter().map(|&e| e as u64).sum())
            .unwrap_or(0)
    }

    // Positive rational content: gcd of coefficient numerators over the lcm
    // of their denominators.
    fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if Zero::is_zero(&num_gcd) {
            Rational::one()
        } else {
            Rational::new(num_gcd, den_lcm)
        }
    }

    // Divides out the shared monomial factor (the per-variable minimum
    // exponent over the support).
    fn shared_monomial(&self) -> Vec<u32> {
        let n = self.ring.len();
        let mut min = vec![u32::MAX; n];
        for k in self.terms.keys() {
            for (m, &e) in min.iter_mut().zip(&k.0) {
                *m = (*m).min(e);
            }
        }
        if self.terms.is_empty() {
            vec![0; n]
        } else {
            min
        }
    }

    fn shift_down(&self, by: &[u32]) -> Self {
        if by.iter().all(|&e| e == 0) {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let key: Vec<u32> = k.0.iter().zip(by).map(|(e, b)| e - b).collect();
                (PKey(key), c.clone())
            })
            .collect();
        ParamPolynomial { ring: self.ring.clone(), terms }
    }

    /// Exact quotient by `other`, `None` when the division does not clear.
    pub fn exact_div_poly(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let ring = self.common_ring(other);
        let mut rem = self.lifted(&ring);
        let div = other.lifted(&ring);
        let (lead_key, lead_coeff) = {
            let (k, c) = div.terms.last_key_value().unwrap();
            (k.clone(), c.clone())
        };
        let mut quot = Self::zero_in(&ring);
        while !rem.is_zero() {
            let (rk, rc) = rem.terms.last_key_value().unwrap();
            let mut qkey = Vec::with_capacity(rk.0.len());
            for (a, b) in rk.0.iter().zip(&lead_key.0) {
                if a < b {
                    return None;
                }
                qkey.push(a - b);
            }
            let qc = rc / &lead_coeff;
            let qmono = Self::monomial(&ring, qkey, qc);
            rem = rem.sub(&qmono.mul(&div));
            quot = quot.add(&qmono);
        }
        Some(quot)
    }

    // Primitive part with positive leading rational (content and sign
    // stripped); zero maps to zero.
    fn normalized_primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if rational_signum(&self.leading_rational()) < 0 {
            c = -c;
        }
        self.mul_rational(&c.recip())
    }

    // ---- Multivariate gcd by primitive pseudo-remainder sequences ----

    fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|k| k.0[var]).max().unwrap_or(0)
    }

    // Dense coefficient list in `var` (coefficients have exponent 0 there).
    fn univariate_in(&self, var: usize) -> Vec<ParamPolynomial> {
        let deg = self.degree_in(var) as usize;
        let mut coeffs = vec![Self::zero_in(&self.ring); deg + 1];
        for (k, c) in &self.terms {
            let mut key = k.0.clone();
            let e = key[var] as usize;
            key[var] = 0;
            coeffs[e].insert_term(PKey(key), c.clone());
        }
        coeffs
    }

    fn from_univariate(coeffs: &[ParamPolynomial], var: usize, ring: &Arc<ParamRing>) -> Self {
        let mut out = Self::zero_in(ring);
        for (e, c) in coeffs.iter().enumerate() {
            for (k, v) in &c.terms {
                let mut key = k.0.clone();
                key[var] += e as u32;
                out.insert_term(PKey(key), v.clone());
            }
        }
        out
    }

    // Pseudo-remainder of dense univariate coefficient lists; the top
    // coefficient of `g` must be nonzero.
    fn pseudo_rem(f: &[ParamPolynomial], g: &[ParamPolynomial]) -> Vec<ParamPolynomial> {
        let dg = g.len() - 1;
        let lc_g = g[dg].clone();
        let mut r: Vec<ParamPolynomial> = f.to_vec();
        while r.len() > 1 && r.last().unwrap().is_zero() {
            r.pop();
        }
        while r.len() > dg && !(r.len() == 1 && r[0].is_zero()) {
            let dr = r.len() - 1;
            let lc_r = r[dr].clone();
            // r := lc_g·r − lc_r·x^(dr−dg)·g
            for c in r.iter_mut() {
                *c = c.mul(&lc_g);
            }
            for (j, gc) in g.iter().enumerate() {
                let t = lc_r.mul(gc);
                r[dr - dg + j] = r[dr - dg + j].sub(&t);
            }
            debug_assert!(r[dr].is_zero());
            r.pop();
            while r.len() > 1 && r.last().unwrap().is_zero() {
                r.pop();
            }
            if r.is_empty() {
                break;
            }
        }
        if r.is_empty() {
            vec![ParamPolynomial::zero_in(&lc_g.ring)]
        } else {
            r
        }
    }

    /// Greatest common divisor, primitive with positive leading rational.
    pub fn gcd(&self, other: &Self) -> Self {
        let ring = self.common_ring(other);
        let a = self.lifted(&ring);
        let b = other.lifted(&ring);
        if a.is_zero() {
            return b.normalized_primitive();
        }
        if b.is_zero() {
            return a.normalized_primitive();
        }
        if a.terms == b.terms {
            return a.normalized_primitive();
        }
        let ta: Vec<(Vec<u32>, Rational)> =
            a.terms.iter().map(|(k, c)| (k.0.clone(), c.clone())).collect();
        let tb: Vec<(Vec<u32>, Rational)> =
            b.terms.iter().map(|(k, c)| (k.0.clone(), c.clone())).collect();
        if let Some(g) = crate::modgcd::gcd_terms(ring.len(), &ta, &tb) {
            let mut out = Self::zero_in(&ring);
            for (k, c) in g {
                out.insert_term(PKey(k), c);
            }
            return out.normalized_primitive();
        }
        Self::gcd_prs(&a, &b, &ring)
    }

    // Fallback path when the modular routine declines: primitive
    // pseudo-remainder sequences, one variable at a time.
    fn gcd_prs(a: &Self, b: &Self, ring: &Arc<ParamRing>) -> Self {
        // Main variable: the first parameter occurring in either operand.
        let var = (0..ring.len()).find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0);
        let var = match var {
            // Both operands constant: the gcd is the unit.
            None => return Self::constant_in(ring, Rational::one()),
            Some(v) => v,
        };
        let fu = a.univariate_in(var);
        let gu = b.univariate_in(var);
        let cont_f = fu.iter().fold(Self::zero_in(ring), |acc, c| acc.gcd(c));
        let cont_g = gu.iter().fold(Self::zero_in(ring), |acc, c| acc.gcd(c));
        let cont = cont_f.gcd(&cont_g);
        let mut fp: Vec<ParamPolynomial> = fu
            .iter()
            .map(|c| c.exact_div_poly(&cont_f).expect("content divides"))
            .collect();
        let mut gp: Vec<ParamPolynomial> = gu
            .iter()
            .map(|c| c.exact_div_poly(&cont_g).expect("content divides"))
            .collect();
        if fp.len() < gp.len() {
            std::mem::swap(&mut fp, &mut gp);
        }
        // Primitive pseudo-remainder sequence in the main variable.
        loop {
            if gp.iter().all(|c| c.is_zero()) {
                break;
            }
            let r = Self::pseudo_rem(&fp, &gp);
            let rp = Self::from_univariate(&r, var, ring).primitive_in(var);
            fp = gp;
            gp = rp;
            if gp.len() == 1 && !gp[0].is_zero() {
                // Degree-zero remainder: the primitive gcd in `var` is 1.
                return cont.normalized_primitive();
            }
        }
        let g = Self::from_univariate(&fp, var, ring).primitive_in(var);
        Self::from_univariate(&g, var, ring)
            .mul(&cont)
            .normalized_primitive()
    }

    // Primitive part w.r.t. `var` as a dense coefficient list.
    fn primitive_in(&self, var: usize) -> Vec<ParamPolynomial> {
        if self.is_zero() {
            return vec![Self::zero_in(&self.ring)];
        }
        let u = self.univariate_in(var);
        let cont = u
            .iter()
            .fold(Self::zero_in(&self.ring), |acc, c| acc.gcd(c));
        u.iter()
            .map(|c| c.exact_div_poly(&cont).expect("content divides"))
            .collect()
    }

    // Compact string, graded-lex descending, monomial factors in ring-name
    // order: "t1*t2*q^2+t2^2*q-t1*t2-t2^2".
    fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (name, &e) in self.ring.names().iter().zip(&k.0) {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(name);
                if e > 1 {
                    mono.push_str(&format!("^{e}"));
                }
            }
            let term = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == -Rational::one() {
                format!("-{mono}")
            } else {
                format!("{c}*{mono}")
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        out
    }
}

impl PartialEq for ParamPolynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.ring.len() != other.ring.len() {
            let ring = self.common_ring(other);
            return self.lifted(&ring).terms == other.lifted(&ring).terms;
        }
        self.terms == other.terms
    }
}

impl fmt::Display for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add for ParamPolynomial {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        ParamPolynomial::add(&self, &other)
    }
}

impl std::ops::Mul for ParamPolynomial {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        ParamPolynomial::mul(&self, &other)
    }
}

impl std::ops::Neg for ParamPolynomial {
    type Output = Self;
    fn neg(self) -> Self {
        ParamPolynomial::neg(&self)
    }
}

impl Zero for ParamPolynomial {
    fn zero() -> Self {
        Self::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        ParamPolynomial::is_zero(self)
    }
}

impl One for ParamPolynomial {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Coefficient for ParamPolynomial {
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn neg_ref(&self) -> Self {
        self.neg()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Option<Self> {
        // Units of the polynomial ring are the nonzero constants.
        let c = self.as_rational()?;
        if Zero::is_zero(&c) {
            None
        } else {
            Some(Self::constant_in(&self.ring, c.recip()))
        }
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.exact_div_poly(other)
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
}

/// Quotient of two parameter polynomials, normalized lazily: rational
/// content and shared monomial factors are always stripped and the
/// denominator keeps a positive leading rational; a full gcd reduction runs
/// when the denominator is not a single term. Equality is decided by
/// cross-multiplication, so unreduced representatives compare correctly.
#[derive(Clone, Debug)]
pub struct ParamFraction {
    num: ParamPolynomial,
    den: ParamPolynomial,
}

impl ParamFraction {
    pub fn new(num: ParamPolynomial, den: ParamPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(num: ParamPolynomial) -> Self {
        let one = ParamPolynomial::constant_in(num.ring(), Rational::one());
        Self::normalized(num, one)
    }

    pub fn parameter(ring: &Arc<ParamRing>, name: &str) -> Result<Self> {
        Ok(Self::from_poly(ParamPolynomial::parameter(ring, name)?))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(ParamPolynomial::constant(c))
    }

    #[inline]
    pub fn num(&self) -> &ParamPolynomial {
        &self.num
    }

    #[inline]
    pub fn den(&self) -> &ParamPolynomial {
        &self.den
    }

    pub fn as_rational(&self) -> Option<Rational> {
        let n = self.num.as_rational()?;
        let d = self.den.as_rational()?;
        Some(n / d)
    }

    fn normalized(num: ParamPolynomial, den: ParamPolynomial) -> Self {
        debug_assert!(!den.is_zero());
        let ring = num.common_ring(&den);
        let mut num = num.lifted(&ring);
        let mut den = den.lifted(&ring);
        if num.is_zero() {
            return ParamFraction {
                num,
                den: ParamPolynomial::constant_in(&ring, Rational::one()),
            };
        }
        // Shared monomial factor over the union of both supports.
        let mn = num.shared_monomial();
        let md = den.shared_monomial();
        let shared: Vec<u32> = mn.iter().zip(&md).map(|(a, b)| *a.min(b)).collect();
        num = num.shift_down(&shared);
        den = den.shift_down(&shared);
        // Joint rational content and denominator sign.
        let mut c = rational_gcd(&num.content(), &den.content());
        if rational_signum(&den.leading_rational()) < 0 {
            c = -c;
        }
        let inv = c.recip();
        num = num.mul_rational(&inv);
        den = den.mul_rational(&inv);
        // Multi-term denominators get the full polynomial gcd treatment so
        // repeated arithmetic cannot accumulate bulk.
        if den.term_count() > 1 {
            let g = num.gcd(&den);
            if g.total_degree() > 0 {
                num = num.exact_div_poly(&g).expect("gcd divides");
                den = den.exact_div_poly(&g).expect("gcd divides");
            }
            if rational_signum(&den.leading_rational()) < 0 {
                num = num.neg();
                den = den.neg();
            }
        }
        ParamFraction { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        ParamFraction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::normalized(self.num.pow(e), self.den.pow(e))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl PartialEq for ParamFraction {
    fn eq(&self, other: &Self) -> bool {
        // Cross-multiplication decides equality without canonical forms.
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Display for ParamFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.render();
        if self.den.as_rational().map(|d| d.is_one()) == Some(true) {
            return f.write_str(&num);
        }
        let num = if self.num.term_count() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den = self.den.render();
        // A denominator that is itself a product or a sum needs wrapping.
        let den = if den.contains('+') || den.contains('-') || den.contains('*') {
            format!("({den})")
        } else {
            den
        };
        write!(f, "{num}/{den}")
    }
}

impl std::ops::Add for ParamFraction {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        ParamFraction::add(&self, &other)
    }
}

impl std::ops::Mul for ParamFraction {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        ParamFraction::mul(&self, &other)
    }
}

impl std::ops::Neg for ParamFraction {
    type Output = Self;
    fn neg(self) -> Self {
        ParamFraction::neg(&self)
    }
}

impl Zero for ParamFraction {
    fn zero() -> Self {
        Self::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        ParamFraction::is_zero(self)
    }
}

impl One for ParamFraction {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Coefficient for ParamFraction {
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn neg_ref(&self) -> Self {
        self.neg()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.mul(&inv))
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }
}
