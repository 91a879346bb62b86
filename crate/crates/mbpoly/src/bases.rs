//! Reduction rules for the built-in bases: Schubert, Key of every type,
//! vanishing Key, both Grothendieck forms, and nonsymmetric Macdonald.

use std::rc::Rc;
use std::sync::Arc;

use num::One;

use crate::basis::{Basis, Domain, Expansion, Order, Outcome, PolyOp, Step};
use crate::coeff::Coefficient;
use crate::param::{ParamFraction, ParamRing};
use crate::poly::Polynomial;
use crate::weyl::Family;
use crate::{Error, Result};

// 1-based index of the first ascent, if any.
pub(crate) fn first_ascent(v: &[i64]) -> Option<usize> {
    (1..v.len()).find(|&i| v[i - 1] < v[i])
}

// Parent index for the Schubert-style recursion at ascent i.
pub(crate) fn ascent_parent(v: &[i64], i: usize) -> Vec<i64> {
    let mut p = v.to_vec();
    p[i - 1] = v[i] + 1;
    p[i] = v[i - 1];
    p
}

fn monomial_of<C: Coefficient>(v: &[i64]) -> Polynomial<C> {
    Polynomial::monomial(v.to_vec(), C::one())
}

/// The monomial basis: every index vector is its own exponent vector.
pub fn monomial_basis<C: Coefficient + 'static>() -> Rc<Basis<C>> {
    Rc::new(
        Basis::new("monomial", "x", Domain::Integers, Order::LexMin, |v| {
            Outcome::Base(monomial_of(v))
        })
        .with_brackets('[', ']'),
    )
}

/// Monomials carrying a root-system type tag; the display form of `expand`.
pub fn ambient_basis<C: Coefficient + 'static>(family: Family) -> Rc<Basis<C>> {
    Rc::new(
        Basis::new(
            &format!("ambient-{family}"),
            "x",
            Domain::Integers,
            Order::LexMin,
            |v| Outcome::Base(monomial_of(v)),
        )
        .with_family(family),
    )
}

/// Wraps a polynomial's terms as an ambient-basis combination for display.
pub fn into_ambient<C: Coefficient + 'static>(p: &Polynomial<C>, family: Family) -> Expansion<C> {
    Expansion::from_terms(
        &ambient_basis(family),
        p.nvars(),
        p.iter().map(|(e, c)| (e.clone(), c.clone())),
    )
}

// Schubert lift rule: straighten the first ascent through a Newton step.
pub(crate) fn schubert_rule<C: Coefficient>(v: &[i64]) -> Outcome<C> {
    match first_ascent(v) {
        Some(i) => Outcome::Steps(vec![Step::plain(
            ascent_parent(v, i),
            PolyOp::Newton(Family::A, i),
        )]),
        None => Outcome::Base(monomial_of(v)),
    }
}

/// Schubert polynomials: dominant indices are monomials; an ascent lifts
/// through Newton's divided difference.
pub fn schubert<C: Coefficient + 'static>() -> Rc<Basis<C>> {
    Rc::new(
        Basis::new("schubert", "Y", Domain::Naturals, Order::LexMin, |v| {
            schubert_rule(v)
        })
        .with_family(Family::A),
    )
}

// Shared Key scan: the first generator with a negative coroot pairing
// names both the parent index and the isobaric step.
fn key_rule<C: Coefficient>(
    v: &[i64],
    family: Family,
    op: fn(Family, usize) -> PolyOp<C>,
) -> Outcome<C> {
    for (fam, i) in family.generators(v.len()) {
        if fam.pairing(v, i) < 0 {
            return Outcome::Steps(vec![Step::plain(fam.reflect(v, i), op(fam, i))]);
        }
    }
    Outcome::Base(monomial_of(v))
}

/// Key (Demazure) polynomials of the given type.
pub fn key<C: Coefficient + 'static>(family: Family) -> Rc<Basis<C>> {
    let domain = if family == Family::A {
        Domain::Naturals
    } else {
        Domain::Integers
    };
    Rc::new(
        Basis::new(
            &format!("key-{family}"),
            "K",
            domain,
            Order::LexMin,
            move |v| key_rule(v, family, PolyOp::Isobaric),
        )
        .with_family(family),
    )
}

/// Vanishing Key polynomials: the type-A Key recursion with π̂ᵢ = πᵢ − id.
pub fn key_hat<C: Coefficient + 'static>() -> Rc<Basis<C>> {
    Rc::new(
        Basis::new("key-hat", "^K", Domain::Naturals, Order::LexMin, |v| {
            key_rule(v, Family::A, PolyOp::IsobaricHat)
        })
        .with_family(Family::A),
    )
}

// Π over i of (1 − xᵢ⁻¹)^{vᵢ} for dominant v.
fn inverse_factor_product<C: Coefficient>(v: &[i64]) -> Polynomial<C> {
    let n = v.len();
    let mut out = Polynomial::one(n);
    for (pos, &e) in v.iter().enumerate() {
        let mut unit = vec![0; n];
        unit[pos] = -1;
        let factor = Polynomial::one(n).sub(&Polynomial::monomial(unit, C::one()));
        out = out.mul(&factor.pow(e as u32));
    }
    out
}

/// Grothendieck polynomials in the x⁻¹ form: dominant base case
/// Π(1 − xᵢ⁻¹)^{vᵢ}, ascents lift through πᵢ. Its index vectors are not
/// support vectors of its expansions, so conversion into it is disabled;
/// reach it through the positive form and `subs_var`.
pub fn groth_negative<C: Coefficient + 'static>() -> Rc<Basis<C>> {
    Rc::new(
        Basis::new("groth-neg", "G", Domain::Naturals, Order::LexMin, |v| {
            match first_ascent(v) {
                Some(i) => Outcome::Steps(vec![Step::plain(
                    ascent_parent(v, i),
                    PolyOp::Isobaric(Family::A, i),
                )]),
                None => Outcome::Base(inverse_factor_product(v)),
            }
        })
        .with_family(Family::A)
        .without_conversion(),
    )
}

/// Grothendieck polynomials with positive exponents: the image of the x⁻¹
/// form under xᵢ ↦ 1 − xᵢ⁻¹, generated from x^v by τᵢ.
pub fn groth_positive<C: Coefficient + 'static>() -> Rc<Basis<C>> {
    Rc::new(
        Basis::new(
            "groth-pos",
            "G",
            Domain::Naturals,
            Order::GradedMinLexMin,
            |v| match first_ascent(v) {
                Some(i) => Outcome::Steps(vec![Step::plain(ascent_parent(v, i), PolyOp::Tau(i))]),
                None => Outcome::Base(monomial_of(v)),
            },
        )
        .with_family(Family::A),
    )
}

// ---- Macdonald ----
//
// The recursion climbs the Yang–Baxter graph: a vector with v₁ ≥ 1 is
// reached from its left rotation w = (v₂,…,vₙ,v₁−1) by a raising step, and
// a vector with v₁ = 0 from the exchange w = v·sᵢ at the first ascent
// through the Hecke generator. Every scalar below is calibrated by the
// M(1,2) expansion and the m[1,1] conversion fixtures.

fn q_power(q: &ParamFraction, z: i64) -> ParamFraction {
    if z >= 0 {
        q.pow(z as u32)
    } else {
        q.inverse().expect("parameter is invertible").pow(-z as u32)
    }
}

// Spectral value χ(v), tracked as a flavor and a q-exponent:
// true ↦ t1·q^z, false ↦ −t2·q^z.
fn chi_flavor(v: &[i64]) -> (bool, i64) {
    if v.iter().all(|&x| x == 0) {
        return (true, 0);
    }
    if v[0] >= 1 {
        let mut w: Vec<i64> = v[1..].to_vec();
        w.push(v[0] - 1);
        let (f, z) = chi_flavor(&w);
        return (f, z + w[w.len() - 1]);
    }
    let i = first_ascent(v).expect("a nonzero natural vector led by 0 has an ascent");
    let (f, z) = chi_flavor(&Family::A.reflect(v, i));
    (!f, -z)
}

fn chi(v: &[i64], t1: &ParamFraction, t2: &ParamFraction, q: &ParamFraction) -> ParamFraction {
    let (f, z) = chi_flavor(v);
    let base = if f { t1.clone() } else { t2.neg() };
    base.mul(&q_power(q, z))
}

// β(w) normalizes the exchange step so the child is monic on its index.
fn beta_scalar(
    w: &[i64],
    t1: &ParamFraction,
    t2: &ParamFraction,
    q: &ParamFraction,
) -> ParamFraction {
    let (f, _) = chi_flavor(w);
    let qcw = q.mul(&chi(w, t1, t2, q));
    let num = if f {
        qcw.add(t2).neg()
    } else {
        qcw.sub(t1).neg()
    };
    let den = t1
        .mul(t2)
        .mul(&q.sub(&ParamFraction::one()))
        .mul(&qcw.add(t1).add(t2));
    num.mul(&den.inverse().expect("generically nonzero denominator"))
}

// Divides by the leading coefficient, wraps the last variable around to the
// front with a q-shift, then multiplies by (x₁ − χ(w)) and the prefactor
// γ(w).
fn raising_step(
    p: &Polynomial<ParamFraction>,
    w: &[i64],
    t1: &ParamFraction,
    t2: &ParamFraction,
    q: &ParamFraction,
) -> Result<Polynomial<ParamFraction>> {
    let lead = Order::GradedMaxSortedMax
        .leading(p.iter().map(|(e, _)| e))
        .expect("expansion is nonzero")
        .clone();
    let inv = p
        .coefficient(&lead)
        .inverse()
        .ok_or(Error::DivisionByZero)?;
    let wrapped = p.map_terms(|e, c| {
        let last = e[e.len() - 1];
        let mut m = Vec::with_capacity(e.len());
        m.push(last);
        m.extend_from_slice(&e[..e.len() - 1]);
        (m, c.mul_ref(&inv).mul_ref(&q_power(q, -last)))
    });
    let n = p.nvars();
    let mut x1 = vec![0; n];
    x1[0] = 1;
    let lin = Polynomial::monomial(x1, ParamFraction::one())
        .sub(&Polynomial::constant(n, chi(w, t1, t2, q)));
    let gamma = if w.iter().all(|&x| x == 0) {
        t1.clone()
    } else {
        q_power(q, -w.iter().sum::<i64>())
    };
    Ok(lin.mul(&wrapped).scale(&gamma))
}

fn macdonald_rule(
    v: &[i64],
    t1: &ParamFraction,
    t2: &ParamFraction,
    q: &ParamFraction,
) -> Outcome<ParamFraction> {
    let n = v.len();
    if v.iter().all(|&x| x == 0) {
        return Outcome::Base(Polynomial::one(n));
    }
    if v[0] >= 1 {
        let mut w: Vec<i64> = v[1..].to_vec();
        w.push(v[0] - 1);
        let (wc, t1c, t2c, qc) = (w.clone(), t1.clone(), t2.clone(), q.clone());
        let raise = move |p: &Polynomial<ParamFraction>| raising_step(p, &wc, &t1c, &t2c, &qc);
        return Outcome::Steps(vec![Step::plain(w, PolyOp::Custom(Rc::new(raise)))]);
    }
    let i = first_ascent(v).expect("a nonzero natural vector led by 0 has an ascent");
    let w = Family::A.reflect(v, i);
    let beta = beta_scalar(&w, t1, t2, q);
    let correction = beta.mul(&t1.add(t2)).neg();
    Outcome::Steps(vec![
        Step {
            parent: w.clone(),
            op: PolyOp::HeckeT {
                i,
                t1: t1.clone(),
                t2: t2.clone(),
            },
            scale: beta,
        },
        Step {
            parent: w,
            op: PolyOp::Identity,
            scale: correction,
        },
    ])
}

/// Nonsymmetric Macdonald polynomials over a ring containing t1, t2, q.
pub fn macdonald(ring: &Arc<ParamRing>) -> Result<Rc<Basis<ParamFraction>>> {
    let t1 = ParamFraction::parameter(ring, "t1")?;
    let t2 = ParamFraction::parameter(ring, "t2")?;
    let q = ParamFraction::parameter(ring, "q")?;
    Ok(Rc::new(
        Basis::new(
            "macdonald",
            "M",
            Domain::Naturals,
            Order::GradedMaxSortedMax,
            move |v| macdonald_rule(v, &t1, &t2, &q),
        )
        .with_family(Family::A)
        .with_params(&["t1", "t2", "q"]),
    ))
}
