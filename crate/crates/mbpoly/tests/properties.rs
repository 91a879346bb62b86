//! Randomized and exhaustive property suites: operator relations, basis
//! round-trips, triangularity audits, and the double-algebra laws. All
//! randomness is seeded; every comparison is exact.

use std::rc::Rc;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mbpoly::bases::{groth_negative, groth_positive, key, key_hat, macdonald, schubert};
use mbpoly::basis::{Basis, Domain, Expansion, Order, Outcome, PolyOp, Step};
use mbpoly::coeff::{rat, rat_int, Coefficient, Rational};
use mbpoly::double::{
    double_groth, double_schubert, schubert_x, transpose_layers, DoublePolynomial,
};
use mbpoly::param::{ParamFraction, ParamPolynomial, ParamRing};
use mbpoly::poly::Polynomial;
use mbpoly::schur::{determinant, determinant_cofactor};
use mbpoly::weyl::{divided_difference, hecke_t, isobaric, isobaric_hat};
use mbpoly::Family;

// ---- Generators ----

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-4..=4i64);
    let den = rng.gen_range(1..=3i64);
    rat(num, den)
}

fn random_poly(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    terms: usize,
    lo: i64,
    hi: i64,
) -> Polynomial<Rational> {
    let mut p = Polynomial::zero(nvars);
    for _ in 0..terms {
        let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(lo..=hi)).collect();
        p = p.add(&Polynomial::monomial(e, random_rational(rng)));
    }
    p
}

fn random_param_poly(
    rng: &mut ChaCha8Rng,
    ring: &std::sync::Arc<ParamRing>,
    nvars: usize,
    terms: usize,
    lo: i64,
    hi: i64,
) -> Polynomial<ParamFraction> {
    let mut p = Polynomial::zero(nvars);
    for _ in 0..terms {
        let e: Vec<i64> = (0..nvars).map(|_| rng.gen_range(lo..=hi)).collect();
        let c = ParamFraction::from_poly(ParamPolynomial::constant_in(ring, random_rational(rng)));
        p = p.add(&Polynomial::monomial(e, c));
    }
    p
}

// Every index vector of the given length with entries in lo..=hi.
fn all_vectors(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

fn assert_expansion_eq<C: Coefficient>(a: &Expansion<C>, b: &Expansion<C>, ctx: &str) {
    assert_eq!(a.term_count(), b.term_count(), "{ctx}: term counts differ");
    for (v, c) in a.iter() {
        assert_eq!(&b.coefficient(v), c, "{ctx}: coefficient at {v:?}");
    }
}

// ---- Coefficient rings ----

#[test]
fn rational_field_axioms() {
    let mut rng = rng(101);
    for _ in 0..200 {
        let a = random_rational(&mut rng);
        let b = random_rational(&mut rng);
        let c = random_rational(&mut rng);
        assert_eq!(&a + &b, &b + &a);
        assert_eq!((&a + &b) + &c, &a + (&b + &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!((&a * &b) * &c, &a * (&b * &c));
        assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if !a.is_zero() {
            assert_eq!(a.inverse().unwrap() * &a, Rational::one());
        }
    }
}

fn random_param_polynomial(
    rng: &mut ChaCha8Rng,
    ring: &std::sync::Arc<ParamRing>,
    terms: usize,
) -> ParamPolynomial {
    let names = ["t1", "t2", "q"];
    let mut p = ParamPolynomial::constant_in(ring, Rational::zero());
    for _ in 0..terms {
        let expo: Vec<u32> = (0..names.len()).map(|_| rng.gen_range(0..=2u32)).collect();
        p = p.add(&ParamPolynomial::monomial(
            ring,
            expo,
            random_rational(rng),
        ));
    }
    p
}

#[test]
fn fraction_equality_sees_through_common_factors() {
    let ring = ParamRing::new(["t1", "t2", "q"]);
    let mut rng = rng(102);
    let mut tested = 0;
    while tested < 100 {
        let num = random_param_polynomial(&mut rng, &ring, 2);
        let den = random_param_polynomial(&mut rng, &ring, 2);
        let extra = random_param_polynomial(&mut rng, &ring, 2);
        if den.is_zero() || extra.is_zero() {
            continue;
        }
        tested += 1;
        let f = ParamFraction::new(num.clone(), den.clone()).unwrap();
        let inflated = ParamFraction::new(num.mul(&extra), den.mul(&extra)).unwrap();
        // cross-multiplication equality agrees with the gcd-reduced forms
        assert_eq!(f, inflated);
        let g = num.gcd(&den);
        let reduced = ParamFraction::new(
            num.exact_div_poly(&g).unwrap(),
            den.exact_div_poly(&g).unwrap(),
        )
        .unwrap();
        assert_eq!(f, reduced);
        if !f.is_zero() {
            let one = ParamFraction::from_poly(ParamPolynomial::constant_in(
                &ring,
                Rational::one(),
            ));
            assert_eq!(f.inverse().unwrap().mul(&f), one);
            assert_ne!(f.add(&one), f);
        }
    }
}

// ---- Polynomial ring ----

#[test]
fn polynomial_ring_axioms() {
    let mut rng = rng(103);
    for _ in 0..200 {
        let n = rng.gen_range(1..=4);
        let a = random_poly(&mut rng, n, 3, -3, 4);
        let b = random_poly(&mut rng, n, 3, -3, 4);
        let c = random_poly(&mut rng, n, 3, -3, 4);
        assert_eq!(a.add(&b), b.add(&a));
        assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // canonical support: no zero coefficient survives any operation
        for p in [a.add(&b), a.mul(&b), a.sub(&a)] {
            assert!(p.iter().all(|(_, c)| !c.is_zero()));
        }
    }
}

#[test]
fn reflection_is_an_involution() {
    let mut rng = rng(104);
    for _ in 0..50 {
        let n = rng.gen_range(2..=4);
        let p = random_poly(&mut rng, n, 4, -3, 4);
        for fam in [Family::A, Family::B, Family::C, Family::D] {
            for i in fam.min_index()..=fam.max_index(n) {
                let twice = p
                    .act_reflection(i, fam)
                    .unwrap()
                    .act_reflection(i, fam)
                    .unwrap();
                assert_eq!(twice, p, "{fam:?} s_{i}");
            }
        }
    }
}

// ---- Operator relations ----

#[test]
fn newton_braid_relations() {
    let mut rng = rng(105);
    for _ in 0..100 {
        let p = random_poly(&mut rng, 4, 4, 0, 4);
        let d = |f: &Polynomial<Rational>, i| divided_difference(f, Family::A, i).unwrap();
        for i in [1, 2] {
            assert_eq!(d(&d(&d(&p, i), i + 1), i), d(&d(&d(&p, i + 1), i), i + 1));
        }
        assert_eq!(d(&d(&p, 1), 3), d(&d(&p, 3), 1));
    }
}

#[test]
fn isobaric_braid_relations() {
    let mut rng = rng(106);
    for _ in 0..100 {
        let p = random_poly(&mut rng, 4, 4, 0, 4);
        let pi = |f: &Polynomial<Rational>, i| isobaric(f, Family::A, i).unwrap();
        let hat = |f: &Polynomial<Rational>, i| isobaric_hat(f, Family::A, i).unwrap();
        for i in [1, 2] {
            assert_eq!(
                pi(&pi(&pi(&p, i), i + 1), i),
                pi(&pi(&pi(&p, i + 1), i), i + 1)
            );
            assert_eq!(
                hat(&hat(&hat(&p, i), i + 1), i),
                hat(&hat(&hat(&p, i + 1), i), i + 1)
            );
        }
        assert_eq!(pi(&pi(&p, 1), 3), pi(&pi(&p, 3), 1));
        assert_eq!(hat(&hat(&p, 1), 3), hat(&hat(&p, 3), 1));
    }
}

#[test]
fn hecke_braid_and_quadratic_relations() {
    let ring = ParamRing::new(["t1", "t2"]);
    let t1 = ParamFraction::parameter(&ring, "t1").unwrap();
    let t2 = ParamFraction::parameter(&ring, "t2").unwrap();
    let mut rng = rng(107);
    for _ in 0..100 {
        let p = random_param_poly(&mut rng, &ring, 4, 3, 0, 3);
        let t = |f: &Polynomial<ParamFraction>, i| hecke_t(f, i, &t1, &t2).unwrap();
        for i in [1, 2] {
            assert_eq!(t(&t(&t(&p, i), i + 1), i), t(&t(&t(&p, i + 1), i), i + 1));
        }
        assert_eq!(t(&t(&p, 1), 3), t(&t(&p, 3), 1));
        // T² = (t1+t2)·T − t1·t2·id
        let tt = t(&t(&p, 2), 2);
        let rhs = t(&p, 2)
            .scale(&t1.add(&t2))
            .sub(&p.scale(&t1.mul(&t2)));
        assert_eq!(tt, rhs);
    }
}

#[test]
fn newton_squares_to_zero() {
    let mut rng = rng(108);
    for _ in 0..60 {
        let n = rng.gen_range(2..=4);
        let p = random_poly(&mut rng, n, 4, -2, 4);
        for fam in [Family::A, Family::C, Family::D] {
            for i in fam.min_index()..=fam.max_index(n) {
                let once = divided_difference(&p, fam, i).unwrap();
                let twice = divided_difference(&once, fam, i).unwrap();
                assert!(twice.is_zero(), "{fam:?} ∂_{i}²");
            }
        }
    }
}

#[test]
fn isobaric_idempotence_all_types() {
    let mut rng = rng(109);
    for _ in 0..60 {
        let n = rng.gen_range(2..=4);
        let p = random_poly(&mut rng, n, 4, -2, 4);
        for fam in [Family::A, Family::B, Family::C, Family::D] {
            for i in fam.min_index()..=fam.max_index(n) {
                let pi = isobaric(&p, fam, i).unwrap();
                assert_eq!(isobaric(&pi, fam, i).unwrap(), pi, "{fam:?} π_{i}");
                let hat = isobaric_hat(&p, fam, i).unwrap();
                assert_eq!(
                    isobaric_hat(&hat, fam, i).unwrap(),
                    hat.neg(),
                    "{fam:?} π̂_{i}"
                );
            }
        }
    }
}

#[test]
fn newton_leibniz_rule() {
    let mut rng = rng(110);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4);
        let f = random_poly(&mut rng, n, 3, 0, 3);
        let g = random_poly(&mut rng, n, 3, 0, 3);
        for i in 1..n {
            let lhs = divided_difference(&f.mul(&g), Family::A, i).unwrap();
            let rhs = divided_difference(&f, Family::A, i)
                .unwrap()
                .mul(&g)
                .add(
                    &f.act_reflection(i, Family::A)
                        .unwrap()
                        .mul(&divided_difference(&g, Family::A, i).unwrap()),
                );
            assert_eq!(lhs, rhs, "∂_{i} Leibniz");
        }
    }
}

#[test]
fn type_c_string_sum_matches_fraction() {
    let mut rng = rng(111);
    for _ in 0..60 {
        let n = rng.gen_range(1..=3);
        let p = random_poly(&mut rng, n, 4, -3, 3);
        for i in 1..=n {
            // denominator xᵢ − xᵢ⁻¹
            let mut up = vec![0i64; n];
            up[i - 1] = 1;
            let mut down = vec![0i64; n];
            down[i - 1] = -1;
            let den = Polynomial::monomial(up, rat_int(1))
                .sub(&Polynomial::monomial(down, rat_int(1)));
            let numer = p.sub(&p.act_reflection(i, Family::C).unwrap());
            let quotient = numer.divexact(&den).expect("division always clears");
            assert_eq!(
                quotient,
                divided_difference(&p, Family::C, i).unwrap(),
                "type C ∂_{i}"
            );
        }
    }
}

// ---- Basis round-trips ----

fn random_combination<C: Coefficient>(
    rng: &mut ChaCha8Rng,
    basis: &Rc<Basis<C>>,
    nvars: usize,
    lo: i64,
    hi: i64,
    coeff: impl Fn(&mut ChaCha8Rng) -> C,
) -> Expansion<C> {
    let mut e = Expansion::empty(basis, nvars);
    for _ in 0..rng.gen_range(1..=3) {
        let v: Vec<i64> = (0..nvars).map(|_| rng.gen_range(lo..=hi)).collect();
        e.add_term(v, coeff(rng));
    }
    e
}

fn round_trip_rational(basis: &Rc<Basis<Rational>>, lo: i64, seed: u64) {
    let mut rng = rng(seed);
    for case in 0..100 {
        let n = rng.gen_range(1..=3);
        let e = random_combination(&mut rng, basis, n, lo, 3, random_rational);
        let back = basis.to_basis(&e.expand().unwrap()).unwrap();
        assert_expansion_eq(&e, &back, &format!("case {case}"));
    }
}

#[test]
fn round_trip_schubert() {
    round_trip_rational(&schubert::<Rational>(), 0, 201);
}

#[test]
fn round_trip_key_a() {
    round_trip_rational(&key::<Rational>(Family::A), 0, 202);
}

#[test]
fn round_trip_key_b() {
    round_trip_rational(&key::<Rational>(Family::B), -3, 203);
}

#[test]
fn round_trip_key_hat() {
    round_trip_rational(&key_hat::<Rational>(), 0, 204);
}

#[test]
fn round_trip_groth_positive() {
    round_trip_rational(&groth_positive::<Rational>(), 0, 205);
}

#[test]
fn round_trip_macdonald() {
    let ring = ParamRing::new(["t1", "t2", "q"]);
    let basis = macdonald(&ring).unwrap();
    let mut rng = rng(206);
    for case in 0..100 {
        let n = rng.gen_range(1..=3);
        let e = random_combination(&mut rng, &basis, n, 0, 3, |r| {
            ParamFraction::from_poly(ParamPolynomial::constant_in(&ring, random_rational(r)))
        });
        let back = basis.to_basis(&e.expand().unwrap()).unwrap();
        assert_expansion_eq(&e, &back, &format!("case {case}"));
    }
}

// ---- Triangularity audits ----

// Independent re-statement of each basis's leading-term order: returns
// true when `w` is eliminated strictly after `lead`.
fn strictly_later(order: Order, lead: &[i64], w: &[i64]) -> bool {
    let deg = |v: &[i64]| -> i64 { v.iter().sum() };
    match order {
        Order::LexMin => w > lead,
        Order::GradedMinLexMin => (deg(w), w) > (deg(lead), lead),
        Order::GradedMaxSortedMax => {
            let key = |v: &[i64]| {
                let mut sorted = v.to_vec();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                let rev: Vec<i64> = v.iter().rev().copied().collect();
                (deg(v), sorted, rev)
            };
            key(w) < key(lead)
        }
    }
}

fn audit_basis<C: Coefficient>(basis: &Rc<Basis<C>>, order: Order, lo: i64, max_n: usize) {
    for n in 1..=max_n {
        for v in all_vectors(n, lo, 3) {
            let p = basis.expand(&v).unwrap();
            assert!(
                !p.coefficient(&v).is_zero(),
                "{}: x^{v:?} missing from its own expansion",
                basis.name()
            );
            for (w, _) in p.iter() {
                if w != &v {
                    assert!(
                        strictly_later(order, &v, w),
                        "{}: {w:?} not strictly past {v:?}",
                        basis.name()
                    );
                }
            }
        }
    }
}

#[test]
fn triangularity_schubert_and_keys() {
    audit_basis(&schubert::<Rational>(), Order::LexMin, 0, 3);
    audit_basis(&key::<Rational>(Family::A), Order::LexMin, 0, 3);
    audit_basis(&key_hat::<Rational>(), Order::LexMin, 0, 3);
}

#[test]
fn triangularity_signed_keys() {
    audit_basis(&key::<Rational>(Family::B), Order::LexMin, -3, 3);
    audit_basis(&key::<Rational>(Family::C), Order::LexMin, -3, 3);
    // the type-D string needs at least two variables
    let d = key::<Rational>(Family::D);
    for n in 2..=3 {
        for v in all_vectors(n, -3, 3) {
            let p = d.expand(&v).unwrap();
            assert!(!p.coefficient(&v).is_zero());
            for (w, _) in p.iter() {
                if w != &v {
                    assert!(strictly_later(Order::LexMin, &v, w));
                }
            }
        }
    }
}

#[test]
fn triangularity_groth_positive() {
    audit_basis(
        &groth_positive::<Rational>(),
        Order::GradedMinLexMin,
        0,
        3,
    );
}

#[test]
fn triangularity_macdonald() {
    let ring = ParamRing::new(["t1", "t2", "q"]);
    let basis = macdonald(&ring).unwrap();
    audit_basis(&basis, Order::GradedMaxSortedMax, 0, 3);
}

// ---- Built-in basis identities ----

#[test]
fn grothendieck_bridge() {
    // substituting xᵢ ↦ 1 − xᵢ⁻¹ into the positive expansion gives the
    // negative one, for every index with n ≤ 3 and entries ≤ 3
    let pos = groth_positive::<Rational>();
    let neg = groth_negative::<Rational>();
    for n in 1..=3 {
        let subs: Vec<(usize, Polynomial<Rational>)> = (1..=n)
            .map(|i| {
                let mut down = vec![0i64; n];
                down[i - 1] = -1;
                (
                    i,
                    Polynomial::one(n).sub(&Polynomial::monomial(down, rat_int(1))),
                )
            })
            .collect();
        for v in all_vectors(n, 0, 3) {
            let bridged = pos.expand(&v).unwrap().subs_var(&subs).unwrap();
            assert_eq!(bridged, neg.expand(&v).unwrap(), "at {v:?}");
        }
    }
}

#[test]
fn key_hat_unitriangular_in_key() {
    let k = key::<Rational>(Family::A);
    let hat = key_hat::<Rational>();
    for n in 1..=3 {
        for v in all_vectors(n, 0, 3) {
            let e = k.to_basis(&hat.expand(&v).unwrap()).unwrap();
            assert_eq!(e.coefficient(&v), rat_int(1), "at {v:?}");
        }
    }
}

#[test]
fn schubert_trailing_zero_stability() {
    let sch = schubert::<Rational>();
    let mut rng = rng(210);
    for _ in 0..40 {
        let n = rng.gen_range(1..=3);
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let mut padded = v.clone();
        padded.extend([0, 0]);
        assert_eq!(
            sch.expand(&padded).unwrap(),
            sch.expand(&v).unwrap().change_nb_variables(n + 2).unwrap(),
            "at {v:?}"
        );
    }
}

#[test]
fn macdonald_denominators_never_vanish() {
    let ring = ParamRing::new(["t1", "t2", "q"]);
    let basis = macdonald(&ring).unwrap();
    for n in 1..=3 {
        for v in all_vectors(n, 0, 2) {
            for (_, c) in basis.expand(&v).unwrap().iter() {
                assert!(!c.den().is_zero(), "at {v:?}");
            }
        }
    }
}

#[test]
fn memoization_is_invisible() {
    let warm = schubert::<Rational>();
    for v in all_vectors(3, 0, 2) {
        let first = warm.expand(&v).unwrap();
        let again = warm.expand(&v).unwrap();
        let cold = schubert::<Rational>().expand(&v).unwrap();
        assert_eq!(first, again);
        assert_eq!(first, cold);
    }
}

// ---- Confluence ----

fn lifted_parent(v: &[i64], i: usize) -> Vec<i64> {
    let mut p = v.to_vec();
    p[i - 1] = v[i] + 1;
    p[i] = v[i - 1];
    p
}

// Schubert variant that straightens the LAST ascent instead of the first.
fn schubert_last_ascent() -> Rc<Basis<Rational>> {
    Rc::new(
        Basis::new("schubert-last", "Y", Domain::Naturals, Order::LexMin, |v| {
            match (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) {
                Some(i) => Outcome::Steps(vec![Step::plain(
                    lifted_parent(v, i),
                    PolyOp::Newton(Family::A, i),
                )]),
                None => Outcome::Base(Polynomial::monomial(v.to_vec(), Rational::one())),
            }
        })
        .with_family(Family::A),
    )
}

// Key variant scanning the generators from the right.
fn key_last_scan(family: Family) -> Rc<Basis<Rational>> {
    let domain = if family == Family::A {
        Domain::Naturals
    } else {
        Domain::Integers
    };
    Rc::new(
        Basis::new("key-last", "K", domain, Order::LexMin, move |v| {
            for (fam, i) in family.generators(v.len()).into_iter().rev() {
                if fam.pairing(v, i) < 0 {
                    return Outcome::Steps(vec![Step::plain(
                        fam.reflect(v, i),
                        PolyOp::Isobaric(fam, i),
                    )]);
                }
            }
            Outcome::Base(Polynomial::monomial(v.to_vec(), Rational::one()))
        })
        .with_family(family),
    )
}

#[test]
fn confluence_schubert() {
    let first = schubert::<Rational>();
    let last = schubert_last_ascent();
    let mut rng = rng(211);
    for _ in 0..50 {
        let n = rng.gen_range(2..=4);
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
        assert_eq!(first.expand(&v).unwrap(), last.expand(&v).unwrap(), "{v:?}");
    }
}

#[test]
fn confluence_key() {
    let mut rng = rng(212);
    for (family, lo) in [(Family::A, 0), (Family::B, -3)] {
        let first = key::<Rational>(family);
        let last = key_last_scan(family);
        for _ in 0..50 {
            let n = rng.gen_range(2..=3);
            let v: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=3)).collect();
            assert_eq!(
                first.expand(&v).unwrap(),
                last.expand(&v).unwrap(),
                "{family:?} {v:?}"
            );
        }
    }
}

// ---- Double algebra ----

#[test]
fn double_schubert_unitriangular() {
    let yy = double_schubert();
    let sx = schubert_x();
    for n in 1..=3 {
        for v in all_vectors(n, 0, 3) {
            let e = sx.to_basis(&yy.expand(&v).unwrap()).unwrap();
            let lead = e.coefficient(&v);
            assert!(lead.is_one(), "at {v:?}: leading coefficient {lead}");
        }
    }
}

#[test]
fn double_specializations() {
    let yy = double_schubert();
    let gg = double_groth();
    let sch = schubert::<Rational>();
    let gn = groth_negative::<Rational>();
    for n in 1..=3 {
        for v in all_vectors(n, 0, 3) {
            let zeroed =
                DoublePolynomial::new(yy.expand(&v).unwrap(), 0).specialize_inner(&rat_int(0));
            assert_eq!(zeroed, sch.expand(&v).unwrap(), "Schubert at {v:?}");
            let oned =
                DoublePolynomial::new(gg.expand(&v).unwrap(), 0).specialize_inner(&rat_int(1));
            assert_eq!(oned, gn.expand(&v).unwrap(), "Grothendieck at {v:?}");
        }
    }
}

fn random_double(rng: &mut ChaCha8Rng, nx: usize, ny: usize) -> DoublePolynomial {
    let mut p: Polynomial<Polynomial<Rational>> = Polynomial::zero(nx);
    for _ in 0..3 {
        let e: Vec<i64> = (0..nx).map(|_| rng.gen_range(0..=3)).collect();
        p = p.add(&Polynomial::monomial(e, random_poly(rng, ny, 2, 0, 2)));
    }
    DoublePolynomial::new(p, ny)
}

#[test]
fn swap_is_involutive_ring_map() {
    let mut rng = rng(213);
    for _ in 0..50 {
        let a = random_double(&mut rng, 2, 3);
        let b = random_double(&mut rng, 2, 3);
        assert_eq!(a.swap_coeffs_elements().swap_coeffs_elements(), a);
        assert_eq!(
            a.add(&b).swap_coeffs_elements(),
            a.swap_coeffs_elements().add(&b.swap_coeffs_elements())
        );
        assert_eq!(
            a.mul(&b).swap_coeffs_elements(),
            a.swap_coeffs_elements().mul(&b.swap_coeffs_elements())
        );
    }
}

#[test]
fn x_operators_commute_with_y_scalars() {
    let mut rng = rng(214);
    for _ in 0..50 {
        let p = random_double(&mut rng, 3, 2);
        let c = random_poly(&mut rng, 2, 2, 0, 2);
        for i in 1..3 {
            let scaled_then_op =
                divided_difference(&p.poly().scale(&c), Family::A, i).unwrap();
            let op_then_scaled =
                divided_difference(p.poly(), Family::A, i).unwrap().scale(&c);
            assert_eq!(scaled_then_op, op_then_scaled, "∂_{i}");
        }
    }
}

#[test]
fn transpose_round_trip() {
    let mut rng = rng(215);
    for _ in 0..50 {
        let p = random_double(&mut rng, 2, 3);
        let t = transpose_layers(p.poly(), 3);
        assert_eq!(&transpose_layers(&t, 2), p.poly());
    }
}

// ---- Determinants ----

#[test]
fn bareiss_matches_cofactor_up_to_4x4() {
    let mut rng = rng(216);
    for _ in 0..30 {
        let n = rng.gen_range(1..=4);
        let m: Vec<Vec<Polynomial<Rational>>> = (0..n)
            .map(|_| (0..n).map(|_| random_poly(&mut rng, 2, 2, 0, 2)).collect())
            .collect();
        assert_eq!(
            determinant(&m).unwrap(),
            determinant_cofactor(&m).unwrap()
        );
    }
}
