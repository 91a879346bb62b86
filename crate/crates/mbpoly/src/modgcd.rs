//! Modular multivariate gcd for parameter polynomials.
//!
//! Operands are cleared to primitive integer polynomials and reduced modulo
//! word-size primes; Brown's evaluation/interpolation scheme computes each
//! prime image and Chinese remaindering recombines them. Every candidate is
//! checked by exact division before it is returned, so an unlucky prime or
//! sample point costs a retry, never a wrong answer.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::coeff::Rational;

type Key = Vec<u32>;
type ZPoly = BTreeMap<Key, u64>;
type IPoly = BTreeMap<Key, BigInt>;

/// Primitive gcd (positive leading rational under plain-lex order) of two
/// nonzero term maps, or `None` when no candidate survived verification.
pub(crate) fn gcd_terms(
    nvars: usize,
    a: &[(Key, Rational)],
    b: &[(Key, Rational)],
) -> Option<Vec<(Key, Rational)>> {
    let ai = clear_to_integers(a);
    let bi = clear_to_integers(b);

    // Split off the per-variable monomial factor so both operands have a
    // zero minimum exponent everywhere.
    let min_a = min_exponents(&ai, nvars);
    let min_b = min_exponents(&bi, nvars);
    let common: Key = min_a.iter().zip(&min_b).map(|(x, y)| *x.min(y)).collect();
    let a0 = shift_down_int(&ai, &min_a);
    let b0 = shift_down_int(&bi, &min_b);

    if a0.len() == 1 || b0.len() == 1 {
        // a stripped single term is the constant 1
        return Some(vec![(common, Rational::one())]);
    }
    let shared: Vec<usize> = (0..nvars)
        .filter(|&v| degree_int(&a0, v) > 0 && degree_int(&b0, v) > 0)
        .collect();
    if shared.is_empty() {
        return Some(vec![(common, Rational::one())]);
    }

    let gamma: BigInt = a0
        .last_key_value()
        .unwrap()
        .1
        .gcd(b0.last_key_value().unwrap().1);
    let mut primes = PrimeStream::new();
    let mut state: Option<(BigInt, IPoly, Key)> = None;
    for _ in 0..32 {
        let p = primes.next_prime();
        let big_p = BigInt::from(p);
        if (a0.last_key_value().unwrap().1 % &big_p).is_zero()
            || (b0.last_key_value().unwrap().1 % &big_p).is_zero()
        {
            continue;
        }
        let ap = reduce_mod(&a0, p);
        let bp = reduce_mod(&b0, p);
        let mut ctx = Ctx {
            p,
            nvars,
            rng: 0x9E37_79B9_7F4A_7C15 ^ p,
        };
        let image = match ctx.brown(&ap, &bp) {
            Some(g) => g,
            None => continue,
        };
        let lead = image.last_key_value().unwrap().0.clone();
        if lead.iter().all(|&e| e == 0) {
            return Some(vec![(common, Rational::one())]);
        }
        // impose the integer leading-coefficient gcd so prime images agree
        let gm = modulo(&gamma, p);
        let scale = ctx.field().mul(gm, ctx.field().inv(*image.get(&lead).unwrap()));
        let image = scale_mod(&image, scale, p);
        state = Some(match state {
            None => (big_p.clone(), balance(&image, &big_p), lead),
            Some((modulus, acc, best)) => match lead.cmp(&best) {
                std::cmp::Ordering::Less => (big_p.clone(), balance(&image, &big_p), lead),
                std::cmp::Ordering::Greater => (modulus, acc, best),
                std::cmp::Ordering::Equal => {
                    let (combined, m) = crt_combine(&acc, &modulus, &image, p);
                    (m, combined, best)
                }
            },
        });
        let (_, acc, _) = state.as_ref().unwrap();
        let candidate = primitive_int(acc);
        if div_exact_int(&a0, &candidate).is_some() && div_exact_int(&b0, &candidate).is_some() {
            let lifted = mul_mono_int(&candidate, &common);
            return Some(
                lifted
                    .into_iter()
                    .map(|(k, c)| (k, Rational::from_integer(c)))
                    .collect(),
            );
        }
    }
    None
}

// ---- Rational → integer clearing ----

fn clear_to_integers(terms: &[(Key, Rational)]) -> IPoly {
    let mut lcm = BigInt::one();
    for (_, c) in terms {
        lcm = lcm.lcm(c.denom());
    }
    let mut out: IPoly = BTreeMap::new();
    for (k, c) in terms {
        out.insert(k.clone(), c.numer() * (&lcm / c.denom()));
    }
    primitive_int(&out)
}

// Integer content and leading sign stripped.
fn primitive_int(p: &IPoly) -> IPoly {
    let mut content = BigInt::zero();
    for c in p.values() {
        content = content.gcd(c);
        if content.is_one() {
            break;
        }
    }
    if content.is_zero() {
        return p.clone();
    }
    if let Some((_, lead)) = p.last_key_value() {
        if lead.is_negative() {
            content = -content;
        }
    }
    p.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.clone(), c / &content))
        .collect()
}

fn min_exponents(p: &IPoly, nvars: usize) -> Key {
    let mut min = vec![u32::MAX; nvars];
    for k in p.keys() {
        for (m, &e) in min.iter_mut().zip(k) {
            *m = (*m).min(e);
        }
    }
    if p.is_empty() {
        vec![0; nvars]
    } else {
        min
    }
}

fn shift_down_int(p: &IPoly, by: &[u32]) -> IPoly {
    p.iter()
        .map(|(k, c)| (k.iter().zip(by).map(|(e, b)| e - b).collect(), c.clone()))
        .collect()
}

fn mul_mono_int(p: &IPoly, by: &[u32]) -> IPoly {
    p.iter()
        .map(|(k, c)| (k.iter().zip(by).map(|(e, b)| e + b).collect(), c.clone()))
        .collect()
}

fn degree_int(p: &IPoly, var: usize) -> u32 {
    p.keys().map(|k| k[var]).max().unwrap_or(0)
}

fn modulo(c: &BigInt, p: u64) -> u64 {
    let m = c.mod_floor(&BigInt::from(p));
    let (_, digits) = m.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

fn reduce_mod(p: &IPoly, prime: u64) -> ZPoly {
    p.iter()
        .filter_map(|(k, c)| {
            let r = modulo(c, prime);
            (r != 0).then(|| (k.clone(), r))
        })
        .collect()
}

fn scale_mod(p: &ZPoly, s: u64, prime: u64) -> ZPoly {
    let f = Field { p: prime };
    p.iter().map(|(k, c)| (k.clone(), f.mul(*c, s))).collect()
}

// Coefficients lifted to the symmetric range (−m/2, m/2].
fn balance(p: &ZPoly, modulus: &BigInt) -> IPoly {
    let half = modulus / 2;
    p.iter()
        .map(|(k, c)| {
            let mut v = BigInt::from(*c);
            if v > half {
                v -= modulus;
            }
            (k.clone(), v)
        })
        .collect()
}

fn crt_combine(acc: &IPoly, modulus: &BigInt, image: &ZPoly, p: u64) -> (IPoly, BigInt) {
    let big_p = BigInt::from(p);
    let next = modulus * &big_p;
    let half = &next / 2;
    let inv = invert_bigint(modulus, &big_p);
    let mut keys: Vec<&Key> = acc.keys().collect();
    for k in image.keys() {
        if !acc.contains_key(k) {
            keys.push(k);
        }
    }
    let mut out: IPoly = BTreeMap::new();
    for k in keys {
        let h = acc.get(k).cloned().unwrap_or_else(BigInt::zero);
        let g = image.get(k).map(|&c| BigInt::from(c)).unwrap_or_default();
        let delta = (&g - &h).mod_floor(&big_p);
        let mut x = &h + modulus * ((delta * &inv).mod_floor(&big_p));
        if x > half {
            x -= &next;
        }
        if !x.is_zero() {
            out.insert(k.clone(), x);
        }
    }
    (out, next)
}

fn invert_bigint(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

fn div_exact_int(num: &IPoly, den: &IPoly) -> Option<IPoly> {
    if den.is_empty() {
        return None;
    }
    let (dk, dc) = den.last_key_value().unwrap();
    let mut rem = num.clone();
    let mut quot: IPoly = BTreeMap::new();
    while let Some((rk, rc)) = rem.last_key_value() {
        let mut qk = Vec::with_capacity(rk.len());
        for (a, b) in rk.iter().zip(dk) {
            if a < b {
                return None;
            }
            qk.push(a - b);
        }
        let (qc, r) = rc.div_rem(dc);
        if !r.is_zero() {
            return None;
        }
        for (k, c) in den {
            let key: Key = k.iter().zip(&qk).map(|(x, y)| x + y).collect();
            let v = rem.get(&key).cloned().unwrap_or_else(BigInt::zero) - &qc * c;
            if v.is_zero() {
                rem.remove(&key);
            } else {
                rem.insert(key, v);
            }
        }
        quot.insert(qk, qc);
    }
    Some(quot)
}

// ---- Word-size prime field ----

#[derive(Clone, Copy)]
struct Field {
    p: u64,
}

impl Field {
    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    #[inline]
    fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
}

struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    fn new() -> Self {
        PrimeStream {
            next: (1 << 62) - 1,
        }
    }

    fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime(c) {
                return c;
            }
        }
    }
}

// Deterministic Miller–Rabin for the 64-bit range.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let f = Field { p: n };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = f.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// ---- Brown's algorithm modulo one prime ----

struct Ctx {
    p: u64,
    nvars: usize,
    rng: u64,
}

impl Ctx {
    #[inline]
    fn field(&self) -> Field {
        Field { p: self.p }
    }

    fn random(&mut self) -> u64 {
        // xorshift*: full-period scrambling is plenty for sample points
        self.rng ^= self.rng >> 12;
        self.rng ^= self.rng << 25;
        self.rng ^= self.rng >> 27;
        self.rng.wrapping_mul(0x2545_F491_4F6C_DD1D) % self.p
    }

    fn brown(&mut self, a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
        if a.is_empty() {
            return Some(b.clone());
        }
        if b.is_empty() {
            return Some(a.clone());
        }
        let min_a = min_exps(a, self.nvars);
        let min_b = min_exps(b, self.nvars);
        let common: Key = min_a.iter().zip(&min_b).map(|(x, y)| *x.min(y)).collect();
        let a0 = shift_down(a, &min_a);
        let b0 = shift_down(b, &min_b);
        if a0.len() == 1 || b0.len() == 1 {
            return Some(monomial(common, 1));
        }
        let shared: Vec<usize> = (0..self.nvars)
            .filter(|&v| degree(&a0, v) > 0 && degree(&b0, v) > 0)
            .collect();
        if shared.is_empty() {
            return Some(monomial(common, 1));
        }
        let main = *shared
            .iter()
            .min_by_key(|&&v| degree(&a0, v).min(degree(&b0, v)))
            .unwrap();
        let core = self.brown_core(&a0, &b0, main)?;
        Some(mul_mono(&core, &common))
    }

    // gcd of two operands with zero minimum exponents and a chosen main
    // variable of positive degree in both.
    fn brown_core(&mut self, a: &ZPoly, b: &ZPoly, main: usize) -> Option<ZPoly> {
        let f = self.field();
        if only_var(a, main) && only_var(b, main) {
            return Some(self.euclid(a, b, main));
        }
        let (cont_a, pp_a) = self.content_split(a, main)?;
        let (cont_b, pp_b) = self.content_split(b, main)?;
        let cg = self.brown(&cont_a, &cont_b)?;
        let gamma = self.brown(&lc_wrt(&pp_a, main), &lc_wrt(&pp_b, main))?;
        // elimination variable: the heaviest remaining one
        let e = (0..self.nvars)
            .filter(|&v| v != main)
            .max_by_key(|&v| degree(&pp_a, v).max(degree(&pp_b, v)).max(degree(&gamma, v)));
        let e = match e {
            Some(v) if degree(&pp_a, v) > 0 || degree(&pp_b, v) > 0 || degree(&gamma, v) > 0 => v,
            _ => {
                let g = self.euclid(&pp_a, &pp_b, main);
                return Some(mul_zp(&cg, &g, f));
            }
        };
        let bound =
            degree(&gamma, e) + degree(&pp_a, e).min(degree(&pp_b, e));
        let lca = lc_wrt(&pp_a, main);
        let lcb = lc_wrt(&pp_b, main);
        let mut attempts = 0usize;
        'restart: loop {
            let mut ts: Vec<u64> = Vec::new();
            let mut newton: Vec<ZPoly> = Vec::new();
            let mut best_deg = u32::MAX;
            while ts.len() < bound as usize + 1 {
                attempts += 1;
                if attempts > 16 * (bound as usize + 2) {
                    return None;
                }
                let t = self.random();
                if ts.contains(&t) {
                    continue;
                }
                if eval(&lca, e, t, f).is_empty()
                    || eval(&lcb, e, t, f).is_empty()
                    || eval(&gamma, e, t, f).is_empty()
                {
                    continue;
                }
                let at = eval(&pp_a, e, t, f);
                let bt = eval(&pp_b, e, t, f);
                let gt = match self.brown_core(&at, &bt, main) {
                    Some(g) => g,
                    None => continue,
                };
                let dm = degree(&gt, main);
                if dm == 0 {
                    // coprime primitive parts
                    return Some(cg);
                }
                if dm > best_deg {
                    continue;
                }
                if dm < best_deg {
                    best_deg = dm;
                    ts.clear();
                    newton.clear();
                }
                // scale the image so its leading coefficient is γ(e←t)
                let lead = gt.last_key_value().unwrap().1;
                let monic = scale_mod(&gt, f.inv(*lead), self.p);
                let h = mul_zp(&monic, &eval(&gamma, e, t, f), f);
                // Newton update: c = (h − H(t)) / Π (t − tᵢ)
                let predicted = eval_newton(&ts, &newton, t, f);
                let mut diff = sub_zp(&h, &predicted, f);
                let mut denom = 1u64;
                for ti in &ts {
                    denom = f.mul(denom, f.sub(t, *ti));
                }
                diff = scale_mod(&diff, f.inv(denom), self.p);
                ts.push(t);
                newton.push(diff);
            }
            let h = expand_newton(&ts, &newton, e, f);
            if h.is_empty() {
                continue 'restart;
            }
            let (_, hpp) = match self.content_split(&h, main) {
                Some(s) => s,
                None => continue 'restart,
            };
            if div_exact_zp(&pp_a, &hpp, f).is_some() && div_exact_zp(&pp_b, &hpp, f).is_some() {
                return Some(mul_zp(&cg, &hpp, f));
            }
        }
    }

    // content (gcd of the main-variable coefficients) and primitive part
    fn content_split(&mut self, p: &ZPoly, main: usize) -> Option<(ZPoly, ZPoly)> {
        let mut cont: Option<ZPoly> = None;
        for part in coeffs_wrt(p, main).values() {
            cont = Some(match cont {
                None => part.clone(),
                Some(acc) => self.brown(&acc, part)?,
            });
            if is_constant(cont.as_ref().unwrap()) {
                cont = Some(monomial(vec![0; self.nvars], 1));
                break;
            }
        }
        let cont = cont?;
        let pp = div_exact_zp(p, &cont, self.field())?;
        Some((cont, pp))
    }

    // dense monic univariate gcd
    fn euclid(&self, a: &ZPoly, b: &ZPoly, var: usize) -> ZPoly {
        let f = self.field();
        let mut x = to_dense(a, var);
        let mut y = to_dense(b, var);
        while !y.is_empty() {
            let r = dense_rem(&x, &y, f);
            x = y;
            y = r;
        }
        let lead = *x.last().unwrap();
        let inv = f.inv(lead);
        let mut out = ZPoly::new();
        for (e, c) in x.iter().enumerate() {
            if *c != 0 {
                let mut key = vec![0u32; self.nvars];
                key[var] = e as u32;
                out.insert(key, f.mul(*c, inv));
            }
        }
        out
    }
}

// ---- mod-p polynomial helpers ----

fn monomial(key: Key, c: u64) -> ZPoly {
    let mut m = ZPoly::new();
    m.insert(key, c);
    m
}

fn is_constant(p: &ZPoly) -> bool {
    p.len() == 1 && p.keys().next().unwrap().iter().all(|&e| e == 0)
}

fn min_exps(p: &ZPoly, nvars: usize) -> Key {
    let mut min = vec![u32::MAX; nvars];
    for k in p.keys() {
        for (m, &e) in min.iter_mut().zip(k) {
            *m = (*m).min(e);
        }
    }
    if p.is_empty() {
        vec![0; nvars]
    } else {
        min
    }
}

fn shift_down(p: &ZPoly, by: &[u32]) -> ZPoly {
    p.iter()
        .map(|(k, c)| (k.iter().zip(by).map(|(e, b)| e - b).collect(), *c))
        .collect()
}

fn mul_mono(p: &ZPoly, by: &[u32]) -> ZPoly {
    p.iter()
        .map(|(k, c)| (k.iter().zip(by).map(|(e, b)| e + b).collect(), *c))
        .collect()
}

fn degree(p: &ZPoly, var: usize) -> u32 {
    p.keys().map(|k| k[var]).max().unwrap_or(0)
}

fn only_var(p: &ZPoly, var: usize) -> bool {
    p.keys()
        .all(|k| k.iter().enumerate().all(|(v, &e)| v == var || e == 0))
}

fn lc_wrt(p: &ZPoly, main: usize) -> ZPoly {
    let d = degree(p, main);
    p.iter()
        .filter(|(k, _)| k[main] == d)
        .map(|(k, c)| {
            let mut key = k.clone();
            key[main] = 0;
            (key, *c)
        })
        .collect()
}

fn coeffs_wrt(p: &ZPoly, main: usize) -> BTreeMap<u32, ZPoly> {
    let mut out: BTreeMap<u32, ZPoly> = BTreeMap::new();
    for (k, c) in p {
        let mut key = k.clone();
        let e = key[main];
        key[main] = 0;
        out.entry(e).or_default().insert(key, *c);
    }
    out
}

fn add_assign_term(p: &mut ZPoly, key: Key, c: u64, f: Field) {
    match p.get_mut(&key) {
        Some(v) => {
            *v = f.add(*v, c);
            if *v == 0 {
                p.remove(&key);
            }
        }
        None => {
            if c != 0 {
                p.insert(key, c);
            }
        }
    }
}

fn add_zp(a: &ZPoly, b: &ZPoly, f: Field) -> ZPoly {
    let mut out = a.clone();
    for (k, c) in b {
        add_assign_term(&mut out, k.clone(), *c, f);
    }
    out
}

fn sub_zp(a: &ZPoly, b: &ZPoly, f: Field) -> ZPoly {
    let mut out = a.clone();
    for (k, c) in b {
        add_assign_term(&mut out, k.clone(), f.sub(0, *c), f);
    }
    out
}

fn mul_zp(a: &ZPoly, b: &ZPoly, f: Field) -> ZPoly {
    let mut out = ZPoly::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let key: Key = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
            add_assign_term(&mut out, key, f.mul(*ca, *cb), f);
        }
    }
    out
}

fn eval(p: &ZPoly, var: usize, t: u64, f: Field) -> ZPoly {
    let d = degree(p, var) as usize;
    let mut powers = Vec::with_capacity(d + 1);
    powers.push(1u64);
    for i in 1..=d {
        powers.push(f.mul(powers[i - 1], t));
    }
    let mut out = ZPoly::new();
    for (k, c) in p {
        let mut key = k.clone();
        let e = key[var] as usize;
        key[var] = 0;
        add_assign_term(&mut out, key, f.mul(*c, powers[e]), f);
    }
    out
}

fn eval_newton(ts: &[u64], coeffs: &[ZPoly], t: u64, f: Field) -> ZPoly {
    let mut acc = ZPoly::new();
    for i in (0..coeffs.len()).rev() {
        acc = scale_mod(&acc, f.sub(t, ts[i]), f.p);
        acc = add_zp(&acc, &coeffs[i], f);
    }
    acc
}

fn expand_newton(ts: &[u64], coeffs: &[ZPoly], var: usize, f: Field) -> ZPoly {
    let mut acc = ZPoly::new();
    let nvars = coeffs
        .iter()
        .flat_map(|c| c.keys())
        .map(|k| k.len())
        .next()
        .unwrap_or(0);
    let mut basis = monomial(vec![0; nvars], 1);
    for (i, c) in coeffs.iter().enumerate() {
        acc = add_zp(&acc, &mul_zp(c, &basis, f), f);
        // basis ×= (x_var − tᵢ)
        let mut xv = vec![0u32; nvars];
        xv[var] = 1;
        let shifted = mul_mono(&basis, &xv);
        let scaled = scale_mod(&basis, f.sub(0, ts[i]), f.p);
        basis = add_zp(&shifted, &scaled, f);
    }
    acc
}

fn div_exact_zp(num: &ZPoly, den: &ZPoly, f: Field) -> Option<ZPoly> {
    if den.is_empty() {
        return None;
    }
    let (dk, dc) = den.last_key_value().unwrap();
    let dinv = f.inv(*dc);
    let mut rem = num.clone();
    let mut quot = ZPoly::new();
    while let Some((rk, rc)) = rem.last_key_value() {
        let mut qk = Vec::with_capacity(rk.len());
        for (a, b) in rk.iter().zip(dk) {
            if a < b {
                return None;
            }
            qk.push(a - b);
        }
        let qc = f.mul(*rc, dinv);
        for (k, c) in den {
            let key: Key = k.iter().zip(&qk).map(|(x, y)| x + y).collect();
            add_assign_term(&mut rem, key, f.sub(0, f.mul(qc, *c)), f);
        }
        quot.insert(qk, qc);
    }
    Some(quot)
}

fn to_dense(p: &ZPoly, var: usize) -> Vec<u64> {
    let d = degree(p, var) as usize;
    let mut out = vec![0u64; d + 1];
    for (k, c) in p {
        out[k[var] as usize] = *c;
    }
    out
}

fn dense_rem(a: &[u64], b: &[u64], f: Field) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = f.inv(b[db]);
    while r.len() > db {
        let dr = r.len() - 1;
        let q = f.mul(r[dr], inv);
        for (j, bc) in b.iter().enumerate() {
            r[dr - db + j] = f.sub(r[dr - db + j], f.mul(q, *bc));
        }
        while let Some(&0) = r.last() {
            r.pop();
        }
        if r.len() <= db {
            break;
        }
    }
    while let Some(&0) = r.last() {
        r.pop();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat_int;

    fn terms(nvars: usize, data: &[(&[u32], i64)]) -> Vec<(Key, Rational)> {
        let _ = nvars;
        let mut v: Vec<(Key, Rational)> = data
            .iter()
            .map(|(k, c)| (k.to_vec(), rat_int(*c)))
            .collect();
        v.sort();
        v
    }

    fn mul_terms(a: &[(Key, Rational)], b: &[(Key, Rational)]) -> Vec<(Key, Rational)> {
        let mut map: BTreeMap<Key, Rational> = BTreeMap::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let k: Key = ka.iter().zip(kb).map(|(x, y)| x + y).collect();
                let v = map.entry(k).or_insert_with(Rational::zero);
                *v += ca * cb;
            }
        }
        map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    #[test]
    fn test_coprime_gives_unit() {
        // t1 + 1 and t2 + 1 share nothing
        let a = terms(2, &[(&[1, 0], 1), (&[0, 0], 1)]);
        let b = terms(2, &[(&[0, 1], 1), (&[0, 0], 1)]);
        let g = gcd_terms(2, &a, &b).unwrap();
        assert_eq!(g, terms(2, &[(&[0, 0], 1)]));
    }

    #[test]
    fn test_recovers_planted_factor() {
        //   (q² − 1)(t1 + t2)  vs  (q − 1)(t1 − t2): common factor q − 1
        let q2 = terms(3, &[(&[0, 0, 2], 1), (&[0, 0, 0], -1)]);
        let s = terms(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1)]);
        let q1 = terms(3, &[(&[0, 0, 1], 1), (&[0, 0, 0], -1)]);
        let d = terms(3, &[(&[1, 0, 0], 1), (&[0, 1, 0], -1)]);
        let g = gcd_terms(3, &mul_terms(&q2, &s), &mul_terms(&q1, &d)).unwrap();
        assert_eq!(g, q1);
    }

    #[test]
    fn test_large_chain_factor() {
        // Π (qᵏt1 + t1 + t2) times a planted square, against the square alone
        let mut left = terms(3, &[(&[0, 0, 0], 1)]);
        for k in 1..=8u32 {
            let factor = terms(3, &[(&[1, 0, k], 1), (&[1, 0, 0], 1), (&[0, 1, 0], 1)]);
            left = mul_terms(&left, &factor);
        }
        let planted = terms(3, &[(&[2, 0, 0], 1), (&[0, 2, 1], 3), (&[0, 0, 0], 2)]);
        let planted_sq = mul_terms(&planted, &planted);
        let a = mul_terms(&left, &planted_sq);
        let b = mul_terms(&planted, &terms(3, &[(&[0, 0, 3], 1), (&[0, 0, 0], 5)]));
        let g = gcd_terms(3, &a, &b).unwrap();
        assert_eq!(g, planted);
    }

    #[test]
    fn test_monomial_content() {
        // t1²t2·(q + 1) vs t1·t2²: gcd t1·t2
        let a = terms(3, &[(&[2, 1, 1], 1), (&[2, 1, 0], 1)]);
        let b = terms(3, &[(&[1, 2, 0], 4)]);
        let g = gcd_terms(3, &a, &b).unwrap();
        assert_eq!(g, terms(3, &[(&[1, 1, 0], 1)]));
    }
}
