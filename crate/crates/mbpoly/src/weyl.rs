//! Root-system data and difference-operator actions for the four classical
//! families, expressed on exponent vectors.

use std::fmt;
use std::str::FromStr;

use crate::coeff::Coefficient;
use crate::poly::Polynomial;
use crate::{Error, Result};

/// Classical family of the root system acting on the exponent lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    /// Smallest legal operator index (1-based).
    #[inline]
    pub fn min_index(&self) -> usize {
        match self {
            Family::D => 2,
            _ => 1,
        }
    }

    /// Largest legal operator index in `nvars` variables.
    #[inline]
    pub fn max_index(&self, nvars: usize) -> usize {
        match self {
            Family::A => nvars.saturating_sub(1),
            _ => nvars,
        }
    }

    pub fn check_index(&self, i: usize, nvars: usize) -> Result<()> {
        if i < self.min_index() || i > self.max_index(nvars) {
            return Err(Error::IndexOutOfRange {
                family: *self,
                index: i,
                nvars,
            });
        }
        Ok(())
    }

    /// Applies the simple reflection `sᵢ` to an exponent vector.
    pub fn reflect(&self, v: &[i64], i: usize) -> Vec<i64> {
        let mut w = v.to_vec();
        match self {
            Family::A => w.swap(i - 1, i),
            Family::B | Family::C => w[i - 1] = -w[i - 1],
            Family::D => {
                let (a, b) = (w[i - 2], w[i - 1]);
                w[i - 2] = -b;
                w[i - 1] = -a;
            }
        }
        w
    }

    /// The pairing `⟨v, αᵢ∨⟩` driving every operator's string length.
    pub fn pairing(&self, v: &[i64], i: usize) -> i64 {
        match self {
            Family::A => v[i - 1] - v[i],
            Family::B => 2 * v[i - 1],
            Family::C => v[i - 1],
            Family::D => v[i - 2] + v[i - 1],
        }
    }

    /// The simple root `αᵢ` as an exponent-lattice vector.
    pub fn alpha(&self, i: usize, nvars: usize) -> Vec<i64> {
        let mut a = vec![0i64; nvars];
        match self {
            Family::A => {
                a[i - 1] = 1;
                a[i] = -1;
            }
            Family::B => a[i - 1] = 1,
            Family::C => a[i - 1] = 2,
            Family::D => {
                a[i - 2] = 1;
                a[i - 1] = 1;
            }
        }
        a
    }

    /// The Weyl-generator list for a rank-`nvars` group of this type:
    /// the type-A operators on adjacent pairs plus, outside type A, the
    /// family's own operator at the last index.
    pub fn generators(&self, nvars: usize) -> Vec<(Family, usize)> {
        let mut gens: Vec<(Family, usize)> = (1..nvars).map(|i| (Family::A, i)).collect();
        if *self != Family::A && nvars >= self.min_index() {
            gens.push((*self, nvars));
        }
        gens
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Unsupported(format!("unknown family {other:?}"))),
        }
    }
}

// Exponent strings for one monomial; the i64 is a ±1 sign.
fn difference_string(family: Family, i: usize, v: &[i64]) -> Vec<(Vec<i64>, i64)> {
    let c = family.pairing(v, i);
    let alpha = family.alpha(i, v.len());
    let step = |start: &[i64], k: i64| -> Vec<i64> {
        start
            .iter()
            .zip(&alpha)
            .map(|(s, a)| s - k * a)
            .collect()
    };
    match c {
        0 => Vec::new(),
        c if c > 0 => {
            let mut start = v.to_vec();
            start[i - 1] -= 1;
            (0..c).map(|k| (step(&start, k), 1)).collect()
        }
        c => {
            // Antisymmetry: the value at v is minus the value at sᵢ(v).
            let mut start = family.reflect(v, i);
            start[i - 1] -= 1;
            (0..-c).map(|k| (step(&start, k), -1)).collect()
        }
    }
}

fn isobaric_string(family: Family, i: usize, v: &[i64]) -> Vec<(Vec<i64>, i64)> {
    let c = family.pairing(v, i);
    let alpha = family.alpha(i, v.len());
    let step = |k: i64| -> Vec<i64> { v.iter().zip(&alpha).map(|(s, a)| s - k * a).collect() };
    if c >= 0 {
        (0..=c).map(|k| (step(k), 1)).collect()
    } else if c == -1 {
        Vec::new()
    } else {
        (1..-c).map(|k| (step(-k), -1)).collect()
    }
}

fn apply_string<C: Coefficient>(
    f: &Polynomial<C>,
    table: impl Fn(&[i64]) -> Vec<(Vec<i64>, i64)>,
) -> Polynomial<C> {
    let mut out = Polynomial::zero(f.nvars());
    for (e, c) in f.iter() {
        for (v, sign) in table(e) {
            out.add_term(v, if sign >= 0 { c.clone() } else { c.neg_ref() });
        }
    }
    out
}

/// The divided difference `∂ᵢ` of the given family.
pub fn divided_difference<C: Coefficient>(
    f: &Polynomial<C>,
    family: Family,
    i: usize,
) -> Result<Polynomial<C>> {
    family.check_index(i, f.nvars())?;
    Ok(apply_string(f, |v| difference_string(family, i, v)))
}

/// The isobaric divided difference `πᵢ` of the given family.
pub fn isobaric<C: Coefficient>(
    f: &Polynomial<C>,
    family: Family,
    i: usize,
) -> Result<Polynomial<C>> {
    family.check_index(i, f.nvars())?;
    Ok(apply_string(f, |v| isobaric_string(family, i, v)))
}

/// The complement `π̂ᵢ = πᵢ − id`.
pub fn isobaric_hat<C: Coefficient>(
    f: &Polynomial<C>,
    family: Family,
    i: usize,
) -> Result<Polynomial<C>> {
    Ok(isobaric(f, family, i)?.sub(f))
}

/// The Hecke-algebra generator `Tᵢ = (t1+t2)πᵢ − t2·sᵢ` (type A),
/// satisfying `(Tᵢ − t1)(Tᵢ − t2) = 0`.
pub fn hecke_t<C: Coefficient>(
    f: &Polynomial<C>,
    i: usize,
    t1: &C,
    t2: &C,
) -> Result<Polynomial<C>> {
    let pi = isobaric(f, Family::A, i)?;
    let swapped = f.act_reflection(i, Family::A)?;
    Ok(pi.scale(&t1.add_ref(t2)).sub(&swapped.scale(t2)))
}
