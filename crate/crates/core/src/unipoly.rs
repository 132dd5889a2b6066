//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order; the vector is empty for the
//! zero polynomial and otherwise ends in a nonzero entry.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::text::read_terms;

/// Divides out the positive gcd of the coefficients.
fn primitive(mut c: Vec<BigInt>) -> Vec<BigInt> {
    let g = c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in c.iter_mut() {
            *x /= &g;
        }
    }
    c
}

const PRIMES: [u64; 3] = [2_305_843_009_213_693_951, 1_000_000_007, 998_244_353];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, m - 2, 1);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

fn reduce(c: &[BigInt], m: u64) -> Vec<u64> {
    let big = BigInt::from(m);
    let mut out: Vec<u64> = c
        .iter()
        .map(|x| x.mod_floor(&big).try_into().expect("reduced below m"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn degree_of_gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, m: u64) -> usize {
    while !b.is_empty() {
        let inv = inv_mod(*b.last().expect("nonempty"), m);
        while a.len() >= b.len() {
            let f = mul_mod(*a.last().expect("nonempty"), inv, m);
            let shift = a.len() - b.len();
            for (j, bj) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + m - mul_mod(f, *bj, m)) % m;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// A prime not dividing either leading coefficient bounds the degree of
/// the gcd from above, so a trivial gcd modulo it proves coprimality.
fn coprime_modulo_some_prime(a: &[BigInt], b: &[BigInt]) -> bool {
    PRIMES.iter().any(|&m| {
        let (ra, rb) = (reduce(a, m), reduce(b, m));
        ra.len() == a.len() && rb.len() == b.len() && degree_of_gcd_mod(ra, rb, m) == 0
    })
}

/// Remainder of `|lc(b)|^k a` modulo `b`, a positive multiple of `a mod b`.
/// Both inputs are ascending and free of trailing zeros; `b` is nonzero.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let (scale, flip) = (lb.abs(), lb.is_negative());
    let mut r = a.to_vec();
    while r.len() > db {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let lr = if flip { -lr } else { lr };
        let shift = top - db;
        for x in r.iter_mut() {
            *x *= &scale;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        debug_assert!(r[top].is_zero());
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `t - c`
    pub fn linear_root(c: Rational) -> Self {
        Self::new(vec![-c, Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Sign of the value, as -1, 0 or 1.
    pub fn sign_at(&self, t: &Rational) -> i32 {
        sign(&self.eval(t))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if sd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    ///
    /// Runs a primitive remainder sequence over the integers, which keeps
    /// coefficient growth linear in the degree.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_ints(), other.primitive_ints());
        if !a.is_empty() && !b.is_empty() && coprime_modulo_some_prime(&a, &b) {
            return Self::one();
        }
        while !b.is_empty() {
            let r = primitive(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        Self::from_bigints(&a).monic()
    }

    /// The positive multiple of `self` with coprime integer coefficients.
    pub fn primitive_part(&self) -> Self {
        Self::from_bigints(&self.primitive_ints())
    }

    /// A positive multiple of `-(self mod divisor)`, as used by Sturm chains.
    pub fn neg_pseudo_rem(&self, divisor: &Self) -> Self {
        let r = pseudo_rem(&self.primitive_ints(), &divisor.primitive_ints());
        Self::from_bigints(&primitive(r)).neg()
    }

    fn primitive_ints(&self) -> Vec<BigInt> {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        primitive(ints)
    }

    fn from_bigints(c: &[BigInt]) -> Self {
        Self::new(c.iter().map(|x| Rational::from_integer(x.clone())).collect())
    }

    /// Multiplicity of 0 as a root, and the cofactor `p / t^k`.
    pub fn split_zero_root(&self) -> (usize, Self) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (
            k,
            UniPoly {
                coeffs: self.coeffs[k..].to_vec(),
            },
        )
    }

    /// Newton-form interpolation through distinct nodes.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Self {
        let m = points.len();
        let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..m {
            for i in (level..m).rev() {
                let denom = &points[i].0 - &points[i - level].0;
                assert!(!denom.is_zero(), "interpolation nodes must be distinct");
                table[i] = (&table[i] - &table[i - 1]) / denom;
            }
        }
        let mut result = Self::zero();
        for i in (0..m).rev() {
            result = result
                .mul(&Self::linear_root(points[i].0.clone()))
                .add(&Self::constant(table[i].clone()));
        }
        result
    }

    /// Parses text over the variable `t`, e.g. `t^2 - 5 t + 6`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Self::zero();
        for term in read_terms(text)? {
            let mut k = 0usize;
            for (name, e) in &term.factors {
                if name != "t" {
                    return Err(Error::Parse {
                        pos: term.pos,
                        msg: format!("unknown variable `{name}`, expected `t`"),
                    });
                }
                k += *e as usize;
            }
            out = out.add(&Self::monomial(term.coeff, k));
        }
        Ok(out)
    }
}

pub(crate) fn sign(x: &Rational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let abs = c.abs();
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs} ")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::serde_rational::vec::serialize(&self.coeffs, s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coeffs = crate::rational::serde_rational::vec::deserialize(d)?;
        Ok(UniPoly::new(coeffs))
    }
}
