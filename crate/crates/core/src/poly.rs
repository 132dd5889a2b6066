//! Sparse homogeneous polynomials with exact rational coefficients.
//!
//! A [`HomogPoly`] lives in the space of forms of degree `d` in `n`
//! variables. Terms are keyed by [`Monomial`] exponent vectors and zero
//! coefficients are never stored, so structural equality is mathematical
//! equality. The zero form keeps its `(n, d)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{binomial, pow, Rational};
use crate::text::read_terms;

/// Exponent vector `(λ₁, …, λₙ)` of a monomial `x₁^λ₁ ⋯ xₙ^λₙ`.
///
/// The ordering is graded lexicographic *descending*: `x1^2 < x1 x2 <
/// x2^2` in `Ord` terms, so sorted containers list the largest monomial
/// first and printing follows the conventional order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn zero(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn unit(n: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(point)
            .filter(|(e, _)| **e > 0)
            .fold(Rational::one(), |acc, (e, x)| acc * pow(x, *e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of degree `d` in `n` variables, largest first.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `binomial(n - 1 + d, d)`, the dimension of the space of forms.
pub fn space_dimension(n: usize, d: u32) -> u64 {
    if n == 0 {
        return u64::from(d == 0);
    }
    binomial(n as u64 - 1 + d as u64, d as u64)
}

/// Ordered index of the degree-`d` monomials in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    n: usize,
    d: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, d: u32) -> Self {
        let monomials = monomials_of_degree(n, d);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialBasis {
            n,
            d,
            monomials,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// A form of degree `d` in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogPoly {
    n: usize,
    d: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl HomogPoly {
    pub fn zero(n: usize, d: u32) -> Self {
        HomogPoly {
            n,
            d,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a form from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(n: usize, d: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = HomogPoly::zero(n, d);
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: exps.len(),
                });
            }
            let m = Monomial(exps);
            if m.degree() != d {
                return Err(Error::DegreeMismatch {
                    expected: d,
                    found: m.degree(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// The linear form `Σ aᵢ xᵢ`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = HomogPoly::zero(n, 1);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::unit(n, i, 1), c.clone());
        }
        p
    }

    /// The reference form `J = x₁^d + ⋯ + xₙ^d`.
    pub fn reference_form(n: usize, d: u32) -> Self {
        let mut p = HomogPoly::zero(n, d);
        for i in 0..n {
            p.add_term(Monomial::unit(n, i, d), Rational::one());
        }
        p
    }

    /// Parses text such as `x1^4 - 3/2 x1^2*x2^2 + x2^4` over variables
    /// `x1..xn`. The degree is taken from the terms.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let raw = read_terms(text)?;
        let d = raw[0].degree();
        let mut p = HomogPoly::zero(n, d);
        for t in raw {
            if t.degree() != d {
                return Err(Error::NotHomogeneous {
                    first: d,
                    other: t.degree(),
                });
            }
            let mut exps = vec![0u32; n];
            for (name, e) in &t.factors {
                let index = name
                    .strip_prefix('x')
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse {
                        pos: t.pos,
                        msg: format!("unknown variable `{name}`"),
                    })?;
                if index == 0 || index > n {
                    return Err(Error::VariableOutOfRange { index, n });
                }
                exps[index - 1] += e;
            }
            p.add_term(Monomial(exps), t.coeff);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex order, largest monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> Rational {
        self.coeff(&Monomial(exps.to_vec()))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: point.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .fold(Rational::zero(), |acc, (m, c)| acc + c * m.eval(point)))
    }

    /// `∂F/∂x_i` for a zero-based variable index.
    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        if i >= self.n {
            return Err(Error::VariableOutOfRange {
                index: i + 1,
                n: self.n,
            });
        }
        let mut out = HomogPoly::zero(self.n, self.d.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<HomogPoly> {
        (0..self.n)
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// Sets `x_i = 0` for every variable not in `subset` (zero-based) and
    /// renumbers the kept variables in increasing order.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut keep: Vec<usize> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&i| i >= self.n) {
            return Err(Error::VariableOutOfRange {
                index: bad + 1,
                n: self.n,
            });
        }
        let mut out = HomogPoly::zero(keep.len(), self.d);
        'terms: for (m, c) in &self.terms {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 && keep.binary_search(&i).is_err() {
                    continue 'terms;
                }
            }
            let exps = keep.iter().map(|&i| m.0[i]).collect();
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Substitutes `x_j = Σ_k A[k][j] y_k` for an `m × n` matrix `A` and
    /// returns the resulting form in `m` variables.
    pub fn linear_change(&self, a: &[Vec<Rational>]) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        let m = a.len();
        for row in a {
            if row.len() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    found: row.len(),
                });
            }
        }
        let images: Vec<HomogPoly> = (0..self.n)
            .map(|j| HomogPoly::linear(&a.iter().map(|row| row[j].clone()).collect::<Vec<_>>()))
            .collect();
        let mut powers: HashMap<(usize, u32), HomogPoly> = HashMap::new();
        let mut out = HomogPoly::zero(m, self.d);
        for (mono, c) in &self.terms {
            let mut acc = HomogPoly::constant(m, c.clone());
            for (j, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = powers
                    .entry((j, e))
                    .or_insert_with(|| images[j].pow(e))
                    .clone();
                acc = acc.mul(&power);
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = HomogPoly::zero(n, 0);
        p.add_term(Monomial::zero(n), c);
        p
    }

    fn check_same_space(&self, other: &HomogPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.d != other.d && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeMismatch {
                expected: self.d,
                found: other.d,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &HomogPoly) -> Result<Self> {
        self.check_same_space(other)?;
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        if !self.is_zero() {
            for (m, c) in &other.terms {
                out.add_term(m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HomogPoly) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return HomogPoly::zero(self.n, self.d);
        }
        HomogPoly {
            n: self.n,
            d: self.d,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Product; degrees add. Panics if the variable counts differ.
    pub fn mul(&self, other: &HomogPoly) -> Self {
        assert_eq!(self.n, other.n, "variable counts differ");
        let mut out = HomogPoly::zero(self.n, self.d + other.d);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = HomogPoly::constant(self.n, Rational::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Symmetric matrix `A` with `F = Σ A_ij x_i x_j` (quadratic forms only).
    pub fn quadratic_matrix(&self) -> Result<Vec<Vec<Rational>>> {
        if self.d != 2 {
            return Err(Error::DegreeMismatch {
                expected: 2,
                found: self.d,
            });
        }
        let n = self.n;
        let half = Rational::new(1.into(), 2.into());
        let mut a = vec![vec![Rational::zero(); n]; n];
        for (m, c) in &self.terms {
            let idx: Vec<usize> = m
                .0
                .iter()
                .enumerate()
                .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
                .collect();
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                a[i][i] = c.clone();
            } else {
                a[i][j] = c * &half;
                a[j][i] = c * &half;
            }
        }
        Ok(a)
    }

    /// Inverse of [`HomogPoly::quadratic_matrix`]; `a` must be symmetric.
    pub fn from_quadratic_matrix(a: &[Vec<Rational>]) -> Self {
        let n = a.len();
        let mut p = HomogPoly::zero(n, 2);
        for i in 0..n {
            p.add_term(Monomial::unit(n, i, 2), a[i][i].clone());
            for j in i + 1..n {
                let mut exps = vec![0; n];
                exps[i] = 1;
                exps[j] = 1;
                p.add_term(Monomial(exps), &a[i][j] + &a[j][i]);
            }
        }
        p
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        if e == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, e)?;
        }
    }
    Ok(())
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k == 0, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let is_const = m.degree() == 0;
            if is_const {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs} ")?;
                }
                write_factor(f, m)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    n: usize,
    degree: u32,
    text: String,
}

impl Serialize for HomogPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyWire {
            n: self.n,
            degree: self.d,
            text: self.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomogPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = PolyWire::deserialize(d)?;
        if w.text.trim() == "0" {
            return Ok(HomogPoly::zero(w.n, w.degree));
        }
        let p = HomogPoly::parse(&w.text, w.n).map_err(de::Error::custom)?;
        if p.d != w.degree {
            return Err(de::Error::custom("degree does not match text"));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(text: &str, n: usize) -> HomogPoly {
        HomogPoly::parse(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        let f = p("x1^2 + x2^2", 2);
        assert_eq!(f.degree(), 2);
        assert_eq!(f.coeff_of(&[2, 0]), rat(1));
        assert_eq!(f.coeff_of(&[0, 2]), rat(1));
        assert_eq!(f.num_terms(), 2);

        let g = p("x1^4 - 3 x1^2 x2^2", 2);
        assert_eq!(g.degree(), 4);
        assert_eq!(g.coeff_of(&[2, 2]), rat(-3));
        assert_eq!(g.num_terms(), 2);

        assert!(matches!(
            HomogPoly::parse("x1 + x2^2", 2),
            Err(Error::NotHomogeneous { .. })
        ));
        assert!(matches!(
            HomogPoly::parse("x3^2", 2),
            Err(Error::VariableOutOfRange { index: 3, n: 2 })
        ));
        assert!(matches!(HomogPoly::parse("y1^2", 2), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_variants_and_cancellation() {
        let f = p("1/2*x1*x2 + x1x2 - 3/2 x2 x1", 2);
        assert!(f.is_zero());
        assert_eq!(f.degree(), 2);
        assert_eq!(p("2 x1^2 * 3", 1).coeff_of(&[2]), rat(6));
    }

    #[test]
    fn display_round_trip() {
        for (text, n) in [
            ("x1^4 - 3 x1^2 x2^2 + x2^4", 2),
            ("-1/2 x1 x3 + 7 x2^2", 3),
            ("-x1^2", 1),
        ] {
            let f = p(text, n);
            assert_eq!(f.to_string(), text);
            assert_eq!(p(&f.to_string(), n), f);
        }
        assert_eq!(HomogPoly::zero(2, 4).to_string(), "0");
    }

    #[test]
    fn reference_form_examples() {
        assert_eq!(HomogPoly::reference_form(2, 4), p("x1^4 + x2^4", 2));
        assert_eq!(HomogPoly::reference_form(1, 2), p("x1^2", 1));
        let j = HomogPoly::reference_form(3, 2);
        assert_eq!(j, p("x1^2 + x2^2 + x3^2", 3));
        assert_eq!(j.num_terms(), 3);
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p("x1^2 + x2^2", 2).evaluate(&[rat(3), rat(4)]).unwrap(), rat(25));
        let f = p("x1^4 - 3 x1^2 x2^2 + x2^4", 2);
        assert_eq!(f.evaluate(&[rat(1), rat(1)]).unwrap(), rat(-1));
        assert_eq!(f.evaluate(&[rat(0), rat(0)]).unwrap(), rat(0));
        assert!(matches!(
            f.evaluate(&[rat(1)]),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x1^2 x2^2", 2).partial_derivative(0).unwrap(), p("2 x1 x2^2", 2));
        let z = p("x1^4", 2).partial_derivative(1).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.degree(), 3);
        assert_eq!(p("x1^4 + x2^4", 2).partial_derivative(0).unwrap(), p("4 x1^3", 2));
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(
            p("x1^4 + x2^4 + x3^4", 3).restrict(&[0, 1]).unwrap(),
            p("x1^4 + x2^4", 2)
        );
        let z = p("x1^2 x2^2", 2).restrict(&[0]).unwrap();
        assert!(z.is_zero());
        assert_eq!((z.n(), z.degree()), (1, 4));
        assert_eq!(
            p("x1^2 + 2 x1 x2 + 3 x2^2", 2).restrict(&[1]).unwrap(),
            p("3 x1^2", 1)
        );
        assert_eq!(p("x1^2", 2).restrict(&[]), Err(Error::EmptySubset));
    }

    #[test]
    fn linear_change_examples() {
        let id = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        assert_eq!(p("x1^2", 2).linear_change(&id).unwrap(), p("x1^2", 2));
        let diag = vec![vec![rat(1), rat(1)]];
        assert_eq!(p("x1 x2", 2).linear_change(&diag).unwrap(), p("x1^2", 1));
        let swap = vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]];
        assert_eq!(
            p("x1^2 + x2^2", 2).linear_change(&swap).unwrap(),
            p("x1^2 + x2^2", 2)
        );
        assert!(p("x1^2", 2).linear_change(&[vec![rat(1)]]).is_err());
    }

    #[test]
    fn arithmetic() {
        let f = p("x1 + 2 x2", 2);
        assert_eq!(f.pow(2), p("x1^2 + 4 x1 x2 + 4 x2^2", 2));
        assert_eq!(f.sub(&f).unwrap(), HomogPoly::zero(2, 1));
        assert!(f.add(&p("x1^2", 2)).is_err());
        assert_eq!(f.scale(&ratio(1, 2)), p("1/2 x1 + x2", 2));
    }

    #[test]
    fn basis_order_and_size() {
        let b = MonomialBasis::new(2, 2);
        let exps: Vec<_> = b.monomials().iter().map(|m| m.exps().to_vec()).collect();
        assert_eq!(exps, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        for (n, d) in [(1, 5), (3, 4), (4, 3)] {
            assert_eq!(MonomialBasis::new(n, d).len() as u64, space_dimension(n, d));
        }
        assert_eq!(b.position(&Monomial::new(vec![0, 2])), Some(2));
    }

    #[test]
    fn quadratic_matrix_round_trip() {
        let f = p("x1^2 + 3 x1 x2 - x2^2", 2);
        let a = f.quadratic_matrix().unwrap();
        assert_eq!(a[0][1], ratio(3, 2));
        assert_eq!(HomogPoly::from_quadratic_matrix(&a), f);
    }

    #[test]
    fn serde_round_trip() {
        let f = p("x1^4 - 1/3 x1^2 x2^2", 2);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<HomogPoly>(&json).unwrap(), f);
        let z = HomogPoly::zero(3, 4);
        let json = serde_json::to_string(&z).unwrap();
        assert_eq!(serde_json::from_str::<HomogPoly>(&json).unwrap(), z);
    }
}
