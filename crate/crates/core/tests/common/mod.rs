//! Independent oracles and generators shared by the integration tests.
//! Nothing here calls into the crate's own elimination code.

#![allow(dead_code)]

use formcert::poly::monomials_of_degree;
use formcert::{HomogPoly, Rational, UniPoly};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn minor<T: Clone>(m: &[Vec<T>], skip_col: usize) -> Vec<Vec<T>> {
    m[1..]
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    if m.is_empty() {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = a * cofactor_det(&minor(m, j));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Laplace expansion with polynomial entries.
pub fn cofactor_det_poly(m: &[Vec<UniPoly>]) -> UniPoly {
    if m.is_empty() {
        return UniPoly::one();
    }
    let mut acc = UniPoly::zero();
    for (j, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = a.mul(&cofactor_det_poly(&minor(m, j)));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `det(A + t I)` by cofactor expansion.
pub fn shifted_det(a: &[Vec<Rational>]) -> UniPoly {
    let n = a.len();
    let m: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = UniPoly::constant(a[i][j].clone());
                    if i == j {
                        c.add(&UniPoly::t())
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    cofactor_det_poly(&m)
}

/// Sylvester resultant of two univariate polynomials, via cofactors.
pub fn univariate_resultant(f: &UniPoly, g: &UniPoly) -> Rational {
    let (m, k) = (f.degree().unwrap(), g.degree().unwrap());
    let size = m + k;
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for i in 0..k {
        for j in 0..=m {
            rows[i][i + j] = f.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=k {
            rows[k + i][i + j] = g.coeff(k - j);
        }
    }
    cofactor_det(&rows)
}

/// `Res(f, f') / lc(f)`, a polynomial in the coefficients of `f`.
pub fn reduced_discriminant(f: &UniPoly) -> Rational {
    univariate_resultant(f, &f.derivative()) / f.leading()
}

/// `F(t, 1)` for a binary form.
pub fn dehomogenize(f: &HomogPoly) -> UniPoly {
    let d = f.degree();
    UniPoly::new((0..=d).map(|k| f.coeff_of(&[k, d - k])).collect())
}

pub fn small_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    let q = rng.gen_range(1..=max_den);
    let p = rng.gen_range(-max_num..=max_num);
    ratio(p, q)
}

/// Dense form with integer coefficients in `[-c, c]`.
pub fn random_form(rng: &mut ChaCha8Rng, n: usize, d: u32, c: i64) -> HomogPoly {
    let terms: Vec<(Vec<u32>, Rational)> = monomials_of_degree(n, d)
        .into_iter()
        .map(|m| (m.exps().to_vec(), rat(rng.gen_range(-c..=c))))
        .collect();
    HomogPoly::from_terms(n, d, terms).unwrap()
}

/// `Σ c_i (a_i · x)^{2d}` with `c_i` in `1..=3` and a nonzero integer `a_i`.
pub fn random_power_sum(rng: &mut ChaCha8Rng, n: usize, two_d: u32, terms: usize) -> HomogPoly {
    let mut f = HomogPoly::zero(n, two_d);
    for _ in 0..terms {
        let a: Vec<Rational> = loop {
            let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            if a.iter().any(|&x| x != 0) {
                break a.into_iter().map(rat).collect();
            }
        };
        let c = rat(rng.gen_range(1..=3));
        f = f.add(&HomogPoly::linear(&a).pow(two_d).scale(&c)).unwrap();
    }
    f
}

/// Random rational point with entries in `[-3, 3]`.
pub fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng, 12, 4)).collect()
}

/// Random symmetric rational matrix.
pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rational>> {
    let mut a = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let v = small_rational(rng, 5, 4);
            a[i][j] = v.clone();
            a[j][i] = v;
        }
    }
    a
}

/// A monic polynomial with known roots: returns the polynomial, the number
/// of distinct real roots, of positive ones, and of distinct complex roots.
pub fn constructed_polynomial(rng: &mut ChaCha8Rng, max_degree: usize) -> (UniPoly, usize, usize, usize) {
    let mut p = UniPoly::one();
    let mut roots: Vec<Rational> = Vec::new();
    let mut quadratics: Vec<(Rational, Rational)> = Vec::new();
    let target = rng.gen_range(1..=max_degree);
    while p.degree().unwrap() < target {
        let room = target - p.degree().unwrap();
        if room >= 2 && rng.gen_bool(0.3) {
            // t^2 + b t + c with b^2 < 4c
            let b = small_rational(rng, 4, 2);
            let c = &b * &b / rat(4) + ratio(rng.gen_range(1..=6), rng.gen_range(1..=3));
            if !quadratics.contains(&(b.clone(), c.clone())) {
                quadratics.push((b.clone(), c.clone()));
            }
            p = p.mul(&UniPoly::new(vec![c, b, rat(1)]));
        } else {
            let r = loop {
                let r = small_rational(rng, 6, 3);
                if !r.is_zero() {
                    break r;
                }
            };
            // repeat an existing root now and then
            let r = if !roots.is_empty() && rng.gen_bool(0.25) {
                roots[rng.gen_range(0..roots.len())].clone()
            } else {
                r
            };
            if !roots.contains(&r) {
                roots.push(r.clone());
            }
            p = p.mul(&UniPoly::linear_root(r));
        }
    }
    let positive = roots.iter().filter(|r| **r > Rational::zero()).count();
    (p, roots.len(), positive, roots.len() + 2 * quadratics.len())
}
