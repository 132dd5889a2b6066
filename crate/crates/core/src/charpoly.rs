//! Characteristic polynomial of a form with respect to the reference form:
//! `χ(F)(t) = Δ(F + t J)`, recovered exactly by evaluation at `D + 1`
//! rational nodes and interpolation.

use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::HomogPoly;
use crate::rational::{rat, Rational};
use crate::resultant::{check_capacity, discriminant, discriminant_degree};
pub use crate::unipoly::UniPoly;

/// Retries allowed per node before a degenerate specialization surfaces.
const MAX_RETRIES: usize = 64;

#[derive(Debug, Clone, Copy, Default)]
pub struct CharPolyOptions {
    /// Evaluate the interpolation nodes on the rayon pool.
    pub parallel: bool,
}

/// Evaluates `Δ(F + t G)`, walking the retry schedule on degenerate nodes.
/// Returns the node actually used together with the value.
fn eval_with_retry(
    f: &HomogPoly,
    g: &HomogPoly,
    schedule: impl Iterator<Item = i64>,
) -> Result<(Rational, Rational)> {
    for t in schedule.take(MAX_RETRIES + 1) {
        let t = rat(t);
        match discriminant(&f.add(&g.scale(&t))?) {
            Ok(v) => return Ok((t, v)),
            Err(Error::Degenerate) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Degenerate)
}

/// `Δ(F + t G)` as a polynomial of degree at most `D` in `t`.
///
/// Nodes are `0..=D`; a degenerate node `k` is replaced by `D + 1 + k`,
/// then by further shifts of `D + 1`. The result is checked against one
/// extra node that was not used for interpolation.
pub fn pencil_poly(f: &HomogPoly, g: &HomogPoly, options: CharPolyOptions) -> Result<UniPoly> {
    let (n, d) = (f.n(), f.degree());
    if g.n() != n || (g.degree() != d && !g.is_zero()) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.n(),
        });
    }
    check_capacity(n, d)?;
    let big_d = discriminant_degree(n, d) as i64;
    let stride = big_d + 1;
    let schedule = |k: i64| std::iter::once(k).chain((0..).map(move |r| stride + k + r * stride));
    let eval = |k: i64| eval_with_retry(f, g, schedule(k));
    let points: Vec<(Rational, Rational)> = if options.parallel {
        (0..=big_d).into_par_iter().map(eval).collect::<Result<_>>()?
    } else {
        (0..=big_d).map(eval).collect::<Result<_>>()?
    };
    let poly = UniPoly::interpolate(&points);

    // a check node beyond everything the retry schedule can reach
    let check_start = stride * (MAX_RETRIES as i64 + 2);
    let (t, v) = eval_with_retry(f, g, check_start..)?;
    if poly.eval(&t) != v {
        return Err(Error::Internal(format!(
            "interpolated pencil disagrees with a direct evaluation at t = {t}"
        )));
    }
    Ok(poly)
}

/// The characteristic polynomial `χ(F)(t) = Δ(F + t J)`.
pub fn char_poly(f: &HomogPoly) -> Result<UniPoly> {
    char_poly_with(f, CharPolyOptions::default())
}

pub fn char_poly_with(f: &HomogPoly, options: CharPolyOptions) -> Result<UniPoly> {
    let (n, d) = (f.n(), f.degree());
    check_capacity(n, d)?;
    let j = HomogPoly::reference_form(n, d);
    let chi = pencil_poly(f, &j, options)?;
    let big_d = discriminant_degree(n, d);
    if chi.degree() != Some(big_d) || !chi.is_monic() {
        return Err(Error::Internal(format!(
            "characteristic polynomial is not monic of degree {big_d}: {chi}"
        )));
    }
    Ok(chi)
}

/// `χ` of the restriction of `F` to the coordinate subspace on `subset`
/// (zero-based variable indices).
pub fn char_poly_on_subspace(f: &HomogPoly, subset: &[usize]) -> Result<UniPoly> {
    char_poly(&f.restrict(subset)?)
}

/// `Δ(F + Σ tᵢ Jᵢ)` at one point; no interpolation.
pub fn generalized_char_eval(f: &HomogPoly, js: &[HomogPoly], ts: &[Rational]) -> Result<Rational> {
    if js.len() != ts.len() {
        return Err(Error::DimensionMismatch {
            expected: js.len(),
            found: ts.len(),
        });
    }
    let mut g = f.clone();
    for (j, t) in js.iter().zip(ts) {
        if j.n() != f.n() || (j.degree() != f.degree() && !j.is_zero()) {
            return Err(Error::DimensionMismatch {
                expected: f.n(),
                found: j.n(),
            });
        }
        g = g.add(&j.scale(t))?;
    }
    // keep the ambient degree when F = 0
    if g.is_zero() {
        g = HomogPoly::zero(f.n(), js.first().map_or(f.degree(), HomogPoly::degree));
    }
    discriminant(&g)
}

/// `Δ(F)`, falling back to the constant term of `χ(F)` when the direct
/// Macaulay ratio is degenerate at `F` itself.
pub fn discriminant_robust(f: &HomogPoly) -> Result<Rational> {
    match discriminant(f) {
        Err(Error::Degenerate) => Ok(char_poly(f)?.coeff(0)),
        other => other,
    }
}

/// `(1 + t)^D`, the characteristic polynomial of `J` itself.
pub fn reference_char_poly(n: usize, d: u32) -> UniPoly {
    UniPoly::new(vec![Rational::one(), Rational::one()]).pow(discriminant_degree(n, d) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> HomogPoly {
        HomogPoly::parse(text, n).unwrap()
    }

    #[test]
    fn reference_form_gives_binomial_power() {
        for (n, d) in [(1, 4), (2, 2), (2, 4), (3, 2)] {
            let j = HomogPoly::reference_form(n, d);
            assert_eq!(char_poly(&j).unwrap(), reference_char_poly(n, d));
        }
    }

    #[test]
    fn diagonal_quadratic() {
        let chi = char_poly(&p("x1^2 + 2 x2^2", 2)).unwrap();
        assert_eq!(chi, UniPoly::from_ints(&[2, 3, 1]));
    }

    #[test]
    fn minus_reference_quartic() {
        let chi = char_poly(&HomogPoly::reference_form(2, 4).neg()).unwrap();
        assert_eq!(chi, UniPoly::from_ints(&[-1, 1]).pow(6));
    }

    #[test]
    fn subspace_examples() {
        let f = p("x1^4 + x2^4", 2);
        assert_eq!(char_poly_on_subspace(&f, &[0]).unwrap(), UniPoly::from_ints(&[1, 1]));
        let j3 = HomogPoly::reference_form(3, 2);
        assert_eq!(
            char_poly_on_subspace(&j3, &[0, 1]).unwrap(),
            UniPoly::from_ints(&[1, 2, 1])
        );
        let g = p("x1^4 - x1 x2^3 + 2 x2^4", 2);
        assert_eq!(char_poly_on_subspace(&g, &[0, 1]).unwrap(), char_poly(&g).unwrap());
    }

    #[test]
    fn generalized_evaluation() {
        let f = p("x1^4 - x1^2 x2^2 + 3 x2^4", 2);
        let j = HomogPoly::reference_form(2, 4);
        let chi = char_poly(&f).unwrap();
        let t0 = rat(3);
        assert_eq!(
            generalized_char_eval(&f, std::slice::from_ref(&j), std::slice::from_ref(&t0)).unwrap(),
            chi.eval(&t0)
        );
        assert_eq!(
            generalized_char_eval(&HomogPoly::zero(2, 4), std::slice::from_ref(&j), &[rat(1)]).unwrap(),
            rat(1)
        );
        assert_eq!(
            generalized_char_eval(&f, &[j.clone(), j.clone()], &[rat(1), rat(1)]).unwrap(),
            chi.eval(&rat(2))
        );
        assert!(generalized_char_eval(&f, &[j], &[]).is_err());
    }

    #[test]
    fn degenerate_nodes_are_retried() {
        // sparse ternary quartic; the direct ratio may be degenerate at t = 0
        let f = p("x1^2 x2^2 + x3^4", 3);
        let chi = char_poly(&f).unwrap();
        assert_eq!(chi.degree(), Some(27));
        assert!(chi.is_monic());
        assert_eq!(discriminant_robust(&f).unwrap(), chi.coeff(0));
    }

    #[test]
    fn parallel_matches_sequential() {
        let f = p("x1^4 + x1 x2^3 - x2^2 x3^2 + 2 x3^4", 3);
        let a = char_poly(&f).unwrap();
        let b = char_poly_with(&f, CharPolyOptions { parallel: true }).unwrap();
        assert_eq!(a, b);
    }
}
