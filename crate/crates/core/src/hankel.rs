//! Catalecticant (generalized Hankel) forms.
//!
//! For a form `F` of degree `2d`, write `F = Σ F̂_γ X^γ` in the scaled basis
//! `X^γ = ((2d)!/γ!) x^γ`. The quadratic form `h(F)` on degree-`d` forms has
//! matrix `M[α][β] = F̂_{α+β}` in the scaled basis `X^α = (d!/α!) x^α`, and
//! the multiplication map `μ` sends it back to `F`. Hence `h(F) ⪰ 0`
//! implies `F ≥ 0`, and `h(F) ≻ 0` implies `F > 0`.

use num_traits::Zero;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::SymMatrix;
use crate::poly::{monomials_of_degree, HomogPoly, Monomial, MonomialBasis};
use crate::rational::{factorial, multi_factorial, Rational};
use crate::realroots::{signature, SignatureReport};

/// `h(F)` in the scaled basis, together with the index of its rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HankelForm {
    basis: MonomialBasis,
    matrix: SymMatrix,
}

impl HankelForm {
    /// Wraps an arbitrary symmetric matrix indexed by the degree-`d`
    /// monomials; the Hankel property is not required.
    pub fn new(basis: MonomialBasis, matrix: SymMatrix) -> Result<Self> {
        if matrix.dim() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: matrix.dim(),
            });
        }
        Ok(HankelForm { basis, matrix })
    }

    pub fn basis(&self) -> &MonomialBasis {
        &self.basis
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn entry(&self, alpha: &Monomial, beta: &Monomial) -> Option<&Rational> {
        let i = self.basis.position(alpha)?;
        let j = self.basis.position(beta)?;
        Some(self.matrix.get(i, j))
    }

    /// Every entry depends only on `α + β`.
    pub fn has_hankel_property(&self) -> bool {
        let mut seen: std::collections::HashMap<Monomial, &Rational> = Default::default();
        let b = self.basis.monomials();
        for (i, a) in b.iter().enumerate() {
            for (j, c) in b.iter().enumerate() {
                let v = self.matrix.get(i, j);
                if *seen.entry(a.mul(c)).or_insert(v) != v {
                    return false;
                }
            }
        }
        true
    }

    /// The same quadratic form written against plain monomials `x^α`:
    /// `D M D` with `D = diag(d!/α!)`.
    pub fn plain_monomial_matrix(&self) -> SymMatrix {
        let scale = scale_factors(&self.basis);
        let m = self.basis.len();
        let mut out = SymMatrix::zeros(m);
        for i in 0..m {
            for j in i..m {
                out.set(i, j, self.matrix.get(i, j) * &scale[i] * &scale[j]);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct HankelWire {
    n: usize,
    half_degree: u32,
    basis: Vec<Vec<u32>>,
    matrix: SymMatrix,
}

impl Serialize for HankelForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HankelWire {
            n: self.basis.n(),
            half_degree: self.basis.degree(),
            basis: self.basis.monomials().iter().map(|m| m.exps().to_vec()).collect(),
            matrix: self.matrix.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HankelForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = HankelWire::deserialize(d)?;
        let basis = MonomialBasis::new(w.n, w.half_degree);
        let listed: Vec<Vec<u32>> = basis.monomials().iter().map(|m| m.exps().to_vec()).collect();
        if listed != w.basis {
            return Err(de::Error::custom("basis does not match (n, half_degree)"));
        }
        HankelForm::new(basis, w.matrix).map_err(de::Error::custom)
    }
}

fn scale_factors(basis: &MonomialBasis) -> Vec<Rational> {
    let df = factorial(basis.degree());
    basis
        .monomials()
        .iter()
        .map(|a| Rational::new(df.clone(), multi_factorial(a.exps())))
        .collect()
}

/// `(x^β, e^α) = (α!/d!) δ_{αβ}`.
pub fn pairing(alpha: &Monomial, beta: &Monomial, d: u32) -> Result<Rational> {
    for m in [alpha, beta] {
        if m.degree() != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: m.degree(),
            });
        }
    }
    if alpha.n() != beta.n() {
        return Err(Error::DimensionMismatch {
            expected: alpha.n(),
            found: beta.n(),
        });
    }
    if alpha != beta {
        return Ok(Rational::zero());
    }
    Ok(Rational::new(multi_factorial(alpha.exps()), factorial(d)))
}

/// `c_{αβ} = (d!/α!)(e!/β!)((α+β)!/(d+e)!)` with `d = |α|`, `e = |β|`.
pub fn c_coefficient(alpha: &Monomial, beta: &Monomial) -> Rational {
    let (d, e) = (alpha.degree(), beta.degree());
    let num = factorial(d) * factorial(e) * multi_factorial(alpha.mul(beta).exps());
    let den = multi_factorial(alpha.exps()) * multi_factorial(beta.exps()) * factorial(d + e);
    Rational::new(num, den)
}

/// Coordinate of `F` on `X^γ`: `F̂_γ = (γ!/(2d)!) F_γ`.
fn scaled_coefficient(f: &HomogPoly, gamma: &Monomial) -> Rational {
    let c = f.coeff(gamma);
    if c.is_zero() {
        return c;
    }
    c * Rational::new(multi_factorial(gamma.exps()), factorial(f.degree()))
}

/// The catalecticant matrix of a form of even degree.
pub fn hankel_matrix(f: &HomogPoly) -> Result<HankelForm> {
    if !f.degree().is_multiple_of(2) {
        return Err(Error::OddDegree(f.degree()));
    }
    let basis = MonomialBasis::new(f.n(), f.degree() / 2);
    let m = basis.len();
    let mut matrix = SymMatrix::zeros(m);
    for i in 0..m {
        for j in i..m {
            let gamma = basis.get(i).mul(basis.get(j));
            matrix.set(i, j, scaled_coefficient(f, &gamma));
        }
    }
    Ok(HankelForm { basis, matrix })
}

/// `μ(G) = Σ G[α][β] X^α X^β`, expanded into plain monomials.
pub fn mu(g: &HankelForm) -> HomogPoly {
    let basis = &g.basis;
    let scale = scale_factors(basis);
    let terms = (0..basis.len()).flat_map(|i| {
        let scale = &scale;
        (0..basis.len()).filter_map(move |j| {
            let v = g.matrix.get(i, j);
            if v.is_zero() {
                return None;
            }
            let gamma = basis.get(i).mul(basis.get(j));
            Some((gamma.exps().to_vec(), v * &scale[i] * &scale[j]))
        })
    });
    HomogPoly::from_terms(basis.n(), 2 * basis.degree(), terms.collect::<Vec<_>>())
        .expect("all products have degree 2d")
}

/// Checks `μ(h(x^γ)) = x^γ` for every monomial of degree `two_d`, and the
/// convolution identity `Σ_{α+β=γ} (d!/α!)(e!/β!) = (d+e)!/γ!` for every
/// split `d + e = two_d`. Odd `two_d` only has the convolution part.
pub fn verify_mu_h_identity(n: usize, two_d: u32) -> bool {
    let top = monomials_of_degree(n, two_d);
    if two_d.is_multiple_of(2) {
        for gamma in &top {
            let f = HomogPoly::from_terms(n, two_d, [(gamma.exps().to_vec(), Rational::from_integer(1.into()))])
                .expect("monomial of the right degree");
            let Ok(h) = hankel_matrix(&f) else {
                return false;
            };
            if mu(&h) != f {
                return false;
            }
        }
    }
    for d in 0..=two_d {
        let e = two_d - d;
        let left = monomials_of_degree(n, d);
        for gamma in &top {
            let mut sum = Rational::zero();
            for alpha in &left {
                let Some(beta) = gamma.checked_div(alpha) else {
                    continue;
                };
                sum += Rational::new(factorial(d), multi_factorial(alpha.exps()))
                    * Rational::new(factorial(e), multi_factorial(beta.exps()));
            }
            if sum != Rational::new(factorial(two_d), multi_factorial(gamma.exps())) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
    NegativeSemidefinite,
    NegativeDefinite,
    Zero,
}

impl Definiteness {
    pub fn from_signature(s: &SignatureReport, dim: usize) -> Self {
        match (s.positive, s.negative) {
            (0, 0) => Definiteness::Zero,
            (p, 0) if p == dim => Definiteness::PositiveDefinite,
            (_, 0) => Definiteness::PositiveSemidefinite,
            (0, q) if q == dim => Definiteness::NegativeDefinite,
            (0, _) => Definiteness::NegativeSemidefinite,
            _ => Definiteness::Indefinite,
        }
    }

    pub fn is_psd(self) -> bool {
        matches!(
            self,
            Definiteness::PositiveDefinite | Definiteness::PositiveSemidefinite | Definiteness::Zero
        )
    }
}

pub fn definiteness_of(m: &SymMatrix) -> (Definiteness, SignatureReport) {
    let s = signature(m);
    (Definiteness::from_signature(&s, m.dim()), s)
}

pub fn definiteness(h: &HankelForm) -> Definiteness {
    definiteness_of(&h.matrix).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(text: &str, n: usize) -> HomogPoly {
        HomogPoly::parse(text, n).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn sym(rows: Vec<Vec<Rational>>) -> SymMatrix {
        SymMatrix::new(rows).unwrap()
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&mono(&[2, 0]), &mono(&[2, 0]), 2).unwrap(), rat(1));
        assert_eq!(pairing(&mono(&[1, 1]), &mono(&[1, 1]), 2).unwrap(), ratio(1, 2));
        assert_eq!(pairing(&mono(&[2, 0]), &mono(&[0, 2]), 2).unwrap(), rat(0));
        assert!(pairing(&mono(&[2, 0]), &mono(&[1, 0]), 2).is_err());
    }

    #[test]
    fn c_coefficient_examples() {
        assert_eq!(c_coefficient(&mono(&[1, 0]), &mono(&[1, 0])), rat(1));
        assert_eq!(c_coefficient(&mono(&[1, 0]), &mono(&[0, 1])), ratio(1, 2));
        assert_eq!(c_coefficient(&mono(&[2, 0]), &mono(&[0, 0])), rat(1));
    }

    #[test]
    fn c_coefficient_matches_matrix_of_a_monomial() {
        for gamma in monomials_of_degree(3, 4) {
            let f = HomogPoly::from_terms(3, 4, [(gamma.exps().to_vec(), rat(1))]).unwrap();
            let h = hankel_matrix(&f).unwrap();
            let plain = h.plain_monomial_matrix();
            for (i, a) in h.basis().monomials().iter().enumerate() {
                for (j, b) in h.basis().monomials().iter().enumerate() {
                    let expect = if a.mul(b) == gamma { c_coefficient(a, b) } else { rat(0) };
                    assert_eq!(plain.get(i, j), &expect);
                }
            }
        }
    }

    #[test]
    fn hankel_examples() {
        let h = hankel_matrix(&p("x1^2", 2)).unwrap();
        assert_eq!(h.matrix(), &sym(vec![vec![rat(1), rat(0)], vec![rat(0), rat(0)]]));

        let h = hankel_matrix(&p("x1^2 x2^2", 2)).unwrap();
        let a = ratio(1, 6);
        let z = rat(0);
        assert_eq!(
            h.matrix(),
            &sym(vec![
                vec![z.clone(), z.clone(), a.clone()],
                vec![z.clone(), a.clone(), z.clone()],
                vec![a, z.clone(), z],
            ])
        );
        assert_eq!(definiteness(&h), Definiteness::Indefinite);

        // (2 x1 - x2)^4 gives the outer product of a^α
        let h = hankel_matrix(&HomogPoly::linear(&[rat(2), rat(-1)]).pow(4)).unwrap();
        let a: Vec<Rational> = h.basis().monomials().iter().map(|m| m.eval(&[rat(2), rat(-1)])).collect();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(h.matrix().get(i, j), &(&a[i] * &a[j]));
            }
        }
        assert_eq!(hankel_matrix(&p("x1^3", 1)), Err(Error::OddDegree(3)));
    }

    #[test]
    fn definiteness_examples() {
        assert_eq!(definiteness(&hankel_matrix(&p("x1^2 + x2^2", 2)).unwrap()), Definiteness::PositiveDefinite);
        let sq = HomogPoly::linear(&[rat(1), rat(1)]).pow(4);
        let h = hankel_matrix(&sq).unwrap();
        let (kind, s) = definiteness_of(h.matrix());
        assert_eq!((kind, s.rank), (Definiteness::PositiveSemidefinite, 1));
        assert_eq!(definiteness(&hankel_matrix(&HomogPoly::zero(2, 4)).unwrap()), Definiteness::Zero);
        let minus_j = HomogPoly::reference_form(2, 2).neg();
        assert_eq!(definiteness(&hankel_matrix(&minus_j).unwrap()), Definiteness::NegativeDefinite);
        let j4 = HomogPoly::reference_form(2, 4);
        let (kind, s) = definiteness_of(hankel_matrix(&j4).unwrap().matrix());
        assert_eq!((kind, s.rank), (Definiteness::PositiveSemidefinite, 2));
    }

    #[test]
    fn mu_examples() {
        let basis = MonomialBasis::new(2, 1);
        let g = HankelForm::new(basis.clone(), sym(vec![vec![rat(1), rat(0)], vec![rat(0), rat(0)]])).unwrap();
        assert_eq!(mu(&g), p("x1^2", 2));
        let g = HankelForm::new(basis, sym(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]])).unwrap();
        assert_eq!(mu(&g), p("2 x1 x2", 2));
        let f = p("x1^3 x2", 2);
        assert_eq!(mu(&hankel_matrix(&f).unwrap()), f);
    }

    #[test]
    fn mu_h_identity_small_cases() {
        assert!(verify_mu_h_identity(2, 2));
        assert!(verify_mu_h_identity(2, 4));
        assert!(verify_mu_h_identity(3, 2));
    }

    #[test]
    fn serde_round_trip() {
        let h = hankel_matrix(&p("x1^4 - x1 x2^3 + 3 x2^4", 2)).unwrap();
        let s = serde_json::to_string(&h).unwrap();
        assert_eq!(serde_json::from_str::<HankelForm>(&s).unwrap(), h);
    }
}
