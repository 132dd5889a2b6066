//! Pointwise evaluation of the gradient resultant and the normalized
//! discriminant of a form.
//!
//! Binary forms use the Sylvester matrix of the two partials. Three or more
//! variables use Macaulay's determinant ratio: a square matrix of shifted
//! partials in degree `δ = Σ (dᵢ - 1) + 1`, divided by the minor on the
//! monomials divisible by two or more `xᵢ^dᵢ`. That ratio is only valid
//! where the minor is nonzero; a vanishing minor is reported as
//! [`Error::Degenerate`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::poly::{monomials_of_degree, HomogPoly, Monomial};
use crate::rational::Rational;

pub const MAX_VARIABLES: usize = 4;
pub const MAX_MATRIX_SIZE: usize = 500;

/// `D = n (d - 1)^(n - 1)`.
pub fn discriminant_degree(n: usize, d: u32) -> usize {
    n * (d as usize - 1).pow(n as u32 - 1)
}

/// Row/column layout of the Macaulay matrix for `n` forms of the given
/// degrees. Depends only on the degrees, so it is built once and reused.
#[derive(Debug, Clone)]
pub struct MacaulayStructure {
    degrees: Vec<u32>,
    critical_degree: u32,
    columns: Vec<Monomial>,
    /// For each row: which form it carries and the shift monomial.
    rows: Vec<(usize, Monomial)>,
    /// Indices (rows and columns coincide) of non-reduced monomials.
    minor: Vec<usize>,
    column_index: HashMap<Monomial, usize>,
}

impl MacaulayStructure {
    pub fn new(degrees: &[u32]) -> Self {
        let n = degrees.len();
        assert!(n >= 1 && degrees.iter().all(|&d| d >= 1));
        let critical_degree = degrees.iter().map(|d| d - 1).sum::<u32>() + 1;
        let columns = monomials_of_degree(n, critical_degree);
        let column_index = columns
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut rows = Vec::with_capacity(columns.len());
        let mut minor = Vec::new();
        for (k, m) in columns.iter().enumerate() {
            let divisible: Vec<usize> = (0..n).filter(|&i| m.exps()[i] >= degrees[i]).collect();
            let i = divisible[0];
            let shift = m.checked_div(&Monomial::unit(n, i, degrees[i])).expect("divisible");
            rows.push((i, shift));
            if divisible.len() >= 2 {
                minor.push(k);
            }
        }
        MacaulayStructure {
            degrees: degrees.to_vec(),
            critical_degree,
            columns,
            rows,
            minor,
            column_index,
        }
    }

    pub fn size(&self) -> usize {
        self.columns.len()
    }

    pub fn minor_size(&self) -> usize {
        self.minor.len()
    }

    pub fn critical_degree(&self) -> u32 {
        self.critical_degree
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// The numerator matrix specialized at the given forms.
    pub fn matrix(&self, forms: &[HomogPoly]) -> Vec<Vec<Rational>> {
        let size = self.size();
        let mut mat = vec![vec![Rational::zero(); size]; size];
        for (r, (i, shift)) in self.rows.iter().enumerate() {
            for (m, c) in forms[*i].terms() {
                let col = self.column_index[&shift.mul(m)];
                mat[r][col] = c.clone();
            }
        }
        mat
    }

    /// `det(M) / det(M')`, or [`Error::Degenerate`] when `det(M') = 0`.
    pub fn resultant(&self, forms: &[HomogPoly]) -> Result<Rational> {
        assert_eq!(forms.len(), self.degrees.len());
        for (f, &d) in forms.iter().zip(&self.degrees) {
            assert!(f.is_zero() || f.degree() == d, "form degree mismatch");
        }
        let mat = self.matrix(forms);
        let sub: Vec<Vec<Rational>> = self
            .minor
            .iter()
            .map(|&r| self.minor.iter().map(|&c| mat[r][c].clone()).collect())
            .collect();
        let denom = determinant(&sub);
        if denom.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(determinant(&mat) / denom)
    }
}

/// Resultant of `n` forms in `n` variables by Macaulay's ratio.
pub fn macaulay_resultant(forms: &[HomogPoly]) -> Result<Rational> {
    let n = forms.len();
    if forms.iter().any(|f| f.n() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: forms.iter().map(HomogPoly::n).find(|&m| m != n).unwrap_or(n),
        });
    }
    let degrees: Vec<u32> = forms.iter().map(HomogPoly::degree).collect();
    MacaulayStructure::new(&degrees).resultant(forms)
}

/// Resultant of two binary forms via their Sylvester matrix.
pub fn sylvester_resultant(f: &HomogPoly, g: &HomogPoly) -> Rational {
    assert!(f.n() == 2 && g.n() == 2, "binary forms expected");
    let (m, k) = (f.degree() as usize, g.degree() as usize);
    let size = m + k;
    if size == 0 {
        return Rational::one();
    }
    // coefficient of x1^(deg - j) x2^j
    let coeffs = |p: &HomogPoly, deg: usize| -> Vec<Rational> {
        (0..=deg)
            .map(|j| p.coeff_of(&[(deg - j) as u32, j as u32]))
            .collect()
    };
    let (fc, gc) = (coeffs(f, m), coeffs(g, k));
    let mut mat = vec![vec![Rational::zero(); size]; size];
    for r in 0..k {
        for (j, c) in fc.iter().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in gc.iter().enumerate() {
            mat[k + r][r + j] = c.clone();
        }
    }
    determinant(&mat)
}

fn structure_cache() -> &'static Mutex<HashMap<(usize, u32), Arc<MacaulayStructure>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Arc<MacaulayStructure>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn gradient_structure(n: usize, d: u32) -> Arc<MacaulayStructure> {
    let mut cache = structure_cache().lock().expect("structure cache poisoned");
    cache
        .entry((n, d))
        .or_insert_with(|| Arc::new(MacaulayStructure::new(&vec![d - 1; n])))
        .clone()
}

/// Size of the matrix the gradient resultant needs for `(n, d)`.
pub fn gradient_matrix_size(n: usize, d: u32) -> usize {
    match n {
        0 | 1 => 1,
        2 => 2 * (d as usize - 1),
        _ => {
            let delta = n as u64 * (d as u64 - 2) + 1;
            crate::rational::binomial(delta + n as u64 - 1, n as u64 - 1) as usize
        }
    }
}

/// Rejects `(n, d)` outside the supported range.
pub fn check_capacity(n: usize, d: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    if n > MAX_VARIABLES {
        return Err(Error::Capacity(format!(
            "{n} variables; at most {MAX_VARIABLES} are supported"
        )));
    }
    let size = gradient_matrix_size(n, d);
    if size > MAX_MATRIX_SIZE {
        return Err(Error::Capacity(format!(
            "resultant matrix of size {size} for (n, d) = ({n}, {d}); at most {MAX_MATRIX_SIZE}"
        )));
    }
    Ok(())
}

/// Resultant of the partial derivatives of `f` (unnormalized).
///
/// For one variable the single coefficient of `f` is returned.
pub fn gradient_resultant(f: &HomogPoly) -> Result<Rational> {
    let (n, d) = (f.n(), f.degree());
    check_capacity(n, d)?;
    if n == 1 {
        return Ok(f.coeff_of(&[d]));
    }
    if f.is_zero() {
        return Ok(Rational::zero());
    }
    let grad = f.gradient();
    if n == 2 {
        return Ok(sylvester_resultant(&grad[0], &grad[1]));
    }
    gradient_structure(n, d).resultant(&grad)
}

fn normalizer(n: usize, d: u32) -> Result<Rational> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), Rational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("normalizer cache poisoned").get(&(n, d)) {
        return Ok(v.clone());
    }
    let v = gradient_resultant(&HomogPoly::reference_form(n, d))?;
    if v.is_zero() {
        return Err(Error::Internal(format!(
            "gradient resultant of the reference form vanishes for ({n}, {d})"
        )));
    }
    cache
        .lock()
        .expect("normalizer cache poisoned")
        .insert((n, d), v.clone());
    Ok(v)
}

/// The discriminant normalized so that `Δ(J) = 1`.
pub fn discriminant(f: &HomogPoly) -> Result<Rational> {
    let value = gradient_resultant(f)?;
    Ok(value / normalizer(f.n(), f.degree())?)
}
