//! Positivity decisions for forms of even degree.
//!
//! Sufficient conditions: `h(F) ≻ 0` or `h(F) ⪰ 0` for the catalecticant
//! form, and `χ(F) > 0` on `t ≥ 0`. Necessary conditions: `Δ_V(F_V) ≥ 0`
//! and `χ_V(F_V) ≥ 0` on `t ≥ 0` for subspaces `V`. Quadratics are decided
//! exactly by principal minors. A deterministic sampler looks for explicit
//! negative points.
//!
//! The two families are one-sided, so [`VerdictKind::Unknown`] is a normal
//! outcome.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charpoly::{char_poly_with, discriminant_robust, generalized_char_eval, CharPolyOptions};
use crate::error::{Error, Result};
use crate::hankel::{definiteness_of, hankel_matrix, Definiteness, HankelForm};
use crate::linalg::SymMatrix;
use crate::poly::{space_dimension, HomogPoly};
use crate::rational::{rat, Rational};
use crate::realroots::{
    negative_direction, ray_violation, sign_sample_points, squarefree_part,
    sylvester_root_counts, RayWitness, RootCounts, SignatureReport,
};
use crate::resultant::{check_capacity, discriminant_degree};
use crate::unipoly::UniPoly;

/// Seed of the counterexample sampler.
pub const SAMPLER_SEED: u64 = 0x5eed_f0c5;

/// Number of random boundary points tried by default.
pub const DEFAULT_BUDGET: usize = 512;

#[derive(Debug, Clone)]
pub struct CertifyOptions {
    pub parallel: bool,
    /// Random points on the boundary of the cube `[-1, 1]^n` tried by the
    /// sampler, on top of its fixed points.
    pub budget: usize,
    /// Extra subspaces for the necessary test, each given by the rows of a
    /// basis in the ambient coordinates.
    pub subspaces: Vec<Vec<Vec<Rational>>>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            parallel: false,
            budget: DEFAULT_BUDGET,
            subspaces: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictKind {
    Positive,
    Nonnegative,
    NotNonnegative,
    Unknown,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Positive => "POSITIVE",
            VerdictKind::Nonnegative => "NONNEGATIVE",
            VerdictKind::NotNonnegative => "NOT_NONNEGATIVE",
            VerdictKind::Unknown => "UNKNOWN",
        }
    }
}

impl std::fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A subspace of the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Subspace {
    /// Spanned by the listed coordinate axes (one-based).
    Coordinates { variables: Vec<usize> },
    /// Spanned by the given rows.
    Span {
        #[serde(with = "crate::rational::serde_rational::matrix")]
        basis: Vec<Vec<Rational>>,
    },
}

impl Subspace {
    pub fn full(n: usize) -> Self {
        Subspace::Coordinates {
            variables: (1..=n).collect(),
        }
    }

    /// `F` written in the coordinates of the subspace.
    pub fn apply(&self, f: &HomogPoly) -> Result<HomogPoly> {
        match self {
            Subspace::Coordinates { variables } => {
                let zero_based: Vec<usize> = variables
                    .iter()
                    .map(|&v| v.checked_sub(1).ok_or(Error::VariableOutOfRange { index: 0, n: f.n() }))
                    .collect::<Result<_>>()?;
                f.restrict(&zero_based)
            }
            Subspace::Span { basis } => f.linear_change(basis),
        }
    }

    pub fn is_full(&self, n: usize) -> bool {
        matches!(self, Subspace::Coordinates { variables } if variables.len() == n)
    }

    pub fn dim(&self) -> usize {
        match self {
            Subspace::Coordinates { variables } => variables.len(),
            Subspace::Span { basis } => basis.len(),
        }
    }
}

impl std::fmt::Display for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Subspace::Coordinates { variables } => {
                let names: Vec<String> = variables.iter().map(|v| format!("x{v}")).collect();
                write!(f, "{{{}}}", names.join(", "))
            }
            Subspace::Span { basis } => {
                let rows: Vec<String> = basis
                    .iter()
                    .map(|r| {
                        let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                        format!("({})", cells.join(", "))
                    })
                    .collect();
                write!(f, "span[{}]", rows.join(", "))
            }
        }
    }
}

/// What a subspace violation consists of.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "test", rename_all = "snake_case")]
pub enum Violation {
    Discriminant {
        #[serde(with = "crate::rational::serde_rational")]
        value: Rational,
    },
    CharPoly { chi: UniPoly, witness: RayWitness },
}

/// One principal minor, rows listed one-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Minor {
    pub rows: Vec<usize>,
    #[serde(with = "crate::rational::serde_rational")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPoint {
    #[serde(with = "crate::rational::serde_rational::vec")]
    pub point: Vec<Rational>,
    #[serde(with = "crate::rational::serde_rational")]
    pub value: Rational,
}

/// A claim that can be re-checked from its payload and the input form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Certificate {
    HankelPd { hankel: HankelForm, signature: SignatureReport },
    HankelPsd { hankel: HankelForm, signature: SignatureReport },
    ChiPositiveRay { chi: UniPoly, root_counts: RootCounts },
    ChiNecessaryViolated { chi: UniPoly, witness: RayWitness },
    DiscNegative {
        #[serde(with = "crate::rational::serde_rational")]
        value: Rational,
    },
    SubspaceViolated { subspace: Subspace, violation: Violation },
    SylvesterMinors {
        matrix: SymMatrix,
        leading: Vec<Minor>,
        negative: Option<Minor>,
        positive: bool,
        nonnegative: bool,
    },
    WitnessPoint(WitnessPoint),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::HankelPd { .. } => "HANKEL_PD",
            Certificate::HankelPsd { .. } => "HANKEL_PSD",
            Certificate::ChiPositiveRay { .. } => "CHI_POSITIVE_RAY",
            Certificate::ChiNecessaryViolated { .. } => "CHI_NECESSARY_VIOLATED",
            Certificate::DiscNegative { .. } => "DISC_NEGATIVE",
            Certificate::SubspaceViolated { .. } => "SUBSPACE_VIOLATED",
            Certificate::SylvesterMinors { .. } => "SYLVESTER_MINORS",
            Certificate::WitnessPoint(_) => "WITNESS_POINT",
        }
    }

    /// Whether the certificate supports `F ≥ 0` (as opposed to refuting it).
    pub fn is_sufficient(&self) -> bool {
        match self {
            Certificate::HankelPd { .. } | Certificate::HankelPsd { .. } | Certificate::ChiPositiveRay { .. } => true,
            Certificate::SylvesterMinors { nonnegative, .. } => *nonnegative,
            _ => false,
        }
    }

    /// Re-checks the claim against `f` from the payload alone.
    pub fn verify(&self, f: &HomogPoly) -> Result<bool> {
        match self {
            Certificate::HankelPd { hankel, signature } | Certificate::HankelPsd { hankel, signature } => {
                let expected = matches!(self, Certificate::HankelPd { .. });
                if hankel_matrix(f)? != *hankel {
                    return Ok(false);
                }
                let (kind, sig) = definiteness_of(hankel.matrix());
                let ok = if expected {
                    kind == Definiteness::PositiveDefinite
                } else {
                    kind == Definiteness::PositiveSemidefinite
                };
                Ok(ok && sig == *signature)
            }
            Certificate::ChiPositiveRay { chi, root_counts } => {
                if !chi_matches(f, chi)? {
                    return Ok(false);
                }
                if !chi.coeff(0).is_positive() {
                    return Ok(false);
                }
                let counts = sylvester_root_counts(&squarefree_part(chi))?;
                Ok(counts == *root_counts && counts.positive_real_roots == 0)
            }
            Certificate::ChiNecessaryViolated { chi, witness } => ray_claim_holds(f, chi, witness),
            Certificate::DiscNegative { value } => Ok(value.is_negative() && discriminant_robust(f)? == *value),
            Certificate::SubspaceViolated { subspace, violation } => {
                let g = subspace.apply(f)?;
                match violation {
                    Violation::Discriminant { value } => {
                        Ok(value.is_negative() && discriminant_robust(&g)? == *value)
                    }
                    Violation::CharPoly { chi, witness } => ray_claim_holds(&g, chi, witness),
                }
            }
            Certificate::SylvesterMinors {
                matrix,
                leading,
                negative,
                positive,
                nonnegative,
            } => {
                let fresh = sylvester_quadratic(f)?;
                Ok(fresh.matrix == *matrix
                    && fresh.leading == *leading
                    && fresh.first_negative == *negative
                    && fresh.positive == *positive
                    && fresh.nonnegative == *nonnegative)
            }
            Certificate::WitnessPoint(w) => Ok(w.value.is_negative() && f.evaluate(&w.point)? == w.value),
        }
    }
}

/// `χ(t) < 0` at the witness, with `χ(t)` recomputed as `Δ(F + t J)`.
fn ray_claim_holds(f: &HomogPoly, chi: &UniPoly, witness: &RayWitness) -> Result<bool> {
    if witness.t.is_negative() || !witness.value.is_negative() || chi.eval(&witness.t) != witness.value {
        return Ok(false);
    }
    let j = HomogPoly::reference_form(f.n(), f.degree());
    match generalized_char_eval(f, &[j], std::slice::from_ref(&witness.t)) {
        Ok(v) => Ok(v == witness.value),
        Err(Error::Degenerate) => chi_matches(f, chi),
        Err(e) => Err(e),
    }
}

/// Compares `chi` with `Δ(F + t J)` at `D + 1` negative nodes, which the
/// interpolation in [`crate::charpoly`] never uses.
fn chi_matches(f: &HomogPoly, chi: &UniPoly) -> Result<bool> {
    let big_d = discriminant_degree(f.n(), f.degree());
    if chi.degree() != Some(big_d) || !chi.is_monic() {
        return Ok(false);
    }
    let j = HomogPoly::reference_form(f.n(), f.degree());
    let mut matched = 0;
    let mut t = 0i64;
    let mut degenerate = 0;
    while matched <= big_d {
        t -= 1;
        match generalized_char_eval(f, std::slice::from_ref(&j), &[rat(t)]) {
            Ok(v) if v == chi.eval(&rat(t)) => matched += 1,
            Ok(_) => return Ok(false),
            Err(Error::Degenerate) if degenerate < 64 * (big_d + 1) => degenerate += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// Exact decision for quadratic forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylvesterReport {
    pub matrix: SymMatrix,
    /// `D_1, …, D_n`.
    pub leading: Vec<Minor>,
    /// The first principal minor found to be negative, if any.
    pub first_negative: Option<Minor>,
    pub positive: bool,
    pub nonnegative: bool,
}

/// `F > 0` iff every leading principal minor is positive; `F ≥ 0` iff every
/// principal minor is non-negative.
pub fn sylvester_quadratic(f: &HomogPoly) -> Result<SylvesterReport> {
    let matrix = SymMatrix::new(f.quadratic_matrix()?)?;
    let n = matrix.dim();
    let leading: Vec<Minor> = (1..=n)
        .map(|r| {
            let idx: Vec<usize> = (0..r).collect();
            Minor {
                rows: (1..=r).collect(),
                value: matrix.principal(&idx).determinant(),
            }
        })
        .collect();
    let positive = leading.iter().all(|m| m.value.is_positive());
    let mut first_negative = None;
    if !positive {
        // subsets by size, then lexicographically
        let mut subsets: Vec<Vec<usize>> = (1u64..(1u64 << n))
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        subsets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        for s in subsets {
            let value = matrix.principal(&s).determinant();
            if value.is_negative() {
                first_negative = Some(Minor {
                    rows: s.iter().map(|i| i + 1).collect(),
                    value,
                });
                break;
            }
        }
    }
    let nonnegative = positive || first_negative.is_none();
    Ok(SylvesterReport {
        matrix,
        leading,
        first_negative,
        positive,
        nonnegative,
    })
}

/// Result of one necessary-condition test on one subspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceCheck {
    pub subspace: Subspace,
    /// `Δ_V(F_V) = χ_V(0)`.
    #[serde(with = "crate::rational::serde_rational::option")]
    pub discriminant: Option<Rational>,
    pub chi: Option<UniPoly>,
    pub chi_nonneg_on_ray: Option<bool>,
    pub ray_witness: Option<RayWitness>,
    /// Why the test could not run.
    pub skipped: Option<String>,
}

impl SubspaceCheck {
    pub fn violated(&self) -> bool {
        self.discriminant.as_ref().is_some_and(Signed::is_negative) || self.chi_nonneg_on_ray == Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessaryReport {
    pub checks: Vec<SubspaceCheck>,
}

impl NecessaryReport {
    pub fn any_violation(&self) -> bool {
        self.checks.iter().any(SubspaceCheck::violated)
    }

    pub fn full_space(&self, n: usize) -> Option<&SubspaceCheck> {
        self.checks.iter().find(|c| c.subspace.is_full(n))
    }

    /// One certificate per failed test.
    pub fn violations(&self, n: usize) -> Vec<Certificate> {
        let mut out = Vec::new();
        for c in self.checks.iter().filter(|c| c.violated()) {
            let full = c.subspace.is_full(n);
            if let Some(v) = c.discriminant.as_ref().filter(|v| v.is_negative()) {
                out.push(if full {
                    Certificate::DiscNegative { value: v.clone() }
                } else {
                    Certificate::SubspaceViolated {
                        subspace: c.subspace.clone(),
                        violation: Violation::Discriminant { value: v.clone() },
                    }
                });
            }
            if let (Some(chi), Some(w)) = (&c.chi, &c.ray_witness) {
                out.push(if full {
                    Certificate::ChiNecessaryViolated {
                        chi: chi.clone(),
                        witness: w.clone(),
                    }
                } else {
                    Certificate::SubspaceViolated {
                        subspace: c.subspace.clone(),
                        violation: Violation::CharPoly {
                            chi: chi.clone(),
                            witness: w.clone(),
                        },
                    }
                });
            }
        }
        out
    }
}

/// Coordinate subspaces to test: every non-empty subset for `n ≤ 4`, else
/// subsets of size at most two plus the whole space.
pub fn coordinate_subspaces(n: usize) -> Vec<Subspace> {
    let mut subsets: Vec<Vec<usize>> = if n <= 4 {
        (1u64..(1u64 << n))
            .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
            .collect()
    } else {
        let mut v: Vec<Vec<usize>> = (1..=n).map(|i| vec![i]).collect();
        for i in 1..=n {
            for j in i + 1..=n {
                v.push(vec![i, j]);
            }
        }
        v.push((1..=n).collect());
        v
    };
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    subsets
        .into_iter()
        .map(|variables| Subspace::Coordinates { variables })
        .collect()
}

fn check_subspace(f: &HomogPoly, subspace: Subspace, chi: Option<UniPoly>, options: CharPolyOptions) -> Result<SubspaceCheck> {
    let g = subspace.apply(f)?;
    let chi = match chi {
        Some(c) => c,
        None => match check_capacity(g.n(), g.degree()).and_then(|_| char_poly_with(&g, options)) {
            Ok(c) => c,
            Err(Error::Capacity(msg)) => {
                return Ok(SubspaceCheck {
                    subspace,
                    discriminant: None,
                    chi: None,
                    chi_nonneg_on_ray: None,
                    ray_witness: None,
                    skipped: Some(msg),
                })
            }
            Err(e) => return Err(e),
        },
    };
    let ray_witness = ray_violation(&chi)?;
    Ok(SubspaceCheck {
        subspace,
        discriminant: Some(chi.coeff(0)),
        chi_nonneg_on_ray: Some(ray_witness.is_none()),
        chi: Some(chi),
        ray_witness,
        skipped: None,
    })
}

fn require_even(f: &HomogPoly) -> Result<()> {
    match f.degree() {
        0 => Err(Error::DegreeTooSmall(0)),
        d if d % 2 == 1 => Err(Error::OddDegree(d)),
        _ => Ok(()),
    }
}

/// Necessary conditions on the whole space and every coordinate subspace.
pub fn necessary_report(f: &HomogPoly) -> Result<NecessaryReport> {
    necessary_report_with(f, &CertifyOptions::default(), None)
}

fn necessary_report_with(f: &HomogPoly, options: &CertifyOptions, full_chi: Option<&UniPoly>) -> Result<NecessaryReport> {
    require_even(f)?;
    let cp = CharPolyOptions {
        parallel: options.parallel,
    };
    let mut subspaces = coordinate_subspaces(f.n());
    for basis in &options.subspaces {
        if basis.is_empty() {
            return Err(Error::EmptySubset);
        }
        subspaces.push(Subspace::Span { basis: basis.clone() });
    }
    let run = |s: Subspace| {
        let known = if s.is_full(f.n()) { full_chi.cloned() } else { None };
        check_subspace(f, s, known, cp)
    };
    let checks = if options.parallel {
        subspaces.into_par_iter().map(run).collect::<Result<Vec<_>>>()?
    } else {
        subspaces.into_iter().map(run).collect::<Result<Vec<_>>>()?
    };
    Ok(NecessaryReport { checks })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HankelSummary {
    pub hankel: HankelForm,
    pub definiteness: Definiteness,
    pub signature: SignatureReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SufficientReport {
    pub hankel: HankelSummary,
    pub chi: Option<UniPoly>,
    pub chi_positive_on_ray: Option<bool>,
    pub chi_root_counts: Option<RootCounts>,
    pub chi_skipped: Option<String>,
}

impl SufficientReport {
    pub fn certificates(&self) -> Vec<Certificate> {
        let mut out = Vec::new();
        let h = &self.hankel;
        match h.definiteness {
            Definiteness::PositiveDefinite => out.push(Certificate::HankelPd {
                hankel: h.hankel.clone(),
                signature: h.signature,
            }),
            Definiteness::PositiveSemidefinite => out.push(Certificate::HankelPsd {
                hankel: h.hankel.clone(),
                signature: h.signature,
            }),
            _ => {}
        }
        if let (Some(true), Some(chi), Some(counts)) = (self.chi_positive_on_ray, &self.chi, self.chi_root_counts) {
            out.push(Certificate::ChiPositiveRay {
                chi: chi.clone(),
                root_counts: counts,
            });
        }
        out
    }
}

pub fn sufficient_report(f: &HomogPoly) -> Result<SufficientReport> {
    sufficient_report_with(f, &CertifyOptions::default())
}

fn hankel_summary(f: &HomogPoly) -> Result<HankelSummary> {
    let hankel = hankel_matrix(f)?;
    let (definiteness, signature) = definiteness_of(hankel.matrix());
    Ok(HankelSummary {
        hankel,
        definiteness,
        signature,
    })
}

type ChiOutcome = (Option<UniPoly>, Option<bool>, Option<RootCounts>, Option<String>);

fn chi_outcome(f: &HomogPoly, options: &CertifyOptions) -> Result<ChiOutcome> {
    let cp = CharPolyOptions {
        parallel: options.parallel,
    };
    let chi = match check_capacity(f.n(), f.degree()).and_then(|_| char_poly_with(f, cp)) {
        Ok(c) => c,
        Err(Error::Capacity(msg)) => return Ok((None, None, None, Some(msg))),
        Err(e) => return Err(e),
    };
    if !chi.coeff(0).is_positive() {
        return Ok((Some(chi), Some(false), None, None));
    }
    let counts = sylvester_root_counts(&squarefree_part(&chi))?;
    Ok((Some(chi), Some(counts.positive_real_roots == 0), Some(counts), None))
}

fn sufficient_report_with(f: &HomogPoly, options: &CertifyOptions) -> Result<SufficientReport> {
    require_even(f)?;
    let (hankel, chi) = if options.parallel {
        rayon::join(|| hankel_summary(f), || chi_outcome(f, options))
    } else {
        (hankel_summary(f), chi_outcome(f, options))
    };
    let hankel = hankel?;
    let (chi, chi_positive_on_ray, chi_root_counts, chi_skipped) = chi?;
    Ok(SufficientReport {
        hankel,
        chi,
        chi_positive_on_ray,
        chi_root_counts,
        chi_skipped,
    })
}

fn negative_at(f: &HomogPoly, point: Vec<Rational>) -> Option<WitnessPoint> {
    let value = f.evaluate(&point).ok()?;
    value.is_negative().then_some(WitnessPoint { point, value })
}

/// Searches for `x` with `F(x) < 0`: signed unit vectors, all `±1` sign
/// patterns, `budget` seeded random points on the boundary of `[-1, 1]^n`,
/// and for binary forms one point in each gap between the real roots of
/// `F(1, t)` and of `F(t, 1)`.
pub fn find_counterexample(f: &HomogPoly, budget: usize) -> Option<WitnessPoint> {
    let n = f.n();
    if n == 0 || f.is_zero() {
        return None;
    }
    for i in 0..n {
        for s in [1, -1] {
            let mut x = vec![Rational::zero(); n];
            x[i] = rat(s);
            if let Some(w) = negative_at(f, x) {
                return Some(w);
            }
        }
    }
    if n <= 12 {
        for mask in 0u32..(1 << n) {
            let x = (0..n).map(|i| rat(if mask >> i & 1 == 1 { -1 } else { 1 })).collect();
            if let Some(w) = negative_at(f, x) {
                return Some(w);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLER_SEED);
    for _ in 0..budget {
        let x = boundary_point(&mut rng, n);
        if let Some(w) = negative_at(f, x) {
            return Some(w);
        }
    }
    if n == 2 {
        let d = f.degree();
        for flip in [false, true] {
            let coeffs = (0..=d)
                .map(|k| {
                    let e = if flip { vec![k, d - k] } else { vec![d - k, k] };
                    f.coeff_of(&e)
                })
                .collect();
            let g = UniPoly::new(coeffs);
            let Ok(points) = sign_sample_points(&g) else { continue };
            for t in points {
                let x = if flip { vec![t, Rational::one()] } else { vec![Rational::one(), t] };
                if let Some(w) = negative_at(f, x) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// A rational point with one coordinate equal to `±1` and the others in
/// `[-1, 1]` with small denominators.
pub fn boundary_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let face = rng.gen_range(0..n);
    (0..n)
        .map(|i| {
            if i == face {
                rat(if rng.gen_bool(0.5) { 1 } else { -1 })
            } else {
                let q: i64 = rng.gen_range(1..=8);
                let p: i64 = rng.gen_range(-q..=q);
                Rational::new(p.into(), q.into())
            }
        })
        .collect()
}

/// Every intermediate result behind a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub n: usize,
    pub d: u32,
    /// Degree of `χ`, `n (d-1)^(n-1)`.
    #[serde(rename = "D")]
    pub big_d: usize,
    /// Dimension of the space of forms of degree `d`.
    #[serde(rename = "N")]
    pub big_n: u64,
    pub sylvester: Option<SylvesterReport>,
    pub sufficient: SufficientReport,
    pub necessary: NecessaryReport,
    pub counterexample: Option<WitnessPoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// The deciding certificate comes first.
    pub certificates: Vec<Certificate>,
    #[serde(with = "crate::rational::serde_rational::option_vec")]
    pub witness: Option<Vec<Rational>>,
    pub report: CertifyReport,
}

/// Wall-clock seconds per stage; kept apart from [`Verdict`] so verdicts
/// stay reproducible.
pub type Timings = BTreeMap<String, f64>;

pub fn certify(f: &HomogPoly, options: &CertifyOptions) -> Result<Verdict> {
    certify_timed(f, options).map(|(v, _)| v)
}

pub fn certify_timed(f: &HomogPoly, options: &CertifyOptions) -> Result<(Verdict, Timings)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    require_even(f)?;
    let (n, d) = (f.n(), f.degree());
    let mut timings = Timings::new();
    let mut clock = |name: &str, start: Instant| {
        timings.insert(name.to_string(), start.elapsed().as_secs_f64());
    };

    let start = Instant::now();
    let sylvester = if d == 2 { Some(sylvester_quadratic(f)?) } else { None };
    clock("sylvester", start);

    let start = Instant::now();
    let sufficient = sufficient_report_with(f, options)?;
    clock("sufficient", start);

    let start = Instant::now();
    let necessary = necessary_report_with(f, options, sufficient.chi.as_ref())?;
    clock("necessary", start);

    let start = Instant::now();
    let counterexample = find_counterexample(f, options.budget);
    clock("counterexample", start);

    let report = CertifyReport {
        n,
        d,
        big_d: discriminant_degree(n, d),
        big_n: space_dimension(n, d),
        sylvester,
        sufficient,
        necessary,
        counterexample,
    };
    Ok((fold(report)?, timings))
}

/// Applies the fixed priority list to a finished report.
fn fold(report: CertifyReport) -> Result<Verdict> {
    let n = report.n;
    let mut sufficient = report.sufficient.certificates();
    let mut refuting = report.necessary.violations(n);
    if let Some(w) = &report.counterexample {
        refuting.push(Certificate::WitnessPoint(w.clone()));
    }
    let mut witness = report.counterexample.as_ref().map(|w| w.point.clone());

    if let Some(s) = &report.sylvester {
        let cert = Certificate::SylvesterMinors {
            matrix: s.matrix.clone(),
            leading: s.leading.clone(),
            negative: s.first_negative.clone(),
            positive: s.positive,
            nonnegative: s.nonnegative,
        };
        if s.nonnegative {
            sufficient.insert(0, cert);
        } else {
            let direction = negative_direction(&s.matrix)
                .ok_or_else(|| Error::Internal("negative minor without a negative direction".into()))?;
            let value = s.matrix.quadratic_value(&direction);
            refuting.insert(0, cert);
            if witness.is_none() {
                refuting.push(Certificate::WitnessPoint(WitnessPoint {
                    point: direction.clone(),
                    value,
                }));
                witness = Some(direction);
            }
        }
    }

    if !sufficient.is_empty() && !refuting.is_empty() {
        let a: Vec<&str> = sufficient.iter().map(Certificate::kind).collect();
        let b: Vec<&str> = refuting.iter().map(Certificate::kind).collect();
        return Err(Error::Internal(format!(
            "sufficient certificates {a:?} contradict violations {b:?}"
        )));
    }

    let position = |kind: &str, list: &[Certificate]| list.iter().position(|c| c.kind() == kind);
    let promote = |mut list: Vec<Certificate>, idx: usize| {
        let c = list.remove(idx);
        list.insert(0, c);
        list
    };

    let kind = if let Some(s) = &report.sylvester {
        if s.positive {
            VerdictKind::Positive
        } else if s.nonnegative {
            VerdictKind::Nonnegative
        } else {
            VerdictKind::NotNonnegative
        }
    } else if let Some(i) = position("HANKEL_PD", &sufficient) {
        sufficient = promote(sufficient, i);
        VerdictKind::Positive
    } else if let Some(i) = position("CHI_POSITIVE_RAY", &sufficient) {
        sufficient = promote(sufficient, i);
        VerdictKind::Positive
    } else if position("HANKEL_PSD", &sufficient).is_some() {
        VerdictKind::Nonnegative
    } else if !refuting.is_empty() {
        VerdictKind::NotNonnegative
    } else {
        VerdictKind::Unknown
    };

    let certificates = match kind {
        VerdictKind::Positive | VerdictKind::Nonnegative => sufficient,
        VerdictKind::NotNonnegative => refuting,
        VerdictKind::Unknown => Vec::new(),
    };
    Ok(Verdict {
        kind,
        certificates,
        witness: if kind == VerdictKind::NotNonnegative { witness } else { None },
        report,
    })
}
