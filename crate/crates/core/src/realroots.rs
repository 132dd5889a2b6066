//! Exact real-root machinery for univariate polynomials.
//!
//! Two independent counting routes are provided. The trace-form route
//! builds the quadratic forms `Q_u(x) = tr(u x²)` on `ℚ[t]/(p)` from the
//! power sums of the roots; the rank of `Q_1` is the number of distinct
//! complex roots, `sg(Q_1)` the number of distinct real roots and
//! `sg(Q_1) + sg(Q_t)` twice the number of positive ones. The Sturm route
//! counts sign variations of the signed remainder sequence.
//!
//! On top of both sit the ray predicates used by the certifier:
//! non-negativity and strict positivity of a polynomial on `t ≥ 0`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::symmetric_inertia;
pub use crate::linalg::SymMatrix;
use crate::rational::{rat, Rational};
use crate::unipoly::{sign, UniPoly};

/// Inertia of a real quadratic form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureReport {
    pub rank: usize,
    pub positive: usize,
    pub negative: usize,
}

impl SignatureReport {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Power sums `s_0, …, s_{count-1}` of the roots of a monic `p`, by Newton's
/// identities.
pub fn power_sums(p: &UniPoly, count: usize) -> Result<Vec<Rational>> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let m = p.degree().expect("monic polynomials are nonzero");
    // a_i is the coefficient of t^(m-i)
    let a: Vec<Rational> = (0..=m).map(|i| p.coeff(m - i)).collect();
    let mut s: Vec<Rational> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            s.push(rat(m as i64));
            continue;
        }
        let mut acc = if k <= m {
            &a[k] * rat(k as i64)
        } else {
            Rational::zero()
        };
        for i in 1..=(k - 1).min(m) {
            acc += &a[i] * &s[k - i];
        }
        s.push(-acc);
    }
    Ok(s)
}

/// Matrix of `Q_u(x) = tr(u x²)` in the basis `1, t, …, t^(m-1)` of
/// `ℚ[t]/(p)`.
pub fn trace_form(p: &UniPoly, u: &UniPoly) -> Result<SymMatrix> {
    let m = match p.degree() {
        Some(m) if p.is_monic() => m,
        _ => return Err(Error::NotMonic),
    };
    // tr(u t^k) = Σ_j u_j s_{j+k} once u is reduced below degree m
    let u = u.rem(p);
    let s = power_sums(p, u.coeffs().len() + 2 * m)?;
    let traces: Vec<Rational> = (0..(2 * m).saturating_sub(1))
        .map(|k| {
            u.coeffs()
                .iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (j, c)| acc + c * &s[j + k])
        })
        .collect();
    let mut q = SymMatrix::zeros(m);
    for i in 0..m {
        for j in i..m {
            q.set(i, j, traces[i + j].clone());
        }
    }
    Ok(q)
}

/// Result of a symmetric congruence reduction `T M Tᵀ = diag(pivots, 0…)`.
#[derive(Debug, Clone)]
pub struct Congruence {
    pub pivots: Vec<Rational>,
    pub transform: Vec<Vec<Rational>>,
}

/// Diagonalizes `M` by symmetric row/column operations. When every
/// remaining diagonal entry is zero but some off-diagonal `(i, j)` is not,
/// row and column `j` are added to `i`, which leaves `2 M_ij` on the
/// diagonal.
pub fn congruence_diagonalize(matrix: &SymMatrix) -> Congruence {
    let m = matrix.dim();
    let mut a: Vec<Vec<Rational>> = matrix.rows().to_vec();
    let mut t: Vec<Vec<Rational>> = SymMatrix::identity(m).into_rows();
    let mut pivots = Vec::new();

    for k in 0..m {
        let pivot = (k..m).find(|&i| !a[i][i].is_zero());
        let pivot = match pivot {
            Some(i) => i,
            None => {
                let pair = (k..m)
                    .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = pair else { break };
                for c in 0..m {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in 0..m {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                for c in 0..m {
                    let v = t[j][c].clone();
                    t[i][c] += v;
                }
                i
            }
        };
        if pivot != k {
            a.swap(pivot, k);
            for row in a.iter_mut() {
                row.swap(pivot, k);
            }
            t.swap(pivot, k);
        }
        let p = a[k][k].clone();
        for r in k + 1..m {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &p;
            for c in k..m {
                let v = &f * &a[k][c];
                a[r][c] -= v;
            }
            for rr in k..m {
                let v = &f * &a[rr][k];
                a[rr][r] -= v;
            }
            for c in 0..m {
                let v = &f * &t[k][c];
                t[r][c] -= v;
            }
        }
        pivots.push(p);
    }
    Congruence {
        pivots,
        transform: t,
    }
}

/// Exact inertia by fraction-free congruence; never uses eigenvalues.
pub fn signature(matrix: &SymMatrix) -> SignatureReport {
    let (positive, negative) = symmetric_inertia(matrix.integer_multiple());
    SignatureReport {
        rank: positive + negative,
        positive,
        negative,
    }
}

/// A vector `x` with `xᵀ M x < 0`, if one exists.
pub fn negative_direction(matrix: &SymMatrix) -> Option<Vec<Rational>> {
    let c = congruence_diagonalize(matrix);
    c.pivots
        .iter()
        .position(|p| p.is_negative())
        .map(|k| c.transform[k].clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCounts {
    pub real_roots: usize,
    pub positive_real_roots: usize,
}

/// Distinct real and positive real roots of a monic `p` with `p(0) ≠ 0`,
/// from `sg(Q_1)` and `sg(Q_1) + sg(Q_t) = 2P`.
pub fn sylvester_root_counts(p: &UniPoly) -> Result<RootCounts> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.coeff(0).is_zero() {
        return Err(Error::RootAtZero);
    }
    if p.degree() == Some(0) {
        return Ok(RootCounts {
            real_roots: 0,
            positive_real_roots: 0,
        });
    }
    let sg1 = signature(&trace_form(p, &UniPoly::one())?).signature();
    let sgt = signature(&trace_form(p, &UniPoly::t())?).signature();
    let twice_positive = sg1 + sgt;
    if sg1 < 0 || twice_positive < 0 || twice_positive % 2 != 0 {
        return Err(Error::Internal(format!(
            "trace-form signatures {sg1}, {sgt} are inconsistent"
        )));
    }
    Ok(RootCounts {
        real_roots: sg1 as usize,
        positive_real_roots: (twice_positive / 2) as usize,
    })
}

/// `p / gcd(p, p')`, monic.
pub fn squarefree_part(p: &UniPoly) -> UniPoly {
    if p.degree().unwrap_or(0) == 0 {
        return p.monic();
    }
    let g = p.gcd(&p.derivative());
    p.exact_div(&g).expect("gcd divides").monic()
}

/// Yun's decomposition: `factors[i]` is the monic product of the distinct
/// irreducible factors of multiplicity exactly `i + 1`.
pub fn squarefree_decomposition(p: &UniPoly) -> Vec<UniPoly> {
    let p = p.monic();
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_div(&a0).expect("gcd divides");
    let mut c = dp.exact_div(&a0).expect("gcd divides");
    let mut d = c.sub(&b.derivative());
    let mut out = Vec::new();
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = c.sub(&b.derivative());
        out.push(a);
    }
    out
}

/// Product of the factors of odd multiplicity; its roots are exactly the
/// points where `p` changes sign.
pub fn odd_multiplicity_part(p: &UniPoly) -> UniPoly {
    squarefree_decomposition(p)
        .iter()
        .enumerate()
        .filter(|(i, _)| i % 2 == 0)
        .fold(UniPoly::one(), |acc, (_, f)| acc.mul(f))
}

/// End point of a counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInfinity,
    Finite(Rational),
    PosInfinity,
}

impl From<Rational> for Bound {
    fn from(r: Rational) -> Self {
        Bound::Finite(r)
    }
}

pub fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.primitive_part()];
    let mut next = p.derivative().primitive_part();
    while !next.is_zero() {
        let r = seq.last().expect("nonempty").neg_pseudo_rem(&next);
        seq.push(next);
        next = r;
    }
    seq
}

fn sign_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(seq: &[UniPoly], at: &Bound) -> usize {
    sign_variations(seq.iter().map(|q| match at {
        Bound::Finite(x) => q.sign_at(x),
        Bound::PosInfinity => sign(&q.leading()),
        Bound::NegInfinity => {
            let s = sign(&q.leading());
            if q.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }))
}

/// Number of distinct real roots in `(a, b]`.
pub fn sturm_count(p: &UniPoly, a: &Bound, b: &Bound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let seq = sturm_sequence(p);
    Ok(variations_at(&seq, a).saturating_sub(variations_at(&seq, b)))
}

fn count_in(seq: &[UniPoly], a: &Rational, b: &Rational) -> usize {
    variations_at(seq, &Bound::Finite(a.clone()))
        .saturating_sub(variations_at(seq, &Bound::Finite(b.clone())))
}

/// `1 + max |c_i / c_m|`; every root lies strictly inside `(-B, B)`.
pub fn cauchy_bound(p: &UniPoly) -> Rational {
    let lead = p.leading().abs();
    let m = p.degree().unwrap_or(0);
    let max = p.coeffs()[..m]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// `p(t) ≥ 0` for every real `t ≥ 0`.
///
/// The root at `0` is divided out first; the polynomial then keeps the sign
/// of its constant term on the whole ray iff its odd-multiplicity part has
/// no positive root.
pub fn is_nonneg_on_ray(p: &UniPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, q) = p.split_zero_root();
    if q.coeff(0).is_negative() {
        return Ok(false);
    }
    let odd = odd_multiplicity_part(&q);
    let crossings = sturm_count(&odd, &Bound::Finite(Rational::zero()), &Bound::PosInfinity)?;
    Ok(crossings == 0)
}

/// `p(t) > 0` for every real `t ≥ 0`: `p(0) > 0` and no positive root,
/// counted through the trace forms of the squarefree part.
pub fn is_positive_on_ray(p: &UniPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.coeff(0).is_positive() {
        return Ok(false);
    }
    let counts = sylvester_root_counts(&squarefree_part(p))?;
    Ok(counts.positive_real_roots == 0)
}

/// A rational `t ≥ 0` with `p(t) < 0`, with an interval `(lo, hi]` that
/// isolates the sign change it was found next to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RayWitness {
    #[serde(with = "crate::rational::serde_rational")]
    pub lo: Rational,
    #[serde(with = "crate::rational::serde_rational")]
    pub hi: Rational,
    #[serde(with = "crate::rational::serde_rational")]
    pub t: Rational,
    #[serde(with = "crate::rational::serde_rational")]
    pub value: Rational,
}

/// Explicit negative point on the ray, or `None` when `p ≥ 0` there.
pub fn ray_violation(p: &UniPoly) -> Result<Option<RayWitness>> {
    if is_nonneg_on_ray(p)? {
        return Ok(None);
    }
    let (_, q) = p.split_zero_root();
    let two = rat(2);
    let witness = |lo: Rational, hi: Rational, t: Rational| {
        let value = p.eval(&t);
        value.is_negative().then_some(RayWitness { lo, hi, t, value })
    };

    if q.coeff(0).is_negative() {
        let mut t = Rational::one();
        for _ in 0..4096 {
            if let Some(w) = witness(Rational::zero(), t.clone(), t.clone()) {
                return Ok(Some(w));
            }
            t /= &two;
        }
        return Err(Error::Internal("no negative point found near 0".into()));
    }

    let odd = odd_multiplicity_part(&q);
    let sqf = squarefree_part(&q);
    let odd_seq = sturm_sequence(&odd);
    let sqf_seq = sturm_sequence(&sqf);
    let (mut a, mut b) = (Rational::zero(), cauchy_bound(&odd));
    // shrink to one root of sqf that is a sign change of p
    while count_in(&sqf_seq, &a, &b) > 1 || count_in(&odd_seq, &a, &b) != 1 {
        let m = (&a + &b) / &two;
        if count_in(&odd_seq, &a, &m) >= 1 {
            b = m;
        } else {
            a = m;
        }
    }
    loop {
        if sqf.eval(&b).is_zero() {
            let mid = (&a + &b) / &two;
            let mut eps = &b - &a;
            while count_in(&sqf_seq, &b, &(&b + &eps)) > 0 {
                eps /= &two;
            }
            let right = &b + &eps;
            let found = witness(a.clone(), b.clone(), mid).or_else(|| witness(a.clone(), b.clone(), right));
            return found
                .map(Some)
                .ok_or_else(|| Error::Internal("sign change without a negative side".into()));
        }
        if !sqf.eval(&a).is_zero() {
            let found = witness(a.clone(), b.clone(), a.clone()).or_else(|| witness(a.clone(), b.clone(), b.clone()));
            return found
                .map(Some)
                .ok_or_else(|| Error::Internal("sign change without a negative side".into()));
        }
        let m = (&a + &b) / &two;
        if count_in(&sqf_seq, &a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
}

/// Location of one real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootLocation {
    Exact(Rational),
    /// The root lies strictly between the two endpoints, neither of which
    /// is a root.
    Between(Rational, Rational),
}

impl RootLocation {
    pub fn lower(&self) -> &Rational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Between(a, _) => a,
        }
    }

    pub fn upper(&self) -> &Rational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Between(_, b) => b,
        }
    }
}

/// Isolates every distinct real root of `p`, in increasing order.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<RootLocation>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let sqf = squarefree_part(p);
    let seq = sturm_sequence(&sqf);
    let two = rat(2);
    let bound = cauchy_bound(&sqf);
    let mut stack = vec![(-bound.clone(), bound)];
    let mut out = Vec::new();
    while let Some((mut a, mut b)) = stack.pop() {
        match count_in(&seq, &a, &b) {
            0 => {}
            1 => loop {
                if sqf.eval(&b).is_zero() {
                    out.push(RootLocation::Exact(b));
                    break;
                }
                if !sqf.eval(&a).is_zero() {
                    out.push(RootLocation::Between(a, b));
                    break;
                }
                let m = (&a + &b) / &two;
                if count_in(&seq, &a, &m) == 1 {
                    b = m;
                } else {
                    a = m;
                }
            },
            _ => {
                let m = (&a + &b) / &two;
                // right half first so the left half is processed first
                stack.push((m.clone(), b));
                stack.push((a, m));
            }
        }
    }
    Ok(out)
}

/// One rational point strictly inside every gap between consecutive real
/// roots, plus one below the smallest and one above the largest.
pub fn sign_sample_points(p: &UniPoly) -> Result<Vec<Rational>> {
    let roots = isolate_real_roots(p)?;
    if roots.is_empty() {
        return Ok(vec![Rational::zero()]);
    }
    let mut pts = vec![roots[0].lower() - Rational::one()];
    for w in roots.windows(2) {
        let (u, l) = (w[0].upper(), w[1].lower());
        pts.push(if u < l { (u + l) / rat(2) } else { u.clone() });
    }
    pts.push(roots.last().expect("nonempty").upper() + Rational::one());
    Ok(pts)
}
