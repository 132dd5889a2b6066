//! Exact dense linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Determinant of a square rational matrix.
///
/// Each row is scaled by the lcm of its denominators, the integer matrix is
/// reduced by fraction-free (Bareiss) elimination, and the scales are
/// divided back out.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut ints = Vec::with_capacity(n);
    for row in rows {
        assert_eq!(row.len(), n, "matrix is not square");
        let l = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        ints.push(
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect::<Vec<_>>(),
        );
        scale *= l;
    }
    Rational::new(bareiss_determinant(ints), scale)
}

/// Fraction-free Gaussian elimination; every intermediate stays integral.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut v = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v -= &lead * &pivot_row[j];
                }
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Numbers of positive and negative pivots of a symmetric integer matrix.
///
/// Symmetric fraction-free elimination: after step `k` the pivot equals the
/// leading `(k+1)`-minor of the permuted matrix, so the sign of each LDLᵀ
/// pivot is the sign of the ratio of consecutive pivots. A block with zero
/// diagonal is first made regular by adding row and column `j` to `i`.
pub fn symmetric_inertia(mut a: Vec<Vec<BigInt>>) -> (usize, usize) {
    let n = a.len();
    let (mut positive, mut negative) = (0, 0);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = match (k..n).find(|&i| !a[i][i].is_zero()) {
            Some(i) => i,
            None => {
                let pair = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = pair else { break };
                for c in k..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in k..n {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                i
            }
        };
        if pivot != k {
            a.swap(pivot, k);
            for row in a.iter_mut() {
                row.swap(pivot, k);
            }
        }
        let p = a[k][k].clone();
        if p.is_positive() == prev.is_positive() {
            positive += 1;
        } else {
            negative += 1;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for c in k + 1..n {
                let mut v = &p * &row[c];
                if !lead.is_zero() && !pivot_row[c].is_zero() {
                    v -= &lead * &pivot_row[c];
                }
                row[c] = if prev.is_one() { v } else { v / &prev };
            }
        }
        for row in a.iter_mut().skip(k + 1) {
            row[k] = BigInt::zero();
        }
        prev = p;
    }
    (positive, negative)
}

/// An exactly symmetric rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SymWire", into = "SymWire")]
pub struct SymMatrix {
    rows: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct SymWire(#[serde(with = "crate::rational::serde_rational::matrix")] Vec<Vec<Rational>>);

impl TryFrom<SymWire> for SymMatrix {
    type Error = Error;
    fn try_from(w: SymWire) -> Result<Self> {
        SymMatrix::new(w.0)
    }
}

impl From<SymMatrix> for SymWire {
    fn from(m: SymMatrix) -> Self {
        SymWire(m.rows)
    }
}

impl SymMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: row.len(),
                });
            }
            for j in 0..i {
                if row[j] != rows[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymMatrix { rows })
    }

    pub fn zeros(m: usize) -> Self {
        SymMatrix {
            rows: vec![vec![Rational::zero(); m]; m],
        }
    }

    pub fn identity(m: usize) -> Self {
        let mut z = Self::zeros(m);
        for i in 0..m {
            z.rows[i][i] = Rational::one();
        }
        z
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.rows[i][j] = v.clone();
        self.rows[j][i] = v;
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Rational>> {
        self.rows
    }

    pub fn quadratic_value(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, row) in self.rows.iter().enumerate() {
            if x[i].is_zero() {
                continue;
            }
            let dot = row
                .iter()
                .zip(x)
                .fold(Rational::zero(), |a, (m, xj)| a + m * xj);
            acc += &x[i] * dot;
        }
        acc
    }

    /// Principal submatrix on the given indices.
    pub fn principal(&self, idx: &[usize]) -> SymMatrix {
        SymMatrix {
            rows: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.rows[i][j].clone()).collect())
                .collect(),
        }
    }

    /// Positive integer multiple of the matrix.
    pub fn integer_multiple(&self) -> Vec<Vec<BigInt>> {
        let l = self
            .rows
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        self.rows
            .iter()
            .map(|row| row.iter().map(|x| x.numer() * (&l / x.denom())).collect())
            .collect()
    }

    pub fn determinant(&self) -> Rational {
        determinant(&self.rows)
    }

    /// `P M Pᵀ` for an arbitrary square transform `P` given by rows.
    pub fn congruent(&self, p: &[Vec<Rational>]) -> SymMatrix {
        let m = self.dim();
        let tmp: Vec<Vec<Rational>> = p
            .iter()
            .map(|prow| {
                (0..m)
                    .map(|j| {
                        prow.iter()
                            .enumerate()
                            .fold(Rational::zero(), |a, (k, pk)| a + pk * &self.rows[k][j])
                    })
                    .collect()
            })
            .collect();
        let rows = tmp
            .iter()
            .map(|trow| {
                p.iter()
                    .map(|prow| {
                        trow.iter()
                            .zip(prow)
                            .fold(Rational::zero(), |a, (t, pj)| a + t * pj)
                    })
                    .collect()
            })
            .collect();
        SymMatrix { rows }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(|x| x.is_zero())
    }

    pub fn has_negative_diagonal(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| self.rows[i][i].is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&m(&[&[2, 1], &[1, 3]])), rat(5));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), rat(-1));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), rat(0));
        assert_eq!(determinant(&m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])), rat(-1));
        assert_eq!(determinant(&[]), rat(1));
        let half = vec![vec![ratio(1, 2), rat(0)], vec![rat(0), ratio(2, 3)]];
        assert_eq!(determinant(&half), ratio(1, 3));
    }

    #[test]
    fn pivoting_needs_row_swaps() {
        let a = m(&[&[0, 2, 1, 4], &[0, 0, 3, 1], &[5, 1, 0, 0], &[1, 0, 0, 2]]);
        // value from an independent symbolic determinant
        assert_eq!(determinant(&a), rat(71));
    }

    #[test]
    fn symmetric_checks() {
        assert_eq!(SymMatrix::new(m(&[&[1, 2], &[3, 1]])), Err(Error::NotSymmetric));
        let s = SymMatrix::new(m(&[&[1, 2], &[2, 1]])).unwrap();
        assert_eq!(s.quadratic_value(&[rat(1), rat(-1)]), rat(-2));
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"[["1","2"],["2","1"]]"#);
        assert_eq!(serde_json::from_str::<SymMatrix>(&json).unwrap(), s);
        let c = s.congruent(&m(&[&[1, 0], &[-2, 1]]));
        assert_eq!(c.rows(), &m(&[&[1, 0], &[0, -3]])[..]);
    }
}
