use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Univariate polynomial with exact coefficients, lowest degree first.
///
/// The indeterminate is always an integer twist or degree variable, so
/// [`Poly::eval_int`] is the common entry point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `d`.
    pub fn identity() -> Self {
        Self::from_coeffs(vec![S::zero(), S::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `prod (d - r)` over the given integer roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(Self::constant(S::one()), |acc, &r| {
            acc * Self::from_coeffs(vec![S::from_int(-r), S::one()])
        })
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    /// Coefficient of `d^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_int(&self, x: i64) -> S {
        self.eval(&S::from_int(x))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `p(-d)`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// The unique polynomial of degree `< points.len()` through the given
    /// integer abscissae (Lagrange form, expanded exactly).
    pub fn interpolate(points: &[(i64, S)]) -> Self {
        let mut result = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Self::constant(S::one());
            let mut denom = S::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis * Self::from_coeffs(vec![S::from_int(-xj), S::one()]);
                denom = denom * S::from_int(xi - xj);
            }
            result = result + basis.scale(&(yi.clone() / denom));
        }
        result
    }

    /// `p(d + s)`.
    pub fn taylor_shift(&self, s: i64) -> Self {
        let lin = Self::from_coeffs(vec![S::from_int(s), S::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc * lin.clone() + Self::constant(c.clone()))
    }

    /// Newton forward differences `Δ^k p(0)` for `k = 0..=deg p`, so that
    /// `p(d) = Σ_k Δ^k p(0) · binom(d, k)`.
    pub fn forward_differences(&self) -> Vec<S> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let mut row: Vec<S> = (0..=deg as i64).map(|d| self.eval_int(d)).collect();
        let mut out = Vec::with_capacity(deg + 1);
        for _ in 0..=deg {
            out.push(row[0].clone());
            row = row.windows(2).map(|w| w[1].clone() - w[0].clone()).collect();
        }
        out
    }
}

/// `binom(d + shift, k)` as a polynomial in `d`.
pub fn binomial_poly<S: Scalar>(shift: i64, k: u32) -> Poly<S> {
    let mut p = Poly::constant(S::one());
    let mut fact = BigInt::one();
    for i in 0..k as i64 {
        p = p * Poly::from_coeffs(vec![S::from_int(shift - i), S::one()]);
        fact *= i + 1;
    }
    p.scale(&(S::one() / S::from_bigint(&fact)))
}

/// The gcd of `{p(d) : d ∈ ℤ}`.
///
/// Computed from the binomial-basis (Mahler) coefficients `Δ^k p(0)`: the
/// binomial polynomials are a ℤ-basis of integer-valued polynomials, so the
/// gcd of these coefficients is the gcd over all integers.
pub fn integer_value_gcd<S: Scalar>(p: &Poly<S>) -> Result<BigInt> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut g = BigInt::zero();
    for delta in p.forward_differences() {
        if !delta.is_integer() {
            return Err(Error::NotIntegerValued);
        }
        g = g.gcd(&delta.numer_big());
    }
    Ok(g)
}

/// Cauchy bound `B = 1 + ceil(max |a_i / a_lead|)`: every real root has
/// absolute value `< B`, so for integers `|d| > B` the sign of `p(d)` is the
/// sign of the leading term.
pub fn sign_stable_bound<S: Scalar>(p: &Poly<S>) -> Result<BigInt> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?;
    let deg = p.degree().unwrap_or(0);
    let max = p.coeffs()[..deg]
        .iter()
        .map(|a| (a.clone() / lead.clone()).abs())
        .max()
        .unwrap_or_else(S::zero);
    Ok(BigInt::one() + max.ceil_big())
}

/// Fujiwara bound: every complex root has absolute value at most
/// `2 · max_k |a_{deg-k} / a_lead|^{1/k}`.
///
/// Usually far tighter than [`sign_stable_bound`] for polynomials with well
/// separated integer roots, which keeps finite sign certification cheap.
pub fn root_bound<S: Scalar>(p: &Poly<S>) -> Result<BigInt> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?.clone();
    let deg = p.degree().unwrap_or(0);
    let mut best = BigInt::zero();
    for k in 1..=deg {
        let t = (p.coeff(deg - k) / lead.clone()).abs();
        if t.is_zero() {
            continue;
        }
        best = best.max(ceil_root(&t, k as u32));
    }
    Ok(best * 2)
}

/// Smallest nonnegative integer `r` with `r^k >= t`.
fn ceil_root<S: Scalar>(t: &S, k: u32) -> BigInt {
    let guess = t.to_f64().powf(1.0 / k as f64);
    let mut r = if guess.is_finite() {
        BigInt::from(guess.floor().max(0.0) as u64)
    } else {
        t.ceil_big()
    };
    let pow = |r: &BigInt| S::from_bigint(&num_traits::pow::pow(r.clone(), k as usize));
    while r.is_positive() && pow(&(r.clone() - 1)) >= *t {
        r -= 1;
    }
    while pow(&r) < *t {
        r += 1;
    }
    r
}

/// The first integer `d >= start` with `p(d) < 0`, or `None` if `p` is
/// nonnegative on all integers `d >= start`.
///
/// Exact: values are checked up to a root bound, beyond which the sign is
/// that of the leading coefficient.
pub fn first_negative_from<S: Scalar>(p: &Poly<S>, start: i64) -> Result<Option<i64>> {
    if p.is_zero() {
        return Ok(None);
    }
    let shifted = p.taylor_shift(start);
    if shifted.coeffs().iter().all(|c| !c.is_negative()) {
        return Ok(None);
    }
    let bound: i64 = root_bound(p)?
        .try_into()
        .map_err(|_| Error::WindowTooNarrow("polynomial root bound exceeds i64".into()))?;
    let mut d = start;
    while d <= bound {
        if p.eval_int(d).is_negative() {
            return Ok(Some(d));
        }
        d += 1;
    }
    if p.leading().unwrap().is_negative() {
        return Ok(Some(d));
    }
    Ok(None)
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Poly<S>;

    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Poly<S>;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;

    fn neg(self) -> Self {
        Poly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> Mul for Poly<S> {
    type Output = Poly<S>;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<S: fmt::Display> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "d")?,
                (1, false) => write!(f, "{a}*d")?,
                (_, true) => write!(f, "d^{k}")?,
                (_, false) => write!(f, "{a}*d^{k}")?,
            }
        }
        Ok(())
    }
}
