//! Supernatural cohomology tables, their admissible ranks, and the
//! truncated tables of linear monads.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{factorial, integer_value_gcd, Poly, Scalar};
use crate::tables::{CohomologyTable, RootSequence};

/// `(rank / m!) · Π (d - z_i)`, the Hilbert polynomial of a supernatural table.
pub fn supernatural_poly<S: Scalar>(z: &RootSequence, rank: &S) -> Poly<S> {
    let m = z.len();
    Poly::from_roots(z.entries()).scale(&(rank.clone() / S::from_bigint(&factorial(m))))
}

/// The row holding the unique nonzero value at twist `d`, if any.
fn supernatural_row(z: &RootSequence, d: i64) -> Option<usize> {
    if z.entries().contains(&d) {
        return None;
    }
    Some(z.entries().iter().filter(|&&r| r > d).count())
}

/// `γ(j, d) = (rank/m!) Π |d - z_i|` when `z_j > d > z_{j+1}`, else zero.
///
/// The window must contain `[z_m - 1, z_1 + 1]`.
pub fn supernatural_table<S: Scalar>(z: &RootSequence, rank: &S, window: (i64, i64)) -> Result<CohomologyTable<S>> {
    if !rank.is_positive() {
        return Err(Error::InvalidArgument(format!("rank {rank} is not positive")));
    }
    let need = (z.last() - 1, z.first() + 1);
    if window.0 > need.0 || window.1 < need.1 {
        return Err(Error::WindowTooNarrow(format!(
            "window [{}, {}] must contain [{}, {}]",
            window.0, window.1, need.0, need.1
        )));
    }
    let m = z.len();
    let p = supernatural_poly(z, rank);
    let mut t = CohomologyTable::new(m, window, true)?;
    for d in window.0..=window.1 {
        if let Some(row) = supernatural_row(z, d) {
            t.set(row, d, p.eval_int(d).abs())?;
        }
    }
    let low = if m % 2 == 0 { p.clone() } else { -p.clone() };
    t.set_tails(p, low);
    Ok(t)
}

/// `c(z)`: the gcd of all values of `Π (t - z_i)` at integers.
pub fn value_gcd(z: &RootSequence) -> BigInt {
    integer_value_gcd(&Poly::<num_rational::BigRational>::from_roots(z.entries())).expect("nonzero polynomial")
}

/// `m! / c(z)`: every supernatural rank with roots `z` is a multiple of this.
pub fn rank_gcd_bound(z: &RootSequence) -> BigInt {
    factorial(z.len()) / value_gcd(z)
}

/// `Π_p p^{e_p}` with `e_p` the least number of times any residue class mod `p`
/// occurs among the roots.
///
/// This residue-count variant can be strictly smaller than [`value_gcd`]
/// (24 versus 48 for `(4,3,0,-6,-7,-9)`), so it is reported for comparison only.
pub fn residue_count_factor(z: &RootSequence) -> BigInt {
    let m = z.len() as i64;
    let mut c = BigInt::one();
    for p in (2..=m).filter(|&p| (2..p).all(|q| p % q != 0)) {
        let mut counts = vec![0u32; p as usize];
        for &r in z.entries() {
            counts[r.rem_euclid(p) as usize] += 1;
        }
        let e = *counts.iter().min().unwrap();
        c *= num_traits::pow(BigInt::from(p), e as usize);
    }
    c
}

/// `m! / (m_1! ··· m_k!)` over the maximal runs of consecutive roots.
pub fn multinomial_rank(z: &RootSequence) -> BigInt {
    let e = z.entries();
    let mut den = BigInt::one();
    let mut run = 1;
    for k in 1..=e.len() {
        if k < e.len() && e[k - 1] - e[k] == 1 {
            run += 1;
        } else {
            den *= factorial(run);
            run = 1;
        }
    }
    factorial(e.len()) / den
}

/// `λ_i = z_1 - z_{m+1-i} - m + i` for `i = 1..m`.
pub fn schur_partition(z: &RootSequence) -> Vec<i64> {
    let m = z.len();
    (1..=m).map(|i| z.z(1) - z.z(m + 1 - i) - m as i64 + i as i64).collect()
}

/// Weyl dimension `Π_{i<j} (λ_i - λ_j + j - i)/(j - i)` of the Schur functor
/// applied to a rank-`m` bundle, with `λ` from [`schur_partition`].
pub fn schur_rank(z: &RootSequence) -> BigInt {
    let lambda = schur_partition(z);
    let m = lambda.len();
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for i in 0..m {
        for j in i + 1..m {
            num *= lambda[i] - lambda[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    num / den
}

/// The cohomology table of the linear monad built from the supernatural
/// table, whose dual is `a`-regular: row `m` is cut off below twist `-a - m`.
///
/// The window is extended if needed to contain both `[z_m - 1, z_1 + 1]` and
/// the cutoff twist.
pub fn monad_table<S: Scalar>(z: &RootSequence, rank: &S, a: i64, window: (i64, i64)) -> Result<CohomologyTable<S>> {
    let m = z.len() as i64;
    let min = -z.last() - m;
    if a < min {
        return Err(Error::RegularityViolation { a, min });
    }
    let cut = -a - m;
    let lo = window.0.min(z.last() - 1).min(cut);
    let hi = window.1.max(z.first() + 1);
    let mut t = supernatural_table(z, rank, (lo, hi))?;
    for d in lo..cut {
        t.set(z.len(), d, S::zero())?;
    }
    let high = t.tail_high().clone();
    t.set_tails(high, Poly::zero());
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;

    fn roots(v: &[i64]) -> RootSequence {
        RootSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn displayed_supernatural_table() {
        let t = supernatural_table(&roots(&[3, -1, -4]), &Q::from_int(3), (-7, 5)).unwrap();
        let expect = [
            (0, 4, 20),
            (0, 5, 54),
            (1, 0, 6),
            (1, 1, 10),
            (1, 2, 9),
            (2, -3, 6),
            (2, -2, 5),
            (3, -5, 16),
            (3, -6, 45),
            (3, -7, 90),
        ];
        assert_eq!(t.nonzero_count(), expect.len());
        for (row, d, v) in expect {
            assert_eq!(t.value(row, d).unwrap(), Q::from_int(v));
        }
        assert_eq!(t.value(0, 6).unwrap(), Q::from_int(105));
        assert_eq!(t.value(3, -8).unwrap(), Q::from_int(154));
        assert!(supernatural_table(&roots(&[3, -1, -4]), &Q::from_int(3), (-4, 5)).is_err());
    }

    #[test]
    fn small_supernatural_table() {
        let t = supernatural_table(&roots(&[1, -3]), &Q::from_int(2), (-5, 3)).unwrap();
        assert_eq!(t.value(0, 2).unwrap(), Q::from_int(5));
        for (d, v) in [(-2, 3), (-1, 4), (0, 3)] {
            assert_eq!(t.value(1, d).unwrap(), Q::from_int(v));
        }
        assert_eq!(t.value(2, -4).unwrap(), Q::from_int(5));
        for row in 0..=2 {
            assert!(t.value(row, 1).unwrap().is_zero() && t.value(row, -3).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_formulas() {
        assert_eq!(rank_gcd_bound(&roots(&[2, 0, -2])), BigInt::from(2));
        assert_eq!(rank_gcd_bound(&roots(&[2, 1, -2, -3])), BigInt::from(2));
        let z = roots(&[4, 3, 0, -6, -7, -9]);
        assert_eq!(value_gcd(&z), BigInt::from(48));
        assert_eq!(rank_gcd_bound(&z), BigInt::from(15));
        assert_eq!(residue_count_factor(&z), BigInt::from(24));
        assert_eq!(multinomial_rank(&roots(&[2, 1, -2, -3])), BigInt::from(6));
        assert_eq!(multinomial_rank(&z), BigInt::from(180));
        assert_eq!(multinomial_rank(&roots(&[0, -1, -2, -3])), BigInt::from(1));
        assert_eq!(schur_partition(&roots(&[2, 1, -2, -3])), vec![2, 2, 0, 0]);
        assert_eq!(schur_rank(&roots(&[2, 1, -2, -3])), BigInt::from(20));
        assert_eq!(schur_rank(&z), BigInt::from(1216215));
        assert_eq!(schur_rank(&roots(&[5, 4, 3])), BigInt::from(1));
    }

    #[test]
    fn monads() {
        let z = roots(&[1, -3]);
        let t = monad_table(&z, &Q::from_int(2), 1, (-5, 3)).unwrap();
        let s = supernatural_table(&z, &Q::from_int(2), (-5, 3)).unwrap();
        for d in -12..12 {
            assert!(t.value(2, d).unwrap().is_zero());
            for row in 0..2 {
                assert_eq!(t.value(row, d).unwrap(), s.value(row, d).unwrap());
            }
        }
        assert!(matches!(monad_table(&z, &Q::from_int(2), 0, (-5, 3)), Err(Error::RegularityViolation { a: 0, min: 1 })));

        let z = roots(&[4, 3, 0, -6, -7, -9]);
        let t = monad_table(&z, &Q::from_int(15), 3, (0, 0)).unwrap();
        assert_eq!(t.value(0, 5).unwrap(), Q::from_int(385));
        assert!((-30..0).all(|d| t.value(6, d).unwrap().is_zero()));
    }
}
