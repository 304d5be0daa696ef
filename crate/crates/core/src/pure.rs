//! Pure Betti tables, the moment equations they satisfy, and multiplicity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, primitive_factor, Scalar};
use crate::tables::{BettiTable, DegreeSequence};

/// Relative pure Betti numbers `Π_{j≠i} 1/|d_j - d_i|`, unscaled.
pub fn hk_ratios<S: Scalar>(d: &DegreeSequence) -> Vec<S> {
    let e = d.entries();
    (0..e.len())
        .map(|i| {
            let den = (0..e.len())
                .filter(|&j| j != i)
                .fold(BigInt::one(), |acc, j| acc * (e[j] - e[i]).abs());
            S::from_big_ratio(&BigInt::one(), &den)
        })
        .collect()
}

/// The primitive integral pure table with degree sequence `d` over `n` variables.
pub fn hk_pure_table<S: Scalar>(d: &DegreeSequence, n: usize) -> Result<BettiTable<S>> {
    if d.len() > n + 1 {
        return Err(Error::InvalidArgument(format!("degree sequence {d} longer than n + 1 = {}", n + 1)));
    }
    let ratios: Vec<S> = hk_ratios(d);
    let k = primitive_factor(&ratios).expect("pure ratios are nonzero");
    let values: Vec<S> = ratios.into_iter().map(|r| r * k.clone()).collect();
    Ok(BettiTable::pure(n, d, &values))
}

/// The pure Betti numbers `β_i` of [`hk_pure_table`], in column order.
pub fn hk_pure_values<S: Scalar>(d: &DegreeSequence) -> Vec<S> {
    let ratios: Vec<S> = hk_ratios(d);
    let k = primitive_factor(&ratios).expect("pure ratios are nonzero");
    ratios.into_iter().map(|r| r * k.clone()).collect()
}

/// `β_0 = Π_{i=1}^{n} binom(d_i - d_0 - 1, d_i - d_{i-1} - 1)`, the number of
/// generators of the explicit pure module with degree sequence `d`.
///
/// Fails with an assertion error if the product is not a positive multiple
/// of the primitive `β_0`.
pub fn construction_generators(d: &DegreeSequence) -> Result<BigInt> {
    let e = d.entries();
    let product = (1..e.len()).fold(BigInt::one(), |acc, i| acc * binomial(e[i] - e[0] - 1, (e[i] - e[i - 1] - 1) as u32));
    let beta0 = hk_pure_values::<num_rational::BigRational>(d)[0].clone();
    let beta0 = beta0.numer_big();
    if !product.is_positive() || !product.is_multiple_of(&beta0) {
        return Err(Error::Assertion(format!("generator count {product} is not a multiple of {beta0}")));
    }
    Ok(product)
}

/// `Σ_{i,j} (-1)^i β_{i,j} j^k`.
pub fn moment<S: Scalar>(b: &BettiTable<S>, k: u32) -> S {
    b.iter().fold(S::zero(), |acc, (i, j, v)| {
        let term = v.clone() * S::from_bigint(&num_traits::pow(BigInt::from(j), k as usize));
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// True iff the first `c` moments vanish.
pub fn hk_moments_check<S: Scalar>(b: &BettiTable<S>, c: usize) -> bool {
    (0..c as u32).all(|k| moment(b, k).is_zero())
}

/// `e = (-1)^c / c! · Σ (-1)^i β_{i,j} j^c` for a table whose first `c` moments vanish.
pub fn multiplicity<S: Scalar>(b: &BettiTable<S>, c: usize) -> Result<S> {
    if !hk_moments_check(b, c) {
        return Err(Error::MomentsNonzero(c));
    }
    let sign = if c % 2 == 0 { S::one() } else { -S::one() };
    Ok(sign * moment(b, c as u32) / S::from_bigint(&factorial(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn seq(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    fn values(b: &BettiTable<Q>) -> Vec<i64> {
        b.iter().map(|(_, _, v)| v.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn pure_examples() {
        assert_eq!(values(&hk_pure_table(&seq(&[0, 2, 3, 4, 6, 8]), 5).unwrap()), vec![5, 60, 128, 90, 20, 3]);
        assert_eq!(values(&hk_pure_table(&seq(&[0, 1, 2, 3]), 3).unwrap()), vec![1, 3, 3, 1]);
        assert_eq!(values(&hk_pure_table(&seq(&[0, 2, 3, 5, 6, 8]), 7).unwrap()), vec![1, 10, 16, 16, 10, 1]);
        assert!(hk_pure_table::<Q>(&seq(&[0, 1, 2]), 1).is_err());
    }

    #[test]
    fn generator_products() {
        assert_eq!(construction_generators(&seq(&[0, 1, 2, 3, 4])).unwrap(), BigInt::from(1));
        assert_eq!(construction_generators(&seq(&[0, 2, 3, 4, 6, 8])).unwrap(), BigInt::from(35));
        assert_eq!(construction_generators(&seq(&[0, 2, 3, 5, 6, 8])).unwrap(), BigInt::from(28));
    }

    #[test]
    fn moments_and_multiplicity() {
        let bp = hk_pure_table::<Q>(&seq(&[0, 2, 3, 4, 6, 8]), 5).unwrap();
        assert!(hk_moments_check(&bp, 5));
        assert_eq!(multiplicity(&bp, 5).unwrap(), Q::from_int(48));
        let b0 = hk_pure_table::<Q>(&seq(&[0, 2, 3, 5, 6, 8]), 7).unwrap();
        assert!(hk_moments_check(&b0, 5));
        assert!(!hk_moments_check(&b0, 6));
        assert_eq!(moment(&b0, 5), Q::from_int(-1440));
        assert_eq!(multiplicity(&b0, 5).unwrap(), Q::from_int(12));
        assert!(matches!(multiplicity(&b0, 6), Err(Error::MomentsNonzero(6))));
        let point = BettiTable::from_entries(3, [(0, 0, Q::from_int(1))]);
        assert!(!hk_moments_check(&point, 1));
        for n in 1..6 {
            let k = hk_pure_table::<Q>(&seq(&(0..=n as i64).collect::<Vec<_>>()), n).unwrap();
            assert_eq!(multiplicity(&k, n).unwrap(), Q::from_int(1));
        }
    }
}
