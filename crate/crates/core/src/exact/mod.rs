//! Exact arithmetic: the [`Scalar`] abstraction, generalized binomials and
//! integer-valued polynomial utilities.

mod poly;
mod scalar;

pub use poly::{binomial_poly, first_negative_from, integer_value_gcd, root_bound, sign_stable_bound, Poly};
pub use scalar::{parse_scalar, primitive_factor, Scalar};

use num_bigint::BigInt;
use num_traits::One;

/// Generalized binomial `a(a-1)...(a-k+1) / k!`, valid for negative `a`.
pub fn binomial(a: i64, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}

/// `m!` as a big integer.
pub fn factorial(m: usize) -> BigInt {
    (1..=m as u64).fold(BigInt::one(), |acc, i| acc * i)
}
