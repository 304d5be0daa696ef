use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// An exact ordered field element.
///
/// Everything in this crate is generic over `Scalar`. The intended
/// instantiation is [`BigRational`](num_rational::BigRational); the
/// fixed-width `Ratio<i64>` / `Ratio<i128>` impls are faster for small
/// tables but panic on overflow, exactly as the underlying integer
/// arithmetic does. Floating point types are deliberately not supported:
/// every algorithm here relies on exact zero tests.
pub trait Scalar:
    Clone + Debug + Display + FromStr + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    fn from_bigint(n: &BigInt) -> Self;

    /// `n / d` in lowest terms. `d` must be nonzero.
    fn from_big_ratio(n: &BigInt, d: &BigInt) -> Self;

    fn numer_big(&self) -> BigInt;

    /// Always positive.
    fn denom_big(&self) -> BigInt;

    fn from_int(v: i64) -> Self {
        Self::from_bigint(&BigInt::from(v))
    }

    fn is_integer(&self) -> bool {
        self.denom_big().is_one()
    }

    /// Smallest integer `>= self`.
    fn ceil_big(&self) -> BigInt {
        let (n, d) = (self.numer_big(), self.denom_big());
        n.div_ceil(&d)
    }

    fn to_f64(&self) -> f64 {
        let (n, d) = (self.numer_big(), self.denom_big());
        n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for Ratio<BigInt> {
    fn from_bigint(n: &BigInt) -> Self {
        Ratio::from_integer(n.clone())
    }

    fn from_big_ratio(n: &BigInt, d: &BigInt) -> Self {
        Ratio::new(n.clone(), d.clone())
    }

    fn numer_big(&self) -> BigInt {
        self.numer().clone()
    }

    fn denom_big(&self) -> BigInt {
        self.denom().clone()
    }
}

macro_rules! fixed_width_scalar {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            fn from_bigint(n: &BigInt) -> Self {
                let v: $int = n
                    .try_into()
                    .unwrap_or_else(|_| panic!("{} overflows {}", n, stringify!($int)));
                Ratio::from_integer(v)
            }

            fn from_big_ratio(n: &BigInt, d: &BigInt) -> Self {
                let g = n.gcd(d);
                let (n, d) = (n / &g, d / &g);
                let conv = |x: &BigInt| -> $int {
                    x.try_into()
                        .unwrap_or_else(|_| panic!("{} overflows {}", x, stringify!($int)))
                };
                Ratio::new(conv(&n), conv(&d))
            }

            fn numer_big(&self) -> BigInt {
                BigInt::from(*self.numer())
            }

            fn denom_big(&self) -> BigInt {
                BigInt::from(*self.denom())
            }
        }
    };
}

fixed_width_scalar!(i64);
fixed_width_scalar!(i128);

/// Parses the canonical `"p/q"` / `"p"` text form.
pub fn parse_scalar<S: Scalar>(text: &str) -> Option<S> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(S::from_big_ratio(&n, &d))
}

/// Least common multiple of denominators and gcd of numerators of `values`.
///
/// Multiplying every value by `lcm / gcd` yields a primitive integer vector
/// (entry gcd 1) with unchanged signs. Returns `None` if all values are zero.
pub fn primitive_factor<'a, S: Scalar>(values: impl IntoIterator<Item = &'a S>) -> Option<S> {
    let mut lcm = BigInt::one();
    let mut gcd = BigInt::zero();
    let mut nonzero = false;
    let values: Vec<&S> = values.into_iter().filter(|v| !v.is_zero()).collect();
    for v in &values {
        nonzero = true;
        lcm = lcm.lcm(&v.denom_big());
    }
    if !nonzero {
        return None;
    }
    for v in &values {
        let scaled = v.numer_big() * (&lcm / v.denom_big());
        gcd = gcd.gcd(&scaled);
    }
    Some(S::from_big_ratio(&lcm, &gcd))
}
