//! Seeded generators and independent oracles shared by the integration suites.
#![allow(dead_code)]

use bscone::{DegreeSequence, Rational, RootSequence, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn zero() -> Rational {
    q(0)
}

/// A positive rational with small numerator and denominator.
pub fn coefficient(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(1..=20), rng.gen_range(1..=12))
}

pub fn degree_sequence(rng: &mut ChaCha8Rng, len: usize, first: i64) -> DegreeSequence {
    let mut d = vec![first];
    for _ in 1..len {
        d.push(d.last().unwrap() + rng.gen_range(1..=3));
    }
    DegreeSequence::new(d).unwrap()
}

/// Raises one to three coordinates by one, keeping strict increase; with
/// `fix_first` the first coordinate never moves.
pub fn bump_up(rng: &mut ChaCha8Rng, d: &DegreeSequence, fix_first: bool) -> DegreeSequence {
    let mut d = d.clone();
    for _ in 0..rng.gen_range(1..=3) {
        let start = usize::from(fix_first);
        let movable: Vec<usize> = (start..d.len()).filter(|&i| d.bumped(i, 1).is_some()).collect();
        let i = *movable.choose(rng).unwrap();
        d = d.bumped(i, 1).unwrap();
    }
    d
}

pub fn bump_down(rng: &mut ChaCha8Rng, d: &DegreeSequence) -> DegreeSequence {
    let mut d = d.clone();
    for _ in 0..rng.gen_range(1..=3) {
        let movable: Vec<usize> = (0..d.len()).filter(|&i| d.bumped(i, -1).is_some()).collect();
        let i = *movable.choose(rng).unwrap();
        d = d.bumped(i, -1).unwrap();
    }
    d
}

pub fn degree_chain(rng: &mut ChaCha8Rng, len: usize, count: usize, fix_first: bool) -> Vec<DegreeSequence> {
    let first = if fix_first { 0 } else { rng.gen_range(-3..=3) };
    let mut chain = vec![degree_sequence(rng, len, first)];
    while chain.len() < count {
        let next = bump_up(rng, chain.last().unwrap(), fix_first);
        chain.push(next);
    }
    chain
}

pub fn root_sequence(rng: &mut ChaCha8Rng, m: usize) -> RootSequence {
    let mut z = vec![rng.gen_range(-2..=4)];
    for _ in 1..m {
        z.push(z.last().unwrap() - rng.gen_range(1..=3));
    }
    RootSequence::new(z).unwrap()
}

/// Lowers one to three roots by one, keeping strict decrease.
pub fn roots_down(rng: &mut ChaCha8Rng, z: &RootSequence) -> RootSequence {
    let mut z = z.clone();
    for _ in 0..rng.gen_range(1..=3) {
        let movable: Vec<usize> = (1..=z.len()).filter(|&i| z.bumped(i, -1).is_some()).collect();
        let i = *movable.choose(rng).unwrap();
        z = z.bumped(i, -1).unwrap();
    }
    z
}

pub fn roots_up(rng: &mut ChaCha8Rng, z: &RootSequence) -> RootSequence {
    let mut z = z.clone();
    for _ in 0..rng.gen_range(1..=3) {
        let movable: Vec<usize> = (1..=z.len()).filter(|&i| z.bumped(i, 1).is_some()).collect();
        let i = *movable.choose(rng).unwrap();
        z = z.bumped(i, 1).unwrap();
    }
    z
}

pub fn root_chain(rng: &mut ChaCha8Rng, m: usize, count: usize) -> Vec<RootSequence> {
    let mut chain = vec![root_sequence(rng, m)];
    while chain.len() < count {
        let next = roots_down(rng, chain.last().unwrap());
        chain.push(next);
    }
    chain
}

/// A full-length degree sequence of length `n + 1` with a gap of exactly two
/// after position `tau`.
pub fn facet_sequence(rng: &mut ChaCha8Rng, n: usize, tau: usize) -> DegreeSequence {
    let mut d = vec![rng.gen_range(-4..=2)];
    for i in 1..=n {
        let gap = if i == tau + 1 { 2 } else { rng.gen_range(1..=3) };
        d.push(d.last().unwrap() + gap);
    }
    DegreeSequence::new(d).unwrap()
}

/// Solves the Herzog-Kuehl equations `Σ (-1)^i β_i d_i^k = 0`, `k < c`, with
/// `β_0 = 1` by Gaussian elimination and scales to a primitive integer vector.
pub fn pure_oracle(d: &[i64]) -> Vec<Rational> {
    let c = d.len() - 1;
    // unknowns β_1..β_c; row k: Σ_{i≥1} (-1)^i d_i^k β_i = -d_0^k
    let mut a: Vec<Vec<Rational>> = (0..c)
        .map(|k| {
            let mut row: Vec<Rational> = (1..=c)
                .map(|i| {
                    let s = if i % 2 == 0 { 1 } else { -1 };
                    q(s) * Rational::from_bigint(&power(d[i], k))
                })
                .collect();
            row.push(-Rational::from_bigint(&power(d[0], k)));
            row
        })
        .collect();
    for col in 0..c {
        let p = (col..c).find(|&r| a[r][col] != zero()).expect("Vandermonde system is regular");
        a.swap(col, p);
        let piv = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = x.clone() / piv.clone();
        }
        for r in 0..c {
            if r != col && a[r][col] != zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = x.clone() - f.clone() * y;
                }
            }
        }
    }
    let mut beta = vec![q(1)];
    beta.extend((0..c).map(|r| a[r][c].clone()));
    let lcm = beta.iter().fold(BigInt::from(1), |acc, b| acc.lcm(b.denom()));
    let ints: Vec<_> = beta.iter().map(|b| b.numer() * (&lcm / b.denom())).collect();
    let g = ints.iter().fold(BigInt::from(0), |acc, x| acc.gcd(x));
    ints.iter().map(|x| Rational::from_bigint(&(x / &g))).collect()
}

fn power(base: i64, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, _| acc * base)
}

/// `γ_{i,d}` from the definition: `(rank/m!) |Π (d - z_j)|` in row `#{j : z_j > d}`.
pub fn supernatural_oracle(z: &[i64], rank: &Rational, row: usize, d: i64) -> Rational {
    if z.contains(&d) || z.iter().filter(|&&r| r > d).count() != row {
        return zero();
    }
    let fact = (1..=z.len() as i64).fold(q(1), |acc, k| acc * q(k));
    let prod = z.iter().fold(q(1), |acc, &r| acc * q((d - r).abs()));
    rank.clone() * prod / fact
}
