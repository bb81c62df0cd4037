//! Exact matrix rank over `Q` and over prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};
use serde::{Deserialize, Serialize};

pub const DEFAULT_PRIME: u64 = 32003;

/// Characteristic of the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    /// Parses `0` or a prime below `2^32`.
    pub fn parse(s: &str) -> Option<Self> {
        let p: u64 = s.trim().parse().ok()?;
        if p == 0 {
            Some(Characteristic::Zero)
        } else if is_prime(p) && p < 1 << 32 {
            Some(Characteristic::Prime(p))
        } else {
            None
        }
    }

    pub fn value(self) -> u64 {
        match self {
            Characteristic::Zero => 0,
            Characteristic::Prime(p) => p,
        }
    }
}

impl std::fmt::Display for Characteristic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Rank of an integer matrix (given as rows) over the field of the given
/// characteristic.
pub fn rank(rows: &[Vec<i64>], ch: Characteristic) -> usize {
    match ch {
        Characteristic::Prime(p) => rank_mod_p(rows, p),
        Characteristic::Zero => {
            let small: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
            match rank_integer(small) {
                Some(r) => r,
                None => {
                    let big = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
                    rank_integer(big).expect("big integers do not overflow")
                }
            }
        }
    }
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Fraction-free elimination; each row is divided by its content after every
/// update. Returns `None` on overflow.
fn rank_integer<T>(mut m: Vec<Vec<T>>) -> Option<usize>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub,
{
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        let a = pivot_row[c].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let b = row[c].clone();
            if b.is_zero() {
                continue;
            }
            let g = a.gcd(&b);
            let (fa, fb) = (a.clone() / g.clone(), b / g);
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = x.checked_mul(&fa)?.checked_sub(&y.checked_mul(&fb)?)?;
            }
            let content = row.iter().fold(T::zero(), |acc, x| acc.gcd(x));
            if !content.is_zero() && !content.is_one() {
                for x in row.iter_mut() {
                    *x = x.clone() / content.clone();
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}
