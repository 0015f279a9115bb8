use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Rectangle;
use crate::verify::ProductMatrix;

pub const DEFAULT_PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];
pub const FALLBACK_PRIMES: [u64; 2] = [2_147_483_587, 2_147_483_579];

/// Number of primes tried before falling back to exact arithmetic.
pub const PRIMES_BEFORE_EXACT: usize = 3;

const MIN_MODULUS: u64 = 1 << 20;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn check_modulus(p: u64) -> Result<()> {
    if p > MIN_MODULUS && is_prime(p) {
        Ok(())
    } else {
        Err(Error::BadModulus(p))
    }
}

fn reduce(c: &BigUint, p: u64) -> u64 {
    (c % p).to_u64().unwrap()
}

/// `row -= factor * pivot` over `Z/p`, both sparse and sorted by column.
fn axpy(row: &[(usize, u64)], factor: u64, pivot: &[(usize, u64)], p: u64) -> Vec<(usize, u64)> {
    let neg = p - factor;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i]);
            i += 1;
        } else if take_pivot {
            out.push((pivot[j].0, mul_mod(neg, pivot[j].1, p)));
            j += 1;
        } else {
            let v = (row[i].1 + mul_mod(neg, pivot[j].1, p)) % p;
            if v != 0 {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over `Z/p` by sparse elimination on leading columns.
pub fn rank_mod_p(m: &ProductMatrix, p: u64) -> Result<usize> {
    check_modulus(p)?;
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for i in 0..m.row_count() {
        let mut row: Vec<(usize, u64)> = m
            .row(i)
            .iter()
            .map(|(j, c)| (*j, reduce(c, p)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, value)) = row.first() {
            match pivots.get(&lead) {
                Some(pivot) => row = axpy(&row, value, pivot, p),
                None => {
                    let inv = pow_mod(value, p - 2, p);
                    for entry in row.iter_mut() {
                        entry.1 = mul_mod(entry.1, inv, p);
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Ok(pivots.len())
}

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
pub fn exact_rank(m: &ProductMatrix) -> usize {
    let ncols = m.column_count();
    let mut a: Vec<Vec<BigInt>> = (0..m.row_count())
        .map(|i| {
            let mut dense = vec![BigInt::zero(); ncols];
            for (j, c) in m.row(i) {
                dense[*j] = BigInt::from(c.clone());
            }
            dense
        })
        .collect();
    let nrows = a.len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let value = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                row[j] = value / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    rank
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RankReport {
    pub rect: Rectangle,
    pub rows: usize,
    pub rank: usize,
    /// The prime that certified full rank; `None` when the answer came from
    /// exact arithmetic.
    pub prime: Option<u64>,
    pub certified: bool,
}

/// Full rank modulo any prime certifies independence over the rationals.
/// When every given prime is deficient, fallback primes are tried until
/// [`PRIMES_BEFORE_EXACT`] have been used, and then the exact rank decides.
pub fn certify_rank(m: &ProductMatrix, primes: &[u64]) -> Result<RankReport> {
    for &p in primes {
        check_modulus(p)?;
    }
    let rows = m.row_count();
    let report = |rank, prime| RankReport {
        rect: *m.rect(),
        rows,
        rank,
        prime,
        certified: rank == rows,
    };
    let fallbacks = FALLBACK_PRIMES.iter().filter(|p| !primes.contains(p));
    let extra = PRIMES_BEFORE_EXACT.saturating_sub(primes.len());
    for &p in primes.iter().chain(fallbacks.take(extra)) {
        let rank = rank_mod_p(m, p)?;
        if rank == rows {
            return Ok(report(rank, Some(p)));
        }
    }
    Ok(report(exact_rank(m), None))
}
