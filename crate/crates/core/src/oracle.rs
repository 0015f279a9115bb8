//! A second, independent route to Schur products: expand `s_μ` in complete
//! homogeneous functions by inverting the Kostka matrix, then multiply by
//! `s_λ` with the Pieri rule. Nothing here shares enumeration code with
//! [`crate::lr`]; it exists to cross-check that module.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lr::SchurExpansion;
use crate::partition::Partition;

/// Partitions of `n` in reverse lexicographic order, `(n)` first. This order
/// refines dominance, so Kostka matrices come out upper unitriangular.
pub fn partitions_revlex(n: usize) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).expect("decreasing"));
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Every partition obtained from `lambda` by adding a horizontal strip of
/// `k` boxes.
fn horizontal_strips(lambda: &Partition, k: u32) -> Vec<Partition> {
    fn go(lambda: &Partition, row: usize, left: u32, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            let mut parts = rows.clone();
            parts.extend((row..lambda.len()).map(|i| lambda.part(i)));
            out.push(Partition::new(parts).expect("strip keeps order"));
            return;
        }
        if row > lambda.len() {
            return;
        }
        let room = if row == 0 {
            left
        } else {
            lambda.part(row - 1) - lambda.part(row)
        };
        for add in 0..=room.min(left) {
            rows.push(lambda.part(row) + add);
            go(lambda, row + 1, left - add, rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

/// `s_λ h_k`.
pub fn pieri_row(lambda: &Partition, k: u32) -> SchurExpansion {
    let mut out = SchurExpansion::zero(lambda.size() + k as usize);
    for nu in horizontal_strips(lambda, k) {
        out.add_term(nu, BigUint::one());
    }
    out
}

/// Number of semistandard tableaux of shape `nu` and content `mu`, counted by
/// peeling horizontal strips of sizes `mu_last, ...` off `nu`.
pub fn kostka(nu: &Partition, mu: &Partition) -> Result<BigUint> {
    if nu.size() != mu.size() {
        return Err(Error::Precondition(format!("kostka({nu}, {mu}) needs equal sizes")));
    }
    fn peel(shape: Vec<u32>, letters: &[u32], memo: &mut HashMap<(Vec<u32>, usize), BigUint>) -> BigUint {
        let Some((&last, rest)) = letters.split_last() else {
            return if shape.is_empty() {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        };
        let key = (shape.clone(), letters.len());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        // Choose how many boxes to remove from each row: the removed boxes
        // must form a horizontal strip, so row r keeps at least shape[r+1].
        let mut total = BigUint::zero();
        let mut cut = vec![0u32; shape.len()];
        fn choose(
            shape: &[u32],
            row: usize,
            left: u32,
            cut: &mut Vec<u32>,
            rest: &[u32],
            memo: &mut HashMap<(Vec<u32>, usize), BigUint>,
            total: &mut BigUint,
        ) {
            if row == shape.len() {
                if left == 0 {
                    let mut smaller: Vec<u32> = shape.iter().zip(cut.iter()).map(|(s, c)| s - c).collect();
                    while smaller.last() == Some(&0) {
                        smaller.pop();
                    }
                    *total += peel(smaller, rest, memo);
                }
                return;
            }
            let below = shape.get(row + 1).copied().unwrap_or(0);
            let most = (shape[row] - below).min(left);
            for c in 0..=most {
                cut[row] = c;
                choose(shape, row + 1, left - c, cut, rest, memo, total);
            }
            cut[row] = 0;
        }
        choose(&shape, 0, last, &mut cut, rest, memo, &mut total);
        memo.insert(key, total.clone());
        total
    }
    let mut memo = HashMap::new();
    Ok(peel(nu.parts().to_vec(), mu.parts(), &mut memo))
}

/// Kostka numbers `K_{νμ}` for all partitions of `n`, indexed in
/// reverse lexicographic order.
#[derive(Clone, Debug)]
pub struct KostkaMatrix {
    degree: usize,
    index: Vec<Partition>,
    entries: Vec<Vec<BigInt>>,
}

impl KostkaMatrix {
    pub fn new(degree: usize) -> Self {
        let index = partitions_revlex(degree);
        let entries = index
            .iter()
            .map(|nu| {
                index
                    .iter()
                    .map(|mu| BigInt::from(kostka(nu, mu).expect("same degree")))
                    .collect()
            })
            .collect();
        Self { degree, index, entries }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn position(&self, mu: &Partition) -> Option<usize> {
        self.index.iter().position(|p| p == mu)
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| match i.cmp(&j) {
                std::cmp::Ordering::Equal => v.is_one(),
                std::cmp::Ordering::Greater => v.is_zero(),
                std::cmp::Ordering::Less => !v.is_negative(),
            })
        })
    }

    /// Inverse by back substitution. Panics unless upper unitriangular.
    #[allow(clippy::needless_range_loop)]
    pub fn inverse(&self) -> Vec<Vec<BigInt>> {
        assert!(self.is_upper_unitriangular());
        let n = self.index.len();
        let mut inv = vec![vec![BigInt::zero(); n]; n];
        // Column j of the inverse solves K x = e_j, from the bottom up.
        for j in 0..n {
            for i in (0..=j).rev() {
                let mut v = if i == j { BigInt::one() } else { BigInt::zero() };
                for k in i + 1..=j {
                    v -= &self.entries[i][k] * &inv[k][j];
                }
                inv[i][j] = v;
            }
        }
        inv
    }
}

/// `s_λ s_μ` via `s_μ = Σ_ρ (K⁻¹)_{ρμ} h_ρ` and iterated Pieri.
pub fn product_expansion_oracle(lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
    let kostka = KostkaMatrix::new(mu.size());
    let inv = kostka.inverse();
    let col = kostka.position(mu).expect("mu is a partition of its size");
    let mut signed: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (row, rho) in kostka.index().iter().enumerate() {
        let coeff = &inv[row][col];
        if coeff.is_zero() {
            continue;
        }
        // s_λ h_ρ, one part at a time.
        let mut current: BTreeMap<Partition, BigUint> = BTreeMap::new();
        current.insert(lambda.clone(), BigUint::one());
        for &k in rho.parts() {
            let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
            for (kappa, c) in &current {
                for (nu, _) in pieri_row(kappa, k).iter() {
                    *next.entry(nu.clone()).or_default() += c;
                }
            }
            current = next;
        }
        for (nu, c) in current {
            *signed.entry(nu).or_default() += coeff * BigInt::from(c);
        }
    }
    let mut out = SchurExpansion::zero(lambda.size() + mu.size());
    for (nu, c) in signed {
        match c.sign() {
            Sign::NoSign => {}
            Sign::Plus => out.add_term(nu, c.magnitude().clone()),
            Sign::Minus => return Err(Error::NegativeCoefficient(nu)),
        }
    }
    Ok(out)
}

/// `f^λ`, the number of standard tableaux, by the hook-length formula.
pub fn syt_count(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut numerator = BigUint::one();
    for k in 1..=lambda.size() {
        numerator *= k;
    }
    let mut hooks = BigUint::one();
    for (i, j) in lambda.cells() {
        let arm = lambda.part(i) as usize - j - 1;
        let leg = conj.part(j) as usize - i - 1;
        hooks *= arm + leg + 1;
    }
    numerator / hooks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    /// Standard tableaux by placing 1..n one box at a time at outer corners.
    fn enumerate_syt(lambda: &Partition) -> u64 {
        fn go(target: &Partition, current: &mut Vec<u32>, placed: usize) -> u64 {
            if placed == target.size() {
                return 1;
            }
            let mut total = 0;
            for r in 0..target.len() {
                let cur = current.get(r).copied().unwrap_or(0);
                let above = if r == 0 {
                    u32::MAX
                } else {
                    current.get(r - 1).copied().unwrap_or(0)
                };
                if cur < target.part(r) && cur < above {
                    if r == current.len() {
                        current.push(0);
                    }
                    current[r] += 1;
                    total += go(target, current, placed + 1);
                    current[r] -= 1;
                    if current[r] == 0 && r + 1 == current.len() {
                        current.pop();
                    }
                }
            }
            total
        }
        go(lambda, &mut Vec::new(), 0)
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_row(&p("2"), 2).to_string(), "2-2:1\n3-1:1\n4:1");
        assert_eq!(pieri_row(&p("3-1"), 0).to_string(), "3-1:1");
        assert_eq!(pieri_row(&p("1-1"), 1).to_string(), "1-1-1:1\n2-1:1");
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p("2-1"), &p("1-1-1")).unwrap(), big(2));
        assert_eq!(kostka(&p("3-2"), &p("3-2")).unwrap(), big(1));
        assert_eq!(kostka(&p("1-1"), &p("2")).unwrap(), big(0));
        assert_eq!(kostka(&p("3-2"), &p("2-2-1")).unwrap(), big(2));
        assert!(kostka(&p("2"), &p("1")).is_err());
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn kostka_inverse_round_trips() {
        for n in 0..=9 {
            let k = KostkaMatrix::new(n);
            assert!(k.is_upper_unitriangular(), "degree {n}");
            let inv = k.inverse();
            let size = k.index().len();
            for i in 0..size {
                for j in 0..size {
                    let v: BigInt = (0..size).map(|m| &k.entries()[i][m] * &inv[m][j]).sum();
                    assert_eq!(v, BigInt::from((i == j) as u8), "degree {n} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn oracle_products() {
        assert_eq!(
            product_expansion_oracle(&p("2"), &p("1-1")).unwrap().to_string(),
            "2-1-1:1\n3-1:1"
        );
        assert_eq!(
            product_expansion_oracle(&p("3-2"), &p("0")).unwrap().to_string(),
            "3-2:1"
        );
        assert_eq!(
            product_expansion_oracle(&p("2-1"), &p("1")).unwrap().to_string(),
            "2-1-1:1\n2-2:1\n3-1:1"
        );
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(syt_count(&p("2-2")), big(2));
        assert_eq!(syt_count(&p("7")), big(1));
        assert_eq!(syt_count(&p("2-1")), big(2));
        assert_eq!(syt_count(&p("0")), big(1));
        for n in 0..=8 {
            for lambda in partitions_revlex(n) {
                assert_eq!(syt_count(&lambda), big(enumerate_syt(&lambda)), "{lambda:?}");
            }
        }
    }

    #[test]
    fn revlex_counts() {
        let counts: Vec<usize> = (0..=9).map(|n| partitions_revlex(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }
}
