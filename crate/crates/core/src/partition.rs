//! Partitions, Young-diagram containment, conjugation and complementation
//! inside an `a x b` rectangle.
//!
//! Partitions are ordered graded-lexicographically: first by size, then
//! lexicographically on their parts. Every sorted listing in this crate uses
//! that order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The zero partition
/// is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Self { parts })
    }

    /// For callers that maintain the ordering themselves.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`th part, counting from zero; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// True iff the diagram of `self` sits inside the diagram of `outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
    }

    /// Boxes `(row, column)` of the diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// Prepends a part, which must be at least the current first part.
    pub fn with_first_part(&self, first: u32) -> Result<Partition> {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.parts);
        Partition::new(parts)
    }

    /// Removes the first part.
    pub fn without_first_part(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }
}

/// `inner ⊆ outer` as Young diagrams.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.is_contained_in(outer)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the canonical form: parts joined by `-`, or `0` for the zero
    /// partition. Zero parts are otherwise rejected.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPartition(s.to_string());
        if s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('-')
            .map(|tok| match tok.parse::<u32>() {
                Ok(p) if p > 0 && !tok.starts_with('+') && !tok.starts_with('0') => Ok(p),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| bad())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An `a x b` rectangle: `a` rows of `b` boxes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Rectangle {
    rows: u32,
    cols: u32,
}

impl Rectangle {
    pub fn new(rows: u32, cols: u32) -> Result<Self> {
        if rows == 0 || cols == 0 || cols > 1 << 31 {
            return Err(Error::InvalidRectangle(format!("{rows}x{cols}")));
        }
        Ok(Self { rows, cols })
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn area(&self) -> usize {
        self.rows as usize * self.cols as usize
    }

    pub fn transpose(&self) -> Rectangle {
        Rectangle {
            rows: self.cols,
            cols: self.rows,
        }
    }

    pub fn is_odd_by_odd(&self) -> bool {
        self.rows % 2 == 1 && self.cols % 2 == 1
    }

    pub fn is_even_by_even(&self) -> bool {
        self.rows.is_multiple_of(2) && self.cols.is_multiple_of(2)
    }

    /// The partition `(b^a)`.
    pub fn as_partition(&self) -> Partition {
        Partition {
            parts: vec![self.cols; self.rows as usize],
        }
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.len() <= self.rows as usize && lambda.part(0) <= self.cols
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if self.contains(lambda) {
            Ok(())
        } else {
            Err(Error::NotContained {
                inner: lambda.clone(),
                outer: self.as_partition(),
            })
        }
    }

    /// The boxes of the rectangle outside `lambda`, rotated by 180 degrees.
    pub fn complement(&self, lambda: &Partition) -> Result<Partition> {
        self.check(lambda)?;
        let a = self.rows as usize;
        let parts = (0..a).map(|i| self.cols - lambda.part(a - 1 - i)).collect();
        Ok(Partition::from_sorted(parts))
    }

    pub fn is_self_complementary(&self, lambda: &Partition) -> Result<bool> {
        Ok(&self.complement(lambda)? == lambda)
    }

    /// For odd-by-odd rectangles: `lambda` and its complement differ exactly
    /// in the central box.
    pub fn is_almost_self_complementary(&self, lambda: &Partition) -> Result<bool> {
        if !self.is_odd_by_odd() {
            return Err(Error::NotOddByOdd(*self));
        }
        let comp = self.complement(lambda)?;
        let center_row = (self.rows / 2) as usize;
        let center_col = self.cols / 2;
        for i in 0..self.rows as usize {
            let (x, y) = (lambda.part(i), comp.part(i));
            if i == center_row {
                if x.min(y) != center_col || x.max(y) != center_col + 1 {
                    return Ok(false);
                }
            } else if x != y {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every partition inside the rectangle, once each, in graded-lex order.
    pub fn subpartitions(&self) -> impl Iterator<Item = Partition> + '_ {
        (0..=self.area()).flat_map(move |n| partitions_in_box(n, self.rows, self.cols))
    }

    /// Unordered pairs `{λ, λᶜ}`, sorted by their canonical member.
    pub fn complementary_pairs(&self) -> Vec<ComplementaryPair> {
        let mut pairs: Vec<_> = self
            .subpartitions()
            .filter_map(|lambda| {
                let comp = self.complement(&lambda).expect("subpartition fits");
                (lambda >= comp).then_some(ComplementaryPair { lambda, lambda_c: comp })
            })
            .collect();
        pairs.sort();
        pairs
    }

    /// Pairs whose product is covered by the witness theorem: self-complementary
    /// pairs, or almost self-complementary ones when both sides are odd.
    pub fn theorem_pairs(&self) -> Vec<ComplementaryPair> {
        self.complementary_pairs()
            .into_iter()
            .filter(|p| {
                if self.is_odd_by_odd() {
                    self.is_almost_self_complementary(&p.lambda).unwrap_or(false)
                } else {
                    p.lambda == p.lambda_c
                }
            })
            .collect()
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

impl FromStr for Rectangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRectangle(s.to_string());
        let (a, b) = s.split_once('x').ok_or_else(bad)?;
        let parse = |t: &str| {
            if t.is_empty() || !t.bytes().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<u32>().map_err(|_| bad())
        };
        Rectangle::new(parse(a)?, parse(b)?).map_err(|_| bad())
    }
}

impl Serialize for Rectangle {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rectangle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An unordered complementary pair `{λ, λᶜ}`. The canonical member `lambda`
/// is the larger of the two in graded-lex order, so `|lambda| >= |lambda_c|`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComplementaryPair {
    pub lambda: Partition,
    pub lambda_c: Partition,
}

impl ComplementaryPair {
    /// The pair containing `member`, in canonical orientation.
    pub fn of(member: &Partition, rect: &Rectangle) -> Result<Self> {
        let comp = rect.complement(member)?;
        Ok(if *member >= comp {
            Self {
                lambda: member.clone(),
                lambda_c: comp,
            }
        } else {
            Self {
                lambda: comp,
                lambda_c: member.clone(),
            }
        })
    }

    pub fn is_self_complementary(&self) -> bool {
        self.lambda == self.lambda_c
    }
}

impl fmt::Display for ComplementaryPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lambda, self.lambda_c)
    }
}

/// Partitions of `n` with at most `rows` parts, each at most `cols`,
/// in lexicographic order.
fn partitions_in_box(n: usize, rows: u32, cols: u32) -> Vec<Partition> {
    fn go(remaining: usize, rows_left: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        // Smallest first part that still lets the rest fit below it.
        let lo = remaining.div_ceil(rows_left as usize) as u32;
        let hi = max_part.min(remaining as u32);
        for p in lo..=hi {
            prefix.push(p);
            go(remaining - p as usize, rows_left - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n` fitting in a `rows x cols` box, by dynamic
/// programming over part values (no enumeration).
pub fn count_partitions_in_box(n: usize, rows: usize, cols: usize) -> u128 {
    // table[k][s]: partitions with exactly k parts summing to s, parts <= v.
    let mut table = vec![vec![0u128; n + 1]; rows + 1];
    table[0][0] = 1;
    for v in 1..=cols {
        for k in 1..=rows {
            for s in v..=n {
                table[k][s] += table[k - 1][s - v];
            }
        }
    }
    table.iter().map(|row| row[n]).sum()
}
