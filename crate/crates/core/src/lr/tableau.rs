//! Littlewood-Richardson tableaux on skew shapes, and a box-by-box
//! enumerator over them.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lr::SchurExpansion;
use crate::partition::Partition;

/// A skew shape `outer / inner`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::NotContained { inner, outer });
        }
        Ok(Self { outer, inner })
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    fn row_span(&self, r: usize) -> std::ops::Range<usize> {
        self.inner.part(r) as usize..self.outer.part(r) as usize
    }
}

/// A filling of a skew shape. `rows[r]` lists the entries of row `r` from
/// left to right, starting at column `inner[r]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LRTableau {
    pub shape: SkewShape,
    pub rows: Vec<Vec<u32>>,
}

impl LRTableau {
    fn entry(&self, r: usize, col: usize) -> Option<u32> {
        let span = self.shape.row_span(r);
        if span.contains(&col) {
            self.rows.get(r).and_then(|row| row.get(col - span.start)).copied()
        } else {
            None
        }
    }

    /// Entries read right to left, top row first.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    /// Multiplicity of each entry `1, 2, ...`.
    pub fn content(&self) -> Vec<u32> {
        let mut counts = Vec::new();
        for &v in self.rows.iter().flatten() {
            let v = v as usize;
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        counts
    }

    /// Checks that this is a Littlewood-Richardson tableau: the rows match the
    /// shape, entries are positive, rows weakly increase, columns strictly
    /// increase, the reading word is a lattice word and the content is a
    /// partition.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let rows_needed = self.shape.outer.len();
        if self.rows.iter().skip(rows_needed).any(|r| !r.is_empty()) {
            return Err("filling has rows outside the shape".into());
        }
        for r in 0..rows_needed {
            let want = self.shape.row_span(r).len();
            let got = self.rows.get(r).map_or(0, Vec::len);
            if want != got {
                return Err(format!("row {r} has {got} entries, shape needs {want}"));
            }
        }
        if self.rows.iter().flatten().any(|&v| v == 0) {
            return Err("entries must be positive".into());
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(format!("row {r} decreases"));
            }
        }
        for r in 1..rows_needed {
            for col in self.shape.row_span(r) {
                if let Some(above) = self.entry(r - 1, col) {
                    if above >= self.entry(r, col).unwrap() {
                        return Err(format!("column {col} not strict at row {r}"));
                    }
                }
            }
        }
        let mut counts: Vec<u32> = Vec::new();
        for (pos, v) in self.reading_word().into_iter().enumerate() {
            let v = v as usize;
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
            if v >= 2 && counts[v - 1] > counts[v - 2] {
                return Err(format!("reading word is not a lattice word at position {pos}"));
            }
        }
        if counts.windows(2).any(|w| w[0] < w[1]) {
            return Err("content is not a partition".into());
        }
        Ok(())
    }
}

/// Called with the rows and content of each completed filling.
type Visitor<'v> = dyn FnMut(&[Vec<u32>], &[u32]) + 'v;

/// Box-by-box backtracking over LR fillings of a skew shape, in reading
/// order, pruning on row order, column strictness, the lattice condition and
/// (optionally) a prescribed content.
struct BoxFiller<'a> {
    shape: &'a SkewShape,
    content: Option<&'a [u32]>,
    cells: Vec<(usize, usize)>,
    rows: Vec<Vec<u32>>,
    counts: Vec<u32>,
}

impl<'a> BoxFiller<'a> {
    fn new(shape: &'a SkewShape, content: Option<&'a [u32]>) -> Self {
        let nrows = shape.outer.len();
        let cells = (0..nrows)
            .flat_map(|r| shape.row_span(r).rev().map(move |c| (r, c)))
            .collect();
        let rows = (0..nrows).map(|r| vec![0; shape.row_span(r).len()]).collect();
        Self {
            shape,
            content,
            cells,
            rows,
            counts: vec![0; nrows + 1],
        }
    }

    fn get(&self, r: usize, col: usize) -> Option<u32> {
        let span = self.shape.row_span(r);
        span.contains(&col).then(|| self.rows[r][col - span.start])
    }

    fn run(&mut self, idx: usize, visit: &mut Visitor<'_>) {
        let Some(&(r, col)) = self.cells.get(idx) else {
            visit(&self.rows, &self.counts);
            return;
        };
        let start = self.shape.row_span(r).start;
        let lo = match r.checked_sub(1).and_then(|up| self.get(up, col)) {
            Some(above) => above + 1,
            None => 1,
        };
        let distinct = self.counts.iter().take_while(|&&c| c > 0).count() as u32;
        let mut hi = distinct + 1;
        if col + 1 < self.shape.outer.part(r) as usize {
            hi = hi.min(self.rows[r][col + 1 - start]);
        }
        for v in lo..=hi {
            let k = v as usize - 1;
            if k >= self.counts.len() {
                break;
            }
            if k > 0 && self.counts[k] >= self.counts[k - 1] {
                continue;
            }
            if let Some(content) = self.content {
                if self.counts[k] >= content.get(k).copied().unwrap_or(0) {
                    continue;
                }
            }
            self.counts[k] += 1;
            self.rows[r][col - start] = v;
            self.run(idx + 1, visit);
            self.counts[k] -= 1;
        }
    }
}

/// Number of LR tableaux of the given skew shape and content.
pub fn count_lr_tableaux(shape: &SkewShape, content: &Partition) -> u64 {
    if shape.size() != content.size() {
        return 0;
    }
    let mut count = 0u64;
    BoxFiller::new(shape, Some(content.parts())).run(0, &mut |_, _| count += 1);
    count
}

/// All LR tableaux of the given skew shape and content.
pub fn lr_tableaux(shape: &SkewShape, content: &Partition) -> Vec<LRTableau> {
    let mut out = Vec::new();
    if shape.size() != content.size() {
        return out;
    }
    BoxFiller::new(shape, Some(content.parts())).run(0, &mut |rows, _| {
        out.push(LRTableau {
            shape: shape.clone(),
            rows: rows.to_vec(),
        })
    });
    out
}

/// Schur expansion of the skew function `s_{outer/inner}`: the coefficient of
/// `s_ν` is `c^{outer}_{inner, ν}`.
pub fn skew_expansion(outer: &Partition, inner: &Partition) -> Result<SchurExpansion> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    BoxFiller::new(&shape, None).run(0, &mut |_, content| {
        *counts.entry(content.to_vec()).or_default() += 1;
    });
    let mut out = SchurExpansion::zero(shape.size());
    for (content, c) in counts {
        out.add_term(Partition::from_sorted(content), BigUint::from(c));
    }
    Ok(out)
}
