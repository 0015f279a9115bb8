//! Words over `{h, v}` and the decompositions of Young diagrams they
//! prescribe.
//!
//! For a word `w` with `c` h's and `d` v's, the w-decomposition of `λ` cuts
//! the diagram into `c + d` pieces. Piece `i` starts at the upper-left-most
//! box not yet covered and runs right to the end of its row (`h`) or down to
//! the end of its column (`v`). After `r` h's and `s` v's the uncovered part
//! is `λ` with its first `r` rows and first `s` columns removed, so piece `i`
//! always starts at `(r, s)`. The tuple of piece sizes is the w-notation,
//! and the w-ordering compares those tuples lexicographically.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lr::{LRTableau, SkewShape};
use crate::partition::Partition;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Letter {
    H,
    V,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn h_count(&self) -> usize {
        self.letters.iter().filter(|&&l| l == Letter::H).count()
    }

    pub fn v_count(&self) -> usize {
        self.len() - self.h_count()
    }

    pub fn pushed(&self, letter: Letter) -> Word {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word { letters }
    }

    /// Every word with `h` h's and `v` v's, in lexicographic order (`h < v`).
    pub fn all_with(h: usize, v: usize) -> Vec<Word> {
        fn go(h: usize, v: usize, prefix: &mut Vec<Letter>, out: &mut Vec<Word>) {
            if h == 0 && v == 0 {
                out.push(Word::new(prefix.clone()));
                return;
            }
            if h > 0 {
                prefix.push(Letter::H);
                go(h - 1, v, prefix, out);
                prefix.pop();
            }
            if v > 0 {
                prefix.push(Letter::V);
                go(h, v - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(h, v, &mut Vec::new(), &mut out);
        out
    }

    /// Where each piece starts: `(row, col)` before letter `i` is read.
    fn origins(&self) -> impl Iterator<Item = (Letter, usize, usize)> + '_ {
        self.letters.iter().scan((0usize, 0usize), |(r, s), &letter| {
            let here = (letter, *r, *s);
            match letter {
                Letter::H => *r += 1,
                Letter::V => *s += 1,
            }
            Some(here)
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                Letter::H => "h",
                Letter::V => "v",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'h' => Ok(Letter::H),
                'v' => Ok(Letter::V),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// One piece of a w-decomposition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Piece {
    pub letter: Letter,
    pub row: usize,
    pub col: usize,
    pub len: usize,
}

impl Piece {
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len).map(move |k| match self.letter {
            Letter::H => (self.row, self.col + k),
            Letter::V => (self.row + k, self.col),
        })
    }
}

/// The piece sizes of a partition's w-decomposition, with the word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WNotation {
    word: Word,
    entries: Vec<u32>,
}

impl WNotation {
    /// Validates that the entries come from some partition.
    pub fn new(word: Word, entries: Vec<u32>) -> Result<Self> {
        from_w_notation(&entries, &word)?;
        Ok(Self { word, entries })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn to_partition(&self) -> Partition {
        from_w_notation(&self.entries, &self.word).expect("validated on construction")
    }
}

fn check_precondition(lambda: &Partition, w: &Word) -> Result<()> {
    let (h, v) = (w.h_count(), w.v_count());
    if lambda.part(h) as usize > v {
        return Err(Error::NoWNotation {
            partition: lambda.clone(),
            h,
            v,
        });
    }
    Ok(())
}

/// Cuts `lambda` into the pieces prescribed by `w`. Requires at most
/// `#h` parts larger than `#v`, which is exactly when the pieces cover
/// the diagram.
pub fn w_decompose(lambda: &Partition, w: &Word) -> Result<Vec<Piece>> {
    check_precondition(lambda, w)?;
    let conj = lambda.conjugate();
    Ok(w.origins()
        .map(|(letter, row, col)| {
            let len = match letter {
                Letter::H => (lambda.part(row) as usize).saturating_sub(col),
                Letter::V => (conj.part(col) as usize).saturating_sub(row),
            };
            Piece { letter, row, col, len }
        })
        .collect())
}

pub fn w_notation(lambda: &Partition, w: &Word) -> Result<WNotation> {
    let entries = w_decompose(lambda, w)?.iter().map(|p| p.len as u32).collect();
    Ok(WNotation {
        word: w.clone(),
        entries,
    })
}

fn is_diagram(cells: &HashSet<(usize, usize)>) -> bool {
    let mut rows: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for &(r, c) in cells {
        let e = rows.entry(r).or_insert((0, 0));
        e.0 += 1;
        e.1 = e.1.max(c + 1);
    }
    let mut prev = usize::MAX;
    for (expect, (&r, &(count, width))) in rows.iter().enumerate() {
        if r != expect || count != width || width > prev {
            return false;
        }
        prev = width;
    }
    true
}

/// Rebuilds the partition with the given w-notation, reporting the first
/// index at which the tuple stops being realizable.
pub fn from_w_notation(entries: &[u32], w: &Word) -> Result<Partition> {
    if entries.len() != w.len() {
        return Err(Error::Unrealizable {
            index: entries.len().min(w.len()),
        });
    }
    let mut cells = HashSet::new();
    for (i, ((letter, row, col), &len)) in w.origins().zip(entries).enumerate() {
        let piece = Piece {
            letter,
            row,
            col,
            len: len as usize,
        };
        for cell in piece.cells() {
            if !cells.insert(cell) {
                return Err(Error::Unrealizable { index: i });
            }
        }
        if !is_diagram(&cells) {
            return Err(Error::Unrealizable { index: i });
        }
    }
    let mut rows: Vec<u32> = Vec::new();
    for &(r, _) in &cells {
        if rows.len() <= r {
            rows.resize(r + 1, 0);
        }
        rows[r] += 1;
    }
    let lambda = Partition::new(rows).map_err(|_| Error::Unrealizable { index: 0 })?;
    // The pieces may still not be maximal (e.g. a row cut short); compare
    // against the genuine decomposition.
    let actual = match w_notation(&lambda, w) {
        Ok(n) => n.entries,
        Err(_) => {
            return Err(Error::Unrealizable {
                index: w.len().saturating_sub(1),
            })
        }
    };
    if let Some(index) = actual.iter().zip(entries).position(|(a, b)| a != b) {
        return Err(Error::Unrealizable { index });
    }
    Ok(lambda)
}

/// Compares `lambda` and `mu` in the w-ordering.
pub fn w_compare(lambda: &Partition, mu: &Partition, w: &Word) -> Result<Ordering> {
    Ok(w_notation(lambda, w)?.entries.cmp(&w_notation(mu, w)?.entries))
}

/// The partition whose w-notation is the sum of those of `mu` and `nu`: the
/// w-maximal term of `s_μ s_ν`.
pub fn w_max_product_term(mu: &Partition, nu: &Partition, w: &Word) -> Result<Partition> {
    let a = w_notation(mu, w)?;
    let b = w_notation(nu, w)?;
    let sum: Vec<u32> = a.entries.iter().zip(&b.entries).map(|(x, y)| x + y).collect();
    from_w_notation(&sum, w)
}

/// An LR tableau of shape `π/μ` and content `ν`, where `π` is
/// [`w_max_product_term`]: piece `i` of `μ` is extended by `ν`'s piece `i`,
/// and the new boxes carry the row numbers of that piece of `ν`.
pub fn lemma_filling(mu: &Partition, nu: &Partition, w: &Word) -> Result<LRTableau> {
    let pi = w_max_product_term(mu, nu, w)?;
    let mu_pieces = w_decompose(mu, w)?;
    let nu_pieces = w_decompose(nu, w)?;
    let mut labels: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for (mp, np) in mu_pieces.iter().zip(&nu_pieces) {
        let extension = Piece {
            letter: mp.letter,
            row: mp.row + if mp.letter == Letter::V { mp.len } else { 0 },
            col: mp.col + if mp.letter == Letter::H { mp.len } else { 0 },
            len: np.len,
        };
        for (cell, (nu_row, _)) in extension.cells().zip(np.cells()) {
            labels.insert(cell, nu_row as u32 + 1);
        }
    }
    let rows = (0..pi.len())
        .map(|r| {
            (mu.part(r) as usize..pi.part(r) as usize)
                .map(|c| labels.get(&(r, c)).copied().unwrap_or(0))
                .collect()
        })
        .collect();
    Ok(LRTableau {
        shape: SkewShape::new(pi, mu.clone())?,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::product_expansion;
    use crate::partition::Rectangle;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn notation(l: &str, word: &str) -> Vec<u32> {
        w_notation(&p(l), &w(word)).unwrap().entries().to_vec()
    }

    #[test]
    fn worked_notations() {
        assert_eq!(notation("5-4-1-1", "hvvh"), vec![5, 3, 1, 2]);
        assert_eq!(notation("3-3-2-2", "hvvh"), vec![3, 3, 3, 1]);
        assert_eq!(notation("8-5-2-2-2-1-1", "hvvh"), vec![8, 6, 4, 3]);
        assert_eq!(notation("0", "hv"), vec![0, 0]);
        assert_eq!(notation("0", ""), Vec::<u32>::new());
    }

    #[test]
    fn decomposition_tiles_the_diagram() {
        let pieces = w_decompose(&p("5-4-1-1"), &w("hvvh")).unwrap();
        let sizes: Vec<_> = pieces.iter().map(|x| x.len).collect();
        assert_eq!(sizes, vec![5, 3, 1, 2]);
        let covered: HashSet<_> = pieces.iter().flat_map(|x| x.cells().collect::<Vec<_>>()).collect();
        let cells: HashSet<_> = p("5-4-1-1").cells().collect();
        assert_eq!(covered, cells);
        assert!(w_decompose(&Partition::empty(), &w("hhvv"))
            .unwrap()
            .iter()
            .all(|x| x.len == 0));
    }

    #[test]
    fn precondition_is_enforced() {
        assert!(matches!(w_notation(&p("2"), &w("v")), Err(Error::NoWNotation { .. })));
        assert!(w_notation(&p("1"), &w("")).is_err());
        assert!(w_notation(&p("3-3"), &w("hv")).is_err());
        assert!(w_notation(&p("3-1"), &w("hv")).is_ok());
    }

    #[test]
    fn reconstruction() {
        assert_eq!(from_w_notation(&[8, 6, 4, 3], &w("hvvh")).unwrap(), p("8-5-2-2-2-1-1"));
        assert_eq!(from_w_notation(&[0, 0, 0], &w("hvh")).unwrap(), Partition::empty());
        assert_eq!(from_w_notation(&[4, 0], &w("hv")).unwrap(), p("4"));
    }

    #[test]
    fn unrealizable_tuples() {
        // An empty first row followed by a column hanging below it.
        assert_eq!(
            from_w_notation(&[0, 2], &w("hv")),
            Err(Error::Unrealizable { index: 1 })
        );
        assert_eq!(
            from_w_notation(&[1, 3], &w("hh")),
            Err(Error::Unrealizable { index: 1 })
        );
        // A second column longer than the first.
        assert_eq!(
            from_w_notation(&[1, 2], &w("vv")),
            Err(Error::Unrealizable { index: 1 })
        );
        assert_eq!(
            from_w_notation(&[1, 1, 2], &w("hvv")),
            Err(Error::Unrealizable { index: 2 })
        );
        // A second row longer than the first.
        assert_eq!(
            from_w_notation(&[1, 0, 3], &w("hvh")),
            Err(Error::Unrealizable { index: 2 })
        );
        assert_eq!(from_w_notation(&[1], &w("hv")), Err(Error::Unrealizable { index: 1 }));
        assert!(WNotation::new(w("hv"), vec![0, 2]).is_err());
        assert_eq!(WNotation::new(w("hv"), vec![2, 1]).unwrap().to_partition(), p("2-1"));
    }

    #[test]
    fn ordering() {
        assert_eq!(
            w_compare(&p("5-4-1-1"), &p("3-3-2-2"), &w("hvvh")).unwrap(),
            Ordering::Greater
        );
        assert_eq!(w_compare(&p("3-1"), &p("3-1"), &w("hv")).unwrap(), Ordering::Equal);
        assert_eq!(w_compare(&p("2"), &p("1-1"), &w("hv")).unwrap(), Ordering::Greater);
    }

    #[test]
    fn max_terms() {
        assert_eq!(
            w_max_product_term(&p("5-4-1-1"), &p("3-3-2-2"), &w("hvvh")).unwrap(),
            p("8-5-2-2-2-1-1")
        );
        assert_eq!(w_max_product_term(&p("3-1"), &p("0"), &w("hv")).unwrap(), p("3-1"));
        assert_eq!(w_max_product_term(&p("2"), &p("2"), &w("hv")).unwrap(), p("4"));
    }

    #[test]
    fn worked_filling() {
        let t = lemma_filling(&p("5-4-1-1"), &p("3-3-2-2"), &w("hvvh")).unwrap();
        t.validate().unwrap();
        assert_eq!(t.shape.outer, p("8-5-2-2-2-1-1"));
        let expected: Vec<Vec<u32>> = vec![vec![1, 1, 1], vec![2], vec![2], vec![3], vec![2, 4], vec![3], vec![4]];
        assert_eq!(t.rows, expected);
    }

    #[test]
    fn trivial_fillings() {
        let t = lemma_filling(&p("3-1"), &p("0"), &w("hv")).unwrap();
        assert!(t.rows.iter().all(Vec::is_empty));
        t.validate().unwrap();
        let t = lemma_filling(&p("2"), &p("2"), &w("hv")).unwrap();
        assert_eq!(t.rows, vec![vec![1, 1]]);
        t.validate().unwrap();
    }

    #[test]
    fn round_trip_inside_four_by_four() {
        let rect = Rectangle::new(4, 4).unwrap();
        for len in 0..=8 {
            for h in 0..=len {
                for word in Word::all_with(h, len - h) {
                    for lambda in rect.subpartitions() {
                        if let Ok(n) = w_notation(&lambda, &word) {
                            assert_eq!(from_w_notation(n.entries(), &word).unwrap(), lambda);
                            let total: u32 = n.entries().iter().sum();
                            assert_eq!(total as usize, lambda.size());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn all_h_word_is_row_order() {
        // With w = h...h the notation is the row vector, and the maximal
        // term is the row-wise sum.
        let rect = Rectangle::new(3, 3).unwrap();
        let word = w("hhh");
        let all: Vec<_> = rect.subpartitions().collect();
        for a in &all {
            for b in &all {
                if a.size() == b.size() {
                    assert_eq!(w_compare(a, b, &word).unwrap(), a.parts().cmp(b.parts()));
                }
                let sum: Vec<u32> = (0..3).map(|i| a.part(i) + b.part(i)).collect();
                assert_eq!(w_max_product_term(a, b, &word).unwrap(), Partition::new(sum).unwrap());
            }
        }
    }

    #[test]
    fn all_v_word_is_conjugate_row_order() {
        let rect = Rectangle::new(3, 3).unwrap();
        let word = w("vvv");
        let all: Vec<_> = rect.subpartitions().collect();
        for a in &all {
            for b in &all {
                if a.size() == b.size() {
                    let want = a.conjugate().parts().cmp(b.conjugate().parts());
                    assert_eq!(w_compare(a, b, &word).unwrap(), want);
                }
                let sum: Vec<u32> = (0..3).map(|i| a.conjugate().part(i) + b.conjugate().part(i)).collect();
                let want = Partition::new(sum).unwrap().conjugate();
                assert_eq!(w_max_product_term(a, b, &word).unwrap(), want);
            }
        }
    }

    #[test]
    fn maximal_term_small_sample() {
        // The exhaustive version runs in the acceptance suite.
        let word = w("hvhvhv");
        let rect = Rectangle::new(2, 2).unwrap();
        for a in rect.subpartitions() {
            for b in rect.subpartitions() {
                let pi = w_max_product_term(&a, &b, &word).unwrap();
                let e = product_expansion(&a, &b);
                assert!(e.contains(&pi));
                for nu in e.keys().filter(|n| **n != pi) {
                    assert_eq!(w_compare(nu, &pi, &word).unwrap(), Ordering::Less);
                }
                let t = lemma_filling(&a, &b, &word).unwrap();
                t.validate().unwrap();
                assert_eq!(t.shape.outer, pi);
            }
        }
    }
}
