//! Witnesses: partitions `π` such that `s_π` occurs in exactly one product
//! `s_μ s_μᶜ` over a rectangle.
//!
//! A word with `⌊a/2⌋` h's and `⌊b/2⌋` v's determines a self-complementary
//! partition of an `a x b` rectangle by greedily handing out boundary strips:
//! an `h` gives the top row of the remaining region to `λ` and its bottom row
//! to the complement, a `v` does the same with the left and right columns.
//! When both sides are odd the central box is left over and the word gives an
//! almost self-complementary pair instead.
//!
//! Every certificate produced here has been checked against all the other
//! complementary products by direct LR counting.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lr::{lr_coefficient, product_expansion};
use crate::partition::{ComplementaryPair, Partition, Rectangle};
use crate::serde_util::JsonCoefficient;
use crate::word::{w_max_product_term, Letter, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum WitnessMethod {
    EvenEvenLemma,
    OddGreedy,
    TwoRowFormula,
    RowBootstrap,
    ColumnBootstrap,
    Search,
}

impl WitnessMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            WitnessMethod::EvenEvenLemma => "even-even-lemma",
            WitnessMethod::OddGreedy => "odd-greedy",
            WitnessMethod::TwoRowFormula => "two-row-formula",
            WitnessMethod::RowBootstrap => "row-bootstrap",
            WitnessMethod::ColumnBootstrap => "column-bootstrap",
            WitnessMethod::Search => "search",
        }
    }
}

/// A witness together with the evidence that it works.
///
/// Two-row certificates are exclusive only among the pairs at or after
/// theirs in the `λ1 + λ2` order; every other method is exclusive among all
/// complementary pairs of the rectangle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessCertificate {
    pub rect: Rectangle,
    pub pair: ComplementaryPair,
    pub witness: Partition,
    pub coefficient_in_pair: BigUint,
    pub method: WitnessMethod,
}

impl WitnessCertificate {
    /// Recomputes the certificate's claims from scratch.
    pub fn verify(&self) -> bool {
        if lr_coefficient(&self.pair.lambda, &self.pair.lambda_c, &self.witness) != self.coefficient_in_pair {
            return false;
        }
        match self.method {
            WitnessMethod::TwoRowFormula => {
                verify_witness_among(&self.witness, &self.pair, &two_row_scope(&self.pair, &self.rect))
            }
            _ => verify_witness(&self.witness, &self.pair, &self.rect),
        }
    }
}

impl Serialize for WitnessCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("WitnessCertificate", 6)?;
        s.serialize_field("rect", &self.rect)?;
        s.serialize_field("lambda", &self.pair.lambda)?;
        s.serialize_field("lambda_c", &self.pair.lambda_c)?;
        s.serialize_field("witness", &self.witness)?;
        s.serialize_field("coefficient", &JsonCoefficient::from(&self.coefficient_in_pair))?;
        s.serialize_field("method", self.method.as_str())?;
        s.end()
    }
}

/// What a word produces: one self-complementary partition, or (odd by odd)
/// the pair that differs in the central box.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SelfComplementary {
    Single(Partition),
    AlmostPair(ComplementaryPair),
}

impl SelfComplementary {
    /// The canonical member: for an almost pair, the one holding the center.
    pub fn representative(&self) -> &Partition {
        match self {
            SelfComplementary::Single(l) => l,
            SelfComplementary::AlmostPair(p) => &p.lambda,
        }
    }
}

/// Number of h's and v's a word needs for this rectangle.
pub fn word_signature(rect: &Rectangle) -> (usize, usize) {
    ((rect.rows() / 2) as usize, (rect.cols() / 2) as usize)
}

/// Every word of the right signature for the rectangle.
pub fn theorem_words(rect: &Rectangle) -> Vec<Word> {
    let (h, v) = word_signature(rect);
    Word::all_with(h, v)
}

fn check_signature(w: &Word, rect: &Rectangle) -> Result<()> {
    let (want_h, want_v) = word_signature(rect);
    if w.h_count() != want_h || w.v_count() != want_v {
        return Err(Error::WrongSignature {
            rect: *rect,
            h: w.h_count(),
            v: w.v_count(),
            want_h,
            want_v,
        });
    }
    Ok(())
}

/// Region of the rectangle not yet handed out, as half-open row and
/// column ranges.
#[derive(Clone, Copy, Debug)]
struct Region {
    top: u32,
    bottom: u32,
    left: u32,
    right: u32,
}

impl Region {
    fn full(rect: &Rectangle) -> Self {
        Self {
            top: 0,
            bottom: rect.rows(),
            left: 0,
            right: rect.cols(),
        }
    }

    fn is_empty(&self) -> bool {
        self.top >= self.bottom || self.left >= self.right
    }
}

/// Runs the greedy boundary assignment and returns the rows of `λ`.
fn greedy_rows(w: &Word, rect: &Rectangle) -> Vec<u32> {
    let mut rows = vec![0u32; rect.rows() as usize];
    let mut region = Region::full(rect);
    for &letter in w.letters() {
        if region.is_empty() {
            continue;
        }
        match letter {
            Letter::H => {
                rows[region.top as usize] = region.right;
                region.top += 1;
                region.bottom -= 1;
            }
            Letter::V => {
                for r in region.top..region.bottom {
                    rows[r as usize] = region.left + 1;
                }
                region.left += 1;
                region.right -= 1;
            }
        }
    }
    rows
}

pub fn word_to_selfcomplementary(w: &Word, rect: &Rectangle) -> Result<SelfComplementary> {
    check_signature(w, rect)?;
    let mut rows = greedy_rows(w, rect);
    let lambda = Partition::new(rows.clone())?;
    if !rect.is_odd_by_odd() {
        debug_assert!(rect.is_self_complementary(&lambda)?);
        return Ok(SelfComplementary::Single(lambda));
    }
    rows[(rect.rows() / 2) as usize] += 1;
    let with_center = Partition::new(rows)?;
    Ok(SelfComplementary::AlmostPair(ComplementaryPair {
        lambda: with_center,
        lambda_c: lambda,
    }))
}

fn is_theorem_partition(lambda: &Partition, rect: &Rectangle) -> Result<bool> {
    if rect.is_odd_by_odd() {
        rect.is_almost_self_complementary(lambda)
    } else {
        rect.is_self_complementary(lambda)
    }
}

/// Reads the word back off the boundary between `λ` and its complement.
/// For odd-by-odd rectangles either member of the almost pair is accepted.
pub fn selfcomplementary_to_word(lambda: &Partition, rect: &Rectangle) -> Result<Word> {
    let not_sc = || Error::NotSelfComplementary {
        partition: lambda.clone(),
        rect: *rect,
    };
    if !is_theorem_partition(lambda, rect)? {
        return Err(not_sc());
    }
    let (mut h_left, mut v_left) = word_signature(rect);
    let mut region = Region::full(rect);
    let mut letters = Vec::with_capacity(h_left + v_left);
    while h_left + v_left > 0 {
        let letter = if region.is_empty() {
            if h_left > 0 {
                Letter::H
            } else {
                Letter::V
            }
        } else if h_left > 0 && lambda.part(region.top as usize) >= region.right {
            Letter::H
        } else if v_left > 0 && lambda.part(region.bottom as usize - 1) > region.left {
            Letter::V
        } else {
            return Err(not_sc());
        };
        match letter {
            Letter::H => {
                h_left -= 1;
                if !region.is_empty() {
                    region.top += 1;
                    region.bottom -= 1;
                }
            }
            Letter::V => {
                v_left -= 1;
                if !region.is_empty() {
                    region.left += 1;
                    region.right -= 1;
                }
            }
        }
        letters.push(letter);
    }
    let w = Word::new(letters);
    let matches = match word_to_selfcomplementary(&w, rect)? {
        SelfComplementary::Single(l) => &l == lambda,
        SelfComplementary::AlmostPair(p) => &p.lambda == lambda || &p.lambda_c == lambda,
    };
    if matches {
        Ok(w)
    } else {
        Err(not_sc())
    }
}

/// True iff `s_π` occurs in `s_λ s_λᶜ` for `pair` and in no other product
/// over the rectangle.
pub fn verify_witness(pi: &Partition, pair: &ComplementaryPair, rect: &Rectangle) -> bool {
    verify_witness_among(pi, pair, &rect.complementary_pairs())
}

/// As [`verify_witness`], restricted to the given pairs (which must include
/// `pair`).
pub fn verify_witness_among(pi: &Partition, pair: &ComplementaryPair, pairs: &[ComplementaryPair]) -> bool {
    pairs.contains(pair)
        && pairs.par_iter().all(|q| {
            let c = lr_coefficient(&q.lambda, &q.lambda_c, pi);
            if q == pair {
                !c.is_zero()
            } else {
                c.is_zero()
            }
        })
}

fn certify(
    rect: &Rectangle,
    pair: &ComplementaryPair,
    witness: Partition,
    method: WitnessMethod,
) -> Option<WitnessCertificate> {
    let coefficient = lr_coefficient(&pair.lambda, &pair.lambda_c, &witness);
    if coefficient.is_zero() || !verify_witness(&witness, pair, rect) {
        return None;
    }
    Some(WitnessCertificate {
        rect: *rect,
        pair: pair.clone(),
        witness,
        coefficient_in_pair: coefficient,
        method,
    })
}

fn certification_failed(rect: &Rectangle, pair: &ComplementaryPair, reason: impl Into<String>) -> Error {
    Error::CertificationFailed {
        rect: *rect,
        lambda: pair.lambda.clone(),
        lambda_c: pair.lambda_c.clone(),
        reason: reason.into(),
    }
}

/// The witness for a self-complementary product, or for an almost
/// self-complementary one when both sides of the rectangle are odd.
///
/// With at least one even side the witness is the w-maximal term of `s_λ²`
/// for the word read off `λ`. Odd by odd, the word is extended by one letter
/// so that the central box becomes its own piece, and the w-maximal term of
/// `s_λ s_λᶜ` under the extended word is tried (`h` first, then `v`). If
/// neither certifies, the terms of the product are searched in order.
pub fn theorem_witness(lambda: &Partition, rect: &Rectangle) -> Result<WitnessCertificate> {
    if !is_theorem_partition(lambda, rect)? {
        return Err(Error::NotSelfComplementary {
            partition: lambda.clone(),
            rect: *rect,
        });
    }
    let pair = ComplementaryPair::of(lambda, rect)?;
    let w = selfcomplementary_to_word(&pair.lambda, rect)?;
    if !rect.is_odd_by_odd() {
        let method = if rect.is_even_by_even() {
            WitnessMethod::EvenEvenLemma
        } else {
            WitnessMethod::OddGreedy
        };
        let pi = w_max_product_term(&pair.lambda, &pair.lambda_c, &w)?;
        if let Some(cert) = certify(rect, &pair, pi.clone(), method) {
            return Ok(cert);
        }
        if method == WitnessMethod::EvenEvenLemma {
            return Err(certification_failed(
                rect,
                &pair,
                format!("w-maximal term {pi} is not exclusive"),
            ));
        }
    } else {
        for extra in [Letter::H, Letter::V] {
            if let Ok(pi) = w_max_product_term(&pair.lambda, &pair.lambda_c, &w.pushed(extra)) {
                if let Some(cert) = certify(rect, &pair, pi, WitnessMethod::OddGreedy) {
                    return Ok(cert);
                }
            }
        }
    }
    search_witness(&pair, rect)
}

/// First term of the product, in graded-lex order, that certifies.
pub fn search_witness(pair: &ComplementaryPair, rect: &Rectangle) -> Result<WitnessCertificate> {
    product_expansion(&pair.lambda, &pair.lambda_c)
        .keys()
        .find_map(|pi| certify(rect, pair, pi.clone(), WitnessMethod::Search))
        .ok_or_else(|| certification_failed(rect, pair, "no term of the product is exclusive"))
}

/// Certificates for every (almost) self-complementary product, one per word.
pub fn theorem_certificates(rect: &Rectangle) -> Result<Vec<WitnessCertificate>> {
    theorem_words(rect)
        .par_iter()
        .map(|w| {
            let sc = word_to_selfcomplementary(w, rect)?;
            theorem_witness(sc.representative(), rect)
        })
        .collect()
}

/// Pairs at or after `pair` in the two-row order (by `λ1 + λ2`).
fn two_row_scope(pair: &ComplementaryPair, rect: &Rectangle) -> Vec<ComplementaryPair> {
    let size = pair.lambda.size();
    rect.complementary_pairs()
        .into_iter()
        .filter(|q| q.lambda.size() >= size)
        .collect()
}

/// The explicit witness `(2λ1 − λ2, λ2, b − λ1, b − λ1)` for `λ = (λ1, λ2)`
/// in a `2 x b` rectangle with `λ1 + λ2 >= b`.
pub fn two_row_witness(lambda: &Partition, b: u32) -> Result<WitnessCertificate> {
    let rect = Rectangle::new(2, b)?;
    let (l1, l2) = (lambda.part(0), lambda.part(1));
    if !rect.contains(lambda) || l1 + l2 < b {
        return Err(Error::Precondition(format!(
            "{lambda} must fit in {rect} with at least {b} boxes"
        )));
    }
    let pair = ComplementaryPair::of(lambda, &rect)?;
    let witness = Partition::new(vec![2 * l1 - l2, l2, b - l1, b - l1])?;
    let coefficient = lr_coefficient(&pair.lambda, &pair.lambda_c, &witness);
    if coefficient.is_zero() || !verify_witness_among(&witness, &pair, &two_row_scope(&pair, &rect)) {
        return Err(certification_failed(
            &rect,
            &pair,
            format!("{witness} is not exclusive among later pairs"),
        ));
    }
    Ok(WitnessCertificate {
        rect,
        pair,
        witness,
        coefficient_in_pair: coefficient,
        method: WitnessMethod::TwoRowFormula,
    })
}

fn transpose_pair(pair: &ComplementaryPair, rect: &Rectangle) -> Result<ComplementaryPair> {
    ComplementaryPair::of(&pair.lambda.conjugate(), &rect.transpose())
}

/// Strips the full top row of `λ` and the full bottom row of the rectangle
/// (which belongs to `λᶜ`). Returns the inner pair, or `None` for the inner
/// rectangle when it has no rows left.
pub fn strip_rows(pair: &ComplementaryPair, rect: &Rectangle) -> Result<(ComplementaryPair, Option<Rectangle>)> {
    let b = rect.cols();
    if rect.rows() < 2 || pair.lambda.part(0) != b || pair.lambda_c.part(0) != b {
        return Err(Error::Precondition(format!(
            "{pair} in {rect}: top and bottom rows are not full"
        )));
    }
    let inner = ComplementaryPair {
        lambda: pair.lambda.without_first_part(),
        lambda_c: pair.lambda_c.without_first_part(),
    };
    let inner_rect = (rect.rows() > 2)
        .then(|| Rectangle::new(rect.rows() - 2, b))
        .transpose()?;
    if let Some(r) = &inner_rect {
        return Ok((ComplementaryPair::of(&inner.lambda, r)?, inner_rect));
    }
    Ok((inner, None))
}

/// Column version of [`strip_rows`].
pub fn strip_cols(pair: &ComplementaryPair, rect: &Rectangle) -> Result<(ComplementaryPair, Option<Rectangle>)> {
    let (inner_t, rect_t) = strip_rows(&transpose_pair(pair, rect)?, &rect.transpose())?;
    match rect_t {
        Some(r) => Ok((transpose_pair(&inner_t, &r)?, Some(r.transpose()))),
        None => Ok((
            ComplementaryPair {
                lambda: inner_t.lambda.conjugate(),
                lambda_c: inner_t.lambda_c.conjugate(),
            },
            None,
        )),
    }
}

/// Raw lift: a row of `b` on both members, a row of `2b` on the witness.
fn lift_rows(pair: &ComplementaryPair, witness: &Partition, b: u32) -> Result<(ComplementaryPair, Partition)> {
    Ok((
        ComplementaryPair {
            lambda: pair.lambda.with_first_part(b)?,
            lambda_c: pair.lambda_c.with_first_part(b)?,
        },
        witness.with_first_part(2 * b)?,
    ))
}

fn finish_lift(
    rect: Rectangle,
    pair: ComplementaryPair,
    witness: Partition,
    method: WitnessMethod,
) -> Result<WitnessCertificate> {
    let pair = ComplementaryPair::of(&pair.lambda, &rect)?;
    certify(&rect, &pair, witness.clone(), method)
        .ok_or_else(|| certification_failed(&rect, &pair, format!("lifted witness {witness} is not exclusive")))
}

/// Lifts a certificate for an `(a−2) x b` pair to the `a x b` pair obtained
/// by adding a full top row to both members; the witness gains a first row
/// of `2b`.
pub fn bootstrap_witness_row(inner: &WitnessCertificate) -> Result<WitnessCertificate> {
    let rect = Rectangle::new(inner.rect.rows() + 2, inner.rect.cols())?;
    let (pair, witness) = lift_rows(&inner.pair, &inner.witness, rect.cols())?;
    finish_lift(rect, pair, witness, WitnessMethod::RowBootstrap)
}

/// Lifts a certificate for an `a x (b−2)` pair by adding a full left column
/// to both members; the witness gains a first column of height `2a`.
pub fn bootstrap_witness_col(inner: &WitnessCertificate) -> Result<WitnessCertificate> {
    let rect = Rectangle::new(inner.rect.rows(), inner.rect.cols() + 2)?;
    let inner_t = ComplementaryPair {
        lambda: inner.pair.lambda.conjugate(),
        lambda_c: inner.pair.lambda_c.conjugate(),
    };
    let (pair_t, witness_t) = lift_rows(&inner_t, &inner.witness.conjugate(), rect.rows())?;
    let pair = ComplementaryPair {
        lambda: pair_t.lambda.conjugate(),
        lambda_c: pair_t.lambda_c.conjugate(),
    };
    finish_lift(rect, pair, witness_t.conjugate(), WitnessMethod::ColumnBootstrap)
}

/// The one-step row lift from the empty `0 x b` rectangle: `{(b), (b)}` in
/// `2 x b` with witness `(2b)`.
pub fn row_seed(b: u32) -> Result<WitnessCertificate> {
    let rect = Rectangle::new(2, b)?;
    let (pair, witness) = lift_rows(
        &ComplementaryPair {
            lambda: Partition::empty(),
            lambda_c: Partition::empty(),
        },
        &Partition::empty(),
        b,
    )?;
    finish_lift(rect, pair, witness, WitnessMethod::RowBootstrap)
}

/// Column version of [`row_seed`]: `{(1^a), (1^a)}` in `a x 2`.
pub fn col_seed(a: u32) -> Result<WitnessCertificate> {
    let t = row_seed(a)?;
    let rect = t.rect.transpose();
    let pair = ComplementaryPair {
        lambda: t.pair.lambda.conjugate(),
        lambda_c: t.pair.lambda_c.conjugate(),
    };
    finish_lift(rect, pair, t.witness.conjugate(), WitnessMethod::ColumnBootstrap)
}

/// Recursively strips full rows and columns until reaching an (almost)
/// self-complementary pair or an empty rectangle, then lifts the witness
/// back up. `None` when the recursion hits a pair whose `λ` holds both the
/// top row and the left column without being self-complementary.
pub fn bootstrap_witness(pair: &ComplementaryPair, rect: &Rectangle) -> Result<Option<WitnessCertificate>> {
    if let Ok((inner, inner_rect)) = strip_rows(pair, rect) {
        return match inner_rect {
            None => row_seed(rect.cols()).map(Some),
            Some(r) => bootstrap_witness(&inner, &r)?
                .map(|c| bootstrap_witness_row(&c))
                .transpose(),
        };
    }
    if let Ok((inner, inner_rect)) = strip_cols(pair, rect) {
        return match inner_rect {
            None => col_seed(rect.rows()).map(Some),
            Some(r) => bootstrap_witness(&inner, &r)?
                .map(|c| bootstrap_witness_col(&c))
                .transpose(),
        };
    }
    if is_theorem_partition(&pair.lambda, rect)? {
        return theorem_witness(&pair.lambda, rect).map(Some);
    }
    Ok(None)
}
