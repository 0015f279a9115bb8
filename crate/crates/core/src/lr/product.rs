//! Products `s_λ s_μ` by growing the content `μ` onto `λ` one letter at a
//! time. The boxes holding letter `k` form a horizontal strip; the lattice
//! condition is enforced row by row as the strip is laid down.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::lr::SchurExpansion;
use crate::partition::Partition;

struct StripGrower<'a> {
    content: &'a [u32],
    /// Target outer shape when counting a single coefficient.
    bound: Option<Vec<u32>>,
    shape: Vec<u32>,
    /// `placed[k][r]`: copies of letter `k + 1` in row `r`.
    placed: Vec<Vec<u32>>,
    found: HashMap<Vec<u32>, u64>,
}

impl<'a> StripGrower<'a> {
    fn new(base: &Partition, content: &'a Partition, bound: Option<&Partition>) -> Self {
        let nrows = base.len() + content.len();
        let mut shape = base.parts().to_vec();
        shape.resize(nrows, 0);
        let bound = bound.map(|b| {
            let mut v = b.parts().to_vec();
            v.resize(nrows, 0);
            v
        });
        Self {
            content: content.parts(),
            bound,
            shape,
            placed: vec![vec![0; nrows]; content.len()],
            found: HashMap::new(),
        }
    }

    fn grow(&mut self) {
        if self.content.is_empty() {
            self.record();
        } else {
            self.place(0, 0, self.content[0], 0, 0);
        }
    }

    fn record(&mut self) {
        let mut key = self.shape.clone();
        while key.last() == Some(&0) {
            key.pop();
        }
        *self.found.entry(key).or_default() += 1;
    }

    /// Lays copies of letter `k + 1` into rows `row..`. `above_prev` counts
    /// letter `k` in rows strictly above `row`; `above_cur` counts letter
    /// `k + 1` there.
    fn place(&mut self, k: usize, row: usize, remaining: u32, above_prev: u32, above_cur: u32) {
        if remaining == 0 {
            if k + 1 == self.content.len() {
                self.record();
            } else {
                self.place(k + 1, 0, self.content[k + 1], 0, 0);
            }
            return;
        }
        let nrows = self.shape.len();
        if row >= nrows {
            return;
        }
        // Shape before letter k + 1 was added; rows >= row are untouched so far.
        let old_here = self.shape[row];
        let mut hi = if row == 0 {
            remaining
        } else {
            let old_above = self.shape[row - 1] - self.placed[k][row - 1];
            (old_above - old_here).min(remaining)
        };
        if k > 0 {
            hi = hi.min(above_prev - above_cur);
        }
        if let Some(bound) = &self.bound {
            hi = hi.min(bound[row] - old_here);
        }
        // Rows below can take at most `old_here` more boxes in total.
        let lo = remaining.saturating_sub(old_here);
        if lo > hi {
            return;
        }
        let prev_here = if k > 0 { self.placed[k - 1][row] } else { 0 };
        for x in (lo..=hi).rev() {
            self.placed[k][row] = x;
            self.shape[row] += x;
            self.place(k, row + 1, remaining - x, above_prev + prev_here, above_cur + x);
            self.shape[row] -= x;
        }
        self.placed[k][row] = 0;
    }
}

/// The Schur expansion of `s_λ s_μ`.
pub fn product_expansion(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    let mut grower = StripGrower::new(lambda, mu, None);
    grower.grow();
    let mut out = SchurExpansion::zero(lambda.size() + mu.size());
    for (shape, c) in grower.found {
        out.add_term(Partition::from_sorted(shape), BigUint::from(c));
    }
    out
}

/// `c^ν_{λμ}`, counted directly on the shape `ν/λ` with content `μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if nu.size() != lambda.size() + mu.size() || !lambda.is_contained_in(nu) || !mu.is_contained_in(nu) {
        return BigUint::default();
    }
    let mut grower = StripGrower::new(lambda, mu, Some(nu));
    grower.grow();
    BigUint::from(grower.found.values().sum::<u64>())
}

/// Bilinear extension of [`product_expansion`].
pub fn multiply(left: &SchurExpansion, right: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero(left.degree() + right.degree());
    for (lambda, a) in left.iter() {
        for (mu, b) in right.iter() {
            out.add_assign(&product_expansion(lambda, mu).scaled(&(a * b)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::tableau::{count_lr_tableaux, skew_expansion, SkewShape};
    use crate::partition::Rectangle;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn expand(a: &str, b: &str) -> String {
        product_expansion(&p(a), &p(b)).to_string()
    }

    /// All partitions of size at most `n`.
    fn small_partitions(n: usize) -> Vec<Partition> {
        Rectangle::new(n.max(1) as u32, n.max(1) as u32)
            .unwrap()
            .subpartitions()
            .filter(|l| l.size() <= n)
            .collect()
    }

    #[test]
    fn two_by_two_products() {
        assert_eq!(expand("2", "2"), "2-2:1\n3-1:1\n4:1");
        assert_eq!(expand("1-1", "1-1"), "1-1-1-1:1\n2-1-1:1\n2-2:1");
        assert_eq!(expand("2-1", "1"), "2-1-1:1\n2-2:1\n3-1:1");
        assert_eq!(expand("2-2", "0"), "2-2:1");
        assert_eq!(expand("0", "0"), "0:1");
    }

    #[test]
    fn one_row_products() {
        assert_eq!(expand("3", "3"), "3-3:1\n4-2:1\n5-1:1\n6:1");
        assert_eq!(expand("4", "2"), "4-2:1\n5-1:1\n6:1");
        assert_eq!(expand("5", "1"), "5-1:1\n6:1");
    }

    #[test]
    fn coefficients() {
        assert_eq!(lr_coefficient(&p("2"), &p("2"), &p("3-1")), BigUint::from(1u32));
        assert_eq!(lr_coefficient(&p("2"), &p("2"), &p("2-1-1")), BigUint::from(0u32));
        assert_eq!(lr_coefficient(&p("3-1"), &p("0"), &p("3-1")), BigUint::from(1u32));
        assert_eq!(lr_coefficient(&p("2-1"), &p("2-1"), &p("3-2-1")), BigUint::from(2u32));
        assert_eq!(lr_coefficient(&p("2-1"), &p("2-1"), &p("5-1")), BigUint::from(0u32));
    }

    #[test]
    fn coefficient_matches_product_and_box_filler() {
        let parts = small_partitions(4);
        for l in &parts {
            for m in &parts {
                let e = product_expansion(l, m);
                for nu in small_partitions(l.size() + m.size())
                    .iter()
                    .filter(|n| n.size() == e.degree())
                {
                    let c = lr_coefficient(l, m, nu);
                    assert_eq!(c, e.coefficient(nu), "{l:?} {m:?} {nu:?}");
                    if l.is_contained_in(nu) {
                        let shape = SkewShape::new(nu.clone(), l.clone()).unwrap();
                        assert_eq!(BigUint::from(count_lr_tableaux(&shape, m)), c);
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_grading_and_bounds() {
        let parts = small_partitions(6);
        for l in &parts {
            for m in &parts {
                let e = product_expansion(l, m);
                assert_eq!(e, product_expansion(m, l), "{l:?} {m:?}");
                for nu in e.keys() {
                    assert_eq!(nu.size(), l.size() + m.size());
                    assert!(l.is_contained_in(nu) && m.is_contained_in(nu));
                    assert!(nu.part(0) <= l.part(0) + m.part(0));
                }
            }
        }
    }

    #[test]
    fn skew_matches_coefficients_in_small_rectangles() {
        for a in 1..=4 {
            for b in 1..=4 {
                let rect = Rectangle::new(a, b).unwrap();
                let outer = rect.as_partition();
                for lambda in rect.subpartitions() {
                    let skew = skew_expansion(&outer, &lambda).unwrap();
                    for nu in rect.subpartitions().filter(|n| n.size() == skew.degree()) {
                        assert_eq!(skew.coefficient(&nu), lr_coefficient(&lambda, &nu, &outer));
                    }
                    // Over a rectangle the skew function is a single Schur function.
                    assert_eq!(skew, SchurExpansion::single(rect.complement(&lambda).unwrap()));
                }
            }
        }
    }

    #[test]
    fn multiply_is_bilinear() {
        let a = skew_expansion(&p("2-1"), &p("1")).unwrap();
        let got = multiply(&SchurExpansion::single(p("1")), &a);
        assert_eq!(got.to_string(), "1-1-1:1\n2-1:2\n3:1");
    }
}
