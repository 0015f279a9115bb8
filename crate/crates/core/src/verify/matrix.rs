use std::borrow::Borrow;
use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::cache::ExpansionCache;
use crate::lr::SchurExpansion;
use crate::partition::{ComplementaryPair, Partition, Rectangle};

/// Coefficients of every product `s_λ s_λᶜ` over a rectangle. Rows follow
/// the sorted pair order, columns are graded-lex, and each row stores its
/// nonzero entries by increasing column.
#[derive(Clone, Debug)]
pub struct ProductMatrix {
    rect: Rectangle,
    rows: Vec<ComplementaryPair>,
    columns: Vec<Partition>,
    entries: Vec<Vec<(usize, BigUint)>>,
}

impl ProductMatrix {
    pub fn rect(&self) -> &Rectangle {
        &self.rect
    }

    pub fn rows(&self) -> &[ComplementaryPair] {
        &self.rows
    }

    pub fn columns(&self) -> &[Partition] {
        &self.columns
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn row(&self, i: usize) -> &[(usize, BigUint)] {
        &self.entries[i]
    }

    pub fn row_expansion(&self, i: usize) -> SchurExpansion {
        self.entries[i]
            .iter()
            .map(|(j, c)| (self.columns[*j].clone(), c.clone()))
            .collect()
    }

    pub fn nonzeros(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }
}

impl ProductMatrix {
    pub(crate) fn from_expansions<E>(rect: Rectangle, rows: Vec<ComplementaryPair>, expansions: &[E]) -> Self
    where
        E: Borrow<SchurExpansion> + Sync,
    {
        let columns: Vec<Partition> = expansions
            .iter()
            .flat_map(|e| e.borrow().keys().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let entries = expansions
            .par_iter()
            .map(|e| {
                e.borrow()
                    .iter()
                    .map(|(nu, c)| (columns.binary_search(nu).unwrap(), c.clone()))
                    .collect()
            })
            .collect();
        Self {
            rect,
            rows,
            columns,
            entries,
        }
    }
}

pub fn build_product_matrix(rect: &Rectangle) -> ProductMatrix {
    build_product_matrix_with(rect, &ExpansionCache::in_memory())
}

pub fn build_product_matrix_with(rect: &Rectangle, cache: &ExpansionCache) -> ProductMatrix {
    let rows = rect.complementary_pairs();
    let expansions: Vec<Arc<SchurExpansion>> = rows
        .par_iter()
        .map(|q| cache.get_or_compute(&q.lambda, &q.lambda_c))
        .collect();
    ProductMatrix::from_expansions(*rect, rows, &expansions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rectangle {
        s.parse().unwrap()
    }

    #[test]
    fn small_matrices() {
        let m = build_product_matrix(&r("2x2"));
        let rows: Vec<String> = (0..m.row_count()).map(|i| m.row_expansion(i).to_string()).collect();
        assert_eq!(
            rows,
            [
                "1-1-1-1:1\n2-1-1:1\n2-2:1",
                "2-2:1\n3-1:1\n4:1",
                "2-1-1:1\n2-2:1\n3-1:1",
                "2-2:1"
            ]
        );
        assert_eq!(m.column_count(), 5);

        let m = build_product_matrix(&r("1x1"));
        assert_eq!(m.row_count(), 1);
        assert_eq!(m.row_expansion(0).to_string(), "1:1");

        let m = build_product_matrix(&r("1x3"));
        let rows: Vec<String> = (0..m.row_count()).map(|i| m.row_expansion(i).to_string()).collect();
        assert_eq!(rows, ["2-1:1\n3:1", "3:1"]);
    }

    #[test]
    fn rows_nonempty_and_positive() {
        let m = build_product_matrix(&r("3x4"));
        for i in 0..m.row_count() {
            assert!(!m.row(i).is_empty());
            assert!(m.row(i).windows(2).all(|w| w[0].0 < w[1].0));
        }
    }
}
