use std::cmp::Ordering;
use std::collections::HashMap;

use rectlr::word::{lemma_filling, w_compare, w_max_product_term};
use rectlr::{product_expansion, Partition, Rectangle, SchurExpansion, Word};

#[test]
fn w_max_term_dominates_inside_three_by_three() {
    let all: Vec<Partition> = Rectangle::new(3, 3).unwrap().subpartitions().collect();
    let words: Vec<Word> = [(3, 3), (3, 4), (4, 3)]
        .into_iter()
        .flat_map(|(h, v)| Word::all_with(h, v))
        .collect();
    let mut products: HashMap<(usize, usize), SchurExpansion> = HashMap::new();
    for (i, mu) in all.iter().enumerate() {
        for (j, nu) in all.iter().enumerate() {
            let e = products.entry((i, j)).or_insert_with(|| product_expansion(mu, nu));
            for w in &words {
                let top = w_max_product_term(mu, nu, w).unwrap();
                assert!(e.contains(&top), "{mu} {nu} {w}");
                for other in e.keys().filter(|&k| k != &top) {
                    assert_eq!(
                        w_compare(&top, other, w).unwrap(),
                        Ordering::Greater,
                        "{mu} {nu} {w} {other}"
                    );
                }
                let t = lemma_filling(mu, nu, w).unwrap();
                t.validate().unwrap_or_else(|err| panic!("{mu} {nu} {w}: {err}"));
                assert_eq!(t.shape.outer, top);
                assert_eq!(&t.shape.inner, mu);
                assert_eq!(&Partition::new(t.content()).unwrap(), nu);
            }
        }
    }
}
