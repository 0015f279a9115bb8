use num_traits::One;
use rectlr::witness::{bootstrap_witness, theorem_certificates, theorem_witness, two_row_witness, WitnessMethod};
use rectlr::Rectangle;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn theorem_certificates_up_to_six_by_six() {
    for a in 1..=6 {
        for b in 1..=6 {
            let rect = Rectangle::new(a, b).unwrap();
            let certs = theorem_certificates(&rect).unwrap();
            let (h, v) = ((a / 2) as usize, (b / 2) as usize);
            assert_eq!(certs.len(), binomial(h + v, h), "{rect}");
            for c in &certs {
                assert!(c.verify(), "{rect} {}", c.pair);
                assert_ne!(c.method, WitnessMethod::Search, "{rect} {}", c.pair);
                assert!(c.coefficient_in_pair.is_one(), "{rect} {}", c.pair);
            }
        }
    }
}

#[test]
fn two_row_family() {
    for b in 1..=10 {
        let rect = Rectangle::new(2, b).unwrap();
        for q in rect.complementary_pairs() {
            let c = two_row_witness(&q.lambda, b).unwrap();
            assert!(c.verify(), "{rect} {q}");
            assert_eq!(c.pair, q);
        }
    }
}

#[test]
fn bootstrap_agrees_with_theorem() {
    for a in 1..=6 {
        for b in 1..=6 {
            let rect = Rectangle::new(a, b).unwrap();
            for q in rect.theorem_pairs() {
                let direct = theorem_witness(&q.lambda, &rect).unwrap();
                if let Some(lifted) = bootstrap_witness(&q, &rect).unwrap() {
                    assert_eq!(lifted.witness, direct.witness, "{rect} {q}");
                }
            }
        }
    }
}

#[test]
fn bootstrap_certificates_are_exclusive() {
    for a in 1..=5 {
        for b in 1..=5 {
            let rect = Rectangle::new(a, b).unwrap();
            for q in rect.complementary_pairs() {
                if let Some(c) = bootstrap_witness(&q, &rect).unwrap() {
                    assert!(c.verify(), "{rect} {q}");
                }
            }
        }
    }
}
