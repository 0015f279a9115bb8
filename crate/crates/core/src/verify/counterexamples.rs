//! Two natural generalizations of the independence statement that fail.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::lr::{product_expansion, skew_expansion, SchurExpansion};
use crate::partition::Partition;

fn p(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

/// Both sides of `s_(1) s_{R/(1)} = s_(2) s_{R/(2)} + s_(1,1) s_{R/(1,1)}` for
/// `R = (2,1)`.
pub fn skew_dependence_sides() -> Result<(SchurExpansion, SchurExpansion)> {
    let outer = p("2-1");
    let term = |inner: &str| -> Result<SchurExpansion> {
        let inner = p(inner);
        let skew = skew_expansion(&outer, &inner)?;
        let mut out = SchurExpansion::zero(outer.size());
        for (nu, c) in skew.iter() {
            out.add_assign(&product_expansion(&inner, nu).scaled(c));
        }
        Ok(out)
    };
    let left = term("1")?;
    let mut right = term("2")?;
    right.add_assign(&term("1-1")?);
    Ok((left, right))
}

pub fn check_skew_dependence_21() -> bool {
    matches!(skew_dependence_sides(), Ok((left, right)) if left == right)
}

/// The four products `s_(3)s_(1)`, `s_(2,1)s_(1)`, `s_(2)s_(2)`,
/// `s_(2)s_(1,1)`, each sharing the term `s_(3,1)`.
pub fn coproduct_products() -> Vec<((Partition, Partition), SchurExpansion)> {
    [("3", "1"), ("2-1", "1"), ("2", "2"), ("2", "1-1")]
        .into_iter()
        .map(|(a, b)| ((p(a), p(b)), product_expansion(&p(a), &p(b))))
        .collect()
}

/// Signs of the dependence `(s_(3) + s_(2,1)) s_(1) = s_(2) (s_(2) + s_(1,1))`.
pub const COPRODUCT_DEPENDENCE: [i32; 4] = [1, 1, -1, -1];

pub fn check_coproduct_counterexample() -> bool {
    let products = coproduct_products();
    let shared = p("3-1");
    if !products.iter().all(|(_, e)| e.contains(&shared)) {
        return false;
    }
    let mut total: BTreeMap<&Partition, BigInt> = BTreeMap::new();
    for ((_, e), sign) in products.iter().zip(COPRODUCT_DEPENDENCE) {
        for (nu, c) in e.iter() {
            *total.entry(nu).or_default() += BigInt::from(sign) * BigInt::from(c.clone());
        }
    }
    total.values().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn skew_identity() {
        assert!(check_skew_dependence_21());
        let (left, right) = skew_dependence_sides().unwrap();
        assert_eq!(left.coefficient(&p("2-1")), BigUint::from(2u32));
        assert_eq!(left.mass(), BigUint::from(4u32));
        assert_eq!(right.mass(), BigUint::from(4u32));
    }

    #[test]
    fn coproduct_identity() {
        assert!(check_coproduct_counterexample());
        let products = coproduct_products();
        assert_eq!(products[3].1.to_string(), "2-1-1:1\n3-1:1");
    }
}
