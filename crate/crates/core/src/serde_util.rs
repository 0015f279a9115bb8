use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

/// Coefficients go out as JSON numbers while they fit in a `u64`, and as
/// decimal strings beyond that.
#[derive(Serialize)]
#[serde(untagged)]
pub(crate) enum JsonCoefficient {
    Small(u64),
    Big(String),
}

impl From<&BigUint> for JsonCoefficient {
    fn from(c: &BigUint) -> Self {
        match c.to_u64() {
            Some(v) => JsonCoefficient::Small(v),
            None => JsonCoefficient::Big(c.to_string()),
        }
    }
}
