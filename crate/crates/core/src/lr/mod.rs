//! Littlewood-Richardson coefficients and Schur-basis expansions.

mod expansion;
mod product;
mod tableau;

pub use expansion::SchurExpansion;
pub use product::{lr_coefficient, multiply, product_expansion};
pub use tableau::{count_lr_tableaux, lr_tableaux, skew_expansion, LRTableau, SkewShape};
