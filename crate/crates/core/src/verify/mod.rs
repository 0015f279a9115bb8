//! Independence checks over a whole rectangle: the product matrix, its rank,
//! the elimination fixpoint, and two counterexamples to generalizations.

mod counterexamples;
mod elimination;
mod matrix;
mod rank;

pub use counterexamples::{
    check_coproduct_counterexample, check_skew_dependence_21, coproduct_products, skew_dependence_sides,
    COPRODUCT_DEPENDENCE,
};
pub use elimination::{
    check_w0_characterization, eliminate, eliminate_matrix, replay_trace, EliminatedProduct, EliminationRound,
    EliminationStatus, EliminationTrace,
};
pub use matrix::{build_product_matrix, build_product_matrix_with, ProductMatrix};
pub use rank::{
    certify_rank, check_modulus, exact_rank, is_prime, rank_mod_p, RankReport, DEFAULT_PRIMES, FALLBACK_PRIMES,
    PRIMES_BEFORE_EXACT,
};
