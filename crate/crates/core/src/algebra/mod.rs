//! The inhomogeneous algebra as a noncommutative polynomial algebra modulo
//! its defining relations, with a quadratic rewriting system and the Hopf
//! structure maps.
//!
//! Monomial order: words compare by total weight, then lexicographically,
//! with letters ordered `Λ < p < S(Λ) < S(p)` and by index within a letter.
//! Normal forms therefore move `Λ` to the left of `p`.

mod diamond;
mod hopf;
mod ideal;
mod lambda_zero;
mod relations;
mod rewriter;
mod swap;
mod word;

pub use diamond::{diamond_check, family_of, overlaps, Overlap};
pub use hopf::{
    antipode, antipode_contraction, antipode_gen, check_hopf, coproduct, coproduct_gen, counit, counit_gen,
    normalize_legs, NcTensor,
};
pub use ideal::{ideal_member, BoundedIdeal, DEFAULT_ROW_BUDGET};
pub use lambda_zero::{check_lambda_zero, LambdaZeroReport};
pub use relations::{build_relations, Family, Relation, RelationSet};
pub use rewriter::{set_step_budget, step_budget, Echelon, Rewriter, Rule, DEFAULT_STEP_BUDGET};
pub use swap::{double_swap, exchange, translation_pairs};
pub use word::{parse_poly, Gen, NcPoly, Word};
