//! Braid and cactus group words, their images in `S_n`, and a verifier that
//! a concrete assignment of generators to finite maps satisfies a presentation.
//!
//! There is no word-problem machinery: equality of words is always tested
//! through an action.

mod perm;
mod relations;
mod words;

pub use perm::{s_hat, Permutation};
pub use relations::{
    braid_relation_instances, cactus_relation_instances, verify_action, Relation, Violation,
};
pub use words::{BraidLetter, BraidWord, CactusGen, CactusWord, ProjectToSymmetric};

/// Generator tables for the action of `ŝ_{p,q}` on `{1..n}`.
pub fn s_hat_tables(
    n: usize,
) -> std::collections::BTreeMap<CactusGen, std::collections::BTreeMap<usize, usize>> {
    let mut out = std::collections::BTreeMap::new();
    for p in 1..=n {
        for q in p + 1..=n {
            let hat = s_hat(p, q, n).expect("in range");
            out.insert(
                CactusGen::new(p, q),
                (1..=n).map(|i| (i, hat.apply(i))).collect(),
            );
        }
    }
    out
}
