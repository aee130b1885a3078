//! sl2 crystals `B_n`, flat tensor products under the tensor product rule,
//! component decomposition, the Schützenberger and Kashiwara commutors, the
//! induced cactus group action, coboundary-axiom checkers and the braiding
//! obstruction.

mod cactus;
mod commutor;
mod decompose;
mod dot;
mod map;
mod obstruction;
mod word;

pub use cactus::{
    cactus_action, cactus_action_with, chain_triples, check_cactus_action,
    check_cactus_action_with, check_coboundary, coboundary_triples, naturality_violation,
    shape_orbit, shapes_up_to, sigma_pq,
};
pub use commutor::{
    commutor_c, commutor_c_chains, commutor_s, embed_in_infinity, kashiwara_star, reinterpret,
    schutzenberger, Commutor, InfinityElement, KashiwaraCommutor, SchutzenbergerCommutor,
};
pub use decompose::{decompose, Component, Decomposition};
pub use dot::to_dot;
pub use map::{isomorphisms, CrystalMap};
pub use obstruction::{braiding_obstruction, ObstructionWitness};
pub use word::{word, ChainElement, Shape, TensorWord};

/// All words of a shape together with their `f̃` edges.
#[derive(Clone, Debug)]
pub struct Crystal {
    pub shape: Shape,
    pub elements: Vec<TensorWord>,
}

impl Crystal {
    pub fn new(shape: Shape) -> Self {
        let elements = shape.words();
        Self { shape, elements }
    }

    pub fn edges(&self) -> Vec<(TensorWord, TensorWord)> {
        self.elements
            .iter()
            .filter_map(|w| w.f_tilde().map(|v| (w.clone(), v)))
            .collect()
    }
}

/// The chain `B_n : b_n -> b_{n-2} -> ... -> b_{-n}`.
pub fn chain_crystal(n: u32) -> Crystal {
    Crystal::new(Shape::new([n]))
}
