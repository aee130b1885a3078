use std::collections::HashMap;

use super::decompose::decompose;
use super::map::CrystalMap;
use super::word::{ChainElement, Shape, TensorWord};
use crate::error::{Error, Result};

/// A commutor: a family of maps `A ⊗ B -> B ⊗ A` indexed by pairs of shapes.
pub trait Commutor {
    fn commute(&self, a: &Shape, b: &Shape) -> Result<CrystalMap>;
}

/// The Schützenberger involution: reverses every connected component.
pub fn schutzenberger(shape: &Shape) -> CrystalMap {
    let dec = decompose(shape);
    CrystalMap::from_fn(shape, shape, |w| {
        let (c, d) = dec.locate(w).expect("word of this shape");
        let chain = &dec.components[c].chain;
        chain[chain.len() - 1 - d].clone()
    })
}

/// `σ^S(a ⊗ b) = ξ_{B⊗A}(ξ_B(b) ⊗ ξ_A(a))`.
pub fn commutor_s(a: &Shape, b: &Shape) -> CrystalMap {
    let xi_a = schutzenberger(a);
    let xi_b = schutzenberger(b);
    let ba = b.concat(a);
    let xi_ba = schutzenberger(&ba);
    let k = a.len();
    CrystalMap::from_fn(&a.concat(b), &ba, |w| {
        let (x, y) = w.split_at(k);
        xi_ba.table[&xi_b.table[&y].concat(&xi_a.table[&x])].clone()
    })
}

/// An element `f̃^depth b_∞` of the sl2 crystal `B_∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InfinityElement {
    pub depth: u32,
}

impl InfinityElement {
    pub fn wt(&self) -> i64 {
        -2 * self.depth as i64
    }

    pub fn eps(&self) -> u32 {
        self.depth
    }

    /// `ε*(b)`, the least `λ` with `b` in the image of `ι^∞_λ`.
    pub fn eps_star(&self) -> u32 {
        self.depth
    }
}

/// `ι^∞ : B_n -> B_∞`; ẽ-equivariant, sends `b_n` to `b_∞`.
pub fn embed_in_infinity(b: ChainElement) -> InfinityElement {
    InfinityElement { depth: b.depth() }
}

/// The Kashiwara involution on `B_∞`. It preserves weight, and the sl2 `B_∞`
/// has one element per weight, so it is the identity here.
pub fn kashiwara_star(b: InfinityElement) -> InfinityElement {
    b
}

/// Reads an element of `B_∞` back in `B_λ` through `ι^∞_λ`.
pub fn reinterpret(b: InfinityElement, lambda: u32) -> Result<ChainElement> {
    if b.eps_star() > lambda {
        return Err(Error::StarOutOfRange {
            eps: b.eps_star(),
            lambda,
        });
    }
    Ok(ChainElement::at_depth(lambda, b.depth))
}

/// `σ^c_{B_λ, B_μ}`: on highest weight elements `b_λ ⊗ b ↦ b_μ ⊗ b*`, extended
/// along each component by `f̃`.
pub fn commutor_c_chains(lambda: u32, mu: u32) -> Result<CrystalMap> {
    let dom = Shape::new([lambda, mu]);
    let cod = Shape::new([mu, lambda]);
    let dec = decompose(&dom);
    let top_lambda = ChainElement::at_depth(lambda, 0);
    let mut table = std::collections::BTreeMap::new();
    for comp in &dec.components {
        let (head, b) = (comp.source.0[0], comp.source.0[1]);
        if head != top_lambda {
            return Err(Error::Invariant(format!(
                "highest weight element {} is not of the form b_λ ⊗ b",
                comp.source
            )));
        }
        let star = reinterpret(kashiwara_star(embed_in_infinity(b)), lambda)?;
        let mut image = TensorWord::new(vec![ChainElement::at_depth(mu, 0), star]);
        if image.e_tilde().is_some() {
            return Err(Error::Invariant(format!("{image} is not highest weight")));
        }
        for w in &comp.chain {
            table.insert(w.clone(), image.clone());
            if let Some(next) = image.f_tilde() {
                image = next;
            }
        }
    }
    Ok(CrystalMap {
        domain: dom,
        codomain: cod,
        table,
    })
}

/// `σ^c_{A,B}` for arbitrary shapes, applied componentwise: each component of
/// `A` is identified with some `B_λ` and each component of `B` with some
/// `B_μ`, and `σ^c_{B_λ,B_μ}` is transported along these identifications.
pub fn commutor_c(a: &Shape, b: &Shape) -> Result<CrystalMap> {
    if a.len() == 1 && b.len() == 1 {
        return commutor_c_chains(a.0[0], b.0[0]);
    }
    let dec_a = decompose(a);
    let dec_b = decompose(b);
    let mut chains: HashMap<(u32, u32), CrystalMap> = HashMap::new();
    let k = a.len();
    let mut table = std::collections::BTreeMap::new();
    for w in a.concat(b).words() {
        let (x, y) = w.split_at(k);
        let (ca, dx) = dec_a.locate(&x).unwrap();
        let (cb, dy) = dec_b.locate(&y).unwrap();
        let comp_a = &dec_a.components[ca];
        let comp_b = &dec_b.components[cb];
        let (lambda, mu) = (comp_a.highest_weight, comp_b.highest_weight);
        if let std::collections::hash_map::Entry::Vacant(slot) = chains.entry((lambda, mu)) {
            slot.insert(commutor_c_chains(lambda, mu)?);
        }
        let local = TensorWord::new(vec![
            ChainElement::at_depth(lambda, dx as u32),
            ChainElement::at_depth(mu, dy as u32),
        ]);
        let image = &chains[&(lambda, mu)].table[&local];
        let (d1, d2) = (image.0[0].depth() as usize, image.0[1].depth() as usize);
        table.insert(w, comp_b.chain[d1].concat(&comp_a.chain[d2]));
    }
    Ok(CrystalMap {
        domain: a.concat(b),
        codomain: b.concat(a),
        table,
    })
}

/// The crystal commutor built from the Kashiwara involution.
#[derive(Clone, Copy, Debug, Default)]
pub struct KashiwaraCommutor;

/// The commutor built from the Schützenberger involution.
#[derive(Clone, Copy, Debug, Default)]
pub struct SchutzenbergerCommutor;

impl Commutor for KashiwaraCommutor {
    fn commute(&self, a: &Shape, b: &Shape) -> Result<CrystalMap> {
        commutor_c(a, b)
    }
}

impl Commutor for SchutzenbergerCommutor {
    fn commute(&self, a: &Shape, b: &Shape) -> Result<CrystalMap> {
        Ok(commutor_s(a, b))
    }
}
