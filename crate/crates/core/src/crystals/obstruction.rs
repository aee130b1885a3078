use serde::Serialize;

use super::map::{isomorphisms, CrystalMap};
use super::word::{word, Shape, TensorWord};
use crate::error::{Error, Result};

/// The two incompatible values any braiding on sl2 crystals would have to
/// assign to `σ_{B_1, B_1 ⊗ B_1}(b_1 ⊗ b_{-1} ⊗ b_1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionWitness {
    /// `σ_{B_1,B_1}` is forced to be the identity.
    pub sigma_b1_b1_is_identity: bool,
    /// The forced value `σ_{B_1,B_2}(b_1 ⊗ b_0)`.
    pub sigma_b1_b2: TensorWord,
    /// `j(b_0)` for the inclusion `j : B_2 -> B_1 ⊗ B_1`.
    pub inclusion_b0: TensorWord,
    /// `(id ⊗ j)(b_1 ⊗ b_0)`, the word both routes act on.
    pub input: TensorWord,
    /// Value forced by naturality with respect to `j`.
    pub forced: TensorWord,
    /// Value of the hexagon composite `(id ⊗ σ)(σ ⊗ id)`.
    pub hexagon: TensorWord,
    pub obstructed: bool,
}

fn unique_isomorphism(a: &Shape, b: &Shape) -> Result<CrystalMap> {
    let mut isos = isomorphisms(a, b);
    if isos.len() != 1 {
        return Err(Error::Invariant(format!(
            "expected a unique isomorphism {a} -> {b}, found {}",
            isos.len()
        )));
    }
    Ok(isos.pop().unwrap())
}

/// Replays the argument that sl2 crystals admit no braiding: both
/// `σ_{B_1,B_1}` and `σ_{B_1,B_2}` are forced, and naturality against
/// `j : B_2 -> B_1 ⊗ B_1` contradicts the hexagon composite.
pub fn braiding_obstruction() -> Result<ObstructionWitness> {
    let b1 = Shape::new([1]);
    let b2 = Shape::new([2]);
    let b11 = Shape::new([1, 1]);
    let none = Shape::default();

    let sigma11 = unique_isomorphism(&b11, &b11)?;
    let sigma12 = unique_isomorphism(&Shape::new([1, 2]), &Shape::new([2, 1]))?;
    let j = CrystalMap::inclusion(&b11, 0);
    if j.domain != b2 {
        return Err(Error::Invariant(
            "top component of B_1 ⊗ B_1 is not B_2".into(),
        ));
    }

    let start = word(&[(1, 1), (2, 0)]);
    let input = j.padded(&b1, &none).table[&start].clone();
    let forced = j.padded(&none, &b1).table[&sigma12.table[&start]].clone();

    let hexagon_map = sigma11
        .padded(&b1, &none)
        .after(&sigma11.padded(&none, &b1))?;
    let hexagon = hexagon_map.table[&input].clone();

    Ok(ObstructionWitness {
        sigma_b1_b1_is_identity: sigma11.is_identity(),
        sigma_b1_b2: sigma12.table[&start].clone(),
        inclusion_b0: j.table[&word(&[(2, 0)])].clone(),
        obstructed: forced != hexagon,
        input,
        forced,
        hexagon,
    })
}
