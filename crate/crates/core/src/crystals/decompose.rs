use std::collections::HashMap;

use super::word::{Shape, TensorWord};

/// One connected component: a chain `source -> f̃ source -> ...` isomorphic
/// to `B_m` with `m = highest_weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub source: TensorWord,
    pub highest_weight: u32,
    pub chain: Vec<TensorWord>,
}

/// Connected components of a shape, with a reverse index from each word to
/// its `(component, depth)`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub shape: Shape,
    pub components: Vec<Component>,
    locate: HashMap<TensorWord, (usize, usize)>,
}

impl Decomposition {
    pub fn locate(&self, w: &TensorWord) -> Option<(usize, usize)> {
        self.locate.get(w).copied()
    }

    pub fn component_of(&self, w: &TensorWord) -> Option<&Component> {
        self.locate(w).map(|(c, _)| &self.components[c])
    }

    pub fn highest_weights(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.highest_weight).collect()
    }
}

/// Splits all words of `shape` into `ẽ`/`f̃` components. Sources are the
/// words killed by `ẽ`; components are listed by decreasing highest weight.
pub fn decompose(shape: &Shape) -> Decomposition {
    let mut components: Vec<Component> = shape
        .words()
        .into_iter()
        .filter(|w| w.e_tilde().is_none())
        .map(|source| {
            let mut chain = vec![source.clone()];
            while let Some(next) = chain.last().unwrap().f_tilde() {
                chain.push(next);
            }
            let highest_weight = source.wt();
            assert_eq!(
                chain.len() as i32,
                highest_weight + 1,
                "component of {source} is not a chain B_m"
            );
            Component {
                highest_weight: highest_weight as u32,
                source,
                chain,
            }
        })
        .collect();
    components.sort_by(|a, b| {
        b.highest_weight
            .cmp(&a.highest_weight)
            .then_with(|| a.source.cmp(&b.source))
    });

    let mut locate = HashMap::with_capacity(shape.cardinality());
    for (c, comp) in components.iter().enumerate() {
        for (d, w) in comp.chain.iter().enumerate() {
            let prev = locate.insert(w.clone(), (c, d));
            assert!(prev.is_none(), "{w} lies in two components");
        }
    }
    assert_eq!(
        locate.len(),
        shape.cardinality(),
        "components do not cover {shape}"
    );
    Decomposition {
        shape: shape.clone(),
        components,
        locate,
    }
}
