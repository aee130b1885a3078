use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::decompose::decompose;
use super::word::{Shape, TensorWord};
use crate::error::{Error, Result};

/// An explicit map between the word sets of two shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalMap {
    pub domain: Shape,
    pub codomain: Shape,
    pub table: BTreeMap<TensorWord, TensorWord>,
}

#[derive(Serialize, Deserialize)]
struct CrystalMapJson {
    domain: Vec<u32>,
    codomain: Vec<u32>,
    table: BTreeMap<String, String>,
}

impl CrystalMap {
    pub fn identity(shape: &Shape) -> Self {
        Self {
            domain: shape.clone(),
            codomain: shape.clone(),
            table: shape.words().into_iter().map(|w| (w.clone(), w)).collect(),
        }
    }

    pub fn from_fn(
        domain: &Shape,
        codomain: &Shape,
        f: impl Fn(&TensorWord) -> TensorWord,
    ) -> Self {
        Self {
            domain: domain.clone(),
            codomain: codomain.clone(),
            table: domain
                .words()
                .into_iter()
                .map(|w| {
                    let v = f(&w);
                    (w, v)
                })
                .collect(),
        }
    }

    /// Inclusion of `B_m` as the component with index `component` of `shape`.
    pub fn inclusion(shape: &Shape, component: usize) -> Self {
        let dec = decompose(shape);
        let comp = &dec.components[component];
        let m = comp.highest_weight;
        let source = Shape::new([m]);
        Self {
            domain: source.clone(),
            codomain: shape.clone(),
            table: source
                .words()
                .into_iter()
                .zip(comp.chain.iter().cloned())
                .collect(),
        }
    }

    pub fn apply(&self, w: &TensorWord) -> Option<&TensorWord> {
        self.table.get(w)
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &CrystalMap) -> Result<CrystalMap> {
        if first.codomain != self.domain {
            return Err(Error::Domain(format!(
                "cannot compose: codomain {} vs domain {}",
                first.codomain, self.domain
            )));
        }
        let table = first
            .table
            .iter()
            .map(|(w, v)| (w.clone(), self.table[v].clone()))
            .collect();
        Ok(CrystalMap {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            table,
        })
    }

    /// `id_prefix ⊗ self ⊗ id_suffix`.
    pub fn padded(&self, prefix: &Shape, suffix: &Shape) -> CrystalMap {
        let domain = prefix.concat(&self.domain).concat(suffix);
        let codomain = prefix.concat(&self.codomain).concat(suffix);
        let (a, b) = (prefix.len(), prefix.len() + self.domain.len());
        CrystalMap::from_fn(&domain, &codomain, |w| {
            w.slice(0..a)
                .concat(&self.table[&w.slice(a..b)])
                .concat(&w.slice(b..w.len()))
        })
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.table.iter().all(|(w, v)| w == v)
    }

    pub fn is_bijective(&self) -> bool {
        let image: BTreeSet<_> = self.table.values().collect();
        image.len() == self.table.len() && image.len() == self.codomain.cardinality()
    }

    /// First word at which the map fails to be a crystal morphism: it must
    /// preserve wt, ε, φ and commute with ẽ, f̃ (zero going to zero).
    pub fn morphism_violation(&self) -> Option<TensorWord> {
        self.table
            .iter()
            .find(|(w, v)| {
                w.wt() != v.wt()
                    || w.eps() != v.eps()
                    || w.phi() != v.phi()
                    || w.f_tilde().map(|x| self.table[&x].clone()) != v.f_tilde()
                    || w.e_tilde().map(|x| self.table[&x].clone()) != v.e_tilde()
            })
            .map(|(w, _)| w.clone())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_bijective() && self.morphism_violation().is_none()
    }

    pub fn to_json(&self) -> String {
        let j = CrystalMapJson {
            domain: self.domain.0.clone(),
            codomain: self.codomain.0.clone(),
            table: self
                .table
                .iter()
                .map(|(w, v)| (w.to_string(), v.to_string()))
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: CrystalMapJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let domain = Shape(j.domain);
        let codomain = Shape(j.codomain);
        let mut table = BTreeMap::new();
        for (w, v) in &j.table {
            table.insert(
                TensorWord::parse(&domain, w)?,
                TensorWord::parse(&codomain, v)?,
            );
        }
        if table.len() != domain.cardinality() {
            return Err(Error::Parse("crystal map table is not total".into()));
        }
        Ok(Self {
            domain,
            codomain,
            table,
        })
    }
}

/// All crystal isomorphisms between two shapes, by backtracking over
/// assignments that preserve wt, ε, φ.
pub fn isomorphisms(domain: &Shape, codomain: &Shape) -> Vec<CrystalMap> {
    let src = domain.words();
    let dst = codomain.words();
    if src.len() != dst.len() {
        return Vec::new();
    }
    let key = |w: &TensorWord| (w.wt(), w.eps(), w.phi());
    let candidates: Vec<Vec<usize>> = src
        .iter()
        .map(|w| (0..dst.len()).filter(|&i| key(&dst[i]) == key(w)).collect())
        .collect();

    let mut found = Vec::new();
    let mut used = vec![false; dst.len()];
    let mut assign: Vec<usize> = Vec::with_capacity(src.len());
    fn go(
        k: usize,
        candidates: &[Vec<usize>],
        used: &mut [bool],
        assign: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == candidates.len() {
            out.push(assign.clone());
            return;
        }
        for &c in &candidates[k] {
            if !used[c] {
                used[c] = true;
                assign.push(c);
                go(k + 1, candidates, used, assign, out);
                assign.pop();
                used[c] = false;
            }
        }
    }
    let mut raw = Vec::new();
    go(0, &candidates, &mut used, &mut assign, &mut raw);
    for a in raw {
        let map = CrystalMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            table: src
                .iter()
                .cloned()
                .zip(a.iter().map(|&i| dst[i].clone()))
                .collect(),
        };
        if map.morphism_violation().is_none() {
            found.push(map);
        }
    }
    found
}
