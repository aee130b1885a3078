use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::perm::s_hat;
use super::words::{BraidLetter, CactusGen};
use crate::error::{Error, Result};

/// A defining relation `lhs = rhs`, both sides read as composites of maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<G> {
    pub lhs: Vec<G>,
    pub rhs: Vec<G>,
}

impl<G> Relation<G> {
    pub fn new(lhs: Vec<G>, rhs: Vec<G>) -> Self {
        Self { lhs, rhs }
    }
}

fn side<G: fmt::Display>(f: &mut fmt::Formatter<'_>, w: &[G]) -> fmt::Result {
    if w.is_empty() {
        return write!(f, "e");
    }
    for (i, g) in w.iter().enumerate() {
        if i > 0 {
            write!(f, ".")?;
        }
        write!(f, "{g}")?;
    }
    Ok(())
}

impl<G: fmt::Display> fmt::Display for Relation<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        side(f, &self.lhs)?;
        write!(f, " = ")?;
        side(f, &self.rhs)
    }
}

/// All relator pairs of the presentation of `J_n`: squares, commutation of
/// disjoint intervals, and the containment relations
/// `s_{p,q} s_{k,l} = s_{r,t} s_{p,q}` with `r = ŝ_{p,q}(l)`, `t = ŝ_{p,q}(k)`.
pub fn cactus_relation_instances(n: usize) -> Vec<Relation<CactusGen>> {
    let gens: Vec<CactusGen> = (1..=n)
        .flat_map(|p| (p + 1..=n).map(move |q| CactusGen::new(p, q)))
        .collect();
    let mut out = Vec::new();
    for &g in &gens {
        out.push(Relation::new(vec![g, g], vec![]));
    }
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            if a.disjoint(&b) {
                out.push(Relation::new(vec![a, b], vec![b, a]));
            }
        }
    }
    for &outer in &gens {
        let hat = s_hat(outer.p, outer.q, n).expect("generator in range");
        for &inner in &gens {
            if inner != outer && outer.contains(&inner) {
                let r = hat.apply(inner.q);
                let t = hat.apply(inner.p);
                out.push(Relation::new(
                    vec![outer, inner],
                    vec![CactusGen::new(r, t), outer],
                ));
            }
        }
    }
    out
}

/// Braid relations of `B_n` (far commutation and Yang-Baxter).
pub fn braid_relation_instances(n: usize) -> Vec<Relation<BraidLetter>> {
    let g = |index| BraidLetter {
        index,
        inverse: false,
    };
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            out.push(Relation::new(vec![g(i), g(j)], vec![g(j), g(i)]));
        }
    }
    for i in 1..n.saturating_sub(1) {
        out.push(Relation::new(
            vec![g(i), g(i + 1), g(i)],
            vec![g(i + 1), g(i), g(i + 1)],
        ));
    }
    out
}

/// A failed relation together with an element on which the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub relation: String,
    pub witness: String,
}

/// Checks every relation pointwise on `domain`, where each generator acts by
/// an explicit finite table. Returns one violation (with witness) per failed
/// relation; an empty list means the assignment respects the presentation.
pub fn verify_action<G, T>(
    domain: &[T],
    images: &BTreeMap<G, BTreeMap<T, T>>,
    relations: &[Relation<G>],
) -> Result<Vec<Violation>>
where
    G: Ord + fmt::Display,
    T: Ord + Clone + fmt::Display,
{
    let dom: BTreeSet<&T> = domain.iter().collect();
    for (g, table) in images {
        if table.len() != dom.len() || !table.keys().all(|k| dom.contains(k)) {
            return Err(Error::Domain(format!(
                "image of {g} is not defined on the common domain"
            )));
        }
        if let Some(v) = table.values().find(|v| !dom.contains(v)) {
            return Err(Error::Domain(format!(
                "image of {g} leaves the domain at {v}"
            )));
        }
    }
    for rel in relations {
        if let Some(g) = rel
            .lhs
            .iter()
            .chain(&rel.rhs)
            .find(|g| !images.contains_key(g))
        {
            return Err(Error::Domain(format!("no image assigned to {g}")));
        }
    }

    let act = |word: &[G], x: &T| -> T {
        word.iter()
            .rev()
            .fold(x.clone(), |acc, g| images[g][&acc].clone())
    };
    let mut report = Vec::new();
    for rel in relations {
        if let Some(x) = domain.iter().find(|x| act(&rel.lhs, x) != act(&rel.rhs, x)) {
            report.push(Violation {
                relation: rel.to_string(),
                witness: x.to_string(),
            });
        }
    }
    Ok(report)
}
