use std::collections::{BTreeMap, BTreeSet};

use super::commutor::Commutor;
use super::map::CrystalMap;
use super::word::{Shape, TensorWord};
use crate::error::{Error, Result};
use crate::groups::{cactus_relation_instances, verify_action, CactusGen, Violation};

/// `σ^c_{p,q} = id ⊗ σ^c_{U_p, U_{p+1} ⊗ ... ⊗ U_q} ⊗ id` (1-based, inclusive).
pub fn sigma_pq<C: Commutor>(
    commutor: &C,
    shape: &Shape,
    p: usize,
    q: usize,
) -> Result<CrystalMap> {
    check_interval(shape, p, q)?;
    let inner = commutor.commute(&shape.slice(p - 1..p), &shape.slice(p..q))?;
    Ok(inner.padded(&shape.slice(0..p - 1), &shape.slice(q..shape.len())))
}

fn check_interval(shape: &Shape, p: usize, q: usize) -> Result<()> {
    if p == 0 || p > q || q > shape.len() {
        return Err(Error::Index(format!(
            "s({p},{q}) on a {}-factor shape",
            shape.len()
        )));
    }
    Ok(())
}

/// `s_{p,q}` on `shape`: `s_{p,p} = id`, `s_{p,q} = σ^c_{p,q} ∘ s_{p+1,q}`.
pub fn cactus_action_with<C: Commutor>(
    commutor: &C,
    shape: &Shape,
    p: usize,
    q: usize,
) -> Result<CrystalMap> {
    check_interval(shape, p, q)?;
    if p == q {
        return Ok(CrystalMap::identity(shape));
    }
    let inner = cactus_action_with(commutor, shape, p + 1, q)?;
    let outer = sigma_pq(commutor, &inner.codomain, p, q)?;
    outer.after(&inner)
}

/// `s_{p,q}` built from the crystal commutor `σ^c`.
pub fn cactus_action(shape: &Shape, p: usize, q: usize) -> Result<CrystalMap> {
    cactus_action_with(&super::KashiwaraCommutor, shape, p, q)
}

/// Distinct rearrangements of a shape's factors.
pub fn shape_orbit(shape: &Shape) -> Vec<Shape> {
    fn go(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut BTreeSet<Vec<u32>>) {
        if rest.is_empty() {
            out.insert(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = BTreeSet::new();
    go(&mut shape.0.clone(), &mut Vec::new(), &mut out);
    out.into_iter().map(Shape).collect()
}

/// Runs the `J_k` presentation against the `s_{p,q}` maps. The acting set is
/// every word of every rearrangement of `shape`, since `s_{p,q}` permutes
/// factors.
pub fn check_cactus_action_with<C: Commutor>(
    commutor: &C,
    shape: &Shape,
) -> Result<Vec<Violation>> {
    let k = shape.len();
    let orbit = shape_orbit(shape);
    let domain: Vec<TensorWord> = orbit.iter().flat_map(Shape::words).collect();
    let mut images: BTreeMap<CactusGen, BTreeMap<TensorWord, TensorWord>> = BTreeMap::new();
    for p in 1..=k {
        for q in p + 1..=k {
            let mut table = BTreeMap::new();
            for s in &orbit {
                table.extend(cactus_action_with(commutor, s, p, q)?.table);
            }
            images.insert(CactusGen::new(p, q), table);
        }
    }
    let report = verify_action(&domain, &images, &cactus_relation_instances(k))?;
    Ok(report
        .into_iter()
        .map(|v| Violation {
            relation: format!("{} on shape {}", v.relation, shape),
            witness: v.witness,
        })
        .collect())
}

pub fn check_cactus_action(shape: &Shape) -> Result<Vec<Violation>> {
    check_cactus_action_with(&super::KashiwaraCommutor, shape)
}

/// Every `k`-factor shape with weights in `0..=max`.
pub fn shapes_up_to(factors: usize, max: u32) -> Vec<Shape> {
    let mut out = vec![Vec::new()];
    for _ in 0..factors {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max).map(move |n| {
                    let mut w = v.clone();
                    w.push(n);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Shape).collect()
}

/// Every triple of single-chain objects `(B_a, B_b, B_c)` with weights `<= max`.
pub fn chain_triples(max: u32) -> Vec<(Shape, Shape, Shape)> {
    shapes_up_to(3, max)
        .into_iter()
        .map(|s| {
            (
                Shape::new([s.0[0]]),
                Shape::new([s.0[1]]),
                Shape::new([s.0[2]]),
            )
        })
        .collect()
}

/// Triples over the objects `B_a` (`a <= max`) and `B_a ⊗ B_b` (`a, b >= 1`, `a + b <= max + 1`).
pub fn coboundary_triples(max: u32) -> Vec<(Shape, Shape, Shape)> {
    let mut objects: Vec<Shape> = (0..=max).map(|a| Shape::new([a])).collect();
    for a in 1..=max {
        for b in 1..=max + 1 - a {
            objects.push(Shape::new([a, b]));
        }
    }
    let mut out = vec![];
    for a in &objects {
        for b in &objects {
            for c in &objects {
                out.push((a.clone(), b.clone(), c.clone()));
            }
        }
    }
    out
}

fn first_difference(lhs: &CrystalMap, rhs: &CrystalMap) -> Option<TensorWord> {
    lhs.table
        .iter()
        .find(|(w, v)| rhs.table.get(*w) != Some(v))
        .map(|(w, _)| w.clone())
}

/// Coboundary axioms on each triple `(A, B, C)`, checked on every word:
/// `σ_{B,A} ∘ σ_{A,B} = id` and the cactus relation
/// `σ_{B⊗A,C} ∘ (σ_{A,B} ⊗ id) = σ_{A,C⊗B} ∘ (id ⊗ σ_{B,C})`.
pub fn check_coboundary<C: Commutor>(
    commutor: &C,
    triples: &[(Shape, Shape, Shape)],
) -> Result<Vec<Violation>> {
    let mut report = Vec::new();
    let none = Shape::default();
    for (a, b, c) in triples {
        let ab = commutor.commute(a, b)?;
        let ba = commutor.commute(b, a)?;
        let round_trip = ba.after(&ab)?;
        if let Some(w) = round_trip
            .table
            .iter()
            .find(|(w, v)| w != v)
            .map(|(w, _)| w)
        {
            report.push(Violation {
                relation: format!("σ({b};{a}) ∘ σ({a};{b}) = id"),
                witness: w.to_string(),
            });
        }

        let lhs = commutor
            .commute(&b.concat(a), c)?
            .after(&ab.padded(&none, c))?;
        let rhs = commutor
            .commute(a, &c.concat(b))?
            .after(&commutor.commute(b, c)?.padded(a, &none))?;
        if let Some(w) = first_difference(&lhs, &rhs) {
            report.push(Violation {
                relation: format!("cactus relation for ({a};{b};{c})"),
                witness: w.to_string(),
            });
        }
    }
    Ok(report)
}

/// Naturality against a morphism `j : X -> Y` in both slots:
/// `σ_{Z,Y} ∘ (id_Z ⊗ j) = (j ⊗ id_Z) ∘ σ_{Z,X}` and
/// `σ_{Y,Z} ∘ (j ⊗ id_Z) = (id_Z ⊗ j) ∘ σ_{X,Z}`.
pub fn naturality_violation<C: Commutor>(
    commutor: &C,
    z: &Shape,
    j: &CrystalMap,
) -> Result<Option<TensorWord>> {
    let none = Shape::default();
    let lhs = commutor
        .commute(z, &j.codomain)?
        .after(&j.padded(z, &none))?;
    let rhs = j.padded(&none, z).after(&commutor.commute(z, &j.domain)?)?;
    if let Some(w) = first_difference(&lhs, &rhs) {
        return Ok(Some(w));
    }
    let lhs = commutor
        .commute(&j.codomain, z)?
        .after(&j.padded(&none, z))?;
    let rhs = j.padded(z, &none).after(&commutor.commute(&j.domain, z)?)?;
    Ok(first_difference(&lhs, &rhs))
}
