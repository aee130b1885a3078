//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use coboundary::crystals::{
    braiding_obstruction, chain_triples, check_cactus_action, check_coboundary, coboundary_triples,
    commutor_c, commutor_s, decompose, shapes_up_to, KashiwaraCommutor, Shape, TensorWord,
};
use coboundary::qexact::QRational;
use coboundary::uqsl2::{
    braiding_matrix, cactus_relation_holds, inverse_sqrt_matrix, irreducible,
    lattice_check_and_reduce, tensor_module, unitarized, unitarized_is_involutive,
    unitarized_matrix, verify_kt07, yang_baxter_v1, Frame, QMatrix,
};
use coboundary::Error;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn q(s: &str) -> QRational {
    s.parse().expect("literal parses")
}

fn mat(rows: &[&[&str]]) -> QMatrix {
    QMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|x| q(x)).collect())
            .collect(),
    )
    .unwrap()
}

fn shape(v: &[u32]) -> Shape {
    Shape::new(v)
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

// q^{-1/2} [[q,0,0,0],[0,q-q^{-1},1,0],[0,1,0,0],[0,0,0,q]] with q = Q^2.
fn expected_flip_r_s1() -> QMatrix {
    mat(&[
        &["Q^2", "0", "0", "0"],
        &["0", "Q^2 - Q^-2", "1", "0"],
        &["0", "1", "0", "0"],
        &["0", "0", "0", "Q^2"],
    ])
    .scale(&q("Q^-1"))
}

fn criterion_1() -> Outcome {
    let v1 = irreducible(1);
    let got = braiding_matrix(&v1, &v1, Frame::S1).map_err(e)?;
    ensure(got == expected_flip_r_s1(), format!("flip∘R in S1:\n{got}"))?;
    Ok("flip∘R on V1⊗V1 in S1 matches entrywise".into())
}

fn criterion_2() -> Outcome {
    let v1 = irreducible(1);
    let got = braiding_matrix(&v1, &v1, Frame::S2).map_err(e)?;
    let want = QMatrix::diagonal(&[q("Q"), q("-Q^-3"), q("Q"), q("Q")]);
    ensure(got == want, format!("flip∘R in S2:\n{got}"))?;
    Ok("flip∘R on V1⊗V1 in S2 = diag(q^1/2, -q^-3/2, q^1/2, q^1/2)".into())
}

fn criterion_3() -> Outcome {
    let v1 = irreducible(1);
    let s1 = unitarized_matrix(&v1, &v1, Frame::S1).map_err(e)?;
    let den = "(1 + Q^4)";
    let want_s1 = mat(&[
        &["1", "0", "0", "0"],
        &[
            "0",
            &format!("(Q^4 - 1)/{den}"),
            &format!("(2*Q^2)/{den}"),
            "0",
        ],
        &[
            "0",
            &format!("(2*Q^2)/{den}"),
            &format!("(1 - Q^4)/{den}"),
            "0",
        ],
        &["0", "0", "0", "1"],
    ]);
    ensure(s1 == want_s1, format!("flip∘R̄ in S1:\n{s1}"))?;
    let s2 = unitarized_matrix(&v1, &v1, Frame::S2).map_err(e)?;
    let want_s2 = QMatrix::diagonal(&[q("1"), q("-1"), q("1"), q("1")]);
    ensure(s2 == want_s2, format!("flip∘R̄ in S2:\n{s2}"))?;
    let x = inverse_sqrt_matrix(&v1, &v1, Frame::S1).map_err(e)?;
    let want_x = mat(&[
        &["1", "0", "0", "0"],
        &[
            "0",
            &format!("(2*Q^4)/{den}"),
            &format!("(Q^2 - Q^6)/{den}"),
            "0",
        ],
        &[
            "0",
            &format!("(Q^2 - Q^6)/{den}"),
            &format!("(1 + Q^8)/{den}"),
            "0",
        ],
        &["0", "0", "0", "1"],
    ])
    .scale(&q("Q^-1"));
    ensure(x == want_x, format!("(R^op R)^(-1/2) in S1:\n{x}"))?;
    Ok("flip∘R̄ in S1 and S2 and (R^op R)^(-1/2) in S1 match".into())
}

fn criterion_4() -> Outcome {
    let v1 = irreducible(1);
    let u = unitarized(&v1, &v1).map_err(e)?;
    let table = lattice_check_and_reduce(&u, &v1, &v1).map_err(e)?;
    let want = vec![
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, -1, 0],
        vec![0, 0, 0, 1],
    ];
    ensure(table.0 == want, format!("reduction of flip∘R̄:\n{table}"))?;
    let b = braiding_matrix(&v1, &v1, Frame::S1).map_err(e)?;
    match lattice_check_and_reduce(&b, &v1, &v1) {
        Err(err @ Error::LatticeNotPreserved { .. }) => {
            ensure(
                err.to_string().starts_with("lattice not preserved"),
                err.to_string(),
            )?;
        }
        other => {
            return Err(format!(
                "flip∘R should not preserve the lattice, got {other:?}"
            ))
        }
    }
    Ok("flip∘R̄ reduces to diag(1,1,-1,1); flip∘R raises lattice-not-preserved".into())
}

fn criterion_5() -> Outcome {
    ensure(
        yang_baxter_v1().map_err(e)?,
        "Yang-Baxter fails for flip∘R on V1^⊗3",
    )?;
    let v1 = irreducible(1);
    ensure(
        cactus_relation_holds(unitarized, &v1, &v1, &v1).map_err(e)?,
        "cactus relation fails on V1^⊗3",
    )?;
    ensure(
        unitarized_is_involutive(&tensor_module(&v1, &v1), &v1).map_err(e)?,
        "involutivity fails on (V1⊗V1)⊗V1",
    )?;
    let mut triples = 0;
    let mut weights: Vec<(u32, u32, u32)> = vec![(2, 1, 1), (1, 2, 1), (1, 1, 2)];
    weights.extend((0..8).map(|i| (i & 1, (i >> 1) & 1, (i >> 2) & 1)));
    for (a, b, c) in weights {
        let (va, vb, vc) = (irreducible(a), irreducible(b), irreducible(c));
        let ok = cactus_relation_holds(unitarized, &va, &vb, &vc).map_err(e)?;
        ensure(ok, format!("cactus relation fails on V{a}⊗V{b}⊗V{c}"))?;
        triples += 1;
    }
    let mut pairs = 0;
    for m in 0..=3 {
        for n in 0..=3 {
            let ok = unitarized_is_involutive(&irreducible(m), &irreducible(n)).map_err(e)?;
            ensure(ok, format!("flip∘R̄ not involutive on V{m}⊗V{n}"))?;
            pairs += 1;
        }
    }
    Ok(format!(
        "Yang-Baxter (flip∘R) on V1^⊗3; cactus relation (flip∘R̄) on {triples} triples V_a⊗V_b⊗V_c (weights ≤ 1, and permutations of (2,1,1)); involutive on {pairs} pairs V_m⊗V_n (m,n ≤ 3)"
    ))
}

fn criterion_6() -> Outcome {
    let chains = chain_triples(2);
    ensure(
        chains.len() == 27,
        format!("{} chain triples", chains.len()),
    )?;
    let vs = check_coboundary(&KashiwaraCommutor, &chains).map_err(e)?;
    ensure(vs.is_empty(), format!("chain triples: {vs:?}"))?;
    let wide = coboundary_triples(2);
    let vs = check_coboundary(&KashiwaraCommutor, &wide).map_err(e)?;
    ensure(vs.is_empty(), format!("composite triples: {vs:?}"))?;
    let shapes = shapes_up_to(4, 2);
    ensure(
        shapes.len() == 81,
        format!("{} four-factor shapes", shapes.len()),
    )?;
    for s in &shapes {
        let vs = check_cactus_action(s).map_err(e)?;
        ensure(vs.is_empty(), format!("J_4 relations on {s}: {vs:?}"))?;
    }
    Ok(format!(
        "coboundary axioms on {} chain + {} composite triples; J_4 acts on all {} four-factor shapes",
        chains.len(),
        wide.len(),
        shapes.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut words = 0;
    for a in 0..=5 {
        for b in 0..=5 {
            let (sa, sb) = (shape(&[a]), shape(&[b]));
            let c = commutor_c(&sa, &sb).map_err(e)?;
            let s = commutor_s(&sa, &sb);
            ensure(c == s, format!("σ^S ≠ σ^c on B{a}⊗B{b}"))?;
            words += c.table.len();
        }
    }
    Ok(format!(
        "σ^S = σ^c on all 36 pairs (a,b ≤ 5), {words} words"
    ))
}

fn criterion_8() -> Outcome {
    let w = braiding_obstruction().map_err(e)?;
    ensure(
        w.forced.to_string() == "b1⊗b1⊗b-1",
        format!("naturality-forced value {}", w.forced),
    )?;
    ensure(
        w.hexagon.to_string() == "b1⊗b-1⊗b1",
        format!("hexagon-forced value {}", w.hexagon),
    )?;
    ensure(
        w.forced != w.hexagon && w.obstructed,
        "values should differ",
    )?;
    Ok(format!("forced {} ≠ hexagon {}", w.forced, w.hexagon))
}

/// Highest weight element of the component containing `w`.
fn top(w: &TensorWord) -> TensorWord {
    let mut x = w.clone();
    while let Some(y) = x.e_tilde() {
        x = y;
    }
    x
}

/// The unique crystal isomorphism `B_m⊗B_n -> B_n⊗B_m`, found by matching highest weight
/// elements by weight and transporting along f̃.
fn oracle_isomorphism(m: u32, n: u32) -> BTreeMap<TensorWord, TensorWord> {
    let tops = |s: &Shape| -> BTreeMap<i32, TensorWord> {
        s.words()
            .into_iter()
            .filter(|w| w.e_tilde().is_none())
            .map(|w| (w.wt(), w))
            .collect()
    };
    let (src, dst) = (shape(&[m, n]), shape(&[n, m]));
    let target_tops = tops(&dst);
    let mut out = BTreeMap::new();
    for (wt, mut x) in tops(&src) {
        let mut y = target_tops[&wt].clone();
        loop {
            out.insert(x.clone(), y.clone());
            match (x.f_tilde(), y.f_tilde()) {
                (Some(a), Some(b)) => (x, y) = (a, b),
                (None, None) => break,
                _ => panic!("component lengths differ"),
            }
        }
    }
    out
}

fn criterion_9() -> Outcome {
    let mut cases = 0;
    for m in 0..=3u32 {
        for n in 0..=3u32 {
            let report = verify_kt07(m, n).map_err(e)?;
            ensure(report.passed(), format!("({m},{n}): {:?}", report.mismatch))?;

            // Independent cross-check against the brute-force isomorphism.
            let oracle = oracle_isomorphism(m, n);
            let c = commutor_c(&shape(&[m]), &shape(&[n])).map_err(e)?;
            ensure(c.table == oracle, format!("σ^c ≠ oracle on B{m}⊗B{n}"))?;
            let (vm, vn) = (irreducible(m), irreducible(n));
            let table =
                lattice_check_and_reduce(&unitarized(&vm, &vn).map_err(e)?, &vm, &vn).map_err(e)?;
            let index = |w: &TensorWord, first: u32| {
                w.0[0].depth() as usize + (first as usize + 1) * w.0[1].depth() as usize
            };
            for (w, img) in &oracle {
                let nu = top(w).wt();
                let sign: i8 = if ((m as i32 + n as i32 - nu) / 2) % 2 == 0 {
                    1
                } else {
                    -1
                };
                let (col, row) = (index(w, m), index(img, n));
                ensure(
                    table.0[row][col] == sign,
                    format!("({m},{n}) at {w}: expected {sign}·{img}"),
                )?;
                let nonzero = table.0.iter().filter(|r| r[col] != 0).count();
                ensure(
                    nonzero == 1,
                    format!("({m},{n}) column of {w} is not a signed unit vector"),
                )?;
            }
            cases += 1;
        }
    }
    Ok(format!(
        "reduced flip∘R̄ = signed σ^c on {cases} pairs (m,n ≤ 3), oracle-confirmed"
    ))
}

fn criterion_10() -> Outcome {
    for m in 0..=6u32 {
        for n in 0..=6u32 {
            let s = shape(&[m, n]);
            let ladder: Vec<u32> = (0..=m.min(n)).map(|k| m + n - 2 * k).collect();
            let got = decompose(&s);
            ensure(
                got.highest_weights() == ladder,
                format!("({m},{n}): {:?}", got.highest_weights()),
            )?;

            // Oracle 1: connected components under ẽ and f̃.
            let words = s.words();
            let mut seen = BTreeSet::new();
            let mut sizes = vec![];
            for w in &words {
                if seen.contains(w) {
                    continue;
                }
                let mut comp = BTreeSet::new();
                let mut queue = VecDeque::from([w.clone()]);
                while let Some(x) = queue.pop_front() {
                    if comp.insert(x.clone()) {
                        queue.extend(x.e_tilde());
                        queue.extend(x.f_tilde());
                    }
                }
                let max_wt = comp.iter().map(TensorWord::wt).max().unwrap();
                ensure(
                    comp.len() as i32 == max_wt + 1,
                    format!("({m},{n}): component is not a chain"),
                )?;
                let (ci, _) = got.locate(w).ok_or("word not located")?;
                let listed: BTreeSet<_> = got.components[ci].chain.iter().cloned().collect();
                ensure(
                    listed == comp,
                    format!("({m},{n}): component of {w} differs from closure"),
                )?;
                sizes.push(max_wt as u32);
                seen.extend(comp);
            }
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            ensure(
                sizes == ladder,
                format!("({m},{n}): closure gives {sizes:?}"),
            )?;

            // Oracle 2: multiplicity of V_ν is dim W_ν - dim W_{ν+2}.
            let mut dims: BTreeMap<i32, i32> = BTreeMap::new();
            for w in &words {
                *dims.entry(w.wt()).or_default() += 1;
            }
            for nu in (0..=(m + n) as i32).filter(|nu| (nu + (m + n) as i32) % 2 == 0) {
                let mult =
                    dims.get(&nu).copied().unwrap_or(0) - dims.get(&(nu + 2)).copied().unwrap_or(0);
                let expected = i32::from(ladder.contains(&(nu as u32)));
                ensure(
                    mult == expected,
                    format!("({m},{n}): multiplicity {mult} of V{nu}"),
                )?;
            }
        }
    }
    Ok(
        "Clebsch-Gordan ladder for all 49 shapes (m,n ≤ 6), matched by closure and weight counting"
            .into(),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("flip∘R on V1⊗V1, frame S1", criterion_1),
        ("flip∘R on V1⊗V1, frame S2", criterion_2),
        ("flip∘R̄ and (R^op R)^(-1/2) on V1⊗V1", criterion_3),
        ("lattice check and reduction", criterion_4),
        ("braid, cactus and involutivity identities", criterion_5),
        ("coboundary axioms and cactus group action", criterion_6),
        ("σ^S = σ^c", criterion_7),
        ("braiding obstruction", criterion_8),
        ("reduced flip∘R̄ is the signed crystal commutor", criterion_9),
        ("Clebsch-Gordan decomposition", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {name} — {detail} ({secs:.2}s)",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} — {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
