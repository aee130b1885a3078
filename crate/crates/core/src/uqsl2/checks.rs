use serde::Serialize;

use crate::crystals::{commutor_c, decompose, Shape};
use crate::error::Result;

use super::braiding::{braiding, lattice_check_and_reduce, unitarized, SignTable};
use super::matrix::QMatrix;
use super::module::{irreducible, tensor_module, UqModule};

/// Whether `map : M ⊗ N -> N ⊗ M` commutes with `E`, `F`, `K`.
pub fn intertwiner_violations(map: &QMatrix, m: &UqModule, n: &UqModule) -> Result<Vec<String>> {
    let (mn, nm) = (tensor_module(m, n), tensor_module(n, m));
    let mut bad = vec![];
    for (name, a, b) in [
        ("E", mn.e(), nm.e()),
        ("F", mn.f(), nm.f()),
        ("K", mn.k(), nm.k()),
    ] {
        if map.checked_mul(a)? != b.checked_mul(map)? {
            bad.push(format!("{name} on {}⊗{}", m.shape(), n.shape()));
        }
    }
    Ok(bad)
}

/// `(σ⊗1)(1⊗σ)(σ⊗1) = (1⊗σ)(σ⊗1)(1⊗σ)` for `σ = flip ∘ R` on `V_1^{⊗3}`.
pub fn yang_baxter_v1() -> Result<bool> {
    let v = irreducible(1);
    let s = braiding(&v, &v)?;
    let i = QMatrix::identity(2);
    let (a, b) = (s.tensor(&i), i.tensor(&s));
    let lhs = a.checked_mul(&b)?.checked_mul(&a)?;
    let rhs = b.checked_mul(&a)?.checked_mul(&b)?;
    Ok(lhs == rhs)
}

/// `σ_{B⊗A,C} (σ_{A,B} ⊗ 1) = σ_{A,C⊗B} (1 ⊗ σ_{B,C})` as maps `A⊗B⊗C -> C⊗B⊗A`.
pub fn cactus_relation_holds(
    sigma: impl Fn(&UqModule, &UqModule) -> Result<QMatrix>,
    a: &UqModule,
    b: &UqModule,
    c: &UqModule,
) -> Result<bool> {
    let ic = QMatrix::identity(c.dim());
    let ia = QMatrix::identity(a.dim());
    let lhs = sigma(&tensor_module(b, a), c)?.checked_mul(&sigma(a, b)?.tensor(&ic))?;
    let rhs = sigma(a, &tensor_module(c, b))?.checked_mul(&ia.tensor(&sigma(b, c)?))?;
    Ok(lhs == rhs)
}

/// `σ_{N,M} σ_{M,N} = 1` for `σ = flip ∘ R̄`.
pub fn unitarized_is_involutive(m: &UqModule, n: &UqModule) -> Result<bool> {
    Ok(unitarized(n, m)?
        .checked_mul(&unitarized(m, n)?)?
        .is_identity())
}

/// `flip ∘ R` at `q = 1`, entrywise.
pub fn classical_limit(m: &UqModule, n: &UqModule) -> Result<Vec<Vec<num::BigRational>>> {
    braiding(m, n)?.try_map(|x| x.at_q_one())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Kt07Mismatch {
    pub word: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Kt07Report {
    pub m: u32,
    pub n: u32,
    /// Sign `(-1)^{(m+n-ν)/2}` per basis word of `B_m ⊗ B_n`.
    pub signs: Vec<(String, i8)>,
    pub mismatch: Option<Kt07Mismatch>,
}

impl Kt07Report {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compare the reduction of `flip ∘ R̄` on `V_m ⊗ V_n` with the signed crystal commutor
/// `b ↦ (-1)^{(m+n-ν)/2} σ^c(b)`, `ν` the highest weight of the component of `b`.
pub fn verify_kt07(m: u32, n: u32) -> Result<Kt07Report> {
    let (vm, vn) = (irreducible(m), irreducible(n));
    let table = lattice_check_and_reduce(&unitarized(&vm, &vn)?, &vm, &vn)?;
    let (sa, sb) = (Shape::new([m]), Shape::new([n]));
    let sigma = commutor_c(&sa, &sb)?;
    let dec = decompose(&sa.concat(&sb));
    let nm = tensor_module(&vn, &vm);
    let render = |row: usize, sign: i8| {
        format!("{}{}", if sign < 0 { "-" } else { "+" }, nm.basis_word(row))
    };
    let mut signs = vec![];
    let mut mismatch = None;
    let mn = tensor_module(&vm, &vn);
    for j in 0..mn.dim() {
        let w = mn.basis_word(j);
        let nu = dec
            .component_of(&w)
            .expect("decomposition covers every word")
            .highest_weight;
        let sign: i8 = if ((m + n - nu) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        };
        signs.push((w.to_string(), sign));
        let target = nm.index_of(sigma.apply(&w).expect("total map"))?;
        let (row, got) = table.image(j);
        if mismatch.is_none() && (row, got) != (target, sign) {
            mismatch = Some(Kt07Mismatch {
                word: w.to_string(),
                expected: render(target, sign),
                got: render(row, got),
            });
        }
    }
    Ok(Kt07Report {
        m,
        n,
        signs,
        mismatch,
    })
}

/// The reduction of `flip ∘ R̄` on `V_m ⊗ V_n`.
pub fn reduced_unitarized(m: u32, n: u32) -> Result<SignTable> {
    let (vm, vn) = (irreducible(m), irreducible(n));
    lattice_check_and_reduce(&unitarized(&vm, &vn)?, &vm, &vn)
}
