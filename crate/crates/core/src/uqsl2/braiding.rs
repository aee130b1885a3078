use std::fmt;
use std::sync::OnceLock;

use num::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qexact::{quantum_factorial, QRational};

use super::matrix::{Frame, QMatrix};
use super::module::{irreducible, tensor_module, UqModule};

/// `R = q^{H⊗H/2} Σ_k q^{k(k-1)/2} (q - q^{-1})^k / [k]! E^k ⊗ F^k` on `M ⊗ N`.
pub fn r_matrix(m: &UqModule, n: &UqModule) -> QMatrix {
    let dim = m.dim() * n.dim();
    let mut sum = QMatrix::zeros(dim, dim);
    let diff = &QRational::q_pow(1) - &QRational::q_pow(-1);
    let (mut ek, mut fk) = (QMatrix::identity(m.dim()), QMatrix::identity(n.dim()));
    for k in 0..m.dim().min(n.dim()) as u32 {
        let kk = k as i64;
        let c = &(&QRational::q_pow(kk * (kk - 1) / 2) * &diff.pow(kk).expect("nonzero"))
            * &quantum_factorial(k).inv().expect("nonzero");
        sum = sum
            .checked_add(&ek.tensor(&fk).scale(&c))
            .expect("same shape");
        ek = ek.checked_mul(m.e()).expect("square");
        fk = fk.checked_mul(n.f()).expect("square");
    }
    // q^{ab/2} on v_a ⊗ v_b is Q^{ab}.
    let pre: Vec<QRational> = n
        .weights()
        .iter()
        .flat_map(|&b| {
            m.weights()
                .iter()
                .map(move |&a| QRational::q_half_pow(a as i64 * b as i64))
        })
        .collect();
    QMatrix::diagonal(&pre)
        .checked_mul(&sum)
        .expect("same shape")
}

/// Permutation `M ⊗ N -> N ⊗ M` on product bases.
pub fn flip(dm: usize, dn: usize) -> QMatrix {
    let mut p = QMatrix::zeros(dm * dn, dm * dn);
    for i in 0..dm {
        for j in 0..dn {
            p.set(j + dn * i, i + dm * j, QRational::one());
        }
    }
    p
}

fn flip_r_raw(m: &UqModule, n: &UqModule) -> QMatrix {
    flip(m.dim(), n.dim())
        .checked_mul(&r_matrix(m, n))
        .expect("same shape")
}

/// The braiding on `V_1 ⊗ V_1` in the product frame that all conventions are pinned to.
pub fn reference_v1_braiding() -> QMatrix {
    let z = QRational::zero;
    let qh = QRational::q_half_pow;
    let rows = vec![
        vec![qh(1), z(), z(), z()],
        vec![z(), &qh(1) - &qh(-3), qh(-1), z()],
        vec![z(), qh(-1), z(), z()],
        vec![z(), z(), z(), qh(1)],
    ];
    QMatrix::from_rows(rows).expect("square")
}

fn calibrate() -> Result<()> {
    static CHECK: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    CHECK
        .get_or_init(|| {
            let got = flip_r_raw(&irreducible(1), &irreducible(1));
            if got == reference_v1_braiding() {
                Ok(())
            } else {
                Err(format!("V1⊗V1 braiding came out as\n{got}"))
            }
        })
        .clone()
        .map_err(Error::Calibration)
}

/// `flip ∘ R : M ⊗ N -> N ⊗ M` in the product frames.
pub fn braiding(m: &UqModule, n: &UqModule) -> Result<QMatrix> {
    calibrate()?;
    Ok(flip_r_raw(m, n))
}

/// Rewrite a map `M ⊗ N -> N ⊗ M` given on product frames in the requested frames.
pub fn in_frame(map: &QMatrix, m: &UqModule, n: &UqModule, frame: Frame) -> Result<QMatrix> {
    match frame {
        Frame::S1 => Ok(map.clone()),
        Frame::S2 => {
            let src = tensor_module(m, n).frame_basis(Frame::S2);
            let dst = tensor_module(n, m).frame_basis(Frame::S2);
            dst.inverse()?.checked_mul(map)?.checked_mul(&src)
        }
    }
}

pub fn braiding_matrix(m: &UqModule, n: &UqModule, frame: Frame) -> Result<QMatrix> {
    in_frame(&braiding(m, n)?, m, n, frame)
}

/// Intermediate and final matrices of the unitarization `flip ∘ R̄ = flip ∘ R (R^op R)^{-1/2}`,
/// all in product frames.
#[derive(Clone, Debug)]
pub struct Unitarization {
    pub braiding: QMatrix,
    /// `R^op R` as an endomorphism of `M ⊗ N`.
    pub ropr: QMatrix,
    pub inv_sqrt: QMatrix,
    pub unitarized: QMatrix,
}

fn inverse_sqrt(c: &QMatrix, mn: &UqModule) -> Result<QMatrix> {
    let p = mn.frame_basis(Frame::S2);
    let p_inv = p.inverse()?;
    let d = p_inv.checked_mul(c)?.checked_mul(&p)?;
    if !d.is_diagonal() {
        return Err(Error::NonScalarBlock(format!("R^op R on {}", mn.shape())));
    }
    let roots = d
        .diag()
        .iter()
        .map(|x| x.monomial_sqrt()?.inv())
        .collect::<Result<Vec<_>>>()?;
    p.checked_mul(&QMatrix::diagonal(&roots))?
        .checked_mul(&p_inv)
}

pub fn unitarize(m: &UqModule, n: &UqModule) -> Result<Unitarization> {
    let b_mn = braiding(m, n)?;
    let b_nm = braiding(n, m)?;
    if m.is_irreducible() && n.is_irreducible() && !in_frame(&b_mn, m, n, Frame::S2)?.is_diagonal()
    {
        return Err(Error::NonScalarBlock(format!(
            "flip∘R on {}⊗{}",
            m.shape(),
            n.shape()
        )));
    }
    let ropr = b_nm.checked_mul(&b_mn)?;
    let inv_sqrt = inverse_sqrt(&ropr, &tensor_module(m, n))?;
    let unitarized = b_mn.checked_mul(&inv_sqrt)?;
    let back = b_nm.checked_mul(&inverse_sqrt(
        &b_mn.checked_mul(&b_nm)?,
        &tensor_module(n, m),
    )?)?;
    if !back.checked_mul(&unitarized)?.is_identity() {
        return Err(Error::Invariant(format!(
            "unitarized commutor on {}⊗{} is not involutive",
            m.shape(),
            n.shape()
        )));
    }
    Ok(Unitarization {
        braiding: b_mn,
        ropr,
        inv_sqrt,
        unitarized,
    })
}

/// `flip ∘ R̄ : M ⊗ N -> N ⊗ M` in the product frames.
pub fn unitarized(m: &UqModule, n: &UqModule) -> Result<QMatrix> {
    Ok(unitarize(m, n)?.unitarized)
}

pub fn unitarized_matrix(m: &UqModule, n: &UqModule, frame: Frame) -> Result<QMatrix> {
    in_frame(&unitarized(m, n)?, m, n, frame)
}

/// `(R^op R)^{-1/2}` on `M ⊗ N`; in `S2` the source and target frames are both that of `M ⊗ N`.
pub fn inverse_sqrt_matrix(m: &UqModule, n: &UqModule, frame: Frame) -> Result<QMatrix> {
    let x = unitarize(m, n)?.inv_sqrt;
    match frame {
        Frame::S1 => Ok(x),
        Frame::S2 => {
            let p = tensor_module(m, n).frame_basis(Frame::S2);
            p.inverse()?.checked_mul(&x)?.checked_mul(&p)
        }
    }
}

/// A matrix over `{0, ±1}` with exactly one nonzero entry in each row and column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignTable(pub Vec<Vec<i8>>);

impl SignTable {
    pub fn identity(n: usize) -> Self {
        Self(
            (0..n)
                .map(|i| (0..n).map(|j| (i == j) as i8).collect())
                .collect(),
        )
    }

    /// `(row, sign)` of the nonzero entry in column `j`.
    pub fn image(&self, j: usize) -> (usize, i8) {
        self.0
            .iter()
            .enumerate()
            .find(|(_, r)| r[j] != 0)
            .map(|(i, r)| (i, r[j]))
            .expect("signed permutation")
    }
}

impl fmt::Display for SignTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "[{} ]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Check that a map `M ⊗ N -> N ⊗ M` (product frames) preserves the crystal lattices and
/// reduce it modulo `q^{-1/2}`.
pub fn lattice_check_and_reduce(map: &QMatrix, m: &UqModule, n: &UqModule) -> Result<SignTable> {
    let d = m.dim() * n.dim();
    if map.rows() != d || map.cols() != d {
        return Err(Error::Domain(format!(
            "{}x{} matrix on a {d}-dimensional product",
            map.rows(),
            map.cols()
        )));
    }
    if let Some((row, col, x)) = map.entries().find(|(_, _, x)| !x.is_regular_at_infinity()) {
        return Err(Error::LatticeNotPreserved {
            row,
            col,
            entry: x.to_string(),
        });
    }
    let reduced = map.try_map(|x| x.reduce_mod_qhalf())?;
    let mut table = vec![vec![0i8; d]; d];
    for (i, row) in reduced.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            table[i][j] = match x.to_integer().to_i8() {
                Some(v @ -1..=1) if x.is_integer() => v,
                _ => return Err(Error::NotSignedPermutation),
            };
        }
    }
    let unit = |it: &mut dyn Iterator<Item = i8>| it.filter(|&x| x != 0).count() == 1;
    let rows_ok = table.iter().all(|r| unit(&mut r.iter().copied()));
    let cols_ok = (0..d).all(|j| unit(&mut table.iter().map(|r| r[j])));
    if rows_ok && cols_ok {
        Ok(SignTable(table))
    } else {
        Err(Error::NotSignedPermutation)
    }
}
