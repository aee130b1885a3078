use crate::crystals::{ChainElement, Shape, TensorWord};
use crate::error::{Error, Result};
use crate::qexact::{quantum_int, QRational};

use super::matrix::{Frame, QMatrix};

/// An irreducible constituent `V_λ ⊂ M`, spanned by `f^{(i)} h` for a highest weight vector `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub highest_weight: u32,
    /// `vectors[i] = f^{(i)} h` in the product basis of the module.
    pub vectors: Vec<Vec<QRational>>,
}

/// A finite-dimensional `U_q(sl2)`-module given as a tensor product of irreducibles `V_n`.
///
/// The product basis of `V_{n_1} ⊗ ... ⊗ V_{n_k}` is indexed with the first factor varying
/// fastest; inside `V_n` index `i` is `v_{n-2i} = f^{(i)} v_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UqModule {
    factors: Vec<u32>,
    weights: Vec<i32>,
    e: QMatrix,
    f: QMatrix,
    k: QMatrix,
    k_inv: QMatrix,
    summands: Vec<Summand>,
}

/// The irreducible module `V_n`.
pub fn irreducible(n: u32) -> UqModule {
    let d = n as usize + 1;
    let mut e = QMatrix::zeros(d, d);
    let mut f = QMatrix::zeros(d, d);
    for i in 0..d {
        if i + 1 < d {
            f.set(i + 1, i, quantum_int(i as i64 + 1));
        }
        if i > 0 {
            e.set(i - 1, i, quantum_int(n as i64 - i as i64 + 1));
        }
    }
    let weights: Vec<i32> = (0..d).map(|i| n as i32 - 2 * i as i32).collect();
    let k = QMatrix::diagonal(
        &weights
            .iter()
            .map(|&w| QRational::q_pow(w as i64))
            .collect::<Vec<_>>(),
    );
    let k_inv = QMatrix::diagonal(
        &weights
            .iter()
            .map(|&w| QRational::q_pow(-w as i64))
            .collect::<Vec<_>>(),
    );
    let vectors = (0..d).map(|i| unit(d, i)).collect();
    UqModule {
        factors: vec![n],
        weights,
        e,
        f,
        k,
        k_inv,
        summands: vec![Summand {
            highest_weight: n,
            vectors,
        }],
    }
}

/// `M ⊗ N` with `Δe = e ⊗ K + 1 ⊗ e`, `Δf = f ⊗ 1 + K^{-1} ⊗ f`, `ΔK = K ⊗ K`.
pub fn tensor_module(m: &UqModule, n: &UqModule) -> UqModule {
    let mut t = tensor_raw(m, n);
    let dm = m.dim();
    for a in &m.summands {
        for b in &n.summands {
            for (nu, vecs) in pair_components(a.highest_weight, b.highest_weight) {
                let la = a.highest_weight as usize + 1;
                let vectors = vecs
                    .iter()
                    .map(|c| {
                        let mut out = vec![QRational::zero(); t.dim()];
                        for (idx, coeff) in c.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                            let (u, w) = (&a.vectors[idx % la], &b.vectors[idx / la]);
                            for (i, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                                for (j, y) in w.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                                    let s = &out[i + dm * j] + &(&(coeff * x) * y);
                                    out[i + dm * j] = s;
                                }
                            }
                        }
                        out
                    })
                    .collect();
                t.summands.push(Summand {
                    highest_weight: nu,
                    vectors,
                });
            }
        }
    }
    t
}

/// `V_{n_1} ⊗ ... ⊗ V_{n_k}`, bracketed from the left.
pub fn tensor_power(factors: &[u32]) -> Result<UqModule> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Domain("empty tensor product".into()))?;
    Ok(rest.iter().fold(irreducible(*first), |acc, &n| {
        tensor_module(&acc, &irreducible(n))
    }))
}

fn unit(d: usize, i: usize) -> Vec<QRational> {
    let mut v = vec![QRational::zero(); d];
    v[i] = QRational::one();
    v
}

fn tensor_raw(m: &UqModule, n: &UqModule) -> UqModule {
    let (im, in_) = (QMatrix::identity(m.dim()), QMatrix::identity(n.dim()));
    let e =
        m.e.tensor(&n.k)
            .checked_add(&im.tensor(&n.e))
            .expect("same shape");
    let f =
        m.f.tensor(&in_)
            .checked_add(&m.k_inv.tensor(&n.f))
            .expect("same shape");
    let mut factors = m.factors.clone();
    factors.extend(&n.factors);
    let weights = n
        .weights
        .iter()
        .flat_map(|&b| m.weights.iter().map(move |&a| a + b))
        .collect();
    UqModule {
        factors,
        weights,
        e,
        f,
        k: m.k.tensor(&n.k),
        k_inv: m.k_inv.tensor(&n.k_inv),
        summands: vec![],
    }
}

/// Components of `V_λ ⊗ V_μ` in its product basis, by decreasing highest weight.
fn pair_components(lambda: u32, mu: u32) -> Vec<(u32, Vec<Vec<QRational>>)> {
    let t = tensor_raw(&irreducible(lambda), &irreducible(mu));
    highest_weight_vectors(&t)
        .into_iter()
        .map(|(w, h)| {
            let nu = w as u32;
            let mut vecs = vec![h];
            for i in 0..nu as usize {
                let next = t.f.apply(&vecs[i]).expect("dimension");
                let c = quantum_int(i as i64 + 1).inv().expect("nonzero");
                vecs.push(next.iter().map(|x| x * &c).collect());
            }
            (nu, vecs)
        })
        .collect()
}

/// A basis of `ker E` in each weight space, by decreasing weight; each vector is scaled so that
/// its first nonzero product-frame coefficient is 1.
pub fn highest_weight_vectors(m: &UqModule) -> Vec<(i32, Vec<QRational>)> {
    let mut weights: Vec<i32> = m.weights.clone();
    weights.sort_unstable_by(|a, b| b.cmp(a));
    weights.dedup();
    let mut out = vec![];
    for w in weights {
        let idx: Vec<usize> = (0..m.dim()).filter(|&i| m.weights[i] == w).collect();
        let cols: Vec<Vec<QRational>> = idx.iter().map(|&j| m.e.column(j)).collect();
        for kv in kernel(&cols) {
            let mut v = vec![QRational::zero(); m.dim()];
            for (c, &j) in kv.into_iter().zip(&idx) {
                v[j] = c;
            }
            out.push((w, v));
        }
    }
    out
}

/// Null space of the matrix with the given columns, one vector per free column, each
/// normalized to leading coefficient 1.
fn kernel(cols: &[Vec<QRational>]) -> Vec<Vec<QRational>> {
    let n = cols.len();
    let rows = cols.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<QRational>> = (0..rows)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        a[r] = a[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                a[i] = a[i].iter().zip(&a[r]).map(|(x, y)| x - &(&f * y)).collect();
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = vec![];
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![QRational::zero(); n];
        v[free] = QRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[row][free];
        }
        let lead = v
            .iter()
            .find(|x| !x.is_zero())
            .expect("nonzero")
            .inv()
            .expect("nonzero");
        out.push(v.iter().map(|x| x * &lead).collect());
    }
    out
}

impl UqModule {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn shape(&self) -> Shape {
        Shape::new(self.factors.clone())
    }

    pub fn weights(&self) -> &[i32] {
        &self.weights
    }

    pub fn e(&self) -> &QMatrix {
        &self.e
    }

    pub fn f(&self) -> &QMatrix {
        &self.f
    }

    pub fn k(&self) -> &QMatrix {
        &self.k
    }

    pub fn k_inv(&self) -> &QMatrix {
        &self.k_inv
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }

    /// Crystal word labelling product basis vector `idx`.
    pub fn basis_word(&self, mut idx: usize) -> TensorWord {
        let mut letters = vec![];
        for &n in &self.factors {
            let d = n as usize + 1;
            letters.push(ChainElement::at_depth(n, (idx % d) as u32));
            idx /= d;
        }
        TensorWord::new(letters)
    }

    /// Product basis index of a crystal word of this module's shape.
    pub fn index_of(&self, w: &TensorWord) -> Result<usize> {
        if w.shape().0 != self.factors {
            return Err(Error::Domain(format!(
                "{w} is not a word of shape {}",
                self.shape()
            )));
        }
        let mut idx = 0;
        for (b, &n) in w.0.iter().zip(&self.factors).rev() {
            idx = idx * (n as usize + 1) + b.depth() as usize;
        }
        Ok(idx)
    }

    /// Columns are the frame vectors written in the product basis.
    ///
    /// The isotypic frame lists vectors by decreasing weight, then increasing highest weight of
    /// the component, then summand order.
    pub fn frame_basis(&self, frame: Frame) -> QMatrix {
        match frame {
            Frame::S1 => QMatrix::identity(self.dim()),
            Frame::S2 => {
                let mut keyed = vec![];
                for (s, sm) in self.summands.iter().enumerate() {
                    for (i, v) in sm.vectors.iter().enumerate() {
                        let w = sm.highest_weight as i32 - 2 * i as i32;
                        keyed.push(((-w, sm.highest_weight, s), v.clone()));
                    }
                }
                keyed.sort_by_key(|k| k.0);
                let cols: Vec<_> = keyed.into_iter().map(|(_, v)| v).collect();
                QMatrix::from_columns(&cols).expect("rectangular")
            }
        }
    }

    /// Highest weights of the isotypic frame vectors, in frame order.
    pub fn frame_components(&self) -> Vec<u32> {
        let mut keyed = vec![];
        for (s, sm) in self.summands.iter().enumerate() {
            for i in 0..=sm.highest_weight as i32 {
                keyed.push((-(sm.highest_weight as i32 - 2 * i), sm.highest_weight, s));
            }
        }
        keyed.sort();
        keyed.into_iter().map(|k| k.1).collect()
    }

    /// Defining relations that fail as matrix identities.
    pub fn relation_violations(&self) -> Vec<String> {
        let mut bad = vec![];
        let q2 = QRational::q_pow(2);
        let qm2 = QRational::q_pow(-2);
        let mul = |a: &QMatrix, b: &QMatrix| a.checked_mul(b).expect("square");
        if !mul(&self.k, &self.k_inv).is_identity() {
            bad.push("K K^-1 = 1".to_string());
        }
        if mul(&mul(&self.k, &self.e), &self.k_inv) != self.e.scale(&q2) {
            bad.push("K E K^-1 = q^2 E".to_string());
        }
        if mul(&mul(&self.k, &self.f), &self.k_inv) != self.f.scale(&qm2) {
            bad.push("K F K^-1 = q^-2 F".to_string());
        }
        let comm = mul(&self.e, &self.f)
            .checked_sub(&mul(&self.f, &self.e))
            .expect("square");
        let c = (&QRational::q_pow(1) - &QRational::q_pow(-1))
            .inv()
            .expect("nonzero");
        let rhs = self.k.checked_sub(&self.k_inv).expect("square").scale(&c);
        if comm != rhs {
            bad.push("E F - F E = (K - K^-1)/(q - q^-1)".to_string());
        }
        bad
    }
}
