use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The sequence of highest weights `(n_1, ..., n_k)` of a flat tensor product
/// `B_{n_1} ⊗ ... ⊗ B_{n_k}`. Tensoring shapes is concatenation, so the
/// monoidal structure is strict.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Shape(pub Vec<u32>);

impl Shape {
    pub fn new(weights: impl Into<Vec<u32>>) -> Self {
        Self(weights.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Shape) -> Shape {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Shape(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Shape {
        Shape(self.0[range].to_vec())
    }

    /// Every word of this shape, each factor running from its highest weight
    /// down; the first factor varies slowest.
    pub fn words(&self) -> Vec<TensorWord> {
        let mut out = vec![TensorWord(Vec::new())];
        for &n in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (n as usize + 1));
            for w in &out {
                for i in 0..=n {
                    let mut f = w.0.clone();
                    f.push(ChainElement::at_depth(n, i));
                    next.push(TensorWord(f));
                }
            }
            out = next;
        }
        out
    }

    pub fn cardinality(&self) -> usize {
        self.0.iter().map(|&n| n as usize + 1).product()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: std::result::Result<Vec<u32>, _> =
            s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        match v {
            Ok(v) if !v.is_empty() => Ok(Shape(v)),
            _ => Err(Error::Parse(format!("bad shape {s:?}, expected e.g. 1,2"))),
        }
    }
}

impl Serialize for Shape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `b_j` in the chain `B_n`: `b_n -> b_{n-2} -> ... -> b_{-n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainElement {
    pub n: u32,
    pub j: i32,
}

impl ChainElement {
    pub fn new(n: u32, j: i32) -> Result<Self> {
        if j.unsigned_abs() > n || (n as i32 - j) % 2 != 0 {
            return Err(Error::Index(format!("b_{j} is not in B_{n}")));
        }
        Ok(Self { n, j })
    }

    /// `f̃^depth b_n`.
    pub fn at_depth(n: u32, depth: u32) -> Self {
        assert!(depth <= n);
        Self {
            n,
            j: n as i32 - 2 * depth as i32,
        }
    }

    pub fn depth(&self) -> u32 {
        (self.n as i32 - self.j) as u32 / 2
    }

    pub fn wt(&self) -> i32 {
        self.j
    }

    pub fn eps(&self) -> u32 {
        (self.n as i32 - self.j) as u32 / 2
    }

    pub fn phi(&self) -> u32 {
        (self.n as i32 + self.j) as u32 / 2
    }

    pub fn f_tilde(&self) -> Option<Self> {
        (self.j > -(self.n as i32)).then(|| Self {
            n: self.n,
            j: self.j - 2,
        })
    }

    pub fn e_tilde(&self) -> Option<Self> {
        (self.j < self.n as i32).then(|| Self {
            n: self.n,
            j: self.j + 2,
        })
    }
}

impl fmt::Display for ChainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.j)
    }
}

/// A flat word `b_{j_1} ⊗ ... ⊗ b_{j_k}` in a tensor product of chains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord(pub Vec<ChainElement>);

/// Aggregate `(ε, φ)` of `b_1 ⊗ b_2` from those of the factors.
fn combine((e1, p1): (u32, u32), (e2, p2): (u32, u32)) -> (u32, u32) {
    (e1 + e2.saturating_sub(p1), p2 + p1.saturating_sub(e2))
}

impl TensorWord {
    pub fn new(factors: Vec<ChainElement>) -> Self {
        Self(factors)
    }

    /// Parses `b1⊗b-1` against a shape (the string does not carry `n`).
    pub fn parse(shape: &Shape, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('⊗').map(str::trim).collect();
        if parts.len() != shape.len() {
            return Err(Error::Parse(format!("{s:?} does not have shape {shape}")));
        }
        let mut factors = Vec::with_capacity(parts.len());
        for (p, &n) in parts.iter().zip(&shape.0) {
            let j: i32 = p
                .strip_prefix('b')
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad factor {p:?}")))?;
            factors.push(ChainElement::new(n, j)?);
        }
        Ok(Self(factors))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.0.iter().map(|b| b.n).collect())
    }

    pub fn wt(&self) -> i32 {
        self.0.iter().map(ChainElement::wt).sum()
    }

    fn eps_phi(&self) -> (u32, u32) {
        self.0
            .iter()
            .map(|b| (b.eps(), b.phi()))
            .fold((0, 0), combine)
    }

    pub fn eps(&self) -> u32 {
        self.eps_phi().0
    }

    pub fn phi(&self) -> u32 {
        self.eps_phi().1
    }

    pub fn concat(&self, other: &TensorWord) -> TensorWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        TensorWord(v)
    }

    pub fn split_at(&self, k: usize) -> (TensorWord, TensorWord) {
        (
            TensorWord(self.0[..k].to_vec()),
            TensorWord(self.0[k..].to_vec()),
        )
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> TensorWord {
        TensorWord(self.0[range].to_vec())
    }

    /// Position acted on by the binary rule folded from the left: the word is
    /// `prefix ⊗ last`, and the operator moves into the prefix while the rule
    /// says so.
    fn acting_position(&self, raising: bool) -> usize {
        let mut prefix = Vec::with_capacity(self.0.len());
        let mut acc = (0, 0);
        for b in &self.0 {
            prefix.push(acc);
            acc = combine(acc, (b.eps(), b.phi()));
        }
        let mut i = self.0.len() - 1;
        while i > 0 {
            let phi_left = prefix[i].1;
            let eps_right = self.0[i].eps();
            let go_left = if raising {
                phi_left >= eps_right
            } else {
                phi_left > eps_right
            };
            if !go_left {
                break;
            }
            i -= 1;
        }
        i
    }

    /// `f̃` by the tensor product rule; `None` is the zero value.
    pub fn f_tilde(&self) -> Option<TensorWord> {
        let i = self.acting_position(false);
        let b = self.0[i].f_tilde()?;
        let mut out = self.clone();
        out.0[i] = b;
        Some(out)
    }

    /// `ẽ` by the tensor product rule; `None` is the zero value.
    pub fn e_tilde(&self) -> Option<TensorWord> {
        let i = self.acting_position(true);
        let b = self.0[i].e_tilde()?;
        let mut out = self.clone();
        out.0[i] = b;
        Some(out)
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl Serialize for TensorWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Shorthand for building words in tests and examples: `word(&[(1, 1), (2, 0)])`
/// is `b_1 ⊗ b_0` of shape `(1, 2)`.
pub fn word(factors: &[(u32, i32)]) -> TensorWord {
    TensorWord(
        factors
            .iter()
            .map(|&(n, j)| ChainElement::new(n, j).expect("valid chain element"))
            .collect(),
    )
}
