use std::fmt;
use std::str::FromStr;

use super::perm::{s_hat, Permutation};
use crate::error::{Error, Result};

/// A cactus generator `s_{p,q}`, `p < q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CactusGen {
    pub p: usize,
    pub q: usize,
}

impl CactusGen {
    pub fn new(p: usize, q: usize) -> Self {
        Self { p, q }
    }

    /// `p < q` and `k < l` are disjoint when `q < k` or `l < p`.
    pub fn disjoint(&self, other: &Self) -> bool {
        self.q < other.p || other.q < self.p
    }

    /// `p < q` contains `k < l` when `p <= k < l <= q`.
    pub fn contains(&self, other: &Self) -> bool {
        self.p <= other.p && other.q <= self.q
    }
}

impl fmt::Display for CactusGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s({},{})", self.p, self.q)
    }
}

/// A braid generator `σ_i` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = if self.inverse { 'G' } else { 'g' };
        write!(f, "{g}{}", self.index)
    }
}

/// A word in the cactus group `J_n`. Letters are read as a composite of
/// maps, so the rightmost letter acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CactusWord {
    pub n: usize,
    pub letters: Vec<CactusGen>,
}

/// A word in the braid group `B_n` on `n` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<BraidLetter>,
}

impl CactusWord {
    pub fn new(n: usize, letters: Vec<CactusGen>) -> Result<Self> {
        for g in &letters {
            if !(1 <= g.p && g.p < g.q && g.q <= n) {
                return Err(Error::Index(format!("{g} in J_{n}")));
            }
        }
        Ok(Self { n, letters })
    }

    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split('.').map(str::trim).filter(|t| !t.is_empty()) {
            letters.push(tok.parse()?);
        }
        Self::new(n, letters)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { n: self.n, letters }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        for g in &letters {
            if g.index == 0 || g.index >= strands {
                return Err(Error::Index(format!("{g} in B_{strands}")));
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parses `g1G2g1`; `.` and whitespace separators are also accepted.
    pub fn parse(strands: usize, s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut chars = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '.')
            .peekable();
        while let Some(c) = chars.next() {
            let inverse = match c {
                'g' => false,
                'G' => true,
                _ => return Err(Error::Parse(format!("unexpected '{c}' in braid word"))),
            };
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let index = digits
                .parse()
                .map_err(|_| Error::Parse(format!("missing generator index after '{c}'")))?;
            letters.push(BraidLetter { index, inverse });
        }
        Self::new(strands, letters)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands,
            letters,
        }
    }
}

impl FromStr for CactusGen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected s(p,q), got {s:?}"));
        let inner = s
            .trim()
            .strip_prefix("s(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, q) = inner.split_once(',').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        if p >= q {
            return Err(bad());
        }
        Ok(Self { p, q })
    }
}

fn join<G: fmt::Display>(f: &mut fmt::Formatter<'_>, letters: &[G]) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "e");
    }
    for (i, g) in letters.iter().enumerate() {
        if i > 0 {
            write!(f, ".")?;
        }
        write!(f, "{g}")?;
    }
    Ok(())
}

impl fmt::Display for CactusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(f, &self.letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for g in &self.letters {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Image of a word under the surjection onto the symmetric group.
pub trait ProjectToSymmetric {
    fn project_to_symmetric(&self) -> Permutation;
}

impl ProjectToSymmetric for CactusWord {
    fn project_to_symmetric(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(self.n), |acc, g| {
                acc.compose(&s_hat(g.p, g.q, self.n).expect("validated cactus word"))
            })
    }
}

impl ProjectToSymmetric for BraidWord {
    fn project_to_symmetric(&self) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(self.strands), |acc, g| {
                acc.compose(
                    &Permutation::adjacent(g.index, self.strands).expect("validated braid word"),
                )
            })
    }
}
