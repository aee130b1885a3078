use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qexact::QRational;

/// Which basis a matrix is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Frame {
    /// Product basis, first factor varying fastest.
    S1,
    /// Isotypic basis: highest weight vectors and their divided-power descendants.
    S2,
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Frame::S1 => "S1",
            Frame::S2 => "S2",
        })
    }
}

impl std::str::FromStr for Frame {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s1" => Ok(Frame::S1),
            "s2" => Ok(Frame::S2),
            _ => Err(Error::Parse(format!("unknown frame {s:?}"))),
        }
    }
}

/// Dense matrix over `QRational`, row-major. Column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<QRational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![QRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, QRational::one());
        }
        m
    }

    pub fn diagonal(diag: &[QRational]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Domain("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<QRational>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::Domain("ragged columns".into()));
        }
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: QRational) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[QRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<QRational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &QRational)> {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, x)| (k / self.cols, k % self.cols, x))
    }

    pub fn map(&self, f: impl Fn(&QRational) -> QRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<T>(&self, f: impl Fn(&QRational) -> Result<T>) -> Result<Vec<Vec<T>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(&f).collect())
            .collect()
    }

    pub fn scale(&self, c: &QRational) -> Self {
        self.map(|x| x * c)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j, x) in self.entries() {
            t.set(j, i, x.clone());
        }
        t
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(self.shape_error("+", rhs));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.scale(&QRational::integer(-1)))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(self.shape_error("*", rhs));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = &out.entries[i * rhs.cols + j] + &(a * b);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[QRational]) -> Result<Vec<QRational>> {
        if v.len() != self.cols {
            return Err(Error::Domain(format!(
                "vector of length {} for {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(QRational::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    /// Tensor product `self ⊗ rhs` with the first factor's index varying fastest:
    /// row `i + rows(self) * k`, column `j + cols(self) * l` holds `self[i][j] * rhs[k][l]`.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for (k, l, b) in rhs.entries() {
            if b.is_zero() {
                continue;
            }
            for (i, j, a) in self.entries() {
                if !a.is_zero() {
                    out.set(i + self.rows * k, j + self.cols * l, a * b);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Domain("power of a non-square matrix".into()));
        }
        let mut out = Self::identity(self.rows);
        for _ in 0..e {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Domain("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::DivisionByZero)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a.get(col, col).inv()?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let c = a.get(r, col).clone();
                    a.add_row_multiple(r, col, &c);
                    inv.add_row_multiple(r, col, &c);
                }
            }
        }
        Ok(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .entries()
                .all(|(i, j, x)| if i == j { x.is_one() } else { x.is_zero() })
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && self.entries().all(|(i, j, x)| i == j || x.is_zero())
    }

    pub fn diag(&self) -> Vec<QRational> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: &QRational) {
        for j in 0..self.cols {
            let x = self.get(r, j) * c;
            self.set(r, j, x);
        }
    }

    // row[r] -= c * row[src]
    fn add_row_multiple(&mut self, r: usize, src: usize, c: &QRational) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if !s.is_zero() {
                let x = self.get(r, j) - &(c * s);
                self.set(r, j, x);
            }
        }
    }

    fn shape_error(&self, op: &str, rhs: &Self) -> Error {
        Error::Domain(format!(
            "{}x{} {op} {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        ))
    }

    pub fn to_json(&self, frame: Frame) -> String {
        let doc = MatrixJson {
            rows: self.rows,
            cols: self.cols,
            frame,
            entries: (0..self.rows)
                .map(|i| self.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("matrix serializes")
    }

    pub fn from_json(s: &str) -> Result<(Self, Frame)> {
        let doc: MatrixJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.entries.len() != doc.rows || doc.entries.iter().any(|r| r.len() != doc.cols) {
            return Err(Error::Parse("entries do not match rows/cols".into()));
        }
        let rows = doc
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.parse())
                    .collect::<Result<Vec<QRational>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = if doc.rows == 0 {
            Self::zeros(0, doc.cols)
        } else {
            Self::from_rows(rows)?
        };
        Ok((m, doc.frame))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    frame: Frame,
    entries: Vec<Vec<String>>,
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(|c| c.chars().count())
            .max()
            .unwrap_or(0);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}
