use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::laurent::HalfLaurent;
use crate::error::{Error, Result};

/// An element of the field `Q(q^(1/2))`.
///
/// Canonical form: `numerator / denominator` where the denominator is a
/// polynomial in `Q = q^(1/2)` with nonzero constant term, primitive integer
/// coefficients and positive leading coefficient, and the two parts are
/// coprime. Every power of `Q` lives in the numerator, so structural equality
/// is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRational {
    num: HalfLaurent,
    den: HalfLaurent,
}

impl Default for QRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QRational {
    pub fn zero() -> Self {
        Self {
            num: HalfLaurent::zero(),
            den: HalfLaurent::one(),
        }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn rational(c: BigRational) -> Self {
        Self {
            num: HalfLaurent::constant(c),
            den: HalfLaurent::one(),
        }
    }

    /// `c * Q^k`, i.e. `c * q^(k/2)`.
    pub fn monomial(c: BigRational, q_half_exp: i64) -> Self {
        Self {
            num: HalfLaurent::monomial(c, q_half_exp),
            den: HalfLaurent::one(),
        }
    }

    /// `Q^k = q^(k/2)`.
    pub fn q_half_pow(k: i64) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::q_half_pow(2 * k)
    }

    pub fn from_laurent(num: HalfLaurent) -> Self {
        Self {
            num,
            den: HalfLaurent::one(),
        }
    }

    pub fn from_parts(num: HalfLaurent, den: HalfLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numerator(&self) -> &HalfLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &HalfLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn normalize(num: HalfLaurent, den: HalfLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = num.low_degree().unwrap() - den.low_degree().unwrap();
        let n = num.shift(-num.low_degree().unwrap());
        let d = den.shift(-den.low_degree().unwrap());
        let g = HalfLaurent::gcd(&n, &d);
        let (mut n, _) = n.div_rem(&g);
        let (mut d, _) = d.div_rem(&g);

        // Scale so the denominator is primitive over Z with positive leading term.
        let lcm = d
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let content = d.terms().fold(BigInt::zero(), |acc, (_, c)| {
            acc.gcd(&(c * BigRational::from_integer(lcm.clone())).to_integer())
        });
        let mut factor = BigRational::new(lcm, content);
        if d.leading_coeff().unwrap().is_negative() {
            factor = -factor;
        }
        n = n.scale(&factor);
        d = d.scale(&factor);
        Self {
            num: n.shift(shift),
            den: d,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluate at `Q = x` (so `q = x^2`).
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x).ok_or(Error::DivisionByZero)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.num.eval(x).ok_or(Error::DivisionByZero)?;
        Ok(n / d)
    }

    /// Limit as `Q -> x`, cancelling common factors `(Q - x)` first.
    pub fn limit_at(&self, x: &BigRational) -> Result<BigRational> {
        let linear = HalfLaurent::from_terms([(1, BigRational::one()), (0, -x.clone())]);
        let shift = self.num.low_degree().unwrap_or(0);
        let mut n = self.num.shift(-shift);
        let mut d = self.den.clone();
        loop {
            let (qn, rn) = n.div_rem(&linear);
            let (qd, rd) = d.div_rem(&linear);
            if !(rn.is_zero() && rd.is_zero()) || n.is_zero() {
                break;
            }
            n = qn;
            d = qd;
        }
        Self {
            num: n.shift(shift),
            den: d,
        }
        .eval(x)
    }

    /// The classical limit `q -> 1`.
    pub fn at_q_one(&self) -> Result<BigRational> {
        self.limit_at(&BigRational::one())
    }

    /// Membership in the ring `A` of functions regular at `q = infinity`:
    /// numerator degree in `Q` does not exceed denominator degree.
    pub fn is_regular_at_infinity(&self) -> bool {
        match self.num.degree() {
            None => true,
            Some(dn) => dn <= self.den.degree().unwrap(),
        }
    }

    /// The image in `A / q^(-1/2) A`. Writing `r = Q^-1`, numerator and
    /// denominator become `r^-dn * N~(r)` and `r^-dd * D~(r)` with reversed
    /// polynomials; at `r = 0` only the leading coefficients survive.
    pub fn reduce_mod_qhalf(&self) -> Result<BigRational> {
        if !self.is_regular_at_infinity() {
            return Err(Error::NotRegular(self.to_string()));
        }
        let dn = match self.num.degree() {
            None => return Ok(BigRational::zero()),
            Some(d) => d,
        };
        let dd = self.den.degree().unwrap();
        if dn < dd {
            return Ok(BigRational::zero());
        }
        Ok(self.num.leading_coeff().unwrap() / self.den.leading_coeff().unwrap())
    }

    /// Square root `sqrt(c) * q^(k/2)` of a monomial `c * q^k`, taking the
    /// positive coefficient.
    pub fn monomial_sqrt(&self) -> Result<Self> {
        let fail = |reason| Error::NoMonomialRoot {
            value: self.to_string(),
            reason,
        };
        if !self.den.is_one() || self.num.num_terms() != 1 {
            return Err(fail("not a monomial"));
        }
        let (exp, c) = self.num.terms().next().unwrap();
        if exp % 2 != 0 {
            return Err(fail("odd exponent of q^(1/2)"));
        }
        if !c.is_positive() {
            return Err(fail("coefficient is not positive"));
        }
        let (n, d) = (c.numer(), c.denom());
        let (sn, sd) = (n.sqrt(), d.sqrt());
        if &(&sn * &sn) != n || &(&sd * &sd) != d {
            return Err(fail("coefficient is not a rational square"));
        }
        Ok(Self::monomial(BigRational::new(sn, sd), exp / 2))
    }

    /// Single-term value `c * Q^k` with unit denominator, if any.
    pub fn as_monomial(&self) -> Option<(BigRational, i64)> {
        if self.den.is_one() && self.num.num_terms() == 1 {
            let (e, c) = self.num.terms().next().unwrap();
            Some((c.clone(), e))
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        match self.as_monomial() {
            Some((c, 0)) => Some(c),
            _ => None,
        }
    }
}

/// `[n]_q = (q^n - q^-n) / (q - q^-1)`, expanded as a Laurent polynomial.
pub fn quantum_int(n: i64) -> QRational {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs();
    let terms = (0..m).map(|i| (2 * (m - 1 - 2 * i), BigRational::from_integer(sign.into())));
    QRational::from_laurent(HalfLaurent::from_terms(terms))
}

/// `[n]_q! = [n][n-1]...[1]`, with `[0]! = 1`.
pub fn quantum_factorial(n: u32) -> QRational {
    (1..=n as i64).fold(QRational::one(), |acc, k| &acc * &quantum_int(k))
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            self.num.fmt_terms(f)
        } else {
            write!(f, "(")?;
            self.num.fmt_terms(f)?;
            write!(f, ")/(")?;
            self.den.fmt_terms(f)?;
            write!(f, ")")
        }
    }
}

impl Add for &QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        if self.den == rhs.den {
            return QRational::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        QRational::normalize(num, &self.den * &rhs.den)
    }
}

impl Sub for &QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl Mul for &QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return QRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRational::from_laurent(&self.num * &rhs.num);
        }
        QRational::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRational {
            type Output = QRational;
            fn $m(self, rhs: QRational) -> QRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRational> for QRational {
            type Output = QRational;
            fn $m(self, rhs: &QRational) -> QRational {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

impl From<i64> for QRational {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<BigRational> for QRational {
    fn from(c: BigRational) -> Self {
        Self::rational(c)
    }
}
