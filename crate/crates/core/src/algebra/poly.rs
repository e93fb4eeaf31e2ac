//! Univariate polynomials in `t` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = num_rational::BigRational;

/// Builds `p/q` as an exact rational. Panics on `q == 0`.
pub fn q(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as an exact rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Formats a rational as `p/q` with the denominator always present.
pub fn rational_record(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Formats a rational as `p` when integral, `p/q` otherwise.
pub fn rational_short(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sparse polynomial `Σ c_d t^d`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: BTreeMap<u32, Q>,
}

impl RatPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Q::one(), 1)
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Q, degree: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(degree, c);
        }
        Self { coeffs }
    }

    /// Builds a polynomial from ascending coefficients `[c0, c1, ...]`.
    pub fn from_coeffs<I: IntoIterator<Item = Q>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (d, c) in coeffs.into_iter().enumerate() {
            p.add_monomial(d as u32, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&d| d == 0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> Q {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Q::zero)
    }

    /// Nonzero `(degree, coefficient)` pairs in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Q)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn add_monomial(&mut self, degree: u32, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&d, x)| (d, x * c)).collect(),
        }
    }

    /// Horner evaluation at an exact rational.
    pub fn eval(&self, at: &Q) -> Q {
        let Some(top) = self.degree() else {
            return Q::zero();
        };
        let mut acc = Q::zero();
        for d in (0..=top).rev() {
            acc = acc * at + self.coeff(d);
        }
        acc
    }

    pub fn eval_f64(&self, at: f64) -> f64 {
        let Some(top) = self.degree() else {
            return 0.0;
        };
        let mut acc = 0.0;
        for d in (0..=top).rev() {
            acc = acc * at + to_f64(&self.coeff(d));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let mut out = Self::zero();
        for (&d, c) in &self.coeffs {
            if d > 0 {
                out.add_monomial(d - 1, c * qi(i64::from(d)));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes another polynomial for `t`.
    pub fn compose(&self, inner: &RatPoly) -> Self {
        let Some(top) = self.degree() else {
            return Self::zero();
        };
        let mut acc = Self::zero();
        for d in (0..=top).rev() {
            acc = &(&acc * inner) + &Self::constant(self.coeff(d));
        }
        acc
    }
}

pub(crate) fn to_f64(x: &Q) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&RatPoly> for RatPoly {
    fn add_assign(&mut self, rhs: &RatPoly) {
        for (&d, c) in &rhs.coeffs {
            self.add_monomial(d, c.clone());
        }
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let mut out = self.clone();
        for (&d, c) in &rhs.coeffs {
            out.add_monomial(d, -c.clone());
        }
        out
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c.clone())).collect(),
        }
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        let mut out = RatPoly::zero();
        for (&da, ca) in &self.coeffs {
            for (&db, cb) in &rhs.coeffs {
                out.add_monomial(da + db, ca * cb);
            }
        }
        out
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, d: u32, c: &Q) -> fmt::Result {
    let c = c.abs();
    match d {
        0 => write!(f, "{}", rational_short(&c)),
        _ => {
            if !c.is_one() {
                write!(f, "{}", rational_short(&c))?;
            }
            if d == 1 {
                write!(f, "t")
            } else {
                write!(f, "t^{d}")
            }
        }
    }
}

/// Ascending-degree text form, e.g. `1 - 2t + t^2`, `1/2t^3`, `0`.
impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&d, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_monomial(f, d, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

/// Binomial coefficient `C(n, k)` as an exact rational.
pub fn binomial(n: u64, k: u64) -> Q {
    if k > n {
        return Q::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Q::from_integer(acc)
}
