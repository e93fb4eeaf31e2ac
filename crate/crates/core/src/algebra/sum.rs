//! Elements of 𝔥¹[t]: finite maps from words to polynomial coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_traits::Zero;

use super::poly::{RatPoly, Q};
use super::word::{Letter, Word};

/// A finite sum `Σ c_w(t) · w`. Zero coefficients are never stored and
/// terms iterate in ascending word order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FormalSum {
    terms: BTreeMap<Word, RatPoly>,
}

impl FormalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `1` (empty word, coefficient 1).
    pub fn one() -> Self {
        Self::word(Word::unit())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, RatPoly::one())
    }

    pub fn term(w: Word, c: RatPoly) -> Self {
        let mut s = Self::zero();
        s.add_term(w, &c);
        s
    }

    pub fn from_subscripts(ks: &[u32]) -> Self {
        Self::word(Word::from_subscripts(ks))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatPoly)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> RatPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, c: &RatPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FormalSum, c: &RatPoly) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &RatPoly) -> FormalSum {
        let mut out = FormalSum::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scale_q(&self, c: &Q) -> FormalSum {
        self.scale(&RatPoly::constant(c.clone()))
    }

    /// Applies a linear map defined on words.
    pub fn map_linear<F>(&self, mut f: F) -> FormalSum
    where
        F: FnMut(&Word) -> FormalSum,
    {
        let mut out = FormalSum::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Applies a map to every coefficient, dropping zeros.
    pub fn map_coeffs<F>(&self, f: F) -> FormalSum
    where
        F: Fn(&RatPoly) -> RatPoly,
    {
        let mut out = FormalSum::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c));
        }
        out
    }

    /// Left multiplication by a letter: `a · Σ c_w w = Σ c_w (a w)`.
    pub fn prepend(&self, a: Letter) -> FormalSum {
        FormalSum {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.prepend(a), c.clone()))
                .collect(),
        }
    }

    /// Evaluates every coefficient at `t = α`.
    pub fn substitute_t(&self, alpha: &Q) -> FormalSum {
        self.map_coeffs(|c| RatPoly::constant(c.eval(alpha)))
    }

    /// Coefficient-wise `d/dt`.
    pub fn d_dt(&self) -> FormalSum {
        self.map_coeffs(RatPoly::derivative)
    }

    pub fn is_t_free(&self) -> bool {
        self.terms.values().all(RatPoly::is_constant)
    }

    /// Highest power of `t` among the coefficients.
    pub fn t_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(RatPoly::degree).max()
    }

    /// The `t^d` coefficient as a t-free formal sum.
    pub fn t_coefficient(&self, d: u32) -> FormalSum {
        self.map_coeffs(|c| RatPoly::constant(c.coeff(d)))
    }

    /// Rational coefficient of a word in a t-free sum.
    pub fn rational_coeff(&self, w: &Word) -> Q {
        self.terms.get(w).map_or_else(Q::zero, |c| c.coeff(0))
    }

    /// The common weight of all words, if the sum is weight-homogeneous and nonzero.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Word::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn all_admissible(&self) -> bool {
        self.terms.keys().all(Word::is_admissible)
    }
}

impl AddAssign<&FormalSum> for FormalSum {
    fn add_assign(&mut self, rhs: &FormalSum) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c);
        }
    }
}

impl Add for &FormalSum {
    type Output = FormalSum;
    fn add(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &FormalSum {
    type Output = FormalSum;
    fn sub(self, rhs: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatPoly::constant(-Q::from_integer(1.into())));
        out
    }
}

impl Neg for &FormalSum {
    type Output = FormalSum;
    fn neg(self) -> FormalSum {
        self.map_coeffs(|c| -c)
    }
}

impl std::iter::Sum for FormalSum {
    fn sum<I: Iterator<Item = FormalSum>>(iter: I) -> FormalSum {
        let mut acc = FormalSum::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

/// `a ∘ 1 = 0`, `a ∘ (b w) = (a ∘ b) w`, extended linearly.
pub fn circle_act(a: Letter, e: &FormalSum) -> FormalSum {
    let mut out = FormalSum::zero();
    for (w, c) in e.terms() {
        if let Some((&b, rest)) = w.letters().split_first() {
            let mut letters = Vec::with_capacity(w.len());
            letters.push(a.circle(b));
            letters.extend_from_slice(rest);
            out.add_term(Word::from_letters(letters), c);
        }
    }
    out
}
