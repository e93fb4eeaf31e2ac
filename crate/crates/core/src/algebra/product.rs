//! Quasi-shuffle products on 𝔥¹[t]: harmonic `*`, star `⋆`, and t-harmonic `∗ₜ`.
//!
//! All three share the recursion
//!
//! ```text
//! (a w)·(b w') = a (w · b w') + b (a w · w') + c1 (a∘b)(w · w') + c2 (a∘b)∘(w · w')
//! ```
//!
//! with `(c1, c2) = (1, 0)` for `*`, `(-1, 0)` for `⋆` and `(1 - 2t, t² - t)` for `∗ₜ`.

use super::poly::{qi, RatPoly};
use super::sum::{circle_act, FormalSum};
use super::word::Word;

/// The overlap coefficients of a quasi-shuffle product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiShuffle {
    pub overlap: RatPoly,
    pub double_circle: RatPoly,
}

impl QuasiShuffle {
    pub fn harmonic() -> Self {
        Self {
            overlap: RatPoly::one(),
            double_circle: RatPoly::zero(),
        }
    }

    pub fn star() -> Self {
        Self {
            overlap: RatPoly::constant(qi(-1)),
            double_circle: RatPoly::zero(),
        }
    }

    pub fn t_harmonic() -> Self {
        Self {
            overlap: RatPoly::from_coeffs([qi(1), qi(-2)]),
            double_circle: RatPoly::from_coeffs([qi(0), qi(-1), qi(1)]),
        }
    }

    /// The t-harmonic product with `t` replaced by a polynomial (or constant).
    pub fn t_harmonic_at(t: &RatPoly) -> Self {
        let base = Self::t_harmonic();
        Self {
            overlap: base.overlap.compose(t),
            double_circle: base.double_circle.compose(t),
        }
    }

    /// Product of two words. The recursion only ever strips leading letters,
    /// so every subproblem is a pair of suffixes; they are tabulated bottom-up.
    pub fn words(&self, u: &Word, v: &Word) -> FormalSum {
        let (a, b) = (u.letters(), v.letters());
        let (n, m) = (a.len(), b.len());
        // table[i][j] = u[i..] · v[j..]
        let mut table: Vec<Vec<FormalSum>> = vec![vec![FormalSum::zero(); m + 1]; n + 1];
        for i in (0..=n).rev() {
            for j in (0..=m).rev() {
                let entry = if i == n {
                    FormalSum::word(Word::from_letters(b[j..].to_vec()))
                } else if j == m {
                    FormalSum::word(Word::from_letters(a[i..].to_vec()))
                } else {
                    let ab = a[i].circle(b[j]);
                    let mut acc = table[i + 1][j].prepend(a[i]);
                    acc += &table[i][j + 1].prepend(b[j]);
                    let inner = &table[i + 1][j + 1];
                    if !self.overlap.is_zero() {
                        acc.add_scaled(&inner.prepend(ab), &self.overlap);
                    }
                    if !self.double_circle.is_zero() {
                        acc.add_scaled(&circle_act(ab, inner), &self.double_circle);
                    }
                    acc
                };
                table[i][j] = entry;
            }
        }
        std::mem::take(&mut table[0][0])
    }

    /// Bilinear extension to formal sums.
    pub fn apply(&self, e1: &FormalSum, e2: &FormalSum) -> FormalSum {
        let mut out = FormalSum::zero();
        for (u, cu) in e1.terms() {
            for (v, cv) in e2.terms() {
                out.add_scaled(&self.words(u, v), &(cu * cv));
            }
        }
        out
    }
}

pub fn harmonic_product(e1: &FormalSum, e2: &FormalSum) -> FormalSum {
    QuasiShuffle::harmonic().apply(e1, e2)
}

pub fn star_product(e1: &FormalSum, e2: &FormalSum) -> FormalSum {
    QuasiShuffle::star().apply(e1, e2)
}

pub fn t_harmonic_product(e1: &FormalSum, e2: &FormalSum) -> FormalSum {
    QuasiShuffle::t_harmonic().apply(e1, e2)
}
