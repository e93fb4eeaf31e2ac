//! The interpolating operator `S^t` and its companions.
//!
//! For a word `w = a_1 ⋯ a_n`, a contraction merges runs of adjacent letters
//! with the circle product. There are `2^{n-1}` of them, one per subset of
//! the `n - 1` gaps, and `S^t(w) = Σ_r t^{σ(r)} Con_r(w)` where `σ(r)` is the
//! number of merged gaps.

use num_traits::One;

use crate::algebra::{q, qi, FormalSum, Index, Letter, RatPoly, Word, Q};
use crate::error::{Error, Result};

/// A marked subsequence `0 = r_0 < r_1 < ⋯ < r_s = n` of `(0, …, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    marks: Vec<usize>,
    sigma: u32,
}

impl Contraction {
    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    /// Number of circle products performed, `n - s`.
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    /// Builds the contraction which merges exactly the gaps flagged in
    /// `merge_mask`; the most significant of the `n - 1` bits is the first gap.
    fn from_merge_mask(n: usize, merge_mask: u64) -> Self {
        let mut marks = vec![0];
        for gap in 1..n {
            let bit = (n - 1 - gap) as u32;
            if merge_mask >> bit & 1 == 0 {
                marks.push(gap);
            }
        }
        marks.push(n);
        let sigma = (n + 1 - marks.len()) as u32;
        Self { marks, sigma }
    }

    /// `Con_r(w) = b_1 ⋯ b_s` with `b_i = a_{r_{i-1}+1} ∘ ⋯ ∘ a_{r_i}`.
    pub fn apply(&self, w: &Word) -> Word {
        let letters = w.letters();
        let merged = self
            .marks
            .windows(2)
            .map(|span| {
                letters[span[0]..span[1]]
                    .iter()
                    .copied()
                    .reduce(Letter::circle)
                    .expect("marks are strictly increasing")
            })
            .collect();
        Word::from_letters(merged)
    }
}

/// Every contraction of a nonempty word, with the contracted word.
pub fn enumerate_contractions(w: &Word) -> Result<Vec<(Contraction, Word)>> {
    let n = w.len();
    if n == 0 {
        return Err(Error::UnitHasNoContractions);
    }
    Ok((0u64..1 << (n - 1))
        .map(|mask| {
            let r = Contraction::from_merge_mask(n, mask);
            let c = r.apply(w);
            (r, c)
        })
        .collect())
}

fn powers(p: &RatPoly, up_to: usize) -> Vec<RatPoly> {
    let mut out = Vec::with_capacity(up_to + 1);
    out.push(RatPoly::one());
    for i in 0..up_to {
        out.push(&out[i] * p);
    }
    out
}

/// `S^p` on a single word, for a polynomial parameter `p`.
fn s_param_word(w: &Word, p: &RatPoly) -> FormalSum {
    if w.is_unit() {
        return FormalSum::one();
    }
    let pw = powers(p, w.len());
    let mut out = FormalSum::zero();
    for (r, c) in enumerate_contractions(w).expect("nonempty") {
        out.add_term(c, &pw[r.sigma() as usize]);
    }
    out
}

/// `S^p`, extended ℚ[t]-linearly, with `t` in `S^t` replaced by `p`.
///
/// `s_param(e, t)` is `S^t(e)`; `s_param(e, t + α)` is `S^{t+α}(e)`; a
/// constant `p = α` applies `S^α` without touching the coefficients of `e`.
pub fn s_param(e: &FormalSum, p: &RatPoly) -> FormalSum {
    e.map_linear(|w| s_param_word(w, p))
}

/// `S^t(e)` via the contraction expansion.
pub fn s_t(e: &FormalSum) -> FormalSum {
    s_param(e, &RatPoly::t())
}

pub fn s_t_word(w: &Word) -> FormalSum {
    s_param_word(w, &RatPoly::t())
}

/// `S^t` from its defining recursion `S^t(a w) = a S^t(w) + t a∘S^t(w)`.
pub fn s_t_recursive(e: &FormalSum) -> FormalSum {
    e.map_linear(|w| {
        let mut acc = FormalSum::one();
        for &a in w.letters().iter().rev() {
            let merged = crate::algebra::circle_act(a, &acc);
            let mut next = acc.prepend(a);
            next.add_scaled(&merged, &RatPoly::t());
            acc = next;
        }
        acc
    })
}

/// `S^α(e)`: `S^t` followed by substituting `t = α`.
pub fn s_alpha(e: &FormalSum, alpha: &Q) -> FormalSum {
    s_t(e).substitute_t(alpha)
}

/// `(log S)(w)`: the sum of contractions merging exactly one gap.
pub fn log_s(w: &Word) -> FormalSum {
    let letters = w.letters();
    let mut out = FormalSum::zero();
    for i in 0..letters.len().saturating_sub(1) {
        let mut merged = Vec::with_capacity(letters.len() - 1);
        merged.extend_from_slice(&letters[..i]);
        merged.push(letters[i].circle(letters[i + 1]));
        merged.extend_from_slice(&letters[i + 2..]);
        out.add_term(Word::from_letters(merged), &RatPoly::one());
    }
    out
}

pub fn log_s_sum(e: &FormalSum) -> FormalSum {
    e.map_linear(log_s)
}

pub fn d_dt(e: &FormalSum) -> FormalSum {
    e.d_dt()
}

/// Coefficients `a_k = e^{(k)}(α) / k!` with `e = Σ a_k (t - α)^k`.
pub fn taylor_shift(e: &FormalSum, alpha: &Q) -> Vec<FormalSum> {
    let degree = e.t_degree().unwrap_or(0);
    let mut out = Vec::with_capacity(degree as usize + 1);
    let mut derivative = e.clone();
    let mut factorial = Q::one();
    for k in 0..=degree {
        if k > 0 {
            derivative = derivative.d_dt();
            factorial *= qi(i64::from(k));
        }
        out.push(
            derivative
                .substitute_t(alpha)
                .scale_q(&(Q::one() / &factorial)),
        );
    }
    out
}

/// Reassembles `Σ a_k (t - α)^k`.
pub fn taylor_reassemble(coeffs: &[FormalSum], alpha: &Q) -> FormalSum {
    let shift = RatPoly::from_coeffs([-alpha.clone(), Q::one()]);
    let mut acc = FormalSum::zero();
    let mut power = RatPoly::one();
    for a in coeffs {
        acc.add_scaled(a, &power);
        power = &power * &shift;
    }
    acc
}

/// The box-filling expansion `Σ_p weight(σ(p)) · z_p` of an index, where each
/// box between consecutive entries is a comma or a plus and `σ(p)` counts pluses.
pub fn filling_expansion<F>(idx: &Index, weight: F) -> FormalSum
where
    F: Fn(u32) -> RatPoly,
{
    let mut out = FormalSum::zero();
    for (p, sigma) in idx.fillings() {
        out.add_term(p.to_word(), &weight(sigma));
    }
    out
}

/// `ζ^t(k) = Σ_p t^{σ(p)} ζ(p)` as an element of 𝔥¹[t].
pub fn zeta_t_expansion(idx: &Index) -> FormalSum {
    filling_expansion(idx, |s| RatPoly::monomial(Q::one(), s))
}

/// `ζ⋆(k) = Σ_p ζ(p)`.
pub fn star_by_mzv(idx: &Index) -> FormalSum {
    filling_expansion(idx, |_| RatPoly::one())
}

/// `ζ(k) = Σ_p (-1)^{σ(p)} ζ⋆(p)`, with each word read as a star value.
pub fn mzv_by_star(idx: &Index) -> FormalSum {
    filling_expansion(idx, |s| {
        RatPoly::constant(if s % 2 == 0 { Q::one() } else { -Q::one() })
    })
}

/// `(S^t - 1)^k(e)`.
pub fn s_t_minus_one_pow(e: &FormalSum, k: u32) -> FormalSum {
    let mut acc = e.clone();
    for _ in 0..k {
        acc = &s_t(&acc) - &acc;
    }
    acc
}

/// The truncated logarithm series `Σ_{k=1}^{n} (-1)^{k-1}/k (S^t - 1)^k (w)`.
/// For a word of length `n` every later term vanishes.
pub fn log_series(w: &Word) -> FormalSum {
    let n = w.len() as u32;
    let e = FormalSum::word(w.clone());
    let mut acc = FormalSum::zero();
    let mut power = e.clone();
    for k in 1..=n.max(1) {
        power = &s_t(&power) - &power;
        let c = if k % 2 == 1 {
            q(1, i64::from(k))
        } else {
            q(-1, i64::from(k))
        };
        acc.add_scaled(&power, &RatPoly::constant(c));
    }
    acc
}
