//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use tzeta::{circle_act, qi, FormalSum, Letter, RatPoly, Word, Q};

/// Plain recursive quasi-shuffle with overlap coefficient `c1` and
/// double-circle coefficient `c2`, no memoization.
pub fn naive_product(u: &[Letter], v: &[Letter], c1: &RatPoly, c2: &RatPoly) -> FormalSum {
    if u.is_empty() {
        return FormalSum::word(Word::from_letters(v.to_vec()));
    }
    if v.is_empty() {
        return FormalSum::word(Word::from_letters(u.to_vec()));
    }
    let (a, u1) = (u[0], &u[1..]);
    let (b, v1) = (v[0], &v[1..]);
    let mut out = naive_product(u1, v, c1, c2).prepend(a);
    out += &naive_product(u, v1, c1, c2).prepend(b);
    let ab = a.circle(b);
    let inner = naive_product(u1, v1, c1, c2);
    if !c1.is_zero() {
        out.add_scaled(&inner.prepend(ab), c1);
    }
    if !c2.is_zero() {
        out.add_scaled(&circle_act(ab, &inner), c2);
    }
    out
}

pub fn harmonic_coeffs() -> (RatPoly, RatPoly) {
    (RatPoly::one(), RatPoly::zero())
}

pub fn star_coeffs() -> (RatPoly, RatPoly) {
    (RatPoly::constant(qi(-1)), RatPoly::zero())
}

pub fn t_coeffs() -> (RatPoly, RatPoly) {
    (
        RatPoly::from_coeffs([qi(1), qi(-2)]),
        RatPoly::from_coeffs([qi(0), qi(-1), qi(1)]),
    )
}

/// `S^t(w)` written out as a sum over all subsets of the `n - 1` gaps.
pub fn naive_s_t(w: &Word) -> FormalSum {
    let letters = w.letters();
    if letters.len() <= 1 {
        return FormalSum::word(w.clone());
    }
    let gaps = letters.len() - 1;
    let mut out = FormalSum::zero();
    for mask in 0u32..(1 << gaps) {
        let mut merged: Vec<u32> = vec![letters[0].k()];
        for (g, l) in letters[1..].iter().enumerate() {
            if mask & (1 << g) != 0 {
                *merged.last_mut().unwrap() += l.k();
            } else {
                merged.push(l.k());
            }
        }
        out.add_term(
            Word::from_subscripts(&merged),
            &RatPoly::monomial(Q::from_integer(1.into()), mask.count_ones()),
        );
    }
    out
}

/// Every letter sequence of total weight at most `max_weight`, the unit
/// included.
pub fn all_words(max_weight: u32) -> Vec<Word> {
    fn rec(prefix: &mut Vec<u32>, left: u32, out: &mut Vec<Word>) {
        out.push(Word::from_subscripts(prefix));
        for k in 1..=left {
            prefix.push(k);
            rec(prefix, left - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), max_weight, &mut out);
    out
}

pub fn w(ks: &[u32]) -> Word {
    Word::from_subscripts(ks)
}

pub fn fs(ks: &[u32]) -> FormalSum {
    FormalSum::from_subscripts(ks)
}

/// Every stored coefficient is nonzero.
pub fn normal_form(e: &FormalSum) -> bool {
    e.terms().all(|(_, c)| !c.is_zero())
}

/// `Σ_{m >= m_1 > … > m_n >= 1}` by nested loops.
pub fn brute_mzv(parts: &[u32], m: u64) -> f64 {
    fn rec(parts: &[u32], upper: u64) -> f64 {
        let Some((&k, rest)) = parts.split_first() else {
            return 1.0;
        };
        let mut s = 0.0;
        for x in (1..=upper).rev() {
            s += (x as f64).powi(-(k as i32)) * rec(rest, x - 1);
        }
        s
    }
    rec(parts, m)
}
