//! Builders for the identity families: sum formula, cyclic sum formula,
//! alternating sums and the two-one structures at `t = 1/2`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{binomial, q, qi, FormalSum, Index, Letter, QuasiShuffle, RatPoly, Word, Q};
use crate::error::{Error, Result};
use crate::interpolation::{s_param, s_t};

/// Weight `k`, depth `n` with `k > n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SumFamily {
    k: u32,
    n: u32,
}

impl SumFamily {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if n == 0 || k <= n {
            return Err(Error::EmptyFamily { k, n });
        }
        Ok(Self { k, n })
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn n(self) -> u32 {
        self.n
    }

    /// Admissible words of weight `k` and depth `n`, in colexicographic order
    /// of their subscript strings.
    pub fn words(self) -> Vec<Word> {
        let mut out = Vec::new();
        let mut parts = vec![0u32; self.n as usize];
        fill_parts(&mut parts, 0, self.k, &mut out);
        out.sort_by(|a, b| a.letters().iter().rev().cmp(b.letters().iter().rev()));
        out
    }

    /// `x_{k,n}`: every admissible word of weight `k`, depth `n`, coefficient 1.
    pub fn sum(self) -> FormalSum {
        self.words().into_iter().map(FormalSum::word).sum()
    }

    /// `P_{k,n}(t) = Σ_{j=0}^{n-1} C(k-1, j) t^j (1-t)^{n-1-j}`.
    pub fn poly(self) -> RatPoly {
        let one_minus_t = RatPoly::from_coeffs([qi(1), qi(-1)]);
        let mut acc = RatPoly::zero();
        for j in 0..self.n {
            let term = &RatPoly::monomial(binomial(u64::from(self.k - 1), u64::from(j)), j)
                * &one_minus_t.pow(self.n - 1 - j);
            acc += &term;
        }
        acc
    }
}

fn fill_parts(parts: &mut [u32], pos: usize, rest: u32, out: &mut Vec<Word>) {
    let remaining_slots = (parts.len() - pos) as u32;
    if remaining_slots == 0 {
        if rest == 0 {
            out.push(Word::from_subscripts(parts));
        }
        return;
    }
    let min = if pos == 0 { 2 } else { 1 };
    // leave at least one for every later slot
    let max = rest.saturating_sub(remaining_slots - 1);
    for v in min..=max {
        parts[pos] = v;
        fill_parts(parts, pos + 1, rest - v, out);
    }
}

pub fn sum_words(k: u32, n: u32) -> Result<FormalSum> {
    Ok(SumFamily::new(k, n)?.sum())
}

pub fn sum_poly(k: u32, n: u32) -> Result<RatPoly> {
    Ok(SumFamily::new(k, n)?.poly())
}

fn rotation(ks: &[u32], l: usize) -> Vec<u32> {
    ks[l..].iter().chain(&ks[..l]).copied().collect()
}

/// `C(w) = Σ_l z_{k_l+1} z_{k_{l+1}} ⋯ z_{k_n} z_{k_1} ⋯ z_{k_{l-1}}`.
pub fn cyclic_c(w: &Word) -> Result<FormalSum> {
    if w.is_empty() {
        return Err(Error::EmptyWord("C"));
    }
    let ks = w.subscripts();
    Ok((0..ks.len())
        .map(|l| {
            let mut r = rotation(&ks, l);
            r[0] += 1;
            FormalSum::from_subscripts(&r)
        })
        .sum())
}

/// `Σ(w) = Σ_l Σ_{j=1}^{k_l-1} z_{k_l+1-j} z_{k_{l+1}} ⋯ z_{k_{l-1}} z_j`.
pub fn cyclic_sigma(w: &Word) -> Result<FormalSum> {
    if w.is_empty() {
        return Err(Error::EmptyWord("Sigma"));
    }
    let ks = w.subscripts();
    let mut out = FormalSum::zero();
    for l in 0..ks.len() {
        let r = rotation(&ks, l);
        for j in 1..ks[l] {
            let mut word = r.clone();
            word[0] = ks[l] + 1 - j;
            word.push(j);
            out += &FormalSum::from_subscripts(&word);
        }
    }
    Ok(out)
}

/// `δ(w) = Σ_l z_{k_l+k_{l+1}} z_{k_{l+2}} ⋯ z_{k_{l-1}}`, indices mod `n`.
pub fn cyclic_delta(w: &Word) -> Result<FormalSum> {
    if w.len() < 2 {
        return Err(Error::DeltaUndefined);
    }
    let ks = w.subscripts();
    let n = ks.len();
    Ok((0..n)
        .map(|l| {
            let r = rotation(&ks, l);
            let mut word = Vec::with_capacity(n - 1);
            word.push(r[0] + r[1]);
            word.extend_from_slice(&r[2..]);
            FormalSum::from_subscripts(&word)
        })
        .sum())
}

/// Linear extension of a word operator to t-free or t-dependent sums.
pub fn extend<F>(e: &FormalSum, op: F) -> Result<FormalSum>
where
    F: Fn(&Word) -> Result<FormalSum>,
{
    let mut out = FormalSum::zero();
    for (w, c) in e.terms() {
        out.add_scaled(&op(w)?, c);
    }
    Ok(out)
}

/// `f_w(t) = S^t(Σ(w)) + (t - 1) S^t(C(w)) - k t^n z_{k+1}`.
pub fn csf_generator(w: &Word) -> Result<FormalSum> {
    if w.is_empty() {
        return Err(Error::EmptyWord("f_w"));
    }
    let k = w.weight();
    let n = w.len() as u32;
    if k <= n {
        return Err(Error::AllOnes);
    }
    let mut f = s_t(&cyclic_sigma(w)?);
    f.add_scaled(&s_t(&cyclic_c(w)?), &RatPoly::from_coeffs([qi(-1), qi(1)]));
    f.add_term(
        Word::from_subscripts(&[k + 1]),
        &RatPoly::monomial(-qi(i64::from(k)), n),
    );
    Ok(f)
}

/// `f` extended linearly over a formal sum of words.
pub fn csf_generator_sum(e: &FormalSum) -> Result<FormalSum> {
    extend(e, csf_generator)
}

/// `Σ_{k=0}^n (-1)^k S^t(a_1⋯a_k) * S^{1-t}(a_n⋯a_{k+1})`, expected to vanish.
pub fn alt_sum(letters: &[Letter]) -> Result<FormalSum> {
    if letters.is_empty() {
        return Err(Error::EmptySequence);
    }
    let n = letters.len();
    let one_minus_t = RatPoly::from_coeffs([qi(1), qi(-1)]);
    let harmonic = QuasiShuffle::harmonic();
    let mut acc = FormalSum::zero();
    for k in 0..=n {
        let prefix = FormalSum::word(Word::from_letters(letters[..k].to_vec()));
        let suffix = FormalSum::word(Word::from_letters(letters[k..].to_vec()).reversed());
        let term = harmonic.apply(&s_t(&prefix), &s_param(&suffix, &one_minus_t));
        let sign = if k % 2 == 0 { qi(1) } else { qi(-1) };
        acc.add_scaled(&term, &RatPoly::constant(sign));
    }
    Ok(acc)
}

fn check_two_one_blocks(j: &[u32]) -> Result<()> {
    match j.first() {
        None => Err(Error::EmptySequence),
        Some(0) => Err(Error::NonAdmissibleStar),
        Some(_) => Ok(()),
    }
}

/// `({2}^{j_1}, 1, {2}^{j_2}, 1, …, {2}^{j_n}, 1)`.
pub fn two_one_lhs_index(j: &[u32]) -> Result<Index> {
    check_two_one_blocks(j)?;
    let mut parts = Vec::new();
    for &ji in j {
        parts.extend(std::iter::repeat_n(2, ji as usize));
        parts.push(1);
    }
    Index::new(parts)
}

/// `z_{2j_1+1} ⋯ z_{2j_n+1}` together with the scale `2^n`.
pub fn two_one_rhs_word(j: &[u32]) -> Result<(Word, Q)> {
    check_two_one_blocks(j)?;
    let ks: Vec<u32> = j.iter().map(|&ji| 2 * ji + 1).collect();
    let scale = Q::from_integer(num_bigint::BigInt::one() << j.len());
    Ok((Word::from_subscripts(&ks), scale))
}

/// A ℚ-linear combination of words in `y_j = 2 z_{2j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OddSum {
    terms: BTreeMap<Vec<u32>, Q>,
}

impl OddSum {
    pub fn word(ys: Vec<u32>) -> Self {
        let mut s = Self::default();
        s.add(ys, Q::one());
        s
    }

    pub fn add(&mut self, ys: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(ys.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&ys);
        }
    }

    fn add_scaled(&mut self, other: &OddSum, c: &Q) {
        for (ys, x) in &other.terms {
            self.add(ys.clone(), x * c);
        }
    }

    fn prepend(&self, y: u32) -> OddSum {
        let mut out = OddSum::default();
        for (ys, c) in &self.terms {
            let mut v = Vec::with_capacity(ys.len() + 1);
            v.push(y);
            v.extend_from_slice(ys);
            out.add(v, c.clone());
        }
        out
    }

    /// `y_p ∘ 1 = 0`, `y_p ∘ (y_l u) = y_{p+l} u`.
    fn circle_act(&self, p: u32) -> OddSum {
        let mut out = OddSum::default();
        for (ys, c) in &self.terms {
            if let Some((&l, rest)) = ys.split_first() {
                let mut v = Vec::with_capacity(ys.len());
                v.push(p + l);
                v.extend_from_slice(rest);
                out.add(v, c.clone());
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    /// Expands `y_{j_1} ⋯ y_{j_n} = 2^n z_{2j_1+1} ⋯ z_{2j_n+1}`.
    pub fn to_z(&self) -> FormalSum {
        let mut out = FormalSum::zero();
        for (ys, c) in &self.terms {
            let ks: Vec<u32> = ys.iter().map(|&y| 2 * y + 1).collect();
            let scale = c * Q::from_integer(num_bigint::BigInt::one() << ys.len());
            out.add_term(Word::from_subscripts(&ks), &RatPoly::constant(scale));
        }
        out
    }
}

/// The closed recursion on the odd alphabet,
/// `y_i w · y_j w' = y_i(w · y_j w') + y_j(y_i w · w') - y_{i+j+1} ∘ (w · w')`.
pub fn odd_product(u: &[u32], v: &[u32]) -> OddSum {
    let (n, m) = (u.len(), v.len());
    let mut table = vec![vec![OddSum::default(); m + 1]; n + 1];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            table[i][j] = if i == n {
                OddSum::word(v[j..].to_vec())
            } else if j == m {
                OddSum::word(u[i..].to_vec())
            } else {
                let mut acc = table[i + 1][j].prepend(u[i]);
                acc.add_scaled(&table[i][j + 1].prepend(v[j]), &Q::one());
                acc.add_scaled(&table[i + 1][j + 1].circle_act(u[i] + v[j] + 1), &qi(-1));
                acc
            };
        }
    }
    std::mem::take(&mut table[0][0])
}

/// Reads an odd-subscript word `z_{2j_1+1} ⋯` as the `y`-word `(j_1, …)`.
pub fn odd_letters(w: &Word) -> Result<Vec<u32>> {
    w.letters()
        .iter()
        .map(|l| {
            if l.k() % 2 == 1 {
                Ok((l.k() - 1) / 2)
            } else {
                Err(Error::OutsideOddSubalgebra(l.k()))
            }
        })
        .collect()
}

/// Compares the `1/2`-harmonic product of the `y`-words read off `u` and `v`
/// with the odd-alphabet recursion.
pub fn odd_product_check(u: &Word, v: &Word) -> Result<bool> {
    let (yu, yv) = (odd_letters(u)?, odd_letters(v)?);
    let direct = QuasiShuffle::t_harmonic_at(&RatPoly::constant(q(1, 2))).apply(
        &OddSum::word(yu.clone()).to_z(),
        &OddSum::word(yv.clone()).to_z(),
    );
    Ok(direct == odd_product(&yu, &yv).to_z())
}
