//! Truncated-series evaluation of multiple zeta (star) values with error
//! estimates, and a harness for comparing two elements numerically.
//!
//! A value is computed by nested dynamic programming over all truncation
//! points at once, so the partial sums at `M`, `M/2` and `M/4` come out of a
//! single pass. One Richardson step in `1/M` is applied, and the error
//! estimate is ten times the change of the extrapolated value between `M/2`
//! and `M`, plus a floating-point rounding floor.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{rational_short, FormalSum, Index, Word, Q};
use crate::error::{Error, Result};
use crate::interpolation::s_t;

pub const DEFAULT_M: u64 = 100_000;

/// Smallest truncation bound that leaves room for the `M/4` checkpoint.
pub const MIN_M: u64 = 4;

const SAFETY_FACTOR: f64 = 10.0;

/// A floating-point value with its error estimate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumResult {
    pub value: f64,
    pub err: f64,
    #[serde(rename = "M")]
    pub m: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    pub meta: String,
}

impl NumResult {
    pub fn exact(value: f64, m: u64, meta: impl Into<String>) -> Self {
        Self {
            value,
            err: 0.0,
            m,
            t: None,
            meta: meta.into(),
        }
    }

    /// True when `|self - other|` is within the combined estimate.
    pub fn agrees_with(&self, other: &NumResult) -> bool {
        (self.value - other.value).abs() <= self.err + other.err
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain record")
    }
}

impl fmt::Display for NumResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.meta)?;
        if let Some(t) = &self.t {
            write!(f, " t={t}")?;
        }
        write!(
            f,
            " M={} value={:.15} err={:.3e}",
            self.m, self.value, self.err
        )
    }
}

/// Compensated running sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(self) -> f64 {
        self.sum
    }
}

/// Partial sums `S(m)` of the nested series for every `0 <= m <= M`.
///
/// Strict: `m_1 > ⋯ > m_n`; star: `m_1 >= ⋯ >= m_n`.
fn nested_partial_sums(parts: &[u32], m: usize, star: bool) -> Vec<f64> {
    // G_{n+1} ≡ 1
    let mut inner = vec![1.0f64; m + 1];
    let mut outer = vec![0.0f64; m + 1];
    for &k in parts.iter().rev() {
        let mut acc = Kahan::default();
        outer[0] = 0.0;
        for j in 1..=m {
            let prev = if star { inner[j] } else { inner[j - 1] };
            acc.add((j as f64).powi(-(k as i32)) * prev);
            outer[j] = acc.value();
        }
        std::mem::swap(&mut inner, &mut outer);
    }
    inner
}

/// One Richardson step assuming an error `c / M`.
fn richardson(s_hi: f64, m_hi: u64, s_lo: f64, m_lo: u64) -> f64 {
    let (a, b) = (m_hi as f64, m_lo as f64);
    (a * s_hi - b * s_lo) / (a - b)
}

fn evaluate(idx: &Index, m: u64, star: bool) -> Result<NumResult> {
    if !idx.is_admissible() {
        return Err(Error::Divergent(idx.to_string()));
    }
    let min = (idx.depth() as u64).max(MIN_M);
    if m < min {
        return Err(Error::TruncationTooSmall { m, min });
    }
    let sums = nested_partial_sums(idx.parts(), m as usize, star);
    let (m2, m4) = (m / 2, m / 4);
    let hi = richardson(sums[m as usize], m, sums[m2 as usize], m2);
    let lo = richardson(sums[m2 as usize], m2, sums[m4 as usize], m4);
    let rounding = 32.0 * idx.depth() as f64 * f64::EPSILON * hi.abs();
    let meta = if star {
        format!("zeta*{idx}")
    } else {
        format!("zeta{idx}")
    };
    Ok(NumResult {
        value: hi,
        err: SAFETY_FACTOR * (hi - lo).abs() + rounding,
        m,
        t: None,
        meta,
    })
}

/// `ζ(k_1, …, k_n)` truncated at `m_1 <= M`.
pub fn mzv(idx: &Index, m: u64) -> Result<NumResult> {
    evaluate(idx, m, false)
}

/// `ζ⋆(k_1, …, k_n)` truncated at `m_1 <= M`.
pub fn mzsv(idx: &Index, m: u64) -> Result<NumResult> {
    evaluate(idx, m, true)
}

/// Memoized word evaluations at a fixed truncation bound.
#[derive(Debug, Default)]
pub struct ZetaCache {
    m: u64,
    values: HashMap<Word, NumResult>,
}

impl ZetaCache {
    pub fn new(m: u64) -> Self {
        Self {
            m,
            values: HashMap::new(),
        }
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// `Z(w)`; `Z(1) = 1` exactly.
    pub fn word(&mut self, w: &Word) -> Result<NumResult> {
        if w.is_unit() {
            return Ok(NumResult::exact(1.0, self.m, "1"));
        }
        if !w.is_admissible() {
            return Err(Error::DivergentTerm(w.to_string()));
        }
        if let Some(r) = self.values.get(w) {
            return Ok(r.clone());
        }
        let idx = Index::new(w.subscripts()).expect("nonempty word");
        let r = mzv(&idx, self.m)?;
        self.values.insert(w.clone(), r.clone());
        Ok(r)
    }

    /// `Σ c_w(α) Z(w)` with the weighted sum of term errors.
    pub fn element(&mut self, e: &FormalSum, alpha: &Q) -> Result<NumResult> {
        if let Some(bad) = e.words().find(|w| !w.is_admissible()) {
            return Err(Error::DivergentTerm(bad.to_string()));
        }
        let mut value = Kahan::default();
        let mut err = Kahan::default();
        let mut magnitude = 0.0f64;
        for (w, c) in e.terms() {
            let c = crate::algebra::poly::to_f64(&c.eval(alpha));
            if c == 0.0 {
                continue;
            }
            let z = self.word(w)?;
            value.add(c * z.value);
            err.add(c.abs() * z.err);
            magnitude += (c * z.value).abs();
        }
        Ok(NumResult {
            value: value.value(),
            err: err.value() + 4.0 * f64::EPSILON * magnitude,
            m: self.m,
            t: Some(rational_short(alpha)),
            meta: e.to_string(),
        })
    }
}

/// `Z(e)` with coefficients evaluated at `t = α`.
pub fn eval_element(e: &FormalSum, alpha: &Q, m: u64) -> Result<NumResult> {
    ZetaCache::new(m).element(e, alpha)
}

/// `ζ^α(k) = Z(S^α(z_k))`.
pub fn zeta_t(idx: &Index, alpha: &Q, m: u64) -> Result<NumResult> {
    if !idx.is_admissible() {
        return Err(Error::Divergent(idx.to_string()));
    }
    let mut r = eval_element(&s_t(&FormalSum::word(idx.to_word())), alpha, m)?;
    r.meta = format!("zeta^t{idx}");
    Ok(r)
}

/// Product of two estimates with first-order error propagation.
pub fn product(a: &NumResult, b: &NumResult) -> NumResult {
    NumResult {
        value: a.value * b.value,
        err: a.value.abs() * b.err + b.value.abs() * a.err + a.err * b.err,
        m: a.m.max(b.m),
        t: a.t.clone().or_else(|| b.t.clone()),
        meta: format!("({}) x ({})", a.meta, b.meta),
    }
}

/// Sum of scaled estimates, errors added in absolute value.
pub fn combine(parts: &[(f64, &NumResult)], meta: impl Into<String>) -> NumResult {
    let mut value = Kahan::default();
    let mut err = Kahan::default();
    for (c, r) in parts {
        value.add(c * r.value);
        err.add(c.abs() * r.err);
    }
    NumResult {
        value: value.value(),
        err: err.value(),
        m: parts.iter().map(|(_, r)| r.m).max().unwrap_or(0),
        t: parts.iter().find_map(|(_, r)| r.t.clone()),
        meta: meta.into(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleCheck {
    pub t: String,
    pub lhs: NumResult,
    pub rhs: NumResult,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub lhs: String,
    pub rhs: String,
    pub samples: Vec<SampleCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.samples.iter().all(|s| s.pass)
    }

    pub fn max_tolerance(&self) -> f64 {
        self.samples.iter().map(|s| s.tolerance).fold(0.0, f64::max)
    }
}

/// Checks `|Z(lhs)(α) - Z(rhs)(α)| <= err_lhs + err_rhs` for every sample `α`.
pub fn verify_identity(
    lhs: &FormalSum,
    rhs: &FormalSum,
    t_samples: &[Q],
    m: u64,
) -> Result<IdentityReport> {
    let mut cache = ZetaCache::new(m);
    let mut samples = Vec::with_capacity(t_samples.len());
    for alpha in t_samples {
        let l = cache.element(lhs, alpha)?;
        let r = cache.element(rhs, alpha)?;
        let residual = (l.value - r.value).abs();
        let tolerance = l.err + r.err;
        samples.push(SampleCheck {
            t: rational_short(alpha),
            lhs: l,
            rhs: r,
            residual,
            tolerance,
            pass: residual <= tolerance,
        });
    }
    Ok(IdentityReport {
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        samples,
    })
}
