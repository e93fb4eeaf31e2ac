//! Exact span-membership certificates over ℚ.
//!
//! An interpolated identity holds once every Taylor coefficient of its
//! generators, expanded around `t = α`, lies in the ℚ-span of the generator
//! values at `α`. The reductions here produce those coefficients and certify
//! each one by Gaussian elimination on the word basis.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{
    parse_rational, rational_record, words_of_weight, FormalSum, RatPoly, Word, Q,
};
use crate::error::{Error, Result};
use crate::identities::{csf_generator, SumFamily};
use crate::interpolation::{s_t, taylor_shift};

/// `target = Σ coefficients_i · generators_i`, or a failure marker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCertificate {
    pub target: FormalSum,
    pub generators: Vec<FormalSum>,
    pub coefficients: Option<Vec<Q>>,
}

impl RelationCertificate {
    pub fn is_success(&self) -> bool {
        self.coefficients.is_some()
    }

    /// `target - Σ c_i g_i`, or `None` for a failed certificate.
    pub fn residual(&self) -> Option<FormalSum> {
        let coeffs = self.coefficients.as_ref()?;
        let mut acc = self.target.clone();
        for (g, c) in self.generators.iter().zip(coeffs) {
            acc.add_scaled(g, &RatPoly::constant(-c.clone()));
        }
        Some(acc)
    }

    /// Exact re-substitution: succeeds and the residual is zero.
    pub fn verify(&self) -> bool {
        self.coefficients
            .as_ref()
            .is_some_and(|c| c.len() == self.generators.len())
            && self.residual().is_some_and(|r| r.is_zero())
    }

    pub fn to_record(&self) -> CertificateRecord {
        CertificateRecord {
            target: self.target.to_text(),
            generators: self.generators.iter().map(FormalSum::to_text).collect(),
            coefficients: self
                .coefficients
                .as_ref()
                .map(|cs| cs.iter().map(rational_record).collect()),
        }
    }
}

/// Serializable form of a certificate; rationals are written exactly as `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub target: String,
    pub generators: Vec<String>,
    /// `None` marks a failed certificate.
    pub coefficients: Option<Vec<String>>,
}

impl CertificateRecord {
    pub fn to_certificate(&self) -> Result<RelationCertificate> {
        Ok(RelationCertificate {
            target: self.target.parse()?,
            generators: self
                .generators
                .iter()
                .map(|g| g.parse())
                .collect::<Result<_>>()?,
            coefficients: self
                .coefficients
                .as_ref()
                .map(|cs| {
                    cs.iter()
                        .map(|c| parse_rational(c))
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?,
        })
    }

    /// Line-oriented text record.
    pub fn to_text(&self) -> String {
        let mut out = format!("target: {}\n", self.target);
        for (i, g) in self.generators.iter().enumerate() {
            out.push_str(&format!("generator {i}: {g}\n"));
        }
        match &self.coefficients {
            Some(cs) => out.push_str(&format!("coefficients: {}\n", cs.join(" "))),
            None => out.push_str("coefficients: FAILURE\n"),
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut target = None;
        let mut generators = Vec::new();
        let mut coefficients: Option<Option<Vec<String>>> = None;
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::Record(format!("missing ':' in {line:?}")))?;
            let value = value.trim();
            match key.trim() {
                "target" => target = Some(value.to_string()),
                "coefficients" => {
                    coefficients = Some(if value == "FAILURE" {
                        None
                    } else {
                        Some(value.split_whitespace().map(String::from).collect())
                    })
                }
                k if k.starts_with("generator ") => {
                    let i: usize = k["generator ".len()..]
                        .parse()
                        .map_err(|_| Error::Record(format!("bad generator key {k:?}")))?;
                    if i != generators.len() {
                        return Err(Error::Record(format!("generator {i} out of order")));
                    }
                    generators.push(value.to_string());
                }
                other => return Err(Error::Record(format!("unknown key {other:?}"))),
            }
        }
        let coefficients = match coefficients {
            Some(Some(cs)) if cs.is_empty() && generators.is_empty() => Some(Vec::new()),
            Some(c) => c,
            None => return Err(Error::Record("missing coefficients".into())),
        };
        Ok(Self {
            target: target.ok_or_else(|| Error::Record("missing target".into()))?,
            generators,
            coefficients,
        })
    }
}

fn require_t_free(e: &FormalSum) -> Result<()> {
    if e.is_t_free() {
        Ok(())
    } else {
        Err(Error::NotTFree(e.to_string()))
    }
}

/// Certifies several targets against one generator list with a single
/// elimination. Rows are words in ascending order; the pivot for each
/// generator column is the smallest remaining word with a nonzero entry.
pub fn span_membership_many(
    targets: &[FormalSum],
    generators: &[FormalSum],
) -> Result<Vec<RelationCertificate>> {
    for e in targets.iter().chain(generators) {
        require_t_free(e)?;
    }
    let mut rows: BTreeMap<&Word, usize> = BTreeMap::new();
    for e in targets.iter().chain(generators) {
        for w in e.words() {
            rows.insert(w, 0);
        }
    }
    for (i, v) in rows.values_mut().enumerate() {
        *v = i;
    }
    let g = generators.len();
    let cols = g + targets.len();
    let mut m = vec![vec![Q::zero(); cols]; rows.len()];
    for (c, e) in generators.iter().chain(targets).enumerate() {
        for (w, x) in e.terms() {
            m[rows[w]][c] = x.coeff(0);
        }
    }

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; m.len()];
    for col in 0..g {
        let Some(p) = (0..m.len()).find(|&r| !used[r] && !m[r][col].is_zero()) else {
            continue;
        };
        used[p] = true;
        let inv = Q::one() / &m[p][col];
        for x in m[p].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[p].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == p || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, v) in row.iter_mut().zip(&pivot_row) {
                if !v.is_zero() {
                    *x -= &factor * v;
                }
            }
        }
        pivots.push((p, col));
    }

    Ok(targets
        .iter()
        .enumerate()
        .map(|(ti, target)| {
            let tc = g + ti;
            let consistent = m.iter().zip(&used).all(|(row, &u)| u || row[tc].is_zero());
            let coefficients = consistent.then(|| {
                let mut coeffs = vec![Q::zero(); g];
                for &(r, c) in &pivots {
                    coeffs[c] = m[r][tc].clone();
                }
                coeffs
            });
            RelationCertificate {
                target: target.clone(),
                generators: generators.to_vec(),
                coefficients,
            }
        })
        .collect())
}

pub fn span_membership(
    target: &FormalSum,
    generators: &[FormalSum],
) -> Result<RelationCertificate> {
    Ok(
        span_membership_many(std::slice::from_ref(target), generators)?
            .pop()
            .expect("one target"),
    )
}

/// Which coefficient of which generator a certificate covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateLabel {
    SumFormula { k: u32, n: u32, power: u32 },
    CyclicSum { word: Word, power: u32 },
}

impl fmt::Display for CertificateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SumFormula { k, n, power } => write!(f, "sum-formula k={k} n={n} power={power}"),
            Self::CyclicSum { word, power } => {
                write!(f, "cyclic w={} power={power}", word.to_index_text())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub alpha: Q,
    pub entries: Vec<(CertificateLabel, RelationCertificate)>,
}

impl ReductionReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|(_, c)| c.verify())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertificateLabel> {
        self.entries
            .iter()
            .filter(|(_, c)| !c.verify())
            .map(|(l, _)| l)
    }
}

/// Taylor coefficients at `α` for every power up to `degree`, even when the
/// generator's top coefficients cancel.
fn padded_taylor(g: &FormalSum, alpha: &Q, degree: u32) -> Vec<FormalSum> {
    let mut coeffs = taylor_shift(g, alpha);
    coeffs.resize(coeffs.len().max(degree as usize + 1), FormalSum::zero());
    coeffs
}

/// `S^t(x_{k,n}) - P_{k,n}(t) z_k` for `1 <= n < k`.
pub fn sf_generator(family: SumFamily) -> FormalSum {
    let mut g = s_t(&family.sum());
    g.add_term(Word::from_subscripts(&[family.k()]), &-&family.poly());
    g
}

/// Expands every sum-formula generator of weight `k` around `α` and
/// certifies each coefficient against the generator values at `α`.
pub fn verify_sf_reduction_at(k: u32, alpha: &Q) -> Result<ReductionReport> {
    if k < 2 {
        return Err(Error::WeightTooSmall(k));
    }
    let generators: Vec<FormalSum> = (1..k)
        .map(|n| sf_generator(SumFamily::new(k, n).expect("n < k")))
        .collect();
    let at_alpha: Vec<FormalSum> = generators.iter().map(|g| g.substitute_t(alpha)).collect();
    let mut labels = Vec::new();
    let mut targets = Vec::new();
    for (n, g) in (1..k).zip(&generators) {
        for (power, coeff) in padded_taylor(g, alpha, n - 1).into_iter().enumerate() {
            labels.push(CertificateLabel::SumFormula {
                k,
                n,
                power: power as u32,
            });
            targets.push(coeff);
        }
    }
    let certs = span_membership_many(&targets, &at_alpha)?;
    Ok(ReductionReport {
        alpha: alpha.clone(),
        entries: labels.into_iter().zip(certs).collect(),
    })
}

pub fn verify_sf_reduction(k: u32) -> Result<ReductionReport> {
    verify_sf_reduction_at(k, &Q::zero())
}

/// Words of weight `k` and length below `k`: the cyclic-sum generator indices.
pub fn csf_words(k: u32) -> Vec<Word> {
    words_of_weight(k)
        .into_iter()
        .filter(|w| (w.len() as u32) < k)
        .collect()
}

/// Expands every `f_w` with `w` of weight `k` around `α` and certifies each
/// coefficient against the values `f_{w'}(α)`.
pub fn verify_csf_reduction_at(k: u32, alpha: &Q) -> Result<ReductionReport> {
    if k < 2 {
        return Err(Error::WeightTooSmall(k));
    }
    let words = csf_words(k);
    let generators: Vec<FormalSum> = words.iter().map(csf_generator).collect::<Result<_>>()?;
    let at_alpha: Vec<FormalSum> = generators.iter().map(|g| g.substitute_t(alpha)).collect();
    let mut labels = Vec::new();
    let mut targets = Vec::new();
    for (w, g) in words.iter().zip(&generators) {
        for (power, coeff) in padded_taylor(g, alpha, w.len() as u32)
            .into_iter()
            .enumerate()
        {
            labels.push(CertificateLabel::CyclicSum {
                word: w.clone(),
                power: power as u32,
            });
            targets.push(coeff);
        }
    }
    let certs = span_membership_many(&targets, &at_alpha)?;
    Ok(ReductionReport {
        alpha: alpha.clone(),
        entries: labels.into_iter().zip(certs).collect(),
    })
}

pub fn verify_csf_reduction(k: u32) -> Result<ReductionReport> {
    verify_csf_reduction_at(k, &Q::zero())
}
