mod common;

use std::f64::consts::PI;

use common::*;
use tzeta::interpolation::{mzv_by_star, s_t, star_by_mzv};
use tzeta::numeric::{eval_element, mzsv, mzv, product, verify_identity, zeta_t, ZetaCache};
use tzeta::{harmonic_product, q, qi, t_harmonic_product, Error, FormalSum, Index, Word};

const M: u64 = 100_000;

fn admissible_indices(max_weight: u32) -> Vec<Index> {
    all_words(max_weight)
        .into_iter()
        .filter(|w| !w.is_unit() && w.is_admissible())
        .map(|w| Index::new(w.subscripts()).unwrap())
        .collect()
}

#[test]
fn truncated_sums_match_nested_loops() {
    // The reported value is the extrapolation 2 S(M) - S(M/2) of plain sums.
    for parts in [&[2u32][..], &[3], &[2, 1], &[3, 1, 1], &[2, 2, 1]] {
        let m = 64;
        let r = mzv(&Index::new(parts.to_vec()).unwrap(), m).unwrap();
        let s = |n: u64| brute_mzv(parts, n);
        let rich = |n: u64| 2.0 * s(n) - s(n / 2);
        assert!(
            (r.value - rich(m)).abs() < 1e-12,
            "{parts:?}: {} vs {}",
            r.value,
            rich(m)
        );
    }
}

#[test]
fn star_and_filling_expansion_agree() {
    let mut cache = ZetaCache::new(M);
    for idx in admissible_indices(6) {
        let star = mzsv(&idx, M).unwrap();
        let expanded = cache.element(&star_by_mzv(&idx), &qi(0)).unwrap();
        assert!(star.agrees_with(&expanded), "{idx}: {star} vs {expanded}");
    }
}

#[test]
fn inversion_agrees() {
    for idx in admissible_indices(6) {
        let direct = mzv(&idx, M).unwrap();
        let mut value = 0.0;
        let mut err = 0.0;
        for (w, c) in mzv_by_star(&idx).terms() {
            let s = mzsv(&Index::new(w.subscripts()).unwrap(), M).unwrap();
            let c = if c.coeff(0) > qi(0) { 1.0 } else { -1.0 };
            value += c * s.value;
            err += s.err;
        }
        assert!((direct.value - value).abs() <= direct.err + err, "{idx}");
    }
}

fn admissible_pairs(max_weight: u32) -> Vec<(Word, Word)> {
    let words: Vec<Word> = all_words(max_weight)
        .into_iter()
        .filter(|w| !w.is_unit() && w.is_admissible())
        .collect();
    let mut out = Vec::new();
    for u in &words {
        for v in words
            .iter()
            .filter(|v| u.weight() + v.weight() <= max_weight && u <= *v)
        {
            out.push((u.clone(), v.clone()));
        }
    }
    out
}

#[test]
fn harmonic_product_is_multiplicative() {
    let mut cache = ZetaCache::new(M);
    for (u, v) in admissible_pairs(6) {
        let p = harmonic_product(&FormalSum::word(u.clone()), &FormalSum::word(v.clone()));
        let lhs = cache.element(&p, &qi(0)).unwrap();
        let rhs = product(&cache.word(&u).unwrap(), &cache.word(&v).unwrap());
        assert!(lhs.agrees_with(&rhs), "{u} {v}: {lhs} vs {rhs}");
    }
}

#[test]
fn t_harmonic_product_is_multiplicative() {
    let mut cache = ZetaCache::new(M);
    for alpha in [qi(0), q(1, 2), qi(1), qi(-1)] {
        for (u, v) in admissible_pairs(6) {
            let (a, b) = (FormalSum::word(u.clone()), FormalSum::word(v.clone()));
            let lhs = cache
                .element(&s_t(&t_harmonic_product(&a, &b)), &alpha)
                .unwrap();
            let za = cache.element(&s_t(&a), &alpha).unwrap();
            let zb = cache.element(&s_t(&b), &alpha).unwrap();
            let rhs = product(&za, &zb);
            assert!(lhs.agrees_with(&rhs), "{u} {v} at {alpha}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn single_zeta_error_is_honest() {
    for m in [1_000u64, 10_000, 100_000] {
        for k in 2..=8 {
            let idx = Index::new(vec![k]).unwrap();
            let r = mzv(&idx, m).unwrap();
            let reference = mzv(&idx, 4 * m).unwrap();
            assert!(
                (r.value - reference.value).abs() <= r.err,
                "k={k} M={m}: {r} vs {reference}"
            );
        }
    }
}

#[test]
fn classical_values() {
    let z2 = mzv(&Index::new(vec![2]).unwrap(), M).unwrap();
    assert!((z2.value - PI * PI / 6.0).abs() <= z2.err);
    let z31 = mzv(&Index::new(vec![3, 1]).unwrap(), M).unwrap();
    assert!((z31.value - PI.powi(4) / 360.0).abs() <= z31.err);
    let z21 = mzv(&Index::new(vec![2, 1]).unwrap(), M).unwrap();
    let z3 = mzv(&Index::new(vec![3]).unwrap(), M).unwrap();
    assert!(z21.agrees_with(&z3));
    let star = mzsv(&Index::new(vec![2, 1]).unwrap(), M).unwrap();
    let z3_twice = product(&tzeta::numeric::NumResult::exact(2.0, M, "2"), &z3);
    assert!(star.agrees_with(&z3_twice));
}

#[test]
fn interpolates_between_mzv_and_mzsv() {
    let idx = Index::new(vec![2, 1, 1]).unwrap();
    let at0 = zeta_t(&idx, &qi(0), M).unwrap();
    let at1 = zeta_t(&idx, &qi(1), M).unwrap();
    assert!(at0.agrees_with(&mzv(&idx, M).unwrap()));
    assert!(at1.agrees_with(&mzsv(&idx, M).unwrap()));
    assert_eq!(at0.t.as_deref(), Some("0"));
}

#[test]
fn divergent_input_is_rejected() {
    let idx = Index::new(vec![1, 2]).unwrap();
    assert!(matches!(mzv(&idx, M), Err(Error::Divergent(_))));
    assert!(matches!(
        zeta_t(&idx, &q(1, 2), M),
        Err(Error::Divergent(_))
    ));
    assert!(matches!(
        eval_element(&fs(&[1]), &qi(0), M),
        Err(Error::DivergentTerm(_))
    ));
    assert!(matches!(
        mzv(&Index::new(vec![2]).unwrap(), 3),
        Err(Error::TruncationTooSmall { .. })
    ));
}

#[test]
fn identity_report_flags_false_identities() {
    let r = verify_identity(&fs(&[3]), &fs(&[2, 1]), &[qi(0)], M).unwrap();
    assert!(r.all_pass());
    let r = verify_identity(&fs(&[3]), &fs(&[2]), &[qi(0)], M).unwrap();
    assert!(!r.all_pass());
}
