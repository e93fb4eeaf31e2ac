mod common;

use common::*;
use proptest::prelude::*;
use tzeta::{
    harmonic_product, q, qi, star_product, t_harmonic_product, FormalSum, QuasiShuffle, RatPoly,
    Word,
};

type Product = fn(&FormalSum, &FormalSum) -> FormalSum;

const PRODUCTS: [(&str, Product); 3] = [
    ("harmonic", harmonic_product),
    ("star", star_product),
    ("t-harmonic", t_harmonic_product),
];

fn pairs(max_weight: u32) -> Vec<(Word, Word)> {
    let words = all_words(max_weight);
    let mut out = Vec::new();
    for u in &words {
        for v in &words {
            if u.weight() + v.weight() <= max_weight {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

#[test]
fn matches_naive_recursion() {
    let cases = [
        (harmonic_coeffs(), harmonic_product as Product),
        (star_coeffs(), star_product),
        (t_coeffs(), t_harmonic_product),
    ];
    for (u, v) in pairs(7) {
        for ((c1, c2), f) in &cases {
            let expected = naive_product(u.letters(), v.letters(), c1, c2);
            assert_eq!(
                f(&FormalSum::word(u.clone()), &FormalSum::word(v.clone())),
                expected,
                "{u} {v}"
            );
        }
    }
}

#[test]
fn commutative_up_to_weight_8() {
    for (u, v) in pairs(8) {
        let (a, b) = (FormalSum::word(u.clone()), FormalSum::word(v.clone()));
        for (name, f) in PRODUCTS {
            assert_eq!(f(&a, &b), f(&b, &a), "{name}: {u} {v}");
        }
    }
}

#[test]
fn associative_up_to_weight_7() {
    let words = all_words(7);
    for u in &words {
        for v in words.iter().filter(|v| u.weight() + v.weight() <= 7) {
            for x in words
                .iter()
                .filter(|x| u.weight() + v.weight() + x.weight() <= 7)
            {
                let (a, b, c) = (
                    FormalSum::word(u.clone()),
                    FormalSum::word(v.clone()),
                    FormalSum::word(x.clone()),
                );
                for (name, f) in PRODUCTS {
                    assert_eq!(f(&f(&a, &b), &c), f(&a, &f(&b, &c)), "{name}: {u} {v} {x}");
                }
            }
        }
    }
}

#[test]
fn specializes_to_harmonic_and_star() {
    for (u, v) in pairs(8) {
        let (a, b) = (FormalSum::word(u.clone()), FormalSum::word(v.clone()));
        let tp = t_harmonic_product(&a, &b);
        assert_eq!(tp.substitute_t(&qi(0)), harmonic_product(&a, &b), "{u} {v}");
        assert_eq!(tp.substitute_t(&qi(1)), star_product(&a, &b), "{u} {v}");
    }
}

#[test]
fn constant_parameter_engine_matches_substitution() {
    let half = QuasiShuffle::t_harmonic_at(&RatPoly::constant(q(1, 2)));
    for (u, v) in pairs(6) {
        let (a, b) = (FormalSum::word(u.clone()), FormalSum::word(v.clone()));
        assert_eq!(
            half.apply(&a, &b),
            t_harmonic_product(&a, &b).substitute_t(&q(1, 2))
        );
    }
}

#[test]
fn weight_grading_and_normal_form() {
    for (u, v) in pairs(8) {
        let (a, b) = (FormalSum::word(u.clone()), FormalSum::word(v.clone()));
        for (name, f) in PRODUCTS {
            let p = f(&a, &b);
            assert!(normal_form(&p), "{name}: {u} {v}");
            assert_eq!(
                p.homogeneous_weight(),
                Some(u.weight() + v.weight()),
                "{name}: {u} {v}"
            );
        }
    }
}

#[test]
fn t_half_cancels_overlap() {
    // At t = 1/2 the single-circle term vanishes: z1 ∗ z1 = 2 z1z1.
    let p = t_harmonic_product(&fs(&[1]), &fs(&[1])).substitute_t(&q(1, 2));
    assert_eq!(p, fs(&[1, 1]).scale_q(&qi(2)));
}

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec(1u32..=3, 0..=3).prop_map(|ks| Word::from_subscripts(&ks))
}

fn sum_strategy() -> impl Strategy<Value = FormalSum> {
    prop::collection::vec((word_strategy(), -3i64..=3, 0u32..=2), 0..=3).prop_map(|terms| {
        let mut e = FormalSum::zero();
        for (w, c, d) in terms {
            e.add_term(w, &RatPoly::monomial(qi(c), d));
        }
        e
    })
}

proptest! {
    #[test]
    fn bilinear_and_commutative_on_sums(a in sum_strategy(), b in sum_strategy(), c in sum_strategy()) {
        for (_, f) in PRODUCTS {
            prop_assert_eq!(f(&a, &b), f(&b, &a));
            prop_assert_eq!(f(&a, &(&b + &c)), &f(&a, &b) + &f(&a, &c));
            prop_assert!(normal_form(&f(&a, &b)));
        }
    }

    #[test]
    fn unit_is_neutral(a in sum_strategy()) {
        for (_, f) in PRODUCTS {
            prop_assert_eq!(f(&FormalSum::one(), &a), a.clone());
        }
    }

    #[test]
    fn cancellation_leaves_no_zero(a in sum_strategy()) {
        let z = &a - &a;
        prop_assert!(z.is_zero());
        prop_assert_eq!(z.len(), 0);
    }
}
