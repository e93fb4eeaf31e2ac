//! Exact representation of 𝔥¹[t] and its products.

pub mod poly;
pub mod product;
pub mod sum;
pub mod text;
pub mod word;

pub use poly::{binomial, q, qi, rational_record, rational_short, RatPoly, Q};
pub use product::{harmonic_product, star_product, t_harmonic_product, QuasiShuffle};
pub use sum::{circle_act, FormalSum};
pub use text::parse_rational;
pub use word::{words_of_weight, words_up_to_weight, Index, Letter, Word};
