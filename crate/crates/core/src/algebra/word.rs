//! Letters `z_k`, words in those letters, and MZV indices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The letter `z_k`, `k >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Parse("letter subscript must be >= 1".into()));
        }
        Ok(Self(k))
    }

    pub fn k(self) -> u32 {
        self.0
    }

    /// `z_k ∘ z_l = z_{k+l}`.
    pub fn circle(self, other: Letter) -> Letter {
        Letter(self.0 + other.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}", self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}", self.0)
    }
}

/// A monic monomial `z_{k_1} ⋯ z_{k_n}`; the empty word is the unit `1`.
///
/// Ordering is lexicographic in the subscripts, with a proper prefix sorting first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    /// Builds a word from subscripts. Panics if any subscript is zero; use
    /// parsing for untrusted input.
    pub fn from_subscripts(ks: &[u32]) -> Self {
        Self {
            letters: ks
                .iter()
                .map(|&k| Letter::new(k).expect("subscript >= 1"))
                .collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn subscripts(&self) -> Vec<u32> {
        self.letters.iter().map(|l| l.k()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.letters.iter().map(|l| l.k()).sum()
    }

    pub fn depth(&self) -> usize {
        self.letters.len()
    }

    /// Leading subscript is at least 2 (or the word is the unit).
    pub fn is_admissible(&self) -> bool {
        self.letters.first().is_none_or(|l| l.k() >= 2)
    }

    pub fn prepend(&self, a: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(a);
        letters.extend_from_slice(&self.letters);
        Word { letters }
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    /// Comma-separated subscripts, `2,1,1`; the unit prints as an empty string.
    pub fn to_index_text(&self) -> String {
        self.subscripts()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses `2,1,1`. The empty string is the unit.
    pub fn parse_index_text(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::unit());
        }
        let letters = s
            .split(',')
            .map(|part| {
                let k: u32 = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad subscript {part:?} in {s:?}")))?;
                Letter::new(k)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { letters })
    }
}

impl From<&Index> for Word {
    fn from(idx: &Index) -> Self {
        Word::from_subscripts(idx.parts())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_index_text())
    }
}

/// `z2z1z1`; the unit prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A nonempty exponent string `(k_1, …, k_n)` of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Index {
    parts: Vec<u32>,
}

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Parse("index must be nonempty".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Parse("index entries must be >= 1".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_admissible(&self) -> bool {
        self.parts[0] >= 2
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn to_word(&self) -> Word {
        Word::from(self)
    }

    /// All indices `(k_1 □ k_2 □ ⋯ □ k_n)` with each box a comma or a plus,
    /// paired with the number of pluses. Ascending bitmask order.
    pub fn fillings(&self) -> Vec<(Index, u32)> {
        let n = self.parts.len();
        let mut out = Vec::with_capacity(1 << (n - 1));
        for mask in 0u64..(1u64 << (n - 1)) {
            let mut parts = vec![self.parts[0]];
            for i in 1..n {
                if mask >> (i - 1) & 1 == 1 {
                    *parts.last_mut().unwrap() += self.parts[i];
                } else {
                    parts.push(self.parts[i]);
                }
            }
            out.push((Index { parts }, mask.count_ones()));
        }
        out
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let w = Word::parse_index_text(s)?;
        Index::new(w.subscripts())
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All words of the given weight (compositions of `weight`), ascending order.
pub fn words_of_weight(weight: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    compositions(weight, &mut cur, &mut out);
    out.sort();
    out
}

fn compositions(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Word>) {
    if rest == 0 {
        out.push(Word::from_subscripts(cur));
        return;
    }
    for k in 1..=rest {
        cur.push(k);
        compositions(rest - k, cur, out);
        cur.pop();
    }
}

/// All nonempty words with weight at most `max_weight`, ascending order.
pub fn words_up_to_weight(max_weight: u32) -> Vec<Word> {
    let mut out: Vec<Word> = (1..=max_weight).flat_map(words_of_weight).collect();
    out.sort();
    out
}
