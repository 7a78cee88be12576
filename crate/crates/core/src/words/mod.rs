//! Primed letters and words, together with the signature rules computing the
//! extended queer crystal operators on `(B+_n)^{⊗m}`.
//!
//! Words are identified with tensors `w_1 ⊗ w_2 ⊗ ⋯ ⊗ w_m` in the
//! anti-Kashiwara convention. The rank `n` is passed to each operator call
//! rather than stored in the word.

mod tensor;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use tensor::{
    index_set, tensor_lower, tensor_raise, Crystal, Flavor, StandardCrystal, TensorPower,
    TensorProduct, TrivialCrystal, WordCrystal,
};

/// A primed number `i'` or unprimed number `i`, stored doubled so that
/// `i' = i - 1/2` becomes the odd integer `2i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    /// Builds a letter from its doubled value; `None` for zero.
    pub fn from_doubled(doubled: u32) -> Option<Self> {
        (doubled >= 1).then_some(Letter(doubled))
    }

    /// The unprimed letter `value`.
    ///
    /// Panics if `value == 0`.
    pub fn unprimed(value: u32) -> Self {
        assert!(value >= 1, "letters are positive");
        Letter(2 * value)
    }

    /// The primed letter `value'`.
    ///
    /// Panics if `value == 0`.
    pub fn primed(value: u32) -> Self {
        assert!(value >= 1, "letters are positive");
        Letter(2 * value - 1)
    }

    pub fn new(value: u32, primed: bool) -> Self {
        if primed {
            Letter::primed(value)
        } else {
            Letter::unprimed(value)
        }
    }

    pub fn doubled(self) -> u32 {
        self.0
    }

    pub fn is_primed(self) -> bool {
        self.0 % 2 == 1
    }

    /// The ceiling, i.e. the letter with its prime removed, as an integer.
    pub fn ceil(self) -> u32 {
        self.0.div_ceil(2)
    }

    pub fn unprime(self) -> Self {
        Letter::unprimed(self.ceil())
    }

    pub fn with_prime(self, primed: bool) -> Self {
        Letter::new(self.ceil(), primed)
    }

    pub fn toggle_prime(self) -> Self {
        self.with_prime(!self.is_primed())
    }

    /// Adds an integer, keeping the prime: `i' + 1 = (i+1)'`.
    pub fn shift(self, delta: i32) -> Option<Self> {
        let doubled = self.0 as i64 + 2 * delta as i64;
        (doubled >= 1).then_some(Letter(doubled as u32))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_primed() {
            write!(f, "{}'", self.ceil())
        } else {
            write!(f, "{}", self.ceil())
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            what: "letter",
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("expected a positive integer optionally followed by '"));
        }
        let value: u32 = digits.parse().map_err(|_| err("integer out of range"))?;
        if value == 0 {
            return Err(err("letters are positive"));
        }
        if value > u32::MAX / 2 {
            return Err(err("integer out of range"));
        }
        Ok(Letter::new(value, primed))
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of primed letters.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.0.iter()
    }

    pub fn max_ceil(&self) -> u32 {
        self.0.iter().map(|l| l.ceil()).max().unwrap_or(0)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Positions (0-based) of primed letters.
    pub fn prime_pattern(&self) -> Vec<bool> {
        self.0.iter().map(|l| l.is_primed()).collect()
    }

    pub fn check_rank(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|l| l.ceil() as usize > n) {
            Some(l) => Err(Error::RankExceeded {
                letter: l.to_string(),
                rank: n,
            }),
            None => Ok(()),
        }
    }

    /// All words of length `len` with ceilings in `[n]`, optionally allowing
    /// primes, in increasing lexicographic order.
    pub fn all(len: usize, n: usize, primed: bool) -> Vec<Word> {
        let alphabet: Vec<Letter> = (1..=n as u32)
            .flat_map(|v| {
                if primed {
                    vec![Letter::primed(v), Letter::unprimed(v)]
                } else {
                    vec![Letter::unprimed(v)]
                }
            })
            .collect();
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&l| {
                        let mut letters = w.0.clone();
                        letters.push(l);
                        Word(letters)
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Whitespace-separated tokens such as `4' 4 3`, or, when the input has
    /// no whitespace at all, the compact form `4'43` with one digit per letter.
    fn from_str(s: &str) -> Result<Self> {
        if s.chars().any(char::is_whitespace) {
            return s
                .split_whitespace()
                .map(str::parse)
                .collect::<Result<Vec<_>>>()
                .map(Word);
        }
        let mut letters = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(ch) = chars.next() {
            let value = ch
                .to_digit(10)
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::Parse {
                    what: "word",
                    input: s.to_string(),
                    reason: format!("unexpected character {ch:?} in compact word"),
                })?;
            let primed = chars.next_if_eq(&'\'').is_some();
            letters.push(Letter::new(value, primed));
        }
        Ok(Word(letters))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Weight vector in `N^n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Weight(pub Vec<u32>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Component `k` with 1-based indexing, zero when out of range.
    pub fn get(&self, k: usize) -> u32 {
        k.checked_sub(1)
            .and_then(|i| self.0.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `height(self - other)`: writing the difference as `Σ c_i (e_i - e_{i+1})`,
    /// returns `Σ c_i`. `None` if the difference does not have total sum zero.
    pub fn height_above(&self, other: &Weight) -> Option<i64> {
        let diff: Vec<i64> = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect();
        height(&diff)
    }
}

/// For `v` with zero coordinate sum, the sum of the coefficients of `v` in
/// the simple roots `e_i - e_{i+1}`.
pub fn height(v: &[i64]) -> Option<i64> {
    if v.iter().sum::<i64>() != 0 {
        return None;
    }
    let mut partial = 0;
    let mut total = 0;
    for &x in &v[..v.len().saturating_sub(1)] {
        partial += x;
        total += partial;
    }
    Some(total)
}

/// Operator labels `1̄, 0, 1, …, n-1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CrystalIndex {
    Bar1,
    Zero,
    Std(usize),
}

impl CrystalIndex {
    /// Rejects indices outside `{1̄, 0, 1, …, n-1}`.
    pub fn validate(self, n: usize) -> Result<()> {
        let ok = match self {
            CrystalIndex::Bar1 | CrystalIndex::Zero => n >= 2,
            CrystalIndex::Std(k) => k >= 1 && k < n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidIndex {
                index: self,
                rank: n,
            })
        }
    }

    /// Short label used in DOT and JSON exports: `b1`, `0`, `1`, `2`, ...
    pub fn label(self) -> String {
        match self {
            CrystalIndex::Bar1 => "b1".to_string(),
            CrystalIndex::Zero => "0".to_string(),
            CrystalIndex::Std(k) => k.to_string(),
        }
    }
}

impl fmt::Display for CrystalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for CrystalIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b1" | "bar1" | "-1" => Ok(CrystalIndex::Bar1),
            "0" => Ok(CrystalIndex::Zero),
            _ => s
                .parse::<usize>()
                .ok()
                .filter(|&k| k >= 1)
                .map(CrystalIndex::Std)
                .ok_or_else(|| Error::Parse {
                    what: "crystal index",
                    input: s.to_string(),
                    reason: "expected b1, 0, or a positive integer".to_string(),
                }),
        }
    }
}

/// Replaces each letter by its ceiling.
pub fn unprime_word(w: &Word) -> Word {
    w.iter().map(|l| l.unprime()).collect()
}

/// Component `i` counts the letters `i'` and `i`.
pub fn weight_of(w: &Word, n: usize) -> Result<Weight> {
    w.check_rank(n)?;
    let mut wt = vec![0; n];
    for l in w.iter() {
        wt[l.ceil() as usize - 1] += 1;
    }
    Ok(Weight(wt))
}

/// Unpaired positions (0-based) for the `k`-signature: letters `k', k` read as
/// `)` and letters `(k+1)', k+1` read as `(`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pairing {
    /// Unmatched `(`: letters `(k+1)'` or `k+1`.
    pub unmatched_left: Vec<usize>,
    /// Unmatched `)`: letters `k'` or `k`.
    pub unmatched_right: Vec<usize>,
}

pub fn i_pairing(w: &Word, k: usize) -> Pairing {
    let k = k as u32;
    let mut open: Vec<usize> = Vec::new();
    let mut unmatched_right = Vec::new();
    for (pos, l) in w.iter().enumerate() {
        let c = l.ceil();
        if c == k + 1 {
            open.push(pos);
        } else if c == k && open.pop().is_none() {
            unmatched_right.push(pos);
        }
    }
    Pairing {
        unmatched_left: open,
        unmatched_right,
    }
}

fn replace(w: &Word, pos: usize, letter: Letter) -> Word {
    let mut letters = w.0.clone();
    letters[pos] = letter;
    Word(letters)
}

/// Raising operator on words. Errors on an undefined index or a letter above
/// the rank; `Ok(None)` when the operator acts as zero.
pub fn e_word(w: &Word, i: CrystalIndex, n: usize) -> Result<Option<Word>> {
    i.validate(n)?;
    w.check_rank(n)?;
    Ok(raise_word(w, i))
}

/// Lowering operator on words; see [`e_word`].
pub fn f_word(w: &Word, i: CrystalIndex, n: usize) -> Result<Option<Word>> {
    i.validate(n)?;
    w.check_rank(n)?;
    Ok(lower_word(w, i))
}

/// Signature-rule raising operator without rank or index validation.
pub(crate) fn raise_word(w: &Word, i: CrystalIndex) -> Option<Word> {
    match i {
        CrystalIndex::Std(k) => {
            let pos = *i_pairing(w, k).unmatched_left.first()?;
            Some(replace(w, pos, w.0[pos].shift(-1)?))
        }
        CrystalIndex::Zero => {
            let first = w.iter().position(|l| l.ceil() == 1)?;
            if !w.0[first].is_primed() {
                return None;
            }
            Some(replace(w, first, w.0[first].unprime()))
        }
        CrystalIndex::Bar1 => {
            let j = w.iter().position(|l| l.ceil() == 2)?;
            match w.iter().position(|l| l.ceil() == 1) {
                None => Some(replace(w, j, w.0[j].shift(-1)?)),
                Some(k) if j > k => None,
                Some(k) => {
                    // 2^• 1^∘ at positions j < k becomes 1^∘ 1^•
                    let mut letters = w.0.clone();
                    letters[j] = w.0[k];
                    letters[k] = w.0[j].shift(-1)?;
                    Some(Word(letters))
                }
            }
        }
    }
}

/// Signature-rule lowering operator without rank or index validation.
pub(crate) fn lower_word(w: &Word, i: CrystalIndex) -> Option<Word> {
    match i {
        CrystalIndex::Std(k) => {
            let pos = *i_pairing(w, k).unmatched_right.last()?;
            Some(replace(w, pos, w.0[pos].shift(1)?))
        }
        CrystalIndex::Zero => {
            let first = w.iter().position(|l| l.ceil() == 1)?;
            if w.0[first].is_primed() {
                return None;
            }
            Some(replace(w, first, w.0[first].with_prime(true)))
        }
        CrystalIndex::Bar1 => {
            let mut ones = w
                .iter()
                .enumerate()
                .filter(|(_, l)| l.ceil() == 1)
                .map(|(p, _)| p);
            let j = ones.next()?;
            if w.0[..j].iter().any(|l| l.ceil() == 2) {
                return None;
            }
            match ones.next() {
                None => Some(replace(w, j, w.0[j].shift(1)?)),
                Some(k) => {
                    // 1^∘ 1^• at positions j < k becomes 2^• 1^∘
                    let mut letters = w.0.clone();
                    letters[j] = w.0[k].shift(1)?;
                    letters[k] = w.0[j];
                    Some(Word(letters))
                }
            }
        }
    }
}

/// `(ε_i(w), φ_i(w))`: the number of times `e_i` and `f_i` can be applied.
pub fn string_lengths(w: &Word, i: CrystalIndex, n: usize) -> Result<(usize, usize)> {
    i.validate(n)?;
    w.check_rank(n)?;
    let count = |op: fn(&Word, CrystalIndex) -> Option<Word>| {
        let mut k = 0;
        let mut cur = w.clone();
        while let Some(next) = op(&cur, i) {
            cur = next;
            k += 1;
        }
        k
    };
    Ok((count(raise_word), count(lower_word)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn letters_parse_and_order() {
        let l: Letter = "4'".parse().unwrap();
        assert_eq!(l.doubled(), 7);
        assert!(l.is_primed());
        assert_eq!(l.ceil(), 4);
        assert!(Letter::primed(1) < Letter::unprimed(1));
        assert!(Letter::unprimed(1) < Letter::primed(2));
        assert!("0".parse::<Letter>().is_err());
        assert!("1''".parse::<Letter>().is_err());
        assert_eq!(Letter::from_doubled(0), None);
    }

    #[test]
    fn word_syntax() {
        assert_eq!(
            w("4' 4 3 3 2' 3' 3 2' 1'").to_string(),
            "4' 4 3 3 2' 3' 3 2' 1'"
        );
        assert_eq!(w("4'4332'3'32'1'"), w("4' 4 3 3 2' 3' 3 2' 1'"));
        assert_eq!(w(""), Word::empty());
        assert_eq!(w("12 3").0, vec![Letter::unprimed(12), Letter::unprimed(3)]);
        assert!("1x".parse::<Word>().is_err());
    }

    #[test]
    fn unprime_examples() {
        assert_eq!(unprime_word(&w("4' 4 3")), w("4 4 3"));
        assert_eq!(unprime_word(&w("")), w(""));
        assert_eq!(unprime_word(&w("1' 1 2'")), w("1 1 2"));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight_of(&w("1' 2 1"), 3).unwrap(), Weight(vec![2, 1, 0]));
        assert_eq!(weight_of(&w(""), 2).unwrap(), Weight(vec![0, 0]));
        assert_eq!(
            weight_of(&w("4' 4 3 3 2' 3' 3 2' 1'"), 4).unwrap(),
            Weight(vec![1, 2, 4, 2])
        );
        assert!(matches!(
            weight_of(&w("3"), 2),
            Err(Error::RankExceeded { .. })
        ));
    }

    #[test]
    fn pairing_examples() {
        // "2 1 2" reads "( ) (": the first two letters match, the last is free.
        let p = i_pairing(&w("2 1 2"), 1);
        assert_eq!(p.unmatched_left, vec![2]);
        assert!(p.unmatched_right.is_empty());
        let p = i_pairing(&w("1 1"), 1);
        assert_eq!(p.unmatched_right, vec![0, 1]);
        assert!(p.unmatched_left.is_empty());
        assert_eq!(i_pairing(&w(""), 1), Pairing::default());
    }

    #[test]
    fn raising_examples() {
        assert_eq!(
            e_word(&w("2"), CrystalIndex::Std(1), 2).unwrap(),
            Some(w("1"))
        );
        assert_eq!(
            e_word(&w("2' 1 1"), CrystalIndex::Bar1, 2).unwrap(),
            Some(w("1 1' 1"))
        );
        assert_eq!(e_word(&w("1 2"), CrystalIndex::Bar1, 2).unwrap(), None);
        assert_eq!(e_word(&w("1 2 1'"), CrystalIndex::Zero, 2).unwrap(), None);
        assert_eq!(
            e_word(&w("2 1' 2 1'"), CrystalIndex::Zero, 2).unwrap(),
            Some(w("2 1 2 1'"))
        );
    }

    #[test]
    fn lowering_examples() {
        assert_eq!(
            f_word(&w("1 2 1"), CrystalIndex::Zero, 2).unwrap(),
            Some(w("1' 2 1"))
        );
        assert_eq!(
            f_word(&w("1 1"), CrystalIndex::Bar1, 2).unwrap(),
            Some(w("2 1"))
        );
        assert_eq!(
            f_word(&w("1' 1"), CrystalIndex::Bar1, 2).unwrap(),
            Some(w("2 1'"))
        );
        for i in [CrystalIndex::Bar1, CrystalIndex::Zero, CrystalIndex::Std(1)] {
            assert_eq!(f_word(&w(""), i, 2).unwrap(), None);
        }
    }

    #[test]
    fn string_length_examples() {
        assert_eq!(
            string_lengths(&w("1 1"), CrystalIndex::Std(1), 2).unwrap(),
            (0, 2)
        );
        assert_eq!(
            string_lengths(&w(""), CrystalIndex::Std(1), 2).unwrap(),
            (0, 0)
        );
        assert_eq!(
            string_lengths(&w("1"), CrystalIndex::Zero, 2).unwrap(),
            (0, 1)
        );
    }

    #[test]
    fn index_set_is_closed() {
        assert!(matches!(
            e_word(&w("1"), CrystalIndex::Std(2), 2),
            Err(Error::InvalidIndex { .. })
        ));
        assert!(e_word(&w("1"), CrystalIndex::Std(0), 3).is_err());
        assert!(f_word(&w("1"), CrystalIndex::Bar1, 1).is_err());
    }

    #[test]
    fn height_of_simple_root() {
        assert_eq!(height(&[1, -1, 0]), Some(1));
        assert_eq!(height(&[1, 0, -1]), Some(2));
        assert_eq!(height(&[1, 0, 0]), None);
    }
}
