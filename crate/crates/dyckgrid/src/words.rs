//! Parenthesis words and the brute-force ground truth for substrings and
//! bounded-depth Dyck membership.
//!
//! A word is a bit sequence where `0` is an opening and `1` a closing
//! parenthesis. The *balance* of a word is the number of zeros minus the
//! number of ones. A `±k`-substring is a contiguous substring whose balance
//! is `+k` or `-k`; it is *minimal* when no proper substring has the same
//! balance.

use std::fmt;
use std::str::FromStr;

use bitvec::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A parenthesis word stored as a packed bit sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: BitVec<u64, Lsb0>,
}

impl Word {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        Word {
            bits: bits.into_iter().collect(),
        }
    }

    /// Builds the word of length `n` whose symbol `i` is bit `i` of `mask`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        assert!(n <= 64);
        Word::from_bits((0..n).map(|i| (mask >> i) & 1 == 1))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Symbol at `i`: `false` for `(`, `true` for `)`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().by_vals()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut bits = self.bits.clone();
        bits.extend_from_bitslice(&other.bits);
        Word { bits }
    }

    pub fn reversed(&self) -> Word {
        Word::from_bits(self.bits.iter().by_vals().rev())
    }

    /// Balance of the view `x[i..=j]`.
    pub fn balance_of(&self, i: usize, j: usize) -> i64 {
        assert!(i <= j && j < self.len(), "view [{i},{j}] out of range");
        let ones = self.bits[i..=j].count_ones() as i64;
        (j - i + 1) as i64 - 2 * ones
    }

    /// Parenthesis rendering, e.g. `(())`.
    pub fn to_parens(&self) -> String {
        self.iter().map(|b| if b { ')' } else { '(' }).collect()
    }

    /// Binary rendering, e.g. `0011`.
    pub fn to_binary(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts either a string over `(`/`)` or over `0`/`1`; `(` maps to 0.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parens = s.chars().all(|c| c == '(' || c == ')');
        let binary = s.chars().all(|c| c == '0' || c == '1');
        if !(parens || binary) {
            return Err(Error::InvalidWord(s.to_string()));
        }
        Ok(Word::from_bits(s.chars().map(|c| c == ')' || c == '1')))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.to_binary())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary())
    }
}

/// Sign of a nonzero balance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn of(balance: i64) -> Option<Sign> {
        match balance.cmp(&0) {
            std::cmp::Ordering::Greater => Some(Sign::Plus),
            std::cmp::Ordering::Less => Some(Sign::Minus),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A nonempty subset of `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignSet {
    plus: bool,
    minus: bool,
}

impl SignSet {
    pub const PLUS: SignSet = SignSet {
        plus: true,
        minus: false,
    };
    pub const MINUS: SignSet = SignSet {
        plus: false,
        minus: true,
    };
    pub const BOTH: SignSet = SignSet {
        plus: true,
        minus: true,
    };

    pub fn contains(self, sign: Sign) -> bool {
        match sign {
            Sign::Plus => self.plus,
            Sign::Minus => self.minus,
        }
    }

    pub fn all() -> [SignSet; 3] {
        [SignSet::PLUS, SignSet::MINUS, SignSet::BOTH]
    }
}

impl FromStr for SignSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" | "+1" => Ok(SignSet::PLUS),
            "-" | "minus" | "-1" => Ok(SignSet::MINUS),
            "both" | "+-" | "±" => Ok(SignSet::BOTH),
            _ => Err(Error::InvalidParams(format!("unknown sign set {s:?}"))),
        }
    }
}

/// Location of a minimal `±k`-substring `x[i..=j]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubstringMatch {
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
}

impl SubstringMatch {
    pub fn new(i: usize, j: usize, sign: Sign) -> Self {
        debug_assert!(i <= j);
        SubstringMatch { i, j, sign }
    }

    pub fn len(&self) -> usize {
        self.j - self.i + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, t: usize) -> bool {
        self.i <= t && t <= self.j
    }
}

/// Number of zeros minus number of ones.
pub fn balance(w: &Word) -> i64 {
    w.len() as i64 - 2 * w.bits.count_ones() as i64
}

fn prefix_balances(w: &Word) -> impl Iterator<Item = i64> + '_ {
    w.iter().scan(0i64, |acc, b| {
        *acc += if b { -1 } else { 1 };
        Some(*acc)
    })
}

/// Largest balance over the nonempty prefixes `x[0..=i]`.
pub fn prefix_height(w: &Word) -> Result<i64> {
    prefix_balances(w).max().ok_or(Error::EmptyWord)
}

/// Smallest balance over the nonempty prefixes `x[0..=i]`.
pub fn prefix_min(w: &Word) -> Result<i64> {
    prefix_balances(w).min().ok_or(Error::EmptyWord)
}

/// Whether `x[i..=j]` contains a substring other than itself with balance `target`.
fn has_proper_substring_with_balance(prefix: &[i64], i: usize, j: usize, target: i64) -> bool {
    (i..=j).any(|a| {
        (a..=j)
            .filter(|&b| (a, b) != (i, j))
            .any(|b| prefix[b + 1] - prefix[a] == target)
    })
}

/// All minimal `±k`-substrings of `w`, by increasing start index.
///
/// Brute force over all `O(n^2)` substrings; this is the reference every
/// search routine is checked against.
pub fn oracle_minimal_substrings(w: &Word, k: usize) -> Vec<SubstringMatch> {
    let n = w.len();
    let k = k as i64;
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0i64);
    prefix.extend(prefix_balances(w));

    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let f = prefix[j + 1] - prefix[i];
            if f.abs() != k {
                continue;
            }
            if !has_proper_substring_with_balance(&prefix, i, j, f) {
                out.push(SubstringMatch::new(i, j, Sign::of(f).expect("k > 0")));
            }
        }
    }
    out.sort();
    out
}

/// Membership in the Dyck language of depth at most `k`: every prefix balance
/// lies in `[0, k]` and the total balance is zero. The empty word is accepted.
pub fn oracle_dyck(w: &Word, k: usize) -> bool {
    let mut h = 0i64;
    for b in w.iter() {
        h += if b { -1 } else { 1 };
        if h < 0 || h > k as i64 {
            return false;
        }
    }
    h == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn balance_examples() {
        assert_eq!(balance(&w("0011")), 0);
        assert_eq!(balance(&w("000")), 3);
        assert_eq!(balance(&w("001100011011")), 0);
        assert_eq!(balance(&Word::new()), 0);
    }

    #[test]
    fn literal_forms_agree() {
        assert_eq!(w("(())"), w("0011"));
        assert!("(01)".parse::<Word>().is_err());
        assert!("abc".parse::<Word>().is_err());
        assert_eq!(w("").len(), 0);
    }

    #[test]
    fn prefix_extremes() {
        assert_eq!(prefix_height(&w("001100011011")).unwrap(), 3);
        assert_eq!(prefix_height(&w("01")).unwrap(), 1);
        assert_eq!(prefix_min(&w("10")).unwrap(), -1);
        assert_eq!(prefix_height(&Word::new()), Err(Error::EmptyWord));
        assert_eq!(prefix_min(&Word::new()), Err(Error::EmptyWord));
    }

    #[test]
    fn minimal_substring_examples() {
        assert_eq!(
            oracle_minimal_substrings(&w("0011"), 2),
            vec![
                SubstringMatch::new(0, 1, Sign::Plus),
                SubstringMatch::new(2, 3, Sign::Minus)
            ]
        );
        assert!(oracle_minimal_substrings(&w("01"), 2).is_empty());
        assert!(oracle_minimal_substrings(&w("0011"), 3).is_empty());
        // 0 1 0 0 0: the +3 substring [2,4] is minimal, [0,4] contains it.
        assert_eq!(
            oracle_minimal_substrings(&w("01000"), 3),
            vec![SubstringMatch::new(2, 4, Sign::Plus)]
        );
    }

    #[test]
    fn dyck_examples() {
        assert!(oracle_dyck(&w("0011"), 2));
        assert!(!oracle_dyck(&w("0011"), 1));
        assert!(!oracle_dyck(&w("10"), 5));
        assert!(!oracle_dyck(&w("1001"), 5));
        for k in 0..4 {
            assert!(oracle_dyck(&Word::new(), k));
        }
    }

    #[test]
    fn balance_of_views() {
        let x = w("001100011011");
        assert_eq!(x.balance_of(0, 11), 0);
        assert_eq!(x.balance_of(4, 6), 3);
        assert_eq!(x.balance_of(2, 3), -2);
    }

    #[test]
    fn additivity_exhaustive() {
        for n1 in 0..=12usize {
            for n2 in 0..=(12 - n1) {
                for a in 0..(1u64 << n1) {
                    for b in 0..(1u64 << n2) {
                        let x = Word::from_mask(a, n1);
                        let y = Word::from_mask(b, n2);
                        assert_eq!(balance(&x.concat(&y)), balance(&x) + balance(&y));
                    }
                }
            }
        }
    }
}
