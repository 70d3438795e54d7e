//! Words over an abstract alphabet and the position partition `P(W)`.
//!
//! A [`Word`] stores opaque [`Letter`] ids. Two words are equivalent when the
//! same positions carry the same letters, which is captured either by the
//! [`SetPartition`] of positions or by the canonical relabelling produced by
//! [`Word::canonicalize`]. All positions exposed by this module are 1-based.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, SnakeError};

/// An opaque letter. In canonical words letters are `0, 1, 2, ...` in order
/// of first appearance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    /// Parses a single letter in text form (`a`..`z`, or `x1`, `x2`, ...).
    pub fn parse(s: &str) -> Result<Letter> {
        let word: Word = s.parse()?;
        match word.letters() {
            [letter] => Ok(*letter),
            _ => Err(SnakeError::Parse {
                what: "letter",
                reason: format!("expected exactly one letter, got {s:?}"),
            }),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", char::from(b'a' + self.0 as u8))
        } else {
            write!(f, "x{}", self.0 - 25)
        }
    }
}

/// A finite sequence of letters. The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        Word(ids.into_iter().map(Letter).collect())
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

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// The letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> Letter {
        self.0[i - 1]
    }

    /// The subword `[w_j ... w_l]` (1-based, inclusive).
    pub fn subword(&self, j: usize, l: usize) -> Result<Word> {
        if j == 0 || l > self.len() || j > l {
            return Err(SnakeError::IndexOutOfRange {
                index: if j == 0 || j > l { j } else { l },
                max: self.len(),
            });
        }
        Ok(Word(self.0[j - 1..l].to_vec()))
    }

    /// 1-based positions at which `x` occurs, ascending.
    pub fn positions_of(&self, x: Letter) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &y)| y == x)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn count(&self, x: Letter) -> usize {
        self.0.iter().filter(|&&y| y == x).count()
    }

    /// Distinct letters in order of first appearance.
    pub fn distinct_letters(&self) -> Vec<Letter> {
        let mut seen = HashSet::new();
        self.0.iter().copied().filter(|x| seen.insert(*x)).collect()
    }

    /// A letter id not used anywhere in the word.
    pub(crate) fn fresh_letter(&self) -> Letter {
        Letter(self.0.iter().map(|x| x.0 + 1).max().unwrap_or(0))
    }

    /// Relabels letters `0, 1, 2, ...` in order of first appearance.
    pub fn canonicalize(&self) -> Word {
        let mut relabel: HashMap<Letter, u32> = HashMap::new();
        let letters = self
            .0
            .iter()
            .map(|x| {
                let next = relabel.len() as u32;
                Letter(*relabel.entry(*x).or_insert(next))
            })
            .collect();
        Word(letters)
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// The position partition `P(W)`: `i` and `i'` share a block iff
    /// `w_i = w_i'`.
    pub fn partition(&self) -> Result<SetPartition> {
        if self.is_empty() {
            return Err(SnakeError::EmptyWord);
        }
        let mut blocks: BTreeMap<Letter, Vec<usize>> = BTreeMap::new();
        for (i, x) in self.0.iter().enumerate() {
            blocks.entry(*x).or_default().push(i + 1);
        }
        Ok(SetPartition::from_blocks(blocks.into_values().collect()))
    }

    pub fn equivalent(&self, other: &Word) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// No repeated letters. The empty word is primitive.
    pub fn is_primitive(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.len());
        self.0.iter().all(|x| seen.insert(*x))
    }

    /// `w_1 = w_m` and `[w_1 ... w_m)` is primitive.
    pub fn is_semi_primitive(&self) -> Result<bool> {
        if self.len() < 2 {
            return Err(SnakeError::TooShort {
                len: self.len(),
                min: 2,
            });
        }
        let m = self.len();
        Ok(self.0[0] == self.0[m - 1] && Word::slice_is_primitive(&self.0[..m - 1]))
    }

    pub(crate) fn slice_is_primitive(letters: &[Letter]) -> bool {
        let mut seen = HashSet::with_capacity(letters.len());
        letters.iter().all(|x| seen.insert(*x))
    }

    /// Every letter occurs exactly twice.
    pub fn is_binary(&self) -> bool {
        let mut counts: HashMap<Letter, usize> = HashMap::new();
        for x in &self.0 {
            *counts.entry(*x).or_default() += 1;
        }
        counts.values().all(|&c| c == 2)
    }

    /// `r(j)`: the position of the first occurrence of `w_j` (so `r(j) = j`
    /// for node entries). 1-based.
    pub fn node_entry_map(&self) -> Vec<usize> {
        let mut first: HashMap<Letter, usize> = HashMap::new();
        self.0
            .iter()
            .enumerate()
            .map(|(i, x)| *first.entry(*x).or_insert(i + 1))
            .collect()
    }

    /// Whether `w_i` (1-based) is the first occurrence of its letter.
    pub fn is_node_entry(&self, i: usize) -> bool {
        let x = self.at(i);
        !self.0[..i - 1].contains(&x)
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = SnakeError;

    /// Parses `a`..`z` and extended letters `x1`, `x2`, ... (`x` followed by
    /// digits). Surrounding brackets are ignored, so `[abab]` parses too.
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        let s = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(s);
        let chars: Vec<char> = s.chars().collect();
        let mut letters = Vec::with_capacity(chars.len());
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if !c.is_ascii_lowercase() {
                return Err(SnakeError::Parse {
                    what: "word",
                    reason: format!("unexpected character {c:?} at position {}", i + 1),
                });
            }
            if c == 'x' && i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let digits: String = chars[start..end].iter().collect();
                let n: u32 = digits.parse().map_err(|_| SnakeError::Parse {
                    what: "word",
                    reason: format!("bad extended letter x{digits}"),
                })?;
                if n == 0 {
                    return Err(SnakeError::Parse {
                        what: "word",
                        reason: "extended letters start at x1".into(),
                    });
                }
                letters.push(Letter(25 + n));
                i = end;
            } else {
                letters.push(Letter(c as u32 - 'a' as u32));
                i += 1;
            }
        }
        Ok(Word(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A partition of `{1, ..., n}` into non-empty blocks, kept in canonical
/// order: blocks sorted by minimum, elements ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition from arbitrary blocks, sorting into canonical
    /// order. Does not check coverage; see [`SetPartition::try_new`].
    pub(crate) fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        SetPartition { blocks }
    }

    /// Checks that `blocks` are non-empty, disjoint and cover `{1..=n}`.
    pub fn try_new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for b in &blocks {
            if b.is_empty() {
                return Err(SnakeError::Parse {
                    what: "partition",
                    reason: "empty block".into(),
                });
            }
            for &i in b {
                if i == 0 || i > n {
                    return Err(SnakeError::IndexOutOfRange { index: i, max: n });
                }
                if seen[i] {
                    return Err(SnakeError::Parse {
                        what: "partition",
                        reason: format!("element {i} appears twice"),
                    });
                }
                seen[i] = true;
            }
        }
        if let Some(missing) = (1..=n).find(|&i| !seen[i]) {
            return Err(SnakeError::Parse {
                what: "partition",
                reason: format!("element {missing} is not covered"),
            });
        }
        Ok(SetPartition::from_blocks(blocks))
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Size of the underlying set.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// The block containing `i`, if any.
    pub fn block_of(&self, i: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.contains(&i))
            .map(Vec::as_slice)
    }

    /// Applies `f` to every element and re-sorts.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> SetPartition {
        SetPartition::from_blocks(
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&i| f(i)).collect())
                .collect(),
        )
    }

    /// Parses `"1,5;2,7"`. The empty string is the partition of the empty set.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SetPartition { blocks: Vec::new() });
        }
        let blocks = s
            .split(';')
            .map(|block| {
                block
                    .split(',')
                    .map(|e| {
                        e.trim().parse::<usize>().map_err(|_| SnakeError::Parse {
                            what: "partition",
                            reason: format!("bad element {e:?}"),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::try_new(blocks, n)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (bi, b) in self.blocks.iter().enumerate() {
            if bi > 0 {
                f.write_str(";")?;
            }
            for (ei, e) in b.iter().enumerate() {
                if ei > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(deserializer)?;
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::try_new(blocks, n).map_err(serde::de::Error::custom)
    }
}
