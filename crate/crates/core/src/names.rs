//! Snake names: the two axioms, binary reduction, letter deletion, the
//! parameters `(j, k)` of a binary snake name and the insertion moves (A)
//! and (B) together with their unique inverse.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SnakeError};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    SnakeName,
    SpiralWord,
    Invalid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    /// Some letter appears only once.
    LetterCount,
    /// An interior entry is not strictly inside any semi-primitive subword.
    NoCoveringSemiPrimitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: Rule,
    /// 1-based position of the first failing entry (0 for the empty word).
    pub position: usize,
}

/// Outcome of [`validate`]. `violation` is present iff `kind` is `Invalid`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnakeWordVerdict {
    pub kind: VerdictKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
}

impl SnakeWordVerdict {
    const SNAKE: Self = SnakeWordVerdict {
        kind: VerdictKind::SnakeName,
        violation: None,
    };
    const SPIRAL: Self = SnakeWordVerdict {
        kind: VerdictKind::SpiralWord,
        violation: None,
    };

    fn invalid(rule: Rule, position: usize) -> Self {
        SnakeWordVerdict {
            kind: VerdictKind::Invalid,
            violation: Some(Violation { rule, position }),
        }
    }

    pub fn is_snake_name(&self) -> bool {
        self.kind == VerdictKind::SnakeName
    }

    pub fn is_spiral(&self) -> bool {
        self.kind == VerdictKind::SpiralWord
    }
}

impl fmt::Display for SnakeWordVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.violation) {
            (VerdictKind::Invalid, Some(v)) => {
                write!(f, "Invalid({:?}, position {})", v.rule, v.position)
            }
            (kind, _) => write!(f, "{kind:?}"),
        }
    }
}

/// For every start position `j` (1-based), the end `l` of the unique
/// semi-primitive subword `[w_j ... w_l]`, if one exists.
///
/// A semi-primitive subword starting at `j` must end at the first repeat
/// met while scanning right from `j`, and only if that repeat is `w_j`.
pub(crate) fn semi_primitive_ends(w: &Word) -> Vec<Option<usize>> {
    let letters = w.letters();
    let m = letters.len();
    let alphabet = letters.iter().map(|x| x.0 as usize + 1).max().unwrap_or(0);
    let mut stamp = vec![usize::MAX; alphabet];
    (0..m)
        .map(|j| {
            stamp[letters[j].0 as usize] = j;
            for (p, x) in letters.iter().enumerate().skip(j + 1) {
                if *x == letters[j] {
                    return Some(p + 1);
                }
                if stamp[x.0 as usize] == j {
                    return None;
                }
                stamp[x.0 as usize] = j;
            }
            None
        })
        .collect()
}

/// Classifies `w` as a snake name, a spiral word `x^q` (`q >= 3`), or an
/// invalid word with the first failing rule and position.
pub fn validate(w: &Word) -> SnakeWordVerdict {
    let m = w.len();
    if m == 0 {
        return SnakeWordVerdict::invalid(Rule::LetterCount, 0);
    }
    let letters = w.letters();
    if m >= 3 && letters.iter().all(|x| *x == letters[0]) {
        return SnakeWordVerdict::SPIRAL;
    }
    if let Some(i) = (1..=m).find(|&i| w.count(w.at(i)) < 2) {
        return SnakeWordVerdict::invalid(Rule::LetterCount, i);
    }
    // covered[k] counts semi-primitive subwords [w_j..w_l] with j < k < l.
    let mut delta = vec![0i64; m + 2];
    for (j0, end) in semi_primitive_ends(w).into_iter().enumerate() {
        if let Some(l) = end {
            let j = j0 + 1;
            if l > j + 1 {
                delta[j + 1] += 1;
                delta[l] -= 1;
            }
        }
    }
    let mut running = 0;
    for (k, d) in delta.iter().enumerate().take(m) {
        running += d;
        if k >= 2 && running == 0 {
            return SnakeWordVerdict::invalid(Rule::NoCoveringSemiPrimitive, k);
        }
    }
    SnakeWordVerdict::SNAKE
}

pub fn is_snake_name(w: &Word) -> bool {
    validate(w).is_snake_name()
}

pub(crate) fn require_snake_name(w: &Word) -> Result<()> {
    if is_snake_name(w) {
        Ok(())
    } else {
        Err(SnakeError::NotASnakeName {
            word: w.to_string(),
        })
    }
}

pub(crate) fn require_binary_snake_name(w: &Word) -> Result<()> {
    require_snake_name(w)?;
    if w.is_binary() {
        Ok(())
    } else {
        Err(SnakeError::NotBinary {
            word: w.to_string(),
        })
    }
}

/// The binary reduction of `w` with respect to `x`, with fresh letters for
/// `x_1 .. x_{p-1}` and every other letter left untouched (not
/// canonicalized).
pub fn binary_reduce_raw(w: &Word, x: Letter) -> Result<Word> {
    require_snake_name(w)?;
    let p = w.count(x);
    if p <= 2 {
        return Err(SnakeError::NotReducible {
            letter: x.to_string(),
            count: p,
        });
    }
    let base = w.fresh_letter().0;
    let fresh = |i: usize| Letter(base + i as u32 - 1);
    let mut out = Vec::with_capacity(w.len() + p - 2);
    let mut seen = 0;
    for &y in w.letters() {
        if y != x {
            out.push(y);
            continue;
        }
        seen += 1;
        match seen {
            1 => out.push(fresh(1)),
            t if t == p => out.push(fresh(p - 1)),
            t => {
                out.push(fresh(t - 1));
                out.push(fresh(t));
            }
        }
    }
    Ok(Word::new(out))
}

/// Binary reduction of `w` with respect to `x`, canonicalized.
pub fn binary_reduce(w: &Word, x: Letter) -> Result<Word> {
    Ok(binary_reduce_raw(w, x)?.canonicalize())
}

/// Reduces the letters in `order` first, then any remaining letter with more
/// than two occurrences, and canonicalizes.
pub fn full_binary_reduction_in_order(w: &Word, order: &[Letter]) -> Result<Word> {
    require_snake_name(w)?;
    let mut current = w.clone();
    for &x in order {
        current = binary_reduce_raw(&current, x)?;
    }
    for x in current.distinct_letters() {
        if current.count(x) > 2 {
            current = binary_reduce_raw(&current, x)?;
        }
    }
    Ok(current.canonicalize())
}

/// Reduces every letter with more than two occurrences, in order of first
/// appearance.
pub fn full_binary_reduction(w: &Word) -> Result<Word> {
    full_binary_reduction_in_order(w, &[])
}

/// `W - {x}`: removes both occurrences of `x` and canonicalizes.
pub fn delete(w: &Word, x: Letter) -> Result<Word> {
    let count = w.count(x);
    if count != 2 {
        return Err(SnakeError::NotDeletable {
            letter: x.to_string(),
            count,
        });
    }
    let kept: Vec<Letter> = w.letters().iter().copied().filter(|&y| y != x).collect();
    Ok(Word::new(kept).canonicalize())
}

/// Parameters `(j, k)` of a binary snake name of length greater than two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BinaryParams {
    /// Position of the second occurrence of the first letter.
    pub j: usize,
    /// Smallest `k` such that `[w_2 ... w_k]` is not primitive.
    pub k: usize,
}

impl fmt::Display for BinaryParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.j, self.k)
    }
}

pub fn parameters(w: &Word) -> Result<BinaryParams> {
    require_binary_snake_name(w)?;
    if w.len() <= 2 {
        return Err(SnakeError::ParamsUndefined);
    }
    Ok(parameters_unchecked(w))
}

pub(crate) fn parameters_unchecked(w: &Word) -> BinaryParams {
    let letters = w.letters();
    let j = letters
        .iter()
        .skip(1)
        .position(|x| *x == letters[0])
        .map(|p| p + 2)
        .expect("binary word repeats its first letter");
    let mut seen = std::collections::HashSet::new();
    let k = letters
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, x)| !seen.insert(**x))
        .map(|(i, _)| i + 1)
        .expect("binary word of length > 2 has a repeat after position 1");
    BinaryParams { j, k }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Op {
    A,
    B,
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::A => "A",
            Op::B => "B",
        })
    }
}

/// Inserts a new letter at 0-based slots `first` and `second`, where each
/// slot index refers to the original word.
fn insert_pair(w: &Word, first: usize, second: usize) -> Word {
    let fresh = w.fresh_letter();
    let mut out = Vec::with_capacity(w.len() + 2);
    for (i, &x) in w.letters().iter().enumerate() {
        if i == first {
            out.push(fresh);
        }
        if i == second {
            out.push(fresh);
        }
        out.push(x);
    }
    Word::new(out).canonicalize()
}

/// Admissible `l` for operation `op` on a binary snake name with parameters
/// `params` and length `len`.
pub fn insertion_range(
    op: Op,
    params: BinaryParams,
    len: usize,
) -> std::ops::RangeInclusive<usize> {
    match op {
        Op::A => 2..=params.j,
        Op::B => params.k + 1..=len,
    }
}

pub(crate) fn apply_unchecked(w: &Word, op: Op, l: usize) -> Word {
    match op {
        // new letter before w_1 and between w_{l-1} and w_l
        Op::A => insert_pair(w, 0, l - 1),
        // new letter between w_1 and w_2 and between w_{l-1} and w_l
        Op::B => insert_pair(w, 1, l - 1),
    }
}

pub fn apply(w: &Word, op: Op, l: usize) -> Result<Word> {
    let params = parameters(w)?;
    let range = insertion_range(op, params, w.len());
    if !range.contains(&l) {
        return Err(SnakeError::BadInsertionIndex {
            l,
            min: *range.start(),
            max: *range.end(),
        });
    }
    Ok(apply_unchecked(w, op, l))
}

/// Operation (A): `2 <= l <= j`.
pub fn apply_a(w: &Word, l: usize) -> Result<Word> {
    apply(w, Op::A, l)
}

/// Operation (B): `k + 1 <= l <= |w|`.
pub fn apply_b(w: &Word, l: usize) -> Result<Word> {
    apply(w, Op::B, l)
}

/// A parent of a binary snake name under (A) or (B).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parent {
    pub word: Word,
    pub op: Op,
    pub l: usize,
}

fn deletion_parent(w: &Word, position: usize, op: Op) -> Option<Parent> {
    let x = w.at(position);
    let second = *w.positions_of(x).last()?;
    let word = delete(w, x).ok()?;
    if !is_snake_name(&word) {
        return None;
    }
    let l = second - 1;
    match apply(&word, op, l) {
        Ok(child) if child == w.canonicalize() => Some(Parent { word, op, l }),
        _ => None,
    }
}

/// Every `(parent, op, l)` triple regenerating `w`, found by deleting the
/// first letter (for A) or the second letter (for B).
pub fn parent_candidates(w: &Word) -> Result<Vec<Parent>> {
    require_binary_snake_name(w)?;
    if w.len() < 6 {
        return Err(SnakeError::TooShort {
            len: w.len(),
            min: 6,
        });
    }
    Ok([(1, Op::A), (2, Op::B)]
        .into_iter()
        .filter_map(|(pos, op)| deletion_parent(w, pos, op))
        .collect())
}

/// The unique parent of a binary snake name of length at least six.
///
/// Deletes the first letter if that leaves a snake name (operation A),
/// otherwise the second letter (operation B). In both cases `l` is one less
/// than the position of the deleted letter's second occurrence.
pub fn predecessor(w: &Word) -> Result<Parent> {
    require_binary_snake_name(w)?;
    if w.len() < 6 {
        return Err(SnakeError::TooShort {
            len: w.len(),
            min: 6,
        });
    }
    for (pos, op) in [(1, Op::A), (2, Op::B)] {
        let x = w.at(pos);
        let word = delete(w, x)?;
        if is_snake_name(&word) {
            let l = w.positions_of(x)[1] - 1;
            return Ok(Parent { word, op, l });
        }
    }
    unreachable!("a binary snake name always loses its first or second letter to a snake name")
}
