//! Three independent routes to the binary snake names of length `2m`:
//! brute force over perfect matchings, the (A)/(B) generation tree, and the
//! counting recursion on `M_m(j, k)`. Plus a line-delimited cache file.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SnakeError};
use crate::names::{
    apply_unchecked, insertion_range, is_snake_name, parameters_unchecked, BinaryParams, Op,
};
use crate::tableau::is_inversion_free;
use crate::word::{Letter, Word};

/// Default ceiling on `m` for [`brute_force_binary`]: `(2m - 1)!!` is about
/// two million at `m = 8`.
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 8;

/// Calls `visit` with every canonical binary word of length `2m` whose
/// positions before `slots`'s first gap are already filled.
fn each_matching(
    slots: &mut [Option<Letter>],
    next: u32,
    visit: &mut impl FnMut(&[Option<Letter>]),
) {
    let Some(first) = slots.iter().position(Option::is_none) else {
        visit(slots);
        return;
    };
    slots[first] = Some(Letter(next));
    for partner in first + 1..slots.len() {
        if slots[partner].is_none() {
            slots[partner] = Some(Letter(next));
            each_matching(slots, next + 1, visit);
            slots[partner] = None;
        }
    }
    slots[first] = None;
}

fn to_word(slots: &[Option<Letter>]) -> Word {
    Word::new(
        slots
            .iter()
            .map(|x| x.expect("complete matching"))
            .collect(),
    )
}

/// All canonical binary words of length `2m` (perfect matchings of the
/// positions), sorted. There are `(2m - 1)!!` of them.
pub fn binary_words(m: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut slots = vec![None; 2 * m];
    each_matching(&mut slots, 0, &mut |s| out.push(to_word(s)));
    out.sort();
    out
}

/// Brute force: every perfect matching of `{1..2m}`, kept if it is a snake
/// name. Parallel over the partner of position 1.
pub fn brute_force_binary(m: usize, bound: usize) -> Result<Vec<Word>> {
    if m == 0 {
        return Err(SnakeError::TooShort { len: 0, min: 2 });
    }
    if m > bound {
        return Err(SnakeError::BoundExceeded { m, bound });
    }
    let n = 2 * m;
    let mut out: Vec<Word> = (1..n)
        .into_par_iter()
        .flat_map_iter(|partner| {
            let mut slots = vec![None; n];
            slots[0] = Some(Letter(0));
            slots[partner] = Some(Letter(0));
            let mut found = Vec::new();
            each_matching(&mut slots, 1, &mut |s| {
                let w = to_word(s);
                if is_snake_name(&w) {
                    found.push(w);
                }
            });
            found
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Every `(op, l, child)` reachable from a binary snake name of length
/// at least four.
pub fn children(w: &Word) -> Vec<(Op, usize, Word)> {
    let params = parameters_unchecked(w);
    [Op::A, Op::B]
        .into_iter()
        .flat_map(|op| insertion_range(op, params, w.len()).map(move |l| (op, l)))
        .map(|(op, l)| (op, l, apply_unchecked(w, op, l)))
        .collect()
}

/// Binary snake names of length `2m` generated from `abab` by (A) and (B).
///
/// No deduplication is performed; the result is checked to be
/// duplicate-free after sorting.
pub fn generate_ab(m: usize) -> Vec<Word> {
    match m {
        0 => return Vec::new(),
        1 => return vec![Word::from_ids([0, 0])],
        _ => {}
    }
    let mut level = vec![Word::from_ids([0, 1, 0, 1])];
    for _ in 2..m {
        level = level
            .par_iter()
            .flat_map_iter(|w| children(w).into_iter().map(|(_, _, c)| c))
            .collect();
    }
    level.sort();
    assert!(
        level.windows(2).all(|p| p[0] != p[1]),
        "(A)/(B) generation produced a duplicate"
    );
    level
}

/// `M_m(j, k)` for every admissible `(j, k)`, and their total `M_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub m: usize,
    #[serde(with = "cells_as_list")]
    pub cells: BTreeMap<BinaryParams, u128>,
    pub total: u128,
}

impl CountTable {
    pub fn get(&self, j: usize, k: usize) -> u128 {
        self.cells.get(&BinaryParams { j, k }).copied().unwrap_or(0)
    }

    /// Histogram of parameters over a list of binary snake names of length
    /// `2m > 2`.
    pub fn from_words(m: usize, words: &[Word]) -> CountTable {
        let mut cells = BTreeMap::new();
        for w in words {
            *cells.entry(parameters_unchecked(w)).or_insert(0u128) += 1;
        }
        let total = cells.values().sum();
        CountTable { m, cells, total }
    }

    fn from_cells(m: usize, cells: BTreeMap<BinaryParams, u128>) -> Result<CountTable> {
        let cells: BTreeMap<_, _> = cells.into_iter().filter(|(_, v)| *v != 0).collect();
        let total = cells
            .values()
            .try_fold(0u128, |acc, v| acc.checked_add(*v))
            .ok_or(SnakeError::Overflow)?;
        Ok(CountTable { m, cells, total })
    }

    /// One step of the recursion, from `M_m` to `M_{m+1}`.
    fn next(&self) -> Result<CountTable> {
        let m = self.m;
        let mut cells = BTreeMap::new();
        for k in 5..=m + 3 {
            // (MA) does not depend on j.
            let from_a = (k - 1..=m + 2)
                .map(|l| self.get(k - 2, l))
                .try_fold(0u128, |acc, v| acc.checked_add(v))
                .ok_or(SnakeError::Overflow)?;
            for j in 3..k {
                let slots = (2 * m + 1).saturating_sub(k) as u128;
                let from_b = slots
                    .checked_mul(self.get(j - 1, k - 1))
                    .ok_or(SnakeError::Overflow)?;
                let cell = from_a.checked_add(from_b).ok_or(SnakeError::Overflow)?;
                cells.insert(BinaryParams { j, k }, cell);
            }
        }
        CountTable::from_cells(m + 1, cells)
    }
}

/// JSON objects need string keys, so cells travel as `[{j, k, count}]`.
mod cells_as_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::names::BinaryParams;

    #[derive(Serialize, Deserialize)]
    struct Cell {
        j: usize,
        k: usize,
        count: u128,
    }

    pub fn serialize<S: Serializer>(
        cells: &BTreeMap<BinaryParams, u128>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        let list: Vec<Cell> = cells
            .iter()
            .map(|(p, &count)| Cell {
                j: p.j,
                k: p.k,
                count,
            })
            .collect();
        list.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<BTreeMap<BinaryParams, u128>, D::Error> {
        Ok(Vec::<Cell>::deserialize(deserializer)?
            .into_iter()
            .map(|c| (BinaryParams { j: c.j, k: c.k }, c.count))
            .collect())
    }
}

/// The count table `M_m(j, k)` from the recursion, starting at
/// `M_2(3, 4) = 1`.
pub fn count_table(m: usize) -> Result<CountTable> {
    if m < 2 {
        return Err(SnakeError::TooShort { len: 2 * m, min: 4 });
    }
    let mut table = CountTable::from_cells(2, BTreeMap::from([(BinaryParams { j: 3, k: 4 }, 1)]))?;
    while table.m < m {
        table = table.next()?;
    }
    Ok(table)
}

/// `M_m`, the number of binary snake names of length `2m`.
pub fn count_total(m: usize) -> Result<u128> {
    match m {
        0 => Err(SnakeError::TooShort { len: 0, min: 2 }),
        1 => Ok(1),
        _ => Ok(count_table(m)?.total),
    }
}

/// One cache line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub word: Word,
    pub m: usize,
    /// `None` only for the bubble name `aa`.
    pub j: Option<usize>,
    pub k: Option<usize>,
    pub inversion_free: bool,
}

impl CacheRecord {
    pub fn for_word(w: &Word) -> CacheRecord {
        let params = (w.len() > 2).then(|| parameters_unchecked(w));
        CacheRecord {
            word: w.clone(),
            m: w.len() / 2,
            j: params.map(|p| p.j),
            k: params.map(|p| p.k),
            inversion_free: is_inversion_free(w),
        }
    }

    fn verify(&self) -> std::result::Result<(), String> {
        let w = &self.word;
        if !w.is_canonical() {
            return Err(format!("{w} is not in canonical form"));
        }
        if !w.is_binary() || !is_snake_name(w) {
            return Err(format!("{w} is not a binary snake name"));
        }
        let expected = CacheRecord::for_word(w);
        if *self != expected {
            return Err(format!(
                "stored fields (m={}, j={:?}, k={:?}, inversion_free={}) do not match {w}",
                self.m, self.j, self.k, self.inversion_free
            ));
        }
        Ok(())
    }
}

/// Writes one JSON record per line.
pub fn cache_save(path: impl AsRef<Path>, words: &[Word]) -> Result<()> {
    let mut out = BufWriter::new(fs::File::create(path)?);
    for w in words {
        let line = serde_json::to_string(&CacheRecord::for_word(w)).expect("record serializes");
        writeln!(out, "{line}")?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a cache written by [`cache_save`], re-validating every word.
///
/// A trailing line with no newline that does not parse is treated as an
/// interrupted write and dropped.
pub fn cache_load(path: impl AsRef<Path>) -> Result<Vec<Word>> {
    let text = fs::read_to_string(path)?;
    let terminated = text.ends_with('\n');
    let lines: Vec<&str> = text.lines().collect();
    let mut words = Vec::with_capacity(lines.len());
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let last_partial = !terminated && i + 1 == lines.len();
        let record: CacheRecord = match serde_json::from_str(line) {
            Ok(r) => r,
            Err(_) if last_partial => break,
            Err(e) => {
                return Err(SnakeError::CorruptCache {
                    line: i + 1,
                    reason: e.to_string(),
                })
            }
        };
        record.verify().map_err(|reason| SnakeError::CorruptCache {
            line: i + 1,
            reason,
        })?;
        words.push(record.word);
    }
    Ok(words)
}
