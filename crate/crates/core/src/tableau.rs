//! Two-row standard Young tableaux of shape `(m-1, m-1)` and their
//! correspondence with inversion-free binary snake names.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SnakeError};
use crate::names::require_binary_snake_name;
use crate::word::{Letter, Word};

/// A filling of the shape `(n, n)`. Construct through
/// [`YoungTableau2::new`] to get a standard tableau.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct YoungTableau2 {
    pub row1: Vec<usize>,
    pub row2: Vec<usize>,
}

impl YoungTableau2 {
    /// Checks the standard-tableau conditions: equal row lengths, entries
    /// exactly `1..=2n`, rows and columns strictly increasing.
    pub fn new(row1: Vec<usize>, row2: Vec<usize>) -> Result<Self> {
        let t = YoungTableau2 { row1, row2 };
        t.check()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        YoungTableau2 {
            row1: Vec::new(),
            row2: Vec::new(),
        }
    }

    fn check(&self) -> Result<()> {
        let n = self.row1.len();
        if self.row2.len() != n {
            return Err(SnakeError::InvalidTableau(format!(
                "rows have lengths {} and {}",
                n,
                self.row2.len()
            )));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &e in self.row1.iter().chain(&self.row2) {
            if e == 0 || e > 2 * n || seen[e] {
                return Err(SnakeError::InvalidTableau(format!(
                    "entries must be 1..={} each exactly once (offending {e})",
                    2 * n
                )));
            }
            seen[e] = true;
        }
        for row in [&self.row1, &self.row2] {
            if row.windows(2).any(|p| p[0] >= p[1]) {
                return Err(SnakeError::InvalidTableau("row not increasing".into()));
            }
        }
        if let Some(c) = (0..n).find(|&c| self.row1[c] >= self.row2[c]) {
            return Err(SnakeError::InvalidTableau(format!(
                "column {} not increasing",
                c + 1
            )));
        }
        Ok(())
    }

    pub fn is_standard(&self) -> bool {
        self.check().is_ok()
    }

    /// The `m` of the associated word length `2m`.
    pub fn m(&self) -> usize {
        self.row1.len() + 1
    }

    /// Parses `"1,2,4;3,5,6"`. The empty string (or `";"`) is the empty
    /// tableau.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == ";" {
            return Ok(YoungTableau2::empty());
        }
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(SnakeError::Parse {
                what: "tableau",
                reason: format!("expected two rows separated by ';', got {}", rows.len()),
            });
        }
        let parse_row = |r: &str| {
            r.split(',')
                .filter(|e| !e.trim().is_empty())
                .map(|e| {
                    e.trim().parse::<usize>().map_err(|_| SnakeError::Parse {
                        what: "tableau",
                        reason: format!("bad entry {e:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()
        };
        YoungTableau2::new(parse_row(rows[0])?, parse_row(rows[1])?)
    }
}

impl fmt::Display for YoungTableau2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: &[usize]| r.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        if self.row1.is_empty() {
            return Ok(());
        }
        write!(f, "{};{}", join(&self.row1), join(&self.row2))
    }
}

/// `T(W)`: for `i = 2..2m-1`, `i - 1` goes to the first row when `w_i` is a
/// node entry and to the second row otherwise.
pub fn syt_of(w: &Word) -> Result<YoungTableau2> {
    require_binary_snake_name(w)?;
    let mut t = YoungTableau2::empty();
    for i in 2..w.len() {
        if w.is_node_entry(i) {
            t.row1.push(i - 1);
        } else {
            t.row2.push(i - 1);
        }
    }
    debug_assert!(t.is_standard(), "T({w}) is not standard");
    Ok(t)
}

/// `W(T)`: the inversion-free binary snake name of a standard tableau.
pub fn word_of(t: &YoungTableau2) -> Result<Word> {
    t.check()?;
    let m = t.m();
    if m == 1 {
        return Ok(Word::from_ids([0, 0]));
    }
    let mut letters = vec![Letter(0); 2 * m];
    letters[2 * m - 1] = Letter(m as u32 - 1);
    // cell k (1-based) of row 1 holding i-1 gives w_i = x_{k+1}; of row 2, x_k.
    for (k0, &e) in t.row1.iter().enumerate() {
        letters[e] = Letter(k0 as u32 + 1);
    }
    for (k0, &e) in t.row2.iter().enumerate() {
        letters[e] = Letter(k0 as u32);
    }
    Ok(Word::new(letters))
}

/// Pairs `(x, y)` such that `[x^- ... x^+]` contains both entries of `y`,
/// sorted by the first occurrence of `x`, then of `y`.
pub fn inversions(w: &Word) -> Result<Vec<(Letter, Letter)>> {
    if !w.is_binary() {
        return Err(SnakeError::NotBinary {
            word: w.to_string(),
        });
    }
    let spans: Vec<(Letter, usize, usize)> = w
        .distinct_letters()
        .into_iter()
        .map(|x| {
            let p = w.positions_of(x);
            (x, p[0], p[1])
        })
        .collect();
    let mut out = Vec::new();
    for &(x, a, b) in &spans {
        for &(y, c, d) in &spans {
            if x != y && a < c && d < b {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

pub fn is_inversion_free(w: &Word) -> bool {
    inversions(w).map(|v| v.is_empty()).unwrap_or(false)
}

/// `C_n = binom(2n, n) / (n + 1)`, exactly.
pub fn catalan(n: usize) -> Result<u128> {
    // C_{i+1} = C_i * 2(2i+1) / (i+2); every intermediate quotient is exact.
    (0..n).try_fold(1u128, |c, i| {
        let i = i as u128;
        c.checked_mul(2 * (2 * i + 1))
            .map(|x| x / (i + 2))
            .ok_or(SnakeError::Overflow)
    })
}

/// All standard tableaux of shape `(m-1, m-1)`, in lexicographic order of
/// their first rows.
pub fn standard_tableaux(m: usize) -> Vec<YoungTableau2> {
    fn fill(n: usize, next: usize, t: &mut YoungTableau2, out: &mut Vec<YoungTableau2>) {
        if next > 2 * n {
            out.push(t.clone());
            return;
        }
        if t.row1.len() < n {
            t.row1.push(next);
            fill(n, next + 1, t, out);
            t.row1.pop();
        }
        if t.row2.len() < t.row1.len() {
            t.row2.push(next);
            fill(n, next + 1, t, out);
            t.row2.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    fill(m - 1, 1, &mut YoungTableau2::empty(), &mut out);
    out
}
