//! Helpers shared by the integration tests. Everything here is written
//! without the library's own algorithms so it can serve as an oracle.
#![allow(dead_code)]

use std::collections::BTreeMap;

use snakes::{names, Word};

/// Every canonical word of length `n` (restricted-growth strings).
pub fn canonical_words(n: usize) -> Vec<Word> {
    fn rec(prefix: &mut Vec<u32>, max: u32, n: usize, out: &mut Vec<Word>) {
        if prefix.len() == n {
            out.push(Word::from_ids(prefix.iter().copied()));
            return;
        }
        for x in 0..=max {
            prefix.push(x);
            rec(prefix, max.max(x + 1), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Word::empty());
    } else {
        rec(&mut vec![0], 1, n, &mut out);
    }
    out
}

/// Every snake name of length `2..=max_len`.
pub fn snake_names_up_to(max_len: usize) -> Vec<Word> {
    (2..=max_len)
        .flat_map(canonical_words)
        .filter(names::is_snake_name)
        .collect()
}

/// Canonical relabelling of a character string: letters in order of first
/// appearance become `a`, `b`, ...
pub fn canon_str(s: &[char]) -> String {
    let mut map: BTreeMap<char, char> = BTreeMap::new();
    s.iter()
        .map(|c| {
            let next = (b'a' + map.len() as u8) as char;
            *map.entry(*c).or_insert(next)
        })
        .collect()
}

/// Binary reduction of the letter `x` of `s`, written directly from the
/// defining pattern `X0 x1 X1 x1 x2 X2 ... x_{p-1} X_p` with fresh symbols.
pub fn reduce_str(s: &[char], x: char) -> Vec<char> {
    let fresh: Vec<char> = ('A'..='Z').filter(|c| !s.contains(c)).collect();
    let p = s.iter().filter(|&&c| c == x).count();
    let mut seen = 0;
    let mut out = Vec::new();
    for &c in s {
        if c != x {
            out.push(c);
            continue;
        }
        seen += 1;
        if seen > 1 {
            out.push(fresh[seen - 2]);
        }
        if seen < p {
            out.push(fresh[seen - 1]);
        }
    }
    out
}

/// Reduce every letter of multiplicity > 2 in the given order, then relabel.
pub fn full_reduce_str(s: &str, order: &[char]) -> String {
    let mut cur: Vec<char> = s.chars().collect();
    for &x in order {
        cur = reduce_str(&cur, x);
    }
    canon_str(&cur)
}

pub fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u128 {
    binomial(2 * n as u128, n as u128) / (n as u128 + 1)
}

/// Positions `1..=m` as a primitive check independent of the library.
pub fn has_repeat(letters: &[snakes::Letter]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    letters.iter().any(|x| !seen.insert(*x))
}

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}
