//! Classify words as snake names, spiral words or invalid, and list every
//! snake name of a given length.
//!
//! ```bash
//! cargo run --example validate_names -- 6
//! ```

use snakes::names::{self, validate};
use snakes::Word;

fn canonical_words(n: usize) -> Vec<Word> {
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
    rec(&mut vec![0], 1, n, &mut out);
    out
}

fn main() -> snakes::Result<()> {
    for s in ["abcdacbd", "abacdcbd", "aa", "aaaa", "abc", "ababa"] {
        let w: Word = s.parse()?;
        println!("{s:>10}  {}", validate(&w));
    }

    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let found: Vec<String> = canonical_words(n)
        .into_iter()
        .filter(names::is_snake_name)
        .map(|w| w.to_string())
        .collect();
    println!("\n{} snake names of length {n}:", found.len());
    for w in found {
        println!("  {w}");
    }
    Ok(())
}
