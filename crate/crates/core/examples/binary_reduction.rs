//! Split letters that occur more than twice into fresh binary letters.
//!
//! ```bash
//! cargo run --example binary_reduction
//! ```

use snakes::names::{binary_reduce, full_binary_reduction, parameters};
use snakes::{Letter, Word};

fn main() -> snakes::Result<()> {
    let w: Word = "ababab".parse()?;
    let a = Letter::parse("a")?;
    println!("{w} reduced by a: {}", binary_reduce(&w, a)?);
    let full = full_binary_reduction(&w)?;
    println!(
        "{w} fully reduced: {full} with parameters {}",
        parameters(&full)?
    );

    for s in ["ababa", "abcabca", "abcabcabc", "ababacbc", "abacdcbd"] {
        let w: Word = s.parse()?;
        match full_binary_reduction(&w) {
            Ok(r) => println!("{s} -> {r}"),
            Err(e) => println!("{s}: {e}"),
        }
    }
    Ok(())
}
