//! Count binary snake names three ways: brute force over perfect matchings,
//! the (A)/(B) insertion tree, and the counting recursion.
//!
//! ```bash
//! cargo run --release --example count_binary_snakes -- 7
//! ```

use std::time::Instant;

use snakes::enumerate::{
    brute_force_binary, count_table, generate_ab, CountTable, DEFAULT_BRUTE_FORCE_BOUND,
};
use snakes::names::predecessor;

fn main() -> snakes::Result<()> {
    let max_m: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    println!(
        "{:>3} {:>10} {:>10} {:>10}",
        "m", "brute", "(A)/(B)", "recursion"
    );
    for m in 2..=max_m {
        let start = Instant::now();
        let brute = if m <= DEFAULT_BRUTE_FORCE_BOUND {
            brute_force_binary(m, DEFAULT_BRUTE_FORCE_BOUND)?
                .len()
                .to_string()
        } else {
            "-".into()
        };
        let ab = generate_ab(m);
        let table = count_table(m)?;
        assert_eq!(CountTable::from_words(m, &ab), table);
        println!(
            "{m:>3} {brute:>10} {:>10} {:>10}   ({:.2?})",
            ab.len(),
            table.total,
            start.elapsed()
        );
    }

    let t = count_table(4)?;
    println!("\nM_4(j,k):");
    for (p, c) in &t.cells {
        println!("  {p} {c}");
    }

    let w = "abcadbcd".parse()?;
    let parent = predecessor(&w)?;
    println!(
        "\n{w} comes from {} by ({:?}) at l = {}",
        parent.word, parent.op, parent.l
    );
    Ok(())
}
