//! The two-row tableau of a binary snake name and the inversion-free name
//! of a tableau.
//!
//! ```bash
//! cargo run --example young_tableaux
//! ```

use snakes::enumerate::generate_ab;
use snakes::tableau::{catalan, inversions, is_inversion_free, standard_tableaux, syt_of, word_of};

fn main() -> snakes::Result<()> {
    for w in generate_ab(4) {
        let t = syt_of(&w)?;
        let inv: Vec<String> = inversions(&w)?
            .iter()
            .map(|(x, y)| format!("{x}{y}"))
            .collect();
        println!(
            "{w}  T = {t:<12} W(T) = {}  inversions: {}",
            word_of(&t)?,
            inv.join(" ")
        );
    }

    println!();
    for m in 1..=8 {
        let free = generate_ab(m)
            .iter()
            .filter(|w| is_inversion_free(w))
            .count();
        println!(
            "m = {m}: {free} inversion-free names, {} tableaux, C_{} = {}",
            standard_tableaux(m).len(),
            m - 1,
            catalan(m - 1)?
        );
    }
    Ok(())
}
