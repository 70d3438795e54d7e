//! Decide weak outer Lipschitz equivalence of decorated snakes.
//!
//! ```bash
//! cargo run --example weak_equivalence
//! ```

use snakes::classify::{validate_clusters, weakly_equivalent, ClusterPartition, DecoratedSnake};
use snakes::Word;

fn decorated(word: &str, clusters: Option<&str>) -> snakes::Result<DecoratedSnake> {
    let w: Word = word.parse()?;
    match clusters {
        Some(c) => DecoratedSnake::new(w, ClusterPartition::parse(c)?),
        None => DecoratedSnake::with_default_clusters(w),
    }
}

fn main() -> snakes::Result<()> {
    let pairs = [
        (("abacdbcd", None), ("abcabdcd", None)),
        (("bcdabdca", None), ("abcdacbd", None)),
        (("abab", None), ("abacbc", None)),
        (("aaaa", Some("1,2,3")), ("aaaa", Some("1,2,3"))),
    ];
    for ((wa, ca), (wb, cb)) in pairs {
        let (a, b) = (decorated(wa, ca)?, decorated(wb, cb)?);
        match weakly_equivalent(&a, &b) {
            Some(wit) => {
                let map: Vec<String> = wit
                    .letter_map
                    .iter()
                    .map(|(x, y)| format!("{x}->{y}"))
                    .collect();
                println!("{wa} ~ {wb} ({:?}; {})", wit.orientation, map.join(" "));
            }
            None => println!("{wa} and {wb} are not equivalent"),
        }
    }

    let w: Word = "abacbc".parse()?;
    for c in ["1;2;3;4;5", "1,2;3;4;5", "1,3;2;4;5"] {
        let c = ClusterPartition::parse(c)?;
        match validate_clusters(&w, &c) {
            Ok(()) => println!("{w} with clusters {c}: valid"),
            Err(v) => println!("{w} with clusters {c}: {v}"),
        }
    }
    Ok(())
}
