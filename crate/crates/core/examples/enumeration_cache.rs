//! Save enumerated binary snake names as JSON lines and load them back.
//!
//! ```bash
//! cargo run --example enumeration_cache -- /tmp/snakes.jsonl
//! ```

use snakes::enumerate::{cache_load, cache_save, generate_ab, CacheRecord};

fn main() -> snakes::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(std::path::PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("snakes-cache.jsonl"));
    let words: Vec<_> = (1..=5).flat_map(generate_ab).collect();
    cache_save(&path, &words)?;
    println!("wrote {} records to {}", words.len(), path.display());

    let first = std::fs::read_to_string(&path)?;
    println!("first record: {}", first.lines().next().unwrap_or_default());

    let loaded = cache_load(&path)?;
    assert_eq!(loaded, words);
    let free = loaded
        .iter()
        .filter(|w| CacheRecord::for_word(w).inversion_free)
        .count();
    println!("loaded {} words, {free} inversion-free", loaded.len());
    Ok(())
}
