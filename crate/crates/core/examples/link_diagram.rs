//! Emit the link of a snake as Graphviz source.
//!
//! ```bash
//! cargo run --example link_diagram -- abcdacbd | dot -Tsvg > link.svg
//! ```

use snakes::diagram::LinkDiagram;
use snakes::model::segment_pair_classes;
use snakes::Word;

fn main() -> snakes::Result<()> {
    let w: Word = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("abcdacbd")
        .parse()?;
    let d = LinkDiagram::new(&w)?;
    print!("{}", d.to_dot());
    for ((x, y), segs) in segment_pair_classes(&w)? {
        eprintln!("segments joining {x} and {y}: {segs:?}");
    }
    Ok(())
}
