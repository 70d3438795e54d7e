//! Build the monomial model of a snake name and inspect tangency orders,
//! normally embedded subtriangles and the nodal structure.
//!
//! ```bash
//! cargo run --example model_snake -- abacbc 3/2
//! ```

use snakes::model::{parse_exponent, structure, Embedding, Exponents, ModelSnake};
use snakes::Word;

fn main() -> snakes::Result<()> {
    let mut args = std::env::args().skip(1);
    let w: Word = args.next().as_deref().unwrap_or("abacbc").parse()?;
    let alpha = parse_exponent(args.next().as_deref().unwrap_or("2"))?;
    let exps = Exponents::new(1.into(), alpha)?;

    let model = ModelSnake::build(&w, exps)?;
    println!("model of {w} in dimension {}", model.dimension());
    print!("{}", model.tord_matrix());

    println!();
    for j in 1..w.len() {
        for l in j + 1..=w.len() {
            if let Embedding::NotNormal {
                witness,
                tord,
                itord,
            } = model.ne_subtriangle(j, l)?
            {
                let bubble = if model.is_bubble_subtriangle(j, l)? {
                    " (bubble)"
                } else {
                    ""
                };
                println!(
                    "T(d{j},d{l}) not normal: d{} d{} tord {tord} > itord {itord}{bubble}",
                    witness.0, witness.1
                );
                break;
            }
        }
    }

    println!(
        "\n{}",
        serde_json::to_string_pretty(&structure(&w, exps)?).unwrap()
    );
    Ok(())
}
