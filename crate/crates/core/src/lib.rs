//! Combinatorics of snakes: surface germs whose generic arcs are all
//! abnormal, encoded by words recording which node each nodal zone of the
//! link belongs to.
//!
//! - [`word`]: words, canonical forms, the position partition.
//! - [`names`]: snake-name validation, binary reduction, deletion, the
//!   parameters `(j, k)` and the insertion moves (A)/(B).
//! - [`enumerate`]: brute force, the (A)/(B) tree and the counting
//!   recursion for binary snake names, plus a cache file format.
//! - [`tableau`]: two-row standard Young tableaux and inversion-free names.
//! - [`model`]: the monomial model snake and its tangency-order oracle.
//! - [`classify`]: cluster partitions and weak outer Lipschitz equivalence.
//! - [`diagram`]: DOT/JSON description of a link.
//! - [`cli`]: the `snakes` command-line front end.
//!
//! ```
//! use snakes::{names, Word};
//!
//! let w: Word = "abcdacbd".parse().unwrap();
//! assert!(names::validate(&w).is_snake_name());
//! assert_eq!(names::parameters(&w).unwrap().to_string(), "(5,6)");
//! ```

pub mod classify;
pub mod cli;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod model;
pub mod names;
pub mod tableau;
pub mod word;

pub use error::{Result, SnakeError};
pub use word::{Letter, SetPartition, Word};
