//! Cluster partitions and weak outer Lipschitz equivalence.
//!
//! Two snakes are weakly equivalent iff, for some orientation, their names
//! are equivalent and the induced identification of segments carries one
//! cluster partition onto the other. Equivalent canonical words fix the
//! position correspondence, so the only freedom is the orientation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SnakeError};
use crate::model::segment_pair_classes;
use crate::names::{validate, VerdictKind};
use crate::word::{Letter, SetPartition, Word};

/// A partition of the segment indices `{1, ..., m-1}` into clusters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClusterPartition(pub SetPartition);

impl ClusterPartition {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(ClusterPartition(SetPartition::parse(s)?))
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        self.0.blocks()
    }

    pub fn segment_count(&self) -> usize {
        self.0.ground_size()
    }

    /// Transport along orientation reversal: segment `i` becomes `m - i`
    /// for a word of length `m`.
    pub fn reversed(&self) -> ClusterPartition {
        let n = self.segment_count();
        ClusterPartition(self.0.map(|i| n + 1 - i))
    }
}

impl fmt::Display for ClusterPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum ClusterViolation {
    /// The word is neither a snake name nor a spiral word.
    InvalidWord,
    /// The partition does not cover exactly the segments `1..=expected`.
    WrongSegmentCount { expected: usize, found: usize },
    /// Two segments of one cluster join different pairs of nodes.
    MixedPairClass { segments: (usize, usize) },
    /// `w_{j-1} = w_{j+1}` but segments `j-1` and `j` share a cluster.
    SharedMiddle { segments: (usize, usize) },
    /// The segments of a spiral word must form a single cluster.
    SpiralSplit,
}

impl fmt::Display for ClusterViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterViolation::InvalidWord => f.write_str("word is not a snake name or spiral word"),
            ClusterViolation::WrongSegmentCount { expected, found } => {
                write!(
                    f,
                    "expected a partition of {expected} segments, got {found}"
                )
            }
            ClusterViolation::MixedPairClass { segments: (a, b) } => {
                write!(f, "segments {a} and {b} join different node pairs")
            }
            ClusterViolation::SharedMiddle { segments: (a, b) } => {
                write!(
                    f,
                    "segments {a} and {b} flank a repeated letter and cannot share a cluster"
                )
            }
            ClusterViolation::SpiralSplit => f.write_str("spiral segments must form one cluster"),
        }
    }
}

/// Multiplicity one everywhere for snake names; one cluster for spirals.
pub fn default_clusters(w: &Word) -> Result<ClusterPartition> {
    let segments = w.len().saturating_sub(1);
    let blocks = match validate(w).kind {
        VerdictKind::SnakeName => (1..=segments).map(|i| vec![i]).collect(),
        VerdictKind::SpiralWord => vec![(1..=segments).collect()],
        VerdictKind::Invalid => {
            return Err(SnakeError::NotASnakeName {
                word: w.to_string(),
            })
        }
    };
    Ok(ClusterPartition(SetPartition::try_new(blocks, segments)?))
}

/// Checks a cluster partition against its word; returns the first violation.
pub fn validate_clusters(
    w: &Word,
    c: &ClusterPartition,
) -> std::result::Result<(), ClusterViolation> {
    let kind = validate(w).kind;
    if kind == VerdictKind::Invalid {
        return Err(ClusterViolation::InvalidWord);
    }
    let expected = w.len() - 1;
    if c.segment_count() != expected {
        return Err(ClusterViolation::WrongSegmentCount {
            expected,
            found: c.segment_count(),
        });
    }
    if kind == VerdictKind::SpiralWord {
        return if c.blocks().len() == 1 {
            Ok(())
        } else {
            Err(ClusterViolation::SpiralSplit)
        };
    }
    let classes = segment_pair_classes(w).map_err(|_| ClusterViolation::InvalidWord)?;
    let class_of: BTreeMap<usize, (Letter, Letter)> = classes
        .iter()
        .flat_map(|(pair, segs)| segs.iter().map(move |&s| (s, *pair)))
        .collect();
    for block in c.blocks() {
        let first = block[0];
        if let Some(&other) = block.iter().find(|&&s| class_of[&s] != class_of[&first]) {
            return Err(ClusterViolation::MixedPairClass {
                segments: (first, other),
            });
        }
    }
    for j in 2..w.len() {
        if w.at(j - 1) == w.at(j + 1) && c.0.block_of(j - 1) == c.0.block_of(j) {
            return Err(ClusterViolation::SharedMiddle {
                segments: (j - 1, j),
            });
        }
    }
    Ok(())
}

/// Size of the cluster containing `segment`.
pub fn multiplicity(w: &Word, c: &ClusterPartition, segment: usize) -> Result<usize> {
    validate_clusters(w, c).map_err(|v| SnakeError::InvalidClusters(v.to_string()))?;
    c.0.block_of(segment)
        .map(<[usize]>::len)
        .ok_or(SnakeError::IndexOutOfRange {
            index: segment,
            max: c.segment_count(),
        })
}

/// A snake name (or spiral word) with a valid cluster partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecoratedSnake {
    word: Word,
    clusters: ClusterPartition,
}

impl DecoratedSnake {
    pub fn new(word: Word, clusters: ClusterPartition) -> Result<Self> {
        validate_clusters(&word, &clusters)
            .map_err(|v| SnakeError::InvalidClusters(v.to_string()))?;
        Ok(DecoratedSnake { word, clusters })
    }

    pub fn with_default_clusters(word: Word) -> Result<Self> {
        let clusters = default_clusters(&word)?;
        DecoratedSnake::new(word, clusters)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn clusters(&self) -> &ClusterPartition {
        &self.clusters
    }

    /// The same snake with the opposite orientation.
    pub fn reversed(&self) -> DecoratedSnake {
        DecoratedSnake {
            word: self.word.reverse(),
            clusters: self.clusters.reversed(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Direct,
    Reversed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceWitness {
    /// The first orientation of the first snake that works.
    pub orientation: Orientation,
    /// Every orientation that works; two entries mean the names admit a
    /// reversal symmetry compatible with the clusters.
    pub orientations: Vec<Orientation>,
    /// Letter of the first snake to letter of the second.
    pub letter_map: Vec<(String, String)>,
    /// `segment_map[i - 1]` is the segment of the second snake matched with
    /// segment `i` of the first.
    pub segment_map: Vec<usize>,
}

fn matches(a: &DecoratedSnake, b: &DecoratedSnake, orientation: Orientation) -> bool {
    let oriented = match orientation {
        Orientation::Direct => a.clone(),
        Orientation::Reversed => a.reversed(),
    };
    oriented.word.canonicalize() == b.word.canonicalize() && oriented.clusters == b.clusters
}

/// Decides weak outer Lipschitz equivalence of two decorated snakes.
pub fn weakly_equivalent(a: &DecoratedSnake, b: &DecoratedSnake) -> Option<EquivalenceWitness> {
    let orientations: Vec<Orientation> = [Orientation::Direct, Orientation::Reversed]
        .into_iter()
        .filter(|&o| matches(a, b, o))
        .collect();
    let orientation = *orientations.first()?;
    let m = a.word.len();
    let position = |i: usize| match orientation {
        Orientation::Direct => i,
        Orientation::Reversed => m + 1 - i,
    };
    let mut letter_map: Vec<(String, String)> = Vec::new();
    for x in a.word.distinct_letters() {
        let i = a.word.positions_of(x)[0];
        letter_map.push((x.to_string(), b.word.at(position(i)).to_string()));
    }
    let segment_map = (1..m)
        .map(|i| match orientation {
            Orientation::Direct => i,
            Orientation::Reversed => m - i,
        })
        .collect();
    Some(EquivalenceWitness {
        orientation,
        orientations,
        letter_map,
        segment_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn c(s: &str) -> ClusterPartition {
        ClusterPartition::parse(s).unwrap()
    }

    #[test]
    fn defaults() {
        assert_eq!(default_clusters(&w("abab")).unwrap(), c("1;2;3"));
        assert_eq!(default_clusters(&w("aaaa")).unwrap(), c("1,2,3"));
        assert_eq!(default_clusters(&w("aa")).unwrap(), c("1"));
        assert!(default_clusters(&w("abc")).is_err());
    }

    #[test]
    fn cluster_validation() {
        assert_eq!(validate_clusters(&w("abab"), &c("1,3;2")), Ok(()));
        assert_eq!(
            validate_clusters(&w("abab"), &c("1,2;3")),
            Err(ClusterViolation::SharedMiddle { segments: (1, 2) })
        );
        assert_eq!(
            validate_clusters(&w("abacbc"), &c("1,5;2;3;4")),
            Err(ClusterViolation::MixedPairClass { segments: (1, 5) })
        );
        assert_eq!(
            validate_clusters(&w("abab"), &c("1;2")),
            Err(ClusterViolation::WrongSegmentCount {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            validate_clusters(&w("aaaa"), &c("1;2,3")),
            Err(ClusterViolation::SpiralSplit)
        );
        assert_eq!(validate_clusters(&w("aaaa"), &c("1,2,3")), Ok(()));
        assert_eq!(
            validate_clusters(&w("abc"), &c("1;2")),
            Err(ClusterViolation::InvalidWord)
        );
    }

    #[test]
    fn multiplicities() {
        let abab = w("abab");
        let d = default_clusters(&abab).unwrap();
        assert!((1..=3).all(|s| multiplicity(&abab, &d, s).unwrap() == 1));
        let aaaa = w("aaaa");
        let single = default_clusters(&aaaa).unwrap();
        assert!((1..=3).all(|s| multiplicity(&aaaa, &single, s).unwrap() == 3));
        assert_eq!(multiplicity(&abab, &c("1,3;2"), 1).unwrap(), 2);
        assert_eq!(multiplicity(&abab, &c("1,3;2"), 2).unwrap(), 1);
        assert!(multiplicity(&abab, &d, 4).is_err());
        assert!(multiplicity(&abab, &c("1,2;3"), 1).is_err());
    }

    #[test]
    fn equivalence_examples() {
        let a = DecoratedSnake::with_default_clusters(w("abacdbcd")).unwrap();
        let b = DecoratedSnake::with_default_clusters(w("abcabdcd")).unwrap();
        let wit = weakly_equivalent(&a, &b).unwrap();
        assert_eq!(wit.orientation, Orientation::Reversed);
        assert_eq!(wit.segment_map, vec![7, 6, 5, 4, 3, 2, 1]);

        let a = DecoratedSnake::with_default_clusters(w("abacbc")).unwrap();
        let b = DecoratedSnake::with_default_clusters(w("abcabc")).unwrap();
        assert!(weakly_equivalent(&a, &b).is_none());

        let a = DecoratedSnake::new(w("abab"), c("1,3;2")).unwrap();
        let b = DecoratedSnake::with_default_clusters(w("abab")).unwrap();
        assert!(weakly_equivalent(&a, &b).is_none());
    }

    #[test]
    fn spirals() {
        let s3 = DecoratedSnake::with_default_clusters(w("aaa")).unwrap();
        let s3b = DecoratedSnake::with_default_clusters(w("bbb")).unwrap();
        let s4 = DecoratedSnake::with_default_clusters(w("aaaa")).unwrap();
        let wit = weakly_equivalent(&s3, &s3b).unwrap();
        assert_eq!(
            wit.orientations,
            vec![Orientation::Direct, Orientation::Reversed]
        );
        assert_eq!(wit.letter_map, vec![("a".to_string(), "b".to_string())]);
        assert!(weakly_equivalent(&s3, &s4).is_none());
        let name = DecoratedSnake::with_default_clusters(w("abab")).unwrap();
        assert!(weakly_equivalent(&s4, &name).is_none());
    }

    #[test]
    fn letter_map_follows_positions() {
        let a = DecoratedSnake::with_default_clusters(w("bcdabdca")).unwrap();
        let b = DecoratedSnake::with_default_clusters(w("abcdacbd")).unwrap();
        let wit = weakly_equivalent(&a, &b).unwrap();
        assert_eq!(wit.orientation, Orientation::Direct);
        let pairs: Vec<String> = wit
            .letter_map
            .iter()
            .map(|(x, y)| format!("{x}{y}"))
            .collect();
        assert_eq!(pairs, ["ba", "cb", "dc", "ad"]);
    }
}
