//! The symbolic model snake of a snake name.
//!
//! Arcs are monomial: `t e_1 + sum t^q e_i` with unit coefficients on
//! distinct basis vectors, so `|a(t) - b(t)|` has leading exponent equal to
//! the smallest exponent on which the two arcs differ. That is the whole
//! tangency-order oracle; exponents are exact rationals throughout.
//!
//! Inner tangency orders are only defined here for the named arcs
//! `δ_1, σ_1, δ_2, ..., σ_{m-1}, δ_m`, as the minimum of consecutive outer
//! tangency orders along that chain.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, SnakeError};
use crate::names::{require_snake_name, validate};
use crate::word::{Letter, SetPartition, Word};

pub type Exponent = Ratio<i64>;

pub fn parse_exponent(s: &str) -> Result<Exponent> {
    Exponent::from_str(s.trim()).map_err(|_| SnakeError::Parse {
        what: "rational",
        reason: format!("expected p/q or an integer, got {s:?}"),
    })
}

/// `1 <= β < α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exponents {
    beta: Exponent,
    alpha: Exponent,
}

impl Exponents {
    pub fn new(beta: Exponent, alpha: Exponent) -> Result<Self> {
        if beta < Exponent::one() || alpha <= beta {
            return Err(SnakeError::BadExponents {
                beta: beta.to_string(),
                alpha: alpha.to_string(),
            });
        }
        Ok(Exponents { beta, alpha })
    }

    pub fn beta(&self) -> Exponent {
        self.beta
    }

    pub fn alpha(&self) -> Exponent {
        self.alpha
    }
}

impl Default for Exponents {
    fn default() -> Self {
        Exponents {
            beta: Exponent::from_integer(1),
            alpha: Exponent::from_integer(2),
        }
    }
}

/// A tangency order: a rational exponent, or `∞` for identical arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tord {
    Finite(Exponent),
    Infinite,
}

impl Tord {
    pub fn finite(self) -> Option<Exponent> {
        match self {
            Tord::Finite(q) => Some(q),
            Tord::Infinite => None,
        }
    }
}

impl fmt::Display for Tord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tord::Finite(q) => write!(f, "{q}"),
            Tord::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Tord {
    type Err = SnakeError;

    fn from_str(s: &str) -> Result<Tord> {
        if s.trim() == "inf" {
            Ok(Tord::Infinite)
        } else {
            parse_exponent(s).map(Tord::Finite)
        }
    }
}

impl Serialize for Tord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Tord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// `δ_j` or `σ_j`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcLabel {
    Delta(usize),
    Sigma(usize),
}

impl fmt::Display for ArcLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcLabel::Delta(j) => write!(f, "d{j}"),
            ArcLabel::Sigma(j) => write!(f, "s{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialArc {
    pub label: ArcLabel,
    /// Basis index (1-based) to exponent; every coefficient is 1.
    pub terms: BTreeMap<usize, Exponent>,
}

/// Outer tangency order of two monomial arcs.
pub fn tord(a: &MonomialArc, b: &MonomialArc) -> Tord {
    let keys: BTreeSet<usize> = a.terms.keys().chain(b.terms.keys()).copied().collect();
    keys.into_iter()
        .filter_map(|i| match (a.terms.get(&i), b.terms.get(&i)) {
            (Some(x), Some(y)) if x == y => None,
            (Some(x), Some(y)) => Some(*x.min(y)),
            (Some(x), None) | (None, Some(x)) => Some(*x),
            (None, None) => None,
        })
        .min()
        .map_or(Tord::Infinite, Tord::Finite)
}

/// The model snake `T_W` of a snake name of length `m > 2`, in `R^{2m-1}`.
#[derive(Debug, Clone)]
pub struct ModelSnake {
    word: Word,
    exps: Exponents,
    deltas: Vec<MonomialArc>,
    sigmas: Vec<MonomialArc>,
}

/// Result of [`ModelSnake::ne_subtriangle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Embedding {
    Normal,
    /// `w_i = w_i'` with `tord(δ_i, δ_i') > itord(δ_i, δ_i')`.
    NotNormal {
        witness: (usize, usize),
        tord: Tord,
        itord: Tord,
    },
}

impl Embedding {
    pub fn is_normal(&self) -> bool {
        matches!(self, Embedding::Normal)
    }
}

impl ModelSnake {
    pub fn build(w: &Word, exps: Exponents) -> Result<ModelSnake> {
        require_snake_name(w)?;
        let m = w.len();
        if m <= 2 {
            return Err(SnakeError::ModelUndefined { len: m });
        }
        let one = Exponent::one();
        let r = w.node_entry_map();
        let mut deltas: Vec<MonomialArc> = Vec::with_capacity(m);
        for j in 1..=m {
            let terms = if j == 1 {
                BTreeMap::from([(1, one)])
            } else if r[j - 1] == j {
                BTreeMap::from([(1, one), (j, exps.beta)])
            } else {
                let mut terms = deltas[r[j - 1] - 1].terms.clone();
                terms.insert(j, exps.alpha);
                terms
            };
            deltas.push(MonomialArc {
                label: ArcLabel::Delta(j),
                terms,
            });
        }
        let sigmas = (1..m)
            .map(|j| MonomialArc {
                label: ArcLabel::Sigma(j),
                terms: BTreeMap::from([(1, one), (m + j, exps.beta)]),
            })
            .collect();
        Ok(ModelSnake {
            word: w.clone(),
            exps,
            deltas,
            sigmas,
        })
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn exponents(&self) -> Exponents {
        self.exps
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Ambient dimension `2m - 1`.
    pub fn dimension(&self) -> usize {
        2 * self.len() - 1
    }

    pub fn deltas(&self) -> &[MonomialArc] {
        &self.deltas
    }

    pub fn sigmas(&self) -> &[MonomialArc] {
        &self.sigmas
    }

    /// `δ_1, σ_1, δ_2, ..., σ_{m-1}, δ_m`.
    pub fn link_order(&self) -> Vec<ArcLabel> {
        let m = self.len();
        (1..=m)
            .flat_map(|j| {
                std::iter::once(ArcLabel::Delta(j)).chain((j < m).then_some(ArcLabel::Sigma(j)))
            })
            .collect()
    }

    fn link_index(&self, label: ArcLabel) -> Result<usize> {
        let m = self.len();
        match label {
            ArcLabel::Delta(j) if (1..=m).contains(&j) => Ok(2 * (j - 1)),
            ArcLabel::Sigma(j) if (1..m).contains(&j) => Ok(2 * j - 1),
            ArcLabel::Delta(j) => Err(SnakeError::IndexOutOfRange { index: j, max: m }),
            ArcLabel::Sigma(j) => Err(SnakeError::IndexOutOfRange {
                index: j,
                max: m - 1,
            }),
        }
    }

    pub fn arc(&self, label: ArcLabel) -> Result<&MonomialArc> {
        self.link_index(label)?;
        Ok(match label {
            ArcLabel::Delta(j) => &self.deltas[j - 1],
            ArcLabel::Sigma(j) => &self.sigmas[j - 1],
        })
    }

    /// Named arcs in link order.
    pub fn arcs(&self) -> Vec<&MonomialArc> {
        self.link_order()
            .into_iter()
            .map(|l| self.arc(l).expect("label from link order"))
            .collect()
    }

    pub fn tord_named(&self, a: ArcLabel, b: ArcLabel) -> Result<Tord> {
        Ok(tord(self.arc(a)?, self.arc(b)?))
    }

    /// Inner tangency order of two named arcs: the minimum outer tangency
    /// order over consecutive arcs of the link chain between them.
    pub fn itord_named(&self, a: ArcLabel, b: ArcLabel) -> Result<Tord> {
        let (p, q) = (self.link_index(a)?, self.link_index(b)?);
        let (lo, hi) = (p.min(q), p.max(q));
        let chain = self.arcs();
        Ok((lo..hi)
            .map(|i| tord(chain[i], chain[i + 1]))
            .min()
            .unwrap_or(Tord::Infinite))
    }

    fn check_zone_pair(&self, j: usize, l: usize) -> Result<()> {
        let m = self.len();
        if j == 0 || j >= l {
            return Err(SnakeError::IndexOutOfRange {
                index: j,
                max: l.saturating_sub(1),
            });
        }
        if l > m {
            return Err(SnakeError::IndexOutOfRange { index: l, max: m });
        }
        Ok(())
    }

    /// Whether `T(δ_j, δ_l)` is normally embedded, i.e. `[w_j ... w_l]` is
    /// primitive. Otherwise returns the first repeated pair as a witness.
    pub fn ne_subtriangle(&self, j: usize, l: usize) -> Result<Embedding> {
        self.check_zone_pair(j, l)?;
        let mut first_seen: BTreeMap<Letter, usize> = BTreeMap::new();
        for i in j..=l {
            if let Some(&i0) = first_seen.get(&self.word.at(i)) {
                let (a, b) = (ArcLabel::Delta(i0), ArcLabel::Delta(i));
                return Ok(Embedding::NotNormal {
                    witness: (i0, i),
                    tord: self.tord_named(a, b)?,
                    itord: self.itord_named(a, b)?,
                });
            }
            first_seen.insert(self.word.at(i), i);
        }
        Ok(Embedding::Normal)
    }

    pub fn is_ne_subtriangle(&self, j: usize, l: usize) -> Result<bool> {
        Ok(self.ne_subtriangle(j, l)?.is_normal())
    }

    /// Whether `T(δ_j, δ_l)` is a bubble snake, i.e. `[w_j ... w_l]` is
    /// semi-primitive.
    pub fn is_bubble_subtriangle(&self, j: usize, l: usize) -> Result<bool> {
        self.check_zone_pair(j, l)?;
        self.word.subword(j, l)?.is_semi_primitive()
    }

    /// The full matrix of outer tangency orders between named arcs.
    pub fn tord_matrix(&self) -> TordMatrix {
        let arcs = self.arcs();
        TordMatrix {
            arcs: arcs.iter().map(|a| a.label.to_string()).collect(),
            matrix: arcs
                .iter()
                .map(|a| arcs.iter().map(|b| tord(a, b)).collect())
                .collect(),
        }
    }

    /// Spectrum of each node: tangency orders between distinct `δ` arcs of
    /// that node. Nodes follow the canonical order of `P(W)`.
    pub fn spectra(&self) -> Vec<BTreeSet<Exponent>> {
        let nodes = self.word.partition().expect("model words are non-empty");
        nodes
            .blocks()
            .iter()
            .map(|block| {
                let mut spectrum = BTreeSet::new();
                for (x, &i) in block.iter().enumerate() {
                    for &i2 in &block[x + 1..] {
                        if let Tord::Finite(q) = tord(&self.deltas[i - 1], &self.deltas[i2 - 1]) {
                            spectrum.insert(q);
                        }
                    }
                }
                spectrum
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TordMatrix {
    pub arcs: Vec<String>,
    pub matrix: Vec<Vec<Tord>>,
}

impl fmt::Display for TordMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .matrix
            .iter()
            .map(|row| row.iter().map(Tord::to_string).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .chain(&self.arcs)
            .map(String::len)
            .max()
            .unwrap_or(1);
        write!(f, "{:>width$}", "")?;
        for a in &self.arcs {
            write!(f, " {a:>width$}")?;
        }
        writeln!(f)?;
        for (a, row) in self.arcs.iter().zip(&cells) {
            write!(f, "{a:>width$}")?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Nodal zones, nodes, segments and spectra of the snake realizing `w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnakeStructure {
    pub nodal_zone_count: usize,
    /// `P(W)`: node `k` is the union of the nodal zones in block `k`.
    pub nodes: SetPartition,
    /// Segment `i` joins nodal zones `(i, i + 1)`.
    pub segments: Vec<(usize, usize)>,
    pub boundary_nodal_zones: (usize, usize),
    pub spectrum_per_node: Vec<Vec<String>>,
}

/// Combinatorial structure of the snake named by `w`. For `m > 2` spectra
/// come from the model snake; the bubble `aa` is assigned `{α}`.
pub fn structure(w: &Word, exps: Exponents) -> Result<SnakeStructure> {
    require_snake_name(w)?;
    let m = w.len();
    let nodes = w.partition()?;
    let spectra: Vec<BTreeSet<Exponent>> = if m > 2 {
        ModelSnake::build(w, exps)?.spectra()
    } else {
        vec![BTreeSet::from([exps.alpha()])]
    };
    Ok(SnakeStructure {
        nodal_zone_count: m,
        nodes,
        segments: (1..m).map(|i| (i, i + 1)).collect(),
        boundary_nodal_zones: (1, m),
        spectrum_per_node: spectra
            .into_iter()
            .map(|s| s.into_iter().map(|q| q.to_string()).collect())
            .collect(),
    })
}

/// Unordered letter pair, smaller letter first.
pub type LetterPair = (Letter, Letter);

/// Segment `i` (between nodal zones `i` and `i + 1`) belongs to the class of
/// the pair `{w_i, w_{i+1}}`.
pub fn segment_pair_classes(w: &Word) -> Result<BTreeMap<LetterPair, Vec<usize>>> {
    let verdict = validate(w);
    if !verdict.is_snake_name() && !verdict.is_spiral() {
        return Err(SnakeError::NotASnakeName {
            word: w.to_string(),
        });
    }
    let mut classes: BTreeMap<LetterPair, Vec<usize>> = BTreeMap::new();
    for i in 1..w.len() {
        let (x, y) = (w.at(i), w.at(i + 1));
        classes.entry((x.min(y), x.max(y))).or_default().push(i);
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Exponent {
        Exponent::new(n, d)
    }

    fn terms(pairs: &[(usize, Exponent)]) -> BTreeMap<usize, Exponent> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn abab_arcs() {
        let s = ModelSnake::build(&w("abab"), Exponents::default()).unwrap();
        let one = q(1, 1);
        let two = q(2, 1);
        let d: Vec<_> = s.deltas().iter().map(|a| a.terms.clone()).collect();
        assert_eq!(d[0], terms(&[(1, one)]));
        assert_eq!(d[1], terms(&[(1, one), (2, one)]));
        assert_eq!(d[2], terms(&[(1, one), (3, two)]));
        assert_eq!(d[3], terms(&[(1, one), (2, one), (4, two)]));
        let sg: Vec<_> = s.sigmas().iter().map(|a| a.terms.clone()).collect();
        assert_eq!(sg[0], terms(&[(1, one), (5, one)]));
        assert_eq!(sg[1], terms(&[(1, one), (6, one)]));
        assert_eq!(sg[2], terms(&[(1, one), (7, one)]));
        assert_eq!(s.dimension(), 7);
    }

    #[test]
    fn abacbc_arcs_with_fractional_alpha() {
        let exps = Exponents::new(q(1, 1), q(3, 2)).unwrap();
        let s = ModelSnake::build(&w("abacbc"), exps).unwrap();
        assert_eq!(s.deltas()[2].terms, terms(&[(1, q(1, 1)), (3, q(3, 2))]));
        // δ_5 = δ_2 + t^α e_5, δ_6 = δ_4 + t^α e_6
        assert_eq!(
            s.deltas()[4].terms,
            terms(&[(1, q(1, 1)), (2, q(1, 1)), (5, q(3, 2))])
        );
        assert_eq!(
            s.deltas()[5].terms,
            terms(&[(1, q(1, 1)), (4, q(1, 1)), (6, q(3, 2))])
        );
    }

    #[test]
    fn model_needs_length_three() {
        assert!(matches!(
            ModelSnake::build(&w("aa"), Exponents::default()),
            Err(SnakeError::ModelUndefined { len: 2 })
        ));
        assert!(ModelSnake::build(&w("abacdcbd"), Exponents::default()).is_err());
    }

    #[test]
    fn exponent_bounds() {
        assert!(Exponents::new(q(1, 1), q(1, 1)).is_err());
        assert!(Exponents::new(q(1, 2), q(2, 1)).is_err());
        assert!(Exponents::new(q(3, 2), q(2, 1)).is_ok());
        assert_eq!(parse_exponent("3/2").unwrap(), q(3, 2));
        assert_eq!(parse_exponent("2").unwrap(), q(2, 1));
        assert!(parse_exponent("x").is_err());
    }

    #[test]
    fn tord_and_itord_on_abab() {
        let s = ModelSnake::build(&w("abab"), Exponents::default()).unwrap();
        let (d1, d3) = (ArcLabel::Delta(1), ArcLabel::Delta(3));
        assert_eq!(s.tord_named(d1, d1).unwrap(), Tord::Infinite);
        assert_eq!(s.tord_named(d1, d3).unwrap(), Tord::Finite(q(2, 1)));
        assert_eq!(s.itord_named(d1, d3).unwrap(), Tord::Finite(q(1, 1)));
        assert_eq!(s.itord_named(d1, d1).unwrap(), Tord::Infinite);
        assert_eq!(
            s.itord_named(d1, ArcLabel::Delta(4)).unwrap(),
            Tord::Finite(q(1, 1))
        );
        assert!(s.tord_named(ArcLabel::Sigma(4), d1).is_err());
    }

    #[test]
    fn subtriangles() {
        let s = ModelSnake::build(&w("abcdacbd"), Exponents::default()).unwrap();
        assert!(s.is_ne_subtriangle(1, 4).unwrap());
        assert_eq!(
            s.ne_subtriangle(1, 5).unwrap(),
            Embedding::NotNormal {
                witness: (1, 5),
                tord: Tord::Finite(q(2, 1)),
                itord: Tord::Finite(q(1, 1)),
            }
        );
        assert!(s.is_bubble_subtriangle(1, 5).unwrap());
        assert!(s.is_bubble_subtriangle(3, 6).unwrap());
        assert!(s.is_ne_subtriangle(0, 3).is_err());
        assert!(s.is_ne_subtriangle(3, 3).is_err());
        assert!(s.is_ne_subtriangle(3, 9).is_err());

        let s = ModelSnake::build(&w("abab"), Exponents::default()).unwrap();
        assert!(!s.is_ne_subtriangle(1, 3).unwrap());
        assert!(!s.is_bubble_subtriangle(1, 4).unwrap());
    }

    #[test]
    fn structures() {
        let st = structure(&w("aa"), Exponents::default()).unwrap();
        assert_eq!(
            (st.nodal_zone_count, st.nodes.len(), st.segments.len()),
            (2, 1, 1)
        );
        let st = structure(&w("abab"), Exponents::default()).unwrap();
        assert_eq!(st.nodes.to_string(), "1,3;2,4");
        assert_eq!(st.segments, vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(st.spectrum_per_node, vec![vec!["2"], vec!["2"]]);
        let st = structure(&w("abcdacbd"), Exponents::default()).unwrap();
        assert_eq!(
            (st.nodal_zone_count, st.nodes.len(), st.segments.len()),
            (8, 4, 7)
        );
        assert_eq!(st.boundary_nodal_zones, (1, 8));
    }

    #[test]
    fn pair_classes() {
        let show = |s: &str| -> Vec<String> {
            segment_pair_classes(&w(s))
                .unwrap()
                .into_iter()
                .map(|((x, y), segs)| format!("{x}{y}:{segs:?}"))
                .collect()
        };
        assert_eq!(show("abab"), ["ab:[1, 2, 3]"]);
        assert_eq!(show("abacbc"), ["ab:[1, 2]", "ac:[3]", "bc:[4, 5]"]);
        assert_eq!(show("aaa"), ["aa:[1, 2]"]);
        assert!(segment_pair_classes(&w("abc")).is_err());
    }

    #[test]
    fn matrix_text_and_json() {
        let s = ModelSnake::build(&w("abab"), Exponents::default()).unwrap();
        let m = s.tord_matrix();
        assert_eq!(m.arcs, ["d1", "s1", "d2", "s2", "d3", "s3", "d4"]);
        let json = serde_json::to_string(&m).unwrap();
        let back: TordMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        assert!(m.to_string().contains("inf"));
    }
}
