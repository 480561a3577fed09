//! Spider trees, their edge labelings and the vertex colors a labeling induces.
//!
//! A spider `Sp(y_1, ..., y_d)` is `d` paths glued at one end-vertex, the core.
//! Leg `i` has vertices `v(i,1) .. v(i,y_i)` numbered from the pendant toward the
//! core, and edge `(i, j)` joins `v(i,j)` to `v(i,j+1)`, where `v(i, y_i + 1)` is
//! the core. Legs and positions are 1-based everywhere in the public API.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpiderError {
    #[error("a spider needs at least 2 legs, got {0}")]
    TooFewLegs(usize),
    #[error("leg {leg} has length 0")]
    EmptyLeg { leg: usize },
    #[error("cannot parse signature {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("labeling has {got} legs but the spider has {expected}")]
    LegCountMismatch { expected: usize, got: usize },
    #[error("edge ({leg},{position}) has no label")]
    MissingLabel { leg: usize, position: usize },
    #[error("leg {leg} carries {got} labels but has {expected} edges")]
    ExtraLabels {
        leg: usize,
        expected: usize,
        got: usize,
    },
}

/// Leg lengths of a spider, in the order given.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SpiderSignature {
    legs: Vec<usize>,
}

impl SpiderSignature {
    pub fn new(legs: Vec<usize>) -> Result<Self, SpiderError> {
        if legs.len() < 2 {
            return Err(SpiderError::TooFewLegs(legs.len()));
        }
        if let Some(i) = legs.iter().position(|&y| y == 0) {
            return Err(SpiderError::EmptyLeg { leg: i + 1 });
        }
        Ok(Self { legs })
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Number of legs, `d`.
    pub fn num_legs(&self) -> usize {
        self.legs.len()
    }

    /// Number of edges, `q`.
    pub fn size(&self) -> usize {
        self.legs.iter().sum()
    }

    /// Legs sorted non-decreasing. Spiders are isomorphic up to leg order.
    pub fn canonical(&self) -> SpiderSignature {
        let mut legs = self.legs.clone();
        legs.sort_unstable();
        SpiderSignature { legs }
    }

    pub fn is_canonical(&self) -> bool {
        self.legs.windows(2).all(|w| w[0] <= w[1])
    }

    /// `Some((n, m))` when the spider is `Sp(2^[n], 3^[m])`.
    pub fn two_three_counts(&self) -> Option<(usize, usize)> {
        let mut n = 0;
        let mut m = 0;
        for &y in &self.legs {
            match y {
                2 => n += 1,
                3 => m += 1,
                _ => return None,
            }
        }
        Some((n, m))
    }
}

impl TryFrom<Vec<usize>> for SpiderSignature {
    type Error = SpiderError;

    fn try_from(legs: Vec<usize>) -> Result<Self, Self::Error> {
        SpiderSignature::new(legs)
    }
}

impl From<SpiderSignature> for Vec<usize> {
    fn from(sig: SpiderSignature) -> Self {
        sig.legs
    }
}

impl fmt::Display for SpiderSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sp(")?;
        for (i, y) in self.legs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"2,2,3"`, `"2^4,3^2"` and the same wrapped in `Sp(...)`.
/// An exponent of zero contributes no legs.
impl FromStr for SpiderSignature {
    type Err = SpiderError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| SpiderError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut body = input.trim();
        if let Some(rest) = body
            .strip_prefix("Sp(")
            .or_else(|| body.strip_prefix("sp("))
        {
            body = rest
                .strip_suffix(')')
                .ok_or_else(|| err("missing closing parenthesis"))?;
        }
        if body.is_empty() {
            return Err(err("empty signature"));
        }
        let mut legs = Vec::new();
        for term in body.split(',') {
            let term = term.trim();
            let (len, count) = match term.split_once('^') {
                Some((len, count)) => (len.trim(), count.trim()),
                None => (term, "1"),
            };
            let len: usize = len
                .parse()
                .map_err(|_| err(&format!("bad leg length {len:?}")))?;
            let count: usize = count
                .parse()
                .map_err(|_| err(&format!("bad exponent {count:?}")))?;
            legs.extend(std::iter::repeat_n(len, count));
        }
        SpiderSignature::new(legs)
    }
}

/// Edge `(leg, position)`: both 1-based, position 1 is the pendant edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId {
    pub leg: usize,
    pub position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Core,
    /// `index` runs from 1 (pendant) to the leg length (neighbour of the core).
    Leg {
        leg: usize,
        index: usize,
    },
}

impl FromStr for Vertex {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "u" {
            return Ok(Vertex::Core);
        }
        let bad = || format!("bad vertex name {s:?}");
        let rest = s.strip_prefix('L').ok_or_else(bad)?;
        let (leg, index) = rest.split_once('V').ok_or_else(bad)?;
        Ok(Vertex::Leg {
            leg: leg.parse().map_err(|_| bad())?,
            index: index.parse().map_err(|_| bad())?,
        })
    }
}

impl Serialize for Vertex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Core => write!(f, "u"),
            Vertex::Leg { leg, index } => write!(f, "L{leg}V{index}"),
        }
    }
}

/// Concrete vertex/edge model of a spider.
///
/// Vertices also have a dense index: 0 is the core and leg vertices follow leg
/// by leg, pendant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiderGraph {
    signature: SpiderSignature,
    offsets: Vec<usize>,
}

impl SpiderGraph {
    pub fn new(signature: SpiderSignature) -> Self {
        let mut offsets = Vec::with_capacity(signature.num_legs());
        let mut next = 1;
        for &y in signature.legs() {
            offsets.push(next);
            next += y;
        }
        Self { signature, offsets }
    }

    pub fn signature(&self) -> &SpiderSignature {
        &self.signature
    }

    pub fn num_legs(&self) -> usize {
        self.signature.num_legs()
    }

    pub fn num_edges(&self) -> usize {
        self.signature.size()
    }

    pub fn num_vertices(&self) -> usize {
        self.signature.size() + 1
    }

    pub fn leg_len(&self, leg: usize) -> usize {
        self.signature.legs()[leg - 1]
    }

    /// Edges in deterministic order: leg by leg, pendant to core.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.signature
            .legs()
            .iter()
            .enumerate()
            .flat_map(|(i, &y)| {
                (1..=y).map(move |j| EdgeId {
                    leg: i + 1,
                    position: j,
                })
            })
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::once(Vertex::Core).chain(self.signature.legs().iter().enumerate().flat_map(
            |(i, &y)| {
                (1..=y).map(move |j| Vertex::Leg {
                    leg: i + 1,
                    index: j,
                })
            },
        ))
    }

    /// Endpoints of an edge, pendant side first.
    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        let outer = Vertex::Leg {
            leg: e.leg,
            index: e.position,
        };
        let inner = if e.position == self.leg_len(e.leg) {
            Vertex::Core
        } else {
            Vertex::Leg {
                leg: e.leg,
                index: e.position + 1,
            }
        };
        (outer, inner)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        match v {
            Vertex::Core => self.num_legs(),
            Vertex::Leg { index: 1, .. } => 1,
            Vertex::Leg { .. } => 2,
        }
    }

    pub fn pendants(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.num_legs()).map(|leg| Vertex::Leg { leg, index: 1 })
    }

    pub fn num_pendants(&self) -> usize {
        self.num_legs()
    }

    pub fn vertex_index(&self, v: Vertex) -> usize {
        match v {
            Vertex::Core => 0,
            Vertex::Leg { leg, index } => self.offsets[leg - 1] + index - 1,
        }
    }

    pub fn vertex_at(&self, idx: usize) -> Vertex {
        if idx == 0 {
            return Vertex::Core;
        }
        let leg = self.offsets.partition_point(|&o| o <= idx);
        Vertex::Leg {
            leg,
            index: idx - self.offsets[leg - 1] + 1,
        }
    }

    /// Dense endpoint indices of every edge, in [`SpiderGraph::edges`] order.
    pub fn edge_endpoint_indices(&self) -> Vec<(usize, usize)> {
        self.edges()
            .map(|e| {
                let (a, b) = self.endpoints(e);
                (self.vertex_index(a), self.vertex_index(b))
            })
            .collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }
}

pub fn build_spider(signature: &SpiderSignature) -> SpiderGraph {
    SpiderGraph::new(signature.clone())
}

/// Edge labels stored per leg, pendant edge first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeLabeling {
    legs: Vec<Vec<u32>>,
}

impl EdgeLabeling {
    pub fn from_legs(legs: Vec<Vec<u32>>) -> Self {
        Self { legs }
    }

    pub fn legs(&self) -> &[Vec<u32>] {
        &self.legs
    }

    pub fn into_legs(self) -> Vec<Vec<u32>> {
        self.legs
    }

    pub fn get(&self, e: EdgeId) -> Option<u32> {
        self.legs
            .get(e.leg.checked_sub(1)?)?
            .get(e.position.checked_sub(1)?)
            .copied()
    }

    pub fn num_labels(&self) -> usize {
        self.legs.iter().map(Vec::len).sum()
    }

    /// Shape of the labeling, usable as a signature when every leg is non-empty.
    pub fn leg_lengths(&self) -> Vec<usize> {
        self.legs.iter().map(Vec::len).collect()
    }

    /// Labels in [`SpiderGraph::edges`] order.
    pub fn flat(&self) -> Vec<u32> {
        self.legs.iter().flatten().copied().collect()
    }

    /// Checks that every edge of `g` has a label and no extra labels exist.
    pub fn check_shape(&self, g: &SpiderGraph) -> Result<(), SpiderError> {
        if self.legs.len() != g.num_legs() {
            return Err(SpiderError::LegCountMismatch {
                expected: g.num_legs(),
                got: self.legs.len(),
            });
        }
        for (i, labels) in self.legs.iter().enumerate() {
            let expected = g.leg_len(i + 1);
            if labels.len() < expected {
                return Err(SpiderError::MissingLabel {
                    leg: i + 1,
                    position: labels.len() + 1,
                });
            }
            if labels.len() > expected {
                return Err(SpiderError::ExtraLabels {
                    leg: i + 1,
                    expected,
                    got: labels.len(),
                });
            }
        }
        Ok(())
    }
}

/// Vertex colors `f+(v)` induced by an edge labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedColoring {
    colors: Vec<u64>,
    distinct: BTreeSet<u64>,
}

impl InducedColoring {
    /// Colors indexed by [`SpiderGraph::vertex_index`].
    pub fn colors(&self) -> &[u64] {
        &self.colors
    }

    pub fn color(&self, g: &SpiderGraph, v: Vertex) -> u64 {
        self.colors[g.vertex_index(v)]
    }

    pub fn core(&self) -> u64 {
        self.colors[0]
    }

    pub fn distinct_colors(&self) -> &BTreeSet<u64> {
        &self.distinct
    }

    pub fn count(&self) -> usize {
        self.distinct.len()
    }
}

pub fn induced_colors(g: &SpiderGraph, f: &EdgeLabeling) -> Result<InducedColoring, SpiderError> {
    f.check_shape(g)?;
    let mut colors = vec![0u64; g.num_vertices()];
    for ((a, b), e) in g.edge_endpoint_indices().into_iter().zip(g.edges()) {
        // check_shape guarantees the label exists
        let label = u64::from(f.get(e).unwrap_or_default());
        colors[a] += label;
        colors[b] += label;
    }
    let distinct = colors.iter().copied().collect();
    Ok(InducedColoring { colors, distinct })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(legs: &[usize]) -> SpiderSignature {
        SpiderSignature::new(legs.to_vec()).unwrap()
    }

    #[test]
    fn star_has_four_vertices() {
        let g = build_spider(&sig(&[1, 1, 1]));
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_edges(), 3);
        assert_eq!(g.degree(Vertex::Core), 3);
        assert_eq!(g.degree_sequence(), vec![1, 1, 1, 3]);
    }

    #[test]
    fn counts_follow_size() {
        let g = build_spider(&sig(&[2, 2, 3]));
        assert_eq!(g.num_vertices(), 8);
        assert_eq!(g.num_edges(), 7);
        assert_eq!(g.pendants().count(), 3);
        let s = sig(&[4, 2, 3, 5, 1]);
        assert_eq!((s.size(), s.num_legs()), (15, 5));
    }

    #[test]
    fn rejects_bad_signatures() {
        assert_eq!(
            SpiderSignature::new(vec![3]),
            Err(SpiderError::TooFewLegs(1))
        );
        assert_eq!(
            SpiderSignature::new(vec![2, 0, 1]),
            Err(SpiderError::EmptyLeg { leg: 2 })
        );
    }

    #[test]
    fn canonical_sorts_legs() {
        assert_eq!(sig(&[5, 2, 3]).canonical(), sig(&[2, 3, 5]));
        assert_eq!(sig(&[2, 2, 2]).canonical(), sig(&[2, 2, 2]));
        assert_eq!(sig(&[9, 5, 5]).canonical(), sig(&[5, 5, 9]));
    }

    #[test]
    fn parses_exponent_sugar() {
        assert_eq!(
            "2^4,3^2".parse::<SpiderSignature>().unwrap(),
            sig(&[2, 2, 2, 2, 3, 3])
        );
        assert_eq!(
            "2^4,3^0".parse::<SpiderSignature>().unwrap(),
            sig(&[2, 2, 2, 2])
        );
        assert_eq!(
            "Sp(2,3,2)".parse::<SpiderSignature>().unwrap(),
            sig(&[2, 3, 2])
        );
        assert_eq!(
            " 1, 1 ,1".parse::<SpiderSignature>().unwrap(),
            sig(&[1, 1, 1])
        );
        assert!("2,x".parse::<SpiderSignature>().is_err());
        assert!("2^".parse::<SpiderSignature>().is_err());
        assert!("".parse::<SpiderSignature>().is_err());
        assert!("3".parse::<SpiderSignature>().is_err());
    }

    #[test]
    fn vertex_index_round_trips() {
        let g = build_spider(&sig(&[3, 1, 4]));
        for (i, v) in g.vertices().enumerate() {
            assert_eq!(g.vertex_index(v), i);
            assert_eq!(g.vertex_at(i), v);
        }
    }

    #[test]
    fn colors_of_known_labeling() {
        let g = build_spider(&sig(&[2, 2, 3]));
        let f = EdgeLabeling::from_legs(vec![vec![7, 2], vec![6, 3], vec![5, 4, 1]]);
        let c = induced_colors(&g, &f).unwrap();
        assert_eq!(c.core(), 6);
        assert_eq!(
            c.distinct_colors().iter().copied().collect::<Vec<_>>(),
            vec![5, 6, 7, 9]
        );
        assert_eq!(c.color(&g, Vertex::Leg { leg: 1, index: 1 }), 7);
    }

    #[test]
    fn star_colors() {
        let g = build_spider(&sig(&[1, 1, 1]));
        let f = EdgeLabeling::from_legs(vec![vec![1], vec![2], vec![3]]);
        let c = induced_colors(&g, &f).unwrap();
        assert_eq!(c.colors(), &[6, 1, 2, 3]);
    }

    #[test]
    fn all_even_example_colors() {
        let g = build_spider(&sig(&[4, 6, 8]));
        let f = EdgeLabeling::from_legs(vec![
            vec![18, 1, 17, 2],
            vec![16, 3, 15, 4, 14, 5],
            vec![13, 6, 12, 7, 11, 8, 10, 9],
        ]);
        let c = induced_colors(&g, &f).unwrap();
        assert_eq!(
            c.distinct_colors().iter().copied().collect::<Vec<_>>(),
            vec![13, 16, 18, 19]
        );
    }

    #[test]
    fn missing_label_is_an_error() {
        let g = build_spider(&sig(&[2, 2, 3]));
        let f = EdgeLabeling::from_legs(vec![vec![7, 2], vec![6, 3], vec![5, 4]]);
        assert_eq!(
            induced_colors(&g, &f),
            Err(SpiderError::MissingLabel {
                leg: 3,
                position: 3
            })
        );
        let f = EdgeLabeling::from_legs(vec![vec![7, 2], vec![6, 3]]);
        assert!(matches!(
            induced_colors(&g, &f),
            Err(SpiderError::LegCountMismatch { .. })
        ));
    }
}
