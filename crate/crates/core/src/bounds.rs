//! Proved bounds on the local antimagic chromatic number of a spider, and the
//! classification of `Sp(2^[n], 3^[m])`.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::TheoremId;
use crate::construct::dispatch;
use crate::spider::{SpiderGraph, SpiderSignature, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("bounds need at least 3 legs, got {0}")]
    TooFewLegs(usize),
    #[error("the 2/3 classification needs n+m >= 3, got n={n}, m={m}")]
    TooSmall { n: usize, m: usize },
    #[error("the leg-count rule needs every leg of length at least 2")]
    ShortLeg,
}

/// Rule that contributed to a [`ChiLaBounds`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundRule {
    /// `d` pendants force at least `d+1` colors.
    Pendant,
    /// The fundamental labeling uses at most `d+2` colors.
    Fundamental,
    /// A leg of length 1 gives exactly `d+1`.
    Leg1,
    /// Unique high-degree core far from the pendants forces `d+2`.
    MaxDegree,
    /// `d(d+1) > 2(2q-1)` with all legs at least 2 gives exactly `d+2`.
    LegCount,
    /// All legs of length 2.
    AllTwos,
    /// Legs of lengths 2 and 3, classified by the sets A and B.
    TwoThree,
    /// A verified labeling with `d+1` colors.
    Construction(TheoremId),
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundRule::Pendant => f.write_str("pendant"),
            BoundRule::Fundamental => f.write_str("fundamental"),
            BoundRule::Leg1 => f.write_str("leg1"),
            BoundRule::MaxDegree => f.write_str("maxdeg"),
            BoundRule::LegCount => f.write_str("legnum"),
            BoundRule::AllTwos => f.write_str("all_twos"),
            BoundRule::TwoThree => f.write_str("two_three"),
            BoundRule::Construction(t) => write!(f, "construction:{t}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiLaBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub provenance: Vec<(BoundRule, String)>,
}

impl ChiLaBounds {
    fn raise(&mut self, to: usize, rule: BoundRule) {
        if to > self.lower {
            self.lower = to;
        }
        self.provenance.push((rule, format!("lower >= {to}")));
    }

    fn cap(&mut self, to: usize, rule: BoundRule) {
        if to < self.upper {
            self.upper = to;
        }
        self.provenance.push((rule, format!("upper <= {to}")));
    }

    fn settle(&mut self) {
        assert!(self.lower <= self.upper, "contradictory bounds {self:?}");
        self.exact = (self.lower == self.upper).then_some(self.lower);
    }
}

/// Number of pendants plus one.
pub fn pendant_lower_bound(g: &SpiderGraph) -> usize {
    g.num_pendants() + 1
}

/// `Δ(Δ+1) > m(2q-m+1)` for a graph with a unique vertex of maximum degree
/// `Δ`, not adjacent to a pendant, and every other degree at most `m < Δ`.
/// Returns false when that structure is absent.
pub fn maxdeg_forces_plus2(g: &SpiderGraph) -> bool {
    let degrees: Vec<(Vertex, usize)> = g.vertices().map(|v| (v, g.degree(v))).collect();
    let Some(&(top, delta)) = degrees.iter().max_by_key(|&&(_, d)| d) else {
        return false;
    };
    if degrees.iter().filter(|&&(_, d)| d == delta).count() != 1 {
        return false;
    }
    let touches_pendant = g.edges().any(|e| {
        let (a, b) = g.endpoints(e);
        (a == top && g.degree(b) == 1) || (b == top && g.degree(a) == 1)
    });
    if touches_pendant {
        return false;
    }
    let m = degrees
        .iter()
        .filter(|&&(v, _)| v != top)
        .map(|&(_, d)| d)
        .max()
        .unwrap_or(0);
    let q = g.num_edges();
    delta * (delta + 1) > m * (2 * q + 1 - m)
}

/// `d(d+1) > 2(2q-1)`, which pins `χ_la` at `d+2` when `d >= 3`.
pub fn legnum_forces_plus2(sig: &SpiderSignature) -> Result<bool, BoundsError> {
    if sig.legs().iter().any(|&y| y < 2) {
        return Err(BoundsError::ShortLeg);
    }
    let (d, q) = (sig.num_legs(), sig.size());
    Ok(d >= 3 && d * (d + 1) > 2 * (2 * q - 1))
}

/// Pairs `(n, m)`, `m >= 1`, where `Sp(2^[n], 3^[m])` escapes the leg-count
/// rule.
pub fn set_a() -> Vec<(usize, usize)> {
    [
        (0, 3..=10),
        (1, 2..=9),
        (2, 1..=8),
        (3, 1..=6),
        (4, 1..=5),
        (5, 1..=3),
        (6, 1..=1),
    ]
    .into_iter()
    .flat_map(|(n, ms)| ms.map(move |m| (n, m)))
    .collect()
}

/// Pairs `(n, m)`, `m >= 1`, where `Sp(2^[n], 3^[m])` has `n+m+1` colors.
pub fn set_b() -> Vec<(usize, usize)> {
    [
        (0, 3..=9),
        (1, 2..=7),
        (2, 1..=6),
        (3, 1..=4),
        (4, 1..=3),
        (5, 1..=2),
        (6, 1..=1),
    ]
    .into_iter()
    .flat_map(|(n, ms)| ms.map(move |m| (n, m)))
    .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sp23Class {
    /// In B: `n+m+1`.
    InB,
    /// In A but not B: `n+m+2`, by case analysis on the core.
    OnlyInA,
    /// Outside A: `n+m+2` by the leg-count rule.
    OutsideA,
    /// `m = 0`: `Sp(2^[n])`, `n+1` only for `n = 3`.
    AllTwos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sp23Classification {
    pub class: Sp23Class,
    pub chi_la: usize,
}

pub fn sp23_classify(n: usize, m: usize) -> Result<Sp23Classification, BoundsError> {
    if n + m < 3 {
        return Err(BoundsError::TooSmall { n, m });
    }
    let d = n + m;
    let (class, chi_la) = if m == 0 {
        (Sp23Class::AllTwos, if n == 3 { d + 1 } else { d + 2 })
    } else if set_b().contains(&(n, m)) {
        (Sp23Class::InB, d + 1)
    } else if set_a().contains(&(n, m)) {
        (Sp23Class::OnlyInA, d + 2)
    } else {
        (Sp23Class::OutsideA, d + 2)
    };
    Ok(Sp23Classification { class, chi_la })
}

/// Range of `x`, the label next to the pendant edge labeled `q` on a leg of
/// length 3, in a hypothetical `(n+m+1)`-labeling of `Sp(2^[n], 3^[m])`.
pub fn cond1_interval(n: usize, m: usize) -> RangeInclusive<i64> {
    let d = (n + m) as i64;
    let q = (2 * n + 3 * m) as i64;
    (d * (d + 1) / 2 - q)..=(q - 1)
}

/// Everything the proved rules and the known constructions say about
/// `χ_la(sig)`.
pub fn bounds(sig: &SpiderSignature) -> Result<ChiLaBounds, BoundsError> {
    let d = sig.num_legs();
    if d < 3 {
        return Err(BoundsError::TooFewLegs(d));
    }
    let g = SpiderGraph::new(sig.clone());
    let mut b = ChiLaBounds {
        lower: 0,
        upper: usize::MAX,
        exact: None,
        provenance: Vec::new(),
    };
    b.raise(pendant_lower_bound(&g), BoundRule::Pendant);
    b.cap(d + 2, BoundRule::Fundamental);
    if sig.legs().contains(&1) {
        b.cap(d + 1, BoundRule::Leg1);
    } else {
        if maxdeg_forces_plus2(&g) {
            b.raise(d + 2, BoundRule::MaxDegree);
        }
        if legnum_forces_plus2(sig)? {
            b.raise(d + 2, BoundRule::LegCount);
        }
        if let Some((n, m)) = sig.two_three_counts() {
            let c = sp23_classify(n, m)?;
            let rule = if m == 0 {
                BoundRule::AllTwos
            } else {
                BoundRule::TwoThree
            };
            if c.chi_la == d + 1 {
                b.cap(d + 1, rule);
            } else {
                b.raise(d + 2, rule);
            }
        }
    }
    if b.lower <= d + 1 {
        if let Ok(cert) = dispatch(sig) {
            if cert.claimed_color_count == d + 1 && cert.verify().passed() {
                b.cap(d + 1, BoundRule::Construction(cert.theorem_id));
            }
        }
    }
    b.settle();
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> SpiderSignature {
        s.parse().unwrap()
    }

    fn graph(s: &str) -> SpiderGraph {
        SpiderGraph::new(sig(s))
    }

    #[test]
    fn pendant_bound() {
        assert_eq!(pendant_lower_bound(&graph("2,2,3")), 4);
        assert_eq!(pendant_lower_bound(&graph("1^5")), 6);
        assert_eq!(pendant_lower_bound(&graph("2^4")), 5);
    }

    #[test]
    fn degree_rules() {
        assert!(maxdeg_forces_plus2(&graph("2^7")));
        assert!(!maxdeg_forces_plus2(&graph("2,2,3")));
        assert!(!maxdeg_forces_plus2(&graph("1,5,5,5")));
        assert!(legnum_forces_plus2(&sig("2^7")).unwrap());
        assert!(!legnum_forces_plus2(&sig("2,2,3")).unwrap());
        assert!(!legnum_forces_plus2(&sig("3^10")).unwrap());
        assert_eq!(
            legnum_forces_plus2(&sig("1,2,2")),
            Err(BoundsError::ShortLeg)
        );
    }

    #[test]
    fn sets_differ_by_ten_pairs() {
        let b = set_b();
        let diff: Vec<_> = set_a().into_iter().filter(|p| !b.contains(p)).collect();
        assert_eq!(
            diff,
            vec![
                (0, 10),
                (1, 8),
                (1, 9),
                (2, 7),
                (2, 8),
                (3, 5),
                (3, 6),
                (4, 4),
                (4, 5),
                (5, 3)
            ]
        );
        assert!(b.iter().all(|p| set_a().contains(p)));
    }

    #[test]
    fn set_a_is_the_inequality() {
        let a = set_a();
        for n in 0..=6usize {
            for m in 1..=10usize {
                if n + m < 3 {
                    continue;
                }
                let inside = (n + m) * (n + m + 1) <= 2 * (4 * n + 6 * m - 1);
                assert_eq!(inside, a.contains(&(n, m)), "({n},{m})");
            }
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(sp23_classify(0, 10).unwrap().chi_la, 12);
        assert_eq!(sp23_classify(1, 8).unwrap().chi_la, 11);
        assert_eq!(
            sp23_classify(3, 3).unwrap(),
            Sp23Classification {
                class: Sp23Class::InB,
                chi_la: 7
            }
        );
        assert_eq!(sp23_classify(3, 0).unwrap().chi_la, 4);
        assert_eq!(sp23_classify(5, 0).unwrap().chi_la, 7);
        assert!(sp23_classify(1, 1).is_err());
    }

    #[test]
    fn cond1_examples() {
        assert_eq!(cond1_interval(0, 10), 25..=29);
        assert_eq!(cond1_interval(1, 8), 19..=25);
        assert_eq!(cond1_interval(2, 8), 27..=27);
        for (n, m) in set_a() {
            assert!(!cond1_interval(n, m).is_empty(), "({n},{m})");
        }
    }

    #[test]
    fn bounds_examples() {
        let b = bounds(&sig("2,2,3")).unwrap();
        assert_eq!(b.exact, Some(4));
        let b = bounds(&sig("2^5")).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (7, 7, Some(7)));
        let b = bounds(&sig("2,3,3,3")).unwrap();
        assert_eq!(b.exact, Some(5));
        assert!(b
            .provenance
            .iter()
            .any(|(r, _)| *r == BoundRule::Construction(TheoremId::Appendix)));
        assert_eq!(bounds(&sig("3,4")), Err(BoundsError::TooFewLegs(2)));
    }

    #[test]
    fn unsettled_spider_keeps_both_ends() {
        let b = bounds(&sig("9,15,19")).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (4, 5, None));
    }
}
