//! Parameter grids for every generator, run and checked in bulk.

use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::{load_certificate, LabelingCertificate, TheoremId};
use crate::spider::SpiderSignature;

use super::*;

/// Instances larger than this are left out of a sweep.
pub const MAX_SWEEP_EDGES: usize = 400;

/// Generators with a parameter grid, in sweep order.
pub const SWEEPABLE: [TheoremId; 19] = [
    TheoremId::Leg1,
    TheoremId::AllEven,
    TheoremId::TwoEl,
    TheoremId::Eol,
    TheoremId::Oel,
    TheoremId::EolSmall,
    TheoremId::ThreeEven,
    TheoremId::Odd3k,
    TheoremId::OddNm1,
    TheoremId::EqualOdd,
    TheoremId::OddShifted,
    TheoremId::ConsecutiveOdd,
    TheoremId::OddM11,
    TheoremId::Leg3,
    TheoremId::Leg5,
    TheoremId::Leg7,
    TheoremId::Leg9And11,
    TheoremId::Leg13,
    TheoremId::Appendix,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub params: Vec<usize>,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub theorem: TheoremId,
    pub grid: usize,
    pub instances: usize,
    pub failures: Vec<SweepFailure>,
}

fn tuples(ranges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    ranges.iter().fold(vec![Vec::new()], |acc, &(lo, hi)| {
        acc.into_iter()
            .flat_map(|t| {
                (lo..=hi).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect()
    })
}

fn nondecreasing(len: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    tuples(&vec![(lo, hi); len])
        .into_iter()
        .filter(|t| t.windows(2).all(|w| w[0] <= w[1]))
        .collect()
}

/// Parameter tuples for `theorem` with every free parameter at most `g`.
pub fn grid(theorem: TheoremId, g: usize) -> Vec<Vec<usize>> {
    use TheoremId::*;
    let all = match theorem {
        Leg1 => (3..=4)
            .flat_map(|d| nondecreasing(d - 1, 1, g))
            .map(|mut t| {
                t.insert(0, 1);
                t
            })
            .collect(),
        AllEven => {
            // half-lengths of the first d-1 legs, then k and the bump
            let mut out = Vec::new();
            for (d, top) in [(3, g), (4, g / 2)] {
                for head in tuples(&vec![(1, top); d - 1]) {
                    for k in 0..d {
                        for bump in 0..=1 {
                            let mut t = head.clone();
                            t.extend([k, bump]);
                            out.push(t);
                        }
                    }
                }
            }
            out.into_iter()
                .filter(|t| all_even_legs(t).is_some())
                .collect()
        }
        TwoEl => tuples(&[(0, g), (2, g)]),
        Eol => tuples(&[(1, g), (0, g), (2, 2 * g)])
            .into_iter()
            .filter(|t| t[2] >= t[1] + 2)
            .collect(),
        Oel => tuples(&[(1, g), (0, g), (2, g)]),
        EolSmall => tuples(&[(1, g), (1, g), (2, g)])
            .into_iter()
            .filter(|t| t[2] <= t[1] + 1)
            .collect(),
        ThreeEven => nondecreasing(3, 1, g),
        Odd3k => tuples(&[(1, g), (1, g), (1, g)])
            .into_iter()
            .filter(|t| (t[0] + t[1] + t[2]) % 2 == 0 && 3 * t[2] <= t[0] + t[1])
            .collect(),
        OddNm1 => tuples(&[(1, g), (2, g)])
            .into_iter()
            .filter(|t| (t[0] + t[1]) % 2 == 0 && t[0] + t[1] >= 4)
            .collect(),
        EqualOdd => tuples(&[(0, g), (1, g)]),
        OddShifted => tuples(&[(0, g), (1, g)])
            .into_iter()
            .filter(|t| t[1] > t[0])
            .collect(),
        ConsecutiveOdd => tuples(&[(4, g.max(4))]),
        OddM11 => tuples(&[(2, g.max(2))]),
        Leg3 => tuples(&[(0, g), (1, g)]),
        Leg5 => tuples(&[(1, g), (3, g.max(3))]),
        Leg7 => tuples(&[(1, g), (1, g)]),
        Leg9And11 => tuples(&[(2, g.max(2))]),
        Leg13 => tuples(&[(2, g.max(2)), (2, g.max(2))]),
        Appendix => APPENDIX_PAIRS.iter().map(|&(n, m)| vec![n, m]).collect(),
        Solver => Vec::new(),
    };
    all.into_iter()
        .filter(|t| size(theorem, t).is_some_and(|q| q <= MAX_SWEEP_EDGES))
        .collect()
}

/// Leg lengths for an all-even grid point, when the identity admits one.
fn all_even_legs(t: &[usize]) -> Option<Vec<usize>> {
    let d = t.len() - 1;
    let (k, bump) = (t[d - 1], t[d] == 1);
    if bump && k == 0 {
        return None;
    }
    let y: Vec<usize> = t[..d - 1].iter().map(|&a| 2 * a).collect();
    let lhs: usize = y.iter().enumerate().map(|(i, &v)| (d - 1 - i) * v).sum();
    let mid: usize = y.iter().skip(k).sum();
    let last = lhs.checked_sub(mid).filter(|&v| v >= 2 && v % 2 == 0)?;
    let mut legs = y;
    legs.push(last + bump as usize);
    Some(legs)
}

fn size(theorem: TheoremId, t: &[usize]) -> Option<usize> {
    use TheoremId::*;
    Some(match theorem {
        Leg1 => t.iter().sum(),
        AllEven => all_even_legs(t)?.iter().sum(),
        TwoEl => 6 + 4 * t[0] + t[1],
        Eol | EolSmall => 4 * t[0] + 2 * t[1] + 1 + t[2],
        Oel => 4 * t[0] + 2 * t[1] + 1 + t[2],
        ThreeEven => 2 * (t[0] + t[1] + t[2]),
        Odd3k => 3 * (t[0] + t[1]) + 3 * t[2] + 3,
        OddNm1 => 3 * (t[0] + t[1]) + 3,
        EqualOdd => 2 * t[0] + 4 * t[1] + 3,
        OddShifted => 2 * t[0] + 2 * t[1] + 2 + 4 * (t[1] - t[0]) - 1,
        ConsecutiveOdd => 8 * t[0] + 1,
        OddM11 => 8 * t[0] + 17,
        Leg3 => 4 * t[1] + 2 * t[0] + 5,
        Leg5 | Leg7 => 2 * (t[0] + t[1]) + 2 + if theorem == Leg5 { 5 } else { 7 },
        Leg9And11 => 21 + 2 * t[0],
        Leg13 => 15 + 2 * (t[0] + t[1]),
        Appendix => 2 * t[0] + 3 * t[1],
        Solver => return None,
    })
}

/// Runs `theorem` at one grid point.
pub fn run(theorem: TheoremId, t: &[usize]) -> ConstructionResult {
    use TheoremId::*;
    let sig =
        |legs: Vec<usize>| SpiderSignature::new(legs).map_err(|e| domain(theorem, e.to_string()));
    match theorem {
        Leg1 => construct_leg1(&sig(t.to_vec())?),
        AllEven => {
            let legs = all_even_legs(t)
                .ok_or_else(|| domain(theorem, "grid point has no valid last leg"))?;
            let d = legs.len();
            construct_all_even(&sig(legs)?, t[d - 1], t[d] == 1)
        }
        TwoEl => construct_two_el(t[0], t[1]),
        Eol => construct_eol(t[0], t[1], t[2]),
        Oel => construct_oel(t[0], t[1], t[2]),
        EolSmall => construct_eolsmall(t[0], t[1], t[2]),
        ThreeEven => construct_three_even(t[0], t[1], t[2]),
        Odd3k => construct_odd_3k(t[0], t[1], t[2]),
        OddNm1 => construct_odd_nm1(t[0], t[1]),
        EqualOdd => construct_equal_odd(t[0], t[1]),
        OddShifted => construct_odd_shifted(t[0], t[1]),
        ConsecutiveOdd => construct_consecutive_odd(t[0]),
        OddM11 => construct_odd_m11(t[0]),
        Leg3 => construct_leg3(t[0], t[1]),
        Leg5 => construct_leg5(t[0], t[1]),
        Leg7 => construct_leg7(t[0], t[1]),
        Leg9And11 => construct_9_11(t[0]),
        Leg13 => construct_13(t[0], t[1]),
        Appendix => appendix_labeling(t[0], t[1]),
        Solver => Err(domain(theorem, "the solver has no parameter grid")),
    }
}

fn expected_colors(theorem: TheoremId, cert: &LabelingCertificate) -> usize {
    match theorem {
        TheoremId::Leg1 | TheoremId::AllEven | TheoremId::Appendix => cert.signature.num_legs() + 1,
        _ => 4,
    }
}

/// Checks one certificate: it verifies, has the generator's color count and
/// survives a JSON round trip.
fn check(theorem: TheoremId, cert: &LabelingCertificate) -> Result<(), String> {
    let report = cert.verify();
    if let Some(v) = report.violation {
        return Err(format!("{v:?}"));
    }
    let want = expected_colors(theorem, cert);
    if report.color_count != want || cert.claimed_color_count != want {
        return Err(format!(
            "{} colors, claimed {}, expected {want}",
            report.color_count, cert.claimed_color_count
        ));
    }
    let loaded = load_certificate(&cert.to_json()).map_err(|e| e.to_string())?;
    if loaded.certificate != *cert || !loaded.embedded_matches {
        return Err("JSON round trip changed the certificate".into());
    }
    Ok(())
}

pub fn sweep(theorem: TheoremId, g: usize) -> SweepReport {
    let points = grid(theorem, g);
    let mut failures: Vec<SweepFailure> = points
        .par_iter()
        .filter_map(|t| {
            let outcome = run(theorem, t)
                .map_err(|e| e.to_string())
                .and_then(|c| check(theorem, &c));
            outcome.err().map(|error| SweepFailure {
                params: t.clone(),
                error,
            })
        })
        .collect();
    failures.sort_by(|a, b| a.params.cmp(&b.params));
    SweepReport {
        theorem,
        grid: g,
        instances: points.len(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids_are_in_domain_and_nonempty() {
        for t in SWEEPABLE {
            let report = sweep(t, 4);
            assert!(report.instances > 0, "{t}");
            assert_eq!(report.failures, vec![], "{t}");
        }
    }

    #[test]
    fn sizes_match_signatures() {
        for t in SWEEPABLE {
            for p in grid(t, 5) {
                let cert = run(t, &p).unwrap();
                assert_eq!(Some(cert.signature.size()), size(t, &p), "{t} {p:?}");
            }
        }
    }
}
