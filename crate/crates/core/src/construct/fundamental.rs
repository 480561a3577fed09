use crate::certificate::TheoremId;
use crate::spider::SpiderSignature;

use super::{certify, ensure, params, ConstructionResult};

/// Alternating high/low labeling: the legs of length at least 2 are laid end
/// to end in input order (each pendant-first) as edges `e_1 .. e_Q`, with
/// `f(e_j) = j/2` for even `j` and `Q - (j-1)/2` for odd `j`. Legs of length 1
/// then take `Q+1 .. q` in input order.
pub fn fundamental_labeling(legs: &[usize]) -> Vec<Vec<u32>> {
    let long: usize = legs.iter().filter(|&&y| y >= 2).sum();
    let mut j = 0;
    let mut next_short = long;
    legs.iter()
        .map(|&y| {
            if y == 1 {
                next_short += 1;
                return vec![next_short as u32];
            }
            (0..y)
                .map(|_| {
                    j += 1;
                    let label = if j % 2 == 0 {
                        j / 2
                    } else {
                        long - (j - 1) / 2
                    };
                    label as u32
                })
                .collect()
        })
        .collect()
}

/// `d+1` colors for any spider with a leg of length 1 and at least 3 legs.
pub fn construct_leg1(sig: &SpiderSignature) -> ConstructionResult {
    let t = TheoremId::Leg1;
    let legs = sig.legs();
    ensure(t, legs.len() >= 3, "needs at least 3 legs")?;
    let short = legs.iter().filter(|&&y| y == 1).count();
    ensure(t, short >= 1, "needs a leg of length 1")?;
    let p = params(&[
        ("d", legs.len() as i64),
        ("t", short as i64),
        ("r", (legs.len() - short) as i64),
    ]);
    certify(t, fundamental_labeling(legs), p, legs.len() + 1, None)
}

/// `d+1` colors for even legs `y_1 .. y_d` with
/// `sum_{i<d} (d-i) y_i = sum_{i>k} y_i`; with `bump` the last leg is one
/// longer than the value that identity forces, which needs `k >= 1`.
pub fn construct_all_even(sig: &SpiderSignature, k: usize, bump: bool) -> ConstructionResult {
    let t = TheoremId::AllEven;
    let legs = sig.legs();
    let d = legs.len();
    ensure(t, k < d, "k must be below the number of legs")?;
    ensure(t, !bump || k >= 1, "the odd last leg needs k >= 1")?;
    let mut y: Vec<i64> = legs.iter().map(|&v| v as i64).collect();
    if bump {
        y[d - 1] -= 1;
    }
    ensure(
        t,
        y.iter().all(|&v| v >= 2 && v % 2 == 0),
        "legs must be even and at least 2",
    )?;
    let lhs: i64 = (0..d - 1).map(|i| (d - 1 - i) as i64 * y[i]).sum();
    let rhs: i64 = y[k..].iter().sum();
    ensure(
        t,
        lhs == rhs,
        "leg lengths do not satisfy the core identity",
    )?;
    let p = params(&[("d", d as i64), ("k", k as i64), ("bump", bump as i64)]);
    certify(t, fundamental_labeling(legs), p, d + 1, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn sig(legs: &[usize]) -> SpiderSignature {
        SpiderSignature::new(legs.to_vec()).unwrap()
    }

    #[test]
    fn worked_leg1_example() {
        let c = construct_leg1(&sig(&[4, 2, 3, 5, 1])).unwrap();
        assert_eq!(
            c.labeling.legs(),
            &[
                vec![14, 1, 13, 2],
                vec![12, 3],
                vec![11, 4, 10],
                vec![5, 9, 6, 8, 7],
                vec![15]
            ]
        );
        let report = c.verify();
        let core = 2 + 3 + 10 + 7 + 15;
        assert_eq!(report.colors, BTreeSet::from([15, 14, 12, 11, 5, core]));
    }

    #[test]
    fn star_and_small() {
        let c = construct_leg1(&sig(&[1, 1, 1])).unwrap();
        assert_eq!(c.labeling.legs(), &[vec![1], vec![2], vec![3]]);
        assert_eq!(c.verify().colors, BTreeSet::from([1, 2, 3, 6]));
        assert_eq!(
            construct_leg1(&sig(&[2, 2, 1]))
                .unwrap()
                .claimed_color_count,
            4
        );
        assert!(construct_leg1(&sig(&[2, 2, 2])).is_err());
    }

    #[test]
    fn all_even_examples() {
        let c = construct_all_even(&sig(&[2, 4, 6, 4, 20]), 0, false).unwrap();
        assert_eq!(c.labeling.legs()[0], vec![36, 1]);
        assert_eq!(c.labeling.legs()[2], vec![33, 4, 32, 5, 31, 6]);
        assert_eq!(c.verify().colors, BTreeSet::from([37, 36, 35, 33, 30, 28]));

        let c = construct_all_even(&sig(&[4, 2, 4, 2, 24]), 1, false).unwrap();
        assert_eq!(c.verify().colors, BTreeSet::from([37, 36, 34, 33, 31, 30]));

        let c = construct_all_even(&sig(&[4, 2, 4, 2, 25]), 1, true).unwrap();
        assert_eq!(c.labeling.legs()[4].last(), Some(&19));
        assert_eq!(c.verify().colors, BTreeSet::from([38, 37, 35, 34, 32, 31]));

        let c = construct_all_even(&sig(&[4, 6, 8]), 1, false).unwrap();
        assert_eq!(c.verify().colors, BTreeSet::from([19, 18, 16, 13]));

        assert!(construct_all_even(&sig(&[6, 4, 13]), 1, true).is_ok());
        assert!(construct_all_even(&sig(&[4, 6, 9]), 0, false).is_err());
    }
}
