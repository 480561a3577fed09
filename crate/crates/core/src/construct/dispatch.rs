//! Maps a signature to the first construction that labels it.
//!
//! Priority: literal store, leg of length 1, all-even family (any leg order,
//! any `k`, with or without a single odd last leg), three odd legs, three even
//! legs, `Sp(2, 2+2m, 2+2m+k)`, and finally mixed parity.

use std::fmt;

use thiserror::Error;

use crate::certificate::{LabelingCertificate, TheoremId};
use crate::spider::SpiderSignature;

use super::{
    appendix_labeling, construct_13, construct_9_11, construct_all_even, construct_consecutive_odd,
    construct_equal_odd, construct_leg1, construct_leg3, construct_leg5, construct_leg7,
    construct_mixed_parity, construct_odd_3k, construct_odd_m11, construct_odd_nm1,
    construct_odd_shifted, construct_three_even, construct_two_el, ConstructionError,
    ConstructionResult,
};

/// Leg orders tried by the all-even search before giving up.
const MAX_ORDERS: usize = 200_000;

/// A construction whose shape fit the signature but whose conditions did not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearMiss {
    pub theorem: TheoremId,
    pub reason: String,
}

impl fmt::Display for NearMiss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.theorem, self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no known construction for {signature}")]
pub struct NoKnownConstruction {
    pub signature: SpiderSignature,
    pub near_misses: Vec<NearMiss>,
}

pub type DispatchOutcome = Result<LabelingCertificate, NoKnownConstruction>;

struct Attempts {
    misses: Vec<NearMiss>,
}

impl Attempts {
    fn take(&mut self, r: ConstructionResult) -> Option<LabelingCertificate> {
        match r {
            Ok(c) => Some(c),
            Err(e) => {
                let theorem = e.theorem();
                let reason = match e {
                    ConstructionError::Domain { reason, .. } => reason,
                    other => other.to_string(),
                };
                if !self.misses.iter().any(|m| m.theorem == theorem) {
                    self.misses.push(NearMiss { theorem, reason });
                }
                None
            }
        }
    }
}

/// First verified labeling for `sig`, with legs in the input order. When the
/// constructor used a different order, `order_i` gives (1-based) which of its
/// legs became input leg `i`.
pub fn dispatch(sig: &SpiderSignature) -> DispatchOutcome {
    let canon = sig.canonical();
    let mut at = Attempts { misses: Vec::new() };
    let found = find(&canon, &mut at);
    match found {
        Some(cert) => Ok(to_input_order(cert, sig.legs())),
        None => Err(NoKnownConstruction {
            signature: sig.clone(),
            near_misses: at.misses,
        }),
    }
}

fn find(canon: &SpiderSignature, at: &mut Attempts) -> Option<LabelingCertificate> {
    let legs = canon.legs();
    let d = legs.len();
    if let Some((n, m)) = canon.two_three_counts() {
        if n + m >= 3 {
            if let Some(c) = at.take(appendix_labeling(n, m)) {
                return Some(c);
            }
        }
    }
    if d >= 3 && legs[0] == 1 {
        return at.take(construct_leg1(canon));
    }
    if let Some(c) = all_even_family(legs, at) {
        return Some(c);
    }
    if d != 3 || legs[0] < 2 {
        return None;
    }
    let odd = legs.iter().filter(|&&y| y % 2 == 1).count();
    match odd {
        3 => three_odd(legs, at),
        0 => {
            let (a, b, c) = (legs[0] / 2, legs[1] / 2, legs[2] / 2);
            at.take(construct_three_even(a, b, c))
        }
        _ => two_el(legs, at).or_else(|| mixed(legs, at)),
    }
}

fn all_even_family(legs: &[usize], at: &mut Attempts) -> Option<LabelingCertificate> {
    let odd: Vec<usize> = legs.iter().copied().filter(|y| y % 2 == 1).collect();
    if odd.len() > 1 || legs.iter().any(|&y| y < 2) {
        return None;
    }
    let mut rest: Vec<usize> = legs.to_vec();
    if let Some(&o) = odd.first() {
        let i = rest.iter().position(|&y| y == o).expect("odd leg present");
        rest.remove(i);
    }
    let bump = !odd.is_empty();
    let d = legs.len();
    let mut order = rest.clone();
    order.sort_unstable();
    let tails: Vec<usize> = if bump { vec![odd[0]] } else { order.clone() };
    let mut tried = 0;
    // with an odd leg it must come last; otherwise every leg takes a turn
    for &last in dedup(&tails).iter() {
        let mut head = if bump {
            order.clone()
        } else {
            without(&order, last)
        };
        let y_last = if bump { last - 1 } else { last };
        loop {
            tried += 1;
            let mut y: Vec<usize> = head.clone();
            y.push(y_last);
            let lhs: usize = (0..d - 1).map(|i| (d - 1 - i) * y[i]).sum();
            let mut suffix: usize = y.iter().sum();
            for (k, &yk) in y.iter().enumerate() {
                if lhs == suffix && (!bump || k >= 1) {
                    let mut full = head.clone();
                    full.push(last);
                    let sig = SpiderSignature::new(full).expect("permutation of a valid signature");
                    return at.take(construct_all_even(&sig, k, bump));
                }
                suffix -= yk;
            }
            if tried >= MAX_ORDERS || !next_permutation(&mut head) {
                break;
            }
        }
    }
    at.misses.push(NearMiss {
        theorem: TheoremId::AllEven,
        reason: "no leg order satisfies the core identity".into(),
    });
    None
}

fn dedup(v: &[usize]) -> Vec<usize> {
    let mut out = v.to_vec();
    out.dedup();
    out
}

fn without(v: &[usize], x: usize) -> Vec<usize> {
    let mut out = v.to_vec();
    let i = out.iter().position(|&y| y == x).expect("element present");
    out.remove(i);
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Distinct orderings of three legs.
fn orders(legs: &[usize]) -> Vec<[usize; 3]> {
    let mut v = [legs[0], legs[1], legs[2]];
    v.sort_unstable();
    let mut out = vec![v];
    while next_permutation(&mut v) {
        out.push(v);
    }
    out
}

fn half(y: usize) -> usize {
    (y - 1) / 2
}

fn three_odd(legs: &[usize], at: &mut Attempts) -> Option<LabelingCertificate> {
    let os = orders(legs);
    type Try = fn(usize, usize, usize) -> Option<ConstructionResult>;
    let families: [Try; 11] = [
        |x, y, z| {
            let (n, m) = (half(x), half(y));
            let k3 = z.checked_sub(n + m + 1)?;
            (n >= 1 && k3 % 3 == 0 && k3 > 0).then(|| construct_odd_3k(n, m, k3 / 3))
        },
        |x, y, z| {
            (half(x) >= 1 && z == half(x) + half(y) + 1)
                .then(|| construct_odd_nm1(half(x), half(y)))
        },
        |x, y, z| (y == z).then(|| construct_equal_odd(half(x), half(y))),
        |x, y, z| {
            (y > x && z + 1 == 4 * (half(y) - half(x)))
                .then(|| construct_odd_shifted(half(x), half(y)))
        },
        |x, y, z| (y == x + 2 && z + 3 == 4 * half(x)).then(|| construct_consecutive_odd(half(x))),
        |x, y, z| (y == x + 10 && z == 4 * half(x) + 5).then(|| construct_odd_m11(half(x))),
        |x, y, z| (x == 3 && z >= y).then(|| construct_leg3((z - y) / 2, half(y))),
        |x, y, z| (x == 5).then(|| construct_leg5(half(y), half(z))),
        |x, y, z| (x == 7).then(|| construct_leg7(half(y), half(z))),
        |x, y, z| (x == 9 && y == 11).then(|| construct_9_11(half(z))),
        |x, y, z| (x == 13).then(|| construct_13(half(y), half(z))),
    ];
    for f in families {
        for &[x, y, z] in &os {
            if let Some(c) = f(x, y, z).and_then(|r| at.take(r)) {
                return Some(c);
            }
        }
    }
    None
}

fn two_el(legs: &[usize], at: &mut Attempts) -> Option<LabelingCertificate> {
    for [x, y, z] in orders(legs) {
        if x == 2 && y % 2 == 0 && z >= y + 2 {
            if let Some(c) = at.take(construct_two_el(y / 2 - 1, z - y)) {
                return Some(c);
            }
        }
    }
    None
}

fn mixed(legs: &[usize], at: &mut Attempts) -> Option<LabelingCertificate> {
    for [a, b, c] in orders(legs) {
        if a % 2 == 0 && b % 2 == 1 && b >= 3 {
            return at.take(construct_mixed_parity(a, b, c));
        }
    }
    None
}

/// Permutes `cert` so its legs read `input`, recording the permutation.
fn to_input_order(cert: LabelingCertificate, input: &[usize]) -> LabelingCertificate {
    let have = cert.signature.legs().to_vec();
    let mut used = vec![false; have.len()];
    let order: Vec<usize> = input
        .iter()
        .map(|&len| {
            let i = (0..have.len())
                .find(|&i| !used[i] && have[i] == len)
                .expect("same multiset of legs");
            used[i] = true;
            i
        })
        .collect();
    if order.iter().enumerate().all(|(i, &j)| i == j) {
        return cert;
    }
    let mut out = cert.permute_legs(&order);
    for (i, &j) in order.iter().enumerate() {
        out.params.insert(format!("order_{}", i + 1), j as i64 + 1);
    }
    out
}
