//! Explicit labelings of spiders, one generator per family, plus a store of
//! literal labelings for `Sp(2^[n], 3^[m])` and a dispatcher.
//!
//! Every generator builds its legs pendant-first, hands them to [`certify`],
//! and only returns labelings the verifier accepted with the claimed count.

mod appendix;
mod dispatch;
mod even;
mod fundamental;
mod mixed;
mod odd;
pub mod sweep;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::certificate::{LabelingCertificate, TheoremId};
use crate::spider::{EdgeLabeling, SpiderSignature};
use crate::verify::Violation;

pub use appendix::{appendix_labeling, appendix_pairs, APPENDIX_PAIRS};
pub use dispatch::{dispatch, DispatchOutcome, NearMiss, NoKnownConstruction};
pub use even::{construct_three_even, construct_two_el};
pub use fundamental::{construct_all_even, construct_leg1, fundamental_labeling};
pub use mixed::{construct_eol, construct_eolsmall, construct_mixed_parity, construct_oel};
pub use odd::{
    construct_13, construct_9_11, construct_consecutive_odd, construct_equal_odd, construct_leg3,
    construct_leg5, construct_leg7, construct_odd_3k, construct_odd_m11, construct_odd_nm1,
    construct_odd_shifted,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{theorem}: parameters outside the domain: {reason}")]
    Domain { theorem: TheoremId, reason: String },
    #[error("{theorem}: labeling of {signature} failed verification: {violation:?}")]
    Unverified {
        theorem: TheoremId,
        signature: String,
        violation: Violation,
    },
    #[error("no tabulated labeling for (n, m) = ({n}, {m})")]
    NotTabulated { n: usize, m: usize },
}

impl ConstructionError {
    pub fn theorem(&self) -> TheoremId {
        match self {
            ConstructionError::Domain { theorem, .. }
            | ConstructionError::Unverified { theorem, .. } => *theorem,
            ConstructionError::NotTabulated { .. } => TheoremId::Appendix,
        }
    }
}

pub type ConstructionResult = Result<LabelingCertificate, ConstructionError>;

pub(crate) fn domain(theorem: TheoremId, reason: impl Into<String>) -> ConstructionError {
    ConstructionError::Domain {
        theorem,
        reason: reason.into(),
    }
}

pub(crate) fn ensure(theorem: TheoremId, ok: bool, reason: &str) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(domain(theorem, reason))
    }
}

pub(crate) type Params = BTreeMap<String, i64>;

pub(crate) fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Converts signed intermediate values to labels; anything below 1 becomes 0
/// and is rejected by the verifier.
pub(crate) fn leg(values: impl IntoIterator<Item = i64>) -> Vec<u32> {
    values
        .into_iter()
        .map(|x| u32::try_from(x.max(0)).unwrap_or(0))
        .collect()
}

pub(crate) fn concat(parts: &[&[u32]]) -> Vec<u32> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// Reorders `legs` so their lengths read `target` (equal lengths keep their
/// relative order).
pub(crate) fn arrange(mut legs: Vec<Vec<u32>>, target: &[usize]) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity(legs.len());
    for &len in target {
        match legs.iter().position(|l| l.len() == len) {
            Some(i) => out.push(legs.remove(i)),
            None => out.push(Vec::new()),
        }
    }
    out.extend(legs);
    out
}

/// Verifies the labeling and wraps it as a certificate claiming `count`
/// colors (and the exact set when given).
pub(crate) fn certify(
    theorem: TheoremId,
    legs: Vec<Vec<u32>>,
    params: Params,
    count: usize,
    colors: Option<BTreeSet<u64>>,
) -> ConstructionResult {
    let lengths: Vec<usize> = legs.iter().map(Vec::len).collect();
    let signature = SpiderSignature::new(lengths.clone())
        .map_err(|e| domain(theorem, format!("bad leg shape {lengths:?}: {e}")))?;
    let cert = LabelingCertificate {
        signature,
        labeling: EdgeLabeling::from_legs(legs),
        theorem_id: theorem,
        params,
        claimed_color_count: count,
        claimed_colors: colors,
    };
    match cert.verify().violation {
        None => Ok(cert),
        Some(violation) => Err(ConstructionError::Unverified {
            theorem,
            signature: cert.signature.to_string(),
            violation,
        }),
    }
}

/// Relabels a certificate from another generator as coming from `theorem`,
/// keeping the inner generator's parameters under a prefix.
pub(crate) fn rebrand(
    inner: LabelingCertificate,
    theorem: TheoremId,
    outer: Params,
    target: &[usize],
) -> ConstructionResult {
    let mut p = outer;
    p.insert(format!("via_{}", inner.theorem_id.as_str()), 1);
    for (k, v) in &inner.params {
        p.entry(format!("inner_{k}")).or_insert(*v);
    }
    let legs = arrange(inner.labeling.into_legs(), target);
    certify(theorem, legs, p, inner.claimed_color_count, None)
}
