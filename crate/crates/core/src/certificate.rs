//! Certificates: a labeling plus where it came from and what it claims, and
//! their JSON document form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::spider::{EdgeLabeling, SpiderError, SpiderSignature};
use crate::verify::{verify_certificate, VerificationReport};

pub const SCHEMA_VERSION: &str = "1";

/// Which construction produced a labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Leg1,
    AllEven,
    TwoEl,
    Eol,
    Oel,
    EolSmall,
    ThreeEven,
    Odd3k,
    OddNm1,
    EqualOdd,
    OddShifted,
    ConsecutiveOdd,
    OddM11,
    Leg3,
    Leg5,
    Leg7,
    Leg9And11,
    Leg13,
    Appendix,
    Solver,
}

impl TheoremId {
    pub const ALL: [TheoremId; 20] = [
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
        TheoremId::Solver,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Leg1 => "leg1",
            TheoremId::AllEven => "all_even",
            TheoremId::TwoEl => "2el",
            TheoremId::Eol => "eol",
            TheoremId::Oel => "oel",
            TheoremId::EolSmall => "eolsmall",
            TheoremId::ThreeEven => "three_even",
            TheoremId::Odd3k => "odd_3k",
            TheoremId::OddNm1 => "odd_nm1",
            TheoremId::EqualOdd => "equal_odd",
            TheoremId::OddShifted => "odd_shifted",
            TheoremId::ConsecutiveOdd => "consecutive_odd",
            TheoremId::OddM11 => "odd_m11",
            TheoremId::Leg3 => "leg3",
            TheoremId::Leg5 => "leg5",
            TheoremId::Leg7 => "leg7",
            TheoremId::Leg9And11 => "9_11",
            TheoremId::Leg13 => "13",
            TheoremId::Appendix => "appendix",
            TheoremId::Solver => "solver",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown construction id {s:?}"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingCertificate {
    pub signature: SpiderSignature,
    pub labeling: EdgeLabeling,
    pub theorem_id: TheoremId,
    pub params: BTreeMap<String, i64>,
    pub claimed_color_count: usize,
    pub claimed_colors: Option<BTreeSet<u64>>,
}

impl LabelingCertificate {
    pub fn verify(&self) -> VerificationReport {
        verify_certificate(self)
    }

    /// Relabels legs so that leg `i` of the result is leg `order[i]` (0-based)
    /// of `self`.
    pub fn permute_legs(&self, order: &[usize]) -> LabelingCertificate {
        let legs = order.iter().map(|&i| self.signature.legs()[i]).collect();
        let labels = order
            .iter()
            .map(|&i| self.labeling.legs()[i].clone())
            .collect();
        LabelingCertificate {
            signature: SpiderSignature::new(legs).expect("permutation of a valid signature"),
            labeling: EdgeLabeling::from_legs(labels),
            ..self.clone()
        }
    }

    pub fn to_document(&self) -> CertificateDocument {
        let report = self.verify();
        let labeling = self
            .labeling
            .legs()
            .iter()
            .enumerate()
            .flat_map(|(i, leg)| {
                leg.iter().enumerate().map(move |(j, &label)| LabelEntry {
                    leg: i + 1,
                    position: j + 1,
                    label,
                })
            })
            .collect();
        CertificateDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            signature: self.signature.legs().to_vec(),
            labeling,
            theorem_id: self.theorem_id.as_str().to_string(),
            params: self.params.clone(),
            claimed_color_count: self.claimed_color_count,
            claimed_colors: self
                .claimed_colors
                .as_ref()
                .map(|c| c.iter().copied().collect()),
            verification: VerificationSummary::from(&report),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("certificate serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelEntry {
    pub leg: usize,
    pub position: usize,
    pub label: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub is_bijection: bool,
    pub is_local_antimagic: bool,
    pub color_count: usize,
    pub colors: Vec<u64>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<crate::verify::Violation>,
}

impl From<&VerificationReport> for VerificationSummary {
    fn from(r: &VerificationReport) -> Self {
        VerificationSummary {
            is_bijection: r.is_bijection,
            is_local_antimagic: r.is_local_antimagic,
            color_count: r.color_count,
            colors: r.colors.iter().copied().collect(),
            passed: r.passed(),
            violation: r.violation.clone(),
        }
    }
}

/// Serialized certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema_version: String,
    pub signature: Vec<usize>,
    pub labeling: Vec<LabelEntry>,
    pub theorem_id: String,
    pub params: BTreeMap<String, i64>,
    pub claimed_color_count: usize,
    #[serde(default)]
    pub claimed_colors: Option<Vec<u64>>,
    pub verification: VerificationSummary,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0:?}")]
    SchemaVersion(String),
    #[error(transparent)]
    Signature(#[from] SpiderError),
    #[error("{0}")]
    Theorem(String),
    #[error("label entry ({leg},{position}) is outside the spider")]
    EntryOutOfRange { leg: usize, position: usize },
    #[error("edge ({leg},{position}) is labeled twice")]
    RepeatedEntry { leg: usize, position: usize },
    #[error("claimed colors are not sorted and distinct")]
    UnsortedClaim,
}

impl CertificateDocument {
    /// Rebuilds the certificate. Unlabeled edges are left as label 0 so that
    /// verification reports them.
    pub fn to_certificate(&self) -> Result<LabelingCertificate, DocumentError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::SchemaVersion(self.schema_version.clone()));
        }
        let signature = SpiderSignature::new(self.signature.clone())?;
        let theorem_id = self.theorem_id.parse().map_err(DocumentError::Theorem)?;
        let mut legs: Vec<Vec<u32>> = signature.legs().iter().map(|&y| vec![0; y]).collect();
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for e in &self.labeling {
            let slot = e
                .leg
                .checked_sub(1)
                .and_then(|i| legs.get_mut(i))
                .and_then(|leg| leg.get_mut(e.position.checked_sub(1)?))
                .ok_or(DocumentError::EntryOutOfRange {
                    leg: e.leg,
                    position: e.position,
                })?;
            if !seen.insert((e.leg, e.position)) {
                return Err(DocumentError::RepeatedEntry {
                    leg: e.leg,
                    position: e.position,
                });
            }
            *slot = e.label;
        }
        let claimed_colors = match &self.claimed_colors {
            Some(c) => {
                if !c.windows(2).all(|w| w[0] < w[1]) {
                    return Err(DocumentError::UnsortedClaim);
                }
                Some(c.iter().copied().collect())
            }
            None => None,
        };
        Ok(LabelingCertificate {
            signature,
            labeling: EdgeLabeling::from_legs(legs),
            theorem_id,
            params: self.params.clone(),
            claimed_color_count: self.claimed_color_count,
            claimed_colors,
        })
    }

    pub fn from_json(text: &str) -> Result<CertificateDocument, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Outcome of loading a certificate file and re-verifying it.
#[derive(Debug, Clone)]
pub struct LoadedCertificate {
    pub certificate: LabelingCertificate,
    pub report: VerificationReport,
    /// The embedded verification block agrees with the recomputed one.
    pub embedded_matches: bool,
}

pub fn load_certificate(text: &str) -> Result<LoadedCertificate, DocumentError> {
    let doc = CertificateDocument::from_json(text)?;
    let certificate = doc.to_certificate()?;
    let report = certificate.verify();
    let embedded_matches = VerificationSummary::from(&report) == doc.verification;
    Ok(LoadedCertificate {
        certificate,
        report,
        embedded_matches,
    })
}
