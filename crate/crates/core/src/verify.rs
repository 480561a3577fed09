//! Independent check that a labeling is a local antimagic labeling.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::certificate::LabelingCertificate;
use crate::spider::{induced_colors, EdgeId, EdgeLabeling, SpiderGraph, Vertex};

/// First thing found wrong with a labeling or a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Labeling does not fit the spider (leg count or leg lengths differ).
    Shape {
        detail: String,
    },
    LabelOutOfRange {
        edge: EdgeId,
        label: u32,
        q: usize,
    },
    DuplicateLabel {
        label: u32,
        first: EdgeId,
        second: EdgeId,
    },
    AdjacentConflict {
        edge: EdgeId,
        u: Vertex,
        v: Vertex,
        color: u64,
    },
    ClaimedCountMismatch {
        claimed: usize,
        actual: usize,
    },
    ClaimedColorsMismatch {
        claimed: Vec<u64>,
        actual: Vec<u64>,
    },
}

impl Violation {
    pub fn is_claim_mismatch(&self) -> bool {
        matches!(
            self,
            Violation::ClaimedCountMismatch { .. } | Violation::ClaimedColorsMismatch { .. }
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = |id: &EdgeId| format!("leg {} position {}", id.leg, id.position);
        match self {
            Violation::Shape { detail } => write!(f, "labeling does not fit the spider: {detail}"),
            Violation::LabelOutOfRange { edge, label, q } => {
                write!(f, "label {label} on {} is outside 1..={q}", e(edge))
            }
            Violation::DuplicateLabel {
                label,
                first,
                second,
            } => {
                write!(f, "label {label} used on {} and {}", e(first), e(second))
            }
            Violation::AdjacentConflict { edge, u, v, color } => {
                write!(f, "{u} and {v} both have sum {color} across {}", e(edge))
            }
            Violation::ClaimedCountMismatch { claimed, actual } => {
                write!(f, "claimed {claimed} colors, found {actual}")
            }
            Violation::ClaimedColorsMismatch { claimed, actual } => {
                write!(f, "claimed colors {claimed:?}, found {actual:?}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub is_bijection: bool,
    pub is_local_antimagic: bool,
    pub color_count: usize,
    pub colors: BTreeSet<u64>,
    pub violation: Option<Violation>,
}

impl VerificationReport {
    /// Labeling is valid and no claim was contradicted.
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn verify(g: &SpiderGraph, f: &EdgeLabeling) -> VerificationReport {
    let coloring = match induced_colors(g, f) {
        Ok(c) => c,
        Err(e) => {
            return VerificationReport {
                is_bijection: false,
                is_local_antimagic: false,
                color_count: 0,
                colors: BTreeSet::new(),
                violation: Some(Violation::Shape {
                    detail: e.to_string(),
                }),
            }
        }
    };

    let q = g.num_edges();
    let mut owner: Vec<Option<EdgeId>> = vec![None; q + 1];
    let mut violation = None;
    for e in g.edges() {
        let label = f.get(e).unwrap_or_default();
        let idx = label as usize;
        if idx == 0 || idx > q {
            violation = Some(Violation::LabelOutOfRange { edge: e, label, q });
            break;
        }
        if let Some(first) = owner[idx] {
            violation = Some(Violation::DuplicateLabel {
                label,
                first,
                second: e,
            });
            break;
        }
        owner[idx] = Some(e);
    }
    let is_bijection = violation.is_none();

    let mut conflict_free = true;
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        let color = coloring.color(g, u);
        if color == coloring.color(g, v) {
            conflict_free = false;
            if violation.is_none() {
                violation = Some(Violation::AdjacentConflict {
                    edge: e,
                    u,
                    v,
                    color,
                });
            }
            break;
        }
    }

    let colors = coloring.distinct_colors().clone();
    VerificationReport {
        is_bijection,
        is_local_antimagic: is_bijection && conflict_free,
        color_count: colors.len(),
        colors,
        violation,
    }
}

/// Verifies the labeling and then the certificate's claimed count and set.
pub fn verify_certificate(cert: &LabelingCertificate) -> VerificationReport {
    let g = SpiderGraph::new(cert.signature.clone());
    let mut report = verify(&g, &cert.labeling);
    if report.violation.is_some() {
        return report;
    }
    if cert.claimed_color_count != report.color_count {
        report.violation = Some(Violation::ClaimedCountMismatch {
            claimed: cert.claimed_color_count,
            actual: report.color_count,
        });
    } else if let Some(claimed) = &cert.claimed_colors {
        if *claimed != report.colors {
            report.violation = Some(Violation::ClaimedColorsMismatch {
                claimed: claimed.iter().copied().collect(),
                actual: report.colors.iter().copied().collect(),
            });
        }
    }
    report
}
