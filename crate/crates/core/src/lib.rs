//! Local antimagic labelings of spider graphs.
//!
//! A local antimagic labeling of a graph with `q` edges is a bijection from
//! the edges onto `1..=q` such that adjacent vertices get different sums of
//! incident labels. This crate models spiders, verifies labelings, builds
//! explicit labelings for many spider families, bounds the minimum number of
//! distinct vertex sums, and computes that minimum exactly for small spiders.

pub mod bounds;
pub mod certificate;
pub mod construct;
pub mod dot;
pub mod sequence;
pub mod solver;
pub mod spider;
pub mod verify;

pub use certificate::{CertificateDocument, LabelingCertificate, TheoremId};
pub use spider::{
    build_spider, induced_colors, EdgeId, EdgeLabeling, SpiderGraph, SpiderSignature, Vertex,
};
pub use verify::{verify, verify_certificate, VerificationReport, Violation};
