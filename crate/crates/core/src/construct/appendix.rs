//! Literal labelings of `Sp(2^[n], 3^[m])` with `n+m+1` colors, shipped as
//! certificate documents in `data/appendix.json`.

use std::sync::OnceLock;

use crate::certificate::{CertificateDocument, LabelingCertificate, TheoremId};

use super::{certify, ConstructionError, ConstructionResult};

/// Tabulated `(n, m)` pairs, sorted.
pub const APPENDIX_PAIRS: [(usize, usize); 29] = [
    (0, 3),
    (0, 4),
    (0, 5),
    (0, 6),
    (0, 7),
    (0, 8),
    (0, 9),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (1, 7),
    (2, 1),
    (2, 2),
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (3, 1),
    (3, 2),
    (3, 3),
    (3, 4),
    (4, 1),
    (4, 2),
    (4, 3),
    (5, 1),
    (5, 2),
    (6, 1),
];

const DATA: &str = include_str!("../../data/appendix.json");

fn store() -> &'static [((usize, usize), LabelingCertificate)] {
    static STORE: OnceLock<Vec<((usize, usize), LabelingCertificate)>> = OnceLock::new();
    STORE.get_or_init(|| {
        let docs: Vec<CertificateDocument> =
            serde_json::from_str(DATA).expect("appendix data parses");
        docs.iter()
            .map(|d| {
                let cert = d.to_certificate().expect("appendix entry is well formed");
                let key =
                    |k: &str| *cert.params.get(k).expect("appendix entry has n and m") as usize;
                ((key("n"), key("m")), cert)
            })
            .collect()
    })
}

pub fn appendix_pairs() -> &'static [(usize, usize)] {
    &APPENDIX_PAIRS
}

/// The stored labeling for `(n, m)`, with its two-edge legs first. The claimed
/// colors are the printed set.
pub fn appendix_labeling(n: usize, m: usize) -> ConstructionResult {
    let (_, cert) = store()
        .iter()
        .find(|(key, _)| *key == (n, m))
        .ok_or(ConstructionError::NotTabulated { n, m })?;
    certify(
        TheoremId::Appendix,
        cert.labeling.clone().into_legs(),
        cert.params.clone(),
        cert.claimed_color_count,
        cert.claimed_colors.clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn store_matches_pair_list() {
        let keys: Vec<_> = store().iter().map(|(k, _)| *k).collect();
        assert_eq!(keys, APPENDIX_PAIRS);
    }

    #[test]
    fn every_entry_verifies_with_n_plus_m_plus_one_colors() {
        for &(n, m) in appendix_pairs() {
            let c = appendix_labeling(n, m).unwrap();
            let mut legs = vec![2; n];
            legs.extend(vec![3; m]);
            assert_eq!(c.signature.legs(), legs.as_slice());
            assert_eq!(c.verify().color_count, n + m + 1);
        }
    }

    #[test]
    fn printed_sets() {
        let colors = |n, m| appendix_labeling(n, m).unwrap().verify().colors;
        assert_eq!(colors(0, 3), BTreeSet::from([14, 9, 8, 6]));
        assert_eq!(colors(0, 4), BTreeSet::from([17, 12, 11, 10, 9]));
        assert_eq!(colors(2, 2), BTreeSet::from([17, 10, 9, 6, 5]));
        assert_eq!(colors(6, 1), BTreeSet::from([29, 15, 13, 12, 11, 10, 9, 7]));
        assert_eq!(colors(4, 3), BTreeSet::from([29, 17, 16, 15, 11, 10, 9, 7]));
    }

    #[test]
    fn untabulated_pair() {
        assert_eq!(
            appendix_labeling(0, 10),
            Err(ConstructionError::NotTabulated { n: 0, m: 10 })
        );
    }
}
