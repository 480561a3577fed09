use spider_la::bounds::bounds;
use spider_la::certificate::load_certificate;
use spider_la::construct::*;
use spider_la::{SpiderSignature, TheoremId};

fn sig(legs: &[usize]) -> SpiderSignature {
    SpiderSignature::new(legs.to_vec()).unwrap()
}

#[test]
fn every_three_leg_spider_up_to_twelve() {
    let mut missing = Vec::new();
    for a in 1..=12 {
        for b in 1..=12 {
            for c in 1..=12 {
                let s = sig(&[a, b, c]);
                match dispatch(&s) {
                    Ok(cert) => {
                        assert_eq!(cert.signature, s);
                        let report = cert.verify();
                        assert!(report.passed(), "{s}: {:?}", report.violation);
                        assert_eq!(report.color_count, 4, "{s}");
                    }
                    Err(e) => {
                        assert_eq!(e.signature, s);
                        missing.push(s.canonical());
                    }
                }
            }
        }
    }
    // only all-odd spiders with no matching family are left
    assert!(
        missing.iter().all(|s| s.legs().iter().all(|y| y % 2 == 1)),
        "{missing:?}"
    );
}

#[test]
fn four_and_five_legs() {
    for legs in [
        &[1, 5, 2, 7][..],
        &[2, 4, 6, 8],
        &[2, 2, 2, 3],
        &[3, 3, 2, 2, 3],
        &[1, 1, 1, 1, 1],
        &[4, 2, 4, 2, 25],
    ] {
        let s = sig(legs);
        let cert = dispatch(&s).unwrap();
        assert_eq!(cert.signature, s);
        assert!(cert.verify().passed());
        assert_eq!(cert.verify().color_count, legs.len() + 1, "{s}");
    }
}

#[test]
fn input_order_is_kept_and_recorded() {
    let cert = dispatch(&sig(&[7, 2, 4])).unwrap();
    assert_eq!(cert.signature.legs(), &[7, 2, 4]);
    assert!(cert.params.contains_key("order_1"));
    let cert = dispatch(&sig(&[2, 3, 2])).unwrap();
    assert!(cert.verify().passed());
}

#[test]
fn certificates_round_trip() {
    for legs in [
        &[2, 3, 2][..],
        &[17, 15, 25],
        &[4, 2, 3, 5, 1],
        &[3, 3, 3, 3, 2, 2],
    ] {
        let cert = dispatch(&sig(legs)).unwrap();
        let loaded = load_certificate(&cert.to_json()).unwrap();
        assert_eq!(loaded.certificate, cert);
        assert!(loaded.embedded_matches);
        assert!(loaded.report.passed());
    }
}

#[test]
fn generators_reject_out_of_domain() {
    assert!(construct_odd_3k(2, 1, 2).is_err());
    assert!(construct_leg1(&sig(&[2, 2, 2])).is_err());
    assert!(matches!(
        appendix_labeling(0, 11),
        Err(ConstructionError::NotTabulated { .. })
    ));
    let e = construct_odd_3k(2, 1, 2).unwrap_err();
    assert_eq!(e.theorem(), TheoremId::Odd3k);
}

#[test]
fn bounds_agree_with_constructions() {
    for legs in [
        &[2, 3, 2][..],
        &[9, 15, 19],
        &[2, 2, 2, 2],
        &[3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3],
    ] {
        let s = sig(legs);
        let b = bounds(&s).unwrap();
        let d = legs.len();
        assert!(
            b.lower > d && b.upper <= d + 2 && b.lower <= b.upper,
            "{s}: {b:?}"
        );
        if dispatch(&s).is_ok() {
            assert_eq!(b.exact, Some(d + 1), "{s}");
        }
    }
    let b = bounds(&sig(&[9, 15, 19])).unwrap();
    assert_eq!((b.lower, b.upper, b.exact), (4, 5, None));
    assert_eq!(bounds(&sig(&[2, 2, 2, 2])).unwrap().exact, Some(6));
}
