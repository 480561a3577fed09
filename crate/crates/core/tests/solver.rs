use spider_la::bounds::bounds;
use spider_la::solver::*;
use spider_la::{verify, SpiderGraph, SpiderSignature};

fn graph(s: &str) -> SpiderGraph {
    SpiderGraph::new(s.parse().unwrap())
}

const UNLIMITED: SearchConfig = SearchConfig {
    node_budget: None,
    jobs: 0,
};

#[test]
fn witnesses_verify_with_the_reported_count() {
    for s in ["1,1,1", "2,3,4", "2,2,2,2", "1,2,3,4", "3,3,3,2"] {
        let g = graph(s);
        let out = chi_la_exact(&g, UNLIMITED);
        assert_eq!(out.status, SolveStatus::Exact);
        let w = out.witness.expect("exact outcome carries a witness");
        let r = verify(&g, &w);
        assert!(r.passed());
        assert_eq!(Some(r.color_count), out.chi_la, "{s}");
        assert_eq!(out.proved_lower, out.chi_la.unwrap());
    }
}

#[test]
fn decisions_are_monotone() {
    let g = graph("2,2,2,2");
    for c in 1..=5 {
        assert_eq!(
            exists_labeling_with_at_most(&g, c, UNLIMITED).0,
            Decision::No,
            "c = {c}"
        );
    }
    assert!(matches!(
        exists_labeling_with_at_most(&g, 6, UNLIMITED).0,
        Decision::Yes(_)
    ));
    assert!(matches!(
        exists_labeling_with_at_most(&g, 7, UNLIMITED).0,
        Decision::Yes(_)
    ));
}

#[test]
fn sequential_and_parallel_agree() {
    for s in conjecture_signatures(10) {
        let g = SpiderGraph::new(s.clone());
        let one = chi_la_exact(
            &g,
            SearchConfig {
                node_budget: None,
                jobs: 1,
            },
        );
        let many = chi_la_exact(
            &g,
            SearchConfig {
                node_budget: None,
                jobs: 4,
            },
        );
        assert_eq!(one.chi_la, many.chi_la, "{s}");
    }
}

#[test]
fn solver_matches_exact_bounds() {
    for s in conjecture_signatures(11) {
        let b = bounds(&s).unwrap();
        let out = chi_la_exact(&SpiderGraph::new(s.clone()), UNLIMITED);
        let x = out.chi_la.unwrap();
        assert!(b.lower <= x && x <= b.upper, "{s}: {x} outside {b:?}");
        if let Some(e) = b.exact {
            assert_eq!(e, x, "{s}");
        }
    }
}

#[test]
fn small_budget_reports_unknown() {
    let out = chi_la_exact(
        &graph("2,2,2,2,2"),
        SearchConfig {
            node_budget: Some(10),
            jobs: 1,
        },
    );
    assert_eq!(out.status, SolveStatus::Unknown);
    assert_eq!(out.chi_la, None);
    assert!(out.proved_lower >= 6);
}

#[test]
fn scan_entries_follow_the_domain() {
    let report = conjecture_scan(9, UNLIMITED);
    assert_eq!(report.max_q, 9);
    for e in &report.entries {
        let (d, q) = (e.signature.num_legs(), e.signature.size());
        assert!(q <= 9 && d >= 3 && d * (d + 1) <= 2 * (2 * q - 1));
        assert!(e.signature.legs().iter().all(|&y| y >= 2));
        assert_eq!(e.listed_exception, is_listed_exception(&e.signature));
    }
    let sp24: SpiderSignature = "2,2,2,2".parse().unwrap();
    let e = report.entries.iter().find(|e| e.signature == sp24).unwrap();
    assert_eq!(
        (e.chi_la, e.listed_exception, e.counterexample),
        (Some(6), true, false)
    );
}
