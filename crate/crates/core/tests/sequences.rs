use proptest::prelude::*;
use spider_la::sequence::*;

fn gap_for(n: usize, pick: usize) -> usize {
    let gaps: Vec<usize> = valid_gaps(n).unwrap().into_iter().collect();
    gaps[pick % gaps.len()]
}

proptest! {
    #[test]
    fn offset_sums_and_gap(n in 2usize..400, pick in 0usize..1000, a in 1u32..1000) {
        let r = gap_for(n, pick);
        let p = offset_sequence(n, r, a).unwrap();
        let mut sorted = p.terms.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (a + 1..=a + n as u32).collect::<Vec<_>>());
        let lo = 2 * a + n as u32;
        prop_assert!(p.terms.windows(2).all(|w| (lo..=lo + 2).contains(&(w[0] + w[1]))));
        prop_assert_eq!(p.last().abs_diff(p.first()) as usize, r);
    }

    #[test]
    fn orientation_keeps_sums(n in 2usize..200, pick in 0usize..1000) {
        let p = circular_permutation(n, gap_for(n, pick)).unwrap();
        let up = p.clone().ascending_ends();
        let down = p.descending_ends();
        prop_assert!(up.last() > up.first());
        prop_assert!(down.last() < down.first());
        let mut rev = down.terms.clone();
        rev.reverse();
        prop_assert_eq!(rev, up.terms);
    }

    #[test]
    fn path_labels(n in 2usize..500, a in 2u32..500) {
        let p = label_path_4a(n, a).unwrap();
        let mut sorted = p.labels.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (a..a + n as u32).collect::<Vec<_>>());
        let top = 2 * a as u64 + n as u64 - 1;
        prop_assert!(p.interior_colors.iter().all(|&c| c + 2 >= top && c <= top));
        prop_assert_eq!(p.interior_colors[n - 2], top);
        prop_assert_eq!(p.endpoint_colors, (a as u64 + n as u64 - 2, a as u64 + n as u64 - 1));
    }

    #[test]
    fn invalid_gaps_are_rejected(n in 2usize..100, r in 0usize..120) {
        let ok = valid_gaps(n).unwrap().contains(&r);
        prop_assert_eq!(circular_permutation(n, r).is_ok(), ok);
    }
}
