use crate::certificate::TheoremId;
use crate::sequence::label_path_4a;
use crate::spider::SpiderSignature;

use super::{
    arrange, certify, concat, construct_all_even, ensure, leg, params, rebrand, ConstructionResult,
};

/// `Sp(2, 2+2m, 2+2m+k)`, `m >= 0`, `k >= 2`, with core color `q`.
pub fn construct_two_el(m: usize, k: usize) -> ConstructionResult {
    let t = TheoremId::TwoEl;
    ensure(t, k >= 2, "k must be at least 2")?;
    let (m, ki) = (m as i64, k as i64);
    let q = 6 + 4 * m + ki;
    let first = leg([q, 1]);
    let second = leg((0..=m).flat_map(|j| [q - 1 - 2 * j, 2 + 2 * j]));
    let head = leg((0..=m).flat_map(|j| [q - 2 - 2 * j, 3 + 2 * j]));
    let tail = label_path_4a(k, (4 + 2 * m) as u32).map_err(|e| super::domain(t, e.to_string()))?;
    let third = concat(&[&head, &tail.labels]);
    let p = params(&[("m", m), ("k", ki), ("q", q), ("a", 4 + 2 * m)]);
    certify(t, vec![first, second, third], p, 4, None)
}

/// `Sp(2n, 2m, 2h)` for `h >= m >= n >= 1`.
pub fn construct_three_even(n: usize, m: usize, h: usize) -> ConstructionResult {
    let t = TheoremId::ThreeEven;
    ensure(t, n >= 1 && m >= n && h >= m, "needs h >= m >= n >= 1")?;
    let target = [2 * n, 2 * m, 2 * h];
    let outer = params(&[("n", n as i64), ("m", m as i64), ("h", h as i64)]);
    if n == m || m == h {
        // Sp(a, b, a) satisfies the core identity with k = 0
        let (a, b) = if n == m {
            (2 * n, 2 * h)
        } else {
            (2 * m, 2 * n)
        };
        let inner = construct_all_even(
            &SpiderSignature::new(vec![a, b, a]).expect("valid"),
            0,
            false,
        )?;
        return rebrand(inner, t, outer, &target);
    }
    if n == 1 {
        let inner = construct_two_el(m - 1, 2 * (h - m))?;
        return rebrand(inner, t, outer, &target);
    }
    if m == n + 1 && h == n + 2 {
        return consecutive_even(n, outer, &target);
    }

    let (n, m, h) = (n as i64, m as i64, h as i64);
    let r = n + m + h;
    let q = 2 * r;
    let x = leg(std::iter::once(q - 1).chain((2..=2 * n).map(|i| {
        let s = (i - 2) / 2;
        if i % 2 == 0 {
            r + 2 * s
        } else {
            r - 2 - 2 * s
        }
    })));

    let y_head = (2..=m + 1).map(|j| {
        let s = (j - 2) / 2;
        if j % 2 == 0 {
            1 + 2 * s
        } else {
            q - 3 - 2 * s
        }
    });
    let y_tail = (2..=m).map(|j| {
        let s = (j - 2) / 2;
        match (m % 2 == 1, j % 2 == 0) {
            (true, true) => q - m - 1 + 2 * s,
            (true, false) => m - 1 - 2 * s,
            (false, true) => m - 2 * s,
            (false, false) => q - m + 2 * s,
        }
    });
    let y = leg(std::iter::once(q - 2).chain(y_head).chain(y_tail));

    let z_head = (2..=2 * n + 1).map(|k| {
        let s = (k - 2) / 2;
        if k % 2 == 0 {
            r - 1 - 2 * s
        } else {
            r + 1 + 2 * s
        }
    });
    let z_mid = (2 * n + 2..=n + h + 1).map(|k| {
        let s = (k - 2 * n - 2) / 2;
        if k % 2 == 0 {
            r - 2 * n - 2 * s
        } else {
            r + 2 * n + 2 * s
        }
    });
    let same_parity = (n - h) % 2 == 0;
    let z_tail = (3..=h - n + 1).map(|k| {
        let s = (k - 3) / 2;
        match (same_parity, k % 2 == 1) {
            (true, true) => m + 1 + 2 * s,
            (true, false) => q - m - 3 - 2 * s,
            (false, true) => q - m - 2 - 2 * s,
            (false, false) => m + 2 + 2 * s,
        }
    });
    let z = leg(std::iter::once(q).chain(z_head).chain(z_mid).chain(z_tail));

    let mut p = outer;
    p.insert("r".into(), r);
    p.insert("q".into(), q);
    certify(t, arrange(vec![x, y, z], &target), p, 4, None)
}

/// `Sp(2n, 2n+2, 2n+4)`, `n >= 2`.
fn consecutive_even(n: usize, mut p: super::Params, target: &[usize]) -> ConstructionResult {
    let n = n as i64;
    let x = leg(std::iter::once(6 * n + 5).chain((2..=2 * n).map(|i| {
        let s = (i - 2) / 2;
        if i % 2 == 0 {
            3 * n + 3 + 2 * s
        } else {
            3 * n + 1 - 2 * s
        }
    })));
    let z = leg(std::iter::once(6 * n + 6)
        .chain((2..=2 * n + 1).map(|k| {
            let s = (k - 2) / 2;
            if k % 2 == 0 {
                3 * n + 2 - 2 * s
            } else {
                3 * n + 4 + 2 * s
            }
        }))
        .chain([n + 2, 5 * n + 3, n + 3]));
    let y_head = (2..=n + 1).map(|j| {
        let s = (j - 2) / 2;
        if j % 2 == 0 {
            2 + 2 * s
        } else {
            6 * n + 2 - 2 * s
        }
    });
    let y_tail = (2..=n + 2).map(|j| {
        let s = (j - 2) / 2;
        match (n % 2 == 0, j % 2 == 0) {
            (true, true) => n + 1 - 2 * s,
            (true, false) => 5 * n + 5 + 2 * s,
            (false, true) => 5 * n + 4 + 2 * s,
            (false, false) => n - 2 * s,
        }
    });
    let y = leg(std::iter::once(6 * n + 4).chain(y_head).chain(y_tail));
    p.insert("special".into(), 1);
    p.insert("q".into(), 6 * n + 6);
    certify(
        TheoremId::ThreeEven,
        arrange(vec![x, y, z], target),
        p,
        4,
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn two_el_small() {
        for (m, k, legs) in [(0, 2, [2, 2, 4]), (1, 2, [2, 4, 6]), (0, 3, [2, 2, 5])] {
            let c = construct_two_el(m, k).unwrap();
            assert_eq!(c.signature.legs(), &legs);
        }
        assert!(construct_two_el(1, 1).is_err());
    }

    #[test]
    fn three_even_examples() {
        let c = construct_three_even(2, 3, 4).unwrap();
        assert_eq!(c.verify().colors, BTreeSet::from([26, 18, 17, 16]));
        let c = construct_three_even(3, 4, 5).unwrap();
        assert_eq!(c.verify().colors, BTreeSet::from([35, 24, 23, 22]));
    }

    #[test]
    fn three_even_small_grid() {
        for n in 1..=6 {
            for m in n..=8 {
                for h in m..=10 {
                    let c = construct_three_even(n, m, h)
                        .unwrap_or_else(|e| panic!("({n},{m},{h}): {e}"));
                    assert_eq!(c.signature.legs(), &[2 * n, 2 * m, 2 * h]);
                }
            }
        }
    }
}
