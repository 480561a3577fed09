//! Three-leg spiders whose legs are all odd.

use crate::certificate::TheoremId;

use super::{arrange, certify, concat, ensure, leg, params, rebrand, ConstructionResult};

/// Labels of positions `1..=len` given by `f(i)`.
fn seq(len: i64, f: impl Fn(i64) -> i64) -> Vec<u32> {
    leg((1..=len).map(f))
}

/// `Sp(2n+1, 2m+1, n+m+3k+1)` for `m+n+k` even and `3k <= n+m`.
pub fn construct_odd_3k(n: usize, m: usize, k: usize) -> ConstructionResult {
    let t = TheoremId::Odd3k;
    ensure(t, n >= 1 && m >= 1 && k >= 1, "n, m, k must be positive")?;
    ensure(t, (n + m + k) % 2 == 0, "n+m+k must be even")?;
    ensure(t, 3 * k <= n + m, "needs 3k <= n+m")?;
    let target = [2 * n + 1, 2 * m + 1, n + m + 3 * k + 1];
    // the labeling below needs the second leg's parameter above k
    let (a, b) = if m > k { (n, m) } else { (m, n) };
    if a == 1 {
        // a leg of length 3: Sp(3, 2b+1, b+3k+2) with both other legs odd
        let (s, l) = (2 * b + 1, b + 3 * k + 2);
        let (s, l) = (s.min(l), s.max(l));
        let inner = construct_leg3((l - s) / 2, (s - 1) / 2)?;
        let outer = params(&[("n", n as i64), ("m", m as i64), ("k", k as i64)]);
        return rebrand(inner, t, outer, &target);
    }
    let (n, m, k) = (a as i64, b as i64, k as i64);
    let q = 3 * n + 3 * m + 3 * k + 3;
    let x = seq(2 * n + 1, |i| match i {
        1 => q,
        2 => n + m + k,
        3 => 2 * n + 2 * m + 2 * k + 1,
        i if i % 2 == 0 => 2 * n + 2 * m + 2 * k + i / 2,
        i => n + m + k - (i - 1) / 2 + 1,
    });
    let y = seq(2 * m + 1, |i| {
        if i <= 2 * k + 1 {
            if i % 2 == 1 {
                q - 1 - i
            } else {
                i
            }
        } else if i % 2 == 0 {
            2 * k + (i - 2 * k) / 2
        } else {
            3 * n + 3 * m + k + 1 - (i - 2 * k - 1) / 2
        }
    });
    let mid_end = n + m + 3 - k;
    let z = seq(n + m + 3 * k + 1, |i| {
        if i <= 2 * k + 1 {
            if i % 2 == 1 {
                q - i
            } else {
                i - 1
            }
        } else if i <= mid_end {
            let s = (i - 2 * k) / 2;
            if i % 2 == 0 {
                n + m + 3 * k + 2 * s - 1
            } else {
                2 * n + 2 * m + 2 - 2 * s
            }
        } else {
            let s = (i - mid_end + 1) / 2;
            if (i - mid_end) % 2 == 1 {
                2 * n + 2 * m + 1 + s
            } else {
                n + m + 3 * k - s
            }
        }
    });
    let p = params(&[("n", a as i64), ("m", b as i64), ("k", k), ("q", q)]);
    certify(t, arrange(vec![x, y, z], &target), p, 4, None)
}

/// `Sp(2n+1, 2m+1, n+m+1)` for `n >= 1`, `m >= 2`, `n+m >= 4` even.
pub fn construct_odd_nm1(n: usize, m: usize) -> ConstructionResult {
    let t = TheoremId::OddNm1;
    ensure(t, n >= 1 && m >= 2, "needs n >= 1 and m >= 2")?;
    ensure(
        t,
        n + m >= 4 && (n + m) % 2 == 0,
        "n+m must be even and at least 4",
    )?;
    let target = [2 * n + 1, 2 * m + 1, n + m + 1];
    let (n, m) = (n as i64, m as i64);
    let q = 3 * n + 3 * m + 3;
    let x = seq(2 * n + 1, |i| match i {
        1 => q - 1,
        i if i % 2 == 0 => i / 2,
        i => q - 2 - (i - 1) / 2,
    });
    let y = seq(2 * m + 1, |i| match i {
        1 => q,
        2 => n + m,
        3 => 2 * n + 2 * m + 1,
        i if i % 2 == 0 => 2 * n + 2 * m + i / 2,
        i => n + m + 1 - (i - 1) / 2,
    });
    let z = seq(n + m + 1, |i| match i {
        1 => q - 2,
        i if i % 2 == 0 => n + m + i,
        i => 2 * n + 2 * m + 2 - i,
    });
    let p = params(&[("n", n), ("m", m), ("q", q)]);
    certify(t, arrange(vec![x, y, z], &target), p, 4, None)
}

fn equal_odd_legs(n: i64, m: i64) -> [Vec<u32>; 3] {
    let q = 2 * n + 4 * m + 3;
    let x = seq(2 * n + 1, |i| {
        if i % 2 == 1 {
            q - 1 - (i - 1) / 2
        } else {
            i / 2
        }
    });
    let y = seq(2 * m + 1, |i| {
        if i % 2 == 1 {
            n + 1 + (i - 1) / 2
        } else {
            q - n - 1 - i / 2
        }
    });
    let z = seq(2 * m + 1, |i| match i {
        1 => q,
        i if i % 2 == 0 => q - n - m - 1 - i / 2,
        i => n + m + 1 + (i - 1) / 2,
    });
    [x, y, z]
}

/// `Sp(2n+1, 2m+1, 2m+1)` for `n >= 0`, `m >= 1`.
pub fn construct_equal_odd(n: usize, m: usize) -> ConstructionResult {
    let t = TheoremId::EqualOdd;
    ensure(t, m >= 1, "m must be positive")?;
    let [x, y, z] = equal_odd_legs(n as i64, m as i64);
    let p = params(&[
        ("n", n as i64),
        ("m", m as i64),
        ("q", (2 * n + 4 * m + 3) as i64),
    ]);
    certify(t, vec![x, y, z], p, 4, None)
}

/// `Sp(2n+1, 2m+1, 4(m-n)-1)` for `m > n >= 0`: start from the labeling of
/// `Sp(2n'+1, 2m+1, 2m+1)` with `n' = m-n-1` and move the last `2n'+2`
/// labels of the second leg onto the core end of the first.
pub fn construct_odd_shifted(n: usize, m: usize) -> ConstructionResult {
    let t = TheoremId::OddShifted;
    ensure(t, m > n, "needs m > n")?;
    let src = (m - n - 1) as i64;
    let [x, y, z] = equal_odd_legs(src, m as i64);
    let cut = y.len() - (2 * src as usize + 2);
    let long = concat(&[&x, &y[cut..]]);
    let short = y[..cut].to_vec();
    let target = [2 * n + 1, 2 * m + 1, 4 * (m - n) - 1];
    let p = params(&[("n", n as i64), ("m", m as i64), ("source_n", src)]);
    certify(t, arrange(vec![short, z, long], &target), p, 4, None)
}

/// `Sp(2m+1, 2m+3, 4m-3)` for `m >= 4`.
pub fn construct_consecutive_odd(m: usize) -> ConstructionResult {
    let t = TheoremId::ConsecutiveOdd;
    ensure(t, m >= 4, "m must be at least 4")?;
    let m = m as i64;
    let q = 8 * m + 1;
    let x = seq(2 * m + 1, |i| match i {
        1 => q,
        i if i % 2 == 0 => 6 * m - i / 2,
        i => 2 * m + 1 + (i - 1) / 2,
    });
    let y_tail = [7 * m - 1, m + 1, 7 * m, m];
    let y = seq(2 * m + 3, |i| match i {
        1 => 8 * m,
        i if i < 2 * m => {
            if i % 2 == 1 {
                8 * m - (i - 1) / 2
            } else {
                i / 2
            }
        }
        i => y_tail[(i - 2 * m) as usize],
    });
    let z_tail = [4 * m, 2 * m + 1, 6 * m, 2 * m];
    let z = seq(4 * m - 3, |i| match i {
        i if i <= 2 * m - 4 => {
            if i % 2 == 1 {
                6 * m + 1 + (i - 1) / 2
            } else {
                2 * m - i / 2
            }
        }
        i if i <= 4 * m - 7 => {
            let d = i - 2 * m + 3;
            if d % 2 == 0 {
                5 * m - 1 - d / 2
            } else {
                3 * m + 2 + d / 2
            }
        }
        i => z_tail[(i - 4 * m + 6) as usize],
    });
    let p = params(&[("m", m), ("q", q)]);
    certify(t, vec![x, y, z], p, 4, None)
}

/// `Sp(2m+1, 2m+11, 4m+5)` for `m >= 2`. The core and the second vertex of
/// the longest leg share the color `14m+28`; the other colors are `6m+13`,
/// `q-1` and `q`.
pub fn construct_odd_m11(m: usize) -> ConstructionResult {
    let t = TheoremId::OddM11;
    ensure(t, m >= 2, "m must be at least 2")?;
    let m = m as i64;
    let q = 8 * m + 17;
    let p = 6 * m + 13;
    let x = seq(2 * m + 1, |i| {
        if i % 2 == 1 {
            q - 1 - (i - 1) / 2
        } else {
            i / 2
        }
    });
    let central = (0..=m).flat_map(|k| {
        let hi = (k < m).then_some(4 * m + 9 + k);
        std::iter::once(4 * m + 8 - k).chain(hi)
    });
    let y = leg([p, 2 * m + 4, 6 * m + 12, 2 * m + 5]
        .into_iter()
        .chain(central)
        .chain([
            3 * m + 5,
            5 * m + 11,
            3 * m + 6,
            5 * m + 10,
            3 * m + 7,
            5 * m + 9,
        ]));
    let outer = (0..m)
        .flat_map(|k| std::iter::once(6 * m + 11 - k).chain((k < m - 1).then_some(2 * m + 6 + k)));
    let inner = (0..m + 3)
        .flat_map(|k| std::iter::once(m + 1 + k).chain((k < m + 2).then_some(7 * m + 15 - k)));
    let z = leg(std::iter::once(q).chain(outer).chain(inner));
    let p = params(&[("m", m), ("q", q), ("conflict", 14 * m + 28)]);
    certify(t, vec![x, y, z], p, 4, None)
}

/// `Sp(3, 2m+1, 2m+2h+1)` for `m >= 1`, `h >= 0`.
pub fn construct_leg3(h: usize, m: usize) -> ConstructionResult {
    let t = TheoremId::Leg3;
    ensure(t, m >= 1, "m must be positive")?;
    let target = [3, 2 * m + 1, 2 * m + 2 * h + 1];
    let (hi, m) = (h as i64, m as i64);
    let legs = match h {
        0 => {
            let q = 4 * m + 5;
            let x = seq(2 * m + 1, |i| if i % 2 == 1 { 4 * m + 3 - i } else { i });
            let y = seq(2 * m + 1, |i| match i {
                1 => q,
                i if i % 2 == 0 => 4 * m + 3 - i,
                i => i,
            });
            vec![leg([4 * m + 4, 1, 4 * m + 3]), x, y]
        }
        1 => {
            let q = 4 * m + 7;
            let x = seq(2 * m + 3, |i| match i {
                1 => q,
                2 => q - 1,
                3 => 1,
                i if i % 2 == 0 => 2 * m + 5 - i,
                i => 2 * m + 1 + i,
            });
            let y = seq(2 * m + 1, |i| if i % 2 == 1 { 4 * m + 6 - i } else { i });
            vec![leg([2 * m + 2, 2 * m + 3, 2 * m + 4]), y, x]
        }
        _ => {
            let k = hi / 2;
            let even = hi % 2 == 0;
            let q = if even {
                4 * m + 4 * k + 5
            } else {
                4 * m + 4 * k + 7
            };
            let pairs = |top: i64, bottom: i64| {
                seq(2 * m + 1, move |i| match i {
                    i if i == 2 * m + 1 => top - 2 * m,
                    i if i % 2 == 1 => top - (i - 1),
                    i => bottom + i - 2,
                })
            };
            let xs = pairs(q - 1, 1);
            let ys = pairs(q - 2, 2);
            let q_len = if even { 2 * k } else { 2 * k + 2 };
            let qpart = seq(q_len, |i| {
                if i % 2 == 1 {
                    2 * m + (i + 1) / 2
                } else {
                    q - 2 * m - 2 - i / 2
                }
            });
            let shift = if even { 0 } else { 1 };
            let rpart = seq(2 * k, |i| {
                if i % 2 == 1 {
                    2 * m + k + 1 + shift + (i + 1) / 2
                } else {
                    2 * m + 3 * k + 2 + shift - i / 2
                }
            });
            let w = leg([q, 2 * m + 3 * k + 2 + shift, 2 * m + k + 1 + shift]);
            if even {
                vec![w, xs, concat(&[&ys, &qpart, &rpart])]
            } else {
                vec![w, ys, concat(&[&xs, &qpart, &rpart])]
            }
        }
    };
    let p = params(&[("h", hi), ("m", m)]);
    certify(t, arrange(legs, &target), p, 4, None)
}

/// `Sp(5, 2m+1, 2h+1)` for `m >= 1`, `h >= 3`.
pub fn construct_leg5(m: usize, h: usize) -> ConstructionResult {
    let t = TheoremId::Leg5;
    ensure(t, m >= 1 && h >= 3, "needs m >= 1 and h >= 3")?;
    let target = [5, 2 * m + 1, 2 * h + 1];
    let (m, h) = (m as i64, h as i64);
    let q = 2 * m + 2 * h + 7;
    let x = leg([q - 1, 1, q - 2, (q + 1) / 2, (q - 1) / 2]);
    let y = seq(2 * m + 1, |i| match i {
        1 => q,
        i if i % 2 == 0 => (q - 1) / 2 - i / 2,
        i => (q + 1) / 2 + (i - 1) / 2,
    });
    let z = seq(2 * h + 1, |i| {
        if i % 2 == 1 {
            (i - 1) / 2 + 2
        } else {
            q - 2 - i / 2
        }
    });
    let p = params(&[("m", m), ("h", h), ("q", q)]);
    certify(t, arrange(vec![x, y, z], &target), p, 4, None)
}

/// `Sp(7, 2m+1, 2h+1)` for `m, h >= 1`.
pub fn construct_leg7(m: usize, h: usize) -> ConstructionResult {
    let t = TheoremId::Leg7;
    ensure(t, m >= 1 && h >= 1, "needs m, h >= 1")?;
    let target = [7, 2 * m + 1, 2 * h + 1];
    let (m, h) = (m as i64, h as i64);
    let q = 2 * m + 2 * h + 9;
    let x = leg([q - 2, 2, q - 4, q - 1, 1, 3, q - 3]);
    let y = seq(2 * m + 1, |i| if i % 2 == 1 { 3 + i } else { q - 4 - i });
    let z = seq(2 * h + 1, |i| match i {
        1 => q,
        i if i % 2 == 0 => q - 3 - i,
        i => i + 2,
    });
    let p = params(&[("m", m), ("h", h), ("q", q)]);
    certify(t, arrange(vec![x, y, z], &target), p, 4, None)
}

/// `Sp(9, 11, 2m+1)` for `m >= 2`.
pub fn construct_9_11(m: usize) -> ConstructionResult {
    let t = TheoremId::Leg9And11;
    ensure(t, m >= 2, "m must be at least 2")?;
    let target = [9, 11, 2 * m + 1];
    let m = m as i64;
    let x = leg([
        2 * m + 21,
        2 * m + 14,
        6,
        2 * m + 15,
        5,
        m + 9,
        m + 12,
        m + 8,
        m + 13,
    ]);
    let y = leg([
        2 * m + 20,
        1,
        2 * m + 19,
        2,
        2 * m + 18,
        2 * m + 17,
        3,
        m + 11,
        m + 10,
        4,
        2 * m + 16,
    ]);
    let z = seq(2 * m + 1, |i| match i {
        1 => m + 14,
        2 => m + 7,
        i if i % 2 == 1 => 6 + (i - 1) / 2,
        i => 2 * m + 15 - i / 2,
    });
    let p = params(&[("m", m), ("q", 2 * m + 21)]);
    certify(t, arrange(vec![x, y, z], &target), p, 4, None)
}

/// `Sp(13, 2m+1, 2n+1)` for `m, n >= 2`.
pub fn construct_13(m: usize, n: usize) -> ConstructionResult {
    let t = TheoremId::Leg13;
    ensure(t, m >= 2 && n >= 2, "needs m, n >= 2")?;
    let target = [13, 2 * m + 1, 2 * n + 1];
    let (m, n) = (m as i64, n as i64);
    let b = 2 * m + 2 * n;
    let q = b + 15;
    let x = leg([
        b + 13,
        2,
        b + 11,
        4,
        3,
        b + 12,
        b + 10,
        5,
        b + 8,
        b + 14,
        1,
        6,
        b + 9,
    ]);
    let y = seq(2 * m + 1, |i| match i {
        1 => q,
        i if i % 2 == 0 => b + 9 - i,
        i => 5 + i,
    });
    let z = seq(2 * n + 1, |i| if i % 2 == 1 { 6 + i } else { b + 8 - i });
    let p = params(&[("m", m), ("n", n), ("q", q)]);
    certify(t, arrange(vec![x, y, z], &target), p, 4, None)
}
