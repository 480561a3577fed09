//! Three-leg spiders with an even leg and an odd leg.

use crate::certificate::TheoremId;
use crate::sequence::offset_sequence;

use super::{
    arrange, certify, concat, construct_two_el, domain, ensure, leg, params, rebrand,
    ConstructionResult, Params,
};

/// `[q, ...]` followed by `[a+1, a+len]` arranged so consecutive sums stay in
/// `{2a+len, 2a+len+1, 2a+len+2}` and the last term exceeds the first by
/// `rise` (a negative `rise` means it falls short by that much).
fn tail(
    t: TheoremId,
    q: i64,
    len: usize,
    rise: i64,
    a: i64,
) -> Result<Vec<u32>, super::ConstructionError> {
    let s = offset_sequence(len, rise.unsigned_abs() as usize, a as u32)
        .map_err(|e| domain(t, e.to_string()))?;
    let s = if rise >= 0 {
        s.ascending_ends()
    } else {
        s.descending_ends()
    };
    Ok(concat(&[&leg([q]), &s.terms]))
}

/// `q-1, 1, q-3, 3, ...` over `len` positions.
fn odd_run(q: i64, len: i64) -> Vec<u32> {
    leg((1..=len).map(|i| if i % 2 == 1 { q - i } else { i - 1 }))
}

/// `q-2, 2, q-4, 4, ...` over `len` positions.
fn even_run(q: i64, len: i64) -> Vec<u32> {
    leg((1..=len).map(|i| if i % 2 == 1 { q - 1 - i } else { i }))
}

/// `Sp(2n, 2n+2m+1, l)` for `n >= 1`, `m >= 0`, `l >= m+2`.
pub fn construct_eol(n: usize, m: usize, l: usize) -> ConstructionResult {
    let t = TheoremId::Eol;
    ensure(t, n >= 1, "n must be positive")?;
    ensure(t, l >= m + 2, "needs l >= m+2")?;
    let target = [2 * n, 2 * n + 2 * m + 1, l];
    let outer = params(&[("n", n as i64), ("m", m as i64), ("l", l as i64)]);
    if m == 0 && l == 2 {
        if n == 1 {
            let legs = vec![vec![7, 2], vec![5, 4, 1], vec![6, 3]];
            return certify(t, legs, outer, 4, None);
        }
        let inner = construct_eol(1, n - 1, 2 * n)?;
        return rebrand(inner, t, outer, &target);
    }
    if m == 1 && l == 3 {
        // the swapped labeling repeats a color here; Sp(3, 2n, 2n+3) is covered directly
        return rebrand(construct_oel(1, n - 1, 2 * n + 3)?, t, outer, &target);
    }
    let (ni, mi, li) = (n as i64, m as i64, l as i64);
    let q = 4 * ni + 2 * mi + li + 1;
    let a = 2 * ni + mi;
    let x = odd_run(q, 2 * ni);
    let y = even_run(q, 2 * ni);
    let mut v = leg((1..=2 * mi + 1).map(|i| {
        let j = (i + 1) / 2;
        if i % 2 == 1 {
            q - 2 * ni - j
        } else {
            2 * ni + j
        }
    }));
    let (case, r) = if l >= m + 4 && (l - m) % 2 == 0 {
        ("a", m + 1)
    } else if l >= m + 4 {
        ("b", m + 2)
    } else if l == m + 3 {
        ("c", m + 1)
    } else {
        v.swap(2 * m - 2, 2 * m);
        ("d", m)
    };
    let z = tail(t, q, l - 1, r as i64, a)?;
    let legs = if case == "b" {
        vec![x, concat(&[&y, &v]), z]
    } else {
        vec![y, concat(&[&x, &v]), z]
    };
    let mut p = outer;
    p.insert("r".into(), r as i64);
    p.insert("q".into(), q);
    certify(t, arrange(legs, &target), p, 4, None)
}

/// `Sp(2n+1, 2n+2m, l)` for `n >= 1`, `m >= 0`, `l >= 2`.
pub fn construct_oel(n: usize, m: usize, l: usize) -> ConstructionResult {
    let t = TheoremId::Oel;
    ensure(t, n >= 1, "n must be positive")?;
    ensure(t, l >= 2, "needs l >= 2")?;
    let target = [2 * n + 1, 2 * n + 2 * m, l];
    let outer = params(&[("n", n as i64), ("m", m as i64), ("l", l as i64)]);
    if m == 0 {
        return rebrand(construct_eol(n, 0, l)?, t, outer, &target);
    }
    if l == 2 {
        return rebrand(construct_eol(1, n - 1, 2 * n + 2 * m)?, t, outer, &target);
    }
    if l >= m {
        return oel_long(n, m, l, outer, &target);
    }
    if l % 2 == 0 {
        let h = l / 2;
        let inner = if h <= n {
            construct_eol(h, n - h, 2 * n + 2 * m)?
        } else {
            construct_oel(n, h - n, 2 * n + 2 * m)?
        };
        return rebrand(inner, t, outer, &target);
    }
    oel_short_odd(n, (l - 1) / 2, m - (l - 1), outer, &target)
}

/// The `l >= m` branch of [`construct_oel`].
fn oel_long(n: usize, m: usize, l: usize, mut p: Params, target: &[usize]) -> ConstructionResult {
    let t = TheoremId::Oel;
    let (ni, mi, li) = (n as i64, m as i64, l as i64);
    let q = 4 * ni + 2 * mi + li + 1;
    let a = 2 * ni + mi;
    let x = odd_run(q, 2 * ni + 1);
    let x = concat(&[&x[..2 * n], &leg([q - 2 * ni - 1])]);
    let y = even_run(q, 2 * ni + 1);
    let y = concat(&[&y[..2 * n], &leg([q - 2 * ni - 2])]);
    let v = leg((1..=2 * mi - 1).map(|i| {
        let j = (i + 1) / 2;
        if i % 2 == 1 {
            2 * ni + j
        } else {
            q - 2 * ni - 2 - j
        }
    }));
    // (x on its own, rise of the tail)
    let (x_alone, rise) = match m {
        1 => (false, 1),
        2 => (true, -1),
        _ if l > m && (l - m) % 2 == 0 => (true, -(mi - 1)),
        _ if l == m => (false, -(li - 2)),
        _ => (false, -(mi - 2)),
    };
    let z = tail(t, q, l - 1, rise, a)?;
    let legs = if x_alone {
        vec![x, concat(&[&y, &v]), z]
    } else {
        vec![y, concat(&[&x, &v]), z]
    };
    p.insert("r".into(), rise.abs());
    p.insert("q".into(), q);
    certify(t, arrange(legs, target), p, 4, None)
}

/// `Sp(2n+1, 2h+1, 2n+4h+2k)` with `k >= 2`: the odd `l < m` branch of
/// [`construct_oel`].
fn oel_short_odd(
    n: usize,
    h: usize,
    k: usize,
    mut p: Params,
    target: &[usize],
) -> ConstructionResult {
    let t = TheoremId::Oel;
    ensure(t, h >= 1 && k >= 2, "needs h >= 1 and k >= 2")?;
    let (n, h, k) = (n as i64, h as i64, k as i64);
    let q = 4 * n + 6 * h + 2 * k + 2;
    let x = odd_run(q, 2 * n + 1);
    let x = concat(&[&x[..2 * n as usize], &leg([q - 2 * n - 1])]);
    let y = even_run(q, 2 * n + 1);
    let y = concat(&[&y[..2 * n as usize], &leg([q - 2 * n - 2])]);
    let qq = leg((1..=4 * h).map(|i| {
        let j = (i + 1) / 2;
        if i % 2 == 1 {
            2 * n + j
        } else {
            q - 2 * n - 2 - j
        }
    }));
    let (lo, hi) = (2 * n + 2 * h, 2 * n + 4 * h);
    let s = leg((1..2 * k).map(|i| {
        let odd = i % 2 == 1;
        if k % 2 == 0 {
            match i {
                i if i < k && odd => lo + i + 1,
                i if i < k => hi + 2 * k - i,
                i if i == k => hi + k + 1,
                i if odd => lo + 2 * k - i,
                i => hi + i + 1,
            }
        } else {
            match i {
                i if i < k && odd => lo + i + 1,
                i if i < k => hi + 2 * k - i,
                i if i == k => lo + k,
                i if odd => lo + 2 * k - i,
                i => hi + i + 1,
            }
        }
    }));
    let z = tail(t, q, 2 * h as usize, -(2 * h - 1), 2 * n + 2 * h + k)?;
    let legs = vec![concat(&[&x, &qq, &s]), y, z];
    p.insert("h".into(), h);
    p.insert("k".into(), k);
    p.insert("q".into(), q);
    certify(t, arrange(legs, target), p, 4, None)
}

/// `Sp(2n, 2n+2m+1, l)` for `n >= 1`, `2 <= l <= m+1`.
pub fn construct_eolsmall(n: usize, m: usize, l: usize) -> ConstructionResult {
    let t = TheoremId::EolSmall;
    ensure(t, n >= 1, "n must be positive")?;
    ensure(t, (2..=m + 1).contains(&l), "needs 2 <= l <= m+1")?;
    let target = [2 * n, 2 * n + 2 * m + 1, l];
    let outer = params(&[("n", n as i64), ("m", m as i64), ("l", l as i64)]);
    let long = 2 * n + 2 * m + 1;
    if l % 2 == 1 {
        let h = (l - 1) / 2;
        let inner = if h < n {
            construct_oel(h, n - h, long)?
        } else {
            construct_eol(n, h - n, long)?
        };
        return rebrand(inner, t, outer, &target);
    }
    let h = l / 2;
    if n == 1 || h == 1 {
        let e = 2 * n.max(h);
        let inner = construct_two_el(e / 2 - 1, long - e)?;
        return rebrand(inner, t, outer, &target);
    }
    if m % 2 == 1 {
        let k = (m + 1 - 2 * h) / 2;
        if h >= 3 {
            return eolsmall_even(n, h, k, outer, &target);
        }
        if n == 2 {
            return four_four(k, outer, &target);
        }
    }
    zigzag(n, h, m, outer, &target)
}

/// `Sp(2n, 2n+2m+1, 2h)` for `m >= 1`, `h >= 2`. The long leg continues the
/// even run with pairs `(q-2n-i, 2n+i)`: out along one parity of `i`, through
/// `i = m+1`, and back along the other.
fn zigzag(n: usize, h: usize, m: usize, mut p: Params, target: &[usize]) -> ConstructionResult {
    let t = TheoremId::EolSmall;
    ensure(t, m >= 1 && h >= 2, "needs m >= 1 and h >= 2")?;
    let (ni, hi, mi) = (n as i64, h as i64, m as i64);
    let q = 4 * ni + 2 * hi + 2 * mi + 1;
    let rise = if h == 2 { 2 } else { 3 };
    let start = 4 - rise;
    let high = |i: i64| q - 2 * ni - i;
    let low = |i: i64| 2 * ni + i;
    let mut v = Vec::with_capacity(2 * m + 1);
    let mut i = start;
    while i <= mi {
        v.extend([high(i), low(i)]);
        i += 2;
    }
    v.push(high(mi + 1));
    let mut j = if (mi - start) % 2 == 0 { mi - 1 } else { mi };
    while j >= 1 {
        v.extend([low(j), high(j)]);
        j -= 2;
    }
    let x = odd_run(q, 2 * ni);
    let y = concat(&[&even_run(q, 2 * ni), &leg(v)]);
    let z = tail(t, q, 2 * h - 1, rise, 2 * ni + mi)?;
    p.insert("zigzag".into(), 1);
    p.insert("r".into(), rise);
    p.insert("q".into(), q);
    certify(t, arrange(vec![x, y, z], target), p, 4, None)
}

/// `Sp(2n, 2h, 2n+4h+4k-1)` with `h >= 3`.
fn eolsmall_even(
    n: usize,
    h: usize,
    k: usize,
    mut p: Params,
    target: &[usize],
) -> ConstructionResult {
    let t = TheoremId::EolSmall;
    let (n, h, k) = (n as i64, h as i64, k as i64);
    let q = 4 * n + 6 * h + 4 * k - 1;
    let x = odd_run(q, 2 * n);
    let y = even_run(q, 2 * n);
    let half = 2 * h + 2 * k;
    let v = leg((1..=4 * h + 4 * k - 1).map(|i| {
        if i <= half {
            let j = (i + 1) / 2;
            if i % 2 == 1 {
                q - 2 * n + 1 - 2 * j
            } else {
                2 * n + 2 * j - 1
            }
        } else {
            let s = (i - half - 1) / 2;
            if (i - half) % 2 == 1 {
                2 * n + 4 * h + 2 * k - 1 + 2 * s
            } else {
                2 * n + half - 2 - 2 * s
            }
        }
    }));
    let z = tail(t, q, 2 * h as usize - 1, 3, 2 * n + 2 * h + 2 * k - 1)?;
    p.insert("k".into(), k);
    p.insert("q".into(), q);
    certify(
        t,
        arrange(vec![x, concat(&[&y, &v]), z], target),
        p,
        4,
        None,
    )
}

/// `Sp(4, 4, 4k+11)`.
fn four_four(k: usize, mut p: Params, target: &[usize]) -> ConstructionResult {
    let t = TheoremId::EolSmall;
    let k = k as i64;
    let x = leg([4 * k + 18, 1, 4 * k + 16, 3]);
    let y = leg([4 * k + 17, 2, 4 * k + 15, 4]);
    let z = leg([4 * k + 19, 2 * k + 8, 2 * k + 9, 2 * k + 10]);
    let v = leg((1..=4 * k + 7).map(|i| {
        let half = 2 * k + 4;
        if i <= half {
            let j = (i + 1) / 2;
            if i % 2 == 1 {
                4 * k + 16 - 2 * j
            } else {
                3 + 2 * j
            }
        } else {
            let s = (i - half - 1) / 2;
            if (i - half) % 2 == 1 {
                2 * k + 11 + 2 * s
            } else {
                2 * k + 6 - 2 * s
            }
        }
    }));
    p.insert("k".into(), k);
    let legs = vec![concat(&[&x, &v]), y, z];
    certify(t, arrange(legs, target), p, 4, None)
}

/// `Sp(a, b, c)` with `a` even, `b` odd and `c >= 2`.
pub fn construct_mixed_parity(a: usize, b: usize, c: usize) -> ConstructionResult {
    let t = TheoremId::Eol;
    ensure(t, a >= 2 && a % 2 == 0, "a must be even and at least 2")?;
    ensure(t, b >= 3 && b % 2 == 1, "b must be odd and at least 3")?;
    ensure(t, c >= 2, "c must be at least 2")?;
    let target = [a, b, c];
    let result = if b > a {
        let (n, m) = (a / 2, (b - a - 1) / 2);
        if c >= m + 2 {
            construct_eol(n, m, c)
        } else {
            construct_eolsmall(n, m, c)
        }
    } else {
        construct_oel((b - 1) / 2, (a - b + 1) / 2, c)
    }?;
    let order: Vec<usize> = {
        let mut used = [false; 3];
        target
            .iter()
            .map(|&len| {
                let i = (0..3)
                    .find(|&i| !used[i] && result.signature.legs()[i] == len)
                    .expect("same multiset");
                used[i] = true;
                i
            })
            .collect()
    };
    Ok(result.permute_legs(&order))
}
