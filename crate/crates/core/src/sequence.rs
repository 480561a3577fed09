//! Two labeling primitives shared by the 3-leg constructions: permutations of
//! `[a+1, a+N]` whose consecutive sums take at most three values, and a path
//! labeling on `[a, a+n-1]` with prescribed end colors.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence length must be at least 2, got {0}")]
    TooShort(usize),
    #[error("gap {r} is not achievable for length {n}")]
    InvalidGap { n: usize, r: usize },
    #[error("base {0} is not allowed here")]
    InvalidBase(i64),
}

/// Gaps `|last - first|` that a rotation of the circular permutation of
/// length `n` can realize.
pub fn valid_gaps(n: usize) -> Result<BTreeSet<usize>, SequenceError> {
    if n < 2 {
        return Err(SequenceError::TooShort(n));
    }
    let mut gaps = BTreeSet::from([1, n - 1]);
    if n % 2 == 0 {
        gaps.extend((2..=n.saturating_sub(2)).step_by(2));
    } else {
        gaps.extend((1..=n - 2).step_by(2));
    }
    Ok(gaps)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularPermutation {
    pub terms: Vec<u32>,
    pub base: u32,
    pub gap: usize,
}

impl CircularPermutation {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.terms[0]
    }

    pub fn last(&self) -> u32 {
        self.terms[self.terms.len() - 1]
    }

    /// Same sequence read backwards; consecutive sums and the gap are kept.
    pub fn reversed(mut self) -> Self {
        self.terms.reverse();
        self
    }

    /// Orients the sequence so that it ends on its larger endpoint.
    pub fn ascending_ends(self) -> Self {
        if self.last() < self.first() {
            self.reversed()
        } else {
            self
        }
    }

    /// Orients the sequence so that it ends on its smaller endpoint.
    pub fn descending_ends(self) -> Self {
        if self.last() > self.first() {
            self.reversed()
        } else {
            self
        }
    }
}

/// The unrotated cycle on `[1, n]` whose cyclic consecutive sums lie in
/// `{n, n+1, n+2}`.
pub fn base_cycle(n: usize) -> Result<Vec<u32>, SequenceError> {
    if n < 2 {
        return Err(SequenceError::TooShort(n));
    }
    let k = n / 4;
    let odd = |i: usize| i % 2 == 1;
    let mut out = Vec::with_capacity(n);
    match n % 4 {
        0 => {
            for i in 1..=2 * k {
                out.push(if odd(i) { 2 * k + 1 - i } else { 2 * k + i });
            }
            for i in 1..=2 * k {
                out.push(if odd(i) { i } else { 4 * k + 1 - i });
            }
        }
        1 => {
            for i in 1..=2 * k {
                out.push(if odd(i) { 2 * k + 1 + i } else { 2 * k + 1 - i });
            }
            for i in 1..=2 * k + 1 {
                out.push(if odd(i) { 4 * k + 2 - i } else { i });
            }
        }
        2 => {
            for i in 1..=2 * k + 1 {
                out.push(if odd(i) { 2 * k + 2 - i } else { 2 * k + 1 + i });
            }
            for i in 1..=2 * k + 1 {
                out.push(if odd(i) { 4 * k + 3 - i } else { i });
            }
        }
        _ => {
            for i in 1..=2 * k + 1 {
                out.push(if odd(i) { 2 * k + 2 - i } else { 2 * k + 2 + i });
            }
            for i in 1..=2 * k + 2 {
                out.push(if odd(i) { 4 * k + 4 - i } else { i });
            }
        }
    }
    Ok(out.into_iter().map(|x| x as u32).collect())
}

/// Rotation of [`base_cycle`] that starts right after the first cyclic pair at
/// distance `r`, so `|last - first| = r`.
pub fn circular_permutation(n: usize, r: usize) -> Result<CircularPermutation, SequenceError> {
    if !valid_gaps(n)?.contains(&r) {
        return Err(SequenceError::InvalidGap { n, r });
    }
    let cycle = base_cycle(n)?;
    let j = (0..n)
        .find(|&j| cycle[j].abs_diff(cycle[(j + 1) % n]) as usize == r)
        .ok_or(SequenceError::InvalidGap { n, r })?;
    let terms = (1..=n).map(|t| cycle[(j + t) % n]).collect();
    Ok(CircularPermutation {
        terms,
        base: 0,
        gap: r,
    })
}

/// [`circular_permutation`] shifted onto `[a+1, a+n]`.
pub fn offset_sequence(n: usize, r: usize, a: u32) -> Result<CircularPermutation, SequenceError> {
    if a < 1 {
        return Err(SequenceError::InvalidBase(a.into()));
    }
    let mut p = circular_permutation(n, r)?;
    for t in &mut p.terms {
        *t += a;
    }
    p.base = a;
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFourLabeling {
    /// Edge labels from `x_1 x_2` to `x_n x_{n+1}`.
    pub labels: Vec<u32>,
    pub base: u32,
    pub endpoint_colors: (u64, u64),
    pub interior_colors: Vec<u64>,
}

/// Labels the path `x_1 .. x_{n+1}` bijectively by `[a, a+n-1]` so that
/// `x_1` and `x_{n+1}` get `a+n-2` and `a+n-1`, every interior vertex gets one
/// of `2a+n-1, 2a+n-2, 2a+n-3`, and `x_n` gets `2a+n-1` (so does `x_2` unless
/// `n = 3`, where `x_2` and `x_n` are adjacent).
pub fn label_path_4a(n: usize, a: u32) -> Result<PathFourLabeling, SequenceError> {
    if n < 2 {
        return Err(SequenceError::TooShort(n));
    }
    if a < 2 {
        return Err(SequenceError::InvalidBase(a.into()));
    }
    let a = a as usize;
    let odd = |i: usize| i % 2 == 1;
    let labels: Vec<usize> = match n % 4 {
        0 | 2 => {
            let k = n / 2;
            (1..=n)
                .map(|i| if odd(i) { a + 2 * k - i - 1 } else { a + i - 1 })
                .collect()
        }
        1 => {
            let k = n / 4;
            (1..=n)
                .map(|i| match (odd(i), i) {
                    (true, i) if i < 2 * k + 1 => a + 4 * k - i,
                    (true, i) if i == 2 * k + 1 => a + 2 * k,
                    (true, i) => a + i - 1,
                    (false, i) if i <= 2 * k => a + i - 1,
                    (false, i) => a + 4 * k - i,
                })
                .collect()
        }
        _ => {
            let k = n / 4;
            (1..=n)
                .map(|i| match (odd(i), i) {
                    (true, i) if i <= 2 * k + 1 => a + 4 * k + 2 - i,
                    (true, i) => a + i - 1,
                    (false, i) if i <= 2 * k => a + i - 1,
                    (false, i) => a + 4 * k + 2 - i,
                })
                .collect()
        }
    };
    let interior_colors = labels.windows(2).map(|w| (w[0] + w[1]) as u64).collect();
    Ok(PathFourLabeling {
        endpoint_colors: (labels[0] as u64, labels[n - 1] as u64),
        labels: labels.into_iter().map(|x| x as u32).collect(),
        base: a as u32,
        interior_colors,
    })
}
