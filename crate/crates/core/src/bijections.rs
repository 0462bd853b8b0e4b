//! Composition codecs for `S_n(231, 312)` and `S_n(213, 231)`, and the maps
//! `f` and `g` built on them.
//!
//! A `{231, 312}`-avoider is layered: a direct sum of decreasing blocks, one
//! block per composition part. A `{213, 231}`-avoider splits uniquely into
//! ascending runs that end at right-to-left maxima, one run per part.

use std::fmt;

use serde::Serialize;

use crate::error::BijectionError;
use crate::perm::{PatternPair, Permutation};

/// Ordered positive parts summing to `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        parts.iter().all(|&p| p >= 1).then_some(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Partial sums strictly below `n`, a subset of `{1, …, n−1}`.
    pub fn line_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::line_set`].
    pub fn from_line_set(n: usize, lines: &[usize]) -> Self {
        if n == 0 {
            return Self(Vec::new());
        }
        let mut parts = Vec::with_capacity(lines.len() + 1);
        let mut prev = 0;
        for &l in lines {
            parts.push(l - prev);
            prev = l;
        }
        parts.push(n - prev);
        Self(parts)
    }

    /// All compositions of `n`, in line-set bitmask order.
    pub fn all(n: usize) -> Vec<Self> {
        if n == 0 {
            return vec![Self(Vec::new())];
        }
        (0u64..1 << (n - 1))
            .map(|mask| {
                let lines: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                Self::from_line_set(n, &lines)
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

fn layered_pair() -> PatternPair {
    "231,312".parse().unwrap()
}

fn runs_pair() -> PatternPair {
    "213,231".parse().unwrap()
}

fn require_member(perm: &Permutation, pair: &PatternPair) -> Result<(), BijectionError> {
    match perm.find_pair_occurrence(pair) {
        None => Ok(()),
        Some((pattern, positions)) => Err(BijectionError::NotInClass {
            perm: perm.to_string(),
            pair: pair.to_string(),
            pattern: pattern.to_string(),
            positions,
        }),
    }
}

/// Block sizes of a layered permutation, left to right.
pub fn layered_decompose(perm: &Permutation) -> Result<Composition, BijectionError> {
    require_member(perm, &layered_pair())?;
    let v = perm.values();
    let mut parts = Vec::new();
    let mut run = 0;
    for i in 0..v.len() {
        run += 1;
        if i + 1 == v.len() || v[i + 1] > v[i] {
            parts.push(run);
            run = 0;
        }
    }
    Ok(Composition(parts))
}

/// Block `j` holds the next `c_j` smallest values in decreasing order.
pub fn layered_compose(c: &Composition) -> Permutation {
    let mut values = Vec::with_capacity(c.n());
    let mut base = 0;
    for &part in c.parts() {
        values.extend((base + 1..=base + part).rev());
        base += part;
    }
    Permutation::from_vec_unchecked(values)
}

/// Swaps present and absent lines in the block diagram of a layered
/// permutation.
pub fn map_f(perm: &Permutation) -> Result<Permutation, BijectionError> {
    if perm.is_empty() {
        return Err(BijectionError::Empty);
    }
    let n = perm.len();
    let lines = layered_decompose(perm)?.line_set();
    let flipped: Vec<usize> = (1..n).filter(|i| lines.binary_search(i).is_err()).collect();
    Ok(layered_compose(&Composition::from_line_set(n, &flipped)))
}

/// Lengths of the maximal ascending runs of a `{213, 231}`-avoider.
pub fn runs_decompose_213_231(perm: &Permutation) -> Result<Composition, BijectionError> {
    require_member(perm, &runs_pair())?;
    let v = perm.values();
    let mut parts = Vec::new();
    let mut run = 0;
    for i in 0..v.len() {
        run += 1;
        if i + 1 == v.len() || v[i + 1] < v[i] {
            parts.push(run);
            run = 0;
        }
    }
    Ok(Composition(parts))
}

/// For each part `r`: the `r − 1` smallest unused values increasing, then
/// the largest unused value.
pub fn runs_compose_213_231(c: &Composition) -> Permutation {
    let n = c.n();
    let mut values = Vec::with_capacity(n);
    let (mut lo, mut hi) = (1, n);
    for &part in c.parts() {
        values.extend(lo..lo + part - 1);
        lo += part - 1;
        values.push(hi);
        hi -= 1;
    }
    Permutation::from_vec_unchecked(values)
}

/// Sends left-to-right maxima at position `i` to right-to-left maxima at
/// position `n + 1 − i` by reversing the block composition.
pub fn map_g(perm: &Permutation) -> Result<Permutation, BijectionError> {
    if perm.is_empty() {
        return Err(BijectionError::Empty);
    }
    Ok(runs_compose_213_231(&layered_decompose(perm)?.reversed()))
}
