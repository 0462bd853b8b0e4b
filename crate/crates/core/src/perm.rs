//! Permutations in one-line notation, the classical symmetries, pattern
//! containment and generation of the classes `S_n(τ, ρ)`.
//!
//! Values and positions are 1-based at every public boundary.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::PermError;

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=n`.
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(PermError::OutOfRange { value: v, len: n });
            }
            if seen[v] {
                return Err(PermError::Duplicate(v));
            }
            seen[v] = true;
        }
        Ok(Self { values })
    }

    /// Builds from a slice of signed integers, rejecting non-positive entries.
    pub fn from_signed(seq: &[i64]) -> Result<Self, PermError> {
        let values = seq
            .iter()
            .map(|&v| usize::try_from(v).map_err(|_| PermError::NonPositive(v)))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(pos) = values.iter().position(|&v| v == 0) {
            return Err(PermError::NonPositive(seq[pos]));
        }
        Self::new(values)
    }

    // Callers guarantee the rearrangement invariant.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self { values }
    }

    pub fn empty() -> Self {
        Self { values: Vec::new() }
    }

    /// `12⋯n`.
    pub fn identity(n: usize) -> Self {
        Self { values: (1..=n).collect() }
    }

    /// `n(n−1)⋯1`.
    pub fn decreasing(n: usize) -> Self {
        Self { values: (1..=n).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// `π^r`: `result_i = π_{n+1−i}`.
    pub fn reverse(&self) -> Self {
        Self { values: self.values.iter().rev().copied().collect() }
    }

    /// `π^c`: `result_i = n+1−π_i`.
    pub fn complement(&self) -> Self {
        let n = self.len();
        Self { values: self.values.iter().map(|&v| n + 1 - v).collect() }
    }

    /// `π^{rc}`.
    pub fn reverse_complement(&self) -> Self {
        self.reverse().complement()
    }

    /// Group-theoretic inverse: `result_{π_i} = i`.
    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Self { values }
    }

    /// `α ⊕ β`: `β` placed after `α` with its values shifted up by `|α|`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let a = self.len();
        let values = self
            .values
            .iter()
            .copied()
            .chain(other.values.iter().map(|&v| v + a))
            .collect();
        Self { values }
    }

    /// `α ⊖ β`: `α` shifted up by `|β|`, followed by `β`.
    pub fn skew_sum(&self, other: &Self) -> Self {
        let b = other.len();
        let values = self
            .values
            .iter()
            .map(|&v| v + b)
            .chain(other.values.iter().copied())
            .collect();
        Self { values }
    }

    /// True iff some subsequence is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Pattern) -> bool {
        self.find_occurrence(pattern).is_some()
    }

    /// Lexicographically first occurrence of `pattern`, as 1-based positions.
    pub fn find_occurrence(&self, pattern: &Pattern) -> Option<Vec<usize>> {
        let p = pattern.as_perm().values();
        if p.len() > self.len() {
            return None;
        }
        if p.is_empty() {
            return Some(Vec::new());
        }
        let mut chosen = Vec::with_capacity(p.len());
        if extend_occurrence(&self.values, p, 0, &mut chosen) {
            Some(chosen.into_iter().map(|i| i + 1).collect())
        } else {
            None
        }
    }

    /// Avoids both patterns of the pair.
    pub fn avoids_pair(&self, pair: &PatternPair) -> bool {
        !self.contains(pair.first()) && !self.contains(pair.second())
    }

    /// The first occurrence of either pattern of `pair`, if any.
    pub fn find_pair_occurrence(&self, pair: &PatternPair) -> Option<(Pattern, Vec<usize>)> {
        pair.patterns()
            .into_iter()
            .find_map(|pat| self.find_occurrence(pat).map(|occ| (pat.clone(), occ)))
    }
}

// Backtracking search: `chosen` holds 0-based positions of the first
// `chosen.len()` pattern letters, all mutually order-consistent.
fn extend_occurrence(text: &[usize], pat: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    let k = chosen.len();
    if k == pat.len() {
        return true;
    }
    let remaining = pat.len() - k;
    for i in from..=text.len() - remaining {
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(j, &pos)| text[pos].cmp(&text[i]) == pat[j].cmp(&pat[k]));
        if ok {
            chosen.push(i);
            if extend_occurrence(text, pat, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = PermError;

    fn try_from(values: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.values
    }
}

/// Space-separated one-line notation, e.g. `3 4 1 5 2`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let seq = s
            .split_whitespace()
            .map(|tok| tok.parse::<i64>().map_err(|_| PermError::Parse(tok.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_signed(&seq)
    }
}

/// A classical pattern. Containment works for any length; the classes in
/// this crate only use length 3.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(perm: Permutation) -> Result<Self, PermError> {
        if perm.is_empty() || perm.len() > 9 {
            return Err(PermError::PatternLength(perm.len()));
        }
        Ok(Self(perm))
    }

    pub fn as_perm(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reverse(&self) -> Self {
        Self(self.0.reverse())
    }

    pub fn complement(&self) -> Self {
        Self(self.0.complement())
    }

    /// The six patterns of length 3 in lexicographic order.
    pub fn all_of_length_3() -> Vec<Pattern> {
        all_permutations(3).into_iter().map(Pattern).collect()
    }
}

/// Compact digit string, e.g. `231`.
impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.0.values() {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let values = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| PermError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(Permutation::new(values)?)
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An unordered pair of distinct patterns, stored in ascending
/// lexicographic order so equality and hashing ignore argument order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternPair {
    first: Pattern,
    second: Pattern,
}

impl PatternPair {
    pub fn new(a: Pattern, b: Pattern) -> Result<Self, PermError> {
        match a.cmp(&b) {
            Ordering::Less => Ok(Self { first: a, second: b }),
            Ordering::Greater => Ok(Self { first: b, second: a }),
            Ordering::Equal => Err(PermError::SamePattern(a.to_string())),
        }
    }

    pub fn first(&self) -> &Pattern {
        &self.first
    }

    pub fn second(&self) -> &Pattern {
        &self.second
    }

    pub fn patterns(&self) -> [&Pattern; 2] {
        [&self.first, &self.second]
    }

    /// Applies the same map to both patterns.
    pub fn map(&self, f: impl Fn(&Pattern) -> Pattern) -> Self {
        Self::new(f(&self.first), f(&self.second)).expect("symmetries preserve distinctness")
    }

    /// All 15 pairs of distinct length-3 patterns, in canonical order.
    pub fn all_length_3() -> Vec<PatternPair> {
        let pats = Pattern::all_of_length_3();
        let mut out = Vec::with_capacity(15);
        for i in 0..pats.len() {
            for j in i + 1..pats.len() {
                out.push(Self::new(pats[i].clone(), pats[j].clone()).unwrap());
            }
        }
        out
    }
}

/// `231,312`.
impl fmt::Display for PatternPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.first, self.second)
    }
}

impl FromStr for PatternPair {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once(',').ok_or_else(|| PermError::Parse(s.to_string()))?;
        Self::new(a.parse()?, b.parse()?)
    }
}

impl Serialize for PatternPair {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation { values: cur.clone() });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Every `π ∈ S_n` avoiding both patterns of `pair`, in lexicographic order.
///
/// Permutations are grown left to right in lexicographic order and a branch
/// is cut as soon as its prefix contains a pattern. Containment is inherited
/// by extensions, so the result is exactly the filter of `S_n`.
pub fn enumerate_class(pair: &PatternPair, n: usize) -> Vec<Permutation> {
    let pats: Vec<&[usize]> = pair.patterns().iter().map(|p| p.as_perm().values()).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    grow(n, &pats, &mut cur, &mut used, &mut out);
    out
}

fn grow(n: usize, pats: &[&[usize]], cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    if cur.len() == n {
        out.push(Permutation { values: cur.clone() });
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        cur.push(v);
        if !pats.iter().any(|p| ends_with_occurrence(cur, p)) {
            used[v] = true;
            grow(n, pats, cur, used, out);
            used[v] = false;
        }
        cur.pop();
    }
}

// Whether `seq` has an occurrence of `pat` using its last entry. Relative
// order is all that matters, so the prefix need not be a permutation.
fn ends_with_occurrence(seq: &[usize], pat: &[usize]) -> bool {
    let k = pat.len();
    if seq.len() < k {
        return false;
    }
    let last = seq.len() - 1;
    let mut chosen = Vec::with_capacity(k);
    fn rec(seq: &[usize], pat: &[usize], from: usize, last: usize, chosen: &mut Vec<usize>) -> bool {
        let j = chosen.len();
        if j == pat.len() - 1 {
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(a, &pos)| seq[pos].cmp(&seq[last]) == pat[a].cmp(&pat[j]));
            return consistent;
        }
        let remaining = pat.len() - 1 - j;
        for i in from..=last - remaining {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(a, &pos)| seq[pos].cmp(&seq[i]) == pat[a].cmp(&pat[j]));
            if ok {
                chosen.push(i);
                if rec(seq, pat, i + 1, last, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(seq, pat, 0, last, &mut chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn pair(s: &str) -> PatternPair {
        s.parse().unwrap()
    }

    #[test]
    fn construction() {
        assert!(Permutation::new(vec![]).unwrap().is_empty());
        assert_eq!(Permutation::new(vec![3, 4, 1, 5, 2]).unwrap().to_string(), "3 4 1 5 2");
        assert_eq!(Permutation::new(vec![1, 1]), Err(PermError::Duplicate(1)));
        assert!(matches!(Permutation::new(vec![1, 3]), Err(PermError::OutOfRange { .. })));
        assert_eq!(Permutation::from_signed(&[0, 1]), Err(PermError::NonPositive(0)));
        assert_eq!(Permutation::from_signed(&[-2, 1]), Err(PermError::NonPositive(-2)));
        assert!("1 x 2".parse::<Permutation>().is_err());
    }

    #[test]
    fn symmetries() {
        assert_eq!(perm("3 4 1 5 2").reverse(), perm("2 5 1 4 3"));
        assert_eq!(perm("2 3 1").reverse(), perm("1 3 2"));
        assert_eq!(perm("2 3 1").complement(), perm("2 1 3"));
        assert_eq!(Permutation::identity(5).complement(), Permutation::decreasing(5));
        assert_eq!(perm("3 4 1 5 2").inverse(), perm("3 5 1 2 4"));
        assert_eq!(perm("2 1").inverse(), perm("2 1"));
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        let e = Permutation::empty();
        assert_eq!(e.reverse(), e);
        assert_eq!(e.complement(), e);
        assert_eq!(e.inverse(), e);
    }

    #[test]
    fn sums() {
        let a = perm("1 2 3");
        let b = perm("4 1 3 2");
        assert_eq!(a.direct_sum(&b), perm("1 2 3 7 4 6 5"));
        assert_eq!(a.skew_sum(&b), perm("5 6 7 4 1 3 2"));
        assert_eq!(Permutation::empty().direct_sum(&b), b);
        assert_eq!(Permutation::empty().skew_sum(&b), b);
        let one = perm("1");
        assert_eq!(one.direct_sum(&one), perm("1 2"));
        assert_eq!(one.skew_sum(&one), perm("2 1"));
    }

    #[test]
    fn containment() {
        assert!(!perm("3 2 1 5 4").contains(&pat("231")));
        assert!(perm("3 4 1 5 2").contains(&pat("231")));
        assert_eq!(perm("3 4 1 5 2").find_occurrence(&pat("231")), Some(vec![1, 2, 3]));
        assert!(!perm("1 2").contains(&pat("123")));
        assert!(perm("3 2 1").avoids_pair(&pair("231,312")));
        assert!(!perm("2 3 1").avoids_pair(&pair("231,312")));
        assert!(Permutation::empty().avoids_pair(&pair("123,321")));
    }

    #[test]
    fn pairs_are_unordered() {
        assert_eq!(pair("312,231"), pair("231,312"));
        assert_eq!(pair("312,231").to_string(), "231,312");
        assert!("231,231".parse::<PatternPair>().is_err());
        assert!("231".parse::<PatternPair>().is_err());
        assert!("231,3x2".parse::<PatternPair>().is_err());
        assert_eq!(PatternPair::all_length_3().len(), 15);
    }

    #[test]
    fn class_examples() {
        let got: Vec<String> = enumerate_class(&pair("231,312"), 3).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["1 2 3", "1 3 2", "2 1 3", "3 2 1"]);
        assert_eq!(enumerate_class(&pair("123,132"), 0), vec![Permutation::empty()]);
        assert!(enumerate_class(&pair("123,321"), 5).is_empty());
    }

    #[test]
    fn pruned_generation_matches_filter() {
        for p in PatternPair::all_length_3() {
            for n in 0..=7 {
                let filtered: Vec<_> = all_permutations(n).into_iter().filter(|q| q.avoids_pair(&p)).collect();
                assert_eq!(enumerate_class(&p, n), filtered, "{p} n={n}");
            }
        }
    }
}
