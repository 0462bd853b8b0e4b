//! The eight statistics. Every one is total, and all are 0 on the empty
//! permutation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::perm::Permutation;
use crate::poly::Var;

pub fn asc(perm: &Permutation) -> usize {
    perm.values().windows(2).filter(|w| w[0] < w[1]).count()
}

pub fn des(perm: &Permutation) -> usize {
    perm.values().windows(2).filter(|w| w[0] > w[1]).count()
}

fn count_records<'a>(values: impl Iterator<Item = &'a usize>, beats: impl Fn(usize, usize) -> bool) -> usize {
    let mut best: Option<usize> = None;
    let mut count = 0;
    for &v in values {
        if best.is_none_or(|b| beats(v, b)) {
            best = Some(v);
            count += 1;
        }
    }
    count
}

/// Left-to-right maxima: entries larger than everything before them.
pub fn lrmax(perm: &Permutation) -> usize {
    count_records(perm.values().iter(), |v, b| v > b)
}

pub fn lrmin(perm: &Permutation) -> usize {
    count_records(perm.values().iter(), |v, b| v < b)
}

/// Right-to-left maxima: entries larger than everything after them.
pub fn rlmax(perm: &Permutation) -> usize {
    count_records(perm.values().iter().rev(), |v, b| v > b)
}

pub fn rlmin(perm: &Permutation) -> usize {
    count_records(perm.values().iter().rev(), |v, b| v < b)
}

// Greedy interval scheduling on the adjacent pairs (i, i+1): taking the
// leftmost available pair never hurts, since every pair has length two.
fn max_disjoint(values: &[usize], hit: impl Fn(usize, usize) -> bool) -> usize {
    let mut count = 0;
    let mut i = 0;
    while i + 1 < values.len() {
        if hit(values[i], values[i + 1]) {
            count += 1;
            i += 2;
        } else {
            i += 1;
        }
    }
    count
}

/// Maximum number of pairwise index-disjoint ascents.
pub fn mna(perm: &Permutation) -> usize {
    max_disjoint(perm.values(), |a, b| a < b)
}

/// Maximum number of pairwise index-disjoint descents.
pub fn mnd(perm: &Permutation) -> usize {
    max_disjoint(perm.values(), |a, b| a > b)
}

/// One of the eight statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Asc,
    Des,
    Lrmax,
    Lrmin,
    Rlmax,
    Rlmin,
    Mna,
    Mnd,
}

impl Statistic {
    pub const ALL: [Statistic; 8] = [
        Statistic::Asc,
        Statistic::Des,
        Statistic::Lrmax,
        Statistic::Rlmax,
        Statistic::Lrmin,
        Statistic::Rlmin,
        Statistic::Mna,
        Statistic::Mnd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Asc => "asc",
            Statistic::Des => "des",
            Statistic::Lrmax => "lrmax",
            Statistic::Lrmin => "lrmin",
            Statistic::Rlmax => "rlmax",
            Statistic::Rlmin => "rlmin",
            Statistic::Mna => "mna",
            Statistic::Mnd => "mnd",
        }
    }

    /// The generating-function variable that marks this statistic.
    pub fn marker(self) -> Var {
        match self {
            Statistic::Asc => Var::P,
            Statistic::Des => Var::Q,
            Statistic::Lrmax => Var::U,
            Statistic::Rlmax => Var::V,
            Statistic::Lrmin => Var::S,
            Statistic::Rlmin => Var::T,
            Statistic::Mna => Var::Y,
            Statistic::Mnd => Var::Z,
        }
    }

    pub fn eval(self, perm: &Permutation) -> usize {
        match self {
            Statistic::Asc => asc(perm),
            Statistic::Des => des(perm),
            Statistic::Lrmax => lrmax(perm),
            Statistic::Lrmin => lrmin(perm),
            Statistic::Rlmax => rlmax(perm),
            Statistic::Rlmin => rlmin(perm),
            Statistic::Mna => mna(perm),
            Statistic::Mnd => mnd(perm),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown statistic {s:?}"))
    }
}

/// All eight statistics of one permutation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatVector {
    pub asc: usize,
    pub des: usize,
    pub lrmax: usize,
    pub lrmin: usize,
    pub rlmax: usize,
    pub rlmin: usize,
    pub mna: usize,
    pub mnd: usize,
}

impl StatVector {
    pub fn of(perm: &Permutation) -> Self {
        Self {
            asc: asc(perm),
            des: des(perm),
            lrmax: lrmax(perm),
            lrmin: lrmin(perm),
            rlmax: rlmax(perm),
            rlmin: rlmin(perm),
            mna: mna(perm),
            mnd: mnd(perm),
        }
    }

    pub fn get(&self, stat: Statistic) -> usize {
        match stat {
            Statistic::Asc => self.asc,
            Statistic::Des => self.des,
            Statistic::Lrmax => self.lrmax,
            Statistic::Lrmin => self.lrmin,
            Statistic::Rlmax => self.rlmax,
            Statistic::Rlmin => self.rlmin,
            Statistic::Mna => self.mna,
            Statistic::Mnd => self.mnd,
        }
    }
}

pub fn stat_vector(perm: &Permutation) -> StatVector {
    StatVector::of(perm)
}
