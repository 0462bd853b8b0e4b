//! Closed-form generating functions for the five canonical pairs, the
//! single-statistic specializations, the symmetry recipes that carry them to
//! all fifteen pairs, and the class counts.
//!
//! Every formula is stored as printed and parsed once into [`MultiPoly`]
//! values. Where a printed formula disagrees with exhaustive enumeration the
//! entry carries a [`Correction`] that records the adjustment applied.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::CatalogError;
use crate::perm::{Pattern, PatternPair};
use crate::poly::{MultiPoly, RationalGF, Var, NVARS};
use crate::stats::Statistic;

/// `F` tracks `(asc, des, lrmax, rlmax, lrmin, rlmin)` with
/// `(p, q, u, v, s, t)`; `G` tracks `(asc, des, mna, mnd)` with `(p, q, y, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GfFamily {
    F,
    G,
}

impl GfFamily {
    pub const BOTH: [GfFamily; 2] = [GfFamily::F, GfFamily::G];

    /// Variables in the order of the function's argument list.
    pub fn vars(self) -> &'static [Var] {
        match self {
            GfFamily::F => &[Var::X, Var::P, Var::Q, Var::U, Var::V, Var::S, Var::T],
            GfFamily::G => &[Var::X, Var::P, Var::Q, Var::Y, Var::Z],
        }
    }

    /// Statistics in argument order (after `x`).
    pub fn stats(self) -> &'static [Statistic] {
        match self {
            GfFamily::F => &[
                Statistic::Asc,
                Statistic::Des,
                Statistic::Lrmax,
                Statistic::Rlmax,
                Statistic::Lrmin,
                Statistic::Rlmin,
            ],
            GfFamily::G => &[Statistic::Asc, Statistic::Des, Statistic::Mna, Statistic::Mnd],
        }
    }

    pub fn markers(self) -> Vec<Var> {
        self.stats().iter().map(|s| s.marker()).collect()
    }
}

impl fmt::Display for GfFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GfFamily::F => "F",
            GfFamily::G => "G",
        })
    }
}

impl FromStr for GfFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "F" | "f" => Ok(GfFamily::F),
            "G" | "g" => Ok(GfFamily::G),
            _ => Err(format!("unknown family {s:?}, expected F or G")),
        }
    }
}

impl Serialize for GfFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A symmetry of the containment order applied to both patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryOp {
    Identity,
    R,
    C,
    Rc,
}

impl SymmetryOp {
    pub const ALL: [SymmetryOp; 4] = [SymmetryOp::Identity, SymmetryOp::R, SymmetryOp::C, SymmetryOp::Rc];

    pub fn apply(self, pattern: &Pattern) -> Pattern {
        match self {
            SymmetryOp::Identity => pattern.clone(),
            SymmetryOp::R => pattern.reverse(),
            SymmetryOp::C => pattern.complement(),
            SymmetryOp::Rc => pattern.reverse().complement(),
        }
    }

    pub fn apply_pair(self, pair: &PatternPair) -> PatternPair {
        pair.map(|p| self.apply(p))
    }

    /// Arguments substituted into the canonical function, in the family's
    /// argument order.
    fn recipe_row(self, family: GfFamily) -> &'static [Var] {
        use Var::*;
        match (family, self) {
            (GfFamily::F, SymmetryOp::Identity) => &[X, P, Q, U, V, S, T],
            (GfFamily::F, SymmetryOp::R) => &[X, Q, P, V, U, T, S],
            (GfFamily::F, SymmetryOp::C) => &[X, Q, P, S, T, U, V],
            (GfFamily::F, SymmetryOp::Rc) => &[X, P, Q, T, S, V, U],
            (GfFamily::G, SymmetryOp::Identity | SymmetryOp::Rc) => &[X, P, Q, Y, Z],
            (GfFamily::G, SymmetryOp::R | SymmetryOp::C) => &[X, Q, P, Z, Y],
        }
    }
}

impl fmt::Display for SymmetryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryOp::Identity => "identity",
            SymmetryOp::R => "r",
            SymmetryOp::C => "c",
            SymmetryOp::Rc => "rc",
        })
    }
}

/// An op together with the variable renaming it induces on one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryTransform {
    pub op: SymmetryOp,
    pub family: GfFamily,
    /// `recipe[v.index()]` is the variable that replaces `v`.
    #[serde(skip)]
    pub recipe: [Var; NVARS],
}

impl SymmetryTransform {
    pub fn new(op: SymmetryOp, family: GfFamily) -> Self {
        let mut recipe = Var::ALL;
        for (&slot, &arg) in family.vars().iter().zip(op.recipe_row(family)) {
            recipe[slot.index()] = arg;
        }
        Self { op, family, recipe }
    }

    /// The generating function of the image class.
    pub fn apply(&self, gf: &RationalGF) -> RationalGF {
        gf.rename(&self.recipe)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalReduction {
    pub canonical_pair: PatternPair,
    pub transform: SymmetryTransform,
}

/// The first pair of each counting group, in order; the last one is finite.
pub fn canonical_pairs() -> Vec<PatternPair> {
    ["123,132", "132,321", "231,312", "213,231", "213,312", "123,321"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

/// The pairs with generating functions in the catalog.
pub fn gf_canonical_pairs() -> Vec<PatternPair> {
    canonical_pairs().into_iter().take(5).collect()
}

pub fn is_finite_class(pair: &PatternPair) -> bool {
    pair.to_string() == "123,321"
}

/// Finds the canonical pair and op with `op(canonical) = pair`. Canonical
/// pairs are tried in order and ops in the order identity, r, c, rc.
pub fn symmetry_reduce(pair: &PatternPair, family: GfFamily) -> CanonicalReduction {
    for canon in canonical_pairs() {
        for op in SymmetryOp::ALL {
            if &op.apply_pair(&canon) == pair {
                return CanonicalReduction { canonical_pair: canon, transform: SymmetryTransform::new(op, family) };
            }
        }
    }
    unreachable!("every pair of distinct length-3 patterns reduces to a canonical pair")
}

/// Adjustment applied to a printed formula so that it matches enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Correction {
    None,
    /// Printed form is the series minus its constant 1: `num += den`.
    AddOne,
    /// Printed form is `(series − 1)/x`: `num = den + x·num`.
    ShiftAddOne,
}

impl Correction {
    fn apply(self, gf: RationalGF) -> RationalGF {
        match self {
            Correction::None => gf,
            Correction::AddOne => RationalGF::new(&gf.num + &gf.den, gf.den),
            Correction::ShiftAddOne => RationalGF::new(&gf.den + &gf.num.shift(Var::X, 1), gf.den),
        }
    }
}

enum Printed {
    Quotient { num: &'static str, den: &'static str },
    /// A sum of fractions, each with its denominator given as factors.
    Terms(&'static [(&'static str, &'static [&'static str])]),
}

struct RawEntry {
    pair: &'static str,
    family: GfFamily,
    printed: Printed,
    correction: Correction,
}

const fn quot(num: &'static str, den: &'static str) -> Printed {
    Printed::Quotient { num, den }
}

// Numerator/denominator text follows the printed closed forms term for term.
const JOINT: &[RawEntry] = &[
    // "1 − 2 q² x² z − p q x² y z − 2 p q² x³ y z + q⁴ x⁴ z² − p q³ x⁴ y z²"
    RawEntry {
        pair: "123,132",
        family: GfFamily::G,
        printed: quot(
            "1 + x + p x^2 y + q x^2 z - 2 q^2 x^2 z - q^2 x^3 z - p q x^2 y z + 2 p q x^3 y z - 2 p q^2 x^3 y z \
             - q^3 x^4 z^2 + q^4 x^4 z^2 + p q^2 x^4 y z^2 - p q^3 x^4 y z^2",
            "1 - 2 q^2 x^2 z - p q x^2 y z - 2 p q^2 x^3 y z + q^4 x^4 z^2 - p q^3 x^4 y z^2",
        ),
        correction: Correction::None,
    },
    // "A/(1 − p² x² y)³"
    RawEntry {
        pair: "132,321",
        family: GfFamily::G,
        printed: quot(
            "1 + x + p x^2 y - 3 p^2 x^2 y - 2 p^2 x^3 y - 2 p^3 x^4 y^2 + 3 p^4 x^4 y^2 + p^4 x^5 y^2 \
             + p^5 x^6 y^3 - p^6 x^6 y^3 + q x^2 z + 3 p q x^3 y z + p^2 q x^4 y z + 2 p^2 q x^4 y^2 z + p^3 q x^5 y^2 z",
            "(1 - p^2 x^2 y)^3",
        ),
        correction: Correction::None,
    },
    // "1 − p² x² y − q² x² z − p q x² y z − p² q x³ y z − p q² x³ y z"
    RawEntry {
        pair: "231,312",
        family: GfFamily::G,
        printed: quot(
            "1 + x + p x^2 y - p^2 x^2 y + q x^2 z - q^2 x^2 z - p q x^2 y z + p q x^3 y z - p^2 q x^3 y z - p q^2 x^3 y z",
            "1 - p^2 x^2 y - q^2 x^2 z - p q x^2 y z - p^2 q x^3 y z - p q^2 x^3 y z",
        ),
        correction: Correction::None,
    },
    // Same printed form as (231,312).
    RawEntry {
        pair: "213,231",
        family: GfFamily::G,
        printed: quot(
            "1 + x + p x^2 y - p^2 x^2 y + q x^2 z - q^2 x^2 z - p q x^2 y z + p q x^3 y z - p^2 q x^3 y z - p q^2 x^3 y z",
            "1 - p^2 x^2 y - q^2 x^2 z - p q x^2 y z - p^2 q x^3 y z - p q^2 x^3 y z",
        ),
        correction: Correction::None,
    },
    // "p⁴ x⁴ y² + (−1 + q² x² z)² − 2 p² x² y (1 + q² x² z)". As printed,
    // the x^n coefficient is the distribution at length n+1.
    RawEntry {
        pair: "213,312",
        family: GfFamily::G,
        printed: quot(
            "1 - p^3 x^3 y^2 + q x z - q^2 x^2 z - q^3 x^3 z^2 + p^2 x^2 y (-1 + q x z) + p x y (1 + 2 q x z + q^2 x^2 z)",
            "p^4 x^4 y^2 + (-1 + q^2 x^2 z)^2 - 2 p^2 x^2 y (1 + q^2 x^2 z)",
        ),
        correction: Correction::ShiftAddOne,
    },
    // "1 + q² s² v x² − q s x (1 + v + p v x)"
    RawEntry {
        pair: "123,132",
        family: GfFamily::F,
        printed: quot(
            "1 + q^2 s^2 v x^2 + s t u v x (1 + p t u x) \
             - q s x (1 + p u v^2 x^2 s t (-1 + t)(-1 + u) + v (1 + p x + s t u x))",
            "1 + q^2 s^2 v x^2 - q s x (1 + v + p v x)",
        ),
        correction: Correction::None,
    },
    // "(1 − p t x)(1 − p u x)(1 − p t u x)". The printed numerator is one
    // closing parenthesis short; it closes the `− p x (…)` group at the end.
    RawEntry {
        pair: "132,321",
        family: GfFamily::F,
        printed: quot(
            "1 + s t u v x + q s^2 t u v^2 x^2 - p^3 t^2 u^2 x^3 + p^2 t u x^2 (1 + t + u + s t u v x) \
             - p x (u + s t^2 u v x (1 + q s u (-1 + v) x) + t (1 + u + s u^2 v x))",
            "(1 - p t x)(1 - p u x)(1 - p t u x)",
        ),
        correction: Correction::None,
    },
    // "(1 − q s x)(1 − q x − p t u x)(1 − q v x)(1 − q s v x)"
    RawEntry {
        pair: "231,312",
        family: GfFamily::F,
        printed: quot(
            "1 - p t u x + s t u v x + q^4 s^2 v^2 x^4 + q^3 s v x^3 (-1 - v + s (-1 + v (-1 + (-1 + p) t u x))) \
             - q x (1 + v - p t u v x + s^2 t u v x (1 + p t u (-1 + v) x) + s (1 + v - p t u x - (-1 + p) t u v x \
             + p t^2 u^2 v x^2 + t u v^2 x (1 - p t u x))) \
             + q^2 x^2 (v + s^2 v (1 + t u (1 - p + v) x) + s (1 + v^2 (1 - (-1 + p) t u x) + v (2 - p t u x)))",
            "(1 - q s x)(1 - q x - p t u x)(1 - q v x)(1 - q s v x)",
        ),
        correction: Correction::None,
    },
    // "(1 − p t u x)(1 − p t x − q v x)(1 − q s v x)"
    RawEntry {
        pair: "213,231",
        family: GfFamily::F,
        printed: quot(
            "1 - p t x - p t u x - q v x - q s v x + s t u v x + p^2 t^2 u x^2 + p q s t v x^2 + p q t u v x^2 \
             + p q s t u v x^2 - p s t^2 u v x^2 + q^2 s v^2 x^2 - q s t u v^2 x^2 - p^2 q s t^2 u v x^3 \
             - p q^2 s t u v^2 x^3 + p q s^2 t^2 u v^2 x^3 + p q s t^2 u^2 v^2 x^3 - p q s^2 t^2 u^2 v^2 x^3",
            "(1 - p t u x)(1 - p t x - q v x)(1 - q s v x)",
        ),
        correction: Correction::None,
    },
    // "1 + xuvst + (p q s t² u² v² x³)/…", printed as a sum of fractions.
    RawEntry {
        pair: "213,312",
        family: GfFamily::F,
        printed: Printed::Terms(&[
            ("1 + x u v s t", &[]),
            ("p q s t^2 u^2 v^2 x^3", &["-1 + p t u x", "-1 + p u x + q v x"]),
            ("q s^2 t u v^2 x^2", &["1 - q s v x"]),
            ("p s t^2 u^2 v x^2", &["1 - p t u x"]),
            ("p q s^2 t u^2 v^2 x^3", &["-1 + p u x + q v x", "-1 + q s v x"]),
        ]),
        correction: Correction::None,
    },
];

struct RawSingle {
    pair: &'static str,
    stat: Statistic,
    num: &'static str,
    den: &'static str,
    correction: Correction,
}

const fn single(pair: &'static str, stat: Statistic, num: &'static str, den: &'static str) -> RawSingle {
    RawSingle { pair, stat, num, den, correction: Correction::None }
}

const SINGLE: &[RawSingle] = &[
    single("123,132", Statistic::Asc, "1 - x", "1 - 2 x + x^2 - p x^2"),
    single(
        "123,132",
        Statistic::Des,
        "1 + x - 2 q x + x^2 - 2 q x^2 + q^2 x^2",
        "1 - 2 q x - q x^2 + q^2 x^2",
    ),
    single("123,132", Statistic::Mna, "1 - x", "1 - 2 x + x^2 - x^2 y"),
    single("123,132", Statistic::Mnd, "1 + x + x^2 - 2 x^2 z - x^3 z", "1 - 3 x^2 z - 2 x^3 z"),
    single("123,132", Statistic::Lrmax, "1 - 2 x + u x - u x^2 + u^2 x^2", "1 - 2 x"),
    single("123,132", Statistic::Rlmax, "1 - x", "1 - x - v x"),
    single("123,132", Statistic::Lrmin, "1 - s x", "1 - 2 s x - s x^2 + s^2 x^2"),
    single("123,132", Statistic::Rlmin, "1 - 2 x + t x - t x^2 + t^2 x^2", "1 - 2 x"),
    single(
        "132,321",
        Statistic::Asc,
        "1 + x - 3 p x + x^2 - 2 p x^2 + 3 p^2 x^2 + p^2 x^3 - p^3 x^3",
        "(1 - p x)^3",
    ),
    single("132,321", Statistic::Des, "1 - 2 x + x^2 + q x^2", "(1 - x)^3"),
    single(
        "132,321",
        Statistic::Mna,
        "1 + x + x^2 - 2 x^2 y + x^3 y + x^4 y + 3 x^4 y^2 + 2 x^5 y^2",
        "(1 - x^2 y)^3",
    ),
    single("132,321", Statistic::Mnd, "1 - 2 x + x^2 + x^2 z", "(1 - x)^3"),
    single("132,321", Statistic::Lrmax, "1 - x - u x + 2 u x^2", "(1 - x)(1 - u x)^2"),
    single(
        "132,321",
        Statistic::Rlmax,
        "1 - 3 x + v x + 3 x^2 - 2 v x^2 + v^2 x^2 - x^3 + 2 v x^3 - v^2 x^3",
        "(1 - x)^3",
    ),
    single(
        "132,321",
        Statistic::Lrmin,
        "1 - 3 x + s x + 3 x^2 - 2 s x^2 + s^2 x^2 - x^3 + s x^3",
        "(1 - x)^3",
    ),
    single("132,321", Statistic::Rlmin, "1 - x - t x + 2 t x^2", "(1 - x)(1 - t x)^2"),
    single("231,312", Statistic::Asc, "1 - p x", "1 - x - p x"),
    single("231,312", Statistic::Des, "1 - q x", "1 - x - q x"),
    single("231,312", Statistic::Mna, "1 - x^2 y", "1 - x - 2 x^2 y"),
    single("231,312", Statistic::Mnd, "1 - x^2 z", "1 - x - 2 x^2 z"),
    single("231,312", Statistic::Lrmax, "1 - x", "1 - x - u x"),
    single("231,312", Statistic::Rlmax, "1 - 2 x + v x^2", "(1 - 2 x)(1 - v x)"),
    single("231,312", Statistic::Lrmin, "1 - 2 x + s x^2", "(1 - 2 x)(1 - s x)"),
    single("231,312", Statistic::Rlmin, "1 - x", "1 - x - t x"),
    single("213,231", Statistic::Asc, "1 - p x", "1 - x - p x"),
    single("213,231", Statistic::Des, "1 - q x", "1 - x - q x"),
    single("213,231", Statistic::Mna, "1 - x^2 y", "1 - x - 2 x^2 y"),
    single("213,231", Statistic::Mnd, "1 - x^2 z", "1 - x - 2 x^2 z"),
    single("213,231", Statistic::Lrmax, "1 - 2 x + u x^2", "(1 - 2 x)(1 - u x)"),
    single("213,231", Statistic::Rlmax, "1 - x", "1 - x - v x"),
    single("213,231", Statistic::Lrmin, "1 - 2 x + s x^2", "(1 - 2 x)(1 - s x)"),
    single("213,231", Statistic::Rlmin, "1 - x", "1 - x - t x"),
    single("213,312", Statistic::Asc, "1 - p x", "1 - x - p x"),
    single("213,312", Statistic::Des, "1 - q x", "1 - x - q x"),
    // "x − x² + x² y": printed without the empty permutation's 1.
    RawSingle {
        pair: "213,312",
        stat: Statistic::Mna,
        num: "x - x^2 + x^2 y",
        den: "1 - 2 x + x^2 - x^2 y",
        correction: Correction::AddOne,
    },
    RawSingle {
        pair: "213,312",
        stat: Statistic::Mnd,
        num: "x - x^2 + x^2 z",
        den: "1 - 2 x + x^2 - x^2 z",
        correction: Correction::AddOne,
    },
    single("213,312", Statistic::Lrmax, "1 - x", "1 - x - u x"),
    single("213,312", Statistic::Rlmax, "1 - x", "1 - x - v x"),
    single("213,312", Statistic::Lrmin, "1 - 2 x + s x^2", "(1 - 2 x)(1 - s x)"),
    single("213,312", Statistic::Rlmin, "1 - 2 x + t x^2", "(1 - 2 x)(1 - t x)"),
];

/// One stored formula: the printed text, its parsed form and the
/// generating function actually used after any correction.
#[derive(Clone, Debug, Serialize)]
pub struct GfEntry {
    pub pair: PatternPair,
    pub family: GfFamily,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stat: Option<Statistic>,
    pub correction: Correction,
    pub oracle_corrected: bool,
    pub printed: RationalGF,
    pub gf: RationalGF,
}

pub struct Catalog {
    joint: BTreeMap<(PatternPair, GfFamily), GfEntry>,
    single: BTreeMap<(PatternPair, Statistic), GfEntry>,
}

fn parse(src: &str) -> MultiPoly {
    MultiPoly::parse(src).unwrap_or_else(|e| panic!("catalog formula {src:?}: {e}"))
}

// Flips a factor with constant term −1 to constant term +1; returns the
// normalized factor and whether it was negated.
fn normalize_factor(f: MultiPoly) -> (MultiPoly, bool) {
    if f.constant_term() == num_bigint::BigInt::from(-1) {
        (-f, true)
    } else {
        (f, false)
    }
}

/// Combines `Σ num_i / Π factors_i` over the least common multiple of the
/// factor lists, treating factors that differ only in sign as equal.
fn combine_terms(terms: &[(&str, &[&str])]) -> RationalGF {
    let mut parsed = Vec::new();
    let mut common: Vec<(MultiPoly, usize)> = Vec::new();
    for (num, factors) in terms {
        let mut num = parse(num);
        let mut counts: Vec<(MultiPoly, usize)> = Vec::new();
        for f in factors.iter() {
            let (f, negated) = normalize_factor(parse(f));
            if negated {
                num = -num;
            }
            match counts.iter_mut().find(|(g, _)| *g == f) {
                Some((_, k)) => *k += 1,
                None => counts.push((f, 1)),
            }
        }
        for (f, k) in &counts {
            match common.iter_mut().find(|(g, _)| g == f) {
                Some((_, m)) => *m = (*m).max(*k),
                None => common.push((f.clone(), *k)),
            }
        }
        parsed.push((num, counts));
    }
    let mut total = MultiPoly::zero();
    for (num, counts) in parsed {
        let mut t = num;
        for (f, m) in &common {
            let have = counts.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
            t = &t * &f.pow((*m - have) as u32);
        }
        total += &t;
    }
    let den = common.iter().fold(MultiPoly::one(), |acc, (f, m)| &acc * &f.pow(*m as u32));
    RationalGF::new(total, den)
}

impl Catalog {
    fn build() -> Self {
        let mut joint = BTreeMap::new();
        for raw in JOINT {
            let pair: PatternPair = raw.pair.parse().unwrap();
            let printed = match &raw.printed {
                Printed::Quotient { num, den } => RationalGF::new(parse(num), parse(den)),
                Printed::Terms(terms) => combine_terms(terms),
            };
            let gf = raw.correction.apply(printed.clone());
            let entry = GfEntry {
                pair: pair.clone(),
                family: raw.family,
                stat: None,
                correction: raw.correction,
                oracle_corrected: raw.correction != Correction::None,
                printed,
                gf,
            };
            joint.insert((pair, raw.family), entry);
        }
        let mut single = BTreeMap::new();
        for raw in SINGLE {
            let pair: PatternPair = raw.pair.parse().unwrap();
            let printed = RationalGF::new(parse(raw.num), parse(raw.den));
            let gf = raw.correction.apply(printed.clone());
            let entry = GfEntry {
                pair: pair.clone(),
                family: source_family(raw.stat),
                stat: Some(raw.stat),
                correction: raw.correction,
                oracle_corrected: raw.correction != Correction::None,
                printed,
                gf,
            };
            single.insert((pair, raw.stat), entry);
        }
        Self { joint, single }
    }

    /// The process-wide catalog, parsed on first use.
    pub fn get() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(Catalog::build)
    }

    pub fn joint_entries(&self) -> impl Iterator<Item = &GfEntry> {
        self.joint.values()
    }

    pub fn single_entries(&self) -> impl Iterator<Item = &GfEntry> {
        self.single.values()
    }

    pub fn joint_entry(&self, pair: &PatternPair, family: GfFamily) -> Result<&GfEntry, CatalogError> {
        if is_finite_class(pair) {
            return Err(CatalogError::FiniteClass(pair.to_string()));
        }
        self.joint
            .get(&(pair.clone(), family))
            .ok_or_else(|| CatalogError::NotCanonical(pair.to_string()))
    }

    pub fn single_entry(&self, pair: &PatternPair, stat: Statistic) -> Result<&GfEntry, CatalogError> {
        if is_finite_class(pair) {
            return Err(CatalogError::FiniteClass(pair.to_string()));
        }
        self.single
            .get(&(pair.clone(), stat))
            .ok_or_else(|| CatalogError::NotCanonical(pair.to_string()))
    }
}

/// The joint family a single-statistic form specializes: `G` for
/// asc, des, mna, mnd and `F` for the four record statistics.
pub fn source_family(stat: Statistic) -> GfFamily {
    match stat {
        Statistic::Asc | Statistic::Des | Statistic::Mna | Statistic::Mnd => GfFamily::G,
        _ => GfFamily::F,
    }
}

/// Sets every marker of `family` other than `stat`'s to 1.
pub fn specialize(gf: &RationalGF, family: GfFamily, stat: Statistic) -> RationalGF {
    let others: Vec<Var> = family.markers().into_iter().filter(|&v| v != stat.marker()).collect();
    gf.substitute_ones(&others)
}

pub fn canonical_gf(pair: &PatternPair, family: GfFamily) -> Result<RationalGF, CatalogError> {
    Catalog::get().joint_entry(pair, family).map(|e| e.gf.clone())
}

pub fn single_stat_gf(pair: &PatternPair, stat: Statistic) -> Result<RationalGF, CatalogError> {
    Catalog::get().single_entry(pair, stat).map(|e| e.gf.clone())
}

/// The generating function of any pair other than `{123, 321}`.
pub fn gf_for(pair: &PatternPair, family: GfFamily) -> Result<RationalGF, CatalogError> {
    if is_finite_class(pair) {
        return Err(CatalogError::FiniteClass(pair.to_string()));
    }
    let red = symmetry_reduce(pair, family);
    let canon = canonical_gf(&red.canonical_pair, family)?;
    Ok(red.transform.apply(&canon))
}

/// Closed-form class sizes, grouped as in the classical enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountFormula {
    /// `2^{n−1}`
    PowerOfTwo,
    /// `1 + C(n, 2)`
    OnePlusBinomial,
    /// `n` for `n ≤ 2`, 4 for `n ∈ {3, 4}`, 0 beyond.
    Finite,
}

const COUNT_GROUPS: &[(CountFormula, &[&str])] = &[
    (CountFormula::PowerOfTwo, &["123,132", "123,213", "321,231", "321,312"]),
    (CountFormula::PowerOfTwo, &["231,312", "132,213"]),
    (CountFormula::PowerOfTwo, &["213,312", "132,231"]),
    (CountFormula::PowerOfTwo, &["213,231", "132,312"]),
    (CountFormula::OnePlusBinomial, &["132,321", "123,231", "123,312", "213,321"]),
    (CountFormula::Finite, &["123,321"]),
];

pub fn count_formula(pair: &PatternPair) -> CountFormula {
    COUNT_GROUPS
        .iter()
        .find(|(_, pairs)| pairs.iter().any(|s| s.parse::<PatternPair>().unwrap() == *pair))
        .map(|(f, _)| *f)
        .expect("all 15 pairs are listed")
}

/// `|S_n(τ, ρ)|`; 1 for `n = 0`.
pub fn class_count(pair: &PatternPair, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    match count_formula(pair) {
        CountFormula::PowerOfTwo => BigUint::one() << (n - 1),
        CountFormula::OnePlusBinomial => BigUint::one() + BigUint::from(n) * BigUint::from(n - 1) / 2u32,
        CountFormula::Finite => BigUint::from(match n {
            1 | 2 => n,
            3 | 4 => 4,
            _ => 0,
        }),
    }
}

/// Every stored formula, printed and corrected, for audit.
pub fn catalog_dump() -> serde_json::Value {
    let cat = Catalog::get();
    serde_json::json!({
        "joint": cat.joint_entries().collect::<Vec<_>>(),
        "single": cat.single_entries().collect::<Vec<_>>(),
    })
}
