//! Exhaustive checks of the catalog and the bijections against enumeration.
//!
//! All comparisons are exact polynomial equalities.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{map_f, map_g};
use crate::catalog::{
    self, gf_canonical_pairs, is_finite_class, specialize, source_family, GfFamily, SymmetryOp, SymmetryTransform,
};
use crate::error::CatalogError;
use crate::perm::{enumerate_class, PatternPair, Permutation};
use crate::poly::{Monomial, MultiPoly, RationalGF, Var};
use crate::stats::{StatVector, Statistic};

/// `Σ_π` of the marker monomial over a class at fixed length; free of `x`.
pub type DistributionPoly = MultiPoly;

/// The family's marker monomial for one permutation, without `x`.
pub fn marker_monomial(sv: &StatVector, family: GfFamily) -> Monomial {
    let powers: Vec<(Var, u32)> = family.stats().iter().map(|&st| (st.marker(), sv.get(st) as u32)).collect();
    Monomial::from_powers(&powers)
}

pub fn brute_distribution(pair: &PatternPair, n: usize, family: GfFamily) -> DistributionPoly {
    distribution_of(&enumerate_class(pair, n), family)
}

pub fn distribution_of(perms: &[Permutation], family: GfFamily) -> DistributionPoly {
    MultiPoly::from_terms(perms.iter().map(|p| (marker_monomial(&StatVector::of(p), family), BigInt::from(1))))
}

/// Single-statistic distribution `Σ_π w^{stat(π)}`.
pub fn brute_single(pair: &PatternPair, n: usize, stat: Statistic) -> DistributionPoly {
    MultiPoly::from_terms(
        enumerate_class(pair, n)
            .iter()
            .map(|p| (Monomial::from_powers(&[(stat.marker(), stat.eval(p) as u32)]), BigInt::from(1))),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub n: usize,
    pub expected: MultiPoly,
    pub actual: MultiPoly,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<PatternPair>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<GfFamily>,
    pub n_range: (usize, usize),
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
}

impl VerifyReport {
    fn new(
        check: impl Into<String>,
        pair: Option<PatternPair>,
        family: Option<GfFamily>,
        n_range: (usize, usize),
        first_discrepancy: Option<Discrepancy>,
    ) -> Self {
        let status = if first_discrepancy.is_some() { Status::Fail } else { Status::Pass };
        Self { check: check.into(), pair, family, n_range, status, first_discrepancy }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.check)?;
        if let Some(p) = &self.pair {
            write!(f, " {p}")?;
        }
        if let Some(fam) = self.family {
            write!(f, " {fam}")?;
        }
        write!(f, " n={}..={}", self.n_range.0, self.n_range.1)?;
        if let Some(d) = &self.first_discrepancy {
            write!(f, " first mismatch at n={}: expected {} got {}", d.n, d.expected, d.actual)?;
            if let Some(detail) = &d.detail {
                write!(f, " ({detail})")?;
            }
        }
        Ok(())
    }
}

// First n where the expansion of `gf` and the brute-force distribution differ.
fn compare_series(
    gf: &RationalGF,
    n_max: usize,
    oracle: impl Fn(usize) -> DistributionPoly,
) -> Option<Discrepancy> {
    let table = match gf.expand(n_max) {
        Ok(t) => t,
        Err(e) => {
            return Some(Discrepancy {
                n: 0,
                expected: oracle(0),
                actual: MultiPoly::zero(),
                detail: Some(e.to_string()),
            })
        }
    };
    (0..=n_max).find_map(|n| {
        let want = oracle(n);
        let got = table.coeff(n);
        (got != &want).then(|| Discrepancy { n, expected: want, actual: got.clone(), detail: None })
    })
}

/// Checks an explicit generating function against the class of `pair`.
pub fn check_gf_with(pair: &PatternPair, family: GfFamily, gf: &RationalGF, n_max: usize) -> VerifyReport {
    let disc = compare_series(gf, n_max, |n| brute_distribution(pair, n, family));
    VerifyReport::new("gf", Some(pair.clone()), Some(family), (0, n_max), disc)
}

pub fn check_gf(pair: &PatternPair, family: GfFamily, n_max: usize) -> Result<VerifyReport, CatalogError> {
    let gf = catalog::gf_for(pair, family)?;
    Ok(check_gf_with(pair, family, &gf, n_max))
}

/// `op` applied to a canonical pair: the renamed canonical function against
/// the image class.
pub fn check_symmetry(canonical: &PatternPair, op: SymmetryOp, family: GfFamily, n_max: usize) -> VerifyReport {
    let image = op.apply_pair(canonical);
    let check = format!("symmetry-{op} of {canonical}");
    let disc = match catalog::canonical_gf(canonical, family) {
        Ok(gf) => {
            let gf = SymmetryTransform::new(op, family).apply(&gf);
            compare_series(&gf, n_max, |n| brute_distribution(&image, n, family))
        }
        Err(e) => Some(Discrepancy {
            n: 0,
            expected: MultiPoly::zero(),
            actual: MultiPoly::zero(),
            detail: Some(e.to_string()),
        }),
    };
    VerifyReport::new(check, Some(image), Some(family), (0, n_max), disc)
}

/// The single-statistic form against the joint form with every other
/// marker set to 1.
pub fn check_single_stat(pair: &PatternPair, stat: Statistic, n_max: usize) -> Result<VerifyReport, CatalogError> {
    let family = source_family(stat);
    let single = catalog::single_stat_gf(pair, stat)?;
    let joint = specialize(&catalog::canonical_gf(pair, family)?, family, stat);
    let check = format!("single-{stat}");
    let disc = match (single.expand(n_max), joint.expand(n_max)) {
        (Ok(a), Ok(b)) => (0..=n_max).find_map(|n| {
            (a.coeffs[n] != b.coeffs[n]).then(|| Discrepancy {
                n,
                expected: b.coeffs[n].clone(),
                actual: a.coeffs[n].clone(),
                detail: None,
            })
        }),
        (Err(e), _) | (_, Err(e)) => Some(Discrepancy {
            n: 0,
            expected: MultiPoly::zero(),
            actual: MultiPoly::zero(),
            detail: Some(e.to_string()),
        }),
    };
    Ok(VerifyReport::new(check, Some(pair.clone()), Some(family), (0, n_max), disc))
}

/// Class sizes of all fifteen pairs against the closed-form counts.
pub fn check_counts(n_max: usize) -> VerifyReport {
    let disc = (0..=n_max).find_map(|n| {
        PatternPair::all_length_3().into_iter().find_map(|pair| {
            let want = BigInt::from(catalog::class_count(&pair, n));
            let got = BigInt::from(enumerate_class(&pair, n).len());
            (want != got).then(|| Discrepancy {
                n,
                expected: MultiPoly::term(want, Monomial::one()),
                actual: MultiPoly::term(got, Monomial::one()),
                detail: Some(pair.to_string()),
            })
        })
    });
    VerifyReport::new("counts", None, None, (0, n_max), disc)
}

fn quad(sv: &StatVector) -> [usize; 4] {
    [sv.asc, sv.des, sv.mna, sv.mnd]
}

fn swapped(sv: &StatVector) -> [usize; 4] {
    [sv.des, sv.asc, sv.mnd, sv.mna]
}

fn quad_poly(q: [usize; 4]) -> MultiPoly {
    let sv = StatVector { asc: q[0], des: q[1], mna: q[2], mnd: q[3], ..Default::default() };
    MultiPoly::term(BigInt::from(1), marker_monomial(&sv, GfFamily::G))
}

fn pointwise_failure(n: usize, src: &Permutation, image: &Permutation, want: [usize; 4], why: &str) -> Discrepancy {
    Discrepancy {
        n,
        expected: quad_poly(want),
        actual: quad_poly(quad(&StatVector::of(image))),
        detail: Some(format!("{why}: {src} -> {image}")),
    }
}

// Pointwise swap of (asc, des, mna, mnd) under `map` on one class, plus
// membership of every image in `target`.
fn swap_check(
    source: &PatternPair,
    target: &PatternPair,
    n_range: (usize, usize),
    map: impl Fn(&Permutation) -> Permutation,
) -> Option<Discrepancy> {
    for n in n_range.0..=n_range.1 {
        for p in enumerate_class(source, n) {
            let img = map(&p);
            let sv = StatVector::of(&p);
            if !img.avoids_pair(target) {
                return Some(pointwise_failure(n, &p, &img, swapped(&sv), "image outside target class"));
            }
            if quad(&StatVector::of(&img)) != swapped(&sv) {
                return Some(pointwise_failure(n, &p, &img, swapped(&sv), "statistics not swapped"));
            }
        }
    }
    None
}

fn f_checks(n_max: usize) -> VerifyReport {
    let layered: PatternPair = "231,312".parse().unwrap();
    let mut disc = swap_check(&layered, &layered, (1, n_max), |p| map_f(p).expect("class member"));
    if disc.is_none() {
        'outer: for n in 1..=n_max {
            for p in enumerate_class(&layered, n) {
                let img = map_f(&p).unwrap();
                let back = map_f(&img).unwrap();
                let why = if back != p {
                    "not an involution"
                } else if n >= 2 && img == p {
                    "fixed point"
                } else {
                    continue;
                };
                let sv = StatVector::of(&p);
                disc = Some(pointwise_failure(n, &p, &img, swapped(&sv), why));
                break 'outer;
            }
        }
    }
    VerifyReport::new("f-involution-swaps-asc-des-mna-mnd", Some(layered), Some(GfFamily::G), (1, n_max), disc)
}

fn g_checks(n_max: usize) -> VerifyReport {
    let layered: PatternPair = "231,312".parse().unwrap();
    let runs: PatternPair = "213,231".parse().unwrap();
    let mut disc = swap_check(&layered, &runs, (1, n_max), |p| map_g(p).expect("class member"));
    if disc.is_none() {
        for n in 1..=n_max {
            let class = enumerate_class(&layered, n);
            let mut images: Vec<Permutation> = class.iter().map(|p| map_g(p).unwrap()).collect();
            let fixed = class.iter().zip(&images).filter(|(a, b)| a == b).count();
            images.sort();
            images.dedup();
            let target = enumerate_class(&runs, n);
            if images != target {
                disc = Some(Discrepancy {
                    n,
                    expected: MultiPoly::constant(target.len() as i64),
                    actual: MultiPoly::constant(images.len() as i64),
                    detail: Some("g is not a bijection onto S_n(213,231)".into()),
                });
                break;
            }
            let want_fixed = n % 2;
            if fixed != want_fixed {
                disc = Some(Discrepancy {
                    n,
                    expected: MultiPoly::constant(want_fixed as i64),
                    actual: MultiPoly::constant(fixed as i64),
                    detail: Some("fixed-point count of g".into()),
                });
                break;
            }
        }
    }
    VerifyReport::new("g-bijection-swaps-asc-des-mna-mnd", Some(layered), Some(GfFamily::G), (1, n_max), disc)
}

fn g_after_f_checks(n_max: usize) -> VerifyReport {
    let layered: PatternPair = "231,312".parse().unwrap();
    let runs: PatternPair = "213,231".parse().unwrap();
    let mut disc = None;
    'outer: for n in 1..=n_max {
        for p in enumerate_class(&layered, n) {
            let img = map_g(&map_f(&p).unwrap()).unwrap();
            let want = quad(&StatVector::of(&p));
            if quad(&StatVector::of(&img)) != want || !img.avoids_pair(&runs) {
                disc = Some(pointwise_failure(n, &p, &img, want, "g after f changed the quadruple"));
                break 'outer;
            }
        }
        let a = brute_distribution(&layered, n, GfFamily::G);
        let b = brute_distribution(&runs, n, GfFamily::G);
        if a != b {
            disc = Some(Discrepancy { n, expected: a, actual: b, detail: Some("class distributions differ".into()) });
            break;
        }
    }
    VerifyReport::new("g-after-f-preserves-asc-des-mna-mnd", Some(runs), Some(GfFamily::G), (1, n_max), disc)
}

/// One report per equidistribution claim: `f` on the layered class, the
/// complement on `{213, 231}`, the reverse on `{213, 312}`, `g` across the
/// two structured classes, and `g ∘ f`.
pub fn check_bijections(n_max: usize) -> Vec<VerifyReport> {
    let runs: PatternPair = "213,231".parse().unwrap();
    let wedge: PatternPair = "213,312".parse().unwrap();
    let complement = VerifyReport::new(
        "complement-swaps-asc-des-mna-mnd",
        Some(runs.clone()),
        Some(GfFamily::G),
        (1, n_max),
        swap_check(&runs, &runs, (1, n_max), Permutation::complement),
    );
    let reverse = VerifyReport::new(
        "reverse-swaps-asc-des-mna-mnd",
        Some(wedge.clone()),
        Some(GfFamily::G),
        (1, n_max),
        swap_check(&wedge, &wedge, (1, n_max), Permutation::reverse),
    );
    vec![f_checks(n_max), complement, reverse, g_checks(n_max), g_after_f_checks(n_max)]
}

/// Which part of the suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Counts,
    G,
    F,
    Single,
    Symmetry,
    Bijections,
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Scope::All,
            "counts" => Scope::Counts,
            "g" | "G" => Scope::G,
            "f" | "F" => Scope::F,
            "single" => Scope::Single,
            "symmetry" => Scope::Symmetry,
            "bijections" => Scope::Bijections,
            _ => return Err(format!("unknown scope {s:?}")),
        })
    }
}

/// Default orders: counts 12, `G` 10, `F` 9, single-statistic forms 12,
/// bijections 12.
pub const COUNTS_N: usize = 12;
pub const G_N: usize = 10;
pub const F_N: usize = 9;
pub const SINGLE_N: usize = 12;
pub const BIJECTION_N: usize = 12;

enum Job {
    Counts(usize),
    Gf(PatternPair, GfFamily, usize),
    Single(PatternPair, Statistic, usize),
    Symmetry(PatternPair, SymmetryOp, GfFamily, usize),
    Bijections(usize),
}

impl Job {
    fn run(&self) -> Vec<VerifyReport> {
        match self {
            Job::Counts(n) => vec![check_counts(*n)],
            Job::Gf(pair, fam, n) => vec![check_gf(pair, *fam, *n).expect("non-finite pair")],
            Job::Single(pair, stat, n) => vec![check_single_stat(pair, *stat, *n).expect("canonical pair")],
            Job::Symmetry(pair, op, fam, n) => vec![check_symmetry(pair, *op, *fam, *n)],
            Job::Bijections(n) => check_bijections(*n),
        }
    }
}

/// Runs the selected checks in parallel; reports come back in a fixed
/// order. `n_max` overrides every default order when given.
pub fn run_suite(scope: Scope, n_max: Option<usize>) -> Vec<VerifyReport> {
    let pick = |default: usize| n_max.unwrap_or(default);
    let pairs: Vec<PatternPair> = PatternPair::all_length_3().into_iter().filter(|p| !is_finite_class(p)).collect();
    let mut jobs = Vec::new();
    if matches!(scope, Scope::All | Scope::Counts) {
        jobs.push(Job::Counts(pick(COUNTS_N)));
    }
    for (fam, default, sc) in [(GfFamily::G, G_N, Scope::G), (GfFamily::F, F_N, Scope::F)] {
        if scope == Scope::All || scope == sc {
            jobs.extend(pairs.iter().map(|p| Job::Gf(p.clone(), fam, pick(default))));
        }
    }
    if matches!(scope, Scope::All | Scope::Single) {
        for p in gf_canonical_pairs() {
            jobs.extend(Statistic::ALL.iter().map(|&st| Job::Single(p.clone(), st, pick(SINGLE_N))));
        }
    }
    if matches!(scope, Scope::All | Scope::Symmetry) {
        for p in gf_canonical_pairs() {
            for op in [SymmetryOp::R, SymmetryOp::C, SymmetryOp::Rc] {
                jobs.push(Job::Symmetry(p.clone(), op, GfFamily::G, pick(G_N)));
                jobs.push(Job::Symmetry(p.clone(), op, GfFamily::F, pick(F_N)));
            }
        }
    }
    if matches!(scope, Scope::All | Scope::Bijections) {
        jobs.push(Job::Bijections(pick(BIJECTION_N).max(1)));
    }
    jobs.par_iter().map(Job::run).collect::<Vec<_>>().into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(s: &str) -> PatternPair {
        s.parse().unwrap()
    }

    #[test]
    fn distribution_examples() {
        assert_eq!(
            brute_distribution(&pair("231,312"), 3, GfFamily::G),
            MultiPoly::parse("p^2 y + 2 p q y z + q^2 z").unwrap()
        );
        for p in PatternPair::all_length_3() {
            for fam in GfFamily::BOTH {
                assert_eq!(brute_distribution(&p, 0, fam), MultiPoly::one());
            }
        }
        assert!(brute_distribution(&pair("123,321"), 5, GfFamily::G).is_zero());
    }

    #[test]
    fn size_two_quadruples() {
        let layered = brute_distribution(&pair("231,312"), 2, GfFamily::G);
        let runs = brute_distribution(&pair("213,231"), 2, GfFamily::G);
        assert_eq!(layered, MultiPoly::parse("p y + q z").unwrap());
        assert_eq!(runs, layered);
    }

    #[test]
    fn finite_class_is_rejected() {
        assert!(check_gf(&pair("123,321"), GfFamily::G, 4).is_err());
    }

    #[test]
    fn small_gf_checks_pass() {
        assert!(check_gf(&pair("123,132"), GfFamily::F, 6).unwrap().passed());
        assert!(check_gf(&pair("213,231"), GfFamily::G, 8).unwrap().passed());
        assert!(check_counts(8).passed());
        for r in check_bijections(8) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn mutation_is_caught_at_smallest_n() {
        let p = pair("231,312");
        let mut gf = catalog::gf_for(&p, GfFamily::G).unwrap();
        // Flip the sign of the `p q x^3 y z` numerator term.
        let mono = Monomial::from_powers(&[(Var::P, 1), (Var::Q, 1), (Var::X, 3), (Var::Y, 1), (Var::Z, 1)]);
        let c = gf.num.coeff(&mono);
        assert_eq!(c, BigInt::from(1));
        gf.num.add_term(mono, -2 * c);
        let r = check_gf_with(&p, GfFamily::G, &gf, 6);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.first_discrepancy.unwrap().n, 3);
    }

    #[test]
    fn report_json_shape() {
        let r = check_counts(3);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "pass");
        assert_eq!(v["check"], "counts");
        assert!(v["first_discrepancy"].is_null());
    }
}
