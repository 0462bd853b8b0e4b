use num_bigint::BigInt;
use permstat::bijections::{layered_compose, layered_decompose, map_f, map_g, runs_compose_213_231};
use permstat::catalog::{self, GfFamily, SymmetryOp};
use permstat::poly::{Monomial, NVARS};
use permstat::{stat_vector, MultiPoly, PatternPair, Permutation, RationalGF, Var};
use proptest::prelude::*;

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    let term = (prop::array::uniform9(0u32..3), -5i64..=5);
    prop::collection::vec(term, 0..6).prop_map(|ts| {
        MultiPoly::from_terms(ts.into_iter().map(|(e, c)| (Monomial(e), BigInt::from(c))))
    })
}

fn arb_point() -> impl Strategy<Value = [i64; NVARS]> {
    prop::array::uniform9(-3i64..=3)
}

fn arb_composition(max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=4, 1..=max)
}

proptest! {
    #[test]
    fn ring_laws_hold_pointwise(a in arb_poly(), b in arb_poly(), c in arb_poly(), pt in arb_point()) {
        let ev = |p: &MultiPoly| p.eval(&pt);
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(&(&a * &b), &(&b * &a));
        prop_assert_eq!(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_round_trips(a in arb_poly()) {
        prop_assert_eq!(MultiPoly::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn expansion_inverts_multiplication(num in arb_poly(), d in arb_poly()) {
        // den = 1 + x·d has unit constant slice; (num/den)·den = num to any order.
        let den = &MultiPoly::one() + &d.shift(Var::X, 1);
        let gf = RationalGF::new(num.clone(), den.clone());
        let n = 6;
        let series = gf.expand(n).unwrap().to_poly();
        prop_assert_eq!((&series * &den).truncate_x(n as u32), num.truncate_x(n as u32));
    }

    #[test]
    fn symmetries_are_involutions(p in arb_perm(9)) {
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!(p.complement().complement(), p.clone());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.reverse().complement(), p.reverse_complement());
    }

    #[test]
    fn statistics_under_symmetries(p in arb_perm(10)) {
        let (v, r, c) = (stat_vector(&p), stat_vector(&p.reverse()), stat_vector(&p.complement()));
        prop_assert_eq!((v.asc, v.des, v.mna, v.mnd), (r.des, r.asc, r.mnd, r.mna));
        prop_assert_eq!((v.asc, v.des, v.mna, v.mnd), (c.des, c.asc, c.mnd, c.mna));
        prop_assert_eq!((v.lrmax, v.rlmax, v.lrmin, v.rlmin), (r.rlmax, r.lrmax, r.rlmin, r.lrmin));
        prop_assert_eq!((v.lrmax, v.rlmax, v.lrmin, v.rlmin), (c.lrmin, c.rlmin, c.lrmax, c.rlmax));
    }

    #[test]
    fn f_is_an_involution_swapping_quadruples(parts in arb_composition(12)) {
        let p = layered_compose(&permstat::Composition::new(parts).unwrap());
        let fp = map_f(&p).unwrap();
        prop_assert_eq!(map_f(&fp).unwrap(), p.clone());
        if p.len() >= 2 {
            prop_assert_ne!(&fp, &p);
        }
        let (a, b) = (stat_vector(&p), stat_vector(&fp));
        prop_assert_eq!((a.asc, a.des, a.mna, a.mnd), (b.des, b.asc, b.mnd, b.mna));
    }

    #[test]
    fn g_reverses_the_block_composition(parts in arb_composition(12)) {
        let c = permstat::Composition::new(parts).unwrap();
        let p = layered_compose(&c);
        prop_assert_eq!(layered_decompose(&p).unwrap(), c.clone());
        let g = map_g(&p).unwrap();
        prop_assert_eq!(&g, &runs_compose_213_231(&c.reversed()));
        prop_assert!(g.avoids_pair(&"213,231".parse().unwrap()));
        let (a, b) = (stat_vector(&p), stat_vector(&g));
        prop_assert_eq!((a.asc, a.des, a.mna, a.mnd), (b.des, b.asc, b.mnd, b.mna));
    }

    #[test]
    fn maps_reject_non_members(p in arb_perm(8)) {
        let layered: PatternPair = "231,312".parse().unwrap();
        prop_assert_eq!(map_f(&p).is_ok(), !p.is_empty() && p.avoids_pair(&layered));
        prop_assert_eq!(map_g(&p).is_ok(), !p.is_empty() && p.avoids_pair(&layered));
    }
}

#[test]
fn transformed_functions_match_every_image_class() {
    for fam in GfFamily::BOTH {
        for pair in PatternPair::all_length_3() {
            if catalog::is_finite_class(&pair) {
                continue;
            }
            let table = catalog::gf_for(&pair, fam).unwrap().expand(7).unwrap();
            for n in 0..=7 {
                assert_eq!(table.coeff(n), &permstat::brute_distribution(&pair, n, fam), "{pair} {fam} n={n}");
            }
        }
    }
}

#[test]
fn recipes_commute_with_class_images() {
    // Applying r then c to the pair equals applying rc.
    for pair in PatternPair::all_length_3() {
        let rc = SymmetryOp::Rc.apply_pair(&pair);
        assert_eq!(SymmetryOp::C.apply_pair(&SymmetryOp::R.apply_pair(&pair)), rc);
    }
}

#[test]
fn mutations_are_caught_early() {
    // Three single-coefficient corruptions, each detected by n = 6.
    let cases = [("231,312", GfFamily::G), ("123,132", GfFamily::F), ("132,321", GfFamily::G)];
    for (p, fam) in cases {
        let pair: PatternPair = p.parse().unwrap();
        let mut gf = catalog::gf_for(&pair, fam).unwrap();
        let (mono, c) = gf.num.sorted_terms().into_iter().next_back().map(|(m, c)| (*m, c.clone())).unwrap();
        gf.num.add_term(mono, -2 * c);
        let report = permstat::verify::check_gf_with(&pair, fam, &gf, 6);
        assert!(!report.passed(), "{p} {fam}");
        assert!(report.first_discrepancy.unwrap().n <= 6);
    }
}
