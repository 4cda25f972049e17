use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use newton_spectrum::homogeneous::{fermat_reduced_b_roots, fermat_spectrum, DiagonalData};
use newton_spectrum::io::{
    ideal_to_text, parse_ideal, parse_spectrum, spectrum_terms, IdealJson, SpectrumJson,
};
use newton_spectrum::lattice::{smith_normal_form, IntegerMatrix};
use newton_spectrum::multiplier::{in_multiplier_ideal, jumping_coefficients};
use newton_spectrum::oracle::{ideal_power_members, SearchBox};
use newton_spectrum::rational::{int, rat};
use newton_spectrum::spectrum::{convolve, spectrum_of_ideal, SpectrumPolynomial};
use newton_spectrum::{newton_polyhedron, ExponentVector, MonomialIdeal, Rational};

fn ideal_in(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0i64..=5, n), 1..=4)
        .prop_filter("a generator is the unit monomial", |rows| rows.iter().all(|r| r.iter().any(|&x| x > 0)))
        .prop_map(move |rows| MonomialIdeal::new(n, rows.into_iter().map(ExponentVector::new).collect()).unwrap())
}

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(ideal_in)
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=24, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(positive_rational(), n)
}

fn ideal_with_points(k: usize) -> impl Strategy<Value = (MonomialIdeal, Vec<Vec<Rational>>)> {
    (1usize..=3).prop_flat_map(move |n| (ideal_in(n), prop::collection::vec(point(n), k)))
}

fn spectrum_poly() -> impl Strategy<Value = SpectrumPolynomial> {
    prop::collection::vec(((1i64..=18, 1i64..=6), -3i64..=3), 0..=5)
        .prop_map(|terms| SpectrumPolynomial::from_terms(terms.into_iter().map(|((p, q), m)| (rat(p, q), m))).unwrap())
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weight_is_attained_on_every_located_cone((ideal, pts) in ideal_with_points(1)) {
        let poly = newton_polyhedron(&ideal);
        let nu = &pts[0];
        let w = poly.weight(nu).unwrap();
        let cone = poly.locate_cone(nu).unwrap();
        prop_assert!(!cone.is_empty());
        for j in cone {
            prop_assert_eq!(poly.level_one_facets()[j].eval(nu), w.clone());
        }
    }

    #[test]
    fn dilate_membership_matches_weight((ideal, pts) in ideal_with_points(1), p in 1i64..=40) {
        let poly = newton_polyhedron(&ideal);
        let nu = &pts[0];
        let w = poly.weight(nu).unwrap();
        // α ranges over (0, v(ν) + 2]
        let alpha = (w.clone() + int(2)) * rat(p, 40);
        prop_assert_eq!(poly.dilate_contains(nu, &alpha), w >= alpha);
    }

    #[test]
    fn weight_is_superadditive((ideal, pts) in ideal_with_points(2)) {
        let poly = newton_polyhedron(&ideal);
        let sum = add(&pts[0], &pts[1]);
        prop_assert!(poly.weight(&sum).unwrap() >= poly.weight(&pts[0]).unwrap() + poly.weight(&pts[1]).unwrap());
    }

    #[test]
    fn weight_is_homogeneous((ideal, pts) in ideal_with_points(1), k in 1i64..=5) {
        let poly = newton_polyhedron(&ideal);
        let scaled: Vec<Rational> = pts[0].iter().map(|x| x * int(k)).collect();
        prop_assert_eq!(poly.weight(&scaled).unwrap(), poly.weight(&pts[0]).unwrap() * int(k));
    }

    #[test]
    fn generators_lie_in_the_polyhedron(ideal in ideal()) {
        let poly = newton_polyhedron(&ideal);
        for g in ideal.generators() {
            prop_assert!(poly.weight_int(g).unwrap() >= int(1));
        }
        for v in poly.vertices() {
            prop_assert!(ideal.generators().contains(v));
            prop_assert_eq!(poly.weight_int(v).unwrap(), int(1));
        }
    }

    #[test]
    fn face_lattice_is_closed_under_intersection(ideal in ideal()) {
        let poly = newton_polyhedron(&ideal);
        let faces = poly.faces();
        for a in &faces {
            for b in &faces {
                if let Some(f) = poly.intersect(a, b) {
                    prop_assert!(faces.contains(&f));
                }
            }
        }
    }

    #[test]
    fn compact_facets_have_positive_forms(ideal in ideal()) {
        let poly = newton_polyhedron(&ideal);
        for j in 0..poly.level_one_facets().len() {
            let compact = poly.facet_face(j).is_compact;
            let positive = poly.level_one_facets()[j].coeffs().iter().all(|c| c.is_positive());
            prop_assert_eq!(compact, positive);
        }
    }

    #[test]
    fn multiplier_ideals_decrease(ideal in (1usize..=2).prop_flat_map(ideal_in), a in positive_rational(), d in positive_rational()) {
        let poly = newton_polyhedron(&ideal);
        let b = &a + &d;
        for nu in box_points(ideal.n(), 6) {
            if in_multiplier_ideal(&poly, &nu, &b).unwrap() {
                prop_assert!(in_multiplier_ideal(&poly, &nu, &a).unwrap());
            }
        }
    }

    #[test]
    fn generators_shift_multiplier_ideals_up(ideal in (1usize..=2).prop_flat_map(ideal_in), a in positive_rational()) {
        let poly = newton_polyhedron(&ideal);
        let up = &a + int(1);
        for nu in box_points(ideal.n(), 5) {
            if in_multiplier_ideal(&poly, &nu, &a).unwrap() {
                for g in ideal.generators() {
                    prop_assert!(in_multiplier_ideal(&poly, &nu.add(g), &up).unwrap());
                }
            }
        }
    }

    #[test]
    fn jumping_coefficients_shift_by_one(ideal in (1usize..=2).prop_flat_map(ideal_in)) {
        let poly = newton_polyhedron(&ideal);
        let bound = int(3);
        let values: BTreeSet<Rational> = jumping_coefficients(&poly, &bound).unwrap().values().into_iter().collect();
        for v in values.iter().filter(|v| **v <= int(2)) {
            prop_assert!(values.contains(&(v + int(1))), "{} shifted", v);
        }
    }

    #[test]
    fn component_spectra_live_in_unit_interval(ideal in ideal()) {
        let sp = spectrum_of_ideal(&ideal).unwrap();
        for comp in &sp.components {
            let total: i64 = comp.nonreduced.terms().map(|(_, m)| m).sum();
            prop_assert_eq!(total as u64, comp.invariants.c * comp.invariants.e);
            for (a, m) in comp.nonreduced.terms() {
                prop_assert!(m > 0);
                prop_assert!(a.is_positive() && *a <= int(1));
            }
        }
    }

    #[test]
    fn t_is_the_convolution_unit(s in spectrum_poly()) {
        prop_assert_eq!(convolve(&s, &SpectrumPolynomial::t()), s.clone());
        prop_assert_eq!(convolve(&SpectrumPolynomial::t(), &s), s);
    }

    #[test]
    fn convolution_commutes_and_associates(a in spectrum_poly(), b in spectrum_poly(), c in spectrum_poly()) {
        prop_assert_eq!(convolve(&a, &b), convolve(&b, &a));
        prop_assert_eq!(convolve(&convolve(&a, &b), &c), convolve(&a, &convolve(&b, &c)));
    }

    #[test]
    fn smith_form_reconstructs(rows in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))) {
        let m = IntegerMatrix::from_rows(&rows);
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.left.mul(&m).mul(&snf.right), snf.diagonal.clone());
        prop_assert!(snf.diagonal.is_diagonal());
        prop_assert!(snf.left.determinant().abs().is_one());
        prop_assert!(snf.right.determinant().abs().is_one());
        let factors = snf.invariant_factors();
        for w in factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        if m.rows() == m.cols() {
            let product: BigInt = factors.iter().product();
            let expected = if factors.len() == m.rows() { product.abs() } else { BigInt::zero() };
            prop_assert_eq!(m.determinant().abs(), expected);
        }
    }

    #[test]
    fn power_members_are_monotone_and_closed_under_sums(ideal in (1usize..=2).prop_flat_map(ideal_in), k in 1u32..=2) {
        let bx = SearchBox::new(8).unwrap();
        let now = ideal_power_members(&ideal, k, bx).unwrap();
        let next = ideal_power_members(&ideal, k + 1, bx).unwrap();
        prop_assert!(next.is_subset(&now));
        let once = ideal_power_members(&ideal, 1, bx).unwrap();
        for a in &once {
            for b in &now {
                let s = a.add(b);
                if s.coords().iter().all(|&x| x <= 8) {
                    prop_assert!(next.contains(&s));
                }
            }
        }
    }

    #[test]
    fn ideal_text_and_json_round_trip(ideal in ideal()) {
        prop_assert_eq!(parse_ideal(&ideal_to_text(&ideal)).unwrap().ideal, ideal.clone());
        let json = serde_json::to_string(&IdealJson::from_ideal(&ideal)).unwrap();
        prop_assert_eq!(parse_ideal(&json).unwrap().ideal, ideal.clone());
        let sp = SpectrumJson::new(&ideal, &spectrum_of_ideal(&ideal).unwrap());
        let back: SpectrumJson = serde_json::from_str(&serde_json::to_string(&sp).unwrap()).unwrap();
        prop_assert_eq!(&back, &sp);
        for comp in &back.components {
            parse_spectrum(&comp.nonreduced).unwrap();
        }
    }

    #[test]
    fn spectrum_terms_round_trip(s in spectrum_poly()) {
        prop_assert_eq!(parse_spectrum(&spectrum_terms(&s)).unwrap(), s);
    }

    #[test]
    fn fermat_spectrum_is_palindromic(m in prop::collection::vec(2u64..=6, 1..=3)) {
        let data = DiagonalData::fermat(m.clone()).unwrap();
        let s = fermat_spectrum(&data).unwrap();
        let n = int(m.len() as i64);
        for (a, mult) in s.terms() {
            prop_assert_eq!(s.multiplicity(&(&n - a)), mult);
        }
        let milnor: u64 = m.iter().map(|x| x - 1).product();
        prop_assert_eq!(s.total_multiplicity() as u64, milnor);
        let support: BTreeSet<Rational> = s.exponents().into_iter().collect();
        let roots = fermat_reduced_b_roots(&data).unwrap();
        prop_assert_eq!(&support, roots.as_set());
    }
}

fn box_points(n: usize, k: i64) -> Vec<ExponentVector> {
    let mut out = vec![ExponentVector::zeros(n)];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| (0..=k).map(move |x| {
                let mut c = v.coords().to_vec();
                c[i] = x;
                ExponentVector::new(c)
            }))
            .collect();
    }
    out
}
