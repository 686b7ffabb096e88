use proptest::prelude::*;

use ttknot::alexander::{alexander_symbolic, burau_reduced, mat_mul, torus_alexander};
use ttknot::braid::{cable_expand, connected_sum, parallelize_framed, torus_framed};
use ttknot::families::{cable_detect, family_membership, theorem11_params, FamilyParams, SearchBounds, TwistedTorusParams};
use ttknot::modarith::{coeff_quadruple, gcd, parallel_pq};
use ttknot::tangles::{trace_arcs, TangleSpec};
use ttknot::{alexander_from_braid, BraidWord, LaurentPoly, MultiplicitySeq};

fn word(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = strands as i32 - 1;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |ls| {
        let letters = ls.into_iter().map(|(i, neg)| if neg { -i } else { i }).collect();
        BraidWord::new(strands, letters).unwrap()
    })
}

fn any_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(|n| word(n, 14))
}

fn knot_word() -> impl Strategy<Value = BraidWord> {
    any_word().prop_filter("closure must be a knot", |w| w.is_knot())
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..=4, prop::collection::vec(-5i64..=5, 0..6)).prop_map(|(m, c)| LaurentPoly::new(m, c))
}

fn coprime_pair(max: i64) -> impl Strategy<Value = (i64, i64)> {
    (3..=max)
        .prop_flat_map(|p| (Just(p), 2..p))
        .prop_filter("coprime", |&(p, q)| gcd(p, q) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn burau_is_a_homomorphism((a, b) in (2usize..=5).prop_flat_map(|n| (word(n, 8), word(n, 8)))) {
        let lhs = burau_reduced(&a.concat(&b).unwrap()).unwrap();
        let rhs = mat_mul(&burau_reduced(&a).unwrap(), &burau_reduced(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn modular_matches_symbolic(w in knot_word()) {
        prop_assert_eq!(alexander_from_braid(&w).unwrap(), alexander_symbolic(&w).unwrap());
    }

    #[test]
    fn alexander_is_symmetric_and_normalized(w in knot_word()) {
        let d = alexander_from_braid(&w).unwrap();
        prop_assert_eq!(d.value_at_one().abs(), 1);
        prop_assert!(d.is_palindromic_up_to_units());
        prop_assert_eq!(alexander_from_braid(&w.mirror()).unwrap(), d);
    }

    #[test]
    fn gcd_law((p0, q0) in coprime_pair(80), x1 in 1i64..40, x2 in 1i64..40) {
        let (p, q) = parallel_pq(&coeff_quadruple(p0, q0).unwrap(), x1, x2).unwrap();
        prop_assert_eq!(gcd(p, q), gcd(x1, x2));
    }

    #[test]
    fn parallelization_components((p0, q0) in coprime_pair(9), x1 in 1i64..=4, x2 in 1i64..=4) {
        let w = parallelize_framed(&torus_framed(p0, q0).unwrap(), x1, x2).unwrap();
        let (p, _) = parallel_pq(&coeff_quadruple(p0, q0).unwrap(), x1, x2).unwrap();
        prop_assert_eq!(w.strands() as i64, p);
        prop_assert_eq!(w.component_count() as i64, gcd(x1, x2));
    }

    #[test]
    fn cabling_by_ones_is_identity(w in any_word()) {
        let c = cable_expand(&w, &MultiplicitySeq::ones(w.strands())).unwrap();
        prop_assert_eq!(c.word, w);
    }

    #[test]
    fn cabling_permutes_bundles(
        (w, widths) in (2usize..=4).prop_flat_map(|n| (word(n, 6), prop::collection::vec(1usize..=3, n)))
    ) {
        let top = MultiplicitySeq::new(widths.clone()).unwrap();
        let c = cable_expand(&w, &top).unwrap();
        let base = w.permutation();
        let mut offsets_top = vec![0];
        for wd in &widths {
            offsets_top.push(offsets_top.last().unwrap() + wd);
        }
        let bottom = c.bottom.widths().to_vec();
        let mut offsets_bottom = vec![0];
        for wd in &bottom {
            offsets_bottom.push(offsets_bottom.last().unwrap() + wd);
        }
        let perm = c.word.permutation();
        for (slot, &wd) in widths.iter().enumerate() {
            let to = base.apply(slot);
            prop_assert_eq!(bottom[to], wd);
            for j in 0..wd {
                prop_assert_eq!(perm.apply(offsets_top[slot] + j), offsets_bottom[to] + j);
            }
        }
    }

    #[test]
    fn laurent_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a.clone());
        }
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn tangle_arcs_partition((p, q) in (3i64..=30).prop_flat_map(|p| (Just(p), p + 1..=60)), k_frac in 0.0f64..1.0) {
        prop_assume!(gcd(p, q) == 1);
        let k = 2 + ((p - 3) as f64 * k_frac) as i64;
        let d = trace_arcs(&TangleSpec::new(p, q, k).unwrap()).unwrap();
        prop_assert!(d.invariants_hold());
        for a in &d.arcs {
            prop_assert_eq!(a.self_crossings as i64, a.longitude * (a.strands - 1));
        }
        if k == 2 {
            prop_assert!(d.any_knotted());
            prop_assert_ne!(d.closed_form_agrees, Some(false));
        }
    }

    #[test]
    fn family_outputs(e in 1i64..=2, k1 in 2i64..=3, k2 in 2i64..=3, x1 in 1i64..=3, x2 in 1i64..=3) {
        prop_assume!(gcd(x1, x2) == 1);
        let fp = FamilyParams::new(e, k1, k2, x1, x2).unwrap();
        let tp = theorem11_params(&fp).unwrap();
        prop_assert!(tp.p > tp.r && tp.r > 1 && tp.q > 0 && gcd(tp.p, tp.q) == 1);
        prop_assert_eq!(tp.p - tp.r, (k1 - 1) * x1 + x2);
        let bounds = SearchBounds { max_e: 2, max_k: 3, max_x: 3 };
        prop_assert!(family_membership(&tp, &bounds).contains(&fp));
    }

    #[test]
    fn cable_detect_iff_divisible(p in 3i64..40, q in 2i64..20, r in 2i64..39, s in -3i64..=3) {
        prop_assume!(s != 0 && r < p && gcd(p, q) == 1);
        let tp = TwistedTorusParams::new(p, q, r, s).unwrap();
        prop_assert_eq!(cable_detect(&tp).is_some(), r % q == 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn connected_sum_multiplies(a in knot_word(), b in knot_word()) {
        let sum = alexander_from_braid(&connected_sum(&a, &b).unwrap()).unwrap();
        let product = alexander_from_braid(&a).unwrap().product(&alexander_from_braid(&b).unwrap());
        prop_assert_eq!(sum, product);
    }
}

#[test]
fn torus_formula_spot_checks() {
    assert_eq!(torus_alexander(2, 3).unwrap().to_string(), "1 - t + t^2");
    assert_eq!(torus_alexander(2, -3).unwrap(), torus_alexander(2, 3).unwrap());
}
