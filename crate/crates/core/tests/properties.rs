// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

use freeaction::cyclo::CycloNumber;
use freeaction::gluing::theta_build;
use freeaction::groups::{BGroup, EGroup, FiniteGroup, GroupOps, PGroup};
use freeaction::symalg::{Monomial, SpherePoly, Var, NVARS};

fn cyclo(order: u32) -> impl Strategy<Value = CycloNumber> {
    prop::collection::vec((-6i64..=6, 1i64..=4), order as usize).prop_map(move |cs| {
        CycloNumber::from_coeffs(
            order,
            cs.into_iter()
                .map(|(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    })
}

fn any_cyclo() -> impl Strategy<Value = CycloNumber> {
    prop_oneof![cyclo(3), cyclo(9), cyclo(12), cyclo(7)]
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-12 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in any_cyclo(), b in any_cyclo(), c in any_cyclo()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, CycloNumber::zero());
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in any_cyclo(), b in any_cyclo()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        let n = a.norm_sqr();
        prop_assert_eq!(n.conj(), n.clone());
        prop_assert!(n.real_sign().unwrap() != std::cmp::Ordering::Less);
    }

    #[test]
    fn inverse(a in any_cyclo()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn embedding_is_a_homomorphism(a in any_cyclo(), b in any_cyclo()) {
        prop_assert!(close((&a * &b).embed(), a.embed() * b.embed()));
        prop_assert!(close((&a + &b).embed(), a.embed() + b.embed()));
        prop_assert!(close(a.conj().embed(), a.embed().conj()));
    }

    #[test]
    fn equality_is_decided_exactly(a in cyclo(9)) {
        // 1 + ζ₃ + ζ₃² = 0 inside Q(ζ₉)
        let w = CycloNumber::root_of_unity(9, 3);
        let zero = &(&CycloNumber::one() + &w) + &(&w * &w);
        prop_assert_eq!(&a + &zero, a);
    }
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..=2, NVARS).prop_map(|e| Monomial(e.try_into().unwrap()))
}

fn raw_poly() -> impl Strategy<Value = Vec<(Monomial, CycloNumber)>> {
    prop::collection::vec((monomial(), cyclo(3)), 1..5)
}

fn boundary_values(t: [f64; 5], eps: f64) -> [Complex64; NVARS] {
    let ph = |x: f64| Complex64::from_polar(1.0, x);
    let z1 = ph(t[0]) * (1.0 - eps).sqrt();
    let z2 = ph(t[1]) * eps.sqrt() * t[3].cos();
    let z3 = ph(t[2]) * eps.sqrt() * t[3].sin();
    let l = ph(t[4]);
    [
        z1,
        z2,
        z3,
        z1.conj(),
        z2.conj(),
        z3.conj(),
        Complex64::new(eps, 0.0),
        l,
        l.conj(),
    ]
}

fn eval_raw(raw: &[(Monomial, CycloNumber)], vals: &[Complex64; NVARS]) -> Complex64 {
    raw.iter()
        .map(|(m, c)| {
            Var::ALL.iter().fold(c.embed(), |acc, &v| {
                acc * vals[v.index()].powu(m.exp(v) as u32)
            })
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_is_numerically_sound(raw in raw_poly(), t in prop::array::uniform5(0.0f64..std::f64::consts::TAU), eps in 0.01f64..0.11) {
        let vals = boundary_values(t, eps);
        let p = SpherePoly::from_terms(raw.clone());
        prop_assert!(p.is_fully_reduced());
        let (a, b) = (p.evaluate(&vals), eval_raw(&raw, &vals));
        prop_assert!((a - b).norm() < 1e-9, "{} vs {}", a, b);
    }

    #[test]
    fn reduction_is_confluent(p in raw_poly(), q in raw_poly(), r in raw_poly()) {
        let (p, q, r) = (SpherePoly::from_terms(p), SpherePoly::from_terms(q), SpherePoly::from_terms(r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        // the normal form does not depend on how a product was assembled
        let raw: Vec<_> = (&p * &q).terms().map(|(m, c)| (*m, c.clone())).collect();
        prop_assert_eq!(SpherePoly::from_terms(raw), &p * &q);
    }

    #[test]
    fn conj_commutes_with_reduction(p in raw_poly(), q in raw_poly()) {
        let (p, q) = (SpherePoly::from_terms(p), SpherePoly::from_terms(q));
        prop_assert_eq!((&p * &q).conj(), &p.conj() * &q.conj());
        prop_assert_eq!(p.conj().conj(), p);
    }

    #[test]
    fn theta_is_special_unitary_everywhere(t in prop::array::uniform5(0.0f64..std::f64::consts::TAU), eps in 0.001f64..0.111, m in 1u32..=2) {
        let th = theta_build(m).unwrap().evaluate(&boundary_values(t, eps));
        for i in 0..3 {
            for j in 0..3 {
                let g: Complex64 = (0..3).map(|k| th[i][k] * th[j][k].conj()).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((g - want).norm() < 1e-10);
            }
        }
        let det = th[0][0] * (th[1][1] * th[2][2] - th[1][2] * th[2][1])
            - th[0][1] * (th[1][0] * th[2][2] - th[1][2] * th[2][0])
            + th[0][2] * (th[1][0] * th[2][1] - th[1][1] * th[2][0]);
        prop_assert!((det - 1.0).norm() < 1e-10);
    }

    #[test]
    fn normal_form_products_associate(i in prop::array::uniform9(0i64..27), k in 3u32..=5) {
        let g = PGroup::new(k).unwrap();
        let x = g.elem(i[0], i[1], i[2]);
        let y = g.elem(i[3], i[4], i[5]);
        let z = g.elem(i[6], i[7], i[8]);
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
        prop_assert!(g.is_identity(&g.mul(&x, &g.inv(&x))));
    }

    #[test]
    fn e_and_b_inverses(i in prop::array::uniform3(0i64..30), p in prop::sample::select(vec![2u32, 3, 5, 7])) {
        let e = EGroup::new(p).unwrap();
        let x = e.elem(i[0], i[1], i[2]);
        prop_assert!(e.is_identity(&e.mul(&e.inv(&x), &x)));
        let b = BGroup::new(4, -1).unwrap();
        let y = b.elem(i[0], i[1], i[2]);
        prop_assert!(b.is_identity(&b.mul(&y, &b.inv(&y))));
        prop_assert_eq!(b.pow(&y, b.order() as i64), b.identity());
    }
}
