use fdq_core::mero::{laurent_leading, numeric_leading, Coeff, GammaAxioms, GammaLabel, MeroExpr};
use fdq_core::rat::Q;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational(range: std::ops::RangeInclusive<i64>, dens: &'static [i64]) -> impl Strategy<Value = Q> {
    (range, prop::sample::select(dens)).prop_map(|(n, d)| Q::new(n, d))
}

fn nonzero_scale() -> impl Strategy<Value = Q> {
    (1i64..=5, prop::sample::select(&[1i64, 2, 3][..]), any::<bool>())
        .prop_map(|(n, d, neg)| if neg { -Q::new(n, d) } else { Q::new(n, d) })
}

/// A simple pole at `z0` times random cyclotomic factors.
fn numeric_expr() -> impl Strategy<Value = (MeroExpr, Q)> {
    let factor = (rational(-2..=2, &[1, 2]), rational(-2..=2, &[1, 2, 3]), -1i32..=1);
    (rational(-3..=3, &[1, 2, 3]), prop::collection::vec(factor, 0..4)).prop_map(|(z0, fs)| {
        let mut e = MeroExpr::cyclotomic(Q::one(), -z0, Q::zero()).unwrap().inv();
        for (a, b, exp) in fs {
            if let Ok(f) = MeroExpr::cyclotomic(a, b, Q::zero()) {
                e = e.mul(&f.pow(exp));
            }
        }
        (e, z0)
    })
}

/// Random cyclotomic-only products.
fn cyclotomic_expr() -> impl Strategy<Value = MeroExpr> {
    let factor = (rational(-2..=2, &[1, 2]), rational(-2..=2, &[1, 2, 3]), -2i32..=2);
    prop::collection::vec(factor, 0..5).prop_map(|fs| {
        let mut e = MeroExpr::one();
        for (a, b, exp) in fs {
            if let Ok(f) = MeroExpr::cyclotomic(a, b, Q::zero()) {
                e = e.mul(&f.pow(exp));
            }
        }
        e
    })
}

fn close(a: num_complex::Complex64, b: num_complex::Complex64) -> bool {
    (a - b).norm() <= 1e-9 * b.norm().max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rescaled_residue_numeric((f, z0) in numeric_expr(), lambda in nonzero_scale()) {
        let ax = GammaAxioms::new();
        let lead = laurent_leading(&f, z0, &ax).unwrap();
        prop_assume!(lead.order == -1);
        let g = f.rescale(lambda).unwrap();
        let s0 = z0 / lambda;
        let scaled = laurent_leading(&g, s0, &ax).unwrap();
        prop_assert_eq!(scaled.order, -1);
        prop_assert_eq!(&scaled.coeff, &lead.coeff.mul(&Coeff::scalar(lambda.recip())));

        let exact = scaled.coeff.eval(2.0).unwrap();
        let z0f = *z0.numer() as f64 / *z0.denom() as f64;
        let s0f = *s0.numer() as f64 / *s0.denom() as f64;
        let lf = *lambda.numer() as f64 / *lambda.denom() as f64;
        let num_f = numeric_leading(&f, z0f, -1, 2.0).unwrap();
        let num_g = numeric_leading(&g, s0f, -1, 2.0).unwrap();
        prop_assert!(close(num_g, exact), "{num_g} vs {exact}");
        prop_assert!(close(num_g, num_f / lf), "{num_g} vs {}", num_f / lf);
    }

    #[test]
    fn rescaled_residue_symbolic(
        z0 in rational(-3..=3, &[1, 2, 3]),
        lambda in nonzero_scale(),
        order in 1i32..=3,
        shift in rational(-2..=2, &[1, 2]),
    ) {
        let mut ax = GammaAxioms::new();
        ax.declare("r", z0, order).unwrap();
        ax.register("s");
        let f = MeroExpr::gamma(GammaLabel::psi("r"), Q::one(), Q::zero())
            .mul(&MeroExpr::gamma(GammaLabel::psi_bar("s"), Q::one(), shift));
        let lead = laurent_leading(&f, z0, &ax).unwrap();
        prop_assert_eq!(lead.order, -order);
        let scaled = laurent_leading(&f.rescale(lambda).unwrap(), z0 / lambda, &ax).unwrap();
        prop_assert_eq!(scaled.order, -order);
        prop_assert_eq!(scaled.coeff, lead.coeff.mul(&Coeff::scalar(lambda).pow(-order)));
    }

    #[test]
    fn leading_terms_multiply(e1 in cyclotomic_expr(), e2 in cyclotomic_expr(), s0 in rational(-2..=2, &[1, 2, 3])) {
        let ax = GammaAxioms::new();
        let (l1, l2) = (laurent_leading(&e1, s0, &ax).unwrap(), laurent_leading(&e2, s0, &ax).unwrap());
        let l12 = laurent_leading(&e1.mul(&e2), s0, &ax).unwrap();
        prop_assert_eq!(l12, l1.mul(&l2));
    }

    #[test]
    fn leading_term_matches_numeric_fit(e in cyclotomic_expr(), s0 in rational(-2..=2, &[1, 2, 3])) {
        let lead = laurent_leading(&e, s0, &GammaAxioms::new()).unwrap();
        let s0f = *s0.numer() as f64 / *s0.denom() as f64;
        for q in [2.0, 3.0] {
            let exact = lead.coeff.eval(q).unwrap();
            let numeric = numeric_leading(&e, s0f, lead.order, q).unwrap();
            prop_assert!(close(numeric, exact), "q = {}: {} vs {}", q, numeric, exact);
        }
    }
}
