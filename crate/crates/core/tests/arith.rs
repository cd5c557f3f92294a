use capelli_core::arith::{int, rat, reconstruct, Field, Int, Poly, RatFunc, Rational, Ring};
use proptest::prelude::*;

fn poly(cs: &[i64]) -> Poly {
    Poly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 0..4).prop_map(|cs| poly(&cs))
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFunc> {
    (poly_strategy(), poly_strategy()).prop_filter_map("zero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

proptest! {
    #[test]
    fn ratfunc_field_axioms(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::one());
        }
    }

    #[test]
    fn ratfunc_reduction_is_canonical(n in poly_strategy(), d in poly_strategy(), k in poly_strategy()) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let f = RatFunc::new(n.clone(), d.clone()).unwrap();
        let g = RatFunc::new(n.mul(&k), d.mul(&k)).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert_eq!(f.denom().leading(), int(1));
        prop_assert_eq!(f.numer().gcd(f.denom()).degree(), Some(0));
        let back: RatFunc = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn division_with_remainder(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc_strategy(), b in ratfunc_strategy(), x in -20i64..20) {
        let x = rat(x, 7);
        if let (Ok(fa), Ok(fb)) = (a.evaluate(&x), b.evaluate(&x)) {
            prop_assert_eq!(a.mul(&b).evaluate(&x).unwrap(), fa.clone() * fb.clone());
            prop_assert_eq!(a.add(&b).evaluate(&x).unwrap(), fa + fb);
        }
    }

    #[test]
    fn int_matches_rational(a in -1000i64..1000, b in -1000i64..1000) {
        let (x, y) = (Int(a as i128), Int(b as i128));
        prop_assert_eq!(x.mul(&y).to_rational(), int(a) * int(b));
        prop_assert_eq!(x.sub(&y).to_rational(), int(a) - int(b));
    }
}

#[test]
fn rational_reconstruction() {
    // f(u) = (u^2 + 1/3) / ((u - 1)(2u + 3))
    let den = poly(&[-3, 1, 2]);
    let num = Poly::from_coeffs(vec![rat(1, 3), int(0), int(1)]);
    let f = RatFunc::new(num.clone(), den.clone()).unwrap();
    let g = reconstruct(2, &den, |x| Ok(f.evaluate(x)?)).unwrap();
    assert_eq!(g, f);
    // A numerator above the stated degree is detected.
    let h = RatFunc::new(poly(&[0, 0, 0, 1]), den.clone()).unwrap();
    assert!(reconstruct(2, &den, |x| Ok(h.evaluate(x)?)).is_err());
}

#[test]
fn interpolation_through_points() {
    let pts: Vec<(Rational, Rational)> = (0..4).map(|k| (int(k), int(k * k * k - 2))).collect();
    assert_eq!(Poly::interpolate(&pts).unwrap(), poly(&[-2, 0, 0, 1]));
    assert!(Poly::interpolate(&[(int(1), int(0)), (int(1), int(2))]).is_err());
}

#[test]
fn int_overflow_is_reported() {
    assert!(Int::try_from_rational(&rat(1, 2)).is_err());
    assert_eq!(Int::try_from_rational(&int(-7)).unwrap(), Int(-7));
    let big = Int(i128::MAX);
    assert!(std::panic::catch_unwind(|| big.add(&Int(1))).is_err());
}
