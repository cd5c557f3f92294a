use capelli_core::arith::{int, rat, Field, RatFunc, Rational, Ring};
use capelli_core::combinatorics::{Partition, StandardTableau};
use capelli_core::linalg::DenseMatrix;
use capelli_core::symgroup::*;

fn shapes_up_to(n: usize) -> Vec<Partition> {
    (1..=n).flat_map(Partition::all).collect()
}

fn tableaux_up_to(n: usize) -> Vec<StandardTableau> {
    shapes_up_to(n).iter().flat_map(StandardTableau::all).collect()
}

fn u() -> RatFunc {
    RatFunc::var()
}

fn transposition(n: usize, a: usize, b: usize) -> GroupAlgElem<RatFunc> {
    GroupAlgElem::from_perm(Permutation::transposition(n, a, b).unwrap(), RatFunc::one())
}

#[test]
fn seminormal_generators_satisfy_coxeter_relations() {
    for shape in shapes_up_to(6) {
        let rep = SeminormalRep::new(&shape);
        let id = DenseMatrix::identity(rep.dim());
        let n = shape.size();
        for i in 1..n {
            let s = rep.generator(i);
            assert_eq!(s.mul(s), id, "s_{i}^2 on {shape}");
            if i + 1 < n {
                let t = rep.generator(i + 1);
                assert_eq!(s.mul(t).mul(s), t.mul(s).mul(t), "braid {i} on {shape}");
            }
            for j in i + 2..n {
                let t = rep.generator(j);
                assert_eq!(s.mul(t), t.mul(s), "commute {i},{j} on {shape}");
            }
        }
    }
}

#[test]
fn jucys_murphy_elements_act_diagonally_by_contents() {
    for shape in shapes_up_to(4) {
        let rep = SeminormalRep::new(&shape);
        let n = shape.size();
        for p in 1..=n {
            let m = rep.act(&jucys_murphy::<Rational>(p, n).unwrap()).unwrap();
            for (k, t) in rep.tableaux().iter().enumerate() {
                for j in 0..rep.dim() {
                    let expected = if j == k { int(t.contents()[p - 1]) } else { int(0) };
                    assert_eq!(m.get(k, j), &expected, "z_{p} on {t}");
                }
            }
        }
    }
}

#[test]
fn young_idempotents_are_orthogonal_idempotents() {
    for shape in shapes_up_to(4) {
        let tabs = StandardTableau::all(&shape);
        let phis: Vec<_> = tabs.iter().map(young_idempotent).collect();
        for (i, a) in phis.iter().enumerate() {
            for (j, b) in phis.iter().enumerate() {
                let prod = a.convolve(b).unwrap();
                if i == j {
                    assert_eq!(&prod, a, "idempotence for {}", tabs[i]);
                } else {
                    assert!(prod.is_zero(), "orthogonality {} {}", tabs[i], tabs[j]);
                }
            }
        }
    }
}

#[test]
fn column_tableau_idempotent_of_a_column_is_the_antisymmetrizer() {
    let t = StandardTableau::column_tableau(&"[1,1,1]".parse().unwrap());
    let phi = young_idempotent(&t);
    for (p, c) in phi.terms() {
        assert_eq!(*c, rat(p.sign(), 6));
    }
    assert_eq!(phi.len(), 6);
}

#[test]
fn fusion_agrees_with_matrix_elements() {
    for t in tableaux_up_to(4) {
        assert_eq!(fusion_idempotent(&t).unwrap(), young_idempotent(&t), "{t}");
    }
}

#[test]
fn baxterized_elements() {
    let v = RatFunc::linear(int(0), int(0)).add(&RatFunc::constant(rat(1, 3)));
    let a = baxterized(1, 2, &u(), &v, 2).unwrap();
    let b = baxterized(1, 2, &v, &u(), 2).unwrap();
    let diff_sq = u().sub(&v).mul(&u().sub(&v));
    let expected = GroupAlgElem::identity(2).scale(&RatFunc::one().sub(&diff_sq.inv().unwrap()));
    assert_eq!(a.convolve(&b).unwrap(), expected);
    assert!(baxterized(1, 2, &u(), &u(), 2).is_err());
}

#[test]
fn baxterized_yang_baxter_and_regularity() {
    // Three independent points are encoded as u, u + 1/3 and 2u - 5.
    let x = u();
    let y = u().add(&RatFunc::constant(rat(1, 3)));
    let z = RatFunc::linear(int(2), int(-5));
    let lhs = baxterized(1, 2, &x, &y, 3)
        .unwrap()
        .convolve(&baxterized(1, 3, &x, &z, 3).unwrap())
        .unwrap()
        .convolve(&baxterized(2, 3, &y, &z, 3).unwrap())
        .unwrap();
    let rhs = baxterized(2, 3, &y, &z, 3)
        .unwrap()
        .convolve(&baxterized(1, 3, &x, &z, 3).unwrap())
        .unwrap()
        .convolve(&baxterized(1, 2, &x, &y, 3).unwrap())
        .unwrap();
    assert_eq!(lhs, rhs);

    // With v = w + 1 and w = 0 the triple product has no pole at u = 0.
    let w = RatFunc::zero();
    for shift in [1, -1] {
        let v = RatFunc::constant(int(shift));
        let prod = baxterized(1, 2, &x, &v, 3)
            .unwrap()
            .convolve(&baxterized(1, 3, &x, &w, 3).unwrap())
            .unwrap()
            .convolve(&baxterized(2, 3, &v, &w, 3).unwrap())
            .unwrap();
        assert!(prod.limit_at(&int(0)).is_ok(), "shift {shift}");
    }
}

#[test]
fn regularity_identities_with_an_extra_letter() {
    for t in tableaux_up_to(3) {
        let n = t.size();
        let c = t.contents();
        let phi = young_idempotent(&t).to_ratfunc();
        let inv_u = u().inv().unwrap();

        // Phi_T on letters 2..n+1.
        let shifted = phi.embed(n + 1, 1).unwrap();
        let mut lhs = GroupAlgElem::identity(n + 1);
        for p in 1..=n {
            lhs = lhs.sub(&transposition(n + 1, 1, p + 1).scale(&inv_u)).unwrap();
        }
        let mut rhs = GroupAlgElem::identity(n + 1);
        for p in 1..=n {
            let cp = RatFunc::constant(int(c[p - 1]));
            rhs = rhs.convolve(&baxterized(1, p + 1, &u(), &cp, n + 1).unwrap()).unwrap();
        }
        assert_eq!(lhs.convolve(&shifted).unwrap(), rhs.convolve(&shifted).unwrap(), "first identity, {t}");

        // Phi_T on letters 1..n.
        let base = phi.embed(n + 1, 0).unwrap();
        let mut lhs = GroupAlgElem::identity(n + 1);
        for p in 1..=n {
            lhs = lhs.add(&transposition(n + 1, p, n + 1).scale(&inv_u)).unwrap();
        }
        let mut rhs = GroupAlgElem::identity(n + 1);
        for p in 1..=n {
            let cp = RatFunc::constant(int(-c[p - 1]));
            rhs = rhs.convolve(&baxterized(p, n + 1, &cp, &u(), n + 1).unwrap()).unwrap();
        }
        assert_eq!(lhs.convolve(&base).unwrap(), rhs.convolve(&base).unwrap(), "second identity, {t}");
    }
}

#[test]
fn adjacent_tableaux_idempotents_are_conjugate() {
    let mut checked = 0;
    for t in tableaux_up_to(4) {
        let n = t.size();
        let c = t.contents();
        for r in 1..n {
            let Some(t2) = t.swap(r) else { continue };
            let d = Rational::new(1.into(), (c[r - 1] - c[r]).into());
            let s = GroupAlgElem::from_perm(Permutation::transposition(n, r, r + 1).unwrap(), int(1));
            let x = s.add(&GroupAlgElem::identity(n).scale(&d)).unwrap();
            let scale = (int(1) - &d * &d).inv().unwrap();
            let rhs = x.convolve(&young_idempotent(&t).scale(&scale)).unwrap().convolve(&x).unwrap();
            assert_eq!(young_idempotent(&t2), rhs, "{t} -> {t2}");
            checked += 1;
        }
    }
    assert!(checked > 10);
}

#[test]
fn hyperoctahedral_idempotents_for_two_pairs() {
    let hp = hyperoctahedral_idempotent(2, Sign::Plus);
    let hm = hyperoctahedral_idempotent(2, Sign::Minus);
    assert!(hp.convolve(&hm).unwrap().is_zero());
    // The centralizer condition: every element commutes with (1,3)(2,4).
    let w = Permutation::transposition(4, 1, 3).unwrap().compose(&Permutation::transposition(4, 2, 4).unwrap());
    for p in hp.terms().keys() {
        assert_eq!(p.compose(&w), w.compose(p));
    }
    assert_eq!(hyperoctahedral_idempotent(3, Sign::Minus).len(), 48);
}

fn corner(x: &GroupAlgElem<RatFunc>, side: Side) -> GroupAlgElem<RatFunc> {
    sandwich(x, side).unwrap()
}

fn prop_scalar(nu_contents: &[i64], sign: Sign) -> RatFunc {
    // m = 1, mu = (1): b_1 = 0.
    let half = RatFunc::constant(rat(sign.value(), 2));
    let num = u().mul(&u().add(&half));
    let mut den = RatFunc::one();
    for &c in nu_contents {
        den = den.mul(&u().add(&RatFunc::constant(rat(c, 2))));
    }
    num.div(&den).unwrap()
}

#[test]
fn hyperoctahedral_corner_identities_for_two_boxes() {
    for nu in ["[2]", "[1,1]"] {
        let nu: Partition = nu.parse().unwrap();
        let t = &StandardTableau::all(&nu)[0];
        let psi = psi_t(t).unwrap();
        let phi = young_idempotent(t).to_ratfunc().embed(4, 0).unwrap();
        let x_nu = character_average(&nu).unwrap().to_ratfunc().embed(4, 0).unwrap();
        for (side, upper) in [(Side::MinusPlus, Sign::Plus), (Side::PlusMinus, Sign::Minus)] {
            assert_eq!(corner(&phi, side), corner(&x_nu, side), "{nu} {side:?}");
            let scalar = prop_scalar(&t.contents(), upper);
            let lhs = corner(&psi, side);
            let rhs = corner(&x_nu, side).scale(&scalar);
            let mut nontrivial = false;
            for omega in Partition::all(4) {
                let rep = SeminormalRep::new(&omega);
                let a = rep.act(&lhs).unwrap();
                assert_eq!(a, rep.act(&rhs).unwrap(), "{nu} on {omega} {side:?}");
                nontrivial |= !a.is_zero();
            }
            assert!(nontrivial, "{nu} {side:?}");
        }
    }
}

#[test]
fn psi_times_h_factorizes_through_jucys_murphy_type_elements() {
    for nu in ["[2]", "[1,1]"] {
        let nu: Partition = nu.parse().unwrap();
        let t = &StandardTableau::all(&nu)[0];
        let n = 2;
        let c = t.contents();
        let psi = psi_t(t).unwrap();
        let phi = young_idempotent(t).to_ratfunc().embed(2 * n, 0).unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            let h = hyperoctahedral_idempotent(n, sign).to_ratfunc();
            let mut num = GroupAlgElem::identity(2 * n);
            let mut den = RatFunc::one();
            for p in 1..=n {
                let mut factor = GroupAlgElem::identity(2 * n).scale(&RatFunc::linear(int(2), int(0)));
                for q in 1..p {
                    factor = factor.add(&transposition(2 * n, n + q, n + p)).unwrap();
                    factor = factor.add(&transposition(2 * n, q, n + p)).unwrap();
                }
                num = num.convolve(&factor).unwrap();
                den = den.mul(&RatFunc::linear(int(2), int(c[p - 1])));
            }
            let rhs = num.scale(&den.inv().unwrap()).convolve(&phi).unwrap().convolve(&h).unwrap();
            assert_eq!(psi.convolve(&h).unwrap(), rhs, "{nu} {sign:?}");
        }
    }
}

#[test]
fn psi_for_a_row_of_two() {
    let t = StandardTableau::row_tableau(&"[2]".parse().unwrap());
    let factor = GroupAlgElem::identity(4)
        .add(&transposition(4, 1, 4).scale(&RatFunc::linear(int(2), int(1)).inv().unwrap()))
        .unwrap();
    let expected = factor.convolve(&young_idempotent(&t).to_ratfunc().embed(4, 0).unwrap()).unwrap();
    assert_eq!(psi_t(&t).unwrap(), expected);
}

#[test]
fn characteristic_map_of_psi_for_two_boxes() {
    // For two boxes the corner scalar is u(u +- 1/2)/((u + c_1/2)(u + c_2/2)) = 1
    // and X_nu = (1 +- (1,2))/2, so ch = +-(x_1^2 + .. + x_M^2).
    let row = StandardTableau::row_tableau(&"[2]".parse().unwrap());
    let x = corner(&psi_t(&row).unwrap(), Side::MinusPlus);
    assert_eq!(characteristic_map(&x, Side::MinusPlus, 2).unwrap().to_string(), "x_1^2 + x_2^2");
    let col = StandardTableau::column_tableau(&"[1,1]".parse().unwrap());
    let x = corner(&psi_t(&col).unwrap(), Side::PlusMinus);
    let ch = characteristic_map(&x, Side::PlusMinus, 1).unwrap();
    assert_eq!(ch.to_string(), "-x_1^2");
}

#[test]
fn conjugacy_data_examples() {
    let id = GroupAlgElem::<Rational>::identity(3);
    let data = id.conjugacy_data();
    assert_eq!(data.len(), 1);
    assert_eq!(data[&"[1,1,1]".parse::<Partition>().unwrap()], int(1));
    let z2 = jucys_murphy::<Rational>(2, 2).unwrap().conjugacy_data();
    assert_eq!(z2[&"[2]".parse::<Partition>().unwrap()], int(1));
}

#[test]
fn group_algebra_json_dump() {
    let t = StandardTableau::column_tableau(&"[1,1]".parse().unwrap());
    let v = young_idempotent(&t).to_json();
    assert_eq!(v.to_string(), r#"[["[1,2]","1/2"],["[2,1]","-1/2"]]"#);
}
