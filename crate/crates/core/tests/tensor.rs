use capelli_core::arith::{int, rat, Poly, RatFunc, Rational, Ring};
use capelli_core::combinatorics::{Partition, StandardTableau};
use capelli_core::gl::{current_e, GlContext};
use capelli_core::symgroup::{baxterized, young_idempotent, Permutation};
use capelli_core::tensor::*;
use proptest::prelude::*;

fn q_sign(kind: Kind) -> Rational {
    match kind {
        Kind::Orthogonal => int(1),
        Kind::Symplectic => int(-1),
    }
}

fn basis_index(labels: &[i8], n: usize) -> usize {
    let s = IndexScheme::signed(n);
    let d: Vec<usize> = labels.iter().map(|&l| s.position(l).unwrap()).collect();
    undigits(&d, n)
}

#[test]
fn signed_labels_are_ordered() {
    assert_eq!(IndexScheme::signed(3).labels(), &[-1, 0, 1]);
    assert_eq!(IndexScheme::signed(4).labels(), &[-2, -1, 1, 2]);
    assert_eq!(IndexScheme::plain(3).labels(), &[1, 2, 3]);
    let s = IndexScheme::signed(5);
    for p in 0..5 {
        assert_eq!(s.label(s.neg_position(p)), -s.label(p));
    }
    assert_eq!(undigits(&digits(17, 3, 4), 3), 17);
}

#[test]
fn exchange_operator_basics() {
    for n in 1..=4 {
        let p = exchange_p::<Rational>(n);
        assert_eq!(p.mul(&p), SparseMatrix::identity(n * n));
        assert_eq!(p.trace(), int(n as i64));
    }
    // P(e_1 ⊗ e_-1) = e_-1 ⊗ e_1.
    let p = exchange_p::<Rational>(2);
    let mut v = vec![int(0); 4];
    v[basis_index(&[1, -1], 2)] = int(1);
    let w = p.apply(&v);
    assert_eq!(w[basis_index(&[-1, 1], 2)], int(1));
    assert_eq!(w.iter().filter(|x| !x.is_zero()).count(), 1);
}

#[test]
fn twist_operator_identities() {
    for n in 1..=4 {
        for kind in Kind::all() {
            if !kind.admits(n) {
                assert!(twist_q::<Rational>(n, kind).is_err());
                continue;
            }
            let p = exchange_p::<Rational>(n);
            let q = twist_q::<Rational>(n, kind).unwrap();
            let sq = q.scale_left(&q_sign(kind));
            assert_eq!(p.mul(&q), sq, "{kind}{n}");
            assert_eq!(q.mul(&p), sq, "{kind}{n}");
            assert_eq!(q.mul(&q), q.scale_left(&int(n as i64)), "{kind}{n}");
            for factor in 1..=2 {
                assert_eq!(partial_transpose(&p, n, kind, factor).unwrap(), q, "{kind}{n} factor {factor}");
                assert_eq!(partial_transpose(&q, n, kind, factor).unwrap(), p);
            }
        }
    }
    // Q(e_1 ⊗ e_-1) = Σ_i ε_{i,1} e_i ⊗ e_-i, here for sp_2.
    let q = twist_q::<Rational>(2, Kind::Symplectic).unwrap();
    let mut v = vec![int(0); 4];
    v[basis_index(&[1, -1], 2)] = int(1);
    let w = q.apply(&v);
    assert_eq!(w[basis_index(&[1, -1], 2)], int(1));
    assert_eq!(w[basis_index(&[-1, 1], 2)], int(-1));
    assert!(partial_transpose(&q, 2, Kind::Symplectic, 3).is_err());
    assert!(partial_transpose(&q, 3, Kind::Symplectic, 1).is_err());
}

#[test]
fn embedding_examples() {
    let n = 2;
    let p = exchange_p::<Rational>(n);
    let p13 = embed(&p, n, 3, &[1, 3]).unwrap();
    let t13 = Permutation::transposition(3, 1, 3).unwrap();
    assert_eq!(p13, permutation_matrix(&t13, n));
    // Reversing the slot order conjugates by P.
    let q = twist_q::<Rational>(n, Kind::Orthogonal).unwrap();
    assert_eq!(embed(&q, n, 2, &[2, 1]).unwrap(), p.mul(&q).mul(&p));
    assert!(embed(&p, n, 3, &[0, 1]).is_err());
    assert!(embed(&p, n, 3, &[1, 4]).is_err());
    assert!(embed(&p, n, 3, &[2, 2]).is_err());
    assert!(embed(&p, n, 3, &[1]).is_err());
    assert!(embed(&p, 3, 3, &[1, 2]).is_err());
}

fn perm_strategy(k: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=k).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

proptest! {
    #[test]
    fn permutation_action_is_a_homomorphism(
        (s, t, n) in (1usize..=4).prop_flat_map(|k| (perm_strategy(k), perm_strategy(k), 1usize..=3))
    ) {
        let ms = permutation_matrix::<Rational>(&s, n);
        let mt = permutation_matrix::<Rational>(&t, n);
        prop_assert_eq!(permutation_matrix::<Rational>(&s.compose(&t), n), ms.mul(&mt));
    }

    #[test]
    fn permutation_trace_counts_cycles(s in (1usize..=4).prop_flat_map(perm_strategy), n in 1usize..=3) {
        let cycles = s.cycle_type().len() as u32;
        prop_assert_eq!(permutation_matrix::<Rational>(&s, n).trace(), int(n.pow(cycles) as i64));
    }

    #[test]
    fn partial_transpose_is_an_involution(
        entries in proptest::collection::vec((0usize..16, 0usize..16, -3i64..=3), 0..12),
        factor in 1usize..=2,
        symplectic in any::<bool>(),
    ) {
        let kind = if symplectic { Kind::Symplectic } else { Kind::Orthogonal };
        let m = SparseMatrix::from_triplets(16, entries.into_iter().map(|(i, j, v)| (i, j, int(v))));
        let once = partial_transpose(&m, 4, kind, factor).unwrap();
        prop_assert_eq!(partial_transpose(&once, 4, kind, factor).unwrap(), m);
    }
}

/// `∏ (N + c) / h` over the boxes: the dimension of the gl_N module.
fn hook_content(nu: &Partition, n: usize) -> Rational {
    let mut acc = int(1);
    for (r, c) in nu.boxes() {
        acc = acc * int(n as i64 + c as i64 - r as i64) / int(nu.hook_length(r, c) as i64);
    }
    acc
}

#[test]
fn projector_matrices_are_idempotents_of_the_right_rank() {
    for n_dim in 1..=3 {
        for size in 1..=3 {
            for nu in Partition::all(size) {
                for t in StandardTableau::all(&nu) {
                    let y = group_element_matrix(&young_idempotent(&t), n_dim);
                    assert_eq!(y.mul(&y), y, "{t} N={n_dim}");
                    assert_eq!(y.trace(), hook_content(&nu, n_dim), "{t} N={n_dim}");
                }
            }
        }
    }
}

#[test]
fn rational_r_matrix_relations() {
    let n = 2;
    let (u, v, w) = (rat(1, 3), rat(5, 2), int(-2));
    let r = r_matrix(&u, &v, n).unwrap();
    let r_back = r_matrix(&v, &u, n).unwrap();
    let d = u.clone() - v.clone();
    let unitary = SparseMatrix::scalar(4, int(1) - int(1) / (d.clone() * d));
    assert_eq!(r.mul(&r_back), unitary);
    assert!(r_matrix(&u, &u, n).is_err());
    assert!(r_tilde_matrix(&u, &u.neg(), n, Kind::Orthogonal).is_err());

    let r12 = embed(&r, n, 3, &[1, 2]).unwrap();
    let r13 = embed(&r_matrix(&u, &w, n).unwrap(), n, 3, &[1, 3]).unwrap();
    let r23 = embed(&r_matrix(&v, &w, n).unwrap(), n, 3, &[2, 3]).unwrap();
    assert_eq!(r12.mul(&r13).mul(&r23), r23.mul(&r13).mul(&r12));

    let uf = RatFunc::constant(u.clone());
    let vf = RatFunc::constant(v.clone());
    let phi = baxterized(1, 2, &uf, &vf, 2).unwrap();
    let phi_m = group_element_matrix(&phi, n).map(|x| x.as_constant().unwrap());
    assert_eq!(phi_m, r);

    let (r2, rt) = rational_r(&u, &v, 4, Kind::Symplectic).unwrap();
    assert_eq!(r2, r_matrix(&u, &v, 4).unwrap());
    let q = twist_q::<Rational>(4, Kind::Symplectic).unwrap();
    assert_eq!(rt, SparseMatrix::identity(16).add(&q.scale_left(&(int(1) / (u + v)))));
}

#[test]
fn sparse_matrix_arithmetic() {
    let a = SparseMatrix::from_triplets(2, [(0, 0, int(1)), (0, 1, int(2)), (1, 1, int(3)), (0, 1, int(1))]);
    assert_eq!(a.get(0, 1), int(3));
    assert_eq!(a.nnz(), 3);
    assert_eq!(a.transpose().get(1, 0), int(3));
    assert!(a.sub(&a).is_zero());
    assert_eq!(a.mul(&SparseMatrix::identity(2)), a);
    assert_eq!(a.apply(&[int(1), int(1)]), vec![int(4), int(3)]);
    assert_eq!(a.kron(&SparseMatrix::identity(2)).trace(), int(8));
    let c = a.commutator(&a.transpose());
    assert_eq!(c.trace(), int(0));
    assert_eq!(a.to_json().to_string(), r#"{"dim":2,"entries":[[0,0,"1"],[0,1,"3"],[1,1,"3"]]}"#);
}

#[test]
fn free_algebra_display_and_json() {
    let e12 = FreeAlgElem::<Rational>::generator(Generator::e(1, 2));
    let e21 = FreeAlgElem::generator(Generator::e(2, 1));
    let x = e12.mul(&e21).sub(&e21.mul(&e12)).add(&FreeAlgElem::scalar(rat(1, 2)));
    assert_eq!(x.to_string(), "1/2 + E_12*E_21 - E_21*E_12");
    assert_eq!(x.to_json().to_string(), r#"[["","1/2"],["E_12*E_21","1"],["E_21*E_12","-1"]]"#);
    assert_eq!(x.degree(), Some(2));
    assert_eq!(x.homogeneous_part(0).as_scalar(), Some(rat(1, 2)));
    assert_eq!(FreeAlgElem::<Rational>::zero().to_string(), "0");
    let (g, s) = Generator::f(1, -1, Kind::Symplectic).unwrap();
    assert_eq!((g.to_string(), s), ("F_{1,-1}".to_string(), 1));
    assert!(Generator::f(1, -1, Kind::Orthogonal).is_none());
    assert!(Generator::f(0, 0, Kind::Orthogonal).is_none());
    assert_eq!(Generator::f(-1, 2, Kind::Orthogonal), Some((Generator { family: Family::F, i: -2, j: 1 }, -1)));
}

#[test]
fn generator_images_in_tensor_powers() {
    let rep = Representation::new(IndexScheme::signed(2), Some(Kind::Orthogonal), 1);
    // F_{-1,-1} = E_{-1,-1} - E_{11} on C^2.
    let f = rep.generator(&Generator::f(-1, -1, Kind::Orthogonal).unwrap().0).unwrap();
    assert_eq!(f, SparseMatrix::from_triplets(2, [(0, 0, int(1)), (1, 1, int(-1))]));
    let rep0 = Representation::new(IndexScheme::plain(2), None, 0);
    assert!(rep0.generator(&Generator::e(1, 2)).unwrap().is_zero());
    let rep2 = Representation::new(IndexScheme::plain(2), None, 2);
    let e11 = rep2.generator(&Generator::e(1, 1)).unwrap();
    assert_eq!(e11.trace(), int(4));
    let ops: Vec<_> = rep2.all_generators(Family::E).unwrap().into_iter().map(|(_, m)| m).collect();
    assert_eq!(ops.len(), 4);
    let casimir = rep2.act(&FreeAlgElem::<Rational>::generator(Generator::e(1, 1)).add(&FreeAlgElem::generator(Generator::e(2, 2)))).unwrap();
    assert!(commutes_with_all(&casimir, &ops));
}

#[test]
fn pruned_trace_matches_the_full_product() {
    let ctx = GlContext::new(2).unwrap();
    for nu in ["[3]", "[2,1]", "[1,1,1]"] {
        let nu: Partition = nu.parse().unwrap();
        for t in StandardTableau::all(&nu) {
            let y = group_element_matrix(&young_idempotent(&t), 2);
            let factors: Vec<Factor<Rational>> = (1..=3)
                .map(|p| Factor::Alg(current_e(&int(p as i64), &ctx, p, 3).unwrap()))
                .chain([Factor::Scalar(embed(&exchange_p(2), 2, 3, &[1, 3]).unwrap())])
                .collect();
            let full = ordered_product(&y, &factors);
            assert_eq!(trace_of_product(&y, &factors), full.trace_out(), "{t}");
        }
    }
}

#[test]
fn reconstruction_from_samples() {
    // x(u) = (u^2 + 1)/(u - 1/2) · E_11 + 3 · E_12.
    let den = Poly::from_coeffs(vec![rat(-1, 2), int(1)]);
    let x = reconstruct_free(2, &den, |u| {
        let mut out = FreeAlgElem::zero();
        out.add_term(Word::from_slice(&[Generator::e(1, 1)]), u.clone() * u + int(1));
        out.add_term(Word::from_slice(&[Generator::e(1, 2)]), int(3) * (u - rat(1, 2)));
        Ok(out)
    })
    .unwrap();
    let expected = RatFunc::new(Poly::from_coeffs(vec![int(1), int(0), int(1)]), den).unwrap();
    assert_eq!(x.coeff(&[Generator::e(1, 1)]), expected);
    assert_eq!(x.coeff(&[Generator::e(1, 2)]), RatFunc::constant(int(3)));
    let too_high = reconstruct_free(1, &Poly::one(), |u| Ok(FreeAlgElem::scalar(u.clone() * u)));
    assert!(too_high.is_err());
}

#[test]
fn joint_kernel_of_raising_operator() {
    let rep = Representation::new(IndexScheme::plain(2), None, 2);
    let raise = rep.generator(&Generator::e(1, 2)).unwrap();
    // Weight (1,1) vectors: e_1⊗e_2 and e_2⊗e_1.
    let k = joint_kernel(&[raise], &[1, 2], 4);
    assert_eq!(k.len(), 1);
    assert_eq!(k[0][1], k[0][2].clone().neg());
    assert_eq!(joint_kernel(&[], &[0, 3], 4).len(), 2);
}
