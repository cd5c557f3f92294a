use capelli_core::arith::{int, Rational, Ring};
use capelli_core::combinatorics::Partition;
use capelli_core::symfun::*;
use proptest::prelude::*;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// `s_λ(x_1..x_n)` as a sum over semistandard tableaux.
fn schur_by_tableaux(l: &Partition, n: usize) -> SymPoly<Rational> {
    fn fill(l: &Partition, n: usize, cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<usize>>, out: &mut SymPoly<Rational>) {
        if k == cells.len() {
            let mut e = vec![0u16; n];
            for row in grid.iter() {
                for &v in row {
                    e[v] += 1;
                }
            }
            out.add_term(e, int(1));
            return;
        }
        let (r, c) = cells[k];
        let lo_left = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_up = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for v in lo_left.max(lo_up)..n {
            grid[r].push(v);
            fill(l, n, cells, k + 1, grid, out);
            grid[r].pop();
        }
    }
    let cells: Vec<(usize, usize)> = l.boxes().collect();
    let mut grid = vec![Vec::new(); l.len()];
    let mut out = MPoly::zero(n);
    fill(l, n, &cells, 0, &mut grid, &mut out);
    out
}

#[test]
fn schur_matches_tableau_sum() {
    for n in 1..=3 {
        for size in 0..=4 {
            for l in Partition::all(size) {
                assert_eq!(schur(&l, n), schur_by_tableaux(&l, n), "{l} in {n} variables");
            }
        }
    }
}

#[test]
fn power_sums_expand_in_characters() {
    // p_ρ = Σ_λ χ_λ(ρ) s_λ
    let n = 3;
    for size in 1..=4 {
        for rho in Partition::all(size) {
            let mut acc = MPoly::zero(n);
            for l in Partition::all(size) {
                acc = acc.add(&schur(&l, n).scale(&int(character(&l, &rho).unwrap())));
            }
            assert_eq!(acc, power_sum_product(&rho, n), "ρ = {rho}");
        }
    }
}

#[test]
fn plethysm_coefficients() {
    let cases = [
        ("[2]", "[4]", 1),
        ("[2]", "[3,1]", -1),
        ("[2]", "[2,2]", 1),
        ("[2]", "[2,1,1]", 0),
        ("[1,1]", "[2,2]", 1),
        ("[1,1]", "[2,1,1]", -1),
        ("[1,1]", "[1,1,1,1]", 1),
        ("[1,1]", "[4]", 0),
    ];
    for (mu, nu, want) in cases {
        assert_eq!(plethysm_coeff(&p(mu), &p(nu)).unwrap(), want, "{mu} {nu}");
    }
    assert!(plethysm_coeff(&p("[1]"), &p("[3]")).is_err());
}

#[test]
fn plethysm_expansion_reassembles() {
    for m in 1..=3 {
        let n = 2 * m;
        for mu in Partition::all(m) {
            let expansion = plethysm_expand(&mu, n).unwrap();
            let mut acc = MPoly::zero(n);
            for (nu, c) in &expansion {
                assert_eq!(plethysm_coeff(&mu, nu).unwrap(), *c);
                acc = acc.add(&schur(nu, n).scale(&int(*c)));
            }
            assert_eq!(acc, schur(&mu, n).in_squares(), "μ = {mu}");
        }
    }
}

#[test]
fn factorial_schur_reduces_to_schur() {
    let zeros = vec![int(0); 8];
    let y = [int(2), int(-1), int(5)];
    for size in 0..=4 {
        for l in Partition::with_max_len(size, 3) {
            let direct = schur(&l, 3).eval(&y, |c| c.clone());
            assert_eq!(factorial_schur(&l, &y, &zeros).unwrap(), direct, "{l}");
        }
    }
}

proptest! {
    #[test]
    fn factorial_schur_is_symmetric(a in prop::collection::vec(-4i64..4, 6), y in prop::collection::hash_set(-9i64..9, 3)) {
        let a: Vec<Rational> = a.into_iter().map(int).collect();
        let y: Vec<Rational> = y.into_iter().map(int).collect();
        let mut r = y.clone();
        r.reverse();
        for l in [p("[1]"), p("[2,1]"), p("[2,2]")] {
            let v = factorial_schur(&l, &y, &a).unwrap();
            prop_assert_eq!(&v, &factorial_schur(&l, &r, &a).unwrap());
            prop_assert_eq!(&v, &factorial_schur_interpolated(&l, &y, &a).unwrap());
        }
    }

    #[test]
    fn factorial_schur_vanishes_on_smaller_shapes(a in prop::collection::vec(-4i64..4, 6)) {
        // s_λ(a_{μ_i + n - i + 1} ...) = 0 unless λ ⊆ μ
        let a: Vec<Rational> = a.into_iter().map(int).collect();
        let mu = p("[1]");
        let lambda = p("[2]");
        let n = 2;
        let y: Vec<Rational> = (0..n).map(|i| a[mu.part(i) + n - 1 - i].clone()).collect();
        prop_assume!(y[0] != y[1]);
        prop_assert!(factorial_schur(&lambda, &y, &a).unwrap().is_zero());
    }
}
