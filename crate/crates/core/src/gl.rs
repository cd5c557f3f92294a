//! Capelli elements of `U(gl_N)` from the trace formula.

use crate::arith::{int, Field, RatFunc, Rational, Ring};
use crate::combinatorics::{Partition, StandardTableau};
use crate::error::{CapelliError, Result};
use crate::symfun::factorial_schur;
use crate::symgroup::young_idempotent;
use crate::tensor::{
    digits, embed, group_element_matrix, joint_kernel, trace_of_product, Factor, Family, FreeAlgElem, Generator,
    IndexScheme, Kind, Representation, SparseMatrix,
};

/// `gl_N` with plain labels `1..N`, or signed labels when a bilinear form is
/// needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlContext {
    scheme: IndexScheme,
}

impl GlContext {
    pub fn new(n: usize) -> Result<GlContext> {
        check_dim(n)?;
        Ok(GlContext { scheme: IndexScheme::plain(n) })
    }

    pub fn signed(n: usize) -> Result<GlContext> {
        check_dim(n)?;
        Ok(GlContext { scheme: IndexScheme::signed(n) })
    }

    pub fn n(&self) -> usize {
        self.scheme.dim()
    }

    pub fn scheme(&self) -> &IndexScheme {
        &self.scheme
    }

    pub fn representation(&self, k: usize) -> Representation {
        Representation::new(self.scheme.clone(), None, k)
    }
}

fn check_dim(n: usize) -> Result<()> {
    if (1..=9).contains(&n) {
        Ok(())
    } else {
        Err(CapelliError::Domain(format!("dimension {n} outside 1..9")))
    }
}

/// Builds the `N×N` current with the given off-diagonal symbol rule and
/// shift `-u` on the diagonal, then places it in `slot` of `n` factors.
pub(crate) fn slot_current<C: Ring>(
    scheme: &IndexScheme,
    u: &C,
    slot: usize,
    n: usize,
    entry: impl Fn(usize, usize) -> FreeAlgElem<C>,
) -> Result<SparseMatrix<FreeAlgElem<C>>> {
    let d = scheme.dim();
    let mut entries = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let mut x = entry(a, b);
            if a == b {
                x = x.sub(&FreeAlgElem::scalar(u.clone()));
            }
            entries.push((a, b, x));
        }
    }
    embed(&SparseMatrix::from_triplets(d, entries), d, n, &[slot])
}

/// `E(u) = -u + Σ E_ij ⊗ E_ji` in tensor slot `slot` of `n`.
pub fn current_e<C: Ring>(u: &C, ctx: &GlContext, slot: usize, n: usize) -> Result<SparseMatrix<FreeAlgElem<C>>> {
    let s = &ctx.scheme;
    slot_current(s, u, slot, n, |a, b| FreeAlgElem::generator(Generator::e(s.label(b), s.label(a))))
}

/// `E~(u) = -u + Σ ε_ij E_ij ⊗ E_{-i,-j}`; needs signed labels.
pub fn current_e_tilde<C: Ring>(
    u: &C,
    ctx: &GlContext,
    kind: Kind,
    slot: usize,
    n: usize,
) -> Result<SparseMatrix<FreeAlgElem<C>>> {
    let s = &ctx.scheme;
    if !s.is_signed() || !kind.admits(s.dim()) {
        return Err(CapelliError::Domain(format!("E~ needs signed labels admitting a {kind} form")));
    }
    slot_current(s, u, slot, n, |a, b| {
        let (i, j) = (s.label(a), s.label(b));
        FreeAlgElem::generator(Generator::e(-i, -j)).scale(&C::from_int(kind.epsilon(i, j)))
    })
}

fn check_rows(t: &StandardTableau, n: usize) -> Result<()> {
    if t.shape().len() > n {
        return Err(CapelliError::Domain(format!(
            "shape {} has more than {n} rows",
            t.shape()
        )));
    }
    Ok(())
}

/// `tr(Y_T · E_1(u + c_1) ⋯ E_n(u + c_n))` for a coefficient value `u`.
pub fn capelli_trace<C: Ring>(t: &StandardTableau, ctx: &GlContext, u: &C) -> Result<FreeAlgElem<C>> {
    check_rows(t, ctx.n())?;
    let n = t.size();
    let y = group_element_matrix(&young_idempotent(t).map_coeffs(C::from_rational), ctx.n());
    let factors = t
        .contents()
        .iter()
        .enumerate()
        .map(|(p, &c)| Ok(Factor::Alg(current_e(&u.add(&C::from_int(c)), ctx, p + 1, n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(trace_of_product(&y, &factors))
}

/// The Capelli element `C_ν` computed from the tableau `t`.
pub fn capelli_element(t: &StandardTableau, ctx: &GlContext) -> Result<FreeAlgElem<Rational>> {
    capelli_trace(t, ctx, &Rational::zero())
}

/// The shifted element `C_ν(u)` with polynomial coefficients in `u`.
pub fn shifted_capelli(t: &StandardTableau, ctx: &GlContext) -> Result<FreeAlgElem<RatFunc>> {
    capelli_trace(t, ctx, &RatFunc::var())
}

/// `s_ν(λ_1 - u + N - 1, …, λ_N - u | 0, 1, 2, …)`.
pub fn capelli_eigenvalue(nu: &Partition, lambda: &Partition, n: usize, u: &RatFunc) -> Result<RatFunc> {
    if nu.len() > n || lambda.len() > n {
        return Err(CapelliError::Domain(format!("partitions need at most {n} rows")));
    }
    let y: Vec<RatFunc> = (0..n)
        .map(|i| RatFunc::constant(int((lambda.part(i) + n - 1 - i) as i64)).sub(u))
        .collect();
    let a: Vec<RatFunc> = (0..nu.part(0) + n).map(|k| RatFunc::constant(int(k as i64))).collect();
    factorial_schur(nu, &y, &a)
}

/// The operator of `x` on `(C^N)^{⊗k}`.
pub fn act_in_tensor_power<C: Ring>(x: &FreeAlgElem<C>, k: usize, ctx: &GlContext) -> Result<SparseMatrix<C>> {
    if let Some(g) = x.generators().find(|g| g.family != Family::E) {
        return Err(CapelliError::Domain(format!("foreign symbol {g} in a gl element")));
    }
    ctx.representation(k).act(x)
}

/// Whether `x` and `y` act identically on `(C^N)^{⊗k}` for `k = 0..=max_k`.
pub fn agree_in_tensor_powers<C: Ring>(x: &FreeAlgElem<C>, y: &FreeAlgElem<C>, max_k: usize, ctx: &GlContext) -> Result<bool> {
    let d = x.sub(y);
    for k in 0..=max_k {
        if !act_in_tensor_power(&d, k, ctx)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A non-zero vector of `(C^N)^{⊗k}` of the given weight killed by all
/// raising operators.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    pub k: usize,
    pub coords: Vec<Rational>,
    pub weight: Vec<i64>,
}

impl WeightVector {
    pub fn to_ratfunc(&self) -> Vec<RatFunc> {
        self.coords.iter().map(|c| RatFunc::constant(c.clone())).collect()
    }

    /// The scalar `c` with `m v = c v`, if `v` is an eigenvector of `m`.
    pub fn eigenvalue_of<K: Field>(&self, m: &SparseMatrix<K>) -> Option<K> {
        let v: Vec<K> = self.coords.iter().map(K::from_rational).collect();
        let w = m.apply(&v);
        let pivot = v.iter().position(|x| !x.is_zero())?;
        let c = w[pivot].div(&v[pivot]).ok()?;
        v.iter().zip(&w).all(|(a, b)| a.mul(&c) == *b).then_some(c)
    }
}

/// Basis tensors of `(C^n)^{⊗k}` whose weight equals `target`.
pub(crate) fn weight_support(k: usize, n: usize, weight_of: impl Fn(&[usize]) -> Vec<i64>, target: &[i64]) -> Vec<usize> {
    (0..n.pow(k as u32)).filter(|&idx| weight_of(&digits(idx, n, k)) == target).collect()
}

/// Highest-weight vectors of weight `λ` in `(C^N)^{⊗k}`.
pub fn highest_weight_vectors(lambda: &Partition, k: usize, ctx: &GlContext) -> Result<Vec<WeightVector>> {
    let n = ctx.n();
    if lambda.size() != k || lambda.len() > n {
        return Err(CapelliError::Domain(format!("no weight {lambda} in tensor power {k} of dimension {n}")));
    }
    let target: Vec<i64> = (0..n).map(|i| lambda.part(i) as i64).collect();
    let support = weight_support(
        k,
        n,
        |d| {
            let mut w = vec![0i64; n];
            for &x in d {
                w[x] += 1;
            }
            w
        },
        &target,
    );
    let rep = ctx.representation(k);
    let s = ctx.scheme();
    let mut raising = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            raising.push(rep.generator(&Generator::e(s.label(a), s.label(b)))?);
        }
    }
    let out: Vec<WeightVector> = joint_kernel(&raising, &support, rep.dim())
        .into_iter()
        .map(|coords| WeightVector { k, coords, weight: target.clone() })
        .collect();
    if out.is_empty() {
        return Err(CapelliError::Inconsistency(format!("no highest-weight vector of weight {lambda}")));
    }
    Ok(out)
}
