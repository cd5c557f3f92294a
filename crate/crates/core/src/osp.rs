//! The elements `Z_ν(u)` of `U(so_N)` and `U(sp_N)` and the identities
//! around them.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};

use crate::arith::{int, rat, Field, Int, Poly, RatFunc, Rational, Ring};
use crate::combinatorics::{Partition, StandardTableau};
use crate::error::{CapelliError, Result};
use crate::gl::{current_e, current_e_tilde, slot_current, weight_support, GlContext, WeightVector};
use crate::symfun::{factorial_schur_interpolated, plethysm_coeff, schur, MPoly, SymPoly};
use crate::symgroup::young_idempotent;
use crate::tensor::{
    digits, embed, group_element_matrix, joint_kernel, ordered_product, r_matrix,
    r_tilde_matrix, reconstruct_free, trace_of_product, twist_q, undigits, Factor, Family, FreeAlgElem, Generator,
    IndexScheme, Kind, Representation, SparseMatrix,
};

/// `so_N` or `sp_N` with signed labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OspContext {
    kind: Kind,
    scheme: IndexScheme,
}

impl OspContext {
    pub fn new(n: usize, kind: Kind) -> Result<OspContext> {
        if !(1..=9).contains(&n) {
            return Err(CapelliError::Domain(format!("dimension {n} outside 1..9")));
        }
        if !kind.admits(n) {
            return Err(CapelliError::Domain(format!("{kind}_{n} needs an even dimension")));
        }
        Ok(OspContext { kind, scheme: IndexScheme::signed(n) })
    }

    pub fn n(&self) -> usize {
        self.scheme.dim()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn scheme(&self) -> &IndexScheme {
        &self.scheme
    }

    /// Rank `M = ⌊N/2⌋`.
    pub fn m(&self) -> usize {
        self.n() / 2
    }

    pub fn eta(&self) -> Rational {
        self.kind.eta()
    }

    /// `ε = 0, 1/2, 1` for `so_{2M}`, `so_{2M+1}`, `sp_{2M}`.
    pub fn epsilon(&self) -> Rational {
        match (self.kind, self.n() % 2) {
            (Kind::Orthogonal, 0) => int(0),
            (Kind::Orthogonal, _) => rat(1, 2),
            (Kind::Symplectic, _) => int(1),
        }
    }

    /// `ρ = (ε + M - 1, …, ε + 1, ε)`.
    pub fn rho(&self) -> Vec<Rational> {
        let m = self.m();
        (0..m).map(|i| self.epsilon() + int((m - 1 - i) as i64)).collect()
    }

    pub fn representation(&self, k: usize) -> Representation {
        Representation::new(self.scheme.clone(), Some(self.kind), k)
    }

    fn gl(&self) -> GlContext {
        GlContext::signed(self.n()).expect("dimension already checked")
    }

    /// Position among `x_1..x_M` of the Cartan symbol `F_{ll}`, with sign.
    fn cartan_coordinate(&self, label: i8) -> Option<(usize, i64)> {
        let m = self.m() as i8;
        match label {
            0 => None,
            l if l < 0 => Some(((m + l) as usize, 1)),
            l => Some(((m - l) as usize, -1)),
        }
    }

    /// Weight of a basis tensor: eigenvalues of `F_{-M,-M}, …, F_{-1,-1}`.
    pub fn weight_of(&self, positions: &[usize]) -> Vec<i64> {
        let mut w = vec![0i64; self.m()];
        for &p in positions {
            if let Some((k, s)) = self.cartan_coordinate(self.scheme.label(p)) {
                w[k] += s;
            }
        }
        w
    }

    fn check_shape(&self, t: &StandardTableau) -> Result<()> {
        if t.shape().len() > self.n() {
            return Err(CapelliError::Domain(format!("shape {} has more than {} rows", t.shape(), self.n())));
        }
        Ok(())
    }
}

/// The symbol `F_ij` in canonical form.
pub fn f_symbol<C: Ring>(i: i8, j: i8, kind: Kind) -> FreeAlgElem<C> {
    match Generator::f(i, j, kind) {
        Some((g, s)) => FreeAlgElem::generator(g).scale(&C::from_int(s)),
        None => FreeAlgElem::zero(),
    }
}

/// `F(u) = -u - η + Σ E_ij ⊗ F_ji` in tensor slot `slot` of `n`.
pub fn current_f<C: Ring>(u: &C, ctx: &OspContext, slot: usize, n: usize) -> Result<SparseMatrix<FreeAlgElem<C>>> {
    let s = &ctx.scheme;
    let shift = u.add(&C::from_rational(&ctx.eta()));
    slot_current(s, &shift, slot, n, |a, b| f_symbol(s.label(b), s.label(a), ctx.kind))
}

/// `Σ_{q<p} Q_qp` on `n` factors.
fn twist_sum<C: Ring>(ctx: &OspContext, p: usize, n: usize) -> Result<SparseMatrix<C>> {
    let q = twist_q::<C>(ctx.n(), ctx.kind)?;
    let mut acc = SparseMatrix::zero(ctx.n().pow(n as u32));
    for a in 1..p {
        acc = acc.add(&embed(&q, ctx.n(), n, &[a, p])?);
    }
    Ok(acc)
}

fn projector<C: Ring>(t: &StandardTableau, ctx: &OspContext) -> SparseMatrix<C> {
    group_element_matrix(&young_idempotent(t).map_coeffs(C::from_rational), ctx.n())
}

fn shifted<C: Ring>(u: &C, c: i64) -> C {
    u.add(&C::from_int(c))
}

/// Factors of `F_T(u)` after `Y_T`, for a field value of `u`.
fn f_t_factors<K: Field>(t: &StandardTableau, ctx: &OspContext, u: &K) -> Result<Vec<Factor<K>>> {
    ctx.check_shape(t)?;
    let n = t.size();
    let dim = ctx.n().pow(n as u32);
    let c = t.contents();
    let mut out = Vec::new();
    for p in 1..=n {
        if p > 1 {
            let den = u.add(u).add(&K::from_int(c[p - 1]));
            let a = SparseMatrix::identity(dim).add(&twist_sum::<K>(ctx, p, n)?.scale_left(&den.inv()?));
            out.push(Factor::Scalar(a));
        }
        out.push(Factor::Alg(current_f(&shifted(u, c[p - 1]), ctx, p, n)?));
    }
    Ok(out)
}

/// `F_T(u) = (Y_T ⊗ 1) · ∏_p (1 + Σ_{q<p} Q_qp / (2u + c_p)) F_p(u + c_p)`.
pub fn f_t(t: &StandardTableau, ctx: &OspContext) -> Result<SparseMatrix<FreeAlgElem<RatFunc>>> {
    let factors = f_t_factors(t, ctx, &RatFunc::var())?;
    Ok(ordered_product(&projector(t, ctx), &factors))
}

/// `(Y_T ⊗ 1) · ∏_p (∏_{q<p} R~_qp(u + c_q, u + c_p)) F_p(u + c_p)`.
pub fn f_t_alt(t: &StandardTableau, ctx: &OspContext) -> Result<SparseMatrix<FreeAlgElem<RatFunc>>> {
    ctx.check_shape(t)?;
    let n = t.size();
    let u = RatFunc::var();
    let c = t.contents();
    let mut factors = Vec::new();
    for p in 1..=n {
        for q in 1..p {
            let r = r_tilde_matrix(&shifted(&u, c[q - 1]), &shifted(&u, c[p - 1]), ctx.n(), ctx.kind)?;
            factors.push(Factor::Scalar(embed(&r, ctx.n(), n, &[q, p])?));
        }
        factors.push(Factor::Alg(current_f(&shifted(&u, c[p - 1]), ctx, p, n)?));
    }
    Ok(ordered_product(&projector(t, ctx), &factors))
}

/// `∏_{p ≥ 2} (2u + c_p)`.
fn z_denominator(t: &StandardTableau) -> Poly {
    t.contents()
        .iter()
        .skip(1)
        .fold(Poly::constant(int(1)), |acc, &c| acc.mul(&Poly::linear(int(2), int(c))))
}

/// `∏_{p ≥ 2}(2u + c_p) · Z_ν(u)` at a rational point, computed without
/// division.
pub fn z_nu_scaled_at(t: &StandardTableau, ctx: &OspContext, u: &Rational) -> Result<FreeAlgElem<Rational>> {
    ctx.check_shape(t)?;
    let n = t.size();
    let dim = ctx.n().pow(n as u32);
    let c = t.contents();
    let mut factors = Vec::new();
    for p in 1..=n {
        if p > 1 {
            let shift = u.add(u).add(&int(c[p - 1]));
            factors.push(Factor::Scalar(SparseMatrix::scalar(dim, shift).add(&twist_sum(ctx, p, n)?)));
        }
        factors.push(Factor::Alg(current_f(&shifted(u, c[p - 1]), ctx, p, n)?));
    }
    Ok(trace_of_product(&projector(t, ctx), &factors))
}

/// Same value as [`z_nu_scaled_at`] at an integer point, computed in
/// checked 128-bit integers: `Y_T` is scaled by the common denominator `L`
/// of its entries and each current by 2, and the factor `L·2^n` is divided
/// out at the end.
pub fn z_nu_scaled_at_int(t: &StandardTableau, ctx: &OspContext, u: i64) -> Result<FreeAlgElem<Rational>> {
    ctx.check_shape(t)?;
    let n = t.size();
    let dim = ctx.n().pow(n as u32);
    let c = t.contents();
    let phi = young_idempotent(t);
    let l = phi.terms().values().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let lr = Rational::from_integer(l);
    let y = group_element_matrix(&phi.map_coeffs(|x| Int::from_rational(&(x * &lr))), ctx.n());
    let two_eta = Int::from_rational(&(ctx.eta() * int(2)));
    let s = &ctx.scheme;
    let mut factors = Vec::new();
    for p in 1..=n {
        let cp = c[p - 1];
        if p > 1 {
            let a = SparseMatrix::scalar(dim, Int((2 * u + cp) as i128)).add(&twist_sum(ctx, p, n)?);
            factors.push(Factor::Scalar(a));
        }
        let shift = Int((2 * (u + cp)) as i128).add(&two_eta);
        let f = slot_current(s, &shift, p, n, |a, b| {
            f_symbol::<Int>(s.label(b), s.label(a), ctx.kind).scale(&Int(2))
        })?;
        factors.push(Factor::Alg(f));
    }
    let scale = lr * Rational::from_integer(BigInt::from(2).pow(n as u32));
    Ok(trace_of_product(&y, &factors).map_coeffs(|x| x.to_rational() / &scale))
}

/// `Z_ν(u) = (tr^{⊗n} ⊗ id) F_T(u)`.
///
/// The trace is taken at integer values of `u` and each coefficient is
/// interpolated; see [`z_nu_direct`] for the symbolic product.
pub fn z_nu(t: &StandardTableau, ctx: &OspContext) -> Result<FreeAlgElem<RatFunc>> {
    let den = z_denominator(t);
    let degree = (2 * t.size()).saturating_sub(1);
    reconstruct_free(degree, &den, |u| {
        let k = i64::try_from(u.to_integer()).map_err(|_| CapelliError::Arith(crate::ArithError::Overflow))?;
        z_nu_scaled_at_int(t, ctx, k)
    })
}

/// `Z_ν(u)` as the trace of the product over `Q(u)`.
pub fn z_nu_direct(t: &StandardTableau, ctx: &OspContext) -> Result<FreeAlgElem<RatFunc>> {
    let factors = f_t_factors(t, ctx, &RatFunc::var())?;
    Ok(trace_of_product(&projector(t, ctx), &factors))
}

/// Whether two matrices over the free algebra have equal images on
/// `C^A ⊗ (C^N)^{⊗k}` for `k = 0..=max_k`.
pub fn matrices_agree<C: Ring>(
    x: &SparseMatrix<FreeAlgElem<C>>,
    y: &SparseMatrix<FreeAlgElem<C>>,
    ctx: &OspContext,
    max_k: usize,
) -> Result<bool> {
    let d = x.sub(y);
    for k in 0..=max_k {
        if !ctx.representation(k).act_matrix(&d)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether two elements act identically on `(C^N)^{⊗k}`, `k = 0..=max_k`.
pub fn elements_agree<C: Ring>(x: &FreeAlgElem<C>, y: &FreeAlgElem<C>, ctx: &OspContext, max_k: usize) -> Result<bool> {
    let d = x.sub(y);
    for k in 0..=max_k {
        if !ctx.representation(k).act(&d)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sample points for checks of identities in two variables `u, v`: thirds
/// against halves, so that `u ± v` never vanishes.
fn grid() -> (Vec<Rational>, Vec<Rational>) {
    let us = [1, 2, 4, 5, 7, -1, -4].iter().map(|&a| rat(a, 3)).collect();
    let vs = [1, 3, -1, 5, -3, 7, -5].iter().map(|&a| rat(a, 2)).collect();
    (us, vs)
}

/// Number of grid points used per variable. Both sides of each checked
/// identity, multiplied by `(u - v)(u + v)`, have degree at most 3 in each
/// variable, so 5 points per variable decide equality.
const GRID: usize = 5;

fn lift<K: Ring>(m: &SparseMatrix<K>, d: usize) -> SparseMatrix<K> {
    m.kron(&SparseMatrix::identity(d))
}

/// The reflection equation
/// `R(u,v) F_1(u) R~(u,v) F_2(v) = F_2(v) R~(u,v) F_1(u) R(u,v)` on
/// `(C^N)^{⊗2} ⊗ (C^N)^{⊗k}`.
pub fn reflection_check(ctx: &OspContext, k: usize) -> Result<bool> {
    let rep = ctx.representation(k);
    let d = rep.dim();
    let (us, vs) = grid();
    for u in us.iter().take(GRID) {
        for v in vs.iter().take(GRID) {
            let r = lift(&r_matrix(u, v, ctx.n())?, d);
            let rt = lift(&r_tilde_matrix(u, v, ctx.n(), ctx.kind)?, d);
            let f1 = rep.act_matrix(&current_f(u, ctx, 1, 2)?)?;
            let f2 = rep.act_matrix(&current_f(v, ctx, 2, 2)?)?;
            let lhs = r.mul(&f1).mul(&rt).mul(&f2);
            let rhs = f2.mul(&rt).mul(&f1).mul(&r);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Which of the four exchange relations among `E(u)` and `E~(-u)` to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Auxiliary {
    /// `R E_1(u) E_2(v) = E_2(v) E_1(u) R`.
    Plain,
    /// `R E~_1(-u) E~_2(-v) = E~_2(-v) E~_1(-u) R`.
    Twisted,
    /// `E~_1(-u) R~ E_2(v) = E_2(v) R~ E~_1(-u)`.
    MixedFirst,
    /// `E_1(u) R~ E~_2(-v) = E~_2(-v) R~ E_1(u)`.
    MixedSecond,
}

impl Auxiliary {
    pub fn all() -> [Auxiliary; 4] {
        [Auxiliary::Plain, Auxiliary::Twisted, Auxiliary::MixedFirst, Auxiliary::MixedSecond]
    }
}

/// The relation `which` for `gl_N` on `(C^N)^{⊗2} ⊗ (C^N)^{⊗k}`, with the
/// form of `kind` defining `E~` and `R~`.
pub fn auxiliary_check(n: usize, kind: Kind, which: Auxiliary, k: usize) -> Result<bool> {
    let gl = GlContext::signed(n)?;
    let rep = gl.representation(k);
    let d = rep.dim();
    let (us, vs) = grid();
    for u in us.iter().take(GRID) {
        for v in vs.iter().take(GRID) {
            let (nu, nv) = (u.neg(), v.neg());
            let e1 = rep.act_matrix(&current_e(u, &gl, 1, 2)?)?;
            let e2 = rep.act_matrix(&current_e(v, &gl, 2, 2)?)?;
            let t1 = rep.act_matrix(&current_e_tilde(&nu, &gl, kind, 1, 2)?)?;
            let t2 = rep.act_matrix(&current_e_tilde(&nv, &gl, kind, 2, 2)?)?;
            let r = lift(&r_matrix(u, v, n)?, d);
            let rt = lift(&r_tilde_matrix(u, v, n, kind)?, d);
            let (lhs, rhs) = match which {
                Auxiliary::Plain => (r.mul(&e1).mul(&e2), e2.mul(&e1).mul(&r)),
                Auxiliary::Twisted => (r.mul(&t1).mul(&t2), t2.mul(&t1).mul(&r)),
                Auxiliary::MixedFirst => (t1.mul(&rt).mul(&e2), e2.mul(&rt).mul(&t1)),
                Auxiliary::MixedSecond => (e1.mul(&rt).mul(&t2), t2.mul(&rt).mul(&e1)),
            };
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The two projector identities behind the alternative form of `F_T`:
/// `(Y_T ⊗ 1)(1 + Σ_p Q_{p,n+1}/v) = (Y_T ⊗ 1) ∏_p R~_{p,n+1}(c_p, v)` and
/// `(1 + Σ_p P_{p,n+1}/v)(Y_T ⊗ 1) = ∏_p R_{p,n+1}(-c_p, v) (Y_T ⊗ 1)`,
/// as identities over `Q(v)`.
pub fn projector_identities_check(t: &StandardTableau, n_dim: usize, kind: Kind) -> Result<(bool, bool)> {
    let n = t.size();
    let v = RatFunc::var();
    let vinv = v.inv()?;
    let y = embed(&projector_plain::<RatFunc>(t, n_dim), n_dim, n + 1, &(1..=n).collect::<Vec<_>>())?;
    let dim = n_dim.pow(n as u32 + 1);
    let q = twist_q::<RatFunc>(n_dim, kind)?;
    let p = crate::tensor::exchange_p::<RatFunc>(n_dim);
    let mut qsum = SparseMatrix::identity(dim);
    let mut psum = SparseMatrix::identity(dim);
    let mut qprod = SparseMatrix::identity(dim);
    let mut pprod = SparseMatrix::identity(dim);
    for (a, &c) in t.contents().iter().enumerate() {
        let slots = [a + 1, n + 1];
        qsum = qsum.add(&embed(&q, n_dim, n + 1, &slots)?.scale_left(&vinv));
        psum = psum.add(&embed(&p, n_dim, n + 1, &slots)?.scale_left(&vinv));
        let cq = RatFunc::constant(int(c));
        qprod = qprod.mul(&embed(&r_tilde_matrix(&cq, &v, n_dim, kind)?, n_dim, n + 1, &slots)?);
        pprod = pprod.mul(&embed(&r_matrix(&cq.neg(), &v, n_dim)?, n_dim, n + 1, &slots)?);
    }
    Ok((y.mul(&qsum) == y.mul(&qprod), psum.mul(&y) == pprod.mul(&y)))
}

fn projector_plain<C: Ring>(t: &StandardTableau, n_dim: usize) -> SparseMatrix<C> {
    group_element_matrix(&young_idempotent(t).map_coeffs(C::from_rational), n_dim)
}

/// Traceless tensors in `(C^N)^{⊗k}`: the joint kernel of all `Q_pq`.
pub fn traceless_subspace(k: usize, ctx: &OspContext) -> Result<Vec<Vec<Rational>>> {
    let ops = contraction_ops(k, ctx)?;
    let dim = ctx.n().pow(k as u32);
    Ok(joint_kernel(&ops, &(0..dim).collect::<Vec<_>>(), dim))
}

fn contraction_ops(k: usize, ctx: &OspContext) -> Result<Vec<SparseMatrix<Rational>>> {
    let q = twist_q::<Rational>(ctx.n(), ctx.kind)?;
    let mut ops = Vec::new();
    for p in 1..=k {
        for r in p + 1..=k {
            ops.push(embed(&q, ctx.n(), k, &[p, r])?);
        }
    }
    Ok(ops)
}

/// On `C^N ⊗ V` with `V` the traceless part of `(C^N)^{⊗m}`, the image of
/// `E~(η - u) E(η + u) / (u - η)` under `gl_N` agrees with that of `F(u)`.
pub fn traceless_compatibility_check(ctx: &OspContext, m: usize) -> Result<bool> {
    let gl = ctx.gl();
    let u = RatFunc::var();
    let eta = RatFunc::constant(ctx.eta());
    let grep = gl.representation(m);
    let et = grep.act_matrix(&current_e_tilde(&eta.sub(&u), &gl, ctx.kind, 1, 1)?)?;
    let e = grep.act_matrix(&current_e(&eta.add(&u), &gl, 1, 1)?)?;
    let lhs = et.mul(&e).scale_left(&u.sub(&eta).inv()?);
    let rhs = ctx.representation(m).act_matrix(&current_f(&u, ctx, 1, 1)?)?;
    let d = grep.dim();
    for a in 0..ctx.n() {
        for v in traceless_subspace(m, ctx)? {
            let mut x = vec![RatFunc::zero(); ctx.n() * d];
            for (i, c) in v.iter().enumerate() {
                x[a * d + i] = RatFunc::constant(c.clone());
            }
            if lhs.apply(&x) != rhs.apply(&x) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The orthogonal-group element swapping `e_1` and `e_{-1}`, on
/// `(C^N)^{⊗k}`.
fn reflection_element(ctx: &OspContext, k: usize) -> SparseMatrix<Rational> {
    let n = ctx.n();
    let (a, b) = (ctx.scheme.position(1).unwrap(), ctx.scheme.position(-1).unwrap());
    let swap = |x: usize| if x == a { b } else if x == b { a } else { x };
    let dim = n.pow(k as u32);
    SparseMatrix::from_triplets(
        dim,
        (0..dim).map(|i| {
            let d: Vec<usize> = digits(i, n, k).iter().map(|&x| swap(x)).collect();
            (undigits(&d, n), i, int(1))
        }),
    )
}

/// Whether `π(x)` on `(C^N)^{⊗k}` commutes with every `π(F_ij)` and, for
/// even orthogonal `N`, with the reflection swapping `e_1` and `e_{-1}`.
pub fn invariance_check<C: Field>(x: &FreeAlgElem<C>, ctx: &OspContext, k: usize) -> Result<bool> {
    let rep = ctx.representation(k);
    let m = rep.act(x)?;
    let mut ops: Vec<SparseMatrix<Rational>> =
        rep.all_generators(Family::F)?.into_iter().map(|(_, g)| g).collect();
    if ctx.kind == Kind::Orthogonal && ctx.n() % 2 == 0 {
        ops.push(reflection_element(ctx, k));
    }
    Ok(ops.iter().all(|g| m.commutator(&g.map(C::from_rational)).is_zero()))
}

/// The leading symbol of an element whose words have length at most `n`:
/// the length-`n` part, abelianized, with `F_{-k,-k} ↦ x_{M+1-k}` and every
/// other symbol sent to zero.
pub fn leading_symbol(x: &FreeAlgElem<RatFunc>, n: usize, ctx: &OspContext) -> Result<SymPoly<RatFunc>> {
    let m = ctx.m();
    let mut out = MPoly::zero(m);
    for (w, c) in x.terms() {
        if w.len() > n {
            return Err(CapelliError::DegreeMismatch { expected: n, found: w.len() });
        }
        if w.len() < n {
            continue;
        }
        let mut exps = vec![0u16; m];
        let mut sign = 1i64;
        let mut vanishes = false;
        for g in w {
            match (g.family, g.is_diagonal(), ctx.cartan_coordinate(g.i)) {
                (Family::F, true, Some((k, s))) => {
                    exps[k] += 1;
                    sign *= s;
                }
                _ => {
                    vanishes = true;
                    break;
                }
            }
        }
        if !vanishes {
            out.add_term(exps, c.scale(&int(sign)));
        }
    }
    Ok(out)
}

/// The closed formula for the leading symbol of `Z_ν(u)`, `|ν| = 2m`.
pub fn theorem34_formula(nu: &Partition, ctx: &OspContext) -> Result<SymPoly<RatFunc>> {
    if nu.size() % 2 == 1 {
        return Err(CapelliError::Domain(format!("{nu} has odd size")));
    }
    let m = nu.size() / 2;
    let c = nu_denominator(nu);
    let mut out = MPoly::zero(ctx.m());
    for mu in Partition::with_max_len(m, ctx.m()) {
        let l = plethysm_coeff(&mu, nu)?;
        if l == 0 {
            continue;
        }
        let coeff = mu_numerator(&mu, ctx.kind).div(&c)?.scale(&int(l));
        out = out.add(&schur(&mu, ctx.m()).in_squares().map_coeffs(|a| RatFunc::constant(a.clone())).scale(&coeff));
    }
    Ok(out)
}

/// `b_μ(u) = ∏ (u + b_i)(u + b_i + η)` over the contents `b_i` of `μ`.
pub fn mu_numerator(mu: &Partition, kind: Kind) -> RatFunc {
    let mut acc = RatFunc::one();
    for (r, c) in mu.boxes() {
        let b = int(c as i64 - r as i64);
        acc = acc
            .mul(&RatFunc::linear(int(1), b.clone()))
            .mul(&RatFunc::linear(int(1), b + kind.eta()));
    }
    acc
}

/// `c_ν(u) = ∏ (u + c_p/2)` over the contents of `ν`.
pub fn nu_denominator(nu: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    for (r, c) in nu.boxes() {
        acc = acc.mul(&RatFunc::linear(int(1), rat(c as i64 - r as i64, 2)));
    }
    acc
}

/// Both sides of
/// `Σ_ν c_ν(u) f_ν(x) s_ν(y) = Σ_μ b_μ(u) s_μ(x²) s_μ(y²)` in `M + N`
/// variables, with `f_ν` from [`theorem34_formula`].
pub fn corollary36_sides(m: usize, n: usize, kind: Kind) -> Result<(SymPoly<RatFunc>, SymPoly<RatFunc>)> {
    let ctx = OspContext::new(n, kind)?;
    let mm = ctx.m();
    let total = mm + n;
    let lift_x = |p: SymPoly<RatFunc>| p.shift_vars(total, 0);
    let sy = |p: &Partition| schur(p, n).map_coeffs(|a| RatFunc::constant(a.clone())).shift_vars(total, mm);
    let mut lhs = MPoly::zero(total);
    for nu in Partition::with_max_len(2 * m, n) {
        let f = lift_x(theorem34_formula(&nu, &ctx)?.scale(&nu_denominator(&nu)));
        lhs = lhs.add(&f.mul(&sy(&nu)));
    }
    let mut rhs = MPoly::zero(total);
    for mu in Partition::with_max_len(m, mm) {
        let sx = lift_x(schur(&mu, mm).in_squares().map_coeffs(|a| RatFunc::constant(a.clone())));
        rhs = rhs.add(&sx.mul(&sy(&mu).in_squares()).scale(&mu_numerator(&mu, kind)));
    }
    Ok((lhs, rhs))
}

pub fn corollary36_check(m: usize, n: usize, kind: Kind) -> Result<bool> {
    let (lhs, rhs) = corollary36_sides(m, n, kind)?;
    Ok(lhs == rhs)
}

/// The two families of specializations of `Z_ν(u)` giving `B_μ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `ν = (2m)`, `μ = (m)`.
    Row,
    /// `ν = (1^{2m})`, `μ = (1^m)`.
    Column,
}

impl Specialization {
    pub fn shapes(self, m: usize) -> (Partition, Partition) {
        match self {
            Specialization::Row => (Partition::row(2 * m), Partition::row(m)),
            Specialization::Column => (Partition::column(2 * m), Partition::column(m)),
        }
    }
}

/// `B_μ` from `Z_ν(u)`: a rational prefactor, then the limit at the stated
/// point, then the global sign.
pub fn b_mu_specialization(m: usize, ctx: &OspContext, family: Specialization) -> Result<FreeAlgElem<Rational>> {
    let (nu, _) = family.shapes(m);
    let t = StandardTableau::row_tableau(&nu);
    let z = z_nu(&t, ctx)?;
    let mi = m as i64;
    let one = int(1);
    let lin = |b: Rational| RatFunc::linear(one.clone(), b);
    let (prefactor, point, sign) = match (family, ctx.kind) {
        (Specialization::Row, Kind::Orthogonal) => (RatFunc::one(), rat(-2 * mi - 1, 2), 1),
        (Specialization::Row, Kind::Symplectic) => {
            (lin(rat(2 * mi - 1, 2)).div(&lin(rat(-1, 2)))?, rat(-2 * mi + 1, 2), 1)
        }
        (Specialization::Column, Kind::Symplectic) => (RatFunc::one(), rat(2 * mi + 1, 2), 1),
        (Specialization::Column, Kind::Orthogonal) => {
            (lin(rat(-2 * mi + 1, 2)).div(&lin(rat(1, 2)))?, rat(2 * mi - 1, 2), 1)
        }
    };
    let sign = if family == Specialization::Column && m % 2 == 1 { -sign } else { sign };
    let mut out = FreeAlgElem::zero();
    for (w, c) in z.terms() {
        let v = prefactor.mul(c).limit_at(&point).map_err(CapelliError::from)?;
        out.add_term(w.clone(), v.mul(&int(sign)));
    }
    Ok(out)
}

/// `s_μ((λ_1+ρ_1)², …, (λ_M+ρ_M)² | ε², (ε+1)², …)`.
pub fn b_mu_eigenvalue(mu: &Partition, weight: &[i64], ctx: &OspContext) -> Result<Rational> {
    let rho = ctx.rho();
    let y: Vec<Rational> = weight.iter().zip(&rho).map(|(l, r)| (int(*l) + r).pow(2)).collect();
    let a: Vec<Rational> =
        (0..mu.part(0) + y.len() + 1).map(|k| (ctx.epsilon() + int(k as i64)).pow(2)).collect();
    if mu.len() > y.len() {
        return Ok(int(0));
    }
    factorial_schur_interpolated(mu, &y, &a)
}

/// Traceless vectors of the given weight in `(C^N)^{⊗k}` killed by every
/// raising operator `F_ij`, `i < j`.
pub fn weight_vectors(weight: &[i64], k: usize, ctx: &OspContext) -> Result<Vec<WeightVector>> {
    if weight.len() != ctx.m() {
        return Err(CapelliError::Domain(format!("weight needs {} coordinates", ctx.m())));
    }
    let n = ctx.n();
    let support = weight_support(k, n, |d| ctx.weight_of(d), weight);
    let rep = ctx.representation(k);
    let mut ops = contraction_ops(k, ctx)?;
    let labels = ctx.scheme.labels();
    for (a, &i) in labels.iter().enumerate() {
        for &j in &labels[a + 1..] {
            if let Some((g, _)) = Generator::f(i, j, ctx.kind) {
                ops.push(rep.generator(&g)?);
            }
        }
    }
    Ok(joint_kernel(&ops, &support, rep.dim())
        .into_iter()
        .map(|coords| WeightVector { k, coords, weight: weight.to_vec() })
        .collect())
}

/// Highest-weight vectors of weight `λ` in the traceless part of
/// `(C^N)^{⊗k}`.
pub fn osp_highest_weight_vectors(lambda: &Partition, k: usize, ctx: &OspContext) -> Result<Vec<WeightVector>> {
    if lambda.size() != k || lambda.len() > ctx.m() {
        return Err(CapelliError::Domain(format!("no weight {lambda} for {}_{} in degree {k}", ctx.kind, ctx.n())));
    }
    let w: Vec<i64> = (0..ctx.m()).map(|i| lambda.part(i) as i64).collect();
    let out = weight_vectors(&w, k, ctx)?;
    if out.is_empty() {
        return Err(CapelliError::Inconsistency(format!("no highest-weight vector of weight {lambda}")));
    }
    Ok(out)
}

/// Number of distinct words in `x` per length, for diagnostics.
pub fn word_length_profile<C: Ring>(x: &FreeAlgElem<C>) -> HashMap<usize, usize> {
    let mut h = HashMap::new();
    for w in x.terms().keys() {
        *h.entry(w.len()).or_insert(0) += 1;
    }
    h
}
