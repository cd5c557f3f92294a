//! Exhaustive verification suites over bounded ranges of shapes and
//! dimensions, reported as one [`VerdictRecord`] per case.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{RatFunc, Rational, Ring};
use crate::combinatorics::{Partition, StandardTableau};
use crate::error::{CapelliError, Result};
use crate::gl::{
    act_in_tensor_power, agree_in_tensor_powers, capelli_eigenvalue, capelli_element, highest_weight_vectors,
    shifted_capelli, GlContext,
};
use crate::osp::{
    auxiliary_check, b_mu_eigenvalue, b_mu_specialization, corollary36_check, elements_agree, f_t, f_t_alt,
    invariance_check, leading_symbol, matrices_agree, osp_highest_weight_vectors, projector_identities_check,
    reflection_check, theorem34_formula, traceless_compatibility_check, weight_vectors, z_nu, Auxiliary, OspContext,
    Specialization,
};
use crate::symfun::{plethysm_coeff, plethysm_expand};
use crate::symgroup::{
    character_average, corner_scalar, fusion_idempotent, paired_shape, psi_t, sandwich, young_idempotent,
    SeminormalRep, Side,
};
use crate::tensor::{Family, Kind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of one case of a suite. A failing record always carries a
/// witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictRecord {
    pub suite: String,
    pub case: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Milliseconds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<u64>,
}

impl VerdictRecord {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Gl,
    Reflection,
    Znu,
    Leading,
    Plethysm,
    Bmu,
    Fusion,
    Hyperoctahedral,
}

impl Suite {
    pub fn all() -> [Suite; 8] {
        [
            Suite::Fusion,
            Suite::Gl,
            Suite::Reflection,
            Suite::Znu,
            Suite::Leading,
            Suite::Plethysm,
            Suite::Hyperoctahedral,
            Suite::Bmu,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gl => "gl",
            Suite::Reflection => "reflection",
            Suite::Znu => "znu",
            Suite::Leading => "leading",
            Suite::Plethysm => "plethysm",
            Suite::Bmu => "bmu",
            Suite::Fusion => "fusion",
            Suite::Hyperoctahedral => "hyperoctahedral",
        }
    }

    /// Default `(max n, max N)` of the suite.
    pub fn default_bounds(self) -> (usize, usize) {
        match self {
            Suite::Gl => (3, 3),
            Suite::Reflection => (2, 4),
            Suite::Znu => (3, 3),
            Suite::Leading => (4, 4),
            Suite::Plethysm => (4, 4),
            Suite::Bmu => (2, 4),
            Suite::Fusion => (4, 0),
            Suite::Hyperoctahedral => (2, 0),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CapelliError;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::all()
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| CapelliError::Domain(format!("unknown suite {s:?}")))
    }
}

/// Parses a suite selection; `all` expands to every suite.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        Ok(Suite::all().to_vec())
    } else {
        Ok(vec![s.parse()?])
    }
}

/// Overrides for the default bounds of a suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: Option<usize>,
    pub max_dim: Option<usize>,
    pub timing: bool,
}

type Check = Box<dyn Fn() -> Result<Option<String>> + Send + Sync>;

struct Case {
    name: String,
    check: Check,
}

fn case(name: impl Into<String>, check: impl Fn() -> Result<Option<String>> + Send + Sync + 'static) -> Case {
    Case { name: name.into(), check: Box::new(check) }
}

/// `None` when `ok`, otherwise the witness.
fn expect(ok: bool, witness: impl FnOnce() -> String) -> Option<String> {
    if ok {
        None
    } else {
        Some(witness())
    }
}

/// Runs the cases of `suite` in parallel and returns the records in case
/// order.
pub fn run_suite(suite: Suite, bounds: Bounds) -> Result<Vec<VerdictRecord>> {
    let (dn, dd) = suite.default_bounds();
    let max_n = bounds.max_n.unwrap_or(dn);
    let max_dim = bounds.max_dim.unwrap_or(dd);
    let cases = match suite {
        Suite::Gl => gl_cases(max_n, max_dim),
        Suite::Reflection => reflection_cases(max_dim),
        Suite::Znu => znu_cases(max_n, max_dim),
        Suite::Leading => leading_cases(max_n, max_dim),
        Suite::Plethysm => plethysm_cases(max_n, max_dim),
        Suite::Bmu => bmu_cases(max_n, max_dim),
        Suite::Fusion => fusion_cases(max_n),
        Suite::Hyperoctahedral => hyperoctahedral_cases(max_n),
    };
    Ok(cases
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let (status, witness) = match (c.check)() {
                Ok(None) => (Status::Pass, None),
                Ok(Some(w)) => (Status::Fail, Some(w)),
                Err(e) => (Status::Fail, Some(format!("error: {e}"))),
            };
            VerdictRecord {
                suite: suite.name().to_string(),
                case: c.name.clone(),
                status,
                witness,
                elapsed: bounds.timing.then(|| start.elapsed().as_millis() as u64),
            }
        })
        .collect())
}

pub fn run_suites(suites: &[Suite], bounds: Bounds) -> Result<Vec<VerdictRecord>> {
    let mut out = Vec::new();
    for s in suites {
        out.extend(run_suite(*s, bounds)?);
    }
    Ok(out)
}

fn osp_contexts(dims: impl IntoIterator<Item = usize>) -> Vec<OspContext> {
    let mut out = Vec::new();
    for n in dims {
        for kind in Kind::all() {
            if let Ok(ctx) = OspContext::new(n, kind) {
                out.push(ctx);
            }
        }
    }
    out
}

fn fusion_cases(max_n: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for nu in Partition::all(n) {
            out.push(case(format!("nu={nu}"), move || {
                for t in StandardTableau::all(&nu) {
                    if fusion_idempotent(&t)? != young_idempotent(&t) {
                        return Ok(Some(format!("tableau {t}")));
                    }
                }
                Ok(None)
            }));
        }
    }
    out
}

const GL_POWERS: usize = 3;

fn gl_cases(max_n: usize, max_dim: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for n_dim in 2..=max_dim {
        for n in 1..=max_n {
            for nu in Partition::with_max_len(n, n_dim) {
                out.push(case(format!("N={n_dim} nu={nu}"), move || gl_case(&nu, n_dim)));
            }
        }
    }
    out
}

fn gl_case(nu: &Partition, n_dim: usize) -> Result<Option<String>> {
    let ctx = GlContext::new(n_dim)?;
    let n = nu.size();
    let tabs = StandardTableau::all(nu);
    let c0 = shifted_capelli(&tabs[0], &ctx)?;
    if c0.degree().is_some_and(|d| d > n) {
        return Ok(Some("word longer than n".into()));
    }
    for t in &tabs[1..] {
        if !agree_in_tensor_powers(&c0, &shifted_capelli(t, &ctx)?, GL_POWERS, &ctx)? {
            return Ok(Some(format!("tableau {t} gives a different element")));
        }
    }
    let at_zero = capelli_element(&tabs[0], &ctx)?;
    for k in 0..=GL_POWERS {
        let m = act_in_tensor_power(&c0, k, &ctx)?;
        for (g, e) in ctx.representation(k).all_generators(Family::E)? {
            if !m.commutator(&e.map(|x| RatFunc::constant(x.clone()))).is_zero() {
                return Ok(Some(format!("does not commute with {g} at k={k}")));
            }
        }
        let m0 = act_in_tensor_power(&at_zero, k, &ctx)?;
        for lam in Partition::with_max_len(k, n_dim) {
            let expected = capelli_eigenvalue(nu, &lam, n_dim, &RatFunc::var())?;
            let vanishes = capelli_eigenvalue(nu, &lam, n_dim, &RatFunc::zero())?.is_zero();
            for v in highest_weight_vectors(&lam, k, &ctx)? {
                if v.eigenvalue_of(&m).as_ref() != Some(&expected) {
                    return Ok(Some(format!("eigenvalue on {lam} differs from {expected}")));
                }
                if k <= n {
                    let value = v.eigenvalue_of(&m0);
                    if value.is_none() || value.as_ref().is_some_and(|x| x.is_zero()) != (lam != *nu) {
                        return Ok(Some(format!("vanishing law fails on {lam}")));
                    }
                    if vanishes != (lam != *nu) {
                        return Ok(Some(format!("eigenvalue formula vanishing fails on {lam}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

const OSP_POWERS: usize = 2;

fn reflection_cases(max_dim: usize) -> Vec<Case> {
    let mut out = Vec::new();
    let pairs = [(2, Kind::Orthogonal), (3, Kind::Orthogonal), (2, Kind::Symplectic), (4, Kind::Symplectic)];
    for (n, kind) in pairs.into_iter().filter(|(n, _)| *n <= max_dim) {
        for k in 0..=OSP_POWERS {
            out.push(case(format!("{kind}{n} reflection k={k}"), move || {
                let ctx = OspContext::new(n, kind)?;
                Ok(expect(reflection_check(&ctx, k)?, || "two sides differ on the grid".into()))
            }));
        }
    }
    for ctx in osp_contexts(1..=max_dim.min(3)) {
        let (n, kind) = (ctx.n(), ctx.kind());
        for which in Auxiliary::all() {
            for k in 0..=OSP_POWERS {
                out.push(case(format!("{kind}{n} {which:?} k={k}"), move || {
                    Ok(expect(auxiliary_check(n, kind, which, k)?, || "two sides differ on the grid".into()))
                }));
            }
        }
        let c = ctx.clone();
        out.push(case(format!("{kind}{n} traceless restriction m=2"), move || {
            Ok(expect(traceless_compatibility_check(&c, 2)?, || "restricted actions differ".into()))
        }));
        out.push(case(format!("{kind}{n} projector identities"), move || {
            for size in 1..=3 {
                for nu in Partition::with_max_len(size, n) {
                    for t in StandardTableau::all(&nu) {
                        let (a, b) = projector_identities_check(&t, n, kind)?;
                        if !(a && b) {
                            return Ok(Some(format!("tableau {t}")));
                        }
                    }
                }
            }
            Ok(None)
        }));
    }
    out
}

fn znu_cases(max_n: usize, max_dim: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for ctx in osp_contexts(1..=max_dim) {
        for n in 1..=max_n {
            for nu in Partition::with_max_len(n, ctx.n()) {
                let c = ctx.clone();
                out.push(case(format!("{}{} nu={nu}", ctx.kind(), ctx.n()), move || znu_case(&nu, &c)));
            }
        }
    }
    out
}

fn znu_case(nu: &Partition, ctx: &OspContext) -> Result<Option<String>> {
    let tabs = StandardTableau::all(nu);
    let z0 = z_nu(&tabs[0], ctx)?;
    if z0.degree().is_some_and(|d| d > nu.size()) {
        return Ok(Some("word longer than n".into()));
    }
    for t in &tabs {
        if !matrices_agree(&f_t(t, ctx)?, &f_t_alt(t, ctx)?, ctx, OSP_POWERS)? {
            return Ok(Some(format!("F_T and its alternative form differ for {t}")));
        }
        if !elements_agree(&z0, &z_nu(t, ctx)?, ctx, OSP_POWERS + 1)? {
            return Ok(Some(format!("tableau {t} gives a different element")));
        }
    }
    for k in 0..=OSP_POWERS {
        if !invariance_check(&z0, ctx, k)? {
            return Ok(Some(format!("not invariant at k={k}")));
        }
    }
    Ok(None)
}

fn leading_cases(max_n: usize, max_dim: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for ctx in osp_contexts(2..=max_dim) {
        for n in (2..=max_n).step_by(2) {
            for nu in Partition::with_max_len(n, ctx.n()) {
                let c = ctx.clone();
                out.push(case(format!("{}{} nu={nu}", ctx.kind(), ctx.n()), move || {
                    let z = z_nu(&StandardTableau::row_tableau(&nu), &c)?;
                    let symbol = leading_symbol(&z, nu.size(), &c)?;
                    let formula = theorem34_formula(&nu, &c)?;
                    if symbol != formula {
                        return Ok(Some(format!("symbol {symbol} but formula {formula}")));
                    }
                    Ok(expect(nu.domino_decomposable() || symbol.is_zero(), || {
                        format!("non-zero symbol {symbol} for a shape without domino tiling")
                    }))
                }));
            }
        }
    }
    out
}

fn plethysm_cases(max_n: usize, max_dim: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for m in 1..=max_n / 2 {
        for n in 2..=max_dim {
            for kind in Kind::all().into_iter().filter(|k| k.admits(n)) {
                out.push(case(format!("{kind}{n} m={m}"), move || {
                    Ok(expect(corollary36_check(m, n, kind)?, || "generating identity fails".into()))
                }));
            }
        }
        for n in 1..=max_dim.max(2 * m) {
            out.push(case(format!("expansion m={m} N={n}"), move || {
                for mu in Partition::all(m) {
                    for (nu, l) in plethysm_expand(&mu, n)? {
                        if plethysm_coeff(&mu, &nu)? != l {
                            return Ok(Some(format!("coefficient of {nu} in {mu}")));
                        }
                    }
                }
                Ok(None)
            }));
        }
    }
    out
}

fn bmu_cases(max_n: usize, max_dim: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for ctx in osp_contexts(2..=max_dim) {
        for m in 1..=max_n / 2 {
            for family in [Specialization::Row, Specialization::Column] {
                let c = ctx.clone();
                out.push(case(format!("{}{} {family:?} m={m}", ctx.kind(), ctx.n()), move || {
                    bmu_case(m, &c, family)
                }));
            }
        }
    }
    if max_dim >= 4 {
        out.push(case("so4 Column m=2 dual weight", || {
            let ctx = OspContext::new(4, Kind::Orthogonal)?;
            let b = b_mu_specialization(2, &ctx, Specialization::Column)?;
            let m = ctx.representation(2).act(&b)?;
            let mut values = Vec::new();
            for w in [[1, 1], [1, -1]] {
                for v in weight_vectors(&w, 2, &ctx)? {
                    values.push(v.eigenvalue_of(&m));
                }
            }
            Ok(expect(values.len() == 2 && values[0].is_some() && values[0] == values[1], || {
                format!("scalars {values:?}")
            }))
        }));
    }
    out
}

fn bmu_case(m: usize, ctx: &OspContext, family: Specialization) -> Result<Option<String>> {
    let (_, mu) = family.shapes(m);
    if mu.len() > ctx.m() {
        return Ok(None);
    }
    let b = b_mu_specialization(m, ctx, family)?;
    for k in 0..=m {
        let act = ctx.representation(k).act(&b)?;
        for lam in Partition::with_max_len(k, ctx.m()) {
            let weight: Vec<i64> = (0..ctx.m()).map(|i| lam.part(i) as i64).collect();
            let expected = b_mu_eigenvalue(&mu, &weight, ctx)?;
            if expected.is_zero() != (lam != mu) {
                return Ok(Some(format!("eigenvalue formula vanishing fails on {lam}")));
            }
            for v in osp_highest_weight_vectors(&lam, k, ctx)? {
                let got: Option<Rational> = v.eigenvalue_of(&act);
                if got.as_ref() != Some(&expected) {
                    return Ok(Some(format!("on {lam}: expected {expected}, got {got:?}")));
                }
            }
        }
    }
    Ok(None)
}

fn hyperoctahedral_cases(max_n: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for n in (2..=max_n).step_by(2) {
        for nu in Partition::all(n) {
            for side in [Side::MinusPlus, Side::PlusMinus] {
                let nu = nu.clone();
                out.push(case(format!("nu={nu} {side:?}"), move || hyperoctahedral_case(&nu, side)));
            }
        }
    }
    out
}

fn hyperoctahedral_case(nu: &Partition, side: Side) -> Result<Option<String>> {
    let n = nu.size();
    let t = StandardTableau::row_tableau(nu);
    let x_nu = character_average(nu)?.embed(2 * n, 0)?;
    let phi = young_idempotent(&t).embed(2 * n, 0)?;
    let x_corner = sandwich(&x_nu, side)?;
    if sandwich(&phi, side)? != x_corner {
        return Ok(Some("corners of Phi_T and X_nu differ".into()));
    }
    let psi_corner = sandwich(&psi_t(&t)?, side)?;
    let x_corner = x_corner.to_ratfunc();
    let mut nontrivial = false;
    for mu in Partition::all(n / 2) {
        let omega = paired_shape(&mu);
        let rep = SeminormalRep::new(&omega);
        let scalar = corner_scalar(&t, &mu, side)?;
        let lhs = rep.act(&psi_corner)?;
        if lhs != rep.act(&x_corner.scale(&scalar))? {
            return Ok(Some(format!("actions differ on W_{omega}")));
        }
        nontrivial |= !lhs.is_zero();
    }
    Ok(expect(nontrivial, || "both sides act by zero".into()))
}
