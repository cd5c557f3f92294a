//! The group algebra of `S_n` over a pluggable coefficient ring.
//!
//! Permutations multiply as maps, `(s t)(i) = s(t(i))`: the right factor
//! acts first.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::arith::{int, Field, RatFunc, Rational, Ring};
use crate::combinatorics::{Partition, StandardTableau};
use crate::error::{CapelliError, Result};
use crate::linalg::DenseMatrix;
use crate::symfun::{character, power_sum_product, MPoly, SymPoly};

/// A permutation of `{1..n}`, stored as 0-based images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n as u8).collect())
    }

    /// From 1-based images `[s(1), .., s(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(CapelliError::Domain(format!("{images:?} is not a permutation")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(images.iter().map(|&i| (i - 1) as u8).collect()))
    }

    /// The transposition `(a, b)` of `S_n`, 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Permutation> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(CapelliError::Domain(format!("bad transposition ({a},{b}) in S_{n}")));
        }
        let mut p = Permutation::identity(n);
        p.0.swap(a - 1, b - 1);
        Ok(p)
    }

    /// The cycle `(c_1 c_2 .. c_k)`: `c_1 -> c_2 -> .. -> c_1`.
    pub fn cycle(n: usize, cyc: &[usize]) -> Result<Permutation> {
        let mut p = Permutation::identity(n);
        for (k, &c) in cyc.iter().enumerate() {
            let next = cyc[(k + 1) % cyc.len()];
            if c == 0 || c > n || next == 0 || next > n {
                return Err(CapelliError::Domain(format!("cycle {cyc:?} outside 1..={n}")));
            }
            p.0[c - 1] = (next - 1) as u8;
        }
        Permutation::from_images(&p.images())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `s(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self * other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutation degree");
        Permutation(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation(inv)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn sign(&self) -> i64 {
        let ct = self.cycle_type();
        if (ct.size() - ct.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The image in `S_m` acting on `offset+1..offset+n`.
    pub fn embed(&self, m: usize, offset: usize) -> Result<Permutation> {
        if offset + self.degree() > m {
            return Err(CapelliError::DegreeMismatch { expected: m, found: offset + self.degree() });
        }
        let mut p = Permutation::identity(m);
        for (i, &v) in self.0.iter().enumerate() {
            p.0[offset + i] = (offset + v as usize) as u8;
        }
        Ok(p)
    }

    /// Indices `i` with `self = s_{w_1} s_{w_2} ... s_{w_k}`, `s_i = (i, i+1)`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut word = Vec::new();
        loop {
            let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else { break };
            w.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// All of `S_n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation(cur.clone()));
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images().iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for Permutation {
    type Err = CapelliError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')).unwrap_or(t).trim();
        if inner.is_empty() {
            return Ok(Permutation::identity(0));
        }
        let images = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| CapelliError::Domain(format!("cannot parse permutation {s:?}")))?;
        Permutation::from_images(&images)
    }
}

/// An element of the group algebra `C[S_n]`.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgElem<C> {
    n: usize,
    terms: BTreeMap<Permutation, C>,
}

impl<C: Ring> GroupAlgElem<C> {
    pub fn zero(n: usize) -> Self {
        GroupAlgElem { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(Permutation::identity(n), C::one())
    }

    pub fn from_perm(p: Permutation, c: C) -> Self {
        let mut x = Self::zero(p.degree());
        x.add_term(p, c);
        x
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, C)>) -> Result<Self> {
        let mut x = Self::zero(n);
        for (p, c) in terms {
            if p.degree() != n {
                return Err(CapelliError::DegreeMismatch { expected: n, found: p.degree() });
            }
            x.add_term(p, c);
        }
        Ok(x)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Permutation) -> C {
        self.terms.get(p).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, p: Permutation, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(v) => {
                v.add_assign(&c);
                if v.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(CapelliError::DegreeMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(C::neg)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (p, a) in &self.terms {
            out.add_term(p.clone(), c.mul(a));
        }
        out
    }

    /// The product `self * other`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: HashMap<Permutation, C> = HashMap::new();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                let prod = a.mul(b);
                acc.entry(s.compose(t)).and_modify(|v| v.add_assign(&prod)).or_insert(prod);
            }
        }
        Ok(GroupAlgElem { n: self.n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Image under `S_n -> S_m` acting on `offset+1..offset+n`.
    pub fn embed(&self, m: usize, offset: usize) -> Result<Self> {
        let mut out = Self::zero(m);
        for (p, c) in &self.terms {
            out.add_term(p.embed(m, offset)?, c.clone());
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> GroupAlgElem<D> {
        let mut out = GroupAlgElem::zero(self.n);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c));
        }
        out
    }

    /// Sum of coefficients over each conjugacy class.
    pub fn conjugacy_data(&self) -> BTreeMap<Partition, C> {
        let mut out: BTreeMap<Partition, C> = BTreeMap::new();
        for (p, c) in &self.terms {
            out.entry(p.cycle_type()).or_insert_with(C::zero).add_assign(c);
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

impl GroupAlgElem<Rational> {
    pub fn to_ratfunc(&self) -> GroupAlgElem<RatFunc> {
        self.map_coeffs(RatFunc::from_rational)
    }
}

impl GroupAlgElem<RatFunc> {
    /// Coefficientwise limit as `u -> point`.
    pub fn limit_at(&self, point: &Rational) -> Result<GroupAlgElem<Rational>> {
        let mut out = GroupAlgElem::zero(self.n);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.limit_at(point)?);
        }
        Ok(out)
    }
}

impl<C: Ring + fmt::Display> GroupAlgElem<C> {
    /// JSON array of `[permutation, coefficient]` string pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(p, c)| json!([p.to_string(), c.to_string()])).collect())
    }
}

impl<C: Ring + fmt::Display> fmt::Display for GroupAlgElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::symfun::fmt_sum(f, self.terms.iter(), |p: &Permutation| p.to_string())
    }
}

/// `z_p = (1,p) + (2,p) + ... + (p-1,p)`.
pub fn jucys_murphy<C: Ring>(p: usize, n: usize) -> Result<GroupAlgElem<C>> {
    if p == 0 || p > n {
        return Err(CapelliError::Domain(format!("Jucys-Murphy index {p} outside 1..={n}")));
    }
    let mut x = GroupAlgElem::zero(n);
    for q in 1..p {
        x.add_term(Permutation::transposition(n, q, p)?, C::one());
    }
    Ok(x)
}

/// Young's seminormal representation of `S_n` on the span of standard
/// tableaux of a shape.
///
/// With `r = 1/(c_{i+1} - c_i)` the generator `s_i` acts by `+1` or `-1`
/// when `i, i+1` share a row or a column, and otherwise by
/// `s_i v_T = r v_T + v_{s_i T}` when `i` lies in a higher row than `i+1`,
/// `s_i v_T = r v_T + (1 - r^2) v_{s_i T}` otherwise.
#[derive(Debug, Clone)]
pub struct SeminormalRep {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    gens: Vec<DenseMatrix<Rational>>,
}

impl SeminormalRep {
    pub fn new(shape: &Partition) -> SeminormalRep {
        let tableaux = StandardTableau::all(shape);
        let index: HashMap<Vec<usize>, usize> =
            tableaux.iter().enumerate().map(|(k, t)| (t.reading_word(), k)).collect();
        let n = shape.size();
        let d = tableaux.len();
        let mut gens = Vec::new();
        for i in 1..n {
            let mut m = DenseMatrix::zeros(d, d);
            for (k, t) in tableaux.iter().enumerate() {
                let (ra, ca) = t.position(i);
                let (rb, cb) = t.position(i + 1);
                if ra == rb {
                    m.set(k, k, int(1));
                } else if ca == cb {
                    m.set(k, k, int(-1));
                } else {
                    let c = t.contents();
                    let r = Rational::new(BigInt::from(1), BigInt::from(c[i] - c[i - 1]));
                    let other = index[&t.swap(i).expect("standard swap").reading_word()];
                    let off = if ra < rb { int(1) } else { int(1) - &r * &r };
                    // Column k holds the image of v_T.
                    m.set(k, k, r);
                    m.set(other, k, off);
                }
            }
            gens.push(m);
        }
        SeminormalRep { shape: shape.clone(), tableaux, gens }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.tableaux.iter().position(|s| s == t)
    }

    /// Matrix of `s_i = (i, i+1)`, 1-based.
    pub fn generator(&self, i: usize) -> &DenseMatrix<Rational> {
        &self.gens[i - 1]
    }

    pub fn matrix_of(&self, p: &Permutation) -> DenseMatrix<Rational> {
        let mut m = DenseMatrix::identity(self.dim());
        for i in p.adjacent_word() {
            m = m.mul(&self.gens[i - 1]);
        }
        m
    }

    /// Action of a group-algebra element.
    pub fn act<C: Ring>(&self, x: &GroupAlgElem<C>) -> Result<DenseMatrix<C>> {
        if x.degree() != self.shape.size() {
            return Err(CapelliError::DegreeMismatch { expected: self.shape.size(), found: x.degree() });
        }
        let d = self.dim();
        let mut out = DenseMatrix::zeros(d, d);
        for (p, c) in x.terms() {
            let m = self.matrix_of(p);
            for i in 0..d {
                for j in 0..d {
                    let v = m.get(i, j);
                    if !Ring::is_zero(v) {
                        out.add_at(i, j, &c.mul(&C::from_rational(v)));
                    }
                }
            }
        }
        Ok(out)
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `Phi_T = (dim/n!) sum_s <v_T, s^{-1} v_T> s` from matrix elements.
pub fn young_idempotent(t: &StandardTableau) -> GroupAlgElem<Rational> {
    let n = t.size();
    let rep = SeminormalRep::new(t.shape());
    let k = rep.index_of(t).expect("tableau of its own shape");
    let norm = Rational::new(BigInt::from(rep.dim()), factorial(n));
    let mut x = GroupAlgElem::zero(n);
    for p in Permutation::all(n) {
        let m = rep.matrix_of(&p.inverse());
        x.add_term(p, m.get(k, k) * &norm);
    }
    x
}

/// `phi_pq(u, v) = 1 - (p,q)/(u - v)` in `C(u)[S_n]`.
pub fn baxterized(p: usize, q: usize, u: &RatFunc, v: &RatFunc, n: usize) -> Result<GroupAlgElem<RatFunc>> {
    let diff = u.sub(v);
    let inv = diff.inv().map_err(CapelliError::from)?;
    let mut x = GroupAlgElem::identity(n);
    x.add_term(Permutation::transposition(n, p, q)?, inv.neg());
    Ok(x)
}

/// `Phi_T` from the fusion procedure: the ordered product of
/// `phi_pq(c_p + l_p u, c_q + l_q u)` over lexicographic pairs `p < q`,
/// taken at `u = 0` and scaled by `dim W_nu / n!`.
pub fn fusion_idempotent(t: &StandardTableau) -> Result<GroupAlgElem<Rational>> {
    let n = t.size();
    let c = t.contents();
    let l = t.row_indices();
    let arg = |p: usize| RatFunc::linear(int(l[p - 1] as i64 + 1), int(c[p - 1]));
    let mut acc = GroupAlgElem::<RatFunc>::identity(n);
    for p in 1..=n {
        for q in p + 1..=n {
            acc = acc.convolve(&baxterized(p, q, &arg(p), &arg(q), n)?)?;
        }
    }
    let value = acc
        .limit_at(&int(0))
        .map_err(|e| CapelliError::Inconsistency(format!("fusion product not regular at 0: {e}")))?;
    let norm = Rational::new(BigInt::from(t.shape().hook_dimension()), factorial(n));
    Ok(value.scale(&norm))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Elements of the hyperoctahedral group `H_n` in `S_{2n}` with the number of
/// factors `(s, n+s)` used.
fn hyperoctahedral_elements(n: usize) -> Vec<(Permutation, u32)> {
    let mut out = Vec::new();
    for d in Permutation::all(n) {
        let mut diag = vec![0usize; 2 * n];
        for i in 1..=n {
            diag[i - 1] = d.apply(i);
            diag[n + i - 1] = n + d.apply(i);
        }
        let diag = Permutation::from_images(&diag).expect("diagonal embedding");
        for mask in 0u32..(1 << n) {
            let mut t = Permutation::identity(2 * n);
            for s in 0..n {
                if mask & (1 << s) != 0 {
                    t = t.compose(&Permutation::transposition(2 * n, s + 1, n + s + 1).expect("valid"));
                }
            }
            out.push((diag.compose(&t), mask.count_ones()));
        }
    }
    out
}

/// `h_pm = (1/(n! 2^n)) sum_{s in H_n} chi_pm(s) s` in `C[S_{2n}]`.
pub fn hyperoctahedral_idempotent(n: usize, sign: Sign) -> GroupAlgElem<Rational> {
    let norm = Rational::new(BigInt::from(1), factorial(n) * BigInt::from(2).pow(n as u32));
    let mut x = GroupAlgElem::zero(2 * n);
    for (p, k) in hyperoctahedral_elements(n) {
        let c = if sign == Sign::Minus && k % 2 == 1 { -norm.clone() } else { norm.clone() };
        x.add_term(p, c);
    }
    x
}

/// `Psi_T(u) = prod_p (1 + ((1,n+p) + .. + (p-1,n+p))/(2u + c_p)) Phi_T`,
/// factors left to right in `p`, `Phi_T` acting on `1..n`.
pub fn psi_t(t: &StandardTableau) -> Result<GroupAlgElem<RatFunc>> {
    let n = t.size();
    let c = t.contents();
    let mut acc = GroupAlgElem::<RatFunc>::identity(2 * n);
    for p in 1..=n {
        if p == 1 {
            continue;
        }
        let den = RatFunc::linear(int(2), int(c[p - 1])).inv()?;
        let mut factor = GroupAlgElem::identity(2 * n);
        for q in 1..p {
            factor.add_term(Permutation::transposition(2 * n, q, n + p)?, den.clone());
        }
        acc = acc.convolve(&factor)?;
    }
    acc.convolve(&young_idempotent(t).to_ratfunc().embed(2 * n, 0)?)
}

/// `X_nu = (1/n!) sum_s chi_nu(s) s`.
pub fn character_average(nu: &Partition) -> Result<GroupAlgElem<Rational>> {
    let n = nu.size();
    let norm = Rational::new(BigInt::from(1), factorial(n));
    let mut x = GroupAlgElem::zero(n);
    for p in Permutation::all(n) {
        let chi = character(nu, &p.cycle_type())?;
        x.add_term(p, int(chi) * &norm);
    }
    Ok(x)
}

/// Which corner `h_a C[S_2n] h_b` an element lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// `h_- x h_+`.
    MinusPlus,
    /// `h_+ x h_-`.
    PlusMinus,
}

impl Side {
    pub fn signs(self) -> (Sign, Sign) {
        match self {
            Side::MinusPlus => (Sign::Minus, Sign::Plus),
            Side::PlusMinus => (Sign::Plus, Sign::Minus),
        }
    }
}

/// `h_a x h_b` for the corner of `side`.
pub fn sandwich<C: Ring>(x: &GroupAlgElem<C>, side: Side) -> Result<GroupAlgElem<C>> {
    if x.degree() % 2 != 0 {
        return Err(CapelliError::Domain(format!("odd degree {} has no hyperoctahedral corner", x.degree())));
    }
    let k = x.degree() / 2;
    let (a, b) = side.signs();
    let ha = hyperoctahedral_idempotent(k, a).map_coeffs(C::from_rational);
    let hb = hyperoctahedral_idempotent(k, b).map_coeffs(C::from_rational);
    ha.convolve(x)?.convolve(&hb)
}

/// The scalar by which `h_a Psi_T(u) h_b` acts on `W_omega` relative to
/// `h_a X_nu h_b`, where `omega = (2mu_1, 2mu_1, 2mu_2, 2mu_2, ..)`:
/// `prod (u + b_i)(u + b_i +- 1/2) / prod (u + c_p/2)`, with `+` for
/// [`Side::MinusPlus`].
pub fn corner_scalar(t: &StandardTableau, mu: &Partition, side: Side) -> Result<RatFunc> {
    if 2 * mu.size() != t.size() {
        return Err(CapelliError::Domain(format!("{mu} does not have half the size of {}", t.shape())));
    }
    let half = match side {
        Side::MinusPlus => Rational::new(BigInt::from(1), BigInt::from(2)),
        Side::PlusMinus => Rational::new(BigInt::from(-1), BigInt::from(2)),
    };
    let mut num = RatFunc::one();
    for (r, c) in mu.boxes() {
        let b = int(c as i64 - r as i64);
        num = num.mul(&RatFunc::linear(int(1), b.clone())).mul(&RatFunc::linear(int(1), b + &half));
    }
    let mut den = RatFunc::one();
    for c in t.contents() {
        den = den.mul(&RatFunc::linear(int(2), int(c)));
    }
    num.scale(&int(1 << t.size())).div(&den).map_err(CapelliError::from)
}

/// `omega = (2mu_1, 2mu_1, 2mu_2, 2mu_2, ..)`.
pub fn paired_shape(mu: &Partition) -> Partition {
    Partition::from_unsorted(mu.parts().iter().flat_map(|&p| [2 * p, 2 * p]).collect())
}

/// Permutation of `1..n` in `S_{2n}` with consecutive cycles of lengths `2 rho_i`.
pub fn double_coset_representative(rho: &Partition, n: usize) -> Permutation {
    let mut p = Permutation::identity(2 * n);
    let mut start = 1;
    for &r in rho.parts() {
        let cyc: Vec<usize> = (start..start + 2 * r).collect();
        p = p.compose(&Permutation::cycle(2 * n, &cyc).expect("cycle in range"));
        start += 2 * r;
    }
    p
}

/// The characteristic map of the corner `side` into symmetric polynomials
/// in `x_1..x_M`: `h_a s h_b -> 2^{l(rho)} p_rho(x_1^2, .., x_M^2)`.
pub fn characteristic_map<K: Field>(x: &GroupAlgElem<K>, side: Side, m_vars: usize) -> Result<SymPoly<K>> {
    let projected = sandwich(x, side)?;
    if projected != *x {
        return Err(CapelliError::Domain("element is not in the hyperoctahedral corner".into()));
    }
    let n = x.degree() / 2;
    let mut out = MPoly::zero(m_vars);
    if x.is_zero() {
        return Ok(out);
    }
    if n % 2 != 0 {
        return Err(CapelliError::Domain("nonzero element in a zero corner".into()));
    }
    let mut residual = x.clone();
    for rho in Partition::all(n / 2) {
        let rep = double_coset_representative(&rho, n);
        let b = sandwich(&GroupAlgElem::from_perm(rep, K::one()), side)?;
        let Some((tau, bt)) = b.terms().iter().next() else {
            return Err(CapelliError::Inconsistency(format!("vanishing double coset element for {rho}")));
        };
        let a = x.coeff(tau).div(bt)?;
        if a.is_zero() {
            continue;
        }
        residual = residual.sub(&b.scale(&a))?;
        let weight = K::from_int(1 << rho.len());
        let p = power_sum_product(&rho, m_vars).in_squares().map_coeffs(K::from_rational);
        out = out.add(&p.scale(&a.mul(&weight)));
    }
    if !residual.is_zero() {
        return Err(CapelliError::Domain("element is not spanned by the double coset basis".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tab(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn permutation_basics() {
        let s = perm("[2,3,1]");
        let t = perm("[2,1,3]");
        // (s t)(1) = s(t(1)) = s(2) = 3.
        assert_eq!(s.compose(&t).apply(1), 3);
        assert!(s.compose(&s.inverse()).is_identity());
        assert_eq!(s.cycle_type().to_string(), "[3]");
        assert_eq!(Permutation::all(4).len(), 24);
        assert!("[1,1]".parse::<Permutation>().is_err());
        for p in Permutation::all(4) {
            let mut q = Permutation::identity(4);
            for i in p.adjacent_word() {
                q = q.compose(&Permutation::transposition(4, i, i + 1).unwrap());
            }
            assert_eq!(q, p);
        }
    }

    #[test]
    fn convolution_examples() {
        let t = GroupAlgElem::from_perm(perm("[2,1]"), int(1));
        assert_eq!(t.convolve(&t).unwrap(), GroupAlgElem::identity(2));
        let id = GroupAlgElem::<Rational>::identity(2);
        assert_eq!(id.convolve(&t).unwrap(), t);
        assert!(id.convolve(&GroupAlgElem::identity(3)).is_err());
        let theta_prime = id.sub(&t).unwrap();
        let prod = theta_prime.convolve(&id).unwrap().convolve(&theta_prime).unwrap();
        assert_eq!(prod, theta_prime.scale(&int(2)));
    }

    #[test]
    fn jucys_murphy_examples() {
        assert!(jucys_murphy::<Rational>(1, 3).unwrap().is_zero());
        assert_eq!(jucys_murphy::<Rational>(2, 2).unwrap(), GroupAlgElem::from_perm(perm("[2,1]"), int(1)));
        assert_eq!(jucys_murphy::<Rational>(3, 3).unwrap().len(), 2);
        assert!(jucys_murphy::<Rational>(4, 3).is_err());
    }

    #[test]
    fn small_idempotents() {
        let half = rat(1, 2);
        let sym = GroupAlgElem::from_terms(2, [(perm("[1,2]"), half.clone()), (perm("[2,1]"), half.clone())]).unwrap();
        let anti = GroupAlgElem::from_terms(2, [(perm("[1,2]"), half.clone()), (perm("[2,1]"), -half.clone())]).unwrap();
        assert_eq!(young_idempotent(&tab(&[&[1, 2]])), sym);
        assert_eq!(young_idempotent(&tab(&[&[1], &[2]])), anti);
        assert_eq!(young_idempotent(&tab(&[&[1]])), GroupAlgElem::identity(1));
        assert_eq!(fusion_idempotent(&tab(&[&[1, 2]])).unwrap(), sym);
        assert_eq!(fusion_idempotent(&tab(&[&[1]])).unwrap(), GroupAlgElem::identity(1));
        let data = anti.conjugacy_data();
        assert_eq!(data[&"[1,1]".parse::<Partition>().unwrap()], half);
        assert_eq!(data[&"[2]".parse::<Partition>().unwrap()], -half);
    }

    #[test]
    fn hyperoctahedral_small() {
        let hp = hyperoctahedral_idempotent(1, Sign::Plus);
        assert_eq!(hp, GroupAlgElem::from_terms(2, [(perm("[1,2]"), rat(1, 2)), (perm("[2,1]"), rat(1, 2))]).unwrap());
        let hm = hyperoctahedral_idempotent(1, Sign::Minus);
        assert_eq!(hm.coeff(&perm("[2,1]")), rat(-1, 2));
        for s in [Sign::Plus, Sign::Minus] {
            let h = hyperoctahedral_idempotent(2, s);
            assert_eq!(h.len(), 8);
            assert_eq!(h.convolve(&h).unwrap(), h);
        }
    }

    #[test]
    fn characteristic_map_examples() {
        let sigma = GroupAlgElem::from_perm(Permutation::transposition(4, 1, 2).unwrap(), RatFunc::one());
        let x = sandwich(&sigma, Side::MinusPlus).unwrap();
        let ch = characteristic_map(&x, Side::MinusPlus, 2).unwrap();
        assert_eq!(ch.to_string(), "2*x_1^2 + 2*x_2^2");
        let zero = GroupAlgElem::<RatFunc>::zero(4);
        assert!(characteristic_map(&zero, Side::PlusMinus, 2).unwrap().is_zero());
        let bad = GroupAlgElem::<RatFunc>::identity(4);
        assert!(characteristic_map(&bad, Side::MinusPlus, 2).is_err());
    }

    #[test]
    fn psi_small() {
        let t = tab(&[&[1]]);
        assert_eq!(psi_t(&t).unwrap(), young_idempotent(&t).to_ratfunc().embed(2, 0).unwrap());
    }
}
