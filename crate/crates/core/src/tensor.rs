//! Tensor powers of the vector representation.
//!
//! Sparse matrices over a pluggable ring, the free algebra on matrix-unit
//! symbols, the operators `P`, `Q`, `R(u,v)`, `R~(u,v)` and the action of
//! symbols on `(C^N)^{⊗k}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};
use smallvec::SmallVec;

use crate::arith::{Field, Rational, Ring};
use crate::error::{CapelliError, Result};
use crate::symfun::fmt_sum;
use crate::symgroup::{GroupAlgElem, Permutation};

/// Bilinear form type: symmetric (orthogonal) or skew (symplectic).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Orthogonal,
    Symplectic,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Orthogonal => "so",
            Kind::Symplectic => "sp",
        }
    }

    /// `+1/2` for `so_N`, `-1/2` for `sp_N`.
    pub fn eta(self) -> Rational {
        match self {
            Kind::Orthogonal => crate::arith::rat(1, 2),
            Kind::Symplectic => crate::arith::rat(-1, 2),
        }
    }

    /// `ε_ij`: `sgn i · sgn j` for the skew form, `1` for the symmetric one.
    pub fn epsilon(self, i: i8, j: i8) -> i64 {
        match self {
            Kind::Orthogonal => 1,
            Kind::Symplectic => (i.signum() * j.signum()) as i64,
        }
    }

    pub fn all() -> [Kind; 2] {
        [Kind::Orthogonal, Kind::Symplectic]
    }

    /// Whether this form exists in dimension `n`.
    pub fn admits(self, n: usize) -> bool {
        n >= 1 && (self == Kind::Orthogonal || n % 2 == 0)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = CapelliError;

    fn from_str(s: &str) -> Result<Kind> {
        match s.trim().to_ascii_lowercase().as_str() {
            "so" | "o" | "orthogonal" => Ok(Kind::Orthogonal),
            "sp" | "symplectic" => Ok(Kind::Symplectic),
            other => Err(CapelliError::Domain(format!("unknown form kind `{other}`"))),
        }
    }
}

/// Basis labels of `C^N` and their bijection with positions `0..N`.
///
/// Signed schemes use `-M..-1, [0], 1..M` in increasing order, so negation
/// of labels is `pos ↦ N-1-pos`. Plain schemes use `1..N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexScheme {
    labels: Vec<i8>,
    signed: bool,
}

impl IndexScheme {
    pub fn signed(n: usize) -> IndexScheme {
        assert!((1..=60).contains(&n), "dimension out of range");
        let m = (n / 2) as i8;
        let mut labels: Vec<i8> = (1..=m).rev().map(|k| -k).collect();
        if n % 2 == 1 {
            labels.push(0);
        }
        labels.extend(1..=m);
        IndexScheme { labels, signed: true }
    }

    pub fn plain(n: usize) -> IndexScheme {
        assert!((1..=60).contains(&n), "dimension out of range");
        IndexScheme { labels: (1..=n as i8).collect(), signed: false }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn is_signed(&self) -> bool {
        self.signed
    }

    pub fn labels(&self) -> &[i8] {
        &self.labels
    }

    pub fn label(&self, pos: usize) -> i8 {
        self.labels[pos]
    }

    pub fn position(&self, label: i8) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Position of `-label(pos)`; only meaningful for signed schemes.
    pub fn neg_position(&self, pos: usize) -> usize {
        debug_assert!(self.signed);
        self.dim() - 1 - pos
    }

    fn require_signed(&self) -> Result<()> {
        if self.signed {
            Ok(())
        } else {
            Err(CapelliError::Domain("operation needs signed labels".into()))
        }
    }
}

/// Digits of a tensor index, most significant (slot 1) first.
pub fn digits(index: usize, n: usize, k: usize) -> SmallVec<[usize; 8]> {
    let mut out: SmallVec<[usize; 8]> = SmallVec::from_elem(0, k);
    let mut x = index;
    for slot in (0..k).rev() {
        out[slot] = x % n;
        x /= n;
    }
    out
}

pub fn undigits(d: &[usize], n: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * n + x)
}

/// Square sparse matrix stored by rows; no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<R> {
    dim: usize,
    rows: Vec<Vec<(usize, R)>>,
}

impl<R: Ring> SparseMatrix<R> {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn scalar(dim: usize, c: R) -> Self {
        if c.is_zero() {
            return Self::zero(dim);
        }
        SparseMatrix { dim, rows: (0..dim).map(|i| vec![(i, c.clone())]).collect() }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, R::one())
    }

    /// Sums the given entries; repeated coordinates accumulate.
    pub fn from_triplets(dim: usize, entries: impl IntoIterator<Item = (usize, usize, R)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, R>> = vec![BTreeMap::new(); dim];
        for (i, j, v) in entries {
            assert!(i < dim && j < dim, "entry ({i},{j}) outside dimension {dim}");
            match acc[i].get_mut(&j) {
                Some(x) => x.add_assign(&v),
                None => {
                    acc[i].insert(j, v);
                }
            }
        }
        SparseMatrix { dim, rows: acc.into_iter().map(Self::pack).collect() }
    }

    fn pack(row: BTreeMap<usize, R>) -> Vec<(usize, R)> {
        row.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[(usize, R)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => R::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
    }

    fn merge(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        self.check_dim(other);
        let zero = R::zero();
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut x, mut y) = (0, 0);
                while x < a.len() || y < b.len() {
                    let ja = a.get(x).map_or(usize::MAX, |e| e.0);
                    let jb = b.get(y).map_or(usize::MAX, |e| e.0);
                    let (j, v) = if ja < jb {
                        x += 1;
                        (ja, f(&a[x - 1].1, &zero))
                    } else if jb < ja {
                        y += 1;
                        (jb, f(&zero, &b[y - 1].1))
                    } else {
                        x += 1;
                        y += 1;
                        (ja, f(&a[x - 1].1, &b[y - 1].1))
                    };
                    if !v.is_zero() {
                        out.push((j, v));
                    }
                }
                out
            })
            .collect();
        SparseMatrix { dim: self.dim, rows }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg())
    }

    /// `c · self`, with `c` multiplied on the left of every entry.
    pub fn scale_left(&self, c: &R) -> Self {
        self.map(|v| c.mul(v))
    }

    /// `self · c`, with `c` multiplied on the right of every entry.
    pub fn scale_right(&self, c: &R) -> Self {
        self.map(|v| v.mul(c))
    }

    /// Row-parallel product; each row is accumulated sequentially in column
    /// order, so the result does not depend on scheduling.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_dim(other);
        let rows = self
            .rows
            .par_iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, R> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.rows[*k] {
                        let p = a.mul(b);
                        match acc.get_mut(j) {
                            Some(x) => x.add_assign(&p),
                            None => {
                                acc.insert(*j, p);
                            }
                        }
                    }
                }
                Self::pack(acc)
            })
            .collect();
        SparseMatrix { dim: self.dim, rows }
    }

    pub fn trace(&self) -> R {
        let mut t = R::zero();
        for i in 0..self.dim {
            t.add_assign(&self.get(i, i));
        }
        t
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&R) -> D + Sync) -> SparseMatrix<D> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, f(v))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { dim: self.dim, rows }
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(self.dim, self.entries().map(|(i, j, v)| (j, i, v.clone())))
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        self.rows
            .iter()
            .map(|r| {
                let mut s = R::zero();
                for (j, a) in r {
                    if !v[*j].is_zero() {
                        s.add_assign(&a.mul(&v[*j]));
                    }
                }
                s
            })
            .collect()
    }

    /// Kronecker product `self ⊗ other`, with `self` on the more significant
    /// index; entries multiply as `a·b`.
    pub fn kron(&self, other: &Self) -> Self {
        let d = other.dim;
        let entries = self.entries().flat_map(|(i, j, a)| {
            other.entries().map(move |(k, l, b)| (i * d + k, j * d + l, a.mul(b)))
        });
        Self::from_triplets(self.dim * d, entries.collect::<Vec<_>>())
    }
}

impl<R: Ring + fmt::Display> SparseMatrix<R> {
    /// Sorted `(row, col, coefficient)` triplets.
    pub fn to_triplets(&self) -> Vec<(usize, usize, String)> {
        self.entries().map(|(i, j, v)| (i, j, v.to_string())).collect()
    }

    /// One triplet per line.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (i, j, v) in self.to_triplets() {
            s.push_str(&format!("{i} {j} {v}\n"));
        }
        s
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "entries": self.to_triplets().into_iter().map(|(i, j, v)| json!([i, j, v])).collect::<Vec<_>>(),
        })
    }
}

impl<K: Field> SparseMatrix<K> {
    pub fn to_dense(&self) -> crate::linalg::DenseMatrix<K> {
        let mut d = crate::linalg::DenseMatrix::zeros(self.dim, self.dim);
        for (i, j, v) in self.entries() {
            d.set(i, j, v.clone());
        }
        d
    }
}

/// Places `op`, acting on `positions.len()` factors of `C^n`, into the
/// 1-based `positions` of `(C^n)^{⊗k}`, identity elsewhere.
pub fn embed<R: Ring>(op: &SparseMatrix<R>, n: usize, k: usize, positions: &[usize]) -> Result<SparseMatrix<R>> {
    let m = positions.len();
    if n.checked_pow(m as u32) != Some(op.dim()) {
        return Err(CapelliError::Domain(format!(
            "operator of dimension {} does not act on {m} factors of dimension {n}",
            op.dim()
        )));
    }
    for (a, &p) in positions.iter().enumerate() {
        if p == 0 || p > k {
            return Err(CapelliError::Domain(format!("slot {p} outside 1..{k}")));
        }
        if positions[..a].contains(&p) {
            return Err(CapelliError::Domain(format!("slot {p} repeated")));
        }
    }
    let dim = n.pow(k as u32);
    let rows: Vec<Vec<(usize, R)>> = (0..dim)
        .into_par_iter()
        .map(|row| {
            let d = digits(row, n, k);
            let sub: Vec<usize> = positions.iter().map(|&p| d[p - 1]).collect();
            let mut out: Vec<(usize, R)> = op
                .row(undigits(&sub, n))
                .iter()
                .map(|(t, v)| {
                    let mut e = d.clone();
                    for (slot, digit) in positions.iter().zip(digits(*t, n, m)) {
                        e[slot - 1] = digit;
                    }
                    (undigits(&e, n), v.clone())
                })
                .collect();
            out.sort_by_key(|(c, _)| *c);
            out
        })
        .collect();
    Ok(SparseMatrix { dim, rows })
}

/// The operator of `sigma` on `(C^n)^{⊗k}`: `e_{a_1}⊗…⊗e_{a_k}` goes to the
/// tensor with `a_i` in slot `sigma(i)`.
pub fn permutation_matrix<R: Ring>(sigma: &Permutation, n: usize) -> SparseMatrix<R> {
    let k = sigma.degree();
    let dim = n.pow(k as u32);
    let rows = (0..dim)
        .map(|b| {
            let d = digits(b, n, k);
            let a: Vec<usize> = (1..=k).map(|i| d[sigma.apply(i) - 1]).collect();
            vec![(undigits(&a, n), R::one())]
        })
        .collect();
    SparseMatrix { dim, rows }
}

/// Linear extension of [`permutation_matrix`].
pub fn group_element_matrix<C: Ring>(x: &GroupAlgElem<C>, n: usize) -> SparseMatrix<C> {
    let k = x.degree();
    let dim = n.pow(k as u32);
    let mut entries = Vec::new();
    for (p, c) in x.terms() {
        for (i, j, _) in permutation_matrix::<C>(p, n).entries() {
            entries.push((i, j, c.clone()));
        }
    }
    SparseMatrix::from_triplets(dim, entries)
}

/// `P = Σ E_ij ⊗ E_ji` on `(C^n)^{⊗2}`.
pub fn exchange_p<R: Ring>(n: usize) -> SparseMatrix<R> {
    let sigma = Permutation::transposition(2, 1, 2).expect("valid transposition");
    permutation_matrix(&sigma, n)
}

/// `Q = Σ ε_ij E_ij ⊗ E_{-i,-j}` on `(C^n)^{⊗2}` in signed labels.
pub fn twist_q<R: Ring>(n: usize, kind: Kind) -> Result<SparseMatrix<R>> {
    if !kind.admits(n) {
        return Err(CapelliError::Domain(format!("no {kind} form in odd dimension {n}")));
    }
    let s = IndexScheme::signed(n);
    let mut entries = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let e = kind.epsilon(s.label(a), s.label(b));
            entries.push((a * n + s.neg_position(a), b * n + s.neg_position(b), R::from_int(e)));
        }
    }
    Ok(SparseMatrix::from_triplets(n * n, entries))
}

/// `R(u,v) = 1 − P/(u−v)`.
pub fn r_matrix<K: Field>(u: &K, v: &K, n: usize) -> Result<SparseMatrix<K>> {
    let d = u.sub(v);
    if d.is_zero() {
        return Err(CapelliError::Domain("R(u,v) needs u ≠ v".into()));
    }
    let c = d.inv()?.neg();
    Ok(SparseMatrix::identity(n * n).add(&exchange_p::<K>(n).scale_left(&c)))
}

/// `R~(u,v) = 1 + Q/(u+v)`.
pub fn r_tilde_matrix<K: Field>(u: &K, v: &K, n: usize, kind: Kind) -> Result<SparseMatrix<K>> {
    let s = u.add(v);
    if s.is_zero() {
        return Err(CapelliError::Domain("R~(u,v) needs u ≠ −v".into()));
    }
    Ok(SparseMatrix::identity(n * n).add(&twist_q::<K>(n, kind)?.scale_left(&s.inv()?)))
}

/// The pair `(R(u,v), R~(u,v))`.
pub fn rational_r<K: Field>(u: &K, v: &K, n: usize, kind: Kind) -> Result<(SparseMatrix<K>, SparseMatrix<K>)> {
    Ok((r_matrix(u, v, n)?, r_tilde_matrix(u, v, n, kind)?))
}

/// Transpose with respect to the form in tensor factor `factor` (1 or 2)
/// of an operator on `(C^n)^{⊗2}`: `E_ij ↦ ε_ij E_{-j,-i}`.
pub fn partial_transpose<R: Ring>(m: &SparseMatrix<R>, n: usize, kind: Kind, factor: usize) -> Result<SparseMatrix<R>> {
    if !kind.admits(n) {
        return Err(CapelliError::Domain(format!("no {kind} form in odd dimension {n}")));
    }
    if m.dim() != n * n || !(1..=2).contains(&factor) {
        return Err(CapelliError::Domain("partial transpose acts on two factors".into()));
    }
    let s = IndexScheme::signed(n);
    let entries: Vec<_> = m
        .entries()
        .map(|(row, col, v)| {
            let (mut r, mut c) = ([row / n, row % n], [col / n, col % n]);
            let f = factor - 1;
            let e = kind.epsilon(s.label(r[f]), s.label(c[f]));
            let (i, j) = (r[f], c[f]);
            r[f] = s.neg_position(j);
            c[f] = s.neg_position(i);
            let val = if e == 1 { v.clone() } else { v.neg() };
            (r[0] * n + r[1], c[0] * n + c[1], val)
        })
        .collect();
    Ok(SparseMatrix::from_triplets(n * n, entries))
}

/// Generator families: matrix units `E_ij` of `gl_N`, and `F_ij` of the
/// orthogonal or symplectic subalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    E,
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub family: Family,
    pub i: i8,
    pub j: i8,
}

impl Generator {
    pub fn e(i: i8, j: i8) -> Generator {
        Generator { family: Family::E, i, j }
    }

    /// Canonical form of `F_ij` as `sign · F_{i'j'}`, using
    /// `F_{-j,-i} = −ε_ij F_ij`; `None` when the symbol vanishes.
    pub fn f(i: i8, j: i8, kind: Kind) -> Option<(Generator, i64)> {
        let (a, b) = ((i, j), (-j, -i));
        let e = kind.epsilon(i, j);
        if a == b {
            return if e == 1 { None } else { Some((Generator { family: Family::F, i, j }, 1)) };
        }
        if a < b {
            Some((Generator { family: Family::F, i, j }, 1))
        } else {
            Some((Generator { family: Family::F, i: b.0, j: b.1 }, -e))
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.i == self.j
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::E => "E",
            Family::F => "F",
        };
        if (0..10).contains(&self.i) && (0..10).contains(&self.j) {
            write!(f, "{fam}_{}{}", self.i, self.j)
        } else {
            write!(f, "{fam}_{{{},{}}}", self.i, self.j)
        }
    }
}

pub type Word = SmallVec<[Generator; 4]>;

fn word_string(w: &Word) -> String {
    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
}

/// Linear combination of words in generator symbols, with no relations
/// imposed among the symbols.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeAlgElem<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Ring> FreeAlgElem<C> {
    pub fn scalar(c: C) -> Self {
        let mut x = Self::zero();
        x.add_term(Word::new(), c);
        x
    }

    pub fn generator(g: Generator) -> Self {
        let mut x = Self::zero();
        x.add_term(SmallVec::from_slice(&[g]), C::one());
        x
    }

    pub fn monomial(w: Word, c: C) -> Self {
        let mut x = Self::zero();
        x.add_term(w, c);
        x
    }

    pub fn terms(&self) -> &BTreeMap<Word, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Generator]) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                x.add_assign(&c);
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// Length of the longest word, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    /// The part made of words of length exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        FreeAlgElem { terms: self.terms.iter().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }

    /// The scalar coefficient if the element has no words of positive length.
    pub fn as_scalar(&self) -> Option<C> {
        if self.terms.keys().all(|w| w.is_empty()) {
            Some(self.coeff(&[]))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a.mul(c));
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> FreeAlgElem<D> {
        let mut out = FreeAlgElem::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.terms.keys().flat_map(|w| w.iter())
    }
}

impl<C: Ring> Ring for FreeAlgElem<C> {
    fn zero() -> Self {
        FreeAlgElem { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::scalar(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
    fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }
    fn from_rational(r: &Rational) -> Self {
        Self::scalar(C::from_rational(r))
    }
}

impl<C: Ring + fmt::Display> FreeAlgElem<C> {
    /// Sorted `[word, coefficient]` pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(w, c)| json!([word_string(w), c.to_string()])).collect())
    }
}

impl<C: Ring + fmt::Display> fmt::Display for FreeAlgElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_sum(f, self.terms.iter(), word_string)
    }
}

/// Operators of words, keyed by the word.
pub type WordCache = HashMap<Word, SparseMatrix<Rational>>;

/// The action of generator symbols on `(C^N)^{⊗k}`.
///
/// `E_ij` acts by `Σ_p ι_p(e_ij)`; `F_ij` by `E_ij − ε_ij E_{-j,-i}`, which
/// needs a signed scheme and a form.
#[derive(Clone, Debug)]
pub struct Representation {
    scheme: IndexScheme,
    kind: Option<Kind>,
    k: usize,
}

impl Representation {
    pub fn new(scheme: IndexScheme, kind: Option<Kind>, k: usize) -> Representation {
        Representation { scheme, kind, k }
    }

    pub fn scheme(&self) -> &IndexScheme {
        &self.scheme
    }

    pub fn power(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.scheme.dim().pow(self.k as u32)
    }

    fn unit(&self, i: i8, j: i8) -> Result<SparseMatrix<Rational>> {
        let n = self.scheme.dim();
        let (a, b) = match (self.scheme.position(i), self.scheme.position(j)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(CapelliError::Domain(format!("labels ({i},{j}) outside the index set"))),
        };
        let e = SparseMatrix::from_triplets(n, [(a, b, <Rational as Ring>::one())]);
        let mut acc = SparseMatrix::zero(self.dim());
        for p in 1..=self.k {
            acc = acc.add(&embed(&e, n, self.k, &[p])?);
        }
        Ok(acc)
    }

    /// The operator of a single symbol.
    pub fn generator(&self, g: &Generator) -> Result<SparseMatrix<Rational>> {
        match g.family {
            Family::E => self.unit(g.i, g.j),
            Family::F => {
                let kind = self
                    .kind
                    .ok_or_else(|| CapelliError::Domain(format!("symbol {g} needs a bilinear form")))?;
                self.scheme.require_signed()?;
                let e = kind.epsilon(g.i, g.j);
                let t = self.unit(-g.j, -g.i)?;
                let t = if e == 1 { t } else { t.neg() };
                Ok(self.unit(g.i, g.j)?.sub(&t))
            }
        }
    }

    /// The operator of a free-algebra element.
    pub fn act<C: Ring>(&self, x: &FreeAlgElem<C>) -> Result<SparseMatrix<C>> {
        self.act_cached(x, &mut HashMap::new())
    }

    /// As [`Representation::act`], reusing operators of words already seen.
    pub fn act_cached<C: Ring>(&self, x: &FreeAlgElem<C>, cache: &mut WordCache) -> Result<SparseMatrix<C>> {
        if cache.is_empty() {
            cache.insert(Word::new(), SparseMatrix::identity(self.dim()));
        }
        let mut out = SparseMatrix::zero(self.dim());
        for (w, c) in x.terms() {
            for l in 1..=w.len() {
                let letter = &w[l - 1..l];
                if !cache.contains_key(letter) {
                    cache.insert(SmallVec::from_slice(letter), self.generator(&letter[0])?);
                }
                if !cache.contains_key(&w[..l]) {
                    let m = cache[&w[..l - 1]].mul(&cache[letter]);
                    cache.insert(SmallVec::from_slice(&w[..l]), m);
                }
            }
            out = out.add(&cache[w.as_slice()].map(|v| c.mul(&C::from_rational(v))));
        }
        Ok(out)
    }

    /// Replaces every entry of an `A × A` matrix over the free algebra by its
    /// operator, giving a block matrix on `C^A ⊗ (C^N)^{⊗k}`.
    pub fn act_matrix<C: Ring>(&self, m: &SparseMatrix<FreeAlgElem<C>>) -> Result<SparseMatrix<C>> {
        let d = self.dim();
        let mut cache = WordCache::new();
        let mut entries = Vec::new();
        for (i, j, x) in m.entries() {
            for (a, b, v) in self.act_cached(x, &mut cache)?.entries() {
                entries.push((i * d + a, j * d + b, v.clone()));
            }
        }
        Ok(SparseMatrix::from_triplets(m.dim() * d, entries))
    }

    /// Operators of all symbols in `family` with labels from the scheme,
    /// paired with the symbol. `F` symbols are canonical and non-zero.
    pub fn all_generators(&self, family: Family) -> Result<Vec<(Generator, SparseMatrix<Rational>)>> {
        let mut out = Vec::new();
        for &i in self.scheme.labels() {
            for &j in self.scheme.labels() {
                let g = match family {
                    Family::E => Generator::e(i, j),
                    Family::F => {
                        let kind = self.kind.ok_or_else(|| CapelliError::Domain("F symbols need a form".into()))?;
                        match Generator::f(i, j, kind) {
                            Some((g, 1)) if (g.i, g.j) == (i, j) => g,
                            _ => continue,
                        }
                    }
                };
                out.push((g, self.generator(&g)?));
            }
        }
        Ok(out)
    }
}

/// Whether `x` commutes with every operator in `ops`.
pub fn commutes_with_all<R: Ring>(x: &SparseMatrix<R>, ops: &[SparseMatrix<R>]) -> bool {
    ops.iter().all(|g| x.commutator(g).is_zero())
}

impl<R: Ring> SparseMatrix<FreeAlgElem<R>> {
    /// `(tr ⊗ id)`: the sum of the diagonal entries.
    pub fn trace_out(&self) -> FreeAlgElem<R> {
        self.trace()
    }
}


/// A factor of an ordered product: a matrix over the coefficient ring, or
/// over the free algebra.
#[derive(Clone, Debug)]
pub enum Factor<C> {
    Scalar(SparseMatrix<C>),
    Alg(SparseMatrix<FreeAlgElem<C>>),
}

impl<C: Ring> Factor<C> {
    pub fn dim(&self) -> usize {
        match self {
            Factor::Scalar(m) => m.dim(),
            Factor::Alg(m) => m.dim(),
        }
    }
}

type RowVec<C> = BTreeMap<usize, FreeAlgElem<C>>;

fn row_times<C: Ring>(row: &RowVec<C>, f: &Factor<C>, keep: Option<&[bool]>) -> RowVec<C> {
    let mut out: RowVec<C> = BTreeMap::new();
    let kept = |j: usize| keep.map_or(true, |k| k[j]);
    let mut push = |j: usize, x: FreeAlgElem<C>| match out.get_mut(&j) {
        Some(y) => y.add_assign(&x),
        None => {
            out.insert(j, x);
        }
    };
    match f {
        Factor::Scalar(m) => {
            for (k, x) in row {
                for (j, c) in m.row(*k) {
                    if kept(*j) {
                        push(*j, x.scale(c));
                    }
                }
            }
        }
        Factor::Alg(m) => {
            for (k, x) in row {
                for (j, y) in m.row(*k) {
                    if kept(*j) {
                        push(*j, x.mul(y));
                    }
                }
            }
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}

fn product_row<C: Ring>(first: &SparseMatrix<C>, factors: &[Factor<C>], r: usize) -> RowVec<C> {
    let mut row: RowVec<C> =
        first.row(r).iter().map(|(j, c)| (*j, FreeAlgElem::scalar(c.clone()))).collect();
    for f in factors {
        if row.is_empty() {
            break;
        }
        row = row_times(&row, f, None);
    }
    row
}

/// Column indices of the non-zero entries, grouped by column.
fn column_pattern<C: Ring>(f: &Factor<C>) -> Vec<Vec<usize>> {
    let mut cols = vec![Vec::new(); f.dim()];
    let mut add = |i: usize, j: usize| cols[j].push(i);
    match f {
        Factor::Scalar(m) => (0..m.dim()).for_each(|i| m.row(i).iter().for_each(|(j, _)| add(i, *j))),
        Factor::Alg(m) => (0..m.dim()).for_each(|i| m.row(i).iter().for_each(|(j, _)| add(i, *j))),
    }
    cols
}

/// The `(r, r)` entry of the product, keeping after each factor only the
/// columns that can still reach column `r`.
fn diagonal_entry<C: Ring>(first: &SparseMatrix<C>, factors: &[Factor<C>], patterns: &[Vec<Vec<usize>>], r: usize) -> FreeAlgElem<C> {
    let dim = first.dim();
    let mut keeps = vec![vec![false; dim]; factors.len()];
    let mut current = vec![r];
    for m in (0..factors.len()).rev() {
        let mut prev = Vec::new();
        for &j in &current {
            keeps[m][j] = true;
        }
        for &j in &current {
            prev.extend(patterns[m][j].iter().copied());
        }
        prev.sort_unstable();
        prev.dedup();
        current = prev;
    }
    let mut row: RowVec<C> = first
        .row(r)
        .iter()
        .filter(|(j, _)| factors.is_empty() || current.binary_search(j).is_ok())
        .map(|(j, c)| (*j, FreeAlgElem::scalar(c.clone())))
        .collect();
    for (f, keep) in factors.iter().zip(&keeps) {
        if row.is_empty() {
            break;
        }
        row = row_times(&row, f, Some(keep));
    }
    row.remove(&r).unwrap_or_else(FreeAlgElem::zero)
}

fn check_factors<C: Ring>(first: &SparseMatrix<C>, factors: &[Factor<C>]) {
    for f in factors {
        assert_eq!(f.dim(), first.dim(), "dimension mismatch in ordered product");
    }
}

/// `first · f_1 ⋯ f_m`, multiplied left to right one row at a time.
pub fn ordered_product<C: Ring>(first: &SparseMatrix<C>, factors: &[Factor<C>]) -> SparseMatrix<FreeAlgElem<C>> {
    check_factors(first, factors);
    let rows: Vec<Vec<(usize, FreeAlgElem<C>)>> = (0..first.dim())
        .into_par_iter()
        .map(|r| product_row(first, factors, r).into_iter().collect())
        .collect();
    SparseMatrix { dim: first.dim(), rows }
}

/// `tr(first · f_1 ⋯ f_m)` without forming the full product.
pub fn trace_of_product<C: Ring>(first: &SparseMatrix<C>, factors: &[Factor<C>]) -> FreeAlgElem<C> {
    check_factors(first, factors);
    let patterns: Vec<Vec<Vec<usize>>> = factors.iter().map(column_pattern).collect();
    let diag: Vec<FreeAlgElem<C>> =
        (0..first.dim()).into_par_iter().map(|r| diagonal_entry(first, factors, &patterns, r)).collect();
    let mut acc = FreeAlgElem::zero();
    for d in &diag {
        acc.add_assign(d);
    }
    acc
}

/// Recovers `x(u)` with coefficients in `Q(u)` from samples
/// `f(u) = den(u)·x(u)` at rational `u`, where each coefficient of `f` is a
/// polynomial of degree at most `degree`.
pub fn reconstruct_free<F>(degree: usize, den: &crate::arith::Poly, f: F) -> Result<FreeAlgElem<crate::arith::RatFunc>>
where
    F: Fn(&Rational) -> Result<FreeAlgElem<Rational>> + Sync,
{
    let pts = crate::arith::sample_points(degree + 2, den);
    let samples: Vec<FreeAlgElem<Rational>> = pts.par_iter().map(&f).collect::<Result<_>>()?;
    let words: std::collections::BTreeSet<&Word> = samples.iter().flat_map(|s| s.terms().keys()).collect();
    let mut out = FreeAlgElem::zero();
    for w in words {
        let vals: Vec<Rational> = samples.iter().map(|s| s.coeff(w)).collect();
        out.add_term(w.clone(), crate::arith::finish_reconstruct(degree, den, &pts, &vals)?);
    }
    Ok(out)
}

/// Vectors in the span of the basis vectors `support` killed by every
/// operator in `ops`, as full coordinate vectors.
pub fn joint_kernel(ops: &[SparseMatrix<Rational>], support: &[usize], dim: usize) -> Vec<Vec<Rational>> {
    let col: HashMap<usize, usize> = support.iter().enumerate().map(|(a, &s)| (s, a)).collect();
    let mut rows = Vec::new();
    for op in ops {
        let mut restricted: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
        for (i, j, v) in op.entries() {
            if let Some(&c) = col.get(&j) {
                restricted.entry(i).or_insert_with(|| vec![Rational::zero(); support.len()])[c] = v.clone();
            }
        }
        rows.extend(restricted.into_values());
    }
    crate::linalg::common_kernel(rows, support.len())
        .into_iter()
        .map(|k| {
            let mut full = vec![Rational::zero(); dim];
            for (a, &s) in support.iter().enumerate() {
                full[s] = k[a].clone();
            }
            full
        })
        .collect()
}
