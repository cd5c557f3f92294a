//! Power sums, Schur and factorial Schur polynomials, symmetric group
//! characters and the plethysm coefficients of `s_mu(y^2)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::arith::{int, Field, Rational, Ring};
use crate::combinatorics::Partition;
use crate::error::{CapelliError, Result};
use crate::linalg::DenseMatrix;

/// A polynomial in `x_1..x_n` as a sparse map from exponent vectors.
#[derive(Clone, PartialEq, Debug)]
pub struct MPoly<C> {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, C>,
}

/// Symmetric polynomials share the representation.
pub type SymPoly<C> = MPoly<C>;

impl<C: Ring> MPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, C::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u16>, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u16]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u16>, c: C) {
        assert_eq!(exps.len(), self.nvars, "exponent length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                v.add_assign(&c);
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::one().neg()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), c.mul(a));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count");
        let mut out = Self::zero(self.nvars);
        for (e1, a) in &self.terms {
            for (e2, b) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                out.add_term(e, a.mul(b));
            }
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Substitutes `x_i -> x_i^2`.
    pub fn in_squares(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.iter().map(|x| 2 * x).collect(), c.clone());
        }
        out
    }

    /// Reindexes into a larger variable set, `x_i -> x_{offset+i}`.
    pub fn shift_vars(&self, nvars: usize, offset: usize) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; nvars];
            f[offset..offset + self.nvars].copy_from_slice(e);
            out.add_term(f, c.clone());
        }
        out
    }

    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        self.terms.keys().all(|e| e.iter().map(|&x| x as usize).sum::<usize>() == d)
    }

    /// Invariance under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut f = e.clone();
                f.swap(i - 1, i);
                self.coeff(&f) == *c
            })
        })
    }

    pub fn eval<K: Ring>(&self, point: &[K], coeff: impl Fn(&C) -> K) -> K {
        let mut acc = K::zero();
        for (e, c) in &self.terms {
            let mut t = coeff(c);
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t.mul(x);
                }
            }
            acc.add_assign(&t);
        }
        acc
    }
}

impl<C: Ring + fmt::Display> MPoly<C> {
    /// JSON list of `(exponent vector, coefficient)` pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(e, c)| json!([e, c.to_string()])).collect())
    }
}

pub(crate) fn fmt_coeff_prefix<C: Ring + fmt::Display>(c: &C) -> (bool, String) {
    let s = c.to_string();
    let neg = s.starts_with('-') && !s[1..].contains([' ', '('] );
    let mag = if neg { s[1..].to_string() } else { s.clone() };
    let mag = if mag.contains(' ') || (mag.contains('(') && !mag.starts_with('(')) {
        format!("({mag})")
    } else {
        mag
    };
    (neg, mag)
}

/// Writes `sum c * monomial` with `+`/`-` separators; `render` formats a
/// monomial, returning an empty string for the unit.
pub(crate) fn fmt_sum<'a, C, K, I>(f: &mut fmt::Formatter<'_>, terms: I, render: impl Fn(&K) -> String) -> fmt::Result
where
    C: Ring + fmt::Display + 'a,
    K: 'a,
    I: Iterator<Item = (&'a K, &'a C)>,
{
    let mut first = true;
    for (k, c) in terms {
        let mono = render(k);
        let (neg, mag) = fmt_coeff_prefix(c);
        let sep = match (first, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let body = if mono.is_empty() {
            mag
        } else if mag == "1" {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        write!(f, "{sep}{body}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl<C: Ring + fmt::Display> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Highest exponent vectors first.
        fmt_sum(f, self.terms.iter().rev(), |e: &Vec<u16>| {
            e.iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x_{}", i + 1) } else { format!("x_{}^{k}", i + 1) })
                .collect::<Vec<_>>()
                .join("*")
        })
    }
}

/// `p_rho(x_1..x_vars)`; the empty partition gives 1.
pub fn power_sum_product(rho: &Partition, vars: usize) -> SymPoly<Rational> {
    let mut acc = MPoly::one(vars);
    for &k in rho.parts() {
        let mut p = MPoly::zero(vars);
        for i in 0..vars {
            let mut e = vec![0u16; vars];
            e[i] = k as u16;
            p.add_term(e, int(1));
        }
        acc = acc.mul(&p);
    }
    acc
}

/// `z_rho = prod_i i^{m_i} m_i!`.
pub fn z_rho(rho: &Partition) -> BigInt {
    let mut z = BigInt::from(1);
    for (i, &m) in rho.multiplicities().iter().enumerate().skip(1) {
        for k in 1..=m {
            z *= BigInt::from(i) * BigInt::from(k);
        }
    }
    z
}

/// Characters `chi_mu^rho` of `S_m`, rows indexed by `mu`, columns by `rho`,
/// both in decreasing lexicographic order.
#[derive(Debug)]
pub struct CharTable {
    m: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharTable {
    pub fn compute(m: usize) -> CharTable {
        let partitions = Partition::all(m);
        let values = partitions
            .iter()
            .map(|mu| partitions.iter().map(|rho| murnaghan_nakayama(mu, rho)).collect())
            .collect();
        CharTable { m, partitions, values }
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn index(&self, p: &Partition) -> usize {
        self.partitions.iter().position(|q| q == p).expect("partition of the table degree")
    }

    pub fn value(&self, mu: &Partition, rho: &Partition) -> i64 {
        self.values[self.index(mu)][self.index(rho)]
    }

    /// `sum_mu chi_mu^rho chi_mu^rho' == z_rho delta`.
    pub fn column_orthogonality_holds(&self) -> bool {
        let k = self.partitions.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let s: i64 = (0..k).map(|i| self.values[i][a] * self.values[i][b]).sum();
                let expected = if a == b { z_rho(&self.partitions[a]) } else { BigInt::from(0) };
                BigInt::from(s) == expected
            })
        })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("mu\\rho");
        for rho in &self.partitions {
            s.push_str(&format!(",\"{rho}\""));
        }
        s.push('\n');
        for (mu, row) in self.partitions.iter().zip(&self.values) {
            s.push_str(&format!("\"{mu}\""));
            for v in row {
                s.push_str(&format!(",{v}"));
            }
            s.push('\n');
        }
        s
    }
}

/// Shared, lazily computed character table of `S_m`.
pub fn char_table(m: usize) -> Arc<CharTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("cache lock").get(&m) {
        return Arc::clone(t);
    }
    let t = Arc::new(CharTable::compute(m));
    cache.lock().expect("cache lock").entry(m).or_insert(t).clone()
}

/// Rim-hook recursion on beta-sets.
fn murnaghan_nakayama(mu: &Partition, rho: &Partition) -> i64 {
    fn rec(beta: &mut Vec<usize>, hooks: &[usize]) -> i64 {
        let Some((&k, rest)) = hooks.split_first() else { return 1 };
        let mut total = 0;
        for i in 0..beta.len() {
            let b = beta[i];
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
            beta[i] = b - k;
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * rec(beta, rest);
            beta[i] = b;
        }
        total
    }
    let l = mu.len();
    let mut beta: Vec<usize> = (0..l).map(|i| mu.part(i) + (l - 1 - i)).collect();
    rec(&mut beta, rho.parts())
}

/// `chi_mu^rho`.
pub fn character(mu: &Partition, rho: &Partition) -> Result<i64> {
    if mu.size() != rho.size() {
        return Err(CapelliError::DegreeMismatch { expected: mu.size(), found: rho.size() });
    }
    Ok(char_table(mu.size()).value(mu, rho))
}

/// `s_mu(x_1..x_vars)` from the character expansion.
pub fn schur(mu: &Partition, vars: usize) -> SymPoly<Rational> {
    if mu.len() > vars {
        return MPoly::zero(vars);
    }
    let m = mu.size();
    let table = char_table(m);
    let mut acc = MPoly::zero(vars);
    for rho in table.partitions() {
        let chi = table.value(mu, rho);
        if chi == 0 {
            continue;
        }
        let c = Rational::new(BigInt::from(chi), z_rho(rho));
        acc = acc.add(&power_sum_product(rho, vars).scale(&c));
    }
    acc
}

/// `(y|a)^k = (y - a_1)...(y - a_k)`.
pub fn factorial_power<K: Ring>(y: &K, a: &[K], k: usize) -> K {
    a[..k].iter().fold(K::one(), |acc, ai| acc.mul(&y.sub(ai)))
}

/// `s_nu(y_1..y_N | a)` as a ratio of determinants; `y` must have distinct
/// entries.
pub fn factorial_schur<K: Field>(nu: &Partition, y: &[K], a: &[K]) -> Result<K> {
    let n = y.len();
    if nu.len() > n {
        return Ok(K::zero());
    }
    let need = if n == 0 { 0 } else { nu.part(0) + n - 1 };
    if a.len() < need {
        return Err(CapelliError::Domain(format!("need at least {need} entries of a, got {}", a.len())));
    }
    for i in 0..n {
        for j in i + 1..n {
            if y[i] == y[j] {
                return Err(CapelliError::Domain(
                    "repeated y entries: use factorial_schur_interpolated".into(),
                ));
            }
        }
    }
    let build = |exp: &dyn Fn(usize) -> usize| {
        DenseMatrix::from_rows((0..n).map(|i| (0..n).map(|j| factorial_power(&y[j], a, exp(i))).collect()).collect())
    };
    let num = build(&|i| nu.part(i) + n - 1 - i).determinant()?;
    let den = build(&|i| n - 1 - i).determinant()?;
    Ok(num.div(&den)?)
}

/// Same value as [`factorial_schur`], valid for repeated `y` entries.
///
/// `g(t) = s_nu(y_1 + t, y_2 + 2t, ... | a)` is a polynomial in `t` of degree
/// at most `|nu|`; it is sampled where the shifted entries are distinct and
/// interpolated back to `t = 0`.
pub fn factorial_schur_interpolated(nu: &Partition, y: &[Rational], a: &[Rational]) -> Result<Rational> {
    let d = nu.size();
    let mut pts = Vec::new();
    let mut t = 1i64;
    while pts.len() < d + 1 {
        let shifted: Vec<Rational> = y.iter().enumerate().map(|(j, v)| v + int(t * (j as i64 + 1))).collect();
        if let Ok(v) = factorial_schur(nu, &shifted, a) {
            pts.push((int(t), v));
        }
        t += 1;
    }
    Ok(crate::arith::Poly::interpolate(&pts)?.eval(&int(0)))
}

/// `L_{mu nu} = sum_rho chi_mu^rho chi_nu^{2 rho} / z_rho`.
pub fn plethysm_coeff(mu: &Partition, nu: &Partition) -> Result<i64> {
    let m = mu.size();
    if nu.size() != 2 * m {
        return Err(CapelliError::DegreeMismatch { expected: 2 * m, found: nu.size() });
    }
    let small = char_table(m);
    let big = char_table(2 * m);
    let mut acc = Rational::zero();
    for rho in small.partitions() {
        let num = small.value(mu, rho) * big.value(nu, &rho.doubled());
        acc.add_assign(&Rational::new(BigInt::from(num), z_rho(rho)));
    }
    if !acc.is_integer() {
        return Err(CapelliError::Inconsistency(format!("non-integral plethysm coefficient {acc}")));
    }
    i64::try_from(acc.to_integer()).map_err(|_| CapelliError::Inconsistency("coefficient overflow".into()))
}

/// Expansion of `s_mu(y_1^2..y_N^2)` in Schur polynomials of `y_1..y_N`.
pub fn plethysm_expand(mu: &Partition, n: usize) -> Result<BTreeMap<Partition, i64>> {
    let mut f = schur(mu, n).in_squares();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = f.terms().iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        if e.windows(2).any(|w| w[0] < w[1]) {
            return Err(CapelliError::Inconsistency("leading exponent is not a partition".into()));
        }
        if !c.is_integer() {
            return Err(CapelliError::Inconsistency(format!("non-integral Schur coefficient {c}")));
        }
        let lambda = Partition::from_unsorted(e.iter().map(|&x| x as usize).collect());
        f = f.sub(&schur(&lambda, n).scale(&c));
        let ci = i64::try_from(c.to_integer()).map_err(|_| CapelliError::Inconsistency("overflow".into()))?;
        out.insert(lambda, ci);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum_product(&p("[]"), 2), MPoly::one(2));
        assert_eq!(power_sum_product(&p("[1]"), 2).to_string(), "x_1 + x_2");
        let lhs = power_sum_product(&p("[2,1]"), 2);
        let rhs = power_sum_product(&p("[2]"), 2).mul(&power_sum_product(&p("[1]"), 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn characters() {
        assert_eq!(character(&p("[3]"), &p("[2,1]")).unwrap(), 1);
        assert_eq!(character(&p("[1,1]"), &p("[2]")).unwrap(), -1);
        assert_eq!(character(&p("[2,1]"), &p("[1,1,1]")).unwrap(), 2);
        assert_eq!(character(&p("[2,1]"), &p("[3]")).unwrap(), -1);
        assert!(character(&p("[2]"), &p("[1]")).is_err());
        for m in 0..=6 {
            assert!(char_table(m).column_orthogonality_holds(), "m = {m}");
        }
        assert!(char_table(2).to_csv().contains("\"[1,1]\",-1,1"));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p("[1]"), 2).to_string(), "x_1 + x_2");
        assert!(schur(&p("[1,1]"), 1).is_zero());
        assert_eq!(schur(&p("[2]"), 2).to_string(), "x_1^2 + x_1*x_2 + x_2^2");
    }

    #[test]
    fn factorial_schur_examples() {
        let y = [int(5), int(2)];
        let a = [int(1), int(3)];
        assert_eq!(factorial_schur(&p("[1]"), &y, &a).unwrap(), int(5 + 2 - 1 - 3));
        let zeros = [int(0), int(0), int(0)];
        assert_eq!(factorial_schur(&p("[2,1]"), &[int(2), int(1)], &zeros).unwrap(), int(6));
        assert!(factorial_schur(&p("[1]"), &[int(1), int(1)], &a).is_err());
        assert_eq!(factorial_schur_interpolated(&p("[2,1]"), &[int(1), int(1)], &zeros).unwrap(), int(2));
        assert_eq!(factorial_schur_interpolated(&p("[1]"), &[rat(1, 2), rat(1, 2)], &a).unwrap(), int(-3));
    }

    #[test]
    fn plethysm_examples() {
        assert_eq!(plethysm_coeff(&p("[1]"), &p("[2]")).unwrap(), 1);
        assert_eq!(plethysm_coeff(&p("[1]"), &p("[1,1]")).unwrap(), -1);
        let e = plethysm_expand(&p("[1]"), 2).unwrap();
        assert_eq!(e, BTreeMap::from([(p("[2]"), 1), (p("[1,1]"), -1)]));
        assert_eq!(plethysm_expand(&p("[]"), 3).unwrap(), BTreeMap::from([(p("[]"), 1)]));
    }

    #[test]
    fn z_values() {
        assert_eq!(z_rho(&p("[2,1,1]")), BigInt::from(4));
        assert_eq!(z_rho(&p("[]")), BigInt::from(1));
    }
}
