use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use super::ring::{int, Rational, Ring};
use crate::error::ArithError;

/// A univariate polynomial in `u` over the rationals.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// The polynomial `u`.
    pub fn var() -> Poly {
        Poly::from_coeffs(vec![int(0), int(1)])
    }

    /// `a*u + b`.
    pub fn linear(a: Rational, b: Rational) -> Poly {
        Poly::from_coeffs(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> Poly {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let lc = self.leading();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    /// Euclidean division; fails on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly), ArithError> {
        let dd = d.degree().ok_or(ArithError::DivisionByZero)?;
        if d.is_constant() {
            return Ok((self.scale(&d.coeffs[0].recip()), Poly::default()));
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::default(), self.clone()));
        }
        let lc_inv = d.leading().recip();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * di;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.coeffs.is_empty() {
            if b.is_constant() {
                return Poly::constant(int(1));
            }
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Polynomial through the given points (distinct abscissae), of degree
    /// less than the number of points.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Poly, ArithError> {
        let n = points.len();
        let xs: Vec<&Rational> = points.iter().map(|p| &p.0).collect();
        let mut dd: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let den = xs[i] - xs[i - level];
                if den.is_zero() {
                    return Err(ArithError::DivisionByZero);
                }
                dd[i] = (&dd[i] - &dd[i - 1]) / den;
            }
        }
        let mut acc = Poly::default();
        for i in (0..n).rev() {
            acc = Ring::mul(&acc, &Poly::linear(int(1), -xs[i].clone()));
            acc = Ring::add(&acc, &Poly::constant(dd[i].clone()));
        }
        Ok(acc)
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(int(1))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::from_coeffs(c)
    }
    fn sub(&self, other: &Self) -> Self {
        Ring::add(self, &Ring::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::default();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }
    fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(r.clone())
    }
}

fn fmt_rational_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "u".to_string(),
                _ => format!("u^{k}"),
            };
            if k == 0 {
                write!(f, "{}", fmt_rational_coeff(&mag))?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", fmt_rational_coeff(&mag))?;
            }
        }
        Ok(())
    }
}

fn parse_err(input: &str) -> ArithError {
    ArithError::Parse { what: "polynomial", input: input.to_string() }
}

/// Parses one signless term such as `3/2*u^2`, `u`, `7`, `2u`.
fn parse_term(term: &str, whole: &str) -> Result<(usize, Rational), ArithError> {
    let t: String = term.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(parse_err(whole));
    }
    let (coef_part, var_part) = match t.find('u') {
        Some(pos) => (&t[..pos], Some(&t[pos + 1..])),
        None => (&t[..], None),
    };
    let coef_part = coef_part.strip_suffix('*').unwrap_or(coef_part);
    let coef = if coef_part.is_empty() {
        if var_part.is_none() {
            return Err(parse_err(whole));
        }
        int(1)
    } else {
        Rational::from_str(coef_part).map_err(|_| parse_err(whole))?
    };
    let deg = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let e = rest.strip_prefix('^').ok_or_else(|| parse_err(whole))?;
            e.parse::<usize>().map_err(|_| parse_err(whole))?
        }
    };
    Ok((deg, coef))
}

impl FromStr for Poly {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(parse_err(s));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        for ch in trimmed.chars() {
            if (ch == '+' || ch == '-') && !cur.trim().is_empty() {
                terms.push((negative, std::mem::take(&mut cur)));
                negative = ch == '-';
            } else if ch == '+' || ch == '-' {
                if ch == '-' {
                    negative = !negative;
                }
            } else {
                cur.push(ch);
            }
        }
        terms.push((negative, cur));
        let mut coeffs: Vec<Rational> = Vec::new();
        for (neg, t) in terms {
            let (deg, c) = parse_term(&t, s)?;
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Rational::zero());
            }
            if neg {
                coeffs[deg] -= c;
            } else {
                coeffs[deg] += c;
            }
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}
