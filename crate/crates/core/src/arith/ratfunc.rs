use std::fmt;
use std::str::FromStr;


use super::poly::Poly;
use super::ring::{int, Field, Rational, Ring};
use crate::error::ArithError;

/// A rational function `p(u)/q(u)` over the rationals in lowest terms with
/// monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Default for RatFunc {
    fn default() -> Self {
        <RatFunc as Ring>::zero()
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::from_poly(Poly::default());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
            }
        };
        let lc = den.leading();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::constant(int(1)) }
    }

    pub fn constant(c: Rational) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// The indeterminate `u`.
    pub fn var() -> RatFunc {
        RatFunc::from_poly(Poly::var())
    }

    /// `a*u + b`.
    pub fn linear(a: Rational, b: Rational) -> RatFunc {
        RatFunc::from_poly(Poly::linear(a, b))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.constant_term())
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::default();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Value at `u = point`; fails where the reduced denominator vanishes.
    pub fn evaluate(&self, point: &Rational) -> Result<Rational, ArithError> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(ArithError::Pole { point: point.to_string() });
        }
        Ok(self.num.eval(point) / d)
    }

    /// Limit as `u -> point`, cancelling common factors `(u - point)^k`.
    pub fn limit_at(&self, point: &Rational) -> Result<Rational, ArithError> {
        let lin = Poly::linear(int(1), -point.clone());
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        while !num.is_zero() && den.eval(point).is_zero() && num.eval(point).is_zero() {
            num = num.div_rem(&lin)?.0;
            den = den.div_rem(&lin)?.0;
        }
        let d = den.eval(point);
        if d.is_zero() {
            return Err(ArithError::Pole { point: point.to_string() });
        }
        Ok(num.eval(point) / d)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::default())
    }
    fn one() -> Self {
        RatFunc::constant(int(1))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = Ring::add(&self.num, &other.num);
            if self.den.is_constant() {
                return RatFunc { num, den: self.den.clone() };
            }
            return RatFunc::reduce(num, self.den.clone());
        }
        let num = Ring::add(&Ring::mul(&self.num, &other.den), &Ring::mul(&other.num, &self.den));
        RatFunc::reduce(num, Ring::mul(&self.den, &other.den))
    }
    fn sub(&self, other: &Self) -> Self {
        Ring::add(self, &Ring::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return RatFunc::default();
        }
        if self.den.is_constant() && other.den.is_constant() {
            return RatFunc::from_poly(Ring::mul(&self.num, &other.num));
        }
        // Cross-cancel so the product is already in lowest terms.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_rem(&g1).unwrap().0;
        let d2 = other.den.div_rem(&g1).unwrap().0;
        let n2 = other.num.div_rem(&g2).unwrap().0;
        let d1 = self.den.div_rem(&g2).unwrap().0;
        let num = Ring::mul(&n1, &n2);
        let den = Ring::mul(&d1, &d2);
        let lc = den.leading();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
    fn neg(&self) -> Self {
        RatFunc { num: Ring::neg(&self.num), den: self.den.clone() }
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::constant(r.clone())
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Result<Self, ArithError> {
        if self.num.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl FromStr for RatFunc {
    type Err = ArithError;

    /// Accepts a bare polynomial or `(p)/(q)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || ArithError::Parse { what: "rational function", input: s.to_string() };
        if let Some(rest) = t.strip_prefix('(') {
            let close = rest.find(')').ok_or_else(err)?;
            let num: Poly = rest[..close].parse()?;
            let tail = rest[close + 1..].trim();
            if tail.is_empty() {
                return Ok(RatFunc::from_poly(num));
            }
            let den_str = tail
                .strip_prefix('/')
                .map(str::trim)
                .and_then(|d| d.strip_prefix('('))
                .and_then(|d| d.strip_suffix(')'))
                .ok_or_else(err)?;
            let den: Poly = den_str.parse()?;
            return RatFunc::new(num, den);
        }
        Ok(RatFunc::from_poly(t.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ring::rat;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_and_display() {
        let f = r("(u^2 - 1)/(u - 1)");
        assert_eq!(f, r("u + 1"));
        assert_eq!(f.to_string(), "u + 1");
        let g = r("(2*u)/(2*u + 4)");
        assert_eq!(g.to_string(), "(u)/(u + 2)");
        assert_eq!(r(&g.to_string()), g);
    }

    #[test]
    fn evaluate_and_limit() {
        let f = RatFunc::new(Poly::var(), Poly::linear(int(1), int(-1))).unwrap();
        assert!(matches!(f.evaluate(&int(1)), Err(ArithError::Pole { .. })));
        assert_eq!(f.evaluate(&int(3)).unwrap(), rat(3, 2));
        let g = r("(u^2 - 3*u + 2)/(u^2 - 1)");
        assert_eq!(g.limit_at(&int(1)).unwrap(), rat(-1, 2));
        assert!(matches!(g.limit_at(&int(-1)), Err(ArithError::Pole { .. })));
    }

    #[test]
    fn arithmetic() {
        let a = r("(1)/(u - 1)");
        let b = r("(1)/(u + 1)");
        assert_eq!(Ring::add(&a, &b), r("(2*u)/(u^2 - 1)"));
        assert_eq!(Ring::mul(&a, &b), r("(1)/(u^2 - 1)"));
        assert_eq!(a.div(&a).unwrap(), <RatFunc as Ring>::one());
        assert!(<RatFunc as Ring>::zero().inv().is_err());
        assert!(RatFunc::new(Poly::var(), Poly::default()).is_err());
    }
}
