//! Exact scalars: rationals, polynomials and rational functions in one
//! indeterminate `u`, and a checked integer ring.

mod poly;
mod ratfunc;
mod ring;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use ring::{int, rat, Field, Int, Rational, Ring};

/// Reconstructs `f(u) = num(u)/den` from samples of a map whose values times
/// `den(u)` form a polynomial of degree at most `degree`.
///
/// Poles of `den` are avoided by choosing sample points away from its roots.
/// One extra sample is used to confirm the degree bound.
pub fn reconstruct<F>(degree: usize, den: &Poly, mut f: F) -> Result<RatFunc, crate::error::CapelliError>
where
    F: FnMut(&Rational) -> Result<Rational, crate::error::CapelliError>,
{
    let pts = sample_points(degree + 2, den);
    let mut vals = Vec::with_capacity(pts.len());
    for x in &pts {
        vals.push(Ring::mul(&f(x)?, &den.eval(x)));
    }
    finish_reconstruct(degree, den, &pts, &vals)
}

/// `count` integer points where `den` does not vanish.
pub fn sample_points(count: usize, den: &Poly) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut k: i64 = 0;
    while out.len() < count {
        let x = int(k);
        if !Ring::is_zero(&den.eval(&x)) {
            out.push(x);
        }
        k = if k <= 0 { 1 - k } else { -k };
    }
    out
}

pub(crate) fn finish_reconstruct(
    degree: usize,
    den: &Poly,
    pts: &[Rational],
    vals: &[Rational],
) -> Result<RatFunc, crate::error::CapelliError> {
    let pairs: Vec<(Rational, Rational)> =
        pts.iter().cloned().zip(vals.iter().cloned()).take(degree + 1).collect();
    let num = Poly::interpolate(&pairs)?;
    for (x, v) in pts.iter().zip(vals).skip(degree + 1) {
        if num.eval(x) != *v {
            return Err(crate::error::CapelliError::Inconsistency(format!(
                "interpolation degree bound {degree} violated"
            )));
        }
    }
    Ok(RatFunc::new(num, den.clone())?)
}
