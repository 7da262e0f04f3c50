//! Dense univariate polynomials over the Gaussian rationals.
//!
//! Used for Gram-matrix entries (variable `E0`) and for structure constants
//! depending on an inverse radius (variable `1/R`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{forward_owned_ops, GaussianRational, Ring, GR};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    /// Coefficients, lowest degree first; no trailing zeros.
    coeffs: Vec<GR>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GR>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: GR) -> Self {
        UniPoly::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        UniPoly::new(vec![GR::zero(), GR::one()])
    }

    pub fn monomial(c: GR, deg: usize) -> Self {
        let mut v = vec![GR::zero(); deg + 1];
        v[deg] = c;
        UniPoly::new(v)
    }

    pub fn coeffs(&self) -> &[GR] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GR {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> GR {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GR::is_real)
    }

    pub fn eval(&self, x: &GR) -> GR {
        let mut acc = GR::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &GR) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GR::from_int(k as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (UniPoly::default(), UniPoly::default());
        };
        if sd < dd {
            return (UniPoly::default(), self.clone());
        }
        let mut quot = vec![GR::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if Ring::is_zero(&c) {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dj);
            }
            quot[k] = c;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !Ring::is_zero(&b) {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Ring::is_zero(c) {
                continue;
            }
            let cs = c.to_string();
            let needs_paren = !c.is_real() && !num_traits::Zero::is_zero(&c.re);
            let body = match (k, cs.as_str()) {
                (0, _) => cs.clone(),
                (_, "1") => var_pow(var, k),
                (_, "-1") => format!("-{}", var_pow(var, k)),
                _ if needs_paren => format!("({cs})*{}", var_pow(var, k)),
                _ => format!("{cs}*{}", var_pow(var, k)),
            };
            if out.is_empty() {
                out = body;
            } else if let Some(stripped) = body.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
        out
    }
}

fn var_pow(var: &str, k: usize) -> String {
    if k == 1 {
        var.to_string()
    } else {
        format!("{var}^{k}")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("x"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return UniPoly::default();
        }
        let mut out = vec![GR::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

forward_owned_ops!(UniPoly);

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::default()
    }
    fn one() -> Self {
        UniPoly::constant(GR::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Ring::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Ring::is_zero(&r).then_some(q)
    }
    fn from_scalar(c: GaussianRational) -> Self {
        UniPoly::constant(c)
    }
    /// Conjugates coefficients; the variable is treated as real.
    fn conj(&self) -> Self {
        UniPoly::new(self.coeffs.iter().map(GR::conj).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| GR::from_int(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x+2) / (x-1)
        let a = p(&[-2, 1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(a.exact_div(&b), Some(p(&[2, 1])));
        assert_eq!(p(&[1, 0, 1]).exact_div(&b), None);
        let g = (&a * &p(&[3, 1])).gcd(&(&b * &p(&[3, 1])));
        assert_eq!(g, p(&[-3, 2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, -1, 4]).to_string_in("E0"), "4*E0^2 - E0");
        assert_eq!(UniPoly::default().to_string(), "0");
        assert_eq!(p(&[3]).to_string(), "3");
    }

    #[test]
    fn eval_and_derivative() {
        let a = p(&[1, 2, 3]);
        assert_eq!(a.eval(&GR::from_int(2)), GR::from_int(17));
        assert_eq!(a.derivative(), p(&[2, 6]));
    }
}
