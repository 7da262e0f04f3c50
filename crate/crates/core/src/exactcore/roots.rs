//! Rational root extraction by exact real-root isolation.
//!
//! A rational root `p/q` of a primitive integer polynomial has `q` dividing the
//! leading coefficient `a`, so distinct candidates are at least `1/a^2` apart.
//! Sturm bisection shrinks each isolating interval below that width; the
//! simplest fraction inside is then the only possible rational root.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{Ring, GR};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Rational polynomial with real coefficients, lowest degree first.
#[derive(Clone, Debug)]
struct RatPoly(Vec<BigRational>);

impl RatPoly {
    fn from_uni(p: &UniPoly) -> Self {
        RatPoly(p.coeffs().iter().map(|c| c.re.clone()).collect())
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

fn to_uni(p: &RatPoly) -> UniPoly {
    UniPoly::new(p.0.iter().cloned().map(GR::real).collect())
}

fn sturm_sequence(p: &UniPoly) -> Vec<RatPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let k = seq.len();
        if Ring::is_zero(&seq[k - 1]) {
            seq.pop();
            break;
        }
        let (_, r) = seq[k - 2].div_rem(&seq[k - 1]);
        if Ring::is_zero(&r) {
            break;
        }
        seq.push(-r);
    }
    seq.iter().map(RatPoly::from_uni).collect()
}

fn sign_changes(seq: &[RatPoly], x: &BigRational) -> usize {
    let signs: Vec<i32> = seq.iter().map(|p| p.sign_at(x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Simplest fraction (smallest denominator) in the closed interval [lo, hi].
fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi.clone(), &-lo.clone());
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl.clone() + BigRational::one() <= *hi {
        return fl + BigRational::one();
    }
    // lo, hi share integer part: recurse on reciprocals of fractional parts
    let a = lo.clone() - &fl;
    let b = hi.clone() - &fl;
    let inner = simplest_between(&b.recip(), &a.recip());
    fl + inner.recip()
}

/// All rational roots with multiplicity, ascending.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<BigRational>> {
    if Ring::is_zero(p) {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_real() {
        return Err(Error::NonRealCoefficients);
    }
    let sqfree = {
        let g = p.gcd(&p.derivative());
        p.exact_div(&g).expect("gcd divides").monic()
    };
    let mut candidates = Vec::new();
    if sqfree.degree() == Some(0) {
        return Ok(candidates);
    }
    // clear denominators: integer leading coefficient bounds root denominators
    let lcm_den = sqfree
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.re.denom()));
    let lead = (sqfree.leading().re * BigRational::from_integer(lcm_den)).abs();
    let width = BigRational::new(BigInt::one(), lead.numer() * lead.numer() * 2);

    let seq = sturm_sequence(&sqfree);
    let lc = sqfree.leading().re;
    let bound = BigRational::one()
        + sqfree
            .coeffs()
            .iter()
            .map(|c| (c.re.clone() / &lc).abs())
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    let sq = RatPoly::from_uni(&sqfree);

    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&seq, &lo) as i64 - sign_changes(&seq, &hi) as i64;
        if count <= 0 {
            continue;
        }
        if sq.sign_at(&hi) == 0 {
            candidates.push(hi.clone());
        }
        if count == 1 && (hi.clone() - &lo) < width {
            let c = simplest_between(&lo, &hi);
            if sq.eval(&c).is_zero() && !candidates.contains(&c) {
                candidates.push(c);
            }
            continue;
        }
        let mid = (lo.clone() + &hi) / BigRational::from_integer(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    candidates.sort();
    candidates.dedup();

    let mut roots = Vec::new();
    for r in candidates {
        let lin = to_uni(&RatPoly(vec![-r.clone(), BigRational::one()]));
        let mut q = p.clone();
        while let Some(next) = q.exact_div(&lin) {
            roots.push(r.clone());
            q = next;
        }
    }
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::scalar::rat;

    fn p(cs: &[(i64, i64)]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&(a, b)| GR::frac(a, b)).collect())
    }

    #[test]
    fn simple_cases() {
        // E0^2 - E0
        assert_eq!(
            rational_roots(&p(&[(0, 1), (-1, 1), (1, 1)])).unwrap(),
            vec![rat(0, 1), rat(1, 1)]
        );
        // 4 E0^2
        assert_eq!(
            rational_roots(&p(&[(0, 1), (0, 1), (4, 1)])).unwrap(),
            vec![rat(0, 1), rat(0, 1)]
        );
    }

    #[test]
    fn irrational_and_rational_mix() {
        // (x^2 - 2)(3x - 1)^2 (x + 5/7)
        let a = p(&[(-2, 1), (0, 1), (1, 1)]);
        let b = p(&[(-1, 1), (3, 1)]);
        let c = p(&[(5, 7), (1, 1)]);
        let poly = &(&(&a * &b) * &b) * &c;
        assert_eq!(
            rational_roots(&poly).unwrap(),
            vec![rat(-5, 7), rat(1, 3), rat(1, 3)]
        );
    }

    #[test]
    fn errors() {
        assert_eq!(rational_roots(&UniPoly::default()), Err(Error::ZeroPolynomial));
        let z = UniPoly::new(vec![GR::i(), GR::one()]);
        assert_eq!(rational_roots(&z), Err(Error::NonRealCoefficients));
        assert!(rational_roots(&p(&[(1, 1), (0, 1), (1, 1)])).unwrap().is_empty());
    }

    #[test]
    fn close_roots_with_large_denominators() {
        let r1 = p(&[(-1000, 1), (1001, 1)]);
        let r2 = p(&[(-999, 1), (1000, 1)]);
        let roots = rational_roots(&(&r1 * &r2)).unwrap();
        assert_eq!(roots, vec![rat(999, 1000), rat(1000, 1001)]);
    }
}
