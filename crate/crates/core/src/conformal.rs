//! Finite conformal transformations of compactified Minkowski space as
//! linear isometries of the ambient space R^{n,2}, acting on null rays.
//!
//! Ambient vectors use Cartesian components in the order `0, 0', 1, .., n`.
//! Boundary points `x^mu`, `mu = 0..n-1`, sit at ambient positions `0, 2, .., n`,
//! and the light-cone coordinates are `X± = X^{0'} ± X^n`.

use rand::Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactcore::{ExactMatrix, Ring, GR};

/// Ambient position of boundary coordinate `mu`.
fn amb(mu: usize) -> usize {
    if mu == 0 {
        0
    } else {
        mu + 1
    }
}

fn minkowski(n: usize) -> Vec<GR> {
    (0..n).map(|mu| GR::from_int(if mu == 0 { -1 } else { 1 })).collect()
}

/// Minkowski inner product with signature (-,+,..,+).
pub fn dot(x: &[GR], y: &[GR]) -> GR {
    x.iter()
        .zip(y)
        .enumerate()
        .fold(GR::zero(), |acc, (mu, (a, b))| {
            let t = a * b;
            if mu == 0 {
                &acc - &t
            } else {
                &acc + &t
            }
        })
}

pub fn ambient_metric(n: usize) -> ExactMatrix<GR> {
    ExactMatrix::from_fn(n + 2, n + 2, |a, b| {
        if a != b {
            GR::zero()
        } else if a < 2 {
            GR::from_int(-1)
        } else {
            GR::one()
        }
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum BoundaryPoint {
    Finite(Vec<GR>),
    /// Null ray on the slice `X^- = 0`, as Cartesian ambient components.
    AtInfinity(Vec<GR>),
}

impl BoundaryPoint {
    pub fn to_json(&self) -> serde_json::Value {
        let strs = |v: &[GR]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        match self {
            BoundaryPoint::Finite(x) => json!({"finite": strs(x)}),
            BoundaryPoint::AtInfinity(r) => json!({"at_infinity": strs(r)}),
        }
    }
}

/// Null lift `X^- = 1`, `X^mu = x^mu`, `X^+ = x^2` in Cartesian components.
pub fn lift(p: &BoundaryPoint) -> Result<Vec<GR>> {
    let BoundaryPoint::Finite(x) = p else {
        return Err(Error::AtInfinity("lift of a point at infinity; use its ray".into()));
    };
    let n = x.len();
    let plus = dot(x, x);
    let minus = GR::one();
    let mut v = vec![GR::zero(); n + 2];
    for mu in 0..n {
        v[amb(mu)] = x[mu].clone();
    }
    let half = GR::frac(1, 2);
    v[1] = &(&plus + &minus) * &half;
    v[n + 1] = &(&plus - &minus) * &half;
    Ok(v)
}

/// `eta_AB X^A X^B`.
pub fn ambient_norm(v: &[GR]) -> GR {
    v.iter().enumerate().fold(GR::zero(), |acc, (a, c)| {
        let t = c * c;
        if a < 2 {
            &acc - &t
        } else {
            &acc + &t
        }
    })
}

/// Project a nonzero ambient vector back to the boundary.
pub fn project(v: &[GR]) -> Result<BoundaryPoint> {
    if v.iter().all(Ring::is_zero) {
        return Err(Error::InvalidArgument("zero ambient vector".into()));
    }
    let n = v.len() - 2;
    let minus = &v[1] - &v[n + 1];
    if minus.is_zero() {
        return Ok(BoundaryPoint::AtInfinity(v.to_vec()));
    }
    let inv = minus.inv().expect("nonzero");
    Ok(BoundaryPoint::Finite((0..n).map(|mu| &v[amb(mu)] * &inv).collect()))
}

/// Linear map of R^{n,2}.
#[derive(Clone, Debug, PartialEq)]
pub struct AmbientMap {
    pub matrix: ExactMatrix<GR>,
}

impl AmbientMap {
    pub fn n(&self) -> usize {
        self.matrix.rows() - 2
    }

    /// Build from the action in light-cone coordinates `(X+, X-, X^mu)`.
    fn from_lightcone(n: usize, l: ExactMatrix<GR>) -> Self {
        // Cartesian = C * lightcone
        let d = n + 2;
        let half = GR::frac(1, 2);
        let c = ExactMatrix::from_fn(d, d, |a, b| {
            // rows: Cartesian index a; cols: (+, -, mu...)
            match (a, b) {
                (1, 0) | (1, 1) => half.clone(),
                (x, 0) if x == n + 1 => half.clone(),
                (x, 1) if x == n + 1 => -half.clone(),
                (x, b) if b >= 2 && x == amb(b - 2) => GR::one(),
                _ => GR::zero(),
            }
        });
        let cinv = c.inverse().expect("light-cone change is invertible");
        let m = c.try_mul(&l).and_then(|t| t.try_mul(&cinv)).expect("square");
        AmbientMap { matrix: m }
    }

    pub fn preserves_metric(&self) -> bool {
        let eta = ambient_metric(self.n());
        let lhs = self
            .matrix
            .transpose()
            .try_mul(&eta)
            .and_then(|t| t.try_mul(&self.matrix));
        lhs.is_ok_and(|m| m == eta)
    }

    pub fn compose(&self, other: &AmbientMap) -> Result<AmbientMap> {
        Ok(AmbientMap {
            matrix: self.matrix.try_mul(&other.matrix)?,
        })
    }

    pub fn apply(&self, v: &[GR]) -> Result<Vec<GR>> {
        self.matrix.mul_vec(v)
    }

    /// Equality as maps of lines: `self = c * other` for some nonzero `c`.
    pub fn projectively_equal(&self, other: &AmbientMap) -> bool {
        let (r, c) = (self.matrix.rows(), self.matrix.cols());
        if other.matrix.rows() != r || other.matrix.cols() != c {
            return false;
        }
        let mut ratio: Option<GR> = None;
        for i in 0..r {
            for j in 0..c {
                let (a, b) = (self.matrix.get(i, j), other.matrix.get(i, j));
                match (a.is_zero(), b.is_zero()) {
                    (true, true) => {}
                    (false, false) => {
                        let q = a / b;
                        match &ratio {
                            None => ratio = Some(q),
                            Some(r0) if *r0 == q => {}
                            Some(_) => return false,
                        }
                    }
                    _ => return false,
                }
            }
        }
        ratio.is_some()
    }
}

/// Lift, apply, and project.
pub fn act(m: &AmbientMap, x: &BoundaryPoint) -> Result<BoundaryPoint> {
    let v = match x {
        BoundaryPoint::Finite(_) => lift(x)?,
        BoundaryPoint::AtInfinity(r) => r.clone(),
    };
    if v.len() != m.n() + 2 {
        return Err(Error::Dimension(format!(
            "point of dimension {} for a map on R^{{{},2}}",
            v.len() - 2,
            m.n()
        )));
    }
    project(&m.apply(&v)?)
}

fn lc_identity(n: usize) -> ExactMatrix<GR> {
    ExactMatrix::identity(n + 2)
}

fn check_vec(n: usize, a: &[GR], what: &str) -> Result<()> {
    if a.len() != n {
        return Err(Error::Dimension(format!("{what} has length {}, expected {n}", a.len())));
    }
    if !a.iter().all(GR::is_real) {
        return Err(Error::InvalidArgument(format!("{what} must be real")));
    }
    Ok(())
}

/// `x -> x + a`.
pub fn translation(a: &[GR]) -> Result<AmbientMap> {
    let n = a.len();
    check_vec(n, a, "translation vector")?;
    let eta = minkowski(n);
    let mut l = lc_identity(n);
    // X+' = X+ + 2 a.X + a^2 X-,  X^mu' = X^mu + a^mu X-
    l.set(0, 1, dot(a, a));
    for mu in 0..n {
        l.set(0, 2 + mu, &(&a[mu] * &eta[mu]) * &GR::from_int(2));
        l.set(2 + mu, 1, a[mu].clone());
    }
    Ok(AmbientMap::from_lightcone(n, l))
}

/// `x -> lambda x`.
pub fn dilatation(n: usize, lambda: &GR) -> Result<AmbientMap> {
    if lambda.is_zero() || !lambda.is_real() {
        return Err(Error::InvalidArgument("dilatation factor must be a nonzero rational".into()));
    }
    let mut l = lc_identity(n);
    l.set(0, 0, lambda.clone());
    l.set(1, 1, lambda.inv().expect("nonzero"));
    Ok(AmbientMap::from_lightcone(n, l))
}

/// `x -> Lambda x` for `Lambda` in O(n-1,1).
pub fn lorentz(lam: &ExactMatrix<GR>) -> Result<AmbientMap> {
    let n = lam.rows();
    if lam.cols() != n {
        return Err(Error::NotSquare { rows: n, cols: lam.cols() });
    }
    let eta = ExactMatrix::from_fn(n, n, |a, b| if a == b { minkowski(n)[a].clone() } else { GR::zero() });
    let ok = lam.transpose().try_mul(&eta).and_then(|t| t.try_mul(lam))? == eta;
    if !ok {
        return Err(Error::InvalidArgument("matrix is not in O(n-1,1)".into()));
    }
    let mut l = lc_identity(n);
    for a in 0..n {
        for b in 0..n {
            l.set(2 + a, 2 + b, lam.get(a, b).clone());
        }
    }
    Ok(AmbientMap::from_lightcone(n, l))
}

/// `x -> (x + x^2 b) / (1 + 2 b.x + b^2 x^2)`.
pub fn special_conformal(b: &[GR]) -> Result<AmbientMap> {
    let n = b.len();
    check_vec(n, b, "special conformal vector")?;
    let eta = minkowski(n);
    let mut l = lc_identity(n);
    // X-' = X- + 2 b.X + b^2 X+,  X^mu' = X^mu + b^mu X+
    l.set(1, 0, dot(b, b));
    for mu in 0..n {
        l.set(1, 2 + mu, &(&b[mu] * &eta[mu]) * &GR::from_int(2));
        l.set(2 + mu, 0, b[mu].clone());
    }
    Ok(AmbientMap::from_lightcone(n, l))
}

/// `x -> x / x^2`: exchange of `X+` and `X-`, the reflection `X^n -> -X^n`.
pub fn inversion(n: usize) -> AmbientMap {
    let mut l = lc_identity(n);
    l.set(0, 0, GR::zero());
    l.set(1, 1, GR::zero());
    l.set(0, 1, GR::one());
    l.set(1, 0, GR::one());
    AmbientMap::from_lightcone(n, l)
}

/// The five map families with their parameters.
#[derive(Clone, Debug)]
pub enum ConformalMap {
    Translation(Vec<GR>),
    Dilatation(usize, GR),
    Lorentz(ExactMatrix<GR>),
    SpecialConformal(Vec<GR>),
    Inversion(usize),
}

impl ConformalMap {
    pub fn ambient(&self) -> Result<AmbientMap> {
        match self {
            ConformalMap::Translation(a) => translation(a),
            ConformalMap::Dilatation(n, l) => dilatation(*n, l),
            ConformalMap::Lorentz(m) => lorentz(m),
            ConformalMap::SpecialConformal(b) => special_conformal(b),
            ConformalMap::Inversion(n) => Ok(inversion(*n)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ConformalMap::Translation(_) => "translation",
            ConformalMap::Dilatation(..) => "dilatation",
            ConformalMap::Lorentz(_) => "lorentz",
            ConformalMap::SpecialConformal(_) => "special-conformal",
            ConformalMap::Inversion(_) => "inversion",
        }
    }

    /// Boundary action written directly in the coordinates `x^mu`; a
    /// vanishing denominator yields `None`.
    pub fn closed_form(&self, x: &[GR]) -> Option<Vec<GR>> {
        match self {
            ConformalMap::Translation(a) => Some(x.iter().zip(a).map(|(p, q)| p + q).collect()),
            ConformalMap::Dilatation(_, l) => Some(x.iter().map(|p| p * l).collect()),
            ConformalMap::Lorentz(m) => m.mul_vec(x).ok(),
            ConformalMap::SpecialConformal(b) => {
                let x2 = dot(x, x);
                let den = &(&GR::one() + &(&GR::from_int(2) * &dot(b, x))) + &(&dot(b, b) * &x2);
                let inv = den.inv()?;
                Some(x.iter().zip(b).map(|(p, q)| &(p + &(&x2 * q)) * &inv).collect())
            }
            ConformalMap::Inversion(_) => {
                let inv = dot(x, x).inv()?;
                Some(x.iter().map(|p| p * &inv).collect())
            }
        }
    }
}

pub fn random_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> GR {
    GR::frac(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn random_point<R: Rng>(rng: &mut R, n: usize) -> Vec<GR> {
    (0..n).map(|_| random_rational(rng, 5, 4)).collect()
}

/// Rational Lorentz matrix built from rational rotations and boosts.
pub fn random_lorentz<R: Rng>(rng: &mut R, n: usize) -> ExactMatrix<GR> {
    let mut m = ExactMatrix::<GR>::identity(n);
    for _ in 0..3 {
        let a = rng.gen_range(0..n);
        let mut b = rng.gen_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        let (a, b) = (a.min(b), a.max(b));
        // parameter t in (-1, 1), t != 0
        let t = GR::frac(rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 }, 5);
        let t2 = &t * &t;
        let mut g = ExactMatrix::<GR>::identity(n);
        if a == 0 {
            // boost: cosh = (1+t^2)/(1-t^2), sinh = 2t/(1-t^2)
            let den = (&GR::one() - &t2).inv().expect("|t| < 1");
            let ch = &(&GR::one() + &t2) * &den;
            let sh = &(&GR::from_int(2) * &t) * &den;
            g.set(a, a, ch.clone());
            g.set(b, b, ch);
            g.set(a, b, sh.clone());
            g.set(b, a, sh);
        } else {
            let den = (&GR::one() + &t2).inv().expect("positive");
            let c = &(&GR::one() - &t2) * &den;
            let s = &(&GR::from_int(2) * &t) * &den;
            g.set(a, a, c.clone());
            g.set(b, b, c);
            g.set(a, b, -s.clone());
            g.set(b, a, s);
        }
        m = g.try_mul(&m).expect("square");
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn v(xs: &[i64]) -> Vec<GR> {
        xs.iter().map(|&x| GR::from_int(x)).collect()
    }

    #[test]
    fn lift_examples() {
        let l = lift(&BoundaryPoint::Finite(v(&[0, 0, 0]))).unwrap();
        assert!(ambient_norm(&l).is_zero());
        // X+ = X0' + X3 = 0, X- = 1
        assert_eq!(&l[1] + &l[4], GR::zero());
        assert_eq!(&l[1] - &l[4], GR::one());
        let l = lift(&BoundaryPoint::Finite(v(&[1, 1, 0]))).unwrap();
        assert_eq!(&l[1] + &l[4], GR::zero());
        let l = lift(&BoundaryPoint::Finite(v(&[0, 1, 0]))).unwrap();
        assert_eq!(&l[1] + &l[4], GR::one());
        assert!(lift(&BoundaryPoint::AtInfinity(v(&[1, 0, 0, 0, 0]))).is_err());
    }

    #[test]
    fn families_preserve_metric_and_act() {
        let x = BoundaryPoint::Finite(v(&[1, 2, -1]));
        let t = translation(&v(&[1, 0, 3])).unwrap();
        assert!(t.preserves_metric());
        assert_eq!(act(&t, &x).unwrap(), BoundaryPoint::Finite(v(&[2, 2, 2])));
        let d = dilatation(3, &GR::from_int(2)).unwrap();
        assert!(d.preserves_metric());
        assert_eq!(act(&d, &x).unwrap(), BoundaryPoint::Finite(v(&[2, 4, -2])));
        assert!(dilatation(3, &GR::zero()).is_err());
        let inv = inversion(3);
        assert!(inv.preserves_metric());
        let y = BoundaryPoint::Finite(v(&[0, 2, 0]));
        assert_eq!(
            act(&inv, &y).unwrap(),
            BoundaryPoint::Finite(vec![GR::zero(), GR::frac(1, 2), GR::zero()])
        );
        assert_eq!(inv.compose(&inv).unwrap().matrix, ExactMatrix::identity(5));
    }

    #[test]
    fn special_conformal_examples() {
        // b = x = spatial unit vector: denominator 1 + 2 + 1 = 4
        let b = v(&[0, 1, 0]);
        let k = special_conformal(&b).unwrap();
        assert!(k.preserves_metric());
        assert_eq!(
            act(&k, &BoundaryPoint::Finite(b.clone())).unwrap(),
            BoundaryPoint::Finite(vec![GR::zero(), GR::frac(1, 2), GR::zero()])
        );
        // 1 + 2 b.x + b^2 x^2 = 0 for x = -b
        let out = act(&k, &BoundaryPoint::Finite(v(&[0, -1, 0]))).unwrap();
        assert!(matches!(out, BoundaryPoint::AtInfinity(_)));
    }

    #[test]
    fn conjugacy_and_random_lorentz() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let b = random_point(&mut rng, 4);
            let inv = inversion(4);
            let conj = inv.compose(&translation(&b).unwrap()).unwrap().compose(&inv).unwrap();
            assert!(special_conformal(&b).unwrap().projectively_equal(&conj));
            let lam = random_lorentz(&mut rng, 4);
            assert!(lorentz(&lam).unwrap().preserves_metric());
        }
    }
}
