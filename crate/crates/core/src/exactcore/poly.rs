//! Sparse polynomials in commuting (even) and anticommuting (odd) variables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::scalar::{Ring, GR};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        Parity::from_odd(self.is_odd() != other.is_odd())
    }
}

/// Ordered list of named variables with fixed parities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableTable {
    names: Vec<String>,
    parities: Vec<Parity>,
}

impl VariableTable {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = (S, Parity)>) -> Result<Arc<Self>> {
        let mut names = Vec::new();
        let mut parities = Vec::new();
        for (name, parity) in vars {
            let name = name.into();
            if names.contains(&name) {
                return Err(Error::InvalidArgument(format!("duplicate variable '{name}'")));
            }
            names.push(name);
            parities.push(parity);
        }
        Ok(Arc::new(VariableTable { names, parities }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn parity(&self, v: usize) -> Parity {
        self.parities[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Monomial: even exponents (sorted by variable) and a strictly increasing
/// list of odd variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub even: Vec<(u32, u32)>,
    pub odd: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn degree(&self) -> u32 {
        self.even.iter().map(|&(_, e)| e).sum::<u32>() + self.odd.len() as u32
    }

    pub fn parity(&self) -> Parity {
        Parity::from_odd(self.odd.len() % 2 == 1)
    }

    pub fn exponent(&self, v: u32) -> u32 {
        self.even
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    /// Product with the Grassmann sign; `None` when an odd variable repeats.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        let mut even = Vec::with_capacity(self.even.len() + other.even.len());
        let (mut i, mut j) = (0, 0);
        while i < self.even.len() || j < other.even.len() {
            match (self.even.get(i), other.even.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    even.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    even.push((a, ea));
                    i += 1;
                }
                (Some(&(a, ea)), None) => {
                    even.push((a, ea));
                    i += 1;
                }
                (_, Some(&(b, eb))) => {
                    even.push((b, eb));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        // merge odd lists counting inversions
        let mut odd = Vec::with_capacity(self.odd.len() + other.odd.len());
        let mut negate = false;
        let (mut i, mut j) = (0, 0);
        while i < self.odd.len() || j < other.odd.len() {
            match (self.odd.get(i), other.odd.get(j)) {
                (Some(&a), Some(&b)) if a == b => return None,
                (Some(&a), Some(&b)) if a < b => {
                    odd.push(a);
                    i += 1;
                }
                (Some(&a), None) => {
                    odd.push(a);
                    i += 1;
                }
                (_, Some(&b)) => {
                    // b jumps over the remaining entries of self.odd
                    if (self.odd.len() - i) % 2 == 1 {
                        negate = !negate;
                    }
                    odd.push(b);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Some((Monomial { even, odd }, negate))
    }

    /// Derivative with respect to an even variable: (multiplier, result).
    pub fn d_even(&self, v: u32) -> Option<(u32, Monomial)> {
        let pos = self.even.iter().position(|&(w, _)| w == v)?;
        let e = self.even[pos].1;
        let mut even = self.even.clone();
        if e == 1 {
            even.remove(pos);
        } else {
            even[pos].1 -= 1;
        }
        Some((
            e,
            Monomial {
                even,
                odd: self.odd.clone(),
            },
        ))
    }

    /// Left (`from_left = true`) or right derivative by an odd variable:
    /// (negate, result).
    pub fn d_odd(&self, v: u32, from_left: bool) -> Option<(bool, Monomial)> {
        let pos = self.odd.iter().position(|&w| w == v)?;
        let hops = if from_left { pos } else { self.odd.len() - 1 - pos };
        let mut odd = self.odd.clone();
        odd.remove(pos);
        Some((
            hops % 2 == 1,
            Monomial {
                even: self.even.clone(),
                odd,
            },
        ))
    }

    pub fn fmt_with(&self, vars: &VariableTable) -> String {
        let mut parts = Vec::new();
        for &(v, e) in &self.even {
            if e == 1 {
                parts.push(vars.name(v as usize).to_string());
            } else {
                parts.push(format!("{}^{}", vars.name(v as usize), e));
            }
        }
        for &v in &self.odd {
            parts.push(vars.name(v as usize).to_string());
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Polynomial over the Gaussian rationals in a shared variable table.
#[derive(Clone)]
pub struct SuperPolynomial {
    vars: Arc<VariableTable>,
    terms: BTreeMap<Monomial, GR>,
}

impl PartialEq for SuperPolynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
            && self.terms == other.terms
    }
}

impl SuperPolynomial {
    pub fn zero(vars: &Arc<VariableTable>) -> Self {
        SuperPolynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VariableTable>, c: GR) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn one(vars: &Arc<VariableTable>) -> Self {
        Self::constant(vars, GR::one())
    }

    /// The variable with index `v`.
    pub fn var(vars: &Arc<VariableTable>, v: usize) -> Self {
        let m = match vars.parity(v) {
            Parity::Even => Monomial {
                even: vec![(v as u32, 1)],
                odd: vec![],
            },
            Parity::Odd => Monomial {
                even: vec![],
                odd: vec![v as u32],
            },
        };
        let mut p = Self::zero(vars);
        p.add_term(m, GR::one());
        p
    }

    pub fn from_terms(vars: &Arc<VariableTable>, terms: impl IntoIterator<Item = (Monomial, GR)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VariableTable> {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, GR> {
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

    pub fn coeff(&self, m: &Monomial) -> GR {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> GR {
        self.coeff(&Monomial::one())
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: GR) {
        if Ring::is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if Ring::is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableTableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-GR::one()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, neg)) = ma.mul(mb) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GR) -> Self {
        if Ring::is_zero(c) {
            return Self::zero(&self.vars);
        }
        SuperPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Split into (even part, odd part) by Grassmann parity of each monomial.
    pub fn parity_parts(&self) -> (Self, Self) {
        let mut even = Self::zero(&self.vars);
        let mut odd = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            match m.parity() {
                Parity::Even => even.terms.insert(m.clone(), c.clone()),
                Parity::Odd => odd.terms.insert(m.clone(), c.clone()),
            };
        }
        (even, odd)
    }

    /// Homogeneous Grassmann parity, `None` for mixed polynomials.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Part of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        SuperPolynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Partial derivative; left derivative for odd variables.
    pub fn derivative(&self, v: usize) -> Self {
        self.derivative_from(v, true)
    }

    /// Right derivative (acting from the right on odd variables).
    pub fn derivative_right(&self, v: usize) -> Self {
        self.derivative_from(v, false)
    }

    fn derivative_from(&self, v: usize, from_left: bool) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            match self.vars.parity(v) {
                Parity::Even => {
                    if let Some((e, dm)) = m.d_even(v as u32) {
                        out.add_term(dm, c * &GR::from_int(e as i64));
                    }
                }
                Parity::Odd => {
                    if let Some((neg, dm)) = m.d_odd(v as u32, from_left) {
                        out.add_term(dm, if neg { -c.clone() } else { c.clone() });
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "monomial": m.fmt_with(&self.vars),
                        "coefficient": c.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let ms = m.fmt_with(&self.vars);
            let cs = c.to_string();
            let body = if ms == "1" {
                cs
            } else if cs == "1" {
                ms
            } else if cs == "-1" {
                format!("-{ms}")
            } else if !c.is_real() && !num_traits::Zero::is_zero(&c.re) {
                format!("({cs})*{ms}")
            } else {
                format!("{cs}*{ms}")
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! poly_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<'a> std::ops::$tr<&'a SuperPolynomial> for &'a SuperPolynomial {
            type Output = SuperPolynomial;
            /// Panics if the variable tables differ; see the `try_*` methods.
            fn $method(self, rhs: &SuperPolynomial) -> SuperPolynomial {
                self.$try(rhs).expect("polynomials over different variable tables")
            }
        }
    };
}
poly_op!(Add, add, try_add);
poly_op!(Sub, sub, try_sub);
poly_op!(Mul, mul, try_mul);

impl std::ops::Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        self.scale(&-GR::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Arc<VariableTable> {
        VariableTable::new([
            ("X", Parity::Even),
            ("P", Parity::Even),
            ("t1", Parity::Odd),
            ("t2", Parity::Odd),
            ("t3", Parity::Odd),
        ])
        .unwrap()
    }

    #[test]
    fn grassmann_sign_flip() {
        let v = table();
        let t1 = SuperPolynomial::var(&v, 2);
        let t2 = SuperPolynomial::var(&v, 3);
        assert_eq!(&t1 * &t2, -&(&t2 * &t1));
        assert!((&t1 * &t1).is_zero());
        let t3 = SuperPolynomial::var(&v, 4);
        // t3 t1 t2 = t1 t2 t3 (two transpositions)
        assert_eq!(&(&t3 * &t1) * &t2, &(&t1 * &t2) * &t3);
    }

    #[test]
    fn commuting_difference_of_squares() {
        let v = table();
        let x = SuperPolynomial::var(&v, 0);
        let p = SuperPolynomial::var(&v, 1);
        let lhs = &(&x + &p) * &(&x - &p);
        let rhs = &(&x * &x) - &(&p * &p);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mismatched_tables_error() {
        let a = SuperPolynomial::var(&table(), 0);
        let other = VariableTable::new([("Y", Parity::Even)]).unwrap();
        let b = SuperPolynomial::var(&other, 0);
        assert_eq!(a.try_mul(&b), Err(Error::VariableTableMismatch));
        assert!(VariableTable::new([("a", Parity::Even), ("a", Parity::Odd)]).is_err());
    }

    #[test]
    fn odd_derivatives_carry_signs() {
        let v = table();
        let t1 = SuperPolynomial::var(&v, 2);
        let t2 = SuperPolynomial::var(&v, 3);
        let m = &t1 * &t2;
        // left derivative by t2 of t1 t2 is -t1
        assert_eq!(m.derivative(3), -&t1);
        assert_eq!(m.derivative(2), t2);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(v: Arc<VariableTable>) -> impl Strategy<Value = SuperPolynomial> {
            let term = (
                prop::collection::vec(0u32..3, 2),
                prop::collection::vec(any::<bool>(), 3),
                -4i64..=4,
                -2i64..=2,
            );
            prop::collection::vec(term, 0..5).prop_map(move |terms| {
                SuperPolynomial::from_terms(
                    &v,
                    terms.into_iter().map(|(ev, odd, a, b)| {
                        let even = ev
                            .iter()
                            .enumerate()
                            .filter(|(_, &e)| e > 0)
                            .map(|(k, &e)| (k as u32, e))
                            .collect();
                        let odd = (0..3).filter(|&k| odd[k]).map(|k| k as u32 + 2).collect();
                        (Monomial { even, odd }, &GR::from_int(a) + &(&GR::i() * &GR::from_int(b)))
                    }),
                )
            })
        }

        fn homogeneous(p: SuperPolynomial, odd: bool) -> SuperPolynomial {
            let (e, o) = p.parity_parts();
            if odd {
                o
            } else {
                e
            }
        }

        proptest! {
            #[test]
            fn associative(p in arb_poly(table()), q in arb_poly(table()), r in arb_poly(table())) {
                prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            }

            #[test]
            fn supercommutative(p in arb_poly(table()), q in arb_poly(table()), po: bool, qo: bool) {
                let p = homogeneous(p, po);
                let q = homogeneous(q, qo);
                let swapped = &q * &p;
                let expected = if po && qo { -&swapped } else { swapped };
                prop_assert_eq!(&p * &q, expected);
            }

            #[test]
            fn distributive(p in arb_poly(table()), q in arb_poly(table()), r in arb_poly(table())) {
                prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            }
        }
    }
}
