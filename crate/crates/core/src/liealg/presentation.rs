//! Structure-constant presentations of (super) Lie algebras.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactcore::{ExactMatrix, Parity, Ring, UniPoly, GR};

/// Linear combination of basis indices.
pub type Combo<T> = BTreeMap<usize, T>;

pub fn combo_add_scaled<T: Ring>(acc: &mut Combo<T>, c: &T, v: &Combo<T>) {
    for (&k, x) in v {
        let delta = c.clone() * x;
        if delta.is_zero() {
            continue;
        }
        let entry = acc.entry(k).or_insert_with(T::zero);
        *entry = entry.clone() + &delta;
        if entry.is_zero() {
            acc.remove(&k);
        }
    }
}

fn combo_scale<T: Ring>(v: &Combo<T>, c: &T) -> Combo<T> {
    let mut out = Combo::new();
    combo_add_scaled(&mut out, c, v);
    out
}

/// Element of a specific presentation.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<T: Ring = GR> {
    algebra: Arc<str>,
    coeffs: Combo<T>,
}

impl<T: Ring> AlgebraElement<T> {
    pub fn coeffs(&self) -> &Combo<T> {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(&k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn algebra(&self) -> &str {
        &self.algebra
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::InvalidArgument("elements of different algebras".into()));
        }
        let mut coeffs = self.coeffs.clone();
        combo_add_scaled(&mut coeffs, &T::one(), &other.coeffs);
        Ok(AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: combo_scale(&self.coeffs, c),
        }
    }
}

/// Basis labels, parities and the full bracket table `[e_i, e_j]`.
#[derive(Clone, Debug)]
pub struct Presentation<T: Ring = GR> {
    name: Arc<str>,
    labels: Vec<String>,
    parities: Vec<Parity>,
    table: Vec<Vec<Combo<T>>>,
}

/// A basis triple on which the graded Jacobi identity fails, with the
/// nonzero Jacobiator.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiViolation<T: Ring = GR> {
    pub triple: (usize, usize, usize),
    pub jacobiator: Combo<T>,
}

fn sign_pp(a: Parity, b: Parity) -> bool {
    a.is_odd() && b.is_odd()
}

impl<T: Ring> Presentation<T> {
    /// Build from a function giving `[e_i, e_j]` for `i <= j`; the other half
    /// of the table is filled in by graded antisymmetry. Diagonal brackets of
    /// even elements must vanish.
    pub fn from_upper(
        name: &str,
        labels: Vec<String>,
        parities: Vec<Parity>,
        bracket: impl Fn(usize, usize) -> Combo<T> + Sync,
    ) -> Result<Self> {
        let d = labels.len();
        if parities.len() != d {
            return Err(Error::Dimension("labels and parities differ in length".into()));
        }
        let upper: Vec<Vec<Combo<T>>> = (0..d)
            .into_par_iter()
            .map(|i| (i..d).map(|j| bracket(i, j)).collect())
            .collect();
        let mut table = vec![vec![Combo::new(); d]; d];
        for i in 0..d {
            for j in i..d {
                let v = upper[i][j - i].clone();
                if i == j && !parities[i].is_odd() && !v.is_empty() {
                    return Err(Error::InvalidArgument(format!(
                        "nonzero self-bracket of even element {}",
                        labels[i]
                    )));
                }
                if i != j {
                    let s = if sign_pp(parities[i], parities[j]) {
                        T::one()
                    } else {
                        -T::one()
                    };
                    table[j][i] = combo_scale(&v, &s);
                }
                table[i][j] = v;
            }
        }
        Ok(Presentation {
            name: name.into(),
            labels,
            parities,
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Structure constants `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &Combo<T> {
        &self.table[i][j]
    }

    pub fn basis(&self, i: usize) -> AlgebraElement<T> {
        self.element(Combo::from([(i, T::one())]))
    }

    pub fn element(&self, coeffs: Combo<T>) -> AlgebraElement<T> {
        AlgebraElement {
            algebra: self.name.clone(),
            coeffs: coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Element from `(label, coefficient)` pairs.
    pub fn element_from_labels(&self, terms: &[(&str, T)]) -> Result<AlgebraElement<T>> {
        let mut coeffs = Combo::new();
        for (l, c) in terms {
            let k = self
                .index_of(l)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown basis label '{l}'")))?;
            combo_add_scaled(&mut coeffs, c, &Combo::from([(k, T::one())]));
        }
        Ok(self.element(coeffs))
    }

    pub fn bracket_combo(&self, x: &Combo<T>, y: &Combo<T>) -> Combo<T> {
        let mut out = Combo::new();
        for (&i, a) in x {
            for (&j, b) in y {
                combo_add_scaled(&mut out, &(a.clone() * b), &self.table[i][j]);
            }
        }
        out
    }

    pub fn bracket(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> Result<AlgebraElement<T>> {
        if x.algebra != self.name || y.algebra != self.name {
            return Err(Error::InvalidArgument(format!(
                "elements do not belong to {}",
                self.name
            )));
        }
        Ok(AlgebraElement {
            algebra: self.name.clone(),
            coeffs: self.bracket_combo(&x.coeffs, &y.coeffs),
        })
    }

    /// Pairs `(i, j)` whose stored brackets violate graded antisymmetry.
    pub fn check_antisymmetry(&self) -> Vec<(usize, usize)> {
        let d = self.dim();
        let mut bad = Vec::new();
        for i in 0..d {
            for j in i..d {
                let s = if sign_pp(self.parities[i], self.parities[j]) {
                    T::one()
                } else {
                    -T::one()
                };
                if self.table[j][i] != combo_scale(&self.table[i][j], &s) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    /// Graded Jacobiator
    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]`.
    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Combo<T> {
        let p = &self.parities;
        let term = |a: usize, b: usize, c: usize| {
            let inner = &self.table[b][c];
            let v = self.bracket_combo(&Combo::from([(a, T::one())]), inner);
            let s = if sign_pp(p[a], p[c]) { -T::one() } else { T::one() };
            combo_scale(&v, &s)
        };
        let mut out = term(i, j, k);
        combo_add_scaled(&mut out, &T::one(), &term(j, k, i));
        combo_add_scaled(&mut out, &T::one(), &term(k, i, j));
        out
    }

    /// Basis triples `i <= j <= k` violating the graded Jacobi identity.
    /// Together with antisymmetry this covers every ordered triple.
    pub fn check_jacobi(&self) -> Vec<JacobiViolation<T>> {
        let d = self.dim();
        let mut out: Vec<JacobiViolation<T>> = (0..d)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut local = Vec::new();
                for j in i..d {
                    for k in j..d {
                        let jac = self.jacobiator(i, j, k);
                        if !jac.is_empty() {
                            local.push(JacobiViolation {
                                triple: (i, j, k),
                                jacobiator: jac,
                            });
                        }
                    }
                }
                local
            })
            .collect();
        out.sort_by_key(|v| v.triple);
        out
    }

    /// Overwrite `[e_i, e_j]` (and its graded-antisymmetric partner). Meant
    /// for fault-injection tests.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Combo<T>) {
        let s = if sign_pp(self.parities[i], self.parities[j]) {
            T::one()
        } else {
            -T::one()
        };
        self.table[j][i] = combo_scale(&value, &s);
        self.table[i][j] = value;
    }

    /// Sub-presentation on the given basis indices, which must span a
    /// subalgebra.
    pub fn restrict(&self, name: &str, indices: &[usize]) -> Result<Presentation<T>> {
        let pos: BTreeMap<usize, usize> = indices.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let mut table = vec![vec![Combo::new(); indices.len()]; indices.len()];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                let mut v = Combo::new();
                for (k, c) in &self.table[i][j] {
                    let Some(&kk) = pos.get(k) else {
                        return Err(Error::InvalidArgument(format!(
                            "[{}, {}] leaves the subspace",
                            self.labels[i], self.labels[j]
                        )));
                    };
                    v.insert(kk, c.clone());
                }
                table[a][b] = v;
            }
        }
        Ok(Presentation {
            name: name.into(),
            labels: indices.iter().map(|&i| self.labels[i].clone()).collect(),
            parities: indices.iter().map(|&i| self.parities[i]).collect(),
            table,
        })
    }

    pub fn map_coeffs<U: Ring>(&self, name: &str, f: impl Fn(&T) -> U) -> Presentation<U> {
        Presentation {
            name: name.into(),
            labels: self.labels.clone(),
            parities: self.parities.clone(),
            table: self
                .table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| {
                            c.iter()
                                .map(|(&k, x)| (k, f(x)))
                                .filter(|(_, x)| !x.is_zero())
                                .collect()
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn combo_to_string(&self, v: &Combo<T>) -> String {
        if v.is_empty() {
            return "0".into();
        }
        v.iter()
            .map(|(&k, c)| format!("({c})*{}", self.labels[k]))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// JSON export `{name, basis, parity, brackets}` listing the nonzero
    /// brackets with `i <= j`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                if self.table[i][j].is_empty() {
                    continue;
                }
                let terms: Vec<_> = self.table[i][j]
                    .iter()
                    .map(|(&k, c)| json!({"basis": self.labels[k], "coefficient": c.to_string()}))
                    .collect();
                brackets.push(json!({
                    "left": self.labels[i],
                    "right": self.labels[j],
                    "value": terms,
                }));
            }
        }
        json!({
            "name": &*self.name,
            "basis": self.labels,
            "parity": self.parities,
            "brackets": brackets,
        })
    }
}

impl Presentation<UniPoly> {
    /// Evaluate polynomial structure constants at a point.
    pub fn specialize(&self, name: &str, at: &GR) -> Presentation<GR> {
        self.map_coeffs(name, |p| p.eval(at))
    }
}

/// Invertible change of basis: new basis vector `k` is
/// `sum_l forward[k][l] * old_l`.
#[derive(Clone, Debug)]
pub struct BasisChange {
    pub forward: ExactMatrix<GR>,
    pub inverse: ExactMatrix<GR>,
}

impl BasisChange {
    pub fn new(forward: ExactMatrix<GR>) -> Result<Self> {
        let inverse = forward.inverse()?;
        Ok(BasisChange { forward, inverse })
    }

    /// Express an old-basis combination in the new basis.
    pub fn to_new(&self, v: &Combo<GR>) -> Combo<GR> {
        let mut out = Combo::new();
        for (&l, c) in v {
            // old_l = sum_k inverse[l][k] new_k
            let row: Combo<GR> = (0..self.inverse.cols())
                .filter(|&k| !self.inverse.get(l, k).is_zero())
                .map(|k| (k, self.inverse.get(l, k).clone()))
                .collect();
            combo_add_scaled(&mut out, c, &row);
        }
        out
    }

    /// Express a new-basis combination in the old basis.
    pub fn to_old(&self, v: &Combo<GR>) -> Combo<GR> {
        let mut out = Combo::new();
        for (&k, c) in v {
            let row: Combo<GR> = (0..self.forward.cols())
                .filter(|&l| !self.forward.get(k, l).is_zero())
                .map(|l| (l, self.forward.get(k, l).clone()))
                .collect();
            combo_add_scaled(&mut out, c, &row);
        }
        out
    }

    /// Presentation induced on the new basis.
    pub fn induce(
        &self,
        old: &Presentation<GR>,
        name: &str,
        labels: Vec<String>,
        parities: Vec<Parity>,
    ) -> Result<Presentation<GR>> {
        if labels.len() != old.dim() || self.forward.rows() != old.dim() {
            return Err(Error::Dimension("basis change does not match presentation".into()));
        }
        let olds: Vec<Combo<GR>> = (0..old.dim())
            .map(|k| self.to_old(&Combo::from([(k, GR::one())])))
            .collect();
        Presentation::from_upper(name, labels, parities, |i, j| {
            self.to_new(&old.bracket_combo(&olds[i], &olds[j]))
        })
    }

    /// Old-basis pairs where mapping then bracketing differs from
    /// bracketing then mapping.
    pub fn check_transport(&self, old: &Presentation<GR>, new: &Presentation<GR>) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        let images: Vec<Combo<GR>> = (0..old.dim())
            .map(|l| self.to_new(&Combo::from([(l, GR::one())])))
            .collect();
        for a in 0..old.dim() {
            for b in a..old.dim() {
                let lhs = self.to_new(old.basis_bracket(a, b));
                let rhs = new.bracket_combo(&images[a], &images[b]);
                if lhs != rhs {
                    bad.push((a, b));
                }
            }
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// sl(2) in the basis h, e, f.
    fn sl2() -> Presentation {
        let labels = vec!["h".into(), "e".into(), "f".into()];
        Presentation::from_upper("sl2", labels, vec![Parity::Even; 3], |i, j| match (i, j) {
            (0, 1) => Combo::from([(1, GR::from_int(2))]),
            (0, 2) => Combo::from([(2, GR::from_int(-2))]),
            (1, 2) => Combo::from([(0, GR::one())]),
            _ => Combo::new(),
        })
        .unwrap()
    }

    #[test]
    fn sl2_jacobi_and_antisymmetry() {
        let g = sl2();
        assert!(g.check_jacobi().is_empty());
        assert!(g.check_antisymmetry().is_empty());
        let f = g.basis(2);
        let e = g.basis(1);
        assert_eq!(g.bracket(&f, &e).unwrap(), g.basis(0).scale(&GR::from_int(-1)));
        assert!(g.bracket(&e, &e).unwrap().is_zero());
    }

    #[test]
    fn mismatched_presentations() {
        let g = sl2();
        let mut other = sl2();
        other.name = "other".into();
        assert!(g.bracket(&g.basis(0), &other.basis(1)).is_err());
    }

    #[test]
    fn corrupted_constant_is_detected() {
        let mut g = sl2();
        g.set_bracket(0, 1, Combo::from([(1, GR::from_int(3))]));
        let bad = g.check_jacobi();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].triple, (0, 1, 2));
    }

    #[test]
    fn restriction_requires_closure() {
        let g = sl2();
        assert!(g.restrict("b", &[0, 1]).is_ok());
        assert!(g.restrict("x", &[1, 2]).is_err());
    }
}
