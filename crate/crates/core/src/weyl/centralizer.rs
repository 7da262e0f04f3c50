//! The centralizer of sp(2) in the Weyl algebra modulo the two-sided ideal
//! generated by the constraints, filtered by polynomial degree.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::howe::u_generators;
use super::phase::{AmbientSpace, PhaseSymbol};
use crate::checks::{Check, Report};
use crate::error::{Error, Result};
use crate::exactcore::sparse::kernel;
use crate::exactcore::{Echelon, Monomial, Ring, SparseVec, GR};
use crate::youngdim::{o_dim, YoungDiagram};

/// Truncated Weyl algebra `W_{≤d}` restricted to monomials of the parity of
/// `d`, with the left ideal `I_{≤d} = span{g ★ U : deg g ≤ d - 2}` and the
/// centralizer `C_{≤d}` of the constraints. The quotient of interest is
/// `C / (C ∩ I)`, whose dimension is `dim(C + I) - dim I`.
struct Truncation {
    amb: AmbientSpace,
    degree: u32,
    monos: Vec<PhaseSymbol>,
    index: HashMap<Monomial, usize>,
    ideal: Echelon,
    centralizer: Vec<SparseVec>,
}

/// Monomials in the first `nvars` variables of exact degree `k`.
fn monomials_of_degree(amb: &AmbientSpace, nvars: usize, k: u32) -> Vec<PhaseSymbol> {
    fn rec(amb: &AmbientSpace, start: usize, nvars: usize, k: u32, acc: PhaseSymbol, out: &mut Vec<PhaseSymbol>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for v in start..nvars {
            rec(amb, v, nvars, k - 1, &acc * &amb.space().var(v), out);
        }
    }
    let mut out = Vec::new();
    rec(amb, 0, nvars, k, amb.space().constant(GR::one()), &mut out);
    out
}

impl Truncation {
    fn build(n: usize, degree: u32) -> Result<Self> {
        if degree % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "degree {degree} is odd; the centralizer filtration lives in even degrees"
            )));
        }
        let amb = AmbientSpace::new(n, 0)?;
        let nvars = 2 * amb.dim();
        // highest degree first so that pivots eliminate leading terms
        let mut monos = Vec::new();
        for k in (0..=degree).rev().step_by(2) {
            monos.extend(monomials_of_degree(&amb, nvars, k));
        }
        let index: HashMap<Monomial, usize> = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.terms().keys().next().expect("monomial").clone(), i))
            .collect();
        let us = u_generators(&amb);
        let space = amb.space();
        let to_vec = |p: &PhaseSymbol| -> SparseVec {
            p.terms()
                .iter()
                .map(|(m, c)| (*index.get(m).expect("degree bound respected"), c.clone()))
                .collect()
        };

        let ideal_gens: Vec<SparseVec> = monos
            .par_iter()
            .filter(|g| g.degree().unwrap_or(0) + 2 <= degree)
            .flat_map_iter(|g| us.iter().map(|u| to_vec(&space.star(g, u))).collect::<Vec<_>>())
            .collect();
        let mut ideal = Echelon::new();
        for v in &ideal_gens {
            ideal.insert(v);
        }

        let r = us.len();
        let images: Vec<SparseVec> = monos
            .par_iter()
            .map(|f| {
                let mut v = SparseVec::new();
                for (j, u) in us.iter().enumerate() {
                    for (k, c) in to_vec(&space.commutator(f, u)) {
                        v.insert(k * r + j, c);
                    }
                }
                v
            })
            .collect();
        let centralizer = kernel(&images);
        Ok(Truncation {
            amb,
            degree,
            monos,
            index,
            ideal,
            centralizer,
        })
    }

    fn symbol(&self, v: &SparseVec) -> PhaseSymbol {
        let mut out = self.amb.space().zero();
        for (&k, c) in v {
            out = &out + &self.monos[k].scale(c);
        }
        out
    }

    fn vector(&self, p: &PhaseSymbol) -> Option<SparseVec> {
        p.terms()
            .iter()
            .map(|(m, c)| self.index.get(m).map(|&k| (k, c.clone())))
            .collect()
    }

    /// Echelon form of `C + I`.
    fn joint_span(&self) -> Echelon {
        let mut e = self.ideal.clone();
        for v in &self.centralizer {
            e.insert(v);
        }
        e
    }

    fn quotient_dim(&self) -> usize {
        self.joint_span().rank() - self.ideal.rank()
    }

    /// Echelon form of `I_{≤d} + W_{≤d-2}`.
    fn lower_span(&self) -> Echelon {
        let mut e = self.ideal.clone();
        for (k, m) in self.monos.iter().enumerate() {
            if m.degree().unwrap_or(0) + 2 <= self.degree {
                e.insert(&SparseVec::from([(k, GR::one())]));
            }
        }
        e
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralizerDims {
    pub n: usize,
    pub degree: u32,
    /// `dim C_{≤2k} / I_{≤2k}` for `k = 0..=degree/2`.
    pub cumulative: Vec<usize>,
    /// Successive differences of `cumulative`.
    pub graded: Vec<usize>,
    /// `dim` of the o(n+2) module with two-row rectangular diagram `[k, k]`.
    pub expected: Vec<u128>,
    /// Leading parts of representatives of the top graded piece.
    pub representatives: Vec<String>,
    /// Independently computed size of the top graded piece.
    pub top_rank: usize,
}

impl CentralizerDims {
    pub fn matches_expected(&self) -> bool {
        self.graded.iter().zip(&self.expected).all(|(&g, &e)| g as u128 == e) && self.graded.last() == Some(&self.top_rank)
    }
}

/// Graded dimensions of `C(sp(2)) / I` up to the given even degree.
pub fn centralizer_mod_ideal(n: usize, degree: u32) -> Result<CentralizerDims> {
    if degree % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "degree {degree} is odd; the centralizer filtration lives in even degrees"
        )));
    }
    let mut cumulative = Vec::new();
    let mut top = None;
    for k in 0..=degree / 2 {
        let t = Truncation::build(n, 2 * k)?;
        cumulative.push(t.quotient_dim());
        top = Some(t);
    }
    let top = top.expect("at least degree zero");
    let graded: Vec<usize> = cumulative
        .iter()
        .enumerate()
        .map(|(k, &c)| if k == 0 { c } else { c - cumulative[k - 1] })
        .collect();
    let expected = (0..=degree / 2)
        .map(|k| o_dim(&YoungDiagram::rectangle(k as usize, 2), n + 2))
        .collect::<Result<Vec<_>>>()?;

    let mut lower = top.lower_span();
    let mut representatives = Vec::new();
    for v in &top.centralizer {
        if lower.insert(v) {
            let lead = top.symbol(v).homogeneous_part(degree);
            representatives.push(lead.to_string());
        }
    }
    Ok(CentralizerDims {
        n,
        degree,
        top_rank: representatives.len(),
        cumulative,
        graded,
        expected,
        representatives,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LSpanSummary {
    pub n: usize,
    pub degree: u32,
    pub l_monomials: usize,
    pub centralizer_dim: usize,
    pub ideal_rank: usize,
    pub top_classes: usize,
    pub report: Report,
}

/// Products of at most `m` generators `L^{AB}`, `A < B`.
fn l_monomials(amb: &AmbientSpace, m: u32) -> Vec<(u32, PhaseSymbol)> {
    let d = amb.dim();
    let ls: Vec<PhaseSymbol> = (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).map(|(a, b)| amb.l(a, b)).collect();
    let mut out = vec![(0, amb.space().constant(GR::one()))];
    let mut frontier: Vec<(usize, PhaseSymbol)> = vec![(0, amb.space().constant(GR::one()))];
    for k in 1..=m {
        let mut next = Vec::new();
        for (start, p) in &frontier {
            for (i, l) in ls.iter().enumerate().skip(*start) {
                next.push((i, p * l));
            }
        }
        out.extend(next.iter().map(|(_, p)| (k, p.clone())));
        frontier = next;
    }
    out
}

/// Checks that the centralizer modulo the ideal is spanned by commutative
/// polynomials in the `L^{AB}` up to the given even degree, and that the
/// quadratic Plücker relations hold among them.
pub fn l_polynomial_span_check(n: usize, degree: u32) -> Result<LSpanSummary> {
    let t = Truncation::build(n, degree)?;
    let amb = &t.amb;
    let space = amb.space();
    let us = u_generators(amb);
    let m = degree / 2;
    let lmon = l_monomials(amb, m);
    let mut report = Report::new(format!("L-polynomials span C/I for n = {n} up to degree {degree}"));

    let bad: Vec<String> = lmon
        .par_iter()
        .filter_map(|(_, p)| {
            us.iter()
                .map(|u| space.commutator(p, u))
                .find(|c| !c.is_zero())
                .map(|c| format!("[{p}, U] = {c}"))
        })
        .collect();
    report.push(
        Check::new(
            "L-monomials commute with sp(2)",
            bad.is_empty(),
            format!("{} monomials, {} failing", lmon.len(), bad.len()),
        )
        .with_counterexample(bad.first().cloned()),
    );

    let vecs: Vec<SparseVec> = lmon.iter().filter_map(|(_, p)| t.vector(p)).collect();
    let mut span = t.ideal.clone();
    for v in &vecs {
        span.insert(v);
    }
    let joint = t.joint_span().rank();
    report.push(Check::new(
        "I + span(L-monomials) = I + C",
        vecs.len() == lmon.len() && span.rank() == joint,
        format!("rank {} vs dim(I + C) {}", span.rank(), joint),
    ));

    let mut lower = t.lower_span();
    let before = lower.rank();
    for ((k, _), v) in lmon.iter().zip(&vecs) {
        if *k == m {
            lower.insert(v);
        }
    }
    let top_classes = lower.rank() - before;
    let expected = o_dim(&YoungDiagram::rectangle(m as usize, 2), n + 2)?;
    report.push(Check::new(
        "top-degree L-classes fill the [k,k] module",
        top_classes as u128 == expected,
        format!("{top_classes} classes, expected {expected}"),
    ));

    let d = amb.dim();
    let mut plucker_bad = None;
    let mut count = 0;
    for a in 0..d {
        for b in a + 1..d {
            for c in b + 1..d {
                for e in c + 1..d {
                    count += 1;
                    let r = &(&(&amb.l(a, b) * &amb.l(c, e)) - &(&amb.l(a, c) * &amb.l(b, e))) + &(&amb.l(a, e) * &amb.l(b, c));
                    if !r.is_zero() && plucker_bad.is_none() {
                        plucker_bad = Some(format!("({a},{b},{c},{e}): {r}"));
                    }
                }
            }
        }
    }
    report.push(
        Check::new("Plücker relations", plucker_bad.is_none(), format!("{count} quadruples"))
            .with_counterexample(plucker_bad),
    );
    let ideal_rank = t.ideal.rank();
    Ok(LSpanSummary {
        n,
        degree,
        l_monomials: lmon.len(),
        centralizer_dim: t.centralizer.len(),
        ideal_rank,
        top_classes,
        report,
    })
}

/// Number of monomials of degree `k` in `v` variables.
pub fn monomial_count(v: usize, k: u32) -> BigInt {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k as usize {
        num *= v + i;
        den *= i + 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_degree_rejected() {
        assert!(centralizer_mod_ideal(3, 3).is_err());
    }

    #[test]
    fn degree_two_is_adjoint() {
        for n in 3..=4 {
            let c = centralizer_mod_ideal(n, 2).unwrap();
            let dim = (n + 2) * (n + 1) / 2;
            assert_eq!(c.graded, vec![1, dim], "n = {n}");
            assert!(c.matches_expected());
        }
    }

    #[test]
    fn truncation_sizes() {
        let t = Truncation::build(3, 2).unwrap();
        assert_eq!(BigInt::from(t.monos.len()), monomial_count(10, 2) + 1);
        // L^{AB} lie in the centralizer, the constraints themselves do not
        let mut c = Echelon::new();
        for v in &t.centralizer {
            c.insert(v);
        }
        assert!(c.contains(&t.vector(&t.amb.l(0, 3)).unwrap()));
        assert!(!c.contains(&t.vector(&t.amb.t(0, 0)).unwrap()));
        assert_eq!(t.centralizer.len(), 11);
    }

    #[test]
    fn l_span_degree_two() {
        let s = l_polynomial_span_check(3, 2).unwrap();
        assert!(s.report.passed(), "{}", s.report.to_text());
        assert_eq!(s.top_classes, 10);
    }

    #[test]
    fn degree_four_n3() {
        let c = centralizer_mod_ideal(3, 4).unwrap();
        assert_eq!(c.graded, vec![1, 10, 35]);
        assert!(c.matches_expected());
    }

    #[test]
    fn l_span_degree_four() {
        let s = l_polynomial_span_check(3, 4).unwrap();
        assert!(s.report.passed(), "{}", s.report.to_text());
        assert_eq!(s.top_classes, 35);
    }

    #[test]
    fn degree_six_n3() {
        let c = centralizer_mod_ideal(3, 6).unwrap();
        assert_eq!(c.graded, vec![1, 10, 35, 84]);
    }
}
