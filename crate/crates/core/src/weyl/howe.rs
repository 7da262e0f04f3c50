//! The Howe dual pair sp(2) ↔ o(n,2) in the Weyl algebra `A_{n+2}`.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::phase::{AmbientSpace, PhaseSpace, PhaseSymbol};
use crate::checks::{Check, Report};
use crate::error::Result;
use crate::exactcore::sparse::kernel;
use crate::exactcore::{Echelon, Monomial, Ring, SparseVec, GR};
use crate::liealg::{o_n2, sp2};

/// All monomials of total degree two.
pub fn quadratic_monomials(space: &PhaseSpace) -> Vec<PhaseSymbol> {
    let nv = space.vars().len();
    let mut out = Vec::new();
    for a in 0..nv {
        for b in a..nv {
            let m = &space.var(a) * &space.var(b);
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    out
}

/// Coordinates of symbols in a shared monomial basis, assigned on first sight.
#[derive(Default)]
pub(crate) struct MonomialIndex {
    index: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub(crate) fn vector(&mut self, p: &PhaseSymbol) -> SparseVec {
        let mut v = SparseVec::new();
        for (m, c) in p.terms() {
            let next = self.index.len();
            let k = *self.index.entry(m.clone()).or_insert(next);
            v.insert(k, c.clone());
        }
        v
    }
}

/// Kernel of `f ↦ ([f, g_1]★, .., [f, g_r]★)` on the span of `candidates`,
/// as coefficient vectors over `candidates`.
pub fn commutant(space: &PhaseSpace, candidates: &[PhaseSymbol], against: &[PhaseSymbol]) -> Vec<SparseVec> {
    let comms: Vec<Vec<PhaseSymbol>> = candidates
        .par_iter()
        .map(|f| against.iter().map(|g| space.commutator(f, g)).collect())
        .collect();
    let mut idx = MonomialIndex::default();
    let images: Vec<SparseVec> = comms
        .iter()
        .map(|row| {
            // interleave the r commutators into one vector
            let mut v = SparseVec::new();
            for (j, p) in row.iter().enumerate() {
                for (k, c) in idx.vector(p) {
                    v.insert(k * against.len() + j, c);
                }
            }
            v
        })
        .collect();
    kernel(&images)
}

/// Rank of a family of symbols.
pub fn rank(symbols: &[PhaseSymbol]) -> usize {
    let mut idx = MonomialIndex::default();
    let mut ech = Echelon::new();
    for s in symbols {
        ech.insert(&idx.vector(s));
    }
    ech.rank()
}

fn combo_symbol(candidates: &[PhaseSymbol], v: &SparseVec, space: &PhaseSpace) -> PhaseSymbol {
    let mut out = space.zero();
    for (&k, c) in v {
        out = &out + &candidates[k].scale(c);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct HoweSummary {
    pub n: usize,
    pub dim_o: usize,
    pub commutant_of_sp2: usize,
    pub commutant_of_o: usize,
    pub report: Report,
}

/// The constraint generators `U_{XX}, U_{XP}, U_{PP}` in the order of the
/// sp(2) presentation.
pub fn u_generators(amb: &AmbientSpace) -> Vec<PhaseSymbol> {
    vec![amb.t(0, 0), amb.t(0, 1), amb.t(1, 1)]
}

pub fn howe_check(n: usize) -> Result<HoweSummary> {
    let amb = AmbientSpace::new(n, 0)?;
    let space = amb.space();
    let o = o_n2(n)?;
    let sp = sp2()?;
    let ls = amb.o_generators();
    let us = u_generators(&amb);
    let mut report = Report::new(format!("Howe pair sp(2) x o({n},2)"));

    let o_ref = &o;
    let nonzero: Vec<String> = ls
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, l)| {
            us.iter().enumerate().filter_map(move |(k, u)| {
                let c = space.commutator(l, u);
                (!c.is_zero()).then(|| format!("[{}, U{}] = {c}", o_ref.label(i), k))
            })
        })
        .collect();
    report.push(
        Check::new(
            "L-U commutators vanish",
            nonzero.is_empty(),
            format!("{} of {} commutators nonzero", nonzero.len(), ls.len() * us.len()),
        )
        .with_counterexample(nonzero.first().cloned()),
    );

    let bad = space.realization_mismatches(&o, &ls);
    report.push(
        Check::new("o(n,2) closure", bad.is_empty(), format!("{} mismatching brackets", bad.len()))
            .with_counterexample(bad.first().map(|(i, j, d)| format!("[{}, {}]: {d}", o.label(*i), o.label(*j)))),
    );
    let bad = space.realization_mismatches(&sp, &us);
    report.push(
        Check::new("sp(2) closure", bad.is_empty(), format!("{} mismatching brackets", bad.len()))
            .with_counterexample(bad.first().map(|(i, j, d)| format!("[{}, {}]: {d}", sp.label(*i), sp.label(*j)))),
    );

    let quads = quadratic_monomials(space);
    let k_u = commutant(space, &quads, &us);
    let k_u_syms: Vec<PhaseSymbol> = k_u.iter().map(|v| combo_symbol(&quads, v, space)).collect();
    let rank_l = rank(&ls);
    let joint = rank(&[k_u_syms.clone(), ls.clone()].concat());
    report.push(Check::new(
        "commutant of sp(2) in quadratics is span L",
        k_u.len() == o.dim() && rank_l == o.dim() && joint == o.dim(),
        format!("dimension {} (dim o = {}), over {} quadratic monomials", k_u.len(), o.dim(), quads.len()),
    ));
    let k_l = commutant(space, &quads, &ls);
    let k_l_syms: Vec<PhaseSymbol> = k_l.iter().map(|v| combo_symbol(&quads, v, space)).collect();
    let joint = rank(&[k_l_syms, us.clone()].concat());
    report.push(Check::new(
        "commutant of o(n,2) in quadratics is span U",
        k_l.len() == 3 && joint == 3,
        format!("dimension {}", k_l.len()),
    ));
    Ok(HoweSummary {
        n,
        dim_o: o.dim(),
        commutant_of_sp2: k_u.len(),
        commutant_of_o: k_l.len(),
        report,
    })
}

/// The constraints `X²`, `X·∂ + (n+2)/2`, `□` as Weyl symbols and their sp(2)
/// algebra.
pub fn constraint_algebra_check(n: usize) -> Result<Report> {
    let amb = AmbientSpace::new(n, 0)?;
    let space = amb.space();
    let sp = sp2()?;
    let us = u_generators(&amb);
    let mut report = Report::new(format!("sp(2) constraint algebra on R^({n},2)"));

    let bad = space.realization_mismatches(&sp, &us);
    report.push(
        Check::new("U close on sp(2)", bad.is_empty(), format!("{} mismatching brackets", bad.len()))
            .with_counterexample(bad.first().map(|(i, j, d)| format!("[{}, {}]: {d}", sp.label(*i), sp.label(*j)))),
    );

    // differential operators with P_A standing for d/dX^A
    let d = amb.dim();
    let mut x2 = space.zero();
    let mut euler = space.constant(GR::frac(d as i64, 2));
    let mut box_op = space.zero();
    for a in 0..d {
        let eta = GR::from_int(amb.eta(a));
        x2 = &x2 + &(&amb.x(a) * &amb.x(a)).scale(&eta);
        euler = &euler + &(&amb.x(a) * &amb.p(a));
        box_op = &box_op + &(&amb.p(a) * &amb.p(a)).scale(&eta);
    }
    let pairs = [
        ("X^2 = U_XX", space.symbol_of_operator(&x2), us[0].clone()),
        ("X.d + (n+2)/2 = i U_XP", space.symbol_of_operator(&euler), us[1].scale(&GR::i())),
        ("box = -U_PP", space.symbol_of_operator(&box_op), -&us[2]),
    ];
    for (name, got, want) in pairs {
        let diff = &got - &want;
        report.push(
            Check::new(name, diff.is_zero(), format!("symbol {got}"))
                .with_counterexample((!diff.is_zero()).then(|| diff.to_string())),
        );
    }

    let c = space.commutator(&us[0], &us[2]);
    let want = us[1].scale(&GR::from_int(4)).scale(&GR::i());
    report.push(Check::new("[X^2, P^2] = 4i X.P", c == want, format!("[U_XX, U_PP] = {c}")));

    // {f, X.P} = (#X - #P) f on monomials of degree <= 3 in X0, X1, P0, P1
    let vars = [0, 2, d, d + 2];
    let mut euler_ok = true;
    let mut counter = None;
    for e in 0..4u32.pow(vars.len() as u32) {
        let exps: Vec<u32> = (0..vars.len()).map(|k| (e / 4u32.pow(k as u32)) % 4).collect();
        if exps.iter().sum::<u32>() > 3 {
            continue;
        }
        let mut f = space.constant(GR::one());
        for (k, &x) in exps.iter().enumerate() {
            for _ in 0..x {
                f = &f * &space.var(vars[k]);
            }
        }
        let weight = exps[0] as i64 + exps[1] as i64 - exps[2] as i64 - exps[3] as i64;
        let got = space.poisson(&f, &us[1]);
        if got != f.scale(&GR::from_int(weight)) {
            euler_ok = false;
            counter.get_or_insert_with(|| format!("{{{f}, X.P}} = {got}"));
        }
    }
    report.push(
        Check::new("{f, X.P} = (#X - #P) f", euler_ok, "monomials of degree <= 3").with_counterexample(counter),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn howe_small() {
        let h = howe_check(3).unwrap();
        assert!(h.report.passed(), "{}", h.report.to_text());
        assert_eq!((h.commutant_of_sp2, h.commutant_of_o), (10, 3));
    }

    #[test]
    fn calibration_sign() {
        // the bilinear X^A P^B - X^B P^A realizes the bracket with the
        // opposite sign, so the generators carry an overall minus
        let amb = AmbientSpace::new(3, 0).unwrap();
        let o = o_n2(3).unwrap();
        let plus: Vec<PhaseSymbol> = amb.o_generators().iter().map(|g| -g).collect();
        assert!(!amb.space().realization_mismatches(&o, &plus).is_empty());
        assert!(amb.space().realization_mismatches(&o, &amb.o_generators()).is_empty());
    }

    #[test]
    fn constraints() {
        let r = constraint_algebra_check(4).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn commutant_detects_extra_generator() {
        // U_XP alone has a larger commutant than all of sp(2)
        let amb = AmbientSpace::new(3, 0).unwrap();
        let quads = quadratic_monomials(amb.space());
        let k = commutant(amb.space(), &quads, &[amb.t(0, 1)]);
        assert!(k.len() > 10);
    }
}
