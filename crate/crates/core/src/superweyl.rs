//! Grassmann-extended phase space: the osp(2s|2) constraint superalgebra, its
//! Howe dual o(n,2), and the multiform operator algebras on the boundary.

use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{Check, Report};
use crate::error::{Error, Result};
use crate::exactcore::{ExactMatrix, Monomial, Parity, Ring, VariableTable, GR};
use crate::liealg::{o_n2, osp, sp2, Presentation, SuperIndex};
use crate::weyl::{AmbientSpace, PhaseSpace, PhaseSymbol};

pub type SuperPhaseSymbol = PhaseSymbol;

fn mismatch_check(name: &str, space: &PhaseSpace, alg: &Presentation, images: &[PhaseSymbol]) -> Check {
    let bad = space.realization_mismatches(alg, images);
    Check::new(name, bad.is_empty(), format!("{} of {} brackets mismatch", bad.len(), alg.dim() * (alg.dim() + 1) / 2))
        .with_counterexample(bad.first().map(|(i, j, d)| format!("[{}, {}] off by {d}", alg.label(*i), alg.label(*j))))
}

/// Coordinates of `p` in `basis`, provided each basis element has a monomial
/// that no other basis element contains. `None` when `p` is not in the span.
pub fn span_coordinates(basis: &[PhaseSymbol], p: &PhaseSymbol) -> Option<Vec<GR>> {
    let pivots: Vec<(Monomial, GR)> = basis
        .iter()
        .enumerate()
        .map(|(k, b)| {
            b.terms()
                .iter()
                .find(|(m, _)| basis.iter().enumerate().all(|(j, o)| j == k || o.coeff(m).is_zero()))
                .map(|(m, c)| (m.clone(), c.clone()))
        })
        .collect::<Option<_>>()?;
    let coords: Vec<GR> = pivots
        .iter()
        .map(|(m, c)| &p.coeff(m) * &c.inv().expect("nonzero coefficient"))
        .collect();
    let mut rest = p.clone();
    for (b, c) in basis.iter().zip(&coords) {
        rest = &rest - &b.scale(c);
    }
    rest.is_zero().then_some(coords)
}

/// The closure of `gens` under star commutators inside their span, and the
/// Killing form `tr(ad x ad y)` when it closes.
fn closure_and_killing(space: &PhaseSpace, gens: &[PhaseSymbol]) -> (Option<String>, Option<ExactMatrix<GR>>) {
    let d = gens.len();
    let brackets: Vec<Vec<Option<Vec<GR>>>> = (0..d)
        .into_par_iter()
        .map(|a| (0..d).map(|b| span_coordinates(gens, &space.commutator(&gens[a], &gens[b]))).collect())
        .collect();
    for a in 0..d {
        for b in 0..d {
            if brackets[a][b].is_none() {
                let c = space.commutator(&gens[a], &gens[b]);
                return (Some(format!("[{}, {}] = {c} leaves the span", gens[a], gens[b])), None);
            }
        }
    }
    // ad(a)_{kb} = coefficient of gens[k] in [a, b]
    let ad = |a: usize| ExactMatrix::from_fn(d, d, |k, b| brackets[a][b].as_ref().expect("closed")[k].clone());
    let ads: Vec<ExactMatrix<GR>> = (0..d).map(ad).collect();
    let killing = ExactMatrix::from_fn(d, d, |a, b| {
        let prod = ads[a].try_mul(&ads[b]).expect("square");
        (0..d).fold(GR::zero(), |acc, k| &acc + prod.get(k, k))
    });
    (None, Some(killing))
}

/// Ambient-space operator `op` (momenta standing for derivatives) whose Weyl
/// symbol should be `scale · target`.
struct Identification {
    name: String,
    op: PhaseSymbol,
    target: PhaseSymbol,
    target_name: String,
}

fn identify(space: &PhaseSpace, id: &Identification) -> Check {
    let sym = space.symbol_of_operator(&id.op);
    // find λ with sym = λ·target
    let ratio = id.target.terms().iter().next().map(|(m, c)| &sym.coeff(m) * &c.inv().expect("nonzero"));
    match ratio {
        Some(l) if !l.is_zero() && (&sym - &id.target.scale(&l)).is_zero() => {
            Check::new(&id.name, true, format!("symbol = {l} {}", id.target_name))
        }
        _ => Check::new(&id.name, false, format!("symbol {sym} is not a multiple of {}", id.target_name)),
    }
}

/// The quoted constraint operators and the osp generator each one realizes.
fn constraint_identifications(amb: &AmbientSpace) -> Vec<Identification> {
    let d = amb.dim();
    let idx = SuperIndex { s: amb.s() };
    let sum = |f: &dyn Fn(usize) -> PhaseSymbol| (0..d).fold(amb.space().zero(), |acc, a| &acc + &f(a));
    let eta = |a: usize| GR::from_int(amb.eta(a));
    let tn = |a: usize, b: usize| format!("t({},{})", idx.name(a), idx.name(b));
    let mut out = vec![
        Identification {
            name: "X^2".into(),
            op: sum(&|a| (&amb.x(a) * &amb.x(a)).scale(&eta(a))),
            target: amb.t(0, 0),
            target_name: tn(0, 0),
        },
        Identification {
            name: "X.dX + (n+2)/2".into(),
            op: &sum(&|a| &amb.x(a) * &amb.p(a)) + &amb.space().constant(GR::frac(d as i64, 2)),
            target: amb.t(0, 1),
            target_name: tn(0, 1),
        },
        Identification {
            name: "box".into(),
            op: sum(&|a| (&amb.p(a) * &amb.p(a)).scale(&eta(a))),
            target: amb.t(1, 1),
            target_name: tn(1, 1),
        },
    ];
    for i in 1..=amb.s() {
        let (th, pi) = (2 * i, 2 * i + 1);
        out.push(Identification {
            name: format!("dX.theta{i}"),
            op: sum(&|a| &amb.p(a) * &amb.theta(i, a)),
            target: amb.t(1, th),
            target_name: tn(1, th),
        });
        out.push(Identification {
            name: format!("X.dtheta{i}"),
            op: sum(&|a| &amb.x(a) * &amb.pi(i, a)),
            target: amb.t(0, pi),
            target_name: tn(0, pi),
        });
        out.push(Identification {
            name: format!("dX.dtheta{i}"),
            op: sum(&|a| (&amb.p(a) * &amb.pi(i, a)).scale(&eta(a))),
            target: amb.t(1, pi),
            target_name: tn(1, pi),
        });
        out.push(Identification {
            name: format!("X.theta{i}"),
            op: sum(&|a| (&amb.x(a) * &amb.theta(i, a)).scale(&eta(a))),
            target: amb.t(0, th),
            target_name: tn(0, th),
        });
        for j in 1..=amb.s() {
            let (thj, pij) = (2 * j, 2 * j + 1);
            let shift = if i == j { GR::frac(-(d as i64), 2) } else { GR::zero() };
            out.push(Identification {
                name: format!("theta{i}.dtheta{j} - delta (n+2)/2"),
                op: &sum(&|a| &amb.theta(i, a) * &amb.pi(j, a)) + &amb.space().constant(shift),
                target: amb.t(th, pij),
                target_name: tn(th, pij),
            });
            if i < j {
                out.push(Identification {
                    name: format!("theta{i}.theta{j}"),
                    op: sum(&|a| (&amb.theta(i, a) * &amb.theta(j, a)).scale(&eta(a))),
                    target: amb.t(th, thj),
                    target_name: tn(th, thj),
                });
                out.push(Identification {
                    name: format!("dtheta{i}.dtheta{j}"),
                    op: sum(&|a| (&amb.pi(i, a) * &amb.pi(j, a)).scale(&eta(a))),
                    target: amb.t(pi, pij),
                    target_name: tn(pi, pij),
                });
            }
        }
    }
    out
}

/// The bilinears `T_{αβ}` realize osp(2s|2), and the quoted constraint
/// operators are (multiples of) them.
pub fn osp_check(n: usize, s: usize) -> Result<Report> {
    if s == 0 {
        return Err(Error::InvalidArgument("osp check needs s >= 1".into()));
    }
    let amb = AmbientSpace::new(n, s)?;
    let space = amb.space();
    let mut report = Report::new(format!("osp({}|2) constraints on R^({n},2) + Pi(R^({n},2) x R^{s})", 2 * s));
    let alg = osp(s)?;
    let ts = amb.osp_generators();
    report.push(mismatch_check("T close on osp(2s|2)", space, &alg, &ts));
    report.push(mismatch_check(
        "even block X^2, X.P, P^2 is sp(2)",
        space,
        &sp2()?,
        &[amb.t(0, 0), amb.t(0, 1), amb.t(1, 1)],
    ));
    let zero = ts.iter().position(|t| t.is_zero());
    report.push(
        Check::new("T nonzero", zero.is_none(), format!("{} generators", ts.len()))
            .with_counterexample(zero.map(|k| alg.label(k).to_string())),
    );
    for id in constraint_identifications(&amb) {
        report.push(identify(space, &id));
    }
    Ok(report)
}

/// `J^{AB}` close on o(n,2), graded-commute with every `T_{αβ}`, and their
/// fermionic part is the symbol of `-iθ^A·∂/∂θ_B + iθ^B·∂/∂θ_A`.
pub fn super_howe_check(n: usize, s: usize) -> Result<Report> {
    let amb = AmbientSpace::new(n, s)?;
    let space = amb.space();
    let o = o_n2(n)?;
    let js = amb.o_generators();
    let ts = amb.osp_generators();
    let mut report = Report::new(format!("Howe pair osp({}|2) x o({n},2)", 2 * s));
    report.push(mismatch_check("J close on o(n,2)", space, &o, &js));

    let labels: Vec<String> = (0..o.dim()).map(|k| o.label(k).to_string()).collect();
    let tnames: Vec<String> = SuperIndex { s }
        .pairs()
        .iter()
        .map(|&(a, b)| format!("t({},{})", SuperIndex { s }.name(a), SuperIndex { s }.name(b)))
        .collect();
    let bad: Vec<String> = (0..js.len())
        .into_par_iter()
        .flat_map_iter(|k| {
            let (js, ts, labels, tnames) = (&js, &ts, &labels, &tnames);
            (0..ts.len()).filter_map(move |m| {
                let c = space.commutator(&js[k], &ts[m]);
                (!c.is_zero()).then(|| format!("[{}, {}] = {c}", labels[k], tnames[m]))
            })
        })
        .collect();
    report.push(
        Check::new(
            "J graded-commute with T",
            bad.is_empty(),
            format!("{} of {} commutators nonzero", bad.len(), js.len() * ts.len()),
        )
        .with_counterexample(bad.first().cloned()),
    );

    let d = amb.dim();
    let mut op_bad = None;
    for a in 0..d {
        for b in a + 1..d {
            let mut op = space.zero();
            for i in 1..=s {
                // θ^A ∂/∂θ_B with ∂/∂θ_B = η^{BB} ∂/∂θ^B
                let ab = (&amb.theta(i, a) * &amb.pi(i, b)).scale(&GR::from_int(amb.eta(b)));
                let ba = (&amb.theta(i, b) * &amb.pi(i, a)).scale(&GR::from_int(amb.eta(a)));
                op = &op + &(&ba - &ab).scale(&GR::i());
            }
            let fermionic = &amb.j(a, b) - &amb.l(a, b);
            let diff = &space.symbol_of_operator(&op) - &fermionic;
            if !diff.is_zero() && op_bad.is_none() {
                op_bad = Some(format!("J^({},{}) off by {diff}", amb.index_names()[a], amb.index_names()[b]));
            }
        }
    }
    report.push(
        Check::new("fermionic part of J matches -i theta^A d/dtheta_B + (A<->B)", op_bad.is_none(), format!("{} pairs", d * (d - 1) / 2))
            .with_counterexample(op_bad),
    );
    Ok(report)
}

/// Boundary phase superspace `x^μ, p_μ | θ^μ_i, π^i_μ`, `μ = 0..n-1`, with
/// metric `diag(-1, 1, .., 1)`.
pub struct BoundarySpace {
    n: usize,
    s: usize,
    space: PhaseSpace,
}

impl BoundarySpace {
    pub fn new(n: usize, s: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let mut vars: Vec<(String, Parity)> = Vec::new();
        vars.extend((0..n).map(|m| (format!("x{m}"), Parity::Even)));
        vars.extend((0..n).map(|m| (format!("p{m}"), Parity::Even)));
        for i in 1..=s {
            vars.extend((0..n).map(|m| (format!("th{i}_{m}"), Parity::Odd)));
            vars.extend((0..n).map(|m| (format!("pi{i}_{m}"), Parity::Odd)));
        }
        let mut pairs: Vec<(usize, usize)> = (0..n).map(|m| (m, n + m)).collect();
        for i in 0..s {
            let base = 2 * n + 2 * n * i;
            pairs.extend((0..n).map(|m| (base + m, base + n + m)));
        }
        Ok(BoundarySpace {
            n,
            s,
            space: PhaseSpace::new(VariableTable::new(vars)?, &pairs)?,
        })
    }

    pub fn space(&self) -> &PhaseSpace {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn eta(&self, m: usize) -> GR {
        GR::from_int(if m == 0 { -1 } else { 1 })
    }

    pub fn p(&self, m: usize) -> PhaseSymbol {
        self.space.var(self.n + m)
    }

    pub fn theta(&self, i: usize, m: usize) -> PhaseSymbol {
        self.space.var(2 * self.n * i + m)
    }

    pub fn pi(&self, i: usize, m: usize) -> PhaseSymbol {
        self.space.var(2 * self.n * i + self.n + m)
    }

    fn sum(&self, f: impl Fn(usize) -> PhaseSymbol) -> PhaseSymbol {
        (0..self.n).fold(self.space.zero(), |acc, m| &acc + &f(m))
    }

    /// `θ^μ_i ∂/∂θ^μ_j - δ_i^j n/2`.
    pub fn gl_operator(&self, i: usize, j: usize) -> PhaseSymbol {
        let shift = if i == j { GR::frac(-(self.n as i64), 2) } else { GR::zero() };
        &self.sum(|m| &self.theta(i, m) * &self.pi(j, m)) + &self.space.constant(shift)
    }

    /// `θ^μ_i θ_{jμ}`.
    pub fn theta_theta(&self, i: usize, j: usize) -> PhaseSymbol {
        self.sum(|m| (&self.theta(i, m) * &self.theta(j, m)).scale(&self.eta(m)))
    }

    /// `∂/∂θ^μ_i ∂/∂θ_μ^j`.
    pub fn dtheta_dtheta(&self, i: usize, j: usize) -> PhaseSymbol {
        self.sum(|m| (&self.pi(i, m) * &self.pi(j, m)).scale(&self.eta(m)))
    }

    /// `d_i = θ^μ_i ∂/∂x^μ`.
    pub fn d(&self, i: usize) -> PhaseSymbol {
        self.sum(|m| &self.theta(i, m) * &self.p(m))
    }

    /// `d†_i = ∂/∂θ_μ^i ∂/∂x^μ`.
    pub fn d_dagger(&self, i: usize) -> PhaseSymbol {
        self.sum(|m| (&self.pi(i, m) * &self.p(m)).scale(&self.eta(m)))
    }

    /// `□ = η^{μν} ∂_μ ∂_ν`.
    pub fn box_operator(&self) -> PhaseSymbol {
        self.sum(|m| (&self.p(m) * &self.p(m)).scale(&self.eta(m)))
    }
}

/// The gl(s) and o(2s) operator algebras on boundary multiforms, and the
/// (co)differentials `d_i`, `d†_i`.
pub fn multiform_ops_check(n: usize, s: usize) -> Result<Report> {
    if s == 0 {
        return Err(Error::InvalidArgument("multiform check needs s >= 1".into()));
    }
    let b = BoundarySpace::new(n, s)?;
    let space = b.space();
    let sym = |op: &PhaseSymbol| space.symbol_of_operator(op);
    let mut report = Report::new(format!("multiform operators for n = {n}, s = {s}"));

    let mut gl = Vec::new();
    let mut shift_ok = true;
    for i in 1..=s {
        for j in 1..=s {
            let g = sym(&b.gl_operator(i, j));
            let bare = b.sum(|m| &b.theta(i, m) * &b.pi(j, m)).scale(&-GR::i());
            shift_ok &= g == bare;
            gl.push(g);
        }
    }
    report.push(Check::new(
        "shift n/2 cancels in the gl(s) symbols",
        shift_ok,
        "symbol of theta_i.dtheta_j - delta n/2 is -i theta_i.pi^j",
    ));
    let (err, _) = closure_and_killing(space, &gl);
    report.push(
        Check::new("gl(s) closure", err.is_none(), format!("{} generators", gl.len())).with_counterexample(err),
    );

    let mut o2s = gl.clone();
    for i in 1..=s {
        for j in i + 1..=s {
            o2s.push(sym(&b.theta_theta(i, j)));
            o2s.push(sym(&b.dtheta_dtheta(i, j)));
        }
    }
    let (err, killing) = closure_and_killing(space, &o2s);
    let expected = s * (2 * s - 1);
    let det = killing.as_ref().map(|k| k.det().expect("square"));
    let nondeg = det.as_ref().is_some_and(|d| !d.is_zero());
    report.push(
        Check::new(
            "o(2s) closure",
            err.is_none() && o2s.len() == expected && (s == 1 || nondeg),
            format!(
                "{} generators (dim o(2s) = {expected}), Killing determinant {}",
                o2s.len(),
                det.map(|d| d.to_string()).unwrap_or_else(|| "n/a".into())
            ),
        )
        .with_counterexample(err),
    );

    let ds: Vec<PhaseSymbol> = (1..=s).map(|i| sym(&b.d(i))).collect();
    let dds: Vec<PhaseSymbol> = (1..=s).map(|i| sym(&b.d_dagger(i))).collect();
    let lap = sym(&b.box_operator());
    let mut bad = None;
    for i in 0..s {
        for j in 0..s {
            let cases = [
                ("{d_i, d_j}", space.commutator(&ds[i], &ds[j]), space.zero()),
                ("{d†_i, d†_j}", space.commutator(&dds[i], &dds[j]), space.zero()),
                ("{d_i, d†_j}", space.commutator(&ds[i], &dds[j]), if i == j { lap.clone() } else { space.zero() }),
            ];
            for (name, got, want) in cases {
                if got != want && bad.is_none() {
                    bad = Some(format!("{name} for i={}, j={}: {got}", i + 1, j + 1));
                }
            }
        }
    }
    report.push(
        Check::new("d, d† anticommutators", bad.is_none(), format!("{{d_i, d†_j}} = delta_ij box, symbol {lap}"))
            .with_counterexample(bad),
    );
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum SuperCheck {
    Osp,
    Howe,
    Multiform,
}

pub fn run_check(which: SuperCheck, n: usize, s: usize) -> Result<Report> {
    match which {
        SuperCheck::Osp => osp_check(n, s),
        SuperCheck::Howe => super_howe_check(n, s),
        SuperCheck::Multiform => multiform_ops_check(n, s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_pairs() {
        let amb = AmbientSpace::new(3, 1).unwrap();
        let sp = amb.space();
        let c = sp.commutator(&amb.x(0), &amb.p(0));
        assert_eq!(c, sp.constant(GR::i()));
        let c = sp.commutator(&amb.theta(1, 2), &amb.pi(1, 2));
        assert_eq!(c, sp.constant(GR::i()));
        assert!(sp.commutator(&amb.theta(1, 2), &amb.pi(1, 3)).is_zero());
        assert!(sp.star(&amb.theta(1, 0), &amb.theta(1, 0)).is_zero());
    }

    #[test]
    fn osp_s1_n4() {
        let r = osp_check(4, 1).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn osp_s2_n3() {
        let r = osp_check(3, 2).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn super_howe_s1_n4() {
        let r = super_howe_check(4, 1).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn super_howe_s0_matches_weyl() {
        let r = super_howe_check(3, 0).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let h = crate::weyl::howe_check(3).unwrap();
        let pick = |r: &Report, name: &str| r.checks.iter().find(|c| c.name == name).cloned().unwrap();
        assert_eq!(pick(&r, "J close on o(n,2)").passed, pick(&h.report, "o(n,2) closure").passed);
        // for s = 0 the osp generators are the sp(2) ones
        let amb = AmbientSpace::new(3, 0).unwrap();
        assert_eq!(amb.osp_generators(), crate::weyl::u_generators(&amb));
    }

    #[test]
    fn multiform_s2() {
        let r = multiform_ops_check(4, 2).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn multiform_s1() {
        let r = multiform_ops_check(4, 1).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn wrong_sign_j_breaks_howe() {
        // flipping the fermionic part of J breaks commutation with the odd T's
        let amb = AmbientSpace::new(3, 1).unwrap();
        let sp = amb.space();
        let bad = &(&amb.l(0, 2) + &amb.l(0, 2)) - &amb.j(0, 2);
        let t = amb.t(0, 2);
        assert!(!sp.commutator(&bad, &t).is_zero());
        assert!(sp.commutator(&amb.j(0, 2), &t).is_zero());
    }

    #[test]
    fn span_coordinates_rejects_outside() {
        let amb = AmbientSpace::new(3, 0).unwrap();
        let basis = vec![amb.t(0, 0), amb.t(1, 1)];
        assert!(span_coordinates(&basis, &amb.t(0, 1)).is_none());
        let c = span_coordinates(&basis, &(&amb.t(0, 0) - &amb.t(1, 1).scale(&GR::from_int(3)))).unwrap();
        assert_eq!(c, vec![GR::one(), GR::from_int(-3)]);
    }
}
