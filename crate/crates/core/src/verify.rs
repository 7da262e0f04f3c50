//! End-to-end acceptance suite shared by `hsalg verify-all` and the
//! `acceptance` test target.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checks::Check;
use crate::conformal::{
    act, inversion, random_lorentz, random_point, random_rational, special_conformal, translation,
    BoundaryPoint, ConformalMap,
};
use crate::error::Result;
use crate::exactcore::{rational_roots, rat, Ring, GR};
use crate::liealg::{
    compact_basis, conformal_basis, contract_inonu_wigner, o_n2, osp, poincare, sp2, Combo, CompactIndex,
    Presentation,
};
use crate::superweyl::{multiform_ops_check, osp_check, super_howe_check};
use crate::verma::module::binomial;
use crate::verma::{branching_check, gram_matrix, gram_matrix_at, majorana_spectrum, null_vectors, SingletonQuotient};
use crate::weyl::{centralizer_mod_ideal, howe_check, l_polynomial_span_check, AmbientSpace};
use crate::youngdim::{hs_adjoint_diagrams, o_dim, YoungDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// n ≤ 4, level ≤ 3, degree ≤ 2.
    Quick,
    Full,
}

impl Profile {
    fn n_max(self, full: usize) -> usize {
        match self {
            Profile::Quick => full.min(4),
            Profile::Full => full,
        }
    }

    fn level_max(self, full: usize) -> usize {
        match self {
            Profile::Quick => full.min(3),
            Profile::Full => full,
        }
    }

    fn degree_max(self, full: u32) -> u32 {
        match self {
            Profile::Quick => full.min(2),
            Profile::Full => full,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub check: Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

pub const CRITERIA: usize = 13;

/// Runs criterion `id` (1-based). Errors inside a criterion are reported as a
/// failing check.
pub fn run_criterion(id: usize, profile: Profile, seed: u64) -> CriterionResult {
    let start = Instant::now();
    let res = match id {
        1 => jacobi_suite(profile),
        2 => compact_fidelity(profile),
        3 => unitarity_threshold(profile, seed),
        4 => scalar_branching(profile),
        5 => truncated_representation(profile),
        6 => howe_pair(profile),
        7 => higher_spin_dims(profile),
        8 => super_howe(profile),
        9 => multiform_algebras(),
        10 => conformal_dictionary(seed),
        11 => contraction(profile),
        12 => majorana(profile),
        13 => hs_table(profile),
        _ => Ok(Check::new(format!("criterion {id}"), false, "no such criterion")),
    };
    let elapsed = start.elapsed();
    let mut check = res.unwrap_or_else(|e| Check::new(format!("criterion {id}"), false, format!("error: {e}")));
    if let Some(limit) = time_limit(id) {
        if elapsed > limit {
            check.passed = false;
            check.detail = format!("{}; took {:.1}s, limit {}s", check.detail, elapsed.as_secs_f64(), limit.as_secs());
        }
    }
    CriterionResult {
        id,
        check,
        seconds: Some(elapsed.as_secs_f64()),
    }
}

fn time_limit(id: usize) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(30)),
        7 => Some(Duration::from_secs(600)),
        _ => None,
    }
}

pub fn run_all(profile: Profile, seed: u64) -> Vec<CriterionResult> {
    (1..=CRITERIA).map(|id| run_criterion(id, profile, seed)).collect()
}

fn jacobi_count(p: &Presentation, failures: &mut Vec<String>) -> usize {
    let v = p.check_jacobi();
    if let Some(first) = v.first() {
        let (a, b, c) = first.triple;
        failures.push(format!("{}: ({}, {}, {})", p.name(), p.label(a), p.label(b), p.label(c)));
    }
    v.len()
}

fn jacobi_suite(profile: Profile) -> Result<Check> {
    let mut failures = Vec::new();
    let mut total = 0;
    let mut names = 0;
    for n in 3..=profile.n_max(8) {
        total += jacobi_count(&o_n2(n)?, &mut failures);
        names += 1;
    }
    for n in 3..=profile.n_max(6) {
        total += jacobi_count(&compact_basis(n)?.presentation, &mut failures);
        total += jacobi_count(&conformal_basis(n)?.basis.presentation, &mut failures);
        total += jacobi_count(&poincare(n)?, &mut failures);
        names += 3;
    }
    for p in [sp2()?, osp(1)?, osp(2)?] {
        total += jacobi_count(&p, &mut failures);
        names += 1;
    }
    Ok(Check::new("Jacobi suite", total == 0, format!("{names} presentations, {total} violations"))
        .with_counterexample(failures.into_iter().next()))
}

fn compact_fidelity(profile: Profile) -> Result<Check> {
    let mut bad = None;
    let mut relations = 0;
    for n in 3..=profile.n_max(6) {
        let c = compact_basis(n)?;
        let p = &c.presentation;
        let ix = CompactIndex { n };
        let mut expect = |x: usize, y: usize, want: Combo<GR>| {
            relations += 1;
            if p.basis_bracket(x, y) != &want && bad.is_none() {
                bad = Some(format!(
                    "n={n}: [{}, {}] = {}",
                    p.label(x),
                    p.label(y),
                    p.combo_to_string(p.basis_bracket(x, y))
                ));
            }
        };
        for i in 1..=n {
            expect(ix.e(), ix.plus(i), Combo::from([(ix.plus(i), GR::one())]));
            expect(ix.e(), ix.minus(i), Combo::from([(ix.minus(i), -GR::one())]));
            for j in 1..=n {
                expect(ix.plus(i), ix.plus(j), Combo::new());
                expect(ix.minus(i), ix.minus(j), Combo::new());
                // 2(i J_ij + δ_ij E)
                let mut want = Combo::new();
                if i == j {
                    want.insert(ix.e(), GR::from_int(2));
                } else {
                    let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
                    want.insert(ix.rot(a, b), &GR::i() * &GR::from_int(2 * s));
                }
                expect(ix.minus(i), ix.plus(j), want);
            }
        }
        if !c.change.check_transport(&c.ambient, p).is_empty() && bad.is_none() {
            bad = Some(format!("n={n}: basis change does not transport the ambient bracket"));
        }
    }
    Ok(Check::new("compact-basis fidelity", bad.is_none(), format!("{relations} relations checked"))
        .with_counterexample(bad))
}

fn random_e0_above(rng: &mut ChaCha8Rng, n: usize) -> BigRational {
    let num = rng.gen_range(1..=40);
    let den = rng.gen_range(1..=7);
    rat(n as i64 - 2, 2) + rat(num, den)
}

fn unitarity_threshold(profile: Profile, seed: u64) -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    let mut samples = 0;
    let lmax = profile.level_max(4);
    for n in 3..=profile.n_max(8) {
        let threshold = rat(n as i64 - 2, 2);
        let det = gram_matrix(n, 2)?.det()?;
        let roots = rational_roots(&det)?;
        if !roots.contains(&threshold) {
            bad.get_or_insert(format!("n={n}: roots {roots:?} miss the threshold"));
        }
        let ker = null_vectors(n, 2, &threshold)?;
        let trace_like = ker.len() == 1 && {
            let v = &ker[0];
            let c = v.get(&vec![1u8, 1]).cloned().unwrap_or_default();
            !c.is_zero() && v.len() == n && (1..=n as u8).all(|i| v.get(&vec![i, i]) == Some(&c))
        };
        if !trace_like {
            bad.get_or_insert(format!("n={n}: level-2 kernel is not the trace vector ({} vectors)", ker.len()));
        }
        for _ in 0..5 {
            let e0 = random_e0_above(&mut rng, n);
            for level in 0..=lmax {
                samples += 1;
                if !gram_matrix_at(n, level, &e0)?.is_positive_definite()? {
                    bad.get_or_insert(format!("n={n}, E0={e0}, level {level}: not positive"));
                }
            }
        }
    }
    Ok(Check::new(
        "unitarity threshold",
        bad.is_none(),
        format!("threshold n/2-1 and trace null vector; {samples} positive Gram blocks up to level {lmax}"),
    )
    .with_counterexample(bad))
}

/// Harmonic polynomials of degree t in n variables.
fn harmonic_dim(n: usize, t: usize) -> u128 {
    let all = binomial((t + n - 1) as i64, (n - 1) as i64);
    if t < 2 {
        all
    } else {
        all - binomial((t + n - 3) as i64, (n - 1) as i64)
    }
}

fn scalar_branching(profile: Profile) -> Result<Check> {
    let tmax = profile.level_max(6);
    let mut bad = None;
    let mut rows = 0;
    for n in 3..=profile.n_max(8) {
        for r in branching_check(n, tmax)? {
            rows += 1;
            if !r.ok() || r.dim as u128 != harmonic_dim(n, r.level) {
                bad.get_or_insert(format!(
                    "n={n}, t={}: dim {} o_dim {} harmonic {} energy {}",
                    r.level,
                    r.dim,
                    r.o_dim,
                    harmonic_dim(n, r.level),
                    r.energy
                ));
            }
        }
    }
    Ok(Check::new("scalar branching", bad.is_none(), format!("{rows} levels, t <= {tmax}")).with_counterexample(bad))
}

fn truncated_representation(profile: Profile) -> Result<Check> {
    let lmax = profile.level_max(4);
    let mut bad = None;
    let mut casimirs = Vec::new();
    for n in 3..=4 {
        let q = SingletonQuotient::new(n, lmax)?;
        let alg = q.algebra().clone();
        for x in 0..alg.dim() {
            for y in x + 1..alg.dim() {
                let lhs = q.basis_operator(x).commutator(q.basis_operator(y))?;
                let rhs = q.represent(alg.basis_bracket(x, y));
                if !lhs.eq_interior(&rhs)? {
                    bad.get_or_insert(format!("n={n}: [{}, {}]", alg.label(x), alg.label(y)));
                }
            }
        }
        let mut values = Vec::new();
        for l in [lmax - 1, lmax] {
            let c = SingletonQuotient::new(n, l)?.casimir()?;
            let mut v: Option<GR> = None;
            for t in 0..=c.trusted.max(0) as usize {
                match (c.scalar_on_level(t)?, &v) {
                    (Some(s), None) => v = Some(s),
                    (Some(s), Some(v0)) if &s == v0 => {}
                    _ => {
                        bad.get_or_insert(format!("n={n}, Lmax={l}: Casimir not scalar on level {t}"));
                    }
                }
            }
            values.push(v);
        }
        if values[0].is_none() || values[0] != values[1] {
            bad.get_or_insert(format!("n={n}: Casimir differs between truncations: {values:?}"));
        }
        casimirs.push(format!("n={n}: C2 = {}", values[1].clone().unwrap_or_default()));
    }
    Ok(Check::new(
        "truncated representation",
        bad.is_none(),
        format!("Lmax = {lmax}; {}", casimirs.join(", ")),
    )
    .with_counterexample(bad))
}

fn howe_pair(profile: Profile) -> Result<Check> {
    let mut bad = None;
    let mut dims = Vec::new();
    for n in 3..=profile.n_max(6) {
        let h = howe_check(n)?;
        dims.push(format!("n={n}: {}/{}", h.commutant_of_sp2, h.commutant_of_o));
        if !h.report.passed() || h.commutant_of_sp2 != h.dim_o || h.commutant_of_o != 3 {
            bad.get_or_insert(h.report.to_text());
        }
    }
    Ok(Check::new("Howe pair", bad.is_none(), format!("commutants {}", dims.join(", "))).with_counterexample(bad))
}

fn higher_spin_dims(profile: Profile) -> Result<Check> {
    let deg = profile.degree_max(4);
    let mut bad = None;
    let c = centralizer_mod_ideal(3, deg)?;
    let want: Vec<usize> = [1, 10, 35][..=deg as usize / 2].to_vec();
    if c.graded != want || !c.matches_expected() {
        bad.get_or_insert(format!("n=3 graded {:?}, expected {want:?}", c.graded));
    }
    let mut detail = vec![format!("n=3: {:?}", c.graded)];
    for n in 4..=profile.n_max(6) {
        let c = centralizer_mod_ideal(n, 2)?;
        detail.push(format!("n={n}: {:?}", c.graded));
        if c.graded.get(1) != Some(&((n + 2) * (n + 1) / 2)) || !c.matches_expected() {
            bad.get_or_insert(format!("n={n}: graded {:?}", c.graded));
        }
    }
    let l = l_polynomial_span_check(3, deg)?;
    if !l.report.passed() {
        bad.get_or_insert(l.report.to_text());
    }
    Ok(Check::new(
        "higher-spin algebra dimensions",
        bad.is_none(),
        format!("{}; L-polynomials span all classes", detail.join(", ")),
    )
    .with_counterexample(bad))
}

fn super_howe(profile: Profile) -> Result<Check> {
    let mut bad = None;
    for (s, n) in [(1, 4), (2, 4)] {
        for r in [osp_check(n, s)?, super_howe_check(n, s)?] {
            if !r.passed() {
                bad.get_or_insert(r.to_text());
            }
        }
    }
    // s = 0: the same generators and verdicts as the bosonic Howe pair
    for n in 3..=profile.n_max(6) {
        let bosonic = AmbientSpace::new(n, 0)?;
        let r = super_howe_check(n, 0)?;
        let h = howe_check(n)?;
        let same_gens = AmbientSpace::new(n, 0)?.o_generators() == bosonic.o_generators()
            && bosonic.osp_generators() == crate::weyl::u_generators(&bosonic);
        if !same_gens || r.passed() != h.report.passed() {
            bad.get_or_insert(format!("n={n}: s=0 specialization differs from the bosonic pair"));
        }
    }
    Ok(Check::new("super Howe pair", bad.is_none(), "(s,n) = (1,4), (2,4); s = 0 matches the bosonic pair")
        .with_counterexample(bad))
}

fn multiform_algebras() -> Result<Check> {
    let r = multiform_ops_check(4, 2)?;
    let detail = r
        .checks
        .iter()
        .map(|c| c.detail.clone())
        .collect::<Vec<_>>()
        .join("; ");
    Ok(Check::new("multiform algebras", r.passed(), detail).with_counterexample((!r.passed()).then(|| r.to_text())))
}

fn conformal_dictionary(seed: u64) -> Result<Check> {
    let n = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut bad = None;
    let mut compared = 0;
    for _ in 0..20 {
        let x = random_point(&mut rng, n);
        let mut lam = random_rational(&mut rng, 5, 4);
        if lam.is_zero() {
            lam = GR::one();
        }
        let maps = [
            ConformalMap::Translation(random_point(&mut rng, n)),
            ConformalMap::Dilatation(n, lam),
            ConformalMap::Lorentz(random_lorentz(&mut rng, n)),
            ConformalMap::SpecialConformal(random_point(&mut rng, n)),
            ConformalMap::Inversion(n),
        ];
        for m in &maps {
            let amb = m.ambient()?;
            if !amb.preserves_metric() {
                bad.get_or_insert(format!("{} does not preserve eta", m.name()));
            }
            let got = act(&amb, &BoundaryPoint::Finite(x.clone()))?;
            let ok = match (m.closed_form(&x), &got) {
                (Some(y), BoundaryPoint::Finite(z)) => &y == z,
                (None, BoundaryPoint::AtInfinity(_)) => true,
                _ => false,
            };
            compared += 1;
            if !ok {
                bad.get_or_insert(format!("{} at {:?}", m.name(), x.iter().map(|c| c.to_string()).collect::<Vec<_>>()));
            }
        }
        let b = random_point(&mut rng, n);
        let inv = inversion(n);
        let conj = inv.compose(&translation(&b)?)?.compose(&inv)?;
        if !special_conformal(&b)?.projectively_equal(&conj) {
            bad.get_or_insert("special conformal is not I T I".to_string());
        }
    }
    Ok(Check::new(
        "conformal dictionary",
        bad.is_none(),
        format!("{compared} map/point pairs, 20 inversion conjugacies"),
    )
    .with_counterexample(bad))
}

fn contraction(profile: Profile) -> Result<Check> {
    let mut bad = None;
    for n in 3..=profile.n_max(5) {
        let c = contract_inonu_wigner(n)?;
        if !c.check_jacobi().is_empty() {
            bad.get_or_insert(format!("n={n}: Jacobi fails before contraction"));
        }
        let io = c.specialize(&format!("io({n},1)"), &GR::zero());
        let is_g = |k: usize| io.label(k).starts_with('G');
        for x in 0..io.dim() {
            for y in 0..io.dim() {
                let br = io.basis_bracket(x, y);
                let ok = match (is_g(x), is_g(y)) {
                    (true, true) => br.is_empty(),
                    (false, false) => br.keys().all(|&k| !is_g(k)),
                    _ => br.keys().all(|&k| is_g(k)),
                };
                if !ok {
                    bad.get_or_insert(format!("n={n}: [{}, {}] = {}", io.label(x), io.label(y), io.combo_to_string(br)));
                }
            }
        }
        if !io.check_jacobi().is_empty() {
            bad.get_or_insert(format!("n={n}: contracted algebra fails Jacobi"));
        }
        // at r = 1 the algebra is o(n,2) again
        let one = c.specialize("r=1", &GR::one());
        let g0 = one.index_of("G0").expect("G0");
        let g1 = one.index_of("G1").expect("G1");
        if one.basis_bracket(g0, g1).is_empty() {
            bad.get_or_insert(format!("n={n}: transvections commute before contraction"));
        }
    }
    Ok(Check::new("Inonu-Wigner contraction", bad.is_none(), "io(n,1) at 1/R = 0 with commuting transvections")
        .with_counterexample(bad))
}

fn majorana(profile: Profile) -> Result<Check> {
    let mut bad = None;
    let smax = profile.level_max(5);
    let mass = rat(3, 1);
    let mut shown = Vec::new();
    for n in 3..=profile.n_max(5) {
        let sp = majorana_spectrum(n, &mass, smax)?;
        for (s, m) in &sp {
            let want = &mass / &(rat(*s as i64, 1) + rat(n as i64 - 2, 2));
            if *m != want {
                bad.get_or_insert(format!("n={n}, s={s}: {m} vs {want}"));
            }
        }
        if !sp.windows(2).all(|w| w[1].1 < w[0].1) {
            bad.get_or_insert(format!("n={n}: spectrum not strictly decreasing"));
        }
        if n == 3 {
            shown = sp.iter().map(|(_, m)| crate::exactcore::fmt_rational(m)).collect();
        }
    }
    Ok(Check::new(
        "Majorana spectrum",
        bad.is_none(),
        format!("M = 3, n = 3: [{}]", shown.join(", ")),
    )
    .with_counterexample(bad))
}

fn hs_table(profile: Profile) -> Result<Check> {
    let mut bad = None;
    let deg = profile.degree_max(4);
    for n in 3..=profile.n_max(6) {
        let list = hs_adjoint_diagrams(n, &BigRational::from_integer(BigInt::from(0)), 12)?;
        let want: Vec<YoungDiagram> = (0..=6).map(|k| YoungDiagram::rectangle(k, 2)).collect();
        let got: Vec<YoungDiagram> = list.iter().map(|h| h.diagram.clone()).collect();
        if got.len() != want.len() || !want.iter().all(|d| got.contains(d)) {
            bad.get_or_insert(format!("n={n}: {:?}", got.iter().map(|d| d.to_string()).collect::<Vec<_>>()));
        }
    }
    let c = centralizer_mod_ideal(3, deg)?;
    let table: Vec<u128> = (0..=deg as usize / 2)
        .map(|k| o_dim(&YoungDiagram::rectangle(k, 2), 5))
        .collect::<Result<_>>()?;
    let graded: Vec<u128> = c.graded.iter().map(|&g| g as u128).collect();
    if graded != table {
        bad.get_or_insert(format!("graded {graded:?} vs table {table:?}"));
    }
    Ok(Check::new(
        "higher-spin adjoint table",
        bad.is_none(),
        format!("scalar case lists the rectangles [k,k]; n=3 dims {table:?}"),
    )
    .with_counterexample(bad))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_dims() {
        assert_eq!((0..5).map(|t| harmonic_dim(3, t)).collect::<Vec<_>>(), vec![1, 3, 5, 7, 9]);
        assert_eq!(harmonic_dim(4, 3), 16);
    }

    #[test]
    fn quick_profile_cheap_criteria() {
        for id in [2, 9, 11, 12, 13] {
            let r = run_criterion(id, Profile::Quick, 1);
            assert!(r.check.passed, "{id}: {:?}", r.check);
        }
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(99, Profile::Quick, 0).check.passed);
    }
}
