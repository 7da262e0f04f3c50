//! The `hsalg` command-line interface.

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::checks::{Check, Report};
use crate::conformal::{act, random_lorentz, BoundaryPoint, ConformalMap};
use crate::error::{Error, Result};
use crate::exactcore::{fmt_rational, rational_roots, Ring, GR};
use crate::liealg::{
    compact_basis, conformal_basis, contract_inonu_wigner, o_n2, osp, poincare, sp2, Presentation,
};
use crate::superweyl::{run_check, SuperCheck};
use crate::verify::{run_all, Profile};
use crate::youngdim::{
    branching_table, gl_dim, hs_adjoint_diagrams, o_dim, singleton_label, unitarity_bound, YoungDiagram,
};
use crate::{verma, weyl};

pub const SCHEMA: &str = "hsalg-report/1";

#[derive(Parser, Debug)]
#[command(name = "hsalg", version, about = "Exact checks for o(n,2) singletons and higher-spin algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Arguments as given, echoed in reports.
    #[arg(skip)]
    pub argv: Vec<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lie (super)algebra presentations.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Conformal maps on compactified Minkowski space.
    #[command(subcommand)]
    Conformal(ConformalCmd),
    /// Verma module of o(n,2) and the scalar singleton.
    #[command(subcommand)]
    Verma(VermaCmd),
    /// Weyl algebra: Howe pair and higher-spin algebra.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Grassmann-extended phase space.
    #[command(subcommand)]
    Super(SuperCmd),
    /// Young diagram dimensions and singleton tables.
    #[command(subcommand)]
    Young(YoungCmd),
    /// Run the acceptance suite.
    VerifyAll {
        #[arg(long, value_enum, default_value_t = Profile::Quick)]
        profile: Profile,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraName {
    On2,
    Compact,
    Conformal,
    Poincare,
    Contracted,
    Sp2,
    Osp,
}

#[derive(Subcommand, Debug)]
pub enum AlgebraCmd {
    /// Jacobi identity and antisymmetry of a presentation.
    Check {
        #[arg(long, value_enum, default_value_t = AlgebraName::On2)]
        name: AlgebraName,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        s: usize,
        /// Perturb the bracket of the first two generators before checking.
        #[arg(long)]
        inject_fault: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapFamily {
    Translation,
    Dilatation,
    Lorentz,
    SpecialConformal,
    Inversion,
}

#[derive(Subcommand, Debug)]
pub enum ConformalCmd {
    /// Apply a conformal map to a boundary point through the null cone.
    Orbit {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        map: MapFamily,
        /// Map parameter: a vector "a,b,.." or a scalar for dilatations.
        /// Lorentz matrices are sampled from the seed.
        #[arg(long)]
        param: Option<String>,
        #[arg(long)]
        point: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum VermaCmd {
    /// Gram matrix at a level, symbolic in E0 unless `--e0` is given.
    Gram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        level: usize,
        #[arg(long, value_parser = parse_rational)]
        e0: Option<BigRational>,
    },
    /// Kernel of the Gram form at a given E0.
    Null {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        level: usize,
        #[arg(long, value_parser = parse_rational)]
        e0: BigRational,
    },
    /// Level dimensions and energies of the scalar singleton.
    Branch {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        tmax: usize,
    },
    /// Majorana mass spectrum M / E_s.
    Majorana {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        mass: BigRational,
        #[arg(long, default_value_t = 4)]
        smax: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum WeylCmd {
    /// sp(2) x o(n,2) Howe pair checks in the Weyl algebra.
    Howe {
        #[arg(long)]
        n: usize,
    },
    /// Graded dimensions of the centralizer of sp(2) modulo the ideal.
    HsDim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deg: u32,
        /// Also print representatives of the top graded piece.
        #[arg(long)]
        basis: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum SuperCmd {
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum)]
        which: SuperCheck,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Group {
    O,
    Gl,
}

#[derive(Args, Debug)]
pub struct DimArgs {
    #[arg(long, value_enum)]
    group: Group,
    #[arg(long = "N")]
    big_n: usize,
    /// Row lengths, e.g. "[2,1]".
    #[arg(long)]
    diagram: String,
}

#[derive(Subcommand, Debug)]
pub enum YoungCmd {
    /// Dimension of an O(N) or GL(N) irrep.
    Dim(DimArgs),
    /// Label, energy and branching of the spin-s singleton.
    Singleton {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational)]
        s: BigRational,
        #[arg(long, default_value_t = 3)]
        tmax: usize,
    },
    /// o(n+2) diagrams in the higher-spin algebra of the spin-s singleton.
    Hs {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational)]
        s: BigRational,
        #[arg(long, default_value_t = 8)]
        max_boxes: usize,
    },
    /// Unitarity bound for a lowest weight (E0, diagram).
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        spinorial: bool,
    },
}

fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    GR::parse_rational(s).map_err(|e| e.to_string())
}

fn parse_vector(s: &str) -> Result<Vec<GR>> {
    s.trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<GR>())
        .collect()
}

/// Outcome of one command before formatting.
pub struct Outcome {
    pub passed: bool,
    pub payload: Value,
    pub counterexample: Option<String>,
    /// Rows for csv output; the first row is the header.
    pub table: Vec<Vec<String>>,
    pub text: String,
}

impl Outcome {
    fn from_report(r: &Report) -> Self {
        let counterexample = r
            .failures()
            .map(|c| format!("{}: {}", c.name, c.counterexample.clone().unwrap_or_else(|| c.detail.clone())))
            .next();
        Outcome {
            passed: r.passed(),
            payload: serde_json::to_value(r).expect("serializable"),
            counterexample,
            table: checks_table(&r.checks),
            text: r.to_text(),
        }
    }
}

fn checks_table(checks: &[Check]) -> Vec<Vec<String>> {
    let mut t = vec![vec!["check".into(), "passed".into(), "detail".into()]];
    t.extend(checks.iter().map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()]));
    t
}

fn echo(cli: &Cli) -> String {
    if cli.argv.is_empty() {
        format!("{:?}", cli.command)
    } else {
        cli.argv.join(" ")
    }
}

fn presentation(name: AlgebraName, n: usize, s: usize) -> Result<Presentation> {
    Ok(match name {
        AlgebraName::On2 => o_n2(n)?,
        AlgebraName::Compact => compact_basis(n)?.presentation,
        AlgebraName::Conformal => conformal_basis(n)?.basis.presentation,
        AlgebraName::Poincare => poincare(n)?,
        AlgebraName::Contracted => contract_inonu_wigner(n)?.specialize("contracted at r = 0", &GR::zero()),
        AlgebraName::Sp2 => sp2()?,
        AlgebraName::Osp => osp(s)?,
    })
}

fn algebra_check(name: AlgebraName, n: usize, s: usize, inject_fault: bool) -> Result<Outcome> {
    let mut p = presentation(name, n, s)?;
    if inject_fault {
        if p.dim() < 3 {
            return Err(Error::InvalidArgument("fault injection needs at least three generators".into()));
        }
        let mut bad = p.basis_bracket(0, 1).clone();
        let cur = bad.remove(&2).unwrap_or_default();
        bad.insert(2, &cur + &GR::one());
        p.set_bracket(0, 1, bad);
    }
    let anti = p.check_antisymmetry();
    let jac = p.check_jacobi();
    let mut report = Report::new(format!("{} (dim {})", p.name(), p.dim()));
    report.push(
        Check::new("antisymmetry", anti.is_empty(), format!("{} violations", anti.len()))
            .with_counterexample(anti.first().map(|&(a, b)| format!("({}, {})", p.label(a), p.label(b)))),
    );
    report.push(
        Check::new("Jacobi identity", jac.is_empty(), format!("{} violating triples", jac.len())).with_counterexample(
            jac.first().map(|v| {
                let (a, b, c) = v.triple;
                format!("({}, {}, {}): {}", p.label(a), p.label(b), p.label(c), p.combo_to_string(&v.jacobiator))
            }),
        ),
    );
    let mut out = Outcome::from_report(&report);
    out.payload = json!({
        "algebra": p.name(),
        "dim": p.dim(),
        "labels": p.labels(),
        "report": out.payload,
    });
    Ok(out)
}

fn conformal_orbit(n: usize, map: MapFamily, param: Option<&str>, point: &str, seed: u64) -> Result<Outcome> {
    let x = parse_vector(point)?;
    if x.len() != n {
        return Err(Error::Dimension(format!("point has {} components, expected {n}", x.len())));
    }
    let vector_param = || -> Result<Vec<GR>> {
        let v = parse_vector(param.ok_or_else(|| Error::InvalidArgument("--param is required".into()))?)?;
        if v.len() != n {
            return Err(Error::Dimension(format!("parameter has {} components, expected {n}", v.len())));
        }
        Ok(v)
    };
    let m = match map {
        MapFamily::Translation => ConformalMap::Translation(vector_param()?),
        MapFamily::SpecialConformal => ConformalMap::SpecialConformal(vector_param()?),
        MapFamily::Dilatation => {
            let l: GR = param.ok_or_else(|| Error::InvalidArgument("--param is required".into()))?.parse()?;
            ConformalMap::Dilatation(n, l)
        }
        MapFamily::Lorentz => ConformalMap::Lorentz(random_lorentz(&mut ChaCha8Rng::seed_from_u64(seed), n)),
        MapFamily::Inversion => ConformalMap::Inversion(n),
    };
    let amb = m.ambient()?;
    let image = act(&amb, &BoundaryPoint::Finite(x.clone()))?;
    let closed = m.closed_form(&x);
    let agrees = match (&closed, &image) {
        (Some(y), BoundaryPoint::Finite(z)) => y == z,
        (None, BoundaryPoint::AtInfinity(_)) => true,
        _ => false,
    };
    let mut report = Report::new(format!("{} on R^({},1)", m.name(), n - 1));
    report.push(Check::new("preserves eta", amb.preserves_metric(), "M^T eta M = eta"));
    report.push(
        Check::new("matches closed form", agrees, format!("{image:?}"))
            .with_counterexample((!agrees).then(|| format!("closed form {closed:?}"))),
    );
    let mut out = Outcome::from_report(&report);
    let strs = |v: &[GR]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    out.payload = json!({
        "map": m.name(),
        "point": strs(&x),
        "image": image.to_json(),
        "closed_form": closed.as_deref().map(strs),
        "report": out.payload,
    });
    out.text = format!("{} -> {}\n{}", strs(&x).join(", "), image.to_json(), out.text);
    Ok(out)
}

fn module_vector_json(v: &verma::ModuleVector<GR>) -> Value {
    Value::Object(
        v.iter()
            .map(|(m, c)| (verma::monomial_label(m), Value::String(c.to_string())))
            .collect(),
    )
}

fn verma_gram(n: usize, level: usize, e0: Option<&BigRational>) -> Result<Outcome> {
    match e0 {
        None => {
            let g = verma::gram_matrix(n, level)?;
            let det = g.det()?;
            let roots = rational_roots(&det)?;
            let roots_s: Vec<String> = roots.iter().map(fmt_rational).collect();
            Ok(Outcome {
                passed: true,
                payload: json!({
                    "n": n, "level": level, "size": g.matrix.rows(),
                    "blocks": g.blocks().len(),
                    "det": det.to_string(), "rational_roots": roots_s,
                }),
                counterexample: None,
                table: vec![vec!["root".into()], roots_s.clone()],
                text: format!(
                    "Gram matrix n={n} level={level}: {} x {}, {} blocks\ndet = {det}\nrational roots: {}\n",
                    g.matrix.rows(),
                    g.matrix.rows(),
                    g.blocks().len(),
                    roots_s.join(", ")
                ),
            })
        }
        Some(e0) => {
            let g = verma::gram_matrix_at(n, level, e0)?;
            let det = g.det()?;
            let pos = g.is_positive_definite()?;
            let ker = g.kernel().len();
            Ok(Outcome {
                passed: true,
                payload: json!({
                    "n": n, "level": level, "e0": fmt_rational(e0), "size": g.matrix.rows(),
                    "det": det.to_string(), "positive_definite": pos, "kernel_dim": ker,
                }),
                counterexample: None,
                table: vec![
                    vec!["size".into(), "det".into(), "positive_definite".into(), "kernel_dim".into()],
                    vec![g.matrix.rows().to_string(), det.to_string(), pos.to_string(), ker.to_string()],
                ],
                text: format!(
                    "Gram matrix n={n} level={level} E0={}: det {det}, positive definite {pos}, kernel {ker}\n",
                    fmt_rational(e0)
                ),
            })
        }
    }
}

fn verma_null(n: usize, level: usize, e0: &BigRational) -> Result<Outcome> {
    let ker = verma::null_vectors(n, level, e0)?;
    let vecs: Vec<Value> = ker.iter().map(module_vector_json).collect();
    let mut text = format!("{} null vector(s) at n={n}, level={level}, E0={}\n", ker.len(), fmt_rational(e0));
    let mut table = vec![vec!["vector".into(), "monomial".into(), "coefficient".into()]];
    for (k, v) in ker.iter().enumerate() {
        let terms: Vec<String> = v.iter().map(|(m, c)| format!("({c}) {}", verma::monomial_label(m))).collect();
        text.push_str(&format!("  {}\n", terms.join(" + ")));
        table.extend(v.iter().map(|(m, c)| vec![k.to_string(), verma::monomial_label(m), c.to_string()]));
    }
    Ok(Outcome {
        passed: true,
        payload: json!({"n": n, "level": level, "e0": fmt_rational(e0), "count": ker.len(), "vectors": vecs}),
        counterexample: None,
        table,
        text,
    })
}

fn verma_branch(n: usize, tmax: usize) -> Result<Outcome> {
    let rows = verma::branching_check(n, tmax)?;
    let bad = rows.iter().find(|r| !r.ok());
    let mut table = vec![vec!["level".into(), "dim".into(), "o_dim".into(), "energy".into()]];
    let mut text = format!("scalar singleton of o({n},2)\n");
    for r in &rows {
        table.push(vec![r.level.to_string(), r.dim.to_string(), r.o_dim.to_string(), r.energy.to_string()]);
        text.push_str(&format!("  level {}: dim {} (o_dim {}), E = {}\n", r.level, r.dim, r.o_dim, r.energy));
    }
    Ok(Outcome {
        passed: bad.is_none(),
        payload: json!({"n": n, "rows": rows}),
        counterexample: bad.map(|r| format!("level {}: dim {} vs {}, E {} vs {}", r.level, r.dim, r.o_dim, r.energy, r.expected_energy)),
        table,
        text,
    })
}

fn verma_majorana(n: usize, mass: &BigRational, smax: usize) -> Result<Outcome> {
    let sp = verma::majorana_spectrum(n, mass, smax)?;
    let decreasing = sp.windows(2).all(|w| w[1].1 < w[0].1);
    let mut table = vec![vec!["s".into(), "mass".into()]];
    table.extend(sp.iter().map(|(s, m)| vec![s.to_string(), fmt_rational(m)]));
    let vals: Vec<String> = sp.iter().map(|(_, m)| fmt_rational(m)).collect();
    Ok(Outcome {
        passed: decreasing,
        payload: json!({
            "n": n, "mass": fmt_rational(mass),
            "spectrum": sp.iter().map(|(s, m)| json!({"s": s, "mass": fmt_rational(m)})).collect::<Vec<_>>(),
            "decreasing": decreasing,
        }),
        counterexample: (!decreasing).then(|| vals.join(", ")),
        table,
        text: format!("Majorana spectrum M/E_s: {}\n", vals.join(", ")),
    })
}

fn weyl_howe(n: usize) -> Result<Outcome> {
    let h = weyl::howe_check(n)?;
    let mut out = Outcome::from_report(&h.report);
    out.payload = serde_json::to_value(&h).expect("serializable");
    let c = weyl::constraint_algebra_check(n)?;
    out.passed &= c.passed();
    if out.counterexample.is_none() {
        out.counterexample = Outcome::from_report(&c).counterexample;
    }
    out.text.push_str(&c.to_text());
    out.table.extend(checks_table(&c.checks).into_iter().skip(1));
    out.payload["constraints"] = serde_json::to_value(&c).expect("serializable");
    Ok(out)
}

fn weyl_hs_dim(n: usize, deg: u32, basis: bool) -> Result<Outcome> {
    let c = weyl::centralizer_mod_ideal(n, deg)?;
    let mut dims = serde_json::Map::new();
    let mut table = vec![vec!["degree".into(), "dim".into(), "expected".into()]];
    let mut text = format!("C(sp(2))/I in A_{}:\n", n + 2);
    for (k, (g, e)) in c.graded.iter().zip(&c.expected).enumerate() {
        dims.insert(format!("deg{}", 2 * k), json!(g));
        table.push(vec![(2 * k).to_string(), g.to_string(), e.to_string()]);
        text.push_str(&format!("  degree {}: {g} (o_dim [{k},{k}] = {e})\n", 2 * k));
    }
    if basis {
        text.push_str("top-degree representatives:\n");
        for r in &c.representatives {
            text.push_str(&format!("  {r}\n"));
        }
    }
    let passed = c.matches_expected();
    Ok(Outcome {
        passed,
        payload: json!({
            "n": n, "degree": deg, "dims": dims, "cumulative": c.cumulative, "expected": c.expected,
            "representatives": if basis { json!(c.representatives) } else { Value::Null },
        }),
        counterexample: (!passed).then(|| format!("graded {:?} vs expected {:?}", c.graded, c.expected)),
        table,
        text,
    })
}

fn young_dim(a: &DimArgs) -> Result<Outcome> {
    let d: YoungDiagram = a.diagram.parse()?;
    let dim = match a.group {
        Group::O => o_dim(&d, a.big_n)?,
        Group::Gl => gl_dim(&d, a.big_n)?,
    };
    let g = match a.group {
        Group::O => "O",
        Group::Gl => "GL",
    };
    Ok(Outcome {
        passed: true,
        payload: json!({"group": g, "N": a.big_n, "diagram": d, "dim": dim.to_string()}),
        counterexample: None,
        table: vec![vec!["group".into(), "N".into(), "diagram".into(), "dim".into()], vec![
            g.into(),
            a.big_n.to_string(),
            d.to_string(),
            dim.to_string(),
        ]],
        text: format!("dim {g}({}) {d} = {dim}\n", a.big_n),
    })
}

fn young_singleton(n: usize, s: &BigRational, tmax: usize) -> Result<Outcome> {
    let label = singleton_label(n, s)?;
    let table = branching_table(n, s, tmax)?;
    let mut rows = vec![vec!["t".into(), "energy".into(), "diagram".into(), "dim".into()]];
    let mut text = format!(
        "{} singleton of o({n},2): E0 = {}, twist {}, ground {}\n",
        label.name,
        fmt_rational(&label.e0),
        fmt_rational(&label.twist),
        label.ground
    );
    for e in &table {
        let dim = e.dim.map(|d| d.to_string()).unwrap_or_else(|| "-".into());
        rows.push(vec![e.t.to_string(), fmt_rational(&e.energy), e.diagram.to_string(), dim.clone()]);
        text.push_str(&format!("  E = {}: {} (dim {dim})\n", fmt_rational(&e.energy), e.diagram));
    }
    Ok(Outcome {
        passed: true,
        payload: json!({"label": label, "branching": table}),
        counterexample: None,
        table: rows,
        text,
    })
}

fn young_hs(n: usize, s: &BigRational, max_boxes: usize) -> Result<Outcome> {
    let list = hs_adjoint_diagrams(n, s, max_boxes)?;
    let mut rows = vec![vec!["diagram".into(), "dim".into(), "ambiguous".into()]];
    let mut text = format!("higher-spin algebra of the spin-{} singleton, o({}) content:\n", fmt_rational(s), n + 2);
    let mut entries = Vec::new();
    for h in &list {
        let dim = o_dim(&h.diagram, n + 2)?;
        rows.push(vec![h.diagram.to_string(), dim.to_string(), h.ambiguous.to_string()]);
        text.push_str(&format!("  {} dim {dim}{}\n", h.diagram, if h.ambiguous { " (ambiguous)" } else { "" }));
        entries.push(json!({"diagram": h.diagram, "dim": dim.to_string(), "ambiguous": h.ambiguous}));
    }
    Ok(Outcome {
        passed: true,
        payload: json!({"n": n, "s": fmt_rational(s), "max_boxes": max_boxes, "diagrams": entries}),
        counterexample: None,
        table: rows,
        text,
    })
}

fn young_bound(n: usize, diagram: &str, spinorial: bool) -> Result<Outcome> {
    let d: YoungDiagram = diagram.parse()?;
    let b = unitarity_bound(n, &d, spinorial)?;
    Ok(Outcome {
        passed: true,
        payload: serde_json::to_value(&b).expect("serializable"),
        counterexample: None,
        table: vec![vec!["diagram".into(), "bound".into()], vec![d.to_string(), fmt_rational(&b.bound)]],
        text: format!("E0 >= {} for {d} ({:?})\n", fmt_rational(&b.bound), b.case),
    })
}

fn verify_all(profile: Profile, seed: u64, timings: bool) -> Outcome {
    let results = run_all(profile, seed);
    let passed = results.iter().all(|r| r.check.passed);
    let mut text = String::new();
    let mut table = vec![vec!["criterion".into(), "name".into(), "passed".into(), "detail".into()]];
    for r in &results {
        let status = if r.check.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{status} criterion {:>2} {}: {}", r.id, r.check.name, r.check.detail));
        if timings {
            text.push_str(&format!(" ({:.2}s)", r.seconds.unwrap_or_default()));
        }
        text.push('\n');
        if let Some(c) = &r.check.counterexample {
            text.push_str(&format!("     counterexample: {c}\n"));
        }
        table.push(vec![r.id.to_string(), r.check.name.clone(), r.check.passed.to_string(), r.check.detail.clone()]);
    }
    let payload: Vec<Value> = results
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).expect("serializable");
            if !timings {
                v.as_object_mut().expect("object").remove("seconds");
            }
            v
        })
        .collect();
    Outcome {
        passed,
        counterexample: results
            .iter()
            .find(|r| !r.check.passed)
            .map(|r| format!("criterion {}: {}", r.id, r.check.counterexample.clone().unwrap_or_else(|| r.check.detail.clone()))),
        payload: json!({"profile": profile, "seed": seed, "criteria": payload}),
        table,
        text,
    }
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Algebra(AlgebraCmd::Check { name, n, s, inject_fault }) => algebra_check(*name, *n, *s, *inject_fault),
        Command::Conformal(ConformalCmd::Orbit { n, map, param, point }) => {
            conformal_orbit(*n, *map, param.as_deref(), point, cli.seed)
        }
        Command::Verma(VermaCmd::Gram { n, level, e0 }) => verma_gram(*n, *level, e0.as_ref()),
        Command::Verma(VermaCmd::Null { n, level, e0 }) => verma_null(*n, *level, e0),
        Command::Verma(VermaCmd::Branch { n, tmax }) => verma_branch(*n, *tmax),
        Command::Verma(VermaCmd::Majorana { n, mass, smax }) => verma_majorana(*n, mass, *smax),
        Command::Weyl(WeylCmd::Howe { n }) => weyl_howe(*n),
        Command::Weyl(WeylCmd::HsDim { n, deg, basis }) => weyl_hs_dim(*n, *deg, *basis),
        Command::Super(SuperCmd::Check { n, s, which }) => Ok(Outcome::from_report(&run_check(*which, *n, *s)?)),
        Command::Young(YoungCmd::Dim(a)) => young_dim(a),
        Command::Young(YoungCmd::Singleton { n, s, tmax }) => young_singleton(*n, s, *tmax),
        Command::Young(YoungCmd::Hs { n, s, max_boxes }) => young_hs(*n, s, *max_boxes),
        Command::Young(YoungCmd::Bound { n, diagram, spinorial }) => young_bound(*n, diagram, *spinorial),
        Command::VerifyAll { profile } => Ok(verify_all(*profile, cli.seed, cli.timings)),
    }
}

fn csv_line(row: &[String]) -> String {
    row.iter()
        .map(|f| {
            if f.contains([',', '"', '\n']) {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders an outcome in the requested format.
pub fn render(cli: &Cli, out: &Outcome, seconds: Option<f64>) -> String {
    match cli.format {
        Format::Json => {
            let mut v = json!({
                "schema": SCHEMA,
                "command": echo(cli),
                "seed": cli.seed,
                "status": if out.passed { "pass" } else { "fail" },
                "payload": out.payload,
            });
            if !out.passed {
                v["counterexample"] = json!(out.counterexample.clone().unwrap_or_else(|| "unspecified".into()));
            }
            if let Some(t) = seconds {
                v["seconds"] = json!(t);
            }
            let mut s = serde_json::to_string_pretty(&v).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = out.text.clone();
            s.push_str(if out.passed { "status: pass\n" } else { "status: fail\n" });
            if let Some(t) = seconds {
                s.push_str(&format!("time: {t:.3}s\n"));
            }
            s
        }
        Format::Csv => out.table.iter().map(|r| csv_line(r) + "\n").collect(),
    }
}

/// Parses arguments (without the program name) into a command.
pub fn parse<I, T>(args: I) -> Result<Cli>
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let mut cli = Cli::try_parse_from(std::iter::once("hsalg".to_string()).chain(argv.iter().cloned()))
        .map_err(|e| Error::InvalidArgument(e.render().to_string().trim().to_string()))?;
    cli.argv = argv;
    Ok(cli)
}

fn configure_workers() -> Result<()> {
    if let Ok(v) = std::env::var("HSALG_WORKERS") {
        let k: usize = v
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("HSALG_WORKERS must be a positive integer, got {v:?}")))?;
        if k == 0 {
            return Err(Error::InvalidArgument("HSALG_WORKERS must be positive".into()));
        }
        // fails only if a pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    Ok(())
}

/// Entry point: 0 pass, 1 verification failure, 2 usage error.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(mut c) => {
            c.argv = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
            c
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = configure_workers() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(out) => {
            let secs = cli.timings.then(|| start.elapsed().as_secs_f64());
            let s = render(&cli, &out, secs);
            let _ = std::io::stdout().write_all(s.as_bytes());
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Outcome, Cli) {
        let cli = Cli::try_parse_from(std::iter::once("hsalg").chain(args.iter().copied())).unwrap();
        (run(&cli).unwrap(), cli)
    }

    #[test]
    fn rejects_float_rationals() {
        assert!(Cli::try_parse_from(["hsalg", "verma", "null", "--n", "3", "--level", "2", "--e0", "0.5"]).is_err());
    }

    #[test]
    fn null_vector_command() {
        let (out, _) = run_args(&["verma", "null", "--n", "3", "--level", "2", "--e0", "1/2"]);
        assert!(out.passed);
        assert_eq!(out.payload["count"], json!(1));
    }

    #[test]
    fn hs_dim_command() {
        let (out, _) = run_args(&["weyl", "hs-dim", "--n", "3", "--deg", "4"]);
        assert_eq!(out.payload["dims"]["deg2"], json!(10));
        assert_eq!(out.payload["dims"]["deg4"], json!(35));
    }

    #[test]
    fn fault_injection_fails() {
        let (out, _) = run_args(&["algebra", "check", "--name", "on2", "--n", "3", "--inject-fault"]);
        assert!(!out.passed);
        assert!(out.counterexample.unwrap().contains("Jacobi"));
    }

    #[test]
    fn json_is_stable() {
        let (a, cli) = run_args(&["young", "hs", "--n", "4", "--s", "1", "--max-boxes", "6"]);
        let (b, _) = run_args(&["young", "hs", "--n", "4", "--s", "1", "--max-boxes", "6"]);
        assert_eq!(render(&cli, &a, None), render(&cli, &b, None));
    }

    #[test]
    fn vector_parsing() {
        assert_eq!(parse_vector("[1, -1/2]").unwrap(), vec![GR::one(), GR::frac(-1, 2)]);
        assert!(parse_vector("1.5").is_err());
    }
}
