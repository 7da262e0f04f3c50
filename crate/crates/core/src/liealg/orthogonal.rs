//! The ambient presentation of o(n,2) and its compact, conformal and
//! contracted bases.

use std::collections::BTreeMap;

use super::presentation::{BasisChange, Combo, Presentation};
use crate::error::{Error, Result};
use crate::exactcore::{ExactMatrix, Parity, Ring, UniPoly, GR};

/// Ambient index names `0, 0', 1, .., n` and the metric diag(-1,-1,+1,..,+1).
pub fn ambient_indices(n: usize) -> (Vec<String>, Vec<i64>) {
    let mut names = vec!["0".to_string(), "0'".to_string()];
    names.extend((1..=n).map(|k| k.to_string()));
    let mut eta = vec![-1, -1];
    eta.extend(std::iter::repeat_n(1, n));
    (names, eta)
}

/// Index of the pair `(a, b)`, `a < b`, in the lexicographic pair order over `d` indices.
pub fn pair_index(a: usize, b: usize, d: usize) -> usize {
    debug_assert!(a < b && b < d);
    a * d - a * (a + 1) / 2 + (b - a - 1)
}

/// `J_{ab}` as a combination of `J_{a<b}` basis elements (antisymmetric, zero on the diagonal).
fn j_combo(a: usize, b: usize, d: usize) -> Combo<GR> {
    use std::cmp::Ordering::*;
    match a.cmp(&b) {
        Equal => Combo::new(),
        Less => Combo::from([(pair_index(a, b, d), GR::one())]),
        Greater => Combo::from([(pair_index(b, a, d), -GR::one())]),
    }
}

/// Pseudo-orthogonal algebra with diagonal metric `eta` and bracket
/// `[J_AB, J_CD] = i(eta_BC J_AD - eta_AC J_BD - eta_BD J_AC + eta_AD J_BC)`.
pub fn orthogonal(name: &str, index_names: &[String], eta: &[i64]) -> Result<Presentation> {
    let d = eta.len();
    if index_names.len() != d {
        return Err(Error::Dimension("index names and metric differ in length".into()));
    }
    let mut pairs = Vec::new();
    let mut labels = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            pairs.push((a, b));
            labels.push(format!("J({},{})", index_names[a], index_names[b]));
        }
    }
    let et = |x: usize, y: usize| if x == y { eta[x] } else { 0 };
    let parities = vec![Parity::Even; labels.len()];
    Presentation::from_upper(name, labels, parities, |i, j| {
        let (a, b) = pairs[i];
        let (c, e) = pairs[j];
        let mut out = Combo::new();
        let terms = [
            (et(b, c), a, e),
            (-et(a, c), b, e),
            (-et(b, e), a, c),
            (et(a, e), b, c),
        ];
        for (coef, x, y) in terms {
            if coef != 0 {
                let c = &GR::i() * &GR::from_int(coef);
                super::presentation::combo_add_scaled(&mut out, &c, &j_combo(x, y, d));
            }
        }
        out
    })
}

fn require_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    Ok(())
}

/// o(n,2) on the generators `J(A,B)`, `A < B` over `0, 0', 1, .., n`.
pub fn o_n2(n: usize) -> Result<Presentation> {
    require_n(n)?;
    let (names, eta) = ambient_indices(n);
    orthogonal(&format!("o({n},2)"), &names, &eta)
}

/// A presentation obtained from the ambient one by a change of basis.
#[derive(Clone, Debug)]
pub struct BasisPresentation {
    pub ambient: Presentation,
    pub presentation: Presentation,
    pub change: BasisChange,
}

impl BasisPresentation {
    /// Express a new-basis element in ambient generators.
    pub fn to_ambient(&self, v: &Combo<GR>) -> Combo<GR> {
        self.change.to_old(v)
    }
}

fn build_change(
    ambient: Presentation,
    name: &str,
    rows: Vec<(String, Combo<GR>)>,
) -> Result<BasisPresentation> {
    let d = ambient.dim();
    let forward = ExactMatrix::from_fn(d, d, |k, l| rows[k].1.get(&l).cloned().unwrap_or_default());
    let change = BasisChange::new(forward)?;
    let labels = rows.into_iter().map(|(l, _)| l).collect();
    let presentation = change.induce(&ambient, name, labels, vec![Parity::Even; d])?;
    Ok(BasisPresentation {
        ambient,
        presentation,
        change,
    })
}

fn lin(terms: &[(Combo<GR>, GR)]) -> Combo<GR> {
    let mut out = Combo::new();
    for (v, c) in terms {
        super::presentation::combo_add_scaled(&mut out, c, v);
    }
    out
}

/// Index positions of the compact basis `E, J+_1..J+_n, J-_1..J-_n, J(i,j)`.
#[derive(Clone, Copy, Debug)]
pub struct CompactIndex {
    pub n: usize,
}

impl CompactIndex {
    pub fn e(&self) -> usize {
        0
    }
    /// `J+_i`, `i` in `1..=n`.
    pub fn plus(&self, i: usize) -> usize {
        i
    }
    pub fn minus(&self, i: usize) -> usize {
        self.n + i
    }
    /// `J(i,j)` for `1 <= i < j <= n`.
    pub fn rot(&self, i: usize, j: usize) -> usize {
        1 + 2 * self.n + pair_index(i - 1, j - 1, self.n)
    }
    pub fn dim(&self) -> usize {
        (self.n + 2) * (self.n + 1) / 2
    }
}

/// Compact basis `E = J(0',0)`, `J±_j = J(0,j) ∓ i J(0',j)`, `J(i,j)`.
pub fn compact_basis(n: usize) -> Result<BasisPresentation> {
    let ambient = o_n2(n)?;
    let d = n + 2;
    let j = |a: usize, b: usize| j_combo(a, b, d);
    let i = GR::i();
    let mut rows = vec![("E".to_string(), j(1, 0))];
    for k in 1..=n {
        rows.push((format!("J+{k}"), lin(&[(j(0, k + 1), GR::one()), (j(1, k + 1), -i.clone())])));
    }
    for k in 1..=n {
        rows.push((format!("J-{k}"), lin(&[(j(0, k + 1), GR::one()), (j(1, k + 1), i.clone())])));
    }
    for a in 1..=n {
        for b in a + 1..=n {
            rows.push((format!("J({a},{b})"), j(a + 1, b + 1)));
        }
    }
    build_change(ambient, &format!("o({n},2) compact"), rows)
}

/// Conformal basis and the light-cone data it was derived from.
#[derive(Clone, Debug)]
pub struct ConformalBasis {
    pub basis: BasisPresentation,
    /// Lower-index metric on the `(+, -)` light-cone plane, computed from
    /// `X± = X^{0'} ± X^n`.
    pub lightcone_metric: [[GR; 2]; 2],
    /// `c` with `[D, P_mu] = c P_mu`.
    pub dilatation_weight: GR,
}

/// Boundary index names `0, 1, .., n-1` with their ambient positions.
fn boundary_indices(n: usize) -> Vec<(String, usize)> {
    let mut out = vec![("0".to_string(), 0)];
    out.extend((1..n).map(|k| (k.to_string(), k + 1)));
    out
}

/// Conformal basis `P_mu = J_{+mu}/2`, `J(mu,nu)`, `D = J_{+-}`, `K_mu = J_{-mu}`,
/// with lower light-cone components `V_± = (V_{0'} ± V_n)/2`.
pub fn conformal_basis(n: usize) -> Result<ConformalBasis> {
    let ambient = o_n2(n)?;
    let d = n + 2;
    let j = |a: usize, b: usize| j_combo(a, b, d);
    let half = GR::frac(1, 2);
    let quarter = GR::frac(1, 4);
    let (zp, nn) = (1, n + 1);
    // J_{+B} and J_{-B} for an ambient index B
    let jp = |b: usize| lin(&[(j(zp, b), half.clone()), (j(nn, b), half.clone())]);
    let jm = |b: usize| lin(&[(j(zp, b), half.clone()), (j(nn, b), -half.clone())]);
    let bnd = boundary_indices(n);
    let mut rows = Vec::new();
    for (name, b) in &bnd {
        rows.push((format!("P{name}"), lin(&[(jp(*b), half.clone())])));
    }
    for (x, (na, a)) in bnd.iter().enumerate() {
        for (nb, b) in &bnd[x + 1..] {
            rows.push((format!("J({na},{nb})"), j(*a, *b)));
        }
    }
    // J_{+-} = (J_{0'} + J_n)_{(0' - n)}/4 = -J(0',n)/2
    let jpm = lin(&[
        (j(zp, zp), quarter.clone()),
        (j(zp, nn), -quarter.clone()),
        (j(nn, zp), quarter.clone()),
        (j(nn, nn), -quarter.clone()),
    ]);
    rows.push(("D".to_string(), jpm));
    for (name, b) in &bnd {
        rows.push((format!("K{name}"), jm(*b)));
    }
    let basis = build_change(ambient, &format!("o({n},2) conformal"), rows)?;

    // lower metric in (X+, X-): eta'_{ab} = sum_A dX^A/dX^a dX^A/dX^b eta_AA
    let jac = [[GR::frac(1, 2), GR::frac(1, 2)], [GR::frac(1, 2), GR::frac(-1, 2)]];
    let eta_amb = [GR::from_int(-1), GR::from_int(1)];
    let metric = std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            (0..2).fold(GR::zero(), |acc, k| &acc + &(&(&jac[k][a] * &jac[k][b]) * &eta_amb[k]))
        })
    });

    let p = &basis.presentation;
    let dil = p.index_of("D").expect("D present");
    let p0 = p.index_of("P0").expect("P0 present");
    let br = p.basis_bracket(dil, p0);
    let weight = match (br.len(), br.get(&p0)) {
        (1, Some(c)) => c.clone(),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "[D, P0] is not proportional to P0: {}",
                p.combo_to_string(br)
            )))
        }
    };
    Ok(ConformalBasis {
        basis,
        lightcone_metric: metric,
        dilatation_weight: weight,
    })
}

/// The Poincaré algebra io(n-1,1) spanned by `P_mu` and `J(mu,nu)` inside the
/// conformal basis.
pub fn poincare(n: usize) -> Result<Presentation> {
    let conf = conformal_basis(n)?;
    let p = &conf.basis.presentation;
    let idx: Vec<usize> = (0..p.dim())
        .filter(|&k| p.label(k).starts_with('P') || p.label(k).starts_with("J("))
        .collect();
    p.restrict(&format!("io({},1)", n - 1), &idx)
}

/// o(n,2) with transvections `G_a = r J(0',a)`, `r = 1/R`, and Lorentz generators
/// `J(a,b)`; structure constants are polynomials in `r`.
pub fn contract_inonu_wigner(n: usize) -> Result<Presentation<UniPoly>> {
    let ambient = o_n2(n)?;
    let d = n + 2;
    let lorentz: Vec<usize> = std::iter::once(0).chain(2..d).collect();
    let names = ["0".to_string()]
        .into_iter()
        .chain((1..=n).map(|k| k.to_string()))
        .collect::<Vec<_>>();
    // new basis: (ambient combination, weight in r)
    let mut labels = Vec::new();
    let mut olds: Vec<Combo<GR>> = Vec::new();
    let mut weights = Vec::new();
    for x in 0..lorentz.len() {
        for y in x + 1..lorentz.len() {
            labels.push(format!("J({},{})", names[x], names[y]));
            olds.push(j_combo(lorentz[x], lorentz[y], d));
            weights.push(0usize);
        }
    }
    for (x, &a) in lorentz.iter().enumerate() {
        labels.push(format!("G{}", names[x]));
        olds.push(j_combo(1, a, d));
        weights.push(1);
    }
    // ambient basis element -> (new index, coefficient)
    let mut back: BTreeMap<usize, (usize, GR)> = BTreeMap::new();
    for (k, v) in olds.iter().enumerate() {
        let (&l, c) = v.iter().next().expect("single term");
        back.insert(l, (k, c.inv().expect("unit coefficient")));
    }
    let dim = labels.len();
    Presentation::from_upper(
        &format!("o({n},2) contracted"),
        labels,
        vec![Parity::Even; dim],
        |i, j| {
            let br = ambient.bracket_combo(&olds[i], &olds[j]);
            let mut out = Combo::new();
            for (l, c) in br {
                let (k, inv) = &back[&l];
                let power = weights[i] + weights[j] - weights[*k];
                out.insert(*k, UniPoly::monomial(&c * inv, power));
            }
            out
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(p: &Presentation, terms: &[(&str, GR)]) -> Combo<GR> {
        p.element_from_labels(terms).unwrap().coeffs().clone()
    }

    #[test]
    fn dimensions_and_example_bracket() {
        assert_eq!(o_n2(3).unwrap().dim(), 10);
        assert_eq!(o_n2(4).unwrap().dim(), 15);
        assert!(o_n2(2).is_err());
        let g = o_n2(3).unwrap();
        let a = g.index_of("J(0,1)").unwrap();
        let b = g.index_of("J(1,2)").unwrap();
        assert_eq!(g.basis_bracket(a, b), &el(&g, &[("J(0,2)", GR::i())]));
    }

    #[test]
    fn compact_table() {
        let n = 4;
        let c = compact_basis(n).unwrap();
        let p = &c.presentation;
        let ix = CompactIndex { n };
        for i in 1..=n {
            assert_eq!(p.basis_bracket(ix.e(), ix.plus(i)), &Combo::from([(ix.plus(i), GR::one())]));
            assert_eq!(p.basis_bracket(ix.e(), ix.minus(i)), &Combo::from([(ix.minus(i), -GR::one())]));
            for j in 1..=n {
                assert!(p.basis_bracket(ix.plus(i), ix.plus(j)).is_empty());
                let mut expect = Combo::new();
                if i == j {
                    expect.insert(ix.e(), GR::from_int(2));
                } else {
                    let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
                    expect.insert(ix.rot(a, b), &GR::i() * &GR::from_int(2 * s));
                }
                assert_eq!(p.basis_bracket(ix.minus(i), ix.plus(j)), &expect);
            }
        }
        assert!(c.change.check_transport(&c.ambient, p).is_empty());
    }

    #[test]
    fn conformal_relations() {
        let conf = conformal_basis(4).unwrap();
        let p = &conf.basis.presentation;
        let p0 = p.index_of("P0").unwrap();
        let p1 = p.index_of("P1").unwrap();
        assert!(p.basis_bracket(p0, p1).is_empty());
        // [P1, J(1,2)] = i eta_11 P2
        let j12 = p.index_of("J(1,2)").unwrap();
        assert_eq!(p.basis_bracket(p1, j12), &el(p, &[("P2", GR::i())]));
        assert_eq!(conf.lightcone_metric[0][1], GR::frac(-1, 2));
        assert_eq!(conf.lightcone_metric[0][0], GR::zero());
        assert_eq!(conf.dilatation_weight, &GR::i() * &GR::frac(-1, 2));
        assert!(poincare(4).unwrap().check_jacobi().is_empty());
    }

    #[test]
    fn contraction_limits() {
        let c = contract_inonu_wigner(3).unwrap();
        let g0 = c.index_of("G0").unwrap();
        let g1 = c.index_of("G1").unwrap();
        let j01 = c.index_of("J(0,1)").unwrap();
        // [G0, G1] = i r^2 J(0,1)
        assert_eq!(
            c.basis_bracket(g0, g1),
            &Combo::from([(j01, UniPoly::monomial(GR::i(), 2))])
        );
        let io = c.specialize("io(3,1)", &GR::zero());
        assert!(io.basis_bracket(g0, g1).is_empty());
        assert!(c.check_jacobi().is_empty());
        assert!(io.check_jacobi().is_empty());
    }
}
