//! Graded Moyal star product on polynomial phase-space symbols, and the
//! ambient phase superspace `T*R^{n+2|s(n+2)}`.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactcore::{Monomial, Parity, Ring, SuperPolynomial, VariableTable, GR};
use crate::liealg::{ambient_indices, Presentation};

pub type PhaseSymbol = SuperPolynomial;

/// Canonical pairs of a phase (super)space. Even pairs have `{q, p} = 1`,
/// odd pairs `{θ, π} = {π, θ} = 1`. The star product is
/// `f ★ g = f exp(c Π) g` with `Π` the Poisson bivector and `c = i/2`, so
/// that `[f, g]★ = i{f, g}` whenever either factor is quadratic.
#[derive(Clone, Debug)]
pub struct PhaseSpace {
    vars: Arc<VariableTable>,
    /// `(w, s)` with `{v, w} = s`.
    partner: Vec<(usize, i64)>,
    momentum: Vec<bool>,
    c: GR,
}

impl PhaseSpace {
    /// `pairs` lists (coordinate, momentum); every variable must occur once.
    pub fn new(vars: Arc<VariableTable>, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![None; vars.len()];
        let mut momentum = vec![false; vars.len()];
        for &(q, p) in pairs {
            if q >= vars.len() || p >= vars.len() || partner[q].is_some() || partner[p].is_some() || q == p {
                return Err(Error::InvalidArgument(format!("bad canonical pair ({q}, {p})")));
            }
            if vars.parity(q) != vars.parity(p) {
                return Err(Error::InvalidArgument(format!(
                    "{} and {} have different parity",
                    vars.name(q),
                    vars.name(p)
                )));
            }
            let back = if vars.parity(q).is_odd() { 1 } else { -1 };
            partner[q] = Some((p, 1));
            partner[p] = Some((q, back));
            momentum[p] = true;
        }
        let partner = partner
            .into_iter()
            .enumerate()
            .map(|(v, p)| p.ok_or_else(|| Error::InvalidArgument(format!("{} has no conjugate", vars.name(v)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(PhaseSpace {
            vars,
            partner,
            momentum,
            c: GR::i().scale(&crate::exactcore::rat(1, 2)),
        })
    }

    pub fn vars(&self) -> &Arc<VariableTable> {
        &self.vars
    }

    /// The constant `c` of the star expansion.
    pub fn star_constant(&self) -> &GR {
        &self.c
    }

    pub fn var(&self, v: usize) -> PhaseSymbol {
        SuperPolynomial::var(&self.vars, v)
    }

    pub fn zero(&self) -> PhaseSymbol {
        SuperPolynomial::zero(&self.vars)
    }

    pub fn constant(&self, c: GR) -> PhaseSymbol {
        SuperPolynomial::constant(&self.vars, c)
    }

    pub fn is_momentum(&self, v: usize) -> bool {
        self.momentum[v]
    }

    /// Poisson bracket of two generators.
    pub fn var_bracket(&self, v: usize, w: usize) -> i64 {
        let (p, s) = self.partner[v];
        if p == w {
            s
        } else {
            0
        }
    }

    /// Graded Poisson bracket `Σ_v {v, w_v} (f ∂^R_v)(∂^L_{w_v} g)`.
    pub fn poisson(&self, f: &PhaseSymbol, g: &PhaseSymbol) -> PhaseSymbol {
        let mut out = self.zero();
        for v in 0..self.vars.len() {
            let (w, s) = self.partner[v];
            let df = f.derivative_right(v);
            if df.is_zero() {
                continue;
            }
            let dg = g.derivative(w);
            if dg.is_zero() {
                continue;
            }
            out = &out + &(&df * &dg).scale(&GR::from_int(s));
        }
        out
    }

    fn pi_var(&self, v: usize, h: &PhaseSymbol) -> PhaseSymbol {
        let (w, s) = self.partner[v];
        h.derivative(w).scale(&GR::from_int(s))
    }

    /// `v ★ h = v h + c Π(v, h)`.
    fn left_mul_var(&self, v: usize, h: &PhaseSymbol) -> PhaseSymbol {
        &(&self.var(v) * h) + &self.pi_var(v, h).scale(&self.c)
    }

    fn star_monomial(&self, m: &Monomial, g: &PhaseSymbol, memo: &mut HashMap<Monomial, PhaseSymbol>) -> PhaseSymbol {
        if m.even.is_empty() && m.odd.is_empty() {
            return g.clone();
        }
        if let Some(r) = memo.get(m) {
            return r.clone();
        }
        // m = y · rest with y the first even variable, else the first odd one
        let (y, rest) = if let Some(&(v, e)) = m.even.first() {
            let mut rest = m.clone();
            if e == 1 {
                rest.even.remove(0);
            } else {
                rest.even[0].1 -= 1;
            }
            (v as usize, rest)
        } else {
            let mut rest = m.clone();
            let v = rest.odd.remove(0);
            (v as usize, rest)
        };
        // (y rest) ★ g = y ★ (rest ★ g) - c Π(y, rest) ★ g
        let inner = self.star_monomial(&rest, g, memo);
        let mut out = self.left_mul_var(y, &inner);
        let correction = self.pi_var(y, &SuperPolynomial::from_terms(&self.vars, [(rest, GR::one())]));
        for (pm, pc) in correction.terms() {
            let t = self.star_monomial(pm, g, memo);
            out = &out - &t.scale(&(&self.c * pc));
        }
        memo.insert(m.clone(), out.clone());
        out
    }

    pub fn star(&self, f: &PhaseSymbol, g: &PhaseSymbol) -> PhaseSymbol {
        let mut memo = HashMap::new();
        let mut out = self.zero();
        for (m, c) in f.terms() {
            let t = self.star_monomial(m, g, &mut memo);
            out = &out + &t.scale(c);
        }
        out
    }

    /// Graded star commutator `f ★ g - (-1)^{|f||g|} g ★ f`, summed over
    /// parity components.
    pub fn commutator(&self, f: &PhaseSymbol, g: &PhaseSymbol) -> PhaseSymbol {
        let (f0, f1) = f.parity_parts();
        let (g0, g1) = g.parity_parts();
        let mut out = self.zero();
        for (a, a_odd) in [(&f0, false), (&f1, true)] {
            if a.is_zero() {
                continue;
            }
            for (b, b_odd) in [(&g0, false), (&g1, true)] {
                if b.is_zero() {
                    continue;
                }
                let ab = self.star(a, b);
                let ba = self.star(b, a);
                out = if a_odd && b_odd { &(&out + &ab) + &ba } else { &(&out + &ab) - &ba };
            }
        }
        out
    }

    /// Scalar `k` with `∂/∂q ↔ k·p` for the conjugate pair of momentum `p`.
    pub fn derivative_factor(&self, p: usize) -> GR {
        let s = self.partner[p].1;
        (&self.c * &GR::from_int(2 * s)).inv().expect("nonzero")
    }

    /// Weyl symbol of a differential operator written in normal order
    /// (coordinates left of derivatives), encoded as a polynomial whose
    /// momentum variables stand for derivatives by their conjugates.
    pub fn symbol_of_operator(&self, op: &PhaseSymbol) -> PhaseSymbol {
        let mut out = self.zero();
        for (m, c) in op.terms() {
            let mut coord = Monomial::one();
            let mut mom = Monomial::one();
            let mut factor = c.clone();
            for &(v, e) in &m.even {
                let target = if self.momentum[v as usize] { &mut mom } else { &mut coord };
                target.even.push((v, e));
                if self.momentum[v as usize] {
                    factor = &factor * &self.derivative_factor(v as usize).pow(e);
                }
            }
            for &v in &m.odd {
                if self.momentum[v as usize] {
                    mom.odd.push(v);
                    factor = &factor * &self.derivative_factor(v as usize);
                } else {
                    coord.odd.push(v);
                }
            }
            let (prod, negate) = coord.mul(&mom).expect("split of a valid monomial");
            debug_assert_eq!(&prod, m);
            if negate {
                factor = -factor;
            }
            let a = SuperPolynomial::from_terms(&self.vars, [(coord, GR::one())]);
            let b = SuperPolynomial::from_terms(&self.vars, [(mom, GR::one())]);
            out = &out + &self.star(&a, &b).scale(&factor);
        }
        out
    }

    /// Pairs `(i, j)` of presentation generators whose images fail
    /// `[x_i, x_j]★ = Σ_k c_ij^k x_k`, with the difference.
    pub fn realization_mismatches(
        &self,
        algebra: &Presentation,
        images: &[PhaseSymbol],
    ) -> Vec<(usize, usize, PhaseSymbol)> {
        let d = algebra.dim();
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
        pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let lhs = self.commutator(&images[i], &images[j]);
                let mut rhs = self.zero();
                for (&k, c) in algebra.basis_bracket(i, j) {
                    rhs = &rhs + &images[k].scale(c);
                }
                let diff = &lhs - &rhs;
                (!diff.is_zero()).then_some((i, j, diff))
            })
            .collect()
    }
}

/// The phase superspace with even `X^A, P_A` and odd `θ_i^A, π^i_A`,
/// `i = 1..s`, over the ambient indices `0, 0', 1..n` with
/// `η = diag(-1,-1,+1,..,+1)`. For `s = 0` this is the Weyl algebra `A_{n+2}`.
#[derive(Clone, Debug)]
pub struct AmbientSpace {
    n: usize,
    s: usize,
    names: Vec<String>,
    eta: Vec<i64>,
    space: PhaseSpace,
}

impl AmbientSpace {
    pub fn new(n: usize, s: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let (names, eta) = ambient_indices(n);
        let d = names.len();
        let mut vars: Vec<(String, Parity)> = Vec::new();
        vars.extend(names.iter().map(|a| (format!("X{a}"), Parity::Even)));
        vars.extend(names.iter().map(|a| (format!("P{a}"), Parity::Even)));
        for i in 1..=s {
            vars.extend(names.iter().map(|a| (format!("th{i}_{a}"), Parity::Odd)));
            vars.extend(names.iter().map(|a| (format!("pi{i}_{a}"), Parity::Odd)));
        }
        let mut pairs: Vec<(usize, usize)> = (0..d).map(|a| (a, d + a)).collect();
        for i in 0..s {
            let base = 2 * d + 2 * d * i;
            pairs.extend((0..d).map(|a| (base + a, base + d + a)));
        }
        let space = PhaseSpace::new(VariableTable::new(vars)?, &pairs)?;
        Ok(AmbientSpace { n, s, names, eta, space })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Number of ambient indices, `n + 2`.
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn eta(&self, a: usize) -> i64 {
        self.eta[a]
    }

    pub fn index_names(&self) -> &[String] {
        &self.names
    }

    pub fn space(&self) -> &PhaseSpace {
        &self.space
    }

    pub fn x(&self, a: usize) -> PhaseSymbol {
        self.space.var(a)
    }

    /// `P_A` (lower index).
    pub fn p(&self, a: usize) -> PhaseSymbol {
        self.space.var(self.dim() + a)
    }

    pub fn theta(&self, i: usize, a: usize) -> PhaseSymbol {
        assert!((1..=self.s).contains(&i));
        self.space.var(2 * self.dim() * i + a)
    }

    /// `π^i_A` (lower index).
    pub fn pi(&self, i: usize, a: usize) -> PhaseSymbol {
        assert!((1..=self.s).contains(&i));
        self.space.var(2 * self.dim() * i + self.dim() + a)
    }

    fn raise(&self, a: usize, v: PhaseSymbol) -> PhaseSymbol {
        v.scale(&GR::from_int(self.eta[a]))
    }

    /// `Z^A_α` with upper ambient index, `α` in the order
    /// `X, P, th1, pi1, .., ths, pis`.
    pub fn z(&self, alpha: usize, a: usize) -> PhaseSymbol {
        match alpha {
            0 => self.x(a),
            1 => self.raise(a, self.p(a)),
            _ if alpha.is_multiple_of(2) => self.theta(alpha / 2, a),
            _ => self.raise(a, self.pi(alpha / 2, a)),
        }
    }

    /// `L^{AB} = X^A P^B - X^B P^A`.
    pub fn l(&self, a: usize, b: usize) -> PhaseSymbol {
        &(&self.z(0, a) * &self.z(1, b)) - &(&self.z(0, b) * &self.z(1, a))
    }

    /// `J^{AB} = L^{AB} - Σ_i (θ_i^A π^{iB} - θ_i^B π^{iA})`, the bilinear
    /// `𝒥^{αβ} Z^A_α Z^B_β` for the graded inverse form (`𝒥^{XP} = 1`,
    /// `𝒥^{θπ} = 𝒥^{πθ} = -1`).
    pub fn j(&self, a: usize, b: usize) -> PhaseSymbol {
        let mut out = self.l(a, b);
        for i in 1..=self.s {
            let th = 2 * i;
            let f = &(&self.z(th, a) * &self.z(th + 1, b)) - &(&self.z(th, b) * &self.z(th + 1, a));
            out = &out - &f;
        }
        out
    }

    /// `T_{αβ} = η_{AB} Z^A_α Z^B_β`.
    pub fn t(&self, alpha: usize, beta: usize) -> PhaseSymbol {
        let mut out = self.space.zero();
        for a in 0..self.dim() {
            out = &out + &(&self.z(alpha, a) * &self.z(beta, a)).scale(&GR::from_int(self.eta[a]));
        }
        out
    }

    /// Images of the `o(n,2)` presentation basis `J(A,B)`, `A < B`:
    /// `J(A,B) ↦ -J^{AB}`.
    pub fn o_generators(&self) -> Vec<PhaseSymbol> {
        let d = self.dim();
        (0..d)
            .flat_map(|a| (a + 1..d).map(move |b| (a, b)))
            .map(|(a, b)| -&self.j(a, b))
            .collect()
    }

    /// Images of the `osp(2s|2)` presentation basis `t(α,β)`: `T_{αβ}`.
    pub fn osp_generators(&self) -> Vec<PhaseSymbol> {
        crate::liealg::SuperIndex { s: self.s }
            .pairs()
            .into_iter()
            .map(|(a, b)| self.t(a, b))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Two even pairs and one odd pair.
    fn small() -> PhaseSpace {
        let vars = VariableTable::new([
            ("q1", Parity::Even),
            ("q2", Parity::Even),
            ("p1", Parity::Even),
            ("p2", Parity::Even),
            ("th", Parity::Odd),
            ("pi", Parity::Odd),
        ])
        .unwrap();
        PhaseSpace::new(vars, &[(0, 2), (1, 3), (4, 5)]).unwrap()
    }

    fn arb_symbol(space: PhaseSpace) -> impl Strategy<Value = PhaseSymbol> {
        let terms = proptest::collection::vec(
            (proptest::collection::vec(0u32..3, 4), 0u8..4, -3i64..4),
            0..4,
        );
        terms.prop_map(move |ts| {
            let mut out = space.zero();
            for (exps, odd_mask, c) in ts {
                let mut total = 0;
                let mut even = Vec::new();
                for (v, e) in exps.into_iter().enumerate() {
                    let e = e.min(3 - total.min(3));
                    total += e;
                    if e > 0 {
                        even.push((v as u32, e));
                    }
                }
                let odd: Vec<u32> = [4u32, 5].into_iter().filter(|v| odd_mask >> (v - 4) & 1 == 1).collect();
                out.add_term(Monomial { even, odd }, GR::from_int(c));
            }
            out
        })
    }

    #[test]
    fn canonical_commutators() {
        let s = small();
        let (q, p, th, pi) = (s.var(0), s.var(2), s.var(4), s.var(5));
        assert_eq!(s.commutator(&q, &p), s.constant(GR::i()));
        assert_eq!(s.commutator(&th, &pi), s.constant(GR::i()));
        assert!(s.star(&th, &th).is_zero());
        assert_eq!(s.star(&s.constant(GR::one()), &q), q);
        assert_eq!(s.star(&q, &p), &(&q * &p) + &s.constant(GR::frac(1, 2) * GR::i()));
    }

    #[test]
    fn quadratic_commutator_is_poisson() {
        let s = small();
        let quads: Vec<PhaseSymbol> = vec![
            &s.var(0) * &s.var(2),
            &s.var(1) * &s.var(1),
            &s.var(4) * &s.var(5),
            &s.var(0) * &s.var(4),
        ];
        let cubic = &(&s.var(0) * &s.var(0)) * &(&s.var(3) * &s.var(5));
        for a in &quads {
            for b in quads.iter().chain([&cubic]) {
                assert_eq!(s.commutator(a, b), s.poisson(a, b).scale(&GR::i()), "{a} , {b}");
            }
        }
    }

    #[test]
    fn operator_dictionary() {
        let s = small();
        // d/dq1 ↔ i p1, d/dth ↔ -i pi
        assert_eq!(s.symbol_of_operator(&s.var(2)), s.var(2).scale(&GR::i()));
        assert_eq!(s.symbol_of_operator(&s.var(5)), s.var(5).scale(&-GR::i()));
        // q1 d/dq1 = i q1 p1 - 1/2 as a Weyl symbol
        let op = &s.var(0) * &s.var(2);
        let want = &(&s.var(0) * &s.var(2)).scale(&GR::i()) - &s.constant(GR::frac(1, 2));
        assert_eq!(s.symbol_of_operator(&op), want);
        // th d/dth = -i th pi + 1/2
        let op = &s.var(4) * &s.var(5);
        let want = &(&s.var(4) * &s.var(5)).scale(&-GR::i()) + &s.constant(GR::frac(1, 2));
        assert_eq!(s.symbol_of_operator(&op), want);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn star_is_associative(f in arb_symbol(small()), g in arb_symbol(small()), h in arb_symbol(small())) {
            let s = small();
            prop_assert_eq!(s.star(&s.star(&f, &g), &h), s.star(&f, &s.star(&g, &h)));
        }

        #[test]
        fn poisson_antisymmetry_and_leibniz(f in arb_symbol(small()), g in arb_symbol(small()), h in arb_symbol(small())) {
            let s = small();
            let (f, _) = f.parity_parts();
            let (g, _) = g.parity_parts();
            prop_assert_eq!(s.poisson(&f, &g), -&s.poisson(&g, &f));
            prop_assert!(s.poisson(&f, &f).is_zero());
            prop_assert_eq!(s.poisson(&f, &(&g * &h)), &(&s.poisson(&f, &g) * &h) + &(&g * &s.poisson(&f, &h)));
        }
    }

    #[test]
    fn ambient_layout() {
        let a = AmbientSpace::new(3, 1).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.space().vars().len(), 20);
        assert_eq!(a.space().vars().name(a.dim() + 1), "P0'");
        // {X^A, P_B} = δ
        assert_eq!(a.space().poisson(&a.x(2), &a.p(2)), a.space().constant(GR::one()));
        // {θ^A, π_A} = 1
        assert_eq!(a.space().poisson(&a.theta(1, 0), &a.pi(1, 0)), a.space().constant(GR::one()));
        // {Z^A_α, Z^B_β} = η^{AB} J_{αβ}
        let idx = crate::liealg::SuperIndex { s: 1 };
        for al in 0..4 {
            for be in 0..4 {
                for (x, y) in [(0, 0), (1, 1), (0, 1)] {
                    let got = a.space().poisson(&a.z(al, x), &a.z(be, y));
                    let want = if x == y { a.eta(x) * idx.form(al, be) } else { 0 };
                    assert_eq!(got, a.space().constant(GR::from_int(want)), "{al} {be} {x} {y}");
                }
            }
        }
    }
}
