//! The scalar singleton: the quotient of `V(n/2 - 1; 0)` by the submodule
//! generated by the trace vector `sum_i J+_i J+_i |0>`, with truncated matrix
//! realizations of o(n,2) on its low levels.

use std::collections::HashMap;
use std::sync::Arc;

use num_rational::BigRational;

use super::module::{binomial, level_basis, require_n, ModuleVector, RaisingMonomial, VermaModule};
use crate::error::{Error, Result};
use crate::exactcore::sparse::{Echelon, SparseVec};
use crate::exactcore::{rat, ExactMatrix, Ring, GR};
use crate::liealg::{compact_basis, Combo, Presentation};

/// `C(n+s-1, s) - C(n+s-3, s-2)`: dimension of level `s` of the quotient.
pub fn quotient_dim(n: usize, s: usize) -> u128 {
    let (n, s) = (n as i64, s as i64);
    binomial(n + s - 1, s) - binomial(n + s - 3, s - 2)
}

/// Trace submodule at level `t`: the span of `y^2 m` for `m` at level `t - 2`,
/// with `y^2 = sum_i J+_i J+_i`.
fn trace_echelon(n: usize, t: usize, pos: &HashMap<RaisingMonomial, usize>) -> Echelon {
    let mut ech = Echelon::new();
    if t < 2 {
        return ech;
    }
    for m in level_basis(n, t - 2) {
        let mut v = SparseVec::new();
        for i in 1..=n as u8 {
            let mut w = m.clone();
            w.push(i);
            w.push(i);
            w.sort_unstable();
            let k = pos[&w];
            let cur = v.remove(&k).unwrap_or_default();
            v.insert(k, &cur + &GR::one());
        }
        ech.insert(&v);
    }
    ech
}

struct Level {
    verma_basis: Vec<RaisingMonomial>,
    verma_pos: HashMap<RaisingMonomial, usize>,
    trace: Echelon,
    /// Quotient basis as positions in `verma_basis`.
    basis: Vec<usize>,
}

/// Low levels of the scalar singleton with its matrix realization.
pub struct SingletonQuotient {
    n: usize,
    lmax: usize,
    e0: BigRational,
    module: VermaModule<GR>,
    levels: Vec<Level>,
    offsets: Vec<usize>,
    level_of: Arc<Vec<usize>>,
    basis_ops: Vec<TruncatedOperator>,
}

impl SingletonQuotient {
    pub fn new(n: usize, lmax: usize) -> Result<Self> {
        Self::build(n, lmax, true)
    }

    /// Level structure only. The generator matrices are not assembled, so
    /// `basis_operator`, `represent` and `casimir` must not be used; `energy`
    /// works from the Verma action directly.
    pub fn levels_only(n: usize, lmax: usize) -> Result<Self> {
        Self::build(n, lmax, false)
    }

    fn build(n: usize, lmax: usize, with_operators: bool) -> Result<Self> {
        require_n(n)?;
        let e0 = rat(n as i64 - 2, 2);
        let module = VermaModule::new(n, GR::real(e0.clone()))?;
        // one level beyond lmax to certify invariance of the trace submodule
        let levels: Vec<Level> = (0..=lmax + 1)
            .map(|t| {
                let verma_basis = level_basis(n, t);
                let verma_pos: HashMap<_, _> =
                    verma_basis.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
                let trace = trace_echelon(n, t, &verma_pos);
                let basis = (0..verma_basis.len()).filter(|&k| !trace.is_pivot(k)).collect();
                Level {
                    verma_basis,
                    verma_pos,
                    trace,
                    basis,
                }
            })
            .collect();
        let mut offsets = vec![0];
        let mut level_of = Vec::new();
        for (t, l) in levels.iter().enumerate().take(lmax + 1) {
            offsets.push(offsets[t] + l.basis.len());
            level_of.extend(std::iter::repeat_n(t, l.basis.len()));
        }
        let mut q = SingletonQuotient {
            n,
            lmax,
            e0,
            module,
            levels,
            offsets,
            level_of: Arc::new(level_of),
            basis_ops: Vec::new(),
        };
        if with_operators {
            q.basis_ops = (0..q.module.algebra().dim()).map(|x| q.build_basis_op(x)).collect();
        }
        Ok(q)
    }

    /// Eigenvalue of `E` on level `t`, checked to be scalar on every quotient
    /// basis vector.
    pub fn energy(&mut self, t: usize) -> Result<GR> {
        let e = self.algebra().index_of("E").expect("E in compact basis");
        let mut value: Option<GR> = None;
        for k in self.levels[t].basis.clone() {
            let m = self.levels[t].verma_basis[k].clone();
            let img = self.module.act_basis(e, &m);
            let red = self.reduce(t, &img);
            let c = match (red.len(), red.get(&k)) {
                (1, Some(c)) => c.clone(),
                _ => return Err(Error::InvalidArgument(format!("E is not diagonal on level {t}"))),
            };
            match &value {
                None => value = Some(c),
                Some(v) if *v == c => {}
                Some(_) => return Err(Error::InvalidArgument(format!("E is not scalar on level {t}"))),
            }
        }
        value.ok_or_else(|| Error::InvalidArgument(format!("level {t} is empty")))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lmax(&self) -> usize {
        self.lmax
    }

    pub fn e0(&self) -> &BigRational {
        &self.e0
    }

    pub fn algebra(&self) -> &Presentation {
        self.module.algebra()
    }

    pub fn dim(&self) -> usize {
        self.offsets[self.lmax + 1]
    }

    pub fn level_dim(&self, t: usize) -> usize {
        self.levels[t].basis.len()
    }

    /// Quotient basis monomials of level `t`.
    pub fn level_monomials(&self, t: usize) -> Vec<RaisingMonomial> {
        let l = &self.levels[t];
        l.basis.iter().map(|&k| l.verma_basis[k].clone()).collect()
    }

    /// Coordinates of a level-`t` Verma vector in the quotient basis.
    fn reduce(&self, t: usize, v: &ModuleVector<GR>) -> SparseVec {
        let l = &self.levels[t];
        let sv: SparseVec = v.iter().map(|(m, c)| (l.verma_pos[m], c.clone())).collect();
        l.trace.reduce(&sv)
    }

    fn build_basis_op(&mut self, x: usize) -> TruncatedOperator {
        let shift = self.module.shift(x);
        let d = self.dim();
        let mut matrix = ExactMatrix::zeros(d, d);
        for t in 0..=self.lmax {
            let target = t as i64 + shift;
            if target < 0 || target as usize > self.lmax {
                continue;
            }
            let target = target as usize;
            for (col, &k) in self.levels[t].basis.iter().enumerate() {
                let m = self.levels[t].verma_basis[k].clone();
                let img = self.module.act_basis(x, &m);
                let red = self.reduce(target, &img);
                let qpos: HashMap<usize, usize> = self.levels[target]
                    .basis
                    .iter()
                    .enumerate()
                    .map(|(a, &b)| (b, a))
                    .collect();
                for (vk, c) in red {
                    let row = self.offsets[target] + qpos[&vk];
                    matrix.set(row, self.offsets[t] + col, c);
                }
            }
        }
        let trusted = if shift > 0 { self.lmax as i64 - shift } else { self.lmax as i64 };
        TruncatedOperator {
            matrix,
            shift,
            trusted,
            level_of: self.level_of.clone(),
        }
    }

    /// Whether every generator maps the trace submodule into itself on levels `<= lmax`.
    pub fn trace_submodule_invariant(&mut self) -> bool {
        let n = self.n;
        for t in 2..=self.lmax {
            for m in level_basis(n, t - 2) {
                let mut w = ModuleVector::new();
                for i in 1..=n as u8 {
                    let mut mm = m.clone();
                    mm.push(i);
                    mm.push(i);
                    mm.sort_unstable();
                    w.insert(mm, GR::one());
                }
                for x in 0..self.module.algebra().dim() {
                    let target = t as i64 + self.module.shift(x);
                    let img = self.module.act(&Combo::from([(x, GR::one())]), &w);
                    if img.is_empty() {
                        continue;
                    }
                    if !self.reduce(target as usize, &img).is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn basis_operator(&self, x: usize) -> &TruncatedOperator {
        self.basis_ops.get(x).expect("operators not assembled (levels_only)")
    }

    /// Matrix of an element of the compact presentation.
    pub fn represent(&self, elem: &Combo<GR>) -> TruncatedOperator {
        let mut out = TruncatedOperator::zero(self.level_of.clone(), self.lmax);
        for (&x, c) in elem {
            out = out.add(&self.basis_ops[x].scale(c));
        }
        out
    }

    /// Quadratic Casimir `sum_{A<B} eta^{AA} eta^{BB} J_AB J_AB` built from the
    /// ambient generators.
    pub fn casimir(&self) -> Result<TruncatedOperator> {
        let cb = compact_basis(self.n)?;
        let d = self.n + 2;
        let eta = |a: usize| if a < 2 { -1 } else { 1 };
        let mut out = TruncatedOperator::zero(self.level_of.clone(), self.lmax);
        let mut k = 0;
        for a in 0..d {
            for b in a + 1..d {
                let j = self.represent(&cb.change.to_new(&Combo::from([(k, GR::one())])));
                let sq = j.mul(&j)?;
                out = out.add(&sq.scale(&GR::from_int(eta(a) * eta(b))));
                k += 1;
            }
        }
        Ok(out)
    }

    pub fn level_range(&self, t: usize) -> std::ops::Range<usize> {
        self.offsets[t]..self.offsets[t + 1]
    }

    pub fn level_dims(&self) -> Vec<usize> {
        (0..=self.lmax).map(|t| self.level_dim(t)).collect()
    }
}

/// Matrix of an operator on levels `0..=lmax` of the quotient. Columns of
/// levels above `trusted` may be affected by truncation.
#[derive(Clone, Debug)]
pub struct TruncatedOperator {
    pub matrix: ExactMatrix<GR>,
    /// Largest level raise of any term.
    pub shift: i64,
    /// Highest column level on which the matrix is exact.
    pub trusted: i64,
    level_of: Arc<Vec<usize>>,
}

impl TruncatedOperator {
    fn zero(level_of: Arc<Vec<usize>>, lmax: usize) -> Self {
        let d = level_of.len();
        TruncatedOperator {
            matrix: ExactMatrix::zeros(d, d),
            shift: i64::MIN / 4,
            trusted: lmax as i64,
            level_of,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        TruncatedOperator {
            matrix: self.matrix.try_add(&other.matrix).expect("same shape"),
            shift: self.shift.max(other.shift),
            trusted: self.trusted.min(other.trusted),
            level_of: self.level_of.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-GR::one()))
    }

    pub fn scale(&self, c: &GR) -> Self {
        TruncatedOperator {
            matrix: self.matrix.scale(c),
            ..self.clone()
        }
    }

    /// `self * other`: apply `other` first.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(TruncatedOperator {
            matrix: self.matrix.try_mul(&other.matrix)?,
            shift: self.shift + other.shift,
            trusted: other.trusted.min(self.trusted - other.shift),
            level_of: self.level_of.clone(),
        })
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(other)?.sub(&other.mul(self)?))
    }

    /// Columns of level `t` (all rows); error if that level is not trusted.
    pub fn level_block(&self, t: usize) -> Result<ExactMatrix<GR>> {
        if t as i64 > self.trusted {
            return Err(Error::InteriorOnly {
                requested: t,
                trusted: self.trusted,
            });
        }
        let cols: Vec<usize> = (0..self.level_of.len()).filter(|&k| self.level_of[k] == t).collect();
        let rows: Vec<usize> = (0..self.level_of.len()).collect();
        Ok(self.matrix.submatrix(&rows, &cols))
    }

    /// Equality on every column of a level trusted by both operators.
    pub fn eq_interior(&self, other: &Self) -> Result<bool> {
        let t = self.trusted.min(other.trusted);
        if t < 0 {
            return Err(Error::InteriorOnly {
                requested: 0,
                trusted: t,
            });
        }
        Ok((0..=t as usize).all(|l| {
            self.level_block(l).ok() == other.level_block(l).ok()
        }))
    }

    /// If the level-`t` diagonal block is `c * identity` and nothing leaves
    /// the level, returns `c`.
    pub fn scalar_on_level(&self, t: usize) -> Result<Option<GR>> {
        let block = self.level_block(t)?;
        let start = self.level_of.iter().position(|&l| l == t).unwrap_or(0);
        let mut value: Option<GR> = None;
        for c in 0..block.cols() {
            for r in 0..block.rows() {
                let x = block.get(r, c);
                if r == start + c {
                    match &value {
                        None => value = Some(x.clone()),
                        Some(v) if v == x => {}
                        Some(_) => return Ok(None),
                    }
                } else if !x.is_zero() {
                    return Ok(None);
                }
            }
        }
        Ok(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::CompactIndex;

    #[test]
    fn level_dims_match_closed_form() {
        for n in 3..6 {
            let q = SingletonQuotient::new(n, 4).unwrap();
            for t in 0..=4 {
                assert_eq!(q.level_dim(t) as u128, quotient_dim(n, t));
            }
            // basis: monomials with at most one J+_1
            for t in 0..=4 {
                assert!(q.level_monomials(t).iter().all(|m| m.iter().filter(|&&i| i == 1).count() <= 1));
            }
        }
        assert_eq!(quotient_dim(3, 2), 5);
        assert_eq!(quotient_dim(4, 2), 9);
        assert_eq!(quotient_dim(7, 0), 1);
    }

    #[test]
    fn relations_and_casimir() {
        let n = 3;
        let mut q = SingletonQuotient::new(n, 3).unwrap();
        assert!(q.trace_submodule_invariant());
        let ix = CompactIndex { n };
        let e = q.basis_operator(ix.e());
        for t in 0..=3 {
            let v = e.scalar_on_level(t).unwrap().unwrap();
            assert_eq!(v, GR::real(rat(2 * t as i64 + 1, 2)));
        }
        let alg = q.algebra().clone();
        for x in 0..alg.dim() {
            for y in 0..alg.dim() {
                let lhs = q.basis_operator(x).commutator(q.basis_operator(y)).unwrap();
                let rhs = q.represent(alg.basis_bracket(x, y));
                assert!(lhs.eq_interior(&rhs).unwrap(), "{} {}", alg.label(x), alg.label(y));
            }
        }
        let c = q.casimir().unwrap();
        assert_eq!(c.trusted, 1);
        let expected = GR::frac(-5, 4);
        assert_eq!(c.scalar_on_level(0).unwrap(), Some(expected.clone()));
        assert_eq!(c.scalar_on_level(1).unwrap(), Some(expected));
        assert!(matches!(c.level_block(2), Err(Error::InteriorOnly { .. })));
    }
}
