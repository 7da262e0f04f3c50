//! Shapovalov (Gram) forms on Verma module levels.
//!
//! The adjoint is `E† = E`, `J(i,j)† = J(i,j)`, `(J+_i)† = J-_i`, with the form
//! antilinear in its first slot and `<0|0> = 1`. Then
//! `<J+_i a | b> = <a | J-_i b>`, which gives the level-by-level recursion used here.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;

use super::module::{level_basis, ModuleVector, RaisingMonomial, VermaModule};
use crate::error::Result;
use crate::exactcore::{ExactMatrix, Ring, UniPoly, GR};

/// Gram matrix of one level, indexed by `level_basis(n, level)`.
#[derive(Clone, Debug)]
pub struct GramMatrix<T: Ring> {
    pub n: usize,
    pub level: usize,
    pub basis: Vec<RaisingMonomial>,
    pub matrix: ExactMatrix<T>,
}

/// Gram matrices of levels `0..=max_level`.
pub fn gram_levels<T: Ring>(module: &mut VermaModule<T>, max_level: usize) -> Vec<GramMatrix<T>> {
    let n = module.n();
    let idx = module.index();
    let mut out: Vec<GramMatrix<T>> = vec![GramMatrix {
        n,
        level: 0,
        basis: vec![Vec::new()],
        matrix: ExactMatrix::identity(1),
    }];
    for l in 1..=max_level {
        let basis = level_basis(n, l);
        let prev = &out[l - 1];
        let prev_pos: HashMap<&RaisingMonomial, usize> =
            prev.basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
        // J-_i b for each i and b
        let lowered: Vec<Vec<ModuleVector<T>>> = (1..=n)
            .map(|i| basis.iter().map(|b| module.act_basis(idx.minus(i), b)).collect())
            .collect();
        let matrix = ExactMatrix::from_fn(basis.len(), basis.len(), |a, b| {
            let am = &basis[a];
            let i = am[0] as usize;
            let ap = prev_pos[&am[1..].to_vec()];
            let mut acc = T::zero();
            for (c, coef) in &lowered[i - 1][b] {
                let g = prev.matrix.get(ap, prev_pos[c]);
                if !g.is_zero() {
                    acc = acc + g.clone() * coef;
                }
            }
            acc
        });
        out.push(GramMatrix {
            n,
            level: l,
            basis,
            matrix,
        });
    }
    out
}

/// Symbolic Gram matrix of level `level`, entries polynomial in `E0`.
pub fn gram_matrix(n: usize, level: usize) -> Result<GramMatrix<UniPoly>> {
    let mut m = VermaModule::new(n, UniPoly::x())?;
    Ok(gram_levels(&mut m, level).pop().expect("level 0 present"))
}

/// Gram matrix at a numeric `E0`.
pub fn gram_matrix_at(n: usize, level: usize, e0: &BigRational) -> Result<GramMatrix<GR>> {
    let mut m = VermaModule::new(n, GR::real(e0.clone()))?;
    Ok(gram_levels(&mut m, level).pop().expect("level 0 present"))
}

/// Parity class of a monomial: bit `i` set when `J+_{i+1}` occurs an odd
/// number of times. Reflections `y_i -> -y_i` make the form block diagonal
/// in these classes.
fn parity_class(m: &RaisingMonomial) -> u64 {
    m.iter().fold(0u64, |acc, &i| acc ^ (1 << (i - 1)))
}

impl<T: Ring> GramMatrix<T> {
    /// Index sets of the diagonal blocks, each in basis order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (k, m) in self.basis.iter().enumerate() {
            classes.entry(parity_class(m)).or_default().push(k);
        }
        classes.into_values().collect()
    }

    pub fn is_block_diagonal(&self) -> bool {
        let cls: Vec<u64> = self.basis.iter().map(parity_class).collect();
        (0..self.basis.len()).all(|a| {
            (0..self.basis.len()).all(|b| cls[a] == cls[b] || self.matrix.get(a, b).is_zero())
        })
    }

    pub fn det(&self) -> Result<T> {
        let mut acc = T::one();
        for b in self.blocks() {
            acc = acc * &self.matrix.submatrix(&b, &b).det()?;
        }
        Ok(acc)
    }

    /// Leading principal minors of each diagonal block.
    pub fn block_minors(&self) -> Result<Vec<Vec<T>>> {
        self.blocks()
            .iter()
            .map(|b| self.matrix.submatrix(b, b).leading_minors())
            .collect()
    }

    /// `<v|w>` for vectors of this level.
    pub fn form(&self, v: &ModuleVector<T>, w: &ModuleVector<T>) -> T {
        let pos: HashMap<&RaisingMonomial, usize> =
            self.basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let mut acc = T::zero();
        for (a, x) in v {
            let Some(&ia) = pos.get(a) else { continue };
            for (b, y) in w {
                let Some(&ib) = pos.get(b) else { continue };
                let g = self.matrix.get(ia, ib);
                if !g.is_zero() {
                    acc = acc + x.conj() * y * g;
                }
            }
        }
        acc
    }
}

impl GramMatrix<UniPoly> {
    pub fn at(&self, e0: &GR) -> GramMatrix<GR> {
        GramMatrix {
            n: self.n,
            level: self.level,
            basis: self.basis.clone(),
            matrix: self.matrix.map(|p| p.eval(e0)),
        }
    }
}

impl GramMatrix<GR> {
    /// Kernel of the form, assembled from the kernels of the diagonal blocks.
    pub fn kernel(&self) -> Vec<ModuleVector<GR>> {
        let mut out = Vec::new();
        for b in self.blocks() {
            for v in self.matrix.submatrix(&b, &b).kernel_basis() {
                let mut mv = ModuleVector::new();
                for (k, c) in b.iter().zip(v) {
                    if !c.is_zero() {
                        mv.insert(self.basis[*k].clone(), c);
                    }
                }
                out.push(mv);
            }
        }
        out
    }

    /// Positive definiteness via Sylvester's criterion on every block.
    pub fn is_positive_definite(&self) -> Result<bool> {
        use num_traits::Signed;
        Ok(self
            .block_minors()?
            .iter()
            .flatten()
            .all(|m| m.is_real() && m.re.is_positive()))
    }
}

/// `<v|w>` for arbitrary vectors with polynomial coefficients; components at
/// different levels are orthogonal.
pub fn shapovalov(n: usize, v: &ModuleVector<UniPoly>, w: &ModuleVector<UniPoly>) -> Result<UniPoly> {
    let max_level = v.keys().chain(w.keys()).map(Vec::len).max().unwrap_or(0);
    let mut module = VermaModule::new(n, UniPoly::x())?;
    let grams = gram_levels(&mut module, max_level);
    let mut acc = UniPoly::default();
    for g in &grams {
        let pick = |u: &ModuleVector<UniPoly>| -> ModuleVector<UniPoly> {
            u.iter()
                .filter(|(m, _)| m.len() == g.level)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect()
        };
        acc = acc + g.form(&pick(v), &pick(w));
    }
    Ok(acc)
}

/// Kernel of the level-`level` Gram form at a numeric `E0`.
pub fn null_vectors(n: usize, level: usize, e0: &BigRational) -> Result<Vec<ModuleVector<GR>>> {
    Ok(gram_matrix_at(n, level, e0)?.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::{rat, rational_roots};

    #[test]
    fn low_levels() {
        let g0 = gram_matrix(3, 0).unwrap();
        assert_eq!(g0.matrix, ExactMatrix::identity(1));
        for n in 3..6 {
            let g1 = gram_matrix(n, 1).unwrap();
            let two_e0 = UniPoly::monomial(GR::from_int(2), 1);
            assert_eq!(g1.matrix, ExactMatrix::identity(n).scale(&two_e0));
        }
    }

    #[test]
    fn level_two_threshold() {
        for n in 3..6 {
            let g = gram_matrix(n, 2).unwrap();
            assert!(g.matrix == g.matrix.transpose());
            assert!(g.is_block_diagonal());
            let det = g.det().unwrap();
            let full = g.matrix.det().unwrap();
            assert_eq!(det, full);
            let roots = rational_roots(&det).unwrap();
            assert!(roots.contains(&rat(n as i64 - 2, 2)), "n={n}: {roots:?}");
        }
    }

    #[test]
    fn null_vector_is_trace() {
        let ker = null_vectors(3, 2, &rat(1, 2)).unwrap();
        assert_eq!(ker.len(), 1);
        let v = &ker[0];
        assert_eq!(v.len(), 3);
        let c = v[&vec![1, 1]].clone();
        assert_eq!(v[&vec![2, 2]], c);
        assert_eq!(v[&vec![3, 3]], c);
        assert!(null_vectors(3, 2, &rat(3, 1)).unwrap().is_empty());
        assert_eq!(null_vectors(4, 1, &rat(0, 1)).unwrap().len(), 4);
    }

    #[test]
    fn shapovalov_examples() {
        let v1 = ModuleVector::from([(vec![1u8], UniPoly::constant(GR::one()))]);
        let v2 = ModuleVector::from([(vec![2u8], UniPoly::constant(GR::one()))]);
        let vac = ModuleVector::from([(vec![], UniPoly::constant(GR::one()))]);
        assert_eq!(shapovalov(3, &v1, &v1).unwrap(), UniPoly::monomial(GR::from_int(2), 1));
        assert!(shapovalov(3, &v1, &v2).unwrap().coeffs().is_empty());
        assert_eq!(shapovalov(3, &vac, &vac).unwrap(), UniPoly::constant(GR::one()));
        assert!(shapovalov(3, &vac, &v1).unwrap().coeffs().is_empty());
        // antilinear in the first slot
        let iv = ModuleVector::from([(vec![1u8], UniPoly::constant(GR::i()))]);
        assert_eq!(
            shapovalov(3, &iv, &v1).unwrap(),
            UniPoly::monomial(&GR::i() * &GR::from_int(-2), 1)
        );
    }
}
