//! Dense matrices over an exact ring.

use std::fmt;

use super::scalar::{Ring, GR};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct ExactMatrix<T: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    hermitian: bool,
}

impl<T: Ring> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
            hermitian: false,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix {
            rows,
            cols,
            data,
            hermitian: false,
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            hermitian: false,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.hermitian = false;
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            hermitian: false,
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == self.get(j, i).conj()))
    }

    /// Set the Hermiticity flag after verifying it.
    pub fn mark_hermitian(mut self) -> Result<Self> {
        if !self.is_hermitian() {
            return Err(Error::InvalidArgument("matrix is not Hermitian".into()));
        }
        self.hermitian = true;
        Ok(self)
    }

    pub fn hermitian_flag(&self) -> bool {
        self.hermitian
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].clone() + a.clone() * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b)
            })
            .collect())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b).collect(),
            hermitian: false,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b).collect(),
            hermitian: false,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Square submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn det(&self) -> Result<T> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                    return Ok(T::zero());
                };
                m.swap(k, r);
                negate = !negate;
            }
            bareiss_step(&mut m, k, &prev);
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }

    /// Determinants of the leading k×k blocks, k = 1..n.
    pub fn leading_minors(&self) -> Result<Vec<T>> {
        self.require_square()?;
        let n = self.rows;
        let mut m: Vec<Vec<T>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut out = Vec::with_capacity(n);
        let mut prev = T::one();
        for k in 0..n {
            // without pivoting, m[k][k] is the (k+1)-th leading minor
            out.push(m[k][k].clone());
            if m[k][k].is_zero() {
                let idx: Vec<usize> = (0..n).collect();
                for j in k + 2..=n {
                    out.push(self.submatrix(&idx[..j], &idx[..j]).det()?);
                }
                return Ok(out);
            }
            if k + 1 < n {
                bareiss_step(&mut m, k, &prev);
                prev = m[k][k].clone();
            }
        }
        Ok(out)
    }
}

fn bareiss_step<T: Ring>(m: &mut [Vec<T>], k: usize, prev: &T) {
    let n = m.len();
    let cols = m[k].len();
    let (top, bottom) = m.split_at_mut(k + 1);
    let pivot_row = &top[k];
    for row in bottom.iter_mut().take(n - k - 1) {
        let lead = row[k].clone();
        for j in k + 1..cols {
            let v = row[j].clone() * &pivot_row[k] - lead.clone() * &pivot_row[j];
            row[j] = v.exact_div(prev).expect("Bareiss division is exact");
        }
        row[k] = T::zero();
    }
}

impl ExactMatrix<GR> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m: Vec<Vec<GR>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].inv().expect("nonzero pivot");
            for x in m[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    let pivot_row = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row).skip(c) {
                        if !y.is_zero() {
                            *x = &*x - &(&f * y);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let out = ExactMatrix::from_rows(m).unwrap_or_else(|_| Self::zeros(0, self.cols));
        (out, pivots)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                GR::one()
            } else {
                GR::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::InvalidArgument("matrix is singular".into()));
        }
        Ok(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<GR>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![GR::zero(); self.cols];
                v[f] = GR::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }
}

impl<T: Ring> fmt::Debug for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::unipoly::UniPoly;
    use proptest::prelude::*;

    fn cofactor_det(m: &ExactMatrix<GR>) -> GR {
        let n = m.rows();
        if n == 0 {
            return GR::one();
        }
        let mut acc = GR::zero();
        for j in 0..n {
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let term = m.get(0, j) * &cofactor_det(&m.submatrix(&rows, &cols));
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = ExactMatrix<GR>> {
        (1..=max).prop_flat_map(|n| {
            prop::collection::vec((-5i64..=5, 1i64..=4, -3i64..=3), n * n).prop_map(move |v| {
                ExactMatrix::from_fn(n, n, |i, j| {
                    let (a, b, c) = v[i * n + j];
                    &GR::frac(a, b) + &(&GR::i() * &GR::frac(c, b))
                })
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(m in small_matrix(5)) {
            prop_assert_eq!(m.det().unwrap(), cofactor_det(&m));
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in small_matrix(4)) {
            // make it singular by duplicating a column combination
            let n = m.cols();
            let mut m = m;
            if n > 1 {
                for i in 0..m.rows() {
                    let v = m.get(i, 0) + &m.get(i, 1).clone();
                    m.set(i, n - 1, v);
                }
            }
            let ker = m.kernel_basis();
            prop_assert_eq!(ker.len(), n - m.rank());
            for v in ker {
                prop_assert!(m.mul_vec(&v).unwrap().iter().all(Ring::is_zero));
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(ExactMatrix::<GR>::identity(3).det().unwrap(), GR::one());
        let e0 = UniPoly::x().scale(&GR::from_int(2));
        let d = ExactMatrix::from_fn(2, 2, |i, j| if i == j { e0.clone() } else { UniPoly::default() });
        assert_eq!(d.det().unwrap(), UniPoly::monomial(GR::from_int(4), 2));
        assert_eq!(ExactMatrix::<GR>::zeros(2, 2).kernel_basis().len(), 2);
        assert!(ExactMatrix::<GR>::identity(3).kernel_basis().is_empty());
        assert_eq!(
            ExactMatrix::<GR>::zeros(2, 3).det(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn leading_minors_with_zero_pivot() {
        let m = ExactMatrix::from_rows(vec![
            vec![GR::zero(), GR::one(), GR::zero()],
            vec![GR::one(), GR::zero(), GR::zero()],
            vec![GR::zero(), GR::zero(), GR::from_int(3)],
        ])
        .unwrap();
        assert_eq!(
            m.leading_minors().unwrap(),
            vec![GR::zero(), GR::from_int(-1), GR::from_int(-3)]
        );
    }

    #[test]
    fn hermitian_flag_is_verified() {
        let h = ExactMatrix::from_rows(vec![vec![GR::one(), GR::i()], vec![-GR::i(), GR::one()]]).unwrap();
        assert!(h.clone().mark_hermitian().unwrap().hermitian_flag());
        let nh = ExactMatrix::from_rows(vec![vec![GR::one(), GR::i()], vec![GR::i(), GR::one()]]).unwrap();
        assert!(nh.mark_hermitian().is_err());
    }
}
