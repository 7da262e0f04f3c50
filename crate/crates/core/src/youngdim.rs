//! Young diagram combinatorics: gl(N) and o(N) irrep dimensions, unitarity
//! bounds and singleton labels of o(n,2), and the diagram content of the
//! adjoint module of the higher-spin algebra.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactcore::{fmt_rational, serialize_rational};

/// Partition with non-increasing positive rows. The empty diagram labels the
/// trivial module.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    /// Trailing zero rows are dropped; increasing rows are an error.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if let Some(w) = rows.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidDiagram(format!(
                "rows must be non-increasing, found {} before {}",
                w[0], w[1]
            )));
        }
        if rows.contains(&0) {
            return Err(Error::InvalidDiagram("zero row in the middle".into()));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    /// `rows` copies of `width`.
    pub fn rectangle(width: usize, rows: usize) -> Self {
        if width == 0 {
            return YoungDiagram::empty();
        }
        YoungDiagram { rows: vec![width; rows] }
    }

    /// Diagram with the given column lengths.
    pub fn from_columns(cols: &[usize]) -> Result<Self> {
        YoungDiagram::new(Self::conjugate(cols)).and_then(|d| {
            if d.columns() == cols {
                Ok(d)
            } else {
                Err(Error::InvalidDiagram(format!("columns {cols:?} are not non-increasing")))
            }
        })
    }

    fn conjugate(rows: &[usize]) -> Vec<usize> {
        let width = rows.first().copied().unwrap_or(0);
        (0..width).map(|j| rows.iter().filter(|&&r| r > j).count()).collect()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn columns(&self) -> Vec<usize> {
        Self::conjugate(&self.rows)
    }

    pub fn boxes(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Hook length of box `(i, j)`, zero-based.
    fn hook(&self, cols: &[usize], i: usize, j: usize) -> usize {
        self.rows[i] - j + cols[j] - i - 1
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    /// Accepts `2,2`, `[2,2]` and `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(YoungDiagram::empty());
        }
        let rows = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row length '{}' in '{s}'", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        YoungDiagram::new(rows)
    }
}

fn to_u128(x: &BigInt) -> Result<u128> {
    x.to_u128()
        .ok_or_else(|| Error::InvalidArgument(format!("dimension {x} does not fit in u128")))
}

/// Dimension of the gl(N) irrep via the hook-content formula. Diagrams with
/// more than `N` rows give 0.
pub fn gl_dim(d: &YoungDiagram, n: usize) -> Result<u128> {
    let cols = d.columns();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &r) in d.rows.iter().enumerate() {
        for j in 0..r {
            num *= BigInt::from(n as i64 + j as i64 - i as i64);
            den *= BigInt::from(d.hook(&cols, i, j));
        }
    }
    to_u128(&(num / den))
}

/// Checks `ℓ'_1 + ℓ'_2 <= N` and returns the highest weight of the o(N)
/// Lie algebra module carried by the diagram, padded to rank `N/2`. Diagrams
/// with more than `N/2` rows are replaced by their associate (first column
/// `ℓ'_1 -> N - ℓ'_1`).
fn orthogonal_weight(d: &YoungDiagram, n: usize) -> Result<Vec<usize>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("o(N) needs N >= 3, got {n}")));
    }
    let mut cols = d.columns();
    let c1 = cols.first().copied().unwrap_or(0);
    let c2 = cols.get(1).copied().unwrap_or(0);
    if c1 + c2 > n {
        return Err(Error::InvalidDiagram(format!(
            "{d} is not an o({n}) diagram: first two columns have {c1} + {c2} > {n} boxes"
        )));
    }
    let rank = n / 2;
    if c1 > rank {
        cols[0] = n - c1;
    }
    let mut weight = YoungDiagram::conjugate(&cols);
    weight.resize(rank, 0);
    Ok(weight)
}

/// Dimension of the o(N) irrep labelled by `d` (Weyl dimension formula over
/// the B or D root system). For even `N` and `N/2` rows this is one of the
/// two chiral halves.
pub fn o_dim(d: &YoungDiagram, n: usize) -> Result<u128> {
    let weight = orthogonal_weight(d, n)?;
    let rank = weight.len();
    let odd = n % 2 == 1;
    // twice rho for B_r (half-integral), rho itself for D_r
    let rho: Vec<i64> = (0..rank)
        .map(|i| if odd { 2 * (rank - i) as i64 - 1 } else { (rank - i - 1) as i64 })
        .collect();
    let shifted: Vec<i64> = (0..rank)
        .map(|i| rho[i] + if odd { 2 } else { 1 } * weight[i] as i64)
        .collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..rank {
        for j in i + 1..rank {
            num *= BigInt::from(shifted[i] * shifted[i] - shifted[j] * shifted[j]);
            den *= BigInt::from(rho[i] * rho[i] - rho[j] * rho[j]);
        }
        if odd {
            num *= BigInt::from(shifted[i]);
            den *= BigInt::from(rho[i]);
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    to_u128(&q)
}

fn half_integer_spin(s: &BigRational) -> Result<u64> {
    let two_s = s * BigInt::from(2);
    if s.is_negative() || !two_s.is_integer() {
        return Err(Error::InvalidArgument(format!(
            "spin must be a non-negative half-integer, got {}",
            fmt_rational(s)
        )));
    }
    two_s
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument("spin too large".into()))
}

fn half(n: usize) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundCase {
    /// Trivial ground state: `E0 = 0` or `|E0| >= n/2 - 1`.
    Scalar,
    /// Spinor ground state: `|E0| >= (n-1)/2`.
    Spinor,
    /// Leading rectangle of `k` rows of length `[s]`: `|E0| >= s + n - k - 1`.
    General,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitarityBound {
    pub n: usize,
    pub case: BoundCase,
    #[serde(serialize_with = "serialize_rational")]
    pub spin: BigRational,
    /// Height of the leading rectangle.
    pub k: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub bound: BigRational,
}

impl UnitarityBound {
    /// `τ = |E0| - s`.
    pub fn twist(&self, e0: &BigRational) -> BigRational {
        e0.abs() - &self.spin
    }

    pub fn is_unitary(&self, e0: &BigRational) -> bool {
        e0.abs() >= self.bound || (self.case == BoundCase::Scalar && e0.is_zero())
    }
}

/// Lowest energy bound for an extremal weight unitary module of o(n,2) whose
/// ground states carry the o(n) irrep `diagram` (tensorial, or spinorial when
/// `spinorial` is set).
pub fn unitarity_bound(n: usize, diagram: &YoungDiagram, spinorial: bool) -> Result<UnitarityBound> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    if diagram.num_rows() > n / 2 {
        return Err(Error::InvalidDiagram(format!(
            "{diagram} has more than {} rows",
            n / 2
        )));
    }
    let extra = if spinorial { half(1) } else { BigRational::zero() };
    let Some(&top) = diagram.rows().first() else {
        let (case, bound) = if spinorial {
            (BoundCase::Spinor, half(n - 1))
        } else {
            (BoundCase::Scalar, half(n) - BigRational::one())
        };
        return Ok(UnitarityBound { n, case, spin: extra, k: 0, bound });
    };
    let k = diagram.rows().iter().take_while(|&&r| r == top).count();
    let spin = BigRational::from_integer(top.into()) + extra;
    let bound = &spin + BigRational::from_integer((n - k - 1).into());
    let b = UnitarityBound { n, case: BoundCase::General, spin, k, bound };
    if 2 * k == n {
        debug_assert_eq!(b.twist(&b.bound), half(n) - BigRational::one());
    }
    Ok(b)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingletonLabel {
    pub n: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub s: BigRational,
    pub name: String,
    #[serde(serialize_with = "serialize_rational")]
    pub e0: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub twist: BigRational,
    /// o(n) label of the ground states, `[s]` in each of `[n/2]` rows.
    pub ground: YoungDiagram,
    pub spinorial: bool,
    /// Little group label `[s]^{n/2-1}` of the massless Poincaré module
    /// (even `n` only).
    pub poincare_label: Option<YoungDiagram>,
    /// Lowest energy of the same-spin singleton of the one dimension lower
    /// anti de Sitter space, `s + (n-1)/2 - 1`.
    #[serde(serialize_with = "serialize_rational")]
    pub lower_ads_e0: BigRational,
}

pub fn singleton_label(n: usize, s: &BigRational) -> Result<SingletonLabel> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    let two_s = half_integer_spin(s)?;
    if n % 2 == 1 && two_s > 1 {
        return Err(Error::InvalidArgument(format!(
            "odd n = {n} only has the s = 0 and s = 1/2 singletons"
        )));
    }
    let floor = (two_s / 2) as usize;
    let e0 = s + half(n) - BigRational::one();
    let ground = YoungDiagram::rectangle(floor, n / 2);
    let name = match two_s {
        0 => "Rac".to_string(),
        1 => "Di".to_string(),
        _ => format!("spin-{}", fmt_rational(s)),
    };
    let lower_ads_e0 = s + half(n - 1) - BigRational::one();
    assert_ne!(e0, lower_ads_e0);
    let twist = &e0 - s;
    Ok(SingletonLabel {
        n,
        s: s.clone(),
        name,
        twist,
        ground,
        spinorial: two_s % 2 == 1,
        poincare_label: n.is_multiple_of(2).then(|| YoungDiagram::rectangle(floor, n / 2 - 1)),
        lower_ads_e0,
        e0,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BranchingEntry {
    pub t: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub energy: BigRational,
    pub diagram: YoungDiagram,
    pub spinorial: bool,
    /// Absent for spinorial diagrams.
    pub dim: Option<u128>,
    pub multiplicity: usize,
}

/// o(n) content of the spin-`s` singleton: the diagram `([s]+t, [s], ..., [s])`
/// at energy `s + t + n/2 - 1`, each with multiplicity one.
pub fn branching_table(n: usize, s: &BigRational, tmax: usize) -> Result<Vec<BranchingEntry>> {
    let label = singleton_label(n, s)?;
    let floor = label.ground.rows().first().copied().unwrap_or(0);
    (0..=tmax)
        .into_par_iter()
        .map(|t| {
            let mut rows = vec![floor; (n / 2).max(1)];
            rows[0] += t;
            let diagram = YoungDiagram::new(rows)?;
            let dim = if label.spinorial { None } else { Some(o_dim(&diagram, n)?) };
            Ok(BranchingEntry {
                t,
                energy: &label.e0 + BigRational::from_integer(t.into()),
                diagram,
                spinorial: label.spinorial,
                dim,
                multiplicity: 1,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HsDiagram {
    pub diagram: YoungDiagram,
    /// Set when the tallest column counted twice exceeds `n + 2`, so the
    /// diagram is excluded under that reading of the column-pair rule.
    pub ambiguous: bool,
}

/// o(n+2) diagrams in the adjoint module of the spin-`s` higher-spin algebra
/// with at most `max_boxes` boxes: even column lengths, distinct column pairs
/// of total length at most `n + 2`, and all columns after the `2s`-th of
/// length two. Sorted by box count, then rows.
pub fn hs_adjoint_diagrams(n: usize, s: &BigRational, max_boxes: usize) -> Result<Vec<HsDiagram>> {
    let two_s = half_integer_spin(s)? as usize;
    let big_n = n + 2;

    fn rec(
        cols: &mut Vec<usize>,
        boxes: usize,
        two_s: usize,
        big_n: usize,
        max_boxes: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(cols.clone());
        let j = cols.len();
        let cap = cols.last().copied().unwrap_or(big_n);
        let mut len = 2;
        while len <= cap && boxes + len <= max_boxes {
            let tail_ok = j < two_s || len == 2;
            let pair_ok = j == 0 || cols[0] + len <= big_n;
            if tail_ok && pair_ok {
                cols.push(len);
                rec(cols, boxes + len, two_s, big_n, max_boxes, out);
                cols.pop();
            }
            len += 2;
        }
    }

    let mut found = Vec::new();
    rec(&mut Vec::new(), 0, two_s, big_n, max_boxes, &mut found);
    let mut out = found
        .iter()
        .map(|cols| {
            Ok(HsDiagram {
                diagram: YoungDiagram::from_columns(cols)?,
                ambiguous: cols.first().is_some_and(|&c| 2 * c > big_n),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| (a.diagram.boxes(), &a.diagram).cmp(&(b.diagram.boxes(), &b.diagram)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;
    use proptest::prelude::*;

    fn yd(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    fn binom(n: i64, k: i64) -> i64 {
        if k < 0 || n < k {
            return 0;
        }
        (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
    }

    /// Semistandard tableaux counted by brute force.
    fn ssyt_count(rows: &[usize], n: usize) -> u128 {
        let cells: Vec<(usize, usize)> = rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
            .collect();
        fn fill(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize) -> u128 {
            if k == cells.len() {
                return 1;
            }
            let (i, j) = cells[k];
            let lo_row = if j > 0 { grid[i][j - 1] } else { 1 };
            let lo_col = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
            let mut total = 0;
            for v in lo_row.max(lo_col)..=n {
                grid[i][j] = v;
                total += fill(k + 1, cells, grid, n);
            }
            total
        }
        let mut grid: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r]).collect();
        fill(0, &cells, &mut grid, n)
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("[2,2]".parse::<YoungDiagram>().unwrap(), yd(&[2, 2]));
        assert_eq!("3, 1".parse::<YoungDiagram>().unwrap().to_string(), "[3,1]");
        assert!("[]".parse::<YoungDiagram>().unwrap().is_empty());
        assert!("1,2".parse::<YoungDiagram>().is_err());
        assert!("a".parse::<YoungDiagram>().is_err());
        assert_eq!(yd(&[3, 1]).columns(), vec![2, 1, 1]);
        assert_eq!(YoungDiagram::from_columns(&[2, 1, 1]).unwrap(), yd(&[3, 1]));
        assert!(YoungDiagram::from_columns(&[1, 2]).is_err());
    }

    #[test]
    fn gl_examples() {
        assert_eq!(gl_dim(&yd(&[1]), 7).unwrap(), 7);
        assert_eq!(gl_dim(&yd(&[1, 1]), 4).unwrap(), 6);
        assert_eq!(gl_dim(&yd(&[2, 2]), 4).unwrap(), 20);
        assert_eq!(gl_dim(&yd(&[1, 1, 1]), 2).unwrap(), 0);
        assert_eq!(gl_dim(&YoungDiagram::empty(), 3).unwrap(), 1);
    }

    #[test]
    fn gl_matches_tableaux() {
        let shapes: [&[usize]; 7] = [&[2], &[1, 1], &[2, 1], &[3, 1], &[2, 2], &[2, 1, 1], &[3, 2]];
        for n in 1..=4 {
            for rows in shapes {
                assert_eq!(gl_dim(&yd(rows), n).unwrap(), ssyt_count(rows, n), "{rows:?} N={n}");
            }
        }
    }

    #[test]
    fn o_examples() {
        assert_eq!(o_dim(&yd(&[1, 1]), 5).unwrap(), 10);
        assert_eq!(o_dim(&yd(&[2, 2]), 5).unwrap(), 35);
        assert_eq!(o_dim(&YoungDiagram::empty(), 6).unwrap(), 1);
        assert!(o_dim(&yd(&[1, 1, 1]), 5).is_ok());
        assert!(o_dim(&yd(&[2, 2, 1, 1]), 5).is_err());
        assert!(o_dim(&yd(&[1]), 2).is_err());
    }

    #[test]
    fn one_row_closed_form() {
        for n in 3..=12 {
            for s in 0..=12 {
                let want = binom(n + s - 1, s) - binom(n + s - 3, s - 2);
                assert_eq!(o_dim(&yd(&[s as usize]), n as usize).unwrap(), want as u128);
            }
        }
    }

    #[test]
    fn columns_are_exterior_powers() {
        for n in 3..=12usize {
            for k in 1..=n {
                let full = binom(n as i64, k as i64) as u128;
                let want = if 2 * k == n { full / 2 } else { full };
                assert_eq!(o_dim(&yd(&vec![1; k]), n).unwrap(), want, "k={k} N={n}");
            }
        }
    }

    /// Littlewood restriction gl(N) -> o(N) for small shapes:
    /// [2,1] = o[2,1] + o[1], [2,2] = o[2,2] + o[2] + o[],
    /// [3,1] = o[3,1] + o[2] + o[1,1], [3,3] = o[3,3] + o[3,1] + o[1,1].
    #[test]
    fn two_row_littlewood() {
        for n in 5..=12 {
            let g = |r: &[usize]| gl_dim(&yd(r), n).unwrap();
            let o = |r: &[usize]| o_dim(&yd(r), n).unwrap();
            assert_eq!(g(&[2, 1]), o(&[2, 1]) + o(&[1]));
            assert_eq!(g(&[2, 2]), o(&[2, 2]) + o(&[2]) + o(&[]));
            assert_eq!(g(&[3, 1]), o(&[3, 1]) + o(&[2]) + o(&[1, 1]));
            assert_eq!(g(&[3, 3]), o(&[3, 3]) + o(&[3, 1]) + o(&[1, 1]));
        }
    }

    proptest! {
        #[test]
        fn gl_bounds_o(rows in proptest::collection::vec(1usize..4, 0..3), n in 5usize..10) {
            let mut rows = rows;
            rows.sort_unstable_by(|a, b| b.cmp(a));
            let d = YoungDiagram::new(rows).unwrap();
            prop_assert!(gl_dim(&d, n).unwrap() >= o_dim(&d, n).unwrap());
        }
    }

    #[test]
    fn bounds() {
        let b = unitarity_bound(3, &YoungDiagram::empty(), false).unwrap();
        assert_eq!(b.bound, rat(1, 2));
        assert!(b.is_unitary(&rat(0, 1)));
        assert!(!b.is_unitary(&rat(1, 4)));
        assert_eq!(unitarity_bound(5, &YoungDiagram::empty(), true).unwrap().bound, rat(2, 1));
        let b = unitarity_bound(4, &yd(&[3, 3]), false).unwrap();
        assert_eq!((b.k, b.bound.clone()), (2, rat(4, 1)));
        assert_eq!(b.twist(&b.bound), rat(1, 1));
        let b = unitarity_bound(6, &yd(&[2, 1]), false).unwrap();
        assert_eq!(b.bound, rat(6, 1));
        assert!(unitarity_bound(4, &yd(&[1, 1, 1]), false).is_err());
    }

    #[test]
    fn singleton_labels() {
        let rac = singleton_label(3, &rat(0, 1)).unwrap();
        assert_eq!((rac.name.as_str(), rac.e0.clone()), ("Rac", rat(1, 2)));
        let di = singleton_label(3, &rat(1, 2)).unwrap();
        assert_eq!((di.name.as_str(), di.e0.clone()), ("Di", rat(1, 1)));
        assert!(di.spinorial);
        let v = singleton_label(4, &rat(1, 1)).unwrap();
        assert_eq!(v.e0, rat(2, 1));
        assert_eq!(v.ground, yd(&[1, 1]));
        assert_eq!(v.poincare_label, Some(yd(&[1])));
        assert_eq!(v.twist, rat(1, 1));
        assert!(singleton_label(5, &rat(1, 1)).is_err());
        assert!(singleton_label(4, &rat(1, 3)).is_err());
        // saturates the general bound with k = n/2
        for n in [4usize, 6, 8] {
            for s in 1..4 {
                let l = singleton_label(n, &rat(s, 1)).unwrap();
                assert_eq!(unitarity_bound(n, &l.ground, false).unwrap().bound, l.e0);
            }
        }
    }

    #[test]
    fn branching_tables() {
        let rows = branching_table(3, &rat(0, 1), 4).unwrap();
        let dims: Vec<u128> = rows.iter().map(|r| r.dim.unwrap()).collect();
        assert_eq!(dims, vec![1, 3, 5, 7, 9]);
        assert_eq!(rows[1].energy, rat(3, 2));
        let rows = branching_table(4, &rat(1, 1), 2).unwrap();
        assert_eq!(rows[0].diagram, yd(&[1, 1]));
        assert_eq!(rows[0].energy, rat(2, 1));
        assert_eq!(rows[2].diagram, yd(&[3, 1]));
        let di = branching_table(5, &rat(1, 2), 1).unwrap();
        assert_eq!(di[0].energy, rat(2, 1));
        assert_eq!(di[0].dim, None);
        for n in 3..=8 {
            let l = singleton_label(n, &rat(0, 1)).unwrap();
            assert_eq!(branching_table(n, &rat(0, 1), 0).unwrap()[0].energy, l.e0);
        }
    }

    #[test]
    fn hs_scalar_is_two_row_rectangles() {
        for n in 3..=8 {
            for b in 0..=12 {
                let got: Vec<YoungDiagram> =
                    hs_adjoint_diagrams(n, &rat(0, 1), b).unwrap().into_iter().map(|h| h.diagram).collect();
                let want: Vec<YoungDiagram> = (0..=b / 2).map(|m| YoungDiagram::rectangle(m, 2)).collect();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn hs_spin_one() {
        let list = hs_adjoint_diagrams(4, &rat(1, 1), 12).unwrap();
        let diagrams: Vec<&YoungDiagram> = list.iter().map(|h| &h.diagram).collect();
        assert!(!diagrams.contains(&&yd(&[2, 2, 2, 2])));
        assert!(diagrams.contains(&&yd(&[2, 2, 1, 1])));
        assert!(diagrams.contains(&&yd(&[3, 3, 1, 1])));
        assert!(!diagrams.contains(&&yd(&[3, 3, 2, 2])));
        assert!(!diagrams.contains(&&yd(&[2, 2, 2, 2, 2, 2])));
        assert!(!diagrams.contains(&&yd(&[3, 3, 3, 3])));
        for h in &list {
            let cols = h.diagram.columns();
            assert!(cols.iter().all(|c| c % 2 == 0));
            assert!(cols.iter().skip(2).all(|&c| c == 2));
            assert!(o_dim(&h.diagram, 6).is_ok());
            assert_eq!(h.ambiguous, cols.first().is_some_and(|&c| c > 3));
        }
        // single column of height 6 is allowed only when counted once
        let tall = list.iter().find(|h| h.diagram == yd(&[1; 6])).unwrap();
        assert!(tall.ambiguous);
    }
}
