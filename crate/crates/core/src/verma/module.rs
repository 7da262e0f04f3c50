//! The scalar Verma module `V(E0; 0)` of o(n,2), spanned by commuting raising
//! monomials `J+_{i1} .. J+_{iL} |E0; 0>`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::exactcore::{Ring, GR};
use crate::liealg::{compact_basis, CompactIndex, Combo, Presentation};

/// Sorted multiset of indices in `1..=n`; the empty monomial is the vacuum.
pub type RaisingMonomial = Vec<u8>;

pub type ModuleVector<T> = BTreeMap<RaisingMonomial, T>;

pub fn add_scaled<T: Ring>(acc: &mut ModuleVector<T>, c: &T, v: &ModuleVector<T>) {
    for (m, x) in v {
        let delta = c.clone() * x;
        if delta.is_zero() {
            continue;
        }
        let e = acc.entry(m.clone()).or_insert_with(T::zero);
        *e = e.clone() + &delta;
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

pub fn monomial_label(m: &RaisingMonomial) -> String {
    if m.is_empty() {
        return "|0>".into();
    }
    let parts: Vec<String> = m.iter().map(|i| format!("J+{i}")).collect();
    format!("{}|0>", parts.join("*"))
}

/// All monomials of level `l` over `1..=n`, in lexicographic order.
pub fn level_basis(n: usize, l: usize) -> Vec<RaisingMonomial> {
    fn rec(n: u8, l: usize, start: u8, cur: &mut Vec<u8>, out: &mut Vec<RaisingMonomial>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(n, l, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u8, l, 1, &mut Vec::with_capacity(l), &mut out);
    out
}

pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    (0..k).fold(1u128, |acc, j| acc * (n - j) / (j + 1))
}

pub fn require_n(n: usize) -> Result<()> {
    if !(3..=60).contains(&n) {
        return Err(Error::InvalidArgument(format!("n must lie in 3..=60, got {n}")));
    }
    Ok(())
}

fn insert_sorted(m: &[u8], k: u8) -> RaisingMonomial {
    let pos = m.partition_point(|&x| x < k);
    let mut out = Vec::with_capacity(m.len() + 1);
    out.extend_from_slice(&m[..pos]);
    out.push(k);
    out.extend_from_slice(&m[pos..]);
    out
}

/// The Verma module with lowest energy `e0` in a coefficient ring `T`:
/// `GR` for a numeric value, `UniPoly` for a symbolic one.
pub struct VermaModule<T: Ring> {
    n: usize,
    e0: T,
    algebra: Presentation,
    idx: CompactIndex,
    memo: HashMap<(usize, RaisingMonomial), ModuleVector<T>>,
}

impl<T: Ring> VermaModule<T> {
    pub fn new(n: usize, e0: T) -> Result<Self> {
        require_n(n)?;
        Ok(VermaModule {
            n,
            e0,
            algebra: compact_basis(n)?.presentation,
            idx: CompactIndex { n },
            memo: HashMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e0(&self) -> &T {
        &self.e0
    }

    pub fn algebra(&self) -> &Presentation {
        &self.algebra
    }

    pub fn index(&self) -> CompactIndex {
        self.idx
    }

    /// Level (energy above `e0`) shift of a compact basis element.
    pub fn shift(&self, x: usize) -> i64 {
        if x == self.idx.e() {
            0
        } else if x <= self.n {
            1
        } else if x <= 2 * self.n {
            -1
        } else {
            0
        }
    }

    /// Basis element `x` of the compact presentation acting on a monomial.
    pub fn act_basis(&mut self, x: usize, m: &[u8]) -> ModuleVector<T> {
        if let Some(v) = self.memo.get(&(x, m.to_vec())) {
            return v.clone();
        }
        let result = if m.is_empty() {
            let mut v = ModuleVector::new();
            if x == self.idx.e() {
                if !self.e0.is_zero() {
                    v.insert(Vec::new(), self.e0.clone());
                }
            } else if x <= self.n {
                v.insert(vec![x as u8], T::one());
            }
            v
        } else {
            // x J+_k rest = J+_k (x rest) + [x, J+_k] rest
            let k = m[0];
            let rest = &m[1..];
            let mut out = ModuleVector::new();
            for (mm, c) in self.act_basis(x, rest) {
                add_scaled(&mut out, &c, &ModuleVector::from([(insert_sorted(&mm, k), T::one())]));
            }
            let comm: Vec<(usize, GR)> = self
                .algebra
                .basis_bracket(x, self.idx.plus(k as usize))
                .iter()
                .map(|(&y, c)| (y, c.clone()))
                .collect();
            for (y, c) in comm {
                let v = self.act_basis(y, rest);
                add_scaled(&mut out, &T::from_scalar(c), &v);
            }
            out
        };
        self.memo.insert((x, m.to_vec()), result.clone());
        result
    }

    pub fn act(&mut self, x: &Combo<GR>, v: &ModuleVector<T>) -> ModuleVector<T> {
        let mut out = ModuleVector::new();
        for (&g, c) in x {
            let cg = T::from_scalar(c.clone());
            for (m, a) in v {
                let w = self.act_basis(g, m);
                add_scaled(&mut out, &(cg.clone() * a), &w);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::UniPoly;

    #[test]
    fn level_counts() {
        assert_eq!(level_basis(3, 0).len(), 1);
        assert_eq!(level_basis(3, 2).len(), 6);
        assert_eq!(level_basis(4, 3).len(), 20);
        for n in 3..7 {
            for l in 0..5 {
                assert_eq!(level_basis(n, l).len() as u128, binomial((n + l - 1) as i64, l as i64));
            }
        }
    }

    /// Polynomial realization on C[y_1..y_n]:
    /// `J+_i = y_i`, `E = E0 + y.d`, `J(i,j) = i(y_i d_j - y_j d_i)`,
    /// `J-_i = 2(E0 + y.d) d_i - y_i Lap`.
    mod oracle {
        use super::*;

        pub type Poly = BTreeMap<Vec<u32>, GR>;

        pub fn from_monomial(n: usize, m: &[u8]) -> Poly {
            let mut e = vec![0u32; n];
            for &i in m {
                e[i as usize - 1] += 1;
            }
            Poly::from([(e, GR::one())])
        }

        fn add(p: &mut Poly, c: &GR, e: Vec<u32>) {
            let v = p.remove(&e).unwrap_or_default();
            let s = &v + c;
            if !s.is_zero() {
                p.insert(e, s);
            }
        }

        fn d(p: &Poly, i: usize) -> Poly {
            let mut out = Poly::new();
            for (e, c) in p {
                if e[i] > 0 {
                    let mut f = e.clone();
                    f[i] -= 1;
                    add(&mut out, &(c * &GR::from_int(e[i] as i64)), f);
                }
            }
            out
        }

        fn y(p: &Poly, i: usize) -> Poly {
            p.iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f[i] += 1;
                    (f, c.clone())
                })
                .collect()
        }

        fn energy(p: &Poly, e0: &GR) -> Poly {
            p.iter()
                .map(|(e, c)| (e.clone(), c * &(e0 + &GR::from_int(e.iter().sum::<u32>() as i64))))
                .filter(|(_, c)| !c.is_zero())
                .collect()
        }

        fn lin(terms: Vec<(GR, Poly)>) -> Poly {
            let mut out = Poly::new();
            for (c, p) in terms {
                for (e, x) in p {
                    add(&mut out, &(&c * &x), e);
                }
            }
            out
        }

        pub fn apply(n: usize, e0: &GR, label: &str, p: &Poly) -> Poly {
            if label == "E" {
                return energy(p, e0);
            }
            if let Some(i) = label.strip_prefix("J+") {
                return y(p, i.parse::<usize>().unwrap() - 1);
            }
            if let Some(i) = label.strip_prefix("J-") {
                let i: usize = i.parse::<usize>().unwrap() - 1;
                let lap = (0..n).fold(Poly::new(), |acc, k| lin(vec![(GR::one(), acc), (GR::one(), d(&d(p, k), k))]));
                return lin(vec![
                    (GR::from_int(2), energy(&d(p, i), e0)),
                    (-GR::one(), y(&lap, i)),
                ]);
            }
            let inner = &label[2..label.len() - 1];
            let (a, b) = inner.split_once(',').unwrap();
            let (a, b) = (a.parse::<usize>().unwrap() - 1, b.parse::<usize>().unwrap() - 1);
            lin(vec![(GR::i(), y(&d(p, b), a)), (-GR::i(), y(&d(p, a), b))])
        }
    }

    #[test]
    fn action_matches_differential_oracle() {
        let n = 4;
        let e0 = GR::frac(3, 7);
        let mut v = VermaModule::new(n, e0.clone()).unwrap();
        let labels: Vec<String> = v.algebra().labels().to_vec();
        for l in 0..=3 {
            for m in level_basis(n, l) {
                for (x, label) in labels.iter().enumerate() {
                    let got = v.act_basis(x, &m);
                    let mut got_poly = oracle::Poly::new();
                    for (mm, c) in got {
                        let (e, _) = oracle::from_monomial(n, &mm).into_iter().next().unwrap();
                        got_poly.insert(e, c);
                    }
                    let want = oracle::apply(n, &e0, label, &oracle::from_monomial(n, &m));
                    assert_eq!(got_poly, want, "{label} on {}", monomial_label(&m));
                }
            }
        }
    }

    #[test]
    fn symbolic_energy() {
        let mut v = VermaModule::new(3, UniPoly::x()).unwrap();
        let out = v.act_basis(0, &[1, 2]);
        let expect = &UniPoly::x() + &UniPoly::constant(GR::from_int(2));
        assert_eq!(out, ModuleVector::from([(vec![1, 2], expect)]));
    }
}
