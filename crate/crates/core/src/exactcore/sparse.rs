//! Sparse vectors and incremental row echelon forms over the Gaussian rationals.
//!
//! Every stored row is normalised so that its smallest column (the pivot)
//! carries coefficient one. Reducing a vector therefore only needs a single
//! left-to-right sweep.

use std::collections::BTreeMap;

use super::scalar::{Ring, GR};

pub type SparseVec = BTreeMap<usize, GR>;

/// `v += c * w`, dropping cancelled entries.
pub fn add_scaled(v: &mut SparseVec, c: &GR, w: &SparseVec) {
    for (&k, x) in w {
        let delta = c * x;
        match v.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !delta.is_zero() {
                    e.insert(delta);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &delta;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

pub fn scale(v: &SparseVec, c: &GR) -> SparseVec {
    if c.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(&k, x)| (k, x * c)).collect()
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
    /// Combination of inserted vectors producing each row, when tracking.
    tags: BTreeMap<usize, SparseVec>,
    track: bool,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// An echelon that remembers how each row was combined from inserted vectors.
    pub fn tracking() -> Self {
        Echelon {
            track: true,
            ..Self::default()
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.rows.iter()
    }

    fn sweep(&self, v: &mut SparseVec, mut tag: Option<&mut SparseVec>) {
        let mut cursor = 0;
        loop {
            let next = v
                .range(cursor..)
                .map(|(&k, _)| k)
                .find(|k| self.rows.contains_key(k));
            let Some(c) = next else { break };
            let coef = -v[&c].clone();
            add_scaled(v, &coef, &self.rows[&c]);
            if let Some(t) = tag.as_deref_mut() {
                add_scaled(t, &coef, &self.tags[&c]);
            }
            cursor = c + 1;
        }
    }

    /// Remainder of `v` modulo the row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        self.sweep(&mut v, None);
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert a vector; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        self.insert_tagged(v, SparseVec::new()).is_none()
    }

    /// Insert a vector with a tag. If it is dependent, the reduced tag is
    /// returned: a combination of tags whose vectors sum to zero.
    pub fn insert_tagged(&mut self, v: &SparseVec, tag: SparseVec) -> Option<SparseVec> {
        let mut v = v.clone();
        let mut tag = tag;
        if self.track {
            self.sweep(&mut v, Some(&mut tag));
        } else {
            self.sweep(&mut v, None);
        }
        let Some((&p, lead)) = v.iter().next() else {
            return Some(tag);
        };
        let inv = lead.inv().expect("nonzero lead");
        let row = scale(&v, &inv);
        if self.track {
            self.tags.insert(p, scale(&tag, &inv));
        }
        self.rows.insert(p, row);
        None
    }
}

/// Basis of the kernel of the linear map sending basis vector `k` to `images[k]`.
pub fn kernel(images: &[SparseVec]) -> Vec<SparseVec> {
    let mut ech = Echelon::tracking();
    let mut out = Vec::new();
    for (k, v) in images.iter().enumerate() {
        let tag = SparseVec::from([(k, GR::one())]);
        if let Some(rel) = ech.insert_tagged(v, tag) {
            out.push(rel);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, c)| (k, GR::from_int(c))).collect()
    }

    #[test]
    fn reduce_and_rank() {
        let mut e = Echelon::new();
        assert!(e.insert(&sv(&[(0, 1), (1, 2)])));
        assert!(e.insert(&sv(&[(1, 1), (2, 1)])));
        assert!(!e.insert(&sv(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.reduce(&sv(&[(0, 2)])), sv(&[(2, 4)]));
    }

    #[test]
    fn kernel_relations() {
        let images = vec![sv(&[(0, 1)]), sv(&[(1, 1)]), sv(&[(0, 2), (1, -3)]), sv(&[])];
        let ker = kernel(&images);
        assert_eq!(ker.len(), 2);
        for rel in ker {
            let mut total = SparseVec::new();
            for (&k, c) in &rel {
                add_scaled(&mut total, c, &images[k]);
            }
            assert!(total.is_empty());
        }
    }
}
