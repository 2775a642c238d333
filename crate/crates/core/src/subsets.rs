//! Index subsets (1-based, strictly increasing) and the enumeration orders
//! used for exterior powers and minors.

use crate::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A strictly increasing list of 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, serde::Serialize, serde::Deserialize)]
pub struct SubsetIndex(Vec<usize>);

impl SubsetIndex {
    /// Validates strict increase and positivity.
    pub fn new(v: Vec<usize>) -> Result<Self> {
        if v.first() == Some(&0) || v.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!("{v:?} is not a strictly increasing list of positive indices")));
        }
        Ok(SubsetIndex(v))
    }
    /// Sorts and deduplicates; rejects 0.
    pub fn from_unsorted(mut v: Vec<usize>) -> Result<Self> {
        v.sort_unstable();
        v.dedup();
        Self::new(v)
    }
    pub fn empty() -> Self {
        SubsetIndex(vec![])
    }
    /// {1, …, n}
    pub fn full(n: usize) -> Self {
        SubsetIndex((1..=n).collect())
    }
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }
    pub fn is_subset_of(&self, o: &SubsetIndex) -> bool {
        self.0.iter().all(|&i| o.contains(i))
    }
    /// Complement inside {1, …, n}.
    pub fn complement(&self, n: usize) -> SubsetIndex {
        SubsetIndex((1..=n).filter(|&i| !self.contains(i)).collect())
    }
    pub fn union(&self, o: &SubsetIndex) -> SubsetIndex {
        let mut v: Vec<usize> = self.0.iter().chain(&o.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        SubsetIndex(v)
    }
    pub fn is_disjoint(&self, o: &SubsetIndex) -> bool {
        self.0.iter().all(|&i| !o.contains(i))
    }
    /// 0-based positions, handy for matrix slicing.
    pub fn zero_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i - 1).collect()
    }
    /// Colexicographic comparison: compare from the largest element down.
    pub fn colex_cmp(&self, o: &SubsetIndex) -> Ordering {
        self.0.iter().rev().cmp(o.0.iter().rev()).then(self.0.len().cmp(&o.0.len()))
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// All k-subsets of {1..n} in colexicographic order:
/// {1,2},{1,3},{2,3},{1,4},…
pub fn colex_subsets(n: usize, k: usize) -> Vec<SubsetIndex> {
    let mut out = lex_subsets(n, k);
    out.sort_by(|a, b| a.colex_cmp(b));
    out
}

/// All k-subsets of {1..n} in lexicographic order.
pub fn lex_subsets(n: usize, k: usize) -> Vec<SubsetIndex> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(SubsetIndex(cur.clone()));
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - 1 - i) {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Sign of the permutation that sorts the concatenation (x, y); 0 if x and y
/// share an element.
pub fn sgn(x: &[usize], y: &[usize]) -> i32 {
    let v: Vec<usize> = x.iter().chain(y).copied().collect();
    perm_sign(&v)
}

/// Sign of the permutation sorting `v` (0 when `v` has repeats).
pub fn perm_sign(v: &[usize]) -> i32 {
    let mut inv = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            match v[i].cmp(&v[j]) {
                Ordering::Greater => inv += 1,
                Ordering::Equal => return 0,
                Ordering::Less => {}
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All ordered splits of `z` into (z1, z2) with |z1| = k; z1, z2 keep the
/// relative order of `z`.
pub fn splits(z: &[usize], k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = z.len();
    lex_subsets(n, k)
        .into_iter()
        .map(|pos| {
            let mut a = Vec::with_capacity(k);
            let mut b = Vec::with_capacity(n - k);
            for (i, &e) in z.iter().enumerate() {
                if pos.contains(i + 1) {
                    a.push(e);
                } else {
                    b.push(e);
                }
            }
            (a, b)
        })
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order_of_pairs() {
        let s: Vec<String> = colex_subsets(4, 2).iter().map(|s| s.to_string()).collect();
        assert_eq!(s, ["{1,2}", "{1,3}", "{2,3}", "{1,4}", "{2,4}", "{3,4}"]);
        assert_eq!(colex_subsets(5, 3).len(), 10);
        assert_eq!(colex_subsets(3, 0), vec![SubsetIndex::empty()]);
        assert!(colex_subsets(2, 3).is_empty());
    }

    #[test]
    fn signs() {
        assert_eq!(sgn(&[3], &[1, 2]), 1);
        assert_eq!(sgn(&[2], &[1, 3]), -1);
        assert_eq!(sgn(&[1], &[2, 3]), 1);
        assert_eq!(sgn(&[1, 2], &[2]), 0);
        assert_eq!(sgn(&[], &[]), 1);
    }

    #[test]
    fn validation() {
        assert!(SubsetIndex::new(vec![1, 1]).is_err());
        assert!(SubsetIndex::new(vec![0, 2]).is_err());
        assert!(SubsetIndex::new(vec![2, 1]).is_err());
        assert_eq!(SubsetIndex::full(3).complement(5).as_slice(), &[4, 5]);
    }

    #[test]
    fn splits_count() {
        assert_eq!(splits(&[4, 5, 6, 7], 2).len(), 6);
        assert_eq!(binomial(10, 3), 120);
    }
}
