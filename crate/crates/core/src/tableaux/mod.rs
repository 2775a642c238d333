//! Partitions, tableaux, bitableaux and formal sums of them.
//!
//! Standardness means: rows strictly increasing, columns (weakly)
//! nondecreasing, row lengths nonincreasing. A bitableau `(s | t)` stands
//! for the product over rows of the minor with columns from `s` and rows
//! from `t`.

mod straighten;

pub use straighten::{plucker_relations, plucker_variable_name, straighten, straighten_in, straighten_rectangular};

use crate::intmat;
use crate::subsets::{lex_subsets, perm_sign, splits};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// λ = (λ₁ ≥ λ₂ ≥ … ≥ λ_s ≥ 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }
    pub fn parts(&self) -> &[usize] {
        &self.0
    }
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }
    /// All partitions of m, in reverse lexicographic order.
    pub fn all(m: usize) -> Vec<Partition> {
        fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=left.min(max)).rev() {
                cur.push(p);
                rec(left - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A filling of a (possibly ragged) diagram, row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }
    pub fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }
    /// The shape, if the row lengths form a partition (empty rows dropped
    /// at the bottom only).
    pub fn shape(&self) -> Result<Partition> {
        let mut l = self.row_lengths();
        while l.last() == Some(&0) {
            l.pop();
        }
        Partition::new(l)
    }
    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }
    pub fn weight(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Rows strictly increasing, columns nondecreasing, row lengths
    /// nonincreasing (a row of length 0 still counts as a row).
    pub fn is_standard(&self) -> bool {
        if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return false;
        }
        self.rows.windows(2).all(|w| w[0].len() >= w[1].len() && w[1].iter().zip(&w[0]).all(|(b, a)| a <= b))
    }

    /// Rows separated by `/`; entries run together when all are single
    /// digits, comma-separated otherwise. No rows at all prints as `∅`.
    pub fn to_text(&self) -> String {
        if self.rows.is_empty() {
            return "∅".into();
        }
        let compact = self.rows.iter().flatten().all(|&e| e < 10);
        self.rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                s.join(if compact { "" } else { "," })
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Tableau::default());
        }
        let rows = s
            .split('/')
            .map(|r| {
                let r = r.trim();
                if r.contains(',') {
                    r.split(',').map(|e| e.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {e:?}")))).collect()
                } else {
                    r.chars()
                        .filter(|c| !c.is_whitespace())
                        .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad entry {c:?}"))))
                        .collect()
                }
            })
            .collect::<Result<Vec<Vec<usize>>>>()?;
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::Parse("tableau entries are positive".into()));
        }
        Ok(Tableau { rows })
    }

    /// Product over rows of the minor of `x` with rows 1..λᵢ and columns
    /// given by the row entries.
    pub fn evaluate(&self, x: &[Vec<BigInt>]) -> Result<BigInt> {
        let mut acc = BigInt::one();
        for r in &self.rows {
            if r.len() > x.len() || r.iter().any(|&e| x.first().is_none_or(|row| e > row.len())) {
                return Err(Error::OutOfRange("tableau does not fit the evaluation matrix".into()));
            }
            let rows: Vec<usize> = (0..r.len()).collect();
            let cols: Vec<usize> = r.iter().map(|e| e - 1).collect();
            acc *= intmat::minor(x, &rows, &cols);
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Sorts a row, returning the sign of the sorting permutation; `None` when
/// the row has a repeated entry (the alternating product vanishes).
pub fn normalize_row(row: &[usize]) -> Option<(i32, Vec<usize>)> {
    let s = perm_sign(row);
    if s == 0 {
        return None;
    }
    let mut v = row.to_vec();
    v.sort_unstable();
    Some((s, v))
}

/// Pair of same-shape tableaux `(s | t)`: row a stands for the minor with
/// columns `s[a]` and rows `t[a]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitableau {
    s: Tableau,
    t: Tableau,
}

impl Bitableau {
    pub fn new(s: Tableau, t: Tableau) -> Result<Self> {
        if s.row_lengths() != t.row_lengths() {
            return Err(Error::Shape(format!("bitableau halves {s} and {t} differ in shape")));
        }
        Ok(Bitableau { s, t })
    }
    pub fn from_rows(rows: Vec<(Vec<usize>, Vec<usize>)>) -> Result<Self> {
        let (s, t): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        Self::new(Tableau::new(s), Tableau::new(t))
    }
    pub fn left(&self) -> &Tableau {
        &self.s
    }
    pub fn right(&self) -> &Tableau {
        &self.t
    }
    pub fn rows(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<usize>)> {
        self.s.rows.iter().zip(&self.t.rows)
    }
    pub fn weight(&self) -> usize {
        self.s.weight()
    }

    /// Normal form of the product: rows sorted internally (with sign), empty
    /// rows dropped, rows ordered by (length desc, s, t). `None` when some
    /// row has a repeated index.
    pub fn canonical(&self) -> Option<(i32, Bitableau)> {
        let mut sign = 1;
        let mut rows = Vec::with_capacity(self.s.rows.len());
        for (a, b) in self.rows() {
            if a.is_empty() {
                continue;
            }
            let (sa, ra) = normalize_row(a)?;
            let (sb, rb) = normalize_row(b)?;
            sign *= sa * sb;
            rows.push((ra, rb));
        }
        rows.sort_by(|x, y| y.0.len().cmp(&x.0.len()).then_with(|| x.cmp(y)));
        Some((sign, Bitableau::from_rows(rows).expect("shapes agree")))
    }

    /// Standard iff some arrangement of the rows makes both halves standard.
    pub fn is_standard(&self) -> bool {
        match self.canonical() {
            Some((_, c)) => {
                let sorted_ok = self.s.rows.iter().chain(&self.t.rows).all(|r| r.windows(2).all(|w| w[0] < w[1]));
                sorted_ok && c.s.is_standard() && c.t.is_standard()
            }
            None => false,
        }
    }

    /// Product of minors det x[t_a, s_a] of the integer matrix `x`.
    pub fn evaluate(&self, x: &[Vec<BigInt>]) -> Result<BigInt> {
        let mut acc = BigInt::one();
        let ncols = x.first().map_or(0, |r| r.len());
        for (s, t) in self.rows() {
            if s.iter().any(|&c| c == 0 || c > ncols) || t.iter().any(|&r| r == 0 || r > x.len()) {
                return Err(Error::OutOfRange(format!("bitableau {self} does not fit a {}x{ncols} matrix", x.len())));
            }
            let rows: Vec<usize> = t.iter().map(|i| i - 1).collect();
            let cols: Vec<usize> = s.iter().map(|j| j - 1).collect();
            acc *= intmat::minor(x, &rows, &cols);
        }
        Ok(acc)
    }

    /// `(s | t)`
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bitableau must look like (s | t): {text:?}")))?;
        let (a, b) = inner.split_once('|').ok_or_else(|| Error::Parse("missing '|'".into()))?;
        Self::new(Tableau::parse(a)?, Tableau::parse(b)?)
    }
}

impl fmt::Display for Bitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.s, self.t)
    }
}

/// Finite ℤ-linear combination; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum<T: Ord> {
    terms: BTreeMap<T, BigInt>,
}

impl<T: Ord> Default for FormalSum<T> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> FormalSum<T> {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn single(t: T) -> Self {
        let mut s = Self::new();
        s.add(t, BigInt::one());
        s
    }
    pub fn add(&mut self, t: T, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(t.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&t);
        }
    }
    pub fn add_sum(&mut self, o: &FormalSum<T>, scale: &BigInt) {
        for (t, c) in &o.terms {
            self.add(t.clone(), c * scale);
        }
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn iter(&self) -> impl Iterator<Item = (&T, &BigInt)> {
        self.terms.iter()
    }
    pub fn coefficient(&self, t: &T) -> BigInt {
        self.terms.get(t).cloned().unwrap_or_default()
    }
    pub fn pop_first(&mut self) -> Option<(T, BigInt)> {
        self.terms.pop_first()
    }
}

impl<T: Ord + Clone + fmt::Display> fmt::Display for FormalSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{a}*{t}")?;
            }
        }
        Ok(())
    }
}

impl FormalSum<Bitableau> {
    pub fn evaluate(&self, x: &[Vec<BigInt>]) -> Result<BigInt> {
        let mut s = BigInt::zero();
        for (t, c) in self.iter() {
            s += c * t.evaluate(x)?;
        }
        Ok(s)
    }
    pub fn all_standard(&self) -> bool {
        self.iter().all(|(t, _)| t.is_standard())
    }
}

impl FormalSum<Tableau> {
    pub fn evaluate(&self, x: &[Vec<BigInt>]) -> Result<BigInt> {
        let mut s = BigInt::zero();
        for (t, c) in self.iter() {
            s += c * t.evaluate(x)?;
        }
        Ok(s)
    }
}

/// The shuffle relation θ(λ, a, u, v) applied to `t` (row `a` is 1-based):
/// with x the first u entries of row a, z the last v entries of row a+1 and
/// y the remaining entries of both rows, returns
/// Σ sgn(Y₁,Y₂) · (x,Y₁ / Y₂,z) over splits of y with |Y₁| = λ_a − u.
pub fn shuffle_relation(t: &Tableau, a: usize, u: usize, v: usize) -> Result<FormalSum<Tableau>> {
    let rows = t.rows();
    if a == 0 || a >= rows.len() {
        return Err(Error::OutOfRange(format!("row {a} has no row below it in a tableau with {} rows", rows.len())));
    }
    let (ra, rb) = (&rows[a - 1], &rows[a]);
    let (la, lb) = (ra.len(), rb.len());
    if u + v >= lb || u > la {
        return Err(Error::Invalid(format!("need u + v < λ_{{a+1}}: u={u}, v={v}, λ_{{a+1}}={lb}")));
    }
    let x = &ra[..u];
    let z = &rb[lb - v..];
    let y: Vec<usize> = ra[u..].iter().chain(&rb[..lb - v]).copied().collect();
    let positions: Vec<usize> = (0..y.len()).collect();
    let mut out = FormalSum::new();
    for (p1, p2) in splits(&positions, la - u) {
        let sg = perm_sign(&p1.iter().chain(&p2).copied().collect::<Vec<_>>());
        let new_a: Vec<usize> = x.iter().copied().chain(p1.iter().map(|&i| y[i])).collect();
        let new_b: Vec<usize> = p2.iter().map(|&i| y[i]).chain(z.iter().copied()).collect();
        let (Some((sa, na)), Some((sb, nb))) = (normalize_row(&new_a), normalize_row(&new_b)) else { continue };
        let mut new_rows = rows.to_vec();
        new_rows[a - 1] = na;
        new_rows[a] = nb;
        out.add(Tableau::new(new_rows), BigInt::from(sg * sa * sb));
    }
    Ok(out)
}

/// Every shuffle relation of `t` over all admissible (a, u, v).
pub fn shuffle_relations(t: &Tableau) -> Vec<((usize, usize, usize), FormalSum<Tableau>)> {
    let mut out = Vec::new();
    for a in 1..t.num_rows() {
        let la = t.rows()[a - 1].len();
        let lb = t.rows()[a].len();
        for u in 0..=la {
            for v in 0..lb {
                if u + v < lb {
                    out.push(((a, u, v), shuffle_relation(t, a, u, v).expect("admissible")));
                }
            }
        }
    }
    out
}

/// Number of standard tableaux of shape λ with entries in 1..=n.
pub fn schur_dimension(lambda: &Partition, n: usize) -> u64 {
    let parts = lambda.parts();
    if parts.is_empty() {
        return 1;
    }
    if parts[0] > n {
        return 0;
    }
    // dp over rows: map current row -> number of ways
    let mut dp: HashMap<Vec<usize>, u64> = lex_subsets(n, parts[0]).into_iter().map(|s| (s.into_vec(), 1)).collect();
    for &len in &parts[1..] {
        let mut next: HashMap<Vec<usize>, u64> = HashMap::new();
        for cand in lex_subsets(n, len) {
            let c = cand.as_slice();
            let ways: u64 = dp.iter().filter(|(prev, _)| c.iter().zip(prev.iter()).all(|(b, a)| a <= b)).map(|(_, w)| *w).sum();
            if ways > 0 {
                next.insert(c.to_vec(), ways);
            }
        }
        dp = next;
    }
    dp.values().sum()
}

/// All standard tableaux of shape λ with entries in 1..=n.
pub fn standard_tableaux(lambda: &Partition, n: usize) -> Vec<Tableau> {
    fn rec(parts: &[usize], n: usize, prev: Option<&Vec<usize>>, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        let Some((&len, rest)) = parts.split_first() else {
            out.push(Tableau::new(cur.clone()));
            return;
        };
        for cand in lex_subsets(n, len) {
            let c = cand.into_vec();
            if prev.is_none_or(|p| c.iter().zip(p).all(|(b, a)| a <= b)) {
                cur.push(c);
                let last = cur.last().cloned();
                rec(rest, n, last.as_ref(), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), n, None, &mut Vec::new(), &mut out);
    out
}

/// Standard bitableaux of total weight d with columns in 1..=n and rows in
/// 1..=m, in canonical form.
pub fn standard_bitableaux(m: usize, n: usize, d: usize) -> Vec<Bitableau> {
    let mut out = Vec::new();
    for lambda in Partition::all(d) {
        if lambda.parts().first().is_some_and(|&p| p > m.min(n)) {
            continue;
        }
        let ss = standard_tableaux(&lambda, n);
        let ts = standard_tableaux(&lambda, m);
        for s in &ss {
            for t in &ts {
                out.push(Bitableau::new(s.clone(), t.clone()).expect("same shape"));
            }
        }
    }
    out
}
