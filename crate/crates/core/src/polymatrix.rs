//! Dense matrices over a polynomial ring: generic matrices, products,
//! exterior powers in Macaulay2's basis order, minors and rank.

use crate::polyring::{same_ring, CoeffDomain, Polynomial, Ring, RingCtx, RingExt, Style};
use crate::subsets::{colex_subsets, SubsetIndex};
use crate::{Error, Result};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Grade vector attached to a basis element of a free module.
pub type Shift = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    row_shifts: Option<Vec<Shift>>,
    col_shifts: Option<Vec<Shift>>,
}

impl PolyMatrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Self {
        PolyMatrix { ring: ring.clone(), rows, cols, entries: vec![ring.zero(); rows * cols], row_shifts: None, col_shifts: None }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let entries: Vec<Polynomial> = rows.into_iter().flatten().collect();
        if entries.iter().any(|p| !same_ring(p.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: r, cols: c, entries, row_shifts: None, col_shifts: None })
    }

    /// Parses every entry with the ring's polynomial parser.
    pub fn parse_rows<S: AsRef<str>>(ring: &Ring, rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(ring, parsed)
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, entries, row_shifts: None, col_shifts: None }
    }

    /// Integer matrix embedded as constants.
    pub fn from_ints(ring: &Ring, rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(ring, rows.iter().map(|r| r.iter().map(|&c| ring.constant(c)).collect()).collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert!(same_ring(p.ring(), &self.ring), "ring mismatch");
        self.entries[i * self.cols + j] = p;
    }
    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }
    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|p| p.is_zero())
    }
    pub fn row_shifts(&self) -> Option<&[Shift]> {
        self.row_shifts.as_deref()
    }
    pub fn col_shifts(&self) -> Option<&[Shift]> {
        self.col_shifts.as_deref()
    }
    pub fn with_shifts(mut self, row_shifts: Option<Vec<Shift>>, col_shifts: Option<Vec<Shift>>) -> Result<Self> {
        if row_shifts.as_ref().is_some_and(|s| s.len() != self.rows) || col_shifts.as_ref().is_some_and(|s| s.len() != self.cols) {
            return Err(Error::Shape("shift list length does not match matrix shape".into()));
        }
        self.row_shifts = row_shifts;
        self.col_shifts = col_shifts;
        Ok(self)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone());
        t.row_shifts = self.col_shifts.clone();
        t.col_shifts = self.row_shifts.clone();
        t
    }

    pub fn matmul(&self, o: &PolyMatrix) -> Result<Self> {
        if !same_ring(&self.ring, &o.ring) {
            return Err(Error::RingMismatch);
        }
        if self.cols != o.rows {
            return Err(Error::Shape(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let entries: Vec<Polynomial> = (0..self.rows * o.cols)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / o.cols, idx % o.cols);
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), o.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect();
        Ok(PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: o.cols, entries, row_shifts: self.row_shifts.clone(), col_shifts: o.col_shifts.clone() })
    }

    pub fn add(&self, o: &PolyMatrix) -> Result<Self> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::Shape("sum of differently shaped matrices".into()));
        }
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a.checked_add(b)).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { entries, ..self.clone() })
    }

    pub fn scale(&self, c: &Polynomial) -> Self {
        PolyMatrix { entries: self.entries.iter().map(|p| p * c).collect(), ..self.clone() }
    }

    /// Rows and columns given as 0-based positions, in the order supplied.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Block matrix [self | o].
    pub fn hconcat(&self, o: &PolyMatrix) -> Result<Self> {
        if self.rows != o.rows {
            return Err(Error::Shape("hconcat row mismatch".into()));
        }
        Ok(Self::from_fn(&self.ring, self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { o.get(i, j - self.cols).clone() }
        }))
    }

    /// Direct sum diag(self, o).
    pub fn direct_sum(&self, o: &PolyMatrix) -> Self {
        Self::from_fn(&self.ring, self.rows + o.rows, self.cols + o.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j).clone(),
                (false, false) => o.get(i - self.rows, j - self.cols).clone(),
                _ => self.ring.zero(),
            }
        })
    }

    /// Determinant of a square matrix (Laplace expansion shared over column
    /// subsets).
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        Ok(self.minor0(&rows, &rows))
    }

    /// Minor with the given 0-based row and column positions (increasing
    /// order gives the usual sign).
    pub fn minor0(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let k = rows.len();
        assert_eq!(k, cols.len());
        if k == 0 {
            return self.ring.one();
        }
        if k == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        if k > 16 {
            return self.bareiss_det(rows, cols);
        }
        // dp[mask] = determinant of rows[0..popcount(mask)] × cols[mask]
        let mut dp: Vec<Option<Polynomial>> = vec![None; 1 << k];
        dp[0] = Some(self.ring.one());
        for mask in 1usize..(1 << k) {
            let r = mask.count_ones() as usize - 1;
            let mut acc = self.ring.zero();
            let mut after = 0;
            for c in (0..k).rev() {
                if mask & (1 << c) == 0 {
                    continue;
                }
                // expanding along the last row: sign is (-1)^(#chosen columns after c)
                let e = self.get(rows[r], cols[c]);
                if let Some(sub) = dp[mask ^ (1 << c)].as_ref() {
                    if !e.is_zero() && !sub.is_zero() {
                        let t = e * sub;
                        acc = if after % 2 == 0 { &acc + &t } else { &acc - &t };
                    }
                }
                after += 1;
            }
            dp[mask] = Some(acc);
        }
        dp[(1 << k) - 1].take().unwrap()
    }

    fn bareiss_det(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let n = rows.len();
        let mut m: Vec<Vec<Polynomial>> = rows.iter().map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect()).collect();
        let mut sign = 1;
        let mut prev = self.ring.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else { return self.ring.zero() };
            if p != k {
                m.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev).unwrap().expect("Bareiss division is exact");
                }
                m[i][k] = self.ring.zero();
            }
            prev = m[k][k].clone();
        }
        if sign < 0 { -&m[n - 1][n - 1] } else { m[n - 1][n - 1].clone() }
    }

    /// Minor indexed by 1-based subsets.
    pub fn minor(&self, rows: &SubsetIndex, cols: &SubsetIndex) -> Result<Polynomial> {
        if rows.len() != cols.len() {
            return Err(Error::Shape("minor needs equally many rows and columns".into()));
        }
        if rows.max().is_some_and(|m| m > self.rows) || cols.max().is_some_and(|m| m > self.cols) {
            return Err(Error::OutOfRange(format!("minor {rows}x{cols} of a {}x{} matrix", self.rows, self.cols)));
        }
        Ok(self.minor0(&rows.zero_based(), &cols.zero_based()))
    }

    /// k-th exterior power: rows indexed by k-subsets of rows, columns by
    /// k-subsets of columns, both in colexicographic order.
    pub fn exterior_power(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::OutOfRange(format!("exterior power {k} of a {}x{} matrix", self.rows, self.cols)));
        }
        let rs = colex_subsets(self.rows, k);
        let cs = colex_subsets(self.cols, k);
        let (nr, nc) = (rs.len(), cs.len());
        let entries: Vec<Polynomial> = (0..nr * nc)
            .into_par_iter()
            .map(|idx| self.minor0(&rs[idx / nc].zero_based(), &cs[idx % nc].zero_based()))
            .collect();
        Ok(PolyMatrix { ring: self.ring.clone(), rows: nr, cols: nc, entries, row_shifts: None, col_shifts: None })
    }

    /// All r×r minors: column subsets outer, row subsets inner, both colex.
    pub fn minors(&self, r: usize) -> Result<Vec<Polynomial>> {
        if r == 0 || r > self.rows.min(self.cols) {
            return Err(Error::OutOfRange(format!("{r}-minors of a {}x{} matrix", self.rows, self.cols)));
        }
        let rs = colex_subsets(self.rows, r);
        let cs = colex_subsets(self.cols, r);
        let pairs: Vec<(usize, usize)> = (0..cs.len()).flat_map(|c| (0..rs.len()).map(move |i| (c, i))).collect();
        Ok(pairs.par_iter().map(|&(c, i)| self.minor0(&rs[i].zero_based(), &cs[c].zero_based())).collect())
    }

    /// Rank over the fraction field, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Polynomial>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let (nr, nc) = (self.rows, self.cols);
        let mut prev = self.ring.one();
        let mut rank = 0;
        let mut col_order: Vec<usize> = (0..nc).collect();
        for k in 0..nr.min(nc) {
            // full pivot search in the trailing block
            let mut piv = None;
            'outer: for i in k..nr {
                for (jj, &j) in col_order.iter().enumerate().skip(k) {
                    if !m[i][j].is_zero() {
                        piv = Some((i, jj));
                        break 'outer;
                    }
                }
            }
            let Some((pi, pj)) = piv else { break };
            m.swap(pi, k);
            col_order.swap(pj, k);
            let ck = col_order[k];
            for i in k + 1..nr {
                for jj in k + 1..nc {
                    let j = col_order[jj];
                    let num = &(&m[k][ck] * &m[i][j]) - &(&m[i][ck] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev).unwrap().expect("Bareiss division is exact");
                }
                m[i][ck] = self.ring.zero();
            }
            prev = m[k][ck].clone();
            rank += 1;
        }
        rank
    }

    /// Entrywise evaluation at an integer point.
    pub fn evaluate(&self, point: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.evaluate(point)).collect::<Result<Vec<_>>>())
            .collect()
    }

    /// Applies a ring homomorphism entrywise.
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Result<Self> {
        let entries = self.entries.iter().map(|p| p.substitute(target, images)).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { ring: target.clone(), entries, ..self.clone() })
    }

    /// Macaulay2-style rows `| a b |`, one per line, single-spaced.
    pub fn to_m2(&self) -> String {
        self.render(Style::Juxtapose)
    }

    pub fn render(&self, style: Style) -> String {
        (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(|p| p.to_text(style)).collect();
                if cells.is_empty() { "| |".to_string() } else { format!("| {} |", cells.join(" ")) }
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            ring: Some(RingSpec::of(&self.ring)),
            rows: Some(self.rows),
            cols: Some(self.cols),
            entries: (0..self.rows).map(|i| self.row(i).iter().map(|p| p.to_string()).collect()).collect(),
            row_shifts: self.row_shifts.clone(),
            col_shifts: self.col_shifts.clone(),
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_m2())
    }
}

/// Generic `nrows × ncols` matrix filled column-major with consecutive
/// variables starting at the 1-based variable number `start_var`.
pub fn generic_matrix(ring: &Ring, start_var: usize, nrows: usize, ncols: usize) -> Result<PolyMatrix> {
    if start_var == 0 || start_var - 1 + nrows * ncols > ring.num_vars() {
        return Err(Error::OutOfRange(format!(
            "a generic {nrows}x{ncols} matrix from variable {start_var} needs {} variables, ring has {}",
            start_var.saturating_sub(1) + nrows * ncols,
            ring.num_vars()
        )));
    }
    Ok(PolyMatrix::from_fn(ring, nrows, ncols, |i, j| ring.var(start_var - 1 + j * nrows + i)))
}

/// Ring description in JSON: explicit names, or `num_vars` with a prefix.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub num_vars: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prefix: Option<String>,
    /// 0 for ℤ, otherwise a prime p for ℤ/p.
    #[serde(default)]
    pub characteristic: u64,
}

impl RingSpec {
    pub fn of(ring: &RingCtx) -> Self {
        RingSpec {
            vars: Some(ring.names().to_vec()),
            num_vars: None,
            prefix: None,
            characteristic: match ring.domain() {
                CoeffDomain::Integers => 0,
                CoeffDomain::PrimeField(p) => p,
            },
        }
    }
    pub fn build(&self) -> Result<Ring> {
        let domain = if self.characteristic == 0 { CoeffDomain::Integers } else { CoeffDomain::PrimeField(self.characteristic) };
        match (&self.vars, self.num_vars) {
            (Some(v), _) => RingCtx::with_names(v.clone(), domain),
            (None, Some(n)) => RingCtx::indexed(self.prefix.as_deref().unwrap_or("x"), n, domain),
            (None, None) => Err(Error::Invalid("ring needs `vars` or `num_vars`".into())),
        }
    }
}

/// JSON interchange form of a matrix. Entries are polynomial strings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<usize>,
    pub entries: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_shifts: Option<Vec<Shift>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col_shifts: Option<Vec<Shift>>,
}

/// Identifiers occurring in polynomial strings, sorted by (prefix, numeric
/// suffix) so that x_2 < x_10.
pub fn infer_variables<'a>(texts: impl IntoIterator<Item = &'a str>) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for t in texts {
        let b = t.as_bytes();
        let mut i = 0;
        while i < b.len() {
            if b[i].is_ascii_alphabetic() {
                let s = i;
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                let name = &t[s..i];
                if !names.iter().any(|n| n == name) {
                    names.push(name.to_string());
                }
            } else {
                i += 1;
            }
        }
    }
    names.sort_by_key(|n| natural_key(n));
    names
}

fn natural_key(s: &str) -> Vec<(String, u64)> {
    s.split('_').map(|part| match part.parse::<u64>() {
        Ok(n) => (String::new(), n),
        Err(_) => (part.to_string(), 0),
    }).collect()
}

impl MatrixJson {
    /// Builds the matrix in the declared ring, or in the given one, or in a
    /// ring inferred from the identifiers in the entries (`*` style needed).
    pub fn build(&self, ring: Option<&Ring>) -> Result<PolyMatrix> {
        let ring = match (ring, &self.ring) {
            (Some(r), _) => r.clone(),
            (None, Some(spec)) => spec.build()?,
            (None, None) => {
                let mut vars = infer_variables(self.entries.iter().flatten().map(|s| s.as_str()));
                if vars.is_empty() {
                    vars.push("x".into());
                }
                RingCtx::with_names(vars, CoeffDomain::Integers)?
            }
        };
        let m = PolyMatrix::parse_rows(&ring, &self.entries)?;
        if self.rows.is_some_and(|r| r != m.rows()) || self.cols.is_some_and(|c| c != m.cols() && m.rows() > 0) {
            return Err(Error::Shape("declared shape does not match entries".into()));
        }
        m.with_shifts(self.row_shifts.clone(), self.col_shifts.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz(n: usize) -> Ring {
        RingCtx::new(n, CoeffDomain::Integers).unwrap()
    }

    #[test]
    fn generic_2x4() {
        let r = zz(8);
        let m = generic_matrix(&r, 1, 2, 4).unwrap();
        assert_eq!(m.to_m2(), "| x_1 x_3 x_5 x_7 |\n| x_2 x_4 x_6 x_8 |");
        assert!(generic_matrix(&r, 2, 2, 4).is_err());
    }

    #[test]
    fn generic_3x5_first_row() {
        let r = zz(15);
        let m = generic_matrix(&r, 1, 3, 5).unwrap();
        assert_eq!(m.to_m2().lines().next().unwrap(), "| x_1 x_4 x_7 x_10 x_13 |");
    }

    #[test]
    fn column_from_offset() {
        let r = RingCtx::indexed("y", 90, CoeffDomain::Integers).unwrap();
        let m = generic_matrix(&r, 87, 4, 1).unwrap();
        assert_eq!(m.to_m2(), "| y_87 |\n| y_88 |\n| y_89 |\n| y_90 |");
    }

    #[test]
    fn minors_of_generic_2x4() {
        let r = zz(8);
        let m = generic_matrix(&r, 1, 2, 4).unwrap();
        let s: Vec<String> = m.minors(2).unwrap().iter().map(|p| p.to_text(Style::Juxtapose)).collect();
        assert_eq!(s, ["-x_2x_3+x_1x_4", "-x_2x_5+x_1x_6", "-x_4x_5+x_3x_6", "-x_2x_7+x_1x_8", "-x_4x_7+x_3x_8", "-x_6x_7+x_5x_8"]);
        assert_eq!(m.minors(1).unwrap().len(), 8);
        assert!(m.minors(3).is_err());
    }

    #[test]
    fn maximal_minor_of_3x5() {
        let r = zz(15);
        let a = generic_matrix(&r, 1, 3, 5).unwrap();
        let first = &a.minors(3).unwrap()[0];
        assert_eq!(first.to_text(Style::Juxtapose), "-x_3x_5x_7+x_2x_6x_7+x_3x_4x_8-x_1x_6x_8-x_2x_4x_9+x_1x_5x_9");
        let w = a.exterior_power(2).unwrap().transpose();
        assert_eq!(w.rows(), 10);
        assert_eq!(w.row(0).iter().map(|p| p.to_text(Style::Juxtapose)).collect::<Vec<_>>(), ["-x_2x_4+x_1x_5", "-x_3x_4+x_1x_6", "-x_3x_5+x_2x_6"]);
    }

    #[test]
    fn ranks() {
        let r = RingCtx::with_names(vec!["x".into(), "y".into()], CoeffDomain::Integers).unwrap();
        assert_eq!(PolyMatrix::zero(&r, 3, 2).rank(), 0);
        let d = PolyMatrix::parse_rows(&r, &[vec!["x^2", "0", "0"], vec!["0", "x", "0"], vec!["0", "0", "0"]]).unwrap();
        assert_eq!(d.rank(), 2);
        assert_eq!(generic_matrix(&zz(15), 1, 3, 5).unwrap().rank(), 3);
    }

    #[test]
    fn evaluation() {
        let r = zz(4);
        let m = generic_matrix(&r, 1, 2, 2).unwrap();
        let pt: Vec<BigInt> = (1..=4).map(BigInt::from).collect();
        let v = m.evaluate(&pt).unwrap();
        assert_eq!(v, vec![vec![BigInt::from(1), BigInt::from(3)], vec![BigInt::from(2), BigInt::from(4)]]);
        assert!(m.evaluate(&pt[..3]).is_err());
    }

    #[test]
    fn bareiss_agrees_with_laplace() {
        let r = zz(9);
        let m = generic_matrix(&r, 1, 3, 3).unwrap();
        let idx = [0, 1, 2];
        assert_eq!(m.bareiss_det(&idx, &idx), m.determinant().unwrap());
    }

    #[test]
    fn json_round_trip() {
        let r = zz(4);
        let m = generic_matrix(&r, 1, 2, 2).unwrap();
        let j = serde_json::to_string(&m.to_json()).unwrap();
        let back: MatrixJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.build(None).unwrap(), m);
        let inferred = MatrixJson { entries: vec![vec!["x_10".into(), "x_2*y".into()]], ..Default::default() };
        let m2 = inferred.build(None).unwrap();
        assert_eq!(m2.ring().names(), ["x_2", "x_10", "y"]);
    }
}
