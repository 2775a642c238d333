//! Straightening via quadratic Plücker relations.
//!
//! A bitableau over an m×n matrix X becomes a product of maximal minors of
//! M = (X | J), J the m×m anti-identity: row (S | T) maps to the columns
//! S ∪ {n + m + 1 − u : u ∉ T}. Rectangular tableaux are straightened by the
//! Garnir exchange at the topmost-leftmost column violation; each exchange
//! produces terms that are strictly larger in the order "compare the last
//! row, from its last entry backwards", so the process terminates.

use super::{normalize_row, Bitableau, FormalSum};
use crate::polyring::{CoeffDomain, Monomial, Polynomial, Ring, RingCtx};
use crate::subsets::{lex_subsets, perm_sign, splits};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;

type Rows = Vec<Vec<usize>>;

/// Sort key realising the termination order.
fn key_of(rows: &Rows) -> Rows {
    rows.iter().rev().map(|r| r.iter().rev().copied().collect()).collect()
}

fn rows_of(key: &Rows) -> Rows {
    key_of(key)
}

/// Topmost-leftmost column violation (a, c): rows[a][c] > rows[a+1][c].
fn first_violation(rows: &Rows) -> Option<(usize, usize)> {
    for a in 0..rows.len().saturating_sub(1) {
        for c in 0..rows[a].len().min(rows[a + 1].len()) {
            if rows[a][c] > rows[a + 1][c] {
                return Some((a, c));
            }
        }
    }
    None
}

/// Terms whose signed sum equals the product of rows a and a+1 (others
/// untouched), from the alternating sum over splits of
/// Z = R_a[c..] ++ R_{a+1}[..=c].
fn exchange(rows: &Rows, a: usize, c: usize) -> Vec<(Rows, i32)> {
    let r = rows[a].len();
    let alpha = &rows[a][..c];
    let delta = &rows[a + 1][c + 1..];
    let z: Vec<usize> = rows[a][c..].iter().chain(&rows[a + 1][..=c]).copied().collect();
    let positions: Vec<usize> = (0..z.len()).collect();
    let mut out = Vec::new();
    for (p1, p2) in splits(&positions, r - c) {
        if p1.iter().copied().eq(0..r - c) {
            continue; // the original term
        }
        let sg = perm_sign(&p1.iter().chain(&p2).copied().collect::<Vec<_>>());
        let ra: Vec<usize> = alpha.iter().copied().chain(p1.iter().map(|&i| z[i])).collect();
        let rb: Vec<usize> = p2.iter().map(|&i| z[i]).chain(delta.iter().copied()).collect();
        let (Some((sa, na)), Some((sb, nb))) = (normalize_row(&ra), normalize_row(&rb)) else { continue };
        let mut new_rows = rows.clone();
        new_rows[a] = na;
        new_rows[a + 1] = nb;
        // original = -Σ_{others} sgn · term
        out.push((new_rows, -sg * sa * sb));
    }
    out
}

/// Straightens a combination of rectangular tableaux (rows as sorted sets of
/// equal length, read as products of maximal minors). The result has only
/// column-standard arrangements.
pub fn straighten_rectangular(input: &FormalSum<Rows>) -> FormalSum<Rows> {
    let mut work: FormalSum<Rows> = FormalSum::new();
    for (rows, c) in input.iter() {
        if let Some((sign, sorted)) = sort_rows_in_place(rows) {
            work.add(key_of(&sorted), c * BigInt::from(sign));
        }
    }
    let mut out = FormalSum::new();
    while let Some((key, coef)) = work.pop_first() {
        let rows = rows_of(&key);
        match first_violation(&rows) {
            None => out.add(rows, coef),
            Some((a, c)) => {
                for (nr, s) in exchange(&rows, a, c) {
                    work.add(key_of(&nr), &coef * BigInt::from(s));
                }
            }
        }
    }
    out
}

/// Sorts each row (with sign); `None` if a row repeats an entry.
fn sort_rows_in_place(rows: &Rows) -> Option<(i32, Rows)> {
    let mut sign = 1;
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let (s, v) = normalize_row(r)?;
        sign *= s;
        out.push(v);
    }
    // start from the lexicographic arrangement; the product is commutative
    out.sort();
    Some((sign, out))
}

/// Sign ε with [S|T] = ε · P(S ∪ {n+m+1−u : u ∉ T}).
fn embed_sign(t: &[usize], m: usize) -> i32 {
    let tc: Vec<usize> = (1..=m).filter(|u| !t.contains(u)).collect();
    let p = tc.len();
    let s = perm_sign(&t.iter().chain(&tc).copied().collect::<Vec<_>>());
    if (p * p.saturating_sub(1) / 2).is_multiple_of(2) {
        s
    } else {
        -s
    }
}

fn to_plucker(s: &[usize], t: &[usize], m: usize, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = s.to_vec();
    let mut id: Vec<usize> = (1..=m).filter(|u| !t.contains(u)).map(|u| n + m + 1 - u).collect();
    id.sort_unstable();
    p.extend(id);
    p
}

fn from_plucker(p: &[usize], m: usize, n: usize) -> (Vec<usize>, Vec<usize>) {
    let s: Vec<usize> = p.iter().copied().filter(|&e| e <= n).collect();
    let tc: Vec<usize> = p.iter().copied().filter(|&e| e > n).map(|e| n + m + 1 - e).collect();
    let t: Vec<usize> = (1..=m).filter(|u| !tc.contains(u)).collect();
    (s, t)
}

/// Straightens bitableaux over an m×n matrix (t entries ≤ m, s entries ≤ n)
/// into a combination of standard bitableaux in canonical form.
pub fn straighten_in(x: &FormalSum<Bitableau>, m: usize, n: usize) -> Result<FormalSum<Bitableau>> {
    let mut pl: FormalSum<Rows> = FormalSum::new();
    for (b, c) in x.iter() {
        if b.left().max_entry() > n || b.right().max_entry() > m {
            return Err(Error::OutOfRange(format!("{b} does not fit a {m}x{n} matrix")));
        }
        let Some((sign, canon)) = b.canonical() else { continue };
        let mut eps = sign;
        let mut rows = Vec::new();
        for (s, t) in canon.rows() {
            eps *= embed_sign(t, m);
            rows.push(to_plucker(s, t, m, n));
        }
        pl.add(rows, c * BigInt::from(eps));
    }
    let st = straighten_rectangular(&pl);
    let mut out = FormalSum::new();
    for (rows, c) in st.iter() {
        let mut eps = 1;
        let mut brows = Vec::new();
        for p in rows {
            let (s, t) = from_plucker(p, m, n);
            eps *= embed_sign(&t, m);
            if !s.is_empty() {
                brows.push((s, t));
            }
        }
        let b = Bitableau::from_rows(brows)?;
        let (sign, canon) = b.canonical().expect("rows of a Plücker tableau are repetition-free");
        out.add(canon, c * BigInt::from(eps * sign));
    }
    Ok(out)
}

/// Straightens with the smallest matrix bounds that fit every term.
pub fn straighten(x: &FormalSum<Bitableau>) -> Result<FormalSum<Bitableau>> {
    let m = x.iter().map(|(b, _)| b.right().max_entry()).max().unwrap_or(0).max(1);
    let n = x.iter().map(|(b, _)| b.left().max_entry()).max().unwrap_or(0).max(1);
    straighten_in(x, m, n)
}

/// Name of the Plücker coordinate of the column set `cols`: `x_1_2_4`.
pub fn plucker_variable_name(cols: &[usize]) -> String {
    let mut s = String::from("x");
    for c in cols {
        s.push('_');
        s.push_str(&c.to_string());
    }
    s
}

/// Quadratic relations among the maximal minors of an r×k matrix: one per
/// nonstandard two-row tableau, `x_I·x_J − (its straightened expansion)`.
/// Variables are the r-subsets of 1..=k in lexicographic order.
pub fn plucker_relations(r: usize, k: usize) -> Result<(Ring, Vec<Polynomial>)> {
    if r == 0 || r >= k {
        return Err(Error::OutOfRange(format!("Plücker relations need 0 < r < k, got r={r}, k={k}")));
    }
    let subsets = lex_subsets(k, r);
    let names: Vec<String> = subsets.iter().map(|s| plucker_variable_name(s.as_slice())).collect();
    let ring = RingCtx::with_names(names, CoeffDomain::Integers)?;
    let nv = subsets.len();
    let index = |row: &[usize]| subsets.iter().position(|s| s.as_slice() == row).expect("r-subset");
    let mono = |a: usize, b: usize| {
        let mut e = vec![0u32; nv];
        e[a] += 1;
        e[b] += 1;
        Monomial(e)
    };
    let mut rels = Vec::new();
    for i in 0..nv {
        for j in i..nv {
            let rows = vec![subsets[i].as_slice().to_vec(), subsets[j].as_slice().to_vec()];
            if first_violation(&rows).is_none() {
                continue;
            }
            let expansion = straighten_rectangular(&FormalSum::single(rows));
            let mut terms = vec![(mono(i, j), BigInt::one())];
            for (rs, c) in expansion.iter() {
                terms.push((mono(index(&rs[0]), index(&rs[1])), -c.clone()));
            }
            rels.push(Polynomial::from_terms(&ring, terms));
        }
    }
    Ok((ring, rels))
}
