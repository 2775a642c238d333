//! Tchernev's three quadratic identities among multipliers and minors.
//!
//! All index sets are 1-based subsets; A, C, D, E, G index the basis of
//! F_{k-1}, F, H, K, Λ the basis of F_k.

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{FreeComplex, MultiplierTable};
use crate::subsets::{lex_subsets, sgn};
use crate::{Error, Polynomial, Result, RingExt, SubsetIndex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TchernevIndices {
    /// Σ_Γ sgn(A,C−Γ) sgn(C−Γ,Γ) sgn(Γ,D) ⟨A∪(C−Γ)⟩_k ⟨Γ∪D⟩_k over
    /// C∩A ⊆ Γ ⊆ C−D, |Γ| = q, where |A| = r_k−p, |D| = r_k−q,
    /// |C| = p+q ≥ r_k+1.
    First { a: SubsetIndex, c: SubsetIndex, d: SubsetIndex },
    /// As `First` with D replaced by E and the second factor by the minor
    /// ⟨Γ∪E|F⟩ of d_k, where |F| = s ≤ r_k and |E| = s−q.
    Second { a: SubsetIndex, c: SubsetIndex, e: SubsetIndex, f: SubsetIndex },
    /// Σ_Γ sgn(H,Γ) sgn(Γ,K) ⟨G|H∪Γ⟩_k ⟨Γ∪K⟩_{k+1} over
    /// Γ ⊆ [b_k]−(Λ∪H∪K), |Γ| = t, where |G| = m ≤ r_k, |H| = m−t,
    /// |K| = r_{k+1}−t and |Λ| < t ≤ min(m, r_{k+1}).
    Third { g: SubsetIndex, h: SubsetIndex, k: SubsetIndex, lambda: SubsetIndex },
}

impl TchernevIndices {
    pub fn variant(&self) -> u8 {
        match self {
            TchernevIndices::First { .. } => 1,
            TchernevIndices::Second { .. } => 2,
            TchernevIndices::Third { .. } => 3,
        }
    }
}

fn card(msg: String) -> Error {
    Error::Cardinality(msg)
}

fn check_within(s: &SubsetIndex, n: usize, name: &str) -> Result<()> {
    if s.max().is_some_and(|m| m > n) {
        return Err(Error::OutOfRange(format!("{name} = {s} is not inside [{n}]")));
    }
    Ok(())
}

fn minus(x: &SubsetIndex, y: &SubsetIndex) -> SubsetIndex {
    SubsetIndex::new(x.as_slice().iter().copied().filter(|&i| !y.contains(i)).collect()).expect("subset of a subset")
}

fn intersect(x: &SubsetIndex, y: &SubsetIndex) -> SubsetIndex {
    SubsetIndex::new(x.as_slice().iter().copied().filter(|&i| y.contains(i)).collect()).expect("subset of a subset")
}

/// Subsets Γ of `pool` with |Γ| = q containing `must`.
fn gammas(pool: &SubsetIndex, must: &SubsetIndex, q: usize) -> Vec<SubsetIndex> {
    if !must.is_subset_of(pool) || must.len() > q || q > pool.len() {
        return vec![];
    }
    let free = minus(pool, must);
    lex_subsets(free.len(), q - must.len())
        .into_iter()
        .map(|pos| must.union(&SubsetIndex::new(pos.as_slice().iter().map(|&i| free.as_slice()[i - 1]).collect()).unwrap()))
        .collect()
}

fn mult(t: &MultiplierTable, level: usize, x: &SubsetIndex) -> Polynomial {
    t.get(level, x).cloned().unwrap_or_else(|| panic!("multiplier <{x}>_{level} missing from the table"))
}

/// Parameters (p, q) for the first two variants, after the cardinality checks.
fn pq(r: usize, a: usize, c: usize, second: usize, what: &str) -> Result<(usize, usize)> {
    let p = r.checked_sub(a).ok_or_else(|| card(format!("|A| = {a} exceeds r_k = {r}")))?;
    let q = r.checked_sub(second).ok_or_else(|| card(format!("|{what}| = {second} exceeds r_k = {r}")))?;
    if c != p + q {
        return Err(card(format!("|C| = {c} but p + q = {}", p + q)));
    }
    if c < r + 1 {
        return Err(card(format!("|C| = {c} must be at least r_k + 1 = {}", r + 1)));
    }
    Ok((p, q))
}

/// Assembles the signed sum of the chosen identity at `level` from the
/// multiplier table and the minors of the differentials.
pub fn tchernev_identity(cx: &FreeComplex, t: &MultiplierTable, level: usize, idx: &TchernevIndices) -> Result<Polynomial> {
    let n = cx.length();
    if level == 0 || level > n {
        return Err(Error::OutOfRange(format!("level {level} of a complex of length {n}")));
    }
    let ring = cx.ring();
    let b = cx.betti();
    let (lo, hi) = (b[level - 1], b[level]);
    let r = t.ranks().get(level);
    let mut acc = ring.zero();
    let mut add = |s: i32, x: Polynomial, y: Polynomial| {
        if s != 0 && !x.is_zero() && !y.is_zero() {
            let p = (&x * &y).scale(&s.into());
            acc = &acc + &p;
        }
    };
    match idx {
        TchernevIndices::First { a, c, d } => {
            for (s, nm) in [(a, "A"), (c, "C"), (d, "D")] {
                check_within(s, lo, nm)?;
            }
            let (_, q) = pq(r, a.len(), c.len(), d.len(), "D")?;
            for g in gammas(&minus(c, d), &intersect(c, a), q) {
                let cg = minus(c, &g);
                let s = sgn(a.as_slice(), cg.as_slice()) * sgn(cg.as_slice(), g.as_slice()) * sgn(g.as_slice(), d.as_slice());
                if s != 0 {
                    add(s, mult(t, level, &a.union(&cg)), mult(t, level, &g.union(d)));
                }
            }
        }
        TchernevIndices::Second { a, c, e, f } => {
            for (s, nm) in [(a, "A"), (c, "C"), (e, "E")] {
                check_within(s, lo, nm)?;
            }
            check_within(f, hi, "F")?;
            if f.len() > r {
                return Err(card(format!("|F| = {} exceeds r_k = {r}", f.len())));
            }
            let q = f.len().checked_sub(e.len()).ok_or_else(|| card(format!("|E| = {} exceeds |F| = {}", e.len(), f.len())))?;
            pq(r, a.len(), c.len(), r - q, "D")?;
            let d = cx.differential(level);
            for g in gammas(&minus(c, e), &intersect(c, a), q) {
                let cg = minus(c, &g);
                let s = sgn(a.as_slice(), cg.as_slice()) * sgn(cg.as_slice(), g.as_slice()) * sgn(g.as_slice(), e.as_slice());
                if s != 0 {
                    add(s, mult(t, level, &a.union(&cg)), d.minor(&g.union(e), f)?);
                }
            }
        }
        TchernevIndices::Third { g, h, k, lambda } => {
            check_within(g, lo, "G")?;
            for (s, nm) in [(h, "H"), (k, "K"), (lambda, "Λ")] {
                check_within(s, hi, nm)?;
            }
            let r1 = t.ranks().get(level + 1);
            let m = g.len();
            if m > r {
                return Err(card(format!("|G| = {m} exceeds r_k = {r}")));
            }
            let tt = m.checked_sub(h.len()).ok_or_else(|| card(format!("|H| = {} exceeds |G| = {m}", h.len())))?;
            if k.len() + tt != r1 {
                return Err(card(format!("|K| = {} but r_(k+1) − t = {}", k.len(), r1 as i64 - tt as i64)));
            }
            if !(lambda.len() < tt && tt <= m.min(r1)) {
                return Err(card(format!("need |Λ| < t ≤ min(m, r_(k+1)); |Λ| = {}, t = {tt}, m = {m}, r_(k+1) = {r1}", lambda.len())));
            }
            let d = cx.differential(level);
            let pool = minus(&minus(&minus(&SubsetIndex::full(hi), lambda), h), k);
            for gm in gammas(&pool, &SubsetIndex::empty(), tt) {
                let s = sgn(h.as_slice(), gm.as_slice()) * sgn(gm.as_slice(), k.as_slice());
                if s != 0 {
                    add(s, d.minor(g, &h.union(&gm))?, mult(t, level + 1, &gm.union(k)));
                }
            }
        }
    }
    Ok(acc)
}

fn random_subset(rng: &mut impl Rng, n: usize, k: usize) -> SubsetIndex {
    SubsetIndex::from_unsorted(sample(rng, n, k).into_iter().map(|i| i + 1).collect()).expect("distinct")
}

fn initial(k: usize) -> SubsetIndex {
    SubsetIndex::full(k)
}

/// Admissible (p, q) pairs of the first variant: p, q ≤ r, r+1 ≤ p+q ≤ N.
fn pq_pairs(r: usize, n: usize) -> Vec<(usize, usize)> {
    let mut v = vec![];
    for p in 0..=r {
        for q in 0..=r {
            if p + q > r && p + q <= n {
                v.push((p, q));
            }
        }
    }
    v
}

/// The admissible index sets with the smallest parameters, all chosen as
/// initial segments; `None` if the level admits none.
pub fn smallest_instance(betti: &[usize], ranks: &[usize], variant: u8, level: usize) -> Option<TchernevIndices> {
    let (lo, hi) = (*betti.get(level - 1)?, *betti.get(level)?);
    let r = ranks.get(level).copied().unwrap_or(0);
    match variant {
        1 => {
            let &(p, q) = pq_pairs(r, lo).first()?;
            Some(TchernevIndices::First { a: initial(r - p), c: initial(p + q), d: initial(r - q) })
        }
        2 => {
            let &(p, q) = pq_pairs(r, lo).iter().find(|&&(_, q)| q <= hi.min(r))?;
            Some(TchernevIndices::Second { a: initial(r - p), c: initial(p + q), e: initial(0), f: initial(q) })
        }
        3 => {
            let r1 = ranks.get(level + 1).copied().unwrap_or(0);
            let m = r.min(lo);
            if m == 0 || r1 == 0 || r1 > hi {
                return None;
            }
            let t = 1;
            Some(TchernevIndices::Third { g: initial(m), h: initial(m - t), k: initial(r1 - t), lambda: initial(0) })
        }
        _ => None,
    }
}

/// A uniformly random admissible tuple for the variant at `level`; sets
/// may overlap (the signs then kill the offending terms).
pub fn random_instance(betti: &[usize], ranks: &[usize], variant: u8, level: usize, rng: &mut impl Rng) -> Option<TchernevIndices> {
    let (lo, hi) = (*betti.get(level - 1)?, *betti.get(level)?);
    let r = ranks.get(level).copied().unwrap_or(0);
    match variant {
        1 => {
            let pairs = pq_pairs(r, lo);
            if pairs.is_empty() {
                return None;
            }
            let (p, q) = pairs[rng.gen_range(0..pairs.len())];
            Some(TchernevIndices::First {
                a: random_subset(rng, lo, r - p),
                c: random_subset(rng, lo, p + q),
                d: random_subset(rng, lo, r - q),
            })
        }
        2 => {
            let pairs: Vec<_> = pq_pairs(r, lo).into_iter().filter(|&(_, q)| q <= hi.min(r)).collect();
            if pairs.is_empty() {
                return None;
            }
            let (p, q) = pairs[rng.gen_range(0..pairs.len())];
            let s = rng.gen_range(q..=hi.min(r));
            if s - q > lo {
                return None;
            }
            Some(TchernevIndices::Second {
                a: random_subset(rng, lo, r - p),
                c: random_subset(rng, lo, p + q),
                e: random_subset(rng, lo, s - q),
                f: random_subset(rng, hi, s),
            })
        }
        3 => {
            let r1 = ranks.get(level + 1).copied().unwrap_or(0);
            let mmax = r.min(lo);
            if mmax == 0 || r1 == 0 || r1 > hi {
                return None;
            }
            let m = rng.gen_range(1..=mmax);
            let t = rng.gen_range(1..=m.min(r1));
            let l = rng.gen_range(0..t);
            Some(TchernevIndices::Third {
                g: random_subset(rng, lo, m),
                h: random_subset(rng, hi, m - t),
                k: random_subset(rng, hi, r1 - t),
                lambda: random_subset(rng, hi, l),
            })
        }
        _ => None,
    }
}
