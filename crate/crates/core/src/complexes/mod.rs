//! Free complexes `R^{b_0} <- R^{b_1} <- ... <- R^{b_n}`, rank conditions,
//! Buchsbaum–Eisenbud multipliers, Tchernev's identities and the generic
//! complex ring S₀.

mod generic;
mod random;
mod tchernev;

pub use generic::{exactification_step, generic_complex_ring, Cycle, Exactification, GenericComplexRing, VariableEntry};
pub use random::{random_betti, random_rank_conforming, RandomComplexOptions};
pub use tchernev::{random_instance, smallest_instance, tchernev_identity, TchernevIndices};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::polymatrix::{MatrixJson, RingSpec};
use crate::polyring::{same_ring, Style};
use crate::subsets::{colex_subsets, sgn};
use crate::{Error, PolyMatrix, Polynomial, Result, Ring, RingExt, SubsetIndex};

/// `r_k = Σ_{j≥k} (−1)^{j−k} b_j` for k = 0..n, so that `b_k = r_k + r_{k+1}`.
pub fn rank_conditions(betti: &[usize]) -> Result<Vec<usize>> {
    let n = betti.len();
    let mut r = vec![0i64; n + 1];
    for k in (0..n).rev() {
        r[k] = betti[k] as i64 - r[k + 1];
    }
    r.truncate(n);
    if let Some((level, &value)) = r.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(Error::NegativeRank { level, value });
    }
    Ok(r.into_iter().map(|v| v as usize).collect())
}

#[derive(Clone, Debug)]
pub struct FreeComplex {
    ring: Ring,
    betti: Vec<usize>,
    diffs: Vec<PolyMatrix>,
}

impl FreeComplex {
    /// `diffs[k-1]` is d_k : R^{b_k} → R^{b_{k-1}}, a b_{k-1}×b_k matrix.
    pub fn new(ring: &Ring, betti: Vec<usize>, diffs: Vec<PolyMatrix>) -> Result<Self> {
        if betti.len() != diffs.len() + 1 {
            return Err(Error::Shape(format!("{} Betti numbers for {} differentials", betti.len(), diffs.len())));
        }
        for (k, d) in diffs.iter().enumerate() {
            if !same_ring(d.ring(), ring) {
                return Err(Error::RingMismatch);
            }
            if d.rows() != betti[k] || d.cols() != betti[k + 1] {
                return Err(Error::Shape(format!(
                    "d_{} is {}x{}, expected {}x{}",
                    k + 1,
                    d.rows(),
                    d.cols(),
                    betti[k],
                    betti[k + 1]
                )));
            }
        }
        Ok(FreeComplex { ring: ring.clone(), betti, diffs })
    }

    /// Betti numbers read off the matrix shapes.
    pub fn from_differentials(diffs: Vec<PolyMatrix>) -> Result<Self> {
        let first = diffs.first().ok_or_else(|| Error::Invalid("a complex needs at least one differential".into()))?;
        let ring = first.ring().clone();
        let mut betti = vec![first.rows()];
        betti.extend(diffs.iter().map(|d| d.cols()));
        Self::new(&ring, betti, diffs)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    pub fn betti(&self) -> &[usize] {
        &self.betti
    }
    /// Number of differentials n.
    pub fn length(&self) -> usize {
        self.diffs.len()
    }
    /// d_k, 1-based.
    pub fn differential(&self, k: usize) -> &PolyMatrix {
        &self.diffs[k - 1]
    }
    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.diffs
    }
    pub fn set_differential(&mut self, k: usize, d: PolyMatrix) -> Result<()> {
        let old = &self.diffs[k - 1];
        if d.rows() != old.rows() || d.cols() != old.cols() || !same_ring(d.ring(), &self.ring) {
            return Err(Error::Shape(format!("replacement for d_{k} has the wrong shape or ring")));
        }
        self.diffs[k - 1] = d;
        Ok(())
    }

    /// True iff every d_k·d_{k+1} vanishes.
    pub fn is_complex(&self) -> bool {
        self.diffs.windows(2).all(|w| w[0].matmul(&w[1]).map(|p| p.is_zero()).unwrap_or(false))
    }

    /// Actual ranks of d_1..d_n over the fraction field.
    pub fn ranks(&self) -> Vec<usize> {
        self.diffs.iter().map(|d| d.rank()).collect()
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            ring: Some(RingSpec::of(&self.ring)),
            betti: Some(self.betti.clone()),
            matrices: self.diffs.iter().map(|d| d.to_json()).collect(),
        }
    }
}

/// On-disk complex: optional ring, optional Betti numbers, d_1..d_n.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<usize>>,
    pub matrices: Vec<MatrixJson>,
}

impl ComplexJson {
    pub fn build(&self) -> Result<FreeComplex> {
        let ring = match &self.ring {
            Some(spec) => spec.build()?,
            None => {
                let texts: Vec<&str> =
                    self.matrices.iter().flat_map(|m| m.entries.iter().flatten().map(String::as_str)).collect();
                let names = crate::polymatrix::infer_variables(texts);
                crate::RingCtx::with_names(names, crate::CoeffDomain::Integers)?
            }
        };
        let diffs = self.matrices.iter().map(|m| m.build(Some(&ring))).collect::<Result<Vec<_>>>()?;
        let c = match &self.betti {
            Some(b) => FreeComplex::new(&ring, b.clone(), diffs)?,
            None => FreeComplex::from_differentials(diffs)?,
        };
        Ok(c)
    }
}

/// Ranks indexed by level: `r(0)..r(n+1)` with `r(n+1) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranks(Vec<usize>);

impl Ranks {
    /// Accepts `r_1..r_n` or `r_0..r_n`; checks `b_k = r_k + r_{k+1}` for k ≥ 1
    /// and `r_1 ≤ b_0`.
    pub fn for_complex(c: &FreeComplex, given: &[usize]) -> Result<Self> {
        let n = c.length();
        let b = c.betti();
        let mut r = match given.len() {
            l if l == n => {
                let mut v = vec![b[0].checked_sub(given.first().copied().unwrap_or(0)).ok_or_else(|| {
                    Error::RankFormat(format!("r_1 = {} exceeds b_0 = {}", given[0], b[0]))
                })?];
                v.extend_from_slice(given);
                v
            }
            l if l == n + 1 => given.to_vec(),
            l => return Err(Error::Shape(format!("{l} ranks for a complex of length {n}"))),
        };
        r.push(0);
        for k in 0..=n {
            if b[k] != r[k] + r[k + 1] {
                return Err(Error::RankFormat(format!("b_{k} = {} but r_{k} + r_{} = {}", b[k], k + 1, r[k] + r[k + 1])));
            }
        }
        Ok(Ranks(r))
    }

    /// The ranks forced by the Betti numbers.
    pub fn expected(c: &FreeComplex) -> Result<Self> {
        let r = rank_conditions(c.betti())?;
        Self::for_complex(c, &r)
    }

    pub fn get(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }
    /// `r_0..r_n`.
    pub fn as_slice(&self) -> &[usize] {
        &self.0[..self.0.len() - 1]
    }
}

/// ⟨A⟩_k for k = 1..n, keyed by r_k-subsets of the basis of F_{k-1}.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiplierTable {
    ranks: Ranks,
    levels: Vec<BTreeMap<SubsetIndex, Polynomial>>,
}

impl MultiplierTable {
    pub fn ranks(&self) -> &Ranks {
        &self.ranks
    }
    pub fn length(&self) -> usize {
        self.levels.len()
    }
    /// Entries of level k (1-based), keyed in colex order of insertion but
    /// iterated in the subsets' natural order.
    pub fn level(&self, k: usize) -> &BTreeMap<SubsetIndex, Polynomial> {
        &self.levels[k - 1]
    }
    /// ⟨A⟩_k; zero when A has the wrong size; one past the last level.
    pub fn get(&self, k: usize, a: &SubsetIndex) -> Option<&Polynomial> {
        self.levels.get(k.checked_sub(1)?)?.get(a)
    }

    /// Deterministic listing: levels ascending, subsets in colex order.
    pub fn render(&self, style: Style) -> String {
        let mut out = String::new();
        for (i, lv) in self.levels.iter().enumerate() {
            let mut keys: Vec<&SubsetIndex> = lv.keys().collect();
            keys.sort_by(|a, b| a.colex_cmp(b));
            for a in keys {
                out.push_str(&format!("<{}>_{} = {}\n", a, i + 1, lv[a].to_text(style)));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let levels: Vec<serde_json::Value> = self
            .levels
            .iter()
            .enumerate()
            .map(|(i, lv)| {
                let mut keys: Vec<&SubsetIndex> = lv.keys().collect();
                keys.sort_by(|a, b| a.colex_cmp(b));
                serde_json::json!({
                    "level": i + 1,
                    "rank": self.ranks.get(i + 1),
                    "entries": keys.iter().map(|a| serde_json::json!({
                        "subset": a.as_slice(),
                        "multiplier": lv[*a].to_string(),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "ranks": self.ranks.as_slice(), "levels": levels })
    }
}

fn lookup(t: &BTreeMap<SubsetIndex, Polynomial>, ring: &Ring, s: &SubsetIndex) -> Polynomial {
    t.get(s).cloned().unwrap_or_else(|| ring.zero())
}

/// Solves for the multipliers from the last level down by exact division,
/// then checks the defining relation for every (A, E).
pub fn be_multipliers(c: &FreeComplex, ranks: &[usize]) -> Result<MultiplierTable> {
    if !c.is_complex() {
        return Err(Error::Invalid("consecutive differentials do not compose to zero".into()));
    }
    let r = Ranks::for_complex(c, ranks)?;
    let n = c.length();
    let ring = c.ring().clone();
    let b = c.betti();
    let mut levels: Vec<BTreeMap<SubsetIndex, Polynomial>> = vec![BTreeMap::new(); n];
    for k in (1..=n).rev() {
        let rk = r.get(k);
        let d = c.differential(k);
        if rk == 0 {
            levels[k - 1].insert(SubsetIndex::empty(), ring.one());
            continue;
        }
        let rows = colex_subsets(b[k - 1], rk);
        let solved: Vec<(SubsetIndex, Polynomial)> = if k == n {
            let all = SubsetIndex::full(b[k]);
            rows.par_iter().map(|a| Ok((a.clone(), d.minor(a, &all)?))).collect::<Result<_>>()?
        } else {
            let next = &levels[k];
            let (e, ec_mult) = colex_subsets(b[k], rk)
                .into_iter()
                .find_map(|e| {
                    let ec = e.complement(b[k]);
                    let m = lookup(next, &ring, &ec);
                    (!m.is_zero()).then(|| {
                        let s = sgn(ec.as_slice(), e.as_slice());
                        (e, m.scale(&s.into()))
                    })
                })
                .ok_or_else(|| Error::RankFormat(format!("all multipliers at level {} vanish", k + 1)))?;
            rows.par_iter()
                .map(|a| {
                    let m = d.minor(a, &e)?;
                    match m.exact_div(&ec_mult)? {
                        Some(q) => Ok((a.clone(), q)),
                        None => Err(Error::RankFormat(format!(
                            "minor <{a}|{e}> of d_{k} is not divisible by the level-{} multiplier",
                            k + 1
                        ))),
                    }
                })
                .collect::<Result<_>>()?
        };
        levels[k - 1] = solved.into_iter().collect();
    }
    let t = MultiplierTable { ranks: r, levels };
    if let Some((k, a, e)) = first_violation(c, &t) {
        return Err(Error::RankFormat(format!("relation fails at level {k} for A = {a}, E = {e}")));
    }
    Ok(t)
}

/// First (k, A, E) where `<A|E> ≠ sgn(E^c,E) <A>_k <E^c>_{k+1}`.
fn first_violation(c: &FreeComplex, t: &MultiplierTable) -> Option<(usize, SubsetIndex, SubsetIndex)> {
    let b = c.betti();
    let ring = c.ring();
    for k in 1..=c.length() {
        let rk = t.ranks.get(k);
        if rk == 0 {
            continue;
        }
        let d = c.differential(k);
        let rows = colex_subsets(b[k - 1], rk);
        let cols = colex_subsets(b[k], rk);
        let cur = &t.levels[k - 1];
        let bad = rows.par_iter().find_map_first(|a| {
            let ma = lookup(cur, ring, a);
            for e in &cols {
                let ec = e.complement(b[k]);
                let mec = if k == c.length() { ring.one() } else { lookup(&t.levels[k], ring, &ec) };
                let rhs = (&ma * &mec).scale(&sgn(ec.as_slice(), e.as_slice()).into());
                let lhs = d.minor(a, e).ok()?;
                if lhs != rhs {
                    return Some((a.clone(), e.clone()));
                }
            }
            None
        });
        if let Some((a, e)) = bad {
            return Some((k, a, e));
        }
    }
    None
}

/// Every maximal minor of every d_k factors through the adjacent multipliers.
pub fn be_diagram_check(c: &FreeComplex, t: &MultiplierTable) -> bool {
    t.length() == c.length() && c.betti().len() + 1 == t.ranks.0.len() && first_violation(c, t).is_none()
}
