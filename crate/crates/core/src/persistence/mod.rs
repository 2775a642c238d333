//! Multigraded free modules over 𝕂[x_1..x_n], homogeneous maps between them,
//! tops and projective covers, and the bifiltration → rank-invariant
//! pipeline.
//!
//! A grade u ∈ ℕⁿ stands for the free module R(−u). A map
//! ⊕R(−u(i)) → ⊕R(−v(j)) has entry (j, i) equal to c·x^{u(i)−v(j)}.

mod bifiltration;
mod homology;

pub use bifiltration::{
    flag_bifiltration, Bifiltration, BifiltrationJson, BuildReport, FlagOptions, Simplex, Snapshot, SnapshotEdge,
    SnapshotVertex, VertexLabel,
};
pub use homology::{
    betti_numbers, integral_homology, presentation_of_homology, rank_invariant, rank_invariant_table, IntegralHomology,
    Presentation, RankInvariantTable,
};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::field::{Field, Span};
use crate::{CoeffDomain, Error, PolyMatrix, Polynomial, Result, Ring, RingCtx};

/// A multidegree in ℕⁿ.
pub type Grade = Vec<u32>;

/// u ≤ v componentwise.
pub fn grade_le(u: &[u32], v: &[u32]) -> bool {
    u.len() == v.len() && u.iter().zip(v).all(|(a, b)| a <= b)
}

/// Runs `$body` with `$f` bound to ℚ (p = 0) or ℤ/p.
macro_rules! with_field {
    ($p:expr, $f:ident => $body:expr) => {
        if $p == 0 {
            let $f = $crate::field::Rationals;
            $body
        } else {
            let $f = $crate::field::PrimeField::new($p)?;
            $body
        }
    };
}
pub(crate) use with_field;

/// ⊕ R(−u)^{m(u)}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedFreeModule {
    n: usize,
    summands: Vec<(Grade, usize)>,
}

impl GradedFreeModule {
    pub fn new(n: usize, summands: Vec<(Grade, usize)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for (u, m) in &summands {
            if u.len() != n {
                return Err(Error::Shape(format!("grade {u:?} does not live in ℕ^{n}")));
            }
            if *m == 0 {
                return Err(Error::Invalid(format!("zero multiplicity at {u:?}")));
            }
            if !seen.insert(u.clone()) {
                return Err(Error::Invalid(format!("grade {u:?} listed twice")));
            }
        }
        Ok(GradedFreeModule { n, summands })
    }

    /// One summand per listed grade, merging repeats.
    pub fn from_grades(n: usize, grades: &[Grade]) -> Result<Self> {
        let mut out: Vec<(Grade, usize)> = vec![];
        for g in grades {
            match out.iter_mut().find(|(u, _)| u == g) {
                Some((_, m)) => *m += 1,
                None => out.push((g.clone(), 1)),
            }
        }
        GradedFreeModule::new(n, out)
    }

    pub fn zero(n: usize) -> Self {
        GradedFreeModule { n, summands: vec![] }
    }
    pub fn ambient(&self) -> usize {
        self.n
    }
    pub fn summands(&self) -> &[(Grade, usize)] {
        &self.summands
    }
    pub fn rank(&self) -> usize {
        self.summands.iter().map(|(_, m)| m).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }
    /// The grade of every basis element, summands expanded in order.
    pub fn basis_grades(&self) -> Vec<Grade> {
        self.summands.iter().flat_map(|(u, m)| std::iter::repeat_n(u.clone(), *m)).collect()
    }
    /// dim_𝕂 of the degree-u part.
    pub fn dim_at(&self, u: &[u32]) -> usize {
        self.summands.iter().filter(|(g, _)| grade_le(g, u)).map(|(_, m)| m).sum()
    }
}

impl fmt::Display for GradedFreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|(u, m)| {
                let g: Vec<String> = u.iter().map(|&x| if x == 0 { "0".into() } else { format!("-{x}") }).collect();
                let base = format!("R({})", g.join(","));
                if *m == 1 { base } else { format!("{base}^{m}") }
            })
            .collect();
        write!(f, "{}", parts.join("⊕"))
    }
}

#[derive(Clone, Debug)]
pub struct GradedMap {
    source: GradedFreeModule,
    target: GradedFreeModule,
    matrix: PolyMatrix,
}

impl GradedMap {
    /// Shapes are checked; homogeneity is not (see [`graded_map_check`]).
    pub fn new(source: GradedFreeModule, target: GradedFreeModule, matrix: PolyMatrix) -> Result<Self> {
        if source.n != target.n || matrix.ring().num_vars() != source.n {
            return Err(Error::Shape("grading dimension differs from the number of variables".into()));
        }
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(Error::Shape(format!(
                "{}×{} matrix for a map of rank {} → {}",
                matrix.rows(),
                matrix.cols(),
                source.rank(),
                target.rank()
            )));
        }
        Ok(GradedMap { source, target, matrix })
    }
    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }
    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }
    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    /// Column i as scalars: entry (j, i) = c·x^{…} contributes c.
    fn scalar_column(&self, i: usize) -> Vec<BigInt> {
        (0..self.matrix.rows())
            .map(|j| self.matrix.get(j, i).terms().first().map(|(_, c)| c.clone()).unwrap_or_else(BigInt::zero))
            .collect()
    }

    /// dim_𝕂 of the cokernel in degree u (requires a homogeneous map).
    pub fn cokernel_dim_at(&self, u: &[u32], p: u64) -> Result<usize> {
        let rows = self.target.basis_grades();
        let alive: Vec<usize> = (0..rows.len()).filter(|&j| grade_le(&rows[j], u)).collect();
        let cols: Vec<Vec<BigInt>> = self
            .source
            .basis_grades()
            .iter()
            .enumerate()
            .filter(|(_, g)| grade_le(g, u))
            .map(|(i, _)| {
                let c = self.scalar_column(i);
                alive.iter().map(|&j| c[j].clone()).collect()
            })
            .collect();
        with_field!(p, f => Ok(alive.len() - crate::field::rank(&f, &lift(&f, &cols))))
    }

    pub fn to_json(&self) -> GradedMapJson {
        GradedMapJson {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.to_json(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradedMapJson {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub matrix: crate::polymatrix::MatrixJson,
}

fn lift<F: Field>(f: &F, rows: &[Vec<BigInt>]) -> Vec<Vec<F::Elem>> {
    rows.iter().map(|r| r.iter().map(|c| f.from_int(c)).collect()).collect()
}

/// Every nonzero entry (j, i) is a single term c·x^{u(i)−v(j)} with
/// u(i) ≥ v(j).
pub fn graded_map_check(f: &GradedMap) -> bool {
    let src = f.source.basis_grades();
    let tgt = f.target.basis_grades();
    for (j, v) in tgt.iter().enumerate() {
        for (i, u) in src.iter().enumerate() {
            let e = f.matrix.get(j, i);
            if e.is_zero() {
                continue;
            }
            if e.num_terms() != 1 || !grade_le(v, u) {
                return false;
            }
            let want: Vec<u32> = u.iter().zip(v).map(|(a, b)| a - b).collect();
            if e.terms()[0].0.exps() != want.as_slice() {
                return false;
            }
        }
    }
    true
}

/// x^{a} in `ring`.
pub fn monomial(ring: &Ring, a: &[u32], c: BigInt) -> Polynomial {
    Polynomial::from_terms(ring, vec![(crate::Monomial(a.to_vec()), c)])
}

/// ℤ[x, y] (p = 0) or 𝔽_p[x, y]; more generally x_1..x_n for n ≠ 2.
pub fn grading_ring(n: usize, p: u64) -> Result<Ring> {
    let domain = if p == 0 { CoeffDomain::Integers } else { CoeffDomain::PrimeField(p) };
    if n == 2 {
        RingCtx::with_names(vec!["x".into(), "y".into()], domain)
    } else {
        RingCtx::indexed("x", n, domain)
    }
}

/// Minimal generator grades of M = coker f: at each u in the box
/// [0, grid], dim M_u / Σ_k x_k·M_{u−e_k}. Fails with `GridTooSmall` when a
/// generator of the target lies outside the box.
pub fn top(f: &GradedMap, grid: &[u32], p: u64) -> Result<Vec<(Grade, usize)>> {
    if grid.len() != f.target.n {
        return Err(Error::Shape(format!("grid of dimension {} for ℕ^{}", grid.len(), f.target.n)));
    }
    if let Some((u, _)) = f.target.summands.iter().find(|(u, _)| !grade_le(u, grid)) {
        return Err(Error::GridTooSmall(format!("generator at {u:?} outside the grid {grid:?}")));
    }
    with_field!(p, fld => top_over(&fld, f))
}

fn top_over<F: Field>(fld: &F, f: &GradedMap) -> Result<Vec<(Grade, usize)>> {
    let rows = f.target.basis_grades();
    let srcs = f.source.basis_grades();
    // only target grades can carry new generators
    let mut out: BTreeMap<Grade, usize> = BTreeMap::new();
    for u in f.target.summands.iter().map(|(u, _)| u) {
        let mut span = Span::new(fld.clone(), rows.len());
        for (j, v) in rows.iter().enumerate() {
            if grade_le(v, u) && v != u {
                let mut e = vec![fld.zero(); rows.len()];
                e[j] = fld.one();
                span.insert(&e);
            }
        }
        for (i, w) in srcs.iter().enumerate() {
            if grade_le(w, u) {
                let c: Vec<F::Elem> = f.scalar_column(i).iter().map(|x| fld.from_int(x)).collect();
                span.insert(&c);
            }
        }
        let d = f.target.dim_at(u) - span.rank();
        if d > 0 {
            out.insert(u.clone(), d);
        }
    }
    Ok(out.into_iter().collect())
}

/// ⊕ R(−u)^{m(u)} over the top.
pub fn projective_cover(top: &[(Grade, usize)], n: usize) -> Result<GradedFreeModule> {
    GradedFreeModule::new(n, top.to_vec())
}
