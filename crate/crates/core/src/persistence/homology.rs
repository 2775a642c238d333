//! Simplicial homology of the slices X_u, the rank invariant and minimal
//! presentations of Hᵢ as a bigraded module.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{grading_ring, monomial, with_field, Bifiltration, GradedFreeModule, GradedMap};
use crate::field::{nullspace, rank, row_basis, Field, Span};
use crate::{Error, PolyMatrix, Result};

fn le2(a: [u32; 2], b: [u32; 2]) -> bool {
    a[0] <= b[0] && a[1] <= b[1]
}

/// Boundary data in dimensions i−1, i, i+1 with global indexing per
/// dimension.
struct Chains<'a> {
    b: &'a Bifiltration,
    /// storage indices of the i-simplices
    cells: Vec<usize>,
    /// ∂ of each i-simplex, as (position among (i−1)-simplices, ±1)
    down: Vec<Vec<(usize, i64)>>,
    /// ∂ of each (i+1)-simplex, as (position among i-simplices, ±1)
    up: Vec<(usize, Vec<(usize, i64)>)>,
    faces: usize,
}

fn boundary(b: &Bifiltration, s: usize, pos: &BTreeMap<usize, usize>) -> Vec<(usize, i64)> {
    let v = &b.simplices()[s].vertices;
    if v.len() < 2 {
        return vec![];
    }
    (0..v.len())
        .map(|k| {
            let mut f = v.clone();
            f.remove(k);
            let g = b.position(&f).expect("closed under faces");
            (pos[&g], if k % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

impl<'a> Chains<'a> {
    fn new(b: &'a Bifiltration, i: usize) -> Self {
        let of = |d: usize| -> Vec<usize> { b.of_dim(d).map(|(k, _)| k).collect() };
        let cells = of(i);
        let lower = if i == 0 { vec![] } else { of(i - 1) };
        let upper = of(i + 1);
        let lpos: BTreeMap<usize, usize> = lower.iter().enumerate().map(|(p, &k)| (k, p)).collect();
        let cpos: BTreeMap<usize, usize> = cells.iter().enumerate().map(|(p, &k)| (k, p)).collect();
        let down = cells.iter().map(|&s| if i == 0 { vec![] } else { boundary(b, s, &lpos) }).collect();
        let up = upper.iter().map(|&s| (s, boundary(b, s, &cpos))).collect();
        Chains { b, cells, down, up, faces: lower.len() }
    }

    fn grade(&self, k: usize) -> [u32; 2] {
        self.b.simplices()[k].grade
    }

    /// Basis of Zᵢ(X_u) in coordinates over all i-simplices.
    fn cycles<F: Field>(&self, f: &F, u: [u32; 2]) -> Vec<Vec<F::Elem>> {
        let alive: Vec<usize> = (0..self.cells.len()).filter(|&c| le2(self.grade(self.cells[c]), u)).collect();
        // ∂ restricted to the live cells: faces × alive
        let mut m = vec![vec![f.zero(); alive.len()]; self.faces];
        for (col, &c) in alive.iter().enumerate() {
            for &(r, s) in &self.down[c] {
                m[r][col] = f.from_i64(s);
            }
        }
        nullspace(f, &m, alive.len())
            .into_iter()
            .map(|z| {
                let mut v = vec![f.zero(); self.cells.len()];
                for (x, &c) in z.into_iter().zip(&alive) {
                    v[c] = x;
                }
                v
            })
            .collect()
    }

    /// Spanning set of Bᵢ(X_u).
    fn boundaries<F: Field>(&self, f: &F, u: [u32; 2]) -> Vec<Vec<F::Elem>> {
        self.up
            .iter()
            .filter(|(s, _)| le2(self.grade(*s), u))
            .map(|(_, bd)| {
                let mut v = vec![f.zero(); self.cells.len()];
                for &(r, s) in bd {
                    v[r] = f.from_i64(s);
                }
                v
            })
            .collect()
    }
}

fn check_grade(b: &Bifiltration, u: [u32; 2]) -> Result<()> {
    let g = b.grid();
    if u[0] >= g[0] || u[1] >= g[1] {
        return Err(Error::OutOfRange(format!("grade {u:?} outside the grid {g:?}")));
    }
    Ok(())
}

fn rho<F: Field>(f: &F, ch: &Chains, u: [u32; 2], v: [u32; 2]) -> usize {
    let bv = ch.boundaries(f, v);
    let rb = rank(f, &bv);
    let mut all = bv;
    all.extend(ch.cycles(f, u));
    rank(f, &all) - rb
}

/// Rank of Hᵢ(X_u) → Hᵢ(X_v) over ℚ (p = 0) or ℤ/p.
pub fn rank_invariant(b: &Bifiltration, i: usize, u: [u32; 2], v: [u32; 2], p: u64) -> Result<usize> {
    check_grade(b, u)?;
    check_grade(b, v)?;
    if !le2(u, v) {
        return Err(Error::Invalid(format!("{u:?} ≰ {v:?}")));
    }
    let ch = Chains::new(b, i);
    with_field!(p, f => Ok(rho(&f, &ch, u, v)))
}

/// dim Hᵢ(X_u).
pub fn betti_numbers(b: &Bifiltration, i: usize, u: [u32; 2], p: u64) -> Result<usize> {
    rank_invariant(b, i, u, u, p)
}

/// ρᵢ(u, v) for every i ≤ `max_dim` and every u ≤ v in the grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankInvariantTable {
    pub grid: [u32; 2],
    pub field: u64,
    pub entries: BTreeMap<(usize, [u32; 2], [u32; 2]), usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRecord {
    pub i: usize,
    pub u: [u32; 2],
    pub v: [u32; 2],
    pub rank: usize,
}

impl RankInvariantTable {
    pub fn get(&self, i: usize, u: [u32; 2], v: [u32; 2]) -> Option<usize> {
        self.entries.get(&(i, u, v)).copied()
    }
    pub fn records(&self) -> Vec<RankRecord> {
        self.entries.iter().map(|(&(i, u, v), &rank)| RankRecord { i, u, v, rank }).collect()
    }
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,u1,u2,v1,v2,rank\n");
        for r in self.records() {
            s.push_str(&format!("{},{},{},{},{},{}\n", r.i, r.u[0], r.u[1], r.v[0], r.v[1], r.rank));
        }
        s
    }
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "grid": self.grid, "field": self.field, "entries": self.records() })
    }
}

pub fn rank_invariant_table(b: &Bifiltration, max_dim: usize, p: u64) -> Result<RankInvariantTable> {
    let pts = b.grid_points();
    let pairs: Vec<([u32; 2], [u32; 2])> =
        pts.iter().flat_map(|&u| pts.iter().filter(move |&&v| le2(u, v)).map(move |&v| (u, v))).collect();
    let mut entries = BTreeMap::new();
    for i in 0..=max_dim {
        let ch = Chains::new(b, i);
        let vals: Vec<usize> = with_field!(p, f => pairs.par_iter().map(|&(u, v)| rho(&f, &ch, u, v)).collect());
        for (&(u, v), r) in pairs.iter().zip(vals) {
            entries.insert((i, u, v), r);
        }
    }
    Ok(RankInvariantTable { grid: b.grid(), field: p, entries })
}

/// Hᵢ(X_u; ℤ) ≅ ℤ^betti ⊕ ⊕ ℤ/t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralHomology {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

/// Integral homology of one slice via Smith normal forms.
pub fn integral_homology(b: &Bifiltration, i: usize, u: [u32; 2]) -> Result<IntegralHomology> {
    check_grade(b, u)?;
    let ch = Chains::new(b, i);
    let alive: Vec<usize> = (0..ch.cells.len()).filter(|&c| le2(ch.grade(ch.cells[c]), u)).collect();
    let mut down = vec![vec![BigInt::zero(); alive.len()]; ch.faces];
    for (col, &c) in alive.iter().enumerate() {
        for &(r, s) in &ch.down[c] {
            down[r][col] = BigInt::from(s);
        }
    }
    let ups: Vec<&Vec<(usize, i64)>> = ch.up.iter().filter(|(s, _)| le2(ch.grade(*s), u)).map(|(_, bd)| bd).collect();
    let mut up = vec![vec![BigInt::zero(); ups.len()]; ch.cells.len()];
    for (col, bd) in ups.iter().enumerate() {
        for &(r, s) in bd.iter() {
            up[r][col] = BigInt::from(s);
        }
    }
    let rd = crate::intmat::smith_diagonal(&down).len();
    let su = crate::intmat::smith_diagonal(&up);
    Ok(IntegralHomology {
        betti: alive.len() - rd - su.len(),
        torsion: su.into_iter().filter(|d| !d.is_one()).collect(),
    })
}

/// A minimal presentation F₁ → F₀ → Hᵢ → 0 of the homology module.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub map: GradedMap,
    /// Representative cycle of each generator, over all i-simplices.
    pub representatives: Vec<Vec<BigInt>>,
}

impl Presentation {
    pub fn generators(&self) -> Vec<Vec<u32>> {
        self.map.target().basis_grades()
    }
    pub fn relations(&self) -> Vec<Vec<u32>> {
        self.map.source().basis_grades()
    }
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "generators": self.generators(),
            "relations": self.relations(),
            "map": self.map.to_json(),
        })
    }
}

/// Minimal generators come from extending B(X_u) + Z(X_{u−e₁}) + Z(X_{u−e₂})
/// to Z(X_u); minimal relations likewise from the kernels of F₀ → Hᵢ.
pub fn presentation_of_homology(b: &Bifiltration, i: usize, grid: [u32; 2], p: u64) -> Result<Presentation> {
    if let Some(s) = b.simplices().iter().find(|s| s.grade[0] >= grid[0] || s.grade[1] >= grid[1]) {
        return Err(Error::GridTooSmall(format!("{:?} enters at {:?}, outside {grid:?}", s.vertices, s.grade)));
    }
    with_field!(p, f => present(&f, b, i, grid, p))
}

fn present<F: Field>(f: &F, b: &Bifiltration, i: usize, grid: [u32; 2], p: u64) -> Result<Presentation> {
    let ch = Chains::new(b, i);
    let n = ch.cells.len();
    let pts: Vec<[u32; 2]> = (0..grid[0]).flat_map(|a| (0..grid[1]).map(move |c| [a, c])).collect();
    let below = |u: [u32; 2]| -> Vec<[u32; 2]> {
        let mut v = vec![];
        if u[0] > 0 {
            v.push([u[0] - 1, u[1]]);
        }
        if u[1] > 0 {
            v.push([u[0], u[1] - 1]);
        }
        v
    };
    let z: BTreeMap<[u32; 2], Vec<Vec<F::Elem>>> = pts.iter().map(|&u| (u, ch.cycles(f, u))).collect();
    let bd: BTreeMap<[u32; 2], Vec<Vec<F::Elem>>> = pts.iter().map(|&u| (u, row_basis(f, &ch.boundaries(f, u)))).collect();

    let mut gens: Vec<([u32; 2], Vec<F::Elem>)> = vec![];
    for &u in &pts {
        let mut span = Span::new(f.clone(), n);
        for v in bd[&u].iter().chain(below(u).iter().flat_map(|w| z[w].iter())) {
            span.insert(v);
        }
        for c in &z[&u] {
            if span.insert(c) {
                gens.push((u, c.clone()));
            }
        }
    }

    let g = gens.len();
    // K_w ⊆ 𝕂^g: coefficient vectors whose combination is a boundary at w
    let kernel = |w: [u32; 2]| -> Vec<Vec<F::Elem>> {
        let live: Vec<usize> = (0..g).filter(|&k| le2(gens[k].0, w)).collect();
        let bw = &bd[&w];
        let cols = live.len() + bw.len();
        let mut m = vec![vec![f.zero(); cols]; n];
        for (c, &k) in live.iter().enumerate() {
            for r in 0..n {
                m[r][c] = gens[k].1[r].clone();
            }
        }
        for (c, v) in bw.iter().enumerate() {
            for r in 0..n {
                m[r][live.len() + c] = v[r].clone();
            }
        }
        let sols: Vec<Vec<F::Elem>> = nullspace(f, &m, cols)
            .into_iter()
            .map(|s| {
                let mut a = vec![f.zero(); g];
                for (c, &k) in live.iter().enumerate() {
                    a[k] = s[c].clone();
                }
                a
            })
            .collect();
        row_basis(f, &sols)
    };
    let ks: BTreeMap<[u32; 2], Vec<Vec<F::Elem>>> = pts.iter().map(|&w| (w, kernel(w))).collect();
    let mut rels: Vec<([u32; 2], Vec<F::Elem>)> = vec![];
    for &w in &pts {
        let mut span = Span::new(f.clone(), g);
        for v in below(w).iter().flat_map(|x| ks[x].iter()) {
            span.insert(v);
        }
        for a in &ks[&w] {
            if span.insert(a) {
                rels.push((w, a.clone()));
            }
        }
    }

    let ring = grading_ring(2, p)?;
    let gen_grades: Vec<Vec<u32>> = gens.iter().map(|(u, _)| u.to_vec()).collect();
    let rel_grades: Vec<Vec<u32>> = rels.iter().map(|(u, _)| u.to_vec()).collect();
    let mut m = PolyMatrix::zero(&ring, g, rels.len());
    for (c, (w, a)) in rels.iter().enumerate() {
        let ints = f.integer_vector(a);
        for (k, x) in ints.into_iter().enumerate() {
            if !x.is_zero() {
                let e = [w[0] - gens[k].0[0], w[1] - gens[k].0[1]];
                m.set(k, c, monomial(&ring, &e, x));
            }
        }
    }
    let map = GradedMap::new(GradedFreeModule::from_grades(2, &rel_grades)?, GradedFreeModule::from_grades(2, &gen_grades)?, m)?;
    let representatives = gens.iter().map(|(_, c)| f.integer_vector(c)).collect();
    Ok(Presentation { map, representatives })
}
