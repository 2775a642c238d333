//! Test-side oracles, independent of the library's linear algebra.
#![allow(dead_code)]

use persalg_core::persistence::{Bifiltration, Simplex};
use rand::Rng;

const P: u64 = 1_000_000_007;

fn inv(a: u64) -> u64 {
    let (mut b, mut e, mut r) = (a % P, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Greedy echelon basis over 𝔽_P.
#[derive(Default)]
pub struct Basis {
    rows: Vec<(usize, Vec<u64>)>,
}

impl Basis {
    fn reduce(&self, v: &mut [u64]) {
        for (p, r) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(r) {
                    *x = (*x + P - c * y % P) % P;
                }
            }
        }
    }
    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|&x| x != 0) else { return false };
        let c = inv(w[p]);
        for x in w.iter_mut() {
            *x = *x * c % P;
        }
        self.rows.push((p, w));
        true
    }
    pub fn len(&self) -> usize {
        self.rows.len()
    }
}

fn signed(s: i64) -> u64 {
    if s >= 0 { s as u64 } else { P - (-s) as u64 }
}

fn le(a: [u32; 2], b: [u32; 2]) -> bool {
    a[0] <= b[0] && a[1] <= b[1]
}

/// Boundary of every simplex of dimension `d`, in coordinates over the
/// (d−1)-simplices of the whole complex.
fn boundary_vectors(b: &Bifiltration, d: usize) -> (Vec<usize>, Vec<Vec<u64>>) {
    let cells: Vec<usize> = (0..b.simplices().len()).filter(|&k| b.simplices()[k].vertices.len() == d + 1).collect();
    let faces: Vec<&Vec<usize>> = b.simplices().iter().filter(|s| s.vertices.len() == d).map(|s| &s.vertices).collect();
    let vecs = cells
        .iter()
        .map(|&k| {
            let mut v = vec![0u64; faces.len()];
            let vs = &b.simplices()[k].vertices;
            if d > 0 {
                for skip in 0..vs.len() {
                    let mut f = vs.clone();
                    f.remove(skip);
                    let pos = faces.iter().position(|g| **g == f).unwrap();
                    v[pos] = signed(if skip % 2 == 0 { 1 } else { -1 });
                }
            }
            v
        })
        .collect();
    (cells, vecs)
}

/// Cycle space of the subcomplex at grade u, by brute-force elimination on
/// the augmented matrix [∂ᵀ | I].
fn cycles(b: &Bifiltration, i: usize, u: [u32; 2]) -> Vec<Vec<u64>> {
    let (cells, bd) = boundary_vectors(b, i);
    let n = cells.len();
    let faces = bd.first().map_or(0, |v| v.len());
    // row-reduce rows (∂c | e_c) for live c; rows whose ∂ part vanishes are cycles
    let mut rows: Vec<Vec<u64>> = vec![];
    for (k, &c) in cells.iter().enumerate() {
        if le(b.simplices()[c].grade, u) {
            let mut r = bd[k].clone();
            r.extend((0..n).map(|j| u64::from(j == k)));
            rows.push(r);
        }
    }
    let mut pivot_row = 0;
    for col in 0..faces {
        let Some(p) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(pivot_row, p);
        let c = inv(rows[pivot_row][col]);
        for x in rows[pivot_row].iter_mut() {
            *x = *x * c % P;
        }
        let pr = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && row[col] != 0 {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pr) {
                    *x = (*x + P - f * y % P) % P;
                }
            }
        }
        pivot_row += 1;
    }
    rows[pivot_row..].iter().map(|r| r[faces..].to_vec()).collect()
}

fn boundaries(b: &Bifiltration, i: usize, u: [u32; 2]) -> Vec<Vec<u64>> {
    let (cells, bd) = boundary_vectors(b, i + 1);
    cells.iter().zip(bd).filter(|(c, _)| le(b.simplices()[**c].grade, u)).map(|(_, v)| v).collect()
}

/// ρᵢ(u, v): choose homology classes at u explicitly, push them to v and
/// count how many stay independent modulo boundaries there.
pub fn brute_force_rank(b: &Bifiltration, i: usize, u: [u32; 2], v: [u32; 2]) -> usize {
    let n_cells = b.simplices().iter().filter(|s| s.vertices.len() == i + 1).count();
    if n_cells == 0 {
        return 0;
    }
    let mut bu = Basis::default();
    for x in boundaries(b, i, u) {
        bu.insert(&x);
    }
    let reps: Vec<Vec<u64>> = cycles(b, i, u).into_iter().filter(|z| bu.insert(z)).collect();
    let mut bv = Basis::default();
    for x in boundaries(b, i, v) {
        bv.insert(&x);
    }
    reps.iter().filter(|z| bv.insert(z)).count()
}

/// A random one-critical bifiltration on `grid`, with up to `max_vertices`
/// vertices and simplices up to dimension 3.
pub fn random_bifiltration(rng: &mut impl Rng, max_vertices: usize, grid: [u32; 2]) -> Bifiltration {
    let n = rng.gen_range(2..=max_vertices);
    let mut grade = std::collections::BTreeMap::<Vec<usize>, [u32; 2]>::new();
    let bump = |g: [u32; 2], rng: &mut dyn rand::RngCore| -> [u32; 2] {
        let mut out = g;
        for k in 0..2 {
            if rng.gen_bool(0.4) {
                out[k] = (out[k] + rng.gen_range(1..=2)).min(grid[k] - 1);
            }
        }
        out
    };
    for v in 0..n {
        let g = [rng.gen_range(0..grid[0]).min(rng.gen_range(0..grid[0])), rng.gen_range(0..grid[1]).min(rng.gen_range(0..grid[1]))];
        grade.insert(vec![v], g);
    }
    let p_edge = rng.gen_range(0.3..0.8);
    for d in 1..=3 {
        let prev: Vec<Vec<usize>> = grade.keys().filter(|k| k.len() == d).cloned().collect();
        for s in prev {
            for w in s.last().unwrap() + 1..n {
                let mut t = s.clone();
                t.push(w);
                let faces: Vec<Vec<usize>> = (0..t.len())
                    .map(|k| {
                        let mut f = t.clone();
                        f.remove(k);
                        f
                    })
                    .collect();
                if faces.iter().all(|f| grade.contains_key(f)) && rng.gen_bool(if d == 1 { p_edge } else { 0.6 }) {
                    let j = faces.iter().fold([0, 0], |a, f| {
                        let g = grade[f];
                        [a[0].max(g[0]), a[1].max(g[1])]
                    });
                    let g = bump(j, rng);
                    grade.insert(t, g);
                }
            }
        }
    }
    let simplices = grade.into_iter().map(|(vertices, grade)| Simplex { vertices, grade }).collect();
    Bifiltration::new((0..n).map(|i| i.to_string()).collect(), simplices, grid).unwrap()
}

/// Binomial coefficient by the multiplicative formula.
pub fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
