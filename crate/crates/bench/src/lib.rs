//! Deterministic workloads shared by the criterion benchmarks in `benches/`.

use persalg_core::persistence::{Bifiltration, Simplex};
use persalg_core::tableaux::{Bitableau, FormalSum};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Flag complex of a random graph on `n` vertices, with cliques up to
/// dimension 2, graded on a `grid × grid` lattice.
pub fn random_flag_bifiltration(seed: u64, n: usize, grid: u32) -> Bifiltration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vgrade: Vec<[u32; 2]> = (0..n).map(|_| [rng.gen_range(0..grid), rng.gen_range(0..grid)]).collect();
    let mut edges = std::collections::BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.4) {
                let g = [vgrade[a][0].max(vgrade[b][0]), vgrade[a][1].max(vgrade[b][1])];
                let bump = [rng.gen_range(0..2), rng.gen_range(0..2)];
                edges.insert((a, b), [(g[0] + bump[0]).min(grid - 1), (g[1] + bump[1]).min(grid - 1)]);
            }
        }
    }
    let mut simplices: Vec<Simplex> = vgrade.iter().enumerate().map(|(v, &g)| Simplex { vertices: vec![v], grade: g }).collect();
    for (&(a, b), &g) in &edges {
        simplices.push(Simplex { vertices: vec![a, b], grade: g });
    }
    for (&(a, b), &g) in &edges {
        for c in b + 1..n {
            if let (Some(x), Some(y)) = (edges.get(&(a, c)), edges.get(&(b, c))) {
                let grade = [g[0].max(x[0]).max(y[0]), g[1].max(x[1]).max(y[1])];
                simplices.push(Simplex { vertices: vec![a, b, c], grade });
            }
        }
    }
    Bifiltration::new((0..n).map(|i| i.to_string()).collect(), simplices, [grid, grid]).expect("valid by construction")
}

/// A random two-or-three-row bitableau fitting an `m × n` matrix.
pub fn random_bitableau_sum(seed: u64, m: usize, n: usize) -> FormalSum<Bitableau> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lens: Vec<usize> = (0..rng.gen_range(2..=3)).map(|_| rng.gen_range(1..=m.min(n))).collect();
    lens.sort_unstable_by(|a, b| b.cmp(a));
    let mut pick = |k: usize, bound: usize| {
        let mut v: Vec<usize> = sample(&mut rng, bound, k).into_iter().map(|i| i + 1).collect();
        v.sort_unstable();
        v
    };
    let rows = lens.iter().map(|&k| (pick(k, n), pick(k, m))).collect();
    FormalSum::single(Bitableau::from_rows(rows).expect("rows of equal size"))
}
