//! Random complexes of a prescribed rank format.
//!
//! With P_k a unimodular b_k×b_k matrix, Y_{k+1} its first r_{k+1}
//! columns and Z_k the last r_k rows of P_k⁻¹, we have Z_k·Y_{k+1} = 0, so
//! d_k = Y_k·S_k·Z_k (S_k a ±1 diagonal) is a complex with rank d_k = r_k.
//! Complementary minors of P_k and P_k⁻¹ agree up to sign, which makes every
//! multiplier a polynomial.

use rand::Rng;

use super::{rank_conditions, FreeComplex};
use crate::{Error, PolyMatrix, Polynomial, Result, Ring, RingExt};

#[derive(Clone, Copy, Debug)]
pub struct RandomComplexOptions {
    /// Elementary operations per unimodular factor.
    pub steps: usize,
    /// Coefficients are drawn from [−coeff, coeff].
    pub coeff: i64,
    /// Degree bound of the monomial attached to each coefficient.
    pub max_deg: u32,
}

impl Default for RandomComplexOptions {
    fn default() -> Self {
        RandomComplexOptions { steps: 4, coeff: 3, max_deg: 1 }
    }
}

fn random_entry(ring: &Ring, rng: &mut impl Rng, o: &RandomComplexOptions, nonzero: bool) -> Polynomial {
    let c = loop {
        let c = rng.gen_range(-o.coeff..=o.coeff);
        if c != 0 || !nonzero {
            break c;
        }
    };
    let mut p = ring.constant(c);
    if ring.num_vars() > 0 {
        for _ in 0..rng.gen_range(0..=o.max_deg) {
            p = &p * &ring.var(rng.gen_range(0..ring.num_vars()));
        }
    }
    p
}

/// A unimodular matrix and its inverse, as products of transvections.
fn unimodular_pair(ring: &Ring, n: usize, rng: &mut impl Rng, o: &RandomComplexOptions) -> (PolyMatrix, PolyMatrix) {
    let mut p = PolyMatrix::identity(ring, n);
    let mut inv = PolyMatrix::identity(ring, n);
    if n < 2 {
        return (p, inv);
    }
    for _ in 0..o.steps * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = random_entry(ring, rng, o, true);
        let mut e = PolyMatrix::identity(ring, n);
        e.set(i, j, c.clone());
        let mut f = PolyMatrix::identity(ring, n);
        f.set(i, j, -c);
        p = p.matmul(&e).expect("square");
        inv = f.matmul(&inv).expect("square");
    }
    (p, inv)
}

/// A complex with the given Betti numbers whose differentials have exactly
/// the ranks forced by the rank conditions.
pub fn random_rank_conforming(ring: &Ring, betti: &[usize], rng: &mut impl Rng, o: &RandomComplexOptions) -> Result<FreeComplex> {
    let r = rank_conditions(betti)?;
    let n = betti.len() - 1;
    if n == 0 {
        return Err(Error::Invalid("need at least two Betti numbers".into()));
    }
    let rank = |k: usize| if k <= n { r[k] } else { 0 };
    // Y_1: random b_0 × r_1 of full column rank
    let y1 = loop {
        let m = PolyMatrix::from_fn(ring, betti[0], rank(1), |_, _| random_entry(ring, rng, o, false));
        if m.rank() == rank(1) {
            break m;
        }
    };
    let mut ys = vec![y1];
    let mut zs = vec![];
    for k in 1..=n {
        let (p, inv) = unimodular_pair(ring, betti[k], rng, o);
        let rows: Vec<usize> = (betti[k] - rank(k)..betti[k]).collect();
        let all: Vec<usize> = (0..betti[k]).collect();
        zs.push(inv.submatrix(&rows, &all));
        ys.push(p.submatrix(&all, &(0..rank(k + 1)).collect::<Vec<_>>()));
    }
    let diffs = (1..=n)
        .map(|k| {
            let s = PolyMatrix::from_fn(ring, rank(k), rank(k), |i, j| {
                if i != j {
                    ring.zero()
                } else if rng.gen_bool(0.5) {
                    ring.one()
                } else {
                    ring.constant(-1)
                }
            });
            ys[k - 1].matmul(&s).and_then(|m| m.matmul(&zs[k - 1]))
        })
        .collect::<Result<Vec<_>>>()?;
    FreeComplex::new(ring, betti.to_vec(), diffs)
}

/// Random Betti numbers of length n+1 with every r_k in 1..=max_rank
/// (r_0 in 0..=max_rank).
pub fn random_betti(n: usize, max_rank: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut r: Vec<usize> = (0..=n).map(|k| rng.gen_range(if k == 0 { 0 } else { 1 }..=max_rank)).collect();
    r.push(0);
    (0..=n).map(|k| r[k] + r[k + 1]).collect()
}
