//! Bruns' generic complex ring S₀ and one exactification step.

use super::rank_conditions;
use crate::polymatrix::generic_matrix;
use crate::{CoeffDomain, Error, PolyMatrix, Polynomial, Result, Ring, RingCtx, RingExt};

/// S₀ = ℤ[y_1..y_N]/𝔞 where the k-th generic matrix D_k (b_{k-1}×b_k) is
/// filled column-major with consecutive variables and 𝔞 is generated by the
/// entries of the products D_k·D_{k+1}.
#[derive(Clone, Debug)]
pub struct GenericComplexRing {
    pub betti: Vec<usize>,
    pub ring: Ring,
    /// D_1..D_n.
    pub matrices: Vec<PolyMatrix>,
    /// D_k·D_{k+1} for k = 1..n−1.
    pub products: Vec<PolyMatrix>,
}

/// One catalogued variable: `name` is entry (row, col) (1-based) of D_level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableEntry {
    pub name: String,
    pub level: usize,
    pub row: usize,
    pub col: usize,
}

impl GenericComplexRing {
    /// Generators of 𝔞, block by block, each block row-major.
    pub fn generators(&self) -> Vec<Polynomial> {
        self.products.iter().flat_map(|p| p.entries().iter().cloned()).collect()
    }

    pub fn catalog(&self) -> Vec<VariableEntry> {
        let mut out = vec![];
        let mut next = 0;
        for (k, d) in self.matrices.iter().enumerate() {
            for col in 0..d.cols() {
                for row in 0..d.rows() {
                    out.push(VariableEntry {
                        name: self.ring.names()[next].clone(),
                        level: k + 1,
                        row: row + 1,
                        col: col + 1,
                    });
                    next += 1;
                }
            }
        }
        out
    }
}

pub fn generic_complex_ring(betti: &[usize]) -> Result<GenericComplexRing> {
    rank_conditions(betti)?;
    if betti.len() < 2 {
        return Err(Error::Invalid("need at least two Betti numbers".into()));
    }
    let total: usize = betti.windows(2).map(|w| w[0] * w[1]).sum();
    let ring = RingCtx::indexed("y", total, CoeffDomain::Integers)?;
    let mut start = 1;
    let mut matrices = vec![];
    for w in betti.windows(2) {
        matrices.push(generic_matrix(&ring, start, w[0], w[1])?);
        start += w[0] * w[1];
    }
    let products = matrices.windows(2).map(|w| w[0].matmul(&w[1])).collect::<Result<Vec<_>>>()?;
    Ok(GenericComplexRing { betti: betti.to_vec(), ring, matrices, products })
}

/// A homology-cycle representative y_u^k ∈ S₀^{b_k}, supplied by the caller.
#[derive(Clone, Debug)]
pub struct Cycle {
    pub level: usize,
    pub coords: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct Exactification {
    /// S₀'s variables followed by the new Z variables.
    pub ring: Ring,
    pub new_variables: Vec<String>,
    pub generators: Vec<Polynomial>,
}

/// Adjoins Z_u^{k,j} (j = 1..b_{k+1}) for every cycle at a level k < n and
/// emits `y_{u,p} − Σ_{j=p}^{b_{k+1}} Z_u^{k,j} x^{k+1}_{j,p}` for p = 1..b_k,
/// where x^{k+1}_{j,p} is entry (p, j) of D_{k+1}; cycles at the top level
/// contribute their coordinates themselves.
pub fn exactification_step(s0: &GenericComplexRing, cycles: &[Cycle]) -> Result<Exactification> {
    let n = s0.matrices.len();
    let mut names: Vec<String> = s0.ring.names().to_vec();
    let mut new_variables = vec![];
    let mut per_level = vec![0usize; n + 1];
    let mut plan = vec![];
    for c in cycles {
        if c.level == 0 || c.level > n {
            return Err(Error::OutOfRange(format!("cycle at level {} of a complex of length {n}", c.level)));
        }
        if c.coords.len() != s0.betti[c.level] {
            return Err(Error::Shape(format!(
                "cycle at level {} has {} coordinates, b_{} = {}",
                c.level,
                c.coords.len(),
                c.level,
                s0.betti[c.level]
            )));
        }
        per_level[c.level] += 1;
        let u = per_level[c.level];
        let first = names.len();
        if c.level < n {
            for j in 1..=s0.betti[c.level + 1] {
                let v = format!("z_{}_{}_{}", c.level, u, j);
                names.push(v.clone());
                new_variables.push(v);
            }
        }
        plan.push((c, first));
    }
    let ring = RingCtx::build(names, s0.ring.domain(), s0.ring.order())?;
    let mut generators = vec![];
    for (c, first) in plan {
        let k = c.level;
        for (p, y) in c.coords.iter().enumerate() {
            let mut g = y.embed(&ring)?;
            if k < n {
                let x = &s0.matrices[k];
                for j in p..s0.betti[k + 1] {
                    let t = &ring.var(first + j) * &x.get(p, j).embed(&ring)?;
                    g = &g - &t;
                }
            }
            generators.push(g);
        }
    }
    Ok(Exactification { ring, new_variables, generators })
}
