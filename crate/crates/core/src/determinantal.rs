//! Determinantal ideals of generic matrices, Fitting ideals of
//! presentations, and Hilbert functions of generic determinantal rings.

use crate::polymatrix::{generic_matrix, PolyMatrix};
use crate::polyring::{groebner_basis_over, ideal_equal, CoeffDomain, GbField, MonomialOrder, Polynomial, Ring, RingCtx, RingExt};
use crate::tableaux::standard_bitableaux;
use crate::{Error, Result};
use num_bigint::BigInt;
use rand::Rng;

/// The locus of nrows × ncols matrices of rank ≤ r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RankLocus {
    pub nrows: usize,
    pub ncols: usize,
    pub r: usize,
}

impl RankLocus {
    pub fn new(nrows: usize, ncols: usize, r: usize) -> Result<Self> {
        if r > nrows.min(ncols) {
            return Err(Error::OutOfRange(format!("rank {r} exceeds min({nrows},{ncols})")));
        }
        Ok(RankLocus { nrows, ncols, r })
    }
    /// ℤ[x_1..x_{mn}] holding the generic matrix.
    pub fn ring(&self) -> Result<Ring> {
        RingCtx::new((self.nrows * self.ncols).max(1), CoeffDomain::Integers)
    }
}

/// Generators of I_{r+1} of the generic matrix (empty when r is the minimal
/// dimension), in colex order, together with their ring.
pub fn determinantal_ideal(l: &RankLocus) -> Result<(Ring, Vec<Polynomial>)> {
    let ring = l.ring()?;
    let gens = determinantal_ideal_in(&ring, l)?;
    Ok((ring, gens))
}

/// As [`determinantal_ideal`], in a given ring whose first nrows·ncols
/// variables form the generic matrix.
pub fn determinantal_ideal_in(ring: &Ring, l: &RankLocus) -> Result<Vec<Polynomial>> {
    if l.r >= l.nrows.min(l.ncols) {
        return Ok(vec![]);
    }
    generic_matrix(ring, 1, l.nrows, l.ncols)?.minors(l.r + 1)
}

/// A presentation φ: F → G of a module; columns are relations, rows are
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub matrix: PolyMatrix,
}

impl Presentation {
    pub fn new(matrix: PolyMatrix) -> Self {
        Presentation { matrix }
    }
    pub fn generator_count(&self) -> usize {
        self.matrix.rows()
    }
    pub fn ring(&self) -> &Ring {
        self.matrix.ring()
    }
}

/// Generators of Fitt_j = I_{r−j}(φ): `[1]` when r − j ≤ 0, `[0]` when r − j
/// exceeds the number of relations.
pub fn fitting_ideal(p: &Presentation, j: usize) -> Result<Vec<Polynomial>> {
    let r = p.generator_count();
    let ring = p.ring();
    if j >= r {
        return Ok(vec![ring.one()]);
    }
    let k = r - j;
    if k > p.matrix.cols() {
        return Ok(vec![ring.zero()]);
    }
    p.matrix.minors(k)
}

/// Whether the generator list is the unit ideal (checked over ℚ or ℤ/p).
pub fn is_unit_ideal(ring: &Ring, gens: &[Polynomial]) -> Result<bool> {
    Ok(groebner_basis_over(ring, gens, MonomialOrder::GradedRevLex, GbField::natural(ring))?.is_unit_ideal())
}

fn random_monomial_factor(ring: &Ring, rng: &mut impl Rng, max_deg: u32) -> Polynomial {
    let c = loop {
        let c: i64 = rng.gen_range(-2..=2);
        if c != 0 {
            break c;
        }
    };
    let mut p = ring.constant(c);
    for _ in 0..rng.gen_range(0..=max_deg) {
        p = &p * &ring.var(rng.gen_range(0..ring.num_vars()));
    }
    p
}

/// Random invertible n×n matrix: a product of elementary transvections with
/// monomial multipliers, swaps and sign changes.
pub fn random_unimodular(ring: &Ring, n: usize, steps: usize, max_deg: u32, rng: &mut impl Rng) -> PolyMatrix {
    let mut u = PolyMatrix::identity(ring, n);
    if n == 0 {
        return u;
    }
    for _ in 0..steps {
        let mut e = PolyMatrix::identity(ring, n);
        match rng.gen_range(0..4) {
            0 | 1 if n > 1 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                e.set(i, j, random_monomial_factor(ring, rng, max_deg));
            }
            2 if n > 1 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                e.set(i, i, ring.zero());
                e.set(j, j, ring.zero());
                e.set(i, j, ring.one());
                e.set(j, i, ring.one());
            }
            _ => {
                let i = rng.gen_range(0..n);
                e.set(i, i, ring.constant(-1));
            }
        }
        u = e.matmul(&u).expect("square");
    }
    u
}

/// A presentation of the same module: optionally padded by an identity
/// summand and a zero relation, then twisted by random invertible row and
/// column operations.
pub fn random_represent(p: &Presentation, rng: &mut impl Rng) -> Presentation {
    let ring = p.ring().clone();
    let mut m = p.matrix.clone();
    if rng.gen_bool(0.5) {
        m = m.direct_sum(&PolyMatrix::identity(&ring, 1));
    }
    if rng.gen_bool(0.3) {
        m = m.hconcat(&PolyMatrix::zero(&ring, m.rows(), 1)).expect("same rows");
    }
    let u = random_unimodular(&ring, m.rows(), 3, 1, rng);
    let v = random_unimodular(&ring, m.cols(), 3, 1, rng);
    Presentation::new(u.matmul(&m).and_then(|x| x.matmul(&v)).expect("shapes"))
}

/// Compares Fitting ideals of `p` and `trials` random re-presentations for
/// all j, via Gröbner ideal equality over the ring's natural field.
pub fn fitting_invariance_check(p: &Presentation, trials: usize, rng: &mut impl Rng) -> Result<bool> {
    for _ in 0..trials {
        let q = random_represent(p, rng);
        if !fitting_ideals_agree(p, &q)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fitt_j(p) = Fitt_j(q) as ideals for every j.
pub fn fitting_ideals_agree(p: &Presentation, q: &Presentation) -> Result<bool> {
    let ring = p.ring();
    let top = p.generator_count().max(q.generator_count());
    for j in 0..=top {
        if !ideal_equal(ring, &fitting_ideal(p, j)?, &fitting_ideal(q, j)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fitting ideals commute with the substitution `images` (one image per
/// variable, all in `target`): compared generator by generator.
pub fn base_change_check(p: &Presentation, target: &Ring, images: &[Polynomial]) -> Result<bool> {
    if images.len() != p.ring().num_vars() {
        return Err(Error::Shape(format!("{} images for {} variables", images.len(), p.ring().num_vars())));
    }
    let q = Presentation::new(p.matrix.substitute(target, images)?);
    for j in 0..=p.generator_count() {
        let pushed: Vec<Polynomial> = fitting_ideal(p, j)?.iter().map(|g| g.substitute(target, images)).collect::<Result<_>>()?;
        if pushed != fitting_ideal(&q, j)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Random substitution of each variable by a small polynomial in `target`.
pub fn random_substitution(source: &Ring, target: &Ring, rng: &mut impl Rng) -> Vec<Polynomial> {
    (0..source.num_vars())
        .map(|_| {
            let mut p = target.constant(rng.gen_range(-2..=2));
            for _ in 0..rng.gen_range(1..=2) {
                p = &p + &random_monomial_factor(target, rng, 2);
            }
            p
        })
        .collect()
}

/// dim of the degree-d part of K[X_{m×n}]/I_{r+1}, by a Gröbner staircase
/// count over the given field.
pub fn hilbert_function_groebner(l: &RankLocus, d: u32, field: GbField) -> Result<u64> {
    let (ring, gens) = determinantal_ideal(l)?;
    let gb = groebner_basis_over(&ring, &gens, MonomialOrder::GradedRevLex, field)?;
    Ok(gb.staircase_count(d))
}

/// The same dimension counted as standard bitableaux of weight d whose rows
/// have length ≤ r.
pub fn hilbert_function_standard(l: &RankLocus, d: usize) -> u64 {
    standard_bitableaux(l.nrows, l.ncols, d).iter().filter(|b| b.left().rows().iter().all(|row| row.len() <= l.r)).count() as u64
}

/// Convenience: evaluation point for a ring from integers.
pub fn point(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{ideal_contains, Style};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn xy() -> Ring {
        RingCtx::with_names(vec!["x".into(), "y".into()], CoeffDomain::Integers).unwrap()
    }

    fn sec32(r: &Ring) -> Presentation {
        Presentation::new(PolyMatrix::parse_rows(r, &[vec!["x^2", "0", "0"], vec!["0", "x", "y"]]).unwrap())
    }

    #[test]
    fn determinantal_examples() {
        let (_, g) = determinantal_ideal(&RankLocus::new(2, 4, 1).unwrap()).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g[0].to_text(Style::Juxtapose), "-x_2x_3+x_1x_4");
        assert!(determinantal_ideal(&RankLocus::new(3, 3, 3).unwrap()).unwrap().1.is_empty());
        let (_, g) = determinantal_ideal(&RankLocus::new(2, 2, 0).unwrap()).unwrap();
        assert_eq!(g.iter().map(|p| p.to_string()).collect::<Vec<_>>(), ["x_1", "x_2", "x_3", "x_4"]);
    }

    #[test]
    fn fitting_of_the_worked_presentation() {
        let r = xy();
        let p = sec32(&r);
        let f0 = fitting_ideal(&p, 0).unwrap();
        assert_eq!(f0.iter().map(|q| q.to_string()).collect::<Vec<_>>(), ["x^3", "x^2*y", "0"]);
        assert!(ideal_equal(&r, &f0, &[r.parse("x^3").unwrap(), r.parse("x^2*y").unwrap()]).unwrap());
        let f1 = fitting_ideal(&p, 1).unwrap();
        assert!(ideal_equal(&r, &f1, &[r.var(0), r.var(1)]).unwrap());
        assert!(is_unit_ideal(&r, &fitting_ideal(&p, 2).unwrap()).unwrap());
    }

    #[test]
    fn invariance_and_base_change() {
        let r = xy();
        let p = sec32(&r);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert!(fitting_invariance_check(&p, 5, &mut rng).unwrap());
        // swapping two columns
        let sw = Presentation::new(p.matrix.submatrix(&[0, 1], &[1, 0, 2]));
        assert!(fitting_ideals_agree(&p, &sw).unwrap());
        // a different module fails
        let other = Presentation::new(PolyMatrix::parse_rows(&r, &[vec!["x", "0", "0"], vec!["0", "x", "y"]]).unwrap());
        assert!(!fitting_ideals_agree(&p, &other).unwrap());
        let t = RingCtx::with_names(vec!["t".into()], CoeffDomain::Integers).unwrap();
        assert!(base_change_check(&p, &t, &[t.parse("t^2").unwrap(), t.parse("t^3").unwrap()]).unwrap());
        assert!(base_change_check(&p, &r, &[r.var(0), r.zero()]).unwrap());
        assert!(base_change_check(&p, &r, &[r.var(0), r.var(1)]).unwrap());
    }

    #[test]
    fn fitting_ideals_increase() {
        let r = xy();
        let p = sec32(&r);
        for j in 0..2 {
            let big = fitting_ideal(&p, j + 1).unwrap();
            for g in fitting_ideal(&p, j).unwrap() {
                assert!(ideal_contains(&r, &big, &g).unwrap());
            }
        }
    }

    #[test]
    fn minor_ideals_nest() {
        for (m, n) in [(2, 3), (3, 3)] {
            for r in 0..m {
                let l = RankLocus::new(m, n, r).unwrap();
                let (ring, big) = determinantal_ideal(&l).unwrap();
                for rp in 0..=r {
                    let small = determinantal_ideal_in(&ring, &RankLocus::new(m, n, rp).unwrap()).unwrap();
                    for g in &big {
                        assert!(ideal_contains(&ring, &small, g).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn hilbert_function_characteristic_free() {
        let l = RankLocus::new(2, 2, 1).unwrap();
        for d in 0..=4u32 {
            let q = hilbert_function_groebner(&l, d, GbField::Rationals).unwrap();
            let p = hilbert_function_groebner(&l, d, GbField::Prime(101)).unwrap();
            assert_eq!(q, p);
            assert_eq!(q, hilbert_function_standard(&l, d as usize));
            assert_eq!(q, ((d + 1) * (d + 1)) as u64);
        }
    }
}
