//! Coefficient fields used by elimination-based algorithms (Gröbner bases,
//! gradewise ranks, homology).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;

/// A field given by a context object; elements are plain values.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
    /// An integer vector spanning the same line (ℚ), or the symmetric lift (ℤ/p).
    fn integer_vector(&self, v: &[Self::Elem]) -> Vec<BigInt>;
}

/// The rationals, with arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn integer_vector(&self, v: &[BigRational]) -> Vec<BigInt> {
        primitive_integer_vector(v)
    }
}

/// The prime field ℤ/p for a word-sized prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails unless `p` is prime and below 2^32.
    pub fn new(p: u64) -> crate::Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(crate::Error::NotAField(format!("{p} is not a prime below 2^32")));
        }
        Ok(PrimeField { p })
    }
    pub fn modulus(&self) -> u64 {
        self.p
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat
        let mut base = *a;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().unwrap()
    }
    fn integer_vector(&self, v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&a| symmetric_lift(self.p, a)).collect()
    }
}

/// Lift a prime-field element to its symmetric integer representative.
pub fn symmetric_lift(p: u64, a: u64) -> BigInt {
    if a > p / 2 {
        BigInt::from(a) - BigInt::from(p)
    } else {
        BigInt::from(a)
    }
}

/// Clear denominators of a rational vector and divide out the content, so the
/// result is a primitive integer vector with positive first nonzero entry.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in v {
        l = l.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if !g.is_zero() {
        let first_neg = ints.iter().find(|c| !c.is_zero()).map(|c| c.is_negative()).unwrap_or(false);
        if first_neg {
            g = -g;
        }
        for c in ints.iter_mut() {
            *c = &*c / &g;
        }
    }
    ints
}

/// Reduced row echelon form of a dense matrix, in place. Returns the pivot
/// columns; rows beyond the rank are zero afterwards.
pub fn rref<F: Field>(f: &F, m: &mut [Vec<F::Elem>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else { continue };
        m.swap(r, pr);
        let inv = f.inv(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !f.is_zero(&row[c]) {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&factor, y));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a list of row vectors.
pub fn rank<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// A basis (rows) of the row space, in reduced echelon form.
pub fn row_basis<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let mut m = rows.to_vec();
    let k = rref(f, &mut m).len();
    m.truncate(k);
    m
}

/// Basis of the right null space {x : M x = 0} for an `rows × ncols` matrix.
pub fn nullspace<F: Field>(f: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); ncols];
            v[fc] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&m[i][fc]);
            }
            v
        })
        .collect()
}

/// Incrementally maintained echelon basis of a subspace, used to test
/// membership and extend bases one vector at a time.
#[derive(Clone, Debug)]
pub struct Span<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Span<F> {
    pub fn new(field: F, dim: usize) -> Self {
        Span { field, dim, rows: Vec::new() }
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }
    fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (p, row) in &self.rows {
            if !f.is_zero(&v[*p]) {
                let c = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row.iter()) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&c, y));
                    }
                }
            }
        }
    }
    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }
    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field.clone();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !f.is_zero(x)) else { return false };
        let inv = f.inv(&w[p]);
        for x in w.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if !f.is_zero(&row[p]) {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(w.iter()) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&c, y));
                    }
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101u64 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert!(PrimeField::new(100).is_err());
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = Rationals;
        let q = |n: i64| BigRational::from_integer(BigInt::from(n));
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        assert_eq!(rank(&f, &rows), 1);
        let ns = nullspace(&f, &rows, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: BigRational = rows[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn span_insert_and_contains() {
        let f = PrimeField::new(7).unwrap();
        let mut s = Span::new(f, 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 3, 1]));
        assert!(s.contains(&[2, 4, 0]));
        assert!(!s.contains(&[0, 0, 1]));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn primitive_vector_normalizes_sign_and_content() {
        let v = vec![BigRational::new((-2).into(), 3.into()), BigRational::new(4.into(), 3.into())];
        assert_eq!(primitive_integer_vector(&v), vec![BigInt::from(1), BigInt::from(-2)]);
    }
}
