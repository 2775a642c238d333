//! Sparse multivariate polynomials over ℤ or ℤ/p.
//!
//! A [`Polynomial`] keeps a shared handle to its [`RingCtx`]; terms are stored
//! sorted descending under the ring's monomial order, so printing is
//! deterministic.

mod groebner;
mod text;

pub use groebner::{groebner_basis, groebner_basis_over, ideal_contains, ideal_equal, GbField, GroebnerBasis};
pub use text::Style;

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Coefficient domain of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    Integers,
    PrimeField(u64),
}

/// Monomial orders.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Total degree first, then the last differing exponent: smaller wins.
    #[default]
    GradedRevLex,
    Lex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        match self {
            MonomialOrder::GradedRevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return da.cmp(&db);
                }
                for i in (0..a.0.len()).rev() {
                    if a.0[i] != b.0[i] {
                        return b.0[i].cmp(&a.0[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.0.cmp(&b.0),
        }
    }
}

/// Exponent vector x^a.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }
    pub fn exps(&self) -> &[u32] {
        &self.0
    }
    /// The multidegree, i.e. the exponent vector itself.
    pub fn multidegree(&self) -> Vec<u32> {
        self.0.clone()
    }
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }
    /// `o / self`, assuming divisibility.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        Monomial(o.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }
    pub fn coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A polynomial ring: variable names, coefficient domain and term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingCtx {
    names: Vec<String>,
    domain: CoeffDomain,
    order: MonomialOrder,
}

pub type Ring = Arc<RingCtx>;

fn valid_name(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic()) && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingCtx {
    /// `n` variables named x_1..x_n, graded reverse lexicographic order.
    pub fn new(n: usize, domain: CoeffDomain) -> Result<Ring> {
        Self::with_names((1..=n).map(|i| format!("x_{i}")).collect(), domain)
    }

    pub fn with_names(names: Vec<String>, domain: CoeffDomain) -> Result<Ring> {
        Self::build(names, domain, MonomialOrder::GradedRevLex)
    }

    pub fn build(names: Vec<String>, domain: CoeffDomain, order: MonomialOrder) -> Result<Ring> {
        if names.is_empty() {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        if let Some(bad) = names.iter().find(|s| !valid_name(s)) {
            return Err(Error::Invalid(format!("bad variable name {bad:?}")));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = names.iter().find(|s| !seen.insert(s.as_str())) {
            return Err(Error::Invalid(format!("duplicate variable name {dup}")));
        }
        if let CoeffDomain::PrimeField(p) = domain {
            crate::field::PrimeField::new(p)?;
        }
        Ok(Arc::new(RingCtx { names, domain, order }))
    }

    /// Names `prefix_1 .. prefix_n`, e.g. `indexed("y", 90)`.
    pub fn indexed(prefix: &str, n: usize, domain: CoeffDomain) -> Result<Ring> {
        Self::with_names((1..=n).map(|i| format!("{prefix}_{i}")).collect(), domain)
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }
    pub fn order(&self) -> MonomialOrder {
        self.order
    }
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }
    /// Same variables and domain with another term order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(RingCtx { order, ..self.clone() })
    }
    /// Same variables with another coefficient domain.
    pub fn with_domain(&self, domain: CoeffDomain) -> Result<Ring> {
        Self::build(self.names.clone(), domain, self.order)
    }

    fn normalize(&self, c: BigInt) -> BigInt {
        match self.domain {
            CoeffDomain::Integers => c,
            CoeffDomain::PrimeField(p) => c.mod_floor(&BigInt::from(p)),
        }
    }
}

/// Handle-level helpers on a shared ring.
pub trait RingExt {
    fn zero(&self) -> Polynomial;
    fn one(&self) -> Polynomial;
    fn constant(&self, c: impl Into<BigInt>) -> Polynomial;
    fn var(&self, i: usize) -> Polynomial;
    fn var_named(&self, name: &str) -> Result<Polynomial>;
    fn parse(&self, s: &str) -> Result<Polynomial>;
}

impl RingExt for Ring {
    fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: vec![] }
    }
    fn one(&self) -> Polynomial {
        self.constant(1)
    }
    fn constant(&self, c: impl Into<BigInt>) -> Polynomial {
        Polynomial::from_terms(self, vec![(Monomial::one(self.num_vars()), c.into())])
    }
    fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.num_vars(), "variable index {i} out of range");
        Polynomial::from_terms(self, vec![(Monomial::var(self.num_vars(), i), BigInt::one())])
    }
    fn var_named(&self, name: &str) -> Result<Polynomial> {
        let i = self.var_index(name).ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
        Ok(self.var(i))
    }
    fn parse(&self, s: &str) -> Result<Polynomial> {
        text::parse(self, s)
    }
}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Sparse polynomial with exact coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, BigInt)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, o: &Self) -> bool {
        same_ring(&self.ring, &o.ring) && self.terms == o.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, BigInt)>) -> Polynomial {
        let n = ring.num_vars();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.0.len(), n, "monomial arity");
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Ring, acc: HashMap<Monomial, BigInt>) -> Polynomial {
        let mut terms: Vec<(Monomial, BigInt)> = acc
            .into_iter()
            .map(|(m, c)| (m, ring.normalize(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }
    /// Terms in descending order.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }
    /// The constant value, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }
    /// Whether this is ±1 (a unit of ℤ) or a nonzero constant over ℤ/p.
    pub fn is_unit(&self) -> bool {
        match (self.constant_value(), self.ring.domain()) {
            (Some(c), CoeffDomain::Integers) => c.abs().is_one(),
            (Some(c), CoeffDomain::PrimeField(_)) => !c.is_zero(),
            _ => false,
        }
    }
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }
    /// Degree under a weight per variable, if all terms agree.
    pub fn weighted_degree(&self, weights: &[Vec<i64>]) -> Option<Vec<i64>> {
        let deg = |m: &Monomial| {
            let k = weights.first().map_or(0, |w| w.len());
            let mut d = vec![0i64; k];
            for (e, w) in m.0.iter().zip(weights) {
                for (di, wi) in d.iter_mut().zip(w) {
                    *di += *e as i64 * wi;
                }
            }
            d
        };
        let first = deg(&self.terms.first()?.0);
        self.terms.iter().all(|(m, _)| deg(m) == first).then_some(first)
    }

    /// Leading term under `o`; errors on the zero polynomial.
    pub fn init_with(&self, o: MonomialOrder) -> Result<(Monomial, BigInt)> {
        if o == self.ring.order() {
            return self.terms.first().cloned().ok_or(Error::ZeroPolynomial);
        }
        self.terms
            .iter()
            .max_by(|a, b| o.compare(&a.0, &b.0))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }
    /// Leading term under the ring's order.
    pub fn init(&self) -> Result<(Monomial, BigInt)> {
        self.init_with(self.ring.order())
    }

    fn check(&self, o: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &o.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        Ok(self.merge(o, false))
    }
    pub fn checked_sub(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        Ok(self.merge(o, true))
    }
    pub fn checked_mul(&self, o: &Polynomial) -> Result<Polynomial> {
        self.check(o)?;
        Ok(self.product(o))
    }

    fn merge(&self, o: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            let take = if i == self.terms.len() {
                Ordering::Less
            } else if j == o.terms.len() {
                Ordering::Greater
            } else {
                order.compare(&self.terms[i].0, &o.terms[j].0)
            };
            match take {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &o.terms[j];
                    out.push((m.clone(), if negate { self.ring.normalize(-c) } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &self.terms[i].1 - &o.terms[j].1 } else { &self.terms[i].1 + &o.terms[j].1 };
                    let c = self.ring.normalize(c);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn product(&self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return self.ring.zero();
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        Self::from_map(&self.ring, acc)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, d)| (m.clone(), self.ring.normalize(c * d)))
            .filter(|(_, d)| !d.is_zero())
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(n, d)| (n.mul(m), self.ring.normalize(c * d)))
            .filter(|(_, d)| !d.is_zero())
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact division: `Some(q)` with `self = q * d`, or `None` when `d` does
    /// not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        self.check(d)?;
        if d.is_zero() {
            return Err(Error::Invalid("division by zero polynomial".into()));
        }
        let (lm, lc) = d.terms[0].clone();
        let lc_inv = match self.ring.domain() {
            CoeffDomain::Integers => None,
            CoeffDomain::PrimeField(p) => {
                let f = crate::field::PrimeField::new(p)?;
                Some(BigInt::from(crate::field::Field::inv(&f, &crate::field::Field::from_int(&f, &lc))))
            }
        };
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let qc = match &lc_inv {
                Some(inv) => self.ring.normalize(&c * inv),
                None => {
                    let (q, r) = c.div_rem(&lc);
                    if !r.is_zero() {
                        return Ok(None);
                    }
                    q
                }
            };
            let qm = lm.quotient_of(&m);
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.push((qm, qc));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quot)))
    }

    /// Evaluates at an integer point (reduced mod p over ℤ/p).
    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.ring.num_vars() {
            return Err(Error::Shape(format!("point has {} coordinates, ring has {} variables", point.len(), self.ring.num_vars())));
        }
        let mut s = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            s += t;
        }
        Ok(self.ring.normalize(s))
    }

    /// Ring homomorphism sending variable i to `images[i]` (all in one target ring).
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.num_vars() {
            return Err(Error::Shape(format!("{} images for {} variables", images.len(), self.ring.num_vars())));
        }
        if images.iter().any(|p| !same_ring(p.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        let mut acc = target.zero();
        let mut pow_cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let p = pow_cache.entry((i, e)).or_insert_with(|| images[i].pow(e)).clone();
                    t = &t * &p;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Reinterprets the coefficients in another ring with the same number of
    /// variables (e.g. reduction mod p, or a different term order).
    pub fn map_ring(&self, target: &Ring) -> Result<Polynomial> {
        if target.num_vars() != self.ring.num_vars() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(target, self.terms.clone()))
    }

    /// Embeds into a ring whose variable list extends this ring's.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        let n = self.ring.num_vars();
        if target.num_vars() < n || target.names()[..n] != *self.ring.names() {
            return Err(Error::RingMismatch);
        }
        let pad = target.num_vars() - n;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.extend(std::iter::repeat_n(0, pad));
                (Monomial(e), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    pub fn to_text(&self, style: Style) -> String {
        text::format(self, style)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(Style::Star))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics when the operands live in different rings; use the
            /// `checked_*` variants to get an error instead.
            fn $m(self, o: &Polynomial) -> Polynomial {
                self.$imp(o).expect("polynomial ring mismatch")
            }
        }
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, o: Polynomial) -> Polynomial {
                (&self).$imp(&o).expect("polynomial ring mismatch")
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&BigInt::from(-1))
    }
}
impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        (&self).neg()
    }
}

/// Multidegree of a monomial: its exponent vector.
pub fn multidegree(m: &Monomial) -> Vec<u32> {
    m.multidegree()
}

/// Compares two monomials under `o`.
pub fn compare(o: MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
    o.compare(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        RingCtx::new(n, CoeffDomain::Integers).unwrap()
    }

    #[test]
    fn cancellation_and_identity() {
        let r = ring(2);
        let (x1, x2) = (r.var(0), r.var(1));
        assert_eq!(&(&x1 + &x2) + &(-&x2), x1);
        assert_eq!(&x1 + &r.zero(), x1);
        assert_eq!(&(&x1.pow(2) - &x2) + &x2, x1.pow(2));
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(2);
        let (x1, x2) = (r.var(0), r.var(1));
        assert_eq!(&(&x1 + &x2) * &(&x1 - &x2), &x1.pow(2) - &x2.pow(2));
        assert_eq!(&x1 * &r.one(), x1);
    }

    #[test]
    fn multiply_by_extra_variable() {
        let r = RingCtx::with_names(["x", "x_1", "x_2", "x_3", "x_4"].map(String::from).to_vec(), CoeffDomain::Integers).unwrap();
        let f = r.parse("-x_2*x_3+x_1*x_4").unwrap();
        let g = &f * &r.var(0);
        assert_eq!(g, r.parse("-x*x_2*x_3+x*x_1*x_4").unwrap());
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GradedRevLex;
        assert_eq!(o.compare(&Monomial(vec![0, 2, 0]), &Monomial(vec![1, 0, 1])), Ordering::Greater);
        assert_eq!(o.compare(&Monomial(vec![3, 0, 0]), &Monomial(vec![0, 1, 1])), Ordering::Greater);
        assert_eq!(o.compare(&Monomial(vec![1, 1]), &Monomial(vec![1, 1])), Ordering::Equal);
    }

    #[test]
    fn multidegree_examples() {
        assert_eq!(multidegree(&Monomial(vec![3, 1])), vec![3, 1]);
        assert_eq!(multidegree(&Monomial(vec![0, 0])), vec![0, 0]);
        assert_eq!(multidegree(&Monomial(vec![6, 4])), vec![6, 4]);
    }

    #[test]
    fn init_examples() {
        let r = ring(4);
        let f = r.parse("x_1^2+x_1").unwrap();
        assert_eq!(f.init().unwrap().0, Monomial(vec![2, 0, 0, 0]));
        let g = r.parse("-x_2*x_3+x_1*x_4").unwrap();
        let (m, c) = g.init().unwrap();
        assert_eq!((m, c), (Monomial(vec![0, 1, 1, 0]), BigInt::from(-1)));
        assert_eq!(r.constant(5).init().unwrap().1, BigInt::from(5));
        assert_eq!(r.zero().init(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn exact_division() {
        let r = ring(2);
        let f = r.parse("x_1^3*x_2-2*x_1*x_2^2").unwrap();
        let d = r.parse("x_1^2-2*x_2").unwrap();
        assert_eq!(f.exact_div(&d).unwrap(), Some(r.parse("x_1*x_2").unwrap()));
        assert_eq!(r.parse("x_1+1").unwrap().exact_div(&r.var(1)).unwrap(), None);
        assert_eq!(r.parse("3*x_1").unwrap().exact_div(&r.parse("2*x_1").unwrap()).unwrap(), None);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = ring(2);
        let b = ring(3);
        assert_eq!(a.var(0).checked_add(&b.var(0)), Err(Error::RingMismatch));
    }

    #[test]
    fn prime_field_reduces() {
        let r = RingCtx::new(1, CoeffDomain::PrimeField(5)).unwrap();
        let f = r.parse("7*x_1+5").unwrap();
        assert_eq!(f, r.parse("2*x_1").unwrap());
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let r = ring(2);
        let t = RingCtx::with_names(vec!["t".into()], CoeffDomain::Integers).unwrap();
        let f = r.parse("x_1^3-x_2^2").unwrap();
        let img = [t.parse("t^2").unwrap(), t.parse("t^3").unwrap()];
        assert!(f.substitute(&t, &img).unwrap().is_zero());
    }
}
