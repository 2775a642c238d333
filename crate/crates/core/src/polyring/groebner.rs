//! Buchberger's algorithm over ℚ (integer input lifted) or ℤ/p.
//!
//! Used as an oracle: ideal membership, ideal equality and Hilbert-function
//! counts by staircase enumeration.

use super::{CoeffDomain, Monomial, MonomialOrder, Polynomial, Ring, RingCtx};
use crate::field::{primitive_integer_vector, Field, PrimeField, Rationals};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// Field used for Gröbner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GbField {
    Rationals,
    Prime(u64),
}

impl GbField {
    /// ℚ for integer rings, ℤ/p for ℤ/p rings.
    pub fn natural(ring: &RingCtx) -> GbField {
        match ring.domain() {
            CoeffDomain::Integers => GbField::Rationals,
            CoeffDomain::PrimeField(p) => GbField::Prime(p),
        }
    }
}

type Terms<E> = Vec<(Monomial, E)>;

struct Engine<F: Field> {
    f: F,
    o: MonomialOrder,
}

impl<F: Field> Engine<F> {
    /// a - c·m·b
    fn sub_mul(&self, a: &Terms<F::Elem>, c: &F::Elem, m: &Monomial, b: &Terms<F::Elem>) -> Terms<F::Elem> {
        let f = &self.f;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let bm: Vec<(Monomial, F::Elem)> = b.iter().map(|(n, d)| (n.mul(m), f.mul(c, d))).collect();
        while i < a.len() || j < bm.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == bm.len() {
                Ordering::Greater
            } else {
                self.o.compare(&a[i].0, &bm[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm[j].0.clone(), f.neg(&bm[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = f.sub(&a[i].1, &bm[j].1);
                    if !f.is_zero(&v) {
                        out.push((a[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    fn monic(&self, mut p: Terms<F::Elem>) -> Terms<F::Elem> {
        if let Some((_, c)) = p.first() {
            let inv = self.f.inv(c);
            for (_, d) in p.iter_mut() {
                *d = self.f.mul(d, &inv);
            }
        }
        p
    }

    /// Full normal form of `p` modulo `basis` (basis elements monic).
    fn normal_form(&self, mut p: Terms<F::Elem>, basis: &[Terms<F::Elem>]) -> Terms<F::Elem> {
        let mut rem: Terms<F::Elem> = Vec::new();
        while !p.is_empty() {
            let (m, c) = p[0].clone();
            if let Some(g) = basis.iter().find(|g| g[0].0.divides(&m)) {
                let q = g[0].0.quotient_of(&m);
                let coef = self.f.div(&c, &g[0].1);
                p = self.sub_mul(&p, &coef, &q, g);
            } else {
                rem.push(p.remove(0));
            }
        }
        rem
    }

    fn spoly(&self, a: &Terms<F::Elem>, b: &Terms<F::Elem>) -> Terms<F::Elem> {
        let l = a[0].0.lcm(&b[0].0);
        let ma = a[0].0.quotient_of(&l);
        let mb = b[0].0.quotient_of(&l);
        let zero: Terms<F::Elem> = Vec::new();
        let ia = self.f.inv(&a[0].1);
        let ib = self.f.inv(&b[0].1);
        let pa = self.sub_mul(&zero, &self.f.neg(&ia), &ma, a);
        self.sub_mul(&pa, &ib, &mb, b)
    }

    fn buchberger(&self, gens: Vec<Terms<F::Elem>>) -> Vec<Terms<F::Elem>> {
        let mut g: Vec<Terms<F::Elem>> = Vec::new();
        let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
        for p in gens {
            let r = self.normal_form(p, &g);
            if !r.is_empty() {
                let r = self.monic(r);
                let k = g.len();
                g.push(r);
                for i in 0..k {
                    pairs.insert((i, k));
                }
            }
        }
        while let Some(&(i, j)) = pairs.iter().min_by(|a, b| {
            let la = g[a.0][0].0.lcm(&g[a.1][0].0);
            let lb = g[b.0][0].0.lcm(&g[b.1][0].0);
            self.o.compare(&la, &lb).then(a.cmp(b))
        }) {
            pairs.remove(&(i, j));
            let (li, lj) = (&g[i][0].0, &g[j][0].0);
            if li.coprime(lj) {
                continue;
            }
            let l = li.lcm(lj);
            let key = |a: usize, b: usize| (a.min(b), a.max(b));
            let chain = (0..g.len()).any(|k| {
                k != i && k != j && g[k][0].0.divides(&l) && !pairs.contains(&key(i, k)) && !pairs.contains(&key(j, k))
            });
            if chain {
                continue;
            }
            let s = self.spoly(&g[i], &g[j]);
            let r = self.normal_form(s, &g);
            if !r.is_empty() {
                let r = self.monic(r);
                let k = g.len();
                g.push(r);
                for a in 0..k {
                    pairs.insert((a, k));
                }
            }
        }
        // minimize
        let mut keep: Vec<Terms<F::Elem>> = Vec::new();
        for (idx, p) in g.iter().enumerate() {
            let redundant = g.iter().enumerate().any(|(jdx, q)| {
                jdx != idx && q[0].0.divides(&p[0].0) && (q[0].0 != p[0].0 || jdx < idx)
            });
            if !redundant {
                keep.push(p.clone());
            }
        }
        // interreduce tails
        let mut out = Vec::with_capacity(keep.len());
        for idx in 0..keep.len() {
            let others: Vec<Terms<F::Elem>> =
                keep.iter().enumerate().filter(|(j, _)| *j != idx).map(|(_, q)| q.clone()).collect();
            let mut p = keep[idx].clone();
            let head = p.remove(0);
            let mut tail = self.normal_form(p, &others);
            tail.insert(0, head);
            out.push(tail);
        }
        out.sort_by(|a, b| self.o.compare(&b[0].0, &a[0].0));
        out
    }
}

#[derive(Clone, Debug)]
enum Inner {
    Q(Vec<Terms<BigRational>>),
    P(PrimeField, Vec<Terms<u64>>),
}

/// A reduced Gröbner basis together with the data needed for normal forms.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    out_ring: Ring,
    order: MonomialOrder,
    inner: Inner,
}

fn to_q(p: &Polynomial, o: MonomialOrder) -> Terms<BigRational> {
    let mut t: Terms<BigRational> =
        p.terms().iter().map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()))).collect();
    t.sort_by(|a, b| o.compare(&b.0, &a.0));
    t
}

fn to_p(f: &PrimeField, p: &Polynomial, o: MonomialOrder) -> Terms<u64> {
    let mut t: Terms<u64> =
        p.terms().iter().map(|(m, c)| (m.clone(), f.from_int(c))).filter(|(_, c)| *c != 0).collect();
    t.sort_by(|a, b| o.compare(&b.0, &a.0));
    t
}

/// Reduced Gröbner basis over the ring's natural field (ℚ for ℤ).
pub fn groebner_basis(ring: &Ring, gens: &[Polynomial], o: MonomialOrder) -> Result<GroebnerBasis> {
    groebner_basis_over(ring, gens, o, GbField::natural(ring))
}

/// Reduced Gröbner basis over an explicit field. Integer input may be lifted
/// to ℚ or reduced mod p; ℤ/p input only works over the same ℤ/p.
pub fn groebner_basis_over(ring: &Ring, gens: &[Polynomial], o: MonomialOrder, field: GbField) -> Result<GroebnerBasis> {
    if gens.iter().any(|g| !super::same_ring(g.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    let (inner, out_domain) = match (ring.domain(), field) {
        (CoeffDomain::Integers, GbField::Rationals) => {
            let e = Engine { f: Rationals, o };
            (Inner::Q(e.buchberger(gens.iter().map(|g| to_q(g, o)).collect())), CoeffDomain::Integers)
        }
        (CoeffDomain::PrimeField(p), GbField::Rationals) => {
            return Err(Error::NotAField(format!("cannot lift coefficients of ZZ/{p} to QQ")))
        }
        (d, GbField::Prime(q)) => {
            if let CoeffDomain::PrimeField(p) = d {
                if p != q {
                    return Err(Error::NotAField(format!("ZZ/{p} coefficients used over ZZ/{q}")));
                }
            }
            let f = PrimeField::new(q)?;
            let e = Engine { f, o };
            (Inner::P(f, e.buchberger(gens.iter().map(|g| to_p(&f, g, o)).collect())), CoeffDomain::PrimeField(q))
        }
    };
    let out_ring = RingCtx::build(ring.names().to_vec(), out_domain, o)?;
    Ok(GroebnerBasis { ring: ring.clone(), out_ring, order: o, inner })
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }
    pub fn len(&self) -> usize {
        match &self.inner {
            Inner::Q(g) => g.len(),
            Inner::P(_, g) => g.len(),
        }
    }
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
    /// The ring the basis polynomials live in (input variables, chosen order,
    /// ℤ or ℤ/p coefficients).
    pub fn output_ring(&self) -> &Ring {
        &self.out_ring
    }
    /// Basis elements: primitive integer polynomials with positive leading
    /// coefficient over ℚ, monic over ℤ/p.
    pub fn polys(&self) -> Vec<Polynomial> {
        match &self.inner {
            Inner::Q(g) => g.iter().map(|t| self.from_q(t)).collect(),
            Inner::P(_, g) => g
                .iter()
                .map(|t| Polynomial::from_terms(&self.out_ring, t.iter().map(|(m, c)| (m.clone(), BigInt::from(*c))).collect()))
                .collect(),
        }
    }
    fn from_q(&self, t: &Terms<BigRational>) -> Polynomial {
        let coeffs: Vec<BigRational> = t.iter().map(|(_, c)| c.clone()).collect();
        let ints = primitive_integer_vector(&coeffs);
        Polynomial::from_terms(&self.out_ring, t.iter().map(|(m, _)| m.clone()).zip(ints).collect())
    }
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        match &self.inner {
            Inner::Q(g) => g.iter().map(|t| t[0].0.clone()).collect(),
            Inner::P(_, g) => g.iter().map(|t| t[0].0.clone()).collect(),
        }
    }
    /// Whether the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading_monomials().iter().any(|m| m.is_one())
    }

    /// Normal form of `p`, scaled to a primitive integer polynomial over ℚ.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if !super::same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(match &self.inner {
            Inner::Q(g) => {
                let e = Engine { f: Rationals, o: self.order };
                self.from_q(&e.normal_form(to_q(p, self.order), g))
            }
            Inner::P(f, g) => {
                let e = Engine { f: *f, o: self.order };
                let r = e.normal_form(to_p(f, p, self.order), g);
                Polynomial::from_terms(&self.out_ring, r.into_iter().map(|(m, c)| (m, BigInt::from(c))).collect())
            }
        })
    }
    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Whether every S-polynomial of the basis reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        fn check<F: Field>(e: &Engine<F>, g: &[Terms<F::Elem>]) -> bool {
            (0..g.len()).all(|i| (i + 1..g.len()).all(|j| e.normal_form(e.spoly(&g[i], &g[j]), g).is_empty()))
        }
        match &self.inner {
            Inner::Q(g) => check(&Engine { f: Rationals, o: self.order }, g),
            Inner::P(f, g) => check(&Engine { f: *f, o: self.order }, g),
        }
    }

    /// Number of monomials of total degree `d` outside the initial ideal. For
    /// homogeneous ideals under a degree-compatible order this is the Hilbert
    /// function of R/I at `d`.
    pub fn staircase_count(&self, d: u32) -> u64 {
        let lms = self.leading_monomials();
        let n = self.ring.num_vars();
        let mut count = 0u64;
        let mut exps = vec![0u32; n];
        fn rec(i: usize, left: u32, exps: &mut Vec<u32>, lms: &[Monomial], count: &mut u64) {
            let n = exps.len();
            if i == n - 1 {
                exps[i] = left;
                let m = Monomial(exps.clone());
                if !lms.iter().any(|l| l.divides(&m)) {
                    *count += 1;
                }
                return;
            }
            for e in 0..=left {
                exps[i] = e;
                rec(i + 1, left - e, exps, lms, count);
            }
            exps[i] = 0;
        }
        rec(0, d, &mut exps, &lms, &mut count);
        count
    }
}

/// Ideal membership over the ring's natural field.
pub fn ideal_contains(ring: &Ring, gens: &[Polynomial], f: &Polynomial) -> Result<bool> {
    groebner_basis(ring, gens, ring.order())?.contains(f)
}

/// Whether two generator lists span the same ideal (over ℚ or ℤ/p).
pub fn ideal_equal(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    let ga = groebner_basis(ring, a, MonomialOrder::GradedRevLex)?;
    let gb = groebner_basis(ring, b, MonomialOrder::GradedRevLex)?;
    for p in b {
        if !ga.contains(p)? {
            return Ok(false);
        }
    }
    for p in a {
        if !gb.contains(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::RingExt;

    fn xy(order: MonomialOrder) -> Ring {
        RingCtx::build(vec!["x".into(), "y".into()], CoeffDomain::Integers, order).unwrap()
    }

    #[test]
    fn single_generator() {
        let r = xy(MonomialOrder::GradedRevLex);
        let g = groebner_basis(&r, &[r.parse("x").unwrap()], r.order()).unwrap();
        assert_eq!(g.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["x"]);
    }

    #[test]
    fn lex_example_contains_y4_minus_y() {
        let r = xy(MonomialOrder::Lex);
        let g = groebner_basis(&r, &[r.parse("x^2-y").unwrap(), r.parse("y^2-x").unwrap()], MonomialOrder::Lex).unwrap();
        let strs: Vec<String> = g.polys().iter().map(|p| p.to_string()).collect();
        assert!(strs.contains(&"y^4-y".to_string()), "{strs:?}");
        assert!(g.s_pairs_reduce_to_zero());
    }

    #[test]
    fn empty_generators() {
        let r = xy(MonomialOrder::GradedRevLex);
        let g = groebner_basis(&r, &[], r.order()).unwrap();
        assert!(g.is_empty());
        assert!(!g.contains(&r.parse("x").unwrap()).unwrap());
        assert!(g.contains(&r.zero()).unwrap());
    }

    #[test]
    fn ideal_equality_examples() {
        let r = xy(MonomialOrder::GradedRevLex);
        let p = |s: &str| r.parse(s).unwrap();
        assert!(ideal_equal(&r, &[p("x^2"), p("x"), p("y")], &[p("x"), p("y")]).unwrap());
        assert!(!ideal_equal(&r, &[p("x")], &[p("y")]).unwrap());
        assert!(ideal_equal(&r, &[p("x^2+y")], &[p("5*x^2+5*y")]).unwrap());
    }

    #[test]
    fn prime_field_mismatch() {
        let r = RingCtx::new(2, CoeffDomain::PrimeField(7)).unwrap();
        let g = [r.var(0)];
        assert!(matches!(groebner_basis_over(&r, &g, r.order(), GbField::Rationals), Err(Error::NotAField(_))));
        assert!(matches!(groebner_basis_over(&r, &g, r.order(), GbField::Prime(11)), Err(Error::NotAField(_))));
        assert!(groebner_basis_over(&r, &g, r.order(), GbField::Prime(7)).is_ok());
    }

    #[test]
    fn staircase_of_2x2_determinant() {
        let r = RingCtx::new(4, CoeffDomain::Integers).unwrap();
        let g = groebner_basis(&r, &[r.parse("x_1*x_4-x_2*x_3").unwrap()], r.order()).unwrap();
        // dim of degree-d part of K[a,b,c,d]/(ad-bc) is (d+1)^2
        for d in 0..5u32 {
            assert_eq!(g.staircase_count(d), ((d + 1) * (d + 1)) as u64);
        }
    }
}
