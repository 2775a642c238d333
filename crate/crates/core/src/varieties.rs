//! Standard monomials for varieties of complexes.
//!
//! A minor symbol ⟨A|B⟩_k stands for the minor of X_k (a d_{k-1}×d_k matrix)
//! with rows A and columns B. Monomials in symbols are classified through
//! the multitableau t(m).

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::polymatrix::generic_matrix;
use crate::polyring::{groebner_basis_over, GbField};
use crate::subsets::lex_subsets;
use crate::tableaux::Tableau;
use crate::{CoeffDomain, Error, MonomialOrder, Polynomial, Result, Ring, RingCtx, SubsetIndex};

/// Total order on subsets: by size, then the set with the smaller element at
/// the first difference is larger (so {2,3} < {1,3} < {1,2}).
pub fn subset_total_cmp(a: &SubsetIndex, b: &SubsetIndex) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| b.as_slice().cmp(a.as_slice()))
}

/// {a_1<…<a_s} ≤ {b_1<…<b_t} iff s ≤ t and a_i ≥ b_i for i ≤ s.
pub fn subset_le(a: &SubsetIndex, b: &SubsetIndex) -> bool {
    a.len() <= b.len() && a.as_slice().iter().zip(b.as_slice()).all(|(x, y)| x >= y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PartialCmp {
    Less,
    Equal,
    Greater,
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinorSymbol {
    level: usize,
    rows: SubsetIndex,
    cols: SubsetIndex,
}

impl MinorSymbol {
    pub fn new(level: usize, rows: SubsetIndex, cols: SubsetIndex) -> Result<Self> {
        if level == 0 || rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::Invalid(format!("<{rows}|{cols}>_{level} is not a minor symbol")));
        }
        Ok(MinorSymbol { level, rows, cols })
    }
    pub fn level(&self) -> usize {
        self.level
    }
    pub fn rows(&self) -> &SubsetIndex {
        &self.rows
    }
    pub fn cols(&self) -> &SubsetIndex {
        &self.cols
    }
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `<1,2|1,4>_1`; a missing `_k` means level 1.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad minor symbol {s:?}"));
        let body = s.strip_prefix('<').or_else(|| s.strip_prefix('⟨')).ok_or_else(bad)?;
        let (inner, rest) = body.split_once('>').or_else(|| body.split_once('⟩')).ok_or_else(bad)?;
        let level = match rest.trim() {
            "" => 1,
            r => r.strip_prefix('_').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?,
        };
        let (a, b) = inner.split_once('|').ok_or_else(bad)?;
        let set = |t: &str| -> Result<SubsetIndex> {
            let v = t
                .split(',')
                .map(|e| e.trim())
                .filter(|e| !e.is_empty())
                .map(|e| e.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            SubsetIndex::new(v)
        };
        MinorSymbol::new(level, set(a)?, set(b)?)
    }

    fn key_cmp(&self, o: &MinorSymbol) -> Ordering {
        subset_total_cmp(&self.rows, &o.rows).then_with(|| subset_total_cmp(&self.cols, &o.cols))
    }
}

impl fmt::Display for MinorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |s: &SubsetIndex| s.as_slice().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "<{}|{}>_{}", j(&self.rows), j(&self.cols), self.level)
    }
}

fn same_level(a: &MinorSymbol, b: &MinorSymbol) -> Result<()> {
    if a.level != b.level {
        return Err(Error::Invalid(format!("{a} and {b} live at different levels")));
    }
    Ok(())
}

/// ⟨A|B⟩ < ⟨C|D⟩ iff A < C, or A = C and B < D.
pub fn symbol_total_order(a: &MinorSymbol, b: &MinorSymbol) -> Result<Ordering> {
    same_level(a, b)?;
    Ok(a.key_cmp(b))
}

/// Componentwise subset order on (A, B).
pub fn symbol_partial_order(a: &MinorSymbol, b: &MinorSymbol) -> Result<PartialCmp> {
    same_level(a, b)?;
    let le = subset_le(&a.rows, &b.rows) && subset_le(&a.cols, &b.cols);
    let ge = subset_le(&b.rows, &a.rows) && subset_le(&b.cols, &a.cols);
    Ok(match (le, ge) {
        (true, true) => PartialCmp::Equal,
        (true, false) => PartialCmp::Less,
        (false, true) => PartialCmp::Greater,
        (false, false) => PartialCmp::Incomparable,
    })
}

/// Covering pairs (upper, lower) of the partial order among `symbols`.
pub fn hasse_diagram(symbols: &[MinorSymbol]) -> Vec<(MinorSymbol, MinorSymbol)> {
    let lt = |a: &MinorSymbol, b: &MinorSymbol| symbol_partial_order(a, b).ok() == Some(PartialCmp::Less);
    let mut out = vec![];
    for hi in symbols {
        for lo in symbols {
            if lt(lo, hi) && !symbols.iter().any(|m| lt(lo, m) && lt(m, hi)) {
                out.push((hi.clone(), lo.clone()));
            }
        }
    }
    out
}

/// Dimension vector d = (d_0..d_N) with rank bounds r = (r_1..r_N).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedFormat {
    dims: Vec<usize>,
    ranks: Vec<usize>,
}

impl RankedFormat {
    pub fn new(dims: Vec<usize>, ranks: Vec<usize>) -> Result<Self> {
        if dims.len() != ranks.len() + 1 {
            return Err(Error::Shape(format!("{} dimensions for {} ranks", dims.len(), ranks.len())));
        }
        for (k, &r) in ranks.iter().enumerate() {
            if r > dims[k].min(dims[k + 1]) {
                return Err(Error::Invalid(format!("r_{} = {r} exceeds min(d_{}, d_{})", k + 1, k, k + 1)));
            }
        }
        Ok(RankedFormat { dims, ranks })
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }
    /// Number of maps N.
    pub fn levels(&self) -> usize {
        self.ranks.len()
    }
    /// r_k (1-based).
    pub fn rank(&self, k: usize) -> usize {
        self.ranks[k - 1]
    }
    /// r_k + r_{k+1} ≤ d_k for every inner k.
    pub fn is_complex_compatible(&self) -> bool {
        self.ranks.windows(2).enumerate().all(|(i, w)| w[0] + w[1] <= self.dims[i + 1])
    }

    /// V(d_{k-1}, d_k, r_k) in increasing total order.
    pub fn symbols(&self, k: usize) -> Vec<MinorSymbol> {
        let mut v = vec![];
        for s in 1..=self.rank(k) {
            for a in lex_subsets(self.dims[k - 1], s) {
                for b in lex_subsets(self.dims[k], s) {
                    v.push(MinorSymbol { level: k, rows: a.clone(), cols: b });
                }
            }
        }
        v.sort_by(|a, b| a.key_cmp(b));
        v
    }

    /// V(d): all levels, level-major, each level increasing.
    pub fn all_symbols(&self) -> Vec<MinorSymbol> {
        (1..=self.levels()).flat_map(|k| self.symbols(k)).collect()
    }

    pub fn is_max_rank(&self, s: &MinorSymbol) -> bool {
        s.size() == self.rank(s.level)
    }

    pub fn check(&self, s: &MinorSymbol) -> Result<()> {
        let k = s.level;
        if k > self.levels()
            || SubsetIndex::max(&s.rows).unwrap_or(0) > self.dims[k - 1]
            || SubsetIndex::max(&s.cols).unwrap_or(0) > self.dims[k]
            || s.size() > self.rank(k)
        {
            return Err(Error::Invalid(format!(
                "{s} is not a symbol of the format d = {:?}, r = {:?}",
                self.dims, self.ranks
            )));
        }
        Ok(())
    }
}

/// A monomial in minor symbols, kept sorted by level, then decreasing
/// symbol order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolMonomial(Vec<MinorSymbol>);

fn canonical_cmp(a: &MinorSymbol, b: &MinorSymbol) -> Ordering {
    a.level.cmp(&b.level).then_with(|| b.key_cmp(a))
}

impl SymbolMonomial {
    pub fn new(mut symbols: Vec<MinorSymbol>) -> Self {
        symbols.sort_by(canonical_cmp);
        SymbolMonomial(symbols)
    }
    pub fn one() -> Self {
        SymbolMonomial(vec![])
    }
    pub fn symbols(&self) -> &[MinorSymbol] {
        &self.0
    }
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
    /// The level-k factor m_k, in decreasing order.
    pub fn factor(&self, k: usize) -> Vec<&MinorSymbol> {
        self.0.iter().filter(|s| s.level == k).collect()
    }
    /// Number of symbols.
    pub fn degree(&self) -> usize {
        self.0.len()
    }
    /// Polynomial degree Σ|A| of the corresponding product of minors.
    pub fn poly_degree(&self) -> usize {
        self.0.iter().map(|s| s.size()).sum()
    }
    pub fn mul(&self, o: &SymbolMonomial) -> SymbolMonomial {
        SymbolMonomial::new(self.0.iter().chain(&o.0).cloned().collect())
    }
    pub fn divides(&self, o: &SymbolMonomial) -> bool {
        let mut rest = o.0.clone();
        self.0.iter().all(|s| match rest.iter().position(|t| t == s) {
            Some(i) => {
                rest.remove(i);
                true
            }
            None => false,
        })
    }

    /// Juxtaposed symbols, e.g. `<1,2|1,4>_1<2|3>_1`; `1` or empty is the unit.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(SymbolMonomial::one());
        }
        let mut out = vec![];
        let mut rest = s;
        while !rest.trim().is_empty() {
            let r = rest.trim_start().trim_start_matches('*').trim_start();
            let end = r[1..].find(['<', '⟨']).map_or(r.len(), |i| i + 1);
            out.push(MinorSymbol::parse(r[..end].trim_end().trim_end_matches('*'))?);
            rest = &r[end..];
        }
        Ok(SymbolMonomial::new(out))
    }

    pub fn check(&self, fmt: &RankedFormat) -> Result<()> {
        self.0.iter().try_for_each(|s| fmt.check(s))
    }
}

impl fmt::Display for SymbolMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Per-level grevlex (symbols ordered by the total order, larger symbol =
/// larger variable), combined lexicographically over levels.
pub fn monomial_cmp(a: &SymbolMonomial, b: &SymbolMonomial, levels: usize) -> Ordering {
    for k in 1..=levels {
        let (fa, fb) = (a.factor(k), b.factor(k));
        let o = fa.len().cmp(&fb.len()).then_with(|| {
            // walk from the smallest variable upward: fewer copies of the
            // smallest differing variable wins
            let mut all: Vec<&MinorSymbol> = fa.iter().chain(&fb).copied().collect();
            all.sort_by(|x, y| x.key_cmp(y));
            all.dedup();
            for v in all {
                let ca = fa.iter().filter(|s| **s == v).count();
                let cb = fb.iter().filter(|s| **s == v).count();
                if ca != cb {
                    return cb.cmp(&ca);
                }
            }
            Ordering::Equal
        });
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

/// Lexicographic over colours of [`monomial_cmp`].
pub fn multi_cmp(a: &[SymbolMonomial], b: &[SymbolMonomial], fmts: &[RankedFormat]) -> Ordering {
    for ((x, y), f) in a.iter().zip(b).zip(fmts) {
        let o = monomial_cmp(x, y, f.levels());
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

/// The N+1 tableaux (t(A_1), t(B_1)/t(A_2), …, t(B_{N-1})/t(A_N), t(B_N)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multitableau(pub Vec<Tableau>);

impl Multitableau {
    pub fn is_standard(&self) -> bool {
        self.0.iter().all(Tableau::is_standard)
    }
}

impl fmt::Display for Multitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_text()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn tableau_of(m: &SymbolMonomial, fmt: &RankedFormat) -> Result<Multitableau> {
    m.check(fmt)?;
    let n = fmt.levels();
    let d = fmt.dims();
    let complement = |b: &SubsetIndex, k: usize| b.complement(d[k]).into_vec();
    let mut out = vec![];
    for i in 0..=n {
        let mut rows: Vec<Vec<usize>> = vec![];
        if i >= 1 {
            let f = m.factor(i);
            if i < n {
                rows.extend(f.iter().rev().map(|s| complement(&s.cols, i)));
            } else {
                let full = SubsetIndex::full(d[n]);
                if let Some(p) = f.iter().position(|s| s.cols != full) {
                    rows.extend(f[p..].iter().rev().map(|s| complement(&s.cols, n)));
                }
            }
        }
        if i < n {
            rows.extend(m.factor(i + 1).iter().map(|s| s.rows.as_slice().to_vec()));
        }
        out.push(Tableau::new(rows));
    }
    Ok(Multitableau(out))
}

/// Whether symbols of size r_k (the set V^max) are excluded from standard
/// monomials. The full definition excludes them; counting a basis of the
/// coordinate ring of the variety {rank X_k ≤ r_k} needs them included.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum MaxRankPolicy {
    #[default]
    ExcludeMaxRank,
    IncludeMaxRank,
}

pub fn is_standard_monomial(m: &SymbolMonomial, fmt: &RankedFormat) -> Result<bool> {
    is_standard_monomial_with(m, fmt, MaxRankPolicy::ExcludeMaxRank)
}

pub fn is_standard_monomial_with(m: &SymbolMonomial, fmt: &RankedFormat, policy: MaxRankPolicy) -> Result<bool> {
    let t = tableau_of(m, fmt)?;
    if policy == MaxRankPolicy::ExcludeMaxRank && m.symbols().iter().any(|s| fmt.is_max_rank(s)) {
        return Ok(false);
    }
    Ok(t.is_standard())
}

/// Membership in Σ(d), the ideal of nonstandard monomials.
pub fn initial_ideal_member(m: &SymbolMonomial, fmt: &RankedFormat) -> Result<bool> {
    Ok(!is_standard_monomial(m, fmt)?)
}

/// Product of colour factors, each judged against its own format.
pub fn is_standard_multi(ms: &[SymbolMonomial], fmts: &[RankedFormat]) -> Result<bool> {
    if ms.len() != fmts.len() {
        return Err(Error::Shape(format!("{} factors for {} formats", ms.len(), fmts.len())));
    }
    for (m, f) in ms.iter().zip(fmts) {
        if !is_standard_monomial(m, f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All standard monomials of polynomial degree `degree`, in increasing
/// monomial order. Fails with `CapExceeded` past `cap` results.
pub fn enumerate_standard(fmt: &RankedFormat, degree: usize, policy: MaxRankPolicy, cap: usize) -> Result<Vec<SymbolMonomial>> {
    let vars = fmt.all_symbols();
    let roots: Vec<usize> = (0..vars.len()).collect();
    if degree == 0 {
        return Ok(vec![SymbolMonomial::one()]);
    }
    let chunks: Vec<Result<Vec<SymbolMonomial>>> = roots
        .par_iter()
        .map(|&i| {
            let mut out = vec![];
            let mut cur = vec![vars[i].clone()];
            if vars[i].size() <= degree && is_standard_monomial_with(&SymbolMonomial::new(cur.clone()), fmt, policy)? {
                extend(&vars, i, degree - vars[i].size(), &mut cur, fmt, policy, cap, &mut out)?;
            }
            Ok(out)
        })
        .collect();
    let mut all = vec![];
    for c in chunks {
        all.extend(c?);
        if all.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
    }
    all.sort_by(|a, b| monomial_cmp(a, b, fmt.levels()));
    Ok(all)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    vars: &[MinorSymbol],
    from: usize,
    left: usize,
    cur: &mut Vec<MinorSymbol>,
    fmt: &RankedFormat,
    policy: MaxRankPolicy,
    cap: usize,
    out: &mut Vec<SymbolMonomial>,
) -> Result<()> {
    if left == 0 {
        out.push(SymbolMonomial::new(cur.clone()));
        if out.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
        return Ok(());
    }
    for j in from..vars.len() {
        if vars[j].size() > left {
            continue;
        }
        cur.push(vars[j].clone());
        // standardness is inherited by divisors, so prune here
        if is_standard_monomial_with(&SymbolMonomial::new(cur.clone()), fmt, policy)? {
            extend(vars, j, left - vars[j].size(), cur, fmt, policy, cap, out)?;
        }
        cur.pop();
    }
    Ok(())
}

/// Faces of Δ(d): sets of distinct symbols whose product is standard, up to
/// `max_card` vertices, listed by size then in vertex order.
pub fn delta_complex_faces(fmt: &RankedFormat, max_card: usize, policy: MaxRankPolicy, cap: usize) -> Result<Vec<Vec<MinorSymbol>>> {
    let vars = fmt.all_symbols();
    let mut faces: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_card {
        let mut next = vec![];
        for f in &frontier {
            let start = f.last().map_or(0, |&l| l + 1);
            for j in start..vars.len() {
                let mut g = f.clone();
                g.push(j);
                let m = SymbolMonomial::new(g.iter().map(|&i| vars[i].clone()).collect());
                if is_standard_monomial_with(&m, fmt, policy)? {
                    next.push(g);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        faces.extend(next.iter().cloned());
        if faces.len() > cap {
            return Err(Error::CapExceeded(cap));
        }
        frontier = next;
    }
    Ok(faces.into_iter().map(|f| f.into_iter().map(|i| vars[i].clone()).collect()).collect())
}

/// Componentwise comparison of rank sequences and their meet (componentwise
/// minimum), for formats over the same dimension vector.
pub fn degeneration_order(a: &RankedFormat, b: &RankedFormat) -> Result<(PartialCmp, RankedFormat)> {
    if a.dims != b.dims {
        return Err(Error::Shape("degeneration order needs equal dimension vectors".into()));
    }
    let le = a.ranks.iter().zip(&b.ranks).all(|(x, y)| x <= y);
    let ge = a.ranks.iter().zip(&b.ranks).all(|(x, y)| x >= y);
    let c = match (le, ge) {
        (true, true) => PartialCmp::Equal,
        (true, false) => PartialCmp::Less,
        (false, true) => PartialCmp::Greater,
        _ => PartialCmp::Incomparable,
    };
    let meet = a.ranks.iter().zip(&b.ranks).map(|(x, y)| *x.min(y)).collect();
    Ok((c, RankedFormat::new(a.dims.clone(), meet)?))
}

/// Rank sequences with r_k ≤ min(d_{k-1}, d_k) and r_k + r_{k+1} ≤ d_k that
/// are maximal in the componentwise order.
pub fn maximal_rank_sequences(dims: &[usize]) -> Vec<Vec<usize>> {
    let n = dims.len().saturating_sub(1);
    let mut all: Vec<Vec<usize>> = vec![vec![]];
    for k in 1..=n {
        let mut next = vec![];
        for r in &all {
            for v in 0..=dims[k - 1].min(dims[k]) {
                if k == 1 || r[k - 2] + v <= dims[k - 1] {
                    let mut s = r.clone();
                    s.push(v);
                    next.push(s);
                }
            }
        }
        all = next;
    }
    let dominated = |a: &Vec<usize>, b: &Vec<usize>| a != b && a.iter().zip(b).all(|(x, y)| x <= y);
    all.iter().filter(|a| !all.iter().any(|b| dominated(a, b))).cloned().collect()
}

/// Generic matrices X_1..X_N (consecutive variables, column-major) and the
/// generators of the ideal of the variety: entries of X_k·X_{k+1} and the
/// (r_k+1)-minors of X_k.
pub fn coordinate_ring_ideal(fmt: &RankedFormat) -> Result<(Ring, Vec<Polynomial>)> {
    let d = fmt.dims();
    let total: usize = d.windows(2).map(|w| w[0] * w[1]).sum();
    let ring = RingCtx::indexed("x", total, CoeffDomain::Integers)?;
    let mut xs = vec![];
    let mut start = 1;
    for w in d.windows(2) {
        xs.push(generic_matrix(&ring, start, w[0], w[1])?);
        start += w[0] * w[1];
    }
    let mut gens = vec![];
    for w in xs.windows(2) {
        gens.extend(w[0].matmul(&w[1])?.entries().iter().filter(|p| !p.is_zero()).cloned());
    }
    for (k, x) in xs.iter().enumerate() {
        let r = fmt.rank(k + 1);
        if r < x.rows().min(x.cols()) {
            gens.extend(x.minors(r + 1)?);
        }
    }
    Ok((ring, gens))
}

/// dim_K of the degree-`degree` part of the coordinate ring, via a Gröbner
/// basis over `field` and a staircase count.
pub fn hilbert_function_oracle(fmt: &RankedFormat, degree: u32, field: GbField) -> Result<u64> {
    let (ring, gens) = coordinate_ring_ideal(fmt)?;
    let ring = match field {
        GbField::Prime(p) => ring.with_domain(CoeffDomain::PrimeField(p))?,
        GbField::Rationals => ring,
    };
    let gens = gens.iter().map(|g| g.map_ring(&ring)).collect::<Result<Vec<_>>>()?;
    let gb = groebner_basis_over(&ring, &gens, MonomialOrder::GradedRevLex, field)?;
    Ok(gb.staircase_count(degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> MinorSymbol {
        MinorSymbol::parse(s).unwrap()
    }
    fn mono(s: &str) -> SymbolMonomial {
        SymbolMonomial::parse(s).unwrap()
    }

    #[test]
    fn total_order_of_the_two_by_three_example() {
        let f = RankedFormat::new(vec![2, 3], vec![2]).unwrap();
        let listed: Vec<String> = f.symbols(1).iter().map(|s| s.to_string()).collect();
        assert_eq!(
            listed,
            [
                "<2|3>_1", "<2|2>_1", "<2|1>_1", "<1|3>_1", "<1|2>_1", "<1|1>_1", "<1,2|2,3>_1", "<1,2|1,3>_1",
                "<1,2|1,2>_1"
            ]
        );
        assert_eq!(symbol_total_order(&sym("<1|1>_1"), &sym("<1|1>_1")).unwrap(), Ordering::Equal);
        assert_eq!(symbol_total_order(&sym("<1|2>_1"), &sym("<2|1>_1")).unwrap(), Ordering::Greater);
        assert!(symbol_total_order(&sym("<1|1>_1"), &sym("<1|1>_2")).is_err());
    }

    #[test]
    fn hasse_diagram_of_the_two_by_three_example() {
        let f = RankedFormat::new(vec![2, 3], vec![2]).unwrap();
        let mut edges: Vec<String> =
            hasse_diagram(&f.symbols(1)).iter().map(|(a, b)| format!("{a} > {b}")).collect();
        edges.sort();
        let mut want = vec![
            "<1,2|1,2>_1 > <1,2|1,3>_1",
            "<1,2|1,3>_1 > <1|1>_1",
            "<1,2|1,3>_1 > <1,2|2,3>_1",
            "<1|1>_1 > <2|1>_1",
            "<1|1>_1 > <1|2>_1",
            "<1,2|2,3>_1 > <1|2>_1",
            "<2|1>_1 > <2|2>_1",
            "<1|2>_1 > <2|2>_1",
            "<1|2>_1 > <1|3>_1",
            "<2|2>_1 > <2|3>_1",
            "<1|3>_1 > <2|3>_1",
        ];
        want.sort();
        assert_eq!(edges, want);
        assert_eq!(symbol_partial_order(&sym("<1|1>"), &sym("<2|2>")).unwrap(), PartialCmp::Greater);
        assert_eq!(symbol_partial_order(&sym("<1|1>"), &sym("<1|1>")).unwrap(), PartialCmp::Equal);
    }

    #[test]
    fn worked_multitableaux() {
        let f = RankedFormat::new(vec![2, 5, 3], vec![2, 3]).unwrap();
        let m1 = mono("<1,2|1,4>_1<2|3>_1<1,3|2,3>_2");
        let t1 = tableau_of(&m1, &f).unwrap();
        assert_eq!(t1.0[0].to_text(), "12/2");
        assert_eq!(t1.0[1].to_text(), "1245/235/13");
        assert_eq!(t1.0[2].to_text(), "1");
        assert!(!t1.is_standard());
        assert!(!is_standard_monomial(&m1, &f).unwrap());
        let m2 = mono("<1,2|1,4>_1<2|3>_1<2,3|2,3>_2");
        let t2 = tableau_of(&m2, &f).unwrap();
        assert_eq!(t2.to_string(), "(12/2, 1245/235/23, 1)");
        assert!(t2.is_standard());
        assert!(!is_standard_monomial(&m2, &f).unwrap());
        let m3 = mono("<2|3>_1<2,3|2,3>_2");
        assert!(is_standard_monomial(&m3, &f).unwrap());
        assert_eq!(tableau_of(&SymbolMonomial::one(), &f).unwrap().to_string(), "(∅, ∅, ∅)");
        for m in [&m1, &m2, &m3] {
            assert_eq!(initial_ideal_member(m, &f).unwrap(), !is_standard_monomial(m, &f).unwrap());
        }
        assert!(!initial_ideal_member(&SymbolMonomial::one(), &f).unwrap());
    }

    #[test]
    fn enumeration_small_cases() {
        let f = RankedFormat::new(vec![1, 1], vec![1]).unwrap();
        assert!(enumerate_standard(&f, 1, MaxRankPolicy::ExcludeMaxRank, 100).unwrap().is_empty());
        assert_eq!(enumerate_standard(&f, 1, MaxRankPolicy::IncludeMaxRank, 100).unwrap().len(), 1);
        assert_eq!(enumerate_standard(&f, 0, MaxRankPolicy::ExcludeMaxRank, 100).unwrap(), vec![SymbolMonomial::one()]);
        let f = RankedFormat::new(vec![2, 2], vec![1]).unwrap();
        let n = enumerate_standard(&f, 2, MaxRankPolicy::IncludeMaxRank, 100).unwrap().len() as u64;
        assert_eq!(n, 9);
        assert_eq!(hilbert_function_oracle(&f, 2, GbField::Rationals).unwrap(), 9);
        assert!(matches!(enumerate_standard(&f, 3, MaxRankPolicy::IncludeMaxRank, 3), Err(Error::CapExceeded(3))));
    }

    #[test]
    fn counts_match_groebner_on_small_formats() {
        for dims in [vec![1, 1], vec![2, 1], vec![2, 2], vec![1, 2, 1], vec![2, 2, 1], vec![2, 2, 2], vec![1, 2, 2]] {
            let n = dims.len() - 1;
            let mut seqs = vec![vec![]];
            for k in 1..=n {
                seqs = seqs
                    .into_iter()
                    .flat_map(|s: Vec<usize>| (0..=dims[k - 1].min(dims[k])).map(move |v| [s.clone(), vec![v]].concat()))
                    .collect();
            }
            for r in seqs {
                let f = RankedFormat::new(dims.clone(), r.clone()).unwrap();
                for d in 0..=3 {
                    let ours = enumerate_standard(&f, d, MaxRankPolicy::IncludeMaxRank, 100_000).unwrap().len() as u64;
                    let gb = hilbert_function_oracle(&f, d as u32, GbField::Rationals).unwrap();
                    assert_eq!(ours, gb, "d = {dims:?}, r = {r:?}, degree {d}");
                }
            }
        }
    }

    #[test]
    fn faces_of_delta() {
        let f = RankedFormat::new(vec![1, 1], vec![1]).unwrap();
        assert_eq!(delta_complex_faces(&f, 3, MaxRankPolicy::ExcludeMaxRank, 100).unwrap(), vec![Vec::<MinorSymbol>::new()]);
        let f = RankedFormat::new(vec![2, 3, 2], vec![1, 2]).unwrap();
        let faces = delta_complex_faces(&f, 3, MaxRankPolicy::ExcludeMaxRank, 100_000).unwrap();
        let set: std::collections::HashSet<Vec<MinorSymbol>> = faces.iter().cloned().collect();
        for face in &faces {
            for i in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(i);
                assert!(set.contains(&sub));
            }
        }
    }

    #[test]
    fn degeneration_examples() {
        let d = vec![2, 2, 2];
        let a = RankedFormat::new(d.clone(), vec![2, 2]).unwrap();
        let b = RankedFormat::new(d.clone(), vec![1, 2]).unwrap();
        assert_eq!(degeneration_order(&b, &a).unwrap().0, PartialCmp::Less);
        let a = RankedFormat::new(d.clone(), vec![2, 1]).unwrap();
        let (c, meet) = degeneration_order(&a, &b).unwrap();
        assert_eq!(c, PartialCmp::Incomparable);
        assert_eq!(meet.ranks(), &[1, 1]);
        assert_eq!(maximal_rank_sequences(&[1, 3, 2]), vec![vec![1, 2]]);
    }

    #[test]
    fn multi_colour_example() {
        let d = vec![2, 4, 5, 3];
        let f12 = RankedFormat::new(d.clone(), vec![2, 2, 3]).unwrap();
        let f3 = RankedFormat::new(d.clone(), vec![1, 3, 2]).unwrap();
        let fmts = [f12.clone(), f12.clone(), f3.clone()];
        let m1 = mono("<3|2>_1<2|2>_1<3|4>_2<2,3|2,4>_3");
        let m2 = mono("<2|2>_2<1,2|1,2>_3");
        let m3 = mono("<2,3|2,3>_2<1,2|2,3>_3");
        assert!(m1.check(&f12).is_err());
        assert!(is_standard_multi(&[m1.clone(), SymbolMonomial::one(), SymbolMonomial::one()], &fmts).is_err());
        let shown = Multitableau(["2/3", "134/134/3", "1235/23", "13"].iter().map(|t| Tableau::parse(t).unwrap()).collect());
        assert!(shown.is_standard());
        assert_eq!(tableau_of(&m2, &f12).unwrap().to_string(), "(∅, 2, 1345/12, 3)");
        assert_eq!(tableau_of(&m3, &f3).unwrap().to_string(), "(∅, 23, 145/12, 1)");
        assert!(!is_standard_monomial(&m2, &f12).unwrap());
        assert!(!is_standard_monomial(&m3, &f3).unwrap());
        let one = SymbolMonomial::one();
        assert!(!is_standard_multi(&[one.clone(), m2.clone(), m3.clone()], &fmts).unwrap());
        assert!(is_standard_multi(&[one.clone(), one.clone(), one.clone()], &fmts).unwrap());
        let m2b = mono("<2|3>_2<1,2|1,2>_3");
        assert_eq!(
            multi_cmp(&[one.clone(), m2b, m3.clone()], &[one.clone(), m2, m3], &fmts),
            Ordering::Less
        );
    }

    #[test]
    fn divisor_closure_of_nonstandard_monomials() {
        let f = RankedFormat::new(vec![2, 3, 2], vec![1, 2]).unwrap();
        let vars = f.all_symbols();
        let mut seed = 1u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as usize
        };
        for _ in 0..200 {
            let m = SymbolMonomial::new((0..1 + next() % 3).map(|_| vars[next() % vars.len()].clone()).collect());
            if initial_ideal_member(&m, &f).unwrap() {
                let bigger = m.mul(&SymbolMonomial::new(vec![vars[next() % vars.len()].clone()]));
                assert!(initial_ideal_member(&bigger, &f).unwrap());
            }
        }
    }
}
