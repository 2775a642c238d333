//! Built-in self test: the recorded transcripts plus quick seeded property
//! checks, one named case each, filterable by module.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complexes::{
    be_diagram_check, be_multipliers, random_betti, random_instance, random_rank_conforming, rank_conditions,
    tchernev_identity, RandomComplexOptions,
};
use crate::determinantal::{fitting_ideal, fitting_invariance_check, is_unit_ideal};
use crate::fixtures::{engineered_h0_bifiltration, hilbert_burch_352, two_step_complex, two_step_presentation, xy_ring};
use crate::golden;
use crate::persistence::{betti_numbers, presentation_of_homology, rank_invariant};
use crate::polyring::{groebner_basis, ideal_equal, Style};
use crate::tableaux::{schur_dimension, straighten_in, Bitableau, FormalSum, Partition};
use crate::varieties::{enumerate_standard, hilbert_function_oracle, is_standard_monomial, MaxRankPolicy, RankedFormat, SymbolMonomial};
use crate::{generic_matrix, intmat, CoeffDomain, MonomialOrder, PolyMatrix, RingCtx, RingExt};

pub const MODULES: [&str; 7] = ["polyring", "polymatrix", "tableaux", "determinantal", "complexes", "varieties", "persistence"];

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub module: &'static str,
    pub name: String,
    pub outcome: std::result::Result<(), String>,
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond { Ok(()) } else { Err(msg()) }
}

fn e2s(e: crate::Error) -> String {
    e.to_string()
}

fn groebner_of_minors() -> Check {
    let r = RingCtx::indexed("x", 6, CoeffDomain::Integers).map_err(e2s)?;
    let m = generic_matrix(&r, 1, 2, 3).map_err(e2s)?;
    let minors = m.minors(2).map_err(e2s)?;
    let gb = groebner_basis(&r, &minors, MonomialOrder::GradedRevLex).map_err(e2s)?;
    ensure(gb.s_pairs_reduce_to_zero(), || "S-pairs do not reduce to zero".into())?;
    ensure(ideal_equal(&r, &gb.polys(), &minors).map_err(e2s)?, || "basis generates a different ideal".into())
}

fn text_roundtrip() -> Check {
    let r = xy_ring();
    for s in ["x^2*y-3*y^3+1", "-x", "0", "7*x*y^4"] {
        let p = r.parse(s).map_err(e2s)?;
        for style in [Style::Star, Style::Juxtapose] {
            let back = r.parse(&p.to_text(style)).map_err(e2s)?;
            ensure(back == p, || format!("{s} does not survive printing"))?;
        }
    }
    Ok(())
}

fn cauchy_binet() -> Check {
    let r = xy_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let mut entry = |_, _| {
            let c = r.constant(rng.gen_range(-3..=3));
            if rng.gen_bool(0.5) { &c * &r.var(rng.gen_range(0..2)) } else { c }
        };
        let a = PolyMatrix::from_fn(&r, 3, 4, &mut entry);
        let b = PolyMatrix::from_fn(&r, 4, 3, &mut entry);
        let lhs = a.matmul(&b).map_err(e2s)?.exterior_power(2).map_err(e2s)?;
        let rhs = a.exterior_power(2).map_err(e2s)?.matmul(&b.exterior_power(2).map_err(e2s)?).map_err(e2s)?;
        ensure(lhs.to_m2() == rhs.to_m2(), || "Λ²(AB) ≠ Λ²A·Λ²B".into())?;
    }
    Ok(())
}

fn straightening() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut done = 0;
    while done < 10 {
        let rows: Vec<(Vec<usize>, Vec<usize>)> = {
            let mut lens: Vec<usize> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(1..=3)).collect();
            lens.sort_unstable_by(|a, b| b.cmp(a));
            lens.iter()
                .map(|&k| {
                    let mut s: Vec<usize> = rand::seq::index::sample(&mut rng, 5, k).into_iter().map(|i| i + 1).collect();
                    let mut t: Vec<usize> = rand::seq::index::sample(&mut rng, 3, k).into_iter().map(|i| i + 1).collect();
                    s.sort_unstable();
                    t.sort_unstable();
                    (s, t)
                })
                .collect()
        };
        let b = Bitableau::from_rows(rows).map_err(e2s)?;
        if b.is_standard() {
            continue;
        }
        let x = FormalSum::single(b.clone());
        let y = straighten_in(&x, 3, 5).map_err(e2s)?;
        ensure(y.all_standard(), || format!("{b}: nonstandard output"))?;
        for _ in 0..5 {
            let m = intmat::random(&mut rng, 3, 5, -4, 4);
            ensure(x.evaluate(&m).map_err(e2s)? == y.evaluate(&m).map_err(e2s)?, || format!("{b}: values differ"))?;
        }
        done += 1;
    }
    Ok(())
}

fn cauchy_identity() -> Check {
    for a in 1..=3usize {
        for b in 1..=3usize {
            for n in 0..=4usize {
                let lhs: u64 = Partition::all(n).iter().map(|l| schur_dimension(l, a) * schur_dimension(l, b)).sum();
                let (top, k) = ((a * b + n - 1) as u64, n as u64);
                let rhs = (0..k).fold(1u64, |acc, i| acc * (top - i) / (i + 1));
                ensure(lhs == rhs, || format!("a={a} b={b} n={n}: {lhs} ≠ {rhs}"))?;
            }
        }
    }
    Ok(())
}

fn fitting_worked() -> Check {
    let r = xy_ring();
    let p = two_step_presentation();
    let f0 = fitting_ideal(&p, 0).map_err(e2s)?;
    let want = [r.parse("x^3").map_err(e2s)?, r.parse("x^2*y").map_err(e2s)?];
    ensure(ideal_equal(&r, &f0, &want).map_err(e2s)?, || "Fitt_0 ≠ (x^3, x^2y)".into())?;
    ensure(is_unit_ideal(&r, &fitting_ideal(&p, 2).map_err(e2s)?).map_err(e2s)?, || "Fitt_2 not the unit ideal".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    ensure(fitting_invariance_check(&p, 5, &mut rng).map_err(e2s)?, || "re-presentation changed a Fitting ideal".into())
}

fn multipliers() -> Check {
    for c in [two_step_complex(), hilbert_burch_352()] {
        let t = be_multipliers(&c, &rank_conditions(c.betti()).map_err(e2s)?).map_err(e2s)?;
        ensure(be_diagram_check(&c, &t), || format!("diagram check fails for {:?}", c.betti()))?;
    }
    Ok(())
}

fn tchernev_random() -> Check {
    let ring = xy_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..5 {
        let betti = random_betti(3, 2, &mut rng);
        let r = rank_conditions(&betti).map_err(e2s)?;
        let c = random_rank_conforming(&ring, &betti, &mut rng, &RandomComplexOptions::default()).map_err(e2s)?;
        let t = be_multipliers(&c, &r).map_err(e2s)?;
        for level in 1..=c.length() {
            for v in 1..=3 {
                if let Some(i) = random_instance(&betti, &r, v, level, &mut rng) {
                    let p = tchernev_identity(&c, &t, level, &i).map_err(e2s)?;
                    ensure(p.is_zero(), || format!("{betti:?} level {level}: {i:?} gives {p}"))?;
                }
            }
        }
    }
    Ok(())
}

fn counts() -> Check {
    for (dims, ranks) in [(vec![2, 2], vec![1]), (vec![1, 2, 1], vec![1, 1]), (vec![2, 2, 1], vec![1, 1])] {
        let f = RankedFormat::new(dims.clone(), ranks.clone()).map_err(e2s)?;
        for d in 0..=2 {
            let ours = enumerate_standard(&f, d, MaxRankPolicy::IncludeMaxRank, 100_000).map_err(e2s)?.len() as u64;
            let gb = hilbert_function_oracle(&f, d as u32, crate::polyring::GbField::Rationals).map_err(e2s)?;
            ensure(ours == gb, || format!("{dims:?} {ranks:?} degree {d}: {ours} vs {gb}"))?;
        }
    }
    Ok(())
}

fn classification() -> Check {
    let f = RankedFormat::new(vec![2, 5, 3], vec![2, 3]).map_err(e2s)?;
    for (m, want) in [
        ("<1,2|1,4>_1<2|3>_1<1,3|2,3>_2", false),
        ("<1,2|1,4>_1<2|3>_1<2,3|2,3>_2", false),
        ("<2|3>_1<2,3|2,3>_2", true),
    ] {
        let got = is_standard_monomial(&SymbolMonomial::parse(m).map_err(e2s)?, &f).map_err(e2s)?;
        ensure(got == want, || format!("{m} classified {got}"))?;
    }
    Ok(())
}

fn presentation_dims() -> Check {
    let b = engineered_h0_bifiltration();
    let pres = presentation_of_homology(&b, 0, b.grid(), 0).map_err(e2s)?;
    for u in b.grid_points() {
        let (c, h) = (pres.map.cokernel_dim_at(&u, 0).map_err(e2s)?, betti_numbers(&b, 0, u, 0).map_err(e2s)?);
        ensure(c == h, || format!("at {u:?}: cokernel {c}, homology {h}"))?;
    }
    for u in b.grid_points() {
        for v in b.grid_points().into_iter().filter(|v| u[0] <= v[0] && u[1] <= v[1]) {
            let r = rank_invariant(&b, 0, u, v, 0).map_err(e2s)?;
            ensure(r <= betti_numbers(&b, 0, u, 0).map_err(e2s)?, || format!("ρ({u:?},{v:?}) too large"))?;
        }
    }
    Ok(())
}

/// (module, name, check)
type PropertyCase = (&'static str, &'static str, fn() -> Check);

fn property_cases() -> Vec<PropertyCase> {
    vec![
        ("polyring", "groebner_of_minors", groebner_of_minors),
        ("polyring", "text_roundtrip", text_roundtrip),
        ("polymatrix", "cauchy_binet", cauchy_binet),
        ("tableaux", "straightening", straightening),
        ("tableaux", "cauchy_identity", cauchy_identity),
        ("determinantal", "fitting_worked", fitting_worked),
        ("complexes", "multipliers", multipliers),
        ("complexes", "tchernev_random", tchernev_random),
        ("varieties", "counts", counts),
        ("varieties", "classification", classification),
        ("persistence", "presentation_dims", presentation_dims),
    ]
}

/// Runs every case whose module matches `filter`. Transcript expectations
/// are read from `golden_dir/<name>.txt` when a directory is given.
pub fn run(filter: Option<&str>, golden_dir: Option<&Path>) -> Vec<CaseResult> {
    let keep = |m: &str| filter.is_none_or(|f| f == m);
    let mut out = vec![];
    for c in golden::cases().into_iter().filter(|c| keep(c.module)) {
        let expected = match golden_dir {
            Some(d) => std::fs::read_to_string(d.join(format!("{}.txt", c.name))).map_err(|e| format!("cannot read: {e}")),
            None => Ok(c.expected.to_string()),
        };
        let outcome = expected.and_then(|e| {
            let produced = (c.produce)().map_err(e2s)?;
            golden::compare(&e, &produced)
        });
        out.push(CaseResult { module: c.module, name: format!("golden/{}", c.name), outcome });
    }
    for (module, name, f) in property_cases().into_iter().filter(|c| keep(c.0)) {
        out.push(CaseResult { module, name: format!("property/{name}"), outcome: f() });
    }
    out
}
