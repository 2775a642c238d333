//! Recorded Macaulay2 session outputs and the computations that must
//! reproduce them.
//!
//! Comparison is modulo layout: the `oN =` prefix, `{d}` degree tags,
//! `-----` continuation rules and all whitespace are dropped, and two-line
//! subscript displays (`x x` over `2 3`) are folded back into `x_2x_3`.

use crate::complexes::generic_complex_ring;
use crate::polymatrix::generic_matrix;
use crate::{CoeffDomain, Error, PolyMatrix, Result, Ring, RingCtx, RingExt};

pub struct GoldenCase {
    pub name: &'static str,
    /// Module the case exercises, for `--filter`.
    pub module: &'static str,
    pub expected: &'static str,
    pub produce: fn() -> Result<String>,
}

macro_rules! golden {
    ($name:literal) => {
        include_str!(concat!("../golden/", $name, ".txt"))
    };
}

fn xy_ring_15_10() -> Result<Ring> {
    let names = (1..=15).map(|i| format!("x_{i}")).chain((1..=10).map(|i| format!("y_{i}"))).collect();
    RingCtx::with_names(names, CoeffDomain::Integers)
}

fn a_and_b() -> Result<(PolyMatrix, PolyMatrix)> {
    let r = xy_ring_15_10()?;
    Ok((generic_matrix(&r, 1, 3, 5)?, generic_matrix(&r, 16, 5, 2)?))
}

fn generic_2x4() -> Result<PolyMatrix> {
    let r = RingCtx::indexed("x", 8, CoeffDomain::Integers)?;
    generic_matrix(&r, 1, 2, 4)
}

fn row_of(m: &PolyMatrix, entries: Vec<crate::Polynomial>) -> Result<PolyMatrix> {
    PolyMatrix::from_rows(m.ring(), vec![entries])
}

pub fn cases() -> Vec<GoldenCase> {
    vec![
        GoldenCase {
            name: "generic_2x4",
            module: "polymatrix",
            expected: golden!("generic_2x4"),
            produce: || Ok(generic_2x4()?.to_m2()),
        },
        GoldenCase {
            name: "product_a",
            module: "polymatrix",
            expected: golden!("product_a"),
            produce: || Ok(a_and_b()?.0.to_m2()),
        },
        GoldenCase {
            name: "product_b",
            module: "polymatrix",
            expected: golden!("product_b"),
            produce: || Ok(a_and_b()?.1.to_m2()),
        },
        GoldenCase {
            name: "product_ab",
            module: "polymatrix",
            expected: golden!("product_ab"),
            produce: || {
                let (a, b) = a_and_b()?;
                Ok(a.matmul(&b)?.to_m2())
            },
        },
        GoldenCase {
            name: "wedge2_a_transpose",
            module: "polymatrix",
            expected: golden!("wedge2_a_transpose"),
            produce: || Ok(a_and_b()?.0.exterior_power(2)?.transpose().to_m2()),
        },
        GoldenCase {
            name: "wedge3_a",
            module: "polymatrix",
            expected: golden!("wedge3_a"),
            produce: || Ok(a_and_b()?.0.exterior_power(3)?.to_m2()),
        },
        GoldenCase {
            name: "wedge2_b",
            module: "polymatrix",
            expected: golden!("wedge2_b"),
            produce: || Ok(a_and_b()?.1.exterior_power(2)?.to_m2()),
        },
        GoldenCase {
            name: "minors2_row",
            module: "determinantal",
            expected: golden!("minors2_row"),
            produce: || {
                let m = generic_2x4()?;
                Ok(row_of(&m, m.minors(2)?)?.to_m2())
            },
        },
        GoldenCase {
            name: "minors2_ideal",
            module: "determinantal",
            expected: golden!("minors2_ideal"),
            produce: || {
                let gens: Vec<String> =
                    generic_2x4()?.minors(2)?.iter().map(|p| p.to_text(crate::polyring::Style::Juxtapose)).collect();
                Ok(format!("ideal ({})", gens.join(", ")))
            },
        },
        GoldenCase {
            name: "generic_complex_d1d2",
            module: "complexes",
            expected: golden!("generic_complex_d1d2"),
            produce: || Ok(generic_complex_ring(&[1, 6, 8, 4, 1])?.products[0].to_m2()),
        },
        GoldenCase {
            name: "generic_complex_d3d4",
            module: "complexes",
            expected: golden!("generic_complex_d3d4"),
            produce: || Ok(generic_complex_ring(&[1, 6, 8, 4, 1])?.products[2].to_m2()),
        },
    ]
}

/// The resolution differentials d₂, d₃, d₄ of the 2×2 minors of a generic
/// 2×4 matrix, as recorded (used as input data, not produced).
pub fn recorded_resolution() -> Result<Vec<PolyMatrix>> {
    let r = RingCtx::indexed("x", 8, CoeffDomain::Integers)?;
    let d1 = {
        let m = generic_2x4()?;
        row_of(&m, m.minors(2)?)?
    };
    let mut out = vec![d1];
    for t in [golden!("resolution_d2"), golden!("resolution_d3"), golden!("resolution_d4")] {
        out.push(parse_m2_matrix(&r, t)?);
    }
    Ok(out)
}

fn strip_prefix(line: &str) -> &str {
    let t = line.trim_start();
    if let Some(rest) = t.strip_prefix('o') {
        let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
        if digits > 0 {
            if let Some(after) = rest[digits..].trim_start().strip_prefix('=') {
                return after;
            }
        }
    }
    line
}

fn strip_tags(line: &str) -> String {
    let mut out = String::new();
    let mut depth = 0;
    for c in line.chars() {
        match c {
            '{' => depth += 1,
            '}' if depth > 0 => depth -= 1,
            _ if depth == 0 => out.push(c),
            _ => {}
        }
    }
    out
}

/// Folds a line of subscripts into the line above: each `x` followed by a
/// blank picks up the digits printed just below-right of it.
fn fold_subscripts(top: &str, below: &str) -> String {
    let t: Vec<char> = top.chars().collect();
    let b: Vec<char> = below.chars().collect();
    let mut out = String::new();
    for (i, &c) in t.iter().enumerate() {
        out.push(c);
        if c.is_ascii_alphabetic() && t.get(i + 1).is_none_or(|n| *n == ' ') {
            let digits: String = b.iter().skip(i + 1).take_while(|d| d.is_ascii_digit()).collect();
            if !digits.is_empty() {
                out.push('_');
                out.push_str(&digits);
            }
        }
    }
    out
}

fn is_subscript_line(l: &str) -> bool {
    !l.trim().is_empty() && l.chars().all(|c| c.is_ascii_digit() || c.is_whitespace())
}

pub fn normalize(text: &str) -> String {
    let text = text.replace('\t', "        ");
    let raw: Vec<&str> = text.lines().collect();
    let mut lines: Vec<String> = vec![];
    for (k, l) in raw.iter().enumerate() {
        if is_subscript_line(l) {
            continue;
        }
        let l = if k == 0 { strip_prefix(l).to_string() } else { l.to_string() };
        let l = match raw.get(k + 1) {
            Some(n) if is_subscript_line(n) => {
                // keep column alignment for the fold
                let pad = raw[k].len() - l.len();
                fold_subscripts(&l, &n[pad.min(n.len())..])
            }
            _ => l,
        };
        if !l.trim().is_empty() && l.trim().chars().all(|c| c == '-') {
            continue;
        }
        lines.push(strip_tags(&l));
    }
    lines.concat().chars().filter(|c| !c.is_whitespace()).collect()
}

/// One matrix row per line, `| a b c |`, optional `oN =` and `{d}` tags.
pub fn parse_m2_matrix(ring: &Ring, text: &str) -> Result<PolyMatrix> {
    let mut rows = vec![];
    for (k, l) in text.lines().enumerate() {
        let l = if k == 0 { strip_prefix(l).to_string() } else { l.to_string() };
        let l = strip_tags(&l);
        let l = l.trim();
        if l.is_empty() {
            continue;
        }
        let inner = l
            .strip_prefix('|')
            .and_then(|s| s.strip_suffix('|'))
            .ok_or_else(|| Error::Parse(format!("not a matrix row: {l:?}")))?;
        rows.push(inner.split_whitespace().map(|e| ring.parse(e)).collect::<Result<Vec<_>>>()?);
    }
    PolyMatrix::from_rows(ring, rows)
}

/// Ok, or a description of the first difference.
pub fn compare(expected: &str, produced: &str) -> std::result::Result<(), String> {
    let (e, p) = (normalize(expected), normalize(produced));
    if e == p {
        return Ok(());
    }
    let at = e.chars().zip(p.chars()).take_while(|(a, b)| a == b).count();
    let ctx = |s: &str| s.chars().skip(at.saturating_sub(10)).take(30).collect::<String>();
    Err(format!("differs at character {at}: expected …{}…, got …{}…", ctx(&e), ctx(&p)))
}
