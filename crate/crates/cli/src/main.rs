//! `persalg`: batch front end for persalg-core.
//!
//! Exit status: 0 on success, 1 on a domain error (message on stderr),
//! 2 on a usage error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use persalg_core::complexes::{
    be_diagram_check, be_multipliers, generic_complex_ring, rank_conditions, smallest_instance, tchernev_identity, ComplexJson,
    FreeComplex,
};
use persalg_core::determinantal::{
    determinantal_ideal, fitting_ideal, hilbert_function_groebner, hilbert_function_standard, is_unit_ideal, Presentation,
    RankLocus,
};
use persalg_core::persistence::{
    flag_bifiltration, presentation_of_homology, rank_invariant_table, Bifiltration, BifiltrationJson, FlagOptions, Snapshot,
};
use persalg_core::polymatrix::MatrixJson;
use persalg_core::polyring::{GbField, Style};
use persalg_core::tableaux::{plucker_relations, straighten_in, Bitableau, FormalSum};
use persalg_core::varieties::{
    enumerate_standard, hilbert_function_oracle, is_standard_monomial_with, tableau_of, MaxRankPolicy, RankedFormat,
    SymbolMonomial,
};
use persalg_core::{generic_matrix, selftest, CoeffDomain, PolyMatrix, Polynomial, RingCtx};

#[derive(Parser)]
#[command(name = "persalg", version, about = "Exact commutative algebra for multiparameter persistence")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Generic matrix filled column-major with consecutive variables.
    GenericMatrix(GenericArgs),
    /// Product of two matrices.
    Matmul {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// k-th exterior power (all k×k minors, colex subsets).
    Extpower {
        #[command(flatten)]
        matrix: MatrixSource,
        #[arg(long)]
        k: usize,
    },
    /// The k×k minors, or the ideal of (r+1)-minors of a generic matrix.
    Minors {
        #[command(flatten)]
        matrix: MatrixSource,
        #[arg(long)]
        k: usize,
    },
    /// Rank over the fraction field.
    Rank {
        #[command(flatten)]
        matrix: MatrixSource,
    },
    /// j-th Fitting ideal of the module presented by a matrix.
    Fitting {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        j: usize,
    },
    /// Buchsbaum–Eisenbud multipliers of a complex.
    BeMultipliers {
        #[arg(long)]
        complex: PathBuf,
        /// r_1..r_n or r_0..r_n; defaults to the forced ranks.
        #[arg(long, value_delimiter = ',')]
        ranks: Option<Vec<usize>>,
        /// Also run the diagram check and the smallest Tchernev identities.
        #[arg(long)]
        check: bool,
    },
    /// Ranks forced by Betti numbers.
    RankConditions {
        #[arg(long, value_delimiter = ',', required = true)]
        betti: Vec<usize>,
    },
    /// Generic complex ring: products D_k·D_{k+1} and the variable catalog.
    GenericComplex {
        #[arg(long, value_delimiter = ',', required = true)]
        betti: Vec<usize>,
        #[arg(long)]
        catalog: bool,
    },
    /// Standard monomials of a variety of complexes.
    StandardMonomials {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        ranks: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        degree: usize,
        /// Keep symbols of maximal rank (the full coordinate ring count).
        #[arg(long)]
        include_max_rank: bool,
        /// Classify one monomial instead of enumerating.
        #[arg(long)]
        classify: Option<String>,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Straighten a bitableau `(s | t)` (s: columns, t: rows).
    Straighten {
        tableau: Vec<String>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
    },
    /// Quadratic Plücker relations among maximal minors of an r×k matrix.
    Plucker {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
    },
    /// Hilbert function of a determinantal ring or a variety of complexes.
    Hilbert(HilbertArgs),
    /// Bifiltrations of weighted graph snapshots.
    #[command(subcommand)]
    Bifiltration(BifCommand),
    /// Recorded transcripts and built-in property checks.
    Selftest {
        /// Only cases of this module.
        #[arg(long)]
        filter: Option<String>,
        /// Read expected transcripts from `<dir>/<name>.txt`.
        #[arg(long)]
        golden_dir: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenericArgs {
    #[arg(long)]
    vars: usize,
    #[arg(long)]
    rows: usize,
    #[arg(long)]
    cols: usize,
    /// 1-based index of the first variable used.
    #[arg(long, default_value_t = 1)]
    start: usize,
    #[arg(long, default_value = "x")]
    prefix: String,
    /// 0 for ℤ, else a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
}

#[derive(Args)]
struct MatrixSource {
    /// Matrix JSON; without it a generic matrix is used.
    #[arg(long, conflicts_with_all = ["rows", "cols"])]
    matrix: Option<PathBuf>,
    #[arg(long, requires = "cols")]
    rows: Option<usize>,
    #[arg(long, requires = "rows")]
    cols: Option<usize>,
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long)]
    degree: u32,
    /// Determinantal locus: rows, cols and rank bound.
    #[arg(long, requires_all = ["cols", "rank"], conflicts_with = "dims")]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    rank: Option<usize>,
    /// Variety of complexes: dims and ranks.
    #[arg(long, value_delimiter = ',', requires = "ranks")]
    dims: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    ranks: Option<Vec<usize>>,
    /// Gröbner field: 0 for ℚ, else a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
}

#[derive(Subcommand)]
enum BifCommand {
    /// Flag bifiltration (time × threshold) from snapshot JSON.
    Build {
        #[arg(long)]
        snapshots: PathBuf,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        thresholds: Vec<f64>,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
    },
    /// Rank invariant table over a field.
    RankInvariant {
        #[arg(long)]
        input: PathBuf,
        /// Largest homological degree.
        #[arg(long, default_value_t = 1)]
        max_degree: usize,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
    /// Minimal presentation of H_i.
    Presentation {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        degree: usize,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Grid to present on; defaults to the bifiltration's grid.
        #[arg(long, value_delimiter = ',')]
        grid: Option<Vec<u32>>,
    },
}

/// Output buffered for one command; written at the end in one go.
struct Out {
    text: String,
}

impl Out {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
    fn json(&mut self, v: &Value) {
        self.line(serde_json::to_string_pretty(v).expect("serializable"));
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn read_matrix(path: &Path) -> anyhow::Result<PolyMatrix> {
    Ok(read_json::<MatrixJson>(path)?.build(None)?)
}

fn matrix_from(src: &MatrixSource) -> anyhow::Result<PolyMatrix> {
    match (&src.matrix, src.rows, src.cols) {
        (Some(p), _, _) => read_matrix(p),
        (None, Some(r), Some(c)) => {
            let ring = RingCtx::indexed("x", r * c, CoeffDomain::Integers)?;
            Ok(generic_matrix(&ring, 1, r, c)?)
        }
        _ => Err(UsageError("give --matrix or both --rows and --cols".into()).into()),
    }
}

/// Marks an error as a usage error (exit status 2).
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn emit_matrix(out: &mut Out, fmt: Format, m: &PolyMatrix) {
    match fmt {
        Format::Json => out.json(&serde_json::to_value(m.to_json()).expect("serializable")),
        _ => out.line(m.to_m2()),
    }
}

fn emit_polys(out: &mut Out, fmt: Format, ps: &[Polynomial]) {
    let texts: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    match fmt {
        Format::Json => out.json(&json!(texts)),
        _ => out.line(format!("ideal ({})", texts.join(", "))),
    }
}

fn grid_of(v: &[u32]) -> anyhow::Result<[u32; 2]> {
    match v {
        [a, b] => Ok([*a, *b]),
        _ => Err(UsageError(format!("a grid has two coordinates, got {}", v.len())).into()),
    }
}

fn load_bifiltration(path: &Path) -> anyhow::Result<Bifiltration> {
    Ok(read_json::<BifiltrationJson>(path)?.build()?)
}

fn be_ranks(c: &FreeComplex, given: Option<&[usize]>) -> anyhow::Result<(Vec<usize>, Option<String>)> {
    let Some(given) = given else { return Ok((rank_conditions(c.betti())?, None)) };
    match be_multipliers(c, given) {
        Ok(_) => Ok((given.to_vec(), None)),
        Err(e) => {
            let rev: Vec<usize> = given.iter().rev().copied().collect();
            if be_multipliers(c, &rev).is_ok() {
                let note = format!("note: ranks {given:?} do not fit; using them in reverse order {rev:?}");
                Ok((rev, Some(note)))
            } else {
                Err(e.into())
            }
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<(Out, bool)> {
    let fmt = cli.format;
    let mut out = Out { text: String::new() };
    let mut ok = true;
    if fmt == Format::Csv && !matches!(cli.command, Command::Bifiltration(BifCommand::RankInvariant { .. })) {
        return Err(UsageError("csv output is only available for `bifiltration rank-invariant`".into()).into());
    }
    match cli.command {
        Command::GenericMatrix(a) => {
            let domain = if a.characteristic == 0 { CoeffDomain::Integers } else { CoeffDomain::PrimeField(a.characteristic) };
            let ring = RingCtx::indexed(&a.prefix, a.vars, domain)?;
            emit_matrix(&mut out, fmt, &generic_matrix(&ring, a.start, a.rows, a.cols)?);
        }
        Command::Matmul { left, right } => {
            let a = read_matrix(&left)?;
            let b = read_json::<MatrixJson>(&right)?.build(Some(a.ring()))?;
            emit_matrix(&mut out, fmt, &a.matmul(&b)?);
        }
        Command::Extpower { matrix, k } => emit_matrix(&mut out, fmt, &matrix_from(&matrix)?.exterior_power(k)?),
        Command::Minors { matrix, k } => emit_polys(&mut out, fmt, &matrix_from(&matrix)?.minors(k)?),
        Command::Rank { matrix } => {
            let r = matrix_from(&matrix)?.rank();
            match fmt {
                Format::Json => out.json(&json!({ "rank": r })),
                _ => out.line(format!("rank = {r}")),
            }
        }
        Command::Fitting { matrix, j } => {
            let p = Presentation::new(read_matrix(&matrix)?);
            let gens = fitting_ideal(&p, j)?;
            let unit = is_unit_ideal(p.ring(), &gens)?;
            let nonzero: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
            match fmt {
                Format::Json => out.json(&json!({
                    "j": j,
                    "unit": unit,
                    "generators": nonzero.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                })),
                _ if unit => out.line("unit ideal"),
                _ if nonzero.is_empty() => out.line("zero ideal"),
                _ => emit_polys(&mut out, fmt, &nonzero),
            }
        }
        Command::BeMultipliers { complex, ranks, check } => {
            let c = read_json::<ComplexJson>(&complex)?.build()?;
            let (r, note) = be_ranks(&c, ranks.as_deref())?;
            if let Some(n) = note {
                eprintln!("{n}");
            }
            let t = be_multipliers(&c, &r)?;
            let mut checks = json!(null);
            if check {
                let diagram = be_diagram_check(&c, &t);
                let mut identities = vec![];
                for level in 1..=c.length() {
                    for v in 1..=3 {
                        if let Some(i) = smallest_instance(c.betti(), t.ranks().as_slice(), v, level) {
                            let zero = tchernev_identity(&c, &t, level, &i)?.is_zero();
                            identities.push(json!({ "variant": v, "level": level, "zero": zero }));
                        }
                    }
                }
                ok = diagram && identities.iter().all(|i| i["zero"] == json!(true));
                checks = json!({ "diagram": diagram, "tchernev": identities });
            }
            match fmt {
                Format::Json => {
                    let mut v = t.to_json();
                    if check {
                        v["checks"] = checks;
                    }
                    out.json(&v);
                }
                _ => {
                    out.text.push_str(&t.render(Style::Star));
                    if check {
                        out.line(format!("diagram check: {}", if checks["diagram"] == json!(true) { "pass" } else { "FAIL" }));
                        for i in checks["tchernev"].as_array().into_iter().flatten() {
                            let verdict = if i["zero"] == json!(true) { "zero" } else { "NONZERO" };
                            out.line(format!("tchernev variant {} level {}: {verdict}", i["variant"], i["level"]));
                        }
                    }
                }
            }
        }
        Command::RankConditions { betti } => {
            let r = rank_conditions(&betti)?;
            match fmt {
                Format::Json => out.json(&json!({ "betti": betti, "ranks": r })),
                _ => out.line(format!("r = {}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))),
            }
        }
        Command::GenericComplex { betti, catalog } => {
            let g = generic_complex_ring(&betti)?;
            match fmt {
                Format::Json => {
                    let mut v = json!({
                        "num_vars": g.ring.num_vars(),
                        "products": g.products.iter().map(|p| serde_json::to_value(p.to_json()).expect("serializable")).collect::<Vec<_>>(),
                    });
                    if catalog {
                        v["catalog"] = json!(g
                            .catalog()
                            .iter()
                            .map(|e| json!({ "name": e.name, "level": e.level, "row": e.row, "col": e.col }))
                            .collect::<Vec<_>>());
                    }
                    out.json(&v);
                }
                _ => {
                    for (k, p) in g.products.iter().enumerate() {
                        out.line(format!("D{}*D{} =", k + 1, k + 2));
                        out.line(p.to_m2());
                    }
                    if catalog {
                        for e in g.catalog() {
                            out.line(format!("{} = D{}[{},{}]", e.name, e.level, e.row, e.col));
                        }
                    }
                }
            }
        }
        Command::StandardMonomials { dims, ranks, degree, include_max_rank, classify, cap } => {
            let f = RankedFormat::new(dims, ranks)?;
            let policy = if include_max_rank { MaxRankPolicy::IncludeMaxRank } else { MaxRankPolicy::ExcludeMaxRank };
            if let Some(text) = classify {
                let m = SymbolMonomial::parse(&text)?;
                let t = tableau_of(&m, &f)?;
                let std = is_standard_monomial_with(&m, &f, policy)?;
                match fmt {
                    Format::Json => out.json(&json!({ "monomial": m.to_string(), "multitableau": t.to_string(), "standard": std })),
                    _ => out.line(format!("{m} ↦ {t}: {}", if std { "standard" } else { "nonstandard" })),
                }
            } else {
                let ms = enumerate_standard(&f, degree, policy, cap)?;
                match fmt {
                    Format::Json => out.json(&json!({
                        "degree": degree,
                        "count": ms.len(),
                        "monomials": ms.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    })),
                    _ => {
                        for m in &ms {
                            out.line(m.to_string());
                        }
                    }
                }
            }
        }
        Command::Straighten { tableau, rows, cols } => {
            let mut sum = FormalSum::new();
            for t in &tableau {
                sum.add(Bitableau::parse(t)?, 1.into());
            }
            let m = rows.unwrap_or_else(|| sum.iter().map(|(b, _)| b.right().max_entry()).max().unwrap_or(1));
            let n = cols.unwrap_or_else(|| sum.iter().map(|(b, _)| b.left().max_entry()).max().unwrap_or(1));
            let s = straighten_in(&sum, m, n)?;
            match fmt {
                Format::Json => out.json(&json!(s.iter().map(|(b, c)| json!({ "coefficient": c.to_string(), "bitableau": b.to_string() })).collect::<Vec<_>>())),
                _ => out.line(s.to_string()),
            }
        }
        Command::Plucker { r, k } => {
            let (_, rels) = plucker_relations(r, k)?;
            match fmt {
                Format::Json => out.json(&json!(rels.iter().map(|p| p.to_string()).collect::<Vec<_>>())),
                _ => {
                    for p in &rels {
                        out.line(p.to_string());
                    }
                }
            }
        }
        Command::Hilbert(h) => {
            let field = if h.characteristic == 0 { GbField::Rationals } else { GbField::Prime(h.characteristic) };
            let (label, value, check) = match (h.rows, h.cols, h.rank, &h.dims, &h.ranks) {
                (Some(m), Some(n), Some(r), None, _) => {
                    let l = RankLocus::new(m, n, r)?;
                    let gb = hilbert_function_groebner(&l, h.degree, field)?;
                    let st = hilbert_function_standard(&l, h.degree as usize);
                    let (_, gens) = determinantal_ideal(&l)?;
                    (format!("{m}x{n} rank ≤ {r} ({} generators)", gens.len()), gb, Some(st))
                }
                (None, None, None, Some(d), Some(r)) => {
                    let f = RankedFormat::new(d.clone(), r.clone())?;
                    let gb = hilbert_function_oracle(&f, h.degree, field)?;
                    let st = enumerate_standard(&f, h.degree as usize, MaxRankPolicy::IncludeMaxRank, 10_000_000)?.len() as u64;
                    (format!("dims {d:?}, ranks {r:?}"), gb, Some(st))
                }
                _ => return Err(UsageError("give --rows/--cols/--rank or --dims/--ranks".into()).into()),
            };
            if check.is_some_and(|s| s != value) {
                ok = false;
            }
            match fmt {
                Format::Json => out.json(&json!({ "degree": h.degree, "groebner": value, "standard": check })),
                _ => {
                    out.line(format!("H({}) = {value}  [{label}]", h.degree));
                    if let Some(s) = check.filter(|&s| s != value) {
                        out.line(format!("standard monomial count {s} disagrees"));
                    }
                }
            }
        }
        Command::Bifiltration(b) => run_bifiltration(b, fmt, &mut out)?,
        Command::Selftest { filter, golden_dir } => {
            if let Some(f) = &filter {
                if !selftest::MODULES.contains(&f.as_str()) {
                    return Err(UsageError(format!("unknown module {f:?}; one of {}", selftest::MODULES.join(", "))).into());
                }
            }
            let results = selftest::run(filter.as_deref(), golden_dir.as_deref());
            let failed = results.iter().filter(|r| r.outcome.is_err()).count();
            ok = failed == 0;
            match fmt {
                Format::Json => out.json(&json!({
                    "passed": results.len() - failed,
                    "failed": failed,
                    "cases": results.iter().map(|r| json!({
                        "module": r.module,
                        "name": r.name,
                        "ok": r.outcome.is_ok(),
                        "error": r.outcome.as_ref().err(),
                    })).collect::<Vec<_>>(),
                })),
                _ => {
                    for r in &results {
                        match &r.outcome {
                            Ok(()) => out.line(format!("ok   {}/{}", r.module, r.name)),
                            Err(e) => out.line(format!("FAIL {}/{}: {e}", r.module, r.name)),
                        }
                    }
                    out.line(format!("{} passed, {failed} failed", results.len() - failed));
                }
            }
        }
    }
    Ok((out, ok))
}

fn run_bifiltration(cmd: BifCommand, fmt: Format, out: &mut Out) -> anyhow::Result<()> {
    match cmd {
        BifCommand::Build { snapshots, thresholds, max_dim } => {
            let snaps: Vec<Snapshot> = read_json(&snapshots)?;
            let (b, report) = flag_bifiltration(&snaps, &FlagOptions { thresholds, max_dim })?;
            let mut notes = String::new();
            for (what, list) in [
                ("weight dropped, running maximum used", &report.running_max),
                ("entered again at a better level, first grade kept", &report.truncated),
                ("never reaches a threshold", &report.never_entered),
            ] {
                for (a, c) in list {
                    let _ = writeln!(notes, "note: edge {a}-{c}: {what}");
                }
            }
            if report.ignored_node_weights > 0 {
                let _ = writeln!(notes, "note: {} node weights ignored", report.ignored_node_weights);
            }
            eprint!("{notes}");
            match fmt {
                Format::Json => out.json(&json!({ "bifiltration": b.to_json(), "report": report })),
                _ => out.json(&serde_json::to_value(b.to_json()).expect("serializable")),
            }
        }
        BifCommand::RankInvariant { input, max_degree, characteristic } => {
            let b = load_bifiltration(&input)?;
            let t = rank_invariant_table(&b, max_degree, characteristic)?;
            match fmt {
                Format::Json => out.json(&t.to_json()),
                _ => out.text.push_str(&t.to_csv()),
            }
        }
        BifCommand::Presentation { input, degree, characteristic, grid } => {
            let b = load_bifiltration(&input)?;
            let grid = match grid {
                Some(g) => grid_of(&g)?,
                None => b.grid(),
            };
            let p = presentation_of_homology(&b, degree, grid, characteristic)?;
            match fmt {
                Format::Json => out.json(&p.to_json()),
                _ => {
                    let show = |gs: Vec<Vec<u32>>| gs.iter().map(|g| format!("({},{})", g[0], g[1])).collect::<Vec<_>>().join(" ");
                    out.line(format!("H_{degree} ≅ coker({} → {})", p.map.source(), p.map.target()));
                    out.line(format!("generators: {}", show(p.generators())));
                    out.line(format!("relations: {}", show(p.relations())));
                    out.line(p.map.matrix().to_m2());
                }
            }
        }
    }
    Ok(())
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("PERSALG_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| UsageError(format!("PERSALG_THREADS must be a positive integer, got {v:?}")))?;
        if n == 0 {
            bail!(UsageError("PERSALG_THREADS must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let res = configure_threads().and_then(|()| run(cli));
    match res {
        Ok((out, ok)) => {
            print!("{}", out.text);
            if ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if e.downcast_ref::<UsageError>().is_some() { 2 } else { 1 })
        }
    }
}
