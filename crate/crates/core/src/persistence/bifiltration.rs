//! One-critical bifiltrations of simplicial complexes, and the flag
//! bifiltration of a time series of weighted graphs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A simplex on sorted vertex indices, entering at `grade`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Simplex {
    pub vertices: Vec<usize>,
    pub grade: [u32; 2],
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// A finite simplicial complex filtered over the grid {0..g₁−1}×{0..g₂−1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bifiltration {
    labels: Vec<String>,
    simplices: Vec<Simplex>,
    grid: [u32; 2],
    index: BTreeMap<Vec<usize>, usize>,
}

fn le2(a: [u32; 2], b: [u32; 2]) -> bool {
    a[0] <= b[0] && a[1] <= b[1]
}

impl Bifiltration {
    /// Validates vertex order, grid bounds, closure under faces and
    /// monotonicity of entry grades. Simplices are stored by dimension,
    /// then lexicographically.
    pub fn new(labels: Vec<String>, mut simplices: Vec<Simplex>, grid: [u32; 2]) -> Result<Self> {
        simplices.sort_by(|a, b| a.vertices.len().cmp(&b.vertices.len()).then_with(|| a.vertices.cmp(&b.vertices)));
        let mut index = BTreeMap::new();
        for (k, s) in simplices.iter().enumerate() {
            if s.vertices.is_empty() || s.vertices.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Invalid(format!("simplex {:?} is not a strictly increasing vertex list", s.vertices)));
            }
            if s.vertices.iter().any(|&v| v >= labels.len()) {
                return Err(Error::OutOfRange(format!("simplex {:?} uses an unlabelled vertex", s.vertices)));
            }
            if s.grade[0] >= grid[0] || s.grade[1] >= grid[1] {
                return Err(Error::GridTooSmall(format!("{:?} enters at {:?}, outside {grid:?}", s.vertices, s.grade)));
            }
            if index.insert(s.vertices.clone(), k).is_some() {
                return Err(Error::Invalid(format!("simplex {:?} listed twice", s.vertices)));
            }
        }
        for s in &simplices {
            if s.vertices.len() < 2 {
                continue;
            }
            for skip in 0..s.vertices.len() {
                let mut face = s.vertices.clone();
                face.remove(skip);
                match index.get(&face) {
                    None => return Err(Error::Invalid(format!("face {face:?} of {:?} is missing", s.vertices))),
                    Some(&f) if !le2(simplices[f].grade, s.grade) => {
                        return Err(Error::Invalid(format!(
                            "face {face:?} enters at {:?}, after {:?} at {:?}",
                            simplices[f].grade, s.vertices, s.grade
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(Bifiltration { labels, simplices, grid, index })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }
    pub fn grid(&self) -> [u32; 2] {
        self.grid
    }
    pub fn max_dim(&self) -> Option<usize> {
        self.simplices.last().map(Simplex::dim)
    }
    pub fn position(&self, vertices: &[usize]) -> Option<usize> {
        self.index.get(vertices).copied()
    }
    /// Simplices of dimension `d`, in storage order.
    pub fn of_dim(&self, d: usize) -> impl Iterator<Item = (usize, &Simplex)> {
        self.simplices.iter().enumerate().filter(move |(_, s)| s.vertices.len() == d + 1)
    }
    /// Number of simplices in X_u.
    pub fn size_at(&self, u: [u32; 2]) -> usize {
        self.simplices.iter().filter(|s| le2(s.grade, u)).count()
    }
    /// All grid points, row-major in the first coordinate.
    pub fn grid_points(&self) -> Vec<[u32; 2]> {
        (0..self.grid[0]).flat_map(|a| (0..self.grid[1]).map(move |b| [a, b])).collect()
    }

    pub fn to_json(&self) -> BifiltrationJson {
        BifiltrationJson { grid: self.grid, labels: Some(self.labels.clone()), simplices: self.simplices.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BifiltrationJson {
    pub grid: [u32; 2],
    /// Defaults to "0", "1", … up to the largest vertex index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub simplices: Vec<Simplex>,
}

impl BifiltrationJson {
    pub fn build(&self) -> Result<Bifiltration> {
        let labels = match &self.labels {
            Some(l) => l.clone(),
            None => {
                let n = self.simplices.iter().flat_map(|s| s.vertices.iter()).max().map_or(0, |m| m + 1);
                (0..n).map(|i| i.to_string()).collect()
            }
        };
        Bifiltration::new(labels, self.simplices.clone(), self.grid)
    }
}

/// A vertex identifier in snapshot JSON: a number or a string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexLabel {
    Int(i64),
    Str(String),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Int(i) => write!(f, "{i}"),
            VertexLabel::Str(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SnapshotVertex {
    Weighted { id: VertexLabel, weight: f64 },
    Plain(VertexLabel),
}

impl SnapshotVertex {
    pub fn id(&self) -> &VertexLabel {
        match self {
            SnapshotVertex::Weighted { id, .. } | SnapshotVertex::Plain(id) => id,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SnapshotEdge {
    pub a: VertexLabel,
    pub b: VertexLabel,
    pub weight: f64,
}

/// One time slice of a weighted interaction graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub time: f64,
    #[serde(default)]
    pub vertices: Vec<SnapshotVertex>,
    #[serde(default)]
    pub edges: Vec<SnapshotEdge>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlagOptions {
    /// Coupling thresholds; sorted strongest first, so level 0 admits only
    /// the strongest edges.
    pub thresholds: Vec<f64>,
    /// Largest clique dimension filled in.
    pub max_dim: usize,
}

impl FlagOptions {
    pub fn new(thresholds: Vec<f64>) -> Self {
        FlagOptions { thresholds, max_dim: 3 }
    }
}

/// Diagnostics from [`flag_bifiltration`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    /// Edges whose weight dropped over time; the running maximum was used.
    pub running_max: Vec<(String, String)>,
    /// Edges whose level kept improving after they first entered; only the
    /// first entry grade is kept, so the filtration stays one-critical.
    pub truncated: Vec<(String, String)>,
    /// Edges that never reach the weakest threshold.
    pub never_entered: Vec<(String, String)>,
    /// Node weights are recorded in the input but play no role in homology.
    pub ignored_node_weights: usize,
}

impl BuildReport {
    pub fn is_clean(&self) -> bool {
        self.running_max.is_empty() && self.truncated.is_empty()
    }
}

/// Flag bifiltration: grade (t, s) with t the snapshot index and s the
/// threshold level. A vertex enters at (first appearance, 0); an edge at the
/// first snapshot where its running-maximum weight meets some threshold, at
/// the level met there; a clique at the join of its edges.
pub fn flag_bifiltration(snapshots: &[Snapshot], opts: &FlagOptions) -> Result<(Bifiltration, BuildReport)> {
    let mut thresholds = opts.thresholds.clone();
    if thresholds.is_empty() || thresholds.iter().any(|t| !t.is_finite()) {
        return Err(Error::Invalid("thresholds must be a nonempty list of finite numbers".into()));
    }
    thresholds.sort_by(|a, b| b.total_cmp(a));
    thresholds.dedup();
    let mut snaps: Vec<&Snapshot> = snapshots.iter().collect();
    snaps.sort_by(|a, b| a.time.total_cmp(&b.time));
    if snaps.windows(2).any(|w| w[0].time == w[1].time) {
        return Err(Error::Invalid("two snapshots share a time stamp".into()));
    }
    let level = |w: f64| thresholds.iter().position(|&t| w >= t);

    let mut report = BuildReport::default();
    let mut ids: BTreeMap<VertexLabel, usize> = BTreeMap::new();
    let mut labels = vec![];
    let mut simplices = vec![];
    let mut touch = |v: &VertexLabel, t: u32, labels: &mut Vec<String>, simplices: &mut Vec<Simplex>| -> usize {
        *ids.entry(v.clone()).or_insert_with(|| {
            labels.push(v.to_string());
            simplices.push(Simplex { vertices: vec![labels.len() - 1], grade: [t, 0] });
            labels.len() - 1
        })
    };
    // per edge: weight seen at each snapshot
    let mut series: BTreeMap<(usize, usize), Vec<Option<f64>>> = BTreeMap::new();
    for (t, s) in snaps.iter().enumerate() {
        let t32 = t as u32;
        for v in &s.vertices {
            touch(v.id(), t32, &mut labels, &mut simplices);
            if matches!(v, SnapshotVertex::Weighted { .. }) {
                report.ignored_node_weights += 1;
            }
        }
        for e in &s.edges {
            if !e.weight.is_finite() {
                return Err(Error::Invalid(format!("edge {}–{} has weight {}", e.a, e.b, e.weight)));
            }
            let a = touch(&e.a, t32, &mut labels, &mut simplices);
            let b = touch(&e.b, t32, &mut labels, &mut simplices);
            if a == b {
                return Err(Error::Invalid(format!("loop at vertex {}", e.a)));
            }
            let slot = series.entry((a.min(b), a.max(b))).or_insert_with(|| vec![None; snaps.len()]);
            slot[t] = Some(slot[t].map_or(e.weight, |w: f64| w.max(e.weight)));
        }
    }

    let name = |(a, b): (usize, usize), labels: &[String]| (labels[a].clone(), labels[b].clone());
    let mut edge_grade: BTreeMap<(usize, usize), [u32; 2]> = BTreeMap::new();
    for (&e, ws) in &series {
        let mut best = f64::NEG_INFINITY;
        let mut dropped = false;
        let mut levels = vec![];
        for w in ws {
            match w {
                Some(w) if *w >= best => best = *w,
                _ if best > f64::NEG_INFINITY => dropped = true,
                _ => {}
            }
            levels.push(if best > f64::NEG_INFINITY { level(best) } else { None });
        }
        if dropped {
            report.running_max.push(name(e, &labels));
        }
        match levels.iter().position(Option::is_some) {
            None => report.never_entered.push(name(e, &labels)),
            Some(t) => {
                let s = levels[t].unwrap();
                if levels[t..].iter().any(|l| l.is_some_and(|l| l < s)) {
                    report.truncated.push(name(e, &labels));
                }
                edge_grade.insert(e, [t as u32, s as u32]);
                simplices.push(Simplex { vertices: vec![e.0, e.1], grade: [t as u32, s as u32] });
            }
        }
    }

    // cliques, grown one vertex at a time through common higher neighbours
    let mut nbrs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); labels.len()];
    for &(a, b) in edge_grade.keys() {
        nbrs[a].insert(b);
    }
    let mut layer: Vec<(Vec<usize>, [u32; 2])> = edge_grade.iter().map(|(&(a, b), &g)| (vec![a, b], g)).collect();
    for _ in 2..=opts.max_dim {
        let mut next = vec![];
        for (c, g) in &layer {
            let last = *c.last().unwrap();
            for &w in nbrs[last].iter() {
                if c.iter().all(|&v| nbrs[v].contains(&w)) {
                    let mut grade = *g;
                    for &v in c {
                        let h = edge_grade[&(v, w)];
                        grade = [grade[0].max(h[0]), grade[1].max(h[1])];
                    }
                    let mut d = c.clone();
                    d.push(w);
                    next.push((d, grade));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        simplices.extend(next.iter().map(|(v, g)| Simplex { vertices: v.clone(), grade: *g }));
        layer = next;
    }
    let grid = [snaps.len().max(1) as u32, thresholds.len() as u32];
    Ok((Bifiltration::new(labels, simplices, grid)?, report))
}
