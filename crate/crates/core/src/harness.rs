//! Classification predicates for the studied graph families and the sweeps
//! that compare them with computed verdicts.
//!
//! Every predicate reads the *effective* capacity (see
//! [`effective_capacity`]) rather than the raw one. Lowering `c_i` to its
//! singleton rank leaves `B(G, c)` unchanged, so two capacity vectors with
//! the same effective form describe the same polytope and must get the same
//! prediction.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gorenstein::{gorenstein_report_with, verify_h_description_for, HDescription, ReportOptions, DEFAULT_MAX_BOX};
use crate::graph::{hypercube, petersen, FamilySpec, Graph};
use crate::polymatroid::{bases_with, effective_capacity, CapacityVector};
use crate::rank::rank_table_with_cap;

/// Rows of a capacity grid are sampled instead of enumerated once the full
/// grid would exceed this many vectors.
pub const EXHAUSTIVE_LIMIT: u128 = 100_000;
pub const DEFAULT_SAMPLE: usize = 1_000;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PredicateId {
    #[serde(rename = "complete_4_6")]
    Complete,
    #[serde(rename = "complete_bipartite_5_3")]
    CompleteBipartite,
    #[serde(rename = "path_6_5")]
    Path,
    #[serde(rename = "cycle_4_5")]
    Cycle,
    #[serde(rename = "regular_bipartite_7_2")]
    RegularBipartite,
    #[serde(rename = "regular_c2_7_3")]
    RegularDoubled,
    #[serde(rename = "whiskered_8_1")]
    Whiskered,
    #[serde(rename = "cmcw_9_2")]
    CameronWalker,
}

impl PredicateId {
    pub const ALL: [PredicateId; 8] = [
        PredicateId::Complete,
        PredicateId::CompleteBipartite,
        PredicateId::Path,
        PredicateId::Cycle,
        PredicateId::RegularBipartite,
        PredicateId::RegularDoubled,
        PredicateId::Whiskered,
        PredicateId::CameronWalker,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PredicateId::Complete => "complete_4_6",
            PredicateId::CompleteBipartite => "complete_bipartite_5_3",
            PredicateId::Path => "path_6_5",
            PredicateId::Cycle => "cycle_4_5",
            PredicateId::RegularBipartite => "regular_bipartite_7_2",
            PredicateId::RegularDoubled => "regular_c2_7_3",
            PredicateId::Whiskered => "whiskered_8_1",
            PredicateId::CameronWalker => "cmcw_9_2",
        }
    }
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PredicateId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PredicateId::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown predicate `{s}`")))
    }
}

/// What `conv(D(G, c))` is, up to the two standard cubes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvIdentity {
    /// `[0, 1]^n`.
    UnitCube,
    /// `[0, 2]^n`, the translate of `[-1, 1]^n`.
    DoubledCube,
    /// Gorenstein but neither cube.
    Exceptional,
    /// Not Gorenstein.
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub gorenstein: bool,
    pub identity: ConvIdentity,
}

impl Prediction {
    fn no() -> Self {
        Self {
            gorenstein: false,
            identity: ConvIdentity::None,
        }
    }

    fn yes(identity: ConvIdentity) -> Self {
        Self {
            gorenstein: true,
            identity,
        }
    }

    fn cube(c: &[u32]) -> Self {
        match c.first() {
            Some(1) => Self::yes(ConvIdentity::UnitCube),
            _ => Self::yes(ConvIdentity::DoubledCube),
        }
    }
}

fn uniform_in(c: &[u32], values: &[u32]) -> bool {
    values.iter().any(|&k| c.iter().all(|&x| x == k))
}

fn outside(p: PredicateId, spec: &FamilySpec, why: &str) -> Error {
    Error::OutsideDomain(format!("{p} does not cover {spec}: {why}"))
}

/// The classification verdict for `(spec, c)` under predicate `p`.
pub fn predict(p: PredicateId, spec: &FamilySpec, c: &CapacityVector) -> Result<Prediction> {
    let g = spec.build()?;
    let eff = effective_capacity(&g, c)?;
    let e = eff.as_slice();
    let n = g.n();
    match (p, spec) {
        (PredicateId::Complete, FamilySpec::Complete(_)) | (PredicateId::Cycle, FamilySpec::Cycle(_)) => {
            Ok(if uniform_in(e, &[2]) || (uniform_in(e, &[1]) && n % 2 == 0) {
                Prediction::cube(e)
            } else if uniform_in(e, &[1]) && n == 3 {
                Prediction::yes(ConvIdentity::Exceptional)
            } else {
                Prediction::no()
            })
        }
        (PredicateId::CompleteBipartite, &FamilySpec::CompleteBipartite(m, k)) => {
            Ok(predict_complete_bipartite(m, k, e))
        }
        (PredicateId::Path, FamilySpec::Path(_)) => Ok(if n % 2 == 0 && n >= 4 && uniform_in(e, &[1, 2]) {
            Prediction::cube(e)
        } else if n == 5
            && [[1, 1, 1, 1, 1], [1, 1, 2, 1, 1], [2, 2, 2, 2, 2], [2, 2, 4, 2, 2]].contains(&[e[0], e[1], e[2], e[3], e[4]])
        {
            Prediction::yes(ConvIdentity::Exceptional)
        } else {
            Prediction::no()
        }),
        (PredicateId::RegularBipartite, _) => {
            if !(g.is_connected() && g.is_bipartite() && g.regular_degree().is_some()) {
                return Err(outside(p, spec, "not a connected regular bipartite graph"));
            }
            Ok(if uniform_in(e, &[1, 2]) {
                Prediction::cube(e)
            } else {
                Prediction::no()
            })
        }
        (PredicateId::RegularDoubled, _) => {
            if !(g.is_connected() && g.regular_degree().is_some()) {
                return Err(outside(p, spec, "not a connected regular graph"));
            }
            if !c.is_uniform(2) {
                return Err(outside(p, spec, "capacity must be uniform 2"));
            }
            Ok(Prediction::yes(ConvIdentity::DoubledCube))
        }
        (PredicateId::Whiskered, FamilySpec::Whiskered(_)) => {
            let (inner, legs) = e.split_at(n / 2);
            Ok(if inner.iter().all(|&x| x == 1) {
                Prediction::yes(ConvIdentity::UnitCube)
            } else if inner.iter().all(|&x| x == 2) && legs.iter().all(|&x| x >= 2) {
                Prediction::yes(ConvIdentity::DoubledCube)
            } else {
                Prediction::no()
            })
        }
        (PredicateId::CameronWalker, &FamilySpec::CameronWalker { r, .. }) => {
            let leaf = |i: usize| (r..2 * r).contains(&i);
            let ok = e
                .iter()
                .enumerate()
                .all(|(i, &x)| if leaf(i) { x >= 2 } else { x == 2 });
            Ok(if ok {
                Prediction::yes(ConvIdentity::DoubledCube)
            } else {
                Prediction::no()
            })
        }
        _ => Err(outside(p, spec, "wrong family")),
    }
}

/// `K_{m,k}` with effective capacity `e` (left block first).
fn predict_complete_bipartite(m: usize, k: usize, e: &[u32]) -> Prediction {
    if m == k && uniform_in(e, &[1, 2]) {
        return Prediction::cube(e);
    }
    let (left, right) = e.split_at(m);
    // a small side S of size s paired with a large side of size 2s - 1 whose
    // entries are either the base value or s times it
    let pattern = |small: &[u32], large: &[u32]| {
        let s = small.len();
        s >= 2
            && large.len() == 2 * s - 1
            && [1u32, 2].iter().any(|&v| {
                small.iter().all(|&x| x == v) && large.iter().all(|&x| x == v || x == v * s as u32)
            })
    };
    if pattern(left, right) || pattern(right, left) {
        Prediction::yes(ConvIdentity::Exceptional)
    } else {
        Prediction::no()
    }
}

/// Sufficient conditions under which a Gorenstein verdict forces a uniform
/// effective capacity of 1 or 2: connected and either regular or free of
/// nonadjacent pairs with nested neighborhoods.
pub fn forces_uniform_capacity(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    if g.regular_degree().is_some() {
        return true;
    }
    let n = g.n();
    !(0..n).any(|i| {
        (0..n).any(|j| {
            i != j && !g.has_edge(i, j) && g.neighbors(i).iter().all(|&x| g.neighbors(j).contains(&x))
        })
    })
}

/// How to populate capacity vectors for one family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CapGrid {
    Uniform(Vec<u32>),
    /// Every vector with entries in `1..=max`.
    Exhaustive { max: u32 },
    /// `count` non-uniform vectors drawn with entries in `1..=max`.
    Sampled { max: u32, count: usize },
    /// Exhaustive when at most [`EXHAUSTIVE_LIMIT`] vectors, sampled otherwise.
    Auto { max: u32, count: usize },
    Explicit(Vec<Vec<u32>>),
}

impl CapGrid {
    pub fn auto(max: u32) -> Self {
        CapGrid::Auto {
            max,
            count: DEFAULT_SAMPLE,
        }
    }

    fn expand(&self, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<u32>>> {
        Ok(match self {
            CapGrid::Uniform(ks) => ks.iter().map(|&k| vec![k; n]).collect(),
            CapGrid::Exhaustive { max } => exhaustive(n, *max)?,
            CapGrid::Sampled { max, count } => sampled(n, *max, *count, rng),
            CapGrid::Auto { max, count } => {
                if (*max as u128).saturating_pow(n as u32) <= EXHAUSTIVE_LIMIT {
                    exhaustive(n, *max)?
                } else {
                    sampled(n, *max, *count, rng)
                }
            }
            CapGrid::Explicit(list) => list.clone(),
        })
    }
}

fn exhaustive(n: usize, max: u32) -> Result<Vec<Vec<u32>>> {
    let total = (max as u128).saturating_pow(n as u32);
    if total > EXHAUSTIVE_LIMIT {
        return Err(Error::SizeCap {
            what: "exhaustive capacity grid",
            requested: total,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut v = vec![1u32; n];
    loop {
        out.push(v.clone());
        // lexicographic successor, last coordinate fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if v[i] < max {
                v[i] += 1;
                break;
            }
            v[i] = 1;
        }
    }
}

fn sampled(n: usize, max: u32, count: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<u32>> {
    if max < 2 || n < 2 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max)).collect();
        if v.iter().any(|&x| x != v[0]) {
            out.push(v);
        }
    }
    out
}

/// A family member together with the capacity grids to run on it.
#[derive(Debug, Clone)]
pub struct GridEntry {
    pub spec: FamilySpec,
    pub caps: Vec<CapGrid>,
}

impl GridEntry {
    pub fn new(spec: FamilySpec, caps: Vec<CapGrid>) -> Self {
        Self { spec, caps }
    }
}

#[derive(Debug, Clone)]
pub struct SweepCase {
    pub spec: FamilySpec,
    pub cap: CapacityVector,
}

/// Expands grids into cases in deterministic order, dropping repeated
/// capacity vectors per family member. Sampling draws from one stream seeded
/// by `seed`.
pub fn expand_grid(entries: &[GridEntry], seed: u64) -> Result<Vec<SweepCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for entry in entries {
        let n = entry.spec.build()?.n();
        let mut seen = HashSet::new();
        for grid in &entry.caps {
            for v in grid.expand(n, &mut rng)? {
                if v.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: v.len(),
                    });
                }
                if seen.insert(v.clone()) {
                    cases.push(SweepCase {
                        spec: entry.spec.clone(),
                        cap: CapacityVector::new(v)?,
                    });
                }
            }
        }
    }
    Ok(cases)
}

fn regular_bipartite_members() -> Result<Vec<FamilySpec>> {
    Ok(vec![
        FamilySpec::Cycle(4),
        FamilySpec::Cycle(6),
        FamilySpec::Cycle(8),
        FamilySpec::CompleteBipartite(3, 3),
        FamilySpec::custom("cube:3", hypercube(3)?),
    ])
}

/// The subset patterns of `K_{s, 2s-1}` with base value `v`: `v` off a set
/// `A` of the large side and `s·v` on it. `large_first` mirrors the layout.
pub fn complete_bipartite_patterns(s: usize, large_first: bool) -> Vec<Vec<u32>> {
    let l = 2 * s - 1;
    let mut out = Vec::new();
    for v in [1u32, 2] {
        for a in 0u32..(1 << l) {
            let large: Vec<u32> = (0..l).map(|i| if a >> i & 1 == 1 { v * s as u32 } else { v }).collect();
            let small = vec![v; s];
            out.push(if large_first {
                [large, small].concat()
            } else {
                [small, large].concat()
            });
        }
    }
    out
}

/// Default parameter and capacity grids for each predicate.
pub fn default_grid(p: PredicateId) -> Result<Vec<GridEntry>> {
    let uni = || CapGrid::Uniform(vec![1, 2, 3]);
    Ok(match p {
        PredicateId::Complete => (3..=7)
            .map(|n| GridEntry::new(FamilySpec::Complete(n), vec![uni(), CapGrid::auto(3)]))
            .collect(),
        PredicateId::Cycle => (3..=8)
            .map(|n| GridEntry::new(FamilySpec::Cycle(n), vec![uni(), CapGrid::auto(3)]))
            .collect(),
        PredicateId::CompleteBipartite => {
            let mut out = Vec::new();
            for total in 3..=8usize {
                for m in 1..total {
                    let k = total - m;
                    let max = 3.max(2 * m.min(k) as u32);
                    let mut caps = vec![uni()];
                    if k == 2 * m - 1 {
                        caps.push(CapGrid::Explicit(complete_bipartite_patterns(m, false)));
                    }
                    if m == 2 * k - 1 {
                        caps.push(CapGrid::Explicit(complete_bipartite_patterns(k, true)));
                    }
                    // K_{k,m} is K_{m,k} relabeled; sample only one orientation
                    if m <= k {
                        caps.push(CapGrid::auto(max));
                    }
                    out.push(GridEntry::new(FamilySpec::CompleteBipartite(m, k), caps));
                }
            }
            out
        }
        PredicateId::Path => (3..=8)
            .map(|n| {
                let mut caps = vec![CapGrid::Exhaustive { max: 2 }];
                if n == 5 {
                    caps.push(CapGrid::Explicit(vec![
                        vec![1, 1, 1, 1, 1],
                        vec![1, 1, 2, 1, 1],
                        vec![2, 2, 2, 2, 2],
                        vec![2, 2, 4, 2, 2],
                    ]));
                    caps.push(CapGrid::auto(4));
                }
                GridEntry::new(FamilySpec::Path(n), caps)
            })
            .collect(),
        PredicateId::RegularBipartite => regular_bipartite_members()?
            .into_iter()
            .map(|s| GridEntry::new(s, vec![uni(), CapGrid::auto(3)]))
            .collect(),
        PredicateId::RegularDoubled => [
            FamilySpec::Cycle(5),
            FamilySpec::Complete(4),
            FamilySpec::Complete(5),
            FamilySpec::custom("cube:3", hypercube(3)?),
            FamilySpec::custom("petersen", petersen()),
        ]
        .into_iter()
        .map(|s| GridEntry::new(s, vec![CapGrid::Uniform(vec![2])]))
        .collect(),
        PredicateId::Whiskered => [
            FamilySpec::Complete(3),
            FamilySpec::Path(3),
            FamilySpec::Path(4),
            FamilySpec::Cycle(4),
        ]
        .into_iter()
        .map(|inner| GridEntry::new(FamilySpec::Whiskered(Box::new(inner)), vec![CapGrid::auto(3)]))
        .collect(),
        PredicateId::CameronWalker => [
            (vec![(1, 3)], 1, 1),
            (vec![(1, 5), (2, 5)], 2, 1),
            (vec![(1, 3), (1, 4)], 1, 2),
        ]
        .into_iter()
        .map(|(h, r, s)| GridEntry::new(FamilySpec::CameronWalker { h, r, s }, vec![CapGrid::auto(3)]))
        .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub cap: CapacityVector,
    pub computed: bool,
    pub delta: u32,
    pub family: String,
    /// Expected identity of the polytope.
    pub identity: ConvIdentity,
    /// Whether the expected identity was confirmed; absent when not checked.
    pub identity_ok: Option<bool>,
    pub k: Option<u32>,
    #[serde(rename = "match")]
    pub matched: bool,
    pub n: usize,
    pub predicted: bool,
}

impl SweepRow {
    pub fn passed(&self) -> bool {
        self.matched && self.identity_ok != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub gorenstein: usize,
    pub identity_checked: usize,
    pub identity_failed: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub passed: bool,
    pub predicate: PredicateId,
    pub rows: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.summary.passed
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| !r.passed())
    }

    /// One JSON object per row, then the summary.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&crate::to_canonical_json(row));
            out.push('\n');
        }
        out.push_str(&crate::to_canonical_json(&self.summary));
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let header = ["family", "c", "predicted", "computed", "match", "k", "delta", "identity"];
        let body: Vec<[String; 8]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.family.clone(),
                    r.cap.to_string(),
                    r.predicted.to_string(),
                    r.computed.to_string(),
                    if r.passed() { "yes" } else { "NO" }.to_string(),
                    r.k.map_or("-".into(), |k| k.to_string()),
                    r.delta.to_string(),
                    match r.identity_ok {
                        Some(true) => format!("{:?} ok", r.identity),
                        Some(false) => format!("{:?} FAILED", r.identity),
                        None => "-".into(),
                    },
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &body {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            s.truncate(s.trim_end().len());
            s.push('\n');
            s
        };
        let mut out = line(&header.map(String::from));
        for row in &body {
            out.push_str(&line(row));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "{}: {} rows, {} matched, {} mismatched, {} identity failures, {} gorenstein\n",
            s.predicate, s.rows, s.matched, s.mismatched, s.identity_failed, s.gorenstein
        ));
        out
    }
}

/// Classifies `conv(D(g, c))` against the two cubes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvClass {
    pub delta: u32,
    pub gorenstein: bool,
    pub identity: ConvIdentity,
    pub k: Option<u32>,
}

pub fn classify_conv(g: &Graph, c: &CapacityVector, opts: &ReportOptions) -> Result<ConvClass> {
    let b = bases_with(g, c, &opts.bases)?;
    let t = rank_table_with_cap(&b, opts.max_n)?;
    let report = crate::gorenstein::report_from_table(&t);
    let n = g.n();
    let identity = if !report.gorenstein {
        ConvIdentity::None
    } else if verify_h_description_for(&b, &HDescription::cube(n, 1), DEFAULT_MAX_BOX)? {
        ConvIdentity::UnitCube
    } else if verify_h_description_for(&b, &HDescription::cube(n, 2), DEFAULT_MAX_BOX)? {
        ConvIdentity::DoubledCube
    } else {
        ConvIdentity::Exceptional
    };
    Ok(ConvClass {
        delta: report.delta,
        gorenstein: report.gorenstein,
        identity,
        k: report.k,
    })
}

fn run_case(p: PredicateId, case: &SweepCase, opts: &ReportOptions) -> Result<SweepRow> {
    let g = case.spec.build()?;
    let predicted = predict(p, &case.spec, &case.cap)?;
    let report = gorenstein_report_with(&g, &case.cap, opts)?;
    let identity_ok = if predicted.gorenstein && report.gorenstein {
        Some(classify_conv(&g, &case.cap, opts)?.identity == predicted.identity)
    } else {
        None
    };
    Ok(SweepRow {
        cap: case.cap.clone(),
        computed: report.gorenstein,
        delta: report.delta,
        family: case.spec.to_string(),
        identity: predicted.identity,
        identity_ok,
        k: report.k,
        matched: predicted.gorenstein == report.gorenstein,
        n: g.n(),
        predicted: predicted.gorenstein,
    })
}

/// Runs every case (concurrently on the current rayon pool) and assembles
/// rows in case order.
pub fn sweep(p: PredicateId, cases: &[SweepCase], opts: &ReportOptions) -> Result<SweepReport> {
    let rows = cases
        .par_iter()
        .map(|case| run_case(p, case, opts))
        .collect::<Result<Vec<_>>>()?;
    let summary = SweepSummary {
        gorenstein: rows.iter().filter(|r| r.computed).count(),
        identity_checked: rows.iter().filter(|r| r.identity_ok.is_some()).count(),
        identity_failed: rows.iter().filter(|r| r.identity_ok == Some(false)).count(),
        matched: rows.iter().filter(|r| r.matched).count(),
        mismatched: rows.iter().filter(|r| !r.matched).count(),
        passed: rows.iter().all(SweepRow::passed),
        predicate: p,
        rows: rows.len(),
    };
    Ok(SweepReport { rows, summary })
}

/// [`sweep`] over [`default_grid`].
pub fn sweep_default(p: PredicateId, seed: u64, opts: &ReportOptions) -> Result<SweepReport> {
    sweep(p, &expand_grid(&default_grid(p)?, seed)?, opts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalHit {
    pub cap: CapacityVector,
    pub delta: u32,
    pub effective_cap: CapacityVector,
    pub family: String,
    pub k: Option<u32>,
    pub n: usize,
}

/// Every Gorenstein case whose polytope is neither cube.
pub fn exceptional_scan(cases: &[SweepCase], opts: &ReportOptions) -> Result<Vec<ExceptionalHit>> {
    let hits = cases
        .par_iter()
        .map(|case| {
            let g = case.spec.build()?;
            let class = classify_conv(&g, &case.cap, opts)?;
            if class.identity != ConvIdentity::Exceptional {
                return Ok(None);
            }
            Ok(Some(ExceptionalHit {
                cap: case.cap.clone(),
                delta: class.delta,
                effective_cap: effective_capacity(&g, &case.cap)?,
                family: case.spec.to_string(),
                k: class.k,
                n: g.n(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(hits.into_iter().flatten().collect())
}

/// Paths on 4 to 6 vertices with every capacity entry at most 4.
pub fn default_exceptional_grid() -> Vec<GridEntry> {
    (4..=6)
        .map(|n| GridEntry::new(FamilySpec::Path(n), vec![CapGrid::Exhaustive { max: 4 }]))
        .collect()
}
