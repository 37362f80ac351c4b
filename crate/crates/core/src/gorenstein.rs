//! Gorenstein decision for `conv(D(G, c))` and lattice-point checks of
//! explicit H-descriptions.
//!
//! The polytope is Gorenstein exactly when one positive integer `k`
//! satisfies `k · ρ(A) = |A| + 1` on every closed and inseparable `A`. The
//! candidate `k` comes from the first such subset in (cardinality, bitmask)
//! order and is then checked against all the others.

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polymatroid::{bases_with, downward_closure, BaseOptions, BaseSet, CapacityVector, ExponentVector};
use crate::rank::{closed_inseparable_sets, rank_table_with_cap, RankTable, Subset, SubsetClassification, DEFAULT_MAX_N};

/// Default cap on the number of lattice points scanned by
/// [`verify_h_description`].
pub const DEFAULT_MAX_BOX: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankedSet {
    pub rank: u32,
    pub set: Subset,
}

/// Why a verdict came out false.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// `first` fixes `k`; `second` disagrees with it.
    Conflict { first: RankedSet, second: RankedSet },
    /// `(|A| + 1) / ρ(A)` is not a positive integer on the first subset.
    Fractional { subset: RankedSet },
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Witness::Conflict { first, second } => {
                let mut st = s.serialize_struct("Witness", 3)?;
                st.serialize_field("first", first)?;
                st.serialize_field("kind", "conflict")?;
                st.serialize_field("second", second)?;
                st.end()
            }
            Witness::Fractional { subset } => {
                let mut st = s.serialize_struct("Witness", 2)?;
                st.serialize_field("kind", "fractional")?;
                st.serialize_field("subset", subset)?;
                st.end()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    pub anomaly: bool,
    pub closed_inseparable: SubsetClassification,
    pub delta: u32,
    pub gorenstein: bool,
    pub k: Option<u32>,
    pub witness: Option<Witness>,
}

impl GorensteinReport {
    /// Re-verifies `k · ρ(A) = |A| + 1` over every listed subset, without
    /// reusing the search that produced `k`.
    pub fn is_consistent(&self) -> bool {
        match (self.gorenstein, self.k) {
            (true, Some(k)) => self
                .closed_inseparable
                .entries()
                .iter()
                .all(|e| k as usize * e.rank as usize == e.set.len() + 1),
            (true, None) => self.anomaly,
            (false, _) => self.witness.is_some(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub bases: BaseOptions,
    pub max_n: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            bases: BaseOptions::default(),
            max_n: DEFAULT_MAX_N,
        }
    }
}

pub fn gorenstein_report(g: &Graph, c: &CapacityVector) -> Result<GorensteinReport> {
    gorenstein_report_with(g, c, &ReportOptions::default())
}

pub fn gorenstein_report_with(g: &Graph, c: &CapacityVector, opts: &ReportOptions) -> Result<GorensteinReport> {
    let b = bases_with(g, c, &opts.bases)?;
    let t = rank_table_with_cap(&b, opts.max_n)?;
    Ok(report_from_table(&t))
}

pub fn report_from_table(t: &RankTable) -> GorensteinReport {
    let family = closed_inseparable_sets(t);
    // every e_i must lie in D for the polytope to be full-dimensional
    let full_dimensional = (1..=t.n()).all(|l| t.get(Subset::EMPTY.with_label(l)) >= 1);
    let mut report = GorensteinReport {
        anomaly: !full_dimensional,
        closed_inseparable: family,
        delta: t.delta(),
        gorenstein: false,
        k: None,
        witness: None,
    };
    let entries = report.closed_inseparable.entries();
    let Some(first) = entries.first() else {
        report.gorenstein = true;
        report.anomaly = true;
        return report;
    };
    let first_ranked = RankedSet {
        rank: first.rank,
        set: first.set,
    };
    let numerator = first.set.len() as u32 + 1;
    if first.rank == 0 || !numerator.is_multiple_of(first.rank) {
        report.witness = Some(Witness::Fractional {
            subset: first_ranked,
        });
        return report;
    }
    let k = numerator / first.rank;
    match entries
        .iter()
        .find(|e| k as usize * e.rank as usize != e.set.len() + 1)
    {
        Some(bad) => {
            report.witness = Some(Witness::Conflict {
                first: first_ranked,
                second: RankedSet {
                    rank: bad.rank,
                    set: bad.set,
                },
            });
        }
        None => {
            report.gorenstein = true;
            report.k = Some(k);
        }
    }
    report
}

/// One inequality `a · x <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub a: Vec<i64>,
    pub b: i64,
}

impl Inequality {
    pub fn holds(&self, x: &[u32]) -> bool {
        let lhs: i64 = self.a.iter().zip(x).map(|(&a, &x)| a * x as i64).sum();
        lhs <= self.b
    }
}

/// A system of inequalities together with the implicit `x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HDescription {
    pub ineqs: Vec<Inequality>,
}

impl HDescription {
    pub fn new(ineqs: Vec<Inequality>) -> Self {
        Self { ineqs }
    }

    /// `x_i <= side` for every coordinate: `Q_n` for side 1 and
    /// `Q'_n + (1, …, 1)` for side 2.
    pub fn cube(n: usize, side: i64) -> Self {
        let mut h = Self::default();
        for l in 1..=n {
            h = h.upper(n, l, side);
        }
        h
    }

    /// Adds `x_label <= b` (1-indexed).
    pub fn upper(self, n: usize, label: usize, b: i64) -> Self {
        self.sum_at_most(n, &[label], b)
    }

    /// Adds `Σ_{l ∈ labels} x_l <= b` (1-indexed).
    pub fn sum_at_most(mut self, n: usize, labels: &[usize], b: i64) -> Self {
        let mut a = vec![0; n];
        for &l in labels {
            a[l - 1] = 1;
        }
        self.ineqs.push(Inequality { a, b });
        self
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        self.ineqs.iter().all(|q| q.holds(x))
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        match self.ineqs.iter().find(|q| q.a.len() != n) {
            Some(q) => Err(Error::DimensionMismatch {
                expected: n,
                found: q.a.len(),
            }),
            None => Ok(()),
        }
    }

    /// Per-coordinate upper bounds implied by nonnegative-coefficient rows
    /// together with `x >= 0`.
    fn coordinate_bounds(&self, n: usize) -> Result<Vec<u32>> {
        (0..n)
            .map(|i| {
                self.ineqs
                    .iter()
                    .filter(|q| q.a[i] > 0 && q.a.iter().all(|&a| a >= 0))
                    .map(|q| q.b.max(0) / q.a[i])
                    .min()
                    .map(|b| b as u32)
                    .ok_or(Error::Unbounded(i + 1))
            })
            .collect()
    }
}

pub fn verify_h_description(g: &Graph, c: &CapacityVector, h: &HDescription) -> Result<bool> {
    let b = bases_with(g, c, &BaseOptions::default())?;
    verify_h_description_for(&b, h, DEFAULT_MAX_BOX)
}

/// True when the integer points of `h` are exactly `D` for the base set `b`.
pub fn verify_h_description_for(b: &BaseSet, h: &HDescription, max_box: u128) -> Result<bool> {
    let n = b.n();
    h.check_dim(n)?;
    let bounds = h.coordinate_bounds(n)?;
    let volume = bounds
        .iter()
        .fold(1u128, |acc, &x| acc.saturating_mul(x as u128 + 1));
    if volume > max_box {
        return Err(Error::SizeCap {
            what: "lattice box volume",
            requested: volume,
            limit: max_box,
        });
    }
    let d: BTreeSet<ExponentVector> = downward_closure(b).into_set();
    if !d.iter().all(|p| h.contains(p.as_slice())) {
        return Ok(false);
    }
    let mut point = vec![0u32; n];
    let mut inside = 0usize;
    loop {
        if h.contains(&point) {
            if !d.contains(&ExponentVector::new(point.clone())) {
                return Ok(false);
            }
            inside += 1;
        }
        // odometer step over the box
        let mut i = 0;
        loop {
            if i == n {
                return Ok(inside == d.len());
            }
            if point[i] < bounds[i] {
                point[i] += 1;
                break;
            }
            point[i] = 0;
            i += 1;
        }
    }
}
